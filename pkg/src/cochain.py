"""
Chevalley-Eilenberg cochains with trivial coefficients in degrees 1 to 3

Cochains are coordinate vectors (galois FieldArrays) in the fixed bases
    C^1: e^k,            k = 1..n
    C^2: e^{i,j},        1 <= i < j <= n, lexicographic
    C^3: e^{s,t,u},      1 <= s < t < u <= n, lexicographic
Basis labels are 1-based like the notation; array positions are 0-based.
"""
import functools
import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra import RestrictedLieAlgebra, VerificationReport
from exceptions import DimensionMismatch, GradeOutOfRange, IndexOutOfRange
from field import FieldElement
from linalg import kernel_basis, stack

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Triple = Tuple[int, int, int]


# ----------------------------------------------------------------------
# Bases
# ----------------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def pair_basis(n: int) -> Tuple[Pair, ...]:
    return tuple(itertools.combinations(range(1, n + 1), 2))


@functools.lru_cache(maxsize=None)
def triple_basis(n: int) -> Tuple[Triple, ...]:
    return tuple(itertools.combinations(range(1, n + 1), 3))


@functools.lru_cache(maxsize=None)
def pair_index(n: int) -> Dict[Pair, int]:
    return {pair: idx for idx, pair in enumerate(pair_basis(n))}


@functools.lru_cache(maxsize=None)
def triple_index(n: int) -> Dict[Triple, int]:
    return {triple: idx for idx, triple in enumerate(triple_basis(n))}


@functools.lru_cache(maxsize=None)
def _pair_arrays(n: int) -> Tuple[np.ndarray, np.ndarray]:
    pairs = np.array(pair_basis(n), dtype=np.int64).reshape(-1, 2) - 1
    return pairs[:, 0], pairs[:, 1]


@functools.lru_cache(maxsize=None)
def _triple_arrays(n: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    triples = np.array(triple_basis(n), dtype=np.int64).reshape(-1, 3) - 1
    return triples[:, 0], triples[:, 1], triples[:, 2]


def dim_c2(n: int) -> int:
    return n * (n - 1) // 2


def dim_c3(n: int) -> int:
    return n * (n - 1) * (n - 2) // 6


def normalize_pair(i: int, j: int, n: int, convention: str = "antisymmetric") -> Optional[Tuple[int, int]]:
    """
    Resolve e^{i,j} to (sign, position in the C^2 basis), or None when it is zero

    "closed" kills e^{i,j} whenever j <= i; "antisymmetric" rewrites
    e^{j,i} = -e^{i,j}. Indices outside 1..n are zero in both.
    """
    if convention not in ("closed", "antisymmetric"):
        raise ValueError(f"Unknown convention: {convention}")
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        return None
    if i < j:
        return 1, pair_index(n)[(i, j)]
    if convention == "closed":
        return None
    return -1, pair_index(n)[(j, i)]


def normalize_triple(s: int, t: int, u: int, n: int, convention: str = "antisymmetric") -> Optional[Tuple[int, int]]:
    if convention not in ("closed", "antisymmetric"):
        raise ValueError(f"Unknown convention: {convention}")
    indices = (s, t, u)
    if any(not 1 <= x <= n for x in indices) or len(set(indices)) < 3:
        return None
    ordered = tuple(sorted(indices))
    if ordered == indices:
        return 1, triple_index(n)[ordered]
    if convention == "closed":
        return None
    inversions = sum(1 for a, b in itertools.combinations(indices, 2) if a > b)
    return (-1) ** inversions, triple_index(n)[ordered]


def grade_of_pair(A: RestrictedLieAlgebra, pair: Pair) -> int:
    i, j = pair
    return A.degrees[i - 1] + A.degrees[j - 1]


def grade_of_triple(A: RestrictedLieAlgebra, triple: Triple) -> int:
    return sum(A.degrees[x - 1] for x in triple)


# ----------------------------------------------------------------------
# Named cochains
# ----------------------------------------------------------------------
def cochain1(field, n: int, k: int) -> FieldElement:
    """The dual basis vector e^k"""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"e^{k} outside 1..{n}")
    return field.basis_vector(n, k - 1)


def basis_cochain2(field, n: int, i: int, j: int) -> FieldElement:
    """The basis cochain e^{i,j}, i < j"""
    if not 1 <= i < j <= n:
        raise IndexOutOfRange(f"e^{{{i},{j}}} is not a basis cochain for n = {n}")
    return field.basis_vector(dim_c2(n), pair_index(n)[(i, j)])


def cochain2_from_terms(field, n: int, terms: Dict[Pair, int]) -> FieldElement:
    phi = field.zeros(dim_c2(n))
    for (i, j), coeff in terms.items():
        phi = phi + field.scalar(coeff) * basis_cochain2(field, n, i, j)
    return phi


def phi_k(field, n: int, k: int) -> FieldElement:
    """phi_k = e^{1,k-1} + e^{2,k-2}, terms with j <= i or j > n dropped"""
    phi = field.zeros(dim_c2(n))
    for i, j in ((1, k - 1), (2, k - 2)):
        if 1 <= i < j <= n:
            phi = phi + basis_cochain2(field, n, i, j)
    return phi


def eta(field, n: int) -> FieldElement:
    return cochain2_from_terms(field, n, {(1, 6): 1, (3, 4): 1})


def xi(field, n: int) -> FieldElement:
    return cochain2_from_terms(field, n, {(2, 5): 1, (3, 4): -1})


def pairing_matrix(phi: FieldElement, n: int) -> FieldElement:
    """Antisymmetric matrix Phi with phi(x ^ y) = x^T Phi y"""
    if phi.shape != (dim_c2(n),):
        raise DimensionMismatch(f"2-cochain of shape {phi.shape} for n = {n}")
    rows, cols = _pair_arrays(n)
    matrix = type(phi).Zeros((n, n))
    matrix[rows, cols] = phi
    matrix[cols, rows] = -phi
    return matrix


def evaluate_cochain2(phi: FieldElement, g: FieldElement, h: FieldElement) -> FieldElement:
    n = g.shape[0]
    return g @ pairing_matrix(phi, n) @ h


def _format_term(field, coeff: FieldElement, label: str) -> str:
    if coeff == 1:
        return label
    if coeff == field.scalar(-1):
        return f"-{label}"
    return f"{field.format(coeff)}{label}"


def _labels(size: int, degree: int) -> List[str]:
    if degree == 1:
        return [f"e^{k}" for k in range(1, size + 1)]
    if degree not in (2, 3):
        raise ValueError(f"Unsupported cochain degree: {degree}")
    n = degree
    while len(pair_basis(n) if degree == 2 else triple_basis(n)) < size:
        n += 1
    if degree == 2:
        labels = ["e^{%d,%d}" % pair for pair in pair_basis(n)]
    else:
        labels = ["e^{%d,%d,%d}" % triple for triple in triple_basis(n)]
    if len(labels) != size:
        raise DimensionMismatch(f"{size} is not the dimension of any C^{degree}")
    return labels


def describe_cochain(field, vector: FieldElement, degree: int) -> str:
    """Text rendering such as "e^{1,5} + e^{2,4}" ("0" for the zero cochain)"""
    labels = _labels(vector.shape[0], degree)
    terms = [_format_term(field, vector[idx], labels[idx]) for idx in np.flatnonzero(vector != 0)]
    if not terms:
        return "0"
    text = terms[0]
    for term in terms[1:]:
        text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return text


# ----------------------------------------------------------------------
# Differentials from structure constants
# ----------------------------------------------------------------------
def d1_matrix(A: RestrictedLieAlgebra) -> FieldElement:
    """Matrix of d^1: C^1 -> C^2, (d^1 psi)(e_i ^ e_j) = psi([e_i, e_j])"""
    rows, cols = _pair_arrays(A.dim)
    return A.tensor[rows, cols]


def d1_generic(A: RestrictedLieAlgebra, psi: FieldElement) -> FieldElement:
    if psi.shape != (A.dim,):
        raise DimensionMismatch(f"1-cochain of shape {psi.shape} for n = {A.dim}")
    return d1_matrix(A) @ psi


def d2_generic(A: RestrictedLieAlgebra, phi: FieldElement) -> FieldElement:
    """
    (d^2 phi)(g, h, f) = phi([g,h] ^ f) - phi([g,f] ^ h) + phi([h,f] ^ g)
    on every basis triple
    """
    n = A.dim
    pairing = pairing_matrix(phi, n)
    s, t, u = _triple_arrays(n)

    def term(a, b, c):
        return (A.tensor[a, b] * pairing[:, c].T).sum(axis=1)

    return term(s, t, u) - term(s, u, t) + term(t, u, s)


def d2_matrix(A: RestrictedLieAlgebra) -> FieldElement:
    n = A.dim
    columns = [d2_generic(A, A.field.basis_vector(dim_c2(n), idx)) for idx in range(dim_c2(n))]
    return stack(A.field, columns, dim_c3(n)).T


# ----------------------------------------------------------------------
# Closed forms for m_2^lambda(p)
# ----------------------------------------------------------------------
def _accumulate(out: FieldElement, sign: int, position: int, value: FieldElement) -> None:
    out[position] = out[position] + value if sign > 0 else out[position] - value


def d1_closed(p: int, psi: FieldElement) -> FieldElement:
    """d^1(e^k) = e^{1,k-1} + e^{2,k-2}, with e^{i,j} = 0 whenever j <= i"""
    if psi.shape != (p,):
        raise DimensionMismatch(f"1-cochain of shape {psi.shape} for p = {p}")
    out = type(psi).Zeros(dim_c2(p))
    for k in range(1, p + 1):
        if psi[k - 1] == 0:
            continue
        for i, j in ((1, k - 1), (2, k - 2)):
            hit = normalize_pair(i, j, p, convention="closed")
            if hit is not None:
                _accumulate(out, hit[0], hit[1], psi[k - 1])
    return out


def _d2_closed_basis(p: int, i: int, j: int) -> List[Tuple[int, int]]:
    """Signed C^3 positions of d^2(e^{i,j})"""
    if i == 1:
        hit = normalize_triple(1, 2, j - 2, p, convention="closed")
        return [(-hit[0], hit[1])] if hit else []

    hits = [
        normalize_triple(1, i - 1, j, p, convention="closed"),
        normalize_triple(1, i, j - 1, p, convention="closed"),
        normalize_triple(2, i - 2, j, p, convention="closed"),
        # e^{2,i,j-2} with i > j-2 reads as -e^{2,j-2,i}
        normalize_triple(2, i, j - 2, p, convention="antisymmetric"),
    ]
    return [hit for hit in hits if hit is not None]


def d2_closed(p: int, phi: FieldElement) -> FieldElement:
    """
    d^2(e^{1,j}) = -e^{1,2,j-2}
    d^2(e^{i,j}) = e^{1,i-1,j} + e^{1,i,j-1} + e^{2,i-2,j} + e^{2,i,j-2}, 2 <= i < j <= p
    """
    if phi.shape != (dim_c2(p),):
        raise DimensionMismatch(f"2-cochain of shape {phi.shape} for p = {p}")
    out = type(phi).Zeros(dim_c3(p))
    for idx in np.flatnonzero(phi != 0):
        i, j = pair_basis(p)[idx]
        for sign, position in _d2_closed_basis(p, i, j):
            _accumulate(out, sign, position, phi[idx])
    return out


def d1_closed_matrix(field, p: int) -> FieldElement:
    columns = [d1_closed(p, field.basis_vector(p, k)) for k in range(p)]
    return stack(field, columns, dim_c2(p)).T


def d2_closed_matrix(field, p: int) -> FieldElement:
    columns = [d2_closed(p, field.basis_vector(dim_c2(p), idx)) for idx in range(dim_c2(p))]
    return stack(field, columns, dim_c3(p)).T


# ----------------------------------------------------------------------
# Grading
# ----------------------------------------------------------------------
def grade_range(A: RestrictedLieAlgebra, degree: int) -> range:
    """Grades occupied by C^degree (3..2p-1 for C^2 of m_2^lambda(p))"""
    degrees = sorted(A.degrees)
    if degree == 1:
        return range(degrees[0], degrees[-1] + 1)
    if degree == 2:
        return range(degrees[0] + degrees[1], degrees[-2] + degrees[-1] + 1)
    if degree == 3:
        return range(sum(degrees[:3]), sum(degrees[-3:]) + 1)
    raise ValueError(f"Unsupported cochain degree: {degree}")


def indices_of_grade(A: RestrictedLieAlgebra, degree: int, k: int) -> List[int]:
    if degree == 1:
        return [idx for idx, d in enumerate(A.degrees) if d == k]
    if degree == 2:
        return [idx for idx, pair in enumerate(pair_basis(A.dim)) if grade_of_pair(A, pair) == k]
    if degree == 3:
        return [idx for idx, tr in enumerate(triple_basis(A.dim)) if grade_of_triple(A, tr) == k]
    raise ValueError(f"Unsupported cochain degree: {degree}")


def graded_matrix(A: RestrictedLieAlgebra, degree: int, k: int) -> FieldElement:
    """
    Block of d^degree on the grade-k component

    Rows are the grade-k basis of C^{degree+1}, columns the grade-k basis of
    C^degree, both in basis order. Empty grades give 0-row or 0-column blocks.
    """
    if A.degrees is None:
        raise GradeOutOfRange("the algebra carries no grading")
    if degree not in (1, 2):
        raise ValueError(f"Only d^1 and d^2 are available, got degree {degree}")
    if k not in grade_range(A, degree):
        raise GradeOutOfRange(f"grade {k} outside {grade_range(A, degree)} for C^{degree}")

    full = d1_matrix(A) if degree == 1 else d2_matrix(A)
    rows = indices_of_grade(A, degree + 1, k)
    cols = indices_of_grade(A, degree, k)
    return full[np.ix_(rows, cols)] if rows and cols else A.field.zeros((len(rows), len(cols)))


# ----------------------------------------------------------------------
# Cross-checks
# ----------------------------------------------------------------------
def crosscheck_differentials(A: RestrictedLieAlgebra) -> VerificationReport:
    """Closed forms against the generic differentials, d^2 d^1 = 0 and block structure"""
    report = VerificationReport(f"differentials of {A.name}")
    n = A.dim
    m1 = d1_matrix(A)
    m2 = d2_matrix(A)

    if A.lam is not None:
        report.add("d1_closed_equals_generic", np.all(d1_closed_matrix(A.field, n) == m1), "all of C^1")
        report.add("d2_closed_equals_generic", np.all(d2_closed_matrix(A.field, n) == m2), "all of C^2")

    report.add("d2_d1_zero", not np.any(m2 @ m1 != 0), "all of C^1")

    if A.degrees is not None:
        pair_grades = [grade_of_pair(A, pair) for pair in pair_basis(n)]
        triple_grades = [grade_of_triple(A, tr) for tr in triple_basis(n)]
        block1 = all(
            pair_grades[r] == A.degrees[c] for r, c in np.argwhere(m1 != 0)
        )
        block2 = all(
            triple_grades[r] == pair_grades[c] for r, c in np.argwhere(m2 != 0)
        )
        report.add("graded_blocks", block1 and block2, "d^1 and d^2 preserve grades")

        total = sum(kernel_basis(graded_matrix(A, 2, k), A.field).dim for k in grade_range(A, 2))
        full = kernel_basis(m2, A.field).dim
        report.add("graded_kernel_sum", total == full, f"{total} = {full}")

    logger.info("Differential cross-check for %s: %s", A.name, "pass" if report.passed else "FAIL")
    return report
