"""
Restricted Lie algebras given by structure constants, and the family m_2^lambda(p)
"""
import functools
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from config import Config
from exceptions import CharTooSmall, DimensionMismatch, IndexOutOfRange, MalformedLambda
from field import Field, FieldElement
from linalg import Subspace, kernel_basis, span

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    """Pass/fail verdicts of a suite of exact checks"""

    subject: str
    checks: List[CheckResult] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(passed), detail))

    def as_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


class RestrictedLieAlgebra:
    """
    A finite-dimensional restricted Lie algebra over a Field

    Structure constants are supplied for i < j only (0-based indices); the
    antisymmetric tensor with zero diagonal is derived from them. The p-map
    table holds e_i^[p] in row i; the [p]-power of a general element follows
    from it through Jacobson's formula.
    """

    def __init__(
        self,
        field: Field,
        constants: Mapping[Tuple[int, int], FieldElement],
        p_map: FieldElement,
        degrees: Optional[Sequence[int]] = None,
        lam: Optional[FieldElement] = None,
        name: str = "",
    ):
        n = p_map.shape[0]
        if p_map.shape != (n, n):
            raise DimensionMismatch(f"p-map table must be square, got {p_map.shape}")
        if degrees is not None and len(degrees) != n:
            raise DimensionMismatch("one grading degree per basis element is required")

        self.field = field
        self.dim = n
        self.p = field.characteristic
        self.p_map = p_map.copy()
        self.degrees = list(degrees) if degrees is not None else None
        self.lam = lam
        self.name = name

        self.constants = {}
        tensor = field.zeros((n, n, n))
        for (i, j), value in constants.items():
            if not 0 <= i < j < n:
                raise IndexOutOfRange(f"structure constants are indexed by i < j < {n}, got ({i}, {j})")
            if value.shape != (n,):
                raise DimensionMismatch(f"bracket value for ({i}, {j}) has shape {value.shape}")
            if np.any(value != 0):
                self.constants[(i, j)] = value.copy()
                tensor[i, j] = value
                tensor[j, i] = -value
        self.tensor = tensor

    def __repr__(self) -> str:
        return f"RestrictedLieAlgebra({self.name or 'unnamed'}, dim={self.dim}, {self.field.describe()})"

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------
    def element(self, coefficients) -> FieldElement:
        v = self.field.array(coefficients)
        self._check(v)
        return v

    def basis(self, k: int) -> FieldElement:
        """e_{k+1} for the 0-based index k"""
        if not 0 <= k < self.dim:
            raise IndexOutOfRange(f"basis index {k} outside 0..{self.dim - 1}")
        return self.field.basis_vector(self.dim, k)

    def zero(self) -> FieldElement:
        return self.field.zeros(self.dim)

    def random_element(self, rng) -> FieldElement:
        return self.field.random(self.dim, rng)

    def _check(self, g: FieldElement) -> None:
        if g.shape != (self.dim,):
            raise DimensionMismatch(f"element of shape {g.shape} in an algebra of dimension {self.dim}")

    # ------------------------------------------------------------------
    # Bracket
    # ------------------------------------------------------------------
    def adjoint_matrix(self, g: FieldElement) -> FieldElement:
        """Matrix of h -> [g, h]"""
        self._check(g)
        n = self.dim
        return (g @ self.tensor.reshape(n, n * n)).reshape(n, n).T

    def bracket(self, g: FieldElement, h: FieldElement) -> FieldElement:
        self._check(h)
        return self.adjoint_matrix(g) @ h

    def nfold_bracket(self, elements: Sequence[FieldElement]) -> FieldElement:
        """Left-nested [g1, g2, ..., gj] = [[...[g1, g2], ...], gj]"""
        if len(elements) < 2:
            raise ValueError("an n-fold bracket needs at least two elements")
        return functools.reduce(self.bracket, elements)

    # ------------------------------------------------------------------
    # [p]-operation
    # ------------------------------------------------------------------
    def jacobson_sum(self, g: FieldElement, h: FieldElement) -> FieldElement:
        """
        Sum of s_i(g, h), i = 1..p-1, where i*s_i(g, h) is the coefficient of
        t^(i-1) in ad(tg + h)^(p-1)(g)
        """
        p = self.p
        zero = self.zero()
        if not np.any(self.bracket(h, g) != 0):
            return zero

        ad_g = self.adjoint_matrix(g)
        ad_h = self.adjoint_matrix(h)
        coeffs = [g]
        for _ in range(p - 1):
            expanded = [zero] * (len(coeffs) + 1)
            for d, v in enumerate(coeffs):
                expanded[d] = expanded[d] + ad_h @ v
                expanded[d + 1] = expanded[d + 1] + ad_g @ v
            # degree p-1 is ad(g)^(p-1)(g) = 0 and carries no s_i
            coeffs = expanded[: p - 1]

        total = zero
        for i in range(1, p):
            total = total + coeffs[i - 1] * (self.field.scalar(i) ** -1)
        return total

    def p_power(self, g: FieldElement, order: Optional[Sequence[int]] = None) -> FieldElement:
        """
        g^[p] by folding the support of g: (a e_i)^[p] = a^p e_i^[p] and
        (x + y)^[p] = x^[p] + y^[p] + sum_i s_i(x, y)
        """
        self._check(g)
        support = [int(i) for i in np.flatnonzero(g != 0)]
        if order is not None:
            support = [i for i in order if i in support]

        result = self.zero()
        partial = None
        for i in support:
            term = self.zero()
            term[i] = g[i]
            result = result + (g[i] ** self.p) * self.p_map[i]
            if partial is None:
                partial = term
            else:
                result = result + self.jacobson_sum(partial, term)
                partial = partial + term
        return result

    # ------------------------------------------------------------------
    # Derived data
    # ------------------------------------------------------------------
    def with_structure_constant(self, i: int, j: int, value: FieldElement) -> "RestrictedLieAlgebra":
        """Copy of the algebra with [e_i, e_j] (0-based, i < j) replaced"""
        constants = dict(self.constants)
        constants[(i, j)] = value
        return RestrictedLieAlgebra(
            self.field, constants, self.p_map, self.degrees, self.lam, name=f"{self.name} (modified)"
        )

    def with_p_map(self, p_map: FieldElement) -> "RestrictedLieAlgebra":
        return RestrictedLieAlgebra(
            self.field, self.constants, p_map, self.degrees, self.lam, name=f"{self.name} (modified)"
        )


def make_algebra(
    field: Field,
    constants: Mapping[Tuple[int, int], FieldElement],
    p_map: FieldElement,
    degrees: Optional[Sequence[int]] = None,
    name: str = "",
) -> RestrictedLieAlgebra:
    return RestrictedLieAlgebra(field, constants, p_map, degrees, name=name)


def make_m2(field: Field, lam: FieldElement) -> RestrictedLieAlgebra:
    """
    m_2^lambda(p): [e_1, e_i] = e_{i+1} (1 < i < p), [e_2, e_i] = e_{i+2}
    (2 < i < p-1), e_k^[p] = lambda_k e_p, e_k in degree k
    """
    p = field.characteristic
    if p < Config.MIN_PRIME:
        raise CharTooSmall(f"m_2^lambda(p) needs p >= {Config.MIN_PRIME}, got {p}")
    lam = field.array(lam)
    if lam.shape != (p,):
        raise DimensionMismatch(f"lambda must have length {p}, got {lam.shape}")

    constants = {}
    for i in range(2, p):
        constants[(0, i - 1)] = field.basis_vector(p, i)
    for i in range(3, p - 1):
        constants[(1, i - 1)] = field.basis_vector(p, i + 1)

    p_map = field.zeros((p, p))
    p_map[:, p - 1] = lam

    name = f"m2^lambda({p}), lambda=({format_lambda(field, lam)})"
    logger.debug("Constructed %s over %s", name, field.describe())
    return RestrictedLieAlgebra(field, constants, p_map, list(range(1, p + 1)), lam=lam, name=name)


# ----------------------------------------------------------------------
# Verification of the restricted Lie algebra axioms
# ----------------------------------------------------------------------
def _jacobi_failures(A: RestrictedLieAlgebra) -> List[Tuple[int, int, int]]:
    n = A.dim
    c = A.tensor
    # t[i, j, k] = [[e_i, e_j], e_k]
    t = (c.reshape(n * n, n) @ c.reshape(n, n * n)).reshape(n, n, n, n)
    jacobi = t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)
    bad = np.argwhere(np.any(jacobi != 0, axis=3))
    return [(int(i) + 1, int(j) + 1, int(k) + 1) for i, j, k in bad if i < j < k]


def _grading_failures(A: RestrictedLieAlgebra) -> List[Tuple[int, int]]:
    failures = []
    for (i, j), value in A.constants.items():
        for k in np.flatnonzero(value != 0):
            if A.degrees[int(k)] != A.degrees[i] + A.degrees[j]:
                failures.append((i + 1, j + 1))
                break
    return failures


def _matrix_power(m: FieldElement, exponent: int) -> FieldElement:
    result = m
    for _ in range(exponent - 1):
        result = result @ m
    return result


def verify_restricted(A: RestrictedLieAlgebra, samples: int = None, seed: int = None) -> VerificationReport:
    """
    Check the Lie and restricted Lie axioms

    Jacobi and grading are checked on all basis data; (ag)^[p] = a^p g^[p],
    ad(g^[p]) = (ad g)^p and Jacobson additivity on basis elements and on
    seeded random samples.
    """
    if samples is None:
        samples = Config.AXIOM_SAMPLES
    if seed is None:
        seed = Config.DEFAULT_SEED
    rng = np.random.default_rng(seed)
    p = A.p
    report = VerificationReport(A.name)

    bad = _jacobi_failures(A)
    report.add("jacobi", not bad, f"failing triples {bad[:5]}" if bad else "all basis triples")

    if A.degrees is None:
        report.add("grading", True, "no grading supplied")
    else:
        bad_pairs = _grading_failures(A)
        report.add("grading", not bad_pairs, f"failing pairs {bad_pairs[:5]}" if bad_pairs else "")

    sample_elements = [A.random_element(rng) for _ in range(samples)]

    scalar_ok = True
    for g in sample_elements:
        a = A.field.random((), rng)
        if np.any(A.p_power(a * g) != (a ** p) * A.p_power(g)):
            scalar_ok = False
            break
    report.add("p_semilinear_scalar", scalar_ok, f"{samples} samples")

    ad_ok = True
    bad_ad = ""
    for idx, g in enumerate([A.basis(k) for k in range(A.dim)] + sample_elements):
        lhs = A.adjoint_matrix(A.p_power(g))
        rhs = _matrix_power(A.adjoint_matrix(g), p)
        if np.any(lhs != rhs):
            ad_ok = False
            bad_ad = f"basis e_{idx + 1}" if idx < A.dim else f"sample {idx - A.dim}"
            break
    report.add("ad_p_power", ad_ok, bad_ad or f"basis and {samples} samples")

    additive_ok = True
    for _ in range(samples):
        g = A.random_element(rng)
        h = A.random_element(rng)
        lhs = A.p_power(g + h)
        rhs = A.p_power(g) + A.p_power(h) + A.jacobson_sum(g, h)
        if np.any(lhs != rhs):
            additive_ok = False
            break
    report.add("jacobson_additivity", additive_ok, f"{samples} sample pairs")

    logger.info("Verified %s: %s", A.name, "pass" if report.passed else "FAIL")
    return report


# ----------------------------------------------------------------------
# Structure
# ----------------------------------------------------------------------
def center(A: RestrictedLieAlgebra) -> Subspace:
    n = A.dim
    return kernel_basis(A.tensor.reshape(n, n * n).T, A.field)


def lower_central_dimensions(A: RestrictedLieAlgebra) -> List[int]:
    """dim g^1, dim g^2, ... down to the first zero term (or stabilization)"""
    n = A.dim
    dims = [n]
    current = span(A.field, [A.basis(k) for k in range(n)], n)
    while current.dim > 0:
        brackets = [A.bracket(A.basis(i), v) for i in range(n) for v in current.vectors()]
        nxt = span(A.field, brackets, n)
        if nxt.dim == current.dim:
            break
        dims.append(nxt.dim)
        current = nxt
    return dims


def is_filiform(A: RestrictedLieAlgebra) -> bool:
    n = A.dim
    return lower_central_dimensions(A) == [n] + [n - k for k in range(2, n + 1)]


# ----------------------------------------------------------------------
# Isomorphism within the lambda-family
# ----------------------------------------------------------------------
def iso_classify(field: Field, lam: FieldElement, lam_prime: FieldElement) -> Optional[FieldElement]:
    """
    A witness mu != 0 with lambda_k = mu^((k-1)p) lambda'_k for every k, or
    None; the search runs over all nonzero field elements in canonical order
    """
    p = field.characteristic
    if lam.shape != lam_prime.shape:
        raise DimensionMismatch("lambda vectors differ in length")
    candidates = field.nonzero_elements()
    for idx in range(candidates.size):
        mu = candidates[idx]
        if all(lam[k] == (mu ** (k * p)) * lam_prime[k] for k in range(lam.shape[0])):
            return mu
    return None


def graded_isomorphism_search(A: RestrictedLieAlgebra, B: RestrictedLieAlgebra) -> Optional[FieldElement]:
    """Brute-force search for a diagonal graded map e_k -> mu^k e_k preserving brackets and [p]-maps"""
    if A.dim != B.dim or A.degrees is None:
        return None
    n = A.dim
    candidates = A.field.nonzero_elements()
    for idx in range(candidates.size):
        mu = candidates[idx]
        scales = A.field.zeros(n)
        for k in range(n):
            scales[k] = mu ** A.degrees[k]

        brackets_ok = all(
            np.all(scales * A.tensor[i, j] == scales[i] * scales[j] * B.tensor[i, j])
            for i in range(n) for j in range(i + 1, n)
        )
        if not brackets_ok:
            continue
        if all(np.all(scales * A.p_power(A.basis(k)) == B.p_power(scales[k] * B.basis(k))) for k in range(n)):
            return mu
    return None


# ----------------------------------------------------------------------
# Lambda vectors
# ----------------------------------------------------------------------
def zero_lambda(field: Field) -> FieldElement:
    return field.zeros(field.characteristic)


def standard_lambda(field: Field, k: int) -> FieldElement:
    """lambda = (0, ..., 1, ..., 0) with the 1 in the 1-based slot k"""
    p = field.characteristic
    if not 1 <= k <= p:
        raise IndexOutOfRange(f"slot {k} outside 1..{p}")
    return field.basis_vector(p, k - 1)


def random_lambda(field: Field, seed: int) -> FieldElement:
    """Entries drawn by numpy.random.default_rng(seed).integers(0, q, size=p)"""
    rng = np.random.default_rng(seed)
    return field.array(rng.integers(0, field.order, size=field.characteristic))


def parse_lambda(text: str, field: Field) -> FieldElement:
    """Parse "zero", "random:SEED" or a comma list of canonical field integers"""
    p = field.characteristic
    text = text.strip()
    if text == "zero":
        return zero_lambda(field)
    if text.startswith("random:"):
        try:
            seed = int(text.split(":", 1)[1])
        except ValueError:
            raise MalformedLambda(f"bad random seed in {text!r}")
        return random_lambda(field, seed)

    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise MalformedLambda(f"lambda must be comma-separated integers, got {text!r}")
    if len(values) != p:
        raise MalformedLambda(f"lambda must have exactly {p} entries, got {len(values)}")
    if any(not 0 <= v < field.order for v in values):
        raise MalformedLambda(f"lambda entries must lie in [0, {field.order})")
    return field.array(values)


def format_lambda(field: Field, lam: FieldElement) -> str:
    return ",".join(field.format(lam[k]) for k in range(lam.shape[0]))


def is_zero_lambda(lam: FieldElement) -> bool:
    return not np.any(lam != 0)
