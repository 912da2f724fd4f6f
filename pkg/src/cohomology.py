"""
Ordinary and restricted cohomology in degrees 1 and 2
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from algebra import RestrictedLieAlgebra, VerificationReport, is_zero_lambda
from cochain import (
    basis_cochain2,
    cochain1,
    d1_matrix,
    d2_matrix,
    describe_cochain,
    dim_c2,
    eta,
    grade_range,
    graded_matrix,
    pair_basis,
    phi_k,
    xi,
)
from exceptions import UnknownClaim
from field import FieldElement
from linalg import (
    Subspace,
    complement_representatives,
    image_basis,
    in_span,
    kernel_basis,
    rank,
    span,
    stack,
    zero_subspace,
)
from restricted import (
    RestrictedCochain2,
    d1_star_matrix,
    d2_star_matrix,
    frobenius_cochain,
    restricted_cochain,
    restricted_coordinates,
    tilde,
)

logger = logging.getLogger(__name__)

CLAIMS = ("h1_basis", "h1_star_basis", "h2_basis", "h2_star_basis")


@dataclass
class CohomologyResult:
    """A cohomology group as kernel modulo coboundaries, with canonical representatives"""

    degree: int
    restricted: bool
    dimension: int
    representatives: List[FieldElement]
    kernel: Subspace
    coboundaries: Subspace
    grade_table: Optional[Dict[int, int]] = None

    @property
    def name(self) -> str:
        return f"H{self.degree}{'*' if self.restricted else ''}"

    def describe_representatives(self, field, n: int) -> List[str]:
        """Text form of each representative; restricted ones as (phi ; omega(e_1..e_n))"""
        if not self.restricted:
            return [describe_cochain(field, v, self.degree) for v in self.representatives]
        if self.degree == 1:
            return [describe_cochain(field, v, 1) for v in self.representatives]
        m = dim_c2(n)
        described = []
        for v in self.representatives:
            phi_part = describe_cochain(field, v[:m], 2)
            bar_part = describe_cochain(field, v[m:], 1).replace("e^", "bar_e^")
            described.append(f"({phi_part} ; {bar_part})")
        return described


def _assemble(degree: int, restricted: bool, kernel: Subspace, image: Subspace, grade_table=None) -> CohomologyResult:
    reps = complement_representatives(kernel, image)
    result = CohomologyResult(degree, restricted, kernel.dim - image.dim, reps, kernel, image, grade_table)
    logger.info(
        "%s: kernel %d, coboundaries %d, dimension %d", result.name, kernel.dim, image.dim, result.dimension
    )
    return result


def h1(A: RestrictedLieAlgebra) -> CohomologyResult:
    kernel = kernel_basis(d1_matrix(A), A.field)
    return _assemble(1, False, kernel, zero_subspace(A.field, A.dim))


def h1_star(A: RestrictedLieAlgebra) -> CohomologyResult:
    """1-cocycles psi that also satisfy psi(g^[p]) = 0"""
    kernel = kernel_basis(d1_star_matrix(A), A.field)
    return _assemble(1, True, kernel, zero_subspace(A.field, A.dim))


def h2(A: RestrictedLieAlgebra) -> CohomologyResult:
    kernel = kernel_basis(d2_matrix(A), A.field)
    image = image_basis(d1_matrix(A), A.field)
    table = grade_kernel_table(A) if A.degrees is not None else None
    return _assemble(2, False, kernel, image, table)


def h2_star(A: RestrictedLieAlgebra) -> CohomologyResult:
    """Kernel of d^2* modulo the image of d^1*, in coordinates (sigma_{ij}; omega(e_k))"""
    kernel = kernel_basis(d2_star_matrix(A), A.field)
    image = image_basis(d1_star_matrix(A), A.field)
    return _assemble(2, True, kernel, image)


def grade_kernel_table(A: RestrictedLieAlgebra) -> Dict[int, int]:
    """dim ker d^2_k for every grade k of C^2"""
    return {k: kernel_basis(graded_matrix(A, 2, k), A.field).dim for k in grade_range(A, 2)}


def expected_grade_table(p: int) -> Dict[int, int]:
    table = {3: 1, 4: 1, 5: 2, 6: 1, 7: 1 if p == 5 else 2}
    for k in range(8, 2 * p):
        table[k] = 1 if k <= p + 1 else 0
    return table


def expected_dimensions(p: int, lambda_is_zero: bool) -> Dict[str, int]:
    """Dimensions of H^1, H^1*, H^2 and H^2* of m_2^lambda(p)"""
    if p == 5:
        restricted = 8 if lambda_is_zero else 6
    else:
        restricted = p + 3 if lambda_is_zero else p + 2
    return {"h1": 2, "h1_star": 2, "h2": 3, "h2_star": restricted}


def abelianization_dimensions(A: RestrictedLieAlgebra) -> Tuple[int, int]:
    """
    (dim g/[g,g], dim g/([g,g] + span of the e_k^[p])): the dual spaces are
    H^1 and H^1*
    """
    n = A.dim
    derived = [A.bracket(A.basis(i), A.basis(j)) for i in range(n) for j in range(i + 1, n)]
    derived_dim = span(A.field, derived, n).dim
    restricted_dim = span(A.field, derived + [A.p_map[k] for k in range(n)], n).dim
    return n - derived_dim, n - restricted_dim


# ----------------------------------------------------------------------
# Basis verification
# ----------------------------------------------------------------------
def verify_basis(
    kernel: Subspace, coboundaries: Subspace, vectors: Sequence[FieldElement], subject: str = "basis"
) -> VerificationReport:
    """
    Check that vectors are cocycles, independent modulo coboundaries, and
    together with the coboundaries span the whole kernel
    """
    report = VerificationReport(subject)
    field = kernel.field
    width = kernel.ambient_dim

    outside = [idx for idx, v in enumerate(vectors) if in_span(v, kernel) is None]
    report.add("cocycles", not outside, f"not cocycles: {outside}" if outside else f"{len(vectors)} vectors")

    combined = coboundaries.vectors() + list(vectors)
    combined_rank = rank(stack(field, combined, width)) if combined else 0
    independent = combined_rank == coboundaries.dim + len(vectors)
    report.add(
        "independent_mod_coboundaries",
        independent,
        f"rank {combined_rank} against {coboundaries.dim} + {len(vectors)}",
    )
    report.add("spans_kernel", combined_rank == kernel.dim, f"rank {combined_rank} against kernel {kernel.dim}")
    return report


def named_cocycles(A: RestrictedLieAlgebra, restricted: bool = True) -> List[Tuple[str, str, FieldElement]]:
    """
    (name, latex name, phi) for the classes with phi != 0 in the built-in
    bases of H^2 (restricted=False) or H^2*
    """
    if A.lam is None:
        raise UnknownClaim("named bases are defined for m_2^lambda(p) only")
    field, p = A.field, A.dim
    full = not restricted or is_zero_lambda(A.lam)

    rows = [("e^{1,4}", "e^{1,4}", basis_cochain2(field, p, 1, 4))]
    if p == 5:
        if full:
            rows.append(("xi", r"\xi", xi(field, p)))
            rows.append(("phi_6", r"\varphi_{6}", phi_k(field, p, 6)))
    else:
        rows.append(("eta", r"\eta", eta(field, p)))
        if full:
            rows.append((f"phi_{p + 1}", r"\varphi_{%d}" % (p + 1), phi_k(field, p, p + 1)))
    return rows


def touches_last_column(phi: FieldElement, p: int) -> bool:
    """Whether some sigma_{jp} is nonzero; otherwise the tilde map vanishes identically"""
    return any(phi[idx] != 0 for idx, (_, j) in enumerate(pair_basis(p)) if j == p)


def restricted_named_cochains(A: RestrictedLieAlgebra) -> List[Tuple[str, str, RestrictedCochain2]]:
    """
    (label, latex label, cochain) for the built-in basis of H^2* of
    m_2^lambda(p): the frobenius classes (0, bar e^k) as E_1..E_p, then
    (phi, tilde phi) for each named cocycle
    """
    p = A.dim
    named = [(f"E_{k}", f"E_{{{k}}}", frobenius_cochain(A, k)) for k in range(1, p + 1)]
    for name, latex, phi in named_cocycles(A, restricted=True):
        if touches_last_column(phi, p):
            tilde_latex = latex.replace("e^", r"\tilde{e}^") if name.startswith("e^") else r"\tilde{%s}" % latex
            label, latex_label = f"({name}, {name}~)", f"({latex}, {tilde_latex})"
        else:
            label, latex_label = f"({name}, 0)", f"({latex}, 0)"
        named.append((label, latex_label, restricted_cochain(A, phi, tilde(A, phi).basis_values)))
    return named


def named_basis(A: RestrictedLieAlgebra, claim: str) -> List[Tuple[str, FieldElement]]:
    """The built-in representative set for a claim, as (label, vector) pairs"""
    if claim not in CLAIMS:
        raise UnknownClaim(f"Unknown claim: {claim}; expected one of {', '.join(CLAIMS)}")
    if A.lam is None:
        raise UnknownClaim("named bases are defined for m_2^lambda(p) only")

    field, p = A.field, A.dim
    if claim in ("h1_basis", "h1_star_basis"):
        return [("e^1", cochain1(field, p, 1)), ("e^2", cochain1(field, p, 2))]
    if claim == "h2_basis":
        return [(name, phi) for name, _, phi in named_cocycles(A, restricted=False)]
    return [(label, restricted_coordinates(c)) for label, _, c in restricted_named_cochains(A)]


def verify_named_basis(A: RestrictedLieAlgebra, claim: str) -> VerificationReport:
    """Run verify_basis on a built-in representative set against the matching cohomology"""
    basis = named_basis(A, claim)
    result = {"h1_basis": h1, "h1_star_basis": h1_star, "h2_basis": h2, "h2_star_basis": h2_star}[claim](A)
    labels = ", ".join(label for label, _ in basis)
    report = verify_basis(result.kernel, result.coboundaries, [v for _, v in basis], f"{claim}: {labels}")
    logger.info("Named basis %s for %s: %s", claim, A.name, "pass" if report.passed else "FAIL")
    return report
