"""
One-dimensional restricted central extensions E = g + Fc of m_2^lambda(p)
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from algebra import RestrictedLieAlgebra, VerificationReport, make_algebra, verify_restricted
from cochain import grade_of_pair, pair_basis
from cohomology import restricted_named_cochains
from exceptions import NotACocycle
from field import FieldElement
from formulas import base_p_power_polynomials, bracket_correction, format_p_power, format_polynomial, omega_polynomial
from restricted import RestrictedCochain2, d1_star, eval_omega, is_restricted_cocycle

logger = logging.getLogger(__name__)


@dataclass
class CentralExtension:
    """The algebra total = base + Fc, with c the last basis vector"""

    base: RestrictedLieAlgebra
    cocycle: RestrictedCochain2
    total: RestrictedLieAlgebra
    name: str = ""
    latex: str = ""

    @property
    def central_index(self) -> int:
        return self.base.dim

    def lift(self, g: FieldElement, gamma=0) -> FieldElement:
        """g + gamma*c as an element of total"""
        out = self.total.zero()
        out[: self.base.dim] = g
        out[self.base.dim] = gamma
        return out

    def projection(self, x: FieldElement) -> Tuple[FieldElement, FieldElement]:
        return x[: self.base.dim].copy(), x[self.base.dim]


def _central_degree(A: RestrictedLieAlgebra, phi: FieldElement) -> Optional[int]:
    """Grade of phi when homogeneous (0 for phi = 0), None otherwise"""
    grades = {grade_of_pair(A, pair_basis(A.dim)[idx]) for idx in np.flatnonzero(phi != 0)}
    if not grades:
        return 0
    return grades.pop() if len(grades) == 1 else None


def extend(A: RestrictedLieAlgebra, c: RestrictedCochain2, name: str = "", latex: str = "") -> CentralExtension:
    """
    [g, h] = [g, h]_base + phi(g ^ h) c and e_i^[p] = (e_i^[p])_base + omega(e_i) c,
    c central with c^[p] = 0
    """
    if not is_restricted_cocycle(A, c):
        raise NotACocycle(f"d2* of {name or 'the cochain'} does not vanish")
    n = A.dim
    field = A.field

    constants = {}
    for idx, (i, j) in enumerate(pair_basis(n)):
        value = field.zeros(n + 1)
        value[:n] = A.tensor[i - 1, j - 1]
        value[n] = c.phi[idx]
        constants[(i - 1, j - 1)] = value

    p_map = field.zeros((n + 1, n + 1))
    p_map[:n, :n] = A.p_map
    p_map[:n, n] = c.omega.basis_values

    degrees = None
    if A.degrees is not None:
        central = _central_degree(A, c.phi)
        degrees = A.degrees + [central] if central is not None else None

    total = make_algebra(field, constants, p_map, degrees, name=f"{A.name} + Fc [{name}]")
    logger.debug("Built extension %s of dimension %d", name, n + 1)
    return CentralExtension(A, c, total, name, latex)


def extension_catalog(A: RestrictedLieAlgebra) -> List[CentralExtension]:
    """One extension per class of the built-in basis of H^2*"""
    return [extend(A, c, name, latex) for name, latex, c in restricted_named_cochains(A)]


def check_extension(E: CentralExtension, samples: int = None, seed: int = None) -> VerificationReport:
    """The restricted axioms of the total algebra plus the centrality of c"""
    report = verify_restricted(E.total, samples=samples, seed=seed)
    report.subject = E.name
    total = E.total
    c = total.basis(E.central_index)
    central = not np.any(total.adjoint_matrix(c) != 0)
    report.add("c_central", central, "")
    report.add("c_p_power_zero", not np.any(total.p_power(c) != 0), "")
    return report


def pfold_bracket_witness(E: CentralExtension) -> Optional[Tuple[List[int], FieldElement]]:
    """
    A left-nested p-fold bracket of basis elements with nonzero value, found by
    depth-first search in index order with zero prefixes pruned
    """
    total = E.total
    p = total.p
    n = total.dim
    basis = [total.basis(k) for k in range(n)]

    pending = [([k], basis[k]) for k in reversed(range(n))]
    while pending:
        sequence, value = pending.pop()
        if len(sequence) == p:
            return [k + 1 for k in sequence], value
        for k in reversed(range(n)):
            nxt = total.bracket(value, basis[k])
            if np.any(nxt != 0):
                pending.append((sequence + [k], nxt))
    return None


def cohomologous_isomorphism_holds(
    E: CentralExtension, E_prime: CentralExtension, psi: FieldElement, samples: int = 4, seed: int = 0
) -> bool:
    """
    Whether g + gamma c -> g + (psi(g) + gamma) c is a restricted isomorphism
    E -> E_prime, checked on all basis pairs and on random elements
    """
    n = E.base.dim
    field = E.base.field
    transform = field.identity(n + 1)
    transform[n, :n] = psi

    def apply(x):
        return transform @ x

    src, dst = E.total, E_prime.total
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            x, y = src.basis(i), src.basis(j)
            if np.any(apply(src.bracket(x, y)) != dst.bracket(apply(x), apply(y))):
                return False

    rng = np.random.default_rng(seed)
    elements = [src.basis(k) for k in range(n + 1)] + [src.random_element(rng) for _ in range(samples)]
    return all(np.all(apply(src.p_power(x)) == dst.p_power(apply(x))) for x in elements)


def cohomologous_extension(A: RestrictedLieAlgebra, E: CentralExtension, psi: FieldElement) -> CentralExtension:
    """The extension by the cocycle shifted by d1*(psi)"""
    return extend(A, E.cocycle.add(d1_star(A, psi)), name=f"{E.name} + d1*(psi)")


def p_power_matches_formula(E: CentralExtension, g: FieldElement) -> bool:
    """The total [p]-power of g (no c component) against g^[p]_base + omega(g) c"""
    base_part, gamma = E.projection(E.total.p_power(E.lift(g)))
    return bool(np.all(base_part == E.base.p_power(g))) and bool(gamma == eval_omega(E.base, E.cocycle.omega, g))


def extension_formulas(E: CentralExtension) -> Dict[str, object]:
    """Symbolic bracket and [p]-corrections of one extension (prime fields only)"""
    A = E.base
    p = A.p
    bracket = bracket_correction(A, E.cocycle.phi)
    omega = omega_polynomial(A, E.cocycle.omega)
    base = base_p_power_polynomials(A)
    return {
        "bracket_correction": bracket,
        "p_correction": omega,
        "base_p_power": base,
        "bracket_text": format_polynomial(bracket, p),
        "p_text": format_polynomial(omega, p),
        "bracket_latex": format_polynomial(bracket, p, as_latex=True),
        "p_latex": format_polynomial(omega, p, as_latex=True),
        "base_text": format_p_power(base, p),
        "base_latex": format_p_power(base, p, as_latex=True),
    }


def catalog_frame(A: RestrictedLieAlgebra, verify: bool = True, samples: int = None, seed: int = None) -> pd.DataFrame:
    """
    One row per catalog extension: name, bracket correction, [p]-correction
    and (optionally) the verification verdict
    """
    rows = []
    for E in extension_catalog(A):
        formulas = extension_formulas(E)
        row = {
            "extension": E.name,
            "latex_name": E.latex,
            "bracket_correction": formulas["bracket_text"],
            "p_correction": formulas["p_text"],
            "bracket_latex": formulas["bracket_latex"],
            "p_latex": formulas["p_latex"],
            "base_p_power": formulas["base_text"],
            "base_latex": formulas["base_latex"],
        }
        if verify:
            report = check_extension(E, samples=samples, seed=seed)
            row["verified"] = report.passed
            row["failures"] = ", ".join(check.name for check in report.failures())
        rows.append(row)
    logger.info("Catalog for %s: %d extensions", A.name, len(rows))
    return pd.DataFrame(rows)
