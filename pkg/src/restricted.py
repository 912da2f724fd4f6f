"""
Restricted cochains in degrees 1 to 3

A restricted 2-cochain is a pair (phi, omega) where omega has the *-property
with respect to phi:

    omega(a g) = a^p omega(g)
    omega(g + h) = omega(g) + omega(h)
                   + sum over g_1 = g, g_2 = h, g_3..g_p in {g, h} of
                     phi([g_1, ..., g_{p-1}] ^ g_p) / #(g)

with #(g) the number of slots holding g. Folding the support of g one term at a
time with this rule gives a value independent of the folding order when phi
is a 2-cocycle. For some other phi (e^{i,p} with 3 <= i <= p-1 among them)
the value depends on the order, and the fold runs in index order. For a
cocycle, omega is fixed by phi and its values on the basis, which gives the
coordinates (sigma_{ij}; omega(e_1), ..., omega(e_n)).
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from algebra import RestrictedLieAlgebra, VerificationReport
from cochain import d1_generic, d1_matrix, d2_generic, d2_matrix, dim_c2, dim_c3, pairing_matrix
from config import Config
from exceptions import DimensionMismatch, FiliformError, IndexOutOfRange
from field import Field, FieldElement
from linalg import stack

logger = logging.getLogger(__name__)


@dataclass
class OmegaMap:
    """A map with the *-property with respect to reference, fixed by its basis values"""

    reference: FieldElement
    basis_values: FieldElement

    def add(self, other: "OmegaMap") -> "OmegaMap":
        return OmegaMap(self.reference + other.reference, self.basis_values + other.basis_values)

    def is_zero(self) -> bool:
        return not (np.any(self.reference != 0) or np.any(self.basis_values != 0))


@dataclass
class RestrictedCochain2:
    phi: FieldElement
    omega: OmegaMap

    def __post_init__(self):
        if self.omega.reference.shape != self.phi.shape or np.any(self.omega.reference != self.phi):
            raise FiliformError("omega must have the *-property with respect to phi")

    @property
    def dim(self) -> int:
        return self.omega.basis_values.shape[0]

    def coordinates(self) -> FieldElement:
        return restricted_coordinates(self)

    def add(self, other: "RestrictedCochain2") -> "RestrictedCochain2":
        return RestrictedCochain2(self.phi + other.phi, self.omega.add(other.omega))


@dataclass
class SemiBilinearMap:
    """eta(g, h) = sum_{i,j} a_i b_j^p grid[i, j]: linear in g, Frobenius-semilinear in h"""

    grid: FieldElement

    def evaluate(self, g: FieldElement, h: FieldElement) -> FieldElement:
        p = type(g).characteristic
        return g @ self.grid @ (h ** p)

    def is_zero(self) -> bool:
        return not np.any(self.grid != 0)


# ----------------------------------------------------------------------
# Evaluation of maps with the *-property
# ----------------------------------------------------------------------
def _pair_value(pairing: FieldElement, x: FieldElement, y: FieldElement) -> FieldElement:
    return x @ pairing @ y


def _correction_enumerate(A: RestrictedLieAlgebra, pairing: FieldElement, g: FieldElement, h: FieldElement):
    """Walk all 2^(p-2) factor sequences, sharing bracket prefixes"""
    p = A.p
    inverses = [None] + [A.field.scalar(c) ** -1 for c in range(1, p)]
    total = A.field.scalar(0)

    # (prefix bracket, number of g among the slots used)
    pending = [(A.bracket(g, h), 1, 3)]
    while pending:
        word, count, slot = pending.pop()
        if slot == p:
            total = total + _pair_value(pairing, word, g) * inverses[count + 1]
            total = total + _pair_value(pairing, word, h) * inverses[count]
            continue
        pending.append((A.bracket(word, g), count + 1, slot + 1))
        pending.append((A.bracket(word, h), count, slot + 1))
    return total


def _correction_collected(A: RestrictedLieAlgebra, pairing: FieldElement, g: FieldElement, h: FieldElement):
    """The same sum grouped by the number of g among the first p-1 slots"""
    p = A.p
    ad_g = A.adjoint_matrix(g)
    ad_h = A.adjoint_matrix(h)

    # words[c] = sum of the prefix brackets holding g exactly c times
    words = A.field.zeros((p, A.dim))
    words[1] = A.bracket(g, h)
    for _ in range(p - 3):
        with_g = -(ad_g @ words.T).T
        with_h = -(ad_h @ words.T).T
        shifted = A.field.zeros((p, A.dim))
        shifted[1:] = with_g[:-1]
        words = shifted + with_h

    total = A.field.scalar(0)
    for c in range(1, p - 1):
        if not np.any(words[c] != 0):
            continue
        total = total + _pair_value(pairing, words[c], g) * (A.field.scalar(c + 1) ** -1)
        total = total + _pair_value(pairing, words[c], h) * (A.field.scalar(c) ** -1)
    return total


_CORRECTIONS = {"enumerate": _correction_enumerate, "collected": _correction_collected}


def star_correction(
    A: RestrictedLieAlgebra, phi: FieldElement, g: FieldElement, h: FieldElement, method: str = None
) -> FieldElement:
    """omega(g + h) - omega(g) - omega(h) for any omega with the *-property with respect to phi"""
    method = method or Config.OMEGA_METHOD
    if method not in _CORRECTIONS:
        raise ValueError(f"Unknown evaluation method: {method}")
    if not np.any(phi != 0):
        return A.field.scalar(0)
    return _CORRECTIONS[method](A, pairing_matrix(phi, A.dim), g, h)


def eval_omega(
    A: RestrictedLieAlgebra,
    omega: OmegaMap,
    g: FieldElement,
    method: str = None,
    order: Optional[Sequence[int]] = None,
) -> FieldElement:
    """
    omega(g), folding the support of g one term at a time

    Args:
        A: the algebra whose bracket enters the correction terms
        omega: the map to evaluate
        g: coefficient vector
        method: "enumerate" or "collected" (default Config.OMEGA_METHOD)
        order: optional ordering of the 0-based support indices
    """
    A._check(g)
    if omega.basis_values.shape != (A.dim,):
        raise DimensionMismatch("omega basis values do not match the algebra")
    support = [int(i) for i in np.flatnonzero(g != 0)]
    if order is not None:
        support = [i for i in order if i in support]

    result = A.field.scalar(0)
    partial = None
    for i in support:
        term = A.zero()
        term[i] = g[i]
        result = result + (g[i] ** A.p) * omega.basis_values[i]
        if partial is None:
            partial = term
        else:
            result = result + star_correction(A, omega.reference, partial, term, method)
            partial = partial + term
    return result



def _right_adjoint_rows(A: RestrictedLieAlgebra, X: FieldElement) -> FieldElement:
    """out[r, b, k] = [e_b, x_r]_k"""
    n = A.dim
    right = A.tensor.transpose(1, 0, 2).reshape(n, n * n)
    return (X @ right).reshape(X.shape[0], n, n)


def _apply_rows(W: FieldElement, right: FieldElement) -> FieldElement:
    """Row-wise [w_r, x_r] from the right adjoints of the x_r"""
    return (W[:, :, np.newaxis] * right).sum(axis=1)


def _pair_rows(pairing: FieldElement, X: FieldElement, Y: FieldElement) -> FieldElement:
    return ((X @ pairing) * Y).sum(axis=1)


def _correction_rows(A: RestrictedLieAlgebra, pairing: FieldElement, G: FieldElement, H: FieldElement) -> FieldElement:
    """Row-wise star correction of (g_r, h_r), grouped as in _correction_collected"""
    p = A.p
    rows = G.shape[0]
    right_g = _right_adjoint_rows(A, G)
    right_h = _right_adjoint_rows(A, H)

    words = [A.field.zeros((rows, A.dim)) for _ in range(p)]
    words[1] = _apply_rows(G, right_h)
    for _ in range(p - 3):
        grown = [A.field.zeros((rows, A.dim)) for _ in range(p)]
        for c, word in enumerate(words):
            if not np.any(word != 0):
                continue
            grown[c] = grown[c] + _apply_rows(word, right_h)
            if c + 1 < p:
                grown[c + 1] = grown[c + 1] + _apply_rows(word, right_g)
        words = grown

    total = A.field.zeros(rows)
    for c in range(1, p - 1):
        if not np.any(words[c] != 0):
            continue
        total = total + _pair_rows(pairing, words[c], G) * (A.field.scalar(c + 1) ** -1)
        total = total + _pair_rows(pairing, words[c], H) * (A.field.scalar(c) ** -1)
    return total


def eval_omega_batch(A: RestrictedLieAlgebra, omega: OmegaMap, elements: FieldElement) -> FieldElement:
    """
    omega on every row of elements at once, folding in index order; agrees
    row by row with eval_omega
    """
    if elements.ndim != 2 or elements.shape[1] != A.dim:
        raise DimensionMismatch(f"expected rows of length {A.dim}, got shape {elements.shape}")
    if omega.basis_values.shape != (A.dim,):
        raise DimensionMismatch("omega basis values do not match the algebra")

    result = (elements ** A.p) @ omega.basis_values
    if not np.any(omega.reference != 0):
        return result
    pairing = pairing_matrix(omega.reference, A.dim)

    partial = A.field.zeros(elements.shape)
    for i in range(A.dim):
        term = A.field.zeros(elements.shape)
        term[:, i] = elements[:, i]
        if i > 0:
            result = result + _correction_rows(A, pairing, partial, term)
        partial = partial + term
    return result


# ----------------------------------------------------------------------
# Constructions
# ----------------------------------------------------------------------
def tilde(A: RestrictedLieAlgebra, phi: FieldElement) -> OmegaMap:
    """The map with the *-property with respect to phi that vanishes on the basis"""
    if phi.shape != (dim_c2(A.dim),):
        raise DimensionMismatch(f"2-cochain of shape {phi.shape} for n = {A.dim}")
    return OmegaMap(phi.copy(), A.zero())


def bar_e(field: Field, n: int, k: int) -> OmegaMap:
    """The Frobenius homomorphism sum a_i e_i -> a_k^p"""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"bar e^{k} outside 1..{n}")
    return OmegaMap(field.zeros(dim_c2(n)), field.basis_vector(n, k - 1))


def ind1(A: RestrictedLieAlgebra, psi: FieldElement) -> OmegaMap:
    """g -> psi(g^[p]), with the *-property with respect to d^1(psi)"""
    return OmegaMap(d1_generic(A, psi), A.p_map @ psi)


def ind2(A: RestrictedLieAlgebra, phi: FieldElement) -> SemiBilinearMap:
    """(g, h) -> phi(g ^ h^[p]); its grid entry (j, i) is phi(e_j ^ e_i^[p])"""
    return SemiBilinearMap(pairing_matrix(phi, A.dim) @ A.p_map.T)


def d1_star(A: RestrictedLieAlgebra, psi: FieldElement) -> RestrictedCochain2:
    omega = ind1(A, psi)
    return RestrictedCochain2(omega.reference.copy(), omega)


def d2_star(A: RestrictedLieAlgebra, c: RestrictedCochain2) -> Tuple[FieldElement, SemiBilinearMap]:
    return d2_generic(A, c.phi), ind2(A, c.phi)


def restricted_cochain(A: RestrictedLieAlgebra, phi: FieldElement, basis_values: FieldElement = None) -> RestrictedCochain2:
    """(phi, omega) with omega(e_k) given (zero by default)"""
    values = A.zero() if basis_values is None else basis_values
    return RestrictedCochain2(phi.copy(), OmegaMap(phi.copy(), values))


def frobenius_cochain(A: RestrictedLieAlgebra, k: int) -> RestrictedCochain2:
    """(0, bar e^k)"""
    omega = bar_e(A.field, A.dim, k)
    return RestrictedCochain2(omega.reference.copy(), omega)


# ----------------------------------------------------------------------
# Coordinates
# ----------------------------------------------------------------------
def restricted_coordinates(c: RestrictedCochain2) -> FieldElement:
    """(sigma_{ij}; omega(e_1), ..., omega(e_n))"""
    n = c.dim
    m = dim_c2(n)
    out = type(c.phi).Zeros(m + n)
    out[:m] = c.phi
    out[m:] = c.omega.basis_values
    return out


def from_coordinates(A: RestrictedLieAlgebra, coords: FieldElement) -> RestrictedCochain2:
    m = dim_c2(A.dim)
    if coords.shape != (m + A.dim,):
        raise DimensionMismatch(f"restricted coordinates of shape {coords.shape} for n = {A.dim}")
    return restricted_cochain(A, coords[:m].copy(), coords[m:].copy())


def d1_star_matrix(A: RestrictedLieAlgebra) -> FieldElement:
    """Matrix of d^1*: C^1 -> C^2* in restricted coordinates"""
    m = dim_c2(A.dim)
    out = A.field.zeros((m + A.dim, A.dim))
    out[:m] = d1_matrix(A)
    out[m:] = A.p_map
    return out


def d2_star_matrix(A: RestrictedLieAlgebra) -> FieldElement:
    """
    Matrix of d^2* on restricted coordinates: the d^2 block stacked on the
    flattened ind^2 grid; the omega coordinates never contribute
    """
    n = A.dim
    m = dim_c2(n)
    ind_columns = [ind2(A, A.field.basis_vector(m, idx)).grid.reshape(n * n) for idx in range(m)]
    ind_block = stack(A.field, ind_columns, n * n).T

    out = A.field.zeros((dim_c3(n) + n * n, m + n))
    out[: dim_c3(n), :m] = d2_matrix(A)
    out[dim_c3(n):, :m] = ind_block
    return out


def is_restricted_cocycle(A: RestrictedLieAlgebra, c: RestrictedCochain2) -> bool:
    d2_part, ind_part = d2_star(A, c)
    return not np.any(d2_part != 0) and ind_part.is_zero()


def complex_property(A: RestrictedLieAlgebra) -> VerificationReport:
    """d^2* d^1* = 0, both as matrices and through the assembled pairs on every e^k"""
    report = VerificationReport(f"restricted complex of {A.name}")
    product = d2_star_matrix(A) @ d1_star_matrix(A)
    report.add("d2star_d1star_matrix_zero", not np.any(product != 0), "all of C^1")

    failing: List[int] = []
    for k in range(A.dim):
        if not is_restricted_cocycle(A, d1_star(A, A.field.basis_vector(A.dim, k))):
            failing.append(k + 1)
    report.add("d2star_d1star_on_basis", not failing, f"failing e^k for k in {failing}" if failing else "")

    logger.info("Restricted complex check for %s: %s", A.name, "pass" if report.passed else "FAIL")
    return report
