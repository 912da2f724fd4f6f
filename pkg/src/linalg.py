"""
Exact dense linear algebra over a galois field
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from exceptions import DimensionMismatch, ImageNotContained
from field import Field, FieldElement

logger = logging.getLogger(__name__)


@dataclass
class Subspace:
    """Span of linearly independent row vectors inside F^ambient_dim"""

    field: Field
    ambient_dim: int
    basis: FieldElement  # shape (dim, ambient_dim)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def vectors(self) -> List[FieldElement]:
        return [self.basis[i] for i in range(self.dim)]


def zero_subspace(field: Field, ambient_dim: int) -> Subspace:
    return Subspace(field, ambient_dim, field.zeros((0, ambient_dim)))


def stack(field: Field, vectors: Sequence[FieldElement], width: int) -> FieldElement:
    """Stack vectors as the rows of a matrix (an empty list gives a 0 x width matrix)"""
    m = field.zeros((len(vectors), width))
    for i, v in enumerate(vectors):
        if v.shape != (width,):
            raise DimensionMismatch(f"expected length {width}, got {v.shape}")
        m[i] = v
    return m


def rref(m: FieldElement) -> Tuple[FieldElement, List[int], int]:
    """
    Reduced row echelon form of a galois matrix

    Returns:
        (reduced matrix, pivot columns, rank)
    """
    if m.size == 0:
        return m.copy(), [], 0
    r = m.row_reduce()
    pivots = [int(np.flatnonzero(row != 0)[0]) for row in r if np.any(row != 0)]
    return r, pivots, len(pivots)


def rank(m: FieldElement) -> int:
    return rref(m)[2]


def kernel_basis(m: FieldElement, field: Field) -> Subspace:
    """Basis of {x : m x = 0}, one vector per free column in increasing order"""
    reduced, pivots, _ = rref(m)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in pivots]

    basis = field.zeros((len(free), cols))
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        for i, pc in enumerate(pivots):
            basis[idx, pc] = -reduced[i, f]
    return Subspace(field, cols, basis)


def span(field: Field, vectors: Sequence[FieldElement], ambient_dim: int) -> Subspace:
    """Echelon basis of the span of arbitrary vectors"""
    reduced, _, r = rref(stack(field, vectors, ambient_dim))
    return Subspace(field, ambient_dim, reduced[:r].copy())


def image_basis(m: FieldElement, field: Field) -> Subspace:
    """Echelon basis of the column space of m"""
    reduced, _, r = rref(m.T)
    return Subspace(field, m.shape[0], reduced[:r].copy())


def in_span(v: FieldElement, s: Subspace) -> Optional[FieldElement]:
    """Coordinates of v in s.basis, or None when v is outside the span"""
    if v.shape != (s.ambient_dim,):
        raise DimensionMismatch(f"vector of length {v.shape} against ambient dimension {s.ambient_dim}")
    k = s.dim
    augmented = s.field.zeros((s.ambient_dim, k + 1))
    augmented[:, :k] = s.basis.T
    augmented[:, k] = v

    reduced, pivots, _ = rref(augmented)
    if k in pivots:
        return None
    coords = s.field.zeros(k)
    for i, pc in enumerate(pivots):
        coords[pc] = reduced[i, k]
    return coords


def is_independent(field: Field, vectors: Sequence[FieldElement], ambient_dim: int) -> bool:
    return rank(stack(field, vectors, ambient_dim)) == len(vectors)


def _reduce(v: FieldElement, echelon: List[Tuple[FieldElement, int]]) -> FieldElement:
    for row, pivot in echelon:
        if v[pivot] != 0:
            v = v - v[pivot] * row
    return v


def complement_representatives(kernel: Subspace, image: Subspace) -> List[FieldElement]:
    """
    Vectors of the kernel whose classes form a basis of kernel / image

    Each kernel basis vector (in basis order) is reduced against the image and
    then against the representatives already chosen; survivors are normalized
    to leading coefficient 1.
    """
    if kernel.ambient_dim != image.ambient_dim:
        raise DimensionMismatch("kernel and image live in different spaces")
    for i, w in enumerate(image.vectors()):
        if in_span(w, kernel) is None:
            raise ImageNotContained(f"image basis vector {i} is not in the kernel")

    echelon = []
    for row in image.vectors():
        pivot = int(np.flatnonzero(row != 0)[0])
        echelon.append((row / row[pivot], pivot))

    representatives = []
    for v in kernel.vectors():
        w = _reduce(v.copy(), echelon)
        nonzero = np.flatnonzero(w != 0)
        if nonzero.size == 0:
            continue
        pivot = int(nonzero[0])
        w = w / w[pivot]
        echelon.append((w, pivot))
        representatives.append(w)

    logger.debug(
        "Quotient of a %d-dimensional kernel by a %d-dimensional image has %d representatives",
        kernel.dim, image.dim, len(representatives),
    )
    return representatives
