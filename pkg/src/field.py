"""
Exact arithmetic in GF(p) and GF(p^2) backed by galois field arrays
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence, Tuple

import galois
import numpy as np

from exceptions import DivisionByZero, FiliformError, NotPrime, ReducibleModulus

logger = logging.getLogger(__name__)

# Scalars, vectors and matrices are all galois FieldArrays of one field class.
# The integer view of an element is canonical: a residue in [0, p) over GF(p),
# and a1*p + a0 for a1*t + a0 over GF(p^2).
FieldElement = galois.FieldArray


@dataclass(frozen=True)
class Field:
    """A prime field GF(p) or a quadratic extension GF(p^2)"""

    characteristic: int
    extension_degree: int
    modulus: Optional[Tuple[int, int]]
    gf: type = dataclass_field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.characteristic ** self.extension_degree

    @property
    def is_prime_field(self) -> bool:
        return self.extension_degree == 1

    def __call__(self, values) -> FieldElement:
        return self.gf(values)

    def array(self, values) -> FieldElement:
        """Build a field array from canonical integers (or another field array)"""
        return self.gf(np.asarray(values, dtype=np.int64))

    def scalar(self, n: int) -> FieldElement:
        """Image of an integer under Z -> GF(p) -> field"""
        return self.gf(n % self.characteristic)

    def zeros(self, shape) -> FieldElement:
        return self.gf.Zeros(shape)

    def identity(self, n: int) -> FieldElement:
        return self.gf.Identity(n)

    def basis_vector(self, n: int, k: int) -> FieldElement:
        v = self.gf.Zeros(n)
        v[k] = 1
        return v

    def elements(self) -> FieldElement:
        return self.gf.elements

    def nonzero_elements(self) -> FieldElement:
        return self.gf.elements[1:]

    def random(self, shape=(), rng=None) -> FieldElement:
        return self.gf.Random(shape, seed=rng)

    def frobenius(self, x: FieldElement) -> FieldElement:
        return x ** self.characteristic

    def coefficients(self, x: FieldElement) -> Tuple[int, int]:
        """(a0, a1) with x = a1*t + a0; a1 is always 0 over GF(p)"""
        a1, a0 = divmod(int(x), self.characteristic)
        return a0, a1

    def from_coefficients(self, a0: int, a1: int = 0) -> FieldElement:
        p = self.characteristic
        if self.is_prime_field and a1 % p:
            raise ValueError("GF(p) has no element with a nonzero t-coefficient")
        return self.gf((a1 % p) * p + (a0 % p))

    def generator(self) -> FieldElement:
        """The adjoined root t of the modulus"""
        return self.from_coefficients(0, 1)

    def format(self, x: FieldElement) -> str:
        a0, a1 = self.coefficients(x)
        if a1 == 0:
            return str(a0)
        head = "t" if a1 == 1 else f"{a1}t"
        return head if a0 == 0 else f"{head}+{a0}"

    def describe(self) -> str:
        if self.is_prime_field:
            return f"GF({self.characteristic})"
        c0, c1 = self.modulus
        return f"GF({self.order}) = GF({self.characteristic})[t]/(t^2+{c1}t+{c0})"


def make_field(p: int, modulus: Optional[Sequence[int]] = None) -> Field:
    """
    Build GF(p), or GF(p^2) when a monic quadratic modulus is supplied

    Args:
        p: the characteristic
        modulus: (c0, c1) standing for t^2 + c1*t + c0

    Returns:
        Field handle
    """
    if not galois.is_prime(p):
        raise NotPrime(f"{p} is not prime")

    if modulus is None:
        return Field(characteristic=p, extension_degree=1, modulus=None, gf=galois.GF(p))

    if len(modulus) != 2:
        raise ReducibleModulus("modulus must be given as (c0, c1) for t^2 + c1*t + c0")
    c0, c1 = (int(c) % p for c in modulus)

    # a quadratic is irreducible exactly when it has no root
    roots = [t for t in range(p) if (t * t + c1 * t + c0) % p == 0]
    if roots:
        raise ReducibleModulus(f"t^2+{c1}t+{c0} has the root {roots[0]} mod {p}")

    poly = galois.Poly([1, c1, c0], field=galois.GF(p))
    gf = galois.GF(p ** 2, irreducible_poly=poly)
    logger.debug("Built GF(%d) with modulus %s", p ** 2, poly)
    return Field(characteristic=p, extension_degree=2, modulus=(c0, c1), gf=gf)


def arith(x: FieldElement, y: Optional[FieldElement], op: str, n: Optional[int] = None) -> FieldElement:
    """Exact field arithmetic: op is one of add, sub, neg, mul, inv, pow"""
    if op in ("add", "sub", "mul") and y is None:
        raise FiliformError(f"{op} needs a second operand")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "neg":
        return -x
    if op == "mul":
        return x * y
    if op == "inv":
        if np.any(x == 0):
            raise DivisionByZero("0 has no inverse")
        return x ** -1
    if op == "pow":
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
            raise FiliformError(f"pow needs an integer exponent, got {n!r}")
        if n < 0 and np.any(x == 0):
            raise DivisionByZero("0 has no inverse")
        return x ** int(n)
    raise ValueError(f"Unsupported operation: {op}")


def frobenius(x: FieldElement) -> FieldElement:
    """x -> x^p"""
    return x ** type(x).characteristic
