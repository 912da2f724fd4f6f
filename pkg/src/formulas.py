"""
Closed formulas over GF(p) for the bracket and [p]-map corrections of central extensions

For g = sum a_i e_i and h = sum b_i e_i the corrections are polynomials in the
a_i and b_i. They are computed with sympy polynomials by running the same
*-property fold that eval_omega runs on numbers.
"""
import functools
import logging
from typing import List, Sequence, Tuple

import numpy as np
from sympy import Poly, symbols

from algebra import RestrictedLieAlgebra
from cochain import pair_basis, pairing_matrix
from restricted import OmegaMap

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def alpha_symbols(n: int) -> Tuple:
    return symbols(f"a1:{n + 1}")


@functools.lru_cache(maxsize=None)
def beta_symbols(n: int) -> Tuple:
    return symbols(f"b1:{n + 1}")


def _residues(x) -> np.ndarray:
    """Canonical integers of a prime-field array"""
    if type(x).degree != 1:
        raise ValueError("closed formulas are produced over prime fields only")
    return np.asarray(x.view(np.ndarray), dtype=np.int64)


def _zero(gens, p: int) -> Poly:
    return Poly(0, *gens, modulus=p)


def _bracket(tensor_entries, u: Sequence[Poly], v: Sequence[Poly], zero: Poly) -> List[Poly]:
    out = [zero] * len(u)
    for i, j, k, c in tensor_entries:
        if u[i].is_zero or v[j].is_zero:
            continue
        out[k] = out[k] + u[i] * v[j] * c
    return out


def _pair(pairing_entries, x: Sequence[Poly], y: Sequence[Poly], zero: Poly) -> Poly:
    total = zero
    for i, j, c in pairing_entries:
        if x[i].is_zero or y[j].is_zero:
            continue
        total = total + x[i] * y[j] * c
    return total


def bracket_correction(A: RestrictedLieAlgebra, phi) -> Poly:
    """phi(g ^ h) = sum sigma_{ij} (a_i b_j - a_j b_i)"""
    n, p = A.dim, A.p
    a, b = alpha_symbols(n), beta_symbols(n)
    sigma = _residues(phi)
    total = _zero(a + b, p)
    for idx, (i, j) in enumerate(pair_basis(n)):
        if sigma[idx]:
            total = total + Poly(a[i - 1] * b[j - 1] - a[j - 1] * b[i - 1], *(a + b), modulus=p) * int(sigma[idx])
    return total


def omega_polynomial(A: RestrictedLieAlgebra, omega: OmegaMap) -> Poly:
    """omega(sum a_i e_i) as a polynomial over GF(p) in a_1..a_n"""
    n, p = A.dim, A.p
    a = alpha_symbols(n)
    zero = _zero(a, p)

    tensor = _residues(A.tensor)
    tensor_entries = [(i, j, k, int(tensor[i, j, k])) for i, j, k in np.argwhere(tensor != 0)]
    pairing = _residues(pairing_matrix(omega.reference, n))
    pairing_entries = [(i, j, int(pairing[i, j])) for i, j in np.argwhere(pairing != 0)]
    values = _residues(omega.basis_values)
    inverses = [0] + [pow(c, -1, p) for c in range(1, p)]

    result = zero
    partial = None
    for i in range(n):
        term = [zero] * n
        term[i] = Poly(a[i], *a, modulus=p)
        if values[i]:
            result = result + Poly(a[i] ** p, *a, modulus=p) * int(values[i])
        if partial is None:
            partial = term
            continue
        if pairing_entries:
            # words[c]: prefix brackets with c copies of the partial sum
            words = {1: _bracket(tensor_entries, partial, term, zero)}
            for _ in range(p - 3):
                grown = {}
                for c, word in words.items():
                    with_g = _bracket(tensor_entries, word, partial, zero)
                    with_h = _bracket(tensor_entries, word, term, zero)
                    grown[c + 1] = [x + y for x, y in zip(grown.get(c + 1, [zero] * n), with_g)]
                    grown[c] = [x + y for x, y in zip(grown.get(c, [zero] * n), with_h)]
                words = {c: w for c, w in grown.items() if any(not x.is_zero for x in w)}
            for c, word in words.items():
                result = result + _pair(pairing_entries, word, partial, zero) * inverses[c + 1]
                result = result + _pair(pairing_entries, word, term, zero) * inverses[c]
        partial = [x + y for x, y in zip(partial, term)]

    logger.debug("omega polynomial over GF(%d): %s", p, result.as_expr())
    return result


def base_p_power_polynomials(A: RestrictedLieAlgebra) -> List[Poly]:
    """Coordinates of sum a_k^p e_k^[p], the [p]-power of an element when the [p]-map is semilinear"""
    n, p = A.dim, A.p
    a = alpha_symbols(n)
    table = _residues(A.p_map)
    coords = []
    for col in range(n):
        total = _zero(a, p)
        for k in range(n):
            if table[k, col]:
                total = total + Poly(a[k] ** p, *a, modulus=p) * int(table[k, col])
        coords.append(total)
    return coords


def format_polynomial(poly: Poly, p: int, as_latex: bool = False) -> str:
    """
    Canonical residues as coefficients, except that p-1 prints as a minus sign;
    text uses a1^3*b2, LaTeX uses \\alpha_{1}^{3}\\beta_{2}
    """
    if poly.is_zero:
        return "0"
    pieces = []
    for monom, coeff in poly.terms():
        c = int(coeff) % p
        if c == 0:
            continue
        negative = c == p - 1
        factors = []
        for gen, exp in zip(poly.gens, monom):
            if exp == 0:
                continue
            name = str(gen)
            if as_latex:
                name = ("\\alpha_{%s}" if name[0] == "a" else "\\beta_{%s}") % name[1:]
                factors.append(name if exp == 1 else f"{name}^{{{exp}}}")
            else:
                factors.append(name if exp == 1 else f"{name}^{exp}")
        body = ("" if as_latex else "*").join(factors)
        if not negative and c != 1:
            body = f"{c}{'' if as_latex else '*'}{body}" if body else str(c)
        elif not body:
            body = "1"
        pieces.append((negative, body))

    text = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


def format_p_power(coords: Sequence[Poly], p: int, as_latex: bool = False) -> str:
    """sum_k coords[k] e_k, e.g. "a1^5 e_5" or "0" for the zero map"""
    pieces = []
    for k, poly in enumerate(coords, start=1):
        if poly.is_zero:
            continue
        body = format_polynomial(poly, p, as_latex)
        if len(poly.terms()) > 1:
            body = f"({body})"
        pieces.append(f"{body} e_{{{k}}}" if as_latex else f"{body} e_{k}")
    return " + ".join(pieces) if pieces else "0"
