"""Integer polynomials: discriminants and factorization patterns mod p.

Coefficient lists are integers with the leading coefficient first.
"""

from sympy import Poly, ZZ, discriminant as _disc, factor_list, symbols
from sympy.polys.galoistools import gf_ddf_zassenhaus, gf_from_int_poly, gf_monic, gf_sqf_p

x = symbols("x")


def to_poly(coeffs) -> Poly:
    return Poly([int(c) for c in coeffs], x, domain=ZZ)


def discriminant(coeffs) -> int:
    return int(_disc(to_poly(coeffs).as_expr(), x))


def is_irreducible_over_q(coeffs) -> bool:
    _, factors = factor_list(to_poly(coeffs).as_expr(), x)
    return len(factors) == 1 and factors[0][1] == 1


def factor_degrees_mod_p(coeffs, p: int) -> list[int]:
    """Degrees of the irreducible factors of a squarefree polynomial over F_p.

    Uses distinct-degree factorization; the result is sorted.
    """
    f = gf_from_int_poly([int(c) for c in coeffs], p)
    if len(f) != len(coeffs):
        raise ValueError("leading coefficient vanishes mod p")
    _, f = gf_monic(f, p, ZZ)
    if not gf_sqf_p(f, p, ZZ):
        raise ValueError(f"polynomial is not squarefree mod {p}")
    degrees = []
    for g, d in gf_ddf_zassenhaus(f, p, ZZ):
        degrees += [d] * ((len(g) - 1) // d)
    return sorted(degrees)


def roots_mod_p(coeffs, p: int) -> list[int]:
    """All roots in F_p, by direct evaluation."""
    out = []
    for r in range(p):
        v = 0
        for c in coeffs:
            v = (v * r + c) % p
        if v == 0:
            out.append(r)
    return out


def poly_str(coeffs, var: str = "x") -> str:
    """Human-readable form such as 'x^3 - 3x + 1'."""
    d = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        c = int(c)
        k = d - i
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mon = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        body = str(a) if (a != 1 or k == 0) else ""
        parts.append((sign, body + mon))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        s += f" {sign} {term}"
    return s
