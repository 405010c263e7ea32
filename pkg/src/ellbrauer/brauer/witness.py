"""Local points that obstruct Brauer classes from extending.

A class that extends over an integral model pulls back to zero at every
point with good reduction, since the local Brauer group of the ring of
integers vanishes.  Each witness point gives an F_l-linear functional on the
candidate classes; a combination survives when every functional kills it.
"""

from dataclasses import dataclass

from ..curves import WeierstrassCurve, point_symbol_pair
from ..hilbert.cubic import cubic_symbol_legendre
from ..hilbert.quadratic import hilbert_two
from . import gf

TWO_ADIC_CLASSES = ("alpha", "beta", "gamma")  # (-1,-1), (-1,Delta), (2,Delta)
THREE_ADIC_CLASSES = ("sigma", "theta")


@dataclass(frozen=True)
class Witness:
    name: str
    row: tuple  # value of each class at the point, in F_l
    detail: str = ""


def _bit(sign: int) -> int:
    return 0 if sign == 1 else 1


def witness_obstruction_check(classes, witnesses, ell: int) -> set:
    """Nonzero combinations of the classes annihilated by every witness row."""
    n = len(classes)
    rows = [list(w.row if isinstance(w, Witness) else w) for w in witnesses]
    for r in rows:
        if len(r) != n:
            raise ValueError("witness row has the wrong length")
    if not rows:
        return {tuple(v) for v in gf.nonzero_vectors(n, ell)}
    kernel = gf.nullspace(rows, n, ell)
    out = set()
    for v in gf.nonzero_vectors(n, ell):
        if gf.in_span(kernel, v, ell):
            out.add(tuple(v))
    return out


def combination_label(classes, v) -> str:
    terms = []
    for c, name in zip(v, classes):
        if c == 1:
            terms.append(name)
        elif c:
            terms.append(f"{c}*{name}")
    return "+".join(terms) or "0"


# -- witness rows -------------------------------------------------------------------


def two_adic_witness(name: str, curve: WeierstrassCurve) -> Witness:
    """Values of (alpha, beta, gamma) at the Q_2-point given by a curve with odd discriminant.

    alpha = (-1,-1) pulls back to the constant (-1,-1)_2; beta and gamma give
    (-1, D)_2 and (2, D)_2.
    """
    minus, two = point_symbol_pair(curve)
    alpha = hilbert_two(-1, -1)
    row = (_bit(alpha), _bit(minus), _bit(two))
    D = curve.discriminant()
    detail = f"D = {D}: (-1,-1)_2 = {alpha}, (-1,D)_2 = {minus}, (2,D)_2 = {two}"
    return Witness(name, row, detail)


def three_adic_witness(b) -> Witness:
    """Values of (sigma, theta) at the Q_3(zeta_3)-point of the Legendre curve t = 2 + b*pi.

    sigma contributes the same nonzero local class at both points, normalized
    to 1; theta contributes the exponent k of (zeta, t(t-1))_pi = zeta^k.
    """
    val = cubic_symbol_legendre(b)
    k = val.exponent
    detail = f"t = 2 + {b}*pi: (zeta, t(t-1)) = zeta^{k}"
    return Witness(f"b={b}", (1, k), detail)
