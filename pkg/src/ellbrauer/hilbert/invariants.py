"""Local invariant vectors of Brauer classes over Q."""

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import factorint

from .quadratic import hilbert_symbol

INF = "inf"


class ProductFormulaError(ArithmeticError):
    """Local invariants failed to sum to zero."""


def place_key(place):
    return (1, 0) if place == INF else (0, int(place))


@dataclass(frozen=True)
class InvariantVector:
    """Finitely supported map from places of Q to Z/n.

    ``entries`` lists only the nonzero values, sorted with finite primes first
    and the real place last.
    """

    modulus: int
    entries: tuple = field(default=())

    @classmethod
    def from_dict(cls, modulus: int, d: dict) -> "InvariantVector":
        items = [(pl, v % modulus) for pl, v in d.items() if v % modulus]
        items.sort(key=lambda kv: place_key(kv[0]))
        return cls(modulus, tuple(items))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def support(self) -> list:
        return [pl for pl, _ in self.entries]

    def total(self) -> int:
        return sum(v for _, v in self.entries) % self.modulus

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other):
        if other.modulus != self.modulus:
            raise ValueError("moduli differ")
        d = self.as_dict()
        for pl, v in other.entries:
            d[pl] = d.get(pl, 0) + v
        return InvariantVector.from_dict(self.modulus, d)

    def check_product_formula(self):
        if self.total():
            raise ProductFormulaError(f"invariants {self.entries} do not sum to zero")
        return self


def bad_places(*values) -> list:
    """2, the real place and every odd prime appearing in the given rationals."""
    primes = {2}
    for a in values:
        a = Fraction(a)
        primes |= set(factorint(abs(a.numerator))) | set(factorint(a.denominator))
    primes.discard(1)
    return sorted(primes) + [INF]


def quaternion_invariants(a, b) -> InvariantVector:
    """Local invariants (in Z/2) of the quaternion algebra (a, b) over Q."""
    d = {}
    for pl in bad_places(a, b):
        if hilbert_symbol(a, b, pl) == -1:
            d[pl] = 1
    return InvariantVector.from_dict(2, d).check_product_formula()
