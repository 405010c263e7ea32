"""Abelian groups that may contain free and divisible summands.

Brauer groups of localized integers contain copies of Q/Z, which are never
materialized.  A ``GroupShape`` records them symbolically and answers
questions about finite truncations: the N-torsion subgroup, the quotient
mod N and p-primary parts are all finitely generated.
"""

from dataclasses import dataclass, field
from math import gcd

from ..cohomology.modules import FgAbelianGroup


def _pp(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


@dataclass(frozen=True)
class GroupShape:
    """finite + Z^free + (Q/Z)^qz + sum over p of (Q_p/Z_p)^k."""

    finite: FgAbelianGroup = field(default_factory=FgAbelianGroup)
    free: int = 0
    qz: int = 0
    qpzp: tuple = ()  # sorted (p, copies) pairs

    def __post_init__(self):
        if self.finite.rank:
            raise ValueError("put free summands in the free field")

    @classmethod
    def of(cls, group: FgAbelianGroup) -> "GroupShape":
        return cls(FgAbelianGroup(0, group.torsion), group.rank)

    @classmethod
    def cyclic(cls, n: int) -> "GroupShape":
        return cls.of(FgAbelianGroup.cyclic(n))

    @classmethod
    def zero(cls) -> "GroupShape":
        return cls()

    def is_zero(self) -> bool:
        return self.finite.is_zero() and not self.free and not self.qz and not self.qpzp

    def is_finite(self) -> bool:
        return not self.free and not self.qz and not self.qpzp

    def is_torsion(self) -> bool:
        return not self.free

    def order(self):
        """Order as an int, or None if infinite."""
        return self.finite.order() if self.is_finite() else None

    def as_fg(self) -> FgAbelianGroup:
        if self.qz or self.qpzp:
            raise ValueError(f"{self} is not finitely generated")
        return FgAbelianGroup(self.free, self.finite.torsion)

    def __add__(self, other: "GroupShape") -> "GroupShape":
        d = dict(self.qpzp)
        for p, k in other.qpzp:
            d[p] = d.get(p, 0) + k
        return GroupShape(self.finite + other.finite, self.free + other.free,
                          self.qz + other.qz, tuple(sorted(d.items())))

    def torsion(self, n: int) -> FgAbelianGroup:
        """The n-torsion subgroup."""
        tors = [gcd(d, n) for d in self.finite.torsion]
        tors += [n] * self.qz
        for p, k in self.qpzp:
            tors += [_pp(n, p)] * k
        return FgAbelianGroup.from_diagonal([t for t in tors if t > 1] or [1])

    def mod(self, n: int) -> FgAbelianGroup:
        """The quotient by n; divisible summands contribute nothing."""
        tors = [gcd(d, n) for d in self.finite.torsion] + [n] * self.free
        return FgAbelianGroup.from_diagonal([t for t in tors if t > 1] or [1])

    def p_part(self, p: int) -> "GroupShape":
        """p-primary torsion subgroup."""
        qp = self.qz + dict(self.qpzp).get(p, 0)
        return GroupShape(self.finite.p_part(p), 0, 0, ((p, qp),) if qp else ())

    def localized(self, p: int) -> "GroupShape":
        """Tensor with Z_(p): keeps free summands and the p-primary torsion."""
        part = self.p_part(p)
        return GroupShape(part.finite, self.free, 0, part.qpzp)

    def __str__(self):
        parts = ["Z"] * self.free
        parts += [f"Z/{d}" for d in self.finite.torsion]
        parts += ["Q/Z"] * self.qz
        for p, k in self.qpzp:
            parts += [f"Q{p}/Z{p}"] * k
        return " + ".join(parts) if parts else "0"
