"""Cohomological inputs for the bases over which Br(M_S) is computed.

A profile is data, not a scheme: units, Picard and Brauer groups and roots
of unity of a handful of bases, each with a note on where the value comes
from.  The subgroup G of units u with (-1, u) = 0 in Br(S) is computed from
the profile rather than stored.
"""

from dataclasses import dataclass, field
from math import gcd

from sympy import factorint

from ..cohomology.modules import FgAbelianGroup
from ..hilbert.invariants import quaternion_invariants
from . import gf
from .localized import br_localized_integers
from .shapes import GroupShape


@dataclass(frozen=True)
class BaseProfile:
    name: str
    kind: str  # finite_field, localized_integers, gaussian, algebraically_closed
    units: GroupShape
    unit_labels: tuple  # generators of the units: torsion generator first, then free ones
    pic: GroupShape
    brauer: GroupShape
    roots_of_unity: int | None  # order of the torsion of the units, None if all roots exist
    characteristic: int = 0
    primes: tuple = ()  # inverted primes (localized integers)
    q: int | None = None
    unit_values: tuple | None = None  # integer values of unit_labels when they are rational
    notes: tuple = field(default=())

    # -- derived groups ----------------------------------------------------------
    def mu(self, n: int) -> FgAbelianGroup:
        if self.roots_of_unity is None:
            return FgAbelianGroup.cyclic(n)
        return FgAbelianGroup.from_diagonal([gcd(n, self.roots_of_unity)])

    def units_mod(self, n: int) -> FgAbelianGroup:
        return self.units.mod(n)

    def pic_torsion(self, n: int) -> FgAbelianGroup:
        return self.pic.torsion(n)

    def pic_mod(self, n: int) -> FgAbelianGroup:
        return self.pic.mod(n)

    def h1_mu(self, n: int) -> FgAbelianGroup:
        """H^1(S, mu_n), an extension of Pic[n] by units mod n."""
        if not self.pic_torsion(n).is_zero() and not self.units_mod(n).is_zero():
            raise NotImplementedError("H^1(S, mu_n) is an unresolved extension for this profile")
        return self.units_mod(n) + self.pic_torsion(n)

    # -- units modulo squares ----------------------------------------------------
    def _torsion_order(self) -> int:
        t = self.units.finite.torsion
        return t[-1] if t else 1

    def mod2_labels(self) -> tuple:
        """Labels of an F_2-basis of the units modulo squares."""
        out = []
        has_torsion = bool(self.units.finite.torsion)
        for i, lab in enumerate(self.unit_labels):
            if i == 0 and has_torsion:
                if self._torsion_order() % 2 == 0:
                    out.append(lab)
            else:
                out.append(lab)
        return tuple(out)

    def minus_one(self) -> list:
        """Coordinates of -1 in the basis mod2_labels()."""
        dim = len(self.mod2_labels())
        if dim == 0:
            return []
        v = [0] * dim
        if self.kind == "localized_integers":
            v[0] = 1
        elif self.kind == "finite_field":
            v[0] = ((self.q - 1) // 2) % 2  # -1 = g^((q-1)/2)
        elif self.kind == "gaussian":
            v[0] = 0  # -1 = i^2
        return v

    def unit_value(self, vec) -> int:
        if self.unit_values is None:
            raise ValueError(f"units of {self.name} are not rational numbers")
        x = 1
        for c, u in zip(vec, self.unit_values):
            if c % 2:
                x *= u
        return x

    def label(self, vec) -> str:
        names = [lab for c, lab in zip(vec, self.mod2_labels()) if c % 2]
        return "*".join(names) if names else "1"


# -- constructors -------------------------------------------------------------------


def finite_field(q: int) -> BaseProfile:
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, _), = fac.items()
    if p == 2:
        raise ValueError("only odd characteristic is supported")
    return BaseProfile(
        name=f"F_{q}", kind="finite_field", units=GroupShape.cyclic(q - 1), unit_labels=("g",),
        pic=GroupShape(), brauer=GroupShape(), roots_of_unity=q - 1, characteristic=p, q=q,
        notes=("units cyclic of order q-1 generated by g", "Br(F_q) = 0", "Pic(F_q) = 0"),
    )


def localized_integers(P) -> BaseProfile:
    primes = tuple(sorted(set(P)))
    br = br_localized_integers(primes)
    denom = 1
    for p in primes:
        denom *= p
    name = "Z" if not primes else f"Z[1/{denom}]"
    return BaseProfile(
        name=name, kind="localized_integers",
        units=GroupShape(FgAbelianGroup.cyclic(2), len(primes)),
        unit_labels=("-1",) + tuple(str(p) for p in primes),
        pic=GroupShape(), brauer=br.shape, roots_of_unity=2, primes=primes,
        unit_values=(-1,) + primes,
        notes=("units: +-1 times products of inverted primes", "Pic = 0 (principal ideal domain)",
               "Br from class field theory"),
    )


def gaussian_localized() -> BaseProfile:
    """Z[1/2, i]: one prime above 2 and no real place."""
    return BaseProfile(
        name="Z[1/2,i]", kind="gaussian", units=GroupShape(FgAbelianGroup.cyclic(4), 1),
        unit_labels=("i", "1+i"), pic=GroupShape(), brauer=br_localized_integers((2,), False).shape,
        roots_of_unity=4, primes=(2,),
        notes=("units: i^a (1+i)^b", "Pic = 0 (Z[i] is a principal ideal domain)",
               "Br: one finite place above 2 and no real place"),
    )


def algebraically_closed(characteristic: int = 0) -> BaseProfile:
    if characteristic == 2:
        raise ValueError("only characteristic not 2 is supported")
    return BaseProfile(
        name="k algebraically closed", kind="algebraically_closed", units=GroupShape(qz=1),
        unit_labels=(), pic=GroupShape(), brauer=GroupShape(), roots_of_unity=None,
        characteristic=characteristic,
        notes=("units divisible; the uniquely divisible part is omitted", "Br = 0, Pic = 0"),
    )


def profile_by_name(name: str) -> BaseProfile:
    """Names: F_q, Z, Z[1/2], Z[1/6], Z[1/2,i], Z_P with P a comma list, closed."""
    name = name.strip()
    if name.startswith("F_"):
        return finite_field(int(name[2:]))
    if name == "Z[1/2,i]":
        return gaussian_localized()
    if name in ("closed", "k", "algebraically_closed"):
        return algebraically_closed()
    if name == "Z":
        return localized_integers(())
    if name.startswith("Z[1/") and name.endswith("]"):
        return localized_integers(tuple(factorint(int(name[4:-1]))))
    if name.startswith("Z_"):
        return localized_integers(tuple(int(x) for x in name[2:].strip("{}").split(",") if x))
    raise ValueError(f"unknown profile {name!r}")


# -- the subgroup G -------------------------------------------------------------------


@dataclass(frozen=True)
class GSubgroup:
    basis: tuple  # F_2 vectors in the basis profile.mod2_labels(), reduced echelon form
    labels: tuple
    ambient_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)


def minus_one_symbol(profile: BaseProfile, vec) -> dict:
    """Local invariants (mod 2) of the quaternion algebra (-1, u) over S."""
    if profile.brauer.is_zero():
        return {}
    if profile.unit_values is None:
        raise ValueError(f"cannot evaluate symbols over {profile.name}")
    return quaternion_invariants(-1, profile.unit_value(vec)).as_dict()


def g_subgroup(profile: BaseProfile) -> GSubgroup:
    """G = {u in units/2 : (-1, u) = 0 in Br(S)} as the kernel of an F_2-linear map.

    Over Z_P the map Br(Z_P) -> Br(Q) is injective, so (-1, u) vanishes iff
    all its local invariants do.
    """
    labels = profile.mod2_labels()
    m = len(labels)
    cols = []
    for j in range(m):
        e = [int(i == j) for i in range(m)]
        cols.append(minus_one_symbol(profile, e))
    places = sorted({pl for c in cols for pl in c}, key=lambda x: (isinstance(x, str), x))
    rows = [[cols[j].get(pl, 0) % 2 for j in range(m)] for pl in places]
    basis = gf.nullspace(rows, m, 2) if rows else [[int(i == j) for i in range(m)] for j in range(m)]
    basis = gf.canonical_basis(basis, m, 2)
    return GSubgroup(tuple(tuple(v) for v in basis), tuple(profile.label(v) for v in basis), m)
