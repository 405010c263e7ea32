"""Cohomology of S3 with the coefficients that appear in the descent.

S3 acts on the Legendre family by permuting the three 2-torsion points.  The
units t and t-1 of the level-2 base span the reduced permutation module rho~.
"""

from ellbrauer.cohomology.cohomology import group_cohomology
from ellbrauer.cohomology.maps import invariants_generator, transfer_composition_check
from ellbrauer.cohomology.modules import rho, rho_tilde, trivial_module, with_coefficients
from ellbrauer.cohomology.resolution import standard_group


def main():
    S3 = standard_group("S3")
    for n in (0, 2, 3, 4, 12):
        coeff = "Z" if n == 0 else f"Z/{n}"
        triv = [str(group_cohomology(trivial_module(S3, n), i)) for i in range(5)]
        red = [str(group_cohomology(with_coefficients(rho_tilde(S3), n), i)) for i in range(5)]
        print(f"H^0..4(S3, {coeff:>4}):        {', '.join(triv)}")
        print(f"H^0..4(S3, rho~ (x) {coeff:>4}): {', '.join(red)}")

    gen = invariants_generator(with_coefficients(rho_tilde(S3), 3))
    print("invariants of rho~ (x) Z/3 generated by", ", ".join(gen.labels))
    C2 = standard_group("C2")
    print("Shapiro: H^2(S3, rho) =", group_cohomology(rho(S3), 2), "and H^2(C2, Z) =",
          group_cohomology(trivial_module(C2, 0), 2))
    print("tr o res = 3 on H^2(S3, Z):", transfer_composition_check(trivial_module(S3, 0), 2))


if __name__ == "__main__":
    main()
