"""Assembling Br of the moduli stack over several bases.

The Brauer group splits into a 2-part, a 3-part and a part for primes >= 5.
Over a finite field of odd characteristic the answer is Z/12; over Z[1/2] it
is Br(Z[1/2]) + Z/2 + Z/4, and the descent spectral sequence shows where the
2-part comes from.
"""

from ellbrauer.brauer.ledger import descent_ledger
from ellbrauer.brauer.localized import br_localized_integers
from ellbrauer.brauer.parts import brauer_of_moduli, localized_two_part_closed_form, resolve_two_extension
from ellbrauer.brauer.profiles import algebraically_closed, finite_field, localized_integers


def main():
    for q in (3, 5, 7, 9, 25):
        res = brauer_of_moduli(finite_field(q))
        parts = ", ".join(f"{k}: {p.group}" for k, p in res.parts.items())
        print(f"Br(M_F_{q}) = {res.group}   ({parts})")
    print("Br(M_k), k algebraically closed =", brauer_of_moduli(algebraically_closed()).group)

    for P in ((), (2,), (2, 3)):
        print(f"Br(Z_P), P = {list(P)}: {br_localized_integers(P)}")
    print("Br(M_Z[1/2]) =", brauer_of_moduli(localized_integers((2,))).group)

    for P in ((2,), (2, 3), (2, 5), (2, 3, 5, 13)):
        ext = resolve_two_extension(localized_integers(P))
        print(f"2-extension over Z_P, P = {list(P)}: {ext.group} (closed form {localized_two_part_closed_form(P)})")

    led = descent_ledger(finite_field(7), "M-two-local", 2)
    print(f"M-two-local over F_7: diagonal order {led.diagonal_order(2, 2)} on E2, "
          f"{led.diagonal_order(2)} at E_inf, extension ambiguous: {led.extension_ambiguous(2)}")


if __name__ == "__main__":
    main()
