"""The 3-part: two Legendre curves over Q_3(zeta_3).

For t = 2 + b*pi the cubic symbol (zeta, t(t-1))_pi equals zeta^(1 - b^2).
It is computed here through the Artin-Hasse formula, using the trace of a
3-adic logarithm, and checked against a brute-force search for norms.
"""

from ellbrauer.arith import ZetaThreeLocal, trace_pi_power
from ellbrauer.brauer.parts import three_part
from ellbrauer.brauer.profiles import localized_integers
from ellbrauer.brauer.witness import THREE_ADIC_CLASSES, three_adic_witness, witness_obstruction_check
from ellbrauer.hilbert.cubic import cubic_symbol_legendre, norm_oracle_cubic


def main():
    print("traces Tr(pi^m) for m = 0..11:", [trace_pi_power(m) for m in range(12)])
    for b in range(3):
        v = cubic_symbol_legendre(b, 12)
        t = ZetaThreeLocal.from_rationals(2 + b, -b, 8)
        is_norm = norm_oracle_cubic(t * (t - 1), N=6)
        print(f"t = 2 + {b}*pi: symbol zeta^{v.artin_hasse} (closed form zeta^{v.closed_form}); "
              f"t(t-1) is a norm mod pi^6: {is_norm}")

    ws = [three_adic_witness(0), three_adic_witness(1)]
    for w in ws:
        print(f"witness {w.name}: row {list(w.row)}  ({w.detail})")
    print("surviving classes over F_3:", witness_obstruction_check(THREE_ADIC_CLASSES, ws, 3) or "none")
    print("3Br(M_Z[1/2]) =", three_part(localized_integers((2,))).group)
    print("3Br'(M_Z[1/6]) =", three_part(localized_integers((2, 3))).group)


if __name__ == "__main__":
    main()
