"""Why the 2-part of Br(M) vanishes.

Over Z[1/2] the 2-torsion of the Brauer group of the moduli stack has an
F_2-basis alpha, beta, gamma.  A class that extends over Z must pull back to
zero at every Q_2-point with good reduction at 2.  Three curves from the
fixture corpus give three rows of a 3x3 matrix over F_2; it has full rank, so
no nonzero combination survives.
"""

from ellbrauer.brauer.verdict import WITNESS_CURVES
from ellbrauer.brauer.witness import TWO_ADIC_CLASSES, combination_label, two_adic_witness, witness_obstruction_check
from ellbrauer.hilbert.quadratic import hilbert_symbol
from ellbrauer.lmfdb import fetch_curve


def main():
    witnesses = []
    for label in WITNESS_CURVES:
        E = fetch_curve(label, offline=True).curve()
        D = int(E.invariants().disc)
        print(f"{label}: Delta = {D}, (Delta, -1)_2 = {hilbert_symbol(D, -1, 2):+d}, "
              f"(Delta, 2)_2 = {hilbert_symbol(D, 2, 2):+d}")
        w = two_adic_witness(label, E)
        print(f"    row over F_2 for (alpha, beta, gamma): {list(w.row)}")
        witnesses.append(w)

    for k in (2, 3):
        used = witnesses[:k]
        survivors = witness_obstruction_check(TWO_ADIC_CLASSES, used, 2)
        names = ", ".join(combination_label(TWO_ADIC_CLASSES, v) for v in sorted(survivors)) or "none"
        print(f"with {', '.join(w.name for w in used)}: surviving combinations: {names}")


if __name__ == "__main__":
    main()
