"""Command line interface: ``ellbrauer <command> ...``.

Exit status is 0 on success, 1 when a computation fails or a reproduction
check does not match, and 2 on bad usage.
"""

import argparse
import json
import sys
from fractions import Fraction

from .brauer.ledger import FIGURES, descent_ledger
from .brauer.localized import LADDER, br_localized_integers
from .brauer.parts import brauer_of_moduli, resolve_two_extension
from .brauer.profiles import finite_field, localized_integers, profile_by_name
from .brauer.verdict import MODES, final_verdict
from .cohomology.cohomology import group_cohomology
from .cohomology.maps import invariants_generator
from .cohomology.modules import rho, rho_tilde, trivial_module, with_coefficients
from .cohomology.resolution import standard_group
from .curves import WeierstrassCurve
from .hilbert.cubic import cubic_symbol_legendre
from .hilbert.invariants import INF, quaternion_invariants
from .hilbert.quadratic import hilbert_symbol
from .lmfdb import CACHE_ENV, fetch_curve
from .report import SCOPES, format_table, reproduce_report


class UsageError(ValueError):
    pass


def _emit(args, data: dict, text: str):
    if args.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(text)


def _place(s: str):
    s = s.strip().lower()
    if s in ("inf", "oo", "infinity", "r"):
        return INF
    return int(s)


def _parse_int_list(s: str) -> list:
    s = s.strip().strip("[]{}()")
    return [int(x) for x in s.replace(" ", "").split(",") if x]


# -- commands -------------------------------------------------------------------------


def cmd_hilbert(args):
    place = _place(args.p)
    a, b = Fraction(args.a), Fraction(args.b)
    val = hilbert_symbol(a, b, place)
    inv = quaternion_invariants(a, b).as_dict()
    data = {"a": str(a), "b": str(b), "place": str(place), "symbol": val,
            "ramified_places": [str(k) for k in inv]}
    _emit(args, data, f"({a}, {b})_{place} = {val}\nramified at: {', '.join(map(str, inv)) or 'nowhere'}")
    return 0


def cmd_cubic(args):
    v = cubic_symbol_legendre(Fraction(args.b), args.prec)
    data = {"b": args.b, "exponent": v.exponent, "closed_form": v.closed_form,
            "artin_hasse": v.artin_hasse, "precision": args.prec}
    _emit(args, data, f"(zeta, t(t-1))_pi with t = 2 + ({args.b})*pi: zeta^{v.exponent} "
                      f"(closed form {v.closed_form}, Artin-Hasse {v.artin_hasse})")
    return 0


def cmd_curve(args):
    arg = args.curve
    if "," in arg or arg.startswith("["):
        ainvs = _parse_int_list(arg)
        label, source = None, "input"
    else:
        rec = fetch_curve(arg, offline=args.offline, cache=args.cache_dir)
        ainvs, label, source = list(rec.ainvs), rec.label, rec.source
    E = WeierstrassCurve.from_ainvs(ainvs)
    inv = E.invariants()
    data = {"label": label, "ainvs": ainvs, "source": source,
            **{k: (None if v is None else str(v)) for k, v in inv._asdict().items()}}
    lines = [f"curve: {label or ''} {ainvs} ({source})"]
    lines += [f"{k:>5} = {v}" for k, v in inv._asdict().items()]
    _emit(args, data, "\n".join(lines))
    return 0


def _module(name: str, group_name: str):
    G = standard_group(group_name)
    name = name.replace(" ", "")
    base, _, coeff = name.partition("(x)")
    n = 0
    if coeff:
        if not coeff.startswith("Z/"):
            raise UsageError(f"bad coefficients {coeff!r}")
        n = int(coeff[2:])
    if base in ("rho~", "rho_tilde", "rhotilde", "rho"):
        if group_name != "S3":
            raise UsageError("rho and rho~ are S3-modules")
        M = rho_tilde(G) if base != "rho" else rho(G)
        return with_coefficients(M, n)
    if base == "Z" and not coeff:
        return trivial_module(G, 0)
    if base.startswith("Z/") and not coeff:
        return trivial_module(G, int(base[2:]))
    raise UsageError(f"unknown module {name!r}")


def cmd_cohomology(args):
    M = _module(args.module, args.group)
    H = group_cohomology(M, args.degree)
    data = {"group": args.group, "module": args.module, "degree": args.degree, "cohomology": str(H)}
    text = f"H^{args.degree}({args.group}, {args.module}) = {H}"
    if args.degree == 0 and not H.is_zero():
        gen = invariants_generator(M)
        data["generators"] = list(gen.labels)
        text += f"\ngenerators: {', '.join(gen.labels)}"
    _emit(args, data, text)
    return 0


def cmd_brauer_fq(args):
    res = brauer_of_moduli(finite_field(args.q))
    data = res.to_dict()
    text = [f"Br(M_F_{args.q}) = {res.group}"]
    for k, part in res.parts.items():
        text.append(f"  [{k}] {part.group}")
        text += [f"      {a}" for a in part.audit]
    _emit(args, data, "\n".join(text))
    return 0


def cmd_brauer_zp(args):
    P = tuple(sorted(set(_parse_int_list(args.primes))))
    br = br_localized_integers(P)
    data = {"primes": list(P), "brauer": str(br.shape), "generators": list(br.generators),
            "truncations": {str(n): str(br.truncation(n)) for n in LADDER},
            "ladder_consistent": br.check_ladder()}
    text = [f"Br(Z_P), P = {list(P)}: {br.shape}"]
    text += [f"  generator: {g}" for g in br.generators]
    text += [f"  {n}-torsion: {br.truncation(n)}" for n in LADDER]
    if 2 in P:
        ext = resolve_two_extension(localized_integers(P))
        data["two_extension"] = None if ext.group is None else str(ext.group)
        data["two_extension_generators"] = [[d, o] for d, o in ext.generators]
        text.append(f"2-part of coker(Br(Z_P) -> Br(M_Z_P)): {ext.group}")
        text += [f"  {d} (order {o})" for d, o in ext.generators]
    _emit(args, data, "\n".join(text))
    return 0


def cmd_brauer_verdict(args):
    rep = final_verdict(args.mode, q=args.q, offline=args.offline, cache=args.cache_dir)
    text = [f"Br(M) = {rep['result']}" if args.mode != "fq" else f"Br(M_F_{args.q}) = {rep['result']}"]
    text.append(f"parts: p=2 {rep['parts']['p2']}; p=3 {rep['parts']['p3']}; p>=5 {rep['parts']['pLarge']}")
    for w in rep["witnesses"]:
        text.append(f"witness p={w['prime']} {w['name']}: row {w.get('row')} ({w['detail']})")
    text += [f"  {a}" for a in rep["audit"]]
    _emit(args, rep, "\n".join(text))
    return 0 if args.mode == "without-53a1" or not rep["result"].startswith("undetermined") else 1


def cmd_brauer_ledger(args):
    led = descent_ledger(profile_by_name(args.profile), args.figure, args.n)
    data = led.to_dict()
    text = [f"{led.figure} over {led.profile}: E2 diagonal order {led.diagonal_order(2, 2)}, "
            f"E_inf diagonal order {led.diagonal_order(2)} (bounds {led.diagonal_bounds(2)})"]
    for page in sorted(led.pages):
        ents = ", ".join(f"{p},{q}: {e.group if e.group is not None else e.bounds}"
                         for (p, q), e in sorted(led.pages[page].items()))
        text.append(f"  E{page if page < 4 else '_inf'}: {ents}")
    text += [f"  {a}" for a in led.audit]
    _emit(args, data, "\n".join(text))
    return 0


def cmd_reproduce(args):
    rep = reproduce_report(args.scope, offline=args.offline, cache=args.cache_dir)
    _emit(args, rep, format_table(rep))
    return 0 if rep["passed"] else 1


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--offline", action="store_true", default=argparse.SUPPRESS,
                        help="never touch the network")
    common.add_argument("--cache-dir", default=argparse.SUPPRESS, help=f"curve cache (default ${CACHE_ENV})")

    ap = argparse.ArgumentParser(prog="ellbrauer", parents=[common],
                                 description="Exact computations for Brauer groups of the moduli of elliptic curves.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="quadratic Hilbert symbol (a, b)_p")
    p.add_argument("--p", required=True, help="a prime or 'inf'")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("cubic-symbol", parents=[common], help="(zeta, t(t-1))_pi for t = 2 + b*pi")
    p.add_argument("--b", required=True)
    p.add_argument("--prec", type=int, default=12)
    p.set_defaults(func=cmd_cubic)

    p = sub.add_parser("curve", parents=[common], help="invariants of a curve given by label or a-invariants")
    p.add_argument("curve", help="Cremona label or a1,a2,a3,a4,a6")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("cohomology", parents=[common], help="H^i(G, M)")
    p.add_argument("--group", default="S3")
    p.add_argument("--module", required=True, help="Z, Z/n, rho~, rho~(x)Z/n, rho, rho(x)Z/n")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("brauer", parents=[common], help="Brauer group computations")
    bsub = p.add_subparsers(dest="brauer_command", required=True)
    b = bsub.add_parser("fq", parents=[common], help="Br(M_F_q)")
    b.add_argument("--q", type=int, required=True)
    b.set_defaults(func=cmd_brauer_fq)
    b = bsub.add_parser("zp", parents=[common], help="Br(Z_P) and the 2-extension over Z_P")
    b.add_argument("--primes", required=True, help="comma-separated primes, e.g. 2,3")
    b.set_defaults(func=cmd_brauer_zp)
    b = bsub.add_parser("verdict", parents=[common], help="the chain showing Br(M) = 0")
    b.add_argument("--mode", choices=MODES, default="full")
    b.add_argument("--q", type=int, default=7)
    b.set_defaults(func=cmd_brauer_verdict)
    b = bsub.add_parser("ledger", parents=[common], help="descent spectral sequence bookkeeping")
    b.add_argument("--profile", required=True, help="F_q, Z, Z[1/2], Z[1/6], Z[1/2,i], closed")
    b.add_argument("--figure", choices=FIGURES, required=True)
    b.add_argument("--n", type=int, default=2)
    b.set_defaults(func=cmd_brauer_ledger)

    p = sub.add_parser("reproduce", parents=[common], help="recompute the published values")
    p.add_argument("scope", choices=SCOPES)
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    for name, default in (("json", False), ("offline", False), ("cache_dir", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, NotImplementedError, RuntimeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
