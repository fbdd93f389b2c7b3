"""Command-line front end.

Exit codes: 0 decision made (either verdict), 2 usage error, 3 unsupported
group, 4 a constructed witness failed verification.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import abelian, decision
from . import free_group as fg
from .polyalg import format_poly

EXIT_OK, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(ValueError):
    pass


def _ints(text: str) -> list:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _tuples(text: str) -> list:
    return [tuple(_ints(part)) for part in text.split(";") if part.strip()]


def _radii_sets(args) -> list:
    sets = [_ints(s) for s in (args.set or [])]
    if getattr(args, "two_circle", None):
        sets += [[r] for r in args.two_circle]
    if not sets:
        raise UsageError("give at least one --set (or --two-circle r s)")
    for s in sets:
        if not s:
            raise UsageError("empty --set")
    return sets


def _emit(payload: dict, text: str, as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _verification_text(v) -> str:
    if v is None:
        return ""
    return (
        f"\nverification: conv residual {v.conv_residual}, translate residual "
        f"{v.translate_residual}, inner radius {v.inner_radius}"
    )


def _free_text(rep: decision.DecisionReport) -> str:
    lines = [f"F_{rep.k} family {rep.family}: {rep.decision}", f"gcd = {format_poly(rep.gcd)}"]
    if rep.root is not None:
        z = rep.root.exact if rep.root.exact is not None else rep.root.value
        lines.append(f"common root z0 = {z} (multiplicity {rep.root.multiplicity}); witness phi_z0 on radius {rep.witness_radius}")
    return "\n".join(lines) + _verification_text(rep.verification)


def _free_report(args):
    if args.k is None:
        raise UsageError("--k is required")
    fam = decision.RadialSetFamily(args.k, _radii_sets(args))
    return decision.free_pompeiu_check(fam, radius=args.radius)


def cmd_free(args):
    rep = _free_report(args)
    if args.witness_out and rep.witness is not None:
        Path(args.witness_out).write_text(rep.witness.to_csv())
    _emit(rep.as_json(), _free_text(rep), args.json)


def cmd_two_circle(args):
    if not args.two_circle:
        raise UsageError("two-circle needs --two-circle r s")
    args.set = []
    cmd_free(args)


def cmd_witness(args):
    rep = _free_report(args)
    if rep.witness is None:
        _emit(rep.as_json(), _free_text(rep) + "\nno witness: the family is Pompeiu", args.json)
        return
    csv_text = rep.witness.to_csv()
    if args.witness_out:
        Path(args.witness_out).write_text(csv_text)
        _emit(rep.as_json(), _free_text(rep) + f"\nwitness written to {args.witness_out}", args.json)
    else:
        sys.stdout.write(csv_text)


def cmd_verify(args):
    if args.k is None or not args.witness_in:
        raise UsageError("verify needs --k, --set and --witness-in")
    sets = _radii_sets(args)
    f = fg.BallFunction.from_csv(Path(args.witness_in).read_text(), args.k)
    fam = decision.RadialSetFamily(args.k, sets)
    per_set = []
    for s, a in zip(fam.sets, fam.elements()):
        rep = decision.verify_annihilation(a, f, tol=args.tol if not f.is_exact() else None)
        per_set.append({"set": sorted(s), **rep.as_json(), "passed": rep.passed})
    payload = {
        "group": "free",
        "k": args.k,
        "family": fam.as_json(),
        "radius": f.radius,
        "exact": f.is_exact(),
        "perSet": per_set,
        "passed": all(p["passed"] for p in per_set),
    }
    text = "\n".join(
        f"set {p['set']}: conv {p['convResidual']}, translate {p['translateResidual']}, "
        f"inner radius {p['innerRadius']}, {'ok' if p['passed'] else 'FAILED'}"
        for p in per_set
    )
    _emit(payload, text, args.json)


def cmd_z(args):
    raw = args.set or []
    if not raw:
        raise UsageError("give at least one --set")
    sets = []
    for s in raw:
        if ";" in s:
            tuples = _tuples(s)
            dims = {len(t) for t in tuples}
            if max(dims) >= 2:
                abelian.check_rank(max(dims))
            sets.append([t[0] for t in tuples])
        else:
            sets.append(_ints(s))
    rep = abelian.z_pompeiu_check(sets, tol=args.tol)
    text = f"Z family {rep.sets}: {rep.decision}\ngcd = {format_poly(rep.gcd)}"
    if rep.root is not None:
        text += f"\nwitness f(m) = z0^m with z0 = {rep.root.value}; translate residual {rep.residual:.3g}"
    _emit(rep.as_json(), text, args.json)


def cmd_finite(args):
    if not args.orders:
        raise UsageError("finite needs --orders")
    orders = _ints(args.orders)
    raw = (args.set or []) + (args.elements or [])
    if not raw:
        raise UsageError("give at least one --set/--elements")
    n_free = sum(1 for n in orders if n == 0)
    if n_free >= 2:
        abelian.check_rank(n_free)
    if n_free == 1:
        if orders[0] != 0:
            raise UsageError("put the Z factor (order 0) first")
        finite = orders[1:]
        sets = [_tuples(s) for s in raw]
        rep = abelian.product_pompeiu_check(finite, sets, tol=args.tol)
        text = f"Z x Z_{finite} family: {rep.decision}"
        if rep.character is not None:
            text += f"\nwitness character {rep.character} with z0 = {rep.z0}"
        _emit(rep.as_json(), text, args.json)
        return
    G = abelian.FiniteAbelianGroup(orders)
    if len(orders) == 1:
        sets = [[(g,) for g in (_ints(s) if ";" not in s else [t[0] for t in _tuples(s)])] for s in raw]
    else:
        sets = [_tuples(s) for s in raw]
    rep = abelian.finite_abelian_pompeiu_check(G, sets, tol=args.tol)
    text = f"group Z_{list(G.orders)} family: {rep.decision}"
    if rep.character is not None:
        text += f"\nwitness character exponents {rep.character}; residual {rep.residual:.3g}"
        if rep.real_witness is not None:
            text += f"\nreal witness {dict(sorted(rep.real_witness.items()))}"
    _emit(rep.as_json(), text, args.json)


def cmd_mvp(args):
    if None in (args.k, args.n, args.m):
        raise UsageError("mvp needs --k, --n and --m")
    res = decision.mvp_hypothesis_check(args.k, args.n, args.m)
    verdict = "hypothesis holds" if res.holds else "hypothesis fails"
    payload = {
        "group": "free",
        "k": args.k,
        "n": args.n,
        "m": args.m,
        "hypothesisHolds": res.holds,
        "gcd": res.gcd.to_json(),
        "gcdText": format_poly(res.gcd),
    }
    _emit(payload, f"{verdict}: gcd(p_n - e_n, p_m - e_m) = {format_poly(res.gcd)}", args.json)


def cmd_mvp_scan(args):
    if args.k is None:
        raise UsageError("mvp-scan needs --k")
    scan = decision.mvp_scan(args.k, args.radius if args.radius is not None else 10)
    lines = [f"({n},{m}) {'yes' if ok else 'no'}  gcd = {format_poly(scan.gcds[(n, m)])}" for (n, m), ok in sorted(scan.table.items())]
    for cls, c in scan.parity_summary().items():
        lines.append(f"{cls}: {c['pass']}/{c['total']} pairs satisfy the hypothesis")
    _emit(scan.as_json(), "\n".join(lines), args.json)


def cmd_torsion(args):
    if args.n is None:
        raise UsageError("torsion-demo needs --n")
    a, b = abelian.torsion_annihilator(args.n)
    prod = a.convolve(b)
    table = prod.coefficient_table()
    lhs = " + ".join(["1", "g"] + [f"g^{j}" for j in range(2, args.n)]) if args.n > 2 else "1 + g"
    payload = {
        "group": "finite-abelian",
        "orders": [args.n],
        "identity": f"({lhs}) * (1 - g) = 0",
        "coefficients": [[g[0], str(c)] for g, c in table],
        "allZero": all(c == 0 for _, c in table),
    }
    text = payload["identity"] + "\n" + "\n".join(f"g^{g[0]}: {c}" for g, c in table)
    _emit(payload, text, args.json)


COMMANDS = {
    "free": cmd_free,
    "z": cmd_z,
    "finite": cmd_finite,
    "two-circle": cmd_two_circle,
    "mvp": cmd_mvp,
    "mvp-scan": cmd_mvp_scan,
    "verify": cmd_verify,
    "witness": cmd_witness,
    "torsion-demo": cmd_torsion,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pompeiu", description="Pompeiu property decisions on discrete groups")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--k", type=int)
        p.add_argument("--set", action="append", help="comma radii / integers, or ';'-separated tuples")
        p.add_argument("--two-circle", nargs=2, type=int, metavar=("R", "S"))
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--orders", help="comma-separated cyclic orders; 0 marks a Z factor")
        p.add_argument("--elements", action="append", help="';'-separated tuples")
        p.add_argument("--radius", type=int)
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--json", action="store_true")
        p.add_argument("--witness-out")
        p.add_argument("--witness-in")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        COMMANDS[args.command](args)
    except abelian.UnsupportedGroupError as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except decision.VerificationError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
