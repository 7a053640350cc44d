"""Command-line front end.

Every subcommand builds a report ``{"command", "inputs", "results", "failures"}``
and prints it as JSON, text or TSV.  Exit status: 0 on success, 1 when a check
fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .errors import Co0Error

DEFAULT_SEED = 0


class InputError(Exception):
    pass


def _jsonable(x: Any) -> Any:
    from .cyclo import ModInt

    if isinstance(x, ModInt):
        return x.value
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _report(command: str, inputs: dict, results: Any, failures: list) -> dict:
    return {"command": command, "inputs": inputs, "results": _jsonable(results), "failures": _jsonable(failures)}


# --------------------------------------------------------------- readers


def _read_ints(path: str) -> list[list[int]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return [[int(t) for t in line.split()] for line in text.splitlines() if line.strip()]
    except ValueError as exc:
        raise InputError(f"{path}: entries must be integers") from exc


def read_matrix(path: str) -> list[list[int]]:
    rows = _read_ints(path)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise InputError(f"{path}: expected a square integer grid")
    return rows


def read_charpoly(path: str) -> list[int]:
    """Coefficients of det(1 - x g), constant term first."""
    coeffs = [c for row in _read_ints(path) for c in row]
    if not coeffs:
        raise InputError(f"{path}: no coefficients")
    return coeffs


def _parse_traces(text: str) -> tuple[int, int, int, int, int]:
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad traces {text!r}") from exc
    if len(vals) != 5:
        raise InputError("--traces needs t1,t2,t5,t21,t13")
    return vals  # type: ignore[return-value]


# ------------------------------------------------------------ commands


def _frame_summary(fs) -> dict:
    from .frame import classify, eigenvalues_from_frame

    c = classify(fs)
    return {
        "frame": str(fs),
        "degree": c.degree,
        "order": c.order,
        "ell": c.ell,
        "epsilon": c.epsilon,
        "balanced": c.balanced is not None,
        "N": c.balanced,
        "eigenvalues": {str(m): e for m, e in eigenvalues_from_frame(fs).mult},
    }


def cmd_frameshape(args) -> dict:
    from .cyclo import Poly
    from .frame import frame_from_charpoly, frame_from_matrix, parse_frame

    if args.matrix:
        inputs = {"matrix": args.matrix}
        fs = frame_from_matrix(read_matrix(args.matrix))
    elif args.charpoly:
        inputs = {"charpoly": args.charpoly}
        fs = frame_from_charpoly(Poly(tuple(read_charpoly(args.charpoly))))
    else:
        inputs = {"frame": args.frame}
        fs = parse_frame(args.frame)
    return _report("frameshape", inputs, _frame_summary(fs), [])


def cmd_p12(args) -> dict:
    from .chern import canonical24, lift_independence_check, p12_restriction, su_factorize, theorem6_formula
    from .frame import eigenvalues_from_frame, parse_frame

    fs = parse_frame(args.frame)
    eigs = eigenvalues_from_frame(fs)
    direct = p12_restriction(fs)
    formula = theorem6_formula(fs)
    lift = lift_independence_check(eigs)
    res = _frame_summary(fs)
    res.update(
        k=direct.k.value,
        modulus=direct.modulus,
        formula=formula.k.value,
        su_weights=list(su_factorize(eigs).weights),
        lifts=lift.lifts,
        lift_independent=lift.constant,
    )
    failures = []
    try:
        res["canonical24_invariant"] = canonical24(direct).invariant
    except Co0Error as exc:
        failures.append({"check": "24-torsion", "error": str(exc)})
    if direct != formula:
        failures.append({"check": "formula", "direct": direct.k.value, "formula": formula.k.value})
    if not lift.constant:
        failures.append({"check": "lift independence", "values": list(lift.values)})
    return _report("p12", {"frame": args.frame}, res, failures)


def cmd_ktable(args) -> dict:
    from .conway import ktable_verify, load_ktable

    rows = load_ktable(args.check)
    rep = ktable_verify(rows)
    res = {
        "rows": rep.rows,
        "matches": rep.matches,
        "total": len(rep.rows),
        "real": rep.real_count,
        "complex": rep.complex_count,
        "summary": f"{rep.matches}/{len(rep.rows)} match",
    }
    return _report("ktable", {"check": str(args.check or "bundled")}, res, rep.mismatches)


def cmd_theorem6(args) -> dict:
    from .conway import load_frame_fixtures, theorem6_fixtures, theorem6_sampled

    if args.samples is not None:
        if args.samples < 0:
            raise InputError("--samples must be nonnegative")
        inputs = {"samples": args.samples, "seed": args.seed, "word_length": args.word_length}
        rep = theorem6_sampled(args.samples, args.seed, args.word_length)
    else:
        path = None if args.fixtures in (None, True) else args.fixtures
        inputs = {"fixtures": str(path or "bundled")}
        rep = theorem6_fixtures(load_frame_fixtures(path))
    res = {
        "items": rep.items,
        "count": len(rep.items),
        "distinct_frames": len(rep.distinct_frames()),
        "mismatches": len(rep.failures),
    }
    return _report("verify-theorem6", inputs, res, rep.failures)


def cmd_golay(args) -> dict:
    from . import golay as G

    failures: list = []
    if args.action == "info":
        code = G.build_golay()
        we = code.weight_enumerator()
        perm_order = G.m24_chain().order()
        mat_order = G.matrix_group_order(list(G.c12_matrices()))
        traces: dict[int, int] = {}
        for w in code.codewords():
            traces.setdefault(bin(w).count("1"), G.codeword_trace(w, code))
        res = {
            "weight_enumerator": we,
            "self_dual": code.dual() == code,
            "minimum_weight": code.minimum_weight(),
            "m24_order_permutations": perm_order,
            "m24_order_matrices": mat_order,
            "traces_by_weight": dict(sorted(traces.items())),
            "generators_preserve_code": all(G.preserves_code(g, code) for g in G.m24_generators()),
        }
        if perm_order != G.M24_ORDER or mat_order != G.M24_ORDER:
            failures.append({"check": "group order", "perm": perm_order, "matrix": mat_order})
    elif args.action == "fixed-points":
        res = {f"alt{k}" if k > 1 else "dual": len(G.dual_fixed_space(k)) for k in (1, 2, 3)}
        res["sq1_exact"] = all(G.sq1_exactness(n, d).exact for n in range(1, 5) for d in range(1, 7))
        res["filtration"] = {str(n): list(G.filtration_dims(n)) for n in range(1, 5)}
        if (res["dual"], res["alt2"], res["alt3"]) != (0, 0, 1):
            failures.append({"check": "fixed-point dimensions", "dims": [res["dual"], res["alt2"], res["alt3"]]})
    else:
        fixed = G.dual_fixed_space(3)
        if len(fixed) != 1:
            raise Co0Error(f"Alt^3 fixed space has dimension {len(fixed)}")
        rep = G.triple_intersection_check(fixed[0], trials=args.trials, seed=args.seed)
        res = {"trials": rep.trials, "all_ones_checked": rep.all_ones_checked, "mismatches": len(rep.mismatches)}
        failures = [list(t) for t in rep.mismatches]
    return _report("golay", {"action": args.action, "seed": args.seed, "trials": args.trials}, res, failures)


def cmd_anomaly(args) -> dict:
    from . import anomaly as A

    failures: list = []
    if args.action == "m24":
        from .golay.leech import random_element

        rng = random.Random(args.seed)
        items = []
        for i in range(args.samples):
            rep = A.m24_anomaly_check(random_element(rng, args.word_length).perm)
            item = {"index": i, "frame": rep.frame, "k": rep.k, "pairing": rep.pairing, "expected": rep.expected}
            items.append(item)
            if not rep.ok:
                failures.append(item)
        inputs = {"action": "m24", "samples": args.samples, "seed": args.seed, "word_length": args.word_length}
        res = {"items": items, "count": len(items)}
    elif args.action == "umbral":
        rows = A.load_umbral_rows(args.fixtures)
        items = []
        for r in rows:
            rep = A.verify_umbral_row(r)
            item = {
                "lattice": r.lattice,
                "class": r.cls,
                "frame": str(r.frame),
                "p12": rep.p12,
                "c2b": rep.c2b,
                "c2a": rep.c2a,
                "relation_holds": rep.relation_holds,
                "opposite_holds": rep.opposite_holds,
                "expected": r.relation,
                "ok": rep.ok,
            }
            items.append(item)
            if not rep.ok:
                failures.append(item)
        inputs = {"action": "umbral", "fixtures": str(args.fixtures or "bundled")}
        res = {"items": items}
    elif args.action == "a38":
        rep = A.a38_check()
        res = {
            "c2_core": rep.c2_core,
            "c2_b_plus": rep.c2_b_minus_a,
            "factor5_check": rep.factor5_check,
            "branches": list(rep.branches),
            "epsilon_mod8": list(rep.epsilon_mod8),
        }
        inputs = {"action": "a38"}
        if not rep.ok:
            failures.append({"check": "a38"})
    else:
        rep = A.a64_check()
        res = {
            "p12_perm8": rep.p12_perm8.signed(),
            "p12_leech": rep.p12_leech,
            "c2_b_plus": rep.c2_b,
            "mod3_c2_b_plus": rep.mod3_c2_b,
            "mod3_p12": rep.mod3_p12,
            "ok": rep.ok,
        }
        inputs = {"action": "a64"}
        if not rep.ok:
            failures.append({"check": "a64"})
    return _report("anomaly", inputs, res, failures)


def cmd_csd(args) -> dict:
    from .conway import csd_restriction, k_of_character

    t = _parse_traces(args.traces)
    r = csd_restriction(*t)
    res = {"mod16": r.mod16, "mod3": r.mod3, "k": k_of_character(*t)}
    return _report("csd", {"traces": list(t)}, res, [])


# ------------------------------------------------------------- output


def _scalar(v: Any) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=1)
    res = report["results"]
    lines: list[str] = []
    table_key = next((k for k in ("rows", "items") if isinstance(res, dict) and isinstance(res.get(k), list)), None)
    if fmt == "tsv":
        if table_key and res[table_key]:
            cols = sorted({c for row in res[table_key] for c in row})
            lines.append("\t".join(cols))
            lines.extend("\t".join(_scalar(row.get(c, "")) for c in cols) for row in res[table_key])
        else:
            lines.append("key\tvalue")
            lines.extend(f"{k}\t{_scalar(v)}" for k, v in sorted(res.items()))
        return "\n".join(lines)
    lines.append(f"{report['command']}: " + ", ".join(f"{k}={_scalar(v)}" for k, v in report["inputs"].items()))
    for k, v in res.items():
        if k == table_key:
            continue
        lines.append(f"  {k}: {_scalar(v)}")
    if table_key:
        lines.append(f"  {table_key}: {len(res[table_key])} entries")
    if report["failures"]:
        lines.append(f"FAILURES ({len(report['failures'])}):")
        lines.extend(f"  {_scalar(f)}" for f in report["failures"])
    else:
        lines.append("OK")
    return "\n".join(lines)


# ------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="PRNG seed (Python's MT19937; default 0)")
    common.add_argument("--data-dir", help="directory holding the JSON fixtures (or set CO0CHERN_DATA)")

    p = argparse.ArgumentParser(prog="co0chern", description="Degree-4 characteristic class computations for Co0.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser(
        "frameshape", parents=[common], help="Frame shape of a matrix, polynomial or shape string",
        description="Frame shape, order, ell, epsilon and balance of a finite-order integer matrix.",
    )
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix", help="file with a square whitespace-separated integer grid")
    g.add_argument("--charpoly", help="file with the coefficients of det(1 - xg), constant term first")
    g.add_argument("--frame", help='shape text such as "2^-4 8^4"')
    s.set_defaults(func=cmd_frameshape)

    s = sub.add_parser(
        "p12", parents=[common], help="p1/2 on the cyclic group of a Frame shape",
        description="Restriction of p1/2 to <g> by SU factorization, compared with eps*o/ell.",
    )
    s.add_argument("--frame", required=True)
    s.set_defaults(func=cmd_p12)

    s = sub.add_parser(
        "ktable", parents=[common], help="Recompute k(V) for the irreducible Co0 characters",
        description="Solve c2(V) = k c2(Leech) on Z/3 x 2D8 for every row of a trace table.",
    )
    s.add_argument("--check", nargs="?", const=None, default=None, metavar="FILE", help="table (default: bundled)")
    s.set_defaults(func=cmd_ktable)

    s = sub.add_parser(
        "verify-theorem6", parents=[common], help="Compare direct p1/2 with the balanced-shape formula",
        description="Direct SU-factorization value of p1/2 versus eps*o/ell on fixtures or random 2^12:M24 elements.",
    )
    g = s.add_mutually_exclusive_group()
    g.add_argument("--samples", type=int, help="number of random elements of 2^12:M24")
    g.add_argument("--fixtures", nargs="?", const=True, help="Frame shape fixture file (default: bundled)")
    s.add_argument("--word-length", type=int, default=30)
    s.set_defaults(func=cmd_theorem6)

    s = sub.add_parser(
        "golay", parents=[common], help="Golay code, M24 and the dual code module",
        description="info: code invariants and M24 order; fixed-points: Sq1 and Alt^k fixed spaces; "
        "triple-intersection: the Alt^3 fixed vector against |a & b & c| mod 2.",
    )
    s.add_argument("action", choices=("info", "fixed-points", "triple-intersection"))
    s.add_argument("--trials", type=int, default=200)
    s.set_defaults(func=cmd_golay)

    s = sub.add_parser(
        "anomaly", parents=[common], help="Anomaly pairings and umbral consistency checks",
        description="m24: k/o against 1/ell on random M24 elements; umbral: D6^4 and A4^6 tables; "
        "a38 and a64: the 2D8 and Q8 restrictions.",
    )
    s.add_argument("action", choices=("m24", "umbral", "a38", "a64"))
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--word-length", type=int, default=30)
    s.add_argument("--fixtures", help="umbral row file (default: bundled)")
    s.set_defaults(func=cmd_anomaly)

    s = sub.add_parser(
        "csd", parents=[common], help="Restriction of c2 to Z/3 x 2D8 and the k value",
        description="c2 of a Co0 character on Z/3 x 2D8 from its traces on c1, c2, c5, c21, c13.",
    )
    s.add_argument("--traces", required=True, help="t1,t2,t5,t21,t13")
    s.set_defaults(func=cmd_csd)
    return p


def _apply_data_dir(path: str | None) -> None:
    if path is None:
        return
    from .data import ENV_VAR
    from .golay.golay import m24_chain, m24_generators
    from .mckay import q16_table

    os.environ[ENV_VAR] = path
    for f in (q16_table, m24_generators, m24_chain):
        f.cache_clear()


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _apply_data_dir(args.data_dir)
        report = args.func(args)
    except (InputError, Co0Error, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 2
    print(render(report, args.format), file=out)
    return 1 if report["failures"] else 0


def main() -> None:
    sys.exit(run())
