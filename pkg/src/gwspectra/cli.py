"""Command line interface.

Subcommands:
    spectrum   -- exact and/or numeric spectrum of one generalized wheel
    classify   -- integrality verdicts with witnesses for one wheel
    enumerate  -- all integral wheels over a parameter grid
    verify     -- run a named cross-validation suite

Exit codes: 0 success, 1 usage or parameter error, 2 verification failure.
Records render as table (default), json, or csv from the same data.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .closed_forms import gw_dl_spectrum, gw_dq_spectrum
from .eigenvalues import CosineTerm, IntegerValue, Spectrum, Surd, numeric_value
from .graphs import (
    WheelParams,
    adjacency_matrix,
    distance_matrix,
    dl_matrix,
    dq_matrix,
    generalized_wheel,
)
from .integrality import (
    FAMILY_LABEL,
    classify_all_dq,
    enumerate_alpha_solutions,
    is_dq_integral,
    is_gw_dl_integral,
)
from .oracle import compare_spectra, eigenvalues_symmetric
from .verify import SUITES

__all__ = ["main", "build_parser"]

_MATRIX_BUILDERS = {
    "adj": adjacency_matrix,
    "dist": distance_matrix,
    "dl": dl_matrix,
    "dq": dq_matrix,
}

_EXACT_SPECTRA = {"dq": gw_dq_spectrum, "dl": gw_dl_spectrum}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gwspectra", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p_spec = sub.add_parser("spectrum", help="spectrum of one generalized wheel")
    p_spec.add_argument("--a", type=int, required=True)
    p_spec.add_argument("--m", type=int, required=True)
    p_spec.add_argument("--n", type=int, required=True)
    p_spec.add_argument("--matrix", choices=tuple(_MATRIX_BUILDERS), required=True)
    p_spec.add_argument("--mode", choices=("exact", "numeric", "both"), default=None,
                        help="default: exact for dl/dq, numeric for adj/dist")
    add_format(p_spec)
    p_spec.set_defaults(func=_cmd_spectrum)

    p_cls = sub.add_parser("classify", help="integrality verdicts for one wheel")
    p_cls.add_argument("--a", type=int, required=True)
    p_cls.add_argument("--m", type=int, required=True)
    p_cls.add_argument("--n", type=int, required=True)
    p_cls.add_argument("--which", choices=("dq", "dl", "both"), default="both")
    add_format(p_cls)
    p_cls.set_defaults(func=_cmd_classify)

    p_enum = sub.add_parser("enumerate", help="all integral wheels over a grid")
    p_enum.add_argument("--which", choices=("dq", "dl"), required=True)
    p_enum.add_argument("--a-max", type=int, required=True)
    p_enum.add_argument("--m-max", type=int, required=True)
    p_enum.add_argument("--n-values", type=str, required=True,
                        help="comma separated cycle lengths, e.g. 3,4,6")
    p_enum.add_argument("--method", choices=("scan", "alpha"), default="scan")
    add_format(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_ver = sub.add_parser("verify", help="run a cross-validation suite")
    p_ver.add_argument("--suite", required=True, choices=tuple(SUITES))
    p_ver.add_argument("--max-order", type=int, default=120)
    p_ver.add_argument("--seed", type=int, default=0)
    add_format(p_ver)
    p_ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


# ---------------------------------------------------------------- spectrum

def _eigenvalue_record(eig, mult: int) -> dict:
    if isinstance(eig, IntegerValue):
        return {"kind": "integer", "value": eig.value, "multiplicity": mult}
    if isinstance(eig, Surd):
        return {"kind": "surd", "u": eig.u, "t": eig.t, "sign": eig.sign,
                "multiplicity": mult}
    if isinstance(eig, CosineTerm):
        return {"kind": "cosine", "c0": eig.c0, "j": eig.j, "n": eig.n,
                "multiplicity": mult}
    raise TypeError(f"not an eigenvalue form: {eig!r}")


def _describe(eig) -> str:
    if isinstance(eig, IntegerValue):
        return str(eig.value)
    if isinstance(eig, Surd):
        op = "+" if eig.sign > 0 else "-"
        return f"({eig.u} {op} sqrt({eig.t}))/2"
    return f"{eig.c0} - 2cos(2pi*{eig.j}/{eig.n})"


def _spectrum_record(params: WheelParams, matrix_kind: str, exact: Spectrum) -> dict:
    return {
        "order": exact.order,
        "graph": {"a": params.a, "m": params.m, "n": params.n},
        "matrix": matrix_kind,
        "eigenvalues": [_eigenvalue_record(e, q) for e, q in exact.items],
    }


def _cmd_spectrum(args) -> int:
    params = WheelParams(args.a, args.m, args.n)
    mode = args.mode or ("exact" if args.matrix in _EXACT_SPECTRA else "numeric")
    if mode in ("exact", "both") and args.matrix not in _EXACT_SPECTRA:
        raise _UsageError(
            f"no exact closed form for --matrix {args.matrix}; use --mode numeric"
        )

    exact = _EXACT_SPECTRA[args.matrix](params) if mode in ("exact", "both") else None
    numeric = None
    if mode in ("numeric", "both"):
        numeric = eigenvalues_symmetric(_MATRIX_BUILDERS[args.matrix](generalized_wheel(params)))

    if mode == "numeric":
        record = {
            "order": numeric.order,
            "graph": {"a": params.a, "m": params.m, "n": params.n},
            "matrix": args.matrix,
            "values": list(numeric.values),
            "residual": numeric.residual,
        }
    else:
        record = _spectrum_record(params, args.matrix, exact)
        if mode == "both":
            record["max_deviation"] = compare_spectra(exact, numeric, 1e-7).max_deviation

    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        print(_spectrum_csv(record, exact), end="")
    else:
        _print_spectrum_table(record, exact)
    return 0


def _spectrum_csv(record: dict, exact: Spectrum | None) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    if exact is None:
        writer.writerow(["value"])
        for v in record["values"]:
            writer.writerow([repr(v)])
    else:
        writer.writerow(["kind", "value", "multiplicity", "u", "t", "sign", "c0", "j", "n"])
        for (eig, mult), rec in zip(exact.items, record["eigenvalues"]):
            row = [rec["kind"], repr(numeric_value(eig)), mult] + [""] * 6
            if rec["kind"] == "surd":
                row[3:6] = [rec["u"], rec["t"], rec["sign"]]
            elif rec["kind"] == "cosine":
                row[6:9] = [rec["c0"], rec["j"], rec["n"]]
            writer.writerow(row)
    return out.getvalue()


def _print_spectrum_table(record: dict, exact: Spectrum | None):
    g = record["graph"]
    print(f"{record['matrix']} spectrum of GW({g['a']},{g['m']},{g['n']}), order {record['order']}")
    if exact is None:
        for v in record["values"]:
            print(f"  {v:18.12g}")
        print(f"residual {record['residual']:.3e}")
        return
    for eig, mult in exact.items:
        print(f"  {numeric_value(eig):18.12g}  x{mult:<4d} {_describe(eig)}")
    if "max_deviation" in record:
        print(f"max |exact - numeric| = {record['max_deviation']:.3e}")


# ---------------------------------------------------------------- classify

def _classify_record(params: WheelParams, which: str) -> dict:
    record: dict = {"graph": {"a": params.a, "m": params.m, "n": params.n}}
    if which in ("dq", "both"):
        witness = is_dq_integral(params)
        label = None
        if witness.verdict:
            label = FAMILY_LABEL if (params.a, params.n) == (1, 3) else \
                f"sporadic ({params.a},{params.m},{params.n})"
        record["dq"] = {
            "verdict": witness.verdict,
            "t": witness.t,
            "c": witness.c,
            "n_ok": witness.n_ok,
            "case": label,
        }
    if which in ("dl", "both"):
        record["dl"] = {"verdict": is_gw_dl_integral(params)}
    return record


def _cmd_classify(args) -> int:
    params = WheelParams(args.a, args.m, args.n)
    record = _classify_record(params, args.which)
    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["which", "a", "m", "n", "t", "c", "verdict", "case"])
        if "dq" in record:
            dq = record["dq"]
            writer.writerow(["dq", params.a, params.m, params.n, dq["t"],
                             "" if dq["c"] is None else dq["c"], dq["verdict"],
                             dq["case"] or ""])
        if "dl" in record:
            writer.writerow(["dl", params.a, params.m, params.n, "", "",
                             record["dl"]["verdict"],
                             f"n={params.n}" if record["dl"]["verdict"] else ""])
        print(out.getvalue(), end="")
    else:
        name = f"GW({params.a},{params.m},{params.n})"
        if "dq" in record:
            dq = record["dq"]
            if dq["verdict"]:
                print(f"{name} dq: integral, t = {dq['t']} = {dq['c']}^2, case {dq['case']}")
            else:
                reason = []
                if dq["c"] is None:
                    reason.append(f"t = {dq['t']} not a perfect square")
                if not dq["n_ok"]:
                    reason.append(f"n = {params.n} not in {{3, 4, 6}}")
                print(f"{name} dq: not integral ({'; '.join(reason)})")
            if "dl" in record:
                verdict = record["dl"]["verdict"]
                print(f"{name} dl: {'integral' if verdict else 'not integral'} (n = {params.n})")
        elif "dl" in record:
            verdict = record["dl"]["verdict"]
            print(f"{name} dl: {'integral' if verdict else 'not integral'} (n = {params.n})")
    return 0


# --------------------------------------------------------------- enumerate

def _enumerate_rows(args, n_values) -> tuple[bool, list[dict]]:
    rows = []
    if args.which == "dl":
        for a in range(1, args.a_max + 1):
            for m in range(1, args.m_max + 1):
                for n in n_values:
                    if is_gw_dl_integral(WheelParams(a, m, n)):
                        rows.append({"a": a, "m": m, "n": n, "t": None, "c": None,
                                     "verdict": True, "case": f"n={n}"})
        return False, rows

    if args.method == "alpha":
        if args.a_max < 2:
            raise _UsageError("--method alpha needs --a-max >= 2")
        triples = set()
        for a in range(2, args.a_max + 1):
            for n in n_values:
                if n not in (3, 4, 6):
                    continue
                for sol in enumerate_alpha_solutions(a, n):
                    if sol.m <= args.m_max:
                        triples.add((a, sol.m, n))
        family = False
        results = []
        for a, m, n in sorted(triples):
            witness = is_dq_integral(WheelParams(a, m, n))
            results.append({"a": a, "m": m, "n": n, "t": witness.t, "c": witness.c,
                            "verdict": True, "case": f"sporadic ({a},{m},{n})"})
        return family, results

    scan = classify_all_dq(args.a_max, args.m_max, n_values)
    for r in scan.sporadics:
        rows.append({"a": r.params.a, "m": r.params.m, "n": r.params.n,
                     "t": r.dq.t, "c": r.dq.c, "verdict": True, "case": r.matched_case})
    return scan.has_infinite_family, rows


def _cmd_enumerate(args) -> int:
    try:
        n_values = tuple(sorted({int(part) for part in args.n_values.split(",")}))
    except ValueError:
        raise _UsageError(f"bad --n-values {args.n_values!r}")
    if args.a_max < 1 or args.m_max < 1 or not n_values or min(n_values) < 3:
        raise _UsageError("bounds must be >= 1 and cycle lengths >= 3")

    family, rows = _enumerate_rows(args, n_values)
    record = {
        "which": args.which,
        "method": args.method,
        "a_max": args.a_max,
        "m_max": args.m_max,
        "n_values": list(n_values),
        "infinite_family": family,
        "rows": rows,
    }
    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["a", "m", "n", "t", "c", "verdict", "case"])
        if family:
            writer.writerow([1, "*", 3, "", "", True, FAMILY_LABEL])
        for row in rows:
            writer.writerow([row["a"], row["m"], row["n"],
                             "" if row["t"] is None else row["t"],
                             "" if row["c"] is None else row["c"],
                             row["verdict"], row["case"]])
        print(out.getvalue(), end="")
    else:
        print(f"{args.which} integral wheels, a <= {args.a_max}, m <= {args.m_max}, "
              f"n in {list(n_values)} ({args.method})")
        if family:
            print(f"  a=1 n=3 m=*   (unbounded family: every m)")
        for row in rows:
            witness = f"  t={row['t']}={row['c']}^2" if row["t"] is not None else ""
            print(f"  a={row['a']} n={row['n']} m={row['m']}{witness}")
        if not rows and not family:
            print("  (none)")
    return 0


# ------------------------------------------------------------------ verify

def _cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    if args.suite in ("join-dq", "join-dl", "gw-dq", "gw-dl") and args.max_order < 4:
        raise _UsageError("--max-order must be >= 4 for spectral suites")
    checks = suite(max_order=args.max_order, seed=args.seed)
    record = {
        "suite": args.suite,
        "passed": all(c.passed for c in checks),
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in checks],
    }
    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["name", "passed", "detail"])
        for c in record["checks"]:
            writer.writerow([c["name"], c["passed"], c["detail"]])
        print(out.getvalue(), end="")
    else:
        for c in record["checks"]:
            print(f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}: {c['detail']}")
        print(f"suite {args.suite}: "
              f"{sum(c['passed'] for c in record['checks'])}/{len(record['checks'])} checks passed")
    return 0 if record["passed"] else 2


if __name__ == "__main__":
    sys.exit(main())
