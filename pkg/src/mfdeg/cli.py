"""Command line interface.

Subcommands:
  compute   build a group, compute its character table, c(G) and optionally mu(G)
  verify    run a reproduction suite of value and property checks
  catalog   list the built-in group families

Exit codes: 0 success, 1 check/computation failure, 2 usage error,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from ._tc_core import BudgetExceeded
from .catalog import CATALOG, expand_catalog, expected_values
from .chartab import character_table, check_orthogonality
from .permdeg import realize_permutation, solve_mu
from .presentation import PresentationError, enumerate_regular, parse_presentation
from .quasiperm import solve_c
from .verify import SUITES, run_corpus

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

ENUM_BUDGET = 200_000
MU_BUDGET = 1_000_000


def _parse_params(pairs):
    params = {}
    for item in pairs or []:
        if "=" not in item:
            raise ValueError("--param expects name=value, got %r" % item)
        k, v = item.split("=", 1)
        params[k.strip()] = int(v)
    return params


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="mfd",
        description="Exact minimal faithful quasi-permutation and permutation "
        "degrees of finite p-groups.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute invariants of one group")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="catalog family id (see `mfd catalog`)")
    src.add_argument("--file", help="path to a presentation file")
    c.add_argument("--p", type=int, help="prime for a catalog family")
    c.add_argument(
        "--param",
        action="append",
        metavar="NAME=VALUE",
        help="family parameter (repeatable)",
    )
    c.add_argument("--mu", action="store_true", help="also compute mu(G) and a minimal action")
    c.add_argument(
        "--exhaustive-c",
        action="store_true",
        help="search all irredundant Galois-orbit subsets for c(G)",
    )
    c.add_argument("--dump-table", action="store_true", help="print the character table")
    c.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run a reproduction suite")
    v.add_argument("--suite", choices=sorted(SUITES), default="smoke")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument(
        "--timeout",
        type=int,
        default=None,
        metavar="SECONDS",
        help="per-group wall-clock budget; exceeded checks are skipped, not failed",
    )
    v.add_argument("--format", choices=("text", "json"), default="text")

    g = sub.add_parser("catalog", help="list built-in group families")
    g.add_argument("--format", choices=("text", "json"), default="text")
    return ap


# ---- compute ---------------------------------------------------------------


def _compute_report(args):
    if args.group is not None:
        params = _parse_params(args.param)
        spec = expand_catalog(args.group, args.p, params)
        label = args.group
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            spec = parse_presentation(fh.read())
        params, label = {}, args.file
    t0 = time.time()
    G = enumerate_regular(spec, limit=ENUM_BUDGET)
    table = character_table(G)
    assert check_orthogonality(table)
    csol = solve_c(table, exhaustive=args.exhaustive_c)
    report = {
        "group": label,
        "p": spec.meta.get("p"),
        "params": params,
        "order": G.order,
        "nclasses": table.nclasses,
        "exponent": table.exponent,
        "degrees": sorted({ch.degree for ch in table.chars}),
        "c": csol.value,
        "c_witness": {
            "m": csol.m,
            "xi_degree": csol.xi_degree,
            "orbit_count": csol.orbit_count,
            "member_degrees": [s.member_degree for s in csol.sums],
            "orbit_sizes": [s.orbit_size for s in csol.sums],
            "has_linear_member": [s.has_linear_member for s in csol.sums],
            "exhaustive": csol.exhaustive,
        },
    }
    if args.group is not None:
        claims = expected_values(args.group, spec.meta["p"], params)
        mismatches = {}
        for name, (value, claim) in claims.items():
            if name == "c":
                got = csol.value
            elif name == "order":
                got = G.order
            else:
                continue
            if got != value:
                mismatches[name] = {"computed": got, "claimed": value, "claim": claim}
        report["claim_mismatches"] = mismatches
    if args.mu:
        musol = solve_mu(G, budget=MU_BUDGET, upper_hint=csol.value)
        degree, _perms, cycles = realize_permutation(G, musol)
        report["mu"] = musol.value
        report["mu_witness"] = {
            "indexes": list(musol.indexes),
            "orbit_count": musol.orbit_count,
            "search_nodes": musol.nodes,
            "degree": degree,
            "generator_cycles": cycles,
        }
    report["seconds"] = round(time.time() - t0, 3)
    dump = table.dump() if args.dump_table else None
    return report, dump


def _print_compute(report, dump, fmt, out):
    if fmt == "json":
        if dump is not None:
            report = dict(report, table=dump)
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    w = report["c_witness"]
    out.write("group     %s  p=%s %s\n" % (
        report["group"],
        report["p"],
        " ".join("%s=%s" % kv for kv in sorted(report["params"].items())),
    ))
    out.write("order     %d   classes %d   exponent %d\n"
              % (report["order"], report["nclasses"], report["exponent"]))
    out.write("degrees   {%s}\n" % ", ".join(map(str, report["degrees"])))
    out.write("c(G)      %d   (xi(1)=%d, m=%d, %d orbit(s), member degrees %s%s)\n" % (
        report["c"], w["xi_degree"], w["m"], w["orbit_count"],
        w["member_degrees"], ", exhaustive" if w["exhaustive"] else "",
    ))
    if "mu" in report:
        mw = report["mu_witness"]
        out.write("mu(G)     %d   (stabilizer indexes %s, %d nodes)\n"
                  % (report["mu"], mw["indexes"], mw["search_nodes"]))
        for i, cyc in enumerate(mw["generator_cycles"]):
            out.write("  action of generator %d: %s\n" % (i + 1, cyc))
    for name, m in report.get("claim_mismatches", {}).items():
        out.write("MISMATCH  %s computed=%s claimed=%s (%s)\n"
                  % (name, m["computed"], m["claimed"], m["claim"]))
    if dump is not None:
        out.write(dump + "\n")
    out.write("elapsed   %.3fs\n" % report["seconds"])


# ---- verify ----------------------------------------------------------------


def _print_verify(results, fmt, out):
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in results:
        counts[r.status] += 1
    if fmt == "json":
        payload = {
            "results": [
                {
                    "check": r.check_id,
                    "group": r.group_id,
                    "claim": r.claim,
                    "computed": _jsonable(r.computed),
                    "expected": _jsonable(r.expected),
                    "status": r.status,
                    "reason": r.reason,
                    "seconds": round(r.seconds, 3),
                }
                for r in results
            ],
            "summary": counts,
        }
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
        out.write("summary: %d pass, %d fail, %d skipped\n"
                  % (counts["pass"], counts["fail"], counts["skipped"]))
    return counts["fail"]


def _jsonable(x):
    if isinstance(x, tuple):
        return list(x)
    if x is None or isinstance(x, (bool, int, float, str, list)):
        return x
    return repr(x)


# ---- catalog ---------------------------------------------------------------


def _print_catalog(fmt, out):
    rows = []
    for fam in sorted(CATALOG):
        entry = CATALOG[fam]
        rows.append(
            {
                "family": fam,
                "description": entry.description,
                "min_p": entry.min_p,
                "default_p": entry.default_p,
                "params": list(entry.param_schema),
            }
        )
    if fmt == "json":
        json.dump(rows, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        for row in rows:
            ps = " ".join(sorted(row["params"]))
            out.write("%-14s p>=%-2d (default %d)  %s%s\n" % (
                row["family"], row["min_p"], row["default_p"],
                row["description"], "  [params %s]" % ps if ps else "",
            ))


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        if args.command == "compute":
            report, dump = _compute_report(args)
            _print_compute(report, dump, args.format, out)
            return EXIT_FAIL if report.get("claim_mismatches") else EXIT_OK
        if args.command == "verify":
            results = run_corpus(args.suite, workers=args.threads, timeout=args.timeout)
            nfail = _print_verify(results, args.format, out)
            return EXIT_FAIL if nfail else EXIT_OK
        if args.command == "catalog":
            _print_catalog(args.format, out)
            return EXIT_OK
    except BudgetExceeded as e:
        out.write("budget exceeded: %s\n" % e)
        return EXIT_BUDGET
    except (ValueError, PresentationError, OSError) as e:
        out.write("error: %s\n" % e)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
