"""Command-line front end.

Exit codes: 0 success, 1 validation/usage error, 2 verification failure
(a theorem check that fails is distinguished from a crash).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .errors import ParseError, SupertreeError
from .families import FamilySpec
from .hypergraph import Hypergraph, canonical_code, from_json_dict
from .matching import matching_polynomial
from .ordering import compare, enumerate_supertrees, enumerate_with_diameter
from .spectral import (
    METHOD_MATCHING,
    METHOD_POWER,
    rho_from_matching_poly,
    rho_power_iteration,
    verify_power_relation,
)
from .theorems import (
    RankingReport,
    random_edge_moving_suite,
    random_edge_release_suite,
    random_graft_distance_suite,
    random_graft_edge_suite,
    random_graft_vertex_suite,
    verify_minima,
    verify_ranking_diameter,
)

_FAMILY_ALIASES = {
    "loose-path": "LoosePath",
    "hyperstar": "Hyperstar",
    "power-of-tree": "PowerOfTree",
    "starred-path": "Tmd_i",
    "core-starred-path": "Tmdr_edge_i",
    "bistarred-path": "TDoublePrime",
    "core-pendent-path": "D",
    "vertex-pendent-path": "PGrave",
    "graft-one-vertex": "GraftOneVertex",
    "graft-adjacent": "GraftAdjacent",
    "graft-distance": "GraftDistanceS",
}

_CLAIM_ALIASES = {
    "power-relation": "2.5",
    "graft-one-vertex": "4.3",
    "graft-adjacent": "4.4",
    "graft-distance": "4.5",
    "edge-release": "4.6",
    "edge-moving": "2.4",
    "closed-forms": "4.8",
    "diameter-ranking": "5.9",
    "minima": "6.2",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are validation errors (exit 1)
        self.print_usage(sys.stderr)
        raise SystemExit(self._usage_exit_code(message))

    @staticmethod
    def _usage_exit_code(message: str) -> int:
        print(f"error: {message}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="supertrees", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_family_flags(p):
        p.add_argument("--family", help="family tag or alias (e.g. loose-path)")
        p.add_argument("--file", help="hypergraph JSON file")
        for flag in ("-m", "-d", "-r", "-i", "-p", "-q", "-s"):
            p.add_argument(flag, type=int)

    p_poly = sub.add_parser("poly", help="print a matching polynomial")
    add_family_flags(p_poly)
    p_poly.add_argument("--format", choices=("text", "json"), default="text")

    p_rho = sub.add_parser("rho", help="spectral radius estimates")
    add_family_flags(p_rho)
    p_rho.add_argument("--method", choices=("matching", "power", "both"), default="both")
    p_rho.add_argument("--tol", type=float, default=1e-10)
    p_rho.add_argument("--format", choices=("text", "json"), default="text")

    p_build = sub.add_parser("build", help="emit a family member as JSON")
    add_family_flags(p_build)
    p_build.add_argument("-o", "--out", help="output path (default stdout)")

    p_cmp = sub.add_parser("compare", help="order two superforests")
    p_cmp.add_argument("--left", required=True, help="hypergraph JSON file")
    p_cmp.add_argument("--right", required=True, help="hypergraph JSON file")
    p_cmp.add_argument("--format", choices=("text", "json"), default="text")

    p_enum = sub.add_parser("enumerate", help="list supertrees up to isomorphism")
    p_enum.add_argument("-m", type=int, required=True)
    p_enum.add_argument("-r", type=int, required=True)
    p_enum.add_argument("-d", type=int, help="restrict to this diameter")
    p_enum.add_argument("--max-edges", type=int, help="enumeration budget override")
    p_enum.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_enum.add_argument("-o", "--out")

    p_verify = sub.add_parser("verify", help="run a theorem check")
    p_verify.add_argument("--theorem", required=True, help="claim id (e.g. 6.2) or alias")
    p_verify.add_argument("-m", type=int)
    p_verify.add_argument("-d", type=int)
    p_verify.add_argument("-r", type=int)
    p_verify.add_argument("--count", type=int, default=50, help="random trials")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-10)
    p_verify.add_argument("--max-edges", type=int)
    p_verify.add_argument("--expect", help="JSON file with the expected ranking codes")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("-o", "--out")

    p_export = sub.add_parser("export", help="rewrite a report file as CSV or JSON")
    p_export.add_argument("--report", required=True)
    p_export.add_argument("--out", required=True)
    p_export.add_argument("--format", choices=("json", "csv"), default="csv")
    return parser


def ingest(path: str) -> Hypergraph:
    """Load and validate a hypergraph JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    for key in ("r", "n", "edges"):
        if key not in data:
            raise ParseError(f"{path}: missing field {key!r}")
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ParseError(f"{path}: 'edges' must be an array")
    for idx, e in enumerate(edges):
        if not isinstance(e, list) or not all(isinstance(v, int) for v in e):
            raise ParseError(f"{path}: edge #{idx} is not an array of integers")
    try:
        return from_json_dict(data)
    except SupertreeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def export_hypergraph(h: Hypergraph, path: str, name: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(h.to_json_dict(name), fh, indent=2)
        fh.write("\n")


def export_report(report: dict, path: str, fmt: str) -> None:
    if fmt == "json":
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
        return
    entries = report.get("entries", [])
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(RankingReport.CSV_HEADER)
        for e in entries:
            writer.writerow(
                [e["rank"], e["canonical_code"], e["family_match"], e["rho"], e["method_gap"]]
            )


def _spec_from_args(args) -> FamilySpec:
    tag = _FAMILY_ALIASES.get(args.family, args.family)
    return FamilySpec(
        family=tag, m=args.m, d=args.d, r=args.r, i=args.i,
        p=getattr(args, "p", None), q=getattr(args, "q", None), s=getattr(args, "s", None),
    )


def _load_graph(args) -> Hypergraph:
    if args.file:
        return ingest(args.file)
    if not args.family:
        raise ParseError("provide either --file or --family")
    return _spec_from_args(args).build().graph


def _cmd_poly(args) -> int:
    phi = matching_polynomial(_load_graph(args))
    if args.format == "json":
        print(json.dumps(phi.to_json_dict()))
    else:
        print(phi.pretty())
    return 0


def _cmd_rho(args) -> int:
    h = _load_graph(args)
    out = {}
    if args.method in ("matching", "both"):
        out["matching"] = rho_from_matching_poly(matching_polynomial(h)).to_json_dict()
    if args.method in ("power", "both"):
        out["power"] = rho_power_iteration(h, args.tol).to_json_dict()
    if len(out) == 2:
        out["gap"] = abs(out["matching"]["rho"] - out["power"]["rho"])
    if args.format == "json":
        print(json.dumps(out))
    else:
        for key in ("matching", "power"):
            if key in out:
                r = out[key]
                print(f"{r['method']}: rho = {r['rho']:.12f} (error <= {r['error_bound']:.2e}, {r['iterations']} iterations)")
        if "gap" in out:
            print(f"gap = {out['gap']:.3e}")
    return 0


def _cmd_build(args) -> int:
    h = _load_graph(args)
    if args.out:
        export_hypergraph(h, args.out, name=args.family)
    else:
        print(json.dumps(h.to_json_dict(args.family)))
    return 0


def _cmd_compare(args) -> int:
    left = ingest(args.left)
    right = ingest(args.right)
    verdict = compare(left, right)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "relation": verdict.relation.value,
                    "difference": verdict.difference.pretty(),
                    "threshold": verdict.threshold,
                }
            )
        )
    else:
        print(verdict.relation.value)
        print(f"difference: {verdict.difference.pretty()}")
        print(f"threshold rho: {verdict.threshold:.12f}")
    return 0


def _cmd_enumerate(args) -> int:
    if args.d is not None:
        pool = enumerate_with_diameter(args.m, args.d, args.r, args.max_edges)
    else:
        pool = enumerate_supertrees(args.m, args.r, args.max_edges)
    rows = []
    for h in pool:
        rows.append(
            {
                "canonical_code": canonical_code(h).decode(),
                "n": h.n,
                "m": h.m,
                "rho": rho_from_matching_poly(matching_polynomial(h)).rho if h.m else 0.0,
            }
        )
    text: str
    if args.format == "json":
        text = json.dumps(rows, indent=2)
    elif args.format == "csv":
        lines = ["canonical_code,n,m,rho"]
        lines += [f"{r['canonical_code']},{r['n']},{r['m']},{r['rho']!r}" for r in rows]
        text = "\n".join(lines)
    else:
        lines = [f"{i + 1}\trho={r['rho']:.10f}\t{r['canonical_code']}" for i, r in enumerate(rows)]
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _require(args, *names) -> list[int]:
    out = []
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise ParseError(f"--theorem {args.theorem} needs -{name}")
        out.append(value)
    return out


def _run_verify(args) -> tuple[bool, dict]:
    claim = _CLAIM_ALIASES.get(args.theorem, args.theorem)
    if claim in ("5.9", "5.10"):
        m, d, r = _require(args, "m", "d", "r")
        report = verify_ranking_diameter(m, d, r, args.max_edges)
        return report.passed, report.to_json_dict()
    if claim in ("6.1", "6.2"):
        m, r = _require(args, "m", "r")
        report = verify_minima(m, r, args.max_edges)
        return report.passed, report.to_json_dict()
    if claim == "2.5":
        limit = args.m if args.m is not None else 5
        results = []
        for m_t in range(1, limit + 1):
            for tree in enumerate_supertrees(m_t, 2, max_edges=max(limit, 7)):
                rep = verify_power_relation(tree)
                results.append(rep.passed)
        passed = all(results)
        return passed, {"kind": "power-relation", "trees": len(results), "passed": passed}
    suites = {
        "4.3": random_graft_vertex_suite,
        "4.4": random_graft_edge_suite,
        "4.5": random_graft_distance_suite,
        "4.6": random_edge_release_suite,
        "2.4": random_edge_moving_suite,
    }
    if claim == "4.8":
        from .acceptance_support import closed_form_sweep

        failures = closed_form_sweep(max_m=args.m or 8)
        return not failures, {"kind": "closed-forms", "failures": failures}
    if claim not in suites:
        raise ParseError(f"unknown theorem id {args.theorem!r}")
    results = suites[claim](args.count, args.seed)
    failures = [r.name for r in results if not r.passed]
    return not failures, {
        "kind": f"claim-{claim}",
        "trials": len(results),
        "failures": failures,
        "passed": not failures,
    }


def _cmd_verify(args) -> int:
    passed, report = _run_verify(args)
    if args.expect:
        try:
            with open(args.expect, "r", encoding="utf-8") as fh:
                expected_codes = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"{args.expect}: {exc}") from exc
        got = [e["canonical_code"] for e in report.get("entries", [])]
        head = got[: len(expected_codes)]
        if head != list(expected_codes):
            passed = False
            report["expect_mismatch"] = {"expected": expected_codes, "got": head}
    report["passed"] = passed
    if args.out:
        export_report(report, args.out, "json" if args.out.endswith(".json") else "csv")
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(f"{'PASS' if passed else 'FAIL'} theorem {args.theorem}")
        for check in report.get("checks", []):
            print(f"  {'PASS' if check['passed'] else 'FAIL'} {check['name']}")
    return 0 if passed else 2


def _cmd_export(args) -> int:
    try:
        with open(args.report, "r", encoding="utf-8") as fh:
            report = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{args.report}: {exc}") from exc
    export_report(report, args.out, args.format)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "poly": _cmd_poly,
        "rho": _cmd_rho,
        "build": _cmd_build,
        "compare": _cmd_compare,
        "enumerate": _cmd_enumerate,
        "verify": _cmd_verify,
        "export": _cmd_export,
    }
    try:
        return handlers[args.verb](args)
    except SupertreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
