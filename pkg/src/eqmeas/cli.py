"""Command-line front end: verification sweeps, measures, series, enumeration.

Exit codes: 0 success or all checks passed, 1 some check failed, 2 usage
error.  JSON output is deterministic byte for byte given the same command,
flags, and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .edge import (
    edge_measure,
    jack_measure,
    verify_corner_poly,
    verify_growth_ratios,
    verify_measures_match,
    verify_measures_signed,
    verify_swap_quotient,
)
from .partitions import Partition, PlanePartition, enumerate_partitions, enumerate_plane_partitions
from .pool import thread_cap
from .series import macmahon_series
from .vertex import vertex_measure, verify_partition_function


class CliUsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eqmeas", description="Exact measures on partitions and plane partitions, with identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--output", choices=("text", "json"), default="text", help="report format")

    verify = sub.add_parser("verify", help="run a verification sweep")
    vsub = verify.add_subparsers(dest="target", required=True)

    v_edge = vsub.add_parser("edge", parents=[output], help="hook measure vs edge measure, all partitions up to a size")
    v_edge.add_argument("--max-size", type=int, default=12)

    v_ratios = vsub.add_parser("ratios", parents=[output], help="closed-form growth ratios vs direct quotients")
    v_ratios.add_argument("--max-size", type=int, default=10)

    v_lemmas = vsub.add_parser("lemmas", parents=[output], help="corner polynomial and swap-quotient checks")
    v_lemmas.add_argument("--max-size", type=int, default=10)
    v_lemmas.add_argument("--trials", type=int, default=200)
    v_lemmas.add_argument("--seed", type=int, default=0)

    v_vertex = vsub.add_parser("vertex", parents=[output], help="plane-partition generating function vs closed form")
    v_vertex.add_argument("--order", type=int, default=6)
    v_vertex.add_argument("--points", type=int, default=5)
    v_vertex.add_argument("--seed", type=int, default=0)

    measure = sub.add_parser("measure", help="print one measure value in factored form")
    msub = measure.add_subparsers(dest="target", required=True)
    for name, helptext in (("jack", "hook-product measure of a partition"), ("mnop", "edge measure of a partition")):
        mp = msub.add_parser(name, parents=[output], help=helptext)
        mp.add_argument("partition", help="comma-separated parts, empty string for the empty partition")
    m_vertex = msub.add_parser("vertex", parents=[output], help="vertex measure of a plane partition")
    m_vertex.add_argument("plane_partition", help="semicolon-separated rows of column heights, e.g. 2,1;1")

    series = sub.add_parser("series", help="series utilities")
    ssub = series.add_subparsers(dest="target", required=True)
    s_mac = ssub.add_parser("macmahon", parents=[output], help="plane-partition generating function coefficients")
    s_mac.add_argument("--order", type=int, default=8)

    enum = sub.add_parser("enumerate", help="exhaustive enumeration")
    esub = enum.add_subparsers(dest="target", required=True)
    for name in ("partitions", "plane-partitions"):
        ep = esub.add_parser(name, parents=[output])
        ep.add_argument("--size", type=int, required=True)
        ep.add_argument("--count-only", action="store_true")
    return parser


def _report_text(report_dict: dict) -> list[str]:
    lines = ["%s: checked %d, passed %d, failures %d" % (report_dict["name"], report_dict["checked"], report_dict["passed"], len(report_dict["failures"]))]
    for failure in report_dict["failures"]:
        lines.append("  FAIL %(partition)s: %(lhs)s != %(rhs)s" % failure)
    for note in report_dict.get("notes", []):
        lines.append("  note: %s" % note)
    return lines


def _run_verify(args, jobs: int):
    if args.target == "edge":
        if args.max_size < 1:
            raise CliUsageError("--max-size must be at least 1")
        report = verify_measures_match(args.max_size, jobs=jobs)
        signed = verify_measures_signed(args.max_size, jobs=jobs)
        payload = {
            "schema": "1",
            "command": "verify edge",
            "max_size": args.max_size,
            "report": report.json_dict(),
            "signed_report": signed.json_dict(),
        }
        lines = _report_text(report.json_dict()) + _report_text(signed.json_dict())
        ok = report.ok and signed.ok
    elif args.target == "ratios":
        if args.max_size < 1:
            raise CliUsageError("--max-size must be at least 1")
        reports = verify_growth_ratios(args.max_size, jobs=jobs)
        payload = {
            "schema": "1",
            "command": "verify ratios",
            "max_size": args.max_size,
            "reports": {key: rep.json_dict() for key, rep in reports.items()},
        }
        lines = []
        for rep in reports.values():
            lines.extend(_report_text(rep.json_dict()))
        ok = all(rep.ok for rep in reports.values())
    elif args.target == "lemmas":
        if args.max_size < 1 or args.trials < 1:
            raise CliUsageError("--max-size and --trials must be at least 1")
        corner = verify_corner_poly(args.max_size)
        swap = verify_swap_quotient(args.trials, args.seed)
        payload = {
            "schema": "1",
            "command": "verify lemmas",
            "max_size": args.max_size,
            "trials": args.trials,
            "seed": args.seed,
            "reports": {"corner_poly": corner.json_dict(), "swap_quotient": swap.json_dict()},
        }
        lines = _report_text(corner.json_dict()) + _report_text(swap.json_dict())
        ok = corner.ok and swap.ok
    else:  # vertex
        if args.order < 1 or args.points < 1:
            raise CliUsageError("--order and --points must be at least 1")
        zreport = verify_partition_function(args.order, args.points, args.seed)
        payload = {
            "schema": "1",
            "command": "verify vertex",
            "order": args.order,
            "points": args.points,
            "seed": args.seed,
            "report": zreport.json_dict(),
        }
        lines = [
            "partition function check: order %d, %d points, sign %s" % (args.order, args.points, zreport.sign),
            "matches per point: %s" % " ".join(str(b) for b in zreport.per_point),
        ]
        ok = zreport.ok
    lines.append("result: %s" % ("PASS" if ok else "FAIL"))
    return payload, lines, 0 if ok else 1


def _run_measure(args):
    if args.target in ("jack", "mnop"):
        try:
            lam = Partition.from_text(args.partition)
        except ValueError as exc:
            raise CliUsageError(str(exc))
        value = jack_measure(lam) if args.target == "jack" else edge_measure(lam)
        payload = {
            "schema": "1",
            "command": "measure %s" % args.target,
            "partition": lam.text(),
            "measure": value.json_dict(),
        }
    else:
        try:
            pi = PlanePartition.from_text(args.plane_partition)
        except ValueError as exc:
            raise CliUsageError(str(exc))
        value = vertex_measure(pi)
        payload = {
            "schema": "1",
            "command": "measure vertex",
            "plane_partition": pi.text(),
            "measure": value.json_dict(),
        }
    return payload, [value.text()], 0


def _run_series(args):
    if args.order < 0:
        raise CliUsageError("--order must be nonnegative")
    coeffs = macmahon_series(args.order).coeffs
    payload = {
        "schema": "1",
        "command": "series macmahon",
        "order": args.order,
        "coefficients": [str(c) for c in coeffs],
    }
    lines = ["q^%d: %s" % (n, c) for n, c in enumerate(coeffs)]
    return payload, lines, 0


def _run_enumerate(args):
    if args.size < 0:
        raise CliUsageError("--size must be nonnegative")
    if args.target == "partitions":
        items = [lam.text() for lam in enumerate_partitions(args.size)]
    else:
        items = [pi.text() for pi in enumerate_plane_partitions(args.size)]
    payload = {
        "schema": "1",
        "command": "enumerate %s" % args.target,
        "size": args.size,
        "count": len(items),
    }
    if args.count_only:
        lines = [str(len(items))]
    else:
        payload["items"] = items
        lines = items + ["count: %d" % len(items)]
    return payload, lines, 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        jobs = thread_cap()
        if args.command == "verify":
            payload, lines, code = _run_verify(args, jobs)
        elif args.command == "measure":
            payload, lines, code = _run_measure(args)
        elif args.command == "series":
            payload, lines, code = _run_series(args)
        else:
            payload, lines, code = _run_enumerate(args)
    except (CliUsageError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in lines:
            print(line)
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
