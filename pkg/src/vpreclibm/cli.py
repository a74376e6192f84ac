"""Command-line front end: build the interposer, explore a subject, report.

Exit status for ``explore``: 0 on success, 1 for usage or setup errors, 2
when the final validation run fails under the optimized config.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from .explorer import CorrectnessCheck, ExplorerError, explore
from .interposer import build_interposer
from .profiles import parse_config, parse_profile, write_config
from .report import build_report, render_charts, suggest_sincos, write_csv


def _cmd_build(args) -> int:
    path = build_interposer(out_dir=args.out_dir, force=True)
    print(path)
    return 0


def _cmd_explore(args) -> int:
    if args.checker:
        check = CorrectnessCheck(kind="external", checker_cmd=args.checker)
    else:
        check = CorrectnessCheck(kind="numeric", tol_rel=args.tol_rel, tol_abs=args.tol_abs)

    workdir = args.workdir or tempfile.mkdtemp(prefix="vprec-explore-")
    try:
        so_path = args.interposer or build_interposer()
        result = explore(
            subject_cmd=args.subject,
            check=check,
            workdir=workdir,
            interposer_so=so_path,
            range_margin=args.range_margin,
            explore_range=args.explore_range,
            certificates=not args.no_certificates,
            max_sites=args.max_sites,
            profile_path=args.profile,
            log=lambda s: print(s, file=sys.stderr),
        )
    except ExplorerError as e:
        print(f"explore: {e}", file=sys.stderr)
        return 1

    out_config = args.output_config or os.path.join(workdir, "optimized-config.txt")
    with open(out_config, "w") as f:
        write_config(result.config, f)
    trial_log = args.trial_log or os.path.join(workdir, "trials.log")
    with open(trial_log, "w") as f:
        for entry in result.trial_log:
            f.write(entry.line() + "\n")

    n = len(result.sites)
    total = result.total_optimized_bits
    print(f"explored {n} call-sites; sum of optimized precisions {total} / {52 * n} bits")
    for w in result.warnings:
        print(f"warning: {w}", file=sys.stderr)
    print(f"optimized config: {out_config}")
    print(f"trial log: {trial_log}")
    prof = args.profile or os.path.join(workdir, "subject.profile")
    print(f"report inputs: --profile {prof} --config {out_config}")
    if not result.validation_passed:
        print("explore: final validation run FAILED under the optimized config", file=sys.stderr)
        return 2
    return 0


def _cmd_report(args) -> int:
    with open(args.profile) as f:
        records = parse_profile(f)
    with open(args.config) as f:
        config = parse_config(f)
    rows, warnings = build_report(records, config, top_n=args.top)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.csv:
        with open(args.csv, "w") as f:
            write_csv(rows, f)
        print(f"csv: {args.csv}")
    else:
        write_csv(rows, sys.stdout)
    if args.svg_dir:
        paths = render_charts(rows, args.svg_dir)
        for name, path in sorted(paths.items()):
            print(f"svg {name}: {path}")
    for s, c in suggest_sincos(records):
        print(
            f"suggestion: sites 0x{s.site_id:x} (sin) and 0x{c.site_id:x} (cos) make "
            f"{s.calls} calls each over identical operand intervals; a fused sincos "
            f"call would halve their combined workload (heuristic: interval equality "
            f"is not a co-location proof)"
        )
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def main(argv: list[str] | None = None) -> int:
    parser = _Parser(
        prog="vpreclibm",
        description="Profile and tune per-call-site output precision of libm calls",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="compile the preloadable interposer")
    p_build.add_argument("--out-dir", default=None, help="directory for the shared object")
    p_build.set_defaults(func=_cmd_build)

    p_explore = sub.add_parser("explore", help="search minimal per-call-site precisions")
    p_explore.add_argument("--subject", required=True, help="subject command (run via the shell)")
    p_explore.add_argument("--workdir", default=None, help="working directory for runs and outputs")
    p_explore.add_argument("--tol-rel", type=float, default=0.0, help="relative tolerance")
    p_explore.add_argument("--tol-abs", type=float, default=0.0, help="absolute tolerance")
    p_explore.add_argument("--checker", default=None, help="external checker command (gets candidate and reference paths)")
    p_explore.add_argument("--output-config", default=None, help="path for the optimized config")
    p_explore.add_argument("--profile", default=None, help="path for the profile file")
    p_explore.add_argument("--trial-log", default=None, help="path for the trial log")
    p_explore.add_argument("--range-margin", type=int, default=1, help="extra exponent bits over the profiled range")
    p_explore.add_argument("--explore-range", action="store_true", help="binary-search r after p is fixed")
    p_explore.add_argument("--no-certificates", action="store_true", help="skip minimality certificate runs")
    p_explore.add_argument("--max-sites", type=int, default=None, help="explore only the N most frequent sites")
    p_explore.add_argument("--interposer", default=None, help="prebuilt interposer shared object")
    p_explore.set_defaults(func=_cmd_explore)

    p_report = sub.add_parser("report", help="CSV/SVG analysis of a profile plus config")
    p_report.add_argument("--profile", required=True)
    p_report.add_argument("--config", required=True)
    p_report.add_argument("--top", type=int, default=50)
    p_report.add_argument("--csv", default=None, help="CSV output path (default: stdout)")
    p_report.add_argument("--svg-dir", default=None, help="directory for the three SVG charts")
    p_report.set_defaults(func=_cmd_report)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as e:
        print(f"{parser.prog}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
