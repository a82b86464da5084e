"""Command-line front end: region, simulate, verify, and figure subcommands.

A config file (one ``key = value`` per line, ``#`` comments) can preload any
long flag; explicit flags override config values.  Exit codes: 0 success,
1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import experiments
from .schemes import SCHEME_KINDS
from .topology import STATE_BY_LABEL, TopologyProfile

BOUND_NAMES = ("outer", "yang", "prop2", "sym-alt", "int-sym-alt", "gdof")

_PROFILE_HELP = (
    "named state profile (11, 1a, a1, aa, sym) or four comma-separated "
    "fractions lambda_11,lambda_1a,lambda_a1,lambda_aa"
)


def _parse_profile(text: str, alpha: float) -> TopologyProfile:
    text = text.strip()
    if text == "sym":
        return TopologyProfile.symmetric_alternating(alpha)
    if text in STATE_BY_LABEL:
        return TopologyProfile.fixed(text, alpha)
    parts = [p for p in text.split(",") if p]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"cannot parse profile {text!r}: {_PROFILE_HELP}")
    vals = [float(p) for p in parts]
    return TopologyProfile(alpha, *vals)


def _parse_range(text: str) -> list[float]:
    """start:stop:step inclusive grid."""
    try:
        start, stop, step = (float(x) for x in text.split(":"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}") from exc
    if step <= 0 or stop < start:
        raise argparse.ArgumentTypeError("need step > 0 and stop >= start")
    count = int(round((stop - start) / step))
    grid = [round(start + k * step, 12) for k in range(count + 1)]
    if grid[-1] > stop + 1e-12:
        grid.pop()
    return grid


def _alpha(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("alpha must lie in [0, 1]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsdof",
        description=(
            "Secure degrees-of-freedom bounds and scheme simulator for the "
            "two-antenna broadcast channel with delayed CSIT and alternating "
            "link topology."
        ),
    )
    parser.add_argument("--config", help="key=value config file; flags override it")
    sub = parser.add_subparsers(dest="command", required=True)

    p_region = sub.add_parser(
        "region",
        help="emit region vertex and summary CSVs",
        description=f"Bounds: {', '.join(BOUND_NAMES)}.",
    )
    p_region.add_argument("--alpha", type=_alpha, default=0.5)
    p_region.add_argument("--profile", default="1a", help=_PROFILE_HELP)
    p_region.add_argument(
        "--which",
        default="all",
        help=f"comma-separated bound names from: {', '.join(BOUND_NAMES)} (or 'all')",
    )
    p_region.add_argument("--out", required=True, help="vertex CSV path; a _summary CSV is written alongside")

    p_sim = sub.add_parser(
        "simulate",
        help="run an SNR sweep for one scheme",
        description=f"Schemes: {', '.join(SCHEME_KINDS)}.",
    )
    p_sim.add_argument("--scheme", required=True, choices=SCHEME_KINDS)
    p_sim.add_argument("--alpha", type=_alpha, default=0.5)
    p_sim.add_argument("--rho-db", default="60:120:10", help="start:stop:step grid in dB")
    p_sim.add_argument("--trials", type=int, default=100)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--out", default=None, help="per-trial CSV path")

    p_verify = sub.add_parser(
        "verify",
        help="run the full cross-validation suite",
        description=(
            "Region inclusions, sum-DoF characterizations, entropy-order "
            "inequalities, scheme slopes and ledger agreement, leakage, "
            "decode checks, and figure endpoints."
        ),
    )
    p_verify.add_argument("--alpha-grid", default="0:1:0.05", help="start:stop:step")
    p_verify.add_argument("--trials", type=int, default=20)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out", default=None, help="check-result CSV path")

    p_fig = sub.add_parser(
        "figure",
        help="emit the CSV behind one region/sum-DoF figure",
        description="Figures 3, 4, 6, 7 take --alpha; figure 8 takes --alpha-grid.",
    )
    p_fig.add_argument("--figure", type=int, required=True, choices=(3, 4, 6, 7, 8))
    p_fig.add_argument("--alpha", type=_alpha, default=None)
    p_fig.add_argument("--alpha-grid", default="0:1:0.05", help="start:stop:step (figure 8)")
    p_fig.add_argument("--out", required=True)
    return parser


def _load_config(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = value
    return values


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Insert config-file values as defaults before explicit flags."""
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    if idx + 1 >= len(argv):
        raise ValueError("--config needs a file path")
    path = argv[idx + 1]
    values = _load_config(path)
    commands = parser._subparsers._group_actions[0].choices  # type: ignore[union-attr]
    rest = argv[:idx] + argv[idx + 2 :]
    command = next((tok for tok in rest if tok in commands), None)
    if command is None:
        raise ValueError("--config needs a subcommand")
    known = set()
    for action in commands[command]._actions:
        for opt in action.option_strings:
            known.add(opt.lstrip("-").replace("-", "_"))
    unknown = set(values) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    prefix = []
    for key, value in values.items():
        prefix.extend([f"--{key.replace('_', '-')}", value])
    # subcommand, then config-derived defaults, then explicit flags
    # (argparse lets later occurrences win).
    pos = rest.index(command)
    return rest[: pos + 1] + prefix + rest[pos + 1 :]


def parse_and_dispatch(argv) -> int:
    parser = build_parser()
    argv = list(argv)
    try:
        argv = _apply_config(parser, argv)
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if args.command == "region":
            names = BOUND_NAMES if args.which == "all" else tuple(args.which.split(","))
            bad = [n for n in names if n not in BOUND_NAMES]
            if bad:
                print(f"error: unknown bound names {bad}", file=sys.stderr)
                return 2
            profile = _parse_profile(args.profile, args.alpha)
            vtext, stext = experiments.region_csv(names, args.alpha, profile)
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(vtext)
            summary_path = _summary_path(args.out)
            with open(summary_path, "w", encoding="utf-8") as fh:
                fh.write(stext)
            print(f"region: wrote {args.out} and {summary_path}")
            return 0

        if args.command == "simulate":
            grid = _parse_range(args.rho_db)
            config = experiments.SweepConfig(
                scheme=args.scheme,
                alpha=args.alpha,
                rho_db=tuple(grid),
                trials=args.trials,
                seed=args.seed,
                out=args.out,
            )
            report = experiments.run_sweep(config)
            print(
                f"simulate: {args.scheme} alpha={args.alpha:g} "
                f"d1={report.d1:.4f} d2={report.d2:.4f} "
                f"max_leak_slope={max(report.leak_slopes.values()):.4f}"
            )
            return 0

        if args.command == "verify":
            grid = _parse_range(args.alpha_grid)
            checks = experiments.verify_all(grid, seed=args.seed, trials=args.trials)
            for c in checks:
                status = "pass" if c.passed else "FAIL"
                print(f"[{status}] {c.name} margin={c.margin:+.4f} {c.detail}")
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(experiments.checks_to_csv(checks))
            failed = [c for c in checks if not c.passed]
            print(f"verify: {len(checks) - len(failed)}/{len(checks)} checks passed")
            return 1 if failed else 0

        if args.command == "figure":
            if args.figure == 8:
                text = experiments.figure_data(8, alpha_grid=_parse_range(args.alpha_grid))
            else:
                if args.alpha is None:
                    print("error: figures 3, 4, 6 and 7 need --alpha", file=sys.stderr)
                    return 2
                text = experiments.figure_data(args.figure, alpha=args.alpha)
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
            print(f"figure: wrote {args.out}")
            return 0
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


def _summary_path(path: str) -> str:
    if path.endswith(".csv"):
        return path[:-4] + "_summary.csv"
    return path + "_summary"


def main() -> None:
    sys.exit(parse_and_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
