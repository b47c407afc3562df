#!/usr/bin/env python3
"""
Run the randomized suites and instance checks, and print a summary table.

Usage:
    python scripts/run_experiments.py
    python scripts/run_experiments.py --quick --seed 7
    python scripts/run_experiments.py --out out/experiments --oracle

With --out, every suite's rows are also written to <out>/<suite>.csv.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Callable

import pandas as pd
from rich.console import Console
from rich.table import Table

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ginarl import experiments  # noqa: E402
from ginarl.gin import GinConfig  # noqa: E402


def _parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Run the ginarl experiment suites.")
    parser.add_argument("--seed", type=int, default=0, help="Seed for the random suites")
    parser.add_argument("--coeff-bound", type=int, default=1000, help="Coefficient bound for coordinate changes")
    parser.add_argument("--quick", action="store_true", help="Smaller suites, small coefficients")
    parser.add_argument("--oracle", action="store_true", help="Also cross-check every gin against the pivot oracle")
    parser.add_argument("--out", type=Path, default=None, help="Directory for per-suite CSV files")
    return parser.parse_args()


def _suites(args: argparse.Namespace) -> dict[str, Callable[[], list]]:
    config = GinConfig(seed=args.seed, coeff_bound=50 if args.quick else args.coeff_bound)
    count = 20 if args.quick else None
    ci_degree = 3 if args.quick else 4

    def sized(default: int) -> int:
        return count or default

    return {
        "strongly_stable": lambda: experiments.strongly_stable_suite(
            count=sized(200), seed=args.seed, show_progress=True
        ),
        "three_variables": lambda: experiments.three_variable_suite(
            count=sized(100), seed=args.seed, show_progress=True
        ),
        "two_variables": lambda: experiments.two_variable_suite(
            count=sized(100), seed=args.seed, config=config, check_oracle=args.oracle, show_progress=True
        ),
        "complete_intersections": lambda: experiments.monomial_complete_intersections(
            max_degree=ci_degree, config=config, check_oracle=args.oracle, show_progress=True
        ),
        "degree_bound": lambda: [
            experiments.degree_bound_instance((2, 2, 2, 5), config=config, check_oracle=args.oracle),
            experiments.degree_bound_instance((2, 2, 2, 2), config=config, check_oracle=args.oracle),
        ],
        "generic_intersection": lambda: [
            experiments.generic_intersection_instance(
                (2, 2, 2, 5), seed=args.seed, coeff_bound=config.coeff_bound, config=config, check_oracle=args.oracle
            )
        ],
    }


def _summary(name: str, frame: pd.DataFrame) -> str:
    if frame.empty:
        return "no rows"
    if name in ("strongly_stable", "three_variables"):
        consistent = sum(row.consistent for row in frame["_row"])
        return f"ARL {int(frame['arl_direct'].sum())}, SLP {int(frame['slp'].sum())}, consistent {consistent}"
    if name == "generic_intersection":
        return f"same gin {int(frame['same_gin'].sum())}, series match {int(frame['froberg_matches'].sum())}"
    parts = [f"ARL {int(frame['arl'].sum())}", f"SSP {int(frame['ssp'].sum())}"]
    if frame["oracle_agree"].notna().any():
        parts.append(f"oracle agrees {int(frame['oracle_agree'].fillna(False).sum())}")
    return ", ".join(parts)


def main() -> int:
    args = _parse_args()
    console = Console()
    table = Table(title="ginarl experiments")
    table.add_column("suite")
    table.add_column("rows", justify="right")
    table.add_column("summary")
    table.add_column("seconds", justify="right")

    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)

    for name, run in _suites(args).items():
        console.print(f"[ginarl] Running {name}...")
        started = time.perf_counter()
        rows = run()
        elapsed = time.perf_counter() - started
        frame = pd.DataFrame([row.as_dict() for row in rows])
        frame["_row"] = rows
        table.add_row(name, str(len(rows)), _summary(name, frame), f"{elapsed:.1f}")
        if args.out is not None:
            path = args.out / f"{name}.csv"
            frame.drop(columns="_row").to_csv(path, index=False)
            console.print(f"[ginarl] Wrote: {path}")

    console.print(table)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
