#!/usr/bin/env python3
"""
Single-Command Verification Pipeline for the Frobenius geometry toolkit.

This script runs the complete pipeline:
1. Finite-difference self-check
2. Unit tests
3. Each verification suite through the CLI
4. CLI exit-code checks
5. Full verification run (CSV + JSON summary)

Usage:
    python run_all.py [--skip-tests] [--quick] [--seed SEED] [--suite NAME]
"""

import argparse
import os
import subprocess
import sys
import time
from pathlib import Path

# Add src to path
sys.path.append(os.path.dirname(__file__))
from src.config import Config


def run_step(name: str, command: list, cwd: str = None, env: dict = None, expected: int = 0):
    """Run a pipeline step with output; succeed when the exit code is `expected`."""
    print(f"\n{'=' * 60}")
    print(f"🚀 {name}")
    print(f"{'=' * 60}")

    start = time.time()
    result = subprocess.run(command, cwd=cwd, env=env, capture_output=False)
    elapsed = time.time() - start

    if result.returncode != expected:
        print(f"❌ {name} failed (exit code {result.returncode}, expected {expected})")
        return False

    print(f"✅ {name} completed in {elapsed:.1f}s")
    return True


def main():
    parser = argparse.ArgumentParser(description="Run complete verification pipeline")
    parser.add_argument("--skip-tests", action="store_true", help="Skip the unit tests")
    parser.add_argument("--quick", action="store_true", help="Quick mode (LOCAL case counts)")
    parser.add_argument("--seed", type=int, default=Config.DEFAULT_SEED, help="Seed for every suite")
    parser.add_argument(
        "--suite",
        action="append",
        choices=Config.SUITES,
        help="Restrict to these suites (repeatable)",
    )
    args = parser.parse_args()

    project_root = str(Path(__file__).parent)
    env = dict(os.environ)
    if args.quick:
        env["FROBENIUS_ENV"] = "LOCAL"
    suites = args.suite or list(Config.SUITES)

    print("=" * 60)
    print("     FROBENIUS GEOMETRY - VERIFICATION PIPELINE")
    print("=" * 60)

    start_time = time.time()
    failed = []

    # Step 1: Numerical self-check
    if not run_step(
        "Step 1: Finite-Difference Self-Check",
        [sys.executable, "-m", "src.evaluation.numerics"],
        cwd=project_root,
        env=env,
    ):
        return 1

    # Step 2: Unit tests
    if not args.skip_tests:
        if not run_step(
            "Step 2: Unit Tests",
            [sys.executable, "-m", "pytest", "tests", "-q"],
            cwd=project_root,
            env=env,
        ):
            failed.append("unit tests")

    # Step 3: One CLI call per suite
    for name in suites:
        if not run_step(
            f"Step 3: Suite '{name}' (seed {args.seed})",
            [sys.executable, "-m", "src.cli", "verify", "--suite", name, "--seed", str(args.seed)],
            cwd=project_root,
            env=env,
        ):
            failed.append(name)

    # Step 4: Exit codes
    checks = [
        ("Step 4a: Usage error exits 2", ["verify", "--suite", "algebra"], 2),
        ("Step 4b: Domain error exits 1", ["pc", "inv", "1+ε"], 1),
        ("Step 4c: Success exits 0", ["causal", "1,1,0,0"], 0),
    ]
    for label, argv, code in checks:
        if not run_step(label, [sys.executable, "-m", "src.cli", *argv], cwd=project_root, env=env, expected=code):
            failed.append(label)

    # Step 5: Full run with saved outputs
    suite_literal = repr(sorted(suites))
    if not run_step(
        "Step 5: Verification Runner",
        [
            sys.executable,
            "-c",
            "import sys; from src.evaluation.runner import VerificationRunner; "
            f"sys.exit(0 if VerificationRunner(suites={suite_literal}, seed={args.seed}).run_verification()['passed'] else 1)",
        ],
        cwd=project_root,
        env=env,
    ):
        failed.append("runner")

    # Summary
    total_time = time.time() - start_time
    print("\n" + "=" * 60)
    print("         PIPELINE COMPLETE")
    print("=" * 60)
    print(f"⏱️  Total time: {total_time / 60:.1f} minutes")
    print(f"📈 Results: {Config.RESULTS_CSV_PATH.relative_to(Config.DATA_DIR.parent)}")
    print(f"📊 Summary: {Config.SUMMARY_JSON_PATH.relative_to(Config.DATA_DIR.parent)}")
    if failed:
        print(f"⚠️  Failed: {', '.join(failed)}")
    print("=" * 60)

    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
