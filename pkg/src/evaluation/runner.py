import json
import tqdm
import sys
import os
import time
import pandas as pd
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, List, Optional, Sequence

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), "../.."))
from src.config import Config
from src.evaluation.suites import SuiteReport, run_suite


class VerificationRunner:
    """Runs the named suites, prints a summary table and saves CSV/JSON outputs."""

    def __init__(
        self,
        suites: Optional[Sequence[str]] = None,
        seed: int = Config.DEFAULT_SEED,
        tol_overrides: Optional[Dict[str, float]] = None,
        workers: int = Config.MAX_WORKERS,
        cases: Optional[int] = None,
    ):
        self.suites = sorted(set(suites or Config.SUITES))
        self.seed = seed
        self.tol_overrides = tol_overrides or {}
        self.workers = max(1, workers)
        self.cases = cases
        self.results_csv_path = Config.RESULTS_CSV_PATH
        self.summary_json_path = Config.SUMMARY_JSON_PATH

    def run_reports(self) -> List[SuiteReport]:
        reports = []
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            futures = {
                pool.submit(run_suite, name, self.seed, self.tol_overrides, self.cases): name
                for name in self.suites
            }
            for future in tqdm.tqdm(as_completed(futures), total=len(futures), desc="Verifying"):
                reports.append(future.result())
        return sorted(reports, key=lambda r: r.suite)

    @staticmethod
    def to_frame(reports: List[SuiteReport]) -> pd.DataFrame:
        """One row per property."""
        rows = []
        for report in reports:
            for prop in report.properties:
                rows.append(
                    {
                        "suite": report.suite,
                        "seed": report.seed,
                        "cases": report.cases,
                        "property": prop.name,
                        "max_residual": prop.max_residual,
                        "tol": prop.tol,
                        "pass": prop.passed,
                        "counterexample": prop.counterexample or "",
                    }
                )
        return pd.DataFrame(
            rows,
            columns=["suite", "seed", "cases", "property", "max_residual", "tol", "pass", "counterexample"],
        )

    @staticmethod
    def print_table(reports: List[SuiteReport]) -> None:
        print("\n" + "=" * 72)
        print("        VERIFICATION RESULTS")
        print("=" * 72)
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            print(f"  [{status}] {report.suite:<20} cases={report.cases:<7} {report.wall_time:7.2f}s")
            for prop in report.properties:
                mark = "ok" if prop.passed else "!!"
                print(f"      {mark} {prop.name:<34} {prop.max_residual:>11.3e}  tol {prop.tol:.1e}")
        print("=" * 72)

    def run_verification(self) -> Dict:
        print("Initializing Verification Pipeline...")
        print(Config.__repr__())
        print(f"Suites: {', '.join(self.suites)} (seed {self.seed})")

        start_time = time.time()
        reports = self.run_reports()
        total_seconds = time.time() - start_time

        self.print_table(reports)

        Config.DATA_DIR.mkdir(parents=True, exist_ok=True)

        # Save per-property results to CSV
        df = self.to_frame(reports)
        df.to_csv(self.results_csv_path, index=False, float_format="%.17g")
        print(f"Detailed results saved to {self.results_csv_path}")

        # Save summary to JSON
        summary = {
            "seed": self.seed,
            "passed": all(r.passed for r in reports),
            "num_suites": len(reports),
            "num_failed": sum(not r.passed for r in reports),
            "tolerances": {**Config.TOLERANCES, **self.tol_overrides},
            "suites": [r.to_dict() for r in reports],
        }
        with open(self.summary_json_path, "w") as f:
            json.dump(summary, f, indent=2)
        print(f"Summary saved to {self.summary_json_path} ({total_seconds:.1f}s)")

        return summary


if __name__ == "__main__":
    runner = VerificationRunner()
    summary = runner.run_verification()
    sys.exit(0 if summary["passed"] else 1)
