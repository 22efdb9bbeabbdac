"""
Configuration module for the Paracomplex Frobenius Geometry toolkit.

Holds numerical tolerances, verification sample sizes and output paths.
Environment variable FROBENIUS_ENV controls suite sizes (LOCAL or PROD).
"""

import os
from pathlib import Path

# Base Paths
BASE_DIR = Path(__file__).parent.parent.absolute()
DATA_DIR = BASE_DIR / "data"


class Config:
    """Central configuration for the geometry toolkit."""

    ENV = os.environ.get("FROBENIUS_ENV", "PROD").upper()

    # Paths
    DATA_DIR = DATA_DIR
    RESULTS_CSV_PATH = DATA_DIR / "verification_results.csv"
    SUMMARY_JSON_PATH = DATA_DIR / "verification_summary.json"

    # Algebra
    ZERO_DIVISOR_RTOL = 1e-12
    INVOLUTION_TOL = 1e-10

    # Pseudo-Euclidean forms
    CAUSAL_TOL = 1e-10
    SIGNATURE_TOL = 1e-10
    SYMMETRY_TOL = 1e-12
    CONE_TOL = 1e-10

    # Projective geometry
    PROJECTIVE_TOL = 1e-10
    UNIT_TOL = 1e-10
    TANGENT_TOL = 1e-10
    DEFAULT_RADIUS = 1.0

    # Probability simplex
    SIMPLEX_SUM_TOL = 1e-12
    FAMILY_RANK_RTOL = 1e-10

    # Verification
    DEFAULT_SEED = 0
    GEODESIC_SAMPLES = 100
    MAX_WORKERS = 4

    # Single source of truth for suite acceptance
    TOLERANCES = {
        "exact": 0.0,
        "analytic": 1e-8,
        "finite_difference": 1e-5,
        "mirror_isometry": 1e-12,
        "totally_geodesic": 1e-9,
        "negative_control": 1e-2,
        "cover_quotient": 1e-10,
        "geodesic": 1e-12,
        "extreme_geodesic": 1e-9,
        "sphere_curvature": 0.1,
        "sphere_oracle": 1e-10,
        "invariance": 1e-10,
        "affinity": 1e-12,
    }

    SUITES = (
        "algebra",
        "causal",
        "cover",
        "flatness",
        "geodesic",
        "maurer_cartan",
        "metric_equivalence",
        "mirror",
    )

    @classmethod
    def get_sample_counts(cls):
        """Return per-suite case counts based on environment."""
        if cls.ENV == "PROD":
            return {
                "algebra": 10_000,
                "causal": 10_000,
                "cover": 1_000,
                "flatness": 5,
                "geodesic": 100,
                "maurer_cartan": 100,
                "metric_equivalence": 1_000,
                "mirror": 1_000,
            }
        # LOCAL / DEV
        return {
            "algebra": 500,
            "causal": 500,
            "cover": 100,
            "flatness": 2,
            "geodesic": 20,
            "maurer_cartan": 10,
            "metric_equivalence": 100,
            "mirror": 100,
        }

    @classmethod
    def tolerance(cls, name, overrides=None):
        """Look up a tolerance, honouring per-run overrides."""
        if overrides and name in overrides:
            return float(overrides[name])
        return cls.TOLERANCES[name]

    @classmethod
    def __repr__(cls):
        counts = cls.get_sample_counts()
        return (
            f"Config(ENV={cls.ENV}, "
            f"SUITES={len(cls.SUITES)}, "
            f"CASES=algebra:{counts['algebra']}+pairs:{counts['metric_equivalence']}, "
            f"TOL=analytic:{cls.TOLERANCES['analytic']}/fd:{cls.TOLERANCES['finite_difference']})"
        )
