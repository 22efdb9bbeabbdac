"""
Named verification suites.

Each suite draws its cases from its own seeded generator, evaluates a set of
properties and reports the worst residual of each against a tolerance from
Config.TOLERANCES. Properties marked as controls are expected to exceed their
threshold: they show the check can fail.
"""

import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

import numpy as np
from scipy.linalg import expm

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), "../.."))
from src.algebra.linalg import PcMatrix, PcVector, hermitian_inner
from src.algebra.paracomplex import (
    E_MINUS,
    E_PLUS,
    ONE,
    ZERO,
    AlgebraKind,
    Paracomplex,
    pc_conj,
    pc_inv,
    pc_mul,
    structure_constants,
)
from src.config import Config
from src.errors import GeometryError, UnknownSuiteError, ZeroDivisorError
from src.evaluation.oracles import (
    AffineHyperplaneSet,
    PierceFixedSet,
    pierce_containment,
    totally_geodesic_check,
)
from src.geometry.cover import (
    cover_fiber,
    double_cover,
    geodesic_rpn_product,
    orientable,
    rp_distance,
    sphere_distance,
)
from src.geometry.projective import (
    Collineation,
    ProjectivePoint,
    apply_collineation,
    compose,
    cross_ratio,
    hermitian_cos2,
    hermitian_distance,
    is_unitary,
    join_pair,
    pierce_mirror,
    same_point,
    split_pair,
)
from src.geometry.pseudo_metric import (
    BilinearForm,
    CausalClass,
    bilinear_eval,
    causal_class,
    cone_is_self_dual,
    orthant_is_self_dual,
    signature_of_gram,
    timelike_caps,
)
from src.geometry.quadric import Hyperquadric, cross_ratio_distance
from src.manifold.cone import (
    Direction,
    Measure,
    automorphism_log,
    cone_automorphism,
    cone_geodesic,
    cone_is_homogeneous,
)
from src.manifold.connections import alpha_connection_curvature
from src.manifold.families import (
    Bernoulli,
    CallableFamily,
    CurvedExponentialFamily,
    ExponentialFamily,
    MixtureFamily,
)
from src.manifold.frames import fisher_metric, maurer_cartan_forms, score_vectors
from src.manifold.simplex import (
    ProbDist,
    bhattacharyya_affinity,
    embed_projective,
    fisher_rao_distance,
    natural_coordinates,
    simplex_geodesic,
    simplex_geodesic_log,
    sphere_embedding,
)


@dataclass
class PropertyResult:
    name: str
    max_residual: float
    tol: float
    passed: bool
    counterexample: Optional[str] = None

    def to_dict(self) -> Dict:
        residual = self.max_residual if np.isfinite(self.max_residual) else None
        out = {"name": self.name, "max_residual": residual, "tol": self.tol, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: int
    properties: List[PropertyResult]
    wall_time: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def to_dict(self) -> Dict:
        # wall time is left out so reports are reproducible byte for byte
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "properties": [p.to_dict() for p in self.properties],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


class _Property:
    """Running worst case of one property."""

    def __init__(self, name: str, tol: float, control: bool = False, aggregate: str = "max"):
        self.name = name
        self.tol = tol
        self.control = control
        self.aggregate = aggregate
        self.worst: Optional[float] = None
        self.counterexample: Optional[str] = None

    def record(self, residual: float, inputs: Callable[[], str] = lambda: "") -> None:
        """NaN marks a case that could not be evaluated; controls skip it."""
        residual = float(residual)
        if np.isnan(residual):
            if self.control:
                return
            residual = float("inf")
        if self.worst is None:
            self.worst = residual
        elif self.aggregate == "max":
            self.worst = max(self.worst, residual)
        else:
            self.worst = min(self.worst, residual)
        failing = residual < self.tol if self.control else residual > self.tol
        if failing and self.counterexample is None:
            self.counterexample = inputs()

    def result(self) -> PropertyResult:
        worst = float("inf") if self.worst is None else self.worst
        passed = worst >= self.tol if self.control else worst <= self.tol
        return PropertyResult(
            self.name,
            worst,
            self.tol,
            bool(passed),
            None if passed else (self.counterexample or "no cases"),
        )


class _Tolerances:
    """Per-run overrides keyed by property name or by tolerance-table name."""

    def __init__(self, overrides: Optional[Dict[str, float]]):
        self.overrides = overrides or {}

    def __call__(self, prop: str, table_key: str) -> float:
        if prop in self.overrides:
            return float(self.overrides[prop])
        return Config.tolerance(table_key, self.overrides)


def _guarded(fn: Callable[[], float]) -> float:
    try:
        return fn()
    except GeometryError:
        return float("nan")


def _relative(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(b))))


# Algebra


def _random_fraction(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-60, 61)), int(rng.integers(1, 13)))


def _pc_diff(a: Paracomplex, b: Paracomplex) -> float:
    return float(max(abs(a.plus - b.plus), abs(a.minus - b.minus)))


def _expand_product(a: Paracomplex, b: Paracomplex) -> Paracomplex:
    """Product in the (1, ε) basis through the structure constants."""
    C = structure_constants(AlgebraKind.PARACOMPLEX).astype(int)
    u = (a.x, a.y)
    v = (b.x, b.y)
    coords = [sum(int(C[k, i, j]) * u[i] * v[j] for i in range(2) for j in range(2)) for k in range(2)]
    return Paracomplex.from_xy(coords[0], coords[1])


def _algebra_suite(rng, cases, tol) -> List[_Property]:
    exact = "exact"
    props = {
        name: _Property(name, tol(name, exact))
        for name in (
            "commutativity",
            "associativity",
            "distributivity",
            "idempotents",
            "structure_constants",
            "conjugation_involution",
            "norm_is_real",
            "inverse_dichotomy",
        )
    }

    idempotent_residual = max(
        _pc_diff(E_PLUS * E_PLUS, E_PLUS),
        _pc_diff(E_MINUS * E_MINUS, E_MINUS),
        _pc_diff(E_PLUS * E_MINUS, ZERO),
        _pc_diff(E_PLUS + E_MINUS, ONE),
    )
    props["idempotents"].record(idempotent_residual, lambda: "e₊, e₋")

    for i in range(cases):
        a, b, c = (Paracomplex(_random_fraction(rng), _random_fraction(rng)) for _ in range(3))
        if i % 8 == 0:
            a = Paracomplex(Fraction(0), a.minus)
        elif i % 8 == 1:
            a = Paracomplex(a.plus, Fraction(0))
        inputs = lambda: f"a={a.idempotent_str()}, b={b.idempotent_str()}, c={c.idempotent_str()}"

        props["commutativity"].record(_pc_diff(pc_mul(a, b), pc_mul(b, a)), inputs)
        props["associativity"].record(_pc_diff(pc_mul(pc_mul(a, b), c), pc_mul(a, pc_mul(b, c))), inputs)
        props["distributivity"].record(_pc_diff(a * (b + c), a * b + a * c), inputs)
        props["structure_constants"].record(_pc_diff(pc_mul(a, b), _expand_product(a, b)), inputs)
        props["conjugation_involution"].record(_pc_diff(pc_conj(pc_conj(a)), a), inputs)
        props["norm_is_real"].record(float(abs((a * pc_conj(a)).y)), inputs)

        on_zero_divisor_locus = a.plus * a.minus == 0
        try:
            residual = _pc_diff(a * pc_inv(a), ONE)
            raised = False
        except ZeroDivisorError:
            residual = 0.0
            raised = True
        flagged = a.is_zero_divisor() != (on_zero_divisor_locus and not a.is_zero())
        if raised != on_zero_divisor_locus or flagged:
            residual = 1.0
        props["inverse_dichotomy"].record(residual, inputs)

    return list(props.values())


# Causal structure


def _causal_suite(rng, cases, tol) -> List[_Property]:
    exact = "exact"
    signature = _Property("lorentzian_signature", tol("lorentzian_signature", exact))
    roundtrip = _Property("causal_roundtrip", tol("causal_roundtrip", exact))
    scaling = _Property("scaling_invariance", tol("scaling_invariance", exact))
    sylvester = _Property("sylvester_congruence", tol("sylvester_congruence", exact))
    caps = _Property("timelike_caps", tol("timelike_caps", exact))
    orthant = _Property("orthant_self_dual", tol("orthant_self_dual", exact))
    skewed = _Property(
        "skewed_cone_rejected",
        tol("skewed_cone_rejected", "negative_control"),
        control=True,
        aggregate="min",
    )
    fisher = _Property("fisher_gram_signature", tol("fisher_gram_signature", exact))

    for n in range(2, 51):
        found = signature_of_gram(BilinearForm.lorentzian(n).gram_matrix())
        signature.record(0.0 if found == (1, 0, n - 1) else 1.0, lambda: f"n={n}, got {found}")

    threshold = 2 * Config.CAUSAL_TOL
    for i in range(cases):
        n = int(rng.integers(2, 11))
        B = BilinearForm.lorentzian(n)
        if i % 10 == 0:
            spatial = rng.standard_normal(n - 1)
            x = np.concatenate([[1.0], spatial / np.linalg.norm(spatial)]) * rng.uniform(0.1, 10.0)
        else:
            x = rng.standard_normal(n)
        unit = x / np.linalg.norm(x)
        q = bilinear_eval(B, unit, unit)
        expected = (
            CausalClass.TIMELIKE if q < -threshold else CausalClass.SPACELIKE if q > threshold else CausalClass.NULL
        )
        if i % 10 == 0:
            expected = CausalClass.NULL
        found = causal_class(B, x)
        roundtrip.record(0.0 if found is expected else 1.0, lambda: f"x={x.tolist()}, got {found}")

        lam = float(rng.choice([-1.0, 1.0]) * np.exp(rng.uniform(-5.0, 5.0)))
        scaled = causal_class(B, lam * x)
        scaling.record(0.0 if scaled is found else 1.0, lambda: f"x={x.tolist()}, λ={lam!r}")

    for _ in range(max(1, cases // 100)):
        diagonal = rng.choice([-1.0, 1.0], size=4) * rng.uniform(0.5, 2.0, size=4)
        S = np.eye(4) + 0.3 * rng.standard_normal((4, 4))
        G = np.diag(diagonal)
        before = signature_of_gram(G)
        after = signature_of_gram(S.T @ G @ S)
        sylvester.record(0.0 if before == after else 1.0, lambda: f"G={diagonal.tolist()}, S={S.tolist()}")

    for n in range(2, 7):
        both_signs, connected = timelike_caps(BilinearForm.lorentzian(n), samples=200, seed=int(rng.integers(2**31)))
        caps.record(0.0 if both_signs and connected else 1.0, lambda: f"n={n}")

    for n in range(1, 6):
        ok = orthant_is_self_dual(n, samples=max(10, cases // 10), seed=int(rng.integers(2**31)))
        orthant.record(0.0 if ok else 1.0, lambda: f"n={n}")

    for width in (0.1, 0.5, 2.0):
        G = np.array([[1.0, 1.0], [width, -width]])
        ok = cone_is_self_dual(G, samples=max(50, cases // 10), seed=int(rng.integers(2**31)))
        skewed.record(0.0 if ok else 1.0, lambda: f"generators (1, ±{width})")

    for family, theta in ((ExponentialFamily.full(3), np.zeros(2)), (MixtureFamily(3), np.full(2, 1 / 3))):
        found = signature_of_gram(fisher_metric(family, theta))
        fisher.record(0.0 if found == (0, 0, 2) else 1.0, lambda: f"{family.name}: {found}")

    return [signature, roundtrip, scaling, sylvester, caps, orthant, skewed, fisher]


# Double cover


def _random_unit(rng, size) -> np.ndarray:
    v = rng.standard_normal(size)
    return v / np.linalg.norm(v)


def _cover_suite(rng, cases, tol) -> List[_Property]:
    fiber = _Property("fiber_cardinality", tol("fiber_cardinality", "exact"))
    deck = _Property("deck_isometry", tol("deck_isometry", "exact"))
    projection = _Property("antipodal_identification", tol("antipodal_identification", "exact"))
    quotient = _Property("quotient_distance", tol("quotient_distance", "cover_quotient"))
    parity = _Property("orientability_parity", tol("orientability_parity", "exact"))

    for _ in range(cases):
        n = int(rng.integers(1, 7))
        q1 = _random_unit(rng, n + 1)
        q2 = _random_unit(rng, n + 1)
        inputs = lambda: f"q1={q1.tolist()}, q2={q2.tolist()}"

        sheets = cover_fiber(q1 * rng.uniform(0.1, 10.0))
        distinct = not np.allclose(sheets[0], sheets[1])
        same_class = np.array_equal(double_cover(sheets[0])[0], double_cover(sheets[1])[0])
        fiber.record(0.0 if distinct and same_class else 1.0, inputs)

        deck.record(abs(sphere_distance(q1, q2) - sphere_distance(-q1, -q2)), inputs)
        projection.record(float(np.max(np.abs(double_cover(q1)[0] - double_cover(-q1)[0]))), inputs)

        theta = sphere_distance(q1, q2)
        quotient.record(abs(rp_distance(q1, q2) - min(theta, np.pi - theta)), inputs)

    for n in range(1, 21):
        # w₁(ℝ𝒫ⁿ) = (n + 1)a
        expected = (n + 1) % 2 == 0
        parity.record(0.0 if orientable(n) == expected else 1.0, lambda: f"n={n}")

    return [fiber, deck, projection, quotient, parity]


# Flat connections


def _flatness_suite(rng, cases, tol) -> List[_Property]:
    e_flat = _Property("exponential_connection_flat", tol("exponential_connection_flat", "finite_difference"))
    m_flat = _Property("mixture_connection_flat", tol("mixture_connection_flat", "finite_difference"))
    curved = _Property(
        "levi_civita_curved_control",
        tol("levi_civita_curved_control", "sphere_curvature"),
        control=True,
        aggregate="min",
    )

    for atoms in (3, 4, 5):
        exponential = ExponentialFamily.full(atoms)
        mixture = MixtureFamily(atoms)
        for _ in range(cases):
            theta = 0.5 * rng.standard_normal(atoms - 1)
            eta = rng.dirichlet(np.ones(atoms))[:-1]
            inputs = lambda: f"atoms={atoms}, θ={theta.tolist()}, η={eta.tolist()}"
            e_flat.record(_guarded(lambda: alpha_connection_curvature(exponential, theta, 1.0)), inputs)
            m_flat.record(_guarded(lambda: alpha_connection_curvature(mixture, eta, -1.0)), inputs)
            curved.record(_guarded(lambda: alpha_connection_curvature(exponential, theta, 0.0)), inputs)

    return [e_flat, m_flat, curved]


# Simplex and cone geodesics


def _geodesic_suite(rng, cases, tol) -> List[_Property]:
    names = (
        "sum_to_one",
        "log_positive",
        "e_flatness",
        "gauge_invariance",
        "subgroup_law",
        "cone_subgroup_law",
        "automorphism_composition",
        "automorphism_roundtrip",
        "closed_form",
    )
    props = {name: _Property(name, tol(name, "exact" if name == "log_positive" else "geodesic")) for name in names}
    props["extreme_roundtrip"] = _Property("extreme_roundtrip", tol("extreme_roundtrip", "extreme_geodesic"))

    p_half = ProbDist([0.5, 0.5])
    closed = simplex_geodesic(p_half, Direction([1.0, 0.0]), 1.0).p
    expected = np.array([np.e / (np.e + 1.0), 1.0 / (np.e + 1.0)])
    props["closed_form"].record(float(np.max(np.abs(closed - expected))), lambda: "p₀=(½,½), q=(1,0), s=1")

    s_grid = np.linspace(-1000.0, 1000.0, Config.GEODESIC_SAMPLES)
    for _ in range(cases):
        atoms = int(rng.integers(2, 7))
        p0 = ProbDist(rng.dirichlet(np.ones(atoms)))
        q_raw = rng.standard_normal(atoms)
        q = Direction(q_raw / np.max(np.abs(q_raw)))
        inputs = lambda: f"p0={p0.p.tolist()}, q={q.h.tolist()}"

        slope = (q.h[:-1] - q.h[-1])
        eta0 = natural_coordinates(p0)
        for s in s_grid:
            props["sum_to_one"].record(_guarded(lambda: abs(float(np.sum(simplex_geodesic(p0, q, s).p)) - 1.0)), inputs)
            log_p = simplex_geodesic_log(p0, q, s)
            props["log_positive"].record(float(np.sum(~np.isfinite(log_p))), inputs)
            eta = log_p[:-1] - log_p[-1]
            props["e_flatness"].record(_relative(eta, eta0 + s * slope), inputs)

        c = rng.uniform(-10.0, 10.0)
        shifted = Direction(q.h + c)
        for s in np.linspace(-3.0, 3.0, 7):
            props["gauge_invariance"].record(
                float(np.max(np.abs(simplex_geodesic(p0, shifted, s).p - simplex_geodesic(p0, q, s).p))), inputs
            )

        s, t = rng.uniform(-2.0, 2.0, size=2)
        chained = simplex_geodesic(simplex_geodesic(p0, q, s), q, t).p
        props["subgroup_law"].record(float(np.max(np.abs(chained - simplex_geodesic(p0, q, s + t).p))), inputs)

        for far in (400.0, -400.0, 1000.0):
            forward = simplex_geodesic(p0, q, far)
            back = simplex_geodesic(forward, q, -far) if forward.interior else None
            props["extreme_roundtrip"].record(float("inf") if back is None else _relative(back.log_p, p0.log_p), inputs)

        mu = Measure(np.exp(rng.standard_normal(atoms)))
        nu = Measure(np.exp(rng.standard_normal(atoms)))
        h1 = Direction(rng.standard_normal(atoms))
        h2 = Direction(rng.standard_normal(atoms))
        props["cone_subgroup_law"].record(
            _relative(cone_geodesic(cone_geodesic(mu, h1, s), h1, t).weights, cone_geodesic(mu, h1, s + t).weights),
            inputs,
        )
        props["automorphism_composition"].record(
            _relative(cone_automorphism(cone_automorphism(mu, h1), h2).weights, cone_automorphism(mu, h1 + h2).weights),
            inputs,
        )
        roundtrip = _relative(cone_automorphism(mu, automorphism_log(mu, nu)).weights, nu.weights)
        props["automorphism_roundtrip"].record(roundtrip if cone_is_homogeneous(mu, nu) else float("inf"), inputs)

    return list(props.values())


# Maurer-Cartan structure equations


def _bernoulli_forms(theta: float):
    denominator = theta**2 + (1.0 - theta) ** 2
    omega = (2.0 * theta - 1.0) / denominator
    return omega, theta - omega * theta**2


def _frame_residual(family, theta) -> float:
    return _guarded(lambda: maurer_cartan_forms(family, theta, tol=np.inf).residual)


def _maurer_cartan_suite(rng, cases, tol) -> List[_Property]:
    analytic = _Property("full_family_residual", tol("full_family_residual", "analytic"))
    fd = _Property("finite_difference_residual", tol("finite_difference_residual", "finite_difference"))
    centering = _Property("score_centering", tol("score_centering", "analytic"))
    bernoulli = _Property("bernoulli_closed_form", tol("bernoulli_closed_form", "analytic"))
    curved = _Property(
        "curved_subfamily_rejected",
        tol("curved_subfamily_rejected", "negative_control"),
        control=True,
        aggregate="min",
    )

    for atoms in (3, 4, 5, 6):
        family = ExponentialFamily.full(atoms)
        numeric = CallableFamily(family.prob, atoms, atoms - 1, name=f"fd-exp-{atoms}")
        for i in range(cases):
            theta = rng.standard_normal(atoms - 1)
            inputs = lambda: f"atoms={atoms}, θ={theta.tolist()}"
            analytic.record(_frame_residual(family, theta), inputs)
            centering.record(score_vectors(family, theta).centering_defect(), inputs)
            if i < max(1, cases // 10):
                fd.record(_frame_residual(numeric, theta), inputs)

    family = Bernoulli()
    curve = CurvedExponentialFamily(4)
    for _ in range(cases):
        theta = float(rng.uniform(0.1, 0.9))
        forms = maurer_cartan_forms(family, [theta])
        omega, omega_1 = _bernoulli_forms(theta)
        residual = max(abs(forms.omega[0] - omega), abs(forms.omega_s[0, 0] - omega_1))
        bernoulli.record(residual, lambda: f"θ={theta!r}")

        t = float(rng.uniform(0.5, 1.5))
        curved.record(_frame_residual(curve, [t]), lambda: f"t={t!r}")

    return [analytic, fd, centering, bernoulli, curved]


# Metric equivalence


def _random_pc_point(rng, n: int) -> ProjectivePoint:
    """Point with {x,x} well away from zero."""
    while True:
        plus = rng.standard_normal(n + 1)
        minus = plus + 0.5 * rng.standard_normal(n + 1)
        coords = PcVector(plus, minus)
        if hermitian_inner(coords, coords).x > 0.1 * np.linalg.norm(plus) * np.linalg.norm(minus):
            return ProjectivePoint.from_coords(coords)


def _random_unitary(rng, size: int) -> Collineation:
    """Sheets (A, A⁻ᵀ) satisfy conj-transpose(M)·M = I."""
    generator = 0.3 * rng.standard_normal((size, size))
    return Collineation(PcMatrix(expm(generator), expm(-generator).T))


def _random_collineation(rng, size: int, conjugating: bool = False) -> Collineation:
    # exponentials keep both sheets well conditioned
    plus = expm(0.5 * rng.standard_normal((size, size)))
    minus = expm(0.5 * rng.standard_normal((size, size)))
    return Collineation(PcMatrix(plus, minus), conjugating)


def _separated_parameters(rng) -> np.ndarray:
    while True:
        t = rng.uniform(-2.0, 2.0, size=4)
        if np.min(np.abs(t[:, None] - t[None, :]) + 10 * np.eye(4)) > 0.2:
            return t


def _metric_equivalence_suite(rng, cases, tol) -> List[_Property]:
    cos2_bc = _Property("cos2_equals_bc_squared", tol("cos2_equals_bc_squared", "analytic"))
    dual = _Property("hermitian_equals_cross_ratio", tol("hermitian_equals_cross_ratio", "analytic"))
    sphere = _Property("fisher_rao_sphere_oracle", tol("fisher_rao_sphere_oracle", "sphere_oracle"))
    affinity = _Property("bhattacharyya_symmetry", tol("bhattacharyya_symmetry", "affinity"))
    literal = _Property(
        "unsquared_affinity_rejected",
        tol("unsquared_affinity_rejected", "negative_control"),
        control=True,
        aggregate="max",
    )
    unitary = _Property("unitary_invariance", tol("unitary_invariance", "invariance"))
    non_unitary = _Property(
        "non_unitary_control",
        tol("non_unitary_control", "negative_control"),
        control=True,
        aggregate="max",
    )
    cross = _Property("cross_ratio_invariance", tol("cross_ratio_invariance", "invariance"))
    group = _Property("collineation_group_action", tol("collineation_group_action", "exact"))
    split = _Property("split_join_roundtrip", tol("split_join_roundtrip", "exact"))

    for _ in range(cases):
        atoms = int(rng.integers(2, 7))
        p = ProbDist(rng.dirichlet(np.ones(atoms)))
        p_star = ProbDist(rng.dirichlet(np.ones(atoms)))
        inputs = lambda: f"p={p.p.tolist()}, p*={p_star.p.tolist()}"

        X, Y = embed_projective(p), embed_projective(p_star)
        bc = bhattacharyya_affinity(p, p_star)
        delta = hermitian_distance(X, Y)
        cos2 = float(np.cos(delta) ** 2)
        cos2_bc.record(abs(cos2 - bc**2), inputs)
        literal.record(abs(cos2 - bc), inputs)
        dual.record(
            _guarded(lambda: abs(delta - cross_ratio_distance(X, Y, Hyperquadric.identity(atoms - 1)))), inputs
        )

        u, v = sphere_embedding(p), sphere_embedding(p_star)
        angle = float(np.arccos(np.clip(u @ v / (np.linalg.norm(u) * np.linalg.norm(v)), -1.0, 1.0)))
        sphere.record(abs(fisher_rao_distance(p, p_star) - 2.0 * angle), inputs)
        affinity.record(
            max(
                abs(bc - bhattacharyya_affinity(p_star, p)),
                abs(bhattacharyya_affinity(p, p) - 1.0),
                max(0.0, bc - 1.0),
            ),
            inputs,
        )

        n = atoms - 1
        x, y = _random_pc_point(rng, n), _random_pc_point(rng, n)
        point_inputs = lambda: f"x={x.to_json()}, y={y.to_json()}"
        T = _random_unitary(rng, n + 1)
        before = hermitian_cos2(x, y)
        unitary.record(
            _guarded(
                lambda: (0.0 if is_unitary(T) else 1.0)
                + abs(hermitian_cos2(apply_collineation(T, x), apply_collineation(T, y)) - before) / (1.0 + abs(before))
            ),
            point_inputs,
        )
        generic = _random_collineation(rng, n + 1)
        non_unitary.record(
            _guarded(lambda: abs(hermitian_cos2(apply_collineation(generic, x), apply_collineation(generic, y)) - before)),
            point_inputs,
        )

        base, direction = _random_pc_point(rng, n), _random_pc_point(rng, n)
        t_plus, t_minus = _separated_parameters(rng), _separated_parameters(rng)
        quadruple = [
            ProjectivePoint.from_coords(base.coords + direction.coords.scale(Paracomplex(tp, tm)))
            for tp, tm in zip(t_plus, t_minus)
        ]

        def _cross_ratio_drift() -> float:
            original = cross_ratio(*quadruple)
            image = cross_ratio(*(apply_collineation(generic, point) for point in quadruple))
            return _pc_diff(original, image) / (1.0 + abs(original.plus) + abs(original.minus))

        cross.record(_guarded(_cross_ratio_drift), lambda: f"t₊={t_plus.tolist()}, t₋={t_minus.tolist()}")

        T1 = _random_collineation(rng, n + 1, conjugating=bool(rng.integers(2)))
        T2 = _random_collineation(rng, n + 1, conjugating=bool(rng.integers(2)))
        stepwise = apply_collineation(T2, apply_collineation(T1, x))
        group.record(0.0 if same_point(stepwise, apply_collineation(compose(T2, T1), x)) else 1.0, point_inputs)
        split.record(0.0 if same_point(join_pair(split_pair(x)), x) else 1.0, point_inputs)

    return [cos2_bc, dual, sphere, affinity, literal, unitary, non_unitary, cross, group, split]


# Pierce mirror


def _mirror_suite(rng, cases, tol) -> List[_Property]:
    isometry = _Property("mirror_isometry", tol("mirror_isometry", "mirror_isometry"))
    involution = _Property("mirror_involution", tol("mirror_involution", "exact"))
    fixed = _Property("mirror_fixed_set", tol("mirror_fixed_set", "exact"))
    geodesic = _Property("fixed_set_totally_geodesic", tol("fixed_set_totally_geodesic", "totally_geodesic"))
    zero_flow = _Property("zero_length_flow", tol("zero_length_flow", "exact"))
    control = _Property(
        "affine_hyperplane_control",
        tol("affine_hyperplane_control", "negative_control"),
        control=True,
    )

    for _ in range(cases):
        n = int(rng.integers(1, 6))
        k = int(rng.integers(0, n + 1))
        x, y = _random_pc_point(rng, n), _random_pc_point(rng, n)
        inputs = lambda: f"x={x.to_json()}, y={y.to_json()}, split={k}"

        fx, fy = pierce_mirror(x, k), pierce_mirror(y, k)
        isometry.record(_guarded(lambda: abs(hermitian_distance(fx, fy) - hermitian_distance(x, y))), inputs)
        involution.record(0.0 if same_point(pierce_mirror(fx, k), x) else 1.0, inputs)

        plus, minus = np.array(x.coords.plus), np.array(x.coords.minus)
        plus[k + 1 :] = 0.0
        minus[k + 1 :] = 0.0
        if np.any(plus) and np.any(minus):
            a = ProjectivePoint.from_coords(PcVector(plus, minus))
            fixed.record(0.0 if same_point(pierce_mirror(a, k), a) else 1.0, inputs)

    samples = max(1, cases // 10)
    geodesic.record(pierce_containment(2, 1, samples, int(rng.integers(2**31))), lambda: "ℭ𝒫², split=1")
    frozen = totally_geodesic_check(
        lambda pair, direction, t: geodesic_rpn_product(pair, direction, 0.0),
        PierceFixedSet(2, 1),
        samples,
        int(rng.integers(2**31)),
    )
    zero_flow.record(frozen, lambda: "ℭ𝒫², split=1")
    seed = int(rng.integers(2**31))
    control.record(
        totally_geodesic_check(geodesic_rpn_product, AffineHyperplaneSet(2, seed), samples, seed),
        lambda: f"hyperplane seed={seed}",
    )

    return [isometry, involution, fixed, geodesic, zero_flow, control]


SUITES: Dict[str, Callable] = {
    "algebra": _algebra_suite,
    "causal": _causal_suite,
    "cover": _cover_suite,
    "flatness": _flatness_suite,
    "geodesic": _geodesic_suite,
    "maurer_cartan": _maurer_cartan_suite,
    "metric_equivalence": _metric_equivalence_suite,
    "mirror": _mirror_suite,
}


def run_suite(
    name: str,
    seed: int = Config.DEFAULT_SEED,
    tol_overrides: Optional[Dict[str, float]] = None,
    cases: Optional[int] = None,
) -> SuiteReport:
    """
    Run one named suite.

    Args:
        name: One of Config.SUITES.
        seed: Seed of the suite's random generator.
        tol_overrides: Tolerances keyed by property name or table name.
        cases: Case count; defaults to Config.get_sample_counts()[name].
    """
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(Config.SUITES)}")
    cases = Config.get_sample_counts()[name] if cases is None else int(cases)
    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    props = SUITES[name](rng, cases, _Tolerances(tol_overrides))
    return SuiteReport(
        suite=name,
        seed=seed,
        cases=cases,
        properties=[p.result() for p in props],
        wall_time=time.perf_counter() - start,
    )


def run_suites(
    names: Iterable[str],
    seed: int = Config.DEFAULT_SEED,
    tol_overrides: Optional[Dict[str, float]] = None,
    workers: int = Config.MAX_WORKERS,
    cases: Optional[int] = None,
) -> List[SuiteReport]:
    """Run suites concurrently; reports come back sorted by suite name."""
    names = sorted(set(names))
    for name in names:
        if name not in SUITES:
            raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(Config.SUITES)}")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        reports = list(pool.map(lambda n: run_suite(n, seed, tol_overrides, cases), names))
    return sorted(reports, key=lambda r: r.suite)
