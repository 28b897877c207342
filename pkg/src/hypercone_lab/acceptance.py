"""Acceptance criteria: one callable per criterion, a registry, and a runner.

Each criterion re-derives its expected values from an independent route
(exact enumeration, adaptive quadrature, exact rational arithmetic, closed
forms) and checks the implementation at the stated tolerance.  Randomised
suites draw from a counter-based generator keyed by the seed, so a fixed
seed yields byte-identical reports.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad

from . import cones, graphs, growth, trees

__all__ = ["CriterionResult", "CRITERIA", "SUITES", "run_criteria", "criterion_ids"]

GR3_GRID = growth.ThresholdGrid.from_ranges(-4.0, 4.0, 0.25, 2.5, 50.0, 0.5)


@dataclass(frozen=True)
class CriterionResult:
    cid: str
    suite: str
    passed: bool
    measured: str
    tolerance: str


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


# --------------------------------------------------------------------------
# spectrum suite
# --------------------------------------------------------------------------


def _sp1(seed: int) -> CriterionResult:
    t0 = time.perf_counter()
    worst = 0.0
    for p in range(1, 6):
        ladder = cones.cross_section_spectrum(cones.ProductSphere(p, 6 - p), 10.0)
        rep = cones.stability_report(ladder)
        first = ladder.entries[0]
        worst = max(
            worst,
            abs(rep.mu1 + 6.0),
            abs(rep.margin - 0.25),
            abs(first.gamma_plus + 2.0),
            abs(first.gamma_minus + 3.0),
            abs(ladder.distinct_gamma_plus()[1]),
            abs(rep.gamma_gap - 2.0),
        )
    elapsed = time.perf_counter() - t0
    passed = worst <= 1e-10 and elapsed < 1.0
    return CriterionResult("SP-1", "spectrum", passed, f"max_abs_dev={worst:.3e}", "1e-10; runtime<1s")


def _sp2(seed: int) -> CriterionResult:
    mults = []
    for p in range(1, 6):
        ladder = cones.cross_section_spectrum(cones.ProductSphere(p, 6 - p), 1.0)
        zero = [e for e in ladder.entries if abs(e.mu) < 1e-9]
        mults.append(zero[0].multiplicity if zero else -1)
    passed = all(m == 8 for m in mults)
    return CriterionResult("SP-2", "spectrum", passed, "multiplicities=" + ",".join(map(str, mults)), "exact 8")


def _sp3(seed: int) -> CriterionResult:
    simons_dev = abs(cones.cone_density(cones.ProductSphere(3, 3)) - 105.0 * math.pi / 224.0)
    plane = cones.density_from_cross_section_area(cones.sphere_area(6), 7)
    passed = simons_dev <= 1e-12 and plane == 1.0
    measured = f"simons_dev={simons_dev:.3e};hyperplane={plane!r}"
    return CriterionResult("SP-3", "spectrum", passed, measured, "1e-12; hyperplane exact")


# --------------------------------------------------------------------------
# growth suite
# --------------------------------------------------------------------------


def _draw_exponents(rng: np.random.Generator, floor: float = 0.1) -> tuple[float, float]:
    while True:
        a, b = rng.uniform(-3.0, 3.0, size=2)
        if min(abs(a), abs(b), abs(a + b)) >= floor and abs(a - b) >= floor:
            return float(a), float(b)


def _gr1(seed: int) -> CriterionResult:
    t0 = time.perf_counter()
    rng = _rng(seed)
    worst = 0.0
    for _ in range(200):
        a, b = _draw_exponents(rng)
        c, c2 = rng.uniform(-2.0, 2.0, size=2)
        r = float(rng.uniform(0.1, 2.0))
        K = float(rng.uniform(2.1, 15.0))
        val = growth.closed_form_I(a, b, float(c), float(c2), r, K)
        ref, _ = quad(lambda s: (c * s**a + c2 * s**b) ** 2 / s, r, K * r, epsabs=1e-13, epsrel=1e-12, limit=300)
        worst = max(worst, abs(val - ref) / (1.0 + abs(ref)))
    elapsed = time.perf_counter() - t0
    passed = worst <= 1e-8 and elapsed < 5.0
    return CriterionResult("GR-1", "growth", passed, f"max_rel_err={worst:.3e}", "1e-8; runtime<5s")


def _gr2(seed: int) -> CriterionResult:
    rng = _rng(seed + 1)
    worst_identity = 0.0
    mismatches = 0
    for _ in range(200):
        a, b = _draw_exponents(rng)
        K = float(rng.uniform(2.05, 12.0))
        r = float(rng.uniform(0.5, 1.5))
        d = growth.discriminant_power(K, a, b)
        sym = growth.discriminant_power(K, b, a)
        scaled = K ** (6 * a + 6 * b) * growth.discriminant_power(K, -a, -b)
        scale_ref = max(abs(d), abs(sym), abs(scaled), 1e-300)
        worst_identity = max(worst_identity, abs(d - sym) / scale_ref, abs(d - scaled) / scale_ref)
        A = (K ** (2 * a) - 1.0) ** 3 * r ** (2 * a) / (2 * a)
        B = (K ** (a + b) - 1.0) ** 3 * r ** (a + b) / (a + b)
        C = (K ** (2 * b) - 1.0) ** 3 * r ** (2 * b) / (2 * b)
        eig = np.linalg.eigvalsh(np.array([[A, B], [B, C]]))
        if bool(np.all(eig > 0.0)) != (d < 0.0 and A > 0.0):
            mismatches += 1
    passed = worst_identity <= 1e-9 and mismatches == 0
    measured = f"max_rel_err={worst_identity:.3e};pd_mismatches={mismatches}"
    return CriterionResult("GR-2", "growth", passed, measured, "1e-9; equivalence exact")


def _gr3(seed: int) -> CriterionResult:
    t0 = time.perf_counter()
    rng = _rng(seed + 2)
    result = growth.find_threshold_K(1.0, "power", GR3_GRID)
    ladder = cones.cross_section_spectrum(cones.ProductSphere(3, 3), 10.0)
    min_lhs = math.inf
    strict_failures = 0
    for _ in range(100):
        terms = []
        while all(cp == 0.0 and cm == 0.0 for _, cp, cm in terms) or not terms:
            terms = [(j, float(rng.normal()), float(rng.normal())) for j in (1, 2, 3)]
        coeffs = growth.JacobiCoefficients(
            ladder, tuple(growth.ModeCoefficient(j, cp, cm) for j, cp, cm in terms)
        )
        lhs, strict = growth.three_scale_check(coeffs, -1.0, result.k_star, sigma=1.0)
        min_lhs = min(min_lhs, lhs)
        if not strict:
            strict_failures += 1
    elapsed = time.perf_counter() - t0
    passed = result.k_star <= 50.0 and strict_failures == 0 and min_lhs > 0.0 and elapsed < 30.0
    measured = f"K_star={result.k_star};min_lhs={min_lhs:.3e};strict_failures={strict_failures}"
    return CriterionResult("GR-3", "growth", passed, measured, "K<=50; lhs>0; runtime<30s")


def _gr4(seed: int) -> CriterionResult:
    worst_profile = 0.0
    rate_err = 0.0
    K = growth.find_threshold_K(1.0, "power", GR3_GRID).k_star
    for slope, exponent in [(-2.0, -2.0), (-3.0, -3.0)]:
        prob = growth.PerturbedRadialProblem(mu=-6.0, n=7)
        prof = growth.solve_radial_jacobi(prob, (1.0, slope), 0.01)
        exact = prof.r**exponent
        worst_profile = max(worst_profile, float(np.max(np.abs(prof.v - exact) / exact)))

        def mass(s: float) -> float:
            m = (prof.r >= s) & (prof.r <= 2 * s)
            t = np.log(prof.r[m])
            integ = prof.v[m] ** 2 * np.exp(7 * t)
            return float(np.trapezoid(integ, t))

        samples = [(s, mass(s)) for s in (0.4, 0.25, 0.15, 0.09, 0.05, 0.03)]
        rate = growth.estimate_rate_from_samples(samples, 7)
        rate_err = max(rate_err, abs(rate - exponent))
    pert = growth.PerturbedRadialProblem(mu=-6.0, n=7, b0_scale=0.02, b1_scale=0.02, perturbation_profile="bump")
    prof = growth.solve_radial_jacobi(pert, (1.0, -2.0), K**-3 / 2.0, num_samples=4097)
    corollary_ok = growth.perturbed_convexity_check(prof, -1.0, K, 0.02)
    passed = worst_profile <= 1e-8 and rate_err <= 1e-3 and corollary_ok
    measured = f"ode_rel_err={worst_profile:.3e};rate_err={rate_err:.3e};perturbed_ok={corollary_ok}"
    return CriterionResult("GR-4", "growth", passed, measured, "1e-8; 1e-3; strict inequality")


# --------------------------------------------------------------------------
# graph suite
# --------------------------------------------------------------------------


def _gg1(seed: int) -> CriterionResult:
    t0 = time.perf_counter()
    slopes = []
    for h in (1.0 / 16.0, 1.0 / 32.0):
        _, slope = graphs.linearization_order_study(7, h, joint=True)
        slopes.append(slope)
    coef = graphs.conformal_coefficient_fit(7, 1.0 / 16.0)
    coef_dev = abs(coef - 3.5) / 3.5
    elapsed = time.perf_counter() - t0
    passed = all(1.8 <= s <= 2.2 for s in slopes) and coef_dev <= 0.01 and elapsed < 60.0
    measured = f"slopes={slopes[0]:.3f},{slopes[1]:.3f};conformal_coef={coef:.6f}"
    return CriterionResult("GG-1", "graph", passed, measured, "2.0+-0.2; coef within 1%; runtime<60s")


def _gg2(seed: int) -> CriterionResult:
    h = 1.0 / 16.0
    model = graphs.FlatModel(n=7, h=h, active_dims=2)
    x1, x2 = model.mesh()
    worst = 0.0
    corpus = [
        (np.sin(x1) * np.cos(x2), 1.0),
        ((x1 + 2.0) ** 1.5, np.sqrt((x1 + 2.0) ** 2 + (x2 + 2.0) ** 2)),
        (np.exp(x1 + x2 / 2.0), 0.5),
    ]
    for samples, weight in corpus:
        base_field = graphs.WeightedField(samples=samples, spacing=h, weight=weight)
        for k in (0, 1, 2):
            base = graphs.ck_star_norm(base_field, k)
            for lam in (2.0, 3.0, 0.25):
                rescaled = graphs.ck_star_norm(base_field.rescaled(lam), k)
                worst = max(worst, abs(rescaled - base) / base)
    passed = worst <= 1e-12
    return CriterionResult("GG-2", "graph", passed, f"max_rel_dev={worst:.3e}", "1e-12")


# --------------------------------------------------------------------------
# trees suite
# --------------------------------------------------------------------------

_CONE_POOL = ("cA", "cB", "cC")
_CONE_TABLE = trees.ConeDistanceTable(
    [("cA", "cB", 0.0005), ("cA", "cC", 0.003), ("cB", "cC", 0.003)]
)
_MODELS = {
    "M1": trees.SmoothModelMeta(
        id="M1",
        density_at_infinity=1.47,
        outer_cone="cA",
        inner_balls=(trees.InnerBall(y=(0.3,) + (0.0,) * 7, r=0.05, cone_class="cA", multiplicity=1),),
        sigma=0.1,
    ),
    "M2": trees.SmoothModelMeta(
        id="M2",
        density_at_infinity=2.1,
        outer_cone="cB",
        inner_balls=(
            trees.InnerBall(y=(0.3,) + (0.0,) * 7, r=0.05, cone_class="cA", multiplicity=1),
            trees.InnerBall(y=(-0.3,) + (0.0,) * 7, r=0.04, cone_class="cB", multiplicity=2),
        ),
        sigma=0.1,
    ),
}
_DENSITY_POOL = {"cA": 1.47, "cB": 1.57, "cC": 2.2}


def _rand_point(rng: np.random.Generator, scale: float = 0.2) -> tuple[float, ...]:
    return tuple(float(v) for v in rng.uniform(-scale, scale, size=8))


def _random_valid_tree(rng: np.random.Generator, beta: float, depth: int = 0) -> trees.TreeNode:
    cone = _CONE_POOL[int(rng.integers(len(_CONE_POOL)))]
    x = _rand_point(rng)
    R = float(rng.uniform(0.3, 1.0))
    return _random_chain(rng, beta, cone, x, R, depth)


def _random_chain(rng, beta, cone, x, R, depth, m: int = 1) -> trees.TreeNode:
    density = _DENSITY_POOL[cone]
    if depth >= 3 or rng.random() < 0.35:
        return trees.TypeINode(cone, density, m, x, R, 0.0)
    rho = float(rng.uniform(0.1, 0.5)) * R
    if rng.random() < 0.5:
        child = _random_chain(
            rng, beta, _CONE_POOL[int(rng.integers(len(_CONE_POOL)))], x, rho, depth + 1, m
        )
    else:
        child = _random_model_node(rng, beta, x, rho, depth + 1)
    return trees.TypeINode(cone, density, m, x, R, rho, (child,))


def _random_model_node(rng, beta, x, R, depth) -> trees.TreeNode:
    model_id = "M1" if rng.random() < 0.5 else "M2"
    meta = _MODELS[model_id]
    children = []
    for ball in meta.inner_balls:
        anchor = tuple(xc + R * yc for xc, yc in zip(x, ball.y))
        jitter = rng.uniform(-1.0, 1.0, size=8)
        jitter = jitter / max(1.0, float(np.linalg.norm(jitter))) * 0.25 * beta * R * ball.r
        cx = tuple(float(a + j) for a, j in zip(anchor, jitter))
        ratio = float(rng.uniform(0.6, 1.0 + 0.5 * beta))
        cr = R * ball.r * ratio
        if depth >= 3 or rng.random() < 0.7:
            child = trees.TypeINode(ball.cone_class, _DENSITY_POOL[ball.cone_class], ball.multiplicity, cx, cr, 0.0)
        else:
            child = _random_chain(rng, beta, ball.cone_class, cx, cr, depth + 1, ball.multiplicity)
        children.append(child)
    return trees.TypeIINode(model=model_id, x=x, R=R, children=tuple(children))


def _perturbed_partner(
    rng,
    node: trees.TreeNode,
    scale: float,
    forced_x: tuple[float, ...] | None = None,
    forced_R: float | None = None,
) -> trees.TreeNode:
    """Same coarse tree, parameters moved by about `scale` relative amounts.

    Chain and model-node constraints (shared centres, radius couplings) are
    enforced top-down so the partner stays structurally valid.
    """

    def jitter_point(x, amount):
        v = rng.uniform(-1.0, 1.0, size=8)
        v = v / max(1.0, float(np.linalg.norm(v))) * amount
        return tuple(float(a + b) for a, b in zip(x, v))

    if isinstance(node, trees.TypeINode):
        if node.rho == 0.0:
            amount = scale * node.R
            x2 = forced_x if forced_x is not None else jitter_point(node.x, amount)
            R2 = forced_R if forced_R is not None else node.R * (1.0 + float(rng.uniform(-scale, scale)))
            return trees.TypeINode(node.cone_class, node.density, node.m, x2, R2, 0.0)
        rho2 = node.rho * (1.0 + float(rng.uniform(-scale, scale)))
        amount = scale * min(node.rho, rho2)
        x2 = forced_x if forced_x is not None else jitter_point(node.x, amount)
        if forced_R is not None:
            R2 = forced_R
        else:
            R2 = max(node.R + float(rng.uniform(-amount, amount)), 2.0 * rho2)
        rho2 = min(rho2, R2 / 2.0)
        child2 = _perturbed_partner(rng, node.children[0], scale, forced_x=x2, forced_R=rho2)
        return trees.TypeINode(node.cone_class, node.density, node.m, x2, R2, rho2, (child2,))
    meta = _MODELS[node.model]
    amount = scale * node.R * meta.min_inner_radius()
    x2 = forced_x if forced_x is not None else jitter_point(node.x, amount)
    R2 = forced_R if forced_R is not None else node.R + float(rng.uniform(-amount, amount))
    children = []
    for ball, child in zip(meta.inner_balls, node.children):
        anchor = tuple(xc + R2 * yc for xc, yc in zip(x2, ball.y))
        beta = 0.01
        cx = jitter_point(anchor, 0.25 * beta * R2 * ball.r)
        ratio = float(rng.uniform(0.6, 1.0 + 0.5 * beta))
        children.append(_perturbed_partner(rng, child, scale, forced_x=cx, forced_R=R2 * ball.r * ratio))
    return trees.TypeIINode(node.model, x2, R2, tuple(children))


def _ct1(seed: int) -> CriterionResult:
    rng = _rng(seed + 3)
    beta = 0.01
    reflexivity = symmetry = monotonicity = shortcircuit = invalid = 0
    for _ in range(500):
        tree = _random_valid_tree(rng, beta)
        gamma = float(rng.uniform(0.002, 0.009))
        partner = _perturbed_partner(rng, tree, scale=float(rng.uniform(0.1, 1.5)) * gamma)
        if trees.validate_tree(tree, beta, _MODELS) or trees.validate_tree(partner, beta, _MODELS):
            invalid += 1
            continue
        if not trees.gamma_close(tree, tree, gamma, _CONE_TABLE, _MODELS):
            reflexivity += 1
        ab = trees.gamma_close(tree, partner, gamma, _CONE_TABLE, _MODELS)
        ba = trees.gamma_close(partner, tree, gamma, _CONE_TABLE, _MODELS)
        if bool(ab) != bool(ba):
            symmetry += 1
        wider = trees.gamma_close(tree, partner, min(0.0099, 1.5 * gamma), _CONE_TABLE, _MODELS)
        if ab and not wider:
            monotonicity += 1
        mutated = trees.TypeINode("cA", 9.9, 1, (0.0,) * 8, 0.5, 0.0)
        verdict = trees.gamma_close(tree, mutated, gamma, _CONE_TABLE, _MODELS)
        if not (verdict.failure_kind == "coarse-mismatch" or coarse_equal_fallback(tree, mutated)):
            shortcircuit += 1
    failures = reflexivity + symmetry + monotonicity + shortcircuit + invalid
    measured = (
        f"invalid_pairs={invalid};reflexivity={reflexivity};symmetry={symmetry};"
        f"monotonicity={monotonicity};coarse_shortcircuit={shortcircuit}"
    )
    return CriterionResult("CT-1", "trees", failures == 0, measured, "0 violations over 500 pairs")


def coarse_equal_fallback(a: trees.TreeNode, b: trees.TreeNode) -> bool:
    return trees.coarse_tree(a) == trees.coarse_tree(b)


def _ct2(seed: int) -> CriterionResult:
    rng = _rng(seed + 4)
    cover = trees.CubeBallCover(dim=8, half_width=1.0)
    gamma2, r0 = 0.01, 0.5
    base2 = 1.0 + gamma2 * r0 / 2.0
    type2_checked = type2_violations = 0
    defects = 0
    attempts = 0
    while type2_checked < 1000 and attempts < 40000:
        attempts += 1
        k = int(rng.integers(-40, 1))
        R1, R2 = (float(v) for v in base2**k * (1.0 + rng.uniform(0.0, 1.0, size=2) * (base2 - 1.0)))
        radius = base2**k * gamma2 * r0 / 10.0
        centre = rng.uniform(-0.9, 0.9, size=8)
        x1 = tuple(float(v) for v in np.clip(centre + rng.uniform(-1, 1, size=8) * radius / 40.0, -1, 1))
        x2 = tuple(float(v) for v in np.clip(centre + rng.uniform(-1, 1, size=8) * radius / 40.0, -1, 1))
        try:
            c1 = trees.covering_cell_type2(x1, R1, gamma2, r0, cover)
            c2 = trees.covering_cell_type2(x2, R2, gamma2, r0, cover)
        except ValueError:
            defects += 1
            continue
        if c1 != c2:
            continue
        type2_checked += 1
        bound = gamma2 * min(R1, R2) * r0 + 1e-12
        if abs(R1 - R2) > bound or math.dist(x1, x2) > bound:
            type2_violations += 1

    gamma1 = 0.008
    base1 = 1.0 + gamma1 / 2.0
    scheme = trees.Type1CoverScheme(
        cone_net=_CONE_POOL, cone_metric=_CONE_TABLE, cube=cover, r_cap=1.0
    )
    type1_checked = type1_violations = 0
    attempts = 0
    while type1_checked < 1000 and attempts < 60000:
        attempts += 1
        rho1 = float(rng.uniform(0.002, 0.4))
        k = math.floor(math.log(rho1) / math.log(base1) + 1e-9)
        rho2 = float(base1**k * (1.0 + rng.uniform(0.0, 1.0) * (base1 - 1.0)))
        if 2.0 * max(rho1, rho2) >= 1.0:
            continue
        shrink = min(1.0, base1**k)
        base_r = 1.0 + (gamma1 / 2.0) * shrink
        R1 = float(rng.uniform(2.0 * max(rho1, rho2), 1.0))
        kp = math.floor(math.log(R1) / math.log(base_r) + 1e-9)
        R2 = float(base_r**kp * (1.0 + rng.uniform(0.0, 1.0) * (base_r - 1.0)))
        if not (2.0 * max(rho1, rho2) <= R2 <= 1.0):
            continue
        radius = base_r**kp * gamma1 * shrink / 10.0
        centre = rng.uniform(-0.9, 0.9, size=8)
        x1 = tuple(float(v) for v in np.clip(centre + rng.uniform(-1, 1, size=8) * radius / 40.0, -1, 1))
        x2 = tuple(float(v) for v in np.clip(centre + rng.uniform(-1, 1, size=8) * radius / 40.0, -1, 1))
        cone = _CONE_POOL[int(rng.integers(len(_CONE_POOL)))]
        try:
            c1 = trees.covering_cell_type1(cone, x1, R1, rho1, gamma1, scheme)
            c2 = trees.covering_cell_type1(cone, x2, R2, rho2, gamma1, scheme)
        except ValueError:
            defects += 1
            continue
        if c1 != c2:
            continue
        type1_checked += 1
        bound = gamma1 * min(rho1, rho2) + 1e-12
        if abs(rho1 - rho2) > bound or math.dist(x1, x2) > bound or abs(R1 - R2) > bound:
            type1_violations += 1

    # totality: every admissible tuple receives a cell
    for _ in range(1000):
        x = tuple(float(v) for v in rng.uniform(-1.0, 1.0, size=8))
        R = float(rng.uniform(1e-4, 1.0))
        rho = float(rng.uniform(0.0, 0.5)) * R
        cone = _CONE_POOL[int(rng.integers(len(_CONE_POOL)))]
        try:
            trees.covering_cell_type1(cone, x, R, rho, gamma1, scheme)
            trees.covering_cell_type2(x, R, gamma2, r0, cover)
        except ValueError:
            defects += 1

    complete = type2_checked == 1000 and type1_checked == 1000
    passed = complete and type1_violations == 0 and type2_violations == 0 and defects == 0
    measured = (
        f"typeII_pairs={type2_checked};typeII_violations={type2_violations};"
        f"typeI_pairs={type1_checked};typeI_violations={type1_violations};defects={defects}"
    )
    return CriterionResult("CT-2", "trees", passed, measured, "0 violations; 0 defects")


def _random_dag(rng: np.random.Generator, size: int = 6) -> trees.DegenerationDag:
    names = [f"c{i}" for i in range(size)]
    densities = {name: 1.0 + 0.5 * i for i, name in enumerate(names)}
    scenarios: dict[str, tuple[tuple[str, ...], ...]] = {}
    for i, name in enumerate(names):
        if i == 0 or rng.random() < 0.3:
            continue
        scen_list = []
        for _ in range(int(rng.integers(1, 3))):
            kids = tuple(names[int(rng.integers(0, i))] for _ in range(int(rng.integers(1, 4))))
            scen_list.append(kids)
        scenarios[name] = tuple(scen_list)
    return trees.DegenerationDag(densities, scenarios)


def _ct3(seed: int) -> CriterionResult:
    rng = _rng(seed + 5)
    exact_ok = True
    leaf_dag = trees.DegenerationDag({"X": 1.5})
    exact_ok &= trees.scap_cone(leaf_dag, "X") == 1
    branch = trees.DegenerationDag({"A": 3.0, "B": 2.0}, {"A": (("B", "B"), ("B",))})
    exact_ok &= trees.scap_cone(branch, "A") == 3
    chain = trees.DegenerationDag({"A": 3.0, "B": 2.0, "C": 1.5}, {"A": (("B",),), "B": (("C",),)})
    exact_ok &= trees.scap_cone(chain, "A") == 3
    exact_ok &= trees.scap_surface([], False, chain) == 0
    exact_ok &= trees.scap_surface(["C", "A"], False, chain) == 4
    exact_ok &= trees.scap_surface(["C", "A"], True, chain) == 8

    usc_failures = 0
    monotone_failures = 0
    for _ in range(100):
        dag = _random_dag(rng)
        for cone in dag.densities:
            if not trees.scap_usc_check(dag, cone):
                usc_failures += 1
        ids = sorted(dag.densities)
        parent = ids[int(rng.integers(1, len(ids)))]
        lower = [c for c in ids if dag.densities[c] < dag.densities[parent]]
        if lower:
            children = [lower[int(rng.integers(len(lower)))] for _ in range(int(rng.integers(1, 4)))]
            bigger = dag.with_scenario(parent, children)
            if any(trees.scap_cone(bigger, c) < trees.scap_cone(dag, c) for c in ids):
                monotone_failures += 1
    passed = exact_ok and usc_failures == 0 and monotone_failures == 0
    measured = f"exact_ok={exact_ok};usc_failures={usc_failures};monotone_failures={monotone_failures}"
    return CriterionResult("CT-3", "trees", passed, measured, "exact; 0 failures over 100 dags")


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

CRITERIA: list[tuple[str, str, Callable[[int], CriterionResult]]] = [
    ("SP-1", "spectrum", _sp1),
    ("SP-2", "spectrum", _sp2),
    ("SP-3", "spectrum", _sp3),
    ("GR-1", "growth", _gr1),
    ("GR-2", "growth", _gr2),
    ("GR-3", "growth", _gr3),
    ("GR-4", "growth", _gr4),
    ("GG-1", "graph", _gg1),
    ("GG-2", "graph", _gg2),
    ("CT-1", "trees", _ct1),
    ("CT-2", "trees", _ct2),
    ("CT-3", "trees", _ct3),
]

SUITES = ("spectrum", "growth", "graph", "trees", "all")


def criterion_ids(suite: str = "all") -> list[str]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [cid for cid, s, _ in CRITERIA if suite == "all" or s == suite]


def run_criteria(suite: str = "all", seed: int = 0) -> list[CriterionResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for cid, s, fn in CRITERIA:
        if suite != "all" and s != suite:
            continue
        results.append(fn(seed))
    return results
