import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercone_lab.trees import (
    ConeDistanceTable,
    CubeBallCover,
    DegenerationDag,
    InnerBall,
    LargeScaleTree,
    SmoothModelMeta,
    Type1CoverScheme,
    TypeINode,
    TypeIINode,
    coarse_tree,
    covering_cell_type1,
    covering_cell_type2,
    density_ladder,
    gamma_close,
    gamma_close_large_scale,
    scap_cone,
    scap_surface,
    scap_usc_check,
    validate_tree,
)

O8 = (0.0,) * 8


def shifted(point, delta, axis=0):
    out = list(point)
    out[axis] += delta
    return tuple(out)


@pytest.fixture
def model_registry():
    meta = SmoothModelMeta(
        id="S1",
        density_at_infinity=1.47,
        outer_cone="simons",
        inner_balls=(
            InnerBall(y=shifted(O8, 0.3), r=0.05, cone_class="simons", multiplicity=1),
            InnerBall(y=shifted(O8, -0.3), r=0.04, cone_class="other", multiplicity=2),
        ),
        sigma=0.1,
    )
    return {"S1": meta}


def valid_type2_tree(model_registry):
    meta = model_registry["S1"]
    x, R = O8, 1.0
    children = []
    for ball in meta.inner_balls:
        centre = tuple(xc + R * yc for xc, yc in zip(x, ball.y))
        children.append(
            TypeINode(
                cone_class=ball.cone_class,
                density=1.47,
                m=ball.multiplicity,
                x=centre,
                R=R * ball.r,
                rho=0.0,
            )
        )
    return TypeIINode(model="S1", x=x, R=R, children=tuple(children))


class TestValidation:
    def test_valid_leaf(self):
        leaf = TypeINode("simons", 1.47, 1, O8, 0.5, 0.0)
        assert validate_tree(leaf, 0.01) == []

    def test_leaf_density_rule(self):
        leaf = TypeINode("simons", 1.0, 1, O8, 0.5, 0.0)
        messages = [v.message for v in validate_tree(leaf, 0.01)]
        assert any("density must exceed 1" in m for m in messages)

    def test_radius_rule(self):
        node = TypeINode("simons", 1.47, 1, O8, 0.5, 0.3, (TypeINode("simons", 1.47, 1, O8, 0.3, 0.0),))
        messages = [v.message for v in validate_tree(node, 0.01)]
        assert any("R >= 2 rho" in m for m in messages)

    def test_annulus_child_rules(self):
        bad_centre = TypeINode(
            "simons", 1.47, 1, O8, 1.0, 0.4, (TypeINode("simons", 1.47, 1, shifted(O8, 0.1), 0.4, 0.0),)
        )
        assert any("centre" in v.message for v in validate_tree(bad_centre, 0.01))
        bad_radius = TypeINode(
            "simons", 1.47, 1, O8, 1.0, 0.4, (TypeINode("simons", 1.47, 1, O8, 0.35, 0.0),)
        )
        assert any("radius must equal rho" in v.message for v in validate_tree(bad_radius, 0.01))
        two_children = TypeINode(
            "simons",
            1.47,
            1,
            O8,
            1.0,
            0.4,
            (TypeINode("simons", 1.47, 1, O8, 0.4, 0.0), TypeINode("simons", 1.47, 1, O8, 0.4, 0.0)),
        )
        assert any("exactly one child" in v.message for v in validate_tree(two_children, 0.01))
        leaf_with_child = TypeINode(
            "simons", 1.47, 1, O8, 1.0, 0.0, (TypeINode("simons", 1.47, 1, O8, 0.4, 0.0),)
        )
        assert any("must be a leaf" in v.message for v in validate_tree(leaf_with_child, 0.01))

    def test_type2_rules(self, model_registry):
        tree = valid_type2_tree(model_registry)
        assert validate_tree(tree, 0.01, model_registry) == []
        # unknown model
        assert any(
            "unknown smooth model" in v.message
            for v in validate_tree(TypeIINode(model="nope", x=O8, R=1.0), 0.01, model_registry)
        )
        # offset child
        kids = list(tree.children)
        kids[0] = TypeINode(kids[0].cone_class, 1.47, kids[0].m, shifted(kids[0].x, 0.01), kids[0].R, 0.0)
        bad = TypeIINode(model="S1", x=O8, R=1.0, children=tuple(kids))
        assert any("offset" in v.message for v in validate_tree(bad, 0.01, model_registry))
        # wrong multiplicity
        kids = list(tree.children)
        kids[1] = TypeINode(kids[1].cone_class, 1.47, 1, kids[1].x, kids[1].R, 0.0)
        bad = TypeIINode(model="S1", x=O8, R=1.0, children=tuple(kids))
        assert any("multiplicity" in v.message for v in validate_tree(bad, 0.01, model_registry))
        # child count
        bad = TypeIINode(model="S1", x=O8, R=1.0, children=(tree.children[0],))
        assert any("one child per inner ball" in v.message for v in validate_tree(bad, 0.01, model_registry))

    def test_smooth_model_invariants(self):
        with pytest.raises(ValueError, match="disjoint"):
            SmoothModelMeta(
                id="bad",
                density_at_infinity=1.2,
                outer_cone="c",
                inner_balls=(
                    InnerBall(y=shifted(O8, 0.1), r=0.05, cone_class="c"),
                    InnerBall(y=shifted(O8, 0.15), r=0.05, cone_class="c"),
                ),
            )
        with pytest.raises(ValueError, match="leaves"):
            SmoothModelMeta(
                id="bad2",
                density_at_infinity=1.2,
                outer_cone="c",
                inner_balls=(InnerBall(y=shifted(O8, 0.68), r=0.05, cone_class="c"),),
                sigma=0.1,
            )


class TestCoarse:
    def test_leaf_relabel(self):
        leaf = TypeINode("simons", 1.47, 1, O8, 0.5, 0.0)
        assert coarse_tree(leaf) == ("I", 1.47, 1, ())

    def test_parameters_dropped(self):
        a = TypeINode("simons", 1.47, 2, O8, 0.5, 0.0)
        b = TypeINode("simons", 1.47, 2, shifted(O8, 0.3), 0.9, 0.0)
        assert coarse_tree(a) == coarse_tree(b)

    def test_shape_preserved(self, model_registry):
        tree = valid_type2_tree(model_registry)
        coarse = coarse_tree(tree)
        assert coarse[0] == "II" and coarse[1] == "S1" and len(coarse[2]) == 2
        other = TypeIINode(model="S1", x=O8, R=1.0, children=(tree.children[0],))
        assert coarse_tree(other) != coarse


class TestCloseness:
    table = ConeDistanceTable([("a", "b", 0.002)])

    def chain(self, rho, x=O8, R=1.0):
        return TypeINode("a", 1.47, 1, x, R, rho, (TypeINode("a", 1.47, 1, x, rho, 0.0),))

    def test_reflexive(self):
        t = self.chain(0.1)
        for gamma in (0.001, 0.005, 0.009):
            assert gamma_close(t, t, gamma, self.table)

    def test_rho_perturbation_examples(self):
        a, b = self.chain(0.1), self.chain(0.1005)
        assert gamma_close(a, b, 0.01, self.table)
        verdict = gamma_close(a, b, 0.004, self.table)
        assert not verdict
        assert "rho" in verdict.detail

    def test_symmetry_and_monotonicity(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            rho = float(rng.uniform(0.05, 0.2))
            a = self.chain(rho)
            b = self.chain(rho * (1.0 + float(rng.uniform(-0.008, 0.008))))
            gammas = sorted(rng.uniform(0.0005, 0.0099, size=2))
            lo = gamma_close(a, b, gammas[0], self.table)
            hi = gamma_close(a, b, gammas[1], self.table)
            assert bool(lo) == bool(gamma_close(b, a, gammas[0], self.table))
            if lo:
                assert hi

    def test_coarse_mismatch_short_circuits(self):
        a = self.chain(0.1)
        b = TypeINode("a", 1.47, 2, O8, 1.0, 0.1, (TypeINode("a", 1.47, 2, O8, 0.1, 0.0),))
        verdict = gamma_close(a, b, 0.005, self.table)
        assert verdict.failure_kind == "coarse-mismatch"

    def test_cone_distance_checked(self):
        a = self.chain(0.1)
        b = TypeINode("b", 1.47, 1, O8, 1.0, 0.1, (TypeINode("a", 1.47, 1, O8, 0.1, 0.0),))
        verdict = gamma_close(a, b, 0.001, self.table)
        assert verdict.failure_kind == "cone-distance"
        assert gamma_close(a, b, 0.005, self.table)

    def test_type2_inequalities(self, model_registry):
        t1 = valid_type2_tree(model_registry)
        min_r = 0.04
        delta = 0.0009 * min_r  # inside gamma * min(R) * min_r for gamma=0.001? no: use gamma=0.005
        kids = t1.children
        t2 = TypeIINode(model="S1", x=shifted(O8, delta), R=1.0, children=kids)
        assert gamma_close(t1, t2, 0.005, self.table, model_registry)
        verdict = gamma_close(t1, t2, 0.0001, self.table, model_registry)
        assert not verdict and verdict.failure_kind == "type-II"

    def test_large_scale(self):
        sub_a = self.chain(0.1, x=shifted(O8, -0.5), R=0.2)
        sub_b = self.chain(0.1, x=shifted(O8, 0.5), R=0.2)
        t = LargeScaleTree("surf", "metric", (shifted(O8, -0.5), shifted(O8, 0.5)), (0.25, 0.25), (sub_a, sub_b))
        assert gamma_close_large_scale(t, t, 0.005, self.table)
        other = LargeScaleTree(
            "surf",
            "metric",
            (shifted(O8, -0.5), shifted(O8, 0.5)),
            (0.25, 0.25),
            (sub_a, self.chain(0.102, x=shifted(O8, 0.5), R=0.2)),
        )
        verdict = gamma_close_large_scale(t, other, 0.005, self.table)
        assert not verdict and verdict.failure_path.startswith("subtree[1]")
        fewer = LargeScaleTree("surf", "metric", (shifted(O8, -0.5),), (0.25,), (sub_a,))
        assert gamma_close_large_scale(t, fewer, 0.005, self.table).failure_kind == "root-label"

    def test_disjointness_invariant(self):
        with pytest.raises(ValueError, match="disjoint"):
            LargeScaleTree(
                "surf",
                "metric",
                (O8, shifted(O8, 0.1)),
                (0.25, 0.25),
                (self.chain(0.1), self.chain(0.1)),
            )

    def test_gamma_range_guard(self):
        t = self.chain(0.1)
        with pytest.raises(ValueError):
            gamma_close(t, t, 0.5, self.table)

    def test_missing_model_registry_raises(self, model_registry):
        tree = valid_type2_tree(model_registry)
        with pytest.raises(ValueError, match="unknown smooth model"):
            gamma_close(tree, tree, 0.005, self.table, models={})

    def test_missing_cone_distance_raises(self):
        a = self.chain(0.1)
        b = TypeINode("zz", 1.47, 1, O8, 1.0, 0.1, (TypeINode("zz", 1.47, 1, O8, 0.1, 0.0),))
        with pytest.raises(ValueError, match="no tabulated cone distance"):
            gamma_close(a, b, 0.005, self.table)


class TestCoveringType2:
    cover = CubeBallCover(dim=8, half_width=1.0)

    def test_interval_example(self):
        k, _ = covering_cell_type2(O8, 1.5, 0.2, 1.0, self.cover)
        assert k == 4

    def test_boundary_assignment(self):
        k, _ = covering_cell_type2(O8, 1.0, 0.2, 1.0, self.cover)
        assert k == 0

    def test_same_cell_pairs_are_close(self):
        rng = np.random.default_rng(31)
        gamma, r0 = 0.01, 0.5
        base = 1.0 + gamma * r0 / 2.0
        for _ in range(200):
            k = int(rng.integers(-40, 10))
            R1, R2 = base**k * (1.0 + rng.uniform(0.0, 1.0, size=2) * (base - 1.0))
            radius = base**k * gamma * r0 / 10.0
            centre = rng.uniform(-0.9, 0.9, size=8)
            x1 = tuple(np.clip(centre + rng.uniform(-1, 1, size=8) * radius / 3.0, -1, 1))
            x2 = tuple(np.clip(centre + rng.uniform(-1, 1, size=8) * radius / 3.0, -1, 1))
            c1 = covering_cell_type2(x1, float(R1), gamma, r0, self.cover)
            c2 = covering_cell_type2(x2, float(R2), gamma, r0, self.cover)
            if c1 != c2:
                continue
            assert abs(R1 - R2) <= gamma * min(R1, R2) * r0 + 1e-12
            assert math.dist(x1, x2) <= gamma * min(R1, R2) * r0 + 1e-12

    def test_cover_defect_outside_cube(self):
        with pytest.raises(ValueError, match="cover defect"):
            covering_cell_type2((2.0,) * 8, 1.0, 0.2, 1.0, self.cover)


class TestCoveringType1:
    table = ConeDistanceTable([("a", "b", 0.002), ("a", "far", 0.5), ("b", "far", 0.5)])
    scheme = Type1CoverScheme(
        cone_net=("a",),
        cone_metric=table,
        cube=CubeBallCover(dim=8, half_width=1.0),
        r_cap=1.0,
    )

    def test_rho_interval_example(self):
        wide = Type1CoverScheme(
            cone_net=("a",), cone_metric=self.table, cube=CubeBallCover(dim=8), r_cap=10.0
        )
        cell = covering_cell_type1("a", O8, 8.0, 2.0, 0.02, wide)
        assert cell[1] == 69

    def test_rho_zero_atom(self):
        cell = covering_cell_type1("a", O8, 0.5, 0.0, 0.02, self.scheme)
        assert cell[1] == "zero"

    def test_cone_net_defect(self):
        with pytest.raises(ValueError, match="cone net defect"):
            covering_cell_type1("far", O8, 0.5, 0.0, 0.02, self.scheme)

    def test_net_assignment_radius(self):
        # "b" sits within gamma/2 of net element "a" for gamma = 0.005
        cell = covering_cell_type1("b", O8, 0.5, 0.1, 0.005, self.scheme)
        assert cell[0] == 0

    def test_same_cell_pairs_are_close(self):
        rng = np.random.default_rng(37)
        gamma = 0.008
        base = 1.0 + gamma / 2.0
        for _ in range(200):
            rho = float(rng.uniform(0.001, 0.5))
            k = math.floor(math.log(rho) / math.log(base) + 1e-9)
            rho2 = float(base**k * (1.0 + rng.uniform(0.0, 1.0) * (base - 1.0)))
            R = float(rng.uniform(2 * max(rho, rho2), 1.0))
            if 2 * max(rho, rho2) > 1.0:
                continue
            shrink = min(1.0, base**k)
            base_r = 1.0 + (gamma / 2.0) * shrink
            kp = math.floor(math.log(R) / math.log(base_r) + 1e-9)
            R2 = float(base_r**kp * (1.0 + rng.uniform(0.0, 1.0) * (base_r - 1.0)))
            if R2 < 2 * max(rho, rho2) or R2 > 1.0:
                continue
            radius = base_r**kp * gamma * shrink / 10.0
            centre = rng.uniform(-0.9, 0.9, size=8)
            x1 = tuple(np.clip(centre + rng.uniform(-1, 1, size=8) * radius / 3.0, -1, 1))
            x2 = tuple(np.clip(centre + rng.uniform(-1, 1, size=8) * radius / 3.0, -1, 1))
            c1 = covering_cell_type1("a", x1, R, rho, gamma, self.scheme)
            c2 = covering_cell_type1("a", x2, R2, rho2, gamma, self.scheme)
            if c1 != c2:
                continue
            bound = gamma * min(rho, rho2) + 1e-12
            assert abs(rho - rho2) <= bound
            assert math.dist(x1, x2) <= bound
            assert abs(R - R2) <= bound

    def test_r_cap_enforced(self):
        with pytest.raises(ValueError, match="cap"):
            covering_cell_type1("a", O8, 1.5, 0.2, 0.01, self.scheme)


class TestDensityLadder:
    def test_two_base_values(self):
        assert density_ladder((1.0, 1.5), 4.0).merged == (1.0, 1.5, 2.0, 3.0, 4.0)

    def test_integer_multiples(self):
        assert density_ladder((1.0,), 3.0).merged == (1.0, 2.0, 3.0)

    def test_simons_value(self):
        merged = density_ladder((1.0, 1.4726), 3.0).merged
        assert merged == (1.0, 1.4726, 2.0, 2.9452, 3.0)

    def test_errors(self):
        with pytest.raises(ValueError):
            density_ladder((1.0, 1.5), 0.5)
        with pytest.raises(ValueError):
            density_ladder((1.1, 1.5), 3.0)
        with pytest.raises(ValueError):
            density_ladder((1.0, 0.9), 3.0)

    @given(
        extras=st.lists(st.floats(min_value=1.01, max_value=5.0), min_size=0, max_size=4, unique=True),
        cutoff=st.floats(min_value=1.0, max_value=30.0),
    )
    @settings(max_examples=80)
    def test_ladder_properties(self, extras, cutoff):
        base = tuple([1.0] + sorted(extras))
        ladder = density_ladder(base, cutoff)
        merged = ladder.merged
        assert merged[0] == 1.0
        assert all(b - a > 0 for a, b in zip(merged, merged[1:]))
        assert all(v <= cutoff + 1e-9 for v in merged)
        for m in range(1, int(cutoff) + 1):
            assert any(abs(v - m) < 1e-9 for v in merged)


class TestScap:
    def chain_dag(self):
        return DegenerationDag({"A": 3.0, "B": 2.0, "C": 1.5}, {"A": (("B",),), "B": (("C",),)})

    def test_leaf(self):
        dag = DegenerationDag({"X": 1.5})
        assert scap_cone(dag, "X") == 1

    def test_branching_example(self):
        dag = DegenerationDag({"A": 3.0, "B": 2.0}, {"A": (("B", "B"), ("B",))})
        assert scap_cone(dag, "A") == 3

    def test_chain(self):
        assert scap_cone(self.chain_dag(), "A") == 3

    def test_surface_conventions(self):
        dag = self.chain_dag()
        assert scap_surface([], False, dag) == 0
        assert scap_surface(["C", "A"], False, dag) == 4
        assert scap_surface(["C", "A"], True, dag) == 8

    def test_unknown_cone(self):
        with pytest.raises(ValueError, match="unknown cone"):
            scap_surface(["Z"], False, self.chain_dag())

    def test_density_rule_enforced(self):
        with pytest.raises(ValueError, match="density below parent"):
            DegenerationDag({"A": 2.0, "B": 2.0}, {"A": (("B",),)})

    def test_usc_check(self):
        dag = DegenerationDag({"A": 3.0, "B": 2.0, "C": 1.5}, {"A": (("B", "B"), ("B",)), "B": (("C",),)})
        for cone in ("A", "B", "C"):
            assert scap_usc_check(dag, cone)
        corrupted = {"A": 2, "B": 2, "C": 1}
        assert not scap_usc_check(dag, "A", corrupted)
        assert scap_usc_check(dag, "C", corrupted)  # no scenarios: vacuous

    def test_monotone_under_edge_addition(self):
        rng = np.random.default_rng(41)
        for _ in range(30):
            dag = random_dag(rng)
            ids = sorted(dag.densities)
            parent = ids[int(rng.integers(len(ids)))]
            lower = [c for c in ids if dag.densities[c] < dag.densities[parent]]
            if not lower:
                continue
            children = [lower[int(rng.integers(len(lower)))] for _ in range(int(rng.integers(1, 4)))]
            bigger = dag.with_scenario(parent, children)
            for cone in ids:
                assert scap_cone(bigger, cone) >= scap_cone(dag, cone)


def random_dag(rng, size=6):
    names = [f"c{i}" for i in range(size)]
    densities = {name: 1.0 + 0.5 * i for i, name in enumerate(names)}
    scenarios = {}
    for i, name in enumerate(names):
        if i == 0 or rng.random() < 0.3:
            continue
        scen_count = int(rng.integers(1, 3))
        scen_list = []
        for _ in range(scen_count):
            kids = [names[int(rng.integers(0, i))] for _ in range(int(rng.integers(1, 4)))]
            scen_list.append(tuple(kids))
        scenarios[name] = tuple(scen_list)
    return DegenerationDag(densities, scenarios)


def test_random_dags_satisfy_usc():
    rng = np.random.default_rng(43)
    for _ in range(50):
        dag = random_dag(rng)
        for cone in dag.densities:
            assert scap_usc_check(dag, cone)


def test_capacity_bounded_by_branching():
    rng = np.random.default_rng(47)
    for _ in range(40):
        dag = random_dag(rng)
        for cone, density in dag.densities.items():
            scen_list = dag.scenarios.get(cone, ())
            if not scen_list:
                assert scap_cone(dag, cone) == 1
                continue
            width = max(len(s) for s in scen_list)
            lower = [c for c, d in dag.densities.items() if d < density]
            cap = max(scap_cone(dag, c) for c in lower)
            assert scap_cone(dag, cone) <= 1 + width * cap
