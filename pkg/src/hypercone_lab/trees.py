"""Decomposition trees, closeness predicates, coverings and singular capacity.

Geometric objects appear only as finite metadata: cone classes are opaque
ids with densities and a tabulated cross-section distance, smooth models
carry their inner-ball lists, and trees mix annulus nodes (type I, a cone
class with centre/outer/inner radii and multiplicity) with smooth-model
nodes (type II).  The module validates tree structure, projects trees to
their coarse relabelling, decides gamma-closeness, indexes parameter
tuples into countable covering cells whose co-cell pairs are
gamma-close by construction, merges density ladders, and runs the
singular-capacity recursion over declared degeneration scenarios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal, Sequence, Union

import numpy as np

__all__ = [
    "SLACK",
    "SmoothModelMeta",
    "InnerBall",
    "TypeINode",
    "TypeIINode",
    "TreeNode",
    "LargeScaleTree",
    "DensityLadder",
    "DegenerationDag",
    "Violation",
    "ClosenessVerdict",
    "ConeDistanceTable",
    "CubeBallCover",
    "Type1CoverScheme",
    "validate_tree",
    "coarse_tree",
    "gamma_close",
    "gamma_close_large_scale",
    "covering_cell_type2",
    "covering_cell_type1",
    "density_ladder",
    "scap_cone",
    "scap_surface",
    "scap_usc_check",
]

# Absolute slack on every closeness/validation inequality, against
# float-boundary flapping.
SLACK = 1e-12

Point = tuple[float, ...]


def _dist(a: Point, b: Point) -> float:
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))


# --------------------------------------------------------------------------
# metadata types
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class InnerBall:
    y: Point
    r: float
    cone_class: str
    multiplicity: int = 1


@dataclass(frozen=True)
class SmoothModelMeta:
    """Smooth model: an outer cone class plus disjoint inner cone balls."""

    id: str
    density_at_infinity: float
    outer_cone: str
    inner_balls: tuple[InnerBall, ...]
    sigma: float = 0.1

    def __post_init__(self) -> None:
        if not 0.0 < self.sigma < 1.0 / 3.0:
            raise ValueError("sigma must lie in (0, 1/3)")
        balls = self.inner_balls
        for b in balls:
            if _dist(b.y, tuple(0.0 for _ in b.y)) + 2.0 * b.r > 1.0 - 3.0 * self.sigma + SLACK:
                raise ValueError(f"inner ball at {b.y} leaves B_(1-3 sigma)")
        for i, b1 in enumerate(balls):
            for b2 in balls[i + 1 :]:
                if _dist(b1.y, b2.y) < 2.0 * (b1.r + b2.r) - SLACK:
                    raise ValueError("doubled inner balls must be pairwise disjoint")

    def min_inner_radius(self) -> float:
        if not self.inner_balls:
            raise ValueError(f"smooth model {self.id} has no inner balls")
        return min(b.r for b in self.inner_balls)


@dataclass(frozen=True)
class TypeINode:
    """Annulus node: cone class over A(x, rho, R) with multiplicity m."""

    cone_class: str
    density: float
    m: int
    x: Point
    R: float
    rho: float
    children: tuple["TreeNode", ...] = ()


@dataclass(frozen=True)
class TypeIINode:
    """Ball node: smooth-model region over B(x, R)."""

    model: str
    x: Point
    R: float
    children: tuple["TreeNode", ...] = ()


TreeNode = Union[TypeINode, TypeIINode]


@dataclass(frozen=True)
class LargeScaleTree:
    """Root metadata plus one decomposition tree per singular point."""

    base_surface_id: str
    base_metric_id: str
    singular_points: tuple[Point, ...]
    radii: tuple[float, ...]
    subtrees: tuple[TreeNode, ...]

    def __post_init__(self) -> None:
        if not (len(self.singular_points) == len(self.radii) == len(self.subtrees)):
            raise ValueError("need one radius and one subtree per singular point")
        pts, rads = self.singular_points, self.radii
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if _dist(pts[i], pts[j]) < rads[i] + rads[j] - SLACK:
                    raise ValueError("singular-point balls must be pairwise disjoint")


@dataclass(frozen=True)
class DensityLadder:
    base_densities: tuple[float, ...]
    merged: tuple[float, ...]


@dataclass(frozen=True)
class DegenerationDag:
    """Cone classes with densities and declared degeneration scenarios.

    Every scenario child must have strictly smaller density than its
    parent, which makes the graph acyclic and the capacity recursion
    terminate.
    """

    densities: dict[str, float]
    scenarios: dict[str, tuple[tuple[str, ...], ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for parent, scen_list in self.scenarios.items():
            if parent not in self.densities:
                raise ValueError(f"unknown cone id {parent!r}")
            for scen in scen_list:
                if not scen:
                    raise ValueError("degeneration scenarios must be nonempty")
                for child in scen:
                    if child not in self.densities:
                        raise ValueError(f"unknown cone id {child!r}")
                    if not self.densities[child] < self.densities[parent]:
                        raise ValueError(
                            f"scenario child {child!r} must have density below parent {parent!r}"
                        )

    def with_scenario(self, parent: str, children: Sequence[str]) -> "DegenerationDag":
        new = dict(self.scenarios)
        new[parent] = new.get(parent, ()) + (tuple(children),)
        return DegenerationDag(densities=dict(self.densities), scenarios=new)


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    path: str
    message: str


def _validate_node(
    node: TreeNode,
    beta: float,
    models: dict[str, SmoothModelMeta],
    path: str,
    out: list[Violation],
) -> None:
    if isinstance(node, TypeINode):
        if node.R < 2.0 * node.rho - SLACK:
            out.append(Violation(path, f"R >= 2 rho violated: R={node.R:.6g}, rho={node.rho:.6g}"))
        if node.rho <= 0.0:
            if node.children:
                out.append(Violation(path, "terminal annulus node (rho = 0) must be a leaf"))
            if node.density <= 1.0 + SLACK:
                out.append(Violation(path, "leaf density must exceed 1"))
        else:
            if len(node.children) != 1:
                out.append(Violation(path, "annulus node with rho > 0 needs exactly one child"))
            else:
                child = node.children[0]
                if isinstance(child, TypeINode):
                    if child.x != node.x:
                        out.append(Violation(path, "type-I child must keep the centre"))
                    if child.m != node.m:
                        out.append(Violation(path, "type-I child must keep the multiplicity"))
                    if abs(child.R - node.rho) > SLACK:
                        out.append(Violation(path, "type-I child outer radius must equal rho"))
                else:
                    if child.x != node.x:
                        out.append(Violation(path, "type-II child must keep the centre"))
                    if abs(child.R - node.rho) > SLACK:
                        out.append(Violation(path, "type-II child radius must equal rho"))
    else:
        meta = models.get(node.model)
        if meta is None:
            out.append(Violation(path, f"unknown smooth model {node.model!r}"))
        else:
            balls = meta.inner_balls
            if len(node.children) != len(balls):
                out.append(
                    Violation(path, f"need one child per inner ball ({len(balls)}), got {len(node.children)}")
                )
            else:
                for i, (child, ball) in enumerate(zip(node.children, balls)):
                    anchor = tuple(xc + node.R * yc for xc, yc in zip(node.x, ball.y))
                    off = _dist(child.x, anchor)
                    if off > beta * node.R * ball.r + SLACK:
                        out.append(
                            Violation(f"{path}.{i}", f"child centre offset {off:.6g} exceeds beta R r")
                        )
                    ratio = child.R / (node.R * ball.r)
                    if not (0.5 - SLACK <= ratio <= 1.0 + beta + SLACK):
                        out.append(
                            Violation(f"{path}.{i}", f"child radius ratio {ratio:.6g} outside [1/2, 1+beta]")
                        )
                    if isinstance(child, TypeINode):
                        if child.cone_class != ball.cone_class:
                            out.append(Violation(f"{path}.{i}", "type-I child must carry the ball's cone class"))
                        if child.m != ball.multiplicity:
                            out.append(Violation(f"{path}.{i}", "type-I child must carry the ball's multiplicity"))
    for i, child in enumerate(node.children):
        _validate_node(child, beta, models, f"{path}.{i}", out)


def validate_tree(
    tree: TreeNode,
    beta: float,
    models: dict[str, SmoothModelMeta] | None = None,
) -> list[Violation]:
    """Structural violations of the decomposition rules; empty means valid."""
    if not 0.0 < beta < 1.0:
        raise ValueError("beta must lie in (0, 1)")
    out: list[Violation] = []
    _validate_node(tree, beta, models or {}, "root", out)
    return out


# --------------------------------------------------------------------------
# coarse projection and closeness
# --------------------------------------------------------------------------


def coarse_tree(tree: TreeNode):
    """Relabelled tree: type I keeps (density, m), type II keeps the model id."""
    kids = tuple(coarse_tree(c) for c in tree.children)
    if isinstance(tree, TypeINode):
        return ("I", tree.density, tree.m, kids)
    return ("II", tree.model, kids)


@dataclass(frozen=True)
class ClosenessVerdict:
    close: bool
    failure_kind: str = ""
    failure_path: str = ""
    detail: str = ""

    def __bool__(self) -> bool:
        return self.close


class ConeDistanceTable:
    """Symmetric tabulated cross-section distances between cone class ids."""

    def __init__(self, entries: Iterable[tuple[str, str, float]] = ()) -> None:
        self._d: dict[tuple[str, str], float] = {}
        for a, b, dist in entries:
            self._d[(a, b)] = dist
            self._d[(b, a)] = dist

    def __call__(self, a: str, b: str) -> float:
        if a == b:
            return 0.0
        try:
            return self._d[(a, b)]
        except KeyError:
            raise ValueError(f"no tabulated cone distance for ({a!r}, {b!r})") from None


def _pairs_close(
    a: TreeNode,
    b: TreeNode,
    gamma: float,
    cone_metric: Callable[[str, str], float],
    models: dict[str, SmoothModelMeta],
    path: str,
) -> ClosenessVerdict:
    if isinstance(a, TypeINode):
        d = cone_metric(a.cone_class, b.cone_class)
        if d > gamma + SLACK:
            return ClosenessVerdict(False, "cone-distance", path, f"dist {d:.6g} > gamma")
        if a.rho > 0.0:
            bound = gamma * min(a.rho, b.rho)
            for name, delta in (
                ("|rho_a - rho_b| <= gamma min(rho)", abs(a.rho - b.rho)),
                ("|x_a - x_b| <= gamma min(rho)", _dist(a.x, b.x)),
                ("|R_a - R_b| <= gamma min(rho)", abs(a.R - b.R)),
            ):
                if delta > bound + SLACK:
                    return ClosenessVerdict(False, "type-I", path, f"{name}: {delta:.6g} > {bound:.6g}")
        else:
            bound = gamma * min(a.R, b.R)
            for name, delta in (
                ("|x_a - x_b| <= gamma min(R)", _dist(a.x, b.x)),
                ("|R_a - R_b| <= gamma min(R)", abs(a.R - b.R)),
            ):
                if delta > bound + SLACK:
                    return ClosenessVerdict(False, "type-I", path, f"{name}: {delta:.6g} > {bound:.6g}")
    else:
        meta = models.get(a.model)
        if meta is None:
            raise ValueError(f"unknown smooth model {a.model!r}")
        bound = gamma * min(a.R, b.R) * meta.min_inner_radius()
        for name, delta in (
            ("|x_b - x_b'| <= gamma min(R) min(r)", _dist(a.x, b.x)),
            ("|R_b - R_b'| <= gamma min(R) min(r)", abs(a.R - b.R)),
        ):
            if delta > bound + SLACK:
                return ClosenessVerdict(False, "type-II", path, f"{name}: {delta:.6g} > {bound:.6g}")
    for i, (ca, cb) in enumerate(zip(a.children, b.children)):
        verdict = _pairs_close(ca, cb, gamma, cone_metric, models, f"{path}.{i}")
        if not verdict:
            return verdict
    return ClosenessVerdict(True)


def gamma_close(
    a: TreeNode,
    b: TreeNode,
    gamma: float,
    cone_metric: Callable[[str, str], float],
    models: dict[str, SmoothModelMeta] | None = None,
) -> ClosenessVerdict:
    """Coarse-equality plus the per-node inequality system.

    Coarse mismatch short-circuits (its own failure kind) before any
    numeric constraint is evaluated; all bounds use min(.,.) so the
    predicate is symmetric, reflexive and monotone in gamma.
    """
    if not 0.0 < gamma < 1.0 / 100.0 + SLACK:
        raise ValueError("gamma must lie in (0, 1/100)")
    if coarse_tree(a) != coarse_tree(b):
        return ClosenessVerdict(False, "coarse-mismatch", "root", "coarse trees differ")
    return _pairs_close(a, b, gamma, cone_metric, models or {}, "root")


def gamma_close_large_scale(
    a: LargeScaleTree,
    b: LargeScaleTree,
    gamma: float,
    cone_metric: Callable[[str, str], float],
    models: dict[str, SmoothModelMeta] | None = None,
) -> ClosenessVerdict:
    """Equal root labels and gamma-close subtrees at every singular point."""
    root_a = (a.base_surface_id, a.base_metric_id, a.singular_points, a.radii)
    root_b = (b.base_surface_id, b.base_metric_id, b.singular_points, b.radii)
    if root_a != root_b:
        return ClosenessVerdict(False, "root-label", "root", "root labels differ")
    for i, (sa, sb) in enumerate(zip(a.subtrees, b.subtrees)):
        verdict = gamma_close(sa, sb, gamma, cone_metric, models)
        if not verdict:
            return ClosenessVerdict(False, verdict.failure_kind, f"subtree[{i}].{verdict.failure_path}", verdict.detail)
    return ClosenessVerdict(True)


# --------------------------------------------------------------------------
# covering cells
# --------------------------------------------------------------------------


def _interval_index(value: float, base: float) -> int:
    """k with base^k <= value < base^{k+1}; exact powers keep their own k."""
    if not value > 0.0:
        raise ValueError("interval index needs a positive value")
    return math.floor(math.log(value) / math.log(base) + 1e-9)


_OFFSET_CACHE: dict[int, np.ndarray] = {}


def _lex_offsets(dim: int) -> np.ndarray:
    """All {-1,0,1}^dim offsets in lexicographic order, cached per dimension."""
    cached = _OFFSET_CACHE.get(dim)
    if cached is None:
        grids = np.meshgrid(*([np.array([-1, 0, 1])] * dim), indexing="ij")
        cached = np.stack([g.ravel() for g in grids], axis=-1)
        _OFFSET_CACHE[dim] = cached
    return cached


@dataclass(frozen=True)
class CubeBallCover:
    """Lattice ball covers of the cube [-half_width, half_width]^dim.

    For a requested radius the centres form a grid of spacing
    2*radius/sqrt(dim), so every cube point lies in the ball of its nearest
    centre; `locate` returns the lexicographically smallest containing
    ball's index tuple.
    """

    dim: int
    half_width: float = 1.0

    def locate(self, x: Point, radius: float) -> tuple[int, ...]:
        if len(x) != self.dim:
            raise ValueError(f"point dimension {len(x)} != cover dimension {self.dim}")
        if any(abs(c) > self.half_width + SLACK for c in x):
            raise ValueError("cover defect: point outside the covered cube")
        spacing = 2.0 * radius / math.sqrt(self.dim)
        count = max(1, math.ceil(2.0 * self.half_width / spacing) + 1)
        point = np.asarray(x, dtype=float)
        nearest = np.clip(np.round((point + self.half_width) / spacing).astype(int), 0, count - 1)
        # the ±1 shell suffices: farther centres sit at per-axis distance
        # >= 1.5 spacing > radius
        candidates = nearest + _lex_offsets(self.dim)
        valid = np.all((candidates >= 0) & (candidates <= count - 1), axis=1)
        centres = -self.half_width + candidates * spacing
        dist_ok = np.einsum("ij,ij->i", centres - point, centres - point) <= (radius + SLACK) ** 2
        hits = np.nonzero(valid & dist_ok)[0]
        if hits.size == 0:
            raise ValueError("cover defect: no ball contains the point")
        return tuple(int(v) for v in candidates[hits[0]])


def covering_cell_type2(
    x: Point,
    R: float,
    gamma: float,
    r0: float,
    ball_cover: CubeBallCover,
) -> tuple[int, tuple[int, ...]]:
    """Cell (k, ball) for a smooth-model node: radius interval and centre ball.

    Radii are covered by [(1+gamma r0/2)^k, (1+gamma r0/2)^{k+1}] and
    centres by balls of radius (1+gamma r0/2)^k * gamma r0/10; two tuples
    sharing a cell satisfy the type-II closeness inequalities at gamma with
    min inner radius r0.
    """
    if not (R > 0.0 and gamma > 0.0 and r0 > 0.0):
        raise ValueError("R, gamma and r0 must be positive")
    base = 1.0 + gamma * r0 / 2.0
    k = _interval_index(R, base)
    radius = base**k * gamma * r0 / 10.0
    return k, ball_cover.locate(x, radius)


@dataclass(frozen=True)
class Type1CoverScheme:
    """Cone net, interval bases and ball covers for annulus-node cells.

    The net assignment radius defaults to gamma/2 so that same-cell cones
    are within gamma of each other; admissible tuples have R <= r_cap
    (decompositions live in a unit ball) and rho <= R/2.
    """

    cone_net: tuple[str, ...]
    cone_metric: Callable[[str, str], float]
    cube: CubeBallCover
    net_radius: float | None = None
    r_cap: float = 1.0


def covering_cell_type1(
    cone_class: str,
    x: Point,
    R: float,
    rho: float,
    gamma: float,
    scheme: Type1CoverScheme,
) -> tuple[int, int | Literal["zero"], int, tuple[int, ...]]:
    """Cell (net index, rho slot, R interval, ball) for an annulus node.

    rho = 0 gets its own atom with R covered at base 1+gamma/2; rho > 0 is
    covered at base 1+gamma/2 and R at base 1+(gamma/2)min(1, rho scale),
    with ball radii shrunk by the same factor.
    """
    if not (R > 0.0 and 0.0 <= rho <= R / 2.0 + SLACK):
        raise ValueError("need R > 0 and 0 <= rho <= R/2")
    if R > scheme.r_cap + SLACK:
        raise ValueError(f"outer radius {R:.6g} beyond the scheme cap {scheme.r_cap:.6g}")
    net_radius = scheme.net_radius if scheme.net_radius is not None else gamma / 2.0
    net_index = None
    for i, net_id in enumerate(scheme.cone_net):
        if scheme.cone_metric(cone_class, net_id) <= net_radius + SLACK:
            net_index = i
            break
    if net_index is None:
        raise ValueError("cone net defect")
    base = 1.0 + gamma / 2.0
    if rho == 0.0:
        k_prime = _interval_index(R, base)
        radius = base**k_prime * gamma / 10.0
        return net_index, "zero", k_prime, scheme.cube.locate(x, radius)
    k = _interval_index(rho, base)
    shrink = min(1.0, base**k)
    base_r = 1.0 + (gamma / 2.0) * shrink
    k_prime = _interval_index(R, base_r)
    radius = base_r**k_prime * gamma * shrink / 10.0
    return net_index, k, k_prime, scheme.cube.locate(x, radius)


# --------------------------------------------------------------------------
# density ladders
# --------------------------------------------------------------------------


def density_ladder(base: Sequence[float], cutoff: float) -> DensityLadder:
    """Merged integer multiples {m * theta_i <= cutoff}, sorted, deduplicated."""
    if cutoff < 1.0:
        raise ValueError("cutoff below 1 leaves the ladder empty")
    base = tuple(float(b) for b in base)
    if not base or abs(base[0] - 1.0) > SLACK:
        raise ValueError("base densities must start at 1")
    if any(b2 - b1 <= 0.0 for b1, b2 in zip(base, base[1:])):
        raise ValueError("base densities must be strictly increasing")
    merged: list[float] = []
    for theta in base:
        m = 1
        while m * theta <= cutoff + SLACK:
            merged.append(m * theta)
            m += 1
    merged.sort()
    dedup: list[float] = []
    for v in merged:
        if not dedup or v - dedup[-1] > SLACK * max(1.0, v):
            dedup.append(v)
    return DensityLadder(base_densities=base, merged=tuple(dedup))


# --------------------------------------------------------------------------
# singular capacity
# --------------------------------------------------------------------------


def scap_cone(dag: DegenerationDag, cone: str, _memo: dict[str, int] | None = None) -> int:
    """Degeneration depth: 1 for a cone with no scenarios, else
    1 + max over scenarios of the summed child capacities."""
    if cone not in dag.densities:
        raise ValueError(f"unknown cone id {cone!r}")
    memo = {} if _memo is None else _memo
    in_progress: set[str] = set()

    def rec(c: str) -> int:
        if c in memo:
            return memo[c]
        if c in in_progress:
            raise ValueError(f"degeneration cycle through {c!r}")
        in_progress.add(c)
        scen_list = dag.scenarios.get(c, ())
        if not scen_list:
            value = 1
        else:
            value = 1 + max(sum(rec(child) for child in scen) for scen in scen_list)
        in_progress.discard(c)
        memo[c] = value
        return value

    return rec(cone)


def scap_surface(
    sing_points: Sequence[str],
    one_sided: bool,
    dag: DegenerationDag,
) -> int:
    """Sum of cone capacities over singular points, doubled when one-sided."""
    memo: dict[str, int] = {}
    total = sum(scap_cone(dag, cone, memo) for cone in sing_points)
    return 2 * total if one_sided else total


def scap_usc_check(
    dag: DegenerationDag,
    parent: str,
    table: dict[str, int] | None = None,
) -> bool:
    """Every scenario satisfies 1 + sum(children) <= capacity(parent).

    True by construction of the max; an externally supplied capacity table
    lets regression tests corrupt single entries.
    """
    if parent not in dag.densities:
        raise ValueError(f"unknown cone id {parent!r}")
    if table is None:
        memo: dict[str, int] = {}
        value = lambda c: scap_cone(dag, c, memo)  # noqa: E731
    else:
        value = lambda c: table[c]  # noqa: E731
    parent_value = value(parent)
    for scen in dag.scenarios.get(parent, ()):
        if 1 + sum(value(child) for child in scen) > parent_value:
            return False
    return True
