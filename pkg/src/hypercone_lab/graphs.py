"""Flat graph model: weighted norms, area density and linearization checks.

The model is the slab [-1,1]^n x (-1,1) with the slice {z=0} as the base
hypersurface.  Scalar fields are sampled on a uniform tensor grid over the
first `active_dims` axes (fields are constant along the remaining axes, so
formulas keep the full dimension n while arrays stay small).  A graph
z = u(x) under the conformally perturbed metric (1+f) (g^z + dz^2) has area
density

    F(x, z, xi) = sqrt((1 + f(x,z))^n * det(g^z(x) + xi xi^T)),

whose Euler-Lagrange operator M(u) = -div d_xi F + d_z F is discretised
with centred stencils and cross-validated against directional derivatives
of the area integral.  The linearization identity is checked through the
residual  M(u+) - M(u-) + Lap(u+ - u-) - (n/2) d_z(f+ - f-)|_{z=0}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "ZField",
    "MetricField",
    "FlatModel",
    "WeightedField",
    "ck_star_norm",
    "area_density_F",
    "area_functional",
    "minimal_surface_operator",
    "linearization_residual",
    "grad_h",
    "div_h",
    "laplacian_h",
    "linearization_order_study",
    "conformal_coefficient_fit",
]


# --------------------------------------------------------------------------
# sampled fields over the slab
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ZField:
    """Scalar field sampled on the base grid times uniform z-levels.

    values has shape grid_shape + (len(z_levels),); evaluation at per-point
    heights interpolates linearly between levels, derivatives in z come from
    second-order differences on the levels.
    """

    values: np.ndarray
    z_levels: np.ndarray

    def __post_init__(self) -> None:
        if self.values.shape[-1] != len(self.z_levels):
            raise ValueError("trailing axis must index the z levels")
        if len(self.z_levels) < 3:
            raise ValueError("need at least 3 z levels")

    @classmethod
    def from_callable(
        cls,
        fn: Callable[..., np.ndarray],
        coords: Sequence[np.ndarray],
        z_levels: np.ndarray,
    ) -> "ZField":
        mesh = np.meshgrid(*coords, indexing="ij")
        vals = np.stack([np.broadcast_to(fn(*mesh, z), mesh[0].shape).astype(float) for z in z_levels], axis=-1)
        return cls(values=vals, z_levels=np.asarray(z_levels, dtype=float))

    def _interp(self, table: np.ndarray, z: np.ndarray) -> np.ndarray:
        zl = self.z_levels
        idx = np.clip(np.searchsorted(zl, z) - 1, 0, len(zl) - 2)
        z0 = zl[idx]
        w = (z - z0) / (zl[idx + 1] - z0)
        lo = np.take_along_axis(table, idx[..., None], axis=-1)[..., 0]
        hi = np.take_along_axis(table, (idx + 1)[..., None], axis=-1)[..., 0]
        return (1.0 - w) * lo + w * hi

    def eval(self, z: np.ndarray | float) -> np.ndarray:
        z = np.broadcast_to(np.asarray(z, dtype=float), self.values.shape[:-1])
        return self._interp(self.values, z)

    def eval_dz(self, z: np.ndarray | float) -> np.ndarray:
        z = np.broadcast_to(np.asarray(z, dtype=float), self.values.shape[:-1])
        dz_table = np.gradient(self.values, self.z_levels, axis=-1, edge_order=2)
        return self._interp(dz_table, z)


@dataclass(frozen=True)
class MetricField:
    """Symmetric 2-tensor g^z sampled like a ZField per component.

    values has shape grid_shape + (nz, d, d).  The identity default is
    represented by FlatModel.metric = None.
    """

    values: np.ndarray
    z_levels: np.ndarray

    def __post_init__(self) -> None:
        d1, d2 = self.values.shape[-2:]
        if d1 != d2:
            raise ValueError("metric blocks must be square")
        if self.values.shape[-3] != len(self.z_levels):
            raise ValueError("third-from-last axis must index the z levels")

    def _scalar(self, i: int, j: int) -> ZField:
        return ZField(values=self.values[..., i, j], z_levels=self.z_levels)

    def at(self, z: np.ndarray | float) -> np.ndarray:
        d = self.values.shape[-1]
        out = np.empty(self.values.shape[:-3] + (d, d))
        for i in range(d):
            for j in range(d):
                out[..., i, j] = self._scalar(i, j).eval(z)
        return out

    def dz(self, z: np.ndarray | float) -> np.ndarray:
        d = self.values.shape[-1]
        out = np.empty(self.values.shape[:-3] + (d, d))
        for i in range(d):
            for j in range(d):
                out[..., i, j] = self._scalar(i, j).eval_dz(z)
        return out

    def c3_proxy_norm(self, h: float) -> float:
        """Finite-difference stand-in for the C^3 distance to the flat metric."""
        d = self.values.shape[-1]
        comps = [self.values - np.eye(d)]
        total = float(np.max(np.abs(comps[0])))
        for _ in range(3):
            new: list[np.ndarray] = []
            for c in comps:
                for axis in range(c.ndim - 3):
                    new.append(np.gradient(c, h, axis=axis, edge_order=1))
                new.append(np.gradient(c, self.z_levels, axis=-3, edge_order=1))
            comps = new
            total += max(float(np.max(np.abs(c))) for c in comps)
        return total


# --------------------------------------------------------------------------
# the flat model
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FlatModel:
    """Uniform tensor grid on [-1,1]^active_dims with ambient dimension n.

    h must divide 2 and satisfy h <= 1/8 so second differences make sense;
    the metric perturbation, when present, must stay within 1/10 of flat in
    the C^3 proxy norm.
    """

    n: int = 7
    h: float = 1.0 / 16.0
    active_dims: int = 2
    conformal: ZField | None = None
    metric: MetricField | None = None
    z_levels: np.ndarray = field(default_factory=lambda: np.linspace(-1.0, 1.0, 17))

    def __post_init__(self) -> None:
        if self.h > 1.0 / 8.0 + 1e-12:
            raise ValueError("grid resolution h must be <= 1/8")
        npts = 2.0 / self.h
        if abs(npts - round(npts)) > 1e-9:
            raise ValueError("h must divide the box side 2")
        if not 1 <= self.active_dims <= self.n:
            raise ValueError("active_dims must lie in [1, n]")
        if self.metric is not None and self.metric.c3_proxy_norm(self.h) > 0.1:
            raise ValueError("metric perturbation exceeds the C^3 proxy bound 1/10")

    @property
    def coords(self) -> list[np.ndarray]:
        m = round(2.0 / self.h)
        return [np.linspace(-1.0, 1.0, m + 1) for _ in range(self.active_dims)]

    @property
    def shape(self) -> tuple[int, ...]:
        m = round(2.0 / self.h) + 1
        return (m,) * self.active_dims

    def mesh(self) -> list[np.ndarray]:
        return np.meshgrid(*self.coords, indexing="ij")

    def interior_mask(self) -> np.ndarray:
        """Points with max|x_i| <= 1 - 4h (boundary stencil layer excluded)."""
        mesh = self.mesh()
        bound = 1.0 - 4.0 * self.h
        mask = np.ones(self.shape, dtype=bool)
        for x in mesh:
            mask &= np.abs(x) <= bound + 1e-12
        return mask

    def conformal_field(self, fn: Callable[..., np.ndarray]) -> ZField:
        return ZField.from_callable(fn, self.coords, self.z_levels)

    def quadrature_weights(self) -> np.ndarray:
        w = np.ones(self.shape)
        for axis in range(self.active_dims):
            edge = [slice(None)] * self.active_dims
            for end in (0, -1):
                edge[axis] = end
                w[tuple(edge)] *= 0.5
        return w * self.h**self.active_dims

    def inactive_volume(self) -> float:
        """Box volume carried by the axes the grid does not resolve."""
        return 2.0 ** (self.n - self.active_dims)


# --------------------------------------------------------------------------
# stencils
# --------------------------------------------------------------------------


def grad_h(u: np.ndarray, h: float) -> list[np.ndarray]:
    """Centred gradient, second-order one-sided at the boundary."""
    return [np.gradient(u, h, axis=a, edge_order=2) for a in range(u.ndim)]


def div_h(v: Sequence[np.ndarray], h: float) -> np.ndarray:
    out = np.zeros_like(v[0])
    for a, comp in enumerate(v):
        out += np.gradient(comp, h, axis=a, edge_order=2)
    return out


def laplacian_h(u: np.ndarray, h: float) -> np.ndarray:
    """div of grad with the same stencils the operator evaluation uses."""
    return div_h(grad_h(u, h), h)


# --------------------------------------------------------------------------
# weighted norms
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightedField:
    """Samples with a per-point regularity-scale weight and grid spacing.

    The spacing is part of the metric data: the scale-invariance identity
    rescales samples, weight and spacing together.
    """

    samples: np.ndarray
    spacing: float
    weight: np.ndarray | float = 1.0

    def __post_init__(self) -> None:
        if np.any(np.asarray(self.weight) <= 0.0):
            raise ValueError("weights must be positive")
        if not self.spacing > 0.0:
            raise ValueError("spacing must be positive")

    def rescaled(self, lam: float) -> "WeightedField":
        w = self.weight * lam if isinstance(self.weight, float) else np.asarray(self.weight) * lam
        return WeightedField(samples=self.samples * lam, spacing=self.spacing * lam, weight=w)


def ck_star_norm(field: WeightedField, k: int) -> float:
    """sup over grid points of sum_{j<=k} weight^{j-1} |D^j samples|.

    Derivatives use centred differences (one-sided at the boundary); the
    j-th term is weighted by the regularity scale to the power j-1, making
    the norm invariant under simultaneous (samples, weight, spacing)
    rescaling.
    """
    if k not in (0, 1, 2):
        raise ValueError("k must be 0, 1 or 2")
    u = field.samples
    w = np.broadcast_to(np.asarray(field.weight, dtype=float), u.shape)
    total = np.abs(u) / w
    if k >= 1:
        g = grad_h(u, field.spacing)
        total = total + np.sqrt(np.sum(np.stack([c * c for c in g], axis=0), axis=0))
    if k >= 2:
        hess_sq = np.zeros_like(u)
        for gi in g:
            for gj in grad_h(gi, field.spacing):
                hess_sq += gj * gj
        total = total + w * np.sqrt(hess_sq)
    return float(np.max(total))


# --------------------------------------------------------------------------
# area density and functionals
# --------------------------------------------------------------------------


def _metric_at(model: FlatModel, z: np.ndarray | float) -> np.ndarray | None:
    return None if model.metric is None else model.metric.at(z)


def _conformal_at(model: FlatModel, z: np.ndarray | float) -> np.ndarray | float:
    return 0.0 if model.conformal is None else model.conformal.eval(z)


def area_density_F(
    model: FlatModel,
    x: tuple[int, ...],
    z: float,
    xi: Sequence[float],
) -> float:
    """Pointwise density sqrt((1+f)^n det(g^z + xi xi^T)) at grid point x."""
    if abs(z) >= 1.0:
        raise ValueError("height must satisfy |z| < 1")
    xi_arr = np.zeros(model.active_dims)
    xi_in = np.asarray(xi, dtype=float)
    xi_arr[: min(len(xi_in), model.active_dims)] = xi_in[: model.active_dims]
    if model.metric is None:
        g = np.eye(model.active_dims)
    else:
        g = model.metric.at(float(z))[x]
    G = g + np.outer(xi_arr, xi_arr)
    try:
        np.linalg.cholesky(G)
    except np.linalg.LinAlgError:
        raise ValueError("degenerate graph metric") from None
    if model.conformal is None:
        f = 0.0
    else:
        f = float(model.conformal.eval(float(z))[x])
    if 1.0 + f <= 0.0:
        raise ValueError("degenerate graph metric")
    det = float(np.linalg.det(G))
    return math.sqrt((1.0 + f) ** model.n * det)


def _graph_regime_check(model: FlatModel, u: np.ndarray) -> None:
    g = grad_h(u, model.h)
    size = np.abs(u) + np.sqrt(np.sum(np.stack([c * c for c in g], axis=0), axis=0))
    worst = np.unravel_index(int(np.argmax(size)), u.shape)
    if size[worst] > 0.1:
        coords = tuple(float(c[i]) for c, i in zip(model.coords, worst))
        raise ValueError(f"graph regime violated at {coords}: C^1_* size {size[worst]:.4g} > 0.1")


def _density_grid(model: FlatModel, u: np.ndarray) -> np.ndarray:
    """F(x, u(x), du(x)) over the grid."""
    xi = grad_h(u, model.h)
    f = _conformal_at(model, u)
    if model.metric is None:
        xi_sq = np.sum(np.stack([c * c for c in xi], axis=0), axis=0)
        det = 1.0 + xi_sq
    else:
        g = model.metric.at(u)
        xi_v = np.stack(xi, axis=-1)
        G = g + xi_v[..., :, None] * xi_v[..., None, :]
        det = np.linalg.det(G)
    return np.sqrt((1.0 + f) ** model.n * det)


def area_functional(model: FlatModel, u: np.ndarray) -> float:
    """Trapezoidal integral of the area density of graph(u) over the box."""
    _graph_regime_check(model, u)
    dens = _density_grid(model, u)
    return float(np.sum(dens * model.quadrature_weights())) * model.inactive_volume()


def minimal_surface_operator(model: FlatModel, u: np.ndarray) -> np.ndarray:
    """Euler-Lagrange field -div d_xi F + d_z F with analytic derivatives.

    The divergence uses the same centred stencils as laplacian_h, so the
    discrete operator is exactly consistent with the discrete area gradient
    in the interior.
    """
    _graph_regime_check(model, u)
    h = model.h
    xi = grad_h(u, h)
    f = _conformal_at(model, u)
    if model.conformal is None:
        f_z = 0.0
    else:
        f_z = model.conformal.eval_dz(u)
    if model.metric is None:
        xi_sq = np.sum(np.stack([c * c for c in xi], axis=0), axis=0)
        F = np.sqrt((1.0 + f) ** model.n * (1.0 + xi_sq))
        flux = [F * c / (1.0 + xi_sq) for c in xi]
        dzF = F * (model.n / 2.0) * f_z / (1.0 + f)
    else:
        g = model.metric.at(u)
        gz = model.metric.dz(u)
        xi_v = np.stack(xi, axis=-1)
        G = g + xi_v[..., :, None] * xi_v[..., None, :]
        det = np.linalg.det(G)
        F = np.sqrt((1.0 + f) ** model.n * det)
        Ginv = np.linalg.inv(G)
        flux_v = F[..., None] * np.einsum("...ij,...j->...i", Ginv, xi_v)
        flux = [flux_v[..., a] for a in range(model.active_dims)]
        trace = np.einsum("...ij,...ji->...", Ginv, gz)
        dzF = F * ((model.n / 2.0) * f_z / (1.0 + f) + 0.5 * trace)
    return -div_h(flux, h) + dzF


def linearization_residual(
    model: FlatModel,
    u_plus: np.ndarray,
    u_minus: np.ndarray,
    f_plus: ZField | None = None,
    f_minus: ZField | None = None,
) -> tuple[np.ndarray, float]:
    """Difference of operators minus its linearization; interior sup norm.

    residual = M(u+) - M(u-) + Lap(u+ - u-) - (n/2) d_z(f+ - f-)|_{z=0},
    where Lap shares the stencils of the operator's divergence.
    """
    plus_model = FlatModel(
        n=model.n, h=model.h, active_dims=model.active_dims,
        conformal=f_plus, metric=model.metric, z_levels=model.z_levels,
    )
    minus_model = FlatModel(
        n=model.n, h=model.h, active_dims=model.active_dims,
        conformal=f_minus, metric=model.metric, z_levels=model.z_levels,
    )
    residual = minimal_surface_operator(plus_model, u_plus) - minimal_surface_operator(minus_model, u_minus)
    residual = residual + laplacian_h(u_plus - u_minus, model.h)
    zero = np.zeros(model.shape)
    if f_plus is not None:
        residual = residual - (model.n / 2.0) * f_plus.eval_dz(zero)
    if f_minus is not None:
        residual = residual + (model.n / 2.0) * f_minus.eval_dz(zero)
    norm = float(np.max(np.abs(residual[model.interior_mask()])))
    return residual, norm


# --------------------------------------------------------------------------
# studies used by the CLI and the acceptance suite
# --------------------------------------------------------------------------


def _study_bump(model: FlatModel) -> np.ndarray:
    mesh = model.mesh()
    out = np.ones(model.shape)
    for x in mesh:
        out = out * np.cos(math.pi * x / 2.0)
    return out


def _fit_loglog_slope(eps: Sequence[float], norms: Sequence[float]) -> float:
    return float(np.polyfit(np.log(eps), np.log(norms), 1)[0])


def linearization_order_study(
    n: int,
    h: float,
    eps_ladder: Sequence[float] = (1e-2, 5e-3, 2.5e-3),
    active_dims: int = 2,
    joint: bool = True,
) -> tuple[list[tuple[float, float]], float]:
    """Residual norms along an epsilon ladder and the fitted log-log order.

    With joint=True both the graph and the conformal factor scale with
    epsilon (u+ = eps*v, f+ = eps*phi with phi(.,0) != 0), the regime where
    the linearization error is exactly second order.  With joint=False only
    u is perturbed; the flat-model operator is odd in u, so the decay is
    cubic there (still within any C*eps^2 envelope).
    """
    model = FlatModel(n=n, h=h, active_dims=active_dims)
    v = _study_bump(model)
    chi = _study_bump(model)

    rows = []
    for eps in eps_ladder:
        if joint:
            f_plus = model.conformal_field(lambda *args, e=eps: e * (0.5 + args[-1]) * chi)
            _, norm = linearization_residual(model, eps * v, np.zeros(model.shape), f_plus, None)
        else:
            _, norm = linearization_residual(model, eps * v, np.zeros(model.shape), None, None)
        rows.append((eps, norm))
    slope = _fit_loglog_slope([r[0] for r in rows], [r[1] for r in rows])
    return rows, slope


def conformal_coefficient_fit(
    n: int,
    h: float,
    t_ladder: Sequence[float] = (1e-2, 5e-3),
    active_dims: int = 2,
) -> float:
    """Richardson-extrapolated coefficient of d_z f in M^{t f}(0) - M^0(0).

    Uses f = t * z * chi(x); the extrapolated value should be n/2.
    """
    model = FlatModel(n=n, h=h, active_dims=active_dims)
    chi = _study_bump(model) + 1.5  # bounded away from zero on the grid
    zeros = np.zeros(model.shape)
    base = minimal_surface_operator(model, zeros)
    mask = model.interior_mask()

    def coef(t: float) -> float:
        f = model.conformal_field(lambda *args, s=t: s * args[-1] * chi)
        pert_model = FlatModel(n=n, h=h, active_dims=active_dims, conformal=f, z_levels=model.z_levels)
        delta = minimal_surface_operator(pert_model, zeros) - base
        target = t * chi
        return float(np.sum(delta[mask] * target[mask]) / np.sum(target[mask] ** 2))

    c1, c2 = coef(t_ladder[0]), coef(t_ladder[1])
    # linear Richardson step: c(t) = c0 + c1*t
    w = t_ladder[0] / (t_ladder[0] - t_ladder[1])
    return (1.0 - w) * c1 + w * c2
