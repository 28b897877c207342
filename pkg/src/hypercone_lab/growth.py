"""Weighted growth functionals, three-scale convexity and radial Jacobi solves.

A truncated field on a cone is a finite sum u = sum_j (c_j^+ r^{g_j^+} +
c_j^- r^{g_j^-}) phi_j over unit-L2 cross-section modes (log-augmented in
the resonant case).  The annulus-weighted growth functional

    J(u; r) = int_{K^{-1} r}^{r} t^{-1-2*gamma} * sum_j (v_j(t))^2 dt

reduces mode-by-mode to power/log antiderivatives; its three-scale second
difference J(K^-2) - 2 J(K^-1) + J(1) is a quadratic form in each mode's
coefficients whose positive-definiteness is governed by explicit
discriminants.  This module evaluates all of that in closed form, searches
grid-certified thresholds K above which the discriminants are negative,
estimates asymptotic rates from annulus data, and integrates the radial
Jacobi ODE (optionally perturbed) in the log-radius variable.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Literal, Sequence

import numpy as np
from scipy.integrate import cumulative_trapezoid, solve_ivp

from .cones import SpectralLadder

__all__ = [
    "DEGENERATE_EXPONENT_TOL",
    "ModeCoefficient",
    "JacobiCoefficients",
    "GrowthWindow",
    "PerturbedRadialProblem",
    "RadialProfile",
    "ThresholdGrid",
    "ThresholdResult",
    "PERTURBATION_PROFILES",
    "power_log_integral",
    "evaluate_radial",
    "growth_functional",
    "closed_form_I",
    "discriminant_power",
    "discriminant_log",
    "find_threshold_K",
    "three_scale_check",
    "gamma_admissible",
    "admissibility_distance",
    "asymptotic_rate",
    "is_slower_growth",
    "snap_rate",
    "estimate_rate_from_samples",
    "solve_radial_jacobi",
    "perturbed_convexity_check",
]

# Exponents this close to zero switch to the log antiderivative branch.
DEGENERATE_EXPONENT_TOL = 1e-8


# --------------------------------------------------------------------------
# coefficient data
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ModeCoefficient:
    """Coefficients (c_plus, c_minus) attached to ladder entry j (1-based)."""

    j: int
    c_plus: float
    c_minus: float


@dataclass(frozen=True)
class JacobiCoefficients:
    """Finite mode truncation of a field on a cone, over a spectral ladder."""

    ladder: SpectralLadder
    terms: tuple[ModeCoefficient, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for t in self.terms:
            if not 1 <= t.j <= len(self.ladder.entries):
                raise ValueError(f"mode index {t.j} outside ladder of size {len(self.ladder.entries)}")
            if t.j in seen:
                raise ValueError(f"duplicate term for mode index {t.j}")
            if not (math.isfinite(t.c_plus) and math.isfinite(t.c_minus)):
                raise ValueError(f"coefficients for mode {t.j} must be finite")
            seen.add(t.j)

    def is_zero(self) -> bool:
        return all(t.c_plus == 0.0 and t.c_minus == 0.0 for t in self.terms)


@dataclass(frozen=True)
class GrowthWindow:
    """Annulus family (K^{-1} r, r) with weight exponent gamma.

    The functional itself only needs K > 1; the three-scale convexity
    statements additionally demand K > 2 and enforce it themselves.
    """

    K: float
    gamma: float
    r: float = 1.0

    def __post_init__(self) -> None:
        if not self.K > 1.0:
            raise ValueError("scale ratio K must exceed 1")
        if not self.r > 0.0:
            raise ValueError("annulus outer radius must be positive")


# --------------------------------------------------------------------------
# closed-form antiderivatives
# --------------------------------------------------------------------------


def power_log_integral(p: float, m: int, lo: float, hi: float) -> float:
    """int_lo^hi t^{p-1} (log t)^m dt for m in {0, 1, 2}, with the p -> 0 limit.

    The degenerate branch (|p| below DEGENERATE_EXPONENT_TOL) uses the exact
    log antiderivative (log t)^{m+1}/(m+1).
    """
    if not (0.0 < lo <= hi):
        raise ValueError("integration limits must satisfy 0 < lo <= hi")
    if m not in (0, 1, 2):
        raise ValueError("log power m must be 0, 1 or 2")
    la, lb = math.log(lo), math.log(hi)
    if abs(p) < DEGENERATE_EXPONENT_TOL:
        return (lb ** (m + 1) - la ** (m + 1)) / (m + 1)
    ta, tb = lo**p, hi**p
    if m == 0:
        return (tb - ta) / p
    if m == 1:
        return (tb * (lb - 1.0 / p) - ta * (la - 1.0 / p)) / p
    return (tb * (lb * lb - 2.0 * lb / p + 2.0 / p**2) - ta * (la * la - 2.0 * la / p + 2.0 / p**2)) / p


def _mode_growth_integral(
    entry_gamma_plus: float,
    entry_gamma_minus: float,
    resonant: bool,
    c_plus: float,
    c_minus: float,
    gamma: float,
    lo: float,
    hi: float,
) -> float:
    """int_lo^hi t^{-1-2 gamma} v(t)^2 dt for one mode's radial part v."""
    if c_plus == 0.0 and c_minus == 0.0:
        return 0.0
    if resonant:
        # v(t) = (c_plus + c_minus log t) t^a with the double root a.
        a = entry_gamma_plus - gamma
        return (
            c_plus * c_plus * power_log_integral(2 * a, 0, lo, hi)
            + 2 * c_plus * c_minus * power_log_integral(2 * a, 1, lo, hi)
            + c_minus * c_minus * power_log_integral(2 * a, 2, lo, hi)
        )
    a = entry_gamma_plus - gamma
    b = entry_gamma_minus - gamma
    return (
        c_plus * c_plus * power_log_integral(2 * a, 0, lo, hi)
        + 2 * c_plus * c_minus * power_log_integral(a + b, 0, lo, hi)
        + c_minus * c_minus * power_log_integral(2 * b, 0, lo, hi)
    )


def evaluate_radial(coeffs: JacobiCoefficients, j: int, r: float) -> float:
    """Radial part v_j^+(r) + v_j^-(r) of mode j (1-based) at radius r > 0."""
    if not r > 0.0:
        raise ValueError("radius must be positive")
    if not 1 <= j <= len(coeffs.ladder.entries):
        raise ValueError(f"mode index {j} outside ladder of size {len(coeffs.ladder.entries)}")
    entry = coeffs.ladder.entries[j - 1]
    term = next((t for t in coeffs.terms if t.j == j), None)
    if term is None:
        return 0.0
    if entry.resonant:
        return (term.c_plus + term.c_minus * math.log(r)) * r**entry.gamma_plus
    return term.c_plus * r**entry.gamma_plus + term.c_minus * r**entry.gamma_minus


def growth_functional(coeffs: JacobiCoefficients, w: GrowthWindow) -> float:
    """Exact J(u; r) summed over modes; cross-mode terms vanish by orthonormality."""
    lo, hi = w.r / w.K, w.r
    total = 0.0
    for t in coeffs.terms:
        e = coeffs.ladder.entries[t.j - 1]
        if math.isnan(e.gamma_plus):
            raise ValueError("unstable cone: complex indicial roots")
        total += _mode_growth_integral(
            e.gamma_plus, e.gamma_minus, e.resonant, t.c_plus, t.c_minus, w.gamma, lo, hi
        )
    return total


def closed_form_I(alpha: float, beta: float, c: float, c2: float, r: float, K: float) -> float:
    """int_r^{Kr} (c s^alpha + c2 s^beta)^2 s^{-1} ds in closed form.

    Degenerate denominators (2*alpha, alpha+beta or 2*beta near zero) fall
    back to the log antiderivative.
    """
    if not (r > 0.0 and K > 1.0):
        raise ValueError("need r > 0 and K > 1")
    lo, hi = r, K * r
    return (
        c * c * power_log_integral(2 * alpha, 0, lo, hi)
        + 2 * c * c2 * power_log_integral(alpha + beta, 0, lo, hi)
        + c2 * c2 * power_log_integral(2 * beta, 0, lo, hi)
    )


# --------------------------------------------------------------------------
# discriminants and threshold search
# --------------------------------------------------------------------------


def discriminant_power(K: float, alpha: float, beta: float) -> float:
    """[(K^{a+b}-1)^3/(a+b)]^2 - (K^{2a}-1)^3/(2a) * (K^{2b}-1)^3/(2b).

    Negativity (together with a positive leading coefficient) is equivalent
    to strict positivity of the three-scale second difference of the
    two-exponent integral for every nonzero coefficient pair.
    """
    if abs(alpha - beta) <= 1e-12:
        raise ValueError("use log branch")
    if min(abs(alpha), abs(beta), abs(alpha + beta)) <= 1e-12:
        raise ValueError("alpha, beta and alpha+beta must be nonzero")
    cross = (K ** (alpha + beta) - 1.0) ** 3 / (alpha + beta)
    lead = (K ** (2 * alpha) - 1.0) ** 3 / (2 * alpha)
    trail = (K ** (2 * beta) - 1.0) ** 3 / (2 * beta)
    return cross * cross - lead * trail


def discriminant_log(K: float, alpha: float) -> float:
    """((K^a-1)^4/a^2) * [3 K^a (log K)^2 - (K^a-1)^2/a^2] for the log-resonant pair.

    Here a = 2*a', where (r^{a'}, r^{a'} log r) is the resonant pair; the
    positive prefactor means the bracket carries the sign.
    """
    if abs(alpha) <= 1e-12:
        raise ValueError("alpha must be nonzero")
    ka = K**alpha
    pref = (ka - 1.0) ** 4 / alpha**2
    bracket = 3.0 * ka * math.log(K) ** 2 - (ka - 1.0) ** 2 / alpha**2
    return pref * bracket


@dataclass(frozen=True)
class ThresholdGrid:
    """Exponent samples and the ascending K ladder for a threshold search."""

    exponents: tuple[float, ...]
    k_ladder: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.exponents or not self.k_ladder:
            raise ValueError("grid must carry exponent samples and a K ladder")
        ks = list(self.k_ladder)
        if any(b <= a for a, b in zip(ks, ks[1:])) or ks[0] <= 2.0:
            raise ValueError("K ladder must be strictly increasing with entries > 2")

    @classmethod
    def from_ranges(
        cls,
        exp_lo: float,
        exp_hi: float,
        exp_step: float,
        k_lo: float,
        k_hi: float,
        k_step: float,
    ) -> "ThresholdGrid":
        n_e = round((exp_hi - exp_lo) / exp_step)
        n_k = round((k_hi - k_lo) / k_step)
        exps = tuple(exp_lo + i * exp_step for i in range(n_e + 1))
        ks = tuple(k_lo + i * k_step for i in range(n_k + 1))
        return cls(exponents=exps, k_ladder=ks)


@dataclass(frozen=True)
class ThresholdResult:
    sigma: float
    branch: str
    k_star: float
    witness_alpha: float
    witness_beta: float
    max_discriminant: float


def _power_pairs(exponents: Sequence[float], sigma: float) -> tuple[np.ndarray, np.ndarray]:
    alphas, betas = [], []
    for i, a in enumerate(exponents):
        for b in exponents[:i]:
            if abs(a - b) <= 1e-12:
                continue
            if min(abs(a), abs(b), abs(a + b)) < sigma - 1e-12:
                continue
            alphas.append(a)
            betas.append(b)
    return np.asarray(alphas), np.asarray(betas)


def _power_disc_vec(K: float, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    cross = (K ** (a + b) - 1.0) ** 3 / (a + b)
    lead = (K ** (2 * a) - 1.0) ** 3 / (2 * a)
    trail = (K ** (2 * b) - 1.0) ** 3 / (2 * b)
    return cross * cross - lead * trail


def _log_disc_vec(K: float, a: np.ndarray) -> np.ndarray:
    ka = K**a
    return (ka - 1.0) ** 4 / a**2 * (3.0 * ka * math.log(K) ** 2 - (ka - 1.0) ** 2 / a**2)


def _worker_count() -> int:
    raw = os.environ.get("HYPERCONE_LAB_THREADS", "")
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    return max(1, cap) if cap else min(8, os.cpu_count() or 1)


def find_threshold_K(
    sigma: float,
    branch: Literal["power", "log"],
    search: ThresholdGrid,
) -> ThresholdResult:
    """Smallest ladder K with negative discriminant on the whole exponent grid.

    Certification is grid-limited: the reported K* has every sampled pair
    negative at K* and at every larger ladder value.  The witness is the pair
    attaining the maximal (least negative) discriminant at K*.
    """
    if not sigma > 0.0:
        raise ValueError("sigma must be positive")
    if branch == "power":
        a, b = _power_pairs(search.exponents, sigma)
        if a.size == 0:
            raise ValueError("no exponent pairs satisfy the sigma constraints")
        kernel = _power_disc_vec
        arg = (a, b)
    elif branch == "log":
        a = np.asarray([x for x in search.exponents if abs(x) >= sigma - 1e-12])
        b = np.full_like(a, math.nan)
        if a.size == 0:
            raise ValueError("no exponent samples satisfy the sigma constraint")
        # the grid samples the bare exponent a'; the resonant-pair
        # discriminant takes the doubled variable
        kernel = lambda K, aa, _bb: _log_disc_vec(K, 2.0 * aa)  # noqa: E731
        arg = (a, b)
    else:
        raise ValueError(f"unknown branch {branch!r}")

    def evaluate(K: float) -> np.ndarray:
        # errstate is thread-local: set it inside the worker
        with np.errstate(over="raise"):
            return kernel(K, *arg)

    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        per_k = list(pool.map(evaluate, search.k_ladder))
    all_neg = [bool(np.all(d < 0.0)) for d in per_k]
    k_index = None
    for i in range(len(all_neg)):
        if all(all_neg[i:]):
            k_index = i
            break
    if k_index is None:
        raise ValueError("threshold beyond grid")
    disc = per_k[k_index]
    w = int(np.argmax(disc))
    return ThresholdResult(
        sigma=sigma,
        branch=branch,
        k_star=search.k_ladder[k_index],
        witness_alpha=float(a[w]),
        witness_beta=float(b[w]),
        max_discriminant=float(disc[w]),
    )


# --------------------------------------------------------------------------
# admissibility, three-scale checks, rates
# --------------------------------------------------------------------------


def admissibility_distance(gamma: float, ladder: SpectralLadder) -> float:
    """Distance from gamma to the materialised exponents plus the double root."""
    half = (ladder.n - 2) / 2.0
    targets = ladder.exponent_values() + [-half]
    return min(abs(gamma - t) for t in targets)


def gamma_admissible(gamma: float, ladder: SpectralLadder, sigma: float) -> bool:
    """True iff gamma keeps distance >= sigma from every exponent and -(n-2)/2.

    The ladder's materialised window must cover [gamma-sigma, gamma+sigma],
    otherwise exponents could hide inside the query interval.
    """
    if not sigma > 0.0:
        raise ValueError("sigma must be positive")
    lo, hi = ladder.gamma_window
    if gamma - sigma < lo - 1e-12 or gamma + sigma > hi + 1e-12:
        raise ValueError("widen gamma_window")
    return admissibility_distance(gamma, ladder) >= sigma - 1e-12


def three_scale_check(
    coeffs: JacobiCoefficients,
    gamma: float,
    K: float,
    sigma: float | None = None,
) -> tuple[float, bool]:
    """Second difference J(K^-2) - 2 J(K^-1) + J(1) and its strict positivity.

    The zero field returns (0.0, False).  gamma must be admissible (at the
    given sigma when provided, otherwise at positive distance from the
    exponent set); the raised error carries the violated distance.
    """
    if not K > 2.0:
        raise ValueError("scale ratio K must exceed 2")
    if coeffs.is_zero():
        return 0.0, False
    dist = admissibility_distance(gamma, coeffs.ladder)
    if sigma is not None:
        if not gamma_admissible(gamma, coeffs.ladder, sigma):
            raise ValueError(f"gamma inadmissible: distance {dist:.6g} < sigma {sigma:.6g}")
    elif dist <= 1e-12:
        raise ValueError(f"gamma inadmissible: distance {dist:.6g} to the exponent set")
    values = [growth_functional(coeffs, GrowthWindow(K=K, gamma=gamma, r=r)) for r in (K**-2, K**-1, 1.0)]
    lhs = values[0] - 2.0 * values[1] + values[2]
    return lhs, lhs > 0.0


def asymptotic_rate(coeffs: JacobiCoefficients) -> float:
    """Smallest exponent carried by a nonzero coefficient; +inf for the zero field.

    Log-resonant terms count at their power exponent.
    """
    rate = math.inf
    for t in coeffs.terms:
        e = coeffs.ladder.entries[t.j - 1]
        if t.c_plus != 0.0:
            rate = min(rate, e.gamma_plus)
        if t.c_minus != 0.0:
            rate = min(rate, e.gamma_minus)
    return rate


def is_slower_growth(coeffs: JacobiCoefficients) -> bool:
    """True iff the field's rate is at least the second distinct gamma^+."""
    plus = coeffs.ladder.distinct_gamma_plus()
    if len(plus) < 2:
        raise ValueError("ladder needs at least two distinct gamma_plus values")
    return asymptotic_rate(coeffs) >= plus[1] - 1e-12

def snap_rate(rate: float, ladder: SpectralLadder) -> tuple[float, float]:
    """Round an estimated rate to the nearest admissible value, with residual.

    Admissible values are the materialised exponents together with the ray
    [1, +inf); rates already in the ray snap to themselves.
    """
    if rate >= 1.0:
        return rate, 0.0
    candidates = ladder.exponent_values() + [1.0]
    snapped = min(candidates, key=lambda c: abs(rate - c))
    return snapped, rate - snapped


def estimate_rate_from_samples(samples: Sequence[tuple[float, float]], n: int) -> float:
    """Log-log regression of annulus L2 mass against the inner radius.

    Samples are pairs (s, m(s)) with m(s) = int_{A(s,2s)} v^2; for a field
    growing like rho^gamma the mass scales like s^{n+2 gamma}, so the
    fitted slope m gives rate (m - n)/2.
    """
    if len(samples) < 4:
        raise ValueError("need at least 4 samples")
    s = np.asarray([p[0] for p in samples], dtype=float)
    mass = np.asarray([p[1] for p in samples], dtype=float)
    if np.any(np.diff(s) >= 0.0):
        raise ValueError("sample radii must be strictly decreasing")
    if np.any(mass <= 0.0):
        raise ValueError("annulus masses must be positive")
    slope = np.polyfit(np.log(s), np.log(mass), 1)[0]
    return (slope - n) / 2.0


# --------------------------------------------------------------------------
# radial Jacobi ODE
# --------------------------------------------------------------------------

PERTURBATION_PROFILES: dict[str, Callable[[float], float]] = {
    # bounded profiles on (0, 1], sup-norm 1
    "bump": lambda r: math.exp(-((math.log(r) + 2.0) ** 2)),
    "oscillation": lambda r: math.sin(3.0 * math.log(r)),
    "constant": lambda r: 1.0,
}


@dataclass(frozen=True)
class PerturbedRadialProblem:
    """Radial mode equation v'' + (n-1)/r v' - mu/r^2 v = perturbation.

    mu is the cross-section eigenvalue, so homogeneous solutions are the
    indicial powers r^gamma with gamma (gamma + n - 2) = mu.  The
    perturbation couples scale-invariantly through bounded profiles:
    b0_scale * p(r) * v'/r + b1_scale * p(r) * v/r^2, so the scales play the
    role of the relative perturbation size epsilon.
    """

    mu: float
    n: int
    b0_scale: float = 0.0
    b1_scale: float = 0.0
    perturbation_profile: str = "bump"

    def __post_init__(self) -> None:
        if not (0.0 <= self.b0_scale <= 1.0 and 0.0 <= self.b1_scale <= 1.0):
            raise ValueError("perturbation scales must lie in [0, 1]")
        if self.perturbation_profile not in PERTURBATION_PROFILES:
            raise ValueError(f"unknown perturbation profile {self.perturbation_profile!r}")


@dataclass(frozen=True)
class RadialProfile:
    """Sampled radial solution on an ascending log-uniform grid."""

    r: np.ndarray
    v: np.ndarray
    dv: np.ndarray

    def __post_init__(self) -> None:
        if not (len(self.r) == len(self.v) == len(self.dv)):
            raise ValueError("profile arrays must share a length")

    @classmethod
    def from_function(cls, fn: Callable[[np.ndarray], np.ndarray], r_min: float, num: int = 2049) -> "RadialProfile":
        r = np.exp(np.linspace(math.log(r_min), 0.0, num))
        v = fn(r)
        dr = 1e-6 * r
        dv = (fn(r + dr) - fn(r - dr)) / (2.0 * dr)
        return cls(r=r, v=v, dv=dv)


def solve_radial_jacobi(
    problem: PerturbedRadialProblem,
    initial: tuple[float, float],
    r_min: float,
    num_samples: int = 2049,
) -> RadialProfile:
    """Integrate the radial mode equation from r=1 down to r_min.

    Integration runs in t = log r, where the unperturbed equation becomes
    the constant-coefficient w'' + (n-2) w' + mu w = 0 and the homogeneous
    solutions are exponentials; DOP853 with rtol 1e-11.
    """
    if not 0.0 < r_min < 1.0:
        raise ValueError("need 0 < r_min < 1")
    profile = PERTURBATION_PROFILES[problem.perturbation_profile]
    n, mu, e0, e1 = problem.n, problem.mu, problem.b0_scale, problem.b1_scale

    def rhs(t: float, y: np.ndarray) -> list[float]:
        # log-radius form: w'' + (n-2) w' - mu w = e0 p w' + e1 p w,
        # matching the indicial relation gamma (gamma + n - 2) = mu.
        w, wd = y
        p = profile(math.exp(t)) if (e0 or e1) else 0.0
        return [wd, -(n - 2) * wd + mu * w + e0 * p * wd + e1 * p * w]

    t_eval = np.linspace(0.0, math.log(r_min), num_samples)
    v0, dv0 = initial
    with np.errstate(over="ignore", invalid="ignore"):
        sol = solve_ivp(
            rhs,
            (0.0, math.log(r_min)),
            [v0, dv0],
            method="DOP853",
            t_eval=t_eval,
            rtol=1e-11,
            atol=1e-13,
        )
    finite = np.isfinite(sol.y).all(axis=0)
    if not sol.success or not finite.all():
        good = sol.t[finite][-1] if finite.any() else 0.0
        raise ValueError(f"radial integration failed; last good radius {math.exp(good):.6g}")
    t = sol.t[::-1]
    w = sol.y[0][::-1]
    wd = sol.y[1][::-1]
    r = np.exp(t)
    return RadialProfile(r=r, v=w, dv=wd / r)


def _profile_growth_quadrature(profile: RadialProfile, gamma: float, K: float, r_outer: float) -> float:
    """J(v; r_outer) on a sampled profile via cumulative trapezoids in log r."""
    t = np.log(profile.r)
    integrand = profile.v**2 * np.exp(-2.0 * gamma * t)
    cum = np.concatenate(([0.0], cumulative_trapezoid(integrand, t)))
    hi = math.log(r_outer)
    lo = hi - math.log(K)
    c_lo, c_hi = np.interp([lo, hi], t, cum)
    return float(c_hi - c_lo)


def perturbed_convexity_check(
    profile: RadialProfile,
    gamma: float,
    K: float,
    eps: float,
    n: int = 7,
) -> bool:
    """Strict J(K^-2) - 2(1+eps) J(K^-1) + J(1) > 0 on a sampled profile.

    The profile must cover [K^-3, 1]; J values come from quadrature on the
    samples.  gamma must lie in (-n+1, 1); keeping it away from the
    exponent set is the caller's obligation (the profile carries no ladder).
    """
    if not K > 2.0:
        raise ValueError("scale ratio K must exceed 2")
    if not (-n + 1 < gamma < 1.0):
        raise ValueError(f"gamma must lie in ({-n + 1}, 1)")
    if profile.r[0] > K**-3 * (1.0 + 1e-9) or profile.r[-1] < 1.0 - 1e-9:
        raise ValueError("profile does not cover the three-scale annulus [K^-3, 1]")
    j2 = _profile_growth_quadrature(profile, gamma, K, K**-2)
    j1 = _profile_growth_quadrature(profile, gamma, K, K**-1)
    j0 = _profile_growth_quadrature(profile, gamma, K, 1.0)
    return j2 - 2.0 * (1.0 + eps) * j1 + j0 > 0.0
