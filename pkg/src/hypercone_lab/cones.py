"""Cross-section spectra, indicial exponents and densities of minimal hypercones.

A cone is described either as a member of the product-sphere family
S^p(a) x S^q(b) (the only regular stable cones with closed-form spectra,
with a^2 = p/(p+q), b^2 = q/(p+q)) or by an explicitly tabulated
cross-section spectrum.  Everything downstream works off a
:class:`SpectralLadder`: the sorted eigenvalues ``mu_j`` of the
cross-section operator -(Delta_S + |A_S|^2) together with the indicial
exponents ``gamma_j^+/- = -(n-2)/2 +- sqrt(mu_j + (n-2)^2/4)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple, Union

__all__ = [
    "RESONANCE_TOL",
    "EIGEN_MERGE_TOL",
    "ProductSphere",
    "CustomSpectrum",
    "ConeDescriptor",
    "LadderEntry",
    "SpectralLadder",
    "StabilityReport",
    "Exponent",
    "sphere_laplacian_eigenvalue",
    "sphere_harmonic_dim",
    "sphere_area",
    "ball_volume",
    "density_from_cross_section_area",
    "indicial_roots",
    "cross_section_spectrum",
    "asymptotic_exponents",
    "stability_report",
    "cone_density",
]

# |mu + (n-2)^2/4| below this is the resonant (double indicial root) case.
RESONANCE_TOL = 1e-12
# Product-formula eigenvalues closer than this are merged; they are rational
# multiples of small integers, far apart relative to float error.
EIGEN_MERGE_TOL = 1e-9


def sphere_laplacian_eigenvalue(d: int, m: int) -> float:
    """m-th Laplacian eigenvalue m(m+d-1) on the unit d-sphere."""
    return float(m * (m + d - 1))


def sphere_harmonic_dim(d: int, m: int) -> int:
    """Dimension of the degree-m spherical harmonics on S^d."""
    if m == 0:
        return 1
    if m == 1:
        return d + 1
    return math.comb(m + d, d) - math.comb(m + d - 2, d)


def sphere_area(d: int) -> float:
    """Surface measure of the unit d-sphere in R^{d+1}."""
    return 2.0 * math.pi ** ((d + 1) / 2.0) / math.gamma((d + 1) / 2.0)


def ball_volume(n: int) -> float:
    """Volume of the unit n-ball."""
    return sphere_area(n - 1) / n


def density_from_cross_section_area(area: float, n: int) -> float:
    """Area-ratio density of the cone over a cross-section of (n-1)-area `area`.

    Normalised so that the equatorial sphere S^{n-1} (a hyperplane through
    the origin) has density exactly 1.
    """
    return area / sphere_area(n - 1)


@dataclass(frozen=True)
class ProductSphere:
    """Cone over the minimal product S^p(a) x S^q(b) in S^{p+q+1}."""

    p: int
    q: int
    label: str = ""

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError("product sphere factors need p >= 1 and q >= 1")

    @property
    def n(self) -> int:
        """Cone dimension; the ambient space is R^{n+1}."""
        return self.p + self.q + 1

    @property
    def radius_sq(self) -> tuple[float, float]:
        """(a^2, b^2) of the minimal cross-section radii."""
        s = self.p + self.q
        return self.p / s, self.q / s

    @property
    def second_form_sq(self) -> float:
        """|A_S|^2 of the cross section: p(b/a)^2 + q(a/b)^2 = p + q."""
        return float(self.p + self.q)


@dataclass(frozen=True)
class CustomSpectrum:
    """User-tabulated cross-section spectrum for an n-dimensional cone."""

    n: int
    entries: tuple[tuple[float, int], ...]
    density: float | None = None
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple((float(m), int(k)) for m, k in self.entries))
        for _, mult in self.entries:
            if mult < 1:
                raise ValueError("multiplicities must be >= 1")
        mus = [m for m, _ in self.entries]
        for lo, hi in zip(mus, mus[1:]):
            if hi - lo <= EIGEN_MERGE_TOL:
                raise ValueError("spectrum not strictly sorted")


ConeDescriptor = Union[ProductSphere, CustomSpectrum]


class LadderEntry(NamedTuple):
    mu: float
    multiplicity: int
    gamma_plus: float
    gamma_minus: float
    resonant: bool


@dataclass(frozen=True)
class SpectralLadder:
    """Sorted eigenvalues with indicial exponents and the materialised window.

    ``gamma_window`` is the inclusive interval of the exponent line that the
    ladder covers completely: every exponent of the full asymptotic spectrum
    lying inside the window belongs to one of the entries.
    """

    n: int
    entries: tuple[LadderEntry, ...]
    gamma_window: tuple[float, float]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("empty ladder")
        mus = [e.mu for e in self.entries]
        for lo, hi in zip(mus, mus[1:]):
            if hi <= lo:
                raise ValueError("ladder entries must be strictly increasing in mu")

    @property
    def mu1(self) -> float:
        return self.entries[0].mu

    @property
    def mu2(self) -> float:
        """Second eigenvalue counted with multiplicity; NaN if not materialised."""
        first = self.entries[0]
        if first.multiplicity >= 2:
            return first.mu
        if len(self.entries) >= 2:
            return self.entries[1].mu
        return math.nan

    def distinct_gamma_plus(self) -> list[float]:
        out: list[float] = []
        for e in self.entries:
            if math.isnan(e.gamma_plus):
                continue
            if not out or e.gamma_plus - out[-1] > 1e-12:
                out.append(e.gamma_plus)
        return out

    def exponent_values(self) -> list[float]:
        """All materialised exponents (both signs), duplicates collapsed."""
        vals: set[float] = set()
        for e in self.entries:
            if not math.isnan(e.gamma_plus):
                vals.add(e.gamma_plus)
            if not math.isnan(e.gamma_minus):
                vals.add(e.gamma_minus)
        return sorted(vals)


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    margin: float
    mu1: float
    mu2: float
    gamma_gap: float
    nontrivial_constraints_ok: bool


class Exponent(NamedTuple):
    gamma: float
    origin: Literal["plus", "minus"]
    j: int


def indicial_roots(mu: float, n: int) -> tuple[float, float, bool]:
    """Roots of gamma(gamma + n - 2) = mu, i.e. -(n-2)/2 +- sqrt(mu + (n-2)^2/4).

    Returns (gamma_plus, gamma_minus, resonant); NaN roots for mu below the
    resonant value (complex indicial roots).
    """
    half = (n - 2) / 2.0
    disc = mu + half * half
    if abs(disc) <= RESONANCE_TOL:
        return -half, -half, True
    if disc < 0.0:
        return math.nan, math.nan, False
    root = math.sqrt(disc)
    return -half + root, -half - root, False


def _merge_eigenvalues(raw: list[tuple[float, int]]) -> list[tuple[float, int]]:
    raw.sort(key=lambda t: t[0])
    merged: list[tuple[float, int]] = []
    for mu, mult in raw:
        if merged and mu - merged[-1][0] <= EIGEN_MERGE_TOL:
            merged[-1] = (merged[-1][0], merged[-1][1] + mult)
        else:
            merged.append((mu, mult))
    return merged


def _product_sphere_eigenvalues(cone: ProductSphere, mu_max: float) -> list[tuple[float, int]]:
    a2, b2 = cone.radius_sq
    curv = cone.second_form_sq
    raw: list[tuple[float, int]] = []
    k = 0
    while True:
        base = sphere_laplacian_eigenvalue(cone.p, k) / a2 - curv
        if base > mu_max:
            break
        m = 0
        while True:
            mu = base + sphere_laplacian_eigenvalue(cone.q, m) / b2
            if mu > mu_max:
                break
            raw.append((mu, sphere_harmonic_dim(cone.p, k) * sphere_harmonic_dim(cone.q, m)))
            m += 1
        k += 1
    return _merge_eigenvalues(raw)


def _window(n: int, entries: list[LadderEntry]) -> tuple[float, float]:
    plus = [e.gamma_plus for e in entries if not math.isnan(e.gamma_plus)]
    minus = [e.gamma_minus for e in entries if not math.isnan(e.gamma_minus)]
    if not plus:
        return math.inf, -math.inf
    return min(minus), max(plus)


def cross_section_spectrum(cone: ConeDescriptor, mu_max: float) -> SpectralLadder:
    """All eigenvalues mu <= mu_max of -(Delta_S + |A_S|^2), with exponents.

    Product-sphere spectra are enumerated from the factor-sphere Laplacians
    (lambda_d(m) = m(m+d-1) scaled by the squared radii) minus |A_S|^2, with
    harmonic-dimension multiplicities and equal values merged.  Tabulated
    spectra are passed through, truncated at mu_max.
    """
    if not math.isfinite(mu_max):
        raise ValueError("mu_max must be finite")
    if isinstance(cone, ProductSphere):
        pairs = _product_sphere_eigenvalues(cone, mu_max)
        n = cone.n
    else:
        pairs = [(mu, mult) for mu, mult in cone.entries if mu <= mu_max]
        n = cone.n
    if not pairs:
        raise ValueError("empty ladder")
    entries = []
    for mu, mult in pairs:
        gp, gm, res = indicial_roots(mu, n)
        entries.append(LadderEntry(mu, mult, gp, gm, res))
    return SpectralLadder(n=n, entries=tuple(entries), gamma_window=_window(n, entries))


def asymptotic_exponents(ladder: SpectralLadder) -> list[Exponent]:
    """Flattened, sorted exponents inside the ladder's window.

    Resonant entries contribute the double root once per origin; an empty
    window (lo > hi) yields an empty list.
    """
    half = (ladder.n - 2) / 2.0
    for e in ladder.entries:
        if e.mu < -half * half - RESONANCE_TOL:
            raise ValueError("unstable cone: complex indicial roots")
    lo, hi = ladder.gamma_window
    out: list[Exponent] = []
    for j, e in enumerate(ladder.entries, start=1):
        if lo <= e.gamma_plus <= hi:
            out.append(Exponent(e.gamma_plus, "plus", j))
        if lo <= e.gamma_minus <= hi:
            out.append(Exponent(e.gamma_minus, "minus", j))
    out.sort(key=lambda t: (t.gamma, t.j, t.origin != "plus"))
    return out


def stability_report(ladder: SpectralLadder) -> StabilityReport:
    """Stability margin, gamma gap and the nontrivial-cone eigenvalue constraints.

    The gap is the difference between the two smallest distinct gamma^+
    values; a ladder with fewer than two distinct values reports +inf
    (the empty-infimum convention).
    """
    n = ladder.n
    half = (n - 2) / 2.0
    margin = ladder.mu1 + half * half
    plus = ladder.distinct_gamma_plus()
    gamma_gap = plus[1] - plus[0] if len(plus) >= 2 else math.inf
    mu2 = ladder.mu2
    ok = ladder.mu1 <= -n + 1 and (not math.isnan(mu2)) and mu2 <= 0.0
    return StabilityReport(
        stable=margin >= 0.0,
        margin=margin,
        mu1=ladder.mu1,
        mu2=mu2,
        gamma_gap=gamma_gap,
        nontrivial_constraints_ok=ok,
    )


def cone_density(cone: ConeDescriptor) -> float:
    """Area-ratio density at the vertex.

    For product spheres this is the closed form
    a^p b^q |S^p| |S^q| / (n w_n); tabulated cones must state their density.
    """
    if isinstance(cone, CustomSpectrum):
        if cone.density is None:
            raise ValueError("density unavailable")
        return cone.density
    a2, b2 = cone.radius_sq
    area = (
        a2 ** (cone.p / 2.0)
        * b2 ** (cone.q / 2.0)
        * sphere_area(cone.p)
        * sphere_area(cone.q)
    )
    return density_from_cross_section_area(area, cone.n)
