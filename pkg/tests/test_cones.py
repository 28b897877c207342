import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercone_lab.cones import (
    CustomSpectrum,
    ProductSphere,
    asymptotic_exponents,
    ball_volume,
    cone_density,
    cross_section_spectrum,
    density_from_cross_section_area,
    indicial_roots,
    sphere_area,
    sphere_harmonic_dim,
    sphere_laplacian_eigenvalue,
    stability_report,
)


def enumerate_product_spectrum(p, q, mu_max):
    """Independent oracle: exact rational enumeration of the product spectrum."""
    s = p + q
    out = {}
    k = 0
    while Fraction(k * (k + p - 1) * s, p) - s <= mu_max:
        m = 0
        while True:
            mu = Fraction(k * (k + p - 1) * s, p) + Fraction(m * (m + q - 1) * s, q) - s
            if mu > mu_max:
                break
            out[mu] = out.get(mu, 0) + sphere_harmonic_dim(p, k) * sphere_harmonic_dim(q, m)
            m += 1
        k += 1
    return sorted(out.items())


class TestSpectrum:
    def test_simons_head(self):
        ladder = cross_section_spectrum(ProductSphere(3, 3, "simons"), 10.0)
        got = [(e.mu, e.multiplicity) for e in ladder.entries]
        assert got == [(-6.0, 1), (0.0, 8), (6.0, 16), (10.0, 18)]

    @pytest.mark.parametrize("p,q,mu_max", [(3, 3, 10), (1, 5, 9), (2, 4, 12), (1, 1, 20), (2, 7, 15)])
    def test_matches_exact_enumeration(self, p, q, mu_max):
        ladder = cross_section_spectrum(ProductSphere(p, q), mu_max)
        oracle = enumerate_product_spectrum(p, q, mu_max)
        assert len(ladder.entries) == len(oracle)
        for entry, (mu, mult) in zip(ladder.entries, oracle):
            assert entry.mu == pytest.approx(float(mu), abs=1e-10)
            assert entry.multiplicity == mult

    def test_one_five_head(self):
        ladder = cross_section_spectrum(ProductSphere(1, 5), 1.0)
        got = [(e.mu, e.multiplicity) for e in ladder.entries]
        assert got[0] == (-6.0, 1)
        assert got[1][0] == pytest.approx(0.0, abs=1e-12)
        assert got[1][1] == 8

    def test_custom_resonant_entry(self):
        ladder = cross_section_spectrum(CustomSpectrum(7, ((-6.25, 1),)), 0.0)
        (entry,) = ladder.entries
        assert entry.resonant
        assert entry.gamma_plus == entry.gamma_minus == -2.5

    def test_empty_ladder_error(self):
        with pytest.raises(ValueError, match="empty ladder"):
            cross_section_spectrum(ProductSphere(3, 3), -7.0)
        with pytest.raises(ValueError, match="empty ladder"):
            cross_section_spectrum(CustomSpectrum(7, ((-6.0, 1),)), -6.5)

    def test_unsorted_custom_rejected(self):
        with pytest.raises(ValueError, match="spectrum not strictly sorted"):
            CustomSpectrum(7, ((-6.0, 1), (-6.0, 2)))
        with pytest.raises(ValueError, match="spectrum not strictly sorted"):
            CustomSpectrum(7, ((0.0, 1), (-1.0, 1)))

    def test_monotone_merge_prefix(self):
        small = cross_section_spectrum(ProductSphere(2, 4), 11.0)
        large = cross_section_spectrum(ProductSphere(2, 4), 40.0)
        assert large.entries[: len(small.entries)] == small.entries

    @pytest.mark.parametrize("p", range(1, 6))
    def test_translation_mode_multiplicity(self, p):
        q = 6 - p
        ladder = cross_section_spectrum(ProductSphere(p, q), 1.0)
        zero = [e for e in ladder.entries if abs(e.mu) < 1e-9]
        assert len(zero) == 1
        assert zero[0].multiplicity == ladder.n + 1 == 8

    @pytest.mark.parametrize("p,q", [(1, 1), (2, 7), (4, 4)])
    def test_translation_mode_in_general_dimension(self, p, q):
        ladder = cross_section_spectrum(ProductSphere(p, q), 1.0)
        zero = [e for e in ladder.entries if abs(e.mu) < 1e-9]
        assert zero[0].multiplicity == p + q + 2 == ladder.n + 1

    def test_mu_max_must_be_finite(self):
        with pytest.raises(ValueError):
            cross_section_spectrum(ProductSphere(3, 3), math.inf)


class TestExponents:
    def test_simons_exponent_set(self):
        ladder = cross_section_spectrum(ProductSphere(3, 3), 6.0)
        gammas = [e.gamma for e in asymptotic_exponents(ladder)]
        for expected in (-3.0, -2.0, 0.0, -5.0, 1.0):
            assert any(abs(g - expected) < 1e-12 for g in gammas)
        assert all(abs(g + 2.5) > 1e-9 for g in gammas)
        assert gammas == sorted(gammas)

    def test_clipped_window_head(self):
        ladder = cross_section_spectrum(ProductSphere(3, 3), 6.0)
        clipped = type(ladder)(n=ladder.n, entries=ladder.entries, gamma_window=(-5.0, 2.0))
        head = [e.gamma for e in asymptotic_exponents(clipped)]
        assert head == [-5.0, -3.0, -2.0, 0.0, 1.0]

    def test_single_zero_entry(self):
        ladder = cross_section_spectrum(CustomSpectrum(7, ((0.0, 3),)), 1.0)
        gammas = sorted(e.gamma for e in asymptotic_exponents(ladder))
        assert gammas == [-5.0, 0.0]

    def test_empty_window(self):
        ladder = cross_section_spectrum(ProductSphere(3, 3), 6.0)
        empty = type(ladder)(n=ladder.n, entries=ladder.entries, gamma_window=(1.0, -1.0))
        assert asymptotic_exponents(empty) == []

    def test_unstable_rejected(self):
        ladder = cross_section_spectrum(CustomSpectrum(7, ((-7.0, 1),)), 0.0)
        with pytest.raises(ValueError, match="unstable cone"):
            asymptotic_exponents(ladder)

    def test_resonant_retained_with_both_origins(self):
        ladder = cross_section_spectrum(CustomSpectrum(7, ((-6.25, 1),)), 0.0)
        exps = asymptotic_exponents(ladder)
        assert [e.origin for e in exps] == ["plus", "minus"]
        assert all(e.gamma == -2.5 for e in exps)


class TestStability:
    def test_simons_report(self):
        rep = stability_report(cross_section_spectrum(ProductSphere(3, 3), 10.0))
        assert rep.stable
        assert rep.margin == pytest.approx(0.25, abs=1e-12)
        assert rep.gamma_gap == pytest.approx(2.0, abs=1e-12)
        assert rep.nontrivial_constraints_ok

    def test_unstable_custom(self):
        rep = stability_report(cross_section_spectrum(CustomSpectrum(7, ((-7.0, 1),)), 0.0))
        assert not rep.stable

    def test_single_entry_gap_is_infinite(self):
        rep = stability_report(cross_section_spectrum(CustomSpectrum(7, ((-6.0, 1),)), 0.0))
        assert rep.gamma_gap == math.inf

    @pytest.mark.parametrize("p", range(1, 6))
    def test_family_p_plus_q_six(self, p):
        ladder = cross_section_spectrum(ProductSphere(p, 6 - p), 10.0)
        rep = stability_report(ladder)
        assert rep.mu1 == pytest.approx(-6.0, abs=1e-10)
        assert rep.margin == pytest.approx(0.25, abs=1e-10)
        first = ladder.entries[0]
        assert first.gamma_plus == pytest.approx(-2.0, abs=1e-10)
        assert first.gamma_minus == pytest.approx(-3.0, abs=1e-10)
        assert rep.gamma_gap == pytest.approx(2.0, abs=1e-10)
        assert rep.nontrivial_constraints_ok


class TestDensity:
    def test_simons_closed_form(self):
        assert cone_density(ProductSphere(3, 3)) == pytest.approx(105 * math.pi / 224, abs=1e-12)

    def test_hyperplane_substitution_exact(self):
        assert density_from_cross_section_area(sphere_area(6), 7) == 1.0

    def test_one_five_above_one(self):
        assert cone_density(ProductSphere(1, 5)) > 1.0

    def test_every_product_cone_above_one(self):
        for p in range(1, 6):
            assert cone_density(ProductSphere(p, 6 - p)) > 1.0

    def test_custom_density_passthrough(self):
        cone = CustomSpectrum(7, ((-6.0, 1),), density=1.3)
        assert cone_density(cone) == 1.3

    def test_custom_without_density(self):
        with pytest.raises(ValueError, match="density unavailable"):
            cone_density(CustomSpectrum(7, ((-6.0, 1),)))

    def test_ball_volume_in_seven_dims(self):
        assert ball_volume(7) == pytest.approx(16 * math.pi**3 / 105, rel=1e-14)


class TestRootIdentities:
    @given(
        mu=st.floats(min_value=-6.25, max_value=500.0, allow_nan=False),
        n=st.integers(min_value=3, max_value=9),
    )
    @settings(max_examples=200)
    def test_indicial_root_identities(self, mu, n):
        half = (n - 2) / 2.0
        if mu < -(half * half) + 1e-9:
            return
        gp, gm, resonant = indicial_roots(mu, n)
        assert not resonant
        assert gp + gm == pytest.approx(-(n - 2), abs=1e-10)
        assert gp * gm == pytest.approx(-mu, abs=1e-10 * max(1.0, abs(mu)))

    def test_ladder_root_identities(self):
        ladder = cross_section_spectrum(ProductSphere(2, 4), 30.0)
        for e in ladder.entries:
            assert e.gamma_plus + e.gamma_minus == pytest.approx(-5.0, abs=1e-10)
            assert e.gamma_plus * e.gamma_minus == pytest.approx(-e.mu, abs=1e-10 * max(1.0, abs(e.mu)))

    def test_gamma_monotonicity_in_ladder(self):
        ladder = cross_section_spectrum(ProductSphere(3, 3), 40.0)
        plus = [e.gamma_plus for e in ladder.entries]
        minus = [e.gamma_minus for e in ladder.entries]
        assert plus == sorted(plus)
        assert minus == sorted(minus, reverse=True)

    def test_laplacian_eigenvalue_formula(self):
        assert sphere_laplacian_eigenvalue(3, 2) == 8.0
        assert sphere_harmonic_dim(3, 2) == 9
        assert sphere_harmonic_dim(5, 1) == 6
