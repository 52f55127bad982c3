"""Semistability criteria: condition reports and region-based verdicts."""

from __future__ import annotations

from fractions import Fraction

import pytest

from triregion import (
    Monomial,
    NotArtinianError,
    Semistability,
    build_region,
    criterion_check,
    convenient_family,
    decide_semistability,
    find_tiling,
    monomial_ideal_of_region,
    parse_ideal,
    puncture_list,
)

DISJOINT_SQUARE = "x^7, x^4y^2z^2, xy^3z^3, y^7, z^7"
TOUCHING_PAIR = "x^7, x^5yz, xy^3z^3, y^7, z^8"
TOUCHING_IDEAL = "x^6, y^7, z^8, xy^5z, xy^2z^3, x^3y^2z"


class TestCriterionCheck:
    def test_strong_path_on_family(self):
        report = criterion_check(convenient_family(8, 13))
        assert report.d == 13
        assert report.applicable_strong
        assert report.wlp_verdict is True
        assert report.semistable_verdict is True

    def test_parity_blocks_strong(self):
        report = criterion_check(parse_ideal(DISJOINT_SQUARE))
        assert report.d == Fraction(9)
        assert report.cond_integer and report.cond_degrees_below
        assert report.cond_lcm_strong and report.cond_lcm_weak
        assert not report.cond_parity
        assert report.parity_offenders == (Monomial(4, 2, 2),)
        assert not report.applicable_strong
        assert report.applicable_weak

    def test_weak_only_with_wlp(self):
        report = criterion_check(parse_ideal(TOUCHING_PAIR))
        assert report.d == Fraction(9)
        assert report.cond_lcm_weak and not report.cond_lcm_strong
        assert report.min_lcm_degree == 9
        assert not report.applicable_strong and report.applicable_weak
        assert report.wlp_verdict is True
        assert report.semistable_verdict is True

    def test_inapplicable_no_verdicts(self):
        report = criterion_check(parse_ideal(TOUCHING_IDEAL))
        # degree sum 45 over t-1 = 5 gives d = 9, but z^8 reaches d
        assert not report.applicable_weak
        assert report.wlp_verdict is None
        assert report.semistable_verdict is None

    def test_non_artinian_rejected(self):
        with pytest.raises(NotArtinianError):
            criterion_check(parse_ideal("xy, y^2, z^3"))

    def test_unit_ideal_rejected(self):
        with pytest.raises(ValueError):
            criterion_check(parse_ideal("1"))

    def test_json_shape(self):
        payload = criterion_check(parse_ideal(DISJOINT_SQUARE)).to_json()
        assert payload["d"] == "9"
        assert payload["cond_parity"] is False
        assert payload["parity_offenders"] == ["x^4*y^2*z^2"]
        assert payload["min_lcm_degree"] >= 10

    def test_applicable_strong_implies_weak(self):
        for t, d in ((3, 4), (4, 6), (5, 8), (6, 10)):
            report = criterion_check(convenient_family(t, d))
            assert not report.applicable_strong or report.applicable_weak


class TestStrongCriterionConsequences:
    def test_disjoint_punctures_and_socle_bound(self):
        # strong applicability forces pairwise disjoint punctures and a
        # socle living in degrees >= d-1
        for t, d in ((4, 6), (5, 8), (6, 9), (8, 13)):
            ideal = convenient_family(t, d)
            report = criterion_check(ideal)
            assert report.applicable_strong
            region = build_region(ideal, d)
            gens = monomial_ideal_of_region(region).generators
            for i, g in enumerate(gens):
                for h in gens[i + 1:]:
                    assert g.lcm(h).degree() >= d + 1
            degrees = ideal.socle_degrees()
            assert degrees and min(degrees) >= d - 1

    def test_even_floating_punctures_when_tileable(self):
        for t, d in ((5, 8), (6, 10), (8, 13)):
            ideal = convenient_family(t, d)
            region = build_region(ideal, d)
            assert find_tiling(region) is not None
            for p in puncture_list(region):
                if p.floating:
                    assert p.side_length % 2 == 0

    def test_fast_verdict_matches_rank_scan(self):
        from triregion import has_wlp

        for t, d in ((3, 5), (4, 7), (5, 9), (8, 13)):
            ideal = convenient_family(t, d)
            report = criterion_check(ideal)
            assert report.applicable_strong
            assert report.wlp_verdict == has_wlp(ideal).verdict


class TestDecideSemistability:
    def test_perfectly_punctured_tileable(self):
        assert (
            decide_semistability(parse_ideal(DISJOINT_SQUARE), 9)
            is Semistability.SEMISTABLE
        )

    def test_perfectly_punctured_non_tileable(self):
        assert (
            decide_semistability(parse_ideal(TOUCHING_IDEAL), 8)
            is Semistability.NOT_SEMISTABLE
        )

    def test_under_punctured_undetermined(self):
        assert (
            decide_semistability(parse_ideal("xy^3z^2, x^10, y^10, z^10"), 10)
            is Semistability.UNDETERMINED
        )

    def test_not_perfectly_punctured_but_tileable(self):
        # tileability together with semistability would force perfect
        # puncturing, so a tileable over-punctured presentation refutes it
        ideal = parse_ideal("x^2, xy, y^2, z^4")
        assert decide_semistability(ideal, 4) is Semistability.NOT_SEMISTABLE

    def test_generator_degree_above_d_rejected(self):
        with pytest.raises(ValueError):
            decide_semistability(parse_ideal(TOUCHING_IDEAL), 7)

    def test_empty_region_rejected(self):
        with pytest.raises(ValueError):
            decide_semistability(parse_ideal("1"), 3)

    def test_non_artinian_rejected(self):
        with pytest.raises(NotArtinianError):
            decide_semistability(parse_ideal("xy, y^2, z^3"), 5)
