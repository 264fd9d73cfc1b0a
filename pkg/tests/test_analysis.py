"""Cover profiles, weights, and the exhaustive audit."""

import pytest

from neighborly.analysis import AUDIT_CHECKS, audit, cover_profile, weight
from neighborly.bounds import DyadicSum, b_config_size
from neighborly.constructions import (
    alon_product,
    b_config_family,
    extremal_dminus1_family,
)
from neighborly.core import Family, covers
from neighborly.errors import DomainError, ValidationError

from conftest import all_binaries, fam, jv


def brute_force_classes(family):
    """Independent cover classes via point queries over all of {0,1}^d."""
    classes = {}
    uncovered = set()
    for v in all_binaries(family.d):
        coverers = [u for u in family if covers(u, v)]
        assert len(coverers) <= 1
        if coverers:
            classes.setdefault(coverers[0].joker_count, set()).add(v)
        else:
            uncovered.add(v)
    return classes, uncovered


class TestCoverProfile:
    def test_published_family_profile(self):
        family = extremal_dminus1_family(4)
        profile = cover_profile(family)
        expected_classes, expected_uncovered = brute_force_classes(family)
        assert {t: cls for t, cls in profile.classes.items()} == expected_classes
        assert profile.uncovered == expected_uncovered
        assert len(profile.classes[0]) == 8
        assert len(profile.classes[1]) == 8
        assert not profile.uncovered

    def test_all_binary_family(self):
        family = b_config_family(2, 4)
        profile = cover_profile(family)
        assert profile.classes[0] == family.members
        assert set(profile.classes) == {0}

    def test_weight_sum_equals_size(self):
        family = alon_product(1, 3)
        profile = cover_profile(family)
        assert profile.total_weight() == DyadicSum.integer(4)

    def test_mirror_classes_same_size(self):
        for family in (alon_product(2, 5), extremal_dminus1_family(5)):
            profile = cover_profile(family)
            for t, cls in profile.classes.items():
                assert len(profile.complement_classes[t]) == len(cls)

    def test_kleitman_tightness_of_zero_class(self):
        # an all-binary b_config family puts exactly the isodiametric count in V(0)
        for (k, d) in [(2, 4), (3, 5), (5, 7)]:
            profile = cover_profile(b_config_family(k, d))
            assert len(profile.classes[0]) == b_config_size(k, d)

    def test_weight_identity_up_to_d_twelve(self):
        for d in (11, 12):
            family = extremal_dminus1_family(d)
            profile = cover_profile(family)
            assert profile.total_weight() == DyadicSum.integer(len(family))
        family = alon_product(4, 12)
        profile = cover_profile(family)
        assert profile.total_weight() == DyadicSum.integer(len(family))

    def test_requires_validated(self):
        family = fam(2, 1, "00", "01")
        with pytest.raises(ValidationError):
            cover_profile(family)


class TestWeight:
    def test_binary_member(self):
        family = fam(2, 1, "00", "01").validate()
        assert weight(jv("00"), family) == DyadicSum.integer(1)

    def test_one_joker_member(self):
        family = fam(2, 1, "0*", "10").validate()
        assert weight(jv("01"), family) == DyadicSum.half_power(1)

    def test_uncovered(self):
        family = fam(2, 1, "00", "01").validate()
        assert weight(jv("11"), family) == DyadicSum.integer(0)

    def test_dimension_checks(self):
        family = fam(2, 1, "00", "01").validate()
        with pytest.raises(DomainError):
            weight(jv("011"), family)
        with pytest.raises(DomainError):
            weight(jv("0*"), family)


class TestAudit:
    def test_published_families_pass(self):
        report = audit(extremal_dminus1_family(4))
        assert report.passed
        assert report.total_weight == DyadicSum.integer(12)
        assert set(report.checks) == set(AUDIT_CHECKS)

        report = audit(alon_product(3, 6))
        assert report.passed
        assert report.total_weight == DyadicSum.integer(27)

    def test_constructions_always_pass(self):
        for d in range(2, 7):
            for k in range(1, d):
                assert audit(alon_product(k, d)).passed, (k, d)
                assert audit(b_config_family(k, d)).passed, (k, d)
            assert audit(extremal_dminus1_family(d)).passed, d

    def test_zero_distance_family_rejected_before_audit(self):
        family = fam(2, 1, "00", "0*")
        with pytest.raises(ValidationError):
            family.validate()
        with pytest.raises(ValidationError):
            audit(family)  # unvalidated families are refused outright

    def test_requires_gap(self):
        family = b_config_family(2, 2)
        with pytest.raises(DomainError):
            audit(family)

    def test_dimension_cap(self):
        family = alon_product(2, 5)
        with pytest.raises(DomainError):
            audit(family, dimension_cap=4)

    def test_detects_forged_distance_violation(self):
        # 000 and 111 are 3 > k=1 apart; a forged validated flag must not
        # survive the class checks (their mirror classes coincide).
        family = Family.of(3, 1, [jv("000"), jv("111")], validated=True)
        report = audit(family)
        assert not report.passed
        assert not report.checks["disjoint_mirror_classes"].passed
        assert not report.checks["prefix_diameter_bound"].passed

    def test_detects_forged_cover_collision(self):
        # 00* covers 000, which is also a member: unique cover must fail
        family = Family.of(3, 2, [jv("000"), jv("00*")], validated=True)
        report = audit(family)
        assert not report.checks["unique_cover"].passed
        assert "000" in report.checks["unique_cover"].counterexample
