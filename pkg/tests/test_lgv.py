"""Weighted non-intersecting lattice paths: enumeration, weight schemes,
reference panel values and agreement with the determinant route."""
from collections import Counter

import pytest

from qfaulhaber.coeffs import BadIndexError, det_route, salie_G, salie_H
from qfaulhaber.laurent import LaurentPoly, ONE, Q, ZERO
from qfaulhaber.lgv import (
    LatticePoint,
    brute_route,
    ends_vertically,
    enumerate_nonintersecting,
    family_steps,
    gh_config,
    lgv_det_route,
    lgv_determinant,
    path_steps,
    paths_between,
    pq_config,
    single_path_weight_sum,
    starts_vertically,
    subset_weight,
    subset_weight_total,
    vertical_columns,
    weight_G,
    weight_H,
    weight_P,
    weight_Q,
    weight_alt,
)


def C(*descending):
    return LaurentPoly(list(reversed(descending)))


def make_path(start, steps):
    pts = [LatticePoint(*start)]
    x, y = start
    for s in steps:
        if s == "N":
            y += 1
        else:
            x += 1
        pts.append(LatticePoint(x, y))
    return tuple(pts)


# Reference four-path family used throughout: gh_config(7, 4) with the step
# words NENE / NNENE / NENENN / ENNENNN.
REFERENCE_STEPS = ("NENE", "NNENE", "NENENN", "ENNENNN")


@pytest.fixture
def reference_family():
    starts, ends = gh_config(7, 4)
    fam = tuple(make_path(s, w) for s, w in zip(starts, REFERENCE_STEPS))
    for path, end in zip(fam, ends):
        assert path[-1] == end
    return fam


class TestPaths:
    def test_counts_are_binomial(self):
        from math import comb

        a = LatticePoint(0, 0)
        for dx in range(4):
            for dy in range(4):
                got = len(list(paths_between(a, LatticePoint(dx, dy))))
                assert got == comb(dx + dy, dy)

    def test_unreachable_is_empty(self):
        assert list(paths_between(LatticePoint(0, 0), LatticePoint(-1, 0))) == []
        assert list(paths_between(LatticePoint(0, 0), LatticePoint(0, -1))) == []

    def test_step_serialization_roundtrip(self):
        p = make_path((1, -1), "NNEEN")
        assert path_steps(p) == "NNEEN"
        assert p[0] == LatticePoint(1, -1) and p[-1] == LatticePoint(3, 2)

    def test_paths_are_monotone(self):
        for p in paths_between(LatticePoint(0, 0), LatticePoint(2, 2)):
            for a, b in zip(p, p[1:]):
                assert (b.x - a.x, b.y - a.y) in ((1, 0), (0, 1))


class TestEnumeration:
    def test_vertex_disjointness(self):
        starts, ends = gh_config(4, 2)
        for fam in enumerate_nonintersecting(starts, ends):
            seen = set()
            for path in fam:
                assert not seen.intersection(path)
                seen.update(path)

    def test_family_count_4_2(self):
        starts, ends = gh_config(4, 2)
        assert len(enumerate_nonintersecting(starts, ends)) == 17

    def test_single_path_case(self):
        starts, ends = gh_config(3, 1)
        fams = enumerate_nonintersecting(starts, ends)
        assert len(fams) == len(list(paths_between(starts[0], ends[0])))

    def test_lgv_determinant_counts_families(self):
        # with unit weights the determinant counts non-intersecting families
        for m, k in ((3, 2), (4, 2), (4, 3), (5, 2)):
            starts, ends = gh_config(m, k)
            count = len(enumerate_nonintersecting(starts, ends))
            assert lgv_determinant(starts, ends, {}) == LaurentPoly([count])

    def test_single_pair_weight_dp_matches_brute(self):
        a, b = LatticePoint(0, 0), LatticePoint(3, 3)
        weights = {0: Q, 1: ONE + Q, 2: Q * Q}
        total = ZERO
        for p in paths_between(a, b):
            w = ONE
            for u, v in zip(p, p[1:]):
                if v.x == u.x:
                    w = w * weights.get(u.x, ONE)
            total = total + w
        assert single_path_weight_sum(a, b, weights) == total

    def test_unreachable_pair_weight_is_zero(self):
        assert single_path_weight_sum((2, 0), (0, 0), {}) == ZERO
        assert single_path_weight_sum((0, 2), (1, 0), {}) == ZERO


class TestConfigs:
    def test_pq_points(self):
        starts, ends = pq_config(7, 4)
        assert starts == [LatticePoint(2 * i, -2 * i) for i in range(4)]
        assert ends == [LatticePoint(2 * i + 3, 7 - 4 - i - 1) for i in range(4)]

    def test_gh_points(self):
        starts, ends = gh_config(7, 4)
        assert ends == [LatticePoint(2 * i + 2, 7 - 4 - 1 - i) for i in range(4)]

    def test_k_zero_empty(self):
        assert pq_config(5, 0) == ([], [])
        assert gh_config(5, 0) == ([], [])

    def test_bad_indices(self):
        with pytest.raises(BadIndexError):
            pq_config(3, 3)
        with pytest.raises(BadIndexError):
            gh_config(3, 4)


class TestReferenceFamily:
    def test_vertical_step_columns(self, reference_family):
        assert dict(vertical_columns(reference_family)) == {
            0: 1, 1: 1, 2: 2, 3: 1, 4: 1, 5: 1, 6: 2, 7: 2, 8: 3,
        }

    def test_opening_and_closing_flags(self, reference_family):
        assert starts_vertically(reference_family) == [True, True, True, False]
        assert ends_vertically(reference_family) == [False, False, True, True]

    def test_serialization(self, reference_family):
        assert family_steps(reference_family) == " ".join(REFERENCE_STEPS)

    def test_single_subset_weights(self, reference_family):
        assert subset_weight(reference_family, {1, 2}, "G") == LaurentPoly.term(1, 8)
        expected = LaurentPoly.term(1, 14) * C(1, 1, 0) * C(1, 1) ** 2
        assert subset_weight(reference_family, {1, 2}, "H") == expected

    def test_product_forms_match_subset_totals(self, reference_family):
        fam = reference_family
        assert weight_G(fam) == subset_weight_total(fam, "G")
        assert weight_H(fam) == subset_weight_total(fam, "H")
        assert weight_alt(fam, "G_alt") == subset_weight_total(fam, "G_alt")
        assert weight_alt(fam, "H_alt") == subset_weight_total(fam, "H_alt")

    def test_reference_weights(self, reference_family):
        assert weight_G(reference_family) == 2 * C(1, 3, 3, 1) * LaurentPoly.term(1, 6)
        assert weight_H(reference_family) == C(
            1, 6, 16, 26, 30, 26, 16, 6, 1
        ) * LaurentPoly.term(1, 11)


class TestPanelMultisets:
    def test_g_4_2_panels(self):
        starts, ends = gh_config(4, 2)
        fams = enumerate_nonintersecting(starts, ends)
        got = Counter(weight_G(f) for f in fams)
        expected = Counter(
            [
                C(1, 1, 1, 1),
                C(2, 2, 0),
                C(1, 2, 1),
                C(4, 0),
                C(2, 0, 2),
                C(1, 2, 1, 0),
                C(4, 0, 0),
                C(2, 0, 2, 0),
                C(2, 2),
                C(2, 2),
                C(2, 2),
                C(2, 2, 0),
                C(2, 2, 0),
                C(2, 2, 0),
                C(2, 2, 0, 0),
                C(2, 2, 0, 0),
                C(2, 2, 0, 0),
            ]
        )
        assert got == expected
        total = sum((w * n for w, n in got.items()), ZERO)
        assert total == C(10, 24, 24, 10)
        assert total == salie_G(4, 2)

    def test_h_4_2_panels(self):
        starts, ends = gh_config(4, 2)
        fams = enumerate_nonintersecting(starts, ends)
        got = Counter(weight_H(f) for f in fams)
        one_plus_q = C(1, 1)
        one_plus_q2 = C(1, 0, 1)
        one_plus_q3 = C(1, 0, 0, 1)
        q = Q
        expected = Counter(
            [
                one_plus_q ** 3 * one_plus_q3,
                2 * q ** 2 * one_plus_q ** 2,
                one_plus_q ** 4,
                2 * q * one_plus_q ** 2,
                2 * one_plus_q * one_plus_q3,
                q ** 2 * one_plus_q ** 4,
                2 * q ** 3 * one_plus_q ** 2,
                2 * q ** 2 * one_plus_q * one_plus_q3,
                2 * one_plus_q ** 2,
                2 * one_plus_q2,
                2 * one_plus_q2,
                2 * q ** 2 * one_plus_q ** 2,
                2 * q ** 2 * one_plus_q2,
                2 * q ** 2 * one_plus_q2,
                2 * q ** 4 * one_plus_q ** 2,
                2 * q ** 4 * one_plus_q2,
                2 * q ** 4 * one_plus_q2,
            ]
        )
        assert got == expected
        total = sum((w * n for w, n in got.items()), ZERO)
        assert total == C(10, 15, 30, 26, 30, 15, 10)
        assert total == salie_H(4, 2)


class TestRouteAgreement:
    @pytest.mark.parametrize("family", "PQGH")
    def test_brute_and_det_routes_agree(self, family):
        for m in range(1, 6):
            for k in range(0, m):
                expected = det_route(family, m, k)
                assert brute_route(family, m, k) == expected, (family, m, k)
                assert lgv_det_route(family, m, k) == expected, (family, m, k)

    def test_alt_weight_totals_agree(self):
        for m in range(2, 6):
            for k in range(1, m):
                starts, ends = gh_config(m, k)
                fams = enumerate_nonintersecting(starts, ends)
                for scheme, ref in (("G_alt", salie_G), ("H_alt", salie_H)):
                    total = sum((weight_alt(f, scheme) for f in fams), ZERO)
                    assert total == ref(m, k), (scheme, m, k)

    def test_subset_totals_match_product_forms_everywhere(self):
        for m in range(2, 5):
            for k in range(1, m):
                starts, ends = gh_config(m, k)
                for fam in enumerate_nonintersecting(starts, ends):
                    assert weight_G(fam) == subset_weight_total(fam, "G")
                    assert weight_H(fam) == subset_weight_total(fam, "H")

    def test_p_weight_is_single_power(self):
        starts, ends = pq_config(5, 3)
        for fam in enumerate_nonintersecting(starts, ends):
            w = weight_P(fam)
            assert len(w.coeffs) == 1 and w.coeffs[0] == 1

    def test_q_weight_construction(self):
        # opening vertical steps carry q^2 + q, later even-column ones q^2
        fam = (make_path((0, 0), "NE"),)
        assert weight_Q(fam) == C(1, 1, 0)
        fam = (make_path((0, 0), "EN"),)
        assert weight_Q(fam) == ONE  # vertical step sits in the odd column 1
