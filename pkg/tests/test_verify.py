import pytest

from translate_kiss import (
    ParameterError,
    Vec2,
    build_disk,
    rightward_runs,
    verify_construction,
    verify_touching_heights,
)


def find_verdict(cert, i, j):
    return next(v for v in cert.pair_verdicts if (v.i, v.j) == (i, j))


def has_segment(verdict, a, b):
    """True if some contact segment of the verdict covers segment a-b."""
    for c in verdict.contacts:
        if c.kind == "horizontal-segment" and a[1] == b[1] == c.a[1]:
            if c.a[0] <= a[0] and b[0] <= c.b[0]:
                return True
        if c.kind == "vertical-segment" and a[0] == b[0] == c.a[0]:
            if c.a[1] <= a[1] and b[1] <= c.b[1]:
                return True
    return False


class TestVerifyConstruction:
    def test_certificate_4_3(self):
        cert = verify_construction(4, 3)
        assert cert.ok
        assert cert.touching_count == 3
        assert cert.offsets == (Vec2(0, -4), Vec2(0, 0), Vec2(17, 6), Vec2(26, 8))
        assert len(cert.pair_verdicts) == 6
        assert has_segment(find_verdict(cert, 0, 1), (15, 4), (16, 4))
        assert has_segment(find_verdict(cert, 0, 2), (23, 7), (24, 7))

    def test_all_pairs_disjoint_4_3(self):
        cert = verify_construction(4, 3)
        assert all(v.interiors_disjoint for v in cert.pair_verdicts)
        for i in range(1, 4):
            assert find_verdict(cert, 0, i).segment_length_total >= 1

    def test_5_5(self):
        assert verify_construction(5, 5).ok

    def test_square_parameters(self):
        for n in range(2, 7):
            assert verify_construction(n, n).ok

    def test_pair_order_fixed(self):
        cert = verify_construction(4, 3)
        assert [(v.i, v.j) for v in cert.pair_verdicts] == [
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)
        ]

    def test_deterministic(self):
        assert verify_construction(5, 4) == verify_construction(5, 4)

    def test_parameter_errors(self):
        with pytest.raises(ParameterError):
            verify_construction(4, 1)
        with pytest.raises(ParameterError):
            verify_construction(2, 3)


class TestRightwardRuns:
    def test_runs_of_4_3(self):
        runs = rightward_runs(build_disk(4, 3))
        tallest = max(runs, key=lambda r: r.height)
        # middle bar and connector edges join into one run of height 4
        assert (tallest.x, tallest.y0, tallest.y1) == (16, 4, 8)
        assert sum(1 for r in runs if r.height == tallest.height) == 1

    def test_last_bar_run_is_short(self):
        runs = rightward_runs(build_disk(3, 2))
        last = max(runs, key=lambda r: r.x)
        assert last.height == 1


class TestTouchingHeights:
    def test_report_4_3_i1(self):
        rep = verify_touching_heights(4, 3, 1)
        assert rep.offset == Vec2(0, 4)
        assert rep.offset_ok
        assert rep.tallest_run.height == 4
        assert rep.tallest_run.x == 16
        assert rep.tallest_is_unique
        assert rep.has_segment_contact
        assert rep.ok

    def test_report_4_3_i2(self):
        rep = verify_touching_heights(4, 3, 2)
        assert rep.offset == Vec2(1, 3)
        assert any(
            c.kind == "horizontal-segment" and c.a == (23, 7) and c.b[0] >= 24
            for c in rep.contacts
        )
        assert rep.ok

    def test_offset_formula(self):
        for m, n in [(3, 3), (5, 5), (6, 4)]:
            for i in range(1, n + 1):
                rep = verify_touching_heights(m, n, i)
                assert rep.offset == Vec2(i - 1, n + 2 - i)
                assert rep.tallest_run.height == n + 2 - i
                assert rep.ok

    def test_invalid_index(self):
        with pytest.raises(ParameterError):
            verify_touching_heights(4, 3, 0)
        with pytest.raises(ParameterError):
            verify_touching_heights(4, 3, 4)


class TestTranslationInvariance:
    def test_verdicts_shift_with_scene(self):
        # re-deriving the certificate from shifted geometry changes only
        # the reported coordinates, never the verdicts
        from translate_kiss import contact_components, place_translates, union_interiors_disjoint

        m, n = 4, 3
        shape = build_disk(m, n)
        scene = place_translates(m, n)
        v = Vec2(-9, 13)
        placed = [[r.translate(t) for r in shape.rects()] for t in scene.offsets]
        shifted = [[r.translate(v) for r in group] for group in placed]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                assert union_interiors_disjoint(placed[i], placed[j]) == \
                    union_interiors_disjoint(shifted[i], shifted[j])
                base = contact_components(placed[i], placed[j])
                moved = contact_components(shifted[i], shifted[j])
                assert [(c.kind, c.length) for c in base] == [
                    (c.kind, c.length) for c in moved
                ]
