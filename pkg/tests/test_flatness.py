from __future__ import annotations

from hypothesis import given

from monozeta.flatness import non_flat_threshold
from monozeta.semigroup import derive_structure

from .conftest import semigroups


def test_reference_curve_threshold():
    rep = non_flat_threshold(derive_structure((4, 6, 13)))
    assert (rep.g, rep.verdict, rep.m0) == (2, "not_flat_from", 36)
    assert rep.to_dict() == {"g": 2, "verdict": "not_flat_from", "m0": 36}
    assert "m >= 36" in str(rep)


def test_three_pairs_never_flat():
    rep = non_flat_threshold(derive_structure((8, 12, 26, 53)))
    assert rep.verdict == "not_flat_for_all_m" and rep.m0 is None


def test_plane_curve_is_flat():
    rep = non_flat_threshold(derive_structure((2, 3)))
    assert rep.verdict == "hypersurface_flat"
    assert "m0" not in rep.to_dict()


@given(semigroups())
def test_verdict_by_genus(S):
    rep = non_flat_threshold(S)
    expected = {1: "hypersurface_flat", 2: "not_flat_from"}.get(S.g, "not_flat_for_all_m")
    assert rep.verdict == expected
    if S.g == 2:
        # n_0 n_1 - n_0 - n_1 > 0 because n_0 > n_1 >= 2
        n0, n1, n2 = S.n0, S.n_(1), S.n_(2)
        assert (n2 - 1) * (n0 * n1 - n0 - n1) > 0
        assert rep.m0 >= 1
        assert (rep.m0 - 1) * (n2 - 1) * (n0 * n1 - n0 - n1) < 3 * n0 * n1 * n2 <= rep.m0 * (n2 - 1) * (n0 * n1 - n0 - n1)
