from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from monozeta.errors import DomainError
from monozeta.invariants import (
    c_ik,
    c_main,
    candidate_poles,
    codim_B,
    interval,
    interval_length,
    is_D_empty,
    j_of_k,
    lct,
    residues,
    side_period,
    structural_pairs,
    window_index,
)
from monozeta.semigroup import derive_structure

from .conftest import semigroups

A = derive_structure((4, 6, 13))
B = derive_structure((8, 12, 26, 53))
CUSP = derive_structure((2, 3))


def _pairs(S):
    return [(p.N, p.nu) for p in structural_pairs(S)]


def test_structural_pairs_reference():
    assert _pairs(A) == [(6, 8), (26, 37)]
    assert _pairs(B) == [(6, 11), (26, 50), (106, 235)]
    assert _pairs(CUSP) == [(6, 5)]


def test_lct_reference():
    assert lct(A) == Fraction(4, 3)
    assert lct(B) == Fraction(11, 6)
    assert lct(CUSP) == Fraction(5, 6)


def test_c_ik_values():
    assert c_ik(A, 1, 1, 6) == 10
    assert c_ik(A, 1, 1, 12) == 19
    with pytest.raises(DomainError):
        c_ik(A, 1, 1, 13)  # window [6, 13) is half-open
    with pytest.raises(DomainError):
        c_ik(A, 2, 1, 13)  # i must stay below j(1) = 2
    with pytest.raises(DomainError):
        c_ik(A, 1, 0, 6)


def test_codim_B_values():
    assert [codim_B(A, m) for m in (1, 5, 6, 12)] == [3, 8, 10, 18]
    with pytest.raises(DomainError):
        codim_B(A, 0)


def test_j_of_k():
    assert j_of_k(A, 1) == 2
    assert j_of_k(A, 2) == 3  # n_2 = 2 divides 2, so the branch never stops
    assert j_of_k(B, 2) == 3 and j_of_k(B, 4) == 4 and j_of_k(B, 3) == 2
    assert all(j_of_k(CUSP, k) == 2 for k in range(1, 10))


def test_emptiness_and_windows():
    assert is_D_empty(A, 13, 1)
    assert not is_D_empty(A, 12, 1)
    assert not is_D_empty(A, 13, 2)
    assert window_index(A, 2, 13) == 1 and window_index(A, 2, 26) == 2
    assert window_index(A, 1, 5) is None
    with pytest.raises(DomainError):
        is_D_empty(A, 5, 1)


def test_intervals():
    assert interval(B, 1, 1, 1) == (6, 13)
    assert interval(B, 1, 2, 2) == (19, 26)
    assert interval(B, 2, 2, 1) == (26, 53)
    assert interval_length(A, 1) == 7
    with pytest.raises(DomainError):
        interval(B, 2, 3, 1)  # k must be a multiple of n_2
    with pytest.raises(DomainError):
        interval(B, 3, 4, 1)
    with pytest.raises(DomainError):
        interval(A, 1, 1, 2)


def test_side_periods():
    assert [side_period(A, i) for i in (1, 2)] == [1, 1]
    assert side_period(CUSP, 1) == 1


def test_residue_table_reference():
    assert residues(A) == {Fraction(-2): Fraction(-2, 15), Fraction(-37, 26): Fraction(-259, 195), Fraction(-4, 3): Fraction(8, 3)}
    assert residues(B) == {
        Fraction(-3): Fraction(-3, 83),
        Fraction(-235, 106): Fraction(-1598, 13197),
        Fraction(-25, 13): Fraction(-70, 39),
        Fraction(-11, 6): Fraction(11, 3),
    }
    assert residues(CUSP) == {Fraction(-1): Fraction(-1), Fraction(-5, 6): Fraction(5, 3)}


def test_candidate_poles_keep_unreduced_pairs():
    c = candidate_poles(A)
    assert [(x.value, x.nu, x.N) for x in c] == [(-2, 2, 1), (Fraction(-37, 26), 37, 26), (Fraction(-4, 3), 8, 6)]


@given(semigroups())
def test_lct_equals_first_ratio(S):
    assert lct(S) == structural_pairs(S)[0].ratio


@given(semigroups())
def test_pole_candidates_distinct_and_ordered(S):
    ratios = [p.ratio for p in structural_pairs(S)]
    assert ratios == sorted(set(ratios))
    assert ratios[-1] < S.g


@given(semigroups())
def test_codim_B_bounds(S):
    n0n1 = S.n0 * S.n_(1)
    for m in range(1, 3 * n0n1 + 2):
        assert codim_B(S, m) <= S.g * (m + 1)
        if m % n0n1 == 0:
            assert codim_B(S, m) == min(c_main(S, m), c_ik(S, 1, m // n0n1, m))
        else:
            assert codim_B(S, m) == c_main(S, m)


@given(semigroups())
def test_intervals_tile_windows(S):
    # I_{i,k}^(p), p = 1..k/(n_2..n_i), tile [k n_i b_i/e_1, k n_{i+1} b_{i+1}/e_1)
    for i in range(1, S.g):
        step = 1
        for l in range(2, i + 1):
            step *= S.n_(l)
        for k in (step, 2 * step, 3 * step):
            ivs = [interval(S, i, k, p) for p in range(1, k // step + 1)]
            assert ivs[0][0] * S.e[1] == k * S.n_(i) * S.gens[i]
            assert ivs[-1][1] * S.e[1] == k * S.n_(i + 1) * S.gens[i + 1]
            assert all(a[1] == b[0] for a, b in zip(ivs, ivs[1:]))
