from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monozeta import ff
from monozeta.errors import BadCharacteristic, BudgetExceeded
from monozeta.ff import _kernel_py, build_jet_system, count_jets, count_naive, count_report, evaluate, verify_class
from monozeta.jets import fiber_class, jet_class
from monozeta.semigroup import derive_structure, random_plane_semigroup

A = derive_structure((4, 6, 13))
B = derive_structure((8, 12, 26, 53))
CUSP = derive_structure((2, 3))


def test_evaluate_cusp():
    system = build_jet_system(CUSP, 1, 5)
    # x_0 = 1 + t, x_1 = 1: f = x_1^2 - x_0^3 = -3t + O(t^2)
    assert evaluate(system, [[1, 1], [1, 0]]) == [[0, 2]]
    assert evaluate(system, [[4, 0], [3, 0]]) == [[0, 0]]  # 9 = 64 mod 5


@pytest.mark.parametrize("q", [2, 3, 4, 9, 1, 65537])
def test_bad_characteristic(q):
    with pytest.raises(BadCharacteristic):
        build_jet_system(A, 2, q)
    with pytest.raises(BadCharacteristic):
        count_jets(A, 2, q)


def test_cusp_characteristic_three_rejected():
    with pytest.raises(BadCharacteristic):
        count_jets(CUSP, 1, 3)


@pytest.mark.parametrize(
    "S, m, q, local",
    [(CUSP, 2, 5, False), (CUSP, 3, 5, True), (CUSP, 1, 7, False), (A, 1, 5, False), (A, 2, 5, True), (A, 0, 7, False)],
    ids=str,
)
def test_pruned_search_matches_naive(S, m, q, local):
    assert count_jets(S, m, q, local) == count_naive(S, m, q, local)


def test_naive_refuses_large_products():
    with pytest.raises(BudgetExceeded):
        count_naive(A, 5, 7)


@pytest.mark.parametrize("m", range(0, 7))
@pytest.mark.parametrize("q", [5, 7, 11])
def test_cusp_counts(m, q):
    assert verify_class(CUSP, m, q)
    assert verify_class(CUSP, m, q, local=True)


@pytest.mark.parametrize("m", range(0, 4))
@pytest.mark.parametrize("q", [5, 7])
@pytest.mark.parametrize("local", [False, True])
def test_reference_curve_counts(m, q, local):
    r = count_report(A, m, q, local)
    assert r.match, r.to_dict()
    assert not r.finding_only


@pytest.mark.slow
@pytest.mark.parametrize("m", range(4, 8))
def test_reference_curve_counts_higher(m):
    assert verify_class(A, m, 5, local=True)
    assert verify_class(A, m, 7, local=True)


def test_second_reference_curve_counts():
    for m in range(0, 6):
        assert verify_class(B, m, 5, local=True)


def test_thread_count_does_not_change_result():
    assert count_jets(A, 5, 7, threads=1) == count_jets(A, 5, 7, threads=4)


def test_kernels_agree():
    g, m, q = A.g, 5, 7
    h = m // 2 + 1
    nexp, b = [0, *A.n], [[]] + [list(r) for r in A.b]
    for prefix in ([0, 0], [0, 3], [2, 5]):
        args = (g, m, q, h, False, nexp, b, prefix, 10**9)
        assert _kernel_py.count_task(*args) == ff.count_task(*args)


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_jets(A, 10, 7, local=True, budget=10**7)
    with pytest.raises(BudgetExceeded):
        count_jets(A, 4, 7, budget=10)


@pytest.mark.slow
def test_default_budget_rejects_large_search():
    with pytest.raises(BudgetExceeded):
        count_jets(A, 10, 7, local=True)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("MONOZETA_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        count_jets(A, 4, 7)


def test_finding_only_flag():
    # q = 13 divides the generator 13 but no n_i: the count runs, a mismatch would be a finding
    r = count_report(A, 2, 13, local=True)
    assert r.finding_only and r.match
    assert "note" in r.to_dict()


@settings(max_examples=15)
@given(st.integers(1, 3), st.integers(0, 10**6), st.integers(0, 3), st.sampled_from([5, 7]))
def test_random_counts(g, seed, m, q):
    S = derive_structure(random_plane_semigroup(g, 40 * g, seed))
    if any(n % q == 0 for n in S.n_all):
        return
    local = count_jets(S, m, q, local=True)
    assert local == fiber_class(S, m).eval(q)
    if m <= 2:
        assert count_jets(S, m, q) == jet_class(S, m).eval(q)
