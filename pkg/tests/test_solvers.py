from itertools import product

import pytest

from expdioph.arith import valuation_pow_minus_one
from expdioph.equation import CaseId, ExponentTuple, classify, holds
from expdioph.solvers import (
    Prop6Solution,
    Prop9Solution,
    SearchError,
    check_prop6,
    check_prop9,
    geometric_cofactor,
    max_minimal_n,
    power_bound_holds,
    scan_conjecture,
    search_case,
    search_master,
    solve_prop6,
    solve_prop9,
    verify_growth_base_case,
)

from conftest import naive_v


@pytest.mark.parametrize("args, ok", [((1, 1, 2), True), ((2, 3, 6), True), ((1, 2, 3), False)])
def test_check_prop6(args, ok):
    assert check_prop6(*args) is ok


@pytest.mark.parametrize(
    "bounds, expected",
    [
        ((10, 60, 60), [(1, 1, 2), (2, 3, 6)]),
        ((1, 1, 1), []),
        ((2, 3, 6), [(1, 1, 2), (2, 3, 6)]),
    ],
)
def test_solve_prop6(bounds, expected):
    assert solve_prop6(*bounds, check_pruned=True) == [Prop6Solution(*s) for s in expected]


def test_solve_prop6_matches_unpruned_scan():
    brute = [
        Prop6Solution(k, m, n)
        for k, m, n in product(range(1, 21), repeat=3)
        if 3**k * (2**m - 1) == 2**n - 1
    ]
    assert solve_prop6(20, 20, 20, check_pruned=True) == brute


@pytest.mark.parametrize("args, ok", [((2, 3, 6, 1), True), ((1, 1, 2, 5), True), ((1, 2, 2, 1), False)])
def test_check_prop9(args, ok):
    assert check_prop9(*args) is ok


def test_prop9_worked_value():
    assert 11 * 9 == 99 == 10**2 - 1


@pytest.mark.parametrize(
    "bounds, expected",
    [
        ((8, 40, 40, 12), [(1, 1, 2, n) for n in range(1, 13)] + [(2, 3, 6, 1)]),
        ((1, 1, 2, 3), [(1, 1, 2, 1), (1, 1, 2, 2), (1, 1, 2, 3)]),
        ((8, 40, 5, 1), [(1, 1, 2, 1)]),
    ],
)
def test_solve_prop9(bounds, expected):
    assert solve_prop9(*bounds, check_pruned=True) == sorted(Prop9Solution(*s) for s in expected)


def test_solve_prop9_matches_unpruned_scan():
    brute = sorted(
        Prop9Solution(k, p, q, n)
        for k, p, q in product(range(1, 13), repeat=3)
        for n in range(1, 7)
        if (2 * n + 1) ** k * ((2 * n) ** p - 1) == (2 * n) ** q - 1
    )
    assert solve_prop9(12, 12, 12, 6, check_pruned=True) == brute


@pytest.mark.parametrize("m, l, expected", [(3, 2, 9), (7, 1, 1), (1, 2, 3)])
def test_geometric_cofactor(m, l, expected):
    assert geometric_cofactor(m, l) == expected


def test_geometric_cofactor_identity():
    for m in range(1, 41):
        for l in range(1, 41):
            assert geometric_cofactor(m, l) * (2**m - 1) == 2 ** (l * m) - 1


def test_cofactor_is_power_of_three_for_solutions():
    for s in solve_prop6(10, 60, 60):
        assert geometric_cofactor(s.m, s.n // s.m) == 3**s.k


@pytest.mark.parametrize("x_max", [3, 9, 15])
def test_growth_base_case(x_max):
    assert verify_growth_base_case(x_max)


def test_growth_base_case_at_three():
    assert 3**6 == 729 < 2**18 - 1


def _brute_case(case_id, bound):
    """Independent enumeration: all solving bindings, greatest per symmetry class."""
    classes = {}
    for binding in product(range(bound + 1), repeat=4):
        t = case_id.instantiate(binding)
        lhs = 2**t.a * 3**t.b + 2**t.c * 3**t.d
        rhs = 2**t.e * 3**t.f + 2**t.g * 3**t.h
        if lhs != rhs:
            continue
        sides = sorted([tuple(sorted([t[0:2], t[2:4]])), tuple(sorted([t[4:6], t[6:8]]))])
        key = tuple(sides)
        classes[key] = max(classes.get(key, binding), binding)
    return sorted(classes.values())


def test_search_1plus1():
    assert [i.binding for i in search_case(CaseId.CASE_1PLUS1, 6)] == [(0, 0, 0, 0)]


def test_search_identity_grid():
    got = [i.binding for i in search_case(CaseId.CASE_IDENTITY, 2)]
    assert got == [(s, t, s, t) for s in range(3) for t in range(3)]


def test_search_3b3d():
    got = [i.binding for i in search_case(CaseId.CASE_3B_3D, 3)]
    assert got == [(0, 0, 0, 0), (1, 0, 1, 1), (1, 1, 2, 1), (2, 0, 3, 1), (2, 1, 3, 2)]
    assert got == _brute_case(CaseId.CASE_3B_3D, 3)


@pytest.mark.parametrize("case_id", list(CaseId))
def test_search_case_matches_brute_force(case_id):
    assert [i.binding for i in search_case(case_id, 5)] == _brute_case(case_id, 5)


def test_search_case_parallel_is_identical():
    for case_id in CaseId:
        assert search_case(case_id, 5, workers=3) == search_case(case_id, 5)


def _brute_master(bound):
    out = set()
    for t in product(range(bound + 1), repeat=8):
        t = ExponentTuple(*t)
        if not holds(t):
            continue
        m2 = min(t.a, t.c, t.e, t.g)
        m3 = min(t.b, t.d, t.f, t.h)
        n = [x - (m3 if i % 2 else m2) for i, x in enumerate(t)]
        sides = sorted([tuple(sorted([tuple(n[0:2]), tuple(n[2:4])])), tuple(sorted([tuple(n[4:6]), tuple(n[6:8])]))])
        out.add(ExponentTuple(*sides[0][0], *sides[0][1], *sides[1][0], *sides[1][1]))
    return sorted(out)


@pytest.mark.parametrize("bound", [0, 1, 2])
def test_search_master_matches_brute_force(bound):
    got = search_master(bound)
    assert [s.exponents for s in got] == _brute_master(bound)


def test_search_master_bound_zero():
    (only,) = search_master(0)
    assert only.exponents == ExponentTuple(*[0] * 8)
    assert only.case.case_id is CaseId.CASE_1PLUS1


def test_search_master_contains_mixed_example():
    sols = {s.exponents: s.case for s in search_master(3)}
    key = ExponentTuple(0, 0, 1, 1, 0, 1, 2, 0)
    assert sols[key].case_id is CaseId.CASE_3B_2C_MIXED


def test_search_master_projects_into_case_searches():
    bound = 4
    per_case = {c: set(search_case(c, bound)) for c in CaseId}
    for s in search_master(bound):
        assert holds(s.exponents)
        assert s.case == classify(s.exponents)
        assert s.case in per_case[s.case.case_id]


def test_search_master_parallel_is_identical():
    assert search_master(4, workers=3) == search_master(4)


def test_search_rejects_negative_bound():
    with pytest.raises(SearchError):
        search_case(CaseId.CASE_1PLUS1, -1)
    with pytest.raises(SearchError):
        search_master(-1)


def _exact_scan(m, n_max):
    return [n for n in range(1, n_max + 1) if m ** (2 * naive_v(m, (m - 1) ** n - 1)) > (m - 1) ** n - 1]


def test_scan_m4():
    (r,) = scan_conjecture(4, 4, 100)
    assert r.violations == [2, 4] and r.minimal_N == 5
    (r,) = scan_conjecture(4, 4, 1)
    assert r.violations == [] and r.minimal_N == 1


def test_scan_m6_against_exact():
    (r,) = scan_conjecture(6, 6, 100)
    assert r.violations == _exact_scan(6, 100) == [2]
    assert r.minimal_N == 3


def test_scan_reports_violation_at_end():
    (r,) = scan_conjecture(4, 4, 4)
    assert r.violations == [2, 4] and r.minimal_N is None
    assert max_minimal_n([r]) is None


def test_fast_valuation_agrees_for_scan_range():
    for m in range(4, 21):
        for n in range(1, 301):
            assert valuation_pow_minus_one(m, m - 1, n).exponent == naive_v(m, (m - 1) ** n - 1)


def test_power_bound_short_circuit_agrees_with_exact():
    for m in (4, 6, 20):
        for n in (2000, 5000, 9000):
            for v in (0, 1, 5, n // 2, n):
                assert power_bound_holds(m, n, v) == (m ** (2 * v) <= (m - 1) ** n - 1)


@pytest.mark.parametrize("bad", [(5, 8), (4, 9), (2, 4), (8, 4)])
def test_scan_rejects_bad_bases(bad):
    with pytest.raises(SearchError):
        scan_conjecture(*bad, 10)


def test_scan_parallel_is_identical():
    assert scan_conjecture(4, 12, 500, workers=3) == scan_conjecture(4, 12, 500)
