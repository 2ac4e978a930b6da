import random

import pytest

from golden_tables import TABLE_SCHUR
from wkintersect.rational import Rat, rat_from_str
from wkintersect import oracle
from wkintersect.hop import HContext
from wkintersect.pengine import (
    DTable,
    bootstrap_all,
    bootstrap_p,
    direct_p,
    r_max,
    trace_shift_invariance,
)
from wkintersect.sympoly import ELEMENTARY, SCHUR, SymPoly, power_sum_times_schur


def provider(n):
    return lambda g: oracle.a_gn_oracle(g, n)


def as_terms(golden):
    return {k: rat_from_str(v) for k, v in golden.items()}


def test_r_bounds():
    assert r_max(3) == 1 and r_max(4) == 3 and r_max(5) == 6 and r_max(6) == 10
    with pytest.raises(ValueError):
        bootstrap_p(2, 3, provider(3))
    with pytest.raises(ValueError):
        bootstrap_p(-1, 4, provider(4))


def test_bootstrap_matches_schur_table_n3_n4(dtable):
    for (r, n), golden in TABLE_SCHUR.items():
        if n > 4:
            continue
        dtable.ensure(r, n, provider(n))
        assert dtable.get(r, n) == as_terms(golden), (r, n)


def test_bootstrap_all_consistent():
    every = bootstrap_all(3, 4, provider(4))
    for r in range(4):
        assert every[r] == bootstrap_p(r, 4, provider(4))


def test_direct_route_n3_and_truncation_stability():
    d3 = direct_p(3)
    want = SymPoly(3, SCHUR, {(): 1, (1, 1, 1): Rat(1, 2)})
    assert d3 == want
    assert direct_p(3, extra_truncation=3) == d3
    assert direct_p(4, extra_truncation=3) == direct_p(4)


def test_direct_route_guard():
    with pytest.raises(ValueError):
        direct_p(2)
    with pytest.raises(ValueError):
        direct_p(6)


def test_genus_independence_overdetermined(dtable):
    # blocks assembled from genus <= r data must also satisfy the defining
    # identity 24^g H(A_{g,n}) = sum_r 12^r/(g-r)! p3^(g-r) P_{r,n} at
    # unused higher genera
    import math

    n = 4
    dtable.ensure_upto(r_max(n), n, provider(n))
    hop = HContext(n)
    for g_extra in (4, 5):
        lhs = hop.apply(oracle.a_gn_oracle(g_extra, n)).scale(Rat(24) ** g_extra)
        rhs = SymPoly.zero(n, SCHUR)
        for r in range(min(g_extra, r_max(n)) + 1):
            term = dtable.p_rn(r, n)
            for _ in range(g_extra - r):
                term = power_sum_times_schur(term, 3)
            rhs = rhs + term.scale(Rat(12 ** r, math.factorial(g_extra - r)))
        assert lhs == rhs, g_extra


def test_divisibility_by_top_elementary(dtable):
    # P_{r,n} - e_1 P_{r,n-1} is a multiple of e_n
    for n in (4, 5):
        dtable.ensure_upto(r_max(n), n, provider(n))
        dtable.ensure_upto(r_max(n - 1), n - 1, provider(n - 1))
        for r in range(r_max(n - 1) + 1):
            big = dtable.p_rn(r, n).change_basis(ELEMENTARY)
            small = dtable.p_rn(r, n - 1).change_basis(ELEMENTARY)
            promoted = {}
            for lam, c in small.terms.items():
                promoted[tuple(sorted(lam + (1,), reverse=True))] = c
            diff = big - SymPoly(n, ELEMENTARY, promoted)
            for lam in diff.terms:
                assert lam and lam[0] == n, (r, n, lam)


def test_elementary_coefficients_stable_in_n(dtable):
    # the coefficient of e_nu e_1^(d-|nu|) in P_{r,n} does not depend on n
    # wherever the index fits at both widths
    for n in (3, 4):
        dtable.ensure_upto(r_max(n), n, provider(n))
        dtable.ensure_upto(r_max(n + 1), n + 1, provider(n + 1))
        for r in range(r_max(n) + 1):
            small = dtable.p_rn(r, n).change_basis(ELEMENTARY)
            big = dtable.p_rn(r, n + 1).change_basis(ELEMENTARY)
            small_c = {}
            for lam, c in small.terms.items():
                small_c[tuple(x for x in lam if x >= 2)] = c
            big_c = {}
            for lam, c in big.terms.items():
                big_c[tuple(x for x in lam if x >= 2)] = c
            for nu, c in small_c.items():
                assert big_c.get(nu) == c, (r, n, nu)


def test_dtable_round_trip(tmp_path, dtable):
    dtable.ensure_upto(1, 3, provider(3))
    dtable.ensure_upto(3, 4, provider(4))
    path = tmp_path / "dtable.txt"
    dtable.save(path)
    data1 = path.read_bytes()
    loaded = DTable.load(path)
    assert loaded.blocks == {k: v for k, v in dtable.blocks.items()}
    loaded.save(path)
    assert path.read_bytes() == data1


def test_dtable_header_validation(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("# dtable v2\n")
    with pytest.raises(ValueError):
        DTable.load(p)


def test_dtable_put_validates():
    t = DTable()
    with pytest.raises(ValueError):
        t.put(5, 3, {})
    with pytest.raises(ValueError):
        t.put(1, 3, {(2,): Rat(1)})  # wrong weight


def test_shift_invariance_trivial_and_random():
    rng = random.Random(17)

    def rand_mat():
        return tuple(tuple(Rat(rng.randint(-5, 5)) for _ in range(2)) for _ in range(2))

    for n in (3, 4):
        mats = [rand_mat() for _ in range(n)]
        xs = rng.sample(range(1, 30), n)
        assert trace_shift_invariance(mats, xs, [0] * n)
        shifts = [Rat(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
        assert trace_shift_invariance(mats, xs, shifts)
    assert trace_shift_invariance(
        [rand_mat() for _ in range(3)], (1, 2, 3), (1, 0, 0)
    )


def test_shift_invariance_validation():
    m = ((Rat(1), Rat(0)), (Rat(0), Rat(1)))
    with pytest.raises(ValueError):
        trace_shift_invariance([m, m], (1, 2), (0, 0))
    with pytest.raises(ValueError):
        trace_shift_invariance([m, m, m], (1, 1, 2), (0, 0, 0))
