import itertools

import pytest
from hypothesis import given, strategies as st

from moravacoh.arithmetic import (
    InternalDegree,
    ext_reduction,
    greek_degree,
    lambda_set,
    lemma_int_negate,
    make_context,
    moore_dual_shift,
    signed_residue,
)

SUPPORTED = [(3, 1), (5, 2), (5, 3), (7, 2), (7, 3), (7, 4), (11, 4), (13, 5), (11, 3)]


def test_context_7_4():
    ctx = make_context(7, 4)
    assert ctx.q == 12
    assert ctx.e == (0, 1, 8, 57, 400)
    assert ctx.period == 4800
    assert ctx.pn_ok
    # 16 > 2*7 - 1, so the collapse condition itself fails here
    assert not ctx.cond_ok
    assert ctx.collapse_ok


def test_context_5_3():
    ctx = make_context(5, 3)
    assert (ctx.q, ctx.e, ctx.period) == (8, (0, 1, 6, 31), 248)
    assert ctx.cond_ok and not ctx.pn_ok


def test_context_3_2_excluded():
    assert not make_context(3, 2).cond_ok


@pytest.mark.parametrize("p,n", [(4, 1), (9, 2), (2, 1), (5, 5), (5, 7), (5, 0)])
def test_context_rejects(p, n):
    with pytest.raises(ValueError):
        make_context(p, n)


@pytest.mark.parametrize("p,n", SUPPORTED)
def test_context_invariants(p, n):
    ctx = make_context(p, n)
    assert ctx.e[0] == 0 and ctx.e[1] == 1
    assert all(ctx.e[i + 1] == p * ctx.e[i] + 1 for i in range(n))
    assert ctx.period == ctx.q * ctx.en == 2 * (p**n - 1)
    assert ctx.cond_ok == (n * n <= 2 * p - 1 and n <= p - 2)


def test_internal_degree_forms():
    ctx = make_context(7, 4)
    d = InternalDegree.from_reduced(ctx, -57)
    assert (d.reduced, d.reduced_signed) == (343, -57)
    assert d.raw == 343 * 12
    assert InternalDegree.from_raw(ctx, -12).reduced == 399
    assert InternalDegree.from_raw(ctx, 5).reduced is None
    assert signed_residue(200, 400) == 200 and signed_residue(201, 400) == -199


def test_lemma_int_examples():
    ctx = make_context(7, 4)
    assert lemma_int_negate(ctx, (0, 0, 0, 0))[:2] == (0, 0)
    assert lemma_int_negate(ctx, (0, 1, 0, 0))[:2] == (1, 399)
    r = lemma_int_negate(ctx, (0, 1, 1, 0))
    assert r.a == 9
    assert r.digits[:3] == (2, 1, 0)


@pytest.mark.parametrize("p,n", [(5, 3), (7, 4), (11, 4), (13, 5), (13, 4), (11, 3)])
def test_lemma_int_all_vectors(p, n):
    ctx = make_context(p, n)
    en = ctx.en
    for eps in itertools.product((0, 1), repeat=n):
        r = lemma_int_negate(ctx, eps)
        assert (r.a + r.neg_a) % en == 0
        d = r.digits
        assert d[n - 1] == 0 and d[0] == sum(eps[1:])
        assert all(d[i - 1] - d[i] in (0, 1) for i in range(1, n))
        assert sum(x * p**i for i, x in enumerate(d[: n - 1])) == r.a
        assert (sum((p - x) * p**i for i, x in enumerate(d[: n - 1])) + 1) % en == r.neg_a


def test_lemma_int_bad_length():
    with pytest.raises(ValueError):
        lemma_int_negate(make_context(5, 3), (0, 1))


def test_lambda_set_5_3():
    assert [el.u for el in lambda_set(make_context(5, 3), [1, 1, 1])] == [0, 1, 9, 10, 49, 50, 58, 59]


def test_lambda_set_empty():
    els = lambda_set(make_context(5, 3), [])
    assert [(el.u, el.s_of_u) for el in els] == [(0, 0)]


def test_lambda_set_7_4_top():
    els = {el.u: el for el in lambda_set(make_context(7, 4), [1, 1, 1, 1])}
    top = els[1 + 13 + 97 + 685]
    assert (top.s_of_u, top.u_bar) == (4, 792)


def test_lambda_set_too_long():
    with pytest.raises(ValueError):
        lambda_set(make_context(5, 3), [1, 1, 1, 1])


@given(st.sampled_from(SUPPORTED), st.data())
def test_lambda_set_distinct(pn, data):
    ctx = make_context(*pn)
    k = data.draw(st.integers(0, ctx.n))
    exps = data.draw(st.lists(st.integers(1, 4), min_size=k, max_size=k))
    els = lambda_set(ctx, exps)
    assert len(els) == 2**k == len({el.u for el in els})
    assert all(el.u_bar == el.u - el.s_of_u for el in els)


def test_greek_degrees():
    g = greek_degree(make_context(5, 3), 1)
    assert (g.t, g.stem, g.n) == (192, 189, 3)
    assert greek_degree(make_context(7, 4), 1).stem == 4004
    g = greek_degree(make_context(2, 1, allow_even=True), 1)
    assert (g.t, g.stem) == (2, 1)
    with pytest.raises(ValueError):
        greek_degree(make_context(5, 3), 0)


@given(st.sampled_from(SUPPORTED), st.integers(-50, 50).filter(bool), st.integers(-50, 50).filter(bool))
def test_greek_periodicity(pn, s1, s2):
    ctx = make_context(*pn)
    t1, t2 = greek_degree(ctx, s1).t, greek_degree(ctx, s2).t
    assert t2 - t1 == 2 * (s2 - s1) * (ctx.p**ctx.n - 1)
    assert t1 % ctx.period == t2 % ctx.period


def test_moore_dual_shift():
    assert moore_dual_shift(make_context(5, 3), [1, 1, 1]) == 59
    assert moore_dual_shift(make_context(7, 4), [1, 1, 1, 1]) == 796
    assert moore_dual_shift(make_context(5, 3), [1, 2, 1]) == 67
    with pytest.raises(ValueError):
        moore_dual_shift(make_context(5, 3), [1, 1])


def _lam(ctx, u):
    return next(el for el in lambda_set(ctx, [1] * ctx.n) if el.u == u)


def test_ext_reduction_examples():
    ctx = make_context(5, 3)
    r = ext_reduction(ctx, _lam(ctx, 0), 1)
    assert (r.a, r.b, r.m, r.target_s) == (0, 0, 8, 9)
    r = ext_reduction(ctx, _lam(ctx, 49), 2)
    assert (r.a, r.b, r.m, r.a_0, r.eps_0, r.target_s) == (6, 1, 7, 1, 0, 9)
    ctx = make_context(7, 4)
    r = ext_reduction(ctx, _lam(ctx, 1), 1)
    assert (r.a, r.b, r.m, r.a_0, r.eps_0, r.target_s) == (0, 1, 11, 0, 1, 12)


@pytest.mark.parametrize("p,n", [(5, 3), (7, 4), (11, 4), (13, 5)])
def test_ext_reduction_identities(p, n):
    ctx = make_context(p, n)
    for el in lambda_set(ctx, [1] * n):
        for e in (1, 2):
            r = ext_reduction(ctx, el, e)
            assert r.m + el.u == (r.a + 1) * ctx.q
            assert r.b - r.a_0 == el.eps[0]
