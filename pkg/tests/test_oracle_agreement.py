"""The engine against the brute-force module in oracle.py."""

import pytest

import oracle
from moravacoh.arithmetic import make_context
from moravacoh.linalg import class_dimensions

SMALL = [(3, 1), (5, 2), (7, 2), (5, 3)]


@pytest.mark.parametrize("p,n", SMALL)
def test_every_slice_agrees(p, n):
    ctx = make_context(p, n)
    N = n * n
    for t in range(ctx.en):
        dims = class_dimensions(ctx, t, range(N + 1))
        assert [dims[s] for s in range(N + 1)] == [oracle.cohomology_dim(p, n, s, t) for s in range(N + 1)]


def test_total_5_3():
    ctx = make_context(5, 3)
    total = sum(sum(class_dimensions(ctx, t, range(10)).values()) for t in range(ctx.en))
    # total rank of H*(S(3)) at p = 5, as tabulated in the literature
    assert total == 152


@pytest.mark.parametrize("s,t", [(13, 1), (12, 0), (3, 399), (4, 0), (14, 57), (2, 8)])
def test_sampled_7_4(s, t):
    ctx = make_context(7, 4)
    assert class_dimensions(ctx, t, [s])[s] == oracle.cohomology_dim(7, 4, s, t)
