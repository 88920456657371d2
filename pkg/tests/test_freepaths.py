from fractions import Fraction

import pytest

from hhdeform.algebra import AlgebraElement, a, abar, algebra, e, z
from hhdeform.freepaths import (
    FreeElement,
    FreePath,
    _reduce_path,
    arrow_path,
    bar_path,
    free_multiply,
    g_generators,
    reduce_to_algebra,
    trivial_path,
    verify_g_recursions,
)

F = Fraction


def elt(path):
    return FreeElement.of(path)


def test_trivial_path_is_left_unit():
    m = 3
    assert free_multiply(elt(trivial_path(0)), elt(arrow_path(0, m)), m) == elt(
        arrow_path(0, m)
    )


def test_free_algebra_has_no_relations():
    m = 3
    prod = free_multiply(elt(arrow_path(0, m)), elt(arrow_path(1, m)), m)
    assert prod == elt(FreePath(0, (("a", 0), ("a", 1))))


def test_endpoint_mismatch_gives_zero():
    m = 4
    assert free_multiply(elt(arrow_path(0, m)), elt(arrow_path(2, m)), m).is_zero()


def all_paths(m, length):
    """Every composable path of the given length, at every origin."""
    paths = [trivial_path(i) for i in range(m)]
    for _ in range(length):
        new = []
        for p in paths:
            t = p.terminus(m)
            new.append(FreePath(p.origin, p.steps + (("a", t),)))
            new.append(FreePath(p.origin, p.steps + (("abar", (t - 1) % m),)))
        paths = new
    return paths


def test_g_degree_0_and_1():
    alg = algebra(3, (2, 3, 5))
    g0 = g_generators(0, alg)
    for i in range(3):
        assert g0[(0, i)] == elt(trivial_path(i))
    g1 = g_generators(1, alg)
    for i in range(3):
        assert g1[(0, i)] == elt(arrow_path(i, 3))
        assert g1[(1, i)] == elt(bar_path(i - 1, 3)).scale(-1)


def test_g_degree_2_middle():
    alg = algebra(3, (2, 3, 5))
    g2 = g_generators(2, alg)
    for i in range(3):
        want = free_multiply(
            elt(arrow_path(i, 3)), elt(bar_path(i, 3)), 3
        ).scale(alg.q[i]) - free_multiply(
            elt(bar_path(i - 1, 3)), elt(arrow_path(i - 1, 3)), 3
        )
        assert g2[(1, i)] == want


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_g_uniform_and_homogeneous(m):
    alg = algebra(m, (2,) + (1,) * (m - 1))
    for n in range(6):
        table = g_generators(n, alg)
        for (r, i), g in table.items():
            assert not g.is_zero()
            for path in g.coeffs:
                assert len(path) == n
                assert path.origin == i
                assert path.terminus(m) == (i + n - 2 * r) % m
                assert path.is_composable(m)


@pytest.mark.parametrize("m,q", [(1, (2,)), (2, (3, 1)), (3, (2, 3, 5)), (3, (2, 1, 1))])
def test_recursion_identity_small_degrees(m, q):
    alg = algebra(m, q)
    for n in (1, 2):
        assert verify_g_recursions(n, alg)


def test_reduce_relation_path():
    alg = algebra(3, (2, 3, 5))
    x = free_multiply(elt(bar_path(0, 3)), elt(arrow_path(0, 3)), 3)
    assert reduce_to_algebra(x, alg) == AlgebraElement.of(z(1), 3)


def test_reduce_zero_paths():
    alg = algebra(3, (2, 3, 5))
    aa = free_multiply(elt(arrow_path(0, 3)), elt(arrow_path(1, 3)), 3)
    assert reduce_to_algebra(aa, alg).is_zero()
    # a_0 abar_0 a_0 abar_0 lies in rad^4 = 0
    loop = free_multiply(elt(arrow_path(0, 3)), elt(bar_path(0, 3)), 3)
    assert reduce_to_algebra(free_multiply(loop, loop, 3), alg).is_zero()


def test_reduce_short_paths():
    alg = algebra(2, (3, 1))
    assert reduce_to_algebra(elt(trivial_path(1)), alg) == AlgebraElement.of(e(1))
    assert reduce_to_algebra(elt(arrow_path(0, 2)), alg) == AlgebraElement.of(a(0))
    assert reduce_to_algebra(elt(bar_path(1, 2)), alg) == AlgebraElement.of(abar(1))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_confluence_at_desk_scale(m):
    alg = algebra(m, (2,) + tuple(F(1, k + 2) for k in range(m - 1)))
    for length in range(7):
        for path in all_paths(m, length):
            assert _reduce_path(path, alg) == _reduce_path(path, alg, rightmost=True)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_reduction_is_multiplicative(m):
    alg = algebra(m, (2,) + (3,) * (m - 1))
    short = [p for length in range(4) for p in all_paths(m, length)]
    for p in short:
        for s in short:
            if len(p) + len(s) > 4:
                continue
            x, y = elt(p), elt(s)
            lhs = reduce_to_algebra(free_multiply(x, y, m), alg)
            rhs = alg.multiply(reduce_to_algebra(x, alg), reduce_to_algebra(y, alg))
            assert lhs == rhs
