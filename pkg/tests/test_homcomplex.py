from fractions import Fraction

import pytest

from hhdeform import linalg
from hhdeform.algebra import NonGenericParameters, algebra, e, z
from hhdeform.homcomplex import (
    coboundary_matrix,
    cohomology_dimension,
    expected_cohomology_dim,
    expected_hom_dimension,
    expected_image_dim,
    expected_kernel_dim,
    hom_dimension,
    hom_space_basis,
    kernel_basis,
    kernel_image_dims,
)
from hhdeform.resolution import Generator

F = Fraction


def test_hom_basis_sizes():
    assert hom_dimension(0, algebra(3, (2, 1, 1))) == 6
    assert hom_dimension(1, algebra(2, (3, 1))) == 8
    assert hom_dimension(2, algebra(1, (2,))) == 12


def test_hom_dimension_examples():
    alg = algebra(3, (2, 1, 1))
    assert hom_dimension(4, alg) == 18
    assert hom_dimension(2, alg) == 12
    assert hom_dimension(5, algebra(2, (3, 1))) == 24


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_hom_dimension_closed_form(m):
    alg = algebra(m, (2,) + (1,) * (m - 1))
    for n in range(3 * m + 3):
        assert hom_dimension(n, alg) == expected_hom_dimension(n, m)


def test_coboundary_ranks():
    assert linalg.rank(coboundary_matrix(0, algebra(3, (2, 1, 1)))) == 2
    assert linalg.rank(coboundary_matrix(1, algebra(2, (3, 1)))) == 5


def test_d_squared_zero():
    for m, q in [(1, (2,)), (2, (3, 1)), (3, (2, 1, 1))]:
        alg = algebra(m, q)
        for n in range(5):
            prod = coboundary_matrix(n + 1, alg).matmul(coboundary_matrix(n, alg))
            assert prod.is_zero()


def test_kernel_image_examples():
    assert kernel_image_dims(2, algebra(3, (2, 1, 1))) == (3, 2)
    assert kernel_image_dims(3, algebra(2, (3, 1))) == (6, 6)
    assert kernel_image_dims(0, algebra(4, (2, 1, 1, 1))) == (5, 0)


def test_kernel_basis_structure_degree_0():
    # sigma coordinates all equal, tau coordinates free
    m = 3
    alg = algebra(m, (2, 1, 1))
    basis = hom_space_basis(0, alg)
    vectors = kernel_basis(0, alg)
    assert len(vectors) == m + 1
    e_positions = [k for k, (g, mono) in enumerate(basis) if mono.kind == "e"]
    z_positions = [k for k, (g, mono) in enumerate(basis) if mono.kind == "z"]
    for vec in vectors:
        sigmas = {vec[k] for k in e_positions}
        assert len(sigmas) == 1  # propagation forces all sigma equal
    # the tau-only standard vectors are in the kernel
    d0 = coboundary_matrix(0, alg)
    for k in z_positions:
        vec = [F(0)] * d0.cols
        vec[k] = F(1)
        assert not any(d0.mul_vector(vec))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_kernel_image_closed_forms(m):
    alg = algebra(m, (2,) + (1,) * (m - 1))
    for n in range(2 * m + 5):
        ker, im = kernel_image_dims(n, alg)
        assert ker == expected_kernel_dim(n, m)
        assert im == expected_image_dim(n, m)


def test_kernel_image_closed_forms_m2():
    alg = algebra(2, (3, 1))
    for n in range(10):
        ker, im = kernel_image_dims(n, alg)
        assert ker == expected_kernel_dim(n, 2)
        assert im == expected_image_dim(n, 2)


def test_cohomology_dimensions():
    alg = algebra(3, (2, 1, 1))
    assert [cohomology_dimension(n, alg) for n in range(5)] == [4, 2, 1, 0, 0]
    assert cohomology_dimension(0, algebra(2, (3, 1))) == 3
    alg1 = algebra(1, (2,))
    assert sum(cohomology_dimension(n, alg1) for n in range(3)) == 5


def test_non_generic_refused():
    alg = algebra(2, (1, 1))
    with pytest.raises(NonGenericParameters):
        cohomology_dimension(0, alg)
    with pytest.raises(NonGenericParameters):
        kernel_image_dims(0, alg, strict=True)
    # override allowed, and the raw dimensions diverge from the generic table
    assert cohomology_dimension(3, alg, allow_non_generic=True) > 0


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_generic_cohomology_table(m):
    alg = algebra(m, (2,) + (1,) * (m - 1))
    dims = [cohomology_dimension(n, alg) for n in range(9)]
    assert dims == [expected_cohomology_dim(n, m) for n in range(9)]
    assert sum(dims) == m + 4


def test_zeta_only_dependence():
    tables = []
    for q in [(2, 1, 1), (1, 2, 1), (F(1, 2), 4, 1)]:
        alg = algebra(3, q)
        assert alg.zeta == 2
        tables.append(
            [
                (hom_dimension(n, alg),) + kernel_image_dims(n, alg)
                for n in range(9)
            ]
        )
    assert tables[0] == tables[1] == tables[2]


def test_cochain_value_lands_in_corner():
    alg = algebra(3, (2, 1, 1))
    for gen, mono in hom_space_basis(2, alg):
        assert mono.origin(alg.m) == gen.i
        assert mono.terminus(alg.m) == gen.terminus(alg.m)
