import numpy as np
import pytest

from bcx import (
    I2,
    BCVector,
    Basis,
    BasisPair,
    BiComplex,
    DimensionError,
    LinMap,
    NoSolution,
    NotInvertible,
    linalg,
)
from bcx import matrix as bm
from bcx.vector import scale
from conftest import random_basis, random_complex, random_invertible, random_linmap, random_rank_matrix


def example_map():
    return LinMap.from_functions(
        lambda v: [v[0], v[0] + v[1], v[1]],
        lambda v: [v[0] - v[1], v[1], v[0]],
        n=2,
    )


EXAMPLE_BASES = BasisPair(Basis([(1, 1), (1, 0)]), Basis([(1, 0, 1), (1, 1, 0), (0, 0, 1)]))


def random_vector(rng, n):
    return BCVector(random_complex(rng, n), random_complex(rng, n))


class TestApply:
    def test_row_maps(self):
        T = LinMap([[1, 1]], [[1, -1]])
        v = BCVector([1, 1], [1, 1])
        assert T.apply(v) == BCVector([2], [0])

    def test_zero_map(self, rng):
        assert LinMap.zero(3, 2).apply(random_vector(rng, 2)) == BCVector.zeros(3)

    def test_example_maps_at_one_one(self):
        got = example_map().apply(BCVector([1, 1], [1, 1]))
        assert list(got) == [BiComplex(1, 0), BiComplex(2, 1), BiComplex(1, 1)]

    def test_dimension_error(self):
        with pytest.raises(DimensionError):
            example_map().apply(BCVector([1, 2, 3], [1, 2, 3]))

    def test_complex_linear(self, rng):
        T = random_linmap(rng)
        u, v = random_vector(rng, T.n), random_vector(rng, T.n)
        a = complex(*rng.standard_normal(2))
        assert T.apply(u + v).minus == pytest.approx((T.apply(u) + T.apply(v)).minus)
        lhs, rhs = T.apply(scale(a, u)), scale(a, T.apply(u))
        assert np.allclose(lhs.minus, rhs.minus) and np.allclose(lhs.plus, rhs.plus)

    def test_commutes_with_bicomplex_scalars(self, rng):
        # holds for every map, including t1 != t2: scalars act componentwise
        for _ in range(20):
            T = random_linmap(rng)
            v = random_vector(rng, T.n)
            eta = BiComplex(complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
            for s in (I2, eta):
                lhs, rhs = T.apply(scale(s, v)), scale(s, T.apply(v))
                assert np.allclose(lhs.minus, rhs.minus, atol=1e-12)
                assert np.allclose(lhs.plus, rhs.plus, atol=1e-12)


class TestAlgebra:
    def test_add_and_scale(self, rng):
        T = random_linmap(rng)
        S = LinMap(random_complex(rng, T.m, T.n), random_complex(rng, T.m, T.n))
        assert T + LinMap.zero(T.m, T.n) == T
        assert 1 * T == T
        assert np.array_equal((T + S).t1, T.t1 + S.t1)
        assert (2j * T).eq(T.scalar_mul(2j))

    def test_compose(self, rng):
        T = LinMap(random_complex(rng, 3, 2), random_complex(rng, 3, 2))
        S = LinMap(random_complex(rng, 2, 3), random_complex(rng, 2, 3))
        assert LinMap.identity(3).compose(T) == T
        assert np.array_equal(S.compose(T).t2, S.t2 @ T.t2)
        v = random_vector(rng, 2)
        assert S.compose(T).apply(v).minus == pytest.approx(S.apply(T.apply(v)).minus, abs=1e-9)
        assert (S @ T).apply(v).plus == pytest.approx(S.apply(T.apply(v)).plus, abs=1e-9)
        with pytest.raises(DimensionError):
            T.compose(T)

    def test_eq_zero(self):
        assert LinMap.zero(2, 2).eq_zero()
        assert not LinMap([[0]], [[1e-3]]).eq_zero()
        assert LinMap([[0]], [[1e-13]]).eq_zero(tol=1e-12)


class TestKernelImage:
    def test_kernel_of_row_maps(self):
        ker = LinMap([[1, 1]], [[1, -1]]).kernel_basis()
        assert ker == [BCVector([-1, 1], [0, 0]), BCVector([0, 0], [1, 1])]

    def test_invertible_has_empty_kernel(self, rng):
        T = LinMap(random_invertible(rng, 3), random_invertible(rng, 3))
        assert T.kernel_basis() == [] and T.is_nonsingular()

    def test_zero_map_kernel(self):
        assert len(LinMap.zero(2, 2).kernel_basis()) == 4
        assert not LinMap.zero(2, 2).is_nonsingular()

    def test_kernel_and_image_properties(self, rng):
        for _ in range(100):
            T = random_linmap(rng)
            ker = T.kernel_basis()
            assert len(ker) == T.nullity() == 2 * T.n - T.rank()
            for k in ker:
                image = T.apply(k)
                assert max(np.abs(image.minus).max(), np.abs(image.plus).max()) <= 1e-9
            pairs = T.image_basis_with_preimages()
            assert len(pairs) == T.rank()
            for y, x in pairs:
                assert T.apply(x) == y

    def test_image_ordering_minus_first(self):
        T = LinMap([[1, 0], [0, 0]], [[0, 1], [0, 1]])
        assert T.image_basis() == [BCVector([1, 0], [0, 0]), BCVector([0, 0], [1, 1])]


class TestRank:
    def test_examples(self, rng):
        assert (LinMap.identity(3).rank(), LinMap.identity(3).nullity()) == (6, 0)
        assert (LinMap.zero(2, 2).rank(), LinMap.zero(2, 2).nullity()) == (0, 4)
        T = LinMap(random_rank_matrix(rng, 2, 2, 1), random_invertible(rng, 2))
        assert (T.rank(), T.nullity()) == (3, 1)


class TestInverse:
    def test_identity(self):
        assert LinMap.identity(3).inverse() == LinMap.identity(3)

    def test_random(self, rng):
        for _ in range(100):
            T = LinMap(random_invertible(rng, 4), random_invertible(rng, 4))
            assert T.is_invertible()
            assert T.inverse().compose(T).eq(LinMap.identity(4), 1e-9)

    def test_singular_plus_component(self, rng):
        T = LinMap(random_invertible(rng, 3), random_rank_matrix(rng, 3, 3, 2))
        assert not T.is_invertible()
        with pytest.raises(NotInvertible) as info:
            T.inverse()
        assert info.value.components == ("plus",)

    def test_non_square(self):
        assert not LinMap.zero(2, 3).is_invertible()
        with pytest.raises(DimensionError):
            LinMap.zero(2, 3).inverse()


class TestMatrixRep:
    def test_example(self):
        M = example_map().matrix_rep(EXAMPLE_BASES)
        assert np.array_equal(M.minus, [[-1, 0], [2, 1], [2, 0]])
        assert np.array_equal(M.plus, [[-1, 1], [1, 0], [2, 0]])

    def test_accepts_two_bases(self):
        b1, b2 = EXAMPLE_BASES.b1, EXAMPLE_BASES.b2
        assert example_map().matrix_rep(b1, b2) == example_map().matrix_rep(EXAMPLE_BASES)

    def test_identity_any_basis(self, rng):
        B = random_basis(rng, 3)
        assert LinMap.identity(3).matrix_rep(B).equals(bm.identity(3), 1e-9)

    def test_standard_bases_give_components(self, rng):
        T = random_linmap(rng)
        M = T.matrix_rep()
        assert np.array_equal(M.minus, T.t1) and np.array_equal(M.plus, T.t2)

    def test_additive_and_homogeneous(self, rng):
        for _ in range(20):
            T = random_linmap(rng, 4)
            S = LinMap(random_complex(rng, T.m, T.n), random_complex(rng, T.m, T.n))
            bases = BasisPair(random_basis(rng, T.n), random_basis(rng, T.m))
            a = complex(*rng.standard_normal(2))
            assert (T + S).matrix_rep(bases).equals(T.matrix_rep(bases) + S.matrix_rep(bases), 1e-9)
            assert T.scalar_mul(a).matrix_rep(bases).equals(T.matrix_rep(bases).scalar_mul(a), 1e-9)

    def test_bases_must_fit(self):
        with pytest.raises(DimensionError):
            example_map().matrix_rep(BasisPair(EXAMPLE_BASES.b2, EXAMPLE_BASES.b1))

    def test_from_matrix(self, rng):
        M = bm.join(random_complex(rng, 2, 3), random_complex(rng, 2, 3))
        v = random_vector(rng, 3)
        assert LinMap.from_matrix(M).apply(v) == M @ v


class TestSolve:
    def test_identity(self, rng):
        eta = random_vector(rng, 3)
        assert LinMap.identity(3).solve(eta) == eta

    def test_round_trip(self, rng):
        T = example_map()
        for _ in range(20):
            v = random_vector(rng, 2)
            eta = T.apply(v)
            w = T.solve(eta)
            back = T.apply(w)
            assert np.abs(back.minus - eta.minus).max() <= 1e-9
            assert np.abs(back.plus - eta.plus).max() <= 1e-9

    def test_inconsistent_minus(self):
        T = LinMap([[1], [1]], [[1], [0]])
        with pytest.raises(NoSolution) as info:
            T.solve(BCVector([1, 2], [0, 0]))
        assert info.value.components == ("minus",)

    def test_inconsistent_both(self):
        T = LinMap([[1], [1]], [[1], [1]])
        with pytest.raises(NoSolution) as info:
            T.solve(BCVector([1, 2], [3, 4]))
        assert info.value.components == ("minus", "plus")


@pytest.mark.parametrize("m, n", [(1, 1), (2, 3), (3, 2), (4, 4)])
def test_dimension_of_map_space(m, n):
    flat = []
    for k in (1, 2):
        for i in range(m):
            for j in range(n):
                unit = np.zeros((m, n))
                unit[i, j] = 1
                zero = np.zeros((m, n))
                T = LinMap(unit, zero) if k == 1 else LinMap(zero, unit)
                flat.append(np.concatenate([T.t1.ravel(), T.t2.ravel()]))
    assert linalg.rank(np.column_stack(flat)) == 2 * m * n
