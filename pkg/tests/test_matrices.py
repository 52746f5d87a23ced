import random
from itertools import combinations

import pytest

from detdiv import (
    DimensionCapError,
    DivisorChain,
    Ideal,
    Matrix,
    Z,
    ZSQRT5,
    column_class,
    compound,
    det,
    det_divisor,
    divisor_chain,
    elem_divisor,
    ideal_from_generators,
    rank,
    subset_enumeration,
)
from detdiv.matrices import _minor_det
from helpers import p_ideal, random_matrix, random_unimodular


# ---------------------------------------------------------------- determinants

def test_det_identity():
    for n in (1, 2, 3, 4):
        assert det(Matrix.identity(Z, n)).a == 1


def test_det_2x2_example():
    assert det(Matrix(Z, [[2, 4], [6, 8]])).a == -8


def test_det_quadratic_singular_example():
    m = Matrix(ZSQRT5, [[(2, 0), (1, 1)], [(1, -1), (3, 0)]])
    assert det(m).is_zero()


def test_det_dimension_cap():
    m = Matrix.identity(ZSQRT5, 7)
    with pytest.raises(DimensionCapError):
        det(m)


def test_det_elimination_matches_cofactor():
    rng = random.Random(10)
    for _ in range(100):
        n = rng.randint(1, 4)
        m = random_matrix(rng, Z, n, 9)
        idx = tuple(range(n))
        assert det(m) == _minor_det(m, idx, idx, {})


# ---------------------------------------------------------------- subsets and compounds

def test_subset_enumeration_lex():
    assert subset_enumeration(3, 2) == [(1, 2), (1, 3), (2, 3)]
    assert subset_enumeration(2, 2) == [(1, 2)]
    assert subset_enumeration(4, 1) == [(1,), (2,), (3,), (4,)]


def test_subset_enumeration_range():
    with pytest.raises(ValueError):
        subset_enumeration(3, 0)
    with pytest.raises(ValueError):
        subset_enumeration(3, 4)


def test_compound_of_identity():
    assert compound(Matrix.identity(Z, 3), 2) == Matrix.identity(Z, 3)


def test_compound_top_is_det():
    m = Matrix(Z, [[2, 4], [6, 8]])
    assert compound(m, 2) == Matrix(Z, [[-8]])


def test_compound_first_is_matrix():
    rng = random.Random(11)
    m = random_matrix(rng, Z, 3, 9)
    assert compound(m, 1) == m


def test_compound_multiplicative_over_z():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(2, 4)
        a = random_matrix(rng, Z, n, 9)
        b = random_matrix(rng, Z, n, 9)
        for k in range(1, n + 1):
            assert compound(a @ b, k) == compound(a, k) @ compound(b, k)


def test_compound_multiplicative_quadratic():
    rng = random.Random(13)
    for _ in range(10):
        a = random_matrix(rng, ZSQRT5, 3, 2)
        b = random_matrix(rng, ZSQRT5, 3, 2)
        for k in range(1, 4):
            assert compound(a @ b, k) == compound(a, k) @ compound(b, k)


# ---------------------------------------------------------------- determinantal divisors

def test_divisors_of_identity():
    m = Matrix.identity(Z, 3)
    for k in range(1, 4):
        assert det_divisor(m, k) == Ideal(Z, 1)


def test_divisor_example():
    m = Matrix(Z, [[2, 4], [6, 8]])
    assert det_divisor(m, 1) == Ideal(Z, 2)
    assert det_divisor(m, 2) == Ideal(Z, 8)


def test_divisor_conventions():
    m = Matrix(Z, [[2, 4], [6, 8]])
    assert det_divisor(m, 0) == Ideal(Z, 1)
    assert det_divisor(m, -3) == Ideal(Z, 1)
    assert det_divisor(m, 3).is_zero()


def test_elementary_divisors_of_diagonal():
    m = Matrix.diagonal(Z, [2, 8])
    assert det_divisor(m, 1) == Ideal(Z, 2)
    assert det_divisor(m, 2) == Ideal(Z, 16)
    assert elem_divisor(m, 1) == Ideal(Z, 2)
    assert elem_divisor(m, 2) == Ideal(Z, 8)


def test_elementary_divisor_of_identity():
    m = Matrix.identity(Z, 3)
    assert all(elem_divisor(m, k) == Ideal(Z, 1) for k in (1, 2, 3))


def test_elementary_divisor_zero_case():
    m = Matrix(Z, [[2, 4], [1, 2]])
    assert elem_divisor(m, 2).is_zero()


# ---------------------------------------------------------------- rank

def test_rank_identity_and_zero():
    assert rank(Matrix.identity(Z, 4)) == 4
    assert rank(Matrix.zeros(Z, 3)) == 0
    assert rank(Matrix.zeros(ZSQRT5, 2)) == 0


def test_rank_one_example():
    assert rank(Matrix(Z, [[2, 0], [3, 0]])) == 1


def test_rank_matches_largest_nonzero_minor():
    rng = random.Random(14)
    for _ in range(60):
        ring = rng.choice([Z, ZSQRT5])
        n = rng.randint(1, 3)
        m = random_matrix(rng, ring, n, 2)
        best = 0
        memo = {}
        for r in range(1, n + 1):
            subs = list(combinations(range(n), r))
            if any(not _minor_det(m, rs, cs, memo).is_zero()
                   for rs in subs for cs in subs):
                best = r
        assert rank(m) == best


# ---------------------------------------------------------------- column class

def test_column_class_over_z_is_principal():
    rng = random.Random(15)
    for _ in range(20):
        m = random_matrix(rng, Z, 3, 5, nonsingular=True)
        assert column_class(m).principal


def test_column_class_detects_nonprincipal():
    m = Matrix(ZSQRT5, [[(2, 0), (0, 0)], [(1, 1), (0, 0)]])
    cls = column_class(m)
    assert not cls.principal


def test_column_class_identity():
    assert column_class(Matrix.identity(ZSQRT5, 2)).principal


def test_column_class_zero_matrix_rejected():
    with pytest.raises(ValueError):
        column_class(Matrix.zeros(Z, 2))


# ---------------------------------------------------------------- chains

def test_chain_of_diag_126():
    chain = divisor_chain(Matrix.diagonal(Z, [1, 2, 6]))
    assert [d.g for d in chain.d] == [1, 2, 12]
    assert [e.g for e in chain.elementary] == [1, 2, 6]


def test_chain_of_identity():
    chain = divisor_chain(Matrix.identity(Z, 3))
    assert all(d == Ideal(Z, 1) for d in chain.d)


def test_chain_of_permutation():
    chain = divisor_chain(Matrix(Z, [[0, 1], [1, 0]]))
    assert [d.g for d in chain.d] == [1, 1]


def test_chain_invariant_under_unimodular_transforms():
    rng = random.Random(16)
    for _ in range(30):
        m = random_matrix(rng, Z, 3, 6)
        p = random_unimodular(rng, Z, 3)
        q = random_unimodular(rng, Z, 3)
        assert divisor_chain(p @ m @ q) == divisor_chain(m)
    for _ in range(10):
        m = random_matrix(rng, ZSQRT5, 2, 2)
        p = random_unimodular(rng, ZSQRT5, 2)
        q = random_unimodular(rng, ZSQRT5, 2)
        assert divisor_chain(p @ m @ q) == divisor_chain(m)


def test_chain_divisibility_for_nonsingular():
    rng = random.Random(17)
    for _ in range(40):
        m = random_matrix(rng, Z, 3, 6, nonsingular=True)
        chain = divisor_chain(m)
        es = chain.elementary
        assert es is not None
        for prev, nxt in zip(es, es[1:]):
            assert prev.divides(nxt)


def test_product_bounds_spot_check():
    # both divisibility bounds on products, in cleared integral form
    rng = random.Random(18)
    for _ in range(40):
        n = 3
        a = random_matrix(rng, Z, n, 5, nonsingular=True)
        b = random_matrix(rng, Z, n, 5, nonsingular=True)
        ca, cb, cc = divisor_chain(a).d, divisor_chain(b).d, divisor_chain(a @ b).d
        for k in range(1, n + 1):
            assert (ca[k - 1] * cb[k - 1]).divides(cc[k - 1])
        for k in range(1, n):
            lhs = cc[k - 1] * ca[n - k - 1] * cb[n - k - 1]
            rhs = ca[n - k - 1] * ca[k - 1] * cb[n - 1] + cb[n - k - 1] * cb[k - 1] * ca[n - 1]
            assert lhs.divides(rhs)


def test_column_gcd_column_independence_quadratic():
    # rank-1 matrices built from ideal bases: every nonzero column of the
    # rank compound must land in one ideal class
    rng = random.Random(19)
    p = p_ideal()
    x, y = p.basis_elements()
    m = Matrix(ZSQRT5, [[x, x], [y, y]])
    assert rank(m) == 1
    assert not column_class(m).principal


def test_chain_from_elementary_roundtrip():
    e = [Ideal(Z, 1), Ideal(Z, 2), Ideal(Z, 6)]
    chain = DivisorChain.from_elementary(e)
    assert [d.g for d in chain.d] == [1, 2, 12]
    assert list(chain.elementary) == e


def test_chain_invalid_quotient():
    chain = DivisorChain.from_divisors([Ideal(Z, 2), Ideal(Z, 3)])
    assert chain.elementary is None
