import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcheck.fields import make_field
from hopfcheck.linalg import (DimensionMismatch, Singular, char_poly,
                              eigenspace, eigenvalues_in_field, inverse,
                              kernel_basis, kron, min_poly, rank, solve)

f5 = make_field(5, 4)
f7 = make_field(7, 6)


def test_rank_identity():
    assert rank(f5, f5.eye(4)) == 4


def test_kernel_zero_matrix():
    ker = kernel_basis(f5, f5.zeros((3, 3)))
    assert len(ker) == 3
    assert all(f5.equal(v, f5.eye(3)[i]) for i, v in enumerate(ker))


def test_inverse_example():
    A = f5.array([[1, 1], [0, 1]])
    Ainv = inverse(f5, A)
    assert f5.equal(Ainv, f5.array([[1, 4], [0, 1]]))
    assert f5.equal(f5.matmul(Ainv, A), f5.eye(2))


def test_inverse_singular():
    with pytest.raises(Singular):
        inverse(f5, f5.array([[1, 1], [2, 2]]))
    with pytest.raises(DimensionMismatch):
        inverse(f5, f5.zeros((2, 3)))


def test_kron_examples():
    assert f5.equal(kron(f5, f5.eye(2), f5.eye(2)), f5.eye(4))
    d = f5.array([[1, 0], [0, 2]])
    assert f5.equal(kron(f5, d, f5.eye(1)), d)
    e11 = f5.zeros((2, 2))
    e11[0, 0] = 1
    big = kron(f5, e11, e11)
    expect = f5.zeros((4, 4))
    expect[0, 0] = 1
    assert f5.equal(big, expect)


def test_char_poly_examples():
    # (x - 1)(x - 2) = x^2 - 3x + 2 = x^2 + 2x + 2 over F_5
    cp = char_poly(f5, f5.array([[1, 0], [0, 2]]))
    assert [int(c) for c in cp] == [2, 2, 1]
    assert len(eigenspace(f5, f5.eye(3), f5.one())) == 3
    assert eigenspace(f5, f5.array([[1, 0], [0, 2]]), f5.of_int(3)) == []


def test_min_poly_and_eigenvalues():
    A = f5.array([[1, 1], [0, 1]])
    mp = min_poly(f5, A)
    # (x - 1)^2 = x^2 + 3x + 1
    assert [int(c) for c in mp] == [1, 3, 1]
    assert eigenvalues_in_field(f5, A) == [1]
    assert eigenvalues_in_field(f5, f5.array([[0, 1], [1, 0]])) == [1, 4]


def test_solve():
    A = f5.array([[1, 2], [3, 4]])
    b = f5.array([1, 0])
    x = solve(f5, A, b)
    assert f5.equal(f5.matmul(A, x.reshape(-1, 1)).reshape(-1), b)
    assert solve(f5, f5.array([[1, 1], [1, 1]]), f5.array([0, 1])) is None


def _rand_matrix(field, rows, cols, seed):
    rng = np.random.default_rng(seed)
    return field.reduce(rng.integers(0, field.p, size=(rows, cols)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 5), st.integers(1, 5))
def test_rank_nullity(seed, m, n):
    A = _rand_matrix(f7, m, n, seed)
    assert rank(f7, A) + len(kernel_basis(f7, A)) == n


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_inverse_roundtrip(seed, n):
    A = _rand_matrix(f7, n, n, seed)
    if rank(f7, A) < n:
        return
    assert f7.equal(f7.matmul(inverse(f7, A), A), f7.eye(n))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_kron_mixed_product(seed):
    rng = np.random.default_rng(seed)
    dims = rng.integers(1, 4, size=6)
    A = _rand_matrix(f7, dims[0], dims[1], seed + 1)
    C = _rand_matrix(f7, dims[1], dims[2], seed + 2)
    B = _rand_matrix(f7, dims[3], dims[4], seed + 3)
    D = _rand_matrix(f7, dims[4], dims[5], seed + 4)
    lhs = f7.matmul(kron(f7, A, B), kron(f7, C, D))
    rhs = kron(f7, f7.matmul(A, C), f7.matmul(B, D))
    assert f7.equal(lhs, rhs)


def test_kernel_canonical_ordering():
    A = f5.array([[1, 2, 3]])
    k1 = kernel_basis(f5, A)
    k2 = kernel_basis(f5, A)
    assert len(k1) == 2
    assert all(f5.equal(a, b) for a, b in zip(k1, k2))


def test_rational_linalg():
    fq = make_field("Q", 2)
    from fractions import Fraction
    A = fq.array([[Fraction(1, 2), 1], [0, Fraction(3)]])
    Ai = inverse(fq, A)
    assert fq.equal(fq.matmul(A, Ai), fq.eye(2))
    cp = char_poly(fq, A)
    assert cp[-1] == 1 and cp[0] == Fraction(3, 2)
