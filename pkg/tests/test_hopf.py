import numpy as np
import pytest

from hopfcheck import constructors as cons
from hopfcheck.hopf import (NotConvolutionInvertible, center, convolution,
                            convolution_inverse, coopposite, dual_hopf,
                            hopf_morphism_check, opposite, unit_counit_map)
from hopfcheck.yd import YDAlgebra, YDModule


def test_convolution_antipode_axiom(kz2, f5):
    conv = convolution(kz2, kz2.antipode, f5.eye(2))
    assert f5.equal(conv, unit_counit_map(kz2))


def test_convolution_unit_is_neutral(taft2, f5):
    rng = np.random.default_rng(7)
    fmat = f5.reduce(rng.integers(0, 5, size=(4, 4)))
    ue = unit_counit_map(taft2)
    assert f5.equal(convolution(taft2, ue, fmat), fmat)
    assert f5.equal(convolution(taft2, fmat, ue), fmat)


def test_convolution_id_id_on_group_algebra(f5):
    kz4 = cons.group_algebra(4, f5)
    sq = convolution(kz4, f5.eye(4), f5.eye(4))
    # g^a -> g^{2a}
    expect = f5.zeros((4, 4))
    for a in range(4):
        expect[(2 * a) % 4, a] = 1
    assert f5.equal(sq, expect)


def test_convolution_associative(taft2, f5):
    rng = np.random.default_rng(3)
    maps = [f5.reduce(rng.integers(0, 5, size=(4, 4))) for _ in range(3)]
    lhs = convolution(taft2, convolution(taft2, maps[0], maps[1]), maps[2])
    rhs = convolution(taft2, maps[0], convolution(taft2, maps[1], maps[2]))
    assert f5.equal(lhs, rhs)


def test_convolution_inverse_of_identity_is_antipode(taft2, f5):
    g = convolution_inverse(taft2, f5.eye(4))
    assert f5.equal(g, taft2.antipode)
    kz4 = cons.group_algebra(4, f5)
    g2 = convolution_inverse(kz4, f5.eye(4))
    assert f5.equal(g2, kz4.antipode)


def test_convolution_inverse_of_zero_fails(kz2, f5):
    with pytest.raises(NotConvolutionInvertible):
        convolution_inverse(kz2, f5.zeros((2, 2)))


def test_dual_of_group_algebra(kz2, f5):
    d = dual_hopf(kz2)
    # function algebra: two orthogonal idempotents e_0 = (1+g)/2, e_1 = (1-g)/2
    # in the dual basis the product is the transposed coproduct of kZ2
    prod = d.product(d.basis_vector(0), d.basis_vector(0))
    assert f5.equal(prod, d.basis_vector(0))
    prod01 = d.product(d.basis_vector(0), d.basis_vector(1))
    assert f5.is_zero(prod01)
    # counit of the dual = evaluation at 1
    assert f5.equal(d.counit, kz2.unit)


def test_double_dual_is_identity(taft2):
    from hopfcheck.serialize import hopf_equal
    dd = dual_hopf(dual_hopf(taft2))
    dd.labels = taft2.labels
    dd.name = taft2.name
    assert hopf_equal(dd, taft2)
    assert hopf_morphism_check(taft2.field.eye(4), taft2, dd)["pass"]


def test_opposite_examples(kz2, taft2, f5):
    assert f5.equal(opposite(kz2).mult.to_dense(), kz2.mult.to_dense())
    op = opposite(taft2)
    # g x in the opposite equals x g in the original
    gx_op = op.product(op.basis_vector(2), op.basis_vector(1))
    xg = taft2.product(taft2.basis_vector(1), taft2.basis_vector(2))
    assert f5.equal(gx_op, xg)
    assert f5.equal(coopposite(kz2).comult.to_dense(), kz2.comult.to_dense())


def test_opposite_is_hopf(taft3):
    from hopfcheck.axioms import verify_hopf_axioms
    assert verify_hopf_axioms(opposite(taft3))["pass"]
    assert verify_hopf_axioms(coopposite(taft3))["pass"]


def test_morphism_check_examples(kz2, taft3, f7):
    assert hopf_morphism_check(f7.eye(9), taft3, taft3)["pass"]
    # x -> xi x, g -> g is a Hopf automorphism of T_n
    for xi in (2, 3):
        m = f7.zeros((9, 9))
        for col in range(9):
            m[col, col] = f7.pow(f7.of_int(xi), col % 3)
        assert hopf_morphism_check(m, taft3, taft3)["pass"]
    # g -> x on kZ2 is not unital-compatible
    f5 = kz2.field
    bad = f5.zeros((2, 2))
    bad[1, 0] = 1
    bad[1, 1] = 1
    assert not hopf_morphism_check(bad, kz2, kz2)["pass"]


def test_center_examples(kz2, f5):
    # matrix algebra End(k^2) is central
    from hopfcheck.yd import end_algebra
    E = end_algebra(YDModule.plain(f5, 2))
    assert len(center(E, "right")) == 1
    assert len(center(E, "left")) == 1
    # commutative algebra: the center is everything
    assert len(center(kz2, "right")) == 2


def test_antipode_consistency_constructors(taft3, sweedler):
    for H in (taft3, sweedler):
        S = convolution_inverse(H, H.field.eye(H.dim))
        assert H.field.equal(S, H.antipode)
