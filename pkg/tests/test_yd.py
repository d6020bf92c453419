import numpy as np
import pytest

from hopfcheck import constructors as cons
from hopfcheck.hopf import Tensor3, YDModule
from hopfcheck.linalg import rank
from hopfcheck.tensorops import SparseOp
from hopfcheck.yd import (Program, YDAlgebra, azumaya_check, braiding,
                          braiding_inverse, check_comodule_axioms,
                          check_module_axioms, check_quasitriangular,
                          check_yd_algebra, check_yd_compat, dual_module,
                          dual_module_end, end_algebra, end_apply_op,
                          end_op_algebra, end_tensor_iso, induced_coaction,
                          is_c_morphism, is_symmetric_pair, is_triangular,
                          opposite_algebra, phi_inv_op, phi_op,
                          tensor_algebra, tensor_module, theta_tensor_check)


def test_trivial_module_yd(taft2):
    M = YDModule.trivial(taft2, 3)
    assert check_module_axioms(M)
    assert check_comodule_axioms(M)
    assert check_yd_compat(M)["pass"]


def test_braiding_trivial_is_swap(taft2, f5):
    M = YDModule.trivial(taft2, 2)
    N = YDModule.trivial(taft2, 3)
    phi = braiding(M, N)
    for i in range(2):
        for j in range(3):
            src = i * 3 + j
            dst = j * 2 + i
            assert phi[dst, src] == 1


def test_braiding_composes_to_identity(ext11, f52):
    Hb, B = ext11
    M = B.module
    corpus = [M, dual_module(M), tensor_module(M, M), YDModule.trivial(Hb, 2)]
    for X in corpus:
        for Y in corpus:
            fwd = phi_op(X, Y)
            back = phi_inv_op(Y, X)
            assert fwd.then(back).equals(
                SparseOp.identity(f52, X.dim * Y.dim))


def test_braiding_naturality(ext11, f52):
    """Phi natural against an H-(co)linear map on the second slot."""
    Hb, B = ext11
    M = B.module
    fmat = f52.eye(2)
    fmat[1, 1] = 3  # x -> 3x is H-linear and colinear on B's module
    assert is_c_morphism(fmat, M, M)["pass"]
    p1 = Program(f52, [M, M])
    p1.linmap(1, fmat)
    p1.braid(0)
    p2 = Program(f52, [M, M])
    p2.braid(0)
    p2.linmap(0, fmat)
    assert p1.op().equals(p2.op())


def test_symmetric_pair_examples(ext11, f76):
    Hb, B = ext11
    assert is_symmetric_pair(B.module, B.module)
    # Taft braided factor over kZ_3 is not symmetric
    Hb3, B3 = cons.taft_braided_factor(3, f76)
    assert not is_symmetric_pair(B3.module, B3.module)


def test_yd_compat_braided_factor(ext11):
    Hb, B = ext11
    assert check_yd_compat(B.module)["pass"]


def test_tensor_algebra_plain_case(f5):
    kz2 = cons.group_algebra(2, f5)
    triv = YDModule.plain(f5, 2)
    A = YDAlgebra(triv, kz2.mult, kz2.unit)
    T = tensor_algebra(A, A)
    # (g x g)(g x g) = 1 x 1
    gg = f5.reduce(np.kron(A.basis_vector(1), A.basis_vector(1)))
    assert f5.equal(T.product(gg, gg), T.unit)


def test_tensor_algebra_associative_braided(ext11, f52):
    Hb, B = ext11
    E = end_algebra(B.module)
    T = tensor_algebra(E, E)
    d = T.dim
    for i in range(0, d, 3):
        for j in range(0, d, 5):
            for k in range(0, d, 7):
                a, b, c = (T.basis_vector(i), T.basis_vector(j),
                           T.basis_vector(k))
                lhs = T.product(T.product(a, b), c)
                rhs = T.product(a, T.product(b, c))
                assert f52.equal(lhs, rhs)


def test_opposite_algebra(ext11, f52):
    Hb, B = ext11
    A = YDAlgebra(B.module, B.mult, B.unit)
    op = opposite_algebra(A)
    # commutative in C: opposite multiplication equals the original
    assert f52.equal(op.mult.to_dense(), A.mult.to_dense())
    # double opposite is the identity when Phi_{A,A} is symmetric
    E = end_algebra(B.module)
    opop = opposite_algebra(opposite_algebra(E))
    assert f52.equal(opop.mult.to_dense(), E.mult.to_dense())
    assert not f52.equal(opposite_algebra(E).mult.to_dense(),
                         E.mult.to_dense())


def test_end_algebra_structures(ext11, f52):
    Hb, B = ext11
    M = B.module
    E = end_algebra(M)
    assert E.dim == M.dim ** 2
    rep = check_yd_algebra(E)
    assert all(rep.values()), rep
    # the module structure reproduces (h.f)(m) = h_(1) f(S(h_(2)) m)
    ev = end_apply_op(M)
    p1 = Program(f52, [Hb.yd(), E.module, M])
    p1.act(0, E.module)
    p1.apply_sparse(0, 2, ev, [M])
    p2 = Program(f52, [Hb.yd(), E.module, M])
    p2.comul(0, Hb)
    p2.antipode(1, Hb)
    p2.perm([0, 2, 3, 1])     # [h1, f, m, Sh2]
    p2.perm([0, 1, 3, 2])     # [h1, f, Sh2, m]
    p2.act(2, M)
    p2.apply_sparse(1, 2, ev, [M])
    p2.act(0, M)
    assert p1.op().equals(p2.op())
    # the coaction satisfies the evaluation identity of the paper's formula
    q1 = Program(f52, [E.module, M])
    q1.apply_sparse(0, 1, E.module.coact_op(), [Hb.yd(), E.module])
    q1.apply_sparse(1, 2, ev, [M])
    q2 = Program(f52, [E.module, M])
    q2.coact(1, M)
    q2.perm([1, 0, 2])        # [m-, f, m0]
    q2.apply_sparse(1, 2, ev, [M])   # [m-, f(m0)]
    q2.coact(1, M)            # [m-, w-, w0]
    q2.linmap(0, Hb.antipode_inverse)
    q2.perm([1, 0, 2])
    q2.mul(0, Hb)
    assert q1.op().equals(q2.op())


def test_dual_module_conventions(ext11):
    Hb, B = ext11
    M = B.module
    for D in (dual_module(M), dual_module_end(M)):
        assert check_module_axioms(D)
        assert check_comodule_axioms(D)
        assert check_yd_compat(D)["pass"]


def test_end_op_is_yd_algebra(ext11):
    Hb, B = ext11
    Eop = end_op_algebra(B.module)
    rep = check_yd_algebra(Eop)
    assert all(rep.values()), rep


def test_azumaya_examples(ext11, f52):
    Hb, B = ext11
    M = B.module
    # End(M) is Azumaya for every corpus module
    for X in (M, tensor_module(M, M), dual_module(M)):
        assert azumaya_check(end_algebra(X))["pass"]
    # k[x]/(x^2) with the trivial YD structure is not
    triv = YDModule.plain(f52, 2)
    kx = YDAlgebra(triv, Tensor3(f52, (2, 2, 2),
                                 [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
                   [1, 0])
    rep = azumaya_check(kx)
    assert not rep["F_bijective"] and not rep["pass"]
    # the unit object is trivially Azumaya
    unit_alg = YDAlgebra(YDModule.plain(f52, 1),
                         Tensor3(f52, (1, 1, 1), [(0, 0, 0, 1)]), [1])
    assert azumaya_check(unit_alg)["pass"]


def test_quasitriangular_examples(f5, f52):
    kz2 = cons.group_algebra(2, f52)
    from hopfcheck.yd import RMatrixData
    one = f52.zeros(4)
    one[0] = 1
    R = RMatrixData(kz2, one)
    rep = check_quasitriangular(kz2, R)
    assert rep["pass"] and is_triangular(kz2, R)
    # R_1^1 on H_4 = (1/2)(1x1 + 1xg + gx1 - gxg)
    H4 = cons.family_hopf(1, 1, (1,), f52)
    R11 = cons.r_matrix(H4, 1)
    inv2 = f52.inv(f52.of_int(2))
    expect = f52.zeros(16)
    gi = 2  # index of g = g^1 x^0 with nx = 2
    expect[0] = inv2
    expect[gi] = inv2
    expect[gi * 4] = inv2
    expect[gi * 4 + gi] = f52.neg(inv2)
    assert f52.equal(R11.element, expect)
    assert check_quasitriangular(H4, R11)["pass"]
    assert is_triangular(H4, R11)  # s = m = 1


def test_r_matrix_triangular_iff_s_equals_m(f5):
    H = cons.family_hopf(2, 1, (1,), f5)
    for s in cons.admissible_s(2, (1,)):
        R = cons.r_matrix(H, s)
        assert check_quasitriangular(H, R)["pass"]
        assert is_triangular(H, R) == (s == 2)


def test_r_matrix_admissibility(f5):
    H = cons.family_hopf(2, 1, (3,), f5)
    adm = cons.admissible_s(2, (3,))
    assert adm == [s for s in range(4) if (s * 3 - 2) % 4 == 0]
    with pytest.raises(cons.InadmissibleS):
        cons.r_matrix(H, [s for s in range(4) if s not in adm][0])


def test_induced_coaction(f52):
    kz2 = cons.group_algebra(2, f52)
    from hopfcheck.yd import RMatrixData
    one = f52.zeros(4)
    one[0] = 1
    trivR = RMatrixData(kz2, one)
    act = Tensor3(f52, (2, 3, 3), [(0, i, i, 1) for i in range(3)]
                  + [(1, i, i, 1) for i in range(3)])
    M = induced_coaction(YDModule(kz2, 3, act, None), trivR)
    # trivial R gives the trivial coaction
    triv = YDModule.trivial(kz2, 3)
    assert M.coact_op().equals(triv.coact_op())


def test_braiding_equals_phi_r(ext11, f52):
    """On R-induced modules the categorical braiding equals Phi_R."""
    Hb, B = ext11
    s = B.params["s"]
    R = cons.r_matrix(Hb, s)
    M = B.module
    phi = braiding(M, M)
    # Phi_R(m (x) n) = R^(1) n (x) S^-1(R^(2)) m
    f = f52
    d = M.dim
    mats = M.basis_action_matrices()
    Sinv = Hb.antipode_inverse
    phir = f.zeros((d * d, d * d))
    for i, j, v in R.legs():
        A1 = mats[i]
        A2 = f.zeros((d, d))
        for b in range(Hb.dim):
            if Sinv[b, j] != 0:
                A2 = f.reduce(A2 + Sinv[b, j] * mats[b])
        phir = f.reduce(phir + v * np.kron(A1, A2) @ _swap(f, d, d))
    assert f.equal(phi, phir)


def _swap(f, dm, dn):
    out = f.zeros((dm * dn, dm * dn))
    for i in range(dm):
        for j in range(dn):
            out[j * dm + i, i * dn + j] = 1
    return out


def test_end_tensor_iso(ext11, f52):
    Hb, B = ext11
    M = B.module
    # scalar case
    one = YDModule.trivial(Hb, 1)
    om1 = end_tensor_iso(one, one)
    assert om1.shape == (1, 1) and om1[0, 0] == 1
    # bijectivity at size
    N = tensor_module(M, M)
    om = end_tensor_iso(M, N)
    assert om.shape == ((M.dim * N.dim) ** 2,) * 2
    assert rank(f52, om) == om.shape[0]
