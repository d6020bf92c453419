import pytest

from hopfcheck import constructors as cons
from hopfcheck.double import regular_byd, yd_transport, yd_transport_inverse
from hopfcheck.sequence import e_alpha, twisted_module
from hopfcheck.yd import check_yd_compat, check_module_axioms, check_comodule_axioms


@pytest.fixture(scope="module")
def biprod(ext11):
    return cons.biproduct(ext11[1])


def test_transport_regular(ext11, biprod, f52):
    Hb, B = ext11
    X = regular_byd(B)
    N = yd_transport(X, biprod)
    assert check_module_axioms(N)
    assert check_comodule_axioms(N)
    assert check_yd_compat(N)["pass"]
    back = yd_transport_inverse(B, biprod, N)
    assert back.bact.equals(X.bact)
    assert back.bcoact.equals(X.bcoact)
    assert back.cmodule.act_op().equals(X.cmodule.act_op())
    assert back.cmodule.coact_op().equals(X.cmodule.coact_op())


def test_transport_e_alpha(ext11, biprod, f52):
    Hb, B = ext11
    a = f52.eye(2)
    a[1, 1] = 3
    tw, _ = twisted_module(B, a, verify=False)
    Ebyd, Ealg, _ = e_alpha(B, tw)
    N = yd_transport(Ebyd, biprod)
    assert check_yd_compat(N)["pass"]
    back = yd_transport_inverse(B, biprod, N)
    assert back.bact.equals(Ebyd.bact)
    assert back.bcoact.equals(Ebyd.bcoact)


def test_trivial_transport(ext11, biprod, f52):
    from hopfcheck.double import BYDObject
    from hopfcheck.hopf import YDModule
    from hopfcheck.tensorops import SparseOp
    Hb, B = ext11
    triv = YDModule.trivial(Hb, 1)
    bact = SparseOp(f52, 1, B.dim,
                    [0] * sum(1 for v in B.counit if v != 0),
                    [i for i, v in enumerate(B.counit) if v != 0],
                    [v for v in B.counit if v != 0])
    bco = SparseOp(f52, B.dim, 1,
                   [i for i, v in enumerate(B.unit) if v != 0], [0],
                   [v for v in B.unit if v != 0])
    X = BYDObject(B, triv, bact, bco)
    N = yd_transport(X, biprod)
    trivL = YDModule.trivial(biprod, 1)
    assert N.act_op().equals(trivL.act_op())
    assert N.coact_op().equals(trivL.coact_op())
