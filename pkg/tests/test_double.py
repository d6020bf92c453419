import numpy as np
import pytest

from hopfcheck import constructors as cons
from hopfcheck.axioms import verify_hopf_axioms, verify_hopf_in_category
from hopfcheck.double import (SymmetricityViolated, check_symm_conds,
                              dmodule_braiding, dmodule_check,
                              dmodule_to_yd, drinfeld_double, one_s_identity,
                              regular_byd, yd_to_dmodule)
from hopfcheck.fields import make_field
from hopfcheck.grouplikes import characters, grouplikes
from hopfcheck.hopf import dual_hopf
from hopfcheck.sequence import psi_op, twisted_character_actions, twisted_module
from hopfcheck.tensorops import SparseOp


@pytest.fixture(scope="module")
def d_taft3(taft3):
    return drinfeld_double(taft3)


@pytest.fixture(scope="module")
def d_ext11(ext11):
    return drinfeld_double(ext11[1])


def test_classical_doubles_verify(kz2, taft2, d_taft3):
    for D in (drinfeld_double(kz2), drinfeld_double(taft2), d_taft3):
        assert D.dim == D.B.dim ** 2
        assert verify_hopf_axioms(D.hopf)["pass"]
        assert one_s_identity(D)


def test_braided_double_verifies_in_category(d_ext11):
    assert verify_hopf_in_category(d_ext11.hopf)["pass"]
    assert one_s_identity(d_ext11)
    assert d_ext11.dim == 4


def test_symm_conds_reports(ext11, kz2, f76):
    rep = check_symm_conds(ext11[1])
    assert rep["pass"] and rep["agree"]
    rep2 = check_symm_conds(kz2)
    assert rep2["pass"] and rep2["agree"]
    _, B3 = cons.taft_braided_factor(3, f76)
    rep3 = check_symm_conds(B3)
    assert not rep3["BB"] and not rep3["B*B*"] and not rep3["BB*"]
    assert rep3["agree"] and not rep3["pass"]


def test_double_refuses_nonsymmetric(f76):
    _, B3 = cons.taft_braided_factor(3, f76)
    with pytest.raises(SymmetricityViolated):
        drinfeld_double(B3)


def test_grouplike_count_is_product(taft2, taft3, ext11):
    for B in (taft2, taft3, ext11[1]):
        D = drinfeld_double(B)
        nb = len(grouplikes(B))
        nbs = len(characters(B))
        assert len(grouplikes(D.hopf)) == nb * nbs


def test_cross_actions_trivial_on_grouplikes(taft3, d_taft3, f7):
    gls = grouplikes(taft3)
    chs = characters(taft3)
    for g in gls:
        for lam in chs:
            gl = f7.reduce(np.kron(g, lam))
            left = d_taft3.act_left.apply_vec(gl)
            right = d_taft3.act_right.apply_vec(gl)
            assert f7.equal(left, lam)
            assert f7.equal(right, g)


def test_regular_byd_and_roundtrip(taft3, d_taft3, f7):
    X = regular_byd(taft3)
    mu, nu = yd_to_dmodule(d_taft3, X)
    rep = dmodule_check(d_taft3, mu, nu)
    assert rep["pass"] and rep["straightening"] and rep["direct"]
    X2 = dmodule_to_yd(d_taft3, mu, nu, X.cmodule)
    assert X.bact.equals(X2.bact)
    assert X.bcoact.equals(X2.bcoact)


def test_trivial_dmodule(d_taft3, taft3, f7):
    d = taft3.dim
    # trivial action eps(b) m and trivial B*-action f(1) m
    rows = list(range(1)) * 0
    mur, muc, muv = [], [], []
    for b in range(d):
        if taft3.counit[b] != 0:
            mur.append(0)
            muc.append(b * 1 + 0)
            muv.append(taft3.counit[b])
    mu = SparseOp(f7, 1, d, mur, muc, muv)
    nur, nuc, nuv = [], [], []
    for k in range(d):
        if taft3.unit[k] != 0:
            nur.append(0)
            nuc.append(k)
            nuv.append(taft3.unit[k])
    nu = SparseOp(f7, 1, d, nur, nuc, nuv)
    assert dmodule_check(d_taft3, mu, nu)["pass"]


def test_mismatched_character_pair_fails(ext11, d_ext11, f52):
    """A twisted pair must satisfy the compatibility square; a character
    twist on only one leg breaks it for some pair."""
    Hb, B = ext11
    a = f52.eye(2)
    a[1, 1] = 2
    tw, _ = twisted_module(B, a, verify=False)
    chars = characters(B)
    gls = grouplikes(B)
    verdicts = []
    for lam in chars:
        for g in gls:
            mu, nu = twisted_character_actions(B, d_ext11, tw, lam, g)
            verdicts.append(dmodule_check(d_ext11, mu, nu)["pass"])
    assert not all(verdicts)


def test_braiding_correspondence(d_ext11, ext11, f52):
    Hb, B = ext11
    X = regular_byd(B)
    mu, nu = yd_to_dmodule(d_ext11, X)
    psi = psi_op(X, X).to_dense()
    dm = dmodule_braiding(d_ext11, mu, nu, mu, nu, X.cmodule, X.cmodule)
    assert f52.equal(psi, dm)


def test_large_double_certified(f5):
    T4 = cons.taft(4, f5)
    D = drinfeld_double(T4)
    rep = verify_hopf_axioms(D.hopf)
    assert rep["pass"] and rep["mode"] == "generator-certified"
    repd = verify_hopf_axioms(dual_hopf(D.hopf))
    assert repd["pass"]


def test_certified_matches_exhaustive(f52):
    H = cons.family_hopf(1, 2, (1, 1), f52)
    D = drinfeld_double(H).hopf  # dim 64: both modes run fast
    r1 = verify_hopf_axioms(D, mode="exhaustive")
    r2 = verify_hopf_axioms(D, mode="certified")
    assert r1["pass"] and r2["pass"]
    assert r2["mode"] == "generator-certified"
