"""Acceptance suite.

One test per acceptance criterion, each printing a PASS/FAIL line; all
tolerances are exact equality over the exact field.  Run with
``pytest tests/test_acceptance.py -v -s`` to see the per-criterion lines.
"""

import time

import numpy as np
import pytest

from hopfcheck import constructors as cons
from hopfcheck.axioms import verify_hopf_axioms, verify_hopf_in_category
from hopfcheck.double import (SymmetricityViolated, check_symm_conds,
                              drinfeld_double)
from hopfcheck.fields import make_field
from hopfcheck.grouplikes import (characters, characters_bruteforce,
                                  coinner_auto, grouplikes, inner_auto,
                                  s_group, aut_family_matrix)
from hopfcheck.hopf import center, dual_hopf
from hopfcheck.linalg import rank
from hopfcheck.sequence import (cond_bq_subgr_check, e_alpha,
                                e_alpha_over_biproduct, exactness_report,
                                inner_action_iso_check,
                                pi_class_relation_check, strongly_inner_solver,
                                twisted_module)
from hopfcheck.yd import (azumaya_check, braiding, braiding_inverse,
                          check_quasitriangular, dual_module, end_algebra,
                          induced_coaction, is_symmetric_pair, is_triangular,
                          phi_op, tensor_module, YDModule)
from hopfcheck.hopf import Tensor3


def _report(name, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    assert ok, name


FAMILY_CASES = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]


def _field_for(m):
    return {1: make_field(5, 2), 2: make_field(5, 4),
            3: make_field(7, 6)}[m]


def _admissible_d(m, n):
    out = []
    odd = [d for d in range(1, 2 * m) if d % 2 == 1]

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for d in odd:
            rec(prefix + [d])

    rec([])
    return out


def test_criterion_1_axiom_gate():
    """kZ_r (r<=8), T_n (n in 2..4), H(m,n,d) all admissible d, plus duals
    and doubles, all pass verify_hopf_axioms; total runtime <= 60 s."""
    t0 = time.time()
    corpus = []
    f11 = make_field(11, 2)
    for r in range(1, 9):
        corpus.append(cons.group_algebra(r, f11))
    corpus.append(cons.taft(2, make_field(5, 4)))
    corpus.append(cons.taft(3, make_field(7, 3)))
    corpus.append(cons.taft(4, make_field(5, 4)))
    for m, n in FAMILY_CASES:
        f = _field_for(m)
        for d in _admissible_d(m, n):
            corpus.append(cons.family_hopf(m, n, d, f))
    ok = True
    for H in corpus:
        ok = ok and verify_hopf_axioms(H)["pass"]
        ok = ok and verify_hopf_axioms(dual_hopf(H))["pass"]
        D = drinfeld_double(H)
        ok = ok and verify_hopf_axioms(D.hopf)["pass"]
    elapsed = time.time() - t0
    print(f"  (criterion 1 corpus: {len(corpus)} algebras "
          f"x (self, dual, double) in {elapsed:.1f} s)")
    _report("criterion 1: axiom gate (exact, <= 60 s)", ok and elapsed <= 60)


def test_criterion_2_taft_sequence():
    """Over F_7, n = 3: |G| = 3, |characters| = 3, |G(D)| = 9, |S| = 3 and
    gbar^i = lambdabar_i as matrices."""
    f7 = make_field(7, 3)
    T3 = cons.taft(3, f7)
    gls = grouplikes(T3)
    chs = characters(T3)
    D = drinfeld_double(T3)
    gld = grouplikes(D.hopf)
    sg = s_group(T3)
    om = f7.omega
    lam = {}
    for c in chs:
        for i in range(3):
            if int(c[3]) == f7.pow(om, i):
                lam[i] = c
    match = all(
        f7.equal(inner_auto(T3, T3.basis_vector(3 * i)),
                 coinner_auto(T3, lam[i]))
        for i in range(3))
    ok = (len(gls) == 3 and len(chs) == 3 and len(gld) == 9
          and len(sg) == 3 and match)
    _report("criterion 2: Taft sequence counts and gbar^i = lambdabar_i", ok)


def test_criterion_3_sweedler_base_level():
    """|G(D(H_4))| = 4 and |G(D(H_4)*)| = 2 over F_5."""
    f5 = make_field(5, 2)
    H4 = cons.taft(2, f5)
    D = drinfeld_double(H4)
    ok = len(grouplikes(D.hopf)) == 4 and len(s_group(H4)) == 2
    _report("criterion 3: Sweedler base level sizes 4 and 2", ok)


def test_criterion_4_r_matrix_suite():
    """check_quasitriangular passes for every admissible (m,n,d,s) in the
    corpus; triangular iff s = m."""
    ok = True
    for m, n in FAMILY_CASES:
        f = _field_for(m)
        for d in _admissible_d(m, n):
            H = cons.family_hopf(m, n, d, f)
            for s in cons.admissible_s(m, d):
                R = cons.r_matrix(H, s)
                ok = ok and check_quasitriangular(H, R)["pass"]
                ok = ok and (is_triangular(H, R) == (s == m))
    _report("criterion 4: quasitriangular suite, triangular iff s = m", ok)


def test_criterion_5_braiding_symmetricity():
    """Phi_{M,B} o Phi_{B,M} = id on a >= 5 module corpus for each family
    instance, and the displayed braiding values hold."""
    ok = True
    for m, n in FAMILY_CASES:
        f = _field_for(m)
        d = (1,) * n
        Hb, B = cons.exterior_factor(m, n, d, f)
        M = B.module
        s = B.params["s"]
        reg_act = Tensor3(f, (Hb.dim,) * 3,
                          [(i, j, k, v) for i, j, k, v in Hb.mult.entries()])
        reg = induced_coaction(YDModule(Hb, Hb.dim, reg_act, None),
                               cons.r_matrix(Hb, s))
        corpus = [M, YDModule.trivial(Hb, 1), dual_module(M),
                  tensor_module(M, M), reg]
        for X in corpus:
            ok = ok and is_symmetric_pair(M, X)
        # displayed values on the regular induced module:
        # Phi(x (x) m) = g^{-s d_n} . m (x) x, inverse with +s d_n
        Phi = braiding(M, reg)
        Phin = braiding_inverse(M, reg)
        order = 2 * m
        nx = 1 << (n - 1)
        gneg = Hb.left_mult_matrix(Hb.basis_vector(((-s * d[-1]) % order) * nx))
        gpos = Hb.left_mult_matrix(Hb.basis_vector(((s * d[-1]) % order) * nx))
        dm = Hb.dim
        for mcol in range(dm):
            expect = f.zeros(dm * 2)
            for r in range(dm):
                if gneg[r, mcol] != 0:
                    expect[r * 2 + 1] = gneg[r, mcol]
            ok = ok and f.equal(Phi[:, 1 * dm + mcol], expect)
            expect2 = f.zeros(dm * 2)
            for r in range(dm):
                if gpos[r, mcol] != 0:
                    expect2[r * 2 + 1] = gpos[r, mcol]
            ok = ok and f.equal(Phin[:, 1 * dm + mcol], expect2)
    _report("criterion 5: braiding symmetricity and displayed values", ok)


def test_criterion_6_biproduct_and_counterexample():
    """decomposition_iso passes on the family corpus; the Taft braided factor
    over kZ_3 fails check_symm_conds and drinfeld_double refuses it."""
    ok = True
    for m, n in FAMILY_CASES:
        f = _field_for(m)
        for d in _admissible_d(m, n):
            _, _, rep = cons.decomposition_iso(m, n, d, f)
            ok = ok and rep["pass"]
    f73 = make_field(7, 3)
    _, B3 = cons.taft_braided_factor(3, f73)
    rep = check_symm_conds(B3)
    ok = ok and not rep["pass"] and rep["agree"]
    try:
        drinfeld_double(B3)
        ok = False
    except SymmetricityViolated:
        pass
    _report("criterion 6: biproduct decompositions + Taft counterexample", ok)


def test_criterion_7_azumaya_suite():
    """azumaya_check passes for End(M) on >= 5 corpus modules and for E_alpha
    at >= 4 sampled alpha; fails for trivial k[x]/(x^2); centers trivial."""
    f = make_field(5, 2)
    Hb, B = cons.exterior_factor(1, 1, (1,), f)
    M = B.module
    s = B.params["s"]
    reg_act = Tensor3(f, (Hb.dim,) * 3,
                      [(i, j, k, v) for i, j, k, v in Hb.mult.entries()])
    reg = induced_coaction(YDModule(Hb, Hb.dim, reg_act, None),
                           cons.r_matrix(Hb, s))
    corpus = [M, YDModule.trivial(Hb, 1), dual_module(M),
              tensor_module(M, M), reg]
    ok = True
    for X in corpus:
        E = end_algebra(X)
        ok = ok and azumaya_check(E)["pass"]
        phi_ee = phi_op(E.module, E.module).to_dense()
        ok = ok and len(center(E, "right", phi_ee)) == 1
        ok = ok and len(center(E, "left", phi_ee)) == 1
    L = cons.biproduct(B)
    for xi in (1, 2, 3, 4):
        a = f.eye(2)
        a[1, 1] = xi
        tw, _ = twisted_module(B, a, verify=False)
        A, _, _, rep = e_alpha_over_biproduct(B, tw, L)
        ok = ok and rep["azumaya"]["pass"]
        ok = ok and rep["center_right"] == 1 and rep["center_left"] == 1
    from hopfcheck.yd import YDAlgebra
    triv = YDModule.plain(f, 2)
    kx = YDAlgebra(triv, Tensor3(f, (2, 2, 2),
                                 [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
                   [1, 0])
    ok = ok and not azumaya_check(kx)["pass"]
    _report("criterion 7: Azumaya suite with trivial centers", ok)


def test_criterion_8_exactness_desk_scale():
    """B = exterior factor (1,1) over F_5: G(D(B)) trivial; solver succeeds
    exactly at xi = 1 among {1,2,3,4}; runtime <= 10 s."""
    t0 = time.time()
    f = make_field(5, 2)
    Hb, B = cons.exterior_factor(1, 1, (1,), f)
    D = drinfeld_double(B)
    ok = len(grouplikes(D.hopf)) == 1
    for xi in (1, 2, 3, 4):
        a = f.eye(2)
        a[1, 1] = xi
        tw, _ = twisted_module(B, a, verify=False)
        Ebyd, Ealg, _ = e_alpha(B, tw)
        th, _, _ = strongly_inner_solver(B, D, tw, Ebyd, Ealg)
        ok = ok and ((th is not None) == (xi == 1))
    elapsed = time.time() - t0
    _report(f"criterion 8: desk-scale exactness ({elapsed:.2f} s <= 10 s)",
            ok and elapsed <= 10)


def test_criterion_9_character_oracle():
    """characters() equals brute force over all p^dim vectors for dim <= 3
    algebras over F_3 and F_5."""
    ok = True
    for p in (3, 5):
        f = make_field(p, 2)
        corpus = [cons.group_algebra(1, f), cons.group_algebra(2, f),
                  cons.group_algebra(3, f),
                  cons.exterior_factor(1, 1, (1,), f)[1]]
        for A in corpus:
            got = [tuple(int(x) for x in c) for c in characters(A)]
            want = [tuple(int(x) for x in c) for c in characters_bruteforce(A)]
            ok = ok and got == want
    _report("criterion 9: character oracle equivalence", ok)


def test_criterion_10_inner_action_and_class_relation():
    """inner_action_iso_check for A = E_beta over F_5 and F_7;
    pi_class_relation_check on sampled pairs."""
    ok = True
    for p in (5, 7):
        f = make_field(p, 2)
        Hb, B = cons.exterior_factor(1, 1, (1,), f)

        def scaling(xi):
            a = f.eye(2)
            a[1, 1] = f.of_int(xi)
            return a

        for xi_b, xi_a in [(2, 3), (3, 2)]:
            twb, _ = twisted_module(B, scaling(xi_b), verify=False)
            Eb, EalgB, _ = e_alpha(B, twb)
            ok = ok and inner_action_iso_check(B, Eb, EalgB,
                                               scaling(xi_a))["pass"]
        for xi_a, xi_b in [(1, 1), (2, 3), (3, 4 % p)]:
            ok = ok and pi_class_relation_check(
                B, scaling(xi_a), scaling(max(xi_b, 1)))["pass"]
    _report("criterion 10: inner-action isomorphism and class relation", ok)


def test_criterion_11_condition_gate():
    """cond_bq_subgr_check passes for >= 3 GL_2(F_5) automorphisms of H(1,2)
    and fails for a constructed violating map."""
    f = make_field(5, 2)
    H = cons.family_hopf(1, 2, (1, 1), f)
    acts = [H.left_mult_matrix(H.basis_vector(i)) for i in range(H.dim)]
    ok = True
    for A in (f.array([[1, 0], [0, 1]]), f.array([[2, 1], [1, 1]]),
              f.array([[0, 1], [4, 0]])):
        alpha = aut_family_matrix(H, A)
        ok = ok and cond_bq_subgr_check(H, alpha, acts, s=1)
    viol = f.eye(H.dim)
    viol[:, 4] = H.basis_vector(2)
    viol[:, 2] = H.basis_vector(4)
    ok = ok and not cond_bq_subgr_check(H, viol, acts, s=1)
    _report("criterion 11: base-level condition gate", ok)
