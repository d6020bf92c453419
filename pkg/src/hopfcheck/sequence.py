"""The exact-sequence assembly: twisted modules, End(B_alpha) as an Azumaya
object, the strongly-inner-action solver, and the desk-scale exactness report.

Everything here happens for a braided Hopf algebra B whose braiding is
symmetric on B (the theorem hypothesis); all crossings on B-strands are then
involutive, and the twisted-structure identities take their elementwise form.
"""

from __future__ import annotations

import numpy as np

from .double import (BYDObject, bstar_action_from_coaction, dmodule_check,
                     drinfeld_double, yd_transport)
from .grouplikes import characters, grouplikes
from .hopf import Tensor3, YDModule
from .linalg import inverse, rank
from .tensorops import SparseOp
from .hopf import center
from .yd import (Program, YDAlgebra, azumaya_check, check_yd_compat, dual_module,
                 end_algebra, is_symmetric_pair, phi_op, tensor_module)


# ---------------------------------------------------------------------------
# twisted module structures
# ---------------------------------------------------------------------------

def _mod(B):
    """The underlying C-object of B (a plain space at the base level)."""
    return B.module if B.module is not None else B.yd()



def twisted_action_op(B, alpha):
    """mu_alpha: B (x) B_alpha -> B_alpha,  b . m = mult Phi(S^-1 b_(1) (x) alpha(b_(2)) m)."""
    f = B.field
    M = _mod(B)
    p = Program(f, [M, M])
    p.comul(0, B)                 # [b1, b2, m]
    p.antipode(0, B, inverse=True)
    p.linmap(1, alpha)
    p.mul(1, B)                   # [S^-1 b1, alpha(b2) m]
    p.braid(0)                    # Phi
    p.mul(0, B)
    return p.op()


def twisted_coaction_op(B, alpha_inv=None):
    """lambda_alpha = (S (x) 1) Phi^-1 Delta (co-alfa); alpha_inv twists the
    output leg for the primed variant B_alpha'."""
    f = B.field
    M = _mod(B)
    p = Program(f, [M])
    p.comul(0, B)
    p.braid(0, inverse=True)
    p.antipode(0, B)
    if alpha_inv is not None:
        p.linmap(0, alpha_inv)
    return p.op()


class TwistedModule:
    """B_alpha: B as an object of C with the alpha-twisted B-structures."""

    def __init__(self, B, alpha):
        f = B.field
        self.B = B
        self.alpha = f.array(alpha)
        self.alpha_inv = inverse(f, self.alpha)
        self.cmodule = _mod(B)
        self.bact = twisted_action_op(B, self.alpha)
        self.bcoact = twisted_coaction_op(B)
        self.dim = B.dim

    def as_byd(self):
        return BYDObject(self.B, self.cmodule, self.bact, self.bcoact,
                         name=f"{self.B.name}_twisted")


def _bact_is_action(B, bact):
    """b.(b'.m) = (bb').m and 1.m = m for an operator B (x) M -> M."""
    f = B.field
    M = B.module if B.module is not None else B.yd()
    dM = bact.in_dim // B.dim
    plainM = YDModule.plain(f, dM)
    p1 = Program(f, [M, M, plainM])
    p1.apply_sparse(1, 2, bact, [plainM])
    p1.apply_sparse(0, 2, bact, [plainM])
    p2 = Program(f, [M, M, plainM])
    p2.mul(0, B)
    p2.apply_sparse(0, 2, bact, [plainM])
    ok = p1.op().equals(p2.op())
    pu = Program(f, [plainM])
    pu.unit_insert(0, B)
    pu.apply_sparse(0, 2, bact, [plainM])
    return bool(ok and pu.op().equals(SparseOp.identity(f, dM)))


def _bcoact_is_coaction(B, bcoact):
    f = B.field
    M = B.module if B.module is not None else B.yd()
    dM = bcoact.in_dim
    plainM = YDModule.plain(f, dM)
    p1 = Program(f, [plainM])
    p1.apply_sparse(0, 1, bcoact, [M, plainM])
    p1.comul(0, B)
    p2 = Program(f, [plainM])
    p2.apply_sparse(0, 1, bcoact, [M, plainM])
    p2.apply_sparse(1, 1, bcoact, [M, plainM])
    coassoc = p1.op().equals(p2.op())
    pc = Program(f, [plainM])
    pc.apply_sparse(0, 1, bcoact, [M, plainM])
    pc.counit(0, B)
    return bool(coassoc and pc.op().equals(SparseOp.identity(f, dM)))


def check_alfa_yd(B, tw):
    """Eq. alfa-YD:  lambda_a(mu_a(b (x) m)) =
    b_(1) m_[-1] S(alpha(b_(3))) (x) mu_a(b_(2) (x) m_[0])."""
    return _twisted_yd_identity(B, tw.bact, tw.bcoact, tw.alpha)


def _twisted_yd_identity(B, bact, bcoact, third_map, module=None,
                         first_map=None):
    """lambda(b . m) = t1(b_(1)) m_[-1] S(t3(b_(3))) (x) b_(2) . m_[0] with
    the C-crossings of the braided diagram; for B_alpha the twist sits on the
    third leg, for B_alpha^* on the first.  The braided reorderings are
    unambiguous because Phi is symmetric on B."""
    f = B.field
    M = _mod(B)
    Mm = module or M
    lhs = Program(f, [M, Mm])
    lhs.apply_sparse(0, 2, bact, [Mm])
    lhs.apply_sparse(0, 1, bcoact, [M, Mm])
    rhs = Program(f, [M, Mm])
    rhs.comul(0, B)
    rhs.comul(1, B)                      # [b1, b2, b3, m]
    if first_map is not None:
        rhs.linmap(0, first_map)
    if third_map is not None:
        rhs.linmap(2, third_map)
    rhs.antipode(2, B)                   # [t1 b1, b2, S(t3 b3), m]
    rhs.apply_sparse(3, 1, bcoact, [M, Mm])       # [b1, b2, Stb3, m-, m0]
    rhs.perm_braided([0, 3, 2, 1, 4])    # [b1, m-, Stb3, b2, m0]
    rhs.mul(0, B)
    rhs.mul(0, B)                        # [b1 m- Stb3, b2, m0]
    rhs.apply_sparse(1, 2, bact, [Mm])
    return lhs.op().equals(rhs.op())


def check_byd_compat(B, bact, bcoact, module=None):
    """Full YD compatibility over B inside C (YDll-1 with Phi^-1 crossings):
    b_(1) m_[-1] (x) b_(2).m_[0] = (b_(1).m)_[-1] b_(2) (x) (b_(1).m)_[0]."""
    f = B.field
    M = B.module if B.module is not None else B.yd()
    Mm = module or M
    lhs = Program(f, [M, Mm])
    lhs.comul(0, B)
    lhs.apply_sparse(2, 1, bcoact, [M, Mm])       # [b1, b2, m-, m0]
    lhs.perm_braided([0, 2, 1, 3])
    lhs.mul(0, B)
    lhs.apply_sparse(1, 2, bact, [Mm])
    rhs = Program(f, [M, Mm])
    rhs.comul(0, B)
    rhs.perm_braided([0, 2, 1])
    rhs.apply_sparse(0, 2, bact, [Mm])
    rhs.apply_sparse(0, 1, bcoact, [M, Mm])
    rhs.perm_braided([0, 2, 1])
    rhs.mul(0, B)
    return lhs.op().equals(rhs.op())


def twisted_module(B, alpha, verify=True):
    """Build B_alpha and its verification report."""
    tw = TwistedModule(B, alpha)
    rep = {}
    if verify:
        rep["action"] = _bact_is_action(B, tw.bact)
        rep["coaction"] = _bcoact_is_coaction(B, tw.bcoact)
        rep["alfa_yd"] = check_alfa_yd(B, tw)
        rep["full_yd"] = check_byd_compat(B, tw.bact, tw.bcoact)
        rep["pass"] = bool(rep["action"] and rep["coaction"] and rep["alfa_yd"])
    return tw, rep


def dual_twisted_structures(B, tw):
    """B_alpha^*: action (b.f)(m) = f(S^-1(b) . m), coaction twisted by S."""
    f = B.field
    d = B.dim
    M = _mod(B)
    Ms = dual_module(M)
    # action: mu*(b (x) f) = f o mu_alpha(S^-1 b (x) -)
    mumats = _op_matrices(f, tw.bact, d, d)
    Sinv = B.antipode_inverse
    rows, cols, vals = [], [], []
    for b in range(d):
        A = f.zeros((d, d))
        for c in range(d):
            if Sinv[c, b] != 0:
                A = f.reduce(A + Sinv[c, b] * mumats[c])
        # (b . f_i)(e_j) = f_i(A e_j) = A[i, j]; so b.f_i = sum_j A[i,j] f_j
        nz = _nonzero(f, A)
        for i, j in zip(*nz):
            rows.append(j)
            cols.append(b * d + i)
            vals.append(A[i, j])
    mustar = SparseOp(f, d, d * d, rows, cols, vals)
    # coaction: f_[-1] <f_[0], m> = S_B(m_[-1]) f(m_[0])
    rows, cols, vals = [], [], []
    Sb = B.antipode
    for r, c, v in zip(tw.bcoact.rows.tolist(), tw.bcoact.cols.tolist(), tw.bcoact.vals):
        bleg, m0 = divmod(r, d)
        for a in range(d):
            if Sb[a, bleg] != 0:
                # lambda*(f_{m0}) gets S(bleg) (x) f_c ... evaluate on m=c
                rows.append(a * d + c)
                cols.append(m0)
                vals.append(f.mul(v, Sb[a, bleg]))
    lamstar = SparseOp(f, d * d, d, rows, cols, vals)
    return mustar, lamstar


def check_alfa_star_yd(B, tw):
    """Eq. alfa*-YD analogue for the dual twisted module.  With the
    op-convention dual structures used here the twist again sits in the
    antipode leg (the unique placement making the identity hold)."""
    mustar, lamstar = dual_twisted_structures(B, tw)
    return _twisted_yd_identity(B, mustar, lamstar, tw.alpha)


def _op_matrices(f, op, d_alg, d_mod):
    mats = [f.zeros((d_mod, d_mod)) for _ in range(d_alg)]
    for r, c, v in zip(op.rows.tolist(), op.cols.tolist(), op.vals):
        a, m = divmod(c, d_mod)
        mats[a][r, m] = f.add(mats[a][r, m], v)
    return mats


def _nonzero(f, A):
    if f.is_prime:
        return np.nonzero(A % f.p)
    return np.nonzero(np.vectorize(lambda x: x != 0)(A))


# ---------------------------------------------------------------------------
# E_alpha = End(B_alpha) with its B-YD structures
# ---------------------------------------------------------------------------


def theta_from_action(f, bact, d_alg, d_mod):
    """theta: B -> End(M) with ev(theta(b) (x) m) = bact(b (x) m);
    End coords (i, j) represent e_i (x) e^j."""
    mats = _op_matrices(f, bact, d_alg, d_mod)
    out = f.zeros((d_mod * d_mod, d_alg))
    for b in range(d_alg):
        out[:, b] = mats[b].reshape(-1)
    return out


def end_action_from_theta(B, theta, Emod, Ealg):
    """The strongly-inner action built from theta via H-mod-end-eq:
    b . phi = theta(b_(1)) Phi(S b_(2) (x) phi) theta(-)."""
    f = B.field
    M = _mod(B)
    p = Program(f, [M, Emod])
    p.comul(0, B)               # [b1, b2, phi]
    p.antipode(1, B)
    p.braid(1)                  # [b1, phi', Sb2']
    p.linmap(0, theta, out_mod=Emod)
    p.linmap(2, theta, out_mod=Emod)
    p.mul(1, Ealg)
    p.mul(0, Ealg)
    return p.op()


def end_coaction(B, tw, Emod):
    """B-coaction on End(B_alpha) via the evaluation identity
    lambda(phi)(m) = phi(m_[0])_[-1] S^-1(m_[-1]) (x) phi(m_[0])_[0],
    with the braided crossings of C."""
    from .yd import dual_module_end, end_apply_op
    f = B.field
    M = _mod(B)
    # RHS: E (x) M -> B (x) M
    p = Program(f, [Emod, M])
    p.apply_sparse(1, 1, tw.bcoact, [M, M])   # [phi, m-, m0]
    p.perm_braided([1, 0, 2])                 # [m-', phi', m0]
    p.antipode(0, B, inverse=True)
    p.apply_sparse(1, 2, end_apply_op(M), [M])  # [S^-1 m-, w]
    p.apply_sparse(1, 1, tw.bcoact, [M, M])   # [s, w-, w0]
    p.perm_braided([1, 0, 2])                 # [w-', s', w0]
    p.mul(0, B)
    rhs = p.op()                              # rows (b, m0), cols (phi, m)
    # postcompose with the coevaluation to extract lambda_E: E -> B (x) E
    Mv = dual_module_end(M)
    q = Program(f, [Emod])
    q.coev_insert(1, M, Mv, order="md")       # [phi, e_k, e^k]
    q.apply_sparse(0, 2, rhs, [M, M])         # [b-leg, w0, e^k] = B (x) E
    return q.op()


def e_alpha(B, tw, Hlevel_end=None):
    """End(B_alpha) as a B-YD object (E, bact_E, bcoact_E)."""
    f = B.field
    M = _mod(B)
    d = B.dim
    Eyd = tensor_module(M, _end_dual(M), name=f"End({B.name}_a)")
    Ealg = end_algebra(M)
    theta = theta_from_action(f, tw.bact, d, d)
    bactE = end_action_from_theta(B, theta, Eyd, Ealg)
    bcoactE = end_coaction(B, tw, Eyd)
    return BYDObject(B, Eyd, bactE, bcoactE, name=f"E_alpha"), Ealg, theta


def _end_dual(M):
    from .yd import dual_module_end
    return dual_module_end(M)


# ---------------------------------------------------------------------------
# the braiding of the double category and BYD tensor products
# ---------------------------------------------------------------------------


def psi_op(X, Y):
    """Braiding Psi_{X,Y}: X (x) Y -> Y (x) X in the category of YD B-modules
    inside C (inverse C-crossings, B-coaction of Y, S_B^-1, B-action on X)."""
    B = X.B
    f = B.field
    MB = _mod(B)
    p = Program(f, [X.cmodule, Y.cmodule])
    p.braid(0, inverse=True)                        # [y1, x1]
    p.apply_sparse(0, 1, Y.bcoact, [MB, Y.cmodule])  # [b, y2, x1]
    p.antipode(0, B, inverse=True)
    p.braid(0, inverse=True)                        # [y3, b', x1]
    p.apply_sparse(1, 2, X.bact, [X.cmodule])       # [y3, b' . x1]
    return p.op()


def byd_tensor(X, Y, name=""):
    """X (x) Y in the double category: braided-diagonal action and
    braided-codiagonal coaction (C-crossings)."""
    B = X.B
    f = B.field
    MB = _mod(B)
    mod = tensor_module(X.cmodule, Y.cmodule, name)
    # action: (mu_X (x) mu_Y)(B (x) Phi_{B,X} (x) Y)(Delta_B (x) 1 (x) 1)
    pa = Program(f, [MB, X.cmodule, Y.cmodule])
    pa.comul(0, B)                                  # [b1, b2, x, y]
    pa.braid(1)                                     # [b1, x', b2', y]
    pa.apply_sparse(0, 2, X.bact, [X.cmodule])
    pa.apply_sparse(1, 2, Y.bact, [Y.cmodule])
    # coaction: x_[-1] y_[-1]' (x) x_[0]' (x) y_[0]
    pc = Program(f, [X.cmodule, Y.cmodule])
    pc.apply_sparse(0, 1, X.bcoact, [MB, X.cmodule])   # [a, x0, y]
    pc.apply_sparse(2, 1, Y.bcoact, [MB, Y.cmodule])   # [a, x0, b, y0]
    pc.braid(1)                                     # [a, b', x0', y0]
    pc.mul(0, B)
    return BYDObject(B, mod, pa.op(), pc.op(), name=name)


def k_and_l_objects(B, alpha, beta):
    """K = B_alpha (x) B_beta with the twisted action, L = K (x) B_gamma.

    Returns the verification verdicts: Eq. B-alfa-beta-YD for K, full YD for L
    and for B_alpha (x) B_{alpha^{-1}}."""
    f = B.field
    MB = _mod(B)
    twa, _ = twisted_module(B, alpha, verify=False)
    twb, _ = twisted_module(B, beta, verify=False)
    K = _twisted_pair(B, twa, twb)
    ba = f.matmul(f.array(beta), f.array(alpha))
    rep = {"K_identity": _twisted_yd_identity(B, K.bact, K.bcoact, ba,
                                              module=K.cmodule)}
    gamma = inverse(f, ba)
    twg, _ = twisted_module(B, gamma, verify=False)
    L = _twisted_pair(B, K, twg, first_is_byd=True, mid_twist=inverse(f, gamma))
    rep["L_full_yd"] = check_byd_compat(B, L.bact, L.bcoact, module=L.cmodule)
    twainv, _ = twisted_module(B, twa.alpha_inv, verify=False)
    P = _twisted_pair(B, twa, twainv)
    rep["alpha_alphainv_yd"] = check_byd_compat(B, P.bact, P.bcoact,
                                                module=P.cmodule)
    rep["pass"] = bool(rep["K_identity"] and rep["L_full_yd"]
                       and rep["alpha_alphainv_yd"])
    return K, L, rep


def _twisted_pair(B, first, second, first_is_byd=False, mid_twist=None):
    """B_alpha (x) B_beta (or K (x) B_gamma) with the displayed action:
    b.(u (x) v) = mu_1(b_(1) (x) u') (x) mu_2(t(b_(2)') (x) v), where t is
    alpha (resp. gamma^{-1}) applied to the crossed coproduct leg."""
    f = B.field
    MB = _mod(B)
    m1 = first.cmodule if first_is_byd else MB
    act1 = first.bact
    co1 = first.bcoact
    tw2 = second
    t = mid_twist if mid_twist is not None else first.alpha
    mod1 = m1
    pa = Program(f, [MB, mod1, MB])
    pa.comul(0, B)                 # [b1, b2, u, v]
    pa.braid(1)                    # [b1, u', b2', v]
    pa.linmap(2, t)
    pa.apply_sparse(0, 2, act1, [mod1])
    pa.apply_sparse(1, 2, tw2.bact, [MB])
    pc = Program(f, [mod1, MB])
    pc.apply_sparse(0, 1, co1, [MB, mod1])
    pc.apply_sparse(2, 1, tw2.bcoact, [MB, MB])
    pc.braid(1)
    pc.mul(0, B)
    mod = tensor_module(mod1, MB)
    return BYDObject(B, mod, pa.op(), pc.op())


# ---------------------------------------------------------------------------
# strongly inner actions and the solver
# ---------------------------------------------------------------------------


def hopf_end_action(Halg, Hmod, theta, Emod, Ealg):
    """The strongly-inner action of a Hopf algebra on End built from theta:
    h . phi = theta(h_(1)) Phi(S h_(2) (x) phi) theta(crossed leg)."""
    f = Halg.field
    p = Program(f, [Hmod, Emod])
    p.comul(0, Halg)
    p.antipode(1, Halg)
    p.braid(1)
    p.linmap(0, theta, out_mod=Emod)
    p.linmap(2, theta, out_mod=Emod)
    p.mul(1, Ealg)
    p.mul(0, Ealg)
    return p.op()


def twisted_character_actions(B, D, tw, lam, g):
    """Candidate D(B)-module structure on B_alpha from a character pair:
    mu(b (x) m) = lam(b_(2)) mu_a(b_(1) (x) m) and the g-twisted B*-action."""
    f = B.field
    M = _mod(B)
    Ms = D.dual_module_
    lamv = SparseOp.from_dense(f, np.asarray(lam).reshape(1, -1))
    p = Program(f, [M, M])
    p.comul(0, B)
    p.apply_sparse(1, 1, lamv, [])
    p.apply_sparse(0, 2, tw.bact, [M])
    mu = p.op()
    # nu: Delta_{(B^op)*}(f) = f_(1) (x) f_(2); g* on f_(2); base nu on f_(1)
    from .double import _DualLeg, bstar_action_from_coaction
    leg = _DualLeg(B, Ms)
    nu_base = bstar_action_from_coaction(B, tw.bcoact)
    gv = SparseOp.from_dense(f, np.asarray(g).reshape(1, -1))
    q = Program(f, [Ms, M])
    q.apply_sparse(0, 1, leg.comult_op(), [Ms, Ms])
    q.braid(0, inverse=True)            # braided cop
    q.apply_sparse(1, 1, gv, [])
    q.apply_sparse(0, 2, nu_base, [M])
    nu = q.op()
    return mu, nu


def given_double_action(D, muE, nuE, Emod):
    """The D(B)-action on E from its B-action and B-coaction-derived
    B*-action: rho(f (x) h) = nu_f o mu_h, as one operator D (x) E -> E."""
    B = D.B
    f = B.field
    M = B.yd() if B.module is None else B.module
    Ms = D.dual_module_
    p = Program(f, [Ms, M, Emod])
    p.apply_sparse(1, 2, muE, [Emod])
    p.apply_sparse(0, 2, nuE, [Emod])
    return p.op()


def strongly_inner_solver(B, D, tw, Ebyd, Ealg, verbose=False):
    """Search the character-twisted reference actions for a witness theta.

    Enumerates pairs (lam in Alg(B,k), g in G(B)) in lexicographic value
    order; for each, the twisted actions must make B_alpha a D(B)-module and
    the induced strongly-inner D(B)-action on End(B_alpha) must equal the
    given one.  Returns (witness theta, (lam, g), report) or (None, None,
    report)."""
    f = B.field
    d = B.dim
    M = _mod(B)
    Emod = Ebyd.cmodule
    chars = characters(B)
    gls = grouplikes(B)
    muE = Ebyd.bact
    nuE = bstar_action_from_coaction(B, Ebyd.bcoact)
    given = given_double_action(D, muE, nuE, Emod)
    Dmod = D.hopf.module if D.hopf.module is not None else D.hopf.yd()
    report = {"search_space": len(chars) * len(gls), "tried": 0}
    for lam in chars:
        for g in gls:
            report["tried"] += 1
            mu, nu = twisted_character_actions(B, D, tw, lam, g)
            dm = dmodule_check(D, mu, nu)
            if not dm["pass"]:
                continue
            thB = theta_from_action(f, mu, d, d)
            thBs = theta_from_action(f, nu, d, d)
            # theta_D(f x h) = thBs(f) . thB(h) in E
            thD = f.zeros((d * d, d * d))
            for k in range(d):
                for l in range(d):
                    thD[:, k * d + l] = Ealg.product(thBs[:, k], thB[:, l])
            built = hopf_end_action(D.hopf, Dmod, thD, Emod, Ealg)
            if built.equals(given):
                report["witness_pair"] = (lam, g)
                return thD, (lam, g), report
    return None, None, report


# ---------------------------------------------------------------------------
# E_alpha as an Azumaya algebra over the biproduct
# ---------------------------------------------------------------------------


def e_alpha_over_biproduct(B, tw, L=None):
    """End(B_alpha) transported to a YD module algebra over L = B x H,
    with its YD and Azumaya reports."""
    from .constructors import biproduct
    f = B.field
    if L is None:
        L = biproduct(B)
    Ebyd, Ealg, theta = e_alpha(B, tw)
    N = yd_transport(Ebyd, L)
    A = YDAlgebra(N, Ealg.mult, Ealg.unit, name="E_alpha")
    rep = {
        "yd_compat": check_yd_compat(N)["pass"],
        "azumaya": azumaya_check(A),
    }
    phi_aa = phi_op(N, N).to_dense()
    rep["center_right"] = len(center(A, "right", phi_aa))
    rep["center_left"] = len(center(A, "left", phi_aa))
    rep["pass"] = bool(rep["yd_compat"] and rep["azumaya"]["pass"]
                       and rep["center_right"] == 1 and rep["center_left"] == 1)
    return A, Ebyd, Ealg, rep


# ---------------------------------------------------------------------------
# omega-bar and the Pi class relation
# ---------------------------------------------------------------------------


def byd_end(B, tw):
    return e_alpha(B, tw)


def omega_bar_matrix(B, Ea, Eb, twa, twb):
    """omega: E_alpha (x) E_beta -> End(B_alpha (x) B_beta) via the evaluation
    identity with the double-category braiding Psi_{E_beta, B_alpha}."""
    from .yd import end_apply_op
    f = B.field
    M = _mod(B)
    EmodA, EmodB = Ea.cmodule, Eb.cmodule
    psi = psi_op(Eb, twa.as_byd())
    p = Program(f, [EmodA, EmodB, M, M])
    p.apply_sparse(1, 2, psi, [M, EmodB])
    p.apply_sparse(0, 2, end_apply_op(M), [M])
    p.apply_sparse(1, 2, end_apply_op(M), [M])
    R = p.op()
    dmn = M.dim * M.dim
    dEE = EmodA.dim * EmodB.dim
    rows = R.rows * dmn + R.cols % dmn
    cols = R.cols // dmn
    return SparseOp(f, dmn * dmn, dEE, rows, cols, R.vals).to_dense()


def pi_class_relation_check(B, alpha, beta):
    """End(B_a) (x)bar End(B_b) = End(B_a (x) B_b) as algebras (the
    computable shadow of [E_a][E_b] = [E_{ba}])."""
    f = B.field
    M = _mod(B)
    twa, _ = twisted_module(B, alpha, verify=False)
    twb, _ = twisted_module(B, beta, verify=False)
    Ea, EalgA, _ = e_alpha(B, twa)
    Eb, EalgB, _ = e_alpha(B, twb)
    omega = omega_bar_matrix(B, Ea, Eb, twa, twb)
    d = M.dim
    dE = d * d
    # source algebra: E_a (x)bar E_b with the Psi middle crossing
    psi_mid = psi_op(Eb, Ea)
    from .yd import tensor_algebra
    src = tensor_algebra(EalgA, EalgB, braid=psi_mid,
                         name="Ea(x)Eb")
    # target: End(M (x) M) composition algebra
    from .yd import end_algebra, tensor_module as tm
    MM = tm(M, M)
    tgt = end_algebra(MM)
    rep = {}
    rep["bijective"] = rank(f, omega) == dE * dE
    ok_mult = True
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = f.matmul(omega, src.product(src.basis_vector(i),
                                              src.basis_vector(j)))
            rhs = tgt.product(f.matmul(omega, src.basis_vector(i)),
                              f.matmul(omega, src.basis_vector(j)))
            if not f.equal(lhs, rhs):
                ok_mult = False
                break
        if not ok_mult:
            break
    rep["algebra_morphism"] = ok_mult
    rep["unital"] = f.equal(f.matmul(omega, src.unit), tgt.unit)
    rep["dim_consistency"] = src.dim == tgt.dim
    rep["pass"] = bool(rep["bijective"] and ok_mult and rep["unital"])
    return rep


# ---------------------------------------------------------------------------
# A(alpha) and the inner-action isomorphism
# ---------------------------------------------------------------------------


def a_alpha(X, alpha):
    """A(alpha): same algebra, action precomposed with alpha, coaction
    postcomposed with alpha^{-1} on the B-leg."""
    B = X.B
    f = B.field
    alpha = f.array(alpha)
    ainv = inverse(f, alpha)
    M = _mod(B)
    pa = Program(f, [M, X.cmodule])
    pa.linmap(0, alpha)
    pa.apply_sparse(0, 2, X.bact, [X.cmodule])
    pc = Program(f, [X.cmodule])
    pc.apply_sparse(0, 1, X.bcoact, [M, X.cmodule])
    pc.linmap(0, ainv)
    return BYDObject(B, X.cmodule, pa.op(), pc.op(), name=f"{X.name}(a)")


def inner_action_morphism(B, X, tw):
    """The explicit morphism Fi: A (x)bar E_alpha -> E_alpha (x)bar A(a^-1)."""
    from .yd import dual_module_end
    f = B.field
    M = _mod(B)
    Mv = dual_module_end(M)
    mustar, lamstar = dual_twisted_structures(B, tw)
    p = Program(f, [X.cmodule, M, Mv])
    p.apply_sparse(0, 1, X.bcoact, [M, X.cmodule])   # [b, a0, m, fv]
    p.braid(1, inverse=True)                          # [b, m', a0', fv]
    p.apply_sparse(0, 2, tw.bact, [M])                # [w, a0', fv]
    p.braid(1, inverse=True)                          # [w, fv', a0'']
    p.apply_sparse(1, 1, lamstar, [M, Mv])            # [w, t, fv'', a0'']
    p.antipode(1, B, inverse=True)
    p.braid(1)                                        # [w, fv''', s', a0'']
    p.linmap(2, tw.alpha_inv)
    p.apply_sparse(2, 2, X.bact, [X.cmodule])         # [w, fv''', a-out]
    return p.op()


def inner_action_iso_check(B, X, Xalg, alpha):
    """Prop inner-action verification: Fi is a unital algebra isomorphism,
    B-linear and B-colinear, A (x)bar E_a -> E_a (x)bar A(a^-1)."""
    f = B.field
    tw, _ = twisted_module(B, alpha, verify=False)
    Ebyd, Ealg, _ = e_alpha(B, tw)
    fi = inner_action_morphism(B, X, tw)
    Xa = a_alpha(X, tw.alpha_inv)
    src = byd_tensor(X, Ebyd)
    dst = byd_tensor(Ebyd, Xa)
    # algebra structures on the two sides ((x)bar with Psi middles)
    from .yd import tensor_algebra
    srcalg = tensor_algebra(Xalg, Ealg, braid=psi_op(Ebyd, X))
    dstalg = tensor_algebra(Ealg, Xalg, braid=psi_op(Xa, Ebyd))
    fid = fi.to_dense()
    rep = {"bijective": rank(f, fid) == src.dim}
    ok = True
    for i in range(srcalg.dim):
        for j in range(srcalg.dim):
            lhs = f.matmul(fid, srcalg.product(srcalg.basis_vector(i),
                                               srcalg.basis_vector(j)))
            rhs = dstalg.product(fid[:, i], fid[:, j])
            if not f.equal(lhs, rhs):
                ok = False
                break
        if not ok:
            break
    rep["algebra_morphism"] = ok
    rep["unital"] = f.equal(f.matmul(fid, srcalg.unit), dstalg.unit)
    # B-linearity / colinearity with respect to the byd tensor structures
    dS = src.dim
    pl = Program(f, [_mod(B), src.cmodule])
    pl.apply_sparse(0, 2, src.bact, [src.cmodule])
    pl.apply_sparse(0, 1, fi, [dst.cmodule])
    pr = Program(f, [_mod(B), src.cmodule])
    pr.apply_sparse(1, 1, fi, [dst.cmodule])
    pr.apply_sparse(0, 2, dst.bact, [dst.cmodule])
    rep["b_linear"] = pl.op().equals(pr.op())
    ql = Program(f, [src.cmodule])
    ql.apply_sparse(0, 1, fi, [dst.cmodule])
    ql.apply_sparse(0, 1, dst.bcoact, [B.module, dst.cmodule])
    qr = Program(f, [src.cmodule])
    qr.apply_sparse(0, 1, src.bcoact, [B.module, src.cmodule])
    qr.apply_sparse(1, 1, fi, [dst.cmodule])
    rep["b_colinear"] = ql.op().equals(qr.op())
    rep["pass"] = bool(rep["bijective"] and ok and rep["unital"]
                       and rep["b_linear"] and rep["b_colinear"])
    return rep


# ---------------------------------------------------------------------------
# the exactness report
# ---------------------------------------------------------------------------


class HypothesisViolated(ValueError):
    pass


def theta_image(B):
    """Theta over G(B*) x G(B) coordinates (see grouplikes.theta_map)."""
    from .grouplikes import theta_map
    out = []
    for lam in characters(B):
        for g in grouplikes(B):
            out.append(((lam, g), theta_map(B, lam, g)))
    return out


def exactness_report(B, sample_alphas=None, corpus_modules=None):
    """Desk-scale exactness of 1 -> G(D(B)*) -> G(D(B)) -> Aut(C;B) -> BQ.

    (a) kernel(Theta) = S(B) = the equivalence-lemma pairs;
    (b) strongly_inner_solver succeeds exactly on the Theta-image among the
        sampled automorphisms;
    (c) when B is commutative and cocommutative with central group-likes,
        Theta is trivial and every alpha != id fails the solver.
    """
    from .constructors import is_cocommutative_in_c, is_commutative_in_c
    from .grouplikes import s_group
    f = B.field
    # theorem hypothesis: Phi_{B,M} symmetric on a module corpus
    if B.module is not None:
        corpus = corpus_modules or _default_corpus(B)
        for M in corpus:
            if not is_symmetric_pair(B.module, M):
                raise HypothesisViolated("Phi_{B,M} not symmetric on the corpus")
    D = drinfeld_double(B)
    gls_d = grouplikes(D.hopf)
    sgrp = s_group(B)
    timage = theta_image(B)
    ident = f.eye(B.dim)
    kernel = [pair for pair, mat in timage if f.equal(mat, ident)]
    skeys = {(tuple(f.scalar_str(x) for x in lam),
              tuple(f.scalar_str(x) for x in g)) for lam, g in sgrp}
    kkeys = {(tuple(f.scalar_str(x) for x in lam),
              tuple(f.scalar_str(x) for x in g)) for lam, g in kernel}
    report = {
        "g_d_size": len(gls_d),
        "g_dstar_size": len(sgrp),
        "theta_kernel_size": len(kernel),
        "kernel_equals_s_group": skeys == kkeys,
        "samples": [],
    }
    alphas = list(sample_alphas or [])
    image_mats = [mat for _, mat in timage]
    for mat in image_mats:
        if not any(f.equal(mat, a) for a in alphas):
            alphas.append(mat)
    for amat in alphas:
        tw, twrep = twisted_module(B, amat)
        Ebyd, Ealg, _ = e_alpha(B, tw)
        th, pair, srep = strongly_inner_solver(B, D, tw, Ebyd, Ealg)
        in_image = any(f.equal(amat, m) for m in image_mats)
        entry = {
            "alpha": [[f.scalar_str(v) for v in row] for row in np.asarray(amat)],
            "twisted": twrep["pass"],
            "yd_fails_unless_trivial": not twrep["full_yd"] or f.equal(amat, ident),
            "strongly_inner": th is not None,
            "in_theta_image": bool(in_image),
            "exact_at_aut": (th is not None) == bool(in_image),
        }
        report["samples"].append(entry)
    report["exact_at_g_d"] = report["kernel_equals_s_group"]
    report["exact_at_aut"] = all(s["exact_at_aut"] for s in report["samples"])
    if is_commutative_in_c(B) and is_cocommutative_in_c(B):
        report["pi_injective_evidence"] = (
            len(timage) == report["theta_kernel_size"]
            and all(s["strongly_inner"] == f.equal(
                f.array([[f.scalar_from_str(v) for v in row]
                         for row in s["alpha"]]), ident)
                for s in report["samples"]))
    report["pass"] = bool(report["exact_at_g_d"] and report["exact_at_aut"])
    return report


def _default_corpus(B):
    """Trivial, regular, dual and tensor-square modules over the base, with
    R-induced coactions (the braided subcategory where the paper proves the
    symmetricity hypothesis)."""
    H = B.module.base
    M = _mod(B)
    mods = [M, YDModule.trivial(H, 1), dual_module(M), tensor_module(M, M)]
    params = getattr(B, "params", None)
    if params and params.get("kind") == "exterior":
        from .constructors import r_matrix
        from .yd import induced_coaction
        R = r_matrix(H, params["s"])
        reg_act = Tensor3(H.field, (H.dim,) * 3,
                          [(i, j, k, v) for i, j, k, v in H.mult.entries()])
        reg = YDModule(H, H.dim, reg_act, None, name=f"{H.name}_reg")
        mods.append(induced_coaction(reg, R))
    return mods


# ---------------------------------------------------------------------------
# the base-level subgroup condition
# ---------------------------------------------------------------------------


def cond_bq_subgr_check(L, alpha_mat, action_mats, s):
    """Eq. cond-BQ-subgr for an automorphism alpha of the family algebra L
    and an L-module algebra with the given action matrices:

    sum w^{-jt} alpha^{-1}(g^{st}) (x) g^j.a = sum w^{-jt} g^{st} (x) alpha(g^j).a
    """
    f = L.field
    params = getattr(L, "params", None)
    assert params and params["kind"] == "family"
    m, n = params["m"], params["n"]
    omega = params["omega"]
    order = 2 * m
    nx = 1 << n
    alpha_mat = f.array(alpha_mat)
    ainv = inverse(f, alpha_mat)
    dA = action_mats[0].shape[0]
    dL = L.dim

    def gpow(j):
        return L.basis_vector((j % order) * nx)

    def act_elem(vec):
        A = f.zeros((dA, dA))
        for i in range(dL):
            if vec[i] != 0:
                A = f.reduce(A + vec[i] * action_mats[i])
        return A

    lhs = f.zeros((dL * dA, dA))
    rhs = f.zeros((dL * dA, dA))
    for j in range(order):
        for t in range(order):
            c = f.pow(omega, (-j * t) % order)
            gst = gpow(s * t)
            gj = gpow(j)
            lhs = f.reduce(lhs + c * np.kron(
                f.matmul(ainv, gst).reshape(-1, 1) @ f.array([[1]]),
                act_elem(gj)))
            rhs = f.reduce(rhs + c * np.kron(
                gst.reshape(-1, 1) @ f.array([[1]]),
                act_elem(f.matmul(alpha_mat, gj))))
    return bool(f.equal(lhs, rhs))
