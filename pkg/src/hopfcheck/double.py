"""Drinfel'd doubles of (braided) Hopf algebras and the module transport.

D(B) = (B^op)* >< B lives in the same YD category as B.  The multiplication
is assembled from the straightening rule

    (1 >< h)(f >< 1) = sum f(S^-1(h_(3)) . e_k . h_(1)) e^k >< h_(2)

with braidings inserted along a fixed strand routing; the construction is
gated on Phi_{B,B} being symmetric, which by the equivalence lemma makes all
crossings on B/B* strands involutive, so the routing is convention-free.
The antipode is S_D = mult_D o ((eta (x) S_B) (x) (S* (x) eta)) o Phi, with
S* the antipode of (B^op)*; Hopf-antipode uniqueness pins it.
"""

from __future__ import annotations

import numpy as np

from .hopf import HopfAlgebra, Tensor3, YDModule
from .tensorops import SparseOp
from .yd import (Program, check_module_axioms, dual_module, phi_op,
                 tensor_module, _is_plain)


class SymmetricityViolated(ValueError):
    pass


def _sym(op_fwd, op_bwd, dim, field):
    return op_fwd.then(op_bwd).equals(SparseOp.identity(field, dim))


def check_symm_conds(B):
    """Symmetricity of Phi on B,B / B*,B* / B,B* (equivalent by the lemma;
    all three are computed independently)."""
    M = B.yd() if B.module is None else B.module
    Ms = dual_module(M)
    f = B.field
    rep = {
        "BB": _sym(phi_op(M, M), phi_op(M, M), M.dim * M.dim, f),
        "B*B*": _sym(phi_op(Ms, Ms), phi_op(Ms, Ms), Ms.dim * Ms.dim, f),
        "BB*": _sym(phi_op(M, Ms), phi_op(Ms, M), M.dim * Ms.dim, f),
    }
    rep["agree"] = len({rep["BB"], rep["B*B*"], rep["BB*"]}) == 1
    rep["pass"] = rep["BB"] and rep["B*B*"] and rep["BB*"]
    return rep


def _dual_side_ops(B):
    """Operator views of (B^op)*: multiplication, comultiplication (braided
    cop), unit/counit vectors and antipode matrix."""
    f = B.field
    d = B.dim
    mult_bs = B.comult_op().transpose()          # Delta_B^T : B* (x) B* -> B*
    delta_bs = B.mult_op().transpose()           # nabla_B^T : B* -> B* (x) B*
    unit_bs = B.counit.copy()                    # eps_B as an element of B*
    counit_bs = B.unit.copy()                    # evaluation at 1_B
    s_star = f.reduce(B.antipode_inverse.T.copy())
    return mult_bs, delta_bs, unit_bs, counit_bs, s_star


class _DualLeg:
    """Just enough of the HopfAlgebra operator interface for Program calls."""

    def __init__(self, B, module):
        f = B.field
        self.field = f
        self.dim = B.dim
        self.module = module
        (self._mult, self._delta, self._unit, self._counit, self.antipode) = \
            _dual_side_ops(B)
        self._cache = {}

    def mult_op(self):
        return self._mult

    def comult_op(self):
        return self._delta

    def unit_op(self):
        return SparseOp.from_dense(self.field, self._unit.reshape(-1, 1))

    def counit_op(self):
        return SparseOp.from_dense(self.field, self._counit.reshape(1, -1))

    def yd(self):
        return self.module


class DoubleData:
    """The double D(B) as a HopfAlgebra plus provenance and cross actions."""

    def __init__(self, hopf, B, Ms, straightening, act_left, act_right):
        self.hopf = hopf
        self.B = B
        self.dual_module_ = Ms
        self.straightening = straightening      # Xi : B (x) B* -> B* (x) B
        self.act_left = act_left                # |>: B (x) B* -> B*
        self.act_right = act_right              # <|: B (x) B* -> B
        self.dim = hopf.dim

    def __getattr__(self, item):
        return getattr(self.hopf, item)


def straightening_op(B):
    """Xi: B (x) B* -> B* (x) B implementing (1><h)(f><1)."""
    M = B.yd() if B.module is None else B.module
    Ms = dual_module(M)
    f = B.field
    p = Program(f, [M, Ms])                 # [h, f]
    p.comul(0, B)
    p.comul(1, B)                           # [h1, h2, h3, f]
    p.antipode(2, B, inverse=True)          # [h1, h2, s3, f]
    p.coev_insert(0, M, Ms, order="md")     # [u, u*, h1, h2, s3, f]
    p.perm_braided([1, 3, 4, 0, 2, 5])      # [u*, h2, s3, u, h1, f]
    p.mul(2, B)                             # [u*, h2, s3 u, h1, f]
    p.mul(2, B)                             # [u*, h2, P, f]
    p.braid(2)                              # ev-bar = ev o Phi
    p.pair(2)                               # [u*, h2]
    return p.op()


def drinfeld_double(B, check_symmetry=True):
    """D(B) = (B^op)* >< B; requires Phi_{B,B} symmetric."""
    f = B.field
    d = B.dim
    if check_symmetry:
        rep = check_symm_conds(B)
        if not rep["pass"]:
            raise SymmetricityViolated(f"braiding not symmetric on B: {rep}")
    M = B.yd() if B.module is None else B.module
    Ms = dual_module(M)
    leg = _DualLeg(B, Ms)
    xi = straightening_op(B)
    dim = d * d

    # multiplication: (f x h)(f' x h') = f . Xi_1(h, f') x Xi_2(h, f') h'
    pm = Program(f, [Ms, M, Ms, M])
    pm.apply_sparse(1, 2, xi, [Ms, M])      # [f, f'', h'', h']
    pm.apply_sparse(0, 2, leg.mult_op(), [Ms])
    pm.mul(1, B)
    mop = pm.op()
    mult = Tensor3(f, (dim,) * 3,
                   arrays=(mop.cols // dim, mop.cols % dim, mop.rows, mop.vals))

    # comultiplication: codiagonal with the braided cop on the dual leg
    pc = Program(f, [Ms, M])
    pc.apply_sparse(0, 1, leg.comult_op(), [Ms, Ms])
    pc.braid(0, inverse=True)               # Delta_{(B^op)*} = Phi^-1 Delta_{B*}
    pc.comul(2, B)                          # [f1, f2, h1, h2]
    pc.braid(1)                             # [f1, h1', f2', h2]
    cop = pc.op()
    comult = Tensor3(f, (dim,) * 3,
                     arrays=(cop.cols, cop.rows // dim, cop.rows % dim, cop.vals))

    unit = f.reduce(np.kron(B.counit, B.unit))
    counit = f.reduce(np.kron(B.unit, B.counit))

    # antipode via the anti-decomposition S(f x h) = (1 x S h)(S* f x 1)
    ps = Program(f, [Ms, M])
    ps.braid(0)                             # [h', f']
    ps.antipode(0, B)
    ps.linmap(1, leg.antipode)
    ps.unit_insert(0, leg)                  # [eta*, S h, S* f]
    ps.unit_insert(3, B)                    # [eta*, S h, S* f, eta]
    ps.apply_sparse(0, 4, mop, [Ms, M])
    S = f.zeros((dim, dim))
    for r, c, v in zip(ps.op().rows.tolist(), ps.op().cols.tolist(), ps.op().vals):
        S[r, c] = f.add(S[r, c], v)

    module = tensor_module(Ms, M) if not _is_plain(M) else None
    labels = [f"{fl}><{hl}" for fl in [l + "*" for l in B.labels] for hl in B.labels]
    hopf = HopfAlgebra(f, labels, mult, unit, comult, counit, S,
                       module=module, name=f"D({B.name})")

    # cross actions as the counit projections of the straightening
    pa = Program(f, [M, Ms])
    pa.apply_sparse(0, 2, xi, [Ms, M])
    pa.counit(1, B)
    act_left = pa.op()
    pb = Program(f, [M, Ms])
    pb.apply_sparse(0, 2, xi, [Ms, M])
    pb.apply_sparse(0, 1, leg.counit_op(), [])
    act_right = pb.op()
    return DoubleData(hopf, B, Ms, xi, act_left, act_right)


def one_s_identity(D):
    """Eq-style sanity: S_D(eta_{B*} (x) b) = eta_{B*} (x) S_B(b)."""
    B = D.B
    f = B.field
    d = B.dim
    for b in range(d):
        vec = f.zeros(d * d)
        for i in range(d):
            if B.counit[i] != 0:
                vec[i * d + b] = B.counit[i]
        got = f.matmul(D.hopf.antipode, vec)
        want = f.zeros(d * d)
        sb = B.antipode[:, b]
        for i in range(d):
            for j in range(d):
                if B.counit[i] != 0 and sb[j] != 0:
                    want[i * d + j] = f.add(want[i * d + j],
                                            f.mul(B.counit[i], sb[j]))
        if not f.equal(got, want):
            return False
    return True


# ---------------------------------------------------------------------------
# D(B)-modules versus YD B-objects
# ---------------------------------------------------------------------------


class BYDObject:
    """An object of the double category: a YD module over the base H carrying
    a B-action and a B-coaction (a YD B-module inside C)."""

    def __init__(self, B, cmodule, bact, bcoact, name=""):
        self.B = B
        self.cmodule = cmodule          # YDModule over the base H
        self.dim = cmodule.dim
        self.bact = bact                # SparseOp B (x) M -> M
        self.bcoact = bcoact            # SparseOp M -> B (x) M
        self.name = name

    def bact_matrix(self, bvec):
        f = self.B.field
        d = self.dim
        out = f.zeros((d, d))
        bvec = np.asarray(bvec)
        for r, c, v in zip(self.bact.rows.tolist(), self.bact.cols.tolist(),
                           self.bact.vals):
            b, m = divmod(c, d)
            if bvec[b] != 0:
                out[r, m] = f.add(out[r, m], f.mul(v, bvec[b]))
        return out


def regular_byd(B):
    """B itself with the regular action and the adjoint coaction."""
    f = B.field
    M = B.yd() if B.module is None else B.module
    # adjoint coaction: b -> b_(1) S(b_(3)) (x) b_(2)
    p = Program(f, [M])
    p.comul(0, B)
    p.comul(1, B)            # [b1, b2, b3]
    p.antipode(2, B)
    p.braid(1)               # [b1, Sb3', b2']
    p.mul(0, B)
    bcoact = p.op()
    return BYDObject(B, M, B.mult_op(), bcoact, name=f"{B.name}_reg")


def bstar_action_from_coaction(B, bcoact):
    """nu(f (x) n) = <f, S_B^-1(n_[-1])> n_[0]  (module transport H*mod)."""
    f = B.field
    M = B.yd() if B.module is None else B.module
    Ms = dual_module(M)
    dM = bcoact.in_dim
    plainM = YDModule.plain(f, dM)
    p = Program(f, [Ms, plainM])
    p.apply_sparse(1, 1, bcoact, [M, plainM])
    p.linmap(1, B.antipode_inverse)
    p.pair(0)
    return p.op()


def bcoaction_from_bstar_action(B, nu):
    """lambda(m) = sum_k S_B(e_k) (x) (e^k . m) (inverse transport)."""
    f = B.field
    d = B.dim
    dM = nu.out_dim
    rows, cols, vals = [], [], []
    numats = _action_matrices(f, nu, d, dM)
    for k in range(d):
        Sek = B.antipode[:, k]
        A = numats[k]
        for i in range(d):
            if Sek[i] == 0:
                continue
            nz = np.nonzero(A % f.p) if f.is_prime else np.nonzero(
                np.vectorize(lambda x: x != 0)(A))
            for r, c in zip(*nz):
                rows.append(i * dM + r)
                cols.append(c)
                vals.append(f.mul(Sek[i], A[r, c]))
    return SparseOp(f, d * dM, dM, rows, cols, vals)


def _action_matrices(f, act_op, d_alg, d_mod):
    mats = [f.zeros((d_mod, d_mod)) for _ in range(d_alg)]
    for r, c, v in zip(act_op.rows.tolist(), act_op.cols.tolist(), act_op.vals):
        a, m = divmod(c, d_mod)
        mats[a][r, m] = f.add(mats[a][r, m], v)
    return mats


def dmodule_check(D, mu, nu):
    """The straightening compatibility making (mu, nu) a D(B)-module:
    mu_b o nu_f = sum nu_{f'} o mu_{b'} over Xi(b (x) f) = sum f' (x) b'."""
    B = D.B
    f = B.field
    M = B.yd() if B.module is None else B.module
    Ms = D.dual_module_
    dM = mu.out_dim
    plainM = YDModule.plain(f, dM)
    lhs = Program(f, [M, Ms, plainM])
    lhs.apply_sparse(1, 2, nu, [plainM])
    lhs.apply_sparse(0, 2, mu, [plainM])
    rhs = Program(f, [M, Ms, plainM])
    rhs.apply_sparse(0, 2, D.straightening, [Ms, M])
    rhs.apply_sparse(1, 2, mu, [plainM])
    rhs.apply_sparse(0, 2, nu, [plainM])
    compat = lhs.op().equals(rhs.op())
    # direct check: rho(f x h) = nu_f mu_h is a D(B)-module structure
    dmats = _dmodule_action_matrices(D, mu, nu)
    act = []
    for a, A in enumerate(dmats):
        nz = np.nonzero(A % f.p) if f.is_prime else np.nonzero(
            np.vectorize(lambda x: x != 0)(A))
        for r, c in zip(*nz):
            act.append((a, c, r, A[r, c]))
    mod = YDModule(D.hopf, dM, Tensor3(f, (D.dim, dM, dM), act),
                   Tensor3(f, (dM, D.dim, dM), []), name="dmod")
    direct = check_module_axioms(mod)
    return {"straightening": bool(compat), "direct": bool(direct),
            "pass": bool(compat and direct)}


def _dmodule_action_matrices(D, mu, nu):
    """Action matrices of the D(B)-basis (f_a x e_b): nu_{f_a} o mu_{e_b}."""
    B = D.B
    f = B.field
    d = B.dim
    dM = mu.out_dim
    mumats = _action_matrices(f, mu, d, dM)
    numats = _action_matrices(f, nu, d, dM)
    out = []
    for a in range(d):
        for b in range(d):
            out.append(f.matmul(numats[a], mumats[b]))
    return out


def yd_to_dmodule(D, X):
    """A YD B-object becomes a D(B)-module via (mu, nu from the coaction)."""
    mu = X.bact
    nu = bstar_action_from_coaction(D.B, X.bcoact)
    return mu, nu


def dmodule_to_yd(D, mu, nu, cmodule=None):
    """Inverse functor: coaction recovered from the B*-action."""
    bcoact = bcoaction_from_bstar_action(D.B, nu)
    M = cmodule or YDModule.plain(D.B.field, mu.out_dim)
    return BYDObject(D.B, M, mu, bcoact)


def dmodule_braiding(D, mu1, nu1, mu2, nu2, M1, M2):
    """Braiding of two D(B)-modules: Phi_{M,N} o (R_D acting), with
    R_D = sum_k (eta x e_k) (x) (e^k x eta)."""
    B = D.B
    f = B.field
    d = B.dim
    d1, d2 = mu1.out_dim, nu2.out_dim
    m1 = _action_matrices(f, mu1, d, d1)
    n2 = _action_matrices(f, nu2, d, d2)
    acted = f.zeros((d1 * d2, d1 * d2))
    for k in range(d):
        acted = f.reduce(acted + f.kron(m1[k], n2[k]))
    swap = phi_op(M1, M2).to_dense()
    return f.matmul(swap, acted)


# ---------------------------------------------------------------------------
# transport to the biproduct
# ---------------------------------------------------------------------------


def yd_transport(X, L=None):
    """B-YD object inside C -> YD module over the biproduct L = B x H.

    action (b x h) . m = b |> (h |> m); coaction splits through the B- and
    H-coactions.  Returns a YDModule over L (build L with biproduct(B) and
    pass it in to avoid rebuilding).
    """
    from .constructors import biproduct
    B = X.B
    H = B.module.base
    f = B.field
    if L is None:
        L = biproduct(B)
    M = X.cmodule
    dM = X.dim
    db, dh = B.dim, H.dim
    bmats = _action_matrices(f, X.bact, db, dM)
    hmats = M.basis_action_matrices()
    act = []
    for bi in range(db):
        for hj in range(dh):
            A = f.matmul(bmats[bi], hmats[hj])
            nz = np.nonzero(A % f.p) if f.is_prime else np.nonzero(
                np.vectorize(lambda x: x != 0)(A))
            for r, c in zip(*nz):
                act.append((bi * dh + hj, c, r, A[r, c]))
    # coaction: m -> (m_[-1]B x (m_[0]B)_[-1]H) (x) (m_[0]B)_[0]H
    coact = []
    co_b = {}
    for r, c, v in zip(X.bcoact.rows.tolist(), X.bcoact.cols.tolist(), X.bcoact.vals):
        b, m0 = divmod(r, dM)
        co_b.setdefault(c, []).append((b, m0, v))
    co_h = {}
    for i, a, j, v in M.coact.entries():
        co_h.setdefault(i, []).append((a, j, v))
    for m_in, blist in co_b.items():
        for b, m0, v in blist:
            for a, j, v2 in co_h.get(m0, ()):
                coact.append((m_in, b * dh + a, j, f.mul(v, v2)))
    return YDModule(L, dM, Tensor3(f, (L.dim, dM, dM), act),
                    Tensor3(f, (dM, L.dim, dM), coact), name=X.name)


def yd_transport_inverse(B, L, N):
    """YD module over L = B x H -> B-YD object inside C."""
    H = B.module.base
    f = B.field
    db, dh = B.dim, H.dim
    dM = N.dim
    lm = N.basis_action_matrices()
    # action of (b x 1); of (1 x h) likewise via the unit coordinates
    bact_entries = []
    hact_entries = []
    for bi in range(db):
        A = f.zeros((dM, dM))
        for hj in range(dh):
            if H.unit[hj] != 0:
                A = f.reduce(A + H.unit[hj] * lm[bi * dh + hj])
        nz = np.nonzero(A % f.p) if f.is_prime else np.nonzero(
            np.vectorize(lambda x: x != 0)(A))
        for r, c in zip(*nz):
            bact_entries.append((bi, c, r, A[r, c]))
    for hj in range(dh):
        A = f.zeros((dM, dM))
        for bi in range(db):
            if B.unit[bi] != 0:
                A = f.reduce(A + B.unit[bi] * lm[bi * dh + hj])
        nz = np.nonzero(A % f.p) if f.is_prime else np.nonzero(
            np.vectorize(lambda x: x != 0)(A))
        for r, c in zip(*nz):
            hact_entries.append((hj, c, r, A[r, c]))
    bco, hco = [], []
    for i, a, j, v in N.coact.entries():
        bi, hj = divmod(a, dh)
        ceps = H.counit[hj]
        if ceps != 0:
            bco.append((i, bi, j, f.mul(v, ceps)))
        beps = B.counit[bi]
        if beps != 0:
            hco.append((i, hj, j, f.mul(v, beps)))
    M = YDModule(H, dM, Tensor3(f, (dh, dM, dM), hact_entries),
                 Tensor3(f, (dM, dh, dM), hco), name=N.name)
    bact_t = Tensor3(f, (db, dM, dM), bact_entries)
    bact = SparseOp(f, dM, db * dM, bact_t.k, bact_t.i * dM + bact_t.j, bact_t.v)
    bco_t = Tensor3(f, (dM, db, dM), bco)
    bcoact = SparseOp(f, db * dM, dM, bco_t.j * dM + bco_t.k, bco_t.i, bco_t.v)
    return BYDObject(B, M, bact, bcoact, name=N.name)
