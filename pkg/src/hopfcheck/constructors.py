"""Closed-form builders: group algebras, Taft algebras, the pointed family
H(m, n, d), its braided exterior factor, quasitriangular structures R_s^n,
Radford biproducts and the decomposition isomorphism.

All presented algebras use the PBW basis g^a x_1^{e_1}...x_n^{e_n}, g-power
major and x multi-index lexicographic minor, so serialized output is stable.
Coproducts and antipodes are defined on generators and extended (anti-)
multiplicatively; the axiom gate re-verifies every constructor output.
"""

from __future__ import annotations

import numpy as np

from .axioms import AxiomFailure, verify_hopf_axioms
from .fields import RootOrderUnavailable
from .hopf import HopfAlgebra, NotConvolutionInvertible, Tensor3, YDModule, convolution_inverse
from .linalg import rank
from .yd import (Program, RMatrixData, YDAlgebra, induced_coaction, phi_op,
                 tensor_algebra)


class NoAdmissibleS(ValueError):
    pass


class InadmissibleS(ValueError):
    pass


def group_algebra(r, field, name=None):
    """kZ_r with basis g^0..g^{r-1}."""
    f = field
    mult = [(a, b, (a + b) % r, f.one()) for a in range(r) for b in range(r)]
    unit = [f.one()] + [f.zero()] * (r - 1)
    comult = [(a, a, a, f.one()) for a in range(r)]
    counit = [f.one()] * r
    S = f.zeros((r, r))
    for a in range(r):
        S[(r - a) % r, a] = f.one()
    labels = [f"g^{a}" for a in range(r)]
    return HopfAlgebra(f, labels, mult, unit, comult, counit, S,
                       name=name or f"kZ_{r}")


def _extend_hopf_on_monomials(field, dim, labels, mult, unit, counit,
                              gen_words, delta_gens, s_gens, name,
                              module=None, braided_mid=None):
    """Assemble comultiplication and antipode from generator data.

    gen_words[i] = list of generator ids whose product is basis element i;
    delta_gens[g] is Delta of generator g as a dim^2 vector, s_gens[g] the
    antipode image as a dim vector.  Delta extends multiplicatively in the
    tensor-square algebra (braided middle when braided_mid is given), S
    anti-multiplicatively.
    """
    f = field
    alg = YDAlgebra(module if module is not None else YDModule.plain(f, dim),
                    mult if isinstance(mult, Tensor3) else Tensor3(f, (dim,) * 3, mult),
                    unit)
    sq = tensor_algebra(alg, alg, braid=braided_mid)
    unit_sq = sq.unit
    comult_cols = f.zeros((dim * dim, dim))
    s_mat = f.zeros((dim, dim))
    for i in range(dim):
        acc = unit_sq.copy()
        for g in gen_words[i]:
            acc = sq.product(acc, delta_gens[g])
        comult_cols[:, i] = acc
        s_acc = alg.unit.copy()
        for g in gen_words[i]:
            # S(g1...gk) = S(gk)...S(g1): left-multiply along the word
            s_acc = alg.product(f.array(s_gens[g]), s_acc)
        s_mat[:, i] = s_acc
    comult = []
    for i in range(dim):
        for jk in range(dim * dim):
            v = comult_cols[jk, i]
            if v != 0:
                comult.append((i, jk // dim, jk % dim, v))
    return HopfAlgebra(f, labels, mult, unit,
                       Tensor3(f, (dim,) * 3, comult), counit, s_mat,
                       module=module, name=name)


def taft(n, field, name=None):
    """Taft algebra T_n: g^n = 1, x^n = 0, gx = omega x g (dim n^2)."""
    f = field
    if f.is_prime:
        if f.root_order % n != 0:
            raise RootOrderUnavailable(f"field has no primitive {n}-th root")
        omega = f.pow(f.omega, f.root_order // n)
    else:
        if n != 2:
            raise RootOrderUnavailable("rational Taft algebra requires n = 2")
        omega = f.of_int(-1)
    dim = n * n

    def idx(a, b):
        return a * n + b

    mult = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b + e < n:
                        # x^b g^c = omega^{bc} g^c x^b  (g x = omega^{-1} x g;
                        # the reciprocal primitive root orients the group-like
                        # conjugation table and S(B) the way the examples use)
                        coeff = f.pow(omega, (b * c) % n)
                        mult.append((idx(a, b), idx(c, e),
                                     idx((a + c) % n, b + e), coeff))
    unit = f.zeros(dim)
    unit[0] = f.one()
    counit = f.zeros(dim)
    for a in range(n):
        counit[idx(a, 0)] = f.one()
    labels = [f"g^{a}x^{b}" if b else f"g^{a}" for a in range(n) for b in range(n)]
    # generators: 0 = g, 1 = x
    gen_words = [[0] * a + [1] * b for a in range(n) for b in range(n)]
    dg = f.zeros(dim * dim)
    dg[idx(1, 0) * dim + idx(1, 0)] = f.one()          # g (x) g
    dx = f.zeros(dim * dim)
    dx[idx(0, 1) * dim + idx(1, 0)] = f.one()          # x (x) g
    dx[0 * dim + idx(0, 1)] = f.one()                  # 1 (x) x
    sg = f.zeros(dim)
    sg[idx(n - 1, 0)] = f.one()                        # g^{-1}
    # S(x) = -x g^{-1}, evaluated through the product to land in PBW form
    tmp = Tensor3(f, (dim,) * 3, mult)
    alg = HopfAlgebra(f, labels, tmp, unit, [(0, 0, 0, f.one())], counit, f.eye(dim))
    xv = f.zeros(dim)
    xv[idx(0, 1)] = f.one()
    sx = f.reduce(-alg.product(xv, sg))
    H = _extend_hopf_on_monomials(f, dim, labels, mult, unit, counit,
                                  gen_words, [dg, dx], [sg, sx],
                                  name or f"T_{n}")
    H.params = {"kind": "taft", "n": n, "omega": omega}
    return H


def family_hopf(m, n, d, field, name=None):
    """H(m, n, d): g^{2m} = 1, x_i^2 = 0, g x_i = omega^{d_i} x_i g,
    x_i x_j = -x_j x_i, with x_i a (g^m, 1)-primitive. Dim 2m 2^n."""
    f = field
    d = tuple(int(v) for v in d)
    assert len(d) == n
    if any(di % 2 == 0 or not (1 <= di < 2 * m) for di in d):
        raise ValueError("family parameters require odd d_i in [1, 2m)")
    order = 2 * m
    if f.is_prime:
        if f.root_order % order != 0:
            raise RootOrderUnavailable(f"field has no primitive {order}-th root")
        omega = f.pow(f.omega, f.root_order // order)
    else:
        if order != 2:
            raise RootOrderUnavailable("rational family requires m = 1")
        omega = f.of_int(-1)
    nx = 1 << n
    dim = order * nx

    def idx(a, eps):
        return a * nx + eps

    def bits(eps):
        return [i for i in range(n) if eps & (1 << (n - 1 - i))]

    mult = []
    for a in range(order):
        for eps in range(nx):
            be = bits(eps)
            for c in range(order):
                for dl in range(nx):
                    if eps & dl:
                        continue
                    bd = bits(dl)
                    # x^eps g^c = omega^{c sum d_i} g^c x^eps (same reciprocal
                    # orientation as the Taft constructor)
                    tw = f.pow(omega, (c * sum(d[i] for i in be)) % order)
                    inv = sum(1 for i in be for j in bd if i > j)
                    coeff = tw if inv % 2 == 0 else f.neg(tw)
                    mult.append((idx(a, eps), idx(c, dl),
                                 idx((a + c) % order, eps | dl), coeff))
    unit = f.zeros(dim)
    unit[0] = f.one()
    counit = f.zeros(dim)
    for a in range(order):
        counit[idx(a, 0)] = f.one()
    labels = []
    for a in range(order):
        for eps in range(nx):
            word = (f"g^{a}" if a else "") + "".join(f"x{i + 1}" for i in bits(eps))
            labels.append(word or "1")
    # generators: 0 = g, 1..n = x_i
    gen_words = []
    for a in range(order):
        for eps in range(nx):
            gen_words.append([0] * a + [i + 1 for i in bits(eps)])
    deltas = []
    dgv = f.zeros(dim * dim)
    dgv[idx(1, 0) * dim + idx(1, 0)] = f.one()
    deltas.append(dgv)
    svecs = [None] * (n + 1)
    sgv = f.zeros(dim)
    sgv[idx((order - 1) % order, 0)] = f.one()
    svecs[0] = sgv
    tmp = Tensor3(f, (dim,) * 3, mult)
    alg = HopfAlgebra(f, labels, tmp, unit, [(0, 0, 0, f.one())], counit, f.eye(dim))
    gm = f.zeros(dim)
    gm[idx(m % order, 0)] = f.one()
    for i in range(n):
        eps = 1 << (n - 1 - i)
        dx = f.zeros(dim * dim)
        dx[0 * dim + idx(0, eps)] = f.one()                 # 1 (x) x_i
        dx[idx(0, eps) * dim + idx(m % order, 0)] = f.one() # x_i (x) g^m
        deltas.append(dx)
        xv = f.zeros(dim)
        xv[idx(0, eps)] = f.one()
        svecs[i + 1] = f.reduce(-alg.product(xv, gm))       # -x_i g^m
    H = _extend_hopf_on_monomials(f, dim, labels, mult, unit, counit,
                                  gen_words, deltas, svecs,
                                  name or f"H({m},{n},{d})")
    H.params = {"kind": "family", "m": m, "n": n, "d": d, "omega": omega}
    return H


def admissible_s(m, d):
    """All s in [0, 2m) with s d_i = m (mod 2m) for every i."""
    order = 2 * m
    return [s for s in range(order)
            if all((s * di - m) % order == 0 for di in d)]


def r_matrix(H, s):
    """R_s^n = (1/2m) sum omega^{-jt} g^j (x) g^{st} on a family algebra."""
    params = getattr(H, "params", None)
    assert params and params["kind"] == "family", "r_matrix needs a family algebra"
    m, n, d = params["m"], params["n"], params["d"]
    order = 2 * m
    if s not in admissible_s(m, d):
        raise InadmissibleS(f"s={s} violates s d_i = m (mod {order})")
    f = H.field
    omega = params["omega"]
    inv2m = f.inv(f.of_int(order))
    nx = 1 << n
    el = f.zeros(H.dim * H.dim)
    for j in range(order):
        for t in range(order):
            coeff = f.mul(inv2m, f.pow(omega, (-j * t) % order))
            row = (j * nx) * H.dim + ((s * t) % order) * nx
            el[row] = f.add(el[row], coeff)
    return RMatrixData(H, el, {"m": m, "n": n, "s": s})


def exterior_factor(m, n, d, field, s=None):
    """The braided factor B = K[x_n]/(x_n^2) over H(m, n-1, d^{<n}).

    Action g . x = omega^{-d_n} x (the reciprocal-root orientation of the
    family constructors), x_i . x = 0; coaction induced from R_s^{n-1} for
    the smallest admissible s (or the one supplied).
    Returns (H_base, B) with B a commutative, cocommutative Hopf algebra in C.
    """
    f = field
    assert n >= 1
    Hb = family_hopf(m, n - 1, tuple(d[: n - 1]), f)
    adm = admissible_s(m, d)
    if not adm:
        raise NoAdmissibleS(f"no s with s d_i = m (mod {2 * m}) for d={tuple(d)}")
    if s is None:
        s = adm[0]
    elif s not in adm:
        raise InadmissibleS(f"s={s} violates admissibility for d={tuple(d)}")
    omega = f.pow(f.omega, f.root_order // (2 * m)) if f.is_prime else f.of_int(-1)
    order = 2 * m
    nx = 1 << (n - 1)
    # action of the PBW basis of Hb on span{1, x}
    act = []
    for a in range(order):
        for eps in range(nx):
            i = a * nx + eps
            if eps == 0:
                act.append((i, 0, 0, f.one()))
                act.append((i, 1, 1, f.pow(omega, (-a * d[n - 1]) % order)))
    mod_plain = YDModule(Hb, 2, Tensor3(f, (Hb.dim, 2, 2), act),
                         Tensor3(f, (2, Hb.dim, 2), [(0, 0, 0, f.one()),
                                                     (1, 0, 1, f.one())]),
                         name="B")
    mod = induced_coaction(mod_plain, r_matrix(Hb, s))
    mult = [(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one())]
    unit = [f.one(), f.zero()]
    comult = [(0, 0, 0, f.one()), (1, 0, 1, f.one()), (1, 1, 0, f.one())]
    counit = [f.one(), f.zero()]
    S = f.array([[1, 0], [0, -1]])
    B = HopfAlgebra(f, ["1", "x"], mult, unit, comult, counit, S,
                    module=mod, name=f"B({m},{n},{d})")
    B.params = {"kind": "exterior", "m": m, "n": n, "d": tuple(d), "s": s,
                "omega": omega}
    return Hb, B


def taft_braided_factor(n, field):
    """The braided line k[x]/(x^n) over kZ_n, the Taft biproduct factor.

    g . x = omega x and lambda(x) = g (x) x; the braiding on B (x) B is not
    symmetric once n > 2.
    """
    f = field
    if f.root_order % n != 0:
        raise RootOrderUnavailable(f"field has no primitive {n}-th root")
    omega = f.pow(f.omega, f.root_order // n)
    Hb = group_algebra(n, f)
    act = []
    coact = []
    for k in range(n):
        for a in range(n):
            act.append((a, k, k, f.pow(omega, (-a * k) % n)))
        coact.append((k, k % n, k, f.one()))
    mod = YDModule(Hb, n, Tensor3(f, (n, n, n), act),
                   Tensor3(f, (n, n, n), coact), name="taft-factor")
    mult = []
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mult.append((i, j, i + j, f.one()))
    unit = f.zeros(n)
    unit[0] = f.one()
    counit = f.zeros(n)
    counit[0] = f.one()
    alg = YDAlgebra(mod, Tensor3(f, (n, n, n), mult), unit)
    # Delta extends multiplicatively in the braided square (Phi^-1 middle)
    from .yd import phi_inv_op
    sq = tensor_algebra(alg, alg, braid=phi_inv_op(mod, mod))
    dx = f.zeros(n * n)
    dx[1 * n + 0] = f.one()   # x (x) 1
    dx[0 * n + 1] = f.one()   # 1 (x) x
    cols = f.zeros((n * n, n))
    acc = sq.unit.copy()
    cols[:, 0] = acc
    for k in range(1, n):
        acc = sq.product(acc, dx)
        cols[:, k] = acc
    comult = []
    for i in range(n):
        for jk in range(n * n):
            if cols[jk, i] != 0:
                comult.append((i, jk // n, jk % n, cols[jk, i]))
    B = HopfAlgebra(f, [f"x^{k}" for k in range(n)],
                    Tensor3(f, (n, n, n), mult), unit,
                    Tensor3(f, (n, n, n), comult), counit,
                    f.eye(n), module=mod, name=f"taft-factor({n})")
    try:
        B.antipode = convolution_inverse(B, f.eye(n))
        B._cache.pop("antipode_op", None)
        B._antipode_inverse = None
    except NotConvolutionInvertible:  # pragma: no cover
        pass
    B.params = {"kind": "taft-factor", "n": n, "omega": omega}
    return Hb, B


# ---------------------------------------------------------------------------
# Radford biproduct
# ---------------------------------------------------------------------------


def is_commutative_in_c(B):
    """mult = mult o Phi_{B,B}."""
    M = B.yd() if B.module is None else B.module
    mop = B.mult_op()
    return mop.equals(phi_op(M, M).then(mop))


def is_cocommutative_in_c(B):
    M = B.yd() if B.module is None else B.module
    cop = B.comult_op()
    return cop.equals(cop.then(phi_op(M, M)))


def biproduct(B, check=True):
    """Radford biproduct B x H for a braided Hopf algebra B over H.

    Smash product and coproduct per the standard formulas; exposed for B
    commutative or cocommutative in C (where the braiding convention is
    immaterial), and the axiom gate runs unconditionally.
    """
    H = B.module.base
    f = B.field
    if check and not (is_commutative_in_c(B) or is_cocommutative_in_c(B)):
        raise ValueError("biproduct requires B commutative or cocommutative in C")
    MB = B.module
    MH = H.yd()
    db, dh = B.dim, H.dim
    dim = db * dh
    # mult: (b x h)(b' x h') = b (h_(1) |> b') x h_(2) h'
    pm = Program(f, [MB, MH, MB, MH])
    pm.comul(1, H)              # [b, h1, h2, b', h']
    pm.perm([0, 1, 3, 2, 4])    # [b, h1, b', h2, h']
    pm.act(1, MB)               # [b, h1 b', h2, h']
    pm.mul(0, B)                # [b(h1 b'), h2, h']
    pm.mul(1, H)
    mop = pm.op()
    mult = Tensor3(f, (dim,) * 3,
                   arrays=(mop.cols // dim, mop.cols % dim, mop.rows, mop.vals))
    # comult: (b1 x b2_[-1] h1) (x) (b2_[0] x h2)
    pc = Program(f, [MB, MH])
    pc.comul(0, B)              # [b1, b2, h]
    pc.comul(2, H)              # [b1, b2, h1, h2]
    pc.coact(1, MB)             # [b1, c(H), b20, h1, h2]
    pc.perm([0, 1, 3, 2, 4])    # [b1, c, h1, b20, h2]
    pc.mul(1, H)                # [b1, c h1, b20, h2]
    cop = pc.op()
    comult = Tensor3(f, (dim,) * 3,
                     arrays=(cop.cols, cop.rows // dim, cop.rows % dim, cop.vals))
    unit = f.reduce(np.kron(B.unit, H.unit))
    counit = f.reduce(np.kron(B.counit, H.counit))
    # antipode: S(b x h) = (1 x S_H(b_[-1] h)) (S_B(b_[0]) x 1)
    ps = Program(f, [MB, MH])
    ps.coact(0, MB)             # [c, b0, h]
    ps.perm([0, 2, 1])          # [c, h, b0]
    ps.mul(0, H)                # [c h, b0]
    ps.antipode(0, H)           # [u := S_H(c h), b0]
    ps.linmap(1, B.antipode)    # [u, v := S_B(b0)]
    ps.comul(0, H)              # [u1, u2, v]
    ps.perm([0, 2, 1])          # [u1, v, u2]
    ps.act(0, MB)               # [u1 v, u2]
    sop = ps.op()
    S = f.zeros((dim, dim))
    for r, c, v in zip(sop.rows.tolist(), sop.cols.tolist(), sop.vals):
        S[r, c] = f.add(S[r, c], v)
    out = HopfAlgebra(f, [f"{bl}x{hl}" for bl in B.labels for hl in H.labels],
                      mult, unit, comult, counit, S,
                      name=f"{B.name}x{H.name}")
    if check:
        rep = verify_hopf_axioms(out)
        if not rep["pass"]:
            raise AxiomFailure(f"biproduct failed the axiom gate: {rep}")
    return out


def decomposition_iso(m, n, d, field):
    """H(m,n,d) = B x H(m,n-1,d') via G -> 1 x g, X_i -> 1 x x_i,
    X_n -> x_n x g^m.  Returns (matrix, biproduct, report)."""
    f = field
    A = family_hopf(m, n, d, f)
    Hb, B = exterior_factor(m, n, d, f)
    BP = biproduct(B)
    order = 2 * m
    nxb = 1 << (n - 1)

    def bp_idx(bi, a, eps):
        return bi * Hb.dim + a * nxb + eps

    gens = {}
    gens["g"] = BP.basis_vector(bp_idx(0, 1 % order, 0))
    for i in range(n - 1):
        gens[f"x{i}"] = BP.basis_vector(bp_idx(0, 0, 1 << (n - 2 - i)))
    xn = f.zeros(BP.dim)
    xn[bp_idx(1, m % order, 0)] = f.one()
    gens[f"x{n - 1}"] = xn
    nx = 1 << n
    phi = f.zeros((BP.dim, A.dim))
    for a in range(order):
        for eps in range(nx):
            acc = BP.basis_vector(bp_idx(0, 0, 0))  # 1 x 1
            for _ in range(a):
                acc = BP.product(acc, gens["g"])
            for i in range(n):
                if eps & (1 << (n - 1 - i)):
                    acc = BP.product(acc, gens[f"x{i}"])
            phi[:, a * nx + eps] = acc
    from .hopf import hopf_morphism_check
    rep = hopf_morphism_check(phi, A, BP)
    rep["bijective"] = rank(f, phi) == A.dim
    rep["pass"] = bool(rep["pass"] and rep["bijective"])
    return phi, BP, rep
