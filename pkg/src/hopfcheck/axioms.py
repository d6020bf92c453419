"""Hopf-axiom verification.

Every check is an exact operator identity.  Small algebras (dim <= 100) are
verified by exhaustive tensor contraction over all basis indices.  For the
large doubles (dim 144/256 in the acceptance corpus) the three multiplicative
axioms -- associativity, coassociativity, multiplicativity of the coproduct --
are certified through a generator decomposition: the identity is checked
exhaustively for (g, y, z) with g ranging over a computed generating set and
y, z over the whole basis, plus a span certificate that every basis element is
reached by iterated left multiplication by generators.  Together these imply
the identity for all triples; on failure the exhaustive checker reruns to
localize the first failing index triple.
"""

from __future__ import annotations

import numpy as np

from .hopf import dual_hopf
from .tensorops import I64, SparseOp, expand_join, group_index, mul_vals, reduce_terms
from .yd import Program, _module_of

EXHAUSTIVE_LIMIT = 100


class AxiomFailure(ValueError):
    pass


def _first_diff(op_a, op_b, in_dims):
    """Smallest differing input index, decomposed along in_dims."""
    pa = {(r, c): v for r, c, v in zip(op_a.rows.tolist(), op_a.cols.tolist(), op_a.vals)}
    pb = {(r, c): v for r, c, v in zip(op_b.rows.tolist(), op_b.cols.tolist(), op_b.vals)}
    keys = sorted(set(pa) | set(pb), key=lambda rc: (rc[1], rc[0]))
    for rc in keys:
        if pa.get(rc, 0) != pb.get(rc, 0):
            col = rc[1]
            out = []
            for d in reversed(in_dims):
                out.append(int(col % d))
                col //= d
            return tuple(reversed(out))
    return None


def _cmp(p1, p2, in_dims):
    a, b = p1.op(), p2.op()
    if a.equals(b):
        return True, None
    return False, _first_diff(a, b, in_dims)


def check_associativity(H):
    f = H.field
    M = _module_of(H)
    p1 = Program(f, [M, M, M])
    p1.mul(0, H)
    p1.mul(0, H)
    p2 = Program(f, [M, M, M])
    p2.mul(1, H)
    p2.mul(0, H)
    return _cmp(p1, p2, [H.dim] * 3)


def check_unit(H):
    f = H.field
    M = _module_of(H)
    pl = Program(f, [M])
    pl.unit_insert(0, H)
    pl.mul(0, H)
    pr = Program(f, [M])
    pr.unit_insert(1, H)
    pr.mul(0, H)
    ident = SparseOp.identity(f, H.dim)
    ok = pl.op().equals(ident) and pr.op().equals(ident)
    return ok, None if ok else (0,)


def check_coassociativity(H):
    f = H.field
    M = _module_of(H)
    p1 = Program(f, [M])
    p1.comul(0, H)
    p1.comul(0, H)
    p2 = Program(f, [M])
    p2.comul(0, H)
    p2.comul(1, H)
    return _cmp(p1, p2, [H.dim])


def check_counit(H):
    f = H.field
    M = _module_of(H)
    ident = SparseOp.identity(f, H.dim)
    pl = Program(f, [M])
    pl.comul(0, H)
    pl.counit(0, H)
    pr = Program(f, [M])
    pr.comul(0, H)
    pr.counit(1, H)
    ok = pl.op().equals(ident) and pr.op().equals(ident)
    return ok, None if ok else (0,)


def check_bialgebra(H):
    """Delta(ab) = Delta(a) Delta(b) with the braided middle crossing, plus
    the unit/counit compatibilities."""
    f = H.field
    M = _module_of(H)
    p1 = Program(f, [M, M])
    p1.mul(0, H)
    p1.comul(0, H)
    p2 = Program(f, [M, M])
    p2.comul(0, H)
    p2.comul(2, H)           # [a1, a2, b1, b2]
    p2.braid(1, inverse=True)
    p2.mul(0, H)
    p2.mul(1, H)
    ok, first = _cmp(p1, p2, [H.dim] * 2)
    # counit multiplicative
    pe = Program(f, [M, M])
    pe.mul(0, H)
    pe.counit(0, H)
    pf = Program(f, [M, M])
    pf.counit(0, H)
    pf.counit(0, H)
    ok_eps = pe.op().equals(pf.op())
    # Delta(1) = 1 (x) 1 and eps(1) = 1
    pu = Program(f, [])
    pu.unit_insert(0, H)
    pu.comul(0, H)
    pv = Program(f, [])
    pv.unit_insert(0, H)
    pv.unit_insert(1, H)
    ok_unit = pu.op().equals(pv.op())
    eps1 = f.zero()
    for i in range(H.dim):
        eps1 = f.add(eps1, f.mul(H.counit[i], H.unit[i]))
    ok_unit = ok_unit and eps1 == f.one()
    allok = bool(ok and ok_eps and ok_unit)
    return allok, (first if not ok else ((0,) if not allok else None))


def check_antipode(H):
    f = H.field
    M = _module_of(H)
    target = SparseOp.from_dense(f, f.reduce(np.outer(H.unit, H.counit)))
    pl = Program(f, [M])
    pl.comul(0, H)
    pl.antipode(0, H)
    pl.mul(0, H)
    pr = Program(f, [M])
    pr.comul(0, H)
    pr.antipode(1, H)
    pr.mul(0, H)
    ok = pl.op().equals(target) and pr.op().equals(target)
    if ok:
        return True, None
    return False, _first_diff(pl.op(), target, [H.dim])


# ---------------------------------------------------------------------------
# generator certificates for large algebras
# ---------------------------------------------------------------------------


def find_generators(H):
    """Greedy generating set with a left-iterated span certificate.

    Returns (gens, ok): ok means iterated products g.(g'.(...(g''. 1))) span
    the whole algebra, which is what the certified checks rely on.  Uses an
    incremental reduced echelon with a worklist closure.
    """
    f = H.field
    d = H.dim
    rows = []      # reduced echelon rows, leading 1 at their pivot
    pivs = []

    def reduce_vec(v):
        v = v.copy()
        for r, pc in zip(rows, pivs):
            c = v[pc]
            if c != 0:
                v = f.reduce(v - c * r)
        return v

    def add_vec(v):
        v = reduce_vec(v)
        if f.is_prime:
            nz = np.flatnonzero(v % f.p)
        else:
            nz = [i for i, x in enumerate(v) if x != 0]
        if len(nz) == 0:
            return None
        pc = int(nz[0])
        v = f.reduce(v * f.inv(v[pc]))
        for i in range(len(rows)):
            c = rows[i][pc]
            if c != 0:
                rows[i] = f.reduce(rows[i] - c * v)
        rows.append(v)
        pivs.append(pc)
        return v

    def add_batch(mat):
        if rows:
            R = np.stack(rows)
            C = mat[:, pivs]
            mat = f.reduce(mat - f.matmul(C, R))
        for v in mat:
            add_vec(v)

    gens = []
    lmats = []
    frontier = []
    add_vec(H.unit.copy())
    while True:
        # per-generator frontier closure, batched matrix products
        progressed = True
        while progressed and len(rows) < d:
            progressed = False
            for gi, L in enumerate(lmats):
                if frontier[gi] < len(rows):
                    batch = np.stack(rows[frontier[gi]:])
                    frontier[gi] = len(rows)
                    add_batch(f.matmul(batch, f.reduce(L.T)))
                    progressed = True
        if len(rows) == d:
            return gens, True
        missing = None
        for k in range(d):
            red = reduce_vec(H.basis_vector(k))
            if (np.any(red % f.p) if f.is_prime else any(x != 0 for x in red)):
                missing = k
                break
        if missing is None:  # pragma: no cover
            return gens, len(rows) == d
        gens.append(missing)
        lmats.append(H.left_mult_matrix(H.basis_vector(missing)))
        frontier.append(0)
        add_vec(H.basis_vector(missing))
        if len(gens) > d:  # pragma: no cover
            return gens, False


def _gen_assoc(H, gens):
    """(g y) z = g (y z) for g in gens and all basis y, z."""
    f = H.field
    d = H.dim
    t = H.mult
    order_i, ptr_i = group_index(t.i, d)
    for g in gens:
        sel = np.flatnonzero(t.i == g)
        gy_y, gy_r, gy_v = t.j[sel], t.k[sel], t.v[sel]
        # LHS: join r -> mult rows with first index r
        li, ri = expand_join(gy_r, order_i, ptr_i)
        keys_l = (gy_y[li] * d + t.j[ri]) * d + t.k[ri]
        vals_l = mul_vals(f, gy_v[li], t.v[ri])
        kl, vl = reduce_terms(keys_l, vals_l, f)
        # RHS: join all mult entries (y, z, r) with g·e_r rows
        order_g, ptr_g = group_index(gy_y, d)  # g-row grouped by its input r
        li2, ri2 = expand_join(t.k, order_g, ptr_g)
        keys_r = (t.i[li2] * d + t.j[li2]) * d + gy_r[ri2]
        vals_r = mul_vals(f, t.v[li2], gy_v[ri2])
        kr, vr = reduce_terms(keys_r, vals_r, f)
        if not (np.array_equal(kl, kr) and np.array_equal(vl, vr)):
            return False
    return True


def _gen_deltamult(H, gens):
    """Delta(g y) = Delta(g) Delta(y) for g in gens, all y (plain middle)."""
    f = H.field
    d = H.dim
    t = H.mult
    c = H.comult
    order_c, ptr_c = group_index(c.i, d)
    order_pair, ptr_pair = group_index(t.i * d + t.j, d * d)
    for g in gens:
        sel = np.flatnonzero(t.i == g)
        gy_y, gy_r, gy_v = t.j[sel], t.k[sel], t.v[sel]
        # LHS Delta(g e_y): join r with comult rows
        li, ri = expand_join(gy_r, order_c, ptr_c)
        keys_l = (gy_y[li] * d + c.j[ri]) * d + c.k[ri]
        vals_l = mul_vals(f, gy_v[li], c.v[ri])
        kl, vl = reduce_terms(keys_l, vals_l, f)
        # RHS Delta(g).Delta(e_y) with the plain middle swap
        gsel = np.flatnonzero(c.i == g)
        ga, gb, gv = c.j[gsel], c.k[gsel], c.v[gsel]
        keys_parts = []
        vals_parts = []
        for a, b, v0 in zip(ga.tolist(), gb.tolist(), gv):
            # (a c)(b e): expand each comult entry (y, (c,e)) against the
            # mult rows for the pairs (a, c) and then (b, e)
            yi, cc, ee, vv = c.i, c.j, c.k, c.v
            j1, r1 = expand_join(np.full(len(yi), a, dtype=I64) * d + cc,
                                 order_pair, ptr_pair)
            u = t.k[r1]
            v1 = mul_vals(f, vv[j1], t.v[r1])
            j2, r2 = expand_join(np.full(len(j1), b, dtype=I64) * d + ee[j1],
                                 order_pair, ptr_pair)
            q = t.k[r2]
            v2 = mul_vals(f, v1[j2], t.v[r2])
            keys = (yi[j1][j2] * d + u[j2]) * d + q
            vals = mul_vals(f, v2, np.full(len(v2), v0,
                                           dtype=I64 if f.is_prime else object))
            keys_parts.append(keys)
            vals_parts.append(vals)
        if keys_parts:
            keys_r = np.concatenate(keys_parts)
            vals_r = (np.concatenate(vals_parts) if f.is_prime else
                      np.concatenate([np.asarray(v, dtype=object) for v in vals_parts]))
        else:
            keys_r = np.zeros(0, dtype=I64)
            vals_r = np.zeros(0, dtype=I64)
        kr, vr = reduce_terms(keys_r, vals_r, f)
        if not (np.array_equal(kl, kr) and np.array_equal(vl, vr)):
            return False
    return True


# ---------------------------------------------------------------------------
# the verification report
# ---------------------------------------------------------------------------


def verify_hopf_axioms(H, mode="auto"):
    """Full Hopf axiom report.

    Returns a dict with per-axiom pass flags and the first failing index
    triple when an exhaustive check fails; 'mode' records which strategy
    verified the three multiplicative axioms.
    """
    braided = H.module is not None and H.module.base is not None
    exhaustive = (mode == "exhaustive" or braided
                  or (mode == "auto" and H.dim <= EXHAUSTIVE_LIMIT))
    report = {"dim": H.dim, "mode": "exhaustive" if exhaustive else "generator-certified"}
    ok_unit, w_unit = check_unit(H)
    ok_counit, w_counit = check_counit(H)
    if exhaustive:
        ok_assoc, w_assoc = check_associativity(H)
        ok_coassoc, w_coassoc = check_coassociativity(H)
        ok_bialg, w_bialg = check_bialgebra(H)
    else:
        gens, span_ok = find_generators(H)
        report["generators"] = [int(g) for g in gens]
        dual = dual_hopf(H)
        dgens, dspan_ok = find_generators(dual)
        ok_assoc = span_ok and _gen_assoc(H, gens)
        ok_coassoc = dspan_ok and _gen_assoc(dual, dgens)
        ok_bialg = span_ok and _gen_deltamult(H, gens)
        if ok_bialg:
            # unit/counit compatibilities still checked directly
            okb2, _ = _bialgebra_unit_counit(H)
            ok_bialg = okb2
        w_assoc = w_coassoc = w_bialg = None
        if not (ok_assoc and ok_coassoc and ok_bialg):
            # fall back for localization
            ok_assoc, w_assoc = check_associativity(H)
            ok_coassoc, w_coassoc = check_coassociativity(H)
            ok_bialg, w_bialg = check_bialgebra(H)
    ok_anti, w_anti = check_antipode(H)
    sinv_ok = True
    f = H.field
    sinv_ok = f.equal(f.matmul(H.antipode, H.antipode_inverse), f.eye(H.dim))
    report.update({
        "algebra": {"pass": bool(ok_assoc and ok_unit),
                    "first_fail": w_assoc or w_unit},
        "coalgebra": {"pass": bool(ok_coassoc and ok_counit),
                      "first_fail": w_coassoc or w_counit},
        "bialgebra": {"pass": bool(ok_bialg), "first_fail": w_bialg},
        "antipode": {"pass": bool(ok_anti and sinv_ok), "first_fail": w_anti},
    })
    report["pass"] = all(report[k]["pass"] for k in
                         ("algebra", "coalgebra", "bialgebra", "antipode"))
    return report


def _bialgebra_unit_counit(H):
    f = H.field
    M = _module_of(H)
    pe = Program(f, [M, M])
    pe.mul(0, H)
    pe.counit(0, H)
    pf = Program(f, [M, M])
    pf.counit(0, H)
    pf.counit(0, H)
    ok_eps = pe.op().equals(pf.op())
    pu = Program(f, [])
    pu.unit_insert(0, H)
    pu.comul(0, H)
    pv = Program(f, [])
    pv.unit_insert(0, H)
    pv.unit_insert(1, H)
    ok_unit = pu.op().equals(pv.op())
    return bool(ok_eps and ok_unit), None


def check_antipode_antihom(H):
    """S(ab) = S(b)S(a) and (S (x) S) Delta = Delta^cop S (exhaustive)."""
    f = H.field
    M = _module_of(H)
    p1 = Program(f, [M, M])
    p1.mul(0, H)
    p1.antipode(0, H)
    p2 = Program(f, [M, M])
    p2.antipode(0, H)
    p2.antipode(1, H)
    p2.swap(0)
    p2.mul(0, H)
    ok_alg = p1.op().equals(p2.op())
    q1 = Program(f, [M])
    q1.antipode(0, H)
    q1.comul(0, H)
    q2 = Program(f, [M])
    q2.comul(0, H)
    q2.swap(0)
    q2.antipode(0, H)
    q2.antipode(1, H)
    ok_coalg = q1.op().equals(q2.op())
    return {"anti_algebra": bool(ok_alg), "anti_coalgebra": bool(ok_coalg)}


def verify_hopf_in_category(B):
    """Hopf-algebra-in-C verification: the plain axiom bundle with the braided
    compatibility, plus H-(co)module-(co)algebra axioms, YD compatibility of
    the underlying module and C-morphism checks for Delta and S."""
    from .yd import (YDAlgebra, check_comodule_algebra, check_comodule_coalgebra,
                     check_module_algebra, check_module_coalgebra,
                     check_module_axioms, check_comodule_axioms, check_yd_compat,
                     is_c_morphism)
    rep = verify_hopf_axioms(B)
    M = B.module
    A = YDAlgebra(M, B.mult, B.unit, B.name)
    Acoalg = B
    rep["module_axioms"] = check_module_axioms(M)
    rep["comodule_axioms"] = check_comodule_axioms(M)
    rep["yd_compat"] = check_yd_compat(M)["pass"]
    rep["module_algebra"] = check_module_algebra(A)
    rep["comodule_algebra"] = check_comodule_algebra(A)
    rep["module_coalgebra"] = check_module_coalgebra(B)
    rep["comodule_coalgebra"] = check_comodule_coalgebra(B)
    rep["antipode_c_morphism"] = is_c_morphism(B.antipode, M, M)["pass"]
    rep["pass"] = bool(rep["pass"] and all(
        rep[k] for k in ("module_axioms", "comodule_axioms", "yd_compat",
                         "module_algebra", "comodule_algebra",
                         "module_coalgebra", "comodule_coalgebra",
                         "antipode_c_morphism")))
    return rep
