"""Structure-constant Hopf algebras and Yetter-Drinfel'd module data.

A HopfAlgebra stores multiplication and comultiplication as 3-index structure
constant tensors over an exact Field, plus unit/counit vectors and the
antipode matrix.  An optional YDModule attaches base-Hopf-algebra module and
comodule structures, turning the object into a Hopf algebra inside the
braided category of Yetter-Drinfel'd modules over the base.

Basis conventions: vectors are columns, matrices act on the left,
mult[i,j,k] is the e_k coefficient of e_i * e_j, comult[i,j,k] the
e_j (x) e_k coefficient of Delta(e_i).  Tensor factors are ordered with the
right factor fastest, matching numpy's kron.
"""

from __future__ import annotations

import numpy as np

from .linalg import DimensionMismatch, inverse, kernel_basis
from .tensorops import I64, SparseOp, reduce_terms


class NotConvolutionInvertible(ValueError):
    pass


class Tensor3:
    """COO storage for a 3-index structure tensor."""

    __slots__ = ("field", "dims", "i", "j", "k", "v")

    def __init__(self, field, dims, entries=None, arrays=None):
        self.field = field
        self.dims = tuple(int(d) for d in dims)
        if arrays is not None:
            i, j, k, v = arrays
        else:
            entries = list(entries or [])
            i = [e[0] for e in entries]
            j = [e[1] for e in entries]
            k = [e[2] for e in entries]
            v = [e[3] for e in entries]
        self.i = np.asarray(i, dtype=I64)
        self.j = np.asarray(j, dtype=I64)
        self.k = np.asarray(k, dtype=I64)
        if field.is_prime:
            self.v = np.asarray(v, dtype=I64) % field.p
        else:
            vv = np.empty(len(v), dtype=object)
            vv[:] = list(v)
            self.v = vv
        self._canonicalize()

    def _canonicalize(self):
        d1, d2, d3 = self.dims
        key = (self.i * d2 + self.j) * d3 + self.k
        key, vals = reduce_terms(key, self.v, self.field)
        self.k = key % d3
        self.j = (key // d3) % d2
        self.i = key // (d2 * d3)
        self.v = vals

    @classmethod
    def from_dense(cls, field, arr):
        arr = np.asarray(arr)
        if field.is_prime:
            idx = np.nonzero(arr % field.p)
        else:
            idx = np.nonzero(np.vectorize(lambda x: x != 0)(arr))
        return cls(field, arr.shape, arrays=(idx[0], idx[1], idx[2], arr[idx]))

    def to_dense(self):
        out = self.field.zeros(self.dims)
        for a, b, c, v in zip(self.i.tolist(), self.j.tolist(), self.k.tolist(), self.v):
            out[a, b, c] = self.field.add(out[a, b, c], v)
        return out

    @property
    def nnz(self):
        return len(self.i)

    def entries(self):
        return zip(self.i.tolist(), self.j.tolist(), self.k.tolist(), self.v)


class YDModule:
    """A Yetter-Drinfel'd module over a base HopfAlgebra (or a plain space).

    act[a,i,j]: h_a . m_i = sum_j v m_j;  coact[i,a,j]: the h_a (x) m_j
    coefficient of the coaction of m_i.  base None means a plain vector space
    (trivial braiding).
    """

    def __init__(self, base, dim, act=None, coact=None, name=""):
        self.base = base
        self.dim = int(dim)
        self.act = act
        self.coact = coact
        self.name = name
        self._cache = {}

    @classmethod
    def plain(cls, field, dim, name=""):
        m = cls(None, dim, None, None, name)
        m.field = field
        return m

    @classmethod
    def trivial(cls, base, dim, name=""):
        """epsilon-action and unit coaction over the given base."""
        f = base.field
        act = []
        for a in range(base.dim):
            eps = base.counit[a]
            if eps != 0:
                act.extend((a, i, i, eps) for i in range(dim))
        coact = []
        for a in range(base.dim):
            u = base.unit[a]
            if u != 0:
                coact.extend((i, a, i, u) for i in range(dim))
        m = cls(base, dim,
                Tensor3(f, (base.dim, dim, dim), act),
                Tensor3(f, (dim, base.dim, dim), coact), name)
        return m

    @property
    def fld(self):
        return self.base.field if self.base is not None else self.field

    def action_matrix(self, hvec):
        """Matrix of the action of the base element with coordinates hvec."""
        f = self.fld
        out = f.zeros((self.dim, self.dim))
        if self.act is None:
            raise ValueError("plain space has no action")
        hvec = np.asarray(hvec)
        for a, i, j, v in self.act.entries():
            if hvec[a] != 0:
                out[j, i] = f.add(out[j, i], f.mul(v, hvec[a]))
        return out

    def basis_action_matrices(self):
        if "actmats" not in self._cache:
            f = self.fld
            mats = [f.zeros((self.dim, self.dim)) for _ in range(self.base.dim)]
            for a, i, j, v in self.act.entries():
                mats[a][j, i] = f.add(mats[a][j, i], v)
            self._cache["actmats"] = mats
        return self._cache["actmats"]

    def act_op(self):
        """SparseOp H (x) M -> M (columns indexed (a, i), rows by j)."""
        t = self.act
        return SparseOp(self.fld, self.dim, self.base.dim * self.dim,
                        t.k, t.i * self.dim + t.j, t.v)

    def coact_op(self):
        """SparseOp M -> H (x) M (rows indexed (a, j))."""
        t = self.coact
        return SparseOp(self.fld, self.base.dim * self.dim, self.dim,
                        t.j * self.dim + t.k, t.i, t.v)


class HopfAlgebra:
    """A finite-dimensional Hopf algebra given by structure constants."""

    def __init__(self, field, labels, mult, unit, comult, counit, antipode,
                 module=None, name="", antipode_inverse=None):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.mult = mult if isinstance(mult, Tensor3) else Tensor3(field, (self.dim,) * 3, mult)
        self.unit = field.array(unit).reshape(-1)
        self.comult = comult if isinstance(comult, Tensor3) else Tensor3(field, (self.dim,) * 3, comult)
        self.counit = field.array(counit).reshape(-1)
        self.antipode = field.array(antipode)
        self._antipode_inverse = antipode_inverse
        self.module = module
        self.name = name
        self._cache = {}

    # -- cached operator views ------------------------------------------------

    def mult_op(self):
        if "mult_op" not in self._cache:
            t = self.mult
            self._cache["mult_op"] = SparseOp(
                self.field, self.dim, self.dim * self.dim,
                t.k, t.i * self.dim + t.j, t.v)
        return self._cache["mult_op"]

    def comult_op(self):
        if "comult_op" not in self._cache:
            t = self.comult
            self._cache["comult_op"] = SparseOp(
                self.field, self.dim * self.dim, self.dim,
                t.j * self.dim + t.k, t.i, t.v)
        return self._cache["comult_op"]

    def antipode_op(self):
        if "antipode_op" not in self._cache:
            self._cache["antipode_op"] = SparseOp.from_dense(self.field, self.antipode)
        return self._cache["antipode_op"]

    @property
    def antipode_inverse(self):
        if self._antipode_inverse is None:
            self._antipode_inverse = inverse(self.field, self.antipode)
        return self._antipode_inverse

    def unit_op(self):
        return SparseOp.from_dense(self.field, self.unit.reshape(-1, 1))

    def counit_op(self):
        return SparseOp.from_dense(self.field, self.counit.reshape(1, -1))

    @property
    def base(self):
        return self.module.base if self.module is not None else None

    @property
    def is_braided(self):
        return self.base is not None

    def yd(self):
        """The underlying YD module (plain space when no module attached)."""
        if self.module is not None:
            return self.module
        return YDModule.plain(self.field, self.dim, self.name)

    # -- element helpers -------------------------------------------------------

    def basis_vector(self, k):
        v = self.field.zeros(self.dim)
        v[k] = self.field.one()
        return v

    def product(self, a, b):
        f = self.field
        out = f.zeros(self.dim)
        a = np.asarray(a)
        b = np.asarray(b)
        for i, j, k, v in self.mult.entries():
            if a[i] != 0 and b[j] != 0:
                out[k] = f.add(out[k], f.mul(v, f.mul(a[i], b[j])))
        return out

    def coproduct(self, a):
        f = self.field
        out = f.zeros(self.dim * self.dim)
        a = np.asarray(a)
        for i, j, k, v in self.comult.entries():
            if a[i] != 0:
                out[j * self.dim + k] = f.add(out[j * self.dim + k], f.mul(v, a[i]))
        return out

    def left_mult_matrix(self, a):
        f = self.field
        out = f.zeros((self.dim, self.dim))
        a = np.asarray(a)
        for i, j, k, v in self.mult.entries():
            if a[i] != 0:
                out[k, j] = f.add(out[k, j], f.mul(v, a[i]))
        return out

    def right_mult_matrix(self, b):
        f = self.field
        out = f.zeros((self.dim, self.dim))
        b = np.asarray(b)
        for i, j, k, v in self.mult.entries():
            if b[j] != 0:
                out[k, i] = f.add(out[k, i], f.mul(v, b[j]))
        return out

    def is_grouplike(self, g):
        f = self.field
        g = np.asarray(g)
        eps = f.zero()
        for i in range(self.dim):
            eps = f.add(eps, f.mul(self.counit[i], g[i]))
        if eps != f.one():
            return False
        gg = f.zeros(self.dim * self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                gg[i * self.dim + j] = f.mul(g[i], g[j])
        return f.equal(self.coproduct(g), gg)


# ---------------------------------------------------------------------------
# plain-level operations
# ---------------------------------------------------------------------------


def convolution(H, fmat, gmat, domain=None, codomain=None):
    """Convolution product nabla o (f (x) g) o Delta of two linear maps.

    By default f, g: H -> H; pass domain (coalgebra) and codomain (algebra)
    HopfAlgebra objects for mixed convolution.
    """
    C = domain or H
    A = codomain or H
    f = H.field
    fmat = f.array(fmat)
    gmat = f.array(gmat)
    if fmat.shape[1] != C.dim or gmat.shape[1] != C.dim:
        raise DimensionMismatch("convolution operands do not match the coalgebra")
    out = f.zeros((A.dim, C.dim))
    mult = A.mult
    # T[l, i] = sum Delta[i](j,k) (f e_j)_r (g e_k)_s mult[r,s,l]
    for i, j, k, v in C.comult.entries():
        fr = fmat[:, j]
        gs = gmat[:, k]
        col = A.product(fr, gs)
        out[:, i] = f.reduce(out[:, i] + v * col)
    return out


def unit_counit_map(H, domain=None, codomain=None):
    C = domain or H
    A = codomain or H
    f = H.field
    return f.reduce(np.outer(A.unit, C.counit))


def convolution_inverse(H, fmat, domain=None, codomain=None):
    """Solve f * g = g * f = unit o counit for g; raises when not invertible."""
    C = domain or H
    A = codomain or H
    f = H.field
    fmat = f.array(fmat)
    d_in, d_out = C.dim, A.dim
    # linear system in the entries of g: rows stack both one-sided conditions
    n_unknown = d_out * d_in
    target = unit_counit_map(H, C, A)
    # f * g: T1[(l,i),(s,k)] = sum_{j,r} Delta[i](j,k) f[r,j] mult[r,s,l]
    lhs1 = f.zeros((d_out * d_in, n_unknown))
    lhs2 = f.zeros((d_out * d_in, n_unknown))
    for i, j, k, v in C.comult.entries():
        colf = fmat[:, j]
        L = A.left_mult_matrix(colf)   # maps y -> f(e_j) y
        colg = fmat[:, k]
        R = A.right_mult_matrix(colg)  # maps y -> y f(e_k)
        for l in range(d_out):
            for s in range(d_out):
                if L[l, s] != 0:
                    lhs1[l * d_in + i, s * d_in + k] = f.add(
                        lhs1[l * d_in + i, s * d_in + k], f.mul(v, L[l, s]))
                if R[l, s] != 0:
                    lhs2[l * d_in + i, s * d_in + j] = f.add(
                        lhs2[l * d_in + i, s * d_in + j], f.mul(v, R[l, s]))
    A_full = np.vstack([lhs1, lhs2])
    b_full = np.concatenate([target.reshape(-1), target.reshape(-1)])
    from .linalg import solve
    sol = solve(f, A_full, b_full)
    if sol is None:
        raise NotConvolutionInvertible("map has no convolution inverse")
    return sol.reshape(d_out, d_in)


def dual_hopf(H, name=None):
    """The dual Hopf algebra on the dual basis (plain vector-space level)."""
    f = H.field
    d = H.dim
    mult = Tensor3(f, (d, d, d), arrays=(H.comult.j, H.comult.k, H.comult.i, H.comult.v))
    comult = Tensor3(f, (d, d, d), arrays=(H.mult.k, H.mult.i, H.mult.j, H.mult.v))
    return HopfAlgebra(
        f, [lab + "*" for lab in H.labels],
        mult, H.counit.copy(), comult, H.unit.copy(),
        f.reduce(H.antipode.T.copy()),
        name=name or (H.name + "*"))


def opposite(H):
    """Opposite algebra at the plain swap level (same coalgebra)."""
    f = H.field
    d = H.dim
    mult = Tensor3(f, (d, d, d), arrays=(H.mult.j, H.mult.i, H.mult.k, H.mult.v))
    return HopfAlgebra(f, H.labels, mult, H.unit.copy(), H.comult, H.counit.copy(),
                       f.reduce(H.antipode_inverse.copy()), name=H.name + "^op")


def coopposite(H):
    f = H.field
    d = H.dim
    comult = Tensor3(f, (d, d, d), arrays=(H.comult.i, H.comult.k, H.comult.j, H.comult.v))
    return HopfAlgebra(f, H.labels, H.mult, H.unit.copy(), comult, H.counit.copy(),
                       f.reduce(H.antipode_inverse.copy()), name=H.name + "^cop")


def hopf_morphism_check(fmat, L, Lp):
    """Bialgebra morphism check: multiplicative, unital, comultiplicative, counital."""
    f = L.field
    fmat = f.array(fmat)
    if fmat.shape != (Lp.dim, L.dim):
        raise DimensionMismatch("morphism matrix has wrong shape")
    ok_unit = f.equal(f.matmul(fmat, L.unit.reshape(-1, 1)).reshape(-1), Lp.unit)
    ok_counit = f.equal(f.matmul(Lp.counit.reshape(1, -1), fmat).reshape(-1), L.counit)
    ok_mult = True
    for i in range(L.dim):
        for j in range(L.dim):
            lhs = Lp.product(fmat[:, i], fmat[:, j])
            rhs = f.matmul(fmat, L.product(L.basis_vector(i), L.basis_vector(j)))
            if not f.equal(lhs, rhs):
                ok_mult = False
                break
        if not ok_mult:
            break
    ok_comult = True
    ff = f.kron(fmat, fmat)
    for i in range(L.dim):
        lhs = f.matmul(ff, L.coproduct(L.basis_vector(i)))
        rhs = Lp.coproduct(f.matmul(fmat, L.basis_vector(i)))
        if not f.equal(lhs, rhs):
            ok_comult = False
            break
    return {"mult": ok_mult, "unit": ok_unit, "comult": ok_comult,
            "counit": ok_counit,
            "pass": bool(ok_mult and ok_unit and ok_comult and ok_counit)}


def center(alg, side="right", braiding=None):
    """Canonical basis of the (braided) left or right center.

    alg: HopfAlgebra or YDAlgebra-like with .dim/.mult/.field.  braiding is a
    dense matrix on A (x) A; default is the plain swap.
    """
    f = alg.field
    d = alg.dim
    if braiding is None:
        braiding = f.zeros((d * d, d * d))
        for i in range(d):
            for j in range(d):
                braiding[j * d + i, i * d + j] = f.one()
    mult = alg.mult_op().to_dense()
    twisted = f.matmul(mult, braiding)
    # right center: z with mult(z (x) a) = mult(Phi(z (x) a)) for all a;
    # left center has z in the second slot instead
    diff = f.reduce(mult - twisted)
    M = f.zeros((d * d, d))
    for zi in range(d):
        for a in range(d):
            col = (zi * d + a) if side == "right" else (a * d + zi)
            for out in range(d):
                M[a * d + out, zi] = diff[out, col]
    return kernel_basis(f, M)
