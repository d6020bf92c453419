"""Exact dense linear algebra over a Field.

Matrices are numpy arrays (int64 residues for prime fields, Fraction objects
for Q); every routine is plain Gaussian elimination with exact pivoting.
Kernel bases come out in reduced-echelon (canonical) form so set-valued
results compare bit-identically across runs.
"""

from __future__ import annotations

import numpy as np

from .fields import poly_roots


class DimensionMismatch(ValueError):
    pass


class Singular(ValueError):
    pass


def rref(field, mat):
    """Reduced row echelon form. Returns (R, pivot_cols)."""
    R = field.array(mat).copy() if not isinstance(mat, np.ndarray) else field.reduce(mat.copy())
    m, n = R.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nz = row
        while nz < m and R[nz, col] == (0 if field.is_prime else 0):
            nz += 1
        if nz == m:
            continue
        if nz != row:
            R[[row, nz]] = R[[nz, row]]
        inv = field.inv(R[row, col])
        R[row] = field.reduce(R[row] * inv)
        factors = R[:, col].copy()
        factors[row] = 0
        if field.is_prime:
            if np.any(factors):
                R -= np.outer(factors, R[row])
                R %= field.p
        else:
            for r in range(m):
                if r != row and factors[r] != 0:
                    R[r] = R[r] - factors[r] * R[row]
        pivots.append(col)
        row += 1
    return R, pivots


def rank(field, mat):
    return len(rref(field, mat)[1])


def kernel_basis(field, mat):
    """Canonical kernel basis (reduced echelon over the free columns)."""
    A = field.array(mat) if not isinstance(mat, np.ndarray) else mat
    m, n = A.shape
    R, pivots = rref(field, A)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = field.zeros(n)
        v[f] = field.one()
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i, f])
        basis.append(v)
    return basis


def solve(field, mat, vec):
    """One solution of mat @ x = vec, or None when inconsistent."""
    A = field.array(mat) if not isinstance(mat, np.ndarray) else mat
    b = field.array(vec) if not isinstance(vec, np.ndarray) else vec
    if A.shape[0] != b.shape[0]:
        raise DimensionMismatch("matrix/vector shapes differ")
    m, n = A.shape
    aug = field.zeros((m, n + 1))
    aug[:, :n] = A
    aug[:, n] = b
    R, pivots = rref(field, aug)
    if n in pivots:
        return None
    x = field.zeros(n)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, n]
    return x


def inverse(field, mat):
    A = field.array(mat) if not isinstance(mat, np.ndarray) else mat
    m, n = A.shape
    if m != n:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = field.zeros((n, 2 * n))
    aug[:, :n] = A
    aug[:, n:] = field.eye(n)
    R, pivots = rref(field, aug)
    if pivots != list(range(n)):
        raise Singular("matrix is singular")
    return R[:, n:]


def kron(field, a, b):
    """Kronecker product; basis of X (x) Y ordered (x_i, y_j), j fastest."""
    return field.kron(a, b)


def char_poly(field, mat):
    """Monic characteristic polynomial, ascending coefficients (Hessenberg)."""
    A = field.array(mat).copy() if not isinstance(mat, np.ndarray) else field.reduce(mat.copy())
    n = A.shape[0]
    if A.shape[1] != n:
        raise DimensionMismatch("char_poly of a non-square matrix")
    H = A.copy()
    for col in range(n - 2):
        piv = None
        for r in range(col + 1, n):
            if H[r, col] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != col + 1:
            H[[col + 1, piv]] = H[[piv, col + 1]]
            H[:, [col + 1, piv]] = H[:, [piv, col + 1]]
        inv = field.inv(H[col + 1, col])
        for r in range(col + 2, n):
            if H[r, col] != 0:
                t = field.mul(H[r, col], inv)
                H[r] = field.reduce(H[r] - t * H[col + 1])
                H[:, col + 1] = field.reduce(H[:, col + 1] + t * H[:, r])
    # charpoly recurrence on leading principal minors of the Hessenberg form
    polys = [[field.one()]]
    for k in range(1, n + 1):
        # p_k = (x - H[k-1,k-1]) p_{k-1} - sum_i (prod of subdiag) H[i,k-1] p_i
        pk = _poly_shift_mul(field, polys[k - 1], field.neg(H[k - 1, k - 1]))
        prod = field.one()
        for i in range(k - 2, -1, -1):
            prod = field.mul(prod, H[i + 1, i])
            coef = field.mul(prod, H[i, k - 1])
            if coef != 0:
                sub = [field.mul(coef, c) for c in polys[i]]
                pk = _poly_sub(field, pk, sub)
        polys.append(pk)
    return polys[n]


def _poly_shift_mul(field, poly, c):
    # (x + c) * poly
    out = [field.zero()] + list(poly)
    for i, a in enumerate(poly):
        out[i] = field.add(out[i], field.mul(c, a))
    return out


def _poly_sub(field, a, b):
    n = max(len(a), len(b))
    a = list(a) + [field.zero()] * (n - len(a))
    for i, c in enumerate(b):
        a[i] = field.sub(a[i], c)
    return a


def eigenspace(field, mat, lam):
    A = field.array(mat) if not isinstance(mat, np.ndarray) else mat
    n = A.shape[0]
    if A.shape[1] != n:
        raise DimensionMismatch("eigenspace of a non-square matrix")
    shifted = field.reduce(A - lam * field.eye(n))
    return kernel_basis(field, shifted)


def min_poly(field, mat):
    """Monic minimal polynomial: lcm of the cyclic-subspace polynomials of
    the standard basis vectors (Krylov chains)."""
    A = field.array(mat) if not isinstance(mat, np.ndarray) else mat
    n = A.shape[0]
    poly = [field.one()]
    for start in range(n):
        v = field.zeros(n)
        v[start] = field.one()
        chain = [v]
        while True:
            if rank(field, np.stack(chain)) < len(chain):
                break
            chain.append(field.matmul(A, chain[-1]))
        k = len(chain) - 1
        if k == 0:
            continue
        M = np.stack(chain[:-1], axis=1)
        sol = solve(field, M, chain[-1])
        assert sol is not None
        local = [field.neg(c) for c in sol] + [field.one()]
        poly = _poly_lcm(field, poly, local)
        if len(poly) == n + 1:
            break
    return poly


def _poly_lcm(field, a, b):
    from .fields import poly_gcd, poly_mul, poly_divmod

    if field.is_prime:
        g = poly_gcd([int(c) for c in a], [int(c) for c in b], field.p)
        q, _ = poly_divmod([int(c) for c in b], g, field.p)
        return poly_mul([int(c) for c in a], q, field.p)
    # rational: generic polynomial arithmetic
    def mul(f, g):
        out = [field.zero()] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            for j, y in enumerate(g):
                out[i + j] = field.add(out[i + j], field.mul(x, y))
        return out

    def divmod_(f, g):
        f = list(f)
        q = [field.zero()] * max(len(f) - len(g) + 1, 0)
        while len(f) >= len(g) and any(c != 0 for c in f):
            while f and f[-1] == 0:
                f.pop()
            if len(f) < len(g):
                break
            c = field.div(f[-1], g[-1])
            k = len(f) - len(g)
            q[k] = c
            for i in range(len(g)):
                f[k + i] = field.sub(f[k + i], field.mul(c, g[i]))
            while f and f[-1] == 0:
                f.pop()
        return q, f

    def gcd(f, g):
        f, g = list(f), list(g)
        while any(c != 0 for c in g):
            _, r = divmod_(f, g)
            f, g = g, r
        lead = f[-1]
        return [field.div(c, lead) for c in f]

    g = gcd(a, b)
    q, _ = divmod_(b, g)
    return mul(list(a), q)


def eigenvalues_in_field(field, mat):
    """Field-rational eigenvalues (set) via the factored minimal polynomial."""
    mp = min_poly(field, mat)
    return sorted(set(poly_roots(field, mp)))


def matrix_str(field, mat):
    return [[field.scalar_str(v) for v in row] for row in np.asarray(mat)]


def matrix_from_str(field, rows):
    return field.array([[field.scalar_from_str(v) for v in row] for row in rows])
