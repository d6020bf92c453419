"""Sparse exact tensor contraction kernels.

Structure constants and the linear maps built from them are held in COO form
(int64 row/col arrays plus a value array, residues mod p or Fractions).  All
heavy work is sort-merge joins on packed int64 keys, vectorized with numpy;
the object-dtype (rational) path falls back to dict accumulation and is only
used at small dimensions.
"""

from __future__ import annotations

import numpy as np

I64 = np.int64


def reduce_terms(keys, vals, field):
    """Canonicalize a multiset of (key, value) terms: sort, sum, drop zeros."""
    keys = np.asarray(keys, dtype=I64)
    if keys.size == 0:
        return keys, np.asarray(vals)
    if field.is_prime:
        vals = np.asarray(vals, dtype=I64) % field.p
        order = np.argsort(keys, kind="stable")
        k = keys[order]
        v = vals[order]
        starts = np.flatnonzero(np.concatenate(([True], k[1:] != k[:-1])))
        sums = np.add.reduceat(v, starts) % field.p
        uk = k[starts]
        nz = sums != 0
        return uk[nz], sums[nz]
    acc = {}
    for k, v in zip(keys.tolist(), vals):
        acc[k] = acc.get(k, 0) + v
    items = sorted((k, v) for k, v in acc.items() if v != 0)
    if not items:
        return np.zeros(0, dtype=I64), np.zeros(0, dtype=object)
    uk = np.array([k for k, _ in items], dtype=I64)
    uv = np.empty(len(items), dtype=object)
    uv[:] = [v for _, v in items]
    return uk, uv


def group_index(keys, size):
    """CSR-style grouping: argsort order plus group pointers over [0, size)."""
    keys = np.asarray(keys, dtype=I64)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    ptr = np.searchsorted(sorted_keys, np.arange(size + 1, dtype=I64))
    return order, ptr


def expand_join(group_keys, order, ptr):
    """Expand each left entry against its group of right entries.

    group_keys selects a group per left entry; returns (left_idx, right_idx)
    index arrays describing all matched pairs (right_idx indexes `order`).
    """
    group_keys = np.asarray(group_keys, dtype=I64)
    counts = ptr[group_keys + 1] - ptr[group_keys]
    total = int(counts.sum())
    left_idx = np.repeat(np.arange(len(group_keys), dtype=I64), counts)
    if total == 0:
        return left_idx, np.zeros(0, dtype=I64)
    starts = np.repeat(ptr[group_keys], counts)
    offs = np.arange(total, dtype=I64) - np.repeat(
        np.concatenate(([0], np.cumsum(counts)[:-1])), counts)
    right_idx = order[starts + offs]
    return left_idx, right_idx


def mul_vals(field, a, b):
    if field.is_prime:
        return (np.asarray(a, dtype=I64) * np.asarray(b, dtype=I64)) % field.p
    out = np.empty(len(a), dtype=object)
    out[:] = [x * y for x, y in zip(a, b)]
    return out


class SparseOp:
    """A sparse linear map between based spaces (rows: output, cols: input)."""

    __slots__ = ("field", "out_dim", "in_dim", "rows", "cols", "vals")

    def __init__(self, field, out_dim, in_dim, rows, cols, vals, reduce=True):
        self.field = field
        self.out_dim = int(out_dim)
        self.in_dim = int(in_dim)
        rows = np.asarray(rows, dtype=I64)
        cols = np.asarray(cols, dtype=I64)
        if reduce and rows.size:
            key = rows * self.in_dim + cols
            key, vals = reduce_terms(key, vals, field)
            rows, cols = key // self.in_dim, key % self.in_dim
        elif field.is_prime:
            vals = np.asarray(vals, dtype=I64) % field.p
        self.rows, self.cols, self.vals = rows, cols, vals

    @classmethod
    def identity(cls, field, dim):
        r = np.arange(dim, dtype=I64)
        return cls(field, dim, dim, r, r, field.array([1] * dim).reshape(-1), reduce=False)

    @classmethod
    def from_dense(cls, field, mat):
        mat = np.asarray(mat)
        if field.is_prime:
            rr, cc = np.nonzero(mat % field.p)
        else:
            rr, cc = np.nonzero(np.vectorize(lambda v: v != 0)(mat)) if mat.size else (
                np.zeros(0, dtype=I64), np.zeros(0, dtype=I64))
        vals = mat[rr, cc]
        return cls(field, mat.shape[0], mat.shape[1], rr, cc, vals)

    def to_dense(self):
        out = self.field.zeros((self.out_dim, self.in_dim))
        for r, c, v in zip(self.rows.tolist(), self.cols.tolist(), self.vals):
            out[r, c] = self.field.add(out[r, c], v)
        return out

    @property
    def nnz(self):
        return len(self.rows)

    def then(self, other):
        """other o self (apply self first)."""
        assert other.in_dim == self.out_dim
        order, ptr = group_index(other.cols, self.out_dim)
        li, ri = expand_join(self.rows, order, ptr)
        rows = other.rows[ri]
        cols = self.cols[li]
        vals = mul_vals(self.field, self.vals[li], other.vals[ri])
        return SparseOp(self.field, other.out_dim, self.in_dim, rows, cols, vals)

    def transpose(self):
        return SparseOp(self.field, self.in_dim, self.out_dim,
                        self.cols, self.rows, self.vals, reduce=True)

    def scale(self, c):
        return SparseOp(self.field, self.out_dim, self.in_dim, self.rows, self.cols,
                        mul_vals(self.field, self.vals,
                                 np.full(len(self.vals), c, dtype=object)
                                 if not self.field.is_prime else
                                 np.full(len(self.vals), c, dtype=I64)))

    def add(self, other):
        assert (self.out_dim, self.in_dim) == (other.out_dim, other.in_dim)
        rows = np.concatenate([self.rows, other.rows])
        cols = np.concatenate([self.cols, other.cols])
        if self.field.is_prime:
            vals = np.concatenate([self.vals, other.vals])
        else:
            vals = np.empty(len(rows), dtype=object)
            vals[: len(self.vals)] = self.vals
            vals[len(self.vals):] = other.vals
        return SparseOp(self.field, self.out_dim, self.in_dim, rows, cols, vals)

    def equals(self, other):
        if (self.out_dim, self.in_dim) != (other.out_dim, other.in_dim):
            return False
        a = SparseOp(self.field, self.out_dim, self.in_dim, self.rows, self.cols, self.vals)
        b = SparseOp(self.field, other.out_dim, other.in_dim, other.rows, other.cols, other.vals)
        if len(a.rows) != len(b.rows):
            return False
        return (np.array_equal(a.rows, b.rows) and np.array_equal(a.cols, b.cols)
                and all(x == y for x, y in zip(a.vals, b.vals)))

    def apply_vec(self, vec):
        out = self.field.zeros(self.out_dim)
        vec = np.asarray(vec)
        for r, c, v in zip(self.rows.tolist(), self.cols.tolist(), self.vals):
            if vec[c] != 0:
                out[r] = self.field.add(out[r], self.field.mul(v, vec[c]))
        return out
