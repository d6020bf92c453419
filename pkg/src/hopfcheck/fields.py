"""Exact scalar arithmetic: prime fields F_p and the rationals.

A Field object fixes the coefficient domain for everything downstream.  Prime
fields store scalars as canonical residues in [0, p) (numpy int64 arrays for
bulk work); the rationals use fractions.Fraction in object arrays.  Each Field
carries a designated primitive root of unity of the requested order, chosen as
the smallest canonical residue so that runs are reproducible.

Univariate polynomial factorization over F_p (squarefree / distinct-degree /
equal-degree) lives here as well; character enumeration needs it to split
eigenvalues exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np


class NotPrime(ValueError):
    pass


class RootOrderUnavailable(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class ZeroPolynomial(ValueError):
    pass


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond any modulus used here."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class Field:
    """A prime field F_p or Q, with a chosen primitive root of unity.

    kind is 'prime' or 'rational'.  For prime fields omega is the smallest
    residue of multiplicative order root_order; for the rationals root_order
    is limited to 1 or 2 (omega = 1 or -1).
    """

    kind: str
    p: int
    root_order: int
    omega: object
    _prime_mods: dict = dc_field(default_factory=dict, repr=False, compare=False)

    # -- scalar ops ---------------------------------------------------------

    @property
    def is_prime(self):
        return self.kind == "prime"

    def zero(self):
        return 0 if self.is_prime else Fraction(0)

    def one(self):
        return 1 if self.is_prime else Fraction(1)

    def of_int(self, n):
        return n % self.p if self.is_prime else Fraction(n)

    def add(self, a, b):
        return (a + b) % self.p if self.is_prime else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.is_prime else a - b

    def neg(self, a):
        return (-a) % self.p if self.is_prime else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.is_prime else a * b

    def inv(self, a):
        if self.is_prime:
            a = int(a) % self.p
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self.is_prime:
            return pow(int(a) % self.p, int(n), self.p)
        return a ** n

    # -- array ops (numpy int64 mod p, or object arrays of Fractions) -------

    @property
    def dtype(self):
        return np.int64 if self.is_prime else object

    def array(self, data):
        if self.is_prime:
            return np.asarray(data, dtype=np.int64) % self.p
        a = np.empty(np.shape(data), dtype=object)
        flat = a.reshape(-1)
        src = np.asarray(data, dtype=object).reshape(-1)
        for i, v in enumerate(src):
            flat[i] = v if isinstance(v, Fraction) else Fraction(v)
        return a

    def zeros(self, shape):
        if self.is_prime:
            return np.zeros(shape, dtype=np.int64)
        a = np.empty(shape, dtype=object)
        a.reshape(-1)[:] = [Fraction(0)] * int(np.prod(shape, dtype=np.int64))
        return a

    def eye(self, n):
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = self.one()
        return a

    def reduce(self, arr):
        return arr % self.p if self.is_prime else arr

    def matmul(self, a, b):
        if self.is_prime:
            # inner-dim overflow guard: residues < p, products summed over k
            k = a.shape[-1]
            assert k * (self.p - 1) ** 2 < 2 ** 62, "modulus too large for int64 matmul"
            return (a @ b) % self.p
        return a @ b

    def kron(self, a, b):
        if self.is_prime:
            return np.kron(a, b) % self.p
        return np.kron(a, b)

    def inv_array(self, arr):
        if self.is_prime:
            flat = arr.reshape(-1)
            out = np.array([pow(int(v), self.p - 2, self.p) for v in flat], dtype=np.int64)
            return out.reshape(arr.shape)
        out = np.empty(arr.shape, dtype=object)
        out.reshape(-1)[:] = [Fraction(1) / v for v in arr.reshape(-1)]
        return out

    def equal(self, a, b):
        return np.array_equal(self.reduce(np.asarray(a)), self.reduce(np.asarray(b)))

    def is_zero(self, arr):
        if self.is_prime:
            return not np.any(np.asarray(arr) % self.p)
        return all(v == 0 for v in np.asarray(arr, dtype=object).reshape(-1))

    # -- serialization ------------------------------------------------------

    def scalar_str(self, a):
        if self.is_prime:
            return str(a % self.p)
        f = a if isinstance(a, Fraction) else Fraction(a)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    def scalar_from_str(self, s):
        if self.is_prime:
            return int(s) % self.p
        if "/" in s:
            n, d = s.split("/")
            return Fraction(int(n), int(d))
        return Fraction(int(s))

    def describe(self):
        return {"p": self.p if self.is_prime else "Q", "root_order": self.root_order}


def multiplicative_order_is(a, r, p, r_factors):
    if pow(a, r, p) != 1:
        return False
    return all(pow(a, r // q, p) != 1 for q in r_factors)


def make_field(p_or_rational, root_order=1):
    """Build F_p (p prime) or Q with a primitive root of unity of root_order.

    The root is the smallest canonical residue of exact order root_order;
    requires root_order | p - 1 for prime fields and root_order <= 2 for Q.
    """
    if root_order < 1:
        raise RootOrderUnavailable("root_order must be positive")
    if p_or_rational in ("Q", "rational", None, 0):
        if root_order > 2:
            raise RootOrderUnavailable("rational field only supports root orders 1 and 2")
        omega = Fraction(1) if root_order == 1 else Fraction(-1)
        return Field("rational", 0, root_order, omega)
    p = int(p_or_rational)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if (p - 1) % root_order != 0:
        raise RootOrderUnavailable(f"no root of order {root_order} in F_{p}")
    r_factors = _prime_factors(root_order)
    for a in range(1, p):
        if multiplicative_order_is(a, root_order, p, r_factors):
            return Field("prime", p, root_order, a)
    raise RootOrderUnavailable(f"no root of order {root_order} in F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------
# univariate polynomials over F_p, coefficients ascending, as python lists
# ---------------------------------------------------------------------------


def poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return poly_trim(out)


def poly_divmod(f, g, p):
    f = poly_trim(list(f))
    g = poly_trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    q = [0] * max(len(f) - dg, 0)
    while f and len(f) - 1 >= dg:
        c = f[-1] * inv_lead % p
        k = len(f) - 1 - dg
        q[k] = c
        for i in range(len(g)):
            f[k + i] = (f[k + i] - c * g[i]) % p
        poly_trim(f)
    return poly_trim(q), f


def poly_mod(f, g, p):
    return poly_divmod(f, g, p)[1]


def poly_monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def poly_gcd(f, g, p):
    f, g = poly_trim(list(f)), poly_trim(list(g))
    while g:
        f, g = g, poly_mod(f, g, p)
    return poly_monic(f, p)


def poly_pow_mod(f, n, mod, p):
    result = [1]
    f = poly_mod(f, mod, p)
    while n:
        if n & 1:
            result = poly_mod(poly_mul(result, f, p), mod, p)
        f = poly_mod(poly_mul(f, f, p), mod, p)
        n >>= 1
    return result


def poly_deriv(f, p):
    return poly_trim([(i * c) % p for i, c in enumerate(f)][1:])


def _squarefree_parts(f, p):
    """Yield (squarefree factor, multiplicity) pairs of monic f (Yun / char p)."""
    out = []
    fp = poly_deriv(f, p)
    if not fp:
        # f = g(x^p); over the prime field c^(1/p) = c, so take the p-th root
        g = [f[i] for i in range(0, len(f), p)]
        for h, m in _squarefree_parts(poly_trim(g), p):
            out.append((h, m * p))
        return out
    c = poly_gcd(f, fp, p)
    w, _ = poly_divmod(f, c, p)
    m = 1
    while len(w) > 1:
        y = poly_gcd(w, c, p)
        z, _ = poly_divmod(w, y, p)
        if len(z) > 1:
            out.append((z, m))
        w = y
        c, _ = poly_divmod(c, y, p)
        m += 1
    if len(c) > 1:
        # every multiplicity left in c is divisible by p, so c = v(x^p)
        v = poly_trim([c[i] for i in range(0, len(c), p)])
        for h, mm in _squarefree_parts(v, p):
            out.append((h, mm * p))
    return out


def _distinct_degree(f, p):
    """Split squarefree monic f into products of irreducibles of equal degree."""
    out = []
    x = [0, 1]
    h = list(x)
    d = 0
    rest = list(f)
    while len(rest) - 1 > 2 * d:
        d += 1
        h = poly_pow_mod(h, p, rest, p)
        diff = poly_trim([(a - b) % p for a, b in
                          zip(h + [0] * len(x), x + [0] * len(h))])
        g = poly_gcd(diff, rest, p) if diff else poly_monic(rest, p)
        if len(g) > 1:
            out.append((g, d))
            rest, _ = poly_divmod(rest, g, p)
            h = poly_mod(h, rest, p)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _equal_degree_split(f, d, p, rng):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = poly_trim(a)
        if len(a) <= 0:
            continue
        g = poly_gcd(a, f, p)
        if 1 < len(g) <= n:
            pass
        elif p == 2:
            # trace map x + x^2 + ... + x^(2^(d-1))
            t = list(a)
            acc = list(a)
            for _ in range(d - 1):
                acc = poly_pow_mod(acc, 2, f, p)
                t = poly_trim([(x + y) % p for x, y in
                               zip(t + [0] * len(acc), acc + [0] * len(t))])
            g = poly_gcd(t, f, p)
            if not (1 < len(g) <= n):
                continue
        else:
            b = poly_pow_mod(a, (p ** d - 1) // 2, f, p)
            b = poly_trim([(c - (1 if i == 0 else 0)) % p for i, c in
                           enumerate(b + [0])])
            g = poly_gcd(b, f, p) if b else [1]
            if not (1 < len(g) <= n):
                continue
        h, _ = poly_divmod(f, g, p)
        return _equal_degree_split(g, d, p, rng) + _equal_degree_split(h, d, p, rng)


def factor_poly(field, coeffs):
    """Factor a univariate polynomial over F_p.

    coeffs are ascending; returns a list of (monic irreducible coeff tuple,
    multiplicity) sorted canonically (degree, then coefficient tuple), and the
    product of factors times the leading unit reproduces the input.
    """
    if field.kind != "prime":
        raise ValueError("factor_poly requires a prime field")
    p = field.p
    f = poly_trim([int(c) % p for c in coeffs])
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if len(f) == 1:
        return []
    f = poly_monic(f, p)
    # deterministic RNG: seed from the polynomial itself
    rng = random.Random((p, tuple(f)).__hash__() & 0x7FFFFFFF)
    factors = []
    for g, mult in _squarefree_parts(f, p):
        for h, d in _distinct_degree(g, p):
            for irr in _equal_degree_split(h, d, p, rng):
                factors.append((tuple(irr), mult))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return factors


def poly_roots(field, coeffs):
    """Roots in the field (with multiplicity) of a nonzero polynomial.

    Prime fields factor exactly; over Q only rational roots are returned
    (sufficient here: rational support is restricted to root orders 1 and 2).
    """
    if field.kind == "prime":
        roots = []
        for irr, mult in factor_poly(field, coeffs):
            if len(irr) == 2:  # x + c
                roots.extend([(-irr[0]) % field.p] * mult)
        return sorted(roots)
    # rational: clear denominators, rational root theorem on primitive part
    fr = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    while fr and fr[-1] == 0:
        fr.pop()
    if not fr:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    from math import gcd, lcm
    den = lcm(*[c.denominator for c in fr]) if len(fr) > 1 else fr[0].denominator
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g:
        ints = [c // g for c in ints]
    roots = []

    def divisors(n):
        n = abs(n)
        if n == 0:
            return [0]
        out = [d for d in range(1, n + 1) if n % d == 0]
        return out

    lead, const = ints[-1], ints[0]
    if const == 0:
        roots.append(Fraction(0))
        return sorted(roots + poly_roots(field, fr[1:]))
    cands = set()
    for a in divisors(const):
        for b in divisors(lead):
            cands.add(Fraction(a, b))
            cands.add(Fraction(-a, b))
    for r in sorted(cands):
        # multiplicity by repeated synthetic division
        cur = list(fr)
        while len(cur) > 1:
            val = Fraction(0)
            for c in reversed(cur):
                val = val * r + c
            if val != 0:
                break
            out = []
            acc = Fraction(0)
            for c in reversed(cur[1:]):
                acc = acc * r + c
                out.append(acc)
            cur = list(reversed(out))
            roots.append(r)
    return sorted(roots)


def poly_from_factors(field, factors, lead=1):
    f = [lead if field.is_prime else Fraction(lead)]
    for irr, mult in factors:
        for _ in range(mult):
            f = poly_mul(f, list(irr), field.p) if field.is_prime else None
    return f
