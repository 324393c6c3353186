"""Exact dense-polynomial kernel over the integers and over GF(p).

A polynomial is a list of Python ints, constant coefficient first, with no
trailing zeros; ``[]`` is the zero polynomial.  Everything is arbitrary
precision, no floats.

Factorization follows the classical route: Yun square-free decomposition,
Berlekamp factorization modulo the first usable prime, quadratic Hensel
lifting up to a Mignotte-style coefficient bound, then exhaustive subset
recombination with exact trial division.  Degrees in this package stay
small (census polynomials top out at degree 12), so the exponential
recombination step never matters; correctness and reproducibility do, so
every choice below (prime scan order, factor ordering, subset order) is
deterministic.
"""

from __future__ import annotations

import math
from itertools import combinations


# ---------------------------------------------------------------------------
# arithmetic over Z


def strip(f):
    """Drop trailing zero coefficients."""
    n = len(f)
    while n and f[n - 1] == 0:
        n -= 1
    return list(f[:n])


def degree(f):
    return len(f) - 1


def neg(f):
    return [-c for c in f]


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return strip(out)


def sub(f, g):
    return add(f, neg(g))


def mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def mul_ground(f, c):
    if c == 0:
        return []
    return [a * c for a in f]


def eval_at(f, x):
    out = 0
    for c in reversed(f):
        out = out * x + c
    return out


def derivative(f):
    return strip([i * c for i, c in enumerate(f)][1:])


def content(f):
    out = 0
    for c in f:
        out = math.gcd(out, c)
        if out == 1:
            break
    return out


def primitive(f):
    """Split f into (content, primitive part); content is nonnegative."""
    if not f:
        return 0, []
    c = content(f)
    return c, [a // c for a in f]


def try_div(f, g):
    """Exact quotient f/g in Z[x], or None when g does not divide f."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return []
    df, dg = degree(f), degree(g)
    if df < dg:
        return None
    rem = list(f)
    q = [0] * (df - dg + 1)
    b = g[-1]
    for k in range(df - dg, -1, -1):
        c = rem[k + dg]
        if c == 0:
            continue
        if c % b:
            return None
        t = c // b
        q[k] = t
        for i, gc in enumerate(g):
            rem[k + i] -= t * gc
    if any(rem):
        return None
    return strip(q)


def _pseudo_rem(f, g):
    """A scalar multiple of the remainder of f by g (fraction free)."""
    df, dg = degree(f), degree(g)
    r = list(f)
    if df < dg:
        return r
    b = g[-1]
    while r and degree(r) >= dg:
        d = degree(r)
        t = r[-1]
        r = [b * c for c in r]
        for i, gc in enumerate(g):
            r[d - dg + i] -= t * gc
        r = strip(r)
    return r


def gcd(f, g):
    """Greatest common divisor in Z[x], positive leading coefficient."""
    f, g = strip(f), strip(g)
    if not f:
        return neg(g) if g and g[-1] < 0 else list(g)
    if not g:
        return neg(f) if f[-1] < 0 else list(f)
    cf, pf = primitive(f)
    cg, pg = primitive(g)
    c = math.gcd(cf, cg)
    while pg:
        r = _pseudo_rem(pf, pg)
        _, r = primitive(strip(r))
        pf, pg = pg, r
    if pf[-1] < 0:
        pf = neg(pf)
    return mul_ground(pf, c)


def squarefree_decomposition(f):
    """Yun's algorithm.  f must be primitive with positive leading
    coefficient and degree at least one; returns [(part, multiplicity)]
    with pairwise-coprime square-free parts whose weighted product is f."""
    out = []
    fp = derivative(f)
    a = gcd(f, fp)
    b = try_div(f, a)
    c = try_div(fp, a)
    d = sub(c, derivative(b))
    k = 1
    while degree(b) > 0:
        a_k = gcd(b, d)
        if degree(a_k) > 0:
            out.append((a_k, k))
        b = try_div(b, a_k)
        c = try_div(d, a_k)
        d = sub(c, derivative(b))
        k += 1
    return out


def squarefree_part(f):
    """Product of the distinct irreducible factors of f, lc > 0."""
    c, f = primitive(strip(f))
    if f and f[-1] < 0:
        f = neg(f)
    if degree(f) < 1:
        return [1]
    out = [1]
    for part, _ in squarefree_decomposition(f):
        out = mul(out, part)
    return out


# ---------------------------------------------------------------------------
# arithmetic over GF(p)


def gf_trunc(f, p):
    return strip([c % p for c in f])


def gf_neg(f, p):
    return [(-c) % p for c in f]


def gf_add(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return strip(out)


def gf_sub(f, g, p):
    return gf_add(f, gf_neg(g, p), p)


def gf_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return strip(out)


def gf_mul_ground(f, c, p):
    c %= p
    if c == 0:
        return []
    return strip([(a * c) % p for a in f])


def gf_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    df, dg = degree(f), degree(g)
    if df < dg:
        return [], list(f)
    inv = pow(g[-1], -1, p)
    rem = [c % p for c in f]
    q = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        t = (rem[k + dg] * inv) % p
        q[k] = t
        if t:
            for i, gc in enumerate(g):
                rem[k + i] = (rem[k + i] - t * gc) % p
    return strip(q), strip(rem)


def gf_rem(f, g, p):
    return gf_divmod(f, g, p)[1]


def gf_quo(f, g, p):
    return gf_divmod(f, g, p)[0]


def gf_monic(f, p):
    if not f:
        return []
    return gf_mul_ground(f, pow(f[-1], -1, p), p)


def gf_gcd(f, g, p):
    f, g = gf_trunc(f, p), gf_trunc(g, p)
    while g:
        f, g = g, gf_rem(f, g, p)
    return gf_monic(f, p)


def gf_gcdex(f, g, p):
    """Extended Euclid: returns (s, t, h) with s*f + t*g = h, h monic."""
    r0, r1 = gf_trunc(f, p), gf_trunc(g, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    if not r0:
        return s0, t0, []
    inv = pow(r0[-1], -1, p)
    return (gf_mul_ground(s0, inv, p), gf_mul_ground(t0, inv, p),
            gf_mul_ground(r0, inv, p))


def gf_pow_mod(f, e, mod, p):
    out = [1]
    base = gf_rem(f, mod, p)
    while e:
        if e & 1:
            out = gf_rem(gf_mul(out, base, p), mod, p)
        base = gf_rem(gf_mul(base, base, p), mod, p)
        e >>= 1
    return out


def gf_is_squarefree(f, p):
    fd = gf_trunc([i * c for i, c in enumerate(f)][1:], p)
    if not fd:
        return False
    return degree(gf_gcd(f, fd, p)) == 0


def _gf_nullspace(m, p):
    """Basis of the right nullspace of the square matrix m over GF(p)."""
    rows = [[c % p for c in row] for row in m]
    n = len(rows)
    pivots = []
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, n) if rows[i][col]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col]:
                fac = rows[i][col]
                rows[i] = [(a - fac * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == n:
            break
    basis = []
    for free_col in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[free_col] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-rows[i][free_col]) % p
        basis.append(v)
    return basis


def berlekamp(f, p):
    """Monic irreducible factors of a monic square-free f over GF(p).

    Deterministic for any prime, including 2: the splitting loop tries
    every residue s in GF(p), which is cheap because the admissible
    primes found by the scan in :func:`zassenhaus` are tiny.
    """
    n = degree(f)
    if n == 1:
        return [list(f)]
    xp = gf_pow_mod([0, 1], p, f, p)
    rows = []
    cur = [1]
    for _ in range(n):
        rows.append(cur + [0] * (n - len(cur)))
        cur = gf_rem(gf_mul(cur, xp, p), f, p)
    # Berlekamp subalgebra: v with v(Q - I) = 0, Q[i] = x^(p i) mod f.
    m = [[(rows[i][j] - (1 if i == j else 0)) % p for j in range(n)]
         for i in range(n)]
    mt = [[m[i][j] for i in range(n)] for j in range(n)]
    basis = _gf_nullspace(mt, p)
    r = len(basis)
    factors = [list(f)]
    if r == 1:
        return factors
    for v in basis:
        vp = strip(v)
        if degree(vp) < 1:
            continue
        split = []
        for w in factors:
            if degree(w) == 1:
                split.append(w)
                continue
            rest = w
            for s in range(p):
                if degree(rest) < 1:
                    break
                g = gf_gcd(rest, gf_sub(vp, [s], p), p)
                if 0 < degree(g) < degree(rest):
                    split.append(g)
                    rest = gf_quo(rest, g, p)
                elif degree(g) == degree(rest):
                    break
            if degree(rest) > 0:
                split.append(rest)
        factors = split
        if len(factors) == r:
            break
    return sorted(factors, key=lambda g: (degree(g), tuple(g)))


# ---------------------------------------------------------------------------
# Hensel lifting


def trunc_sym(f, m):
    """Reduce coefficients to symmetric representatives in (-m/2, m/2]."""
    out = []
    for c in f:
        c %= m
        if c > m // 2:
            c -= m
        out.append(c)
    return strip(out)


def _divmod_monic_mod(f, g, m):
    """divmod by monic g with coefficients taken modulo m."""
    df, dg = degree(f), degree(g)
    if df < dg:
        return [], strip([c % m for c in f])
    rem = [c % m for c in f]
    q = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        t = rem[k + dg] % m
        q[k] = t
        if t:
            for i, gc in enumerate(g):
                rem[k + i] = (rem[k + i] - t * gc) % m
    return strip(q), strip(rem)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lifting step: from f = g h (mod m), s g + t h = 1
    (mod m), h monic, to the same congruences mod m**2."""
    mm = m * m
    e = trunc_sym(sub(f, mul(g, h)), mm)
    q, r = _divmod_monic_mod(mul(s, e), h, mm)
    big_g = trunc_sym(add(g, add(mul(t, e), mul(q, g))), mm)
    big_h = trunc_sym(add(h, r), mm)
    b = trunc_sym(sub(add(mul(s, big_g), mul(t, big_h)), [1]), mm)
    c, d = _divmod_monic_mod(mul(s, b), big_h, mm)
    big_s = trunc_sym(sub(s, d), mm)
    big_t = trunc_sym(sub(t, add(mul(t, b), mul(c, big_g))), mm)
    return big_g, big_h, big_s, big_t


def hensel_lift(p, f, factors, l):
    """Lift monic pairwise-coprime factors of f modulo p to modulo p**l."""
    r = len(factors)
    pl = p ** l
    if r == 1:
        inv = pow(f[-1] % pl, -1, pl)
        return [trunc_sym(mul_ground(f, inv), pl)]
    k = r // 2
    g = [f[-1] % p]
    for fi in factors[:k]:
        g = gf_mul(g, gf_trunc(fi, p), p)
    h = gf_trunc(factors[k], p)
    for fi in factors[k + 1:]:
        h = gf_mul(h, gf_trunc(fi, p), p)
    s, t, one = gf_gcdex(g, h, p)
    if degree(one) != 0:
        raise ArithmeticError("modular factors not coprime")
    # normalize: deg s < deg h, deg t < deg g
    s = gf_rem(s, h, p)
    t, rem = gf_divmod(gf_sub([1], gf_mul(s, g, p), p), h, p)
    if rem:
        raise ArithmeticError("Bezout normalization failed")
    g, h, s, t = (trunc_sym(x, p) for x in (g, h, s, t))
    m = p
    steps = math.ceil(math.log2(l)) if l > 1 else 0
    for _ in range(steps):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return hensel_lift(p, g, factors[:k], l) + hensel_lift(p, h, factors[k:], l)


# ---------------------------------------------------------------------------
# factorization over Z


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _primes():
    yield 2
    n = 3
    while True:
        if _is_prime(n):
            yield n
        n += 2


def factor_int(n):
    """Prime factorization of n >= 1 as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("expected a positive integer")
    out = []
    for p in _primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return out


def _factor_bound(f):
    """Coefficient bound for lc(f) times any monic rational factor of f."""
    n = degree(f)
    a = max(abs(c) for c in f)
    s = math.isqrt(n + 1)
    if s * s < n + 1:
        s += 1
    return s * (1 << n) * a * abs(f[-1])


def zassenhaus(f):
    """Irreducible factors of f: primitive, square free, lc > 0, deg >= 1."""
    n = degree(f)
    if n == 1:
        return [list(f)]
    b = f[-1]
    big_b = _factor_bound(f)
    p = None
    for q in _primes():
        if b % q == 0:
            continue
        if gf_is_squarefree(gf_trunc(f, q), q):
            p = q
            break
    l = 1
    pl = p
    while pl < 2 * big_b + 1:
        pl *= p
        l += 1
    modular = berlekamp(gf_monic(gf_trunc(f, p), p), p)
    if len(modular) == 1:
        return [list(f)]
    lifted = hensel_lift(p, list(f), [trunc_sym(g, p) for g in modular], l)
    pl = p ** l

    remaining = list(range(len(lifted)))
    out = []
    cur = list(f)
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for subset in combinations(remaining, size):
            cand = [cur[-1]]
            for i in subset:
                cand = mul(cand, lifted[i])
            cand = trunc_sym(cand, pl)
            _, cand = primitive(cand)
            if not cand or degree(cand) < 1:
                continue
            if cand[-1] < 0:
                cand = neg(cand)
            quo = try_div(cur, cand)
            if quo is not None:
                out.append(cand)
                cur = quo
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if degree(cur) > 0:
        out.append(cur)
    return out


def factor_primitive(f):
    """(irreducible, multiplicity) pairs for primitive f, lc > 0, deg >= 1.

    Factors come back sorted by (degree, coefficient tuple), which keeps
    every downstream artifact byte reproducible.
    """
    out = []
    for part, mult in squarefree_decomposition(f):
        for w in zassenhaus(part):
            out.append((w, mult))
    out.sort(key=lambda item: (degree(item[0]), tuple(item[0])))
    return out
