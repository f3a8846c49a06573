# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for eventually periodic subsets of the naturals.

Drop-in replacement for ``epshift._kernel_py``: same functions, same
results.  Quadruples whose masks fit in 64 bits take C fast paths; anything
larger falls back to the pure implementation.  The equivalence of the two
backends is enforced by the test suite.
"""

from math import lcm as _lcm

from . import _kernel_py as _py

cdef int LIMIT = 60  # bit budget for the fast paths

ctypedef unsigned long long u64


cdef inline u64 _mask(int n) noexcept:
    return (<u64>1 << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF


cdef inline u64 _rotr(u64 r, int s, int p) noexcept:
    s %= p
    if s == 0:
        return r
    return ((r >> s) | (r << (p - s))) & _mask(p)


cdef inline u64 _rotl(u64 r, int s, int p) noexcept:
    s %= p
    if s == 0:
        return r
    return ((r << s) | (r >> (p - s))) & _mask(p)


cdef inline u64 _expand(u64 r, int p, int q) noexcept:
    cdef u64 out = 0
    cdef int off = 0
    while off < q:
        out |= r << off
        off += p
    return out


cdef inline bint _small(object h, object t, object p, object r):
    # plain object comparisons: arbitrarily large ints must not overflow here
    return (t <= LIMIT and p <= LIMIT
            and h <= 0xFFFFFFFFFFFFFFF and r <= 0xFFFFFFFFFFFFFFF)


cdef _canon(u64 h, int t, int p, u64 r):
    cdef int d
    h &= _mask(t)
    r &= _mask(p)
    if r == 0:
        p = 1
    elif p > 1:
        for d in range(1, p):
            if p % d == 0 and _rotr(r, d, p) == r:
                r &= _mask(d)
                p = d
                break
    while t > 0 and ((h >> (t - 1)) & 1) == ((r >> ((t - 1) % p)) & 1):
        t -= 1
        h &= _mask(t)
    return (h, t, p, r)


def canon(h, t, p, r):
    if _small(h, t, p, r):
        return _canon(h, t, p, r)
    return _py.canon(h, t, p, r)


def member(h, t, p, r, n):
    if n < 0:
        return 0
    if n < t:
        return (h >> n) & 1
    return (r >> (n % p)) & 1


cdef u64 _window(u64 h, int t, int p, u64 r, int width) noexcept:
    cdef u64 out, blocks
    if width <= 0:
        return 0
    if width <= t:
        return h & _mask(width)
    if r == 0:
        return h
    blocks = _expand(r, p, width + p if width + p <= 64 else 64)
    return h | (blocks & _mask(width) & ~_mask(t))


def window(h, t, p, r, width):
    if _small(h, t, p, r) and width <= LIMIT:
        return _window(h, t, p, r, width)
    return _py.window(h, t, p, r, width)


def shift(h, t, p, r, d):
    cdef int s
    if d == 0:
        return (h, t, p, r)
    if not _small(h, t, p, r):
        return _py.shift(h, t, p, r, d)
    if d > 0:
        if t + d > LIMIT:
            return _py.shift(h, t, p, r, d)
        return _canon(<u64>h << <int>d, t + d, p, _rotl(r, d % p, p))
    s = -d
    cdef int t2 = t - s if t > s else 0
    cdef u64 h2 = (<u64>h >> s) & _mask(t2) if t2 else 0
    return _canon(h2, t2, p, _rotr(r, s % p, p))


def intersect(h1, t1, p1, r1, h2, t2, p2, r2):
    cdef int t, q
    if _small(h1, t1, p1, r1) and _small(h2, t2, p2, r2):
        t = max(<int>t1, <int>t2)
        q = _lcm(p1, p2)
        if q <= LIMIT:
            return _canon(
                _window(h1, t1, p1, r1, t) & _window(h2, t2, p2, r2, t),
                t, q,
                _expand(r1, p1, q) & _expand(r2, p2, q) & _mask(q))
    return _py.intersect(h1, t1, p1, r1, h2, t2, p2, r2)


def union(h1, t1, p1, r1, h2, t2, p2, r2):
    cdef int t, q
    if _small(h1, t1, p1, r1) and _small(h2, t2, p2, r2):
        t = max(<int>t1, <int>t2)
        q = _lcm(p1, p2)
        if q <= LIMIT:
            return _canon(
                _window(h1, t1, p1, r1, t) | _window(h2, t2, p2, r2, t),
                t, q,
                (_expand(r1, p1, q) | _expand(r2, p2, q)) & _mask(q))
    return _py.union(h1, t1, p1, r1, h2, t2, p2, r2)


cdef int _subset(u64 h1, int t1, int p1, u64 r1,
                 u64 h2, int t2, int p2, u64 r2, int q):
    cdef int t = t1 if t1 >= t2 else t2
    if _window(h1, t1, p1, r1, t) & ~_window(h2, t2, p2, r2, t):
        return 0
    return (_expand(r1, p1, q) & ~_expand(r2, p2, q) & _mask(q)) == 0


def subset(h1, t1, p1, r1, h2, t2, p2, r2):
    cdef int q
    if _small(h1, t1, p1, r1) and _small(h2, t2, p2, r2) \
            and max(<int>t1, <int>t2) <= LIMIT:
        q = _lcm(p1, p2)
        if q <= LIMIT:
            return bool(_subset(h1, t1, p1, r1, h2, t2, p2, r2, q))
    return _py.subset(h1, t1, p1, r1, h2, t2, p2, r2)


def exists_shift_subset(h1, t1, p1, r1, h2, t2, p2, r2):
    cdef int k, q, kmax
    cdef u64 uh1, ur1
    if h1 == 0 and r1 == 0:
        return 0
    if r2 == 0 and r1 != 0:
        return None
    kmax = t2 + p2
    if _small(h1, t1, p1, r1) and _small(h2, t2, p2, r2) \
            and t1 + kmax <= LIMIT:
        q = _lcm(p1, p2)
        if q <= LIMIT:
            uh1 = h1
            ur1 = r1
            for k in range(kmax):
                if _subset(uh1 << k, t1 + k, p1, _rotl(ur1, k % p1, p1),
                           h2, t2, p2, r2, q):
                    return k
            return None
    return _py.exists_shift_subset(h1, t1, p1, r1, h2, t2, p2, r2)
