# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels for graphs of at most 64 vertices (uint64 bitmasks).

Mirrors ``bicliques._fallback`` exactly, including emission order.
"""

from libc.stdint cimport uint64_t
from libcpp.vector cimport vector

cdef enum:
    STACK = 64 * 65

MAX_SMALL = 64
MAX_ORACLE = 20


cdef inline int _low(uint64_t m) nogil:
    return __builtin_ctzll(m)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef class MisIterator:
    """Lexicographic MIS enumeration over local adjacency masks."""

    cdef uint64_t adj[64]
    cdef uint64_t rs[STACK]
    cdef uint64_t ps[STACK]
    cdef uint64_t xs[STACK]
    cdef int top
    cdef bint empty_pending

    def __cinit__(self, adj):
        cdef int k = len(adj)
        cdef int i
        if k > 64:
            raise ValueError("MisIterator handles at most 64 vertices")
        for i in range(k):
            self.adj[i] = <uint64_t>adj[i]
        self.top = 0
        self.empty_pending = k == 0
        if k > 0:
            self.rs[0] = 0
            self.ps[0] = (<uint64_t>1 << k) - 1 if k < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
            self.xs[0] = 0
            self.top = 1

    def __iter__(self):
        return self

    def __next__(self):
        cdef uint64_t r
        if self.empty_pending:
            self.empty_pending = False
            return 0
        if self._advance(&r):
            return r
        raise StopIteration

    cdef bint _advance(self, uint64_t* found):
        cdef uint64_t r, p, x, t, low, rest, nv
        cdef int v, start, i, j
        cdef uint64_t tmp
        cdef bint dead
        while self.top > 0:
            self.top -= 1
            r = self.rs[self.top]
            p = self.ps[self.top]
            x = self.xs[self.top]
            if p == 0:
                if x == 0:
                    found[0] = r
                    return True
                continue
            t = x
            dead = False
            while t:
                v = _low(t)
                if (self.adj[v] & p) == 0:
                    dead = True
                    break
                t &= t - 1
            if dead:
                continue
            start = self.top
            rest = p
            while rest:
                v = _low(rest)
                low = (<uint64_t>1) << v
                rest ^= low
                nv = self.adj[v]
                self.rs[self.top] = r | low
                self.ps[self.top] = rest & ~nv
                self.xs[self.top] = x & ~nv
                self.top += 1
                x |= low
            i = start
            j = self.top - 1
            while i < j:
                tmp = self.rs[i]; self.rs[i] = self.rs[j]; self.rs[j] = tmp
                tmp = self.ps[i]; self.ps[i] = self.ps[j]; self.ps[j] = tmp
                tmp = self.xs[i]; self.xs[i] = self.xs[j]; self.xs[j] = tmp
                i += 1
                j -= 1
        return False


def mis_small(adj):
    return MisIterator(adj)


cdef void _mis_into(const uint64_t* adj, uint64_t restrict, vector[uint64_t]& out,
                    uint64_t* rs, uint64_t* ps, uint64_t* xs) nogil:
    cdef int top = 1
    cdef uint64_t r, p, x, t, rest, low, nv
    cdef int v, start, i, j
    cdef uint64_t tmp
    cdef bint dead
    rs[0] = 0
    ps[0] = restrict
    xs[0] = 0
    while top > 0:
        top -= 1
        r = rs[top]
        p = ps[top]
        x = xs[top]
        if p == 0:
            if x == 0:
                out.push_back(r)
            continue
        t = x
        dead = False
        while t:
            v = _low(t)
            if (adj[v] & p) == 0:
                dead = True
                break
            t &= t - 1
        if dead:
            continue
        start = top
        rest = p
        while rest:
            v = _low(rest)
            low = (<uint64_t>1) << v
            rest ^= low
            nv = adj[v]
            rs[top] = r | low
            ps[top] = rest & ~nv
            xs[top] = x & ~nv
            top += 1
            x |= low
        i = start
        j = top - 1
        while i < j:
            tmp = rs[i]; rs[i] = rs[j]; rs[j] = tmp
            tmp = ps[i]; ps[i] = ps[j]; ps[j] = tmp
            tmp = xs[i]; xs[i] = xs[j]; xs[j] = tmp
            i += 1
            j -= 1


def all_mibs_small(adj):
    """Canonical ``(a, b)`` mask pairs of every maximal induced biclique (n <= 20)."""
    cdef int n = len(adj)
    if n > MAX_ORACLE:
        raise ValueError(f"oracle refuses graphs with more than {MAX_ORACLE} vertices (n={n})")
    cdef uint64_t a_adj[64]
    cdef uint64_t rs[STACK]
    cdef uint64_t ps[STACK]
    cdef uint64_t xs[STACK]
    cdef int i, v
    for i in range(n):
        a_adj[i] = <uint64_t>adj[i]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t size = (<uint64_t>1) << n
    cdef vector[uint64_t] union_, common
    cdef vector[char] indep
    union_.resize(size, 0)
    common.resize(size, full)
    indep.resize(size, 1)
    cdef vector[uint64_t] found
    cdef vector[uint64_t] pairs_a, pairs_b
    cdef uint64_t a, low, prev, grow_a, b, c, t
    for a in range(1, size):
        low = a & (~a + 1)
        v = _low(a)
        prev = a ^ low
        indep[a] = indep[prev] and (a_adj[v] & prev) == 0
        union_[a] = union_[prev] | a_adj[v]
        common[a] = common[prev] & a_adj[v]
        if not indep[a] or common[a] == 0:
            continue
        grow_a = full & ~(union_[a] | a)
        found.clear()
        _mis_into(a_adj, common[a], found, rs, ps, xs)
        for i in range(<int>found.size()):
            b = found[i]
            c = full
            t = b
            while t:
                c &= a_adj[_low(t)]
                t &= t - 1
            if grow_a & c:
                continue
            if low < (b & (~b + 1)):
                pairs_a.push_back(a)
                pairs_b.push_back(b)
            else:
                pairs_a.push_back(b)
                pairs_b.push_back(a)
    out = set()
    for i in range(<int>pairs_a.size()):
        out.add((pairs_a[i], pairs_b[i]))
    return out
