# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact kernels; see ``_pykernels`` for the reference semantics.

Values are int64.  Callers check that every objective fits before calling
and fall back to the Python kernels otherwise; ``dp_solve`` additionally
returns None when the loop-count vector cannot be packed into 64 bits.
"""

from libc.stdint cimport int64_t, uint64_t, int32_t, int8_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref

from .core import GuardExceeded

NAME = "cython"


def dp_solve(int m, loops, weights, long long max_states):
    cdef int n = len(loops)
    cdef int total = sum(loops)
    cdef int bits = max(1, int(total).bit_length())
    if m * bits > 64:
        return None
    cdef uint64_t mask = (<uint64_t>1 << bits) - 1 if bits < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF

    cdef vector[vector[uint64_t]] keys
    cdef vector[vector[int64_t]] vals
    cdef vector[vector[int32_t]] par
    cdef vector[vector[int8_t]] choice
    cdef unordered_map[uint64_t, int32_t] index
    cdef vector[uint64_t] init_k
    cdef vector[int64_t] init_v
    init_k.push_back(0)
    init_v.push_back(0)
    keys.push_back(init_k)
    vals.push_back(init_v)
    par.push_back(vector[int32_t]())
    choice.push_back(vector[int8_t]())

    cdef int j, i
    cdef int32_t idx
    cdef size_t s, ns
    cdef int64_t l, w, v, c
    cdef uint64_t key, nk
    cdef unordered_map[uint64_t, int32_t].iterator it
    for j in range(n):
        l = loops[j]
        w = weights[j]
        keys.push_back(vector[uint64_t]())
        vals.push_back(vector[int64_t]())
        par.push_back(vector[int32_t]())
        choice.push_back(vector[int8_t]())
        index.clear()
        ns = keys[j].size()
        for s in range(ns):
            key = keys[j][s]
            for i in range(m):
                c = <int64_t>((key >> (i * bits)) & mask) + l
                v = vals[j][s] + w * (i + m * c)
                nk = key + (<uint64_t>l << (i * bits))
                it = index.find(nk)
                if it == index.end():
                    index[nk] = <int32_t>keys[j + 1].size()
                    keys[j + 1].push_back(nk)
                    vals[j + 1].push_back(v)
                    par[j + 1].push_back(<int32_t>s)
                    choice[j + 1].push_back(<int8_t>i)
                else:
                    idx = deref(it).second
                    if v < vals[j + 1][idx]:
                        vals[j + 1][idx] = v
                        par[j + 1][idx] = <int32_t>s
                        choice[j + 1][idx] = <int8_t>i
        if <long long>keys[j + 1].size() > max_states:
            raise GuardExceeded(
                f"DP layer holds {keys[j + 1].size()} states, limit is {max_states}"
            )

    cdef size_t best_s = 0
    cdef int64_t best = vals[n][0]
    for s in range(1, keys[n].size()):
        if vals[n][s] < best:
            best = vals[n][s]
            best_s = s
    out = [0] * n
    s = best_s
    for j in range(n, 0, -1):
        out[j - 1] = choice[j][s]
        s = par[j][s]
    return best, out


def brute_solve(int m, loops, weights, order):
    cdef int n = len(loops)
    cdef vector[int64_t] lp, wt, cum
    cdef vector[int] ordv, assign, best_assign
    cdef int j, p, q, pos
    cdef int64_t cost, best = -1
    for j in range(n):
        lp.push_back(loops[j])
        wt.push_back(weights[j])
        ordv.push_back(order[j])
        assign.push_back(0)
    cum.resize(m)
    while True:
        for p in range(m):
            cum[p] = 0
        cost = 0
        for pos in range(n):
            j = ordv[pos]
            p = assign[j]
            cum[p] += lp[j]
            cost += wt[j] * (p + m * cum[p])
        if best < 0 or cost < best:
            best = cost
            best_assign = assign
        # odometer, last job least significant
        q = n - 1
        while q >= 0:
            assign[q] += 1
            if assign[q] < m:
                break
            assign[q] = 0
            q -= 1
        if q < 0:
            break
    return best, [best_assign[j] for j in range(n)]


cdef int64_t sum_loops(vector[int64_t]& lp) noexcept nogil:
    cdef int64_t t = 0
    cdef size_t i
    for i in range(lp.size()):
        t += lp[i]
    return t


cdef struct SeqCtx:
    int n
    int64_t m
    int64_t best
    int64_t* loops
    int64_t* weights
    int64_t* done
    int64_t* ready


cdef void _seq_rec(SeqCtx* ctx, int64_t prev, int64_t partial, int64_t left) noexcept nogil:
    cdef int j
    cdef int64_t b, rem, s, saved, add, st
    if left == 0:
        if ctx.best < 0 or partial < ctx.best:
            ctx.best = partial
        return
    if ctx.best >= 0:
        b = partial
        for j in range(ctx.n):
            rem = ctx.loops[j] - ctx.done[j]
            if rem:
                st = prev + 1
                if ctx.ready[j] > st:
                    st = ctx.ready[j]
                b += ctx.weights[j] * (st + ctx.m * rem)
        if b >= ctx.best:
            return
    for j in range(ctx.n):
        if ctx.done[j] == ctx.loops[j]:
            continue
        s = prev + 1
        if ctx.ready[j] > s:
            s = ctx.ready[j]
        saved = ctx.ready[j]
        ctx.done[j] += 1
        ctx.ready[j] = s + ctx.m
        add = ctx.weights[j] * (s + ctx.m) if ctx.done[j] == ctx.loops[j] else 0
        _seq_rec(ctx, s, partial + add, left - 1)
        ctx.done[j] -= 1
        ctx.ready[j] = saved


def sequence_solve(int m, loops, weights):
    cdef int n = len(loops)
    cdef vector[int64_t] lp, wt, done, ready
    cdef int j
    for j in range(n):
        lp.push_back(loops[j])
        wt.push_back(weights[j])
        done.push_back(0)
        ready.push_back(0)
    cdef SeqCtx ctx
    ctx.n = n
    ctx.m = m
    ctx.best = -1
    ctx.loops = lp.data()
    ctx.weights = wt.data()
    ctx.done = done.data()
    ctx.ready = ready.data()
    with nogil:
        _seq_rec(&ctx, -1, 0, sum_loops(lp))
    return ctx.best
