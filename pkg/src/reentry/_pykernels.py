"""Pure-Python exact kernels.

All kernels work on integer weights (the caller scales rational weights by
their common denominator) and mirror the compiled versions in
``_kernels.pyx`` step for step, including tie handling, so both backends
return identical values and argmins.
"""

from __future__ import annotations

from itertools import product

from .core import GuardExceeded

NAME = "python"


def dp_solve(m, loops, weights, max_states):
    """Forward DP over per-progression loop counts.

    ``loops``/``weights`` are in processing (WSPT) order.  Progression ``i``
    starts at time ``i``, so a job ending with ``c`` loops of that
    progression behind it completes at ``i + m*c``.  Returns the optimal
    value and the chosen progression of every job in processing order.
    """
    cur = {(0,) * m: 0}
    parents = []
    for l, w in zip(loops, weights):
        nxt = {}
        par = {}
        for key, val in cur.items():
            for i in range(m):
                c = key[i] + l
                v = val + w * (i + m * c)
                nk = key[:i] + (c,) + key[i + 1:]
                old = nxt.get(nk)
                if old is None or v < old:
                    nxt[nk] = v
                    par[nk] = (key, i)
        if len(nxt) > max_states:
            raise GuardExceeded(f"DP layer holds {len(nxt)} states, limit is {max_states}")
        parents.append(par)
        cur = nxt
    key = min(cur, key=cur.__getitem__)
    best = cur[key]
    choices = []
    for par in reversed(parents):
        key, i = par[key]
        choices.append(i)
    choices.reverse()
    return best, choices


def brute_solve(m, loops, weights, order):
    """Enumerate all ``m**n`` progression assignments in lexicographic order.

    Jobs inside a progression run in ``order``.  The first assignment that
    attains the minimum wins.
    """
    best = None
    best_assign = None
    for assign in product(range(m), repeat=len(loops)):
        cum = [0] * m
        cost = 0
        for j in order:
            p = assign[j]
            cum[p] += loops[j]
            cost += weights[j] * (p + m * cum[p])
        if best is None or cost < best:
            best, best_assign = cost, assign
    return best, list(best_assign)


def sequence_solve(m, loops, weights):
    """Minimum over all precedence-respecting loop sequences with
    semi-active timing; depth-first with a completion-time lower bound."""
    n = len(loops)
    done = [0] * n
    ready = [0] * n
    best = [None]

    def bound(prev, partial):
        b = partial
        for j in range(n):
            rem = loops[j] - done[j]
            if rem:
                b += weights[j] * (max(prev + 1, ready[j]) + m * rem)
        return b

    def rec(prev, partial, left):
        if left == 0:
            if best[0] is None or partial < best[0]:
                best[0] = partial
            return
        if best[0] is not None and bound(prev, partial) >= best[0]:
            return
        for j in range(n):
            if done[j] == loops[j]:
                continue
            s = max(prev + 1, ready[j])
            saved = ready[j]
            done[j] += 1
            ready[j] = s + m
            add = weights[j] * (s + m) if done[j] == loops[j] else 0
            rec(s, partial + add, left - 1)
            done[j] -= 1
            ready[j] = saved

    rec(-1, 0, sum(loops))
    return best[0]
