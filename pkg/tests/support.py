"""Shared test helpers: brute-force oracles and instance builders.

Everything here is deliberately independent of the library's fast paths:
the rho oracle walks with a visited set, the inverse oracle scans for
preimages, and the census decomposes cycles with a seen-array.  Tests use
these to cross-check the in-place implementations.
"""

from __future__ import annotations

import itertools
import random


def all_perms(n):
    """Every permutation of [1..n], as 1-based tuples."""
    return itertools.permutations(range(1, n + 1))


def rho_oracle(vals, start):
    """(cycle_length, dist_to_cycle) via a visited-set walk."""
    pos = {}
    cur = start
    i = 0
    while cur not in pos:
        pos[cur] = i
        cur = vals[cur - 1]
        i += 1
    return i - pos[cur], pos[cur]


def brute_inverse(vals):
    """Inverse by preimage scan; quadratic on purpose."""
    n = len(vals)
    out = []
    for target in range(1, n + 1):
        for i in range(1, n + 1):
            if vals[i - 1] == target:
                out.append(i)
                break
    return out


def cycle_census(vals):
    """Cycles of a permutation, each led by its smallest vertex, leader order."""
    n = len(vals)
    seen = [False] * (n + 1)
    cycles = []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        cur = vals[i - 1]
        while cur != i:
            cyc.append(cur)
            seen[cur] = True
            cur = vals[cur - 1]
        cycles.append(cyc)
    return cycles


def attached_cycle_count(vals):
    """Cycles of the functional graph that have at least one tail vertex."""
    n = len(vals)
    on_cycle = set()
    cycle_id = {}
    cycles = []
    for start in range(1, n + 1):
        pos = {}
        cur = start
        while cur not in pos and cur not in cycle_id:
            pos[cur] = len(pos)
            cur = vals[cur - 1]
        if cur in pos:  # found a new cycle
            cyc = []
            x = cur
            while True:
                cyc.append(x)
                x = vals[x - 1]
                if x == cur:
                    break
            cid = len(cycles)
            cycles.append(set(cyc))
            for v in cyc:
                cycle_id[v] = cid
                on_cycle.add(v)
    attached = set()
    for v in range(1, n + 1):
        if v not in on_cycle:
            cur = v
            while cur not in cycle_id:
                cur = vals[cur - 1]
            attached.add(cycle_id[cur])
    return len(attached)


def cycle_from(vals, start):
    """The cycle through ``start`` in cycle order (start first)."""
    cyc = [start]
    cur = vals[start - 1]
    while cur != start:
        cyc.append(cur)
        cur = vals[cur - 1]
    return cyc


def single_cycle_vals(n, seed):
    """A uniformly shuffled single n-cycle, as a value list."""
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return cycles_to_vals(n, [order])


def cycles_to_vals(n, cycles):
    vals = [0] * (n + 1)
    for cyc in cycles:
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            vals[x] = y
    return vals[1:]


def random_functional_graph(n, seed):
    rng = random.Random(seed)
    return [rng.randint(1, n) for _ in range(n)]


def partitioned_cycles_vals(n, cycle_len, seed):
    """n split into shuffled cycles of exactly ``cycle_len`` (last may be short)."""
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    cycles = [order[i : i + cycle_len] for i in range(0, n, cycle_len)]
    return cycles_to_vals(n, cycles)
