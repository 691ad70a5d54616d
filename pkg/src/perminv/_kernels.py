"""Compiled inner loops for the inverters and cycle machinery.

Every kernel works on the 1-indexed ``int64`` buffer of an
:class:`~perminv.audited.AuditedArray` (slot 0 unused) and returns the exact
number of cell reads and writes it performed, so the Python wrappers can
charge the audit counters.  Kernels keep only O(1) scalar locals beside the
buffer; nothing here allocates.

Values written back into the buffer are always vertex ids that were either
read from the buffer, taken from the loop index, or produced by the segment
codec and bounds-checked first, so the [1..n] cell invariant is preserved.
Kernels flag structural trouble through an ``err`` slot instead of raising;
the wrappers translate.

NIL is encoded as -1 in kernel land.
"""

from __future__ import annotations

from numba import njit

NIL = -1

# err codes shared by the segment kernels
ERR_OK = 0
ERR_CORRUPT = 1
ERR_NOT_FREE_SEGMENT = 2


@njit(cache=True, nogil=True)
def reverse_cycle(t, start):
    """Reverse every edge of the cycle through ``start``.

    Undefined (non-terminating) if ``start`` is not on a cycle.
    Returns (reads, writes).
    """
    reads = 0
    writes = 0
    cur = t[start]
    reads += 1
    prev = start
    while cur != start:
        nxt = t[cur]
        reads += 1
        t[cur] = prev
        writes += 1
        prev = cur
        cur = nxt
    t[start] = prev
    writes += 1
    return reads, writes


@njit(cache=True, nogil=True)
def cycle_leader(t, start):
    """Smallest vertex on the cycle through ``start``; read-only.

    Returns (leader, reads).
    """
    reads = 0
    smallest = start
    cur = t[start]
    reads += 1
    while cur != start:
        if cur < smallest:
            smallest = cur
        cur = t[cur]
        reads += 1
    return smallest, reads


@njit(cache=True, nogil=True)
def invert_quadratic(t, n):
    """Folklore inverter: reverse each cycle once, at its leader."""
    reads = 0
    writes = 0
    for i in range(1, n + 1):
        lead, r = cycle_leader(t, i)
        reads += r
        if lead == i:
            r, w = reverse_cycle(t, i)
            reads += r
            writes += w
    return reads, writes


@njit(cache=True, nogil=True)
def tortoise_and_hare(t, start):
    """Two-speed cycle detection; exact (cycle_length, dist_to_cycle, reads).

    The catch-up phase checks before stepping so a start that already sits
    on its cycle reports distance 0.
    """
    reads = 0
    tort = start
    hare = start
    while True:
        tort = t[tort]
        reads += 1
        mid = t[hare]
        reads += 1
        hare = t[mid]
        reads += 1
        if tort == hare:
            break
    dist = 0
    hare = start
    while tort != hare:
        tort = t[tort]
        reads += 1
        hare = t[hare]
        reads += 1
        dist += 1
    length = 0
    cur = tort
    while True:
        cur = t[cur]
        reads += 1
        length += 1
        if cur == tort:
            break
    return length, dist, reads


@njit(cache=True, nogil=True)
def limited_tortoise_and_hare(t, start, max_steps):
    """Budgeted variant: NIL (-1, -1) once the meet phase exceeds max_steps.

    Any non-NIL answer equals the unbounded routine, and the answer is
    guaranteed whenever dist + length <= max_steps.  Worst case 6*max_steps
    reads: 3 per meet-phase step plus up to 2*dist + length afterwards, each
    of which is bounded by the meet step count.
    """
    reads = 0
    tort = start
    hare = start
    budget = max_steps
    while True:
        if budget == 0:
            return NIL, NIL, reads
        tort = t[tort]
        reads += 1
        mid = t[hare]
        reads += 1
        hare = t[mid]
        reads += 1
        budget -= 1
        if tort == hare:
            break
    dist = 0
    hare = start
    while tort != hare:
        tort = t[tort]
        reads += 1
        hare = t[hare]
        reads += 1
        dist += 1
    length = 0
    cur = tort
    while True:
        cur = t[cur]
        reads += 1
        length += 1
        if cur == tort:
            break
    return length, dist, reads


@njit(cache=True, nogil=True)
def make_segments(t, n, k, leader):
    """Split the long cycle at ``leader`` into the linked-segment form.

    On return the cycle's vertices hold a segment representation of the
    cycle's inverse: a chain of path+cycle components whose sizes and cycle
    lengths encode, component by component, where the next one begins.  The
    component built first has the reserved size 2k+1 and carries the free
    cycle (length starts at 1).  Returns
    (bg_first, s_last, reads, writes): the beginning of the free-cycle
    component and the size word that decodes the second component, to be
    kept outside the array.

    Caller guarantees ``leader`` is the smallest vertex of a cycle with at
    least 4k+3 vertices.
    """
    reads = 0
    writes = 0
    to_encode = leader
    v1 = t[leader]
    reads += 1
    bg_first = NIL
    s = 0
    while True:
        # stop once the leader sits within the next 2k+1 vertices
        found = v1 == leader
        cur = v1
        steps = 0
        while not found and steps < 2 * k:
            cur = t[cur]
            reads += 1
            steps += 1
            if cur == leader:
                found = True
        if found:
            break
        first_seg = to_encode == leader
        if first_seg:
            s = 2 * k + 1
            cl = 1  # free cycle; any length in [1..k] works here
        else:
            s = (to_encode - 1) // k + (k + 1)
            cl = (to_encode - 1) % k + 1
        # reverse the s-1 edges after v1, remembering the vertex that will
        # close the in-segment cycle (position cl along the original order)
        vcl = v1
        prev = v1
        cur = t[v1]
        reads += 1
        idx = 1
        while idx < s:
            idx += 1
            nxt = t[cur]
            reads += 1
            t[cur] = prev
            writes += 1
            prev = cur
            if idx == cl:
                vcl = cur
            cur = nxt
        if first_seg:
            bg_first = prev  # the segment's beginning: 2k edges past v1
        t[v1] = vcl
        writes += 1
        to_encode = prev
        v1 = cur
    # reverse the leftover path (v1 .. leader) and hang it off the last
    # segment built, which grows into the component that starts at leader
    prev = to_encode
    cur = v1
    while cur != leader:
        nxt = t[cur]
        reads += 1
        t[cur] = prev
        writes += 1
        prev = cur
        cur = nxt
    t[leader] = prev
    writes += 1
    return bg_first, s, reads, writes


@njit(cache=True, nogil=True)
def set_free_cycle_length(t, n, k, bg, new_len):
    """Re-close the free cycle of the size-(2k+1) component at ``bg``.

    Rewrites exactly one cell: the outgoing edge of the component's last
    vertex now targets the vertex 2k+1-new_len steps from ``bg``, so the
    component keeps its size, vertex set and beginning while its cycle
    length becomes ``new_len``.  Returns
    (entry, cycle_min, reads, writes, err) where entry is the new cycle's
    entry vertex and cycle_min the smallest vertex now on the cycle --
    the caller may need those to keep reversal bookkeeping straight.
    """
    reads = 0
    writes = 0
    length, dist, r = tortoise_and_hare(t, bg)
    reads += r
    if length + dist != 2 * k + 1:
        return NIL, NIL, reads, writes, ERR_NOT_FREE_SEGMENT
    entry_pos = 2 * k + 1 - new_len
    entry = NIL
    cmin = n + 1
    cur = bg
    pos = 0
    while pos < 2 * k:
        cur = t[cur]
        reads += 1
        pos += 1
        if pos == entry_pos:
            entry = cur
            cmin = cur
        elif pos > entry_pos and cur < cmin:
            cmin = cur
    t[cur] = entry
    writes += 1
    return entry, cmin, reads, writes, ERR_OK


@njit(cache=True, nogil=True)
def restore_long_cycle(t, n, k, leader, s_word):
    """Rebuild the long cycle whose segment representation starts at leader.

    Follows the component chain: each component's (size, cycle length) pair
    decodes where the next one begins; the size-(2k+1) component ends the
    chain and its closing edge is pointed back at the leader.  Returns
    (free_len, reads, writes, err) where free_len is that last component's
    cycle length -- the information channel threaded between long cycles.

    err is ERR_CORRUPT if a decode leaves [1..n] or more than n vertices
    are visited without meeting the size-(2k+1) component.
    """
    reads = 0
    writes = 0
    length, dist, r = tortoise_and_hare(t, leader)
    reads += r
    size = length + dist
    last = leader
    j = 0
    while j < size - 1:
        last = t[last]
        reads += 1
        j += 1
    decoded = (s_word - k - 1) * k + length
    if decoded < 1 or decoded > n:
        return NIL, reads, writes, ERR_CORRUPT
    t[last] = decoded
    writes += 1
    bg = decoded
    visited = size
    while True:
        length, dist, r = tortoise_and_hare(t, bg)
        reads += r
        size = length + dist
        visited += size
        if visited > n:
            return NIL, reads, writes, ERR_CORRUPT
        last = bg
        j = 0
        while j < size - 1:
            last = t[last]
            reads += 1
            j += 1
        if size == 2 * k + 1:
            t[last] = leader
            writes += 1
            return length, reads, writes, ERR_OK
        decoded = (size - k - 1) * k + length
        if decoded < 1 or decoded > n:
            return NIL, reads, writes, ERR_CORRUPT
        t[last] = decoded
        writes += 1
        bg = decoded


@njit(cache=True, nogil=True)
def sqrt_pass1(t, n, k):
    """First sweep: segment long cycles, reverse short cycles at leaders.

    Long cycles announce themselves by a NIL from the budgeted detector
    (segments never exceed 4k+1 vertices, short cycles 4k+2).  The first
    vertex of a long cycle the sweep meets is its smallest, hence its
    leader; the scan below re-checks that cheaply and bails at the first
    smaller vertex.  Each new representation's size word is parked in the
    previous representation's free cycle (shifted by -k into [1..k]); the
    first goes to the caller.

    When re-closing a free cycle pulls vertices below the sweep index onto
    it, that cycle would miss its one pass-1 reversal, so it is reversed
    here on the spot.  Returns (storage, first_s, reads, writes, err).
    """
    reads = 0
    writes = 0
    storage = NIL
    first_s = NIL
    bound = 4 * k + 2
    for i in range(1, n + 1):
        length, dist, r = limited_tortoise_and_hare(t, i, bound)
        reads += r
        if length == NIL:
            cur = t[i]
            reads += 1
            is_leader = True
            while cur != i:
                if cur < i:
                    is_leader = False
                    break
                cur = t[cur]
                reads += 1
            if is_leader:
                bg, s_word, r2, w2 = make_segments(t, n, k, i)
                reads += r2
                writes += w2
                if storage == NIL:
                    first_s = s_word
                else:
                    entry, cmin, r3, w3, err = set_free_cycle_length(
                        t, n, k, storage, s_word - k
                    )
                    reads += r3
                    writes += w3
                    if err != ERR_OK:
                        return storage, first_s, reads, writes, err
                    if cmin < i:
                        r4, w4 = reverse_cycle(t, entry)
                        reads += r4
                        writes += w4
                storage = bg
        elif dist >= 1:
            continue
        else:
            lead, r5 = cycle_leader(t, i)
            reads += r5
            if lead == i:
                r6, w6 = reverse_cycle(t, i)
                reads += r6
                writes += w6
    return storage, first_s, reads, writes, ERR_OK


@njit(cache=True, nogil=True)
def sqrt_pass2(t, n, k):
    """Second sweep: re-reverse every in-segment cycle, exactly once each.

    Each such cycle has exactly one vertex at distance 1 on its tail, which
    triggers the reversal.  Returns (reversals, reads, writes).
    """
    reads = 0
    writes = 0
    reversals = 0
    bound = 4 * k + 2
    for i in range(1, n + 1):
        length, dist, r = limited_tortoise_and_hare(t, i, bound)
        reads += r
        if dist == 1:
            tgt = t[i]
            reads += 1
            r2, w2 = reverse_cycle(t, tgt)
            reads += r2
            writes += w2
            reversals += 1
    return reversals, reads, writes


@njit(cache=True, nogil=True)
def sqrt_pass3(t, n, k, first_s):
    """Third sweep: restore every long cycle, threading the size words.

    Tail vertices only exist inside representations, and the first one the
    sweep meets per representation is the original leader, so each restore
    fires exactly once.  Restored long cycles report NIL afterwards (their
    length exceeds the 4k+1 budget) and are skipped.
    Returns (reads, writes, err).
    """
    reads = 0
    writes = 0
    s_word = first_s
    bound = 4 * k + 1
    for i in range(1, n + 1):
        length, dist, r = limited_tortoise_and_hare(t, i, bound)
        reads += r
        if dist >= 1:
            if s_word < k + 1 or s_word > 2 * k:
                return reads, writes, ERR_CORRUPT
            free_len, r2, w2, err = restore_long_cycle(t, n, k, i, s_word)
            reads += r2
            writes += w2
            if err != ERR_OK:
                return reads, writes, err
            s_word = free_len + k
    return reads, writes, ERR_OK


@njit(cache=True, nogil=True)
def invert_randomized(t, n, a_coef, b_coef, prime):
    """Hash-leader inverter: reverse at the cycle's smallest hash value.

    h(x) = (a_coef*x + b_coef) mod prime, compared as the pair (h(x), x) so
    collisions break ties by index and every seed is safe.  A reversal
    attempt that meets a smaller pair walks its reversed prefix backwards,
    restoring the original cells, then moves on.
    """
    reads = 0
    writes = 0
    for i in range(1, n + 1):
        hi = (a_coef * i + b_coef) % prime
        cur = t[i]
        reads += 1
        prev = i
        aborted = False
        while cur != i:
            hc = (a_coef * cur + b_coef) % prime
            if hc < hi or (hc == hi and cur < i):
                back = prev
                fwd = cur
                while back != i:
                    nxt = t[back]
                    reads += 1
                    t[back] = fwd
                    writes += 1
                    fwd = back
                    back = nxt
                aborted = True
                break
            nxt = t[cur]
            reads += 1
            t[cur] = prev
            writes += 1
            prev = cur
            cur = nxt
        if not aborted:
            t[i] = prev
            writes += 1
    return reads, writes
