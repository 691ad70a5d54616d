"""Linked-segment representation of long cycles.

A *segment* is a component shaped like a path feeding a cycle; its
*beginning* is the first path vertex and its *size* its vertex count.  With
``k = ceil(sqrt(n))`` there are k*k >= n distinct (size, cycle length)
shapes with size in [k+1..2k] and cycle length in [1..k], so one segment can
spell out any vertex of [1..n].  The codec here is that bijection:

    encode(v) = ((v-1) // k + (k+1), (v-1) % k + 1)
    decode(s, c) = (s - k - 1) * k + c

(decode is the exact inverse of encode; the pair is pinned down by an
exhaustive bijection test rather than trusted on faith.)

A cycle counts as *long* when it has at least 4k+3 vertices.  Such a cycle,
reversed, is stored as a chain of segments: the one starting at the cycle
leader has size in [2k+2..4k+1] and, together with an out-of-array size word
S, encodes the next segment's beginning; every middle segment encodes its
successor the same way through its own (size, cycle length); the chain ends
in the unique segment of reserved size 2k+1, whose cycle -- the *free
cycle* -- may take any length in [1..k] and therefore doubles as a k-valued
information channel.

``check_segment_representation`` turns that definition into an executable
test: condition c1 (all other edges of the reference cycle preserved), c2
(leading segment), c3 (middle segments), c4 (trailing size-2k+1 segment).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import _kernels as _k
from .audited import AuditedArray
from .cycles import _check_index


class CorruptRepresentationError(RuntimeError):
    """The array does not hold the segment representation it should."""


def ceil_sqrt(n: int) -> int:
    """Integer ceil(sqrt(n)); no floating point involved."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = math.isqrt(n)
    if k * k < n:
        k += 1
    return k


@dataclass(frozen=True)
class SegParams:
    """Geometry constants for arrays of length ``n``: ``k = ceil(sqrt(n))``."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not (self.k - 1) ** 2 < self.n <= self.k**2:
            raise ValueError(f"k={self.k} is not ceil(sqrt({self.n}))")

    @classmethod
    def for_length(cls, n: int) -> "SegParams":
        return cls(n=n, k=ceil_sqrt(n))

    @property
    def long_cycle_threshold(self) -> int:
        """Minimum vertex count for a cycle to be stored as segments."""
        return 4 * self.k + 3

    @property
    def free_segment_size(self) -> int:
        """The reserved size marking the final segment of a chain."""
        return 2 * self.k + 1


class SegCode(NamedTuple):
    segment_size: int
    cycle_length: int


def encode(v: int, params: SegParams) -> SegCode:
    """Vertex -> (segment_size, cycle_length), sizes in [k+1..2k], lengths in [1..k]."""
    if not 1 <= v <= params.n:
        raise ValueError(f"vertex {v} outside [1..{params.n}]")
    k = params.k
    return SegCode((v - 1) // k + (k + 1), (v - 1) % k + 1)


def decode(segment_size: int, cycle_length: int, params: SegParams) -> int:
    """(segment_size, cycle_length) -> vertex; inverse of :func:`encode`."""
    k = params.k
    if not k + 1 <= segment_size <= 2 * k:
        raise ValueError(f"segment size {segment_size} outside [{k + 1}..{2 * k}]")
    if not 1 <= cycle_length <= k:
        raise ValueError(f"cycle length {cycle_length} outside [1..{k}]")
    v = (segment_size - k - 1) * k + cycle_length
    if v > params.n:
        raise CorruptRepresentationError(
            f"code ({segment_size}, {cycle_length}) decodes to {v} > n={params.n}"
        )
    return v


# -- in-array operations -------------------------------------------------------

def make_segments(
    a: AuditedArray, leader: int, params: SegParams
) -> tuple[int, int]:
    """Convert the long cycle led by ``leader`` into segments of its inverse.

    Returns ``(bg_first, S)``: the beginning of the size-(2k+1) segment
    (which the builder creates first, free cycle length 1) and the size word
    S that, with the leading segment's cycle length, encodes the second
    segment's beginning.  Touches no cell outside the cycle.

    The caller must pass the leader (smallest vertex) of a cycle with at
    least ``params.long_cycle_threshold`` vertices; this is not checked.
    """
    _check_index(a, leader, "leader")
    bg_first, s_word, r, w = _k.make_segments(a._cells, a.n, params.k, leader)
    a._charge(r, w)
    return int(bg_first), int(s_word)


def restore_long_cycle(
    a: AuditedArray, leader: int, S: int, params: SegParams
) -> int:
    """Rebuild the cycle stored as segments behind ``leader``; returns the
    free-cycle length found in the final size-(2k+1) segment.
    """
    _check_index(a, leader, "leader")
    free_len, r, w, err = _k.restore_long_cycle(a._cells, a.n, params.k, leader, S)
    a._charge(r, w)
    if err != _k.ERR_OK:
        raise CorruptRepresentationError(
            f"no well-formed segment chain behind vertex {leader} (S={S})"
        )
    return int(free_len)


def set_free_cycle_length(
    a: AuditedArray, bg: int, length: int, params: SegParams
) -> None:
    """Re-close the free cycle of the size-(2k+1) segment beginning at ``bg``
    so its cycle length becomes ``length``.  Exactly one cell is rewritten;
    size, vertex set and beginning are preserved.
    """
    _check_index(a, bg, "bg")
    if not 1 <= length <= params.k:
        raise ValueError(f"free-cycle length {length} outside [1..{params.k}]")
    entry, cmin, r, w, err = _k.set_free_cycle_length(
        a._cells, a.n, params.k, bg, length
    )
    a._charge(r, w)
    if err != _k.ERR_OK:
        raise ValueError(
            f"vertex {bg} does not begin a segment of size {params.free_segment_size}"
        )


# -- executable definition check ------------------------------------------------

@dataclass(frozen=True)
class SegmentationReport:
    """Verdict of :func:`check_segment_representation`.

    ``split_points`` are 1-based positions into the reference cycle where
    segments begin; ``segments`` holds one (size, cycle_length) pair each.
    """

    q: int
    split_points: tuple[int, ...]
    segments: tuple[tuple[int, int], ...]
    c1: bool  # every non-boundary edge of the reference cycle is present
    c2: bool  # leading segment: size in [2k+2..4k+1], (S, length) encodes next
    c3: bool  # each middle segment encodes its successor's beginning
    c4: bool  # trailing segment: size 2k+1, cycle length in [1..k], ends chain

    @property
    def passed(self) -> bool:
        return self.c1 and self.c2 and self.c3 and self.c4

    def condition_results(self) -> dict[str, bool]:
        return {"C1": self.c1, "C2": self.c2, "C3": self.c3, "C4": self.c4}


def check_segment_representation(
    a: AuditedArray,
    leader: int,
    S: int,
    reference_cycle: Sequence[int],
    params: SegParams,
) -> SegmentationReport:
    """Check that the array holds a segment representation of the reference.

    ``reference_cycle`` lists the cycle the representation should encode, in
    cycle order, starting at its leader.  Test-side helper: read-only on the
    array, free to use O(n) bookkeeping memory.
    """
    cyc = [int(v) for v in reference_cycle]
    p = len(cyc)
    if p == 0 or cyc[0] != leader:
        raise ValueError("reference cycle must start at the leader")
    vset = set(cyc)
    if len(vset) != p:
        raise ValueError("reference cycle repeats a vertex")
    k = params.k

    # discover segments by walking from each putative beginning
    splits = [1]
    segments: list[tuple[int, int]] = []
    broken_at = -1  # index of the first structurally bad segment, if any
    pos = 0
    while pos < p:
        bg = cyc[pos]
        seen: dict[int, int] = {}
        cur = bg
        escaped = False
        while cur not in seen:
            seen[cur] = len(seen)
            if cur not in vset:
                escaped = True
                break
            cur = a.read(cur)
        size = len(seen)
        if escaped:
            segments.append((size, 0))
            broken_at = len(segments) - 1
            break
        cl = size - seen[cur]
        segments.append((size, cl))
        arc = cyc[pos : pos + size]
        if seen[cur] < 1 or len(arc) != size or set(arc) != set(seen):
            broken_at = len(segments) - 1
            break
        pos += size
        if pos < p:
            splits.append(pos + 1)

    q = len(segments)
    complete = broken_at < 0 and pos == p

    # c1: all reference edges except the q-1 segment boundaries survive
    boundary = {s - 1 for s in splits[1:]}
    c1 = True
    for i in range(1, p):
        if i in boundary:
            continue
        if a.read(cyc[i - 1]) != cyc[i]:
            c1 = False
            break

    # c2: leading segment
    c2 = (
        q >= 2
        and broken_at != 0
        and 2 * k + 2 <= segments[0][0] <= 4 * k + 1
        and len(splits) >= 2
        and SegCode(S, segments[0][1]) == encode(cyc[splits[1] - 1], params)
    )

    # c3: middle segments each encode the next beginning
    c3 = True
    for j in range(1, q - 1):
        if broken_at == j or j + 1 >= len(splits):
            c3 = False
            break
        size, cl = segments[j]
        if SegCode(size, cl) != encode(cyc[splits[j + 1] - 1], params):
            c3 = False
            break
    if 0 <= broken_at < q - 1 and broken_at >= 1:
        c3 = False

    # c4: trailing segment has the reserved size and a legal free cycle
    last_size, last_cl = segments[-1]
    c4 = (
        complete
        and q >= 2
        and last_size == 2 * k + 1
        and 1 <= last_cl <= k
    )

    return SegmentationReport(
        q=q,
        split_points=tuple(splits),
        segments=tuple(segments),
        c1=c1,
        c2=c2,
        c3=c3,
        c4=c4,
    )
