"""Cycle detection on the functional graph: two-speed pointer walks.

Works on any out-degree-1 graph stored in the array, not just permutations.
From any start the walk is rho-shaped: a tail of ``dist_to_cycle`` edges
into a cycle of ``cycle_length`` vertices.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from . import _kernels as _k
from .audited import AuditedArray
from .cycles import _check_index


class CycleInfo(NamedTuple):
    cycle_length: int
    dist_to_cycle: int


def tortoise_and_hare(a: AuditedArray, start: int) -> CycleInfo:
    """Exact (cycle_length, dist_to_cycle) for ``start``; read-only."""
    _check_index(a, start, "start")
    length, dist, r = _k.tortoise_and_hare(a._cells, start)
    a._charge(r, 0)
    return CycleInfo(int(length), int(dist))


def limited_tortoise_and_hare(
    a: AuditedArray, start: int, max_steps: int
) -> Optional[CycleInfo]:
    """Budgeted detection: None once the meet phase would exceed max_steps.

    Guarantees: a non-None result equals :func:`tortoise_and_hare`, and the
    result is non-None whenever ``dist_to_cycle + cycle_length <= max_steps``.
    Costs at most ``6 * max_steps`` reads (``max_steps = 0`` answers None
    for free).
    """
    _check_index(a, start, "start")
    if max_steps < 0:
        raise ValueError("max_steps must be >= 0")
    length, dist, r = _k.limited_tortoise_and_hare(a._cells, start, max_steps)
    a._charge(r, 0)
    if length == _k.NIL:
        return None
    return CycleInfo(int(length), int(dist))
