"""Single-cycle primitives and the folklore quadratic inverter.

``reverse_cycle`` and ``cycle_leader`` assume their start vertex lies on a
cycle of the array's functional graph; called on a tail vertex they do not
terminate, exactly like the textbook loops they implement.  The library
entry points that hand arbitrary input to these routines validate first.
"""

from __future__ import annotations

from . import _kernels as _k
from .audited import AuditedArray, IndexViolationError


def _check_index(a: AuditedArray, i: int, name: str) -> None:
    if not 1 <= i <= a.n:
        raise IndexViolationError(f"{name} {i} outside [1..{a.n}]")


def reverse_cycle(a: AuditedArray, start: int) -> None:
    """Reverse every edge of the cycle through ``start``; an involution."""
    _check_index(a, start, "start")
    r, w = _k.reverse_cycle(a._cells, start)
    a._charge(r, w)


def cycle_leader(a: AuditedArray, start: int) -> int:
    """Smallest vertex on the cycle through ``start``.  Never writes."""
    _check_index(a, start, "start")
    lead, r = _k.cycle_leader(a._cells, start)
    a._charge(r, 0)
    return int(lead)


def invert_quadratic(a: AuditedArray) -> None:
    """Invert a permutation in place by reversing each cycle at its leader.

    Quadratic in the worst case: every vertex pays one full leader walk.
    """
    r, w = _k.invert_quadratic(a._cells, a.n)
    a._charge(r, w)
