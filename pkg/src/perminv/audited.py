"""Range-audited array: the memory model every inverter runs against.

An :class:`AuditedArray` holds ``n`` cells, 1-indexed, and enforces two rules:

* every cell value lies in ``[1..n]`` at all times (checked on write), and
* every cell read and every cell write bumps a monotone counter.

The array does not have to be a permutation; any out-degree-1 functional
graph is representable (read cell ``i`` as the edge ``i -> t[i]``), and the
inverters are allowed to pass through non-permutation states mid-run.  What
they can never do is store a value outside ``[1..n]`` -- an attempt raises
:class:`RangeViolationError`, and any such error escaping an inverter is a
bug.

The counters audit the array only.  Scalar locals used by the algorithms are
free, which matches the in-place model this library targets: O(log n) bits of
working memory beside the array.  Performance-critical routines operate on
the backing buffer through compiled kernels; they count their accesses
exactly like :meth:`AuditedArray.read` / :meth:`AuditedArray.write` would and
write only values read from the array, loop indices, or bounds-checked
decodes, so the cell-range invariant survives the fast path.

An instance is confined to one thread of control at a time.  It may be handed
between threads, but concurrent access is not supported; run disjoint
instances in parallel instead.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np


class IndexViolationError(IndexError):
    """An index outside ``[1..n]`` was used to address the array."""


class RangeViolationError(ValueError):
    """A write (or initial cell) carried a value outside ``[1..n]``."""


class AuditedArray:
    """``n`` cells over ``[1..n]`` with exact read/write accounting.

    Parameters
    ----------
    values:
        Initial cell contents, 1-based values.  Length defines ``n``.
        Values must lie in ``[1..n]`` but need not be distinct.
    """

    __slots__ = ("_t", "_n", "_reads", "_writes")

    def __init__(self, values: Iterable[int]):
        cells = list(values)
        n = len(cells)
        if n < 1:
            raise ValueError("array needs at least one cell")
        t = np.zeros(n + 1, dtype=np.int64)  # slot 0 unused: cells are 1-indexed
        for i, v in enumerate(cells, start=1):
            v = int(v)
            if v < 1 or v > n:
                raise RangeViolationError(
                    f"cell {i} holds {v}, outside [1..{n}]"
                )
            t[i] = v
        self._t = t
        self._n = n
        self._reads = 0
        self._writes = 0

    # -- audited access ----------------------------------------------------

    def read(self, i: int) -> int:
        """Return cell ``i`` and count one read."""
        if not 1 <= i <= self._n:
            raise IndexViolationError(f"index {i} outside [1..{self._n}]")
        self._reads += 1
        return int(self._t[i])

    def write(self, i: int, v: int) -> None:
        """Store ``v`` into cell ``i`` and count one write.

        Raises :class:`RangeViolationError` before touching the cell if
        ``v`` falls outside ``[1..n]``.
        """
        if not 1 <= i <= self._n:
            raise IndexViolationError(f"index {i} outside [1..{self._n}]")
        if not 1 <= v <= self._n:
            raise RangeViolationError(f"value {v} outside [1..{self._n}]")
        self._writes += 1
        self._t[i] = v

    # -- metadata (uncounted) ----------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    @property
    def reads(self) -> int:
        return self._reads

    @property
    def writes(self) -> int:
        return self._writes

    @property
    def accesses(self) -> int:
        """Total cell touches so far (reads + writes)."""
        return self._reads + self._writes

    def reset_counters(self) -> None:
        self._reads = 0
        self._writes = 0

    def tolist(self) -> list[int]:
        """Uncounted snapshot of the cells, for verification and I/O.

        This is a harness-side view; inverters must not use it.
        """
        return [int(v) for v in self._t[1:]]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        head = ", ".join(str(int(v)) for v in self._t[1 : min(self._n, 8) + 1])
        tail = ", ..." if self._n > 8 else ""
        return (
            f"AuditedArray([{head}{tail}], n={self._n}, "
            f"reads={self._reads}, writes={self._writes})"
        )

    # -- kernel plumbing (package-internal) ---------------------------------

    @property
    def _cells(self) -> np.ndarray:
        """Backing buffer (1-indexed, slot 0 unused) for compiled kernels."""
        return self._t

    def _charge(self, reads: int, writes: int) -> None:
        """Add kernel-side access counts to the audit."""
        self._reads += int(reads)
        self._writes += int(writes)


def as_values(source: AuditedArray | Sequence[int]) -> list[int]:
    """1-based value list from an array or a plain sequence (uncounted)."""
    if isinstance(source, AuditedArray):
        return source.tolist()
    return [int(v) for v in source]
