"""Permutation generation, the reference inverse, validation, and file I/O.

Generation is deterministic: every profile draws from ``random.Random(seed)``
(CPython's Mersenne Twister), and random permutations come from its
Fisher-Yates ``shuffle``, which is unbiased.  Equal ``(n, profile)`` pairs
always produce equal arrays.
"""

from __future__ import annotations

import random
import re
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from .audited import AuditedArray, as_values


class InvalidPermutationError(ValueError):
    """Input that was required to be a permutation of [1..n] is not."""


# -- profiles ----------------------------------------------------------------

_PROFILE_RE = re.compile(r"^([a-z-]+)(?:\(([^)]*)\))?$")

KINDS = ("identity", "single-cycle", "small-cycles", "random", "mixed")


@dataclass(frozen=True)
class PermProfile:
    """A named family of test permutations.

    kind:
        ``identity``          -- fixed points only.
        ``single-cycle``      -- one cycle through all of [1..n].
        ``small-cycles``      -- cycles of length at most ``max_len``.
        ``random``            -- uniform random permutation.
        ``mixed``             -- about ``long_fraction`` of the elements in two
                                 large cycles, the rest in 3-cycles.
    """

    kind: str
    seed: int = 0
    max_len: int = 3
    long_fraction: float = 0.5

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if self.kind == "small-cycles" and self.max_len < 1:
            raise ValueError("small-cycles needs max_len >= 1")
        if self.kind == "mixed" and not 0.0 <= self.long_fraction <= 1.0:
            raise ValueError("mixed needs a fraction in [0, 1]")

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "PermProfile":
        """Parse ``identity | single-cycle | small-cycles(L) | random | mixed(F)``."""
        m = _PROFILE_RE.match(text.strip())
        if not m:
            raise ValueError(f"bad profile syntax: {text!r}")
        kind, arg = m.group(1), m.group(2)
        if kind == "small-cycles":
            return cls(kind, seed=seed, max_len=int(arg) if arg else 3)
        if kind == "mixed":
            return cls(kind, seed=seed, long_fraction=float(arg) if arg else 0.5)
        if arg is not None:
            raise ValueError(f"profile {kind!r} takes no argument")
        return cls(kind, seed=seed)

    def label(self) -> str:
        """Canonical name, round-trippable through :meth:`parse`."""
        if self.kind == "small-cycles":
            return f"small-cycles({self.max_len})"
        if self.kind == "mixed":
            return f"mixed({self.long_fraction:g})"
        return self.kind

    def __str__(self) -> str:
        return self.label()


def _cycles_to_values(n: int, cycles: list[list[int]]) -> list[int]:
    vals = [0] * (n + 1)
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            vals[a] = b
    return vals[1:]


def generate(n: int, profile: PermProfile) -> AuditedArray:
    """Deterministically build a permutation of [1..n] for ``profile``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(profile.seed)
    kind = profile.kind

    if kind == "identity":
        return AuditedArray(range(1, n + 1))

    if kind == "random":
        vals = list(range(1, n + 1))
        rng.shuffle(vals)
        return AuditedArray(vals)

    order = list(range(1, n + 1))
    rng.shuffle(order)

    if kind == "single-cycle":
        return AuditedArray(_cycles_to_values(n, [order]))

    if kind == "small-cycles":
        cycles = []
        pos = 0
        while pos < n:
            length = min(rng.randint(1, profile.max_len), n - pos)
            cycles.append(order[pos : pos + length])
            pos += length
        return AuditedArray(_cycles_to_values(n, cycles))

    # mixed: two large cycles over ~long_fraction of the mass, 3-cycles after
    m = round(profile.long_fraction * n)
    cycles = []
    pos = 0
    if m >= 2:
        first = m - m // 2
        cycles.append(order[:first])
        if m // 2 >= 1:
            cycles.append(order[first:m])
        pos = m
    while n - pos >= 3:
        cycles.append(order[pos : pos + 3])
        pos += 3
    if pos < n:
        cycles.append(order[pos:])
    return AuditedArray(_cycles_to_values(n, cycles))


# -- reference inverse and validation ----------------------------------------

def is_permutation(values: Sequence[int]) -> bool:
    """True iff ``values`` is a bijection on [1..len(values)]."""
    n = len(values)
    seen = [False] * (n + 1)
    for v in values:
        if not 1 <= v <= n or seen[v]:
            return False
        seen[v] = True
    return True


def validate_permutation(a: AuditedArray | Sequence[int]) -> bool:
    """Harness-level check (uncounted) that the array is a permutation."""
    return is_permutation(as_values(a))


def oracle_invert(p: Sequence[int]) -> list[int]:
    """Reference inverse: returns ``q`` with ``q[p[i]] = i`` (1-based).

    Out-of-place and O(n) extra memory on purpose -- this is the oracle the
    in-place strategies are measured against, not one of them.
    """
    vals = [int(v) for v in p]
    if not is_permutation(vals):
        raise InvalidPermutationError("input is not a permutation of [1..n]")
    q = [0] * len(vals)
    for i, v in enumerate(vals, start=1):
        q[v - 1] = i
    return q


# -- flat file format ---------------------------------------------------------

def save_permutation(path: str | Path, source: AuditedArray | Sequence[int]) -> None:
    """Write the text format: first line ``n``, second line the n values."""
    vals = as_values(source)
    Path(path).write_text(f"{len(vals)}\n{' '.join(map(str, vals))}\n")


def load_permutation(path: str | Path) -> list[int]:
    """Read the text format back; validates shape, not permutation-ness."""
    tokens = Path(path).read_text().split()
    if not tokens:
        raise ValueError(f"{path}: empty permutation file")
    try:
        n = int(tokens[0])
        vals = [int(tok) for tok in tokens[1:]]
    except ValueError as exc:
        raise ValueError(f"{path}: non-integer content") from exc
    if n < 1:
        raise ValueError(f"{path}: declared length {n} is not positive")
    if len(vals) != n:
        raise ValueError(f"{path}: expected {n} values, found {len(vals)}")
    return vals
