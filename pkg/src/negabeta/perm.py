"""Permutations, the marked cycle ``hat(pi)`` and the special indices.

All indices are 1-based, as in one-line notation.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

STAR = "⋆"


class PermutationError(ValueError):
    """Raised for malformed permutation text or values."""


def _letters_text(values: Sequence, sep_when_long: str = ",") -> str:
    items = [STAR if v is None else str(v) for v in values]
    if all(len(s) == 1 for s in items):
        return "".join(items)
    return sep_when_long.join(items)


@dataclass(frozen=True)
class Permutation:
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n == 0:
            raise PermutationError("empty permutation")
        if sorted(values) != list(range(1, n + 1)):
            raise PermutationError(f"not a permutation of 1..{n}: {values}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        """1-based access: ``pi[i]`` is pi_i."""
        if not 1 <= i <= len(self.values):
            raise IndexError(i)
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def index_of(self, value: int) -> int:
        """The 1-based index i with pi_i == value."""
        return self.values.index(value) + 1

    def __str__(self):
        return _letters_text(self.values)


def parse_permutation(text: str) -> Permutation:
    """Parse ``"15237864"`` or ``"3,12,1,2"`` / ``"3 12 1 2"``."""
    stripped = text.strip()
    if not stripped:
        raise PermutationError("empty input")
    if re.fullmatch(r"\d+", stripped):
        tokens = list(stripped)
        if len(tokens) > 9:
            raise PermutationError(
                f"digit string {stripped!r} is ambiguous for n > 9; use separators"
            )
    else:
        tokens = [t for t in re.split(r"[,\s]+", stripped) if t]
    values = []
    for tok in tokens:
        if not re.fullmatch(r"\d+", tok):
            raise PermutationError(f"invalid token {tok!r}")
        values.append(int(tok))
    n = len(values)
    seen = set()
    for tok, v in zip(tokens, values):
        if not 1 <= v <= n:
            raise PermutationError(f"value {tok!r} out of range 1..{n}")
        if v in seen:
            raise PermutationError(f"duplicate value {tok!r}")
        seen.add(v)
    return Permutation(tuple(values))


@dataclass(frozen=True)
class MarkedCycle:
    """One-line form of hat(pi); ``None`` marks the starred entry."""

    entries: Tuple[Optional[int], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def star_pos(self) -> int:
        return self.entries.index(None) + 1

    def __getitem__(self, j: int) -> Optional[int]:
        return self.entries[j - 1]

    def without_star(self) -> Tuple[int, ...]:
        return tuple(e for e in self.entries if e is not None)

    def to_permutation(self) -> Permutation:
        """Invert :func:`hat` by following the cycle from the starred slot."""
        n = self.n
        missing = (set(range(1, n + 1)) - set(self.without_star())).pop()
        values = [missing]
        while len(values) < n:
            values.append(self.entries[values[-1] - 1])
        return Permutation(tuple(values))

    def __str__(self):
        return _letters_text(self.entries)


def hat(pi: Permutation) -> MarkedCycle:
    n = pi.n
    entries: list = [None] * n
    for i in range(1, n):
        entries[pi[i] - 1] = pi[i + 1]
    entries[pi[n] - 1] = None
    return MarkedCycle(tuple(entries))


def ascents(cycle: MarkedCycle) -> Tuple[frozenset, int]:
    """Ascent positions of hat(pi) and their number.

    j is reported when hat_j < hat_{j+1}, or when hat_{j+1} is the star and
    hat_j < hat_{j+2}.  The count is taken on the star-deleted sequence,
    which agrees with the positional definition and also covers j = star.
    """
    e = cycle.entries
    n = len(e)
    found = set()
    for j in range(1, n):
        a = e[j - 1]
        if a is None:
            continue
        b = e[j]
        if b is not None:
            if a < b:
                found.add(j)
        elif j + 1 < n and a < e[j + 1]:
            found.add(j)
    seq = cycle.without_star()
    count = sum(1 for a, b in zip(seq, seq[1:]) if a < b)
    return frozenset(found), count


def asc(pi: Permutation) -> int:
    return ascents(hat(pi))[1]


@dataclass(frozen=True)
class SpecialIndices:
    ell: int
    x: Optional[int]
    y: Optional[int]
    h: int


def special_indices(pi: Permutation) -> SpecialIndices:
    n = pi.n
    last = pi[n]
    ell = pi.index_of(n)
    x = pi.index_of(last + 1) if last != n else None
    y = pi.index_of(last - 1) if last != 1 else None
    if x is None:
        h = ell
    else:
        h = argmax_between(pi, x, n)
    return SpecialIndices(ell=ell, x=x, y=y, h=h)


def argmax_between(pi: Permutation, lo: int, hi: int) -> int:
    """Index of the largest of pi_lo, ..., pi_hi."""
    return max(range(lo, hi + 1), key=lambda i: pi[i])


class Corner(enum.Enum):
    N1N = "(n-1)1n"
    TWO_N1 = "2n1"


def cornered_kind(pi: Permutation) -> Optional[Corner]:
    n = pi.n
    if n < 3:
        return None
    tail = pi.values[-3:]
    if tail == (n - 1, 1, n):
        return Corner.N1N
    if tail == (2, n, 1):
        return Corner.TWO_N1
    return None
