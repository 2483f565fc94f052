"""Segmentations of hat(pi), prefixes zeta, classification and N-bar."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import List, Optional, Sequence, Tuple

from .perm import Corner, Permutation, ascents, cornered_kind, hat, special_indices


@dataclass(frozen=True)
class Segmentation:
    cuts: Tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.cuts) - 1


@dataclass(frozen=True)
class Prefix:
    letters: Tuple[int, ...]
    alphabet_size: int

    def __len__(self):
        return len(self.letters)

    def segment(self, i: int, j: int) -> Tuple[int, ...]:
        """z_[i, j] with 1-based inclusive bounds (empty when j < i)."""
        return self.letters[i - 1 : j]

    def __str__(self):
        if self.alphabet_size <= 10:
            return "".join(str(a) for a in self.letters)
        return ",".join(str(a) for a in self.letters)


@dataclass(frozen=True)
class Classification:
    kind: str  # "regular", "cornered" or "collapsed"
    corner: Optional[Corner] = None
    relation: Optional[str] = None  # "p=q^2" or "q=p^2" when collapsed

    def __str__(self):
        if self.kind == "cornered":
            return f"cornered({self.corner.value})"
        if self.kind == "collapsed":
            return f"collapsed({self.relation})"
        return self.kind


def _blocks_decreasing(entries, cuts) -> bool:
    for a, b in zip(cuts, cuts[1:]):
        block = [v for v in entries[a:b] if v is not None]
        if any(u <= v for u, v in zip(block, block[1:])):
            return False
    return True


def _boundary_conditions(entries, cuts) -> bool:
    n = len(entries)
    N = len(cuts) - 1
    if n >= 2:
        # (b)
        if entries[0] == n and entries[n - 2] == 1 and entries[n - 1] is None:
            if not (cuts[1] == 0 or cuts[N - 1] >= n - 1):
                return False
        # (c)
        if entries[n - 1] == 1 and entries[0] is None and entries[1] == n:
            if not (cuts[N - 1] == n or cuts[1] <= 1):
                return False
    return True


def is_segmentation(pi: Permutation, cuts: Sequence[int]) -> bool:
    entries = hat(pi).entries
    cuts = tuple(cuts)
    n = pi.n
    if len(cuts) < 2 or cuts[0] != 0 or cuts[-1] != n:
        return False
    if any(a > b for a, b in zip(cuts, cuts[1:])):
        return False
    return _blocks_decreasing(entries, cuts) and _boundary_conditions(entries, cuts)


def enumerate_segmentations(pi: Permutation, N: int) -> List[Segmentation]:
    """All -N-segmentations of hat(pi), in lexicographic order of cuts."""
    if N < 1:
        raise ValueError("N must be at least 1")
    entries = hat(pi).entries
    n = pi.n
    found = []
    for inner in combinations_with_replacement(range(n + 1), N - 1):
        cuts = (0,) + inner + (n,)
        if _blocks_decreasing(entries, cuts) and _boundary_conditions(entries, cuts):
            found.append(Segmentation(cuts))
    return found


def prefix_of(pi: Permutation, seg: Segmentation) -> Prefix:
    cuts = seg.cuts
    letters = []
    for i in range(1, pi.n):
        v = pi[i]
        k = next(k for k in range(seg.N) if cuts[k] < v <= cuts[k + 1])
        letters.append(k)
    return Prefix(tuple(letters), seg.N)


def words_p_q(pi: Permutation, zeta: Prefix):
    """The words p = z_[x, n-1] and q = z_[y, n-1] (``None`` when undefined)."""
    idx = special_indices(pi)
    n = pi.n
    p = zeta.segment(idx.x, n - 1) if idx.x is not None else None
    q = zeta.segment(idx.y, n - 1) if idx.y is not None else None
    return p, q


def _square_relation(p, q) -> Optional[str]:
    if p is None or q is None:
        return None
    if p == q + q:
        return "p=q^2"
    if q == p + p:
        return "q=p^2"
    return None


def is_valid_prefix(pi: Permutation, zeta: Prefix) -> bool:
    p, q = words_p_q(pi, zeta)
    return _square_relation(p, q) is None


def minimal_segmentation(pi: Permutation) -> Segmentation:
    """Cuts at the ascents of hat(pi); an ascent over the star cuts before it.

    Conditions (b) and (c) are not enforced here, since they can only fail
    for cornered permutations.
    """
    positions, _ = ascents(hat(pi))
    return Segmentation((0,) + tuple(sorted(positions)) + (pi.n,))


def classify(pi: Permutation) -> Classification:
    if pi.n < 3:
        return Classification("regular")
    corner = cornered_kind(pi)
    if corner is not None:
        return Classification("cornered", corner=corner)
    zeta = prefix_of(pi, minimal_segmentation(pi))
    relation = _square_relation(*words_p_q(pi, zeta))
    if relation is not None:
        return Classification("collapsed", relation=relation)
    return Classification("regular")


def raw_nbar(pi: Permutation) -> int:
    """1 + asc + epsilon, without the N >= 2 clamp."""
    eps = 0 if classify(pi).kind == "regular" else 1
    return 1 + ascents(hat(pi))[1] + eps


def nbar(pi: Permutation) -> int:
    if pi.n == 1:
        return 2
    return max(2, raw_nbar(pi))


def valid_prefixes(pi: Permutation) -> List[Prefix]:
    """Distinct prefixes of valid segmentations at the raw N-bar.

    Sorted in decreasing lexicographic order of letters, so index k - 1
    holds zeta^(k).
    """
    N = raw_nbar(pi)
    seen = set()
    out = []
    for seg in enumerate_segmentations(pi, N):
        z = prefix_of(pi, seg)
        if z.letters in seen or not is_valid_prefix(pi, z):
            continue
        seen.add(z.letters)
        out.append(z)
    out.sort(key=lambda z: z.letters, reverse=True)
    expected = expected_prefix_count(pi, out)
    assert len(out) == expected, (
        f"prefix count {len(out)} != {expected} for {pi}"
    )
    return out


def expected_prefix_count(pi: Permutation, prefixes=None) -> int:
    cls = classify(pi)
    if cls.kind == "regular":
        return 1
    if cls.kind == "cornered":
        return 2
    zeta = prefix_of(pi, minimal_segmentation(pi))
    p, q = words_p_q(pi, zeta)
    return min(len(p), len(q))
