"""Brute-force oracles: allowed patterns, digit expansions, witness checks.

Nothing here consults the segmentation formulas; these routines iterate
the maps x -> 1 - {Nx} and x -> 1 - {beta x} directly with exact rationals.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, List, Optional, Sequence, Tuple

from . import kernels
from .perm import Permutation

DEFAULT_SAMPLE_BUDGET = 10 ** 6
DEFAULT_PIECE_BUDGET = 10 ** 5


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured size budget."""


def parse_rational(text) -> Fraction:
    """``"7/4"``, ``"2"`` or ``"1.75"`` as an exact fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


@dataclass(frozen=True)
class PatternSet:
    n: int
    members: FrozenSet[Tuple[int, ...]]
    provenance: str

    def __contains__(self, pi) -> bool:
        key = pi.values if isinstance(pi, Permutation) else tuple(pi)
        return key in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.permutations())

    def permutations(self) -> List[Permutation]:
        return [Permutation(v) for v in sorted(self.members)]

    def issubset(self, other: "PatternSet") -> bool:
        return self.members <= other.members

    def strings(self) -> List[str]:
        return [str(p) for p in self.permutations()]


def _ranks(values: Sequence) -> Optional[Tuple[int, ...]]:
    if len(set(values)) != len(values):
        return None
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return tuple(ranks)


@lru_cache(maxsize=64)
def allowed_patterns_integer(N: int, n: int, budget: int = DEFAULT_SAMPLE_BUDGET, backend: str = None) -> PatternSet:
    """Patterns of length n realized by M(x) = 1 - {Nx} on [0, 1]."""
    if N < 2 or n < 1:
        raise ValueError("need N >= 2 and n >= 1")
    if N ** n > budget:
        raise BudgetExceeded(f"N^n = {N ** n} exceeds the sample budget {budget}")
    members = kernels.integer_patterns(N, n, backend)
    return PatternSet(n, frozenset(members), f"integer(N={N})")


def t_map(beta: Fraction, x: Fraction) -> Fraction:
    """T(x) = 1 - {beta x} on (0, 1]."""
    y = beta * x
    return 1 - (y - math.floor(y))


def orbit(beta: Fraction, x: Fraction, n: int) -> List[Fraction]:
    out = [x]
    for _ in range(n - 1):
        out.append(t_map(beta, out[-1]))
    return out


@dataclass(frozen=True)
class AffinePiece:
    """Open interval (lo, hi) on which T^0..T^(len(maps)-1) are affine.

    ``maps[i] = (slope, intercept)`` gives T^i(x) = slope * x + intercept.
    """

    lo: Fraction
    hi: Fraction
    maps: Tuple[Tuple[Fraction, Fraction], ...] = field(default=((Fraction(1), Fraction(0)),))


def affine_pieces(beta, n: int, budget: int = DEFAULT_PIECE_BUDGET) -> List[AffinePiece]:
    beta = parse_rational(beta)
    if beta <= 1:
        raise ValueError("beta must exceed 1")
    pieces = [AffinePiece(Fraction(0), Fraction(1))]
    for _ in range(1, n):
        refined = []
        for pc in pieces:
            s, c = pc.maps[-1]
            ya, yb = s * pc.lo + c, s * pc.hi + c
            ymin, ymax = min(ya, yb), max(ya, yb)
            ks = range(math.floor(ymin * beta) + 1, math.ceil(ymax * beta))
            cuts = sorted((k / beta - c) / s for k in ks)
            bounds = [pc.lo] + cuts + [pc.hi]
            for a, b in zip(bounds, bounds[1:]):
                y = s * (a + b) / 2 + c
                k = math.floor(beta * y)
                refined.append(AffinePiece(a, b, pc.maps + ((-beta * s, -beta * c + k + 1),)))
            if len(refined) > budget:
                raise BudgetExceeded(f"more than {budget} affine pieces")
        pieces = refined
    return pieces


def _real_scan(beta: Fraction, n: int, piece_budget: int, sample_budget: int):
    """(interior, boundary) pattern sets of T on (0, 1].

    Each affine piece is split further at crossings of the iterate lines
    and ranked at every sub-interval midpoint (interior); piece endpoints
    and points at width/1000 inside each end are iterated directly
    (boundary).
    """
    interior, boundary = set(), set()
    samples = 0
    for pc in affine_pieces(beta, n, piece_budget):
        maps = pc.maps
        xs = set()
        for i in range(n):
            for j in range(i + 1, n):
                (si, ci), (sj, cj) = maps[i], maps[j]
                if si != sj:
                    t = (cj - ci) / (si - sj)
                    if pc.lo < t < pc.hi:
                        xs.add(t)
        bounds = [pc.lo] + sorted(xs) + [pc.hi]
        for a, b in zip(bounds, bounds[1:]):
            m = (a + b) / 2
            r = _ranks([s * m + c for s, c in maps])
            if r is not None:
                interior.add(r)
        w = pc.hi - pc.lo
        edge = [pc.lo + w / 1000, pc.hi - w / 1000, pc.hi]
        if pc.lo > 0:
            edge.append(pc.lo)
        for x in edge:
            r = _ranks(orbit(beta, x, n))
            if r is not None:
                boundary.add(r)
        samples += len(bounds) - 1 + len(edge)
        if samples > sample_budget:
            raise BudgetExceeded(f"more than {sample_budget} samples")
    return interior, boundary


@lru_cache(maxsize=256)
def allowed_patterns_real(beta, n: int, piece_budget: int = DEFAULT_PIECE_BUDGET, sample_budget: int = DEFAULT_SAMPLE_BUDGET) -> PatternSet:
    """Patterns of length n realized by T(x) = 1 - {beta x} on (0, 1]."""
    beta = parse_rational(beta)
    if n < 1:
        raise ValueError("n must be at least 1")
    interior, boundary = _real_scan(beta, n, piece_budget, sample_budget)
    return PatternSet(n, frozenset(interior | boundary), f"real(beta={beta})")


def boundary_only_patterns(beta, n: int, piece_budget: int = DEFAULT_PIECE_BUDGET, sample_budget: int = DEFAULT_SAMPLE_BUDGET) -> PatternSet:
    """Patterns seen only at piece endpoints or their near offsets.

    An interval-realized pattern always shows up at some interior midpoint,
    so a non-empty result flags a pattern that needs a closer look.
    """
    beta = parse_rational(beta)
    interior, boundary = _real_scan(beta, n, piece_budget, sample_budget)
    return PatternSet(n, frozenset(boundary - interior), f"boundary-only(beta={beta})")


def nbar_bruteforce(pi: Permutation, budget: int = DEFAULT_SAMPLE_BUDGET) -> int:
    """Smallest N >= 2 whose reverse shift realizes pi."""
    n = pi.n
    for N in range(2, n + 2):
        if pi in allowed_patterns_integer(N, n, budget):
            return N
    raise AssertionError(f"{pi} not realized for any N <= {n + 1}")


def minus_beta_digits(beta, depth: int) -> Tuple[int, ...]:
    """First ``depth`` digits floor(beta T^(i-1)(1)) of the expansion of 1."""
    beta = parse_rational(beta)
    if beta <= 1:
        raise ValueError("beta must exceed 1")
    x = Fraction(1)
    digits = []
    for _ in range(depth):
        digits.append(math.floor(beta * x))
        x = t_map(beta, x)
    return tuple(digits)


# -- witness verification --------------------------------------------------


@dataclass
class WitnessReport:
    """Outcome of checking witness words at one beta.

    ``failure`` is ``None`` on success, else ``"membership"`` (some shift
    value left [0, 1]) or ``"pattern"`` (wrong or tied order).
    """

    perm: Permutation
    beta: Fraction
    m: int
    passed: bool
    witness: Optional[object] = None
    failure: Optional[str] = None
    values: Tuple[Fraction, ...] = ()
    candidates_tried: int = 0
    orbit_agrees: Optional[bool] = None

    def lines(self) -> List[str]:
        status = "pass" if self.passed else f"FAIL ({self.failure})"
        out = [
            f"perm: {self.perm}",
            f"beta: {self.beta}",
            f"m: {self.m}",
            f"status: {status}",
            f"candidates tried: {self.candidates_tried}",
        ]
        if self.witness is not None:
            out.append(f"witness: {self.witness}")
        if self.values:
            out.append("values: " + " ".join(str(v) for v in self.values))
        if self.orbit_agrees is not None:
            out.append(f"orbit check: {'agrees' if self.orbit_agrees else 'DISAGREES'}")
        return out


def check_tailed_word(tw, beta: Fraction, pi: Permutation):
    """Return (failure, first-n values) for one witness candidate."""
    n = pi.n
    vals = tw.shift_values(beta)
    if any(v < 0 or v > 1 for v in vals):
        return "membership", tuple(vals[:n])
    first = tuple(vals[:n])
    if len(first) < n or _ranks(first) != pi.values:
        return "pattern", first
    return None, first


def verify_witness(pi: Permutation, beta, m: Optional[int] = None, max_candidates: int = 2000) -> WitnessReport:
    """Exactly check witness words for pi at beta.

    With ``m=None`` the smallest admissible m is tried first and then
    increased, up to 40 more steps.
    """
    from .complexity import b_bar, witness_candidates

    beta = parse_rational(beta)
    if beta <= 1:
        raise ValueError("beta must exceed 1")
    if pi.n >= 2 and beta <= b_bar(pi).midpoint:
        warnings.warn(f"beta = {beta} does not exceed B-bar({pi}); no witness is expected", stacklevel=2)
    m_min = max(1, math.ceil((pi.n - 1) / 2))
    ms = [m] if m is not None else list(range(m_min, m_min + 41))
    tried = 0
    last = None
    if pi.n == 1:
        return WitnessReport(pi, beta, m or 0, True, candidates_tried=0)
    for mm in ms:
        for tw in witness_candidates(pi, mm):
            tried += 1
            failure, vals = check_tailed_word(tw, beta, pi)
            if failure is None:
                agrees = None
                if all(0 < v <= 1 for v in vals):
                    agrees = tuple(orbit(beta, vals[0], pi.n)) == vals
                return WitnessReport(pi, beta, mm, True, tw, None, vals, tried, agrees)
            if last is None:
                last = (failure, tw, vals)
            if tried >= max_candidates:
                break
        if tried >= max_candidates:
            break
    failure, tw, vals = last if last else ("pattern", None, ())
    return WitnessReport(pi, beta, ms[-1], False, tw, failure, vals, tried)
