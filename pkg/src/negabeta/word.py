"""Eventually periodic words, alternating lexicographic order and values.

Letter positions are 1-based.  ``v < w`` in the alternating order when, at
the first index i where they differ, ``(-1)**i * (v_i - w_i) > 0``.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence, Tuple, Union

from .perm import Permutation


def _letters_text(letters: Sequence[int], alphabet_size: int) -> str:
    if alphabet_size <= 10:
        return "".join(str(a) for a in letters)
    return ",".join(str(a) for a in letters)


def primitive_root(word: Sequence[int]) -> Tuple[int, ...]:
    """Shortest d with word == d^k."""
    word = tuple(word)
    r = len(word)
    for d in range(1, r + 1):
        if r % d == 0 and word[:d] * (r // d) == word:
            return word[:d]
    return word


@dataclass(frozen=True)
class EPWord:
    """The infinite word ``preperiod * period^inf`` in normalized form.

    Construct through :func:`normalize` (or :func:`make_word`) so that the
    preperiod length k and period length r are both minimal.
    """

    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]
    alphabet_size: int

    @property
    def k(self) -> int:
        return len(self.preperiod)

    @property
    def r(self) -> int:
        return len(self.period)

    def letter(self, i: int) -> int:
        """The letter w_i (1-based)."""
        k = len(self.preperiod)
        if i <= k:
            return self.preperiod[i - 1]
        return self.period[(i - k - 1) % len(self.period)]

    def letters(self, count: int) -> Tuple[int, ...]:
        return tuple(self.letter(i) for i in range(1, count + 1))

    def is_periodic(self) -> bool:
        return not self.preperiod

    def __str__(self):
        return (
            _letters_text(self.preperiod, self.alphabet_size)
            + "|"
            + _letters_text(self.period, self.alphabet_size)
        )


def normalize(preperiod: Sequence[int], period: Sequence[int], alphabet_size: Optional[int] = None) -> EPWord:
    pre = list(int(a) for a in preperiod)
    per = list(primitive_root(int(a) for a in period))
    if not per:
        raise ValueError("period must be non-empty")
    letters = pre + per
    if min(letters) < 0:
        raise ValueError("letters must be non-negative")
    if alphabet_size is None:
        alphabet_size = max(letters) + 1
    if max(letters) >= alphabet_size:
        raise ValueError(f"letter out of range for alphabet size {alphabet_size}")
    while pre and pre[-1] == per[-1]:
        per = [per[-1]] + per[:-1]
        pre.pop()
    return EPWord(tuple(pre), tuple(per), alphabet_size)


make_word = normalize


def parse_word(text: str, alphabet_size: Optional[int] = None) -> EPWord:
    """Parse ``"pre|per"``; letters are digits, or comma separated."""
    if "|" not in text:
        raise ValueError(f"expected 'preperiod|period', got {text!r}")
    pre_text, per_text = text.split("|", 1)

    def letters(s):
        s = s.strip()
        if not s:
            return []
        if "," in s:
            return [int(t) for t in s.split(",")]
        return [int(c) for c in s]

    return normalize(letters(pre_text), letters(per_text), alphabet_size)


def alt_compare_letters(v: Sequence[int], w: Sequence[int]) -> int:
    """Compare two equal-length finite words; returns -1, 0 or 1."""
    for i, (a, b) in enumerate(zip(v, w), start=1):
        if a != b:
            sign = 1 if i % 2 == 0 else -1
            return -1 if sign * (a - b) > 0 else 1
    return 0


def alt_compare(v: EPWord, w: EPWord) -> int:
    """-1 if v precedes w, 0 if equal, 1 otherwise."""
    bound = v.k + w.k + lcm(v.r, w.r)
    for i in range(1, bound + 1):
        a, b = v.letter(i), w.letter(i)
        if a != b:
            sign = 1 if i % 2 == 0 else -1
            return -1 if sign * (a - b) > 0 else 1
    return 0


def shift(w: EPWord, k: int = 2) -> EPWord:
    """The tail w_[k, inf)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    drop = k - 1
    if drop <= w.k:
        return normalize(w.preperiod[drop:], w.period, w.alphabet_size)
    rot = (drop - w.k) % w.r
    return normalize((), w.period[rot:] + w.period[:rot], w.alphabet_size)


def max_shift(w: EPWord) -> Tuple[int, EPWord]:
    """Smallest l such that w_[l, inf) is maximal among all shifts."""
    best_l, best = 1, w
    for l in range(2, w.k + w.r + 1):
        cand = shift(w, l)
        if alt_compare(cand, best) > 0:
            best_l, best = l, cand
    return best_l, best


_U_LOCK = threading.Lock()
_U_CACHE = ["1"]


def u_prefix(L: int) -> Tuple[int, ...]:
    """First L letters of the fixed point of 1 -> 100, 0 -> 1."""
    if L < 1:
        raise ValueError("L must be at least 1")
    u = _U_CACHE[0]
    if len(u) < L:
        with _U_LOCK:
            u = _U_CACHE[0]
            while len(u) < L:
                u = "".join("100" if c == "1" else "1" for c in u)
            _U_CACHE[0] = u
    return tuple(int(c) for c in u[:L])


def exceeds_u(w: EPWord) -> bool:
    """True iff u precedes w in the alternating order."""
    cap = 10 * (w.k + w.r) + 1000
    u = u_prefix(cap)
    for i in range(1, cap + 1):
        a, b = u[i - 1], w.letter(i)
        if a != b:
            sign = 1 if i % 2 == 0 else -1
            return sign * (a - b) > 0
    raise RuntimeError(f"no difference from u within {cap} letters for {w}")


Number = Union[int, Fraction, float]


def _as_exact(beta):
    if isinstance(beta, (int, Fraction)):
        return Fraction(beta)
    return beta


def f_value(w: EPWord, beta: Number):
    """-sum (w_j + 1) / (-beta)^j, exact for rational beta."""
    beta = _as_exact(beta)
    if beta <= 1:
        raise ValueError("beta must exceed 1")
    a = 1 / (-beta)
    head = 0
    power = 1
    for letter in w.preperiod:
        power = power * a
        head += (letter + 1) * power
    cyc = 0
    cpow = 1
    for letter in w.period:
        cpow = cpow * a
        cyc += (letter + 1) * cpow
    tail = power * cyc / (1 - cpow)
    return -(head + tail)


def pattern_of(w: EPWord, n: int) -> Optional[Permutation]:
    """Relative order of w_[1, inf), ..., w_[n, inf); ``None`` on ties."""
    shifts = [shift(w, i) for i in range(1, n + 1)]
    ranks = []
    for i, s in enumerate(shifts):
        below = 0
        for j, t in enumerate(shifts):
            if i == j:
                continue
            c = alt_compare(t, s)
            if c == 0:
                return None
            below += c < 0
        ranks.append(below + 1)
    return Permutation(tuple(ranks))


class Tail(enum.Enum):
    OMEGA_MAX = "Ω"
    OMEGA_MIN = "ω"


@dataclass(frozen=True)
class TailedWord:
    """A finite prefix followed by a periodic tail or a symbolic one.

    ``Tail.OMEGA_MAX`` stands for the largest admissible word (value 1)
    and ``Tail.OMEGA_MIN`` for ``0`` followed by it (value 0).
    """

    prefix: Tuple[int, ...]
    tail: Union[Tail, Tuple[int, ...]]
    alphabet_size: int = 10

    def __str__(self):
        head = _letters_text(self.prefix, self.alphabet_size)
        if isinstance(self.tail, Tail):
            return f"{head}·{self.tail.value}"
        return f"{head}·({_letters_text(self.tail, self.alphabet_size)})^∞"

    def shift_values(self, beta: Number) -> list:
        """f-values of every distinct shift.

        The first ``len(prefix)`` entries are the values of w_[1, inf), ...,
        w_[len(prefix), inf); the rest belong to the tail's own shifts.
        """
        beta = _as_exact(beta)
        if beta <= 1:
            raise ValueError("beta must exceed 1")
        if self.tail is Tail.OMEGA_MAX:
            tail_vals = [Fraction(1) if isinstance(beta, Fraction) else 1.0]
        elif self.tail is Tail.OMEGA_MIN:
            one = Fraction(1) if isinstance(beta, Fraction) else 1.0
            tail_vals = [one * 0, one]
        else:
            per = tuple(self.tail)
            tail_vals = [
                f_value(EPWord((), per[i:] + per[:i], self.alphabet_size), beta)
                for i in range(len(per))
            ]
        vals = []
        nxt = tail_vals[0]
        for letter in reversed(self.prefix):
            nxt = (letter + 1) / beta - nxt / beta
            vals.append(nxt)
        vals.reverse()
        return vals + tail_vals
