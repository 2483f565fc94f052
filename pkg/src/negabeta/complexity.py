"""Construction words, characteristic polynomials, B-bar and witness words."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from .perm import Corner, Permutation, argmax_between, special_indices
from .polynomial import (
    DEFAULT_PRECISION,
    AlgebraicValue,
    IntPolynomial,
    largest_root_geq,
)
from .segment import (
    Classification,
    Prefix,
    classify,
    raw_nbar,
    valid_prefixes,
    words_p_q,
)
from .word import EPWord, Tail, TailedWord, alt_compare, exceeds_u, normalize, shift


@dataclass(frozen=True)
class Construction:
    """The word w with B-bar(pi) = B-bar(w), plus what produced it.

    ``side`` is ``"p"`` or ``"q"`` for the repeated block, or ``"none"``
    for the regular case with n - ell even and pi_n = 1.
    """

    classification: Classification
    N: int
    zeta: Prefix
    side: str
    block: Tuple[int, ...]
    word: EPWord
    ell: int
    choice: Optional[int] = None  # 1-based k among valid prefixes, collapsed only


def _cornered_prefix(pi: Permutation, N: int) -> Prefix:
    # the valid segmentation with e_{N-1} >= n - 1 (resp. = n) never uses letter N - 1
    cands = [z for z in valid_prefixes(pi) if max(z.letters) < N - 1]
    assert len(cands) == 1, f"expected one cornered prefix for {pi}, got {cands}"
    return cands[0]


@lru_cache(maxsize=4096)
def construct(pi: Permutation) -> Construction:
    n = pi.n
    if n < 2:
        raise ValueError("construction needs n >= 2")
    idx = special_indices(pi)
    ell = idx.ell
    cls = classify(pi)
    N = raw_nbar(pi)
    odd = (n - ell) % 2 == 1

    if cls.kind == "cornered":
        zeta = _cornered_prefix(pi, N)
        if cls.corner is Corner.N1N:
            side, block = "q", (N - 2, 0)
        else:
            side, block = "p", (0, N - 2)
        word = normalize(zeta.letters, block, N)
        return Construction(cls, N, zeta, side, block, word, ell)

    if cls.kind == "regular":
        zeta = valid_prefixes(pi)[0]
        p, q = words_p_q(pi, zeta)
        if odd:
            side, block = "p", p
        elif pi[n] == 1:
            side, block = "none", (0,) + zeta.segment(ell, n - 1)
        else:
            side, block = "q", q
        word = normalize(zeta.letters, block, max(N, 1))
        return Construction(cls, N, zeta, side, block, word, ell)

    side = "p" if odd else "q"
    best = None
    for k, zeta in enumerate(valid_prefixes(pi), start=1):
        p, q = words_p_q(pi, zeta)
        block = p if odd else q
        key = normalize(zeta.segment(ell, n - 1), block, N)
        if best is None or alt_compare(key, best[0]) < 0:
            best = (key, k, zeta, block)
    _, k, zeta, block = best
    word = normalize(zeta.letters, block, N)
    return Construction(cls, N, zeta, side, block, word, ell, choice=k)


def construction_word(pi: Permutation) -> EPWord:
    return construct(pi).word


def char_polynomial(w: EPWord) -> IntPolynomial:
    """p_w, with leading coefficient made positive."""
    k, r = w.k, w.k + w.r
    letters = w.preperiod + w.period
    mx = IntPolynomial((0, -1))  # -x

    def power(e):
        out = IntPolynomial((1,))
        for _ in range(e):
            out = out * mx
        return out

    if k == 0:
        poly = power(r) + IntPolynomial((-1,))
        for j in range(1, r + 1):
            poly = poly + IntPolynomial((letters[j - 1] + 1,)) * power(r - j)
    else:
        left = power(r - k) + IntPolynomial((-1,))
        right = power(k)
        for i in range(1, k + 1):
            right = right + IntPolynomial((letters[i - 1] + 1,)) * power(k - i)
        poly = left * right
        for j in range(1, r - k + 1):
            poly = poly + IntPolynomial((letters[k + j - 1] + 1,)) * power(r - k - j)
    return poly.sign_normalized()


def characteristic_polynomial(pi: Permutation) -> IntPolynomial:
    """P_pi: x - (N - 1) when cornered, else p_w of w_[ell, inf)."""
    c = construct(pi)
    if c.classification.kind == "cornered":
        return IntPolynomial.x_minus(c.N - 1)
    return char_polynomial(shift(c.word, c.ell))


def b_bar(pi: Permutation, precision: int = DEFAULT_PRECISION) -> AlgebraicValue:
    """Largest real root >= 1 of P_pi, or 1 when there is none."""
    if pi.n < 2:
        return AlgebraicValue.integer(1, precision=precision, is_one_fallback=True)
    c = construct(pi)
    poly = characteristic_polynomial(pi)
    if c.classification.kind == "cornered":
        return AlgebraicValue.integer(c.N - 1, poly, precision)
    root = largest_root_geq(poly, 1, precision)
    above_u = exceeds_u(shift(c.word, c.ell))
    if root is None:
        assert not above_u, f"{pi}: no root >= 1 but the maximal shift exceeds u"
        return AlgebraicValue.integer(1, IntPolynomial.x_minus(1), precision, is_one_fallback=True)
    assert above_u == (root.lo > 1 or (root.exact is not None and root.exact > 1)), (
        f"{pi}: root {root} disagrees with the comparison against u"
    )
    return root


# -- witnesses -------------------------------------------------------------


def _z(zeta: Prefix, i: int, j: int) -> Tuple[int, ...]:
    return zeta.segment(i, j)


def _special_j(pi, zeta, start, h, ell):
    """Indices j in [start, h) with h - j odd and z_[j, h-1] = z_[ell, ell+h-j-1]."""
    n = pi.n
    out = []
    for j in range(start, h):
        if (h - j) % 2 == 1 and ell + h - j - 1 <= n - 1:
            if _z(zeta, j, h - 1) == _z(zeta, ell, ell + h - j - 1):
                out.append(j)
    return out


def _suffix_for(pi: Permutation, zeta: Prefix, side: str, h: int) -> TailedWord:
    """omega_end for a given side ("p" or "q") and index h."""
    idx = special_indices(pi)
    start = idx.x if side == "p" else idx.y
    p, q = words_p_q(pi, zeta)
    d = p if side == "p" else q
    N = zeta.alphabet_size
    z = _z(zeta, start, h - 1)
    gap_odd = (h - start) % 2 == 1
    d_even = len(d) % 2 == 0
    if side == "p":
        if not gap_odd and d_even:
            js = _special_j(pi, zeta, start, h, idx.ell)
            if js:
                j = max(js, key=lambda i: pi[i])
                return TailedWord(z, _z(zeta, j, h - 1), N)
            return TailedWord(z, Tail.OMEGA_MIN, N)
        if not gap_odd:
            return TailedWord(d + z, Tail.OMEGA_MAX, N)
        return TailedWord(z, Tail.OMEGA_MAX, N)
    if gap_odd and d_even:
        js = _special_j(pi, zeta, start, h, idx.ell)
        if js:
            j = max(js, key=lambda i: pi[i])
            return TailedWord(z, _z(zeta, j, h - 1), N)
        return TailedWord(z, Tail.OMEGA_MIN, N)
    if gap_odd:
        return TailedWord(d + z, Tail.OMEGA_MAX, N)
    return TailedWord(z, Tail.OMEGA_MAX, N)


def _default_h(pi: Permutation, side: str) -> int:
    idx = special_indices(pi)
    start = idx.x if side == "p" else idx.y
    h = idx.h
    if h < start:
        h = argmax_between(pi, start, pi.n)
    return h


def witness_suffix(pi: Permutation, zeta: Optional[Prefix] = None) -> TailedWord:
    """omega_end for the construction's side (s-side or t-side).

    Cornered permutations use the bare tail: Omega for (n-1)1n and omega
    for 2n1.  Raises ``ValueError`` in the case n - ell even, pi_n = 1,
    where the witness is zeta followed by omega.
    """
    c = construct(pi)
    zeta = c.zeta if zeta is None else zeta
    if c.classification.kind == "cornered":
        tail = Tail.OMEGA_MAX if c.classification.corner is Corner.N1N else Tail.OMEGA_MIN
        return TailedWord((), tail, c.N)
    if c.side == "none":
        raise ValueError(f"{pi}: n - ell even with pi_n = 1 has no omega_end")
    return _suffix_for(pi, zeta, c.side, _default_h(pi, c.side))


def _assemble(zeta: Prefix, block, m: int, suffix: TailedWord) -> TailedWord:
    return TailedWord(zeta.letters + tuple(block) * (2 * m) + suffix.prefix, suffix.tail, zeta.alphabet_size)


def witness_word(pi: Permutation, m: int) -> TailedWord:
    """The primary witness s^(m) or t^(m) (or zeta omega)."""
    c = construct(pi)
    if c.side == "none":
        return TailedWord(c.zeta.letters, Tail.OMEGA_MIN, c.N)
    return _assemble(c.zeta, c.block, m, witness_suffix(pi))


def witness_candidates(pi: Permutation, m: int) -> Iterator[TailedWord]:
    """The primary witness followed by bounded variants.

    Variants range over every h in [start, n], every valid prefix, and the
    tail forms z omega, z Omega, d z Omega, d z omega and z (z_[j, h-1])^inf.
    """
    c = construct(pi)
    seen = set()

    def emit(tw):
        key = (tw.prefix, tw.tail)
        if key not in seen:
            seen.add(key)
            return True
        return False

    first = witness_word(pi, m)
    if emit(first):
        yield first
    n = pi.n
    idx = special_indices(pi)
    prefixes = [c.zeta] + [z for z in valid_prefixes(pi) if z != c.zeta]
    if c.side == "none":
        for zeta in prefixes:
            for tail in (Tail.OMEGA_MIN, Tail.OMEGA_MAX):
                tw = TailedWord(zeta.letters, tail, c.N)
                if emit(tw):
                    yield tw
        return
    for zeta in prefixes:
        p, q = words_p_q(pi, zeta)
        d = c.block if zeta == c.zeta else (p if c.side == "p" else q)
        if c.classification.kind == "cornered":
            d = c.block
        start = idx.x if c.side == "p" else idx.y
        hs = [_default_h(pi, c.side)] + [h for h in range(start, n + 1)]
        for h in hs:
            base = [_suffix_for(pi, zeta, c.side, h)] if c.classification.kind != "cornered" else []
            z = _z(zeta, start, h - 1)
            forms = base + [
                TailedWord(z, Tail.OMEGA_MIN, c.N),
                TailedWord(z, Tail.OMEGA_MAX, c.N),
                TailedWord(tuple(d) + z, Tail.OMEGA_MAX, c.N),
                TailedWord(tuple(d) + z, Tail.OMEGA_MIN, c.N),
            ]
            forms += [TailedWord(z, _z(zeta, j, h - 1), c.N) for j in range(start, h)]
            for suffix in forms:
                tw = _assemble(zeta, d, m, suffix)
                if emit(tw):
                    yield tw
