"""Pure-Python kernels (fallback for the compiled ``_core`` module).

Cell scheme for M(x) = 1 - {Nx}: on each open cell (c/M, (c+1)/M) with
M = N^(n-1), every iterate M^i (i < n) is affine.  Writing x = (c + t)/M,
the scaled iterate M * M^i(x) equals s_i * t + d_i with s_i = (-N)^i.  The
relative order of the n lines changes only where two of them cross, so it
is enough to rank them on every sub-interval between crossings.
"""

from fractions import Fraction


def _ranks_from_values(values):
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return tuple(ranks)


def cell_patterns(N, n, c, M, out):
    """Add the patterns realized inside cell c to ``out``."""
    s = [1] * n
    d = [c] * n
    for i in range(n - 1):
        k = (N * (2 * d[i] + s[i])) // (2 * M)
        s[i + 1] = -N * s[i]
        d[i + 1] = -N * d[i] + M * (k + 1)
    crossings = {}
    for i in range(n):
        for j in range(i + 1, n):
            t = Fraction(d[j] - d[i], s[i] - s[j])
            if 0 < t < 1:
                crossings[(i, j)] = t
    cuts = sorted(set(crossings.values()))
    bounds = [Fraction(0)] + cuts + [Fraction(1)]
    for a, b in zip(bounds, bounds[1:]):
        t = (a + b) / 2
        values = [s[i] * t + d[i] for i in range(n)]
        out.add(_ranks_from_values(values))


def grid_patterns(N, n, M, out):
    """Patterns at the cell endpoints a/M, iterated exactly."""
    for a in range(M + 1):
        orbit = [a]
        for _ in range(n - 1):
            v = orbit[-1]
            orbit.append(0 if v == M else M - (N * v) % M)
        if len(set(orbit)) == n:
            out.add(_ranks_from_values(orbit))


def integer_patterns(N, n):
    """All patterns of length n realized by M(x) = 1 - {Nx}, M(1) = 0."""
    if n == 1:
        return {(1,)}
    M = N ** (n - 1)
    out = set()
    for c in range(M):
        cell_patterns(N, n, c, M, out)
    grid_patterns(N, n, M, out)
    return out
