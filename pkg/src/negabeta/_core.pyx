# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled kernels; same results as ``negabeta._pycore``.

Patterns are packed 4 bits per rank while enumerating, so n <= 15.
Crossings t = num/den are compared by cross-multiplication in 64-bit
integers; the dispatcher only routes here when N^(n-1) keeps those
products far from overflow.
"""

cdef enum:
    MAXN = 15

cdef inline long long _floordiv(long long a, long long b):
    cdef long long q = a // b
    return q


cdef inline int _cmp_frac(long long an, long long ad, long long bn, long long bd):
    # denominators positive
    cdef long long l = an * bd
    cdef long long r = bn * ad
    if l < r:
        return -1
    if l > r:
        return 1
    return 0


cdef unsigned long long _pack(int n, long long* values):
    cdef int i, j, below
    cdef unsigned long long key = 0
    for i in range(n):
        below = 0
        for j in range(n):
            if values[j] < values[i]:
                below += 1
        key = (key << 4) | <unsigned long long>below
    return key


def integer_patterns(int N, int n):
    """All patterns of length n realized by x -> 1 - {Nx} (1 -> 0)."""
    if n < 1 or n > MAXN:
        raise ValueError("n out of range for the compiled kernel")
    if n == 1:
        return {(1,)}
    cdef long long M = 1
    cdef int i, j, q, r, u, nu, idx
    for i in range(n - 1):
        M *= N
    cdef long long s[MAXN]
    cdef long long d[MAXN]
    cdef long long vals[MAXN + 1]
    cdef long long cn[MAXN * MAXN]
    cdef long long cd[MAXN * MAXN]
    cdef int crank[MAXN * MAXN]
    cdef long long un[MAXN * MAXN]
    cdef long long ud[MAXN * MAXN]
    cdef long long num, den, k, c, a
    cdef int found, cmpv, below_i
    cdef unsigned long long key
    keys = set()
    for c in range(M):
        s[0] = 1
        d[0] = c
        for i in range(n - 1):
            k = _floordiv(N * (2 * d[i] + s[i]), 2 * M)
            s[i + 1] = -N * s[i]
            d[i + 1] = -N * d[i] + M * (k + 1)
        # crossings inside (0, 1)
        nu = 0
        idx = 0
        for i in range(n):
            for j in range(i + 1, n):
                num = d[j] - d[i]
                den = s[i] - s[j]
                if den < 0:
                    num = -num
                    den = -den
                cn[idx] = num
                cd[idx] = den
                if num > 0 and num < den:
                    crank[idx] = 0
                    # insert into sorted unique list
                    found = 0
                    for q in range(nu):
                        cmpv = _cmp_frac(num, den, un[q], ud[q])
                        if cmpv == 0:
                            found = 1
                            break
                        if cmpv < 0:
                            break
                    if not found:
                        # shift right from q (q is insertion point, or nu if loop ended)
                        if nu == 0 or _cmp_frac(num, den, un[nu - 1], ud[nu - 1]) > 0:
                            q = nu
                        u = nu
                        while u > q:
                            un[u] = un[u - 1]
                            ud[u] = ud[u - 1]
                            u -= 1
                        un[q] = num
                        ud[q] = den
                        nu += 1
                else:
                    crank[idx] = -1
                idx += 1
        # rank of each crossing among the unique cuts
        idx = 0
        for i in range(n):
            for j in range(i + 1, n):
                if crank[idx] == 0:
                    for q in range(nu):
                        if _cmp_frac(cn[idx], cd[idx], un[q], ud[q]) == 0:
                            crank[idx] = q
                            break
                idx += 1
        # rank lines on every sub-interval r = 0..nu
        for r in range(nu + 1):
            for i in range(n):
                vals[i] = 0
            idx = 0
            for i in range(n):
                for j in range(i + 1, n):
                    q = crank[idx]
                    if q >= 0:
                        # right of the crossing: smaller slope is below
                        if r > q:
                            below_i = s[i] < s[j]
                        else:
                            below_i = s[i] > s[j]
                    else:
                        below_i = (2 * d[i] + s[i]) < (2 * d[j] + s[j])
                    if below_i:
                        vals[j] += 1
                    else:
                        vals[i] += 1
                    idx += 1
            key = 0
            for i in range(n):
                key = (key << 4) | <unsigned long long>vals[i]
            keys.add(key)
    # grid points a/M
    for c in range(M + 1):
        a = c
        vals[0] = a
        for i in range(1, n):
            if a == M:
                a = 0
            else:
                a = M - (N * a) % M
            vals[i] = a
        found = 0
        for i in range(n):
            for j in range(i + 1, n):
                if vals[i] == vals[j]:
                    found = 1
        if not found:
            keys.add(_pack(n, vals))
    out = set()
    for key in keys:
        ranks = []
        for i in range(n):
            ranks.append(((key >> (4 * (n - 1 - i))) & 15) + 1)
        out.add(tuple(ranks))
    return out
