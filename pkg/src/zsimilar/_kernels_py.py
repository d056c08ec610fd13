"""Pure-Python twins of the compiled hot loops.

Same signatures as the Cython module `_kernels_cy`; `zsimilar.kernels`
picks whichever is importable. Everything here works on plain Python
ints stored in lists, so arbitrary precision comes for free.
"""

IMPL = "python"


def row_addmul(r, s, c, start=0):
    # r += c*s, in place, from index `start`
    if c:
        for j in range(start, len(r)):
            sj = s[j]
            if sj:
                r[j] += c * sj


def row_combine(r, s, a, b, c, d, start=0):
    # (r, s) := (a*r + b*s, c*r + d*s), in place
    for j in range(start, len(r)):
        rj = r[j]
        sj = s[j]
        r[j] = a * rj + b * sj
        s[j] = c * rj + d * sj


def row_mod(r, m, start=0):
    # reduce entries of r into [0, m)
    for j in range(start, len(r)):
        r[j] %= m


def dot(u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc += a * b
    return acc


def mat_mul_int(A, B):
    # A: m x k rows, B: k x n rows -> m x n rows
    if not A:
        return []
    n = len(B[0]) if B else 0
    Bcols = [[row[j] for row in B] for j in range(n)]
    out = []
    for Ar in A:
        orow = [0] * n
        for j in range(n):
            Bc = Bcols[j]
            acc = 0
            for a, b in zip(Ar, Bc):
                if a and b:
                    acc += a * b
            orow[j] = acc
        out.append(orow)
    return out
