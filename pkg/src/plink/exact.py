"""
Exact integer linear algebra for the geometric predicates.

Everything works on Python integers with fraction-free (Bareiss)
elimination, so determinants and solution numerators are exact. The
batched determinant test runs modulo a prime with numpy and only proves
non-singularity; anything that vanishes mod p is rechecked exactly.
"""

from fractions import Fraction
from math import lcm

import numpy as np

__all__ = [
    "bareiss_det",
    "solve_integer",
    "integer_rank",
    "nonsingular_mask",
    "to_fraction",
    "scale_to_integers",
]

PRIME = 2147483647  # 2**31 - 1; products of two residues fit in int64


def to_fraction(x):
    """Parse ints, Fractions and ``"num/den"`` strings exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError("refusing inexact coordinate %r" % (x,))


def scale_to_integers(rows):
    """Multiply rational rows by the common denominator.

    Returns (integer rows, positive scale). Positive scaling changes no
    incidence, barycentric coordinate or height comparison.
    """
    den = 1
    for r in rows:
        for x in r:
            den = lcm(den, Fraction(x).denominator)
    return [[int(Fraction(x) * den) for x in r] for r in rows], den


def bareiss_det(matrix):
    """Exact determinant of a square integer matrix."""
    a = [list(r) for r in matrix]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def solve_integer(matrix, rhs):
    """Solve A x = b exactly for integer A, b.

    Returns ``(numerators, den)`` with den > 0 and x_i = numerators[i] / den,
    or None when A is singular.
    """
    n = len(matrix)
    a = [list(r) + [b] for r, b in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                return None
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n + 1):
                ai[j] = (ai[j] * akk - aik * rowk[j]) // prev
            ai[k] = 0
        prev = akk
    # a[n-1][n-1] is +-det(A); back-substitute D*x_i, which are integers
    det = a[n - 1][n - 1]
    num = [0] * n
    for i in range(n - 1, -1, -1):
        s = det * a[i][n]
        row = a[i]
        for j in range(i + 1, n):
            s -= row[j] * num[j]
        q, r = divmod(s, row[i])
        assert r == 0, "non-exact back substitution"
        num[i] = q
    if det < 0:
        det = -det
        num = [-x for x in num]
    return num, det


def integer_rank(rows):
    """Rank of an integer matrix (fraction-free elimination)."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    m, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, m):
            aic = a[i][col]
            for j in range(col, ncols):
                a[i][j] = (a[i][j] * p - aic * a[rank][j]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def _powmod(base, exp, p):
    result = np.ones_like(base)
    b = base % p
    while exp:
        if exp & 1:
            result = (result * b) % p
        b = (b * b) % p
        exp >>= 1
    return result


def nonsingular_mask(stack, p=PRIME):
    """Boolean mask, per matrix in `stack`, of det != 0 mod p.

    `stack` is an (M, k, k) array of residues in [0, p). True is a proof
    of non-singularity over the integers; False means "unknown".
    """
    a = np.array(stack, dtype=np.int64) % p
    m, k, _ = a.shape
    ok = np.ones(m, dtype=bool)
    rows = np.arange(m)
    for c in range(k):
        col = a[:, c:, c]
        nz = col != 0
        has = nz.any(axis=1)
        ok &= has
        piv = c + np.argmax(nz, axis=1)
        # swap pivot row into place
        top = a[rows, c].copy()
        a[rows, c] = a[rows, piv]
        a[rows, piv] = top
        inv = _powmod(a[:, c, c], p - 2, p)
        for r in range(c + 1, k):
            f = (a[:, r, c] * inv) % p
            a[:, r, c:] = (a[:, r, c:] - (f[:, None] * a[:, c, c:]) % p) % p
    return ok
