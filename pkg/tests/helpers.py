"""Shared oracles and generators for the test suite.

Everything here is deliberately independent of the implementation paths it
checks: reversion is cross-checked by Lagrange inversion, moments by the
Jacobi-matrix recurrence, J-fraction coefficients by Hankel determinant
ratios, and so on.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

from expriordan.orthopoly import Recurrence, hankel
from expriordan.riordan import ExpRiordan, build
from expriordan.series import Series, one, series


def lagrange_revert(f: Series) -> Series:
    """Compositional inverse by Lagrange inversion:
    [x^n] fbar = (1/n) [x^{n-1}] (x/f(x))^n."""
    n = f.order
    assert f[0] == 0 and f[1] != 0
    w = 1 / Series(f.coeffs[1:])  # (x/f), order n-1
    out = [Fraction(0)] * (n + 1)
    p = one(n - 1)
    for m in range(1, n + 1):
        p = p * w
        out[m] = p[m - 1] / m
    return Series(tuple(out))


def euler_numbers(n_max: int) -> list[Fraction]:
    """E_0, E_1, ..., E_{n_max} from sum_k C(2n, 2k) E_{2k} = 0 (n >= 1)."""
    e = [Fraction(0)] * (n_max + 1)
    e[0] = Fraction(1)
    for m in range(2, n_max + 1, 2):
        e[m] = -sum(comb(m, j) * e[j] for j in range(0, m, 2))
    return e


def egf_convolution(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """EGF product: c_n = sum_j C(n, j) a_j b_{n-j}."""
    n = min(len(a), len(b)) - 1
    return [
        sum(comb(m, j) * a[j] * b[m - j] for j in range(m + 1)) for m in range(n + 1)
    ]


def moments_by_jacobi_recurrence(rec: Recurrence, n: int) -> tuple[Fraction, ...]:
    """First column of the moment matrix grown row by row from
    M[m+1][k] = M[m][k-1] + b_k M[m][k] + lambda_{k+1} M[m][k+1]."""
    row = [Fraction(1)] + [Fraction(0)] * n
    first = [Fraction(1)]
    for _ in range(n):
        nxt = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            v = row[k - 1] if k >= 1 else Fraction(0)
            if k < len(rec.b):
                v += rec.b[k] * row[k]
            if k < len(rec.lam) and k + 1 <= n:
                v += rec.lam[k] * row[k + 1]
            nxt[k] = v
        row = nxt
        first.append(row[0])
    return tuple(first)


def shifted_hankel(seq, n: int) -> Fraction:
    """det of (m_{i+j}) with the last column replaced by m_{i+n+1}."""
    size = n + 1
    a = [
        [Fraction(seq[i + j]) if j < n else Fraction(seq[i + n + 1]) for j in range(size)]
        for i in range(size)
    ]
    return _det(a)


def _det(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    a = [row[:] for row in a]
    sign = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            if factor:
                a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
    out = Fraction(sign)
    for k in range(n):
        out *= a[k][k]
    return out


def jfraction_by_determinants(seq, depth: int) -> Recurrence:
    """b_n and lambda_n from Hankel determinant ratios:
    lambda_n = h_n h_{n-2} / h_{n-1}^2,  b_n = e_n - e_{n-1} with
    e_n the ratio of the column-shifted determinant to h_n.
    Valid while the leading determinants stay nonzero."""
    h = [hankel(seq, n) for n in range(depth + 1)]
    lam = []
    for n in range(1, depth + 1):
        below = h[n - 2] if n >= 2 else Fraction(1)
        lam.append(h[n] * below / h[n - 1] ** 2)
    b = []
    prev_e = Fraction(0)
    for n in range(depth):
        e_n = shifted_hankel(seq, n) / h[n]
        b.append(e_n - prev_e)
        prev_e = e_n
    return Recurrence(b=tuple(b), lam=tuple(lam))


def random_riordan_pair(rng: random.Random, order: int) -> ExpRiordan:
    """A valid random array from small-coefficient polynomial g and f."""
    g = [Fraction(1)] + [
        Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(order)
    ]
    f = [Fraction(0), Fraction(1)] + [
        Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(order - 1)
    ]
    return build(series(g), series(f))
