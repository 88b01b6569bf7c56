"""Production (Stieltjes) matrices of exponential Riordan arrays.

Two independent routes are provided.  The definitional route solves
``M . P = (M with its first row removed)`` by exact triangular inversion.
The analytic route builds P from the pair of sequences

    A(x) = f'(fbar(x)),        Z(x) = g'(fbar(x)) / g(fbar(x)),

via ``P[n][k] = (n!/k!) z_{n-k} + (n!/(k-1)!) a_{n-k+1}``.  A tridiagonal
production matrix is equivalent to the generating form
``e^{xy} (alpha + beta x + y (1 + gamma x + delta x^2))`` and is returned
as :class:`JacobiParams`, the data of a monic three-term recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .riordan import ExpRiordan, TriMatrix, build, mat_inverse, mat_mul, shift_apply
from .series import Series, format_rational, x

__all__ = [
    "ZAPair",
    "JacobiParams",
    "production_definitional",
    "za_sequences",
    "production_analytic",
    "tridiagonal_params",
    "derivative_production_check",
    "power_first_row",
]


@dataclass(frozen=True)
class ZAPair:
    """The A- and Z-sequences of an array, as ordinary-coefficient series."""

    z: Series
    a: Series

    def __post_init__(self) -> None:
        if self.a[0] != 1:
            raise ValueError("the A-sequence must start with 1")


@dataclass(frozen=True)
class JacobiParams:
    """Tridiagonal production data (alpha, beta, gamma, delta).

    Diagonal entries are ``b_k = alpha + k*gamma`` and subdiagonal entries
    ``lambda_k = k*beta + k(k-1)*delta``; the same numbers feed the monic
    recurrence P_n = (x - b_{n-1}) P_{n-1} - lambda_{n-1} P_{n-2}.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def diagonal(self, k: int) -> Fraction:
        return self.alpha + k * self.gamma

    def subdiagonal(self, k: int) -> Fraction:
        return k * self.beta + k * (k - 1) * self.delta

    def b_list(self, n: int) -> tuple[Fraction, ...]:
        """b_0 .. b_{n-1}."""
        return tuple(self.diagonal(k) for k in range(n))

    def lam_list(self, n: int) -> tuple[Fraction, ...]:
        """lambda_1 .. lambda_{n-1}."""
        return tuple(self.subdiagonal(k) for k in range(1, n))

    def to_json(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "gamma": format_rational(self.gamma),
            "delta": format_rational(self.delta),
        }


def production_definitional(arr: ExpRiordan) -> TriMatrix:
    """P = M^{-1} (U M) for the realized matrix M, leading N-by-N block.

    Only rows 0..N-1 of the product are determined by an order-N array, so
    the returned block has dim N (one less than the matrix).
    """
    m = arr.matrix
    p = mat_mul(mat_inverse(m), shift_apply(m))
    return p.leading(m.dim - 1)


def za_sequences(g: Series, f: Series) -> ZAPair:
    """A = f'(fbar), Z = g'(fbar)/g(fbar); the results have order N-1."""
    if g.order != f.order:
        raise ValueError(f"order mismatch: {g.order} != {f.order}")
    fbar = f.revert().truncate(f.order - 1)
    a = f.derive().compose(fbar)
    z = g.derive().compose(fbar) / g.truncate(g.order - 1).compose(fbar)
    return ZAPair(z=z, a=a)


def production_analytic(za: ZAPair, dim: int) -> TriMatrix:
    """The dim-by-dim block of the matrix with generating form e^{xy}(Z + yA)."""
    if dim - 1 > za.z.order or dim > za.a.order:
        raise ValueError(
            f"dim {dim} needs z to order {dim - 1} and a to order {dim}, "
            f"have {za.z.order} and {za.a.order}"
        )
    facts = [factorial(i) for i in range(dim)]
    rows = []
    for n in range(dim):
        row = [Fraction(0)] * dim
        for k in range(min(n + 1, dim - 1) + 1):
            v = Fraction(0)
            if 0 <= n - k <= za.z.order:
                v += Fraction(facts[n], facts[k]) * za.z[n - k]
            if k >= 1 and 0 <= n - k + 1 <= za.a.order:
                v += Fraction(facts[n], facts[k - 1]) * za.a[n - k + 1]
            row[k] = v
        rows.append(tuple(row))
    return TriMatrix(tuple(rows))


def tridiagonal_params(p: TriMatrix) -> JacobiParams | None:
    """Extract (alpha, beta, gamma, delta) when P fits the tridiagonal form.

    alpha = P[0][0], beta = P[1][0], gamma = P[1][1] - alpha,
    delta = P[2][1]/2 - beta; every entry of P is then re-checked against
    the b_k / lambda_k formulas and any mismatch yields None.
    """
    if p.dim < 3:
        raise ValueError("need at least a 3x3 block to extract parameters")
    alpha = p.entry(0, 0)
    beta = p.entry(1, 0)
    gamma = p.entry(1, 1) - alpha
    delta = p.entry(2, 1) / 2 - beta
    params = JacobiParams(alpha, beta, gamma, delta)
    for n in range(p.dim):
        for k in range(p.dim):
            v = p.entry(n, k)
            if k == n:
                expect = params.diagonal(n)
            elif k == n - 1:
                expect = params.subdiagonal(n)
            elif k == n + 1:
                expect = Fraction(1)
            else:
                expect = Fraction(0)
            if v != expect:
                return None
    return params


def derivative_production_check(f: Series) -> TriMatrix:
    """U . [1/fbar', x], the closed production form for the pair [f', f]."""
    if f[0] != 0 or f.order < 1 or f[1] != 1:
        raise ValueError("expected a sigmoid-normalized f (f(0)=0, f'(0)=1)")
    fbar = f.revert()
    a = 1 / fbar.derive()  # equals f'(fbar); order N-1
    arr = build(a, x(a.order))
    return shift_apply(arr.matrix)


def power_first_row(p: TriMatrix, n: int) -> tuple[Fraction, ...]:
    """First row of P^n, exact for n <= dim-1 (band growth stays inside)."""
    if n < 0:
        raise ValueError("negative powers are not supported")
    row = [Fraction(1)] + [Fraction(0)] * (p.dim - 1)
    for _ in range(n):
        nxt = [Fraction(0)] * p.dim
        for k, rk in enumerate(row):
            if rk:
                prow = p.rows[k]
                for j in range(min(k + 2, p.dim)):
                    if prow[j]:
                        nxt[j] += rk * prow[j]
        row = nxt
    return tuple(row)
