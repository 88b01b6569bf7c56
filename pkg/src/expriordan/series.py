"""Exact arithmetic on truncated power series over the rationals.

A :class:`Series` is a jet of fixed order ``N``: the ordinary coefficients
``c_0 .. c_N`` of a power series truncated after ``x^N``.  Everything is
computed over :class:`fractions.Fraction`; there is no floating point in
this module.  Binary operations require operands of equal order -- mixing
orders would silently discard precision, so it raises instead.  Use
:meth:`Series.truncate` when a shorter jet is genuinely wanted.

The exponential-coefficient view of the same jet is ``n! * c_n``; the two
views convert exactly in both directions (:func:`from_egf`,
:meth:`Series.egf`).

>>> s = geometric(4)            # 1/(1-x)
>>> s.coeffs
(Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))
>>> (1 + x(4)) * (1 - x(4))
Series((1, 0, -1, 0, 0))
>>> exp_series(x(5)).egf()
(Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "Series",
    "series",
    "from_egf",
    "x",
    "one",
    "geometric",
    "exp_series",
    "log_series",
    "pow_rational",
    "format_rational",
    "parse_rational",
]


def format_rational(q: Fraction) -> str:
    """Render ``p/q``, or just ``p`` when the denominator is 1."""
    return str(q)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# coefficient-list kernels (plain lists of Fractions, explicit truncation)
# ---------------------------------------------------------------------------


def _mul(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a):
        if i > n:
            break
        if not ai:
            continue
        for j, bj in enumerate(b[: n + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def _div(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    if not b or b[0] == 0:
        raise ZeroDivisionError("division by a series with zero constant term")
    q = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        s = a[k] if k < len(a) else Fraction(0)
        for j in range(k):
            if q[j]:
                bk = b[k - j] if k - j < len(b) else Fraction(0)
                s -= q[j] * bk
        q[k] = s / b[0]
    return q


def _compose(outer: Sequence[Fraction], inner: Sequence[Fraction], n: int) -> list[Fraction]:
    # Horner over truncated powers; requires inner[0] == 0.
    res = [Fraction(0)] * (n + 1)
    res[0] = outer[-1]
    for k in range(len(outer) - 2, -1, -1):
        res = _mul(res, inner, n)
        res[0] += outer[k]
    return res


def _derive(a: Sequence[Fraction]) -> list[Fraction]:
    return [k * a[k] for k in range(1, len(a))]


def _integrate(a: Sequence[Fraction]) -> list[Fraction]:
    return [Fraction(0)] + [a[k] / (k + 1) for k in range(len(a))]


def _exp(u: Sequence[Fraction], n: int) -> list[Fraction]:
    # E' = u'E with E(0) = 1; requires u[0] == 0.
    e = [Fraction(0)] * (n + 1)
    e[0] = Fraction(1)
    for k in range(1, n + 1):
        s = Fraction(0)
        for j in range(1, min(k, len(u) - 1) + 1):
            if u[j]:
                s += j * u[j] * e[k - j]
        e[k] = s / k
    return e


def _log(a: Sequence[Fraction], n: int) -> list[Fraction]:
    # L = integral of a'/a; requires a[0] == 1.
    if n == 0:
        return [Fraction(0)]
    q = _div(_derive(a), a, n - 1)
    return _integrate(q)


def _revert(f: Sequence[Fraction], n: int) -> list[Fraction]:
    # Newton iteration g <- g - (f(g) - x)/f'(g), quadratic in the x-adic metric.
    g = [Fraction(0)] * (n + 1)
    g[1] = 1 / f[1]
    fp = _derive(f)
    for _ in range(n.bit_length() + 3):
        err = _compose(f, g, n)
        err[1] -= 1
        if not any(err):
            return g
        corr = _div(err, _compose(fp, g, n), n)
        g = [gi - ci for gi, ci in zip(g, corr)]
    raise AssertionError("Newton reversion failed to converge")


# ---------------------------------------------------------------------------
# the Series value type
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Series:
    """Immutable order-N jet with exact rational ordinary coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        """Coefficient-wise equality at the common order."""
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"Series(({body}))"

    # -- order management ---------------------------------------------------

    def _require_same_order(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def truncate(self, order: int) -> "Series":
        """Drop coefficients above ``order`` (explicit, never implicit)."""
        if order < 0 or order > self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to order {order}")
        return Series(self.coeffs[: order + 1])

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: Union["Series", Scalar]) -> "Series":
        if isinstance(other, Series):
            self._require_same_order(other)
            return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        return Series((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["Series", Scalar]) -> "Series":
        return self + (-other if isinstance(other, Series) else -Fraction(other))

    def __rsub__(self, other: Scalar) -> "Series":
        return (-self) + other

    def __mul__(self, other: Union["Series", Scalar]) -> "Series":
        if isinstance(other, Series):
            self._require_same_order(other)
            return Series(tuple(_mul(self.coeffs, other.coeffs, self.order)))
        q = Fraction(other)
        return Series(tuple(c * q for c in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Series", Scalar]) -> "Series":
        if isinstance(other, Series):
            self._require_same_order(other)
            return Series(tuple(_div(self.coeffs, other.coeffs, self.order)))
        return self * (1 / Fraction(other))

    def __rtruediv__(self, other: Scalar) -> "Series":
        num = [Fraction(other)] + [Fraction(0)] * self.order
        return Series(tuple(_div(num, self.coeffs, self.order)))

    def __pow__(self, k: int) -> "Series":
        if not isinstance(k, int) or k < 0:
            raise ValueError("integer power must be a non-negative int; see pow_rational")
        out = one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- calculus and composition --------------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """Substitute ``inner`` (constant term 0) into this series."""
        self._require_same_order(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires an inner series with zero constant term")
        return Series(tuple(_compose(self.coeffs, inner.coeffs, self.order)))

    def revert(self) -> "Series":
        """Compositional inverse: g with self(g(x)) = g(self(x)) = x."""
        if self.coeffs[0] != 0:
            raise ValueError("reversion requires a zero constant term")
        if self.order < 1 or self.coeffs[1] == 0:
            raise ValueError("reversion requires an invertible linear coefficient")
        return Series(tuple(_revert(self.coeffs, self.order)))

    def derive(self) -> "Series":
        """Formal derivative; the order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 jet")
        return Series(tuple(_derive(self.coeffs)))

    def integrate(self) -> "Series":
        """Antiderivative with zero constant term; the order rises by one."""
        return Series(tuple(_integrate(self.coeffs)))

    def times_x(self) -> "Series":
        """Multiply by x at fixed order (the top coefficient falls off)."""
        return Series((Fraction(0),) + self.coeffs[:-1])

    def scale_argument(self, c: Scalar) -> "Series":
        """s(c*x): the n-th coefficient picks up a factor c^n."""
        q = Fraction(c)
        return Series(tuple(ck * q**k for k, ck in enumerate(self.coeffs)))

    # -- views and predicates --------------------------------------------------

    def egf(self) -> tuple[Fraction, ...]:
        """Exponential-coefficient view: n-th entry is n! * c_n."""
        return tuple(factorial(n) * c for n, c in enumerate(self.coeffs))

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def format_coeffs(self, view: str = "ogf") -> str:
        """Render the coefficient list in the requested view ('ogf' or 'egf')."""
        data = self.coeffs if view == "ogf" else self.egf()
        return ", ".join(format_rational(c) for c in data)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def series(coeffs: Iterable[Union[Scalar, str]], order: int | None = None) -> Series:
    """Build a Series from ordinary coefficients, zero-padded to ``order``.

    Padding treats the input as an exact polynomial, so extending with
    zeros loses nothing.
    """
    cs = [Fraction(c) for c in coeffs]
    if order is not None:
        if order + 1 < len(cs):
            raise ValueError("more coefficients than the requested order allows")
        cs += [Fraction(0)] * (order + 1 - len(cs))
    return Series(tuple(cs))


def from_egf(coeffs: Iterable[Union[Scalar, str]], order: int | None = None) -> Series:
    """Build a Series from exponential coefficients a_n (so c_n = a_n/n!)."""
    cs = [Fraction(c) for c in coeffs]
    if order is not None:
        if order + 1 < len(cs):
            raise ValueError("more coefficients than the requested order allows")
        cs += [Fraction(0)] * (order + 1 - len(cs))
    return Series(tuple(c / factorial(n) for n, c in enumerate(cs)))


def x(order: int) -> Series:
    return series([0, 1], order=order)


def one(order: int) -> Series:
    return series([1], order=order)


def geometric(order: int) -> Series:
    """1/(1-x) = 1 + x + x^2 + ..."""
    return Series((Fraction(1),) * (order + 1))


# ---------------------------------------------------------------------------
# transcendental operations
# ---------------------------------------------------------------------------


def exp_series(s: Series) -> Series:
    """exp of a series with zero constant term."""
    if s.coeffs[0] != 0:
        raise ValueError("exp requires a zero constant term")
    return Series(tuple(_exp(s.coeffs, s.order)))


def log_series(s: Series) -> Series:
    """log of a series with constant term 1."""
    if s.coeffs[0] != 1:
        raise ValueError("log requires constant term 1")
    return Series(tuple(_log(s.coeffs, s.order)))


def pow_rational(s: Series, r: Union[Scalar, str]) -> Series:
    """s**r for rational r, as exp(r*log(s)); requires constant term 1."""
    if s.coeffs[0] != 1:
        raise ValueError("rational power requires constant term 1")
    r = Fraction(r)
    if r == 0:
        return one(s.order)
    return exp_series(log_series(s) * r)
