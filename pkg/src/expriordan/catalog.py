"""Named sigmoid pairs and auxiliary arrays, with exact series generators.

Each entry packages a pair (g, f) with g = f' for the sigmoid entries, the
float evaluators used for plot sampling, the stated inverse pair where one
has a closed form, and the tridiagonal production data where the entry (or
its inverse) carries a family of formally orthogonal polynomials.

Transcendental constants are normalized away so every series stays over
the rationals: the error-function entry uses int_0^x exp(-t^2) dt, which
equals (sqrt(pi)/2) erf(x) exactly, and the Gompertz entry's leading
constant e cancels inside exp(1 - exp(-x)).  The float evaluators carry
the true constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Optional

from .production import JacobiParams, ZAPair
from .riordan import ExpRiordan, TriMatrix, build, from_rows, multiply
from .series import Series, exp_series, log_series, one, pow_rational, series, x

__all__ = [
    "CatalogEntry",
    "SampleGrid",
    "entry",
    "ids",
    "pair",
    "inverse_pair",
    "build_entry",
    "build_inverse_entry",
    "za_closed_form",
    "inverse_za_closed_form",
    "stirling2",
    "gompertz_identities",
    "gudermann_identities",
    "erf_identity",
    "sample_curve",
    "sample_parametric",
    "sin_series",
    "cos_series",
    "sinh_series",
    "cosh_series",
    "expx_series",
    "tan_series",
    "sec_series",
    "tanh_series",
    "sech_series",
    "arctan_series",
    "artanh_series",
    "arcsin_series",
    "gd_series",
    "gauss_series",
    "erf_integral_series",
    "log1p_series",
]


# ---------------------------------------------------------------------------
# exact series for the elementary functions involved
# ---------------------------------------------------------------------------


def sin_series(order: int) -> Series:
    return Series(
        tuple(
            Fraction((-1) ** (k // 2), factorial(k)) if k % 2 else Fraction(0)
            for k in range(order + 1)
        )
    )


def cos_series(order: int) -> Series:
    return Series(
        tuple(
            Fraction((-1) ** (k // 2), factorial(k)) if k % 2 == 0 else Fraction(0)
            for k in range(order + 1)
        )
    )


def sinh_series(order: int) -> Series:
    return Series(
        tuple(
            Fraction(1, factorial(k)) if k % 2 else Fraction(0)
            for k in range(order + 1)
        )
    )


def cosh_series(order: int) -> Series:
    return Series(
        tuple(
            Fraction(1, factorial(k)) if k % 2 == 0 else Fraction(0)
            for k in range(order + 1)
        )
    )


def expx_series(order: int, scale: int = 1) -> Series:
    """e^{scale * x}."""
    return Series(tuple(Fraction(scale**k, factorial(k)) for k in range(order + 1)))


def tan_series(order: int) -> Series:
    return sin_series(order) / cos_series(order)


def sec_series(order: int) -> Series:
    return 1 / cos_series(order)


def tanh_series(order: int) -> Series:
    return sinh_series(order) / cosh_series(order)


def sech_series(order: int) -> Series:
    return 1 / cosh_series(order)


def arctan_series(order: int) -> Series:
    return Series(
        tuple(
            Fraction((-1) ** (k // 2), k) if k % 2 else Fraction(0)
            for k in range(order + 1)
        )
    )


def artanh_series(order: int) -> Series:
    return Series(
        tuple(Fraction(1, k) if k % 2 else Fraction(0) for k in range(order + 1))
    )


def arcsin_series(order: int) -> Series:
    return Series(
        tuple(
            Fraction(comb(k - 1, (k - 1) // 2), 4 ** ((k - 1) // 2) * k)
            if k % 2
            else Fraction(0)
            for k in range(order + 1)
        )
    )


def gd_series(order: int) -> Series:
    """Gudermannian gd(x) = arctan(sinh(x))."""
    return arctan_series(order).compose(sinh_series(order))


def gauss_series(order: int) -> Series:
    """exp(-x^2)."""
    return Series(
        tuple(
            Fraction((-1) ** (k // 2), factorial(k // 2)) if k % 2 == 0 else Fraction(0)
            for k in range(order + 1)
        )
    )


def erf_integral_series(order: int) -> Series:
    """int_0^x exp(-t^2) dt = (sqrt(pi)/2) erf(x)."""
    return Series(
        tuple(
            Fraction((-1) ** ((k - 1) // 2), factorial((k - 1) // 2) * k)
            if k % 2
            else Fraction(0)
            for k in range(order + 1)
        )
    )


def log1p_series(order: int) -> Series:
    return Series(
        tuple(
            Fraction((-1) ** (k + 1), k) if k >= 1 else Fraction(0)
            for k in range(order + 1)
        )
    )


def _poly(coeffs: list[int], order: int) -> Series:
    return series(coeffs[: order + 1], order=order)


# ---------------------------------------------------------------------------
# catalog entries
# ---------------------------------------------------------------------------

PairBuilder = Callable[[int], Series]


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    g_label: str
    f_label: str
    notes: str
    is_sigmoid: bool
    g_series: PairBuilder
    f_series: PairBuilder
    f_eval: Callable[[float], float]
    fprime_eval: Callable[[float], float]
    inverse_g: Optional[PairBuilder] = None
    inverse_f: Optional[PairBuilder] = None
    a_closed: Optional[PairBuilder] = None
    z_closed: Optional[PairBuilder] = None
    inverse_a_closed: Optional[PairBuilder] = None
    inverse_z_closed: Optional[PairBuilder] = None
    jacobi: Optional[JacobiParams] = None
    inverse_jacobi: Optional[JacobiParams] = None


def _tanh_g(order: int) -> Series:
    t = tanh_series(order)
    return 1 - t * t


def _tanh2_f(order: int) -> Series:
    return tanh_series(order).scale_argument(2) / 2


def _tanh2_g(order: int) -> Series:
    t = tanh_series(order).scale_argument(2)
    return 1 - t * t


def _geom_x2(order: int) -> Series:
    """1/(1-x^2)."""
    return Series(
        tuple(Fraction(1) if k % 2 == 0 else Fraction(0) for k in range(order + 1))
    )


def _geom_4x2(order: int) -> Series:
    """1/(1-4x^2)."""
    return Series(
        tuple(Fraction(4 ** (k // 2)) if k % 2 == 0 else Fraction(0) for k in range(order + 1))
    )


def _alt_x2(order: int) -> Series:
    """1/(1+x^2)."""
    return Series(
        tuple(
            Fraction((-1) ** (k // 2)) if k % 2 == 0 else Fraction(0)
            for k in range(order + 1)
        )
    )


def _gompertz_f(order: int) -> Series:
    u = 1 - expx_series(order, scale=-1)
    return exp_series(u) - 1


def _gompertz_g(order: int) -> Series:
    u = 1 - expx_series(order, scale=-1)
    return exp_series(u - x(order))


def _gompertz_inverse_g(order: int) -> Series:
    w = log1p_series(order)
    return 1 / (_poly([1, 1], order) * (1 - w))


def _gompertz_inverse_f(order: int) -> Series:
    return -log_series(1 - log1p_series(order))


def _gompertz_a(order: int) -> Series:
    return _poly([1, 1], order) * (1 - log1p_series(order))


def _sec_integral(order: int) -> Series:
    """int_0^x sec(t) dt = log(sec(x) + tan(x))."""
    if order == 0:
        return series([0], order=0)
    return sec_series(order - 1).integrate()


ENTRIES: dict[str, CatalogEntry] = {}


def _register(e: CatalogEntry) -> None:
    ENTRIES[e.id] = e


_register(
    CatalogEntry(
        id="tanh",
        g_label="sech^2(x)",
        f_label="tanh(x)",
        notes="rescaled logistic; both production routes tridiagonal",
        is_sigmoid=True,
        g_series=_tanh_g,
        f_series=tanh_series,
        f_eval=math.tanh,
        fprime_eval=lambda t: 1.0 / math.cosh(t) ** 2,
        inverse_g=_geom_x2,
        inverse_f=artanh_series,
        a_closed=lambda n: _poly([1, 0, -1], n),
        z_closed=lambda n: _poly([0, -2], n),
        jacobi=JacobiParams(0, -2, 0, -1),
    )
)

_register(
    CatalogEntry(
        id="tanh2",
        g_label="sech^2(2x)",
        f_label="tanh(2x)/2",
        notes="argument-doubled variant of tanh; entries scale by 2^(n-k)",
        is_sigmoid=True,
        g_series=_tanh2_g,
        f_series=_tanh2_f,
        f_eval=lambda t: 0.5 * math.tanh(2.0 * t),
        fprime_eval=lambda t: 1.0 / math.cosh(2.0 * t) ** 2,
        inverse_g=_geom_4x2,
        inverse_f=lambda n: artanh_series(n).scale_argument(2) / 2,
        a_closed=lambda n: _poly([1, 0, -4], n),
        z_closed=lambda n: _poly([0, -8], n),
        jacobi=JacobiParams(0, -8, 0, -4),
    )
)

_register(
    CatalogEntry(
        id="arctan",
        g_label="1/(1+x^2)",
        f_label="arctan(x)",
        notes="inverse-tangent sigmoid; the array is itself a coefficient array",
        is_sigmoid=True,
        g_series=_alt_x2,
        f_series=arctan_series,
        f_eval=math.atan,
        fprime_eval=lambda t: 1.0 / (1.0 + t * t),
        inverse_g=lambda n: sec_series(n) ** 2,
        inverse_f=tan_series,
        a_closed=lambda n: cos_series(n) ** 2,
        z_closed=lambda n: -sin_series(n).scale_argument(2),
        inverse_a_closed=lambda n: _poly([1, 0, 1], n),
        inverse_z_closed=lambda n: _poly([0, 2], n),
        inverse_jacobi=JacobiParams(0, 2, 0, 1),
    )
)

_register(
    CatalogEntry(
        id="algebraic",
        g_label="(1+x^2)^(-3/2)",
        f_label="x/sqrt(1+x^2)",
        notes="algebraic sigmoid; production is not tridiagonal on either side",
        is_sigmoid=True,
        g_series=lambda n: pow_rational(_poly([1, 0, 1], n), Fraction(-3, 2)),
        f_series=lambda n: pow_rational(_poly([1, 0, 1], n), Fraction(-1, 2)).times_x(),
        f_eval=lambda t: t / math.sqrt(1.0 + t * t),
        fprime_eval=lambda t: (1.0 + t * t) ** -1.5,
        inverse_g=lambda n: pow_rational(_poly([1, 0, -1], n), Fraction(-3, 2)),
        inverse_f=lambda n: pow_rational(_poly([1, 0, -1], n), Fraction(-1, 2)).times_x(),
        a_closed=lambda n: pow_rational(_poly([1, 0, -1], n), Fraction(3, 2)),
        z_closed=lambda n: -3 * pow_rational(_poly([1, 0, -1], n), Fraction(1, 2)).times_x(),
        inverse_a_closed=lambda n: pow_rational(_poly([1, 0, 1], n), Fraction(3, 2)),
        inverse_z_closed=lambda n: 3 * pow_rational(_poly([1, 0, 1], n), Fraction(1, 2)).times_x(),
    )
)

_register(
    CatalogEntry(
        id="quartic",
        g_label="(1+x^4)^(-5/4)",
        f_label="x/(1+x^4)^(1/4)",
        notes="quartic member of the algebraic-sigmoid family",
        is_sigmoid=True,
        g_series=lambda n: pow_rational(_poly([1, 0, 0, 0, 1], n), Fraction(-5, 4)),
        f_series=lambda n: pow_rational(_poly([1, 0, 0, 0, 1], n), Fraction(-1, 4)).times_x(),
        f_eval=lambda t: t / (1.0 + t**4) ** 0.25,
        fprime_eval=lambda t: (1.0 + t**4) ** -1.25,
        inverse_g=lambda n: pow_rational(_poly([1, 0, 0, 0, -1], n), Fraction(-5, 4)),
        inverse_f=lambda n: pow_rational(_poly([1, 0, 0, 0, -1], n), Fraction(-1, 4)).times_x(),
        a_closed=lambda n: pow_rational(_poly([1, 0, 0, 0, -1], n), Fraction(5, 4)),
        z_closed=lambda n: -5
        * pow_rational(_poly([1, 0, 0, 0, -1], n), Fraction(1, 4))
        .times_x()
        .times_x()
        .times_x(),
        inverse_a_closed=lambda n: pow_rational(_poly([1, 0, 0, 0, 1], n), Fraction(5, 4)),
        inverse_z_closed=lambda n: 5
        * pow_rational(_poly([1, 0, 0, 0, 1], n), Fraction(1, 4))
        .times_x()
        .times_x()
        .times_x(),
    )
)

_register(
    CatalogEntry(
        id="gudermann",
        g_label="sech(x)",
        f_label="gd(x) = arctan(sinh(x))",
        notes="Gudermannian; factors through the secant-moment array",
        is_sigmoid=True,
        g_series=sech_series,
        f_series=gd_series,
        f_eval=lambda t: math.atan(math.sinh(t)),
        fprime_eval=lambda t: 1.0 / math.cosh(t),
        inverse_g=sec_series,
        inverse_f=_sec_integral,
        a_closed=cos_series,
        z_closed=lambda n: -sin_series(n),
        inverse_a_closed=cosh_series,
        inverse_z_closed=sinh_series,
    )
)

_register(
    CatalogEntry(
        id="erf",
        g_label="exp(-x^2)",
        f_label="(sqrt(pi)/2) erf(x)",
        notes="error-function sigmoid; no closed form for the inverse pair",
        is_sigmoid=True,
        g_series=gauss_series,
        f_series=erf_integral_series,
        f_eval=lambda t: 0.5 * math.sqrt(math.pi) * math.erf(t),
        fprime_eval=lambda t: math.exp(-t * t),
    )
)

_register(
    CatalogEntry(
        id="gompertz",
        g_label="exp(1-x-exp(-x))",
        f_label="exp(1-exp(-x)) - 1",
        notes="Gompertz growth curve; not odd, tied to Stirling set numbers",
        is_sigmoid=True,
        g_series=_gompertz_g,
        f_series=_gompertz_f,
        f_eval=lambda t: math.exp(1.0 - math.exp(-t)) - 1.0,
        fprime_eval=lambda t: math.exp(1.0 - t - math.exp(-t)),
        inverse_g=_gompertz_inverse_g,
        inverse_f=_gompertz_inverse_f,
        a_closed=_gompertz_a,
        z_closed=lambda n: -log1p_series(n),
    )
)

_register(
    CatalogEntry(
        id="cos_sin",
        g_label="cos(x)",
        f_label="sin(x)",
        notes="circular pair; parametric plot is the unit circle",
        is_sigmoid=False,
        g_series=cos_series,
        f_series=sin_series,
        f_eval=math.sin,
        fprime_eval=math.cos,
        inverse_g=lambda n: pow_rational(_poly([1, 0, -1], n), Fraction(-1, 2)),
        inverse_f=arcsin_series,
        a_closed=lambda n: pow_rational(_poly([1, 0, -1], n), Fraction(1, 2)),
        z_closed=lambda n: -pow_rational(_poly([1, 0, -1], n), Fraction(-1, 2)).times_x(),
        inverse_a_closed=sec_series,
        inverse_z_closed=lambda n: sec_series(n) * tan_series(n),
    )
)

_register(
    CatalogEntry(
        id="pascal",
        g_label="exp(x)",
        f_label="x",
        notes="binomial triangle; bidiagonal production matrix",
        is_sigmoid=False,
        g_series=expx_series,
        f_series=x,
        f_eval=lambda t: t,
        fprime_eval=lambda t: 1.0,
        inverse_g=lambda n: expx_series(n, scale=-1),
        inverse_f=x,
        a_closed=one,
        z_closed=one,
        jacobi=JacobiParams(1, 0, 0, 0),
    )
)


def ids() -> tuple[str, ...]:
    return tuple(ENTRIES)


def entry(entry_id: str) -> CatalogEntry:
    try:
        return ENTRIES[entry_id]
    except KeyError:
        known = ", ".join(ids())
        raise KeyError(f"unknown catalog id {entry_id!r}; known ids: {known}") from None


@lru_cache(maxsize=None)
def pair(entry_id: str, order: int) -> tuple[Series, Series]:
    e = entry(entry_id)
    return e.g_series(order), e.f_series(order)


@lru_cache(maxsize=None)
def inverse_pair(entry_id: str, order: int) -> tuple[Series, Series]:
    e = entry(entry_id)
    if e.inverse_g is None or e.inverse_f is None:
        raise ValueError(f"entry {entry_id!r} has no closed-form inverse pair")
    return e.inverse_g(order), e.inverse_f(order)


@lru_cache(maxsize=None)
def build_entry(entry_id: str, order: int) -> ExpRiordan:
    g, f = pair(entry_id, order)
    return build(g, f)


@lru_cache(maxsize=None)
def build_inverse_entry(entry_id: str, order: int) -> ExpRiordan:
    g, f = inverse_pair(entry_id, order)
    return build(g, f)


def za_closed_form(entry_id: str, order: int) -> Optional[ZAPair]:
    """The stated (Z, A) series of the entry's production matrix, or None."""
    e = entry(entry_id)
    if e.a_closed is None or e.z_closed is None:
        return None
    return ZAPair(z=e.z_closed(order), a=e.a_closed(order))


def inverse_za_closed_form(entry_id: str, order: int) -> Optional[ZAPair]:
    e = entry(entry_id)
    if e.inverse_a_closed is None or e.inverse_z_closed is None:
        return None
    return ZAPair(z=e.inverse_z_closed(order), a=e.inverse_a_closed(order))


# ---------------------------------------------------------------------------
# Stirling set numbers and the identities tying them to the Gompertz array
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int) -> TriMatrix:
    """Triangle of Stirling set numbers S2(n, k), built from the recurrence
    S2(n, k) = S2(n-1, k-1) + k*S2(n-1, k)."""
    rows: list[list[Fraction]] = [[Fraction(1)]]
    for m in range(1, n + 1):
        prev = rows[-1]
        row = [Fraction(0)] * (m + 1)
        for k in range(m + 1):
            v = Fraction(0)
            if 1 <= k <= m:
                v += prev[k - 1]
            if k <= m - 1:
                v += k * prev[k]
            row[k] = v
        rows.append(row)
    return from_rows(rows)


def _s2(tri: TriMatrix, n: int, k: int) -> Fraction:
    return tri.entry(n, k) if 0 <= k <= n else Fraction(0)


def gompertz_identities(n: int) -> bool:
    """Check, entry-wise and exactly up to row n:

    * the factorization through the moment array and the set-number triangle,
    * the factorization into the two signed set-number arrays,
    * the double-sum expression of each entry in Stirling set numbers,
    * the alternating-sum expression of the first column.
    """
    gom = build_entry("gompertz", n)
    u = 1 - expx_series(n, scale=-1)  # 1 - e^{-x}
    moment_arr = build(_gompertz_g(n), u)
    stirling_arr = build(one(n), expx_series(n) - 1)
    if multiply(moment_arr, stirling_arr) != gom:
        return False
    left = build(expx_series(n, scale=-1), u)
    right = build(expx_series(n), expx_series(n) - 1)
    if multiply(left, right) != gom:
        return False
    tri = stirling2(n + 1)
    for i in range(n + 1):
        for k in range(i + 1):
            total = sum(
                _s2(tri, i + 1, j + 1) * (-1) ** (i - j) * _s2(tri, j + 1, k + 1)
                for j in range(i + 1)
            )
            if total != gom.matrix.entry(i, k):
                return False
        col = sum(_s2(tri, i + 1, j + 1) * (-1) ** (i - j) for j in range(i + 1))
        if col != gom.matrix.entry(i, 0):
            return False
    return True


def gudermann_identities(order: int) -> bool:
    """[sech, gd] = [sech, tanh] . [1, arcsin], and [sech, tanh] is the
    moment array of the family with b_k = 0, lambda_k = -k^2."""
    from .production import production_definitional, tridiagonal_params

    gud = build_entry("gudermann", order)
    moment_arr = build(sech_series(order), tanh_series(order))
    if multiply(moment_arr, build(one(order), arcsin_series(order))) != gud:
        return False
    params = tridiagonal_params(production_definitional(moment_arr))
    if params != JacobiParams(0, -1, 0, -1):
        return False
    return all(params.subdiagonal(k) == -k * k for k in range(order))


def erf_identity(order: int) -> bool:
    """[exp(-x^2), F] = [exp(-x^2), x] . [1, F] for F = int_0^x exp(-t^2) dt,
    and [exp(-x^2), x] is the moment array of the family with
    b_k = 0, lambda_k = -2k."""
    from .production import production_definitional, tridiagonal_params

    erf_arr = build_entry("erf", order)
    hermite_like = build(gauss_series(order), x(order))
    if multiply(hermite_like, build(one(order), erf_integral_series(order))) != erf_arr:
        return False
    params = tridiagonal_params(production_definitional(hermite_like))
    return params == JacobiParams(0, -2, 0, 0)


# ---------------------------------------------------------------------------
# plot-data sampling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SampleGrid:
    """Uniform sampling grid; defaults mirror the usual plotting window."""

    t_min: float = -4.0
    t_max: float = 4.0
    samples: int = 200

    def __post_init__(self) -> None:
        if not self.t_min < self.t_max:
            raise ValueError("t_min must be strictly below t_max")
        if self.samples < 2:
            raise ValueError("need at least two samples")

    def points(self) -> list[float]:
        step = (self.t_max - self.t_min) / (self.samples - 1)
        return [self.t_min + i * step for i in range(self.samples)]


def sample_curve(e: CatalogEntry, grid: SampleGrid) -> list[tuple[float, float, float]]:
    """(t, f(t), f'(t)) rows."""
    return [(t, e.f_eval(t), e.fprime_eval(t)) for t in grid.points()]


def sample_parametric(e: CatalogEntry, grid: SampleGrid) -> list[tuple[float, float]]:
    """(f'(t), f(t)) rows."""
    return [(e.fprime_eval(t), e.f_eval(t)) for t in grid.points()]
