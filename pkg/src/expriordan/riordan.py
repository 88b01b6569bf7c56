"""Exponential Riordan arrays and exact triangular matrix algebra.

The array ``[g, f]`` built from series g (g(0)=1) and f (f(0)=0, f'(0)=1)
has entries ``t[n][k] = (n!/k!) [x^n] g(x) f(x)^k``.  Arrays carry both the
generating pair and the realized matrix; the group law is computed on the
series side and the matrix side gives an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .series import Series, format_rational, one, x

__all__ = [
    "TriMatrix",
    "ExpRiordan",
    "PolynomialFamily",
    "identity_matrix",
    "from_rows",
    "mat_mul",
    "mat_inverse",
    "shift_apply",
    "build",
    "identity_array",
    "multiply",
    "inverse",
    "row_polynomials",
    "is_derivative_subgroup",
    "is_checkerboard",
    "matrix_to_json",
    "matrix_from_json",
    "format_polynomial",
]


@dataclass(frozen=True, eq=False)
class TriMatrix:
    """Dense square matrix of rationals, zero above the first superdiagonal.

    Covers both lower-triangular matrices (arrays, coefficient triangles)
    and lower-Hessenberg ones (production matrices).
    """

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        dim = len(rows)
        if dim == 0 or any(len(row) != dim for row in rows):
            raise ValueError("matrix must be square and non-empty")
        for i, row in enumerate(rows):
            if any(v != 0 for v in row[i + 2 :]):
                raise ValueError(f"row {i} has entries above the superdiagonal")
        object.__setattr__(self, "rows", rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.rows[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def leading(self, k: int) -> "TriMatrix":
        """The leading k-by-k block."""
        if not 1 <= k <= self.dim:
            raise ValueError(f"block size {k} out of range for dim {self.dim}")
        return TriMatrix(tuple(row[:k] for row in self.rows[:k]))

    def is_lower_triangular(self) -> bool:
        return all(self.rows[i][i + 1] == 0 for i in range(self.dim - 1))

    def is_unit_diagonal(self) -> bool:
        return all(self.rows[i][i] == 1 for i in range(self.dim))

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def render_text(self) -> str:
        cells = [[format_rational(v) for v in row] for row in self.rows]
        widths = [max(len(cells[i][j]) for i in range(self.dim)) for j in range(self.dim)]
        return "\n".join(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
        )

    def __repr__(self) -> str:
        return f"TriMatrix(dim={self.dim})"


def from_rows(rows: Sequence[Sequence[object]]) -> TriMatrix:
    """Build from ragged lower-triangle rows (short rows are zero-padded)."""
    dim = len(rows)
    full = []
    for row in rows:
        padded = [Fraction(v) for v in row] + [Fraction(0)] * (dim - len(row))
        full.append(tuple(padded))
    return TriMatrix(tuple(full))


def identity_matrix(dim: int) -> TriMatrix:
    return TriMatrix(
        tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim)
        )
    )


def mat_mul(a: TriMatrix, b: TriMatrix) -> TriMatrix:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} != {b.dim}")
    dim = a.dim
    rows = []
    for i in range(dim):
        arow = a.rows[i]
        out = [Fraction(0)] * dim
        for k in range(dim):
            aik = arow[k]
            if aik:
                brow = b.rows[k]
                for j in range(min(k + 2, dim)):
                    if brow[j]:
                        out[j] += aik * brow[j]
        rows.append(tuple(out))
    return TriMatrix(tuple(rows))


def mat_inverse(a: TriMatrix) -> TriMatrix:
    """Exact inverse of a lower-triangular matrix with nonzero diagonal."""
    if not a.is_lower_triangular():
        raise ValueError("inverse requires a lower-triangular matrix")
    dim = a.dim
    if any(a.rows[i][i] == 0 for i in range(dim)):
        raise ValueError("matrix has a zero diagonal entry")
    inv = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        inv[i][i] = 1 / a.rows[i][i]
        for j in range(i - 1, -1, -1):
            s = Fraction(0)
            for k in range(j, i):
                if a.rows[i][k] and inv[k][j]:
                    s += a.rows[i][k] * inv[k][j]
            inv[i][j] = -s / a.rows[i][i]
    return TriMatrix(tuple(tuple(row) for row in inv))


def shift_apply(a: TriMatrix) -> TriMatrix:
    """Drop the first row and shift the rest up; the last row becomes zero.

    This realizes left-multiplication by the shift matrix U (ones on the
    superdiagonal), so the result is lower-Hessenberg.
    """
    dim = a.dim
    zero_row = tuple(Fraction(0) for _ in range(dim))
    return TriMatrix(tuple(a.rows[1:]) + (zero_row,))


# ---------------------------------------------------------------------------
# exponential Riordan arrays
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ExpRiordan:
    """An exponential Riordan array: the pair (g, f) plus its matrix."""

    g: Series
    f: Series
    matrix: TriMatrix

    @property
    def order(self) -> int:
        return self.g.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExpRiordan):
            return NotImplemented
        return (
            self.order == other.order and self.g == other.g and self.f == other.f
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ExpRiordan(order={self.order})"


def build(g: Series, f: Series) -> ExpRiordan:
    """Realize [g, f]; requires g(0)=1, f(0)=0, f'(0)=1 and equal orders."""
    if g.order != f.order:
        raise ValueError(f"order mismatch: {g.order} != {f.order}")
    if g[0] != 1:
        raise ValueError("g must have constant term 1")
    if f[0] != 0:
        raise ValueError("f must have constant term 0")
    if f.order < 1 or f[1] != 1:
        raise ValueError("f must have linear coefficient 1")
    n = g.order
    facts = [factorial(i) for i in range(n + 1)]
    cols: list[tuple[Fraction, ...]] = []
    p = g
    for _k in range(n + 1):
        cols.append(p.coeffs)
        p = p * f
    rows = tuple(
        tuple(
            Fraction(facts[i], facts[k]) * cols[k][i] if k <= i else Fraction(0)
            for k in range(n + 1)
        )
        for i in range(n + 1)
    )
    return ExpRiordan(g=g, f=f, matrix=TriMatrix(rows))


def identity_array(order: int) -> ExpRiordan:
    return build(one(order), x(order))


def multiply(a: ExpRiordan, b: ExpRiordan) -> ExpRiordan:
    """Group law: [g, f] . [u, v] = [g * u(f), v(f)]."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    return build(a.g * b.g.compose(a.f), b.f.compose(a.f))


def inverse(a: ExpRiordan) -> ExpRiordan:
    """Group inverse: [1/g(fbar), fbar] with fbar the compositional inverse."""
    fbar = a.f.revert()
    return build(1 / a.g.compose(fbar), fbar)


def is_derivative_subgroup(a: ExpRiordan) -> bool:
    """True when g equals f' exactly to order N-1."""
    return a.f.derive() == a.g


def is_checkerboard(a: ExpRiordan) -> bool:
    """True when g is even and f is odd to order N."""
    return a.g.is_even() and a.f.is_odd()


@dataclass(frozen=True)
class PolynomialFamily:
    """Coefficient rows of the polynomials p_n(x) = sum_k c[n][k] x^k."""

    polys: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> tuple[Fraction, ...]:
        return self.polys[n]

    def format(self, n: int) -> str:
        return format_polynomial(self.polys[n])


def row_polynomials(a: ExpRiordan) -> PolynomialFamily:
    """The polynomials obtained by applying the array to (1, x, x^2, ...)^T."""
    return PolynomialFamily(
        tuple(tuple(a.matrix.rows[n][: n + 1]) for n in range(a.matrix.dim))
    )


def format_polynomial(coeffs: Sequence[Fraction]) -> str:
    """Render ascending coefficients as a descending-power polynomial in x."""
    terms: list[tuple[Fraction, int]] = [
        (c, k) for k, c in enumerate(coeffs) if c != 0
    ]
    if not terms:
        return "0"
    parts: list[str] = []
    for c, k in reversed(terms):
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            xs = "x" if k == 1 else f"x^{k}"
            if mag == 1:
                body = xs
            elif mag.denominator == 1:
                body = f"{mag}{xs}"
            else:
                body = f"({format_rational(mag)}){xs}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def matrix_to_json(m: TriMatrix, name: str = "matrix") -> dict:
    """JSON-ready form: {name, order, rows} with rationals as strings."""
    return {
        "name": name,
        "order": m.dim - 1,
        "rows": [[format_rational(v) for v in row] for row in m.rows],
    }


def matrix_from_json(obj: dict) -> tuple[str, TriMatrix]:
    rows = tuple(tuple(Fraction(v) for v in row) for row in obj["rows"])
    m = TriMatrix(rows)
    if m.dim - 1 != obj["order"]:
        raise ValueError("order field disagrees with row count")
    return obj.get("name", "matrix"), m
