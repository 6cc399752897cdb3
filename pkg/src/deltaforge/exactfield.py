"""Exact scalar arithmetic and exact dense linear algebra.

Two scalar fields are supported: the rationals Q (as ``fractions.Fraction``)
and the rational-function field Q(d) in one formal parameter d (class
``RationalFunction``).  Polynomials in d are plain tuples of Fractions,
lowest degree first, with no trailing zero (the zero polynomial is the
empty tuple).  Everything here is immutable and pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Frac = Fraction

__all__ = [
    "Frac",
    "FieldMismatch",
    "RationalFunction",
    "DELTA",
    "Field",
    "QQ",
    "QDELTA",
    "Matrix",
    "RrefResult",
    "rref",
    "kernel",
    "span_membership",
    "rational_roots",
    "denominator_roots",
    "charpoly",
    "poly_add",
    "poly_mul",
    "poly_gcd",
    "poly_eval",
    "parse_rational",
    "format_rational",
]


class FieldMismatch(TypeError):
    """Raised when values from different scalar fields are mixed."""


# ---------------------------------------------------------------------------
# polynomials in d over Q: tuple[Fraction, ...], lowest degree first
# ---------------------------------------------------------------------------

Poly = tuple  # tuple of Fraction


def poly_trim(coeffs: Iterable[Frac]) -> Poly:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_const(c) -> Poly:
    c = Frac(c)
    return (c,) if c else ()


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Frac(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return poly_trim(out)


def poly_scale(a: Poly, c: Frac) -> Poly:
    if not c:
        return ()
    return tuple(x * c for x in a)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Frac(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] * inv_lead
        if c:
            quo[shift] = c
            for i, bc in enumerate(b):
                rem[shift + i] -= c * bc
    return poly_trim(quo), poly_trim(rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return ()
    return poly_scale(a, 1 / a[-1])


def poly_eval(a: Poly, x: Frac) -> Frac:
    acc = Frac(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_monic(a: Poly) -> Poly:
    return a if not a else poly_scale(a, 1 / a[-1])


def _poly_primitive_int(a: Poly) -> list[int]:
    """Scale a nonzero rational polynomial to a primitive integer one."""
    den = math.lcm(*(c.denominator for c in a))
    ints = [int(c * den) for c in a]
    g = math.gcd(*ints)
    return [c // g for c in ints]


def rational_roots(a: Poly) -> tuple[tuple[Frac, ...], int]:
    """All distinct rational roots of a, plus the degree left after deflation.

    The residual degree counts remaining nonrational (or complex) roots
    with multiplicity.
    """
    if not a:
        raise ValueError("zero polynomial has every root")
    roots = []
    while len(a) > 1 and a[0] == 0:
        if Frac(0) not in roots:
            roots.append(Frac(0))
        a = a[1:]
    if len(a) > 1:
        ints = _poly_primitive_int(a)
        lead, const = ints[-1], ints[0]
        candidates = set()
        for p in _divisors(abs(const)):
            for q in _divisors(abs(lead)):
                candidates.add(Frac(p, q))
                candidates.add(Frac(-p, q))
        for cand in sorted(candidates):
            while len(a) > 1 and poly_eval(a, cand) == 0:
                if cand not in roots:
                    roots.append(cand)
                a = poly_divmod(a, (-cand, Frac(1)))[0]
    return tuple(sorted(roots)), len(a) - 1


def _divisors(n: int) -> list[int]:
    if n == 0:
        return []
    out = []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.append(d)
            out.append(n // d)
    return sorted(set(out))


# ---------------------------------------------------------------------------
# the field Q(d)
# ---------------------------------------------------------------------------


class RationalFunction:
    """Normalized quotient of polynomials in the parameter d.

    Invariants: den != 0, gcd(num, den) = 1 over Q, den monic.  Equal
    fractions therefore have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Frac(1),)):
        num = poly_trim(num) if isinstance(num, (tuple, list)) else poly_const(num)
        den = poly_trim(den) if isinstance(den, (tuple, list)) else poly_const(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = (Frac(1),)
        elif len(den) == 1:
            num = poly_scale(num, 1 / den[0])
            den = (Frac(1),)
        else:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = poly_scale(num, 1 / lead)
                den = poly_scale(den, 1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RationalFunction is immutable")

    # -- helpers ------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Frac)):
            return RationalFunction(poly_const(value))
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Frac:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num[0] if self.num else Frac(0)

    def eval(self, x: Frac) -> Frac:
        d = poly_eval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at d = {x}")
        return poly_eval(self.num, x) / d

    def denominator_root_list(self) -> tuple[Frac, ...]:
        if len(self.den) == 1:
            return ()
        return rational_roots(self.den)[0]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
        return RationalFunction(num, poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(poly_neg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(poly_mul(self.num, other.den), poly_mul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction((Frac(1),)) / self ** (-n)
        out = RationalFunction((Frac(1),))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Frac)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        num = _poly_str(self.num)
        if len(self.den) == 1:
            return num
        return f"({num})/({_poly_str(self.den)})"


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*d" if c != 1 else "d")
        else:
            parts.append(f"{c}*d^{i}" if c != 1 else f"d^{i}")
    return " + ".join(parts)


DELTA = RationalFunction((Frac(0), Frac(1)))


# ---------------------------------------------------------------------------
# field tags
# ---------------------------------------------------------------------------


class Field:
    """Scalar field tag: Q or Q(d)."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        object.__setattr__(self, "name", name)

    def __setattr__(self, *args):
        raise AttributeError("Field is immutable")

    def __repr__(self):
        return self.name

    @property
    def zero(self):
        return Frac(0) if self is QQ else RationalFunction(())

    @property
    def one(self):
        return Frac(1) if self is QQ else RationalFunction(1)

    def coerce(self, value):
        """Promote a constant into this field; reject cross-field values."""
        if self is QQ:
            if isinstance(value, RationalFunction):
                if value.is_constant():
                    return value.constant_value()
                raise FieldMismatch(f"{value!r} is not a rational")
            return Frac(value)
        if isinstance(value, RationalFunction):
            return value
        return RationalFunction(poly_const(value))

    def is_zero(self, value) -> bool:
        return value == 0 if self is QQ else value.is_zero()


QQ = Field("Q")
QDELTA = Field("Q(d)")


def field_of(value) -> Field:
    return QDELTA if isinstance(value, RationalFunction) else QQ


def common_field(values: Iterable) -> Field:
    for v in values:
        if isinstance(v, RationalFunction) and not v.is_constant():
            return QDELTA
    return QQ


# ---------------------------------------------------------------------------
# exact matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix; every entry lives in ``field``."""

    field: Field
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(self.field.coerce(x) for x in row) for row in self.rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return Matrix(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return Matrix(field, tuple(tuple(z for _ in range(ncols)) for _ in range(nrows)))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else ())

    def stack(self, other: "Matrix") -> "Matrix":
        if other.nrows and self.nrows and other.ncols != self.ncols:
            raise ValueError("width mismatch")
        if self.field is not other.field:
            raise FieldMismatch("cannot stack matrices over different fields")
        return Matrix(self.field, self.rows + other.rows)

    def matvec(self, v: Sequence) -> tuple:
        v = tuple(self.field.coerce(x) for x in v)
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum((row[j] * v[j] for j in range(self.ncols)), self.field.zero) for row in self.rows)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.field is not other.field:
            raise FieldMismatch("cannot multiply matrices over different fields")
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = other.transpose().rows
        return Matrix(
            self.field,
            tuple(
                tuple(sum((row[k] * col[k] for k in range(self.ncols)), self.field.zero) for col in cols)
                for row in self.rows
            ),
        )

    def eval_at(self, x: Frac) -> "Matrix":
        """Specialize a Q(d) matrix at a rational parameter value."""
        if self.field is QQ:
            return self
        return Matrix(QQ, tuple(tuple(e.eval(x) for e in row) for row in self.rows))

    def __iter__(self):
        return iter(self.rows)


@dataclass(frozen=True)
class RrefResult:
    reduced: Matrix
    rank: int
    pivot_cols: tuple


def _check_single_field(m: Matrix):
    if m.field is QQ:
        for row in m.rows:
            for e in row:
                if isinstance(e, RationalFunction):
                    raise FieldMismatch("Q matrix contains Q(d) entries")


def rref(m: Matrix, col_order: Optional[Sequence[int]] = None) -> RrefResult:
    """Reduced row-echelon form with exact arithmetic.

    ``col_order`` optionally gives the order in which pivot columns are
    searched; the reduced matrix keeps the original column layout either
    way.  Pivot choice is by first nonzero entry in that order, so the
    result is canonical for a fixed order.
    """
    _check_single_field(m)
    field = m.field
    zero_of = field.is_zero
    rows = [list(r) for r in m.rows]
    ncols = m.ncols
    order = list(col_order) if col_order is not None else list(range(ncols))
    pivots = []
    r = 0
    for c in order:
        pivot_row = None
        for i in range(r, len(rows)):
            if not zero_of(rows[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not zero_of(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return RrefResult(Matrix(field, tuple(tuple(row) for row in rows)), len(pivots), tuple(pivots))


def kernel(m: Matrix) -> list[tuple]:
    """Exact basis of the right null space {v : m v = 0}."""
    res = rref(m)
    field = m.field
    ncols = m.ncols
    pivot_set = set(res.pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in enumerate(res.pivot_cols):
            v[pc] = -res.reduced.rows[r][fc]
        basis.append(tuple(v))
    return basis


class NotInSpan:
    """Sentinel result of a failed span-membership query."""

    def __repr__(self):
        return "NotInSpan"


NOT_IN_SPAN = NotInSpan()


def span_membership(span_rows: Matrix, v: Sequence) -> Union[tuple, NotInSpan]:
    """Express v as an exact combination of the given rows, if possible.

    Returns coefficients c with sum(c_i * row_i) == v, or NOT_IN_SPAN.
    Free coefficients are set to zero, so the answer is canonical.
    """
    field = span_rows.field
    v = tuple(field.coerce(x) for x in v)
    if span_rows.nrows == 0:
        return () if all(field.is_zero(x) for x in v) else NOT_IN_SPAN
    if len(v) != span_rows.ncols:
        raise ValueError("dimension mismatch")
    # columns are the span rows; solve for the combination exactly
    system = Matrix(field, tuple(row + (val,) for row, val in zip(span_rows.transpose().rows, v)))
    res = rref(system)
    n = span_rows.nrows
    coeffs = [field.zero] * n
    for r, pc in enumerate(res.pivot_cols):
        if pc == n:
            return NOT_IN_SPAN
        coeffs[pc] = res.reduced.rows[r][n]
    return tuple(coeffs)


def denominator_roots(x: RationalFunction) -> list[Frac]:
    """Rational roots of the denominator of x in Q(d)."""
    return list(x.denominator_root_list())


def charpoly(m: Matrix) -> Poly:
    """Characteristic polynomial det(tI - m) over Q, ascending coefficients."""
    if m.field is not QQ:
        raise FieldMismatch("characteristic polynomial over Q only")
    _check_single_field(m)
    n = m.nrows
    if n != m.ncols:
        raise ValueError("square matrix required")
    # Faddeev-LeVerrier
    coeffs = [Frac(0)] * (n + 1)
    coeffs[n] = Frac(1)
    M = Matrix.identity(QQ, n)
    for k in range(1, n + 1):
        AM = m.matmul(M)
        trace = sum((AM.rows[i][i] for i in range(n)), Frac(0))
        c = -trace / k
        coeffs[n - k] = c
        M = Matrix(QQ, tuple(tuple(AM.rows[i][j] + (c if i == j else 0) for j in range(n)) for i in range(n)))
    return poly_trim(coeffs)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def parse_rational(text: str) -> Frac:
    """Parse 'p/q' or 'p'."""
    return Frac(text.strip())


def format_rational(x: Frac) -> str:
    return str(x)


def parse_rational_function(obj) -> RationalFunction:
    """Parse {'num': [...], 'den': [...]} with rational strings, lowest degree first."""
    num = tuple(parse_rational(c) for c in obj["num"])
    den = tuple(parse_rational(c) for c in obj.get("den", ["1"]))
    return RationalFunction(poly_trim(num), poly_trim(den))


def format_rational_function(x: RationalFunction) -> dict:
    return {
        "num": [format_rational(c) for c in x.num],
        "den": [format_rational(c) for c in x.den],
    }
