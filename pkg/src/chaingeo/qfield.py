"""Exact arithmetic in the real quadratic field Q(sqrt(n)).

Every value is stored as ``p + q*sqrt(radicand)`` with ``p`` and ``q`` held as
:class:`fractions.Fraction`, so nothing is ever rounded.  Values with
different radicands do not mix.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Union

Rational = Fraction

Scalar = Union[int, Fraction]


class RadicandMismatch(ValueError):
    """Raised when combining values from two different quadratic fields."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a terminating decimal into a Fraction."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if x < 0:
        raise ValueError(f"square root of negative rational {x}")
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _as_fraction(x: Scalar) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


_set = object.__setattr__


@functools.lru_cache(maxsize=None)
def _exact_isqrt(n: int) -> int | None:
    root = math.isqrt(n)
    return root if root * root == n else None


def _check_radicand(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("radicand must be an int")
    if n < 0:
        raise ValueError("radicand must be non-negative")


class QNum:
    """An element ``p + q*sqrt(radicand)`` of Q(sqrt(radicand)).

    Stored as integers ``(num + irr*sqrt(radicand)) / den`` with ``den > 0``
    and ``gcd(num, irr, den) = 1``; ``p`` and ``q`` are exposed as reduced
    Fractions.  Perfect-square radicands are folded at construction, so
    ``QNum(0, 1, 4)`` is stored as ``QNum(2, 0, 4)``.  Instances are immutable.
    """

    __slots__ = ("_num", "_irr", "_den", "radicand")

    def __init__(self, p: Scalar, q: Scalar = 0, radicand: int = 1) -> None:
        _check_radicand(radicand)
        p, q = _as_fraction(p), _as_fraction(q)
        den = p.denominator * q.denominator // math.gcd(p.denominator, q.denominator)
        QNum._fill(
            self,
            p.numerator * (den // p.denominator),
            q.numerator * (den // q.denominator),
            den,
            radicand,
        )

    @staticmethod
    def _fill(obj: QNum, num: int, irr: int, den: int, radicand: int) -> None:
        if irr:
            root = _exact_isqrt(radicand)
            if root is not None:
                num, irr = num + irr * root, 0
        if den < 0:
            num, irr, den = -num, -irr, -den
        g = math.gcd(num, irr, den)
        if g != 1:
            num, irr, den = num // g, irr // g, den // g
        _set(obj, "_num", num)
        _set(obj, "_irr", irr)
        _set(obj, "_den", den)
        _set(obj, "radicand", radicand)

    @classmethod
    def _raw(cls, num: int, irr: int, den: int, radicand: int) -> QNum:
        obj = object.__new__(cls)
        cls._fill(obj, num, irr, den, radicand)
        return obj

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QNum is immutable")

    def __delattr__(self, name: str) -> None:
        raise AttributeError("QNum is immutable")

    def __reduce__(self):
        return (QNum, (self.p, self.q, self.radicand))

    @property
    def p(self) -> Fraction:
        return Fraction(self._num, self._den)

    @property
    def q(self) -> Fraction:
        return Fraction(self._irr, self._den)

    @classmethod
    def sqrt_of(cls, n: int) -> QNum:
        """The generator sqrt(n) of Q(sqrt(n))."""
        _check_radicand(n)
        return cls._raw(0, 1, 1, n)

    def lift(self, x: QNum | Scalar) -> QNum:
        """Bring ``x`` into this value's field (rationals are promoted)."""
        if isinstance(x, QNum):
            if x.radicand != self.radicand:
                raise RadicandMismatch(
                    f"radicand {x.radicand} does not match {self.radicand}"
                )
            return x
        x = _as_fraction(x)
        return QNum._raw(x.numerator, 0, x.denominator, self.radicand)

    def with_radicand(self, n: int) -> QNum:
        """Re-home this value in Q(sqrt(n)); only allowed when it is rational
        or already lives there."""
        if n == self.radicand:
            return self
        if self._irr:
            raise RadicandMismatch(
                f"{self} is irrational in Q(sqrt({self.radicand})); cannot move to Q(sqrt({n}))"
            )
        _check_radicand(n)
        return QNum._raw(self._num, 0, self._den, n)

    @property
    def is_rational(self) -> bool:
        return not self._irr

    def conjugate(self) -> QNum:
        return QNum._raw(self._num, -self._irr, self._den, self.radicand)

    def norm(self) -> Fraction:
        """Field norm ``p^2 - q^2 n``."""
        return Fraction(
            self._num * self._num - self._irr * self._irr * self.radicand,
            self._den * self._den,
        )

    # arithmetic -------------------------------------------------------

    def __add__(self, other: QNum | Scalar) -> QNum:
        try:
            o = self.lift(other)
        except TypeError:
            return NotImplemented
        if self._den == o._den:
            return QNum._raw(self._num + o._num, self._irr + o._irr, self._den, self.radicand)
        return QNum._raw(
            self._num * o._den + o._num * self._den,
            self._irr * o._den + o._irr * self._den,
            self._den * o._den,
            self.radicand,
        )

    __radd__ = __add__

    def __neg__(self) -> QNum:
        return QNum._raw(-self._num, -self._irr, self._den, self.radicand)

    def __pos__(self) -> QNum:
        return self

    def __sub__(self, other: QNum | Scalar) -> QNum:
        try:
            o = self.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> QNum:
        try:
            o = self.lift(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: QNum | Scalar) -> QNum:
        try:
            o = self.lift(other)
        except TypeError:
            return NotImplemented
        n1, i1, n2, i2 = self._num, self._irr, o._num, o._irr
        return QNum._raw(
            n1 * n2 + i1 * i2 * self.radicand,
            n1 * i2 + i1 * n2,
            self._den * o._den,
            self.radicand,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: QNum | Scalar) -> QNum:
        try:
            o = self.lift(other)
        except TypeError:
            return NotImplemented
        # x / ((n2 + i2 r)/d2) = x * d2 (n2 - i2 r) / (n2^2 - i2^2 n)
        n1, i1, n2, i2 = self._num, self._irr, o._num, o._irr
        norm = n2 * n2 - i2 * i2 * self.radicand
        if not norm:
            raise ZeroDivisionError("division by zero in Q(sqrt(n))")
        return QNum._raw(
            (n1 * n2 - i1 * i2 * self.radicand) * o._den,
            (i1 * n2 - n1 * i2) * o._den,
            self._den * norm,
            self.radicand,
        )

    def __rtruediv__(self, other: Scalar) -> QNum:
        try:
            o = self.lift(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> QNum:
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        one = QNum._raw(1, 0, 1, self.radicand)
        if k < 0:
            return one / self ** (-k)
        result, base = one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison -------------------------------------------------------

    def sign(self) -> int:
        return qnum_sign(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QNum):
            return (
                self._num == other._num
                and self._irr == other._irr
                and self._den == other._den
                and self.radicand == other.radicand
            )
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return not self._irr and self.p == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self._irr:
            return hash(self.p)
        return hash((self._num, self._irr, self._den, self.radicand))

    def __lt__(self, other: QNum | Scalar) -> bool:
        return qnum_sign(self - other) < 0

    def __le__(self, other: QNum | Scalar) -> bool:
        return qnum_sign(self - other) <= 0

    def __gt__(self, other: QNum | Scalar) -> bool:
        return qnum_sign(self - other) > 0

    def __ge__(self, other: QNum | Scalar) -> bool:
        return qnum_sign(self - other) >= 0

    def __bool__(self) -> bool:
        return bool(self._num or self._irr)

    def __float__(self) -> float:
        return qnum_to_float(self)

    def sqrt(self) -> QNum | None:
        return qnum_sqrt(self)

    # presentation -----------------------------------------------------

    def __repr__(self) -> str:
        return f"QNum({format_rational(self.p)!r}, {format_rational(self.q)!r}, {self.radicand})"

    def __str__(self) -> str:
        if not self.q:
            return str(self.p)
        if self.q == 1:
            irr = f"√{self.radicand}"
        elif self.q == -1:
            irr = f"-√{self.radicand}"
        else:
            irr = f"{self.q}√{self.radicand}"
        if not self.p:
            return irr
        if irr.startswith("-"):
            return f"{self.p} - {irr[1:]}"
        return f"{self.p} + {irr}"

    def to_json(self) -> dict:
        return {
            "p": format_rational(self.p),
            "q": format_rational(self.q),
            "radicand": self.radicand,
            "decimal": float(f"{qnum_to_float(self):.15g}"),
        }

    @classmethod
    def from_json(cls, data: dict) -> QNum:
        return cls(
            parse_rational(data["p"]), parse_rational(data["q"]), int(data["radicand"])
        )


def as_qnum(x: QNum | Scalar | str, radicand: int = 1) -> QNum:
    """Coerce ints, Fractions and ``"p/q"`` strings to a QNum in Q(sqrt(radicand))."""
    if isinstance(x, QNum):
        return x.with_radicand(radicand)
    if isinstance(x, str):
        x = parse_rational(x)
    return QNum(_as_fraction(x), Fraction(0), radicand)


def qnum_arith(op: str, x: QNum, y: QNum) -> QNum:
    """Dispatch ``add``/``sub``/``mul``/``div`` on two QNums of one field."""
    if x.radicand != y.radicand:
        raise RadicandMismatch(f"radicand {x.radicand} does not match {y.radicand}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def _sign(x: int | Fraction) -> int:
    return (x > 0) - (x < 0)


def qnum_sign(x: QNum) -> int:
    """Exact sign of ``p + q*sqrt(n)`` without evaluating the root."""
    sp, sq = _sign(x._num), _sign(x._irr)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: the larger magnitude wins; a tie would make n a square,
    # which canonical form rules out
    diff = x._num * x._num - x._irr * x._irr * x.radicand
    return sp if diff > 0 else sq


def qnum_sqrt(x: QNum) -> QNum | None:
    """Non-negative square root of ``x`` inside Q(sqrt(n)), or None.

    Writing the root as ``u + v*sqrt(n)`` gives ``u^2 + n v^2 = p`` and
    ``2uv = q``.  For ``q != 0`` eliminating ``v`` leaves the biquadratic
    ``4u^4 - 4p u^2 + n q^2 = 0``, whose rational solutions are the only
    candidates.
    """
    s = qnum_sign(x)
    if s < 0:
        raise ValueError(f"square root of negative value {x}")
    if s == 0:
        return QNum(0, 0, x.radicand)
    n = x.radicand
    candidates: list[QNum] = []
    if not x.q:
        u = rational_sqrt(x.p)
        if u is not None:
            candidates.append(QNum(u, 0, n))
        elif n:
            v = rational_sqrt(x.p / n)
            if v is not None:
                candidates.append(QNum(0, v, n))
    else:
        disc = rational_sqrt(x.norm()) if x.norm() >= 0 else None
        if disc is not None:
            for u2 in ((x.p + disc) / 2, (x.p - disc) / 2):
                if u2 <= 0:
                    continue
                u = rational_sqrt(u2)
                if u is None:
                    continue
                candidates.append(QNum(u, x.q / (2 * u), n))
    for y in candidates:
        if y * y == x:
            return y if qnum_sign(y) >= 0 else -y
    return None


def qnum_to_float(x: QNum) -> float:
    """Double-precision value of ``x``.

    Opposite-signed parts are evaluated through the conjugate,
    ``(p^2 - q^2 n) / (p - q sqrt(n))``, so cancellation never costs accuracy.
    """
    num, irr, den = x._num, x._irr, x._den
    if not irr:
        return num / den
    root = math.sqrt(x.radicand)
    if not num or (num > 0) == (irr > 0):
        return num / den + (irr / den) * root
    norm = (num * num - irr * irr * x.radicand) / (den * den)
    return norm / (num / den - (irr / den) * root)
