"""Exact construction and auditing of the CB(n) and CA(n) chain figures.

CB(n): two radius-``a`` circles touching each other and the baseline, with a
chain of ``n`` congruent circles on the baseline bridging the gap between
them.  CA(n): one radius-``a`` circle resting on the baseline and touching the
two end circles of an ``n``-circle chain from above.

Both figures are placed in a canonical frame: the baseline is ``y = 0`` and
the picture is mirror-symmetric about ``x = 0``.  ``C`` is where the first
chain circle meets the (left) outer circle, ``B`` where the last one meets the
(right) outer circle, and ``A`` is the foot of ``B`` on the baseline.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .geom import (
    Circle,
    Point,
    Tangency,
    dist2,
    foot_on_baseline,
    internal_division,
    tangency_kind,
    touches_baseline,
)
from .qfield import QNum, as_qnum, qnum_sign, qnum_sqrt

Length = Union[QNum, int, Fraction, str]


class Kind(str, enum.Enum):
    CB = "CB"
    CA = "CA"


@dataclass(frozen=True)
class ChainConfig:
    kind: Kind
    n: int
    a: QNum
    b: QNum
    outer: tuple[Circle, ...]
    chain: tuple[Circle, ...]
    A: Point
    B: Point
    C: Point
    d: QNum
    bc: QNum

    @property
    def radicand(self) -> int:
        return self.a.radicand

    @property
    def circles(self) -> tuple[Circle, ...]:
        return self.outer + self.chain

    def to_json(self, with_report: bool = True) -> dict:
        data = {
            "kind": self.kind.value,
            "n": self.n,
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "outer": [c.to_json() for c in self.outer],
            "chain": [c.to_json() for c in self.chain],
            "points": {
                "A": self.A.to_json(),
                "B": self.B.to_json(),
                "C": self.C.to_json(),
            },
            "d": self.d.to_json(),
            "bc": self.bc.to_json(),
        }
        if with_report:
            data["report"] = verify_config(self).to_json()
        return data

    @classmethod
    def from_json(cls, data: dict) -> ChainConfig:
        pts = data["points"]
        return cls(
            kind=Kind(data["kind"]),
            n=int(data["n"]),
            a=QNum.from_json(data["a"]),
            b=QNum.from_json(data["b"]),
            outer=tuple(Circle.from_json(c) for c in data["outer"]),
            chain=tuple(Circle.from_json(c) for c in data["chain"]),
            A=Point.from_json(pts["A"]),
            B=Point.from_json(pts["B"]),
            C=Point.from_json(pts["C"]),
            d=QNum.from_json(data["d"]),
            bc=QNum.from_json(data["bc"]),
        )


@dataclass(frozen=True)
class SquareResult:
    side: QNum
    A: Point
    B: Point
    C: Point
    D: Point

    def to_json(self) -> dict:
        return {
            "side": self.side.to_json(),
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "C": self.C.to_json(),
            "D": self.D.to_json(),
        }


@dataclass
class VerificationReport:
    entries: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(ok for _, ok in self.entries)

    def failures(self) -> list[str]:
        return [name for name, ok in self.entries if not ok]

    def to_json(self) -> dict:
        return {
            "entries": [{"name": name, "holds": ok} for name, ok in self.entries],
            "overall": self.overall,
        }


class ConstructionError(ArithmeticError):
    """A freshly built configuration failed its own exact audit."""


def _check_n(n: int, minimum: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"n must be at least {minimum}, got {n}")


def _positive(a: Length, radicand: int | None = None) -> QNum:
    if isinstance(a, QNum) and radicand is None:
        x = a
    else:
        x = as_qnum(a, 1 if radicand is None else radicand)
    if qnum_sign(x) <= 0:
        raise ValueError(f"length must be positive, got {x}")
    return x


def chain_radius_cb(n: int, a: Length) -> QNum:
    """Radius of the n congruent circles bridging the two radius-``a`` circles.

    ``a = (sqrt(n) + 1)^2 b``, solved for ``b`` in Q(sqrt(n)).
    """
    _check_n(n, 1)
    a = _positive(a, n)
    return a / (QNum.sqrt_of(n) + 1) ** 2


def chain_radius_ca(n: int, a: Length) -> QNum:
    """Radius of the chain circles under a single radius-``a`` circle: ``4a/(n-1)^2``."""
    _check_n(n, 2)
    a = _positive(a, n)
    return a * Fraction(4, (n - 1) ** 2)


def _chain(n: int, b: QNum) -> tuple[Circle, ...]:
    return tuple(Circle(Point(b * (2 * i - 1 - n), b), b) for i in range(1, n + 1))


def assemble(kind: Kind, n: int, a: Length, b: Length) -> ChainConfig:
    """Lay out a figure for any chain radius ``b`` without checking it.

    Used by the builders and for auditing deliberately perturbed figures.
    """
    _check_n(n, 1)
    a, b = _positive(a, n), _positive(b, n)
    if kind is Kind.CB:
        outer = (Circle(Point(-a, a), a), Circle(Point(a, a), a))
    else:
        outer = (Circle(Point(a * 0, a), a),)
    chain = _chain(n, b)
    C = internal_division(outer[0], chain[0])
    B = internal_division(outer[-1], chain[-1])
    return ChainConfig(
        kind=kind,
        n=n,
        a=a,
        b=b,
        outer=outer,
        chain=chain,
        A=foot_on_baseline(B),
        B=B,
        C=C,
        d=B.y,
        bc=B.x * 2,
    )


def _enforce(cfg: ChainConfig) -> ChainConfig:
    report = verify_config(cfg)
    if not report.overall:
        raise ConstructionError(
            f"{cfg.kind.value}({cfg.n}) failed: {', '.join(report.failures())}"
        )
    return cfg


def build_cb(n: int, a: Length) -> ChainConfig:
    b = chain_radius_cb(n, a)
    return _enforce(assemble(Kind.CB, n, a, b))


def build_ca(n: int, a: Length) -> ChainConfig:
    b = chain_radius_ca(n, a)
    return _enforce(assemble(Kind.CA, n, a, b))


def incircle_delta(a: Length) -> Circle:
    """Incircle of the curvilinear triangle between the two radius-``a`` circles
    and the baseline: radius ``a/4``, centred on the axis of symmetry."""
    a = _positive(a)
    r = a / 4
    return Circle(Point(a * 0, r), r)


def square_in_delta(a: Length) -> SquareResult:
    """The square standing on the baseline with its upper corners on the two
    radius-``a`` circles.

    ``B = (s/2, s)`` on the right circle gives ``(5/4)s^2 - 3as + a^2 = 0``
    with roots ``2a/5`` and ``2a``; only the root below ``a`` fits between
    the circles.
    """
    a = _positive(a)
    qa, qb, qc = Fraction(5, 4), a * -3, a * a
    disc = qb * qb - qc * (4 * qa)
    root = qnum_sqrt(disc)
    if root is None:
        raise ArithmeticError(f"discriminant {disc} has no exact square root")
    candidates = [(-qb + root) / (2 * qa), (-qb - root) / (2 * qa)]
    inside = [s for s in candidates if qnum_sign(s) > 0 and s < a]
    if len(inside) != 1:
        raise ArithmeticError(f"expected one admissible side, got {inside}")
    s = inside[0]
    half = s / 2
    zero = s * 0
    sq = SquareResult(
        side=s,
        A=Point(half, zero),
        B=Point(half, s),
        C=Point(-half, s),
        D=Point(-half, zero),
    )
    right = Circle(Point(a, a), a)
    left = Circle(Point(-a, a), a)
    if not (right.contains_on_boundary(sq.B) and left.contains_on_boundary(sq.C)):
        raise ArithmeticError("square corners are not on the circles")
    return sq


def minus_sign_root(n: int, a: Length) -> QNum:
    """The discarded candidate ``2a / (1 + (1 - sqrt(n))^2)`` for ``|AB|`` in CB(n)."""
    _check_n(n, 1)
    a = _positive(a, n)
    return a * 2 / (1 + (1 - QNum.sqrt_of(n)) ** 2)


# auditing ------------------------------------------------------------


def _holds(check: Callable[[], bool]) -> bool:
    try:
        return bool(check())
    except (ArithmeticError, ValueError):
        return False


def _tangent_at(c1: Circle, c2: Circle, p: Point) -> bool:
    return (
        tangency_kind(c1, c2) is Tangency.EXTERNAL
        and c1.contains_on_boundary(p)
        and c2.contains_on_boundary(p)
    )


def _mirrored(c1: Circle, c2: Circle) -> bool:
    return c1.r == c2.r and c1.center.y == c2.center.y and c1.center.x == -c2.center.x


def verify_config(cfg: ChainConfig) -> VerificationReport:
    """Evaluate every tangency, measurement and theorem identity exactly.

    Failures are recorded, never raised.
    """
    a, b, d, n = cfg.a, cfg.b, cfg.d, cfg.n
    h = cfg.bc / 2
    cb = cfg.kind is Kind.CB
    outer, chain = cfg.outer, cfg.chain
    checks: list[tuple[str, Callable[[], bool]]] = [
        ("outer circles touch baseline", lambda: all(map(touches_baseline, outer))),
        ("chain circles touch baseline", lambda: all(map(touches_baseline, chain))),
    ]
    if cb:
        checks.append(
            (
                "alpha1, alpha2 externally tangent",
                lambda: tangency_kind(outer[0], outer[1]) is Tangency.EXTERNAL,
            )
        )
    first, last = ("alpha1", "alpha2") if cb else ("alpha", "alpha")
    checks += [
        (
            "chain circles consecutively tangent",
            lambda: len(chain) == n
            and all(
                tangency_kind(c1, c2) is Tangency.EXTERNAL
                for c1, c2 in zip(chain, chain[1:])
            ),
        ),
        (f"beta1 touches {first} at C", lambda: _tangent_at(outer[0], chain[0], cfg.C)),
        (f"betan touches {last} at B", lambda: _tangent_at(outer[-1], chain[-1], cfg.B)),
        (
            "A is the foot of B and d = |AB|",
            lambda: cfg.A == foot_on_baseline(cfg.B) and d == cfg.B.y,
        ),
        (
            "|BC| = 2 B.x = |B - C|",
            lambda: cfg.bc == cfg.B.x * 2 and cfg.bc * cfg.bc == dist2(cfg.B, cfg.C),
        ),
        (
            "mirror symmetry about x = 0",
            lambda: cfg.C.x == -cfg.B.x
            and cfg.C.y == cfg.B.y
            and all(_mirrored(c1, c2) for c1, c2 in zip(chain, reversed(chain)))
            and all(_mirrored(c1, c2) for c1, c2 in zip(outer, reversed(outer))),
        ),
        ("(d - b)/b = (a - b)/(a + b)", lambda: (d - b) / b == (a - b) / (a + b)),
    ]
    if cb:
        root = QNum.sqrt_of(n)
        checks += [
            ("(a - h)^2 + (a - d)^2 = a^2", lambda: (a - h) ** 2 + (a - d) ** 2 == a * a),
            ("h = a - sqrt((2a - d)d)", lambda: qnum_sqrt((a * 2 - d) * d) == a - h),
            ("n|AB| = |BC|", lambda: d * n == cfg.bc),
            (
                "2a = ((sqrt(n) + 1)^2 + 1)|AB|",
                lambda: a * 2 == ((root + 1) ** 2 + 1) * d,
            ),
        ]
    else:
        checks += [
            ("h^2 + (a - d)^2 = a^2", lambda: h * h + (a - d) ** 2 == a * a),
            ("h = sqrt((2a - d)d)", lambda: qnum_sqrt((a * 2 - d) * d) == h),
            ("(n - 1)|AB| = |BC|", lambda: d * (n - 1) == cfg.bc),
            (
                "2a = ((n - 1)^2 + 4)|AB|/4",
                lambda: a * 2 == d * Fraction((n - 1) ** 2 + 4, 4),
            ),
        ]
    return VerificationReport([(name, _holds(check)) for name, check in checks])
