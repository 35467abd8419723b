"""Points and circles with exact coordinates above the baseline ``y = 0``."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .qfield import QNum, RadicandMismatch, qnum_sign


class Tangency(str, enum.Enum):
    EXTERNAL = "external"
    INTERNAL = "internal"
    NONE = "none"


@dataclass(frozen=True)
class Point:
    x: QNum
    y: QNum

    def __post_init__(self) -> None:
        if self.x.radicand != self.y.radicand:
            raise RadicandMismatch("point coordinates live in different fields")

    @property
    def radicand(self) -> int:
        return self.x.radicand

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k: QNum | int) -> Point:
        return Point(self.x * k, self.y * k)

    def norm2(self) -> QNum:
        return self.x * self.x + self.y * self.y

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> Point:
        return cls(QNum.from_json(data["x"]), QNum.from_json(data["y"]))


@dataclass(frozen=True)
class Circle:
    center: Point
    r: QNum

    def __post_init__(self) -> None:
        if self.r.radicand != self.center.radicand:
            raise RadicandMismatch("radius and center live in different fields")
        if qnum_sign(self.r) <= 0:
            raise ValueError(f"circle radius must be positive, got {self.r}")

    def contains_on_boundary(self, p: Point) -> bool:
        return dist2(self.center, p) == self.r * self.r

    def to_json(self) -> dict:
        return {
            "cx": self.center.x.to_json(),
            "cy": self.center.y.to_json(),
            "r": self.r.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> Circle:
        return cls(
            Point(QNum.from_json(data["cx"]), QNum.from_json(data["cy"])),
            QNum.from_json(data["r"]),
        )


def dist2(p: Point, q: Point) -> QNum:
    return (p - q).norm2()


def tangency_kind(c1: Circle, c2: Circle) -> Tangency:
    """Classify the contact between two circles using squared distances only."""
    if c1.center.radicand != c2.center.radicand:
        raise RadicandMismatch("circles live in different fields")
    d2 = dist2(c1.center, c2.center)
    if not d2 and c1.r == c2.r:
        raise ValueError("coincident circles have no well-defined contact")
    rsum = c1.r + c2.r
    if d2 == rsum * rsum:
        return Tangency.EXTERNAL
    rdiff = c1.r - c2.r
    if rdiff and d2 == rdiff * rdiff:
        return Tangency.INTERNAL
    return Tangency.NONE


def internal_division(c1: Circle, c2: Circle) -> Point:
    """The point dividing the center segment internally in the ratio r1:r2.

    No tangency check; use :func:`tangency_point` for the checked version.
    """
    t = c1.r / (c1.r + c2.r)
    return c1.center + (c2.center - c1.center).scale(t)


def tangency_point(c1: Circle, c2: Circle) -> Point:
    if tangency_kind(c1, c2) is not Tangency.EXTERNAL:
        raise ValueError("circles are not externally tangent")
    p = internal_division(c1, c2)
    if not (c1.contains_on_boundary(p) and c2.contains_on_boundary(p)):
        raise ArithmeticError("tangency point is off one of the circles")
    return p


def touches_baseline(c: Circle) -> bool:
    return c.center.y == c.r


def foot_on_baseline(p: Point) -> Point:
    return Point(p.x, p.x * 0)
