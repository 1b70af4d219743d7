"""Closed bounded real intervals.

Classical (Moore) arithmetic on ``[lower, upper]`` pairs, point-interval
operations (midpoint, radius, Hausdorff distance) and a total order that
compares midpoints first and breaks ties on radius, so that the interval
with the larger spread is the greater one.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from numbers import Real
from typing import Tuple, Union

from iwcentrality.exceptions import DivisionByIntervalContainingZero, InvalidInterval

Number = Union[int, float]


@functools.total_ordering
@dataclass(frozen=True)
class Interval:
    """A closed interval ``[lower, upper]`` with ``lower <= upper``.

    A degenerate interval ``[x, x]`` stands for the real number ``x``;
    plain numbers are accepted wherever an operand interval is expected.

    Equality is endpoint equality. The rich comparisons use :func:`compare`
    with exact midpoint equality.
    """

    lower: float
    upper: float

    def __post_init__(self):
        for value in (self.lower, self.upper):
            if not isinstance(value, Real) or isinstance(value, bool):
                raise InvalidInterval(f"interval endpoint must be a real number, got {value!r}")
            if math.isnan(value) or math.isinf(value):
                raise InvalidInterval(f"interval endpoint must be finite, got {value!r}")
        if self.lower > self.upper:
            raise InvalidInterval(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        object.__setattr__(self, "lower", float(self.lower))
        object.__setattr__(self, "upper", float(self.upper))

    @classmethod
    def point(cls, x: Number) -> "Interval":
        return cls(x, x)

    @classmethod
    def from_midpoint_radius(cls, midpoint: Number, radius: Number) -> "Interval":
        if radius < 0:
            raise InvalidInterval(f"radius must be non-negative, got {radius}")
        return cls(midpoint - radius, midpoint + radius)

    @property
    def midpoint(self) -> float:
        return (self.lower + self.upper) / 2

    @property
    def radius(self) -> float:
        return (self.upper - self.lower) / 2

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def is_degenerate(self) -> bool:
        return self.lower == self.upper

    def __iter__(self):
        yield self.lower
        yield self.upper

    def __contains__(self, x: Number) -> bool:
        return self.lower <= x <= self.upper

    def issubset(self, other: "Interval") -> bool:
        """Set inclusion, ``self ⊆ other``."""
        other = as_interval(other)
        return other.lower <= self.lower and self.upper <= other.upper

    # arithmetic -------------------------------------------------------------

    def __neg__(self) -> "Interval":
        return Interval(-self.upper, -self.lower)

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __pow__(self, alpha):
        return power(self, alpha)

    # ordering -------------------------------------------------------------

    def __lt__(self, other):
        if not isinstance(other, (Interval, Real)):
            return NotImplemented
        return compare(self, other).relation is Relation.LESS

    # formatting -----------------------------------------------------------

    def format(self, decimals: int = 2) -> str:
        return f"[{format_number(self.lower, decimals)},{format_number(self.upper, decimals)}]"

    def __str__(self) -> str:
        return self.format()


ZERO = Interval(0.0, 0.0)


def as_interval(x: Union[Interval, Number, Tuple[Number, Number]]) -> Interval:
    """Coerce a real number, a ``(lower, upper)`` pair or an Interval."""
    if isinstance(x, Interval):
        return x
    if isinstance(x, Real):
        return Interval(x, x)
    try:
        lower, upper = x
    except (TypeError, ValueError):
        raise InvalidInterval(f"cannot interpret {x!r} as an interval") from None
    return Interval(lower, upper)


def format_number(x: float, decimals: int = 2) -> str:
    """Fixed-point text for ``x``; integral values print without a fraction.

    Never uses scientific notation.
    """
    if float(x).is_integer():
        return str(int(x))
    return f"{x:.{decimals}f}"


def add(a, b) -> Interval:
    a, b = as_interval(a), as_interval(b)
    return Interval(a.lower + b.lower, a.upper + b.upper)


def sub(a, b) -> Interval:
    """``a + (-b)``. Note ``sub(x, x)`` is ``[-width, width]``, not zero."""
    a, b = as_interval(a), as_interval(b)
    return Interval(a.lower - b.upper, a.upper - b.lower)


def mul(a, b) -> Interval:
    a, b = as_interval(a), as_interval(b)
    products = (a.lower * b.lower, a.lower * b.upper, a.upper * b.lower, a.upper * b.upper)
    return Interval(min(products), max(products))


def reciprocal(b) -> Interval:
    b = as_interval(b)
    if b.lower <= 0 <= b.upper:
        raise DivisionByIntervalContainingZero(f"divisor {b} contains zero")
    return Interval(1 / b.upper, 1 / b.lower)


def div(a, b) -> Interval:
    return mul(a, reciprocal(b))


def power(a, alpha: Number) -> Interval:
    """Endpoint image ``[lower**alpha, upper**alpha]``.

    Defined for non-negative intervals and ``alpha >= 0`` only, where the map
    is monotone and the endpoint image is the exact range. ``0 ** 0 == 1``.
    """
    a = as_interval(a)
    if alpha < 0:
        raise ValueError(f"exponent must be non-negative, got {alpha}")
    if a.lower < 0:
        raise ValueError(f"power is only defined here for non-negative intervals, got {a}")
    return Interval(a.lower**alpha, a.upper**alpha)


def scale(a, c: Number) -> Interval:
    """Multiply by a real scalar."""
    return mul(a, Interval(c, c))


def infimum(a, b) -> Interval:
    a, b = as_interval(a), as_interval(b)
    return Interval(min(a.lower, b.lower), min(a.upper, b.upper))


def supremum(a, b) -> Interval:
    a, b = as_interval(a), as_interval(b)
    return Interval(max(a.lower, b.lower), max(a.upper, b.upper))


def inf_sup(a, b) -> Tuple[Interval, Interval]:
    return infimum(a, b), supremum(a, b)


def hausdorff(a, b) -> float:
    a, b = as_interval(a), as_interval(b)
    return max(abs(a.lower - b.lower), abs(a.upper - b.upper))


class Relation(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUIVALENT = "equivalent"


@dataclass(frozen=True)
class OrderDecision:
    relation: Relation
    tie_broken_by_radius: bool = False

    @property
    def sign(self) -> int:
        return {Relation.LESS: -1, Relation.EQUIVALENT: 0, Relation.GREATER: 1}[self.relation]


def compare(a, b, eps: float = 0.0) -> OrderDecision:
    """Order ``a`` against ``b`` by midpoint, then by radius.

    The larger midpoint wins. On equal midpoints the interval with the
    strictly larger radius is the greater one. Equal midpoints and equal
    radii mean the two are equivalent (for intervals, identical).

    Args:
        a, b: intervals or reals.
        eps: absolute tolerance applied to both the midpoint and the radius
            comparison. The default of 0 is exact equality.
    """
    a, b = as_interval(a), as_interval(b)
    dm = a.midpoint - b.midpoint
    if abs(dm) > eps:
        return OrderDecision(Relation.LESS if dm < 0 else Relation.GREATER)
    dr = a.radius - b.radius
    if abs(dr) > eps:
        return OrderDecision(Relation.LESS if dr < 0 else Relation.GREATER, tie_broken_by_radius=True)
    return OrderDecision(Relation.EQUIVALENT)


def greater(a, b, eps: float = 0.0) -> Interval:
    """The greater of two intervals under :func:`compare` (``b`` on ties)."""
    return as_interval(a) if compare(a, b, eps).relation is Relation.GREATER else as_interval(b)
