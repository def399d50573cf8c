"""Exact half-integer angular-momentum labels.

Every representation label j and magnetic quantum number m in this package
is a :class:`HalfInt` storing the doubled value as a plain integer, so
triangle rules, parity checks and basis bookkeeping are exact. Floats never
carry spin labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A half-integer p/2 stored as the integer ``twice`` = p."""

    twice: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice, int):
            raise TypeError(f"twice must be int, got {type(self.twice).__name__}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice + halfint(other).twice)

    __radd__ = __add__

    def __sub__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice - halfint(other).twice)

    def __rsub__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(halfint(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (HalfInt, int, float)):
            return self.twice == halfint(other).twice
        return NotImplemented

    def __lt__(self, other: "HalfInt | int | float") -> bool:
        return self.twice < halfint(other).twice

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    # -- views --------------------------------------------------------------

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __float__(self) -> float:
        return self.twice / 2.0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice})"


def halfint(value: "HalfInt | int | float | Fraction") -> HalfInt:
    """Coerce ints, exact floats (k/2) or Fractions to :class:`HalfInt`."""
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int):
        return HalfInt(2 * value)
    if isinstance(value, Fraction):
        if value.denominator not in (1, 2):
            raise ValueError(f"{value} is not a half-integer")
        return HalfInt(int(value * 2))
    if isinstance(value, float):
        doubled = value * 2
        if doubled != int(doubled):
            raise ValueError(f"{value} is not a half-integer")
        return HalfInt(int(doubled))
    raise TypeError(f"cannot interpret {value!r} as a half-integer")


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)


def dim(j: "HalfInt | int | float") -> int:
    """Dimension 2j+1 of the spin-j representation."""
    j = halfint(j)
    if j.twice < 0:
        raise ValueError(f"invalid representation label j={j}")
    return j.twice + 1


def m_values(j: "HalfInt | int | float") -> list[HalfInt]:
    """Magnetic quantum numbers of the spin-j multiplet, descending j..-j.

    Descending order is the global basis convention of this package; every
    representation everywhere is laid out this way.
    """
    j = halfint(j)
    if j.twice < 0:
        raise ValueError(f"invalid representation label j={j}")
    return [HalfInt(t) for t in range(j.twice, -j.twice - 2, -2)]


def j_range(j_min: "HalfInt | int | float", j_max: "HalfInt | int | float") -> list[HalfInt]:
    """Representation labels from j_min to j_max inclusive, half-integer steps."""
    lo, hi = halfint(j_min), halfint(j_max)
    return [HalfInt(t) for t in range(lo.twice, hi.twice + 1)]


def triangle_ok(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> bool:
    """Triangle rule |j1-j2| <= j3 <= j1+j2 with integer total twice-parity."""
    if (j1.twice + j2.twice + j3.twice) % 2 != 0:
        return False
    return abs(j1.twice - j2.twice) <= j3.twice <= j1.twice + j2.twice
