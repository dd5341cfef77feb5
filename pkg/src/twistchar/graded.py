"""Decategorified Z-graded objects.

A :class:`GradedDim` records the dimension of each graded piece of an object
of a Z-graded category.  The monoidal product is Day convolution,

    (X * Y)_m = sum_{a + b = m} X_a Y_b,

and a twisted symmetric monoidal structure is remembered only through the
square-one unit ``epsilon`` = dim(1<1>) (:class:`Twist`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping

from .coeffring import (SignedUnitValue, Value, coerce, common_ring, is_unit,
                        join_rings, ring_of, value_from_json, value_to_json)


class TwistKind(enum.Enum):
    TRIVIAL = "trivial"
    KOSZUL = "koszul"
    UNIT = "unit"


@dataclass(frozen=True)
class Twist:
    """Twist descriptor: the kind plus the unit ``epsilon`` with ``epsilon**2 == 1``."""

    kind: TwistKind
    epsilon: Value

    def __post_init__(self):
        if ring_of(self.epsilon) == "Q":
            raise TypeError("twist units live in Z or Z[u]/(u^2-1)")
        if self.epsilon * self.epsilon != 1:
            raise ValueError(f"twist unit {self.epsilon} does not square to 1")
        if self.kind is TwistKind.TRIVIAL and self.epsilon != 1:
            raise ValueError("the trivial twist has epsilon = 1")
        if self.kind is TwistKind.KOSZUL and self.epsilon != -1:
            raise ValueError("the Koszul twist has epsilon = -1")

    @classmethod
    def trivial(cls) -> Twist:
        return cls(TwistKind.TRIVIAL, 1)

    @classmethod
    def koszul(cls) -> Twist:
        return cls(TwistKind.KOSZUL, -1)

    @classmethod
    def unit(cls, epsilon) -> Twist:
        return cls(TwistKind.UNIT, epsilon)

    @classmethod
    def parse(cls, name: str) -> Twist:
        """Parse ``trivial``, ``koszul``, ``parity`` (epsilon = u) or ``unit:<+-1>``."""
        name = name.strip().lower()
        if name == "trivial":
            return cls.trivial()
        if name == "koszul":
            return cls.koszul()
        if name in ("parity", "u"):
            return cls.unit(SignedUnitValue.unit())
        if name.startswith("unit:"):
            return cls.unit(int(name[5:]))
        raise ValueError(f"unknown twist {name!r}")

    @property
    def ring(self) -> str:
        return ring_of(self.epsilon)

    @property
    def name(self) -> str:
        return self.kind.value

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "epsilon": value_to_json(self.epsilon)}

    @classmethod
    def from_json(cls, obj: dict) -> Twist:
        return cls(TwistKind(obj["kind"]), value_from_json(obj["epsilon"]))


@dataclass(frozen=True)
class GradedDim:
    """Finitely supported map from integer degrees to nonzero coefficients."""

    entries: tuple[tuple[int, Value], ...] = ()

    def __post_init__(self):
        cleaned = {}
        for deg, val in self.entries:
            if isinstance(deg, bool) or not isinstance(deg, int):
                raise TypeError("degrees must be integers")
            ring_of(val)
            if deg in cleaned:
                raise ValueError(f"degree {deg} listed twice")
            if val != 0:
                cleaned[deg] = val
        common_ring(*cleaned.values())
        object.__setattr__(self, "entries", tuple(sorted(cleaned.items())))

    @classmethod
    def from_dict(cls, mapping: Mapping[int, Value]) -> GradedDim:
        return cls(tuple(mapping.items()))

    @classmethod
    def unit(cls) -> GradedDim:
        return cls(((0, 1),))

    @classmethod
    def shift(cls, degree: int, value: Value = 1) -> GradedDim:
        """The dimension of ``1<degree>`` scaled by ``value``."""
        return cls(((degree, value),))

    def as_dict(self) -> dict[int, Value]:
        return dict(self.entries)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.entries)

    @property
    def ring(self) -> str:
        return common_ring(*(v for _, v in self.entries))

    def __getitem__(self, degree: int) -> Value:
        return self.as_dict().get(degree, 0)

    def __mul__(self, other):
        if isinstance(other, GradedDim):
            return day_convolve(self, other)
        return NotImplemented

    def to_json(self) -> dict:
        return {str(d): value_to_json(v) for d, v in self.entries}

    @classmethod
    def from_json(cls, obj: Mapping) -> GradedDim:
        return cls(tuple((int(d), value_from_json(v)) for d, v in obj.items()))


def day_convolve(x: GradedDim, y: GradedDim) -> GradedDim:
    join_rings(x.ring, y.ring)
    out: dict[int, Value] = {}
    for a, xa in x.entries:
        for b, yb in y.entries:
            out[a + b] = out.get(a + b, 0) + xa * yb
    return GradedDim.from_dict(out)


def is_invertible(x: GradedDim) -> tuple[bool, int | None]:
    """Whether ``x`` is the dimension of an invertible object, and its degree.

    Invertible graded objects are concentrated in a single degree with an
    invertible value there.
    """
    if len(x.entries) == 1:
        degree, value = x.entries[0]
        if is_unit(value):
            return True, degree
    return False, None


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finite abelian group given as a product of cyclic groups ``Z/d``."""

    orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(self.orders)
        if any(isinstance(d, bool) or not isinstance(d, int) or d < 1 for d in orders):
            raise ValueError("cyclic orders must be positive integers")
        object.__setattr__(self, "orders", orders)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def __mul__(self, other):
        if isinstance(other, FiniteAbelianGroup):
            return FiniteAbelianGroup(self.orders + other.orders)
        return NotImplemented


def count_twists(units: FiniteAbelianGroup) -> int:
    """Number of twisted graded structures, i.e. the 2-torsion of the unit group."""
    return math.prod(math.gcd(2, d) for d in units.orders)


def dim_shift(twist: Twist, dim: Value) -> Value:
    """Dimension of ``V<1>`` given ``dim(V)``."""
    ring = join_rings(twist.ring, ring_of(dim))
    return coerce(twist.epsilon, ring) * coerce(dim, ring)
