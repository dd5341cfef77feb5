"""Exact coefficient arithmetic.

Three coefficient rings are supported, identified by a short tag:

``"Z"``
    Python ``int`` (arbitrary precision).
``"Q"``
    :class:`fractions.Fraction`.
``"Zu"``
    :class:`SignedUnitValue`, the ring Z[u]/(u^2 - 1).  The element ``u`` is
    the parity unit; sending ``u`` to -1 gives a super dimension.

Integers embed in both ``Q`` and ``Zu``; mixing ``Q`` with ``Zu`` is an error.
Nothing in this module uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InversionError, RingMismatchError

RINGS = ("Z", "Q", "Zu")


@dataclass(frozen=True, eq=False)
class SignedUnitValue:
    """The element ``a + b*u`` of Z[u]/(u^2 - 1)."""

    a: int
    b: int = 0

    def __post_init__(self):
        if isinstance(self.a, bool) or isinstance(self.b, bool):
            raise TypeError("SignedUnitValue components must be integers")
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("SignedUnitValue components must be integers")

    @classmethod
    def unit(cls) -> SignedUnitValue:
        return cls(0, 1)

    @staticmethod
    def _lift(other) -> SignedUnitValue | None:
        if isinstance(other, SignedUnitValue):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return SignedUnitValue(other, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return SignedUnitValue(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return SignedUnitValue(-self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return SignedUnitValue(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return SignedUnitValue(self.a * o.a + self.b * o.b,
                               self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = SignedUnitValue(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"SignedUnitValue(a={self.a}, b={self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return "u" if self.b == 1 else "-u" if self.b == -1 else f"{self.b}u"
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        return f"{self.a}{sign}{'' if mag == 1 else mag}u"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}

    @classmethod
    def from_json(cls, obj: dict) -> SignedUnitValue:
        return cls(int(obj["a"]), int(obj.get("b", 0)))


Value = Union[int, Fraction, SignedUnitValue]


def ring_of(x) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficient values")
    if isinstance(x, int):
        return "Z"
    if isinstance(x, Fraction):
        return "Q"
    if isinstance(x, SignedUnitValue):
        return "Zu"
    raise TypeError(f"unsupported coefficient value {x!r}")


def join_rings(r: str, s: str) -> str:
    """Smallest ring containing both ``r`` and ``s``."""
    if r == s:
        return r
    if r == "Z":
        return s
    if s == "Z":
        return r
    raise RingMismatchError(f"cannot combine rings {r} and {s}")


def common_ring(*values) -> str:
    ring = "Z"
    for v in values:
        ring = join_rings(ring, ring_of(v))
    return ring


def coerce(x, ring: str) -> Value:
    src = ring_of(x)
    if join_rings(src, ring) != ring:
        raise RingMismatchError(f"cannot coerce {src} value into {ring}")
    if ring == "Q":
        return Fraction(x)
    if ring == "Zu" and src == "Z":
        return SignedUnitValue(x, 0)
    return x


def zero(ring: str) -> Value:
    return coerce(0, ring)


def one(ring: str) -> Value:
    return coerce(1, ring)


def is_unit(x) -> bool:
    ring = ring_of(x)
    if ring == "Z":
        return x in (1, -1)
    if ring == "Q":
        return x != 0
    # a + bu is a unit iff both evaluations a+b, a-b are +-1
    return abs(x.a + x.b) == 1 and abs(x.a - x.b) == 1


def unit_inverse(x) -> Value:
    if not is_unit(x):
        raise InversionError(f"{x} is not a unit")
    if isinstance(x, Fraction):
        return 1 / x
    # units of Z and Z[u]/(u^2-1) all square to one
    return x


def signed_unit_eval(x, sign: int) -> int:
    """Evaluate ``x`` at ``u = sign``; integers pass through unchanged."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if isinstance(x, SignedUnitValue):
        return x.a + sign * x.b
    if ring_of(x) == "Z":
        return x
    raise RingMismatchError("only integer-valued rings can be evaluated at u")


def super_dimension(x) -> int:
    """Integer shadow of ``x`` with the parity unit sent to -1."""
    return signed_unit_eval(x, -1)


def value_to_json(x):
    ring = ring_of(x)
    if ring == "Z":
        return x
    if ring == "Q":
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x.to_json()


def value_from_json(obj) -> Value:
    if isinstance(obj, dict):
        return SignedUnitValue.from_json(obj)
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, int) and not isinstance(obj, bool):
        return obj
    raise TypeError(f"cannot decode coefficient {obj!r}")


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``sum coeffs[i] t^i`` known modulo ``t^(order+1)``."""

    ring: str
    coeffs: tuple

    def __post_init__(self):
        if self.ring not in RINGS:
            raise ValueError(f"unknown ring tag {self.ring!r}")
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs",
                           tuple(coerce(c, self.ring) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int | None = None,
                    ring: str | None = None) -> TruncatedSeries:
        """Build a series, padding with zeros or truncating to ``order``."""
        coeffs = list(coeffs)
        if ring is None:
            ring = common_ring(*coeffs)
        if order is None:
            order = max(len(coeffs) - 1, 0)
        coeffs = coeffs[:order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(ring, tuple(coeffs))

    @classmethod
    def constant(cls, c, order: int, ring: str | None = None) -> TruncatedSeries:
        return cls.from_coeffs([c], order, ring or ring_of(c))

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            _check_compatible(self, other)
            return TruncatedSeries(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        return NotImplemented

    def __neg__(self):
        return TruncatedSeries(self.ring, tuple(-c for c in self.coeffs))

    def scale_variable(self, c) -> TruncatedSeries:
        """Return ``f(c*t)``."""
        ring = join_rings(self.ring, ring_of(c))
        return TruncatedSeries(ring, tuple(a * c ** i for i, a in enumerate(self.coeffs)))

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [value_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> TruncatedSeries:
        coeffs = [value_from_json(c) for c in obj["coeffs"]]
        if len(coeffs) != obj["order"] + 1:
            raise ValueError("coefficient list length does not match order")
        return cls.from_coeffs(coeffs, obj["order"])

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else "t" if i == 1 else f"t^{i}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"({c}){mono}" if isinstance(c, SignedUnitValue) else f"{c}{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.order + 1})"


def _check_compatible(f: TruncatedSeries, g: TruncatedSeries) -> None:
    if f.ring != g.ring:
        raise RingMismatchError(f"series over {f.ring} and {g.ring} cannot be combined")
    if f.order != g.order:
        raise RingMismatchError(f"series truncated at orders {f.order} and {g.order}")


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(f, g)
    n = f.order
    z = zero(f.ring)
    out = [z] * (n + 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] = out[i + j] + a * g.coeffs[j]
    return TruncatedSeries(f.ring, tuple(out))


def series_invert(f: TruncatedSeries) -> TruncatedSeries:
    head = f.coeffs[0]
    if not is_unit(head):
        raise InversionError(f"constant term {head} is not a unit in {f.ring}")
    inv0 = unit_inverse(head)
    g = [inv0]
    for n in range(1, f.order + 1):
        acc = zero(f.ring)
        for i in range(1, n + 1):
            acc = acc + f.coeffs[i] * g[n - i]
        g.append(-(inv0 * acc))
    return TruncatedSeries(f.ring, tuple(g))


def series_product(series: Iterable[TruncatedSeries]) -> TruncatedSeries:
    series = list(series)
    if not series:
        raise ValueError("empty product has no well-defined order")
    out = series[0]
    for s in series[1:]:
        out = series_mul(out, s)
    return out


@dataclass(frozen=True)
class Laurent:
    """``t^offset * series``: a Laurent polynomial with bounded-below degrees."""

    series: TruncatedSeries
    offset: int = 0

    @classmethod
    def monomial(cls, value, degree: int) -> Laurent:
        return cls(TruncatedSeries.constant(value, 0), degree)

    def coefficient(self, degree: int):
        i = degree - self.offset
        if 0 <= i <= self.series.order:
            return self.series.coeffs[i]
        return zero(self.series.ring)

    def at_one(self):
        """Evaluate at ``t = 1``."""
        total = zero(self.series.ring)
        for c in self.series.coeffs:
            total = total + c
        return total

    def __str__(self):
        if self.series.order == 0:
            return f"{self.series.coeffs[0]}*t^{self.offset}"
        return f"t^{self.offset}*({self.series})"
