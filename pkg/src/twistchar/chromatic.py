"""Chromatic decisions: truncated units, braiding characters over Morava E-theory.

At height ``n`` and prime ``p`` the twists of the orientable extension are
indexed by the dual stem group ``pi_{n+1}``; an element ``alpha`` of it
determines a sign ``omega(alpha)`` in ``pi_0 E_n^x``, the dimension of the
shifted unit.  Only ``+1`` and ``-1`` can occur, and ``-1`` only for ``p = 2``
and ``n <= 3``.  The braiding character of the twisted graded category is then
that of ``E_n`` (``omega = +1``) or of ``Sigma E_n`` (``omega = -1``).

The semiadditive integrals over ``BZ/2`` in ``Mod_{E_n}`` at ``p = 2`` are
pure arithmetic in ``n`` and are exposed as such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braidchar import CharacterTable, braiding_character
from .graded import Twist
from .symgroup import COMPONENT_CAP, LoopComponentCyclic, is_prime, cyclic_loop_components

# External data (standard tables, not derived here): pi_k of the sphere
# spectrum for 1 <= k <= 7, as lists of cyclic orders.
STABLE_STEMS: dict[int, tuple[int, ...]] = {
    1: (2,),
    2: (2,),
    3: (24,),
    4: (),
    5: (),
    6: (2,),
    7: (240,),
}

LABEL_EN = "E_n"
LABEL_SIGMA_EN = "ΣE_n"


def _p_part(d: int, p: int) -> int:
    q = 1
    while d % p == 0:
        d //= p
        q *= p
    return q


def p_local_stem(k: int, p: int) -> tuple[int, ...]:
    """Cyclic orders of the ``p``-localization of ``pi_k`` of the sphere."""
    if k not in STABLE_STEMS:
        raise KeyError(f"no reference data for stem {k}")
    return tuple(q for q in (_p_part(d, p) for d in STABLE_STEMS[k]) if q > 1)


@dataclass(frozen=True)
class StemGroup:
    """An element of the dual stem group at prime ``p`` and height ``n``.

    ``orders`` present the group as a product of cyclic ``p``-groups and
    ``element`` holds one residue per factor.
    """

    p: int
    n: int
    orders: tuple[int, ...]
    element: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n < 0:
            raise ValueError("height must be non-negative")
        orders = tuple(self.orders)
        element = tuple(self.element)
        for d in orders:
            if d < 1 or _p_part(d, self.p) != d:
                raise ValueError(f"order {d} is not a power of {self.p}")
        if len(element) != len(orders):
            raise ValueError("need one residue per cyclic factor")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "element", tuple(x % d for x, d in zip(element, orders)))

    @classmethod
    def reference(cls, p: int, n: int, element=None) -> StemGroup:
        """Build from the shipped stem table; ``element`` defaults to zero."""
        orders = p_local_stem(n + 1, p)
        if element is None:
            element = (0,) * len(orders)
        return cls(p, n, orders, tuple(element))

    def with_element(self, element) -> StemGroup:
        return StemGroup(self.p, self.n, self.orders, tuple(element))

    def generator_multiple(self, c: int) -> StemGroup:
        """``c`` times the element that is ``1`` in every factor."""
        return self.with_element(tuple(c % d for d in self.orders))

    def is_two_divisible(self) -> bool:
        return all(x % math.gcd(2, d) == 0 for x, d in zip(self.element, self.orders))

    def is_zero(self) -> bool:
        return not any(self.element)


@dataclass(frozen=True)
class ChromaticDecision:
    omega: int
    label: str


def truncated_units(p: int, n: int) -> frozenset[int]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError("height must be non-negative")
    if p == 2 and n <= 3:
        return frozenset({1, -1})
    return frozenset({1})


def chromatic_decision(p: int, n: int, alpha: StemGroup) -> ChromaticDecision:
    if (alpha.p, alpha.n) != (p, n):
        raise ValueError(f"alpha lives at (p, n) = ({alpha.p}, {alpha.n}), not ({p}, {n})")
    if p != 2 or n >= 3 or alpha.is_two_divisible():
        return ChromaticDecision(1, LABEL_EN)
    return ChromaticDecision(-1, LABEL_SIGMA_EN)


def chromatic_character(p: int, n: int, alpha: StemGroup, m: int) -> CharacterTable:
    decision = chromatic_decision(p, n, alpha)
    return braiding_character(Twist.unit(decision.omega), 1, m)


def bz2_cardinality(n: int) -> int:
    """Cardinality of ``BZ/2`` in ``Mod_{E_n}`` at ``p = 2``."""
    if n < 1:
        raise ValueError("the cardinality formula needs height n >= 1")
    return 2 ** (n - 1)


def integral_bz2_sq(n: int, omega: int) -> int:
    """Integral over ``BZ/2`` of the constant ``omega^2`` local system.

    For ``omega = -1`` the ``Z/2``-action is the nontrivial one and the
    integral is ``1 - 2^(n-1)`` rather than the cardinality.
    """
    if omega not in (1, -1):
        raise ValueError("omega must be +1 or -1")
    if omega == 1:
        return bz2_cardinality(n)
    if n < 1:
        raise ValueError("height must be at least 1")
    return -(2 ** (n - 1)) + 1


def no_truncated_unit_check(n: int) -> bool:
    """True when ``-1`` squared integrates differently from ``1``."""
    return integral_bz2_sq(n, -1) != bz2_cardinality(n)


def loop_bz2_integral(n: int) -> int:
    return integral_bz2_sq(n, -1) - bz2_cardinality(n)


@dataclass(frozen=True)
class TranschromaticRow:
    component: LoopComponentCyclic
    value: int
    action: str


def _component_value(coords: tuple[int, ...], k: int, omega_t: int) -> int:
    if k == 0 or any(c % 2 for c in coords):
        return omega_t
    # coords = 2x with x read in (Z/2^(k-1))^j
    half = tuple((c // 2) % 2 ** (k - 1) for c in coords)
    return _component_value(half, k - 1, omega_t) ** 2


def transchromatic_table(k: int, j: int, omega_t: int,
                         cap: int = COMPONENT_CAP) -> list[TranschromaticRow]:
    """Values of the transchromatic character of ``rho_{alpha,k}`` per component.

    Components that are not 2-divisible carry ``omega_t`` with the trivial
    action; a component ``2x`` carries the square of the value at ``x`` one
    level down, induced from ``Z/2^(k-1)``.
    """
    if omega_t not in (1, -1):
        raise ValueError("omega_t must be +1 or -1")
    rows = []
    for comp in cyclic_loop_components(2, k, j, cap):
        value = _component_value(comp.coords, k, omega_t)
        action = "trivial" if comp.valuation == 0 else "induced"
        rows.append(TranschromaticRow(comp, value, action))
    return rows
