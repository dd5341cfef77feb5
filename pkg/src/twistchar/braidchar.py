"""Braiding characters of tensor powers.

On the component of the free loop space indexed by a permutation with ``c``
cycles, the braiding character of ``V`` in a twisted graded category takes the
value ``(epsilon * dim V)^c`` in tensor degree ``m``.  Only the dimension of
``V`` and the twist unit enter.

The centralizer ``prod_k (Z/k wr Sigma_{N_k})`` acts on this value: each
``Z/k`` rotates the factor belonging to one ``k``-cycle and ``Sigma_{N_k}``
permutes equal-length factors.  In every coefficient ring implemented here the
restricted cyclic actions are trivial, so rows carry :attr:`Action.TRIVIAL`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .coeffring import Laurent, Value, join_rings, ring_of, value_from_json, value_to_json
from .graded import Twist, dim_shift
from .symgroup import (PARTITION_CAP, Partition, centralizer_order, class_size,
                       cycle_counts, num_cycles, partitions)


class Action(enum.Enum):
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class CharacterRow:
    partition: Partition
    value: Value
    action: Action = Action.TRIVIAL


@dataclass(frozen=True)
class CharacterTable:
    m: int
    twist: Twist
    dim: Value
    rows: tuple[CharacterRow, ...]

    @property
    def degree(self) -> int:
        """Exponent of ``t`` carried by every value."""
        return self.m

    def value_at(self, lam: Partition | list | tuple) -> Value:
        if not isinstance(lam, Partition):
            lam = Partition.from_parts(lam)
        for row in self.rows:
            if row.partition == lam:
                return row.value
        raise KeyError(f"{lam} is not a partition of {self.m}")

    def to_json(self) -> dict:
        out = {
            "m": self.m,
            "twist": self.twist.name,
            "dim": value_to_json(self.dim),
            "rows": [
                {
                    "partition": row.partition.to_json(),
                    "cycles": num_cycles(row.partition),
                    "class_size": class_size(row.partition),
                    "value": value_to_json(row.value),
                    "degree": self.degree,
                    "action": row.action.value,
                }
                for row in self.rows
            ],
        }
        if self.twist.name == "unit":
            out["epsilon"] = value_to_json(self.twist.epsilon)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> CharacterTable:
        kind = obj["twist"]
        if kind == "unit":
            twist = Twist.unit(value_from_json(obj["epsilon"]))
        else:
            twist = Twist.parse(kind)
        rows = tuple(
            CharacterRow(Partition.from_json(r["partition"]), value_from_json(r["value"]),
                         Action(r.get("action", "trivial")))
            for r in obj["rows"]
        )
        return cls(obj["m"], twist, value_from_json(obj["dim"]), rows)


def braiding_character(twist: Twist, dim: Value, m: int,
                       cap: int = PARTITION_CAP) -> CharacterTable:
    """Character table of the braiding on the ``m``-th tensor power."""
    shifted = dim_shift(twist, dim)
    rows = tuple(CharacterRow(lam, shifted ** num_cycles(lam))
                 for lam in partitions(m, cap))
    return CharacterTable(m, twist, dim, rows)


def induced_character_value(lam: Partition, dim1: Value, dim2: Value,
                            twist1: Twist, twist2: Twist) -> Value:
    """Character of the braiding of ``V1 + V2`` at cycle type ``lam``.

    Sums over the ways of splitting the cycles of ``lam`` into a cycle type
    ``mu`` for the first summand and ``nu`` for the second, each weighted by
    ``z_lam / (z_mu z_nu)``.
    """
    x = dim_shift(twist1, dim1)
    y = dim_shift(twist2, dim2)
    join_rings(ring_of(x), ring_of(y))
    counts = cycle_counts(lam)
    z_lam = centralizer_order(lam)
    total = 0
    for taken in itertools.product(*(range(n + 1) for n in counts.values())):
        mu, nu = [], []
        for (k, n_k), a in zip(counts.items(), taken):
            mu += [k] * a
            nu += [k] * (n_k - a)
        mu, nu = Partition(tuple(mu)), Partition(tuple(nu))
        weight, rem = divmod(z_lam, centralizer_order(mu) * centralizer_order(nu))
        assert rem == 0
        total = total + weight * x ** num_cycles(mu) * y ** num_cycles(nu)
    return total


def character_to_series_row(table: CharacterTable) -> dict[Partition, Laurent]:
    return {row.partition: Laurent.monomial(row.value, table.degree) for row in table.rows}


def class_average(table: CharacterTable):
    """``(1/m!) sum_sigma chi(sigma)`` computed class-wise, as an exact rational."""
    total = 0
    for row in table.rows:
        total = total + class_size(row.partition) * row.value
    if ring_of(total) == "Zu":
        raise TypeError("class averages are only defined over Z or Q")
    return Fraction(total) / factorial(table.m)
