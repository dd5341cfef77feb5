"""Dimensions of exterior powers and their generating functions.

The ``n``-th exterior power of ``V<1>`` in a twisted graded category is the
homotopy orbit object of ``Sigma_n`` acting on the ``n``-th tensor power, so at
height zero its dimension is the group average of the braiding character:

    ext_dim = (1/n!) sum_{lam |- n} |class(lam)| * (epsilon * D)^{c(lam)}.

For the trivial twist this is ``C(D+n-1, n)`` (symmetric powers) and for the
Koszul twist ``(-1)^n C(D, n)``.  This signed value is the *categorical*
normalization; multiplying by ``epsilon^n`` gives the *underlying*
normalization, i.e. the ordinary dimension of the exterior power, which is
what pairs with ``(-t)^n`` in the classical identity

    (sum dim Sym^n V t^n) (sum dim Lambda^n V (-t)^n) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coeffring import (SignedUnitValue, TruncatedSeries, ring_of,
                        series_product, super_dimension)
from .errors import IntegralityError, RingMismatchError
from .graded import Twist
from .symgroup import PARTITION_CAP, class_size, num_cycles, partitions


def _integer_dim(dim) -> int:
    if isinstance(dim, SignedUnitValue):
        return super_dimension(dim)
    if ring_of(dim) != "Z":
        raise RingMismatchError("exterior power dimensions need an integer or Z[u] dimension")
    return dim


def ext_dim(twist: Twist, dim, n: int, cap: int = PARTITION_CAP) -> int:
    """Categorical dimension of the ``n``-th exterior power of ``V<1>``.

    A :class:`SignedUnitValue` dimension (or twist unit) is first sent to its
    super dimension, ``u -> -1``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    x = _integer_dim(twist.epsilon) * _integer_dim(dim)
    total = sum(class_size(lam) * x ** num_cycles(lam) for lam in partitions(n, cap))
    value, rem = divmod(total, math.factorial(n))
    if rem:
        raise IntegralityError(f"class sum {total} is not divisible by {n}!")
    return value


@dataclass(frozen=True)
class ExtSeries:
    twist: Twist
    dim: object
    order: int
    categorical: TruncatedSeries
    underlying: TruncatedSeries

    def to_json(self) -> dict:
        return {
            "twist": self.twist.name,
            "order": self.order,
            "series": [
                {"normalization": "categorical", **self.categorical.to_json()},
                {"normalization": "underlying", **self.underlying.to_json()},
            ],
        }


def ext_series(twist: Twist, dim, order: int, cap: int = PARTITION_CAP) -> ExtSeries:
    if order < 0:
        raise ValueError("order must be non-negative")
    eps = _integer_dim(twist.epsilon)
    categorical = [ext_dim(twist, dim, n, cap) for n in range(order + 1)]
    underlying = [eps ** n * c for n, c in enumerate(categorical)]
    return ExtSeries(twist, dim, order,
                     TruncatedSeries("Z", tuple(categorical)),
                     TruncatedSeries("Z", tuple(underlying)))


def verify_sym_ext_identity(dim: int, order: int) -> tuple[bool, TruncatedSeries]:
    """Check ``(sum dim Sym^n t^n)(sum dim Lambda^n (-t)^n) == 1`` up to ``order``.

    Returns the verdict and the product series as a witness.
    """
    if dim < 0:
        raise ValueError("dim must be non-negative")
    sym = ext_series(Twist.trivial(), dim, order).underlying
    alt = ext_series(Twist.koszul(), dim, order).underlying
    witness = sym * alt.scale_variable(-1)
    return witness.is_one(), witness


def ext_series_product(series: list[ExtSeries]) -> TruncatedSeries:
    """Product of the categorical series, i.e. the series of a direct sum."""
    return series_product(s.categorical for s in series)
