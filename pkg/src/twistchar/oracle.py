"""Brute-force model of tensor powers of graded vector spaces.

Everything here is computed element by element: permutations act on explicit
basis tensors, Koszul signs come from counting inversions, and traces are
summed over the diagonal.  Nothing is shared with the closed-form modules, so
this is the independent side of every cross-check.

Trace convention: the monoidal trace in a twisted graded category is the
degree-signed (super) trace, ``sum over fixed basis tensors of
epsilon^deg * sign``.  With this convention the swap on an odd line has trace
-1 and an odd line has dimension -1 under the Koszul twist.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EnumerationLimitError
from .graded import Twist

MATRIX_CAP = 4096


def koszul_sign(perm, degrees) -> int:
    """Sign picked up when ``perm`` moves the factor at position ``i`` to ``perm[i]``.

    Every pair of factors whose order is reversed contributes ``(-1)^(d_i d_j)``.
    """
    if len(perm) != len(degrees):
        raise ValueError("need one degree per tensor factor")
    odd = 0
    m = len(perm)
    for i in range(m):
        for j in range(i + 1, m):
            if perm[i] > perm[j] and degrees[i] % 2 and degrees[j] % 2:
                odd ^= 1
    return -1 if odd else 1


def compose(sigma, tau) -> tuple[int, ...]:
    """``sigma * tau``: apply ``tau`` first."""
    return tuple(sigma[t] for t in tau)


def act_on_degrees(perm, degrees) -> tuple[int, ...]:
    """Degrees after the factor at position ``i`` has moved to ``perm[i]``."""
    out = [0] * len(perm)
    for i, p in enumerate(perm):
        out[p] = degrees[i]
    return tuple(out)


@dataclass(frozen=True)
class GradedVectorSpace:
    """Q-vector space with a homogeneous basis ``(index, degree)``."""

    basis: tuple[tuple[int, int], ...]

    def __post_init__(self):
        basis = tuple((int(i), int(d)) for i, d in self.basis)
        if len({i for i, _ in basis}) != len(basis):
            raise ValueError("basis indices must be distinct")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def concentrated(cls, dim: int, degree: int = 0) -> GradedVectorSpace:
        return cls(tuple((i, degree) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.basis)


@dataclass(frozen=True)
class SignedPermMatrix:
    """Signed permutation matrix on the basis tensors of ``V^{tensor m}``.

    ``entries[col] = (row, sign)``; ``degrees[i]`` is the total degree of the
    ``i``-th basis tensor.
    """

    entries: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: SignedPermMatrix) -> SignedPermMatrix:
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")
        out = []
        for row, sign in other.entries:
            row2, sign2 = self.entries[row]
            out.append((row2, sign * sign2))
        return SignedPermMatrix(tuple(out), self.degrees)

    def naive_trace(self) -> int:
        return sum(sign for col, (row, sign) in enumerate(self.entries) if row == col)

    def to_dense(self) -> list[list[int]]:
        n = self.dimension
        dense = [[0] * n for _ in range(n)]
        for col, (row, sign) in enumerate(self.entries):
            dense[row][col] = sign
        return dense


def _signs_active(twist: Twist) -> bool:
    eps = twist.epsilon
    if eps not in (1, -1) or not isinstance(eps, int):
        raise ValueError("the oracle models only rational twists (epsilon = +-1)")
    return eps == -1


def perm_action(perm, space: GradedVectorSpace, m: int, twist: Twist,
                cap: int = MATRIX_CAP) -> SignedPermMatrix:
    """Matrix of ``perm`` acting on ``space^{tensor m}``.

    The basis tensor ``e_{i_1} x ... x e_{i_m}`` goes to the tensor whose
    factor at position ``perm[k]`` is ``e_{i_k}``, times the Koszul sign when
    the twist is odd.
    """
    if len(perm) != m or sorted(perm) != list(range(m)):
        raise ValueError(f"{perm!r} is not a permutation of {m} letters")
    d = space.dim
    if d ** m > cap:
        raise EnumerationLimitError(f"{d}^{m} basis tensors exceed the cap {cap}")
    signed = _signs_active(twist)
    degs = space.degrees
    tensors = list(itertools.product(range(d), repeat=m))
    index = {t: i for i, t in enumerate(tensors)}
    entries = []
    tensor_degrees = []
    for t in tensors:
        factor_degrees = tuple(degs[i] for i in t)
        image = act_on_degrees(perm, t)
        sign = koszul_sign(perm, factor_degrees) if signed else 1
        entries.append((index[image], sign))
        tensor_degrees.append(sum(factor_degrees))
    return SignedPermMatrix(tuple(entries), tuple(tensor_degrees))


def categorical_trace(matrix: SignedPermMatrix, total_degree: int | None,
                      twist: Twist) -> Fraction:
    """Monoidal trace: ``epsilon^deg`` times the naive trace.

    With ``total_degree=None`` each diagonal entry is weighted by the degree
    of its own basis tensor, which handles mixed-degree spaces.
    """
    eps = -1 if _signs_active(twist) else 1
    if total_degree is not None:
        return Fraction(eps ** (total_degree % 2) * matrix.naive_trace())
    total = 0
    for col, (row, sign) in enumerate(matrix.entries):
        if row == col:
            total += eps ** (matrix.degrees[col] % 2) * sign
    return Fraction(total)


def all_permutations(m: int):
    return itertools.permutations(range(m))


def projector_dim(space: GradedVectorSpace, m: int, twist: Twist,
                  cap: int = MATRIX_CAP) -> Fraction:
    """Trace of the averaging idempotent ``(1/m!) sum_sigma sigma``."""
    total = Fraction(0)
    for perm in all_permutations(m):
        total += categorical_trace(perm_action(perm, space, m, twist, cap), None, twist)
    return total / math.factorial(m)
