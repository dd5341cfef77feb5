"""Cross-checks of the closed forms against the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .braidchar import braiding_character
from .extalg import ext_dim, verify_sym_ext_identity
from .graded import Twist
from .oracle import GradedVectorSpace, categorical_trace, perm_action, projector_dim
from .symgroup import canonical_representative


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def character_mismatches(twist: Twist, dim: int, m: int) -> list[str]:
    """Rows of the closed-form table that disagree with the oracle trace.

    Generators sit in degree 1, so the Koszul sign rule is in force whenever
    the twist is odd.
    """
    space = GradedVectorSpace.concentrated(dim, degree=1)
    table = braiding_character(twist, dim, m)
    bad = []
    for row in table.rows:
        perm = canonical_representative(row.partition)
        trace = categorical_trace(perm_action(perm, space, m, twist), m, twist)
        if trace != row.value:
            bad.append(f"{twist.name} d={dim} m={m} {row.partition}: "
                       f"closed form {row.value}, oracle {trace}")
    return bad


def check_characters(max_m: int = 5, dims=(1, 2, 3)) -> Check:
    bad = []
    for twist in (Twist.trivial(), Twist.koszul()):
        for d in dims:
            for m in range(max_m + 1):
                bad += character_mismatches(twist, d, m)
    return Check("character vs oracle", not bad, "; ".join(bad))


def ext_dim_mismatches(twist: Twist, dim: int, n: int) -> list[str]:
    space = GradedVectorSpace.concentrated(dim, degree=1)
    brute = projector_dim(space, n, twist)
    closed = ext_dim(twist, dim, n)
    if brute != closed:
        return [f"{twist.name} d={dim} n={n}: closed form {closed}, oracle {brute}"]
    return []


def check_ext_dims(max_d: int = 3, max_n: int = 5) -> Check:
    bad = []
    for twist in (Twist.trivial(), Twist.koszul()):
        for d in range(max_d + 1):
            for n in range(max_n + 1):
                bad += ext_dim_mismatches(twist, d, n)
    return Check("exterior dimensions vs oracle", not bad, "; ".join(bad))


def check_identity(max_d: int = 4, order: int = 10) -> Check:
    bad = [str(d) for d in range(max_d + 1) if not verify_sym_ext_identity(d, order)[0]]
    return Check("Sym/Lambda generating function identity", not bad,
                 f"fails for d = {', '.join(bad)}" if bad else "")


def run_all() -> list[Check]:
    return [check_characters(), check_ext_dims(), check_identity()]
