import json
import math
from fractions import Fraction

import pytest

from twistchar.braidchar import (Action, CharacterTable, braiding_character,
                                 character_to_series_row, class_average,
                                 induced_character_value)
from twistchar.coeffring import SignedUnitValue
from twistchar.errors import EnumerationLimitError
from twistchar.extalg import ext_dim
from twistchar.graded import Twist
from twistchar.symgroup import Partition, partitions
from twistchar.verify import character_mismatches

TRIV, KOS = Twist.trivial(), Twist.koszul()
u = SignedUnitValue.unit()


def P(*parts):
    return Partition(parts)


def test_table_examples():
    assert braiding_character(TRIV, 3, 2).value_at([1, 1]) == 9
    assert braiding_character(KOS, 2, 3).value_at([3]) == -2
    assert braiding_character(KOS, 2, 2).value_at([2]) == -2


def test_table_shape():
    table = braiding_character(KOS, 2, 5)
    assert [r.partition for r in table.rows] == partitions(5)
    assert table.degree == 5
    assert all(r.action is Action.TRIVIAL for r in table.rows)
    with pytest.raises(EnumerationLimitError):
        braiding_character(TRIV, 1, 31)


def test_parity_unit_table():
    # odd number of cycles picks up the parity unit
    table = braiding_character(Twist.unit(u), 1, 3)
    assert table.value_at([3]) == u
    assert table.value_at([2, 1]) == 1
    assert table.value_at([1, 1, 1]) == u


@pytest.mark.parametrize("twist", [TRIV, KOS])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_table_matches_oracle(twist, d):
    for m in range(6):
        assert character_mismatches(twist, d, m) == []


def test_induced_character_examples():
    assert induced_character_value(P(2), 1, 1, TRIV, TRIV) == 2
    assert induced_character_value(P(1, 1), 1, 1, TRIV, TRIV) == 4
    assert induced_character_value(P(3), 2, 0, TRIV, TRIV) == 2
    assert induced_character_value(P(3), 2, 0, KOS, KOS) == -2


def test_induced_character_expanded_splittings():
    # [1,1] with D1 = D2 = 1: splittings ([1,1],[]), ([1],[1]) twice-weighted, ([],[1,1])
    terms = [1, 2, 1]
    assert induced_character_value(P(1, 1), 1, 1, TRIV, TRIV) == sum(terms)


@pytest.mark.parametrize("twist", [TRIV, KOS])
def test_induced_character_multiplicative(twist):
    eps = twist.epsilon
    for m in range(7):
        for lam in partitions(m):
            for d1 in range(-3, 4):
                for d2 in range(-3, 4):
                    got = induced_character_value(lam, d1, d2, twist, twist)
                    assert got == (eps * (d1 + d2)) ** len(lam)


def test_induced_character_mixed_twists():
    # trivial V1 plus Koszul V2: (D1 - D2)^c
    for lam in partitions(4):
        assert induced_character_value(lam, 3, 1, TRIV, KOS) == 2 ** len(lam)


def test_series_rows():
    rows = character_to_series_row(braiding_character(TRIV, 5, 0))
    assert list(rows) == [P()]
    assert rows[P()].coefficient(0) == 1
    rows = character_to_series_row(braiding_character(KOS, 1, 1))
    assert rows[P(1)].coefficient(1) == -1
    rows = character_to_series_row(braiding_character(TRIV, 2, 2))
    assert rows[P(2)].coefficient(2) == 2
    for m in range(5):
        for mono in character_to_series_row(braiding_character(KOS, 3, m)).values():
            assert mono.offset == m


@pytest.mark.parametrize("twist", [TRIV, KOS])
@pytest.mark.parametrize("d", range(5))
def test_average_at_t_equals_one_matches_ext_dim(twist, d):
    for m in range(8):
        table = braiding_character(twist, d, m)
        rows = character_to_series_row(table)
        total = sum(math.factorial(m) // math.prod(
            k ** lam.parts.count(k) * math.factorial(lam.parts.count(k)) for k in set(lam.parts))
            * rows[lam].at_one() for lam in rows)
        assert Fraction(total, math.factorial(m)) == ext_dim(twist, d, m)
        assert class_average(table) == ext_dim(twist, d, m)


def test_json_schema():
    table = braiding_character(KOS, 2, 3)
    data = table.to_json()
    assert data["m"] == 3 and data["twist"] == "koszul" and data["dim"] == 2
    assert data["rows"][0] == {"partition": [3], "cycles": 1, "class_size": 2,
                               "value": -2, "degree": 3, "action": "trivial"}
    assert CharacterTable.from_json(json.loads(json.dumps(data))) == table


def test_json_roundtrip_parity():
    table = braiding_character(Twist.unit(u), SignedUnitValue(2, 1), 3)
    assert CharacterTable.from_json(json.loads(json.dumps(table.to_json()))) == table
