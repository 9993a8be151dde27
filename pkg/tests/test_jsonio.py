import json

import pytest

from mvsr.errors import MalformedTable
from mvsr.jsonio import (canonical_dumps, load_algebra, matrix_from_dict,
                         matrix_to_dict, mv_from_dict, mv_to_dict,
                         semimodule_from_dict, semimodule_to_dict,
                         semiring_from_dict, semiring_to_dict)
from mvsr.matrix import SemiringMatrix
from mvsr.mv import lukasiewicz_chain
from mvsr.semimodule import free_semimodule
from mvsr.semiring import boolean_semiring


def test_semiring_round_trip():
    s = boolean_semiring()
    back = semiring_from_dict(semiring_to_dict(s))
    assert back.add == s.add and back.mul == s.mul
    assert back.zero == s.zero and back.one == s.one
    assert back.label(1) == s.label(1)


def test_mv_round_trip():
    a = lukasiewicz_chain(4)
    d = mv_to_dict(a)
    assert d["kind"] == "mv"
    back = mv_from_dict(d)
    assert back.oplus == a.oplus and back.star == a.star
    assert back.label(1) == "1/3"


def test_semimodule_round_trip():
    m = free_semimodule(boolean_semiring(), ["x", "y"])
    d = semimodule_to_dict(m)
    assert d["kind"] == "semimodule"
    assert d["scalars"]["kind"] == "semiring"
    assert "labels" not in d
    back = semimodule_from_dict(d)
    assert back.add == m.add and back.action == m.action
    assert back.scalars.size == 2


def test_matrix_round_trip():
    s = boolean_semiring()
    u = SemiringMatrix(s, 2, 3, ((0, 1, 0), (1, 1, 0)))
    back = matrix_from_dict(matrix_to_dict(u))
    assert back.rows == 2 and back.cols == 3
    assert back.entries == u.entries


def test_load_dispatches_on_kind():
    s = boolean_semiring()
    a = lukasiewicz_chain(2)
    assert load_algebra(semiring_to_dict(s)).mul == s.mul
    assert load_algebra(mv_to_dict(a)).star == a.star


def test_load_rejects_bad_kind():
    with pytest.raises(MalformedTable):
        load_algebra({"kind": "group"})
    with pytest.raises(MalformedTable):
        load_algebra(["not", "an", "object"])
    with pytest.raises(MalformedTable):
        load_algebra({"size": 2})


def test_decoders_reject_wrong_shapes():
    good = semiring_to_dict(boolean_semiring())
    bad = dict(good, add="oops")
    with pytest.raises(MalformedTable):
        semiring_from_dict(bad)
    bad = dict(good, zero=True)
    with pytest.raises(MalformedTable):
        semiring_from_dict(bad)
    mv_bad = dict(mv_to_dict(lukasiewicz_chain(2)), star=3)
    with pytest.raises(MalformedTable):
        mv_from_dict(mv_bad)


def test_canonical_dumps_is_stable():
    text = canonical_dumps({"b": 1, "a": [2, 3]})
    assert text == '{\n  "a": [\n    2,\n    3\n  ],\n  "b": 1\n}\n'
    assert text.endswith("\n")
    scrambled = json.loads('{"a": [2, 3], "b": 1}')
    assert canonical_dumps(scrambled) == text
