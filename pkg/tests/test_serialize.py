import json

import pytest

from fencemonoid.core import enumerate_elements
from fencemonoid.ideals import enumerate_ideals
from fencemonoid.maxsub import classify_maximal
from fencemonoid.serialize import (
    descriptor_from_json,
    descriptor_to_json,
    element_from_json,
    element_to_json,
    family_from_json,
    family_to_json,
)


def through_text(obj):
    return json.loads(json.dumps(obj))


def test_element_schema():
    e = enumerate_elements(4)[-1]
    assert element_to_json(e) == {"dom": [1, 2, 3, 4], "img": [1, 2, 3, 4]}


@pytest.mark.parametrize("bad", [
    {"dom": [1]},
    {"dom": [2, 1], "img": [1, 2]},
    {"dom": [1], "img": [1], "extra": 0},
    {"dom": [True], "img": [1]},
])
def test_element_rejects(bad):
    with pytest.raises(ValueError):
        element_from_json(bad)


def test_family_schema():
    f = enumerate_ideals(2)[-1]
    assert family_to_json(f) == {"n": 2, "members": [[], [1], [2], [1, 2]]}
    with pytest.raises(ValueError):
        family_from_json({"members": []})


def test_descriptor_shapes():
    f = enumerate_ideals(2)[-1]
    d = classify_maximal(f)[0]
    assert descriptor_to_json(d) == {"type": 1, "g": [1], "removed": [{"dom": [1], "img": [1]}]}
    with pytest.raises(ValueError):
        descriptor_from_json({"type": 4})


def test_round_trips_n4():
    for e in enumerate_elements(4):
        assert element_from_json(through_text(element_to_json(e))) == e
    for f in enumerate_ideals(4):
        assert family_from_json(through_text(family_to_json(f))) == f
        if f.is_trivial:
            continue
        for d in classify_maximal(f):
            back = descriptor_from_json(through_text(descriptor_to_json(d)))
            assert back == d
            assert back.removed == d.removed
