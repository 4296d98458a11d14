import pytest

from conftest import E
from fencemonoid.core import EMPTY, enumerate_elements, identity
from fencemonoid.green import GreenRelationKind, classes, egg_box, green_oracle, related


def test_related_examples():
    assert related("J", E("1->1"), E("3->3"), 3)
    assert related("R", E("1->1"), E("1->3"), 3)
    assert not related("L", E("1->1"), E("1->3"), 3)
    assert not related("H", E("1->1"), E("1->3"), 3)


def test_h_is_equality():
    elems = enumerate_elements(4)
    for a in elems:
        for b in elems:
            assert related(GreenRelationKind.H, a, b) == (a == b)


def test_class_counts():
    assert len(classes("H", 2)) == 4
    assert all(len(b) == 1 for b in classes("H", 2))
    assert len(classes("J", 3)) == 7
    assert [b[0].dom for b in classes("R", 2)] == [(), (1,), (2,), (1, 2)]


@pytest.mark.parametrize("kind", list("LRHJ"))
def test_oracle_reflexive_on_empty_map(kind):
    assert green_oracle(kind, EMPTY, EMPTY, 2)


def test_oracle_separates_ranks():
    assert not green_oracle("J", identity((1, 2)), EMPTY, 2)


def test_unknown_kind():
    with pytest.raises(ValueError):
        related("D", EMPTY, EMPTY)


def test_related_checks_membership():
    with pytest.raises(ValueError):
        related("L", E("1->2"), EMPTY, 2)


def test_egg_box_cells_cover_j_classes():
    for box, block in zip(egg_box(4), classes("J", 4)):
        assert len(box["cells"]) == len(block) == len(box["rows"]) * len(box["cols"])
