import pytest

from conftest import E
from fencemonoid.core import EMPTY
from fencemonoid.ideals import IdealFamily, elements_of_ideal, enumerate_ideals, full_family
from fencemonoid.oracle import (
    Budget,
    BudgetExceeded,
    brute_ideals,
    brute_maximal,
    closure,
    is_maximal_subsemigroup,
    monoid_table,
    strategy_a,
    strategy_b,
)

PE4 = IdealFamily(4, ((), (2,), (4,)))


@pytest.fixture(scope="module")
def t4():
    return monoid_table(4)


def idx(t, *elems):
    return frozenset(t.index[e] for e in elems)


def test_closure_examples(t4):
    got = closure(idx(t4, E("2->4"), E("4->2")), t4)
    assert got == idx(t4, E("2->4"), E("4->2"), E("2->2"), E("4->4"), EMPTY)
    assert closure(idx(t4, EMPTY), t4) == idx(t4, EMPTY)
    everything = frozenset(range(len(t4)))
    assert closure(everything, t4) == everything


def test_is_maximal_examples(t4):
    i = frozenset(t4.indices(elements_of_ideal(PE4)))
    assert is_maximal_subsemigroup(i - idx(t4, E("2->4")), i, t4)
    assert not is_maximal_subsemigroup(i - idx(t4, E("2->2")), i, t4)
    assert not is_maximal_subsemigroup(i, i, t4)


def test_brute_maximal_examples(t4):
    i = frozenset(t4.indices(elements_of_ideal(PE4)))
    assert set(brute_maximal(i, t4)) == {i - idx(t4, E("2->4")), i - idx(t4, E("4->2"))}
    t2 = monoid_table(2)
    j = frozenset(range(len(t2)))
    assert len(brute_maximal(j, t2)) == 3
    assert brute_maximal(idx(t4, EMPTY), t4) == []


def test_strategies_agree_at_n4(t4):
    budget = Budget(16, 20)
    for f in enumerate_ideals(4):
        i = t4.indices(elements_of_ideal(f))
        if len(i) <= budget.subset_scan:
            assert set(strategy_a(i, t4, budget)) == set(strategy_b(i, t4, budget))


def test_refuses_rather_than_truncates(t4):
    i = t4.indices(elements_of_ideal(full_family(4)))
    with pytest.raises(BudgetExceeded):
        strategy_a(i, t4, Budget(16, 20))
    with pytest.raises(BudgetExceeded):
        brute_maximal(i, t4, Budget(1, 1))


def test_budget_parsing(monkeypatch):
    assert Budget.parse("12") == Budget(12, 12)
    assert Budget.parse("12,30") == Budget(12, 30)
    with pytest.raises(ValueError):
        Budget.parse("1,2,3")
    monkeypatch.setenv("FENCE_BUDGET", "5,6")
    assert Budget.from_env() == Budget(5, 6)
    monkeypatch.delenv("FENCE_BUDGET")
    assert Budget.from_env() == Budget()


def test_brute_ideals_small():
    assert len(brute_ideals(monoid_table(2))) == 5
    assert len(brute_ideals(monoid_table(1))) == 2
    t = monoid_table(3)
    assert all(t.index[EMPTY] in i for i in brute_ideals(t))
