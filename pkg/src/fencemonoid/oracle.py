"""Brute-force ground truth on explicit multiplication tables.

Nothing here knows about similarity classes or ideal families: everything is
computed from the product table of the monoid, so it can be used to check
the structural results in :mod:`fencemonoid.green`, :mod:`fencemonoid.ideals`
and :mod:`fencemonoid.maxsub`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .core import PartialInjection, check_n, enumerate_elements, to_mask


class BudgetExceeded(RuntimeError):
    """Raised instead of silently truncating a search that is too large."""


class OracleDisagreement(AssertionError):
    pass


@dataclass(frozen=True)
class Budget:
    subset_scan: int = 16  # largest ideal scanned subset by subset
    layer_scan: int = 20  # largest number of removable candidates in one rank layer

    @classmethod
    def parse(cls, text: str) -> "Budget":
        """Parse ``"A"`` or ``"A,B"``; a lone value sets both limits."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts or len(parts) > 2:
            raise ValueError(f"bad budget {text!r}; expected A or A,B")
        vals = [int(p) for p in parts]
        if any(v < 0 for v in vals):
            raise ValueError(f"bad budget {text!r}; limits must be non-negative")
        return cls(vals[0], vals[-1])

    @classmethod
    def from_env(cls) -> "Budget":
        text = os.environ.get("FENCE_BUDGET")
        return cls.parse(text) if text else cls()


class ElementTable:
    """Globally ordered elements with their full multiplication table."""

    def __init__(self, elements: Sequence[PartialInjection], n: int):
        self.n = check_n(n)
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.ranks = np.array([e.rank for e in self.elements], dtype=np.int64)
        doms = [to_mask(e.dom) for e in self.elements]
        imgs = [to_mask(e.img) for e in self.elements]
        self.product = kernels.product_table(doms, imgs, n)

    def __len__(self):
        return len(self.elements)

    def indices(self, elements: Iterable[PartialInjection]) -> list:
        return sorted(self.index[e] for e in elements)

    def elements_of(self, indices: Iterable[int]) -> list:
        return [self.elements[i] for i in sorted(indices)]

    def mul(self, i: int, j: int) -> int:
        return int(self.product[i, j])


@lru_cache(maxsize=16)
def monoid_table(n: int) -> ElementTable:
    return ElementTable(enumerate_elements(n), n)


def closure(seed: Iterable[int], t: ElementTable) -> frozenset:
    return frozenset(kernels.closure(t.product, list(seed)))


def is_closed(m: Iterable[int], t: ElementTable) -> bool:
    return kernels.is_closed(t.product, list(m))


def is_maximal_subsemigroup(m: Iterable[int], i: Iterable[int], t: ElementTable) -> bool:
    m, i = frozenset(m), frozenset(i)
    if not m or m == i or not m <= i or not is_closed(m, t):
        return False
    return all(closure(m | {x}, t) == i for x in i - m)


def _layers(i, t):
    layers: dict = {}
    for x in sorted(i):
        layers.setdefault(int(t.ranks[x]), []).append(x)
    return layers


def strategy_a(i: Iterable[int], t: ElementTable, budget: Budget | None = None) -> list:
    """Every maximal subsemigroup of ``i`` found by scanning all subsets."""
    budget = budget or Budget.from_env()
    i = sorted(i)
    if len(i) > budget.subset_scan:
        raise BudgetExceeded(f"subset scan of {len(i)} elements exceeds budget {budget.subset_scan}")
    full = frozenset(i)
    return sorted((full - frozenset(c) for c in kernels.strategy_a(t.product, i)), key=sorted)


def layer_candidates(i: Iterable[int], t: ElementTable) -> dict:
    """Per rank: layer members that are not products of two higher-rank members."""
    i = sorted(i)
    free = set(kernels.factor_free(t.product, i, t.ranks))
    out = {}
    for r, layer in _layers(i, t).items():
        out[r] = [x for x in layer if x in free]
    return out


def strategy_b(i: Iterable[int], t: ElementTable, budget: Budget | None = None) -> list:
    """Maximal subsemigroups whose complement sits inside a single rank layer."""
    budget = budget or Budget.from_env()
    i = sorted(i)
    cands = layer_candidates(i, t)
    worst = max((len(c) for c in cands.values()), default=0)
    if worst > budget.layer_scan:
        raise BudgetExceeded(f"layer with {worst} candidates exceeds budget {budget.layer_scan}")
    full = frozenset(i)
    out = []
    for layer in _layers(i, t).values():
        for comp in kernels.strategy_b(t.product, i, t.ranks, layer):
            out.append(full - frozenset(comp))
    return sorted(out, key=sorted)


def brute_maximal(i: Iterable[int], t: ElementTable, budget: Budget | None = None) -> list:
    """All maximal subsemigroups of the closed set ``i``.

    Runs the subset scan and the layer scan whenever each fits the budget and
    raises :class:`OracleDisagreement` if they differ. Raises
    :class:`BudgetExceeded` when neither fits.
    """
    budget = budget or Budget.from_env()
    i = sorted(i)
    results = []
    for fn in (strategy_a, strategy_b):
        try:
            results.append(fn(i, t, budget))
        except BudgetExceeded:
            continue
    if not results:
        raise BudgetExceeded(f"ideal of {len(i)} elements is outside every oracle budget")
    if len(results) == 2 and set(results[0]) != set(results[1]):
        raise OracleDisagreement("subset scan and layer scan found different maximal subsemigroups")
    return results[-1]


def principal_ideal(a: int, t: ElementTable) -> frozenset:
    prod = t.product
    left = set(prod[:, a].tolist())
    out = set()
    for x in left:
        out.update(prod[x, :].tolist())
    return frozenset(out)


def brute_ideals(t: ElementTable) -> list:
    """All two-sided ideals of the monoid, as unions of principal ideals."""
    principals = sorted(set(principal_ideal(a, t) for a in range(len(t))), key=lambda s: (len(s), sorted(s)))
    found = set(principals)
    frontier = list(principals)
    while frontier:
        nxt = []
        for ideal in frontier:
            for p in principals:
                u = ideal | p
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))
