"""Ideals of the monoid, parametrised by families of point sets.

A family containing the empty set that is closed under taking subsets and
under similarity determines the ideal of all elements whose domain lies in
the family, and every ideal arises this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .core import (
    check_n,
    enumerate_elements,
    point_set,
    sim_class,
    sim_classes,
    subset_key,
)


@dataclass(frozen=True)
class IdealFamily:
    n: int
    members: tuple

    def __post_init__(self):
        check_n(self.n)
        members = sorted({point_set(m, self.n) for m in self.members}, key=subset_key)
        object.__setattr__(self, "members", tuple(members))

    def __contains__(self, s) -> bool:
        return tuple(s) in self.member_set

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def is_trivial(self) -> bool:
        return self.members == ((),)

    def key(self):
        return (len(self.members), self.members)


def _proper_subsets(s):
    for k in range(len(s)):
        yield from combinations(s, k)


def is_ideal_family(members: Iterable[Iterable[int]], n: int) -> bool:
    check_n(n)
    try:
        fam = {point_set(m, n) for m in members}
    except ValueError:
        return False
    if () not in fam:
        return False
    for s in fam:
        if any(sub not in fam for sub in _proper_subsets(s)):
            return False
        if any(z not in fam for z in sim_class(s, n)):
            return False
    return True


def close_family(generators: Iterable[Iterable[int]], n: int) -> IdealFamily:
    """Least ideal family containing the generators."""
    check_n(n)
    fam = {()}
    todo = [point_set(g, n) for g in generators]
    while todo:
        s = todo.pop()
        if s in fam:
            continue
        fam.add(s)
        todo.extend(sub for sub in _proper_subsets(s) if sub not in fam)
        todo.extend(z for z in sim_class(s, n) if z not in fam)
    return IdealFamily(n, tuple(fam))


def elements_of_ideal(f: IdealFamily) -> list:
    return [e for e in enumerate_elements(f.n) if e.dom in f]


@lru_cache(maxsize=None)
def _class_requirements(n: int) -> tuple:
    classes = sim_classes(n)
    where = {}
    for i, c in enumerate(classes):
        for s in c:
            where[s] = i
    reqs = []
    for c in classes:
        req = set()
        for s in c:
            req.update(where[sub] for sub in _proper_subsets(s))
        reqs.append(frozenset(req))
    return tuple(reqs)


def iter_ideals(n: int) -> Iterator[IdealFamily]:
    """Every ideal family, as a down-closed set of similarity classes.

    Classes are visited by increasing size so every class a candidate needs
    has already been decided; no branch is ever abandoned.
    """
    check_n(n)
    classes = sim_classes(n)
    reqs = _class_requirements(n)
    order = sorted(range(len(classes)), key=lambda i: subset_key(classes[i][0]))
    empty = order[0]

    def rec(pos, chosen):
        if pos == len(order):
            yield chosen
            return
        i = order[pos]
        yield from rec(pos + 1, chosen)
        if reqs[i] <= chosen:
            yield from rec(pos + 1, chosen | {i})

    for chosen in rec(1, frozenset([empty])):
        yield IdealFamily(n, tuple(s for i in chosen for s in classes[i]))


def enumerate_ideals(n: int) -> list:
    return sorted(iter_ideals(n), key=IdealFamily.key)


def count_ideals(n: int) -> int:
    return sum(1 for _ in iter_ideals(n))


def minimal_ideals(n: int) -> list:
    """The non-trivial minimal ideals: all odd singletons, and all even singletons."""
    check_n(n)
    odd = IdealFamily(n, ((),) + tuple((k,) for k in range(1, n + 1, 2)))
    even = IdealFamily(n, ((),) + tuple((k,) for k in range(2, n + 1, 2)))
    return [f for f in (odd, even) if not f.is_trivial]


def full_family(n: int) -> IdealFamily:
    return IdealFamily(n, tuple(s for c in sim_classes(n) for s in c))


def trivial_family(n: int) -> IdealFamily:
    return IdealFamily(n, ((),))


def parse_ideal_spec(text: str, n: int) -> IdealFamily:
    """Parse generators like ``"1,3;2"`` and close them; ``""`` is the trivial ideal."""
    check_n(n)
    gens = []
    for raw in text.split(";"):
        part = raw.strip()
        if not part:
            continue
        try:
            pts = [int(x) for x in part.split(",")]
        except ValueError:
            raise ValueError(f"malformed generator {part!r}: expected comma-separated integers") from None
        if len(set(pts)) != len(pts):
            raise ValueError(f"malformed generator {part!r}: repeated point")
        if any(p < 1 or p > n for p in pts):
            raise ValueError(f"malformed generator {part!r}: points must lie in [1..{n}]")
        gens.append(pts)
    return close_family(gens, n)
