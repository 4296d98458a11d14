"""Acceptance checks; each test records a PASS/FAIL line in the session summary."""

import itertools
import json
import random
import subprocess
import sys
import time

import pytest

from fencemonoid.core import (
    compose,
    count_by_classes,
    enumerate_elements,
    identity,
    inverse,
    is_element,
    is_member,
    semantic_is_member,
    sim,
)
from fencemonoid.green import GreenRelationKind, classes, green_oracle, related
from fencemonoid.ideals import (
    IdealFamily,
    elements_of_ideal,
    enumerate_ideals,
    full_family,
    iter_ideals,
    minimal_ideals,
)
from fencemonoid.maxsub import classify_maximal, iu_by_factorization, iu_by_shape, materialize
from fencemonoid.oracle import Budget, brute_ideals, brute_maximal, monoid_table, strategy_a
from fencemonoid.serialize import (
    descriptor_from_json,
    descriptor_to_json,
    element_from_json,
    element_to_json,
    family_from_json,
    family_to_json,
)


def all_partial_injections(n):
    pts = range(1, n + 1)
    for k in range(n + 1):
        for d in itertools.combinations(pts, k):
            for m in itertools.permutations(pts, k):
                yield d, m


def test_membership_equivalence(criterion):
    with criterion(1, "is_member agrees with the semantic check on every partial injection, n <= 6"):
        start = time.perf_counter()
        total = 0
        for n in range(1, 7):
            maps = list(all_partial_injections(n))
            for d, m in maps:
                assert is_member(d, m, n) == semantic_is_member(d, m, n), (d, m, n)
            total = len(maps)
        assert total == 13327
        assert time.perf_counter() - start < 10


def test_counting_identity(criterion):
    with criterion(2, "element count equals the sum of squared class sizes, n <= 10"):
        assert [len(enumerate_elements(n)) for n in (1, 2, 3)] == [2, 4, 10]
        for n in range(1, 11):
            assert len(enumerate_elements(n)) == count_by_classes(n)


def test_green_conformance(criterion):
    with criterion(3, "Green's relations agree with the principal-ideal oracle, n <= 4"):
        start = time.perf_counter()
        for n in range(1, 5):
            elems = enumerate_elements(n)
            for kind in GreenRelationKind:
                for a in elems:
                    for b in elems:
                        assert related(kind, a, b, n) == green_oracle(kind, a, b, n), (kind, a, b)
            assert all(len(b) == 1 for b in classes("H", n))
        assert time.perf_counter() - start < 30


def test_ideal_conformance(criterion):
    with criterion(4, "enumerated ideals equal the brute-force ideals, n <= 4"):
        for n in range(1, 5):
            t = monoid_table(n)
            ours = {frozenset(t.indices(elements_of_ideal(f))) for f in enumerate_ideals(n)}
            assert ours == set(brute_ideals(t))
        assert len(enumerate_ideals(2)) == 5


def test_minimal_ideals(criterion):
    with criterion(5, "minimal ideals are the odd and even singleton families, 2 <= n <= 6"):
        for n in range(2, 7):
            odd = IdealFamily(n, ((),) + tuple((k,) for k in range(1, n + 1, 2)))
            even = IdealFamily(n, ((),) + tuple((k,) for k in range(2, n + 1, 2)))
            mins = minimal_ideals(n)
            assert mins == [odd, even]
            for f in iter_ideals(n):
                if f.is_trivial:
                    continue
                for m in mins:
                    assert not (f.member_set < m.member_set)


def test_iu_agreement(criterion):
    with criterion(6, "both computations of the factor-free elements agree, n <= 4"):
        for n in range(1, 5):
            for f in enumerate_ideals(n):
                assert iu_by_shape(f) == iu_by_factorization(f), f


def check_classification(f, t, budget):
    ideal = t.indices(elements_of_ideal(f))
    predicted = {frozenset(t.indices(materialize(d, f))) for d in classify_maximal(f)}
    found = set(brute_maximal(ideal, t, budget))
    assert predicted == found, f
    return len(found)


def test_main_classification(criterion):
    with criterion(7, "classification equals brute force on every non-trivial ideal, n <= 4, and sampled n = 5"):
        start = time.perf_counter()
        budget = Budget()
        for n in range(1, 5):
            t = monoid_table(n)
            for f in enumerate_ideals(n):
                if not f.is_trivial:
                    check_classification(f, t, budget)
        t4 = monoid_table(4)
        assert check_classification(IdealFamily(4, ((), (2,), (4,))), t4, budget) == 2
        assert check_classification(full_family(2), monoid_table(2), budget) == 3
        t5 = monoid_table(5)
        ideals5 = [f for f in enumerate_ideals(5) if not f.is_trivial]
        sample = random.Random(5).sample(ideals5, 200) + [full_family(5)]
        for f in sample:
            check_classification(f, t5, budget)
        assert time.perf_counter() - start < 300


def test_complements_rank_homogeneous(criterion):
    with criterion(8, "every brute-force complement lies in one rank, n <= 4"):
        # the subset scan assumes nothing about ranks, so it is the honest witness here
        budget = Budget(subset_scan=22, layer_scan=20)
        for n in range(1, 5):
            t = monoid_table(n)
            for f in enumerate_ideals(n):
                if f.is_trivial:
                    continue
                ideal = frozenset(t.indices(elements_of_ideal(f)))
                for m in strategy_a(ideal, t, budget):
                    assert len({int(t.ranks[x]) for x in ideal - m}) == 1


def check_laws(elems, n, triples):
    one = identity(range(1, n + 1))
    for a in elems:
        a_ = inverse(a)
        assert is_element(a_, n)
        assert compose(compose(a, a_), a) == a and inverse(a_) == a
        assert compose(one, a) == a == compose(a, one)
        assert sim(a.dom, a.img)
    for a, b, c in triples:
        assert compose(compose(a, b), c) == compose(a, compose(b, c))
        assert is_element(compose(a, b), n)
        e, f = compose(a, inverse(a)), compose(b, inverse(b))
        assert compose(e, f) == compose(f, e)


def check_sim(sets):
    for x, y, z in sets:
        assert sim(x, x) and sim(x, y) == sim(y, x)
        assert not (sim(x, y) and sim(y, z)) or sim(x, z)


def subsets_of(n):
    pts = range(1, n + 1)
    return [s for k in range(n + 1) for s in itertools.combinations(pts, k)]


def test_inverse_monoid_laws(criterion):
    with criterion(9, "inverse-monoid laws and similarity is an equivalence, exhaustive n <= 4, random n <= 8"):
        for n in range(1, 5):
            elems = enumerate_elements(n)
            check_laws(elems, n, itertools.product(elems, repeat=3))
            check_sim(itertools.product(subsets_of(n), repeat=3))
        rng = random.Random(8)
        for n in range(5, 9):
            elems = enumerate_elements(n)
            check_laws(elems, n, [tuple(rng.choices(elems, k=3)) for _ in range(3000)])
            subs = subsets_of(n)
            check_sim([tuple(rng.choices(subs, k=3)) for _ in range(3000)])


def test_cli_round_trips(criterion):
    with criterion(10, "JSON round trips and verify at n = 2, 3 exits 0"):
        text = lambda obj: json.loads(json.dumps(obj))
        for n in range(1, 5):
            for e in enumerate_elements(n):
                assert element_from_json(text(element_to_json(e))) == e
            for f in enumerate_ideals(n):
                assert family_from_json(text(family_to_json(f))) == f
                if not f.is_trivial:
                    for d in classify_maximal(f):
                        assert descriptor_from_json(text(descriptor_to_json(d))) == d
        for n in ("2", "3"):
            proc = subprocess.run([sys.executable, "-m", "fencemonoid", "verify", "--n", n],
                                  capture_output=True, text=True)
            assert proc.returncode == 0, proc.stderr
