import random

import numpy as np
import pytest

from fencemonoid import kernels
from fencemonoid.core import compose, enumerate_elements, to_mask
from fencemonoid.ideals import elements_of_ideal, enumerate_ideals
from fencemonoid.oracle import monoid_table

BACKENDS = sorted(kernels.available_backends())


@pytest.fixture(params=BACKENDS)
def k(request):
    return kernels.get_backend(request.param)


def test_cython_backend_builds():
    # the compiled extension is part of the install; the fallback is for broken builds
    assert "cython" in BACKENDS


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


@pytest.mark.parametrize("n", [1, 3, 5])
def test_product_table_matches_compose(k, n):
    elems = enumerate_elements(n)
    index = {e: i for i, e in enumerate(elems)}
    prod = k.product_table([to_mask(e.dom) for e in elems], [to_mask(e.img) for e in elems], n)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            assert prod[i, j] == index[compose(a, b)]


def test_backends_agree_on_everything():
    py, cy = (kernels.get_backend(b) for b in ("python", "cython"))
    t = monoid_table(4)
    doms = [to_mask(e.dom) for e in t.elements]
    imgs = [to_mask(e.img) for e in t.elements]
    assert np.array_equal(py.product_table(doms, imgs, 4), cy.product_table(doms, imgs, 4))
    rng = random.Random(7)
    for f in enumerate_ideals(4):
        members = t.indices(elements_of_ideal(f))
        assert py.factor_free(t.product, members, t.ranks) == cy.factor_free(t.product, members, t.ranks)
        assert py.is_closed(t.product, members) == cy.is_closed(t.product, members)
        seed = rng.sample(members, min(3, len(members)))
        assert py.closure(t.product, seed) == cy.closure(t.product, seed)
        if len(members) <= 14:
            assert sorted(py.strategy_a(t.product, members)) == sorted(cy.strategy_a(t.product, members))
        for r in set(t.ranks[members].tolist()):
            layer = [x for x in members if t.ranks[x] == r]
            assert sorted(py.strategy_b(t.product, members, t.ranks, layer)) == sorted(
                cy.strategy_b(t.product, members, t.ranks, layer)
            )


def test_compose_masks(k):
    # 1,2->3,4 then 3,4->1,2 is the identity on {1,2}
    assert tuple(k.compose_masks(0b0011, 0b1100, 0b1100, 0b0011)) == (0b0011, 0b0011)
