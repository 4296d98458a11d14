"""Green's relations L, R, H and J."""

from __future__ import annotations

import enum
from functools import lru_cache

from .core import PartialInjection, check_n, element_key, enumerate_elements, is_element, signature


class GreenRelationKind(str, enum.Enum):
    L = "L"
    R = "R"
    H = "H"
    J = "J"


def _kind(kind) -> GreenRelationKind:
    try:
        return GreenRelationKind(kind)
    except ValueError:
        raise ValueError(f"unknown Green relation {kind!r}; expected one of L, R, H, J") from None


def _key(kind: GreenRelationKind, a: PartialInjection):
    if kind is GreenRelationKind.L:
        return a.img
    if kind is GreenRelationKind.R:
        return a.dom
    if kind is GreenRelationKind.H:
        return (a.dom, a.img)
    return signature(a.dom)


def related(kind, a: PartialInjection, b: PartialInjection, n: int | None = None) -> bool:
    """L: equal images, R: equal domains, H: equality, J: similar domains.

    When ``n`` is given both arguments must be elements over [1..n].
    """
    kind = _kind(kind)
    if n is not None:
        for x in (a, b):
            if not is_element(x, n):
                raise ValueError(f"{x} is not an element for n={n}")
    return _key(kind, a) == _key(kind, b)


def classes(kind, n: int) -> list:
    kind = _kind(kind)
    blocks: dict = {}
    for e in enumerate_elements(n):
        blocks.setdefault(_key(kind, e), []).append(e)
    out = [sorted(b, key=element_key) for b in blocks.values()]
    out.sort(key=lambda b: element_key(b[0]))
    return out


@lru_cache(maxsize=8)
def _principal_sets(n: int):
    from .oracle import monoid_table

    t = monoid_table(n)
    prod = t.product
    size = len(t)
    left = [frozenset(prod[:, a].tolist()) for a in range(size)]
    right = [frozenset(prod[a, :].tolist()) for a in range(size)]
    two = []
    for a in range(size):
        s = set()
        for x in left[a]:
            s.update(prod[x, :].tolist())
        two.append(frozenset(s))
    return t, left, right, two


def green_oracle(kind, a: PartialInjection, b: PartialInjection, n: int) -> bool:
    """Relatedness from principal ideals computed on the multiplication table."""
    kind = _kind(kind)
    check_n(n)
    t, left, right, two = _principal_sets(n)
    try:
        i, j = t.index[a], t.index[b]
    except KeyError as exc:
        raise ValueError(f"{exc.args[0]} is not an element for n={n}") from None
    if kind is GreenRelationKind.L:
        return left[i] == left[j]
    if kind is GreenRelationKind.R:
        return right[i] == right[j]
    if kind is GreenRelationKind.H:
        return left[i] == left[j] and right[i] == right[j]
    return two[i] == two[j]


def egg_box(n: int) -> list:
    """Per J-class: sorted row keys (domains), column keys (images) and the
    element in each H-cell, keyed by (domain, image)."""
    out = []
    for block in classes(GreenRelationKind.J, n):
        rows = sorted({e.dom for e in block})
        cols = sorted({e.img for e in block})
        cells = {(e.dom, e.img): e for e in block}
        out.append({"rows": rows, "cols": cols, "cells": cells})
    return out
