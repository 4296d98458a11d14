"""Maximal subsemigroups of an ideal.

Every maximal subsemigroup of a non-trivial ideal ``I`` is ``I`` minus a set
``T`` of equal-rank elements that cannot be written as a product of two
elements of larger rank. ``T`` is described by blocks of similar point sets:

* singleton blocks ``{g}`` (the family ``C``),
* removal families ``{y^[t] : y similar to y1}`` for a similarity class of
  at least two sets of size >= 2 and a fixed position ``t`` (the family ``B``).

A maximal subsemigroup then comes in one of three shapes: drop all elements
with domain and image in a lone singleton block (type 1), in a lone removal
family (type 2), or drop the elements going from one part of an ordered split
of a group of mutually similar blocks to the other part (type 3).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Sequence

from . import kernels
from .core import PartialInjection, element_key, signature, sim, subset_key
from .ideals import IdealFamily, elements_of_ideal


# -- removals -----------------------------------------------------------------


def remove_at(y: Sequence[int], t: int) -> tuple:
    """``y`` without its ``t``-th smallest point (1-based); needs ``|y| >= 2``."""
    y = tuple(y)
    if len(y) < 2:
        raise ValueError(f"removal needs a set of size >= 2, got {y}")
    if not 1 <= t <= len(y):
        raise ValueError(f"position {t} outside 1..{len(y)}")
    return y[: t - 1] + y[t:]


def _drop(y: tuple, t: int) -> tuple:
    return y[: t - 1] + y[t:]


def sqsubset(x: Sequence[int], y: Sequence[int]) -> bool:
    x, y = tuple(x), tuple(y)
    if len(y) < 2 or len(x) != len(y) - 1:
        return False
    return any(remove_at(y, t) == x for t in range(1, len(y) + 1))


# -- blocks -------------------------------------------------------------------


@dataclass(frozen=True)
class BlockFamily:
    """A block of point sets. Blocks compare by their members only."""

    kind: str = field(compare=False)  # "C" or "B"
    members: tuple
    origin: tuple = field(default=(), compare=False)  # B: (least class member, t)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(map(tuple, self.members)), key=subset_key)))


def _block_key(b: BlockFamily):
    return tuple(subset_key(m) for m in b.members)


@dataclass(frozen=True)
class BCSet:
    anchor: BlockFamily = field(compare=False)
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(set(self.blocks), key=_block_key)))


def _classes_in(f: IdealFamily) -> dict:
    by_sig: dict = {}
    for s in f.members:
        by_sig.setdefault(signature(s), []).append(s)
    return by_sig


def class_in_family(y: Sequence[int], f: IdealFamily) -> list:
    """Members of ``f`` similar to ``y``."""
    return list(_classes_in(f).get(signature(tuple(y)), []))


def removal_family(gamma1: Sequence[int], f: IdealFamily, t: int | None = None) -> BlockFamily:
    """Removals ``y^[t]`` over the members ``y`` of ``f`` similar to ``gamma1``.

    With ``t=None`` every position is used at once.
    """
    cls = class_in_family(gamma1, f)
    k = len(tuple(gamma1))
    positions = range(1, k + 1) if t is None else [t]
    members = {remove_at(y, p) for y in cls for p in positions}
    return BlockFamily("B", tuple(members), (min(cls, key=subset_key), t) if cls else ())


def _supersets(g: tuple, f: IdealFamily, n: int):
    gs = set(g)
    for p in range(1, n + 1):
        if p not in gs:
            y = tuple(sorted(g + (p,)))
            if len(y) >= 2 and y in f:
                yield y


def compute_C(f: IdealFamily) -> list:
    """Singleton blocks ``{g}``: ``g`` is a one-point removal of some member
    whose similarity class in ``f`` is just itself, or of no member at all."""
    classes = _classes_in(f)
    out = []
    for g in f.members:
        sups = list(_supersets(g, f, f.n))
        lone = any(len(classes[signature(y)]) == 1 for y in sups)
        if lone or not sups:
            out.append(BlockFamily("C", (g,)))
    return sorted(out, key=_block_key)


def compute_B(f: IdealFamily) -> list:
    """Removal families, one per similarity class (of >= 2 sets of size >= 2)
    and removal position."""
    out = {}
    for cls in _classes_in(f).values():
        k = len(cls[0])
        if k < 2 or len(cls) < 2:
            continue
        for t in range(1, k + 1):
            b = BlockFamily("B", tuple(_drop(y, t) for y in cls), (cls[0], t))
            out.setdefault(b, b)
    return sorted(out, key=_block_key)


def _all_blocks(f: IdealFamily) -> list:
    blocks = {}
    for b in compute_C(f) + compute_B(f):
        blocks.setdefault(b, b)
    return sorted(blocks, key=_block_key)


def _block_sig(b: BlockFamily):
    """The common signature of the members, or None if they are not all similar."""
    sigs = {signature(m) for m in b.members}
    return sigs.pop() if len(sigs) == 1 else None


def _by_sig(blocks) -> dict:
    groups: dict = {}
    for b in blocks:
        groups.setdefault(_block_sig(b), []).append(b)
    return groups


def compute_BC(anchor: BlockFamily, f: IdealFamily, blocks: list | None = None) -> BCSet:
    """Blocks of ``f`` whose every member is similar to every member of ``anchor``."""
    if blocks is None:
        blocks = _all_blocks(f)
    sig = _block_sig(anchor)
    if sig is None:
        return BCSet(anchor, ())
    return BCSet(anchor, tuple(d for d in blocks if _block_sig(d) == sig))


# -- elements without rank-dropping factorisations -----------------------------


def iu_by_shape(f: IdealFamily) -> frozenset:
    """Elements of the ideal that are not of the form ``y2^[r] -> z2^[s]`` built
    from two members ``y1, z1`` of equal size sharing all but one point.

    Sizes 1 are included (removing the only point gives the empty set), which
    is what makes the empty map count as a product of two disjoint rank-1 maps.
    """
    classes = _classes_in(f)
    by_size: dict = {}
    for s in f.members:
        by_size.setdefault(len(s), []).append(s)
    produced = set()
    for k, sets in by_size.items():
        if k < 1:
            continue
        for y1 in sets:
            ys = set(y1)
            for z1 in sets:
                if z1 == y1:
                    continue
                common = tuple(p for p in y1 if p in z1)
                if len(common) != k - 1:
                    continue
                r = next(i for i, p in enumerate(y1, 1) if p not in z1)
                s = next(i for i, p in enumerate(z1, 1) if p not in ys)
                for y2 in classes[signature(y1)]:
                    a = _drop(y2, r)
                    if not sim(a, common):
                        continue
                    for z2 in classes[signature(z1)]:
                        b = _drop(z2, s)
                        if sim(b, common):
                            produced.add((a, b))
    return frozenset(e for e in elements_of_ideal(f) if (e.dom, e.img) not in produced)


def iu_by_factorization(f: IdealFamily) -> frozenset:
    """Elements with no factorisation ``θδ`` inside the ideal where both factors
    have larger rank than the product, by exhaustive search."""
    from .oracle import monoid_table

    t = monoid_table(f.n)
    idx = t.indices(elements_of_ideal(f))
    return frozenset(t.elements[i] for i in kernels.factor_free(t.product, idx, t.ranks))


class IuMismatch(AssertionError):
    pass


def compute_Iu(f: IdealFamily, check: bool = True) -> frozenset:
    found = iu_by_factorization(f)
    if check:
        other = iu_by_shape(f)
        if other != found:
            raise IuMismatch(
                f"shape and factorisation disagree on {sorted(map(str, found ^ other))}"
            )
    return found


# -- descriptors --------------------------------------------------------------


@dataclass(frozen=True)
class MaxSubDescriptor:
    type: int
    g: tuple | None = None
    y1: tuple | None = None
    t: int | None = None
    block: BlockFamily | None = None
    bc: BCSet | None = None
    q1: tuple = ()
    q2: tuple = ()
    removed: tuple = field(default=(), compare=False)

    def describe(self) -> str:
        if self.type == 1:
            return f"type 1, g={set(self.g) or '{}'}"
        if self.type == 2:
            return f"type 2, y1={set(self.y1)}, t={self.t}"
        fmt = lambda idx: [[set(m) or "{}" for m in self.bc.blocks[i].members] for i in idx]
        return f"type 3, Q1={fmt(self.q1)}, Q2={fmt(self.q2)}"


def _pairs(dom_sets, img_sets) -> frozenset:
    return frozenset(
        PartialInjection(a, b) for a in set(dom_sets) for b in set(img_sets) if sim(a, b)
    )


def removed_set_T(descriptor: MaxSubDescriptor, f: IdealFamily) -> frozenset:
    if descriptor.type == 1:
        return _pairs([descriptor.g], [descriptor.g])
    if descriptor.type == 2:
        members = descriptor.block.members
        return _pairs(members, members)
    if descriptor.type == 3:
        blocks = descriptor.bc.blocks
        left = [m for i in descriptor.q1 for m in blocks[i].members]
        right = [m for i in descriptor.q2 for m in blocks[i].members]
        return _pairs(left, right)
    raise ValueError(f"unknown descriptor type {descriptor.type!r}")


def _sorted_elements(es) -> tuple:
    return tuple(sorted(es, key=element_key))


def classify_maximal(f: IdealFamily, check_iu: bool = False) -> list:
    """Descriptors of all maximal subsemigroups of the ideal, one per removed set."""
    if f.is_trivial:
        raise ValueError("the trivial ideal {ε} has no maximal subsemigroups to classify")
    iu = compute_Iu(f, check=check_iu)
    c_blocks = compute_C(f)
    b_blocks = compute_B(f)
    groups = _by_sig(_all_blocks(f))
    groups.pop(None, None)
    # a block's BC-set is its signature group
    bc_of = {b: BCSet(b, tuple(g)) for g in groups.values() for b in g}
    seen = set()
    out = []

    def emit(desc, removed):
        if removed and removed <= iu and removed not in seen:
            seen.add(removed)
            out.append(replace(desc, removed=_sorted_elements(removed)))

    for c in c_blocks:
        if c in bc_of and len(bc_of[c].blocks) == 1:
            d = MaxSubDescriptor(1, g=c.members[0])
            emit(d, removed_set_T(d, f))
    for b in b_blocks:
        if b in bc_of and len(bc_of[b].blocks) == 1:
            gamma1, t = b.origin
            d = MaxSubDescriptor(2, y1=gamma1, t=t, block=b)
            emit(d, removed_set_T(d, f))
    bcsets = {bc: bc for bc in bc_of.values()}
    for bc in sorted(bcsets, key=lambda x: tuple(_block_key(b) for b in x.blocks)):
        k = len(bc.blocks)
        for bits in range(1, (1 << k) - 1):
            q1 = tuple(i for i in range(k) if bits >> i & 1)
            q2 = tuple(i for i in range(k) if not bits >> i & 1)
            d = MaxSubDescriptor(3, bc=bc, q1=q1, q2=q2)
            emit(d, removed_set_T(d, f))
    out.sort(key=lambda d: (d.removed[0].rank, d.type, tuple(element_key(e) for e in d.removed)))
    return out


def materialize(descriptor: MaxSubDescriptor, f: IdealFamily) -> list:
    removed = removed_set_T(descriptor, f)
    return [e for e in elements_of_ideal(f) if e not in removed]


@lru_cache(maxsize=None)
def type_counts(n: int) -> dict:
    """How many descriptors of each type occur over all non-trivial ideals at ``n``."""
    from .ideals import iter_ideals

    counts = {1: 0, 2: 0, 3: 0}
    for f in iter_ideals(n):
        if f.is_trivial:
            continue
        for d in classify_maximal(f):
            counts[d.type] += 1
    return counts
