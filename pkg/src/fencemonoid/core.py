"""Elements of the monoid of order-, fence- and parity-preserving partial injections.

Point sets are plain sorted tuples of 1-based points. Internally most
routines work on bitmasks where point ``i`` is bit ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

PointSet = tuple  # strictly increasing tuple of ints in [1..n]


def check_n(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"chain size must be a positive integer, got {n!r}")
    return n


def point_set(points: Iterable[int], n: int | None = None) -> PointSet:
    """Normalise ``points`` into a sorted tuple, validating range when ``n`` is given."""
    s = tuple(sorted(set(int(p) for p in points)))
    for p in s:
        if p < 1 or (n is not None and p > n):
            raise ValueError(f"point {p} outside [1..{n if n is not None else 'n'}]")
    return s


def to_mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << (p - 1)
    return m


def from_mask(mask: int) -> PointSet:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def subset_key(s: Sequence[int]):
    """Global order on point sets: size first, then lexicographic."""
    return (len(s), tuple(s))


def _check_range(points: Sequence[int], n: int, what: str) -> None:
    for p in points:
        if not isinstance(p, int) or p < 1 or p > n:
            raise ValueError(f"{what} contains {p!r}, outside [1..{n}]")


def _strictly_increasing(s: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(s, s[1:]))


@dataclass(frozen=True)
class PartialInjection:
    """An element given by its domain and image; the r-th smallest of ``dom``
    is sent to the r-th smallest of ``img``."""

    dom: PointSet
    img: PointSet

    def __post_init__(self):
        dom, img = tuple(self.dom), tuple(self.img)
        if len(dom) != len(img):
            raise ValueError(f"domain {dom} and image {img} differ in size")
        if not (_strictly_increasing(dom) and _strictly_increasing(img)):
            raise ValueError(f"domain and image must be strictly increasing: {dom}, {img}")
        if any(p < 1 for p in dom + img):
            raise ValueError("points are 1-based")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "img", img)

    @property
    def rank(self) -> int:
        return len(self.dom)

    @property
    def dom_mask(self) -> int:
        return to_mask(self.dom)

    @property
    def img_mask(self) -> int:
        return to_mask(self.img)

    def as_dict(self) -> dict:
        return dict(zip(self.dom, self.img))

    def __call__(self, x: int) -> int:
        try:
            return self.img[self.dom.index(x)]
        except ValueError:
            raise KeyError(x) from None

    def key(self):
        return (self.rank, self.dom, self.img)

    def __str__(self):
        if not self.dom:
            return "ε"
        return ",".join(map(str, self.dom)) + "->" + ",".join(map(str, self.img))


def element_key(a: PartialInjection):
    return a.key()


EMPTY = PartialInjection((), ())


def identity(points: Iterable[int]) -> PartialInjection:
    s = point_set(points)
    return PartialInjection(s, s)


def compose(a: PartialInjection, b: PartialInjection) -> PartialInjection:
    """Left-to-right product: x(ab) = (xa)b."""
    bmap = b.as_dict()
    dom, img = [], []
    for x, y in zip(a.dom, a.img):
        if y in bmap:
            dom.append(x)
            img.append(bmap[y])
    return PartialInjection(tuple(dom), tuple(img))


def inverse(a: PartialInjection) -> PartialInjection:
    return PartialInjection(a.img, a.dom)


# -- membership -------------------------------------------------------------


def is_member(d: Sequence[int], m: Sequence[int], n: int) -> bool:
    """Arithmetic membership test for the map ``d[i] -> m[i]``.

    ``d`` lists the domain in increasing order and ``m`` the images in the
    same positional order, so the four conditions can be checked directly:
    increasing images, equal parity of the first point, coinciding unit gaps
    and coinciding gap parities.
    """
    check_n(n)
    d, m = tuple(d), tuple(m)
    _check_range(d, n, "domain")
    _check_range(m, n, "image")
    if not _strictly_increasing(d):
        raise ValueError(f"domain {d} is not strictly increasing")
    if len(d) != len(m):
        return False
    if not d:
        return True
    if not _strictly_increasing(m):
        return False
    if (d[0] - m[0]) % 2:
        return False
    for i in range(len(d) - 1):
        gd, gm = d[i + 1] - d[i], m[i + 1] - m[i]
        if (gd == 1) != (gm == 1):
            return False
        if (gd % 2 == 0) != (gm % 2 == 0):
            return False
    return True


def fence_less(x: int, y: int, n: int) -> bool:
    """Covering relation x ≺ y of the zig-zag order 1 ≺ 2 ≻ 3 ≺ 4 ... on [1..n]."""
    if not (1 <= x <= n and 1 <= y <= n) or abs(x - y) != 1:
        return False
    # minimal points of the fence sit at odd positions
    return x % 2 == 1


def semantic_is_member(d: Sequence[int], m: Sequence[int], n: int) -> bool:
    """Membership straight from the definitions, independent of :func:`is_member`."""
    check_n(n)
    d, m = tuple(d), tuple(m)
    _check_range(d, n, "domain")
    _check_range(m, n, "image")
    if not _strictly_increasing(d):
        raise ValueError(f"domain {d} is not strictly increasing")
    if len(d) != len(m) or len(set(m)) != len(m):
        return False
    alpha = dict(zip(d, m))
    for x in d:
        if x % 2 != alpha[x] % 2:
            return False
    for x in d:
        for y in d:
            if x < y and not alpha[x] < alpha[y]:
                return False
            if fence_less(x, y, n) and not fence_less(alpha[x], alpha[y], n):
                return False
            if fence_less(alpha[x], alpha[y], n) and not fence_less(x, y, n):
                return False
    return True


# -- the similarity relation on subsets ------------------------------------


class Signature(NamedTuple):
    """Canonical key of similarity: size, parity of each point (1 odd, 0 even)
    and whether each consecutive gap equals 1."""

    size: int
    parities: tuple
    adjacency: tuple


def signature(s: Sequence[int]) -> Signature:
    return _signature(tuple(s))


@lru_cache(maxsize=1 << 16)
def _signature(s: tuple) -> Signature:
    return Signature(
        len(s),
        tuple(x % 2 for x in s),
        tuple(b - a == 1 for a, b in zip(s, s[1:])),
    )


def sim(a: Sequence[int], b: Sequence[int]) -> bool:
    return signature(a) == signature(b)


@lru_cache(maxsize=None)
def sim_classes(n: int) -> tuple:
    """All similarity classes of subsets of [1..n], each a tuple of point sets
    in global order; classes ordered by their least member."""
    check_n(n)
    by_sig: dict = {}
    for k in range(n + 1):
        for s in combinations(range(1, n + 1), k):
            by_sig.setdefault(signature(s), []).append(s)
    classes = [tuple(sorted(c, key=subset_key)) for c in by_sig.values()]
    classes.sort(key=lambda c: subset_key(c[0]))
    return tuple(classes)


@lru_cache(maxsize=None)
def _class_index(n: int) -> dict:
    return {signature(c[0]): i for i, c in enumerate(sim_classes(n))}


def sim_class(s: Sequence[int], n: int) -> list:
    s = point_set(s, n)
    return list(sim_classes(n)[_class_index(n)[signature(s)]])


@lru_cache(maxsize=None)
def _elements(n: int) -> tuple:
    els = [PartialInjection(a, b) for c in sim_classes(n) for a in c for b in c]
    els.sort(key=element_key)
    return tuple(els)


def enumerate_elements(n: int) -> list:
    """One element per ordered pair of similar subsets, in (rank, dom, img) order."""
    return list(_elements(check_n(n)))


def count_by_classes(n: int) -> int:
    return sum(len(c) ** 2 for c in sim_classes(check_n(n)))


def is_element(a: PartialInjection, n: int) -> bool:
    return is_member(a.dom, a.img, n)
