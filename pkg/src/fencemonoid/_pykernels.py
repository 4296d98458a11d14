"""Pure-Python versions of the hot loops. Same signatures as ``_ckernels``."""

import numpy as np

NAME = "python"


def compose_masks(d, m, e, f):
    """Product of (d -> m) and (e -> f) given as bitmasks; returns (dom, img)."""
    dd = 0
    mm, x = m, d
    while mm:
        lm = mm & -mm
        ld = x & -x
        if lm & e:
            dd |= ld
        mm ^= lm
        x ^= ld
    ii = 0
    ee, y = e, f
    while ee:
        le = ee & -ee
        lf = y & -y
        if le & m:
            ii |= lf
        ee ^= le
        y ^= lf
    return dd, ii


def product_table(doms, imgs, n):
    index = {(int(a), int(b)): i for i, (a, b) in enumerate(zip(doms, imgs))}
    size = len(index)
    out = np.empty((size, size), dtype=np.int32)
    for i in range(size):
        d, m = int(doms[i]), int(imgs[i])
        row = out[i]
        for j in range(size):
            key = compose_masks(d, m, int(doms[j]), int(imgs[j]))
            try:
                row[j] = index[key]
            except KeyError:
                raise ValueError("element list is not closed under composition") from None
    return out


def closure(product, seed):
    prod = product.tolist() if hasattr(product, "tolist") else product
    elems = list(dict.fromkeys(int(s) for s in seed))
    inside = set(elems)
    k = 0
    while k < len(elems):
        x = elems[k]
        row = prod[x]
        for j in range(k + 1):
            y = elems[j]
            for p in (row[y], prod[y][x]):
                if p not in inside:
                    inside.add(p)
                    elems.append(p)
        k += 1
    return sorted(elems)


def is_closed(product, members):
    prod = product.tolist() if hasattr(product, "tolist") else product
    inside = set(int(x) for x in members)
    for x in inside:
        row = prod[x]
        for y in inside:
            if row[y] not in inside:
                return False
    return True


def factor_free(product, members, ranks):
    """Members admitting no product a*b with both factor ranks above the result's."""
    prod = product.tolist() if hasattr(product, "tolist") else product
    rk = [int(r) for r in ranks]
    members = [int(x) for x in members]
    hit = set()
    for a in members:
        row = prod[a]
        ra = rk[a]
        for b in members:
            p = row[b]
            if ra > rk[p] and rk[b] > rk[p]:
                hit.add(p)
    return [x for x in members if x not in hit]


def strategy_a(product, members):
    """Complements of all maximal subsemigroups of ``members`` by scanning every subset."""
    prod = product.tolist() if hasattr(product, "tolist") else product
    members = [int(x) for x in members]
    k = len(members)
    if k == 0:
        return []
    local = {x: i for i, x in enumerate(members)}
    outside = 1 << k  # never contained in a subset mask
    cross = [[0] * k for _ in range(k)]
    for i, x in enumerate(members):
        for j, y in enumerate(members):
            p = local.get(prod[x][y])
            cross[i][j] = outside if p is None else 1 << p
    size = 1 << k
    full = size - 1
    # need[mask] = OR of product bits over all ordered pairs inside mask
    need = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        li = low.bit_length() - 1
        acc = need[mask ^ low]
        row = cross[li]
        rest = mask
        while rest:
            lb = rest & -rest
            j = lb.bit_length() - 1
            acc |= row[j] | cross[j][li]
            rest ^= lb
        need[mask] = acc
    closed_proper = bytearray(size)
    for mask in range(1, full):
        if need[mask] & ~mask == 0:
            closed_proper[mask] = 1
    # has_sup[mask]: some closed proper set contains mask
    has_sup = bytearray(size)
    for mask in range(full, 0, -1):
        if closed_proper[mask]:
            has_sup[mask] = 1
            continue
        comp = full ^ mask
        while comp:
            b = comp & -comp
            if has_sup[mask | b]:
                has_sup[mask] = 1
                break
            comp ^= b
    out = []
    for mask in range(1, full):
        if not closed_proper[mask]:
            continue
        comp = full ^ mask
        maximal = True
        c = comp
        while c:
            b = c & -c
            if has_sup[mask | b]:
                maximal = False
                break
            c ^= b
        if maximal:
            out.append(sorted(members[i] for i in range(k) if comp >> i & 1))
    return out


def _layer_requirements(prod, members, ranks, layer):
    pos = {x: i for i, x in enumerate(layer)}
    r = ranks[layer[0]]
    reqs = [set() for _ in layer]
    for a in members:
        if ranks[a] < r:
            continue
        row = prod[a]
        for b in members:
            if ranks[b] < r:
                continue
            i = pos.get(row[b])
            if i is None:
                continue
            req = 0
            if a in pos:
                req |= 1 << pos[a]
            if b in pos:
                req |= 1 << pos[b]
            reqs[i].add(req)
    return [sorted(s) for s in reqs]


def layer_requirements(product, members, ranks, layer):
    """For each layer element, the distinct sets of layer members any factorisation uses.

    An empty requirement (0) means the element is a product of higher-rank members.
    """
    prod = product.tolist() if hasattr(product, "tolist") else product
    return _layer_requirements(prod, [int(x) for x in members], [int(r) for r in ranks],
                               [int(x) for x in layer])


def strategy_b(product, members, ranks, layer):
    """Complements T within one rank layer such that members minus T is a maximal subsemigroup.

    Every member outside ``layer`` is kept, so only products landing in the
    layer matter: a factorisation of y survives in members minus T unless one
    of its layer factors lies in T.
    """
    prod = product.tolist() if hasattr(product, "tolist") else product
    members = [int(x) for x in members]
    ranks = [int(r) for r in ranks]
    layer = [int(x) for x in layer]
    if not layer:
        return []
    reqs = _layer_requirements(prod, members, ranks, layer)
    k = len(layer)
    full = (1 << k) - 1
    free = [i for i in range(k) if 0 not in reqs[i]]
    keep_all = len(members) == k
    out = []
    f = len(free)
    for sel in range(1, 1 << f):
        t = 0
        for j in range(f):
            if sel >> j & 1:
                t |= 1 << free[j]
        if keep_all and t == full:
            continue
        ok = True
        rest = t
        while rest and ok:
            b = rest & -rest
            for req in reqs[b.bit_length() - 1]:
                if not req & t:
                    ok = False
                    break
            rest ^= b
        if not ok:
            continue
        if _generates(reqs, t, full):
            out.append(sorted(layer[i] for i in range(k) if t >> i & 1))
    return out


def _generates(reqs, t, full):
    kept = full ^ t
    rest = t
    while rest:
        b = rest & -rest
        gen = kept | b
        changed = True
        while changed and gen & t != t:
            changed = False
            missing = t & ~gen
            while missing:
                mb = missing & -missing
                for req in reqs[mb.bit_length() - 1]:
                    if req & ~gen == 0:
                        gen |= mb
                        changed = True
                        break
                missing ^= mb
        if gen & t != t:
            return False
        rest ^= b
    return True
