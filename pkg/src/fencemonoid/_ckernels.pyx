# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops. Same signatures as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint8_t, uint32_t, uint64_t, int32_t
from libc.stdlib cimport malloc, calloc, free

cnp.import_array()

NAME = "cython"


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _ctz64(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline void _compose(uint64_t d, uint64_t m, uint64_t e, uint64_t f,
                          uint64_t *od, uint64_t *oi) nogil:
    cdef uint64_t dd = 0, ii = 0, lm, ld, le, lf
    cdef uint64_t mid = m & e
    while m:
        lm = m & (~m + 1)
        ld = d & (~d + 1)
        if lm & e:
            dd |= ld
        m ^= lm
        d ^= ld
    while e:
        le = e & (~e + 1)
        lf = f & (~f + 1)
        if le & mid:
            ii |= lf
        e ^= le
        f ^= lf
    od[0] = dd
    oi[0] = ii


def compose_masks(d, m, e, f):
    cdef uint64_t od = 0, oi = 0
    _compose(d, m, e, f, &od, &oi)
    return int(od), int(oi)


def product_table(doms, imgs, int n):
    cdef Py_ssize_t size = len(doms), i, j
    cdef cnp.int64_t[:] dv = np.asarray(doms, dtype=np.int64)
    cdef cnp.int64_t[:] iv = np.asarray(imgs, dtype=np.int64)
    if 2 * n > 30:
        raise ValueError("product tables are limited to n <= 15")
    lookup_arr = np.full(1 << (2 * n), -1, dtype=np.int32)
    cdef int32_t[:] lookup = lookup_arr
    for i in range(size):
        lookup[(dv[i] << n) | iv[i]] = <int32_t>i
    out = np.empty((size, size), dtype=np.int32)
    cdef int32_t[:, :] ov = out
    cdef uint64_t od, oi
    cdef int32_t p
    cdef bint bad = False
    with nogil:
        for i in range(size):
            for j in range(size):
                _compose(dv[i], iv[i], dv[j], iv[j], &od, &oi)
                p = lookup[(od << n) | oi]
                if p < 0:
                    bad = True
                ov[i, j] = p
    if bad:
        raise ValueError("element list is not closed under composition")
    return out


def closure(product, seed):
    cdef int32_t[:, :] prod = np.ascontiguousarray(product, dtype=np.int32)
    cdef Py_ssize_t size = prod.shape[0]
    cdef int32_t *elems = <int32_t *>malloc(size * sizeof(int32_t))
    cdef uint8_t *inside = <uint8_t *>calloc(size, 1)
    cdef Py_ssize_t count = 0, k = 0, j
    cdef int32_t x, y, p
    try:
        for s in seed:
            x = s
            if not inside[x]:
                inside[x] = 1
                elems[count] = x
                count += 1
        with nogil:
            while k < count:
                x = elems[k]
                for j in range(k + 1):
                    y = elems[j]
                    p = prod[x, y]
                    if not inside[p]:
                        inside[p] = 1
                        elems[count] = p
                        count += 1
                    p = prod[y, x]
                    if not inside[p]:
                        inside[p] = 1
                        elems[count] = p
                        count += 1
                k += 1
        return [i for i in range(size) if inside[i]]
    finally:
        free(elems)
        free(inside)


def is_closed(product, members):
    cdef int32_t[:, :] prod = np.ascontiguousarray(product, dtype=np.int32)
    cdef Py_ssize_t size = prod.shape[0], i, j, m
    mem_arr = np.asarray(list(members), dtype=np.int32)
    cdef int32_t[:] mem = mem_arr
    m = mem.shape[0]
    flags_arr = np.zeros(size, dtype=np.uint8)
    cdef uint8_t[:] flags = flags_arr
    for i in range(m):
        flags[mem[i]] = 1
    cdef bint ok = True
    with nogil:
        for i in range(m):
            for j in range(m):
                if not flags[prod[mem[i], mem[j]]]:
                    ok = False
                    break
            if not ok:
                break
    return ok


def factor_free(product, members, ranks):
    cdef int32_t[:, :] prod = np.ascontiguousarray(product, dtype=np.int32)
    mem_arr = np.asarray(list(members), dtype=np.int32)
    cdef int32_t[:] mem = mem_arr
    cdef cnp.int64_t[:] rk = np.asarray(ranks, dtype=np.int64)
    cdef Py_ssize_t m = mem.shape[0], i, j
    hit_arr = np.zeros(prod.shape[0], dtype=np.uint8)
    cdef uint8_t[:] hit = hit_arr
    cdef int32_t a, b, p
    with nogil:
        for i in range(m):
            a = mem[i]
            for j in range(m):
                b = mem[j]
                p = prod[a, b]
                if rk[a] > rk[p] and rk[b] > rk[p]:
                    hit[p] = 1
    return [int(mem[i]) for i in range(m) if not hit[mem[i]]]


def strategy_a(product, members):
    cdef int32_t[:, :] prod = np.ascontiguousarray(product, dtype=np.int32)
    members = [int(x) for x in members]
    cdef int k = len(members)
    if k == 0:
        return []
    if k > 30:
        raise ValueError("subset scan limited to 30 elements")
    local = {x: i for i, x in enumerate(members)}
    cdef uint64_t outside = (<uint64_t>1) << k
    cross_arr = np.zeros((k, k), dtype=np.uint64)
    cdef uint64_t[:, :] cross = cross_arr
    cdef int i, j, li
    for i in range(k):
        for j in range(k):
            p = local.get(int(prod[members[i], members[j]]))
            cross[i, j] = outside if p is None else (<uint64_t>1) << <int>p
    cdef uint64_t size = (<uint64_t>1) << k
    cdef uint64_t full = size - 1
    cdef uint64_t *need = <uint64_t *>malloc(size * sizeof(uint64_t))
    cdef uint8_t *cp = <uint8_t *>calloc(size, 1)
    cdef uint8_t *sup = <uint8_t *>calloc(size, 1)
    cdef uint64_t mask, low, acc, rest, lb, comp, b
    cdef bint maximal
    out_masks = []
    try:
        with nogil:
            need[0] = 0
            for mask in range(1, size):
                low = mask & (~mask + 1)
                li = _ctz64(low)
                acc = need[mask ^ low]
                rest = mask
                while rest:
                    lb = rest & (~rest + 1)
                    j = _ctz64(lb)
                    acc |= cross[li, j] | cross[j, li]
                    rest ^= lb
                need[mask] = acc
            for mask in range(1, full):
                if need[mask] & ~mask == 0:
                    cp[mask] = 1
            mask = full
            while mask > 0:
                if cp[mask]:
                    sup[mask] = 1
                else:
                    comp = full ^ mask
                    while comp:
                        b = comp & (~comp + 1)
                        if sup[mask | b]:
                            sup[mask] = 1
                            break
                        comp ^= b
                mask -= 1
        for mask in range(1, full):
            if not cp[mask]:
                continue
            comp = full ^ mask
            maximal = True
            rest = comp
            while rest:
                b = rest & (~rest + 1)
                if sup[mask | b]:
                    maximal = False
                    break
                rest ^= b
            if maximal:
                out_masks.append(comp)
    finally:
        free(need)
        free(cp)
        free(sup)
    return [sorted(members[i] for i in range(k) if (c >> i) & 1) for c in out_masks]


def layer_requirements(product, members, ranks, layer):
    cdef int32_t[:, :] prod = np.ascontiguousarray(product, dtype=np.int32)
    members = [int(x) for x in members]
    layer = [int(x) for x in layer]
    cdef cnp.int64_t[:] rk = np.asarray(ranks, dtype=np.int64)
    cdef Py_ssize_t size = prod.shape[0]
    pos_arr = np.full(size, -1, dtype=np.int32)
    cdef int32_t[:] pos = pos_arr
    cdef int i
    for i in range(len(layer)):
        pos[layer[i]] = i
    cdef long r = rk[layer[0]]
    mem_arr = np.asarray([x for x in members if rk[x] >= r], dtype=np.int32)
    cdef int32_t[:] mem = mem_arr
    cdef Py_ssize_t m = mem.shape[0], ai, bi
    cdef int32_t a, b, t
    cdef uint64_t req
    reqs = [set() for _ in layer]
    for ai in range(m):
        a = mem[ai]
        for bi in range(m):
            b = mem[bi]
            t = pos[prod[a, b]]
            if t < 0:
                continue
            req = 0
            if pos[a] >= 0:
                req |= (<uint64_t>1) << pos[a]
            if pos[b] >= 0:
                req |= (<uint64_t>1) << pos[b]
            reqs[t].add(req)
    return [sorted(s) for s in reqs]


cdef bint _generates(uint64_t **reqs, int *nreq, int k, uint64_t t, uint64_t full) nogil:
    cdef uint64_t kept = full ^ t, rest = t, b, gen, missing, mb
    cdef bint changed
    cdef int i, q
    while rest:
        b = rest & (~rest + 1)
        gen = kept | b
        changed = True
        while changed and (gen & t) != t:
            changed = False
            missing = t & ~gen
            while missing:
                mb = missing & (~missing + 1)
                i = _ctz64(mb)
                for q in range(nreq[i]):
                    if reqs[i][q] & ~gen == 0:
                        gen |= mb
                        changed = True
                        break
                missing ^= mb
        if (gen & t) != t:
            return False
        rest ^= b
    return True


def strategy_b(product, members, ranks, layer):
    members = [int(x) for x in members]
    layer = [int(x) for x in layer]
    if not layer:
        return []
    cdef int k = len(layer)
    if k > 62:
        raise ValueError("layer scan limited to 62 elements")
    py_reqs = layer_requirements(product, members, ranks, layer)
    cdef uint64_t full = ((<uint64_t>1) << k) - 1
    free_pos = [i for i in range(k) if 0 not in py_reqs[i]]
    cdef int f = len(free_pos)
    if f > 40:
        raise ValueError("layer scan limited to 40 candidates")
    cdef bint keep_all = len(members) == k
    cdef uint64_t **reqs = <uint64_t **>malloc(k * sizeof(uint64_t *))
    cdef int *nreq = <int *>malloc(k * sizeof(int))
    cdef int *freev = <int *>malloc((f + 1) * sizeof(int))
    cdef int i, q, j
    for i in range(k):
        nreq[i] = len(py_reqs[i])
        reqs[i] = <uint64_t *>malloc((nreq[i] + 1) * sizeof(uint64_t))
        for q in range(nreq[i]):
            reqs[i][q] = py_reqs[i][q]
    for j in range(f):
        freev[j] = free_pos[j]
    cdef uint64_t sel, t, rest, b
    cdef uint64_t nsel = (<uint64_t>1) << f
    cdef bint ok
    found = []
    try:
        for sel in range(1, nsel):
            t = 0
            for j in range(f):
                if (sel >> j) & 1:
                    t |= (<uint64_t>1) << freev[j]
            if keep_all and t == full:
                continue
            ok = True
            rest = t
            while rest and ok:
                b = rest & (~rest + 1)
                i = _ctz64(b)
                for q in range(nreq[i]):
                    if reqs[i][q] & t == 0:
                        ok = False
                        break
                rest ^= b
            if not ok:
                continue
            if _generates(reqs, nreq, k, t, full):
                found.append(t)
    finally:
        for i in range(k):
            free(reqs[i])
        free(reqs)
        free(nreq)
        free(freev)
    return [sorted(layer[i] for i in range(k) if (t >> i) & 1) for t in found]
