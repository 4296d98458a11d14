"""JSON forms of elements, ideal families and descriptors."""

from __future__ import annotations

from .core import PartialInjection, element_key
from .ideals import IdealFamily
from .maxsub import BCSet, BlockFamily, MaxSubDescriptor


def _ints(xs, what):
    if not isinstance(xs, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in xs):
        raise ValueError(f"{what} must be a list of integers, got {xs!r}")
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise ValueError(f"{what} must be strictly increasing, got {xs!r}")
    return tuple(xs)


def element_to_json(a: PartialInjection) -> dict:
    return {"dom": list(a.dom), "img": list(a.img)}


def element_from_json(obj: dict) -> PartialInjection:
    if not isinstance(obj, dict) or set(obj) != {"dom", "img"}:
        raise ValueError(f"element object needs exactly 'dom' and 'img': {obj!r}")
    return PartialInjection(_ints(obj["dom"], "dom"), _ints(obj["img"], "img"))


def family_to_json(f: IdealFamily) -> dict:
    return {"n": f.n, "members": [list(m) for m in f.members]}


def family_from_json(obj: dict) -> IdealFamily:
    if not isinstance(obj, dict) or set(obj) != {"n", "members"}:
        raise ValueError(f"family object needs exactly 'n' and 'members': {obj!r}")
    return IdealFamily(obj["n"], tuple(_ints(m, "member") for m in obj["members"]))


def _block_to_json(b: BlockFamily) -> list:
    return [list(m) for m in b.members]


def descriptor_to_json(d: MaxSubDescriptor) -> dict:
    out: dict = {"type": d.type}
    if d.type == 1:
        out["g"] = list(d.g)
    elif d.type == 2:
        out["y1"] = list(d.y1)
        out["t"] = d.t
        out["block"] = _block_to_json(d.block)
    else:
        out["bc"] = {
            "blocks": [_block_to_json(b) for b in d.bc.blocks],
            "block_kinds": [b.kind for b in d.bc.blocks],
            "q1_indices": list(d.q1),
            "q2_indices": list(d.q2),
        }
    out["removed"] = [element_to_json(e) for e in d.removed]
    return out


def descriptor_from_json(obj: dict) -> MaxSubDescriptor:
    kind = obj.get("type")
    removed = tuple(sorted((element_from_json(e) for e in obj.get("removed", [])), key=element_key))
    if kind == 1:
        return MaxSubDescriptor(1, g=_ints(obj["g"], "g"), removed=removed)
    if kind == 2:
        y1 = _ints(obj["y1"], "y1")
        block = BlockFamily("B", tuple(_ints(m, "block member") for m in obj["block"]), (y1, obj["t"]))
        return MaxSubDescriptor(2, y1=y1, t=obj["t"], block=block, removed=removed)
    if kind == 3:
        bc = obj["bc"]
        kinds = bc.get("block_kinds") or ["?"] * len(bc["blocks"])
        blocks = tuple(
            BlockFamily(k, tuple(_ints(m, "block member") for m in members))
            for k, members in zip(kinds, bc["blocks"])
        )
        return MaxSubDescriptor(
            3,
            bc=BCSet(blocks[0] if blocks else None, blocks),
            q1=tuple(bc["q1_indices"]),
            q2=tuple(bc["q2_indices"]),
            removed=removed,
        )
    raise ValueError(f"unknown descriptor type {kind!r}")
