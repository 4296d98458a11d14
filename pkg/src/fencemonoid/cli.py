"""Command-line entry point: ``fencemonoid <command> --n N [options]``."""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import green as green_mod
from .core import count_by_classes, enumerate_elements, sim_classes
from .ideals import elements_of_ideal, enumerate_ideals, minimal_ideals, parse_ideal_spec
from .maxsub import IuMismatch, classify_maximal, compute_Iu, materialize
from .oracle import Budget, BudgetExceeded, OracleDisagreement, brute_maximal, monoid_table
from .serialize import descriptor_to_json, element_to_json, family_to_json

COMMANDS = ("enumerate", "classes", "green", "ideals", "maxsub", "verify", "count")


class UsageError(Exception):
    pass


def _pts(s) -> str:
    return " ".join(map(str, s))


def _elem_row(e):
    return [e.rank, _pts(e.dom), _pts(e.img)]


def _write_csv(out, header, rows):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _write_json(out, obj):
    json.dump(obj, out, indent=2, ensure_ascii=False)
    out.write("\n")


def _budget(args) -> Budget:
    if args.budget is not None:
        return Budget.parse(args.budget)
    return Budget.from_env()


# -- commands -----------------------------------------------------------------


def cmd_enumerate(args, out):
    elems = enumerate_elements(args.n)
    if args.format == "csv":
        _write_csv(out, ["rank", "dom", "img"], map(_elem_row, elems))
    else:
        _write_json(out, [element_to_json(e) for e in elems])
    return 0


def cmd_classes(args, out):
    cls = sim_classes(args.n)
    if args.format == "csv":
        _write_csv(out, ["class", "size", "members"], (
            [i, len(c[0]), ";".join(_pts(s) for s in c)] for i, c in enumerate(cls)
        ))
    else:
        _write_json(out, [[list(s) for s in c] for c in cls])
    return 0


def _dot_egg_box(n: int) -> str:
    lines = [f'digraph "egg_box_{n}" {{', "  node [shape=box];", "  rankdir=TB;"]
    for j, box in enumerate(green_mod.egg_box(n)):
        lines.append(f"  subgraph cluster_J{j} {{")
        lines.append(f'    label="J{j}: rank {len(box["rows"][0])}";')
        rows = []
        for r, dom in enumerate(box["rows"]):
            cells = []
            for c, img in enumerate(box["cols"]):
                e = box["cells"].get((dom, img))
                name = f"J{j}_{r}_{c}"
                label = str(e) if e is not None else ""
                lines.append(f'    {name} [label="{label}"];')
                cells.append(name)
            rows.append(cells)
        # invisible edges keep the H-cells on a grid
        for cells in rows:
            if len(cells) > 1:
                lines.append(f"    {{ rank=same; {' -> '.join(cells)} [style=invis]; }}")
        for r in range(len(rows) - 1):
            lines.append(f"    {rows[r][0]} -> {rows[r + 1][0]} [style=invis];")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_green(args, out):
    if args.format == "dot":
        out.write(_dot_egg_box(args.n))
        return 0
    blocks = green_mod.classes(args.kind, args.n)
    if args.format == "csv":
        _write_csv(out, ["block", "rank", "dom", "img"], (
            [i] + _elem_row(e) for i, b in enumerate(blocks) for e in b
        ))
    else:
        _write_json(out, [[element_to_json(e) for e in b] for b in blocks])
    return 0


def cmd_ideals(args, out):
    fams = minimal_ideals(args.n) if args.minimal else enumerate_ideals(args.n)
    if args.format == "csv":
        _write_csv(out, ["index", "size", "members"], (
            [i, len(f), ";".join(_pts(s) for s in f.members)] for i, f in enumerate(fams)
        ))
    else:
        _write_json(out, [family_to_json(f) for f in fams])
    return 0


def _ideal(args):
    if args.ideal is None:
        raise UsageError("maxsub needs --ideal (generators like \"1,3;2\")")
    try:
        return parse_ideal_spec(args.ideal, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_maxsub(args, out):
    f = _ideal(args)
    if f.is_trivial:
        raise UsageError("the trivial ideal has no maximal subsemigroups to classify")
    descs = classify_maximal(f)
    if args.format == "csv":
        rows = []
        for i, d in enumerate(descs):
            row = [i, d.type, d.describe(), ";".join(str(e) for e in d.removed)]
            if args.materialize:
                row.append(";".join(str(e) for e in materialize(d, f)))
            rows.append(row)
        header = ["index", "type", "description", "removed"] + (["elements"] if args.materialize else [])
        _write_csv(out, header, rows)
    else:
        items = []
        for d in descs:
            obj = descriptor_to_json(d)
            if args.materialize:
                obj["elements"] = [element_to_json(e) for e in materialize(d, f)]
            items.append(obj)
        _write_json(out, {"ideal": family_to_json(f), "descriptors": items})
    return 0


def verify_report(n: int, budget: Budget) -> dict:
    t = monoid_table(n)
    entries = []
    summary = {"ideals": 0, "checked": 0, "matched": 0, "mismatched": 0, "refused": 0, "skipped": 0}
    for f in enumerate_ideals(n):
        summary["ideals"] += 1
        entry = {"ideal": family_to_json(f)}
        entries.append(entry)
        if f.is_trivial:
            entry["status"] = "skipped: trivial"
            summary["skipped"] += 1
            continue
        try:
            compute_Iu(f, check=True)
            descs = classify_maximal(f)
        except IuMismatch as exc:
            entry.update(status="mismatch", detail=str(exc), match=False)
            summary["mismatched"] += 1
            continue
        ideal = t.indices(elements_of_ideal(f))
        predicted = sorted(sorted(t.indices(materialize(d, f))) for d in descs)
        entry["predicted"] = len(predicted)
        try:
            found = sorted(sorted(m) for m in brute_maximal(ideal, t, budget))
        except BudgetExceeded as exc:
            entry.update(status=f"refused: {exc}")
            summary["refused"] += 1
            continue
        except OracleDisagreement as exc:
            entry.update(status="mismatch", detail=str(exc), match=False)
            summary["mismatched"] += 1
            continue
        ok = found == predicted
        entry.update(found=len(found), match=ok, status="ok" if ok else "mismatch")
        summary["checked"] += 1
        summary["matched" if ok else "mismatched"] += 1
    summary["all_match"] = summary["mismatched"] == 0
    return {"n": n, "budget": {"subset_scan": budget.subset_scan, "layer_scan": budget.layer_scan},
            "summary": summary, "ideals": entries}


def cmd_verify(args, out):
    report = verify_report(args.n, _budget(args))
    if args.format == "csv":
        _write_csv(out, ["index", "members", "status", "predicted", "found"], (
            [i, ";".join(_pts(s) for s in e["ideal"]["members"]), e["status"],
             e.get("predicted", ""), e.get("found", "")]
            for i, e in enumerate(report["ideals"])
        ))
    else:
        _write_json(out, report)
    return 0 if report["summary"]["all_match"] else 1


def count_rows(n: int) -> list:
    rows = []
    for m in range(1, n + 1):
        a, b = len(enumerate_elements(m)), count_by_classes(m)
        rows.append((m, a, b, "ok" if a == b else "MISMATCH"))
    return rows


def cmd_count(args, out):
    rows = count_rows(args.n)
    if args.format == "csv":
        _write_csv(out, ["m", "enumerated", "by_classes", "agreement"], rows)
    else:
        _write_json(out, [dict(zip(("m", "enumerated", "by_classes", "agreement"), r)) for r in rows])
    return 0 if all(r[3] == "ok" for r in rows) else 1


HANDLERS = {
    "enumerate": cmd_enumerate,
    "classes": cmd_classes,
    "green": cmd_green,
    "ideals": cmd_ideals,
    "maxsub": cmd_maxsub,
    "verify": cmd_verify,
    "count": cmd_count,
}


# -- parsing ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"n must be at least 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fencemonoid", description="Compute with the monoid of fence- and parity-preserving partial injections.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--n", type=_positive, required=True)
        formats = ["json", "csv", "dot"] if name == "green" else ["json", "csv"]
        s.add_argument("--format", choices=formats, default="json")
        if name == "green":
            s.add_argument("--kind", choices=[k.value for k in green_mod.GreenRelationKind], default="J")
        if name == "ideals":
            s.add_argument("--minimal", action="store_true")
        if name == "maxsub":
            s.add_argument("--ideal")
            s.add_argument("--materialize", action="store_true")
        if name == "verify":
            s.add_argument("--budget", help="oracle limits A or A,B (overrides FENCE_BUDGET)")
    return p


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return HANDLERS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except ValueError as exc:  # bad budget strings and the like
        print(f"error: {exc}", file=err)
        return 2


def main(argv=None) -> int:
    sys.exit(run(sys.argv[1:] if argv is None else argv))
