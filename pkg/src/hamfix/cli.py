"""Command-line front end: classification runs, invariants, toric verification."""

from __future__ import annotations

import argparse
import difflib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import golden
from .classify4 import TFD4, classify4, enumerate_case3_tuples
from .classify6 import TFD, capacities, classify_all
from .errors import HamfixError
from .localization import (
    ExtremalFourManifold,
    ExtremalSurface,
    InteriorSurface,
    IsolatedPoint,
    betti,
    chern_number,
)
from .reduction import dh
from .toric import (
    CircleDirection,
    Polytope,
    chern_number_from_volume,
    fixed_faces,
    is_semifree,
    tfd_from_polytope,
    verify_corpus,
)

REPORT_FIELDS = (
    "label", "crit", "components", "b2", "b_odd", "c1_cubed",
    "gromov_width", "hofer_zehnder",
)


def _class_str(coeffs) -> str:
    names = ["u"] + [f"E{i}" for i in range(1, len(coeffs))]
    out = ""
    for c, n in zip(coeffs, names):
        if c == 0:
            continue
        if c == 1:
            out += f"+{n}"
        elif c == -1:
            out += f"-{n}"
        else:
            out += f"{c:+}{n}"
    if not out:
        return "0"
    return out[1:] if out.startswith("+") else out


def _surface_str(coeffs, genus) -> str:
    head = {0: "S2", 1: "T2"}.get(genus, f"g{genus}")
    return f"{head}[{_class_str(coeffs)}]"


def _lattice_str(kind, blowups) -> str:
    if kind == "product":
        return "S2xS2"
    return "P2" if blowups == 0 else f"P2#{blowups}"


def report_row_from_tfd(tfd: TFD) -> dict:
    per_level = []
    for level in tfd.crit_levels:
        comps = tfd.at_level(level)
        pts = sum(1 for fc in comps if isinstance(fc.spec, IsolatedPoint))
        descs = []
        if pts == 1:
            descs.append("pt")
        elif pts > 1:
            descs.append(f"pt*{pts}")
        for fc in comps:
            s = fc.spec
            if isinstance(s, InteriorSurface):
                descs.append(_surface_str(s.surface_class.coeffs, s.genus))
            elif isinstance(s, ExtremalSurface):
                descs.append(f"S2(vol {2 + s.normal_degrees[0] + s.normal_degrees[1]})")
            elif isinstance(s, ExtremalFourManifold):
                descs.append(_lattice_str(s.lattice.kind, s.lattice.blowups))
        per_level.append(f"{level}:{'+'.join(sorted(descs))}")
    b = betti(tfd)
    w, h = capacities(tfd)
    return {
        "label": tfd.label,
        "crit": ",".join(str(c) for c in tfd.crit_levels),
        "components": " | ".join(per_level),
        "b2": b[2],
        "b_odd": b[1] + b[3] + b[5],
        "c1_cubed": chern_number(tfd),
        "gromov_width": _num(w),
        "hofer_zehnder": _num(h),
    }


def _num(x):
    f = Fraction(x)
    return int(f) if f.denominator == 1 else str(f)


def report_row_from_golden6(row: dict) -> dict:
    per_level = [f"-3:pt"]
    if row["minus1"]:
        per_level.append(f"-1:pt" if row["minus1"] == 1 else f"-1:pt*{row['minus1']}")
    if row["interior"]:
        descs = sorted(_surface_str(c, g) for c, g in row["interior"])
        per_level.append(f"0:{'+'.join(descs)}")
    top = row["top"]
    level1 = []
    if row["plus1"]:
        level1.append("pt" if row["plus1"] == 1 else f"pt*{row['plus1']}")
    if top[0] == "fourmanifold":
        level1.append(_lattice_str(top[1], top[2]))
    if level1:
        per_level.append(f"1:{'+'.join(sorted(level1))}")
    if top[0] == "sphere":
        per_level.append(f"2:S2(vol {2 + top[1]})")
    elif top[0] == "pt":
        per_level.append("3:pt")
    crit = [-3]
    if row["minus1"]:
        crit.append(-1)
    if row["interior"]:
        crit.append(0)
    if row["plus1"] or top[0] == "fourmanifold":
        crit.append(1)
    if top[0] == "sphere":
        crit.append(2)
    elif top[0] == "pt":
        crit.append(3)
    return {
        "label": row["label"],
        "crit": ",".join(str(c) for c in crit),
        "components": " | ".join(per_level),
        "b2": row["b2"],
        "b_odd": row["b3"],
        "c1_cubed": row["c1cubed"],
        "gromov_width": row["capacities"][0],
        "hofer_zehnder": row["capacities"][1],
    }


def report_row_from_tfd4(row: TFD4) -> dict:
    per_level = []
    for level in row.crit_levels:
        if level in (-2, 2):
            per_level.append(f"{level}:pt")
        elif level in (-1, 1):
            per_level.append(f"{level}:S2")
        else:
            per_level.append(f"0:pt" if row.k == 1 else f"0:pt*{row.k}")
    e = row.euler_min
    e_str = "0" if e == 0 else ("-u" if e == -1 else f"{e}u")
    name = None
    g = golden.GOLDEN4_BY_LABEL.get(row.label)
    if g:
        name = g["name"]
    return {
        "label": row.label or "?",
        "m": name or "?",
        "crit": ",".join(str(c) for c in row.crit_levels),
        "components": " | ".join(per_level),
        "b2": row.betti[2],
        "euler_min": e_str,
    }


def report_row_from_golden4(row: dict) -> dict:
    tfd4 = TFD4(row["label"], row["min_level"], row["max_level"], row["k"], row["euler_min"])
    return report_row_from_tfd4(tfd4)


def render_tsv(rows: list[dict], fields) -> str:
    lines = ["\t".join(fields)]
    for r in rows:
        lines.append("\t".join(str(r[f]) for f in fields))
    return "\n".join(lines) + "\n"


def render_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"


def _filter_case(rows, case):
    if case in (None, "all"):
        return rows
    return [r for r in rows if (r.label or "").startswith(case + "-")]


def _emit_dh(rows, directory):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for tfd in rows:
        lines = ["t\tDH"]
        for s in tfd.slices:
            lo, hi = s.interval
            t = lo
            while t <= hi:
                lines.append(f"{t}\t{dh(s, t)}")
                t += Fraction(1, 4)
        path = directory / f"dh_{tfd.label or 'row'}.tsv"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _bound_witness(rows) -> int:
    worst = 0
    for tfd in rows:
        for fc in tfd.components:
            if isinstance(fc.spec, InteriorSurface):
                worst = max(worst, *(abs(c) for c in fc.spec.surface_class.coeffs))
        for _, classes in tfd.blowdowns:
            for c in classes:
                worst = max(worst, *(abs(x) for x in c.coeffs))
    return worst


def cmd_classify(args) -> int:
    if args.dim == 6:
        rows = classify_all(bound=args.bound, strict=False)
        rows = _filter_case(rows, args.case)
        if args.verbose:
            print(
                f"bound sufficiency: largest surviving coefficient "
                f"{_bound_witness(rows)} inside the search box {args.bound}",
                file=sys.stderr,
            )
        if args.emit_dh:
            _emit_dh(rows, args.emit_dh)
        computed = [report_row_from_tfd(t) for t in rows]
        reference = [report_row_from_golden6(r) for r in golden.GOLDEN6]
        reference = [
            r for r in reference
            if args.case in (None, "all") or r["label"].startswith(args.case + "-")
        ]
        fields = REPORT_FIELDS
    else:
        rows4 = classify4(strict=False)
        rows4 = [
            r for r in rows4
            if args.case in (None, "all") or (r.label or "").startswith(args.case + "-")
        ]
        computed = [report_row_from_tfd4(r) for r in rows4]
        reference = [report_row_from_golden4(r) for r in golden.GOLDEN4]
        reference = [
            r for r in reference
            if args.case in (None, "all") or r["label"].startswith(args.case + "-")
        ]
        fields = ("label", "m", "crit", "components", "b2", "euler_min")
    text = render_json(computed) if args.format == "json" else render_tsv(computed, fields)
    sys.stdout.write(text)
    if computed != reference:
        print("classification differs from the embedded reference table "
              "(run `hamfix tables diff`)", file=sys.stderr)
        return 1
    return 0


def cmd_chern(args) -> int:
    rows = classify_all(strict=False)
    for t in rows:
        if t.label == args.row:
            print(chern_number(t))
            return 0
    print(f"unknown row {args.row!r}", file=sys.stderr)
    return 2


def cmd_capacities(_args) -> int:
    rows = classify_all(strict=False)
    out = [
        {
            "label": t.label,
            "gromov_width": _num(capacities(t)[0]),
            "hofer_zehnder": _num(capacities(t)[1]),
        }
        for t in rows
    ]
    sys.stdout.write(render_tsv(out, ("label", "gromov_width", "hofer_zehnder")))
    return 0


def cmd_toric(args) -> int:
    if args.action != "verify":
        print(f"unknown toric action {args.action!r}", file=sys.stderr)
        return 2
    try:
        if args.polytope:
            if not args.xi:
                print("--polytope needs --xi a,b,c", file=sys.stderr)
                return 2
            xi = CircleDirection(tuple(int(x) for x in args.xi.split(",")))
            poly = Polytope.load(args.polytope)
            poly.check_delzant()
            poly.check_reflexive()
            if not is_semifree(poly, xi):
                print(f"{poly.name}: not semifree along {xi.xi}", file=sys.stderr)
                return 1
            rows = classify_all(strict=False)
            match = tfd_from_polytope(poly, xi, rows)
            degree = chern_number_from_volume(poly)
            for f in fixed_faces(poly, xi):
                print(f"level {f.level}: {f.kind} {f.vertices}")
            print(f"{poly.name}: matches {match.label}, anticanonical degree {degree}")
            return 0
        results = verify_corpus(args.corpus)
        for name, label, degree in results:
            print(f"{name}: {label} (degree {degree})")
        print(f"verified {len(results)} polytopes")
        return 0
    except HamfixError as err:
        print(f"verification failed: {err}", file=sys.stderr)
        return 1


def cmd_tables(args) -> int:
    if args.action != "diff":
        print(f"unknown tables action {args.action!r}", file=sys.stderr)
        return 2
    fields6 = REPORT_FIELDS
    fields4 = ("label", "m", "crit", "components", "b2", "euler_min")
    computed6 = [report_row_from_tfd(t) for t in classify_all(strict=False)]
    reference6 = [report_row_from_golden6(r) for r in golden.GOLDEN6]
    computed4 = [report_row_from_tfd4(r) for r in classify4(strict=False)]
    reference4 = [report_row_from_golden4(r) for r in golden.GOLDEN4]
    got = (
        "# dim 6\n" + render_tsv(computed6, fields6)
        + "# dim 4\n" + render_tsv(computed4, fields4)
    )
    want = (
        "# dim 6\n" + render_tsv(reference6, fields6)
        + "# dim 4\n" + render_tsv(reference4, fields4)
    )
    if got == want:
        print("tables match")
        return 0
    diff = difflib.unified_diff(
        want.splitlines(keepends=True),
        got.splitlines(keepends=True),
        fromfile="reference",
        tofile="computed",
    )
    sys.stdout.writelines(diff)
    return 1


def cmd_tuples(_args) -> int:
    for t in sorted(enumerate_case3_tuples()):
        print(t)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamfix",
        description="Classification data for semifree Hamiltonian circle actions "
        "on monotone symplectic manifolds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="enumerate fixed-point data rows")
    p_classify.add_argument("--dim", type=int, choices=(4, 6), required=True)
    p_classify.add_argument("--case", choices=("I", "II", "III", "all"), default="all")
    p_classify.add_argument("--format", choices=("json", "tsv"), default="tsv")
    p_classify.add_argument("--bound", type=int, default=6)
    p_classify.add_argument("-v", "--verbose", action="store_true",
                            help="print the bound-sufficiency witness")
    p_classify.add_argument("--emit-dh", metavar="DIR", default=None,
                            help="write per-row (t, DH(t)) sample tables")
    p_classify.set_defaults(func=cmd_classify)

    p_chern = sub.add_parser("chern", help="anticanonical degree of one row")
    p_chern.add_argument("--row", required=True)
    p_chern.set_defaults(func=cmd_chern)

    p_cap = sub.add_parser("capacities", help="ball and oscillation capacities")
    p_cap.set_defaults(func=cmd_capacities)

    p_toric = sub.add_parser("toric", help="verify toric candidates")
    p_toric.add_argument("action", choices=("verify",))
    p_toric.add_argument("--polytope", default=None)
    p_toric.add_argument("--xi", default=None)
    p_toric.add_argument("--corpus", default=None)
    p_toric.set_defaults(func=cmd_toric)

    p_tables = sub.add_parser("tables", help="diff recomputed tables against golden")
    p_tables.add_argument("action", choices=("diff",))
    p_tables.set_defaults(func=cmd_tables)

    p_tuples = sub.add_parser("case3-tuples", help="dimension-four case III data")
    p_tuples.set_defaults(func=cmd_tuples)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except HamfixError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
