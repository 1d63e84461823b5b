"""Embedded reference tables for the six- and four-dimensional classifications.

These are the published reference rows the command-line tool diffs against.
Class coefficients are written in the canonical basis ordering used by the
classifier (exceptional coefficients nondecreasing, jointly minimized with
the blow-down data over index permutations).
"""

from __future__ import annotations

MIN_W = (1, 1, 1)
IDX2_W = (-1, 1, 1)
IDX4_W = (-1, -1, 1)
MAX_W = (-1, -1, -1)


def _row(label, max_dim, k, minus1, plus1, interior, top, c1cubed, b2, b3, caps):
    return {
        "label": label,
        "max_dim": max_dim,
        "k": k,
        "minus1": minus1,
        "plus1": plus1,
        "interior": tuple(interior),
        "top": top,
        "c1cubed": c1cubed,
        "b2": b2,
        "b3": b3,
        "capacities": caps,
    }


GOLDEN6 = [
    _row("I-1", 0, 0, 0, 0, [((2,), 0)], ("pt",), 54, 1, 0, (2, 6)),
    _row("I-2", 0, 3, 3, 3, [], ("pt",), 48, 3, 0, (2, 6)),
    _row("I-3", 0, 1, 1, 1, [((1, -1), 0), ((1, -1), 0)], ("pt",), 52, 3, 0, (2, 6)),
    _row("II-3.1", 2, 1, 1, 0, [((0, 1), 0)], ("sphere", 3), 62, 2, 0, (2, 5)),
    _row("II-3.2", 2, 1, 1, 0, [((1, 0), 0)], ("sphere", 1), 54, 2, 0, (2, 5)),
    _row("II-3.3", 2, 1, 1, 0, [((2, -1), 0)], ("sphere", -1), 46, 2, 0, (2, 5)),
    _row("II-4.1", 2, 2, 2, 1, [((1, -1, -1), 0), ((1, -1, 0), 0)],
         ("sphere", -1), 44, 4, 0, (2, 5)),
    _row("II-4.2", 2, 3, 3, 2, [((1, -1, -1, 0), 0)], ("sphere", -1), 42, 4, 0, (2, 5)),
    _row("III-1", 4, 0, 0, 0, [], ("fourmanifold", "blowup", 0, (-1,)), 64, 1, 0, (4, 4)),
    _row("III-2", 4, 1, 1, 0, [], ("fourmanifold", "blowup", 1, (-1, 1)), 56, 2, 0, (2, 4)),
    _row("III-3.1", 4, 0, 0, 0, [((1,), 0)],
         ("fourmanifold", "blowup", 0, (0,)), 54, 2, 0, (3, 4)),
    _row("III-3.2", 4, 0, 0, 0, [((2,), 0)],
         ("fourmanifold", "blowup", 0, (1,)), 46, 2, 0, (3, 4)),
    _row("III-3.3", 4, 0, 0, 0, [((3,), 1)],
         ("fourmanifold", "blowup", 0, (2,)), 40, 2, 2, (3, 4)),
    _row("III-4.1", 4, 1, 1, 0, [((0, 1), 0)],
         ("fourmanifold", "blowup", 1, (-1, 2)), 50, 3, 0, (2, 4)),
    _row("III-4.2", 4, 1, 1, 0, [((1, -1), 0)],
         ("fourmanifold", "blowup", 1, (0, 0)), 50, 3, 0, (2, 4)),
    _row("III-4.3", 4, 1, 1, 0, [((1, 0), 0)],
         ("fourmanifold", "blowup", 1, (0, 1)), 46, 3, 0, (2, 4)),
    _row("III-4.4", 4, 1, 1, 0, [((2, -1), 0)],
         ("fourmanifold", "blowup", 1, (1, 0)), 42, 3, 0, (2, 4)),
    _row("III-4.5", 4, 2, 2, 0, [((1, -1, -1), 0)],
         ("fourmanifold", "blowup", 2, (0, 0, 0)), 46, 4, 0, (2, 4)),
]

GOLDEN6_BY_LABEL = {row["label"]: row for row in GOLDEN6}


def golden_serialization(row):
    """The nested-tuple form classify6.serialization would produce for this row."""
    per_level = []
    per_level.append((-3, (("pt", MIN_W),)))
    if row["minus1"]:
        per_level.append((-1, tuple(("pt", IDX2_W) for _ in range(row["minus1"]))))
    if row["interior"]:
        descs = sorted(("surface", coeffs, g) for coeffs, g in row["interior"])
        per_level.append((0, tuple(descs)))
    top = row["top"]
    level1 = [("pt", IDX4_W) for _ in range(row["plus1"])]
    if top[0] == "fourmanifold":
        level1.append(("fourmanifold", top[1], top[2], top[3]))
    if level1:
        per_level.append((1, tuple(sorted(level1))))
    if top[0] == "sphere":
        per_level.append((2, (("sphere", top[1]),)))
    elif top[0] == "pt":
        per_level.append((3, (("pt", MAX_W),)))
    return (row["max_dim"], ("blowup", row["k"]), tuple(per_level))


def _row4(label, name, min_level, max_level, k, euler_min, b2):
    return {
        "label": label,
        "name": name,
        "min_level": min_level,
        "max_level": max_level,
        "k": k,
        "euler_min": euler_min,
        "b2": b2,
    }


GOLDEN4 = [
    _row4("I-1", "P1xP1", -2, 2, 2, -1, 2),
    _row4("II-1", "P2", -2, 1, 0, -1, 1),
    _row4("II-2", "P2#1", -2, 1, 1, -1, 2),
    _row4("II-3", "P2#2", -2, 1, 2, -1, 3),
    _row4("III-1", "P1xP1", -1, 1, 0, 0, 2),
    _row4("III-2", "P2#1", -1, 1, 0, -1, 2),
    _row4("III-3", "P2#2", -1, 1, 1, 0, 3),
    _row4("III-4", "P2#3", -1, 1, 2, -1, 4),
]

GOLDEN4_BY_LABEL = {row["label"]: row for row in GOLDEN4}
