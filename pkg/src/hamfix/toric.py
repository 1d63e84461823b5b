"""Lattice polytopes with a circle direction: verification of toric candidates.

A polytope is shipped with explicit vertices, edges and inward facet
normals.  Given a primitive direction, the module checks semifreeness,
extracts the fixed faces with their balanced levels, assembles the data into
a fixed-point-data shape and matches it against the classified rows, and
computes the anticanonical degree from the normalized volume.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path

from .errors import (
    HamfixError,
    NoMatchingTFD,
    NotBalanced,
    NotDelzant,
    NotReflexive,
)
from .classify6 import TFD
from .localization import ExtremalSurface, InteriorSurface, IsolatedPoint
from .lattice import pair


def _ivec(v):
    return tuple(int(x) for x in v)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _primitive(v):
    g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v), g


def _det3(a, b, c):
    return _dot(a, _cross(b, c))


@dataclass(frozen=True)
class CircleDirection:
    """Primitive integer generator of a circle subgroup of the torus."""

    xi: tuple[int, int, int]

    def __post_init__(self):
        g = gcd(gcd(abs(self.xi[0]), abs(self.xi[1])), abs(self.xi[2]))
        if g != 1:
            raise ValueError(f"{self.xi} is not primitive")


@dataclass(frozen=True)
class Polytope:
    """Simple lattice 3-polytope with explicit combinatorics."""

    name: str
    vertices: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int], ...]
    facets: tuple[tuple[tuple[int, int, int], int], ...]  # (inward normal, offset)
    reflexive: bool = True

    @staticmethod
    def from_dict(d) -> Polytope:
        return Polytope(
            name=d["name"],
            vertices=tuple(_ivec(v) for v in d["vertices"]),
            edges=tuple(tuple(e) for e in d["edges"]),
            facets=tuple((_ivec(f["normal"]), int(f["offset"])) for f in d["facets"]),
            reflexive=bool(d.get("reflexive", True)),
        )

    @staticmethod
    def load(path) -> Polytope:
        with open(path, encoding="utf-8") as fh:
            return Polytope.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": [list(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "facets": [
                {"normal": list(n), "offset": o} for n, o in self.facets
            ],
            "reflexive": self.reflexive,
        }

    def vertex_edges(self, i: int) -> list[tuple[int, int]]:
        return [e for e in self.edges if i in e]

    def edge_direction(self, e, base: int) -> tuple[int, int, int]:
        """Primitive direction of edge e pointing away from the vertex base."""
        i, j = e
        other = j if i == base else i
        d, _ = _primitive(_sub(self.vertices[other], self.vertices[base]))
        return d

    def edge_length(self, e) -> int:
        _, g = _primitive(_sub(self.vertices[e[1]], self.vertices[e[0]]))
        return g

    def facet_vertices(self, f: int) -> list[int]:
        n, o = self.facets[f]
        return [i for i, v in enumerate(self.vertices) if _dot(n, v) == o]

    def facet_cycle(self, f: int) -> list[int]:
        """Vertex indices of facet f in boundary-walk order."""
        members = set(self.facet_vertices(f))
        adj = {i: [] for i in members}
        for a, b in self.edges:
            if a in members and b in members:
                adj[a].append(b)
                adj[b].append(a)
        start = min(members)
        cycle = [start, adj[start][0]]
        while len(cycle) < len(members):
            nxt = [v for v in adj[cycle[-1]] if v != cycle[-2]]
            cycle.append(nxt[0])
        return cycle

    # -- structural checks ---------------------------------------------------

    def check_delzant(self) -> None:
        for i, v in enumerate(self.vertices):
            es = self.vertex_edges(i)
            if len(es) != 3:
                raise NotDelzant(f"{self.name}: vertex {v} meets {len(es)} edges")
            dirs = [self.edge_direction(e, i) for e in es]
            if abs(_det3(*dirs)) != 1:
                raise NotDelzant(f"{self.name}: edge directions at {v} not unimodular")
        for n, o in self.facets:
            if _primitive(n)[1] != 1:
                raise NotDelzant(f"{self.name}: facet normal {n} not primitive")
            if any(_dot(n, v) < o for v in self.vertices):
                raise NotDelzant(f"{self.name}: facet {n} not supporting")

    def interior_point(self) -> tuple[int, int, int]:
        los = [min(v[i] for v in self.vertices) for i in range(3)]
        his = [max(v[i] for v in self.vertices) for i in range(3)]
        pts = [
            p
            for p in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(los, his)))
            if all(_dot(n, p) > o for n, o in self.facets)
        ]
        if len(pts) != 1:
            raise NotReflexive(f"{self.name}: {len(pts)} interior lattice points")
        return pts[0]

    def check_reflexive(self) -> None:
        center = self.interior_point()
        for n, o in self.facets:
            if _dot(n, center) - o != 1:
                raise NotReflexive(
                    f"{self.name}: facet {n} at lattice distance {_dot(n, center) - o}"
                )

    def normalized_volume(self) -> int:
        """Six times the Euclidean volume, an integer."""
        base = self.vertices[0]
        total = 0
        for f in range(len(self.facets)):
            cycle = self.facet_cycle(f)
            v0 = self.vertices[cycle[0]]
            for a, b in zip(cycle[1:], cycle[2:]):
                total += abs(
                    _det3(
                        _sub(v0, base),
                        _sub(self.vertices[a], base),
                        _sub(self.vertices[b], base),
                    )
                )
        return total


def is_semifree(p: Polytope, d: CircleDirection) -> bool:
    """Every primitive edge direction pairs with the direction in {-1,0,1}."""
    p.check_delzant()
    for e in p.edges:
        dirn, _ = _primitive(_sub(p.vertices[e[1]], p.vertices[e[0]]))
        if abs(_dot(dirn, d.xi)) > 1:
            return False
    return True


@dataclass(frozen=True)
class FixedFace:
    kind: str  # "vertex" | "edge" | "facet"
    vertices: tuple[int, ...]
    level: int


def fixed_faces(p: Polytope, d: CircleDirection) -> list[FixedFace]:
    """Fixed faces with balanced levels.

    The balancing shift is the unique constant making every fixed face sit at
    minus the sum of its transverse edge pairings; inconsistent shifts mean
    the direction does not act with the balanced normalization.
    """
    xi = d.xi
    raw: list[tuple[str, tuple[int, ...], int, int]] = []  # kind, verts, raw, weightsum
    fixed_edge_indices = set()
    facet_of = {}
    for fi in range(len(p.facets)):
        n, _ = p.facets[fi]
        members = p.facet_vertices(fi)
        dirs = set()
        for a, b in p.edges:
            if a in members and b in members:
                dd, _ = _primitive(_sub(p.vertices[b], p.vertices[a]))
                dirs.add(abs(_dot(dd, xi)))
        if dirs == {0}:
            verts = tuple(sorted(members))
            # transverse weight at any vertex of the face
            v0 = verts[0]
            w = sum(
                _dot(p.edge_direction(e, v0), xi)
                for e in p.vertex_edges(v0)
                if _dot(p.edge_direction(e, v0), xi) != 0
            )
            raw.append(("facet", verts, _dot(p.vertices[v0], xi), w))
            facet_of[verts] = fi
            fixed_edge_indices.update(
                (a, b) for a, b in p.edges if a in members and b in members
            )
    for e in p.edges:
        if tuple(e) in fixed_edge_indices:
            continue
        dd, _ = _primitive(_sub(p.vertices[e[1]], p.vertices[e[0]]))
        if _dot(dd, xi) != 0:
            continue
        transverse_ok = True
        w = 0
        for end in e:
            for other in p.vertex_edges(end):
                if tuple(other) == tuple(e):
                    continue
                pairing = _dot(p.edge_direction(other, end), xi)
                if pairing == 0:
                    transverse_ok = False
                if end == e[0]:
                    w += pairing
        if transverse_ok:
            raw.append(("edge", tuple(sorted(e)), _dot(p.vertices[e[0]], xi), w))
    for i, v in enumerate(p.vertices):
        pairings = [_dot(p.edge_direction(e, i), xi) for e in p.vertex_edges(i)]
        if all(pr != 0 for pr in pairings):
            raw.append(("vertex", (i,), _dot(v, xi), sum(pairings)))
    shifts = {-(w) - r for _, _, r, w in raw}
    if len(shifts) != 1:
        raise NotBalanced(f"{p.name}: inconsistent balancing shifts {sorted(shifts)}")
    shift = shifts.pop()
    faces = [FixedFace(kind, verts, r + shift) for kind, verts, r, w in raw]
    faces.sort(key=lambda f: (f.level, f.kind, f.vertices))
    return faces


def facet_lattice_area(p: Polytope, verts: tuple[int, ...]) -> Fraction:
    """Lattice-normalized area of a fixed 2-face (a half-integer)."""
    fi = next(
        i for i in range(len(p.facets))
        if tuple(sorted(p.facet_vertices(i))) == tuple(sorted(verts))
    )
    cycle = p.facet_cycle(fi)
    v0 = p.vertices[cycle[0]]
    acc = (0, 0, 0)
    for a, b in zip(cycle[1:], cycle[2:]):
        c = _cross(_sub(p.vertices[a], v0), _sub(p.vertices[b], v0))
        acc = tuple(x + y for x, y in zip(acc, c))
    _, m = _primitive(acc)
    return Fraction(m, 2)


def _facet_shape(p: Polytope, verts: tuple[int, ...]):
    """(lattice kind, blow-up count) of the 4-manifold over a fixed 2-face."""
    members = set(verts)
    boundary = [
        (a, b) for a, b in p.edges if a in members and b in members
    ]
    n = len(boundary)
    if n == 3:
        return ("blowup", 0)
    if n == 5:
        return ("blowup", 2)
    if n == 4:
        dirs = []
        for a, b in boundary:
            dd, _ = _primitive(_sub(p.vertices[b], p.vertices[a]))
            dirs.append(dd)
        parallel_pairs = sum(
            1
            for x, y in itertools.combinations(dirs, 2)
            if _cross(x, y) == (0, 0, 0)
        )
        if parallel_pairs == 2:
            return ("product", 0)
        if parallel_pairs == 1:
            return ("blowup", 1)
    raise NoMatchingTFD(f"{p.name}: cannot identify the 4-manifold over {verts}")


def observed_profile(p: Polytope, d: CircleDirection):
    """Per-level component summary extracted from the fixed faces."""
    faces = fixed_faces(p, d)
    levels: dict[int, list] = {}
    for f in faces:
        if f.kind == "vertex":
            i = f.vertices[0]
            weights = tuple(
                sorted(_dot(p.edge_direction(e, i), d.xi) for e in p.vertex_edges(i))
            )
            desc = ("pt", weights)
        elif f.kind == "edge":
            e = next(e for e in p.edges if tuple(sorted(e)) == f.vertices)
            desc = ("sphere", p.edge_length(e))
        else:
            kind, blowups = _facet_shape(p, f.vertices)
            desc = ("fourmanifold", kind, blowups, facet_lattice_area(p, f.vertices))
        levels.setdefault(f.level, []).append(desc)
    return {lvl: tuple(sorted(ds)) for lvl, ds in sorted(levels.items())}


def _tfd_profile(tfd: TFD):
    """The same summary computed from a classified row."""
    levels: dict[int, list] = {}
    for fc in tfd.components:
        s = fc.spec
        if isinstance(s, IsolatedPoint):
            desc = ("pt", tuple(sorted(s.weights)))
        elif isinstance(s, InteriorSurface):
            if s.genus != 0:
                return None  # toric fixed surfaces are rational
            slc = tfd.slice_below(fc.level)
            desc = ("sphere", pair(slc.omega(fc.level), s.surface_class))
        elif isinstance(s, ExtremalSurface):
            desc = ("sphere", 2 + s.normal_degrees[0] + s.normal_degrees[1])
        else:
            slc = tfd.slice_below(fc.level) if fc.level > 0 else tfd.slice_above(fc.level)
            volume = Fraction(
                pair(slc.omega(fc.level), slc.omega(fc.level)), 2
            )
            desc = (
                "fourmanifold", s.lattice.kind, s.lattice.blowups, volume,
            )
        levels.setdefault(fc.level, []).append(desc)
    return {lvl: tuple(sorted(ds)) for lvl, ds in sorted(levels.items())}


def tfd_from_polytope(p: Polytope, d: CircleDirection, rows: list[TFD]) -> TFD:
    """Match the polytope's fixed-point data against classified rows."""
    if not is_semifree(p, d):
        raise NoMatchingTFD(f"{p.name}: direction {d.xi} is not semifree")
    observed = observed_profile(p, d)
    matches = []
    for tfd in rows:
        prof = _tfd_profile(tfd)
        if prof == observed:
            matches.append(tfd)
    if len(matches) != 1:
        raise NoMatchingTFD(
            f"{p.name}: {len(matches)} classified rows match profile {observed}"
        )
    return matches[0]


def chern_number_from_volume(p: Polytope) -> int:
    """Anticanonical degree of the toric 3-fold: six times the volume."""
    p.check_delzant()
    if not p.reflexive:
        raise NotReflexive(f"{p.name}: not flagged reflexive")
    p.check_reflexive()
    return p.normalized_volume()


# ---------------------------------------------------------------------------
# corpus handling

def corpus_dir() -> Path:
    env = os.environ.get("HAMFIX_CORPUS")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "corpus"


def load_corpus(directory=None):
    """[(polytope, direction, expected row label)] from an index file."""
    directory = Path(directory) if directory else corpus_dir()
    with open(directory / "index.json", encoding="utf-8") as fh:
        index = json.load(fh)
    out = []
    for entry in index:
        poly = Polytope.load(directory / entry["file"])
        out.append((poly, CircleDirection(_ivec(entry["xi"])), entry["row"]))
    return out


def verify_corpus(directory=None, rows=None):
    """Run the full verification on every corpus polytope.

    Returns a list of (name, row label, normalized volume) on success; raises
    the first failure otherwise.
    """
    from .classify6 import classify_all
    from .localization import chern_number

    if rows is None:
        rows = classify_all(strict=False)
    results = []
    for poly, direction, expected in load_corpus(directory):
        poly.check_delzant()
        poly.check_reflexive()
        if not is_semifree(poly, direction):
            raise HamfixError(f"{poly.name}: not semifree along {direction.xi}")
        match = tfd_from_polytope(poly, direction, rows)
        if match.label != expected:
            raise NoMatchingTFD(
                f"{poly.name}: matched {match.label}, expected {expected}"
            )
        degree = chern_number_from_volume(poly)
        if degree != chern_number(match):
            raise NoMatchingTFD(
                f"{poly.name}: volume degree {degree} != localization "
                f"{chern_number(match)}"
            )
        results.append((poly.name, match.label, degree))
    return results
