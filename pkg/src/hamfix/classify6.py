"""Enumeration of topological fixed-point data in dimension six.

Candidates are swept upward from an isolated minimum at level -3: index-two
points blow the reduced space up at level -1, fixed surfaces shift the Euler
class at level 0, index-four points blow down at level +1, and the maximum
closes the interval at level 3 (point), 2 (sphere) or 1 (4-manifold).  The
predicate suite keeps a candidate only if every slice stays symplectic, every
exceptional class keeps positive area away from its collapse, blow-down
counts match the zero-area classes, the localization identities vanish, and
the interior class splits into disjoint embedded components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    BoundTooSmall,
    CapacityFormulaInapplicable,
    ClassificationMismatch,
    HamfixError,
    InternalArithmeticError,
)
from .lattice import (
    BLOWUP,
    CohClass,
    SurfaceLattice,
    component_splittings,
    exceptional_classes,
    make_blowup_lattice,
    pair,
)
from .localization import (
    C1,
    ExtremalFourManifold,
    ExtremalSurface,
    FixedComponent,
    InteriorSurface,
    IsolatedPoint,
    ONE,
    betti,
    integrate,
    point,
)
from .reduction import (
    SliceState,
    area,
    blowdown_lattice,
    bmax_from_euler,
    dh,
    fiber_classes_of,
    initial_slice,
    positive_square_throughout,
    vanishing_classes,
)

MIN_WEIGHTS = (1, 1, 1)
INDEX2_WEIGHTS = (-1, 1, 1)
INDEX4_WEIGHTS = (-1, -1, 1)
MAX_WEIGHTS = (-1, -1, -1)

TOP_LEVEL = {0: 3, 2: 2, 4: 1}


@dataclass(frozen=True)
class ExtremalProfile:
    """Dimensions of the extremal fixed components, minimum first."""

    min_dim: int = 0
    max_dim: int = 0

    def __post_init__(self):
        if self.min_dim != 0:
            raise ValueError("profiles are normalized so the minimum is a point")
        if self.max_dim not in (0, 2, 4):
            raise ValueError(f"maximum dimension {self.max_dim} not in (0,2,4)")


@dataclass(frozen=True)
class TFD:
    """A topological fixed-point data record with its derived slice path."""

    label: str | None
    max_dim: int
    components: tuple[FixedComponent, ...]
    slices: tuple[SliceState, ...]
    blowdowns: tuple[tuple[int, tuple[CohClass, ...]], ...]

    @property
    def crit_levels(self) -> tuple[int, ...]:
        return tuple(sorted({fc.level for fc in self.components}))

    @property
    def interior_crit(self) -> tuple[int, ...]:
        lo, hi = min(self.crit_levels), max(self.crit_levels)
        return tuple(c for c in self.crit_levels if lo < c < hi)

    def at_level(self, level: int) -> tuple[FixedComponent, ...]:
        return tuple(fc for fc in self.components if fc.level == level)

    @property
    def reduced_lattice(self) -> SurfaceLattice:
        """Lattice of the reduced space at level zero."""
        for s in self.slices:
            if s.interval[0] <= 0 <= s.interval[1]:
                return s.lattice
        raise InternalArithmeticError("no slice contains level 0")

    def slice_below(self, level) -> SliceState:
        for s in self.slices:
            if s.interval[1] == level:
                return s
        raise InternalArithmeticError(f"no slice ends at {level}")

    def slice_above(self, level) -> SliceState:
        for s in self.slices:
            if s.interval[0] == level:
                return s
        raise InternalArithmeticError(f"no slice starts at {level}")

    def __repr__(self) -> str:
        name = self.label or "unlabeled"
        return f"TFD({name}, crit={self.crit_levels})"


def flip(t: TFD) -> TFD:
    """Orientation reversal: levels negate, indices complement, Euler classes negate."""
    comps = []
    for fc in t.components:
        s = fc.spec
        if isinstance(s, IsolatedPoint):
            spec = IsolatedPoint(tuple(-w for w in s.weights))
        elif isinstance(s, InteriorSurface):
            bplus, bminus = s.normal_degrees
            spec = InteriorSurface(s.surface_class, s.genus, (bminus, bplus))
        elif isinstance(s, ExtremalSurface):
            spec = s
        else:
            spec = ExtremalFourManifold(s.lattice, -s.euler_at_boundary)
        comps.append(FixedComponent(-fc.level, spec))
    comps.sort(key=lambda fc: fc.level)
    slices = tuple(
        sorted(
            (
                SliceState(
                    s.lattice,
                    -1 * s.euler,
                    -s.anchor_level,
                    s.anchor_class,
                    (-s.interval[1], -s.interval[0]),
                )
                for s in t.slices
            ),
            key=lambda s: s.interval,
        )
    )
    downs = []
    for s in slices:
        hi = s.interval[1]
        if any(
            fc.level == hi and fc.index == 4 and isinstance(fc.spec, IsolatedPoint)
            for fc in comps
        ):
            downs.append((int(hi), vanishing_classes(s, hi)))
    top = max(fc.level for fc in comps)
    new_max_dim = next(fc.dim for fc in comps if fc.level == top)
    return TFD(t.label, new_max_dim, tuple(comps), slices, tuple(downs))


def capacities(t: TFD) -> tuple[Fraction, Fraction]:
    """(ball capacity, oscillation capacity) from the critical values."""
    levels = t.crit_levels
    bottom = t.at_level(levels[0])
    if len(bottom) != 1 or bottom[0].dim != 0:
        raise CapacityFormulaInapplicable("minimum must be an isolated point")
    return (Fraction(levels[1] - levels[0]), Fraction(levels[-1] - levels[0]))


# ---------------------------------------------------------------------------
# candidate sweep


class _Reject(Exception):
    """Internal: candidate fails a predicate."""


def _sweep_path(max_dim: int, k: int, total: CohClass | None, m: int, bound: int):
    """Build the slice path for (k points, total surface class, m points).

    Returns (slices, blowdowns) or raises _Reject.
    """
    top = TOP_LEVEL[max_dim]
    state = initial_slice(point(-3, MIN_WEIGHTS))
    slices = []
    blowdowns = []
    prev = Fraction(-3)

    if k:
        slices.append(state.with_interval(prev, -1))
        lat = make_blowup_lattice(k)
        euler = -lat.basis_class(0)
        for i in range(k):
            euler = euler + lat.basis_class(1 + i)
        omega = lat.anticanonical + euler  # value at the crossing level -1
        state = SliceState(lat, euler, Fraction(-1), omega, (Fraction(-1), Fraction(top)))
        prev = Fraction(-1)

    if total is not None:
        if total.lattice != state.lattice:
            raise InternalArithmeticError("total class over wrong lattice")
        slices.append(state.with_interval(prev, 0))
        euler = state.euler + total
        omega = state.omega(0)
        state = SliceState(state.lattice, euler, Fraction(0), omega, (Fraction(0), Fraction(top)))
        prev = Fraction(0)

    if m:
        slices.append(state.with_interval(prev, 1))
        vanish = vanishing_classes(state, 1, bound)
        if len(vanish) != m:
            raise _Reject(f"{len(vanish)} vanishing classes for {m} blow-downs")
        for a, b in itertools.combinations(vanish, 2):
            if pair(a, b) != 0:
                raise _Reject("vanishing classes not disjoint")
        new_lat, push = blowdown_lattice(state.lattice, vanish)
        euler = state.euler
        for v in vanish:
            euler = euler + v
        omega_c = state.omega(1)
        state = SliceState(
            new_lat, push(euler), Fraction(1), push(omega_c), (Fraction(1), Fraction(top))
        )
        blowdowns.append((1, vanish))
        prev = Fraction(1)

    slices.append(state.with_interval(prev, top))
    return slices, blowdowns


def _check_top(max_dim: int, top_slice: SliceState, bound: int):
    """Extremum-side predicates; returns data needed to build the top component."""
    top = TOP_LEVEL[max_dim]
    if max_dim == 0:
        if top_slice.lattice.rank != 1 or not top_slice.omega(3).is_zero():
            raise _Reject("path does not close up at an isolated maximum")
        return None
    if max_dim == 2:
        if top_slice.lattice.rank != 2:
            raise _Reject("sphere maximum needs a rank-2 slice")
        if vanishing_classes(top_slice, 2, bound):
            raise _Reject("exceptional class collapses at the sphere maximum")
        fibers = [f for f in fiber_classes_of(top_slice.lattice) if area(top_slice, f, 2) == 0]
        if len(fibers) != 1:
            raise _Reject("no unique vanishing fiber class at the maximum")
        if top_slice.omega(2).is_zero():
            raise _Reject("reduced class dies entirely at the sphere maximum")
        b_max = bmax_from_euler(top_slice)
        if 2 + b_max < 1:
            raise _Reject("sphere maximum would have nonpositive area")
        return b_max
    if vanishing_classes(top_slice, 1, bound):
        raise _Reject("exceptional class collapses at the 4-dimensional maximum")
    if dh(top_slice, 1) <= 0:
        raise _Reject("reduced volume vanishes at the 4-dimensional maximum")
    return (top_slice.lattice, top_slice.euler)


def _check_slices(slices, max_dim: int, bound: int):
    """DH positivity and exceptional-area positivity along the whole path."""
    zero_ends = {Fraction(-3)}
    if max_dim == 0:
        zero_ends.add(Fraction(3))
    if max_dim == 2:
        zero_ends.add(Fraction(2))
    for s in slices:
        if not positive_square_throughout(s, allow_zero_ends=zero_ends):
            raise _Reject("reduced class loses positivity")
        if s.lattice.kind == BLOWUP and s.lattice.blowups:
            lo, hi = s.interval
            for c in exceptional_classes(s.lattice, bound):
                alo, ahi = area(s, c, lo), area(s, c, hi)
                if alo < 0 or ahi < 0 or (alo == 0 and ahi == 0):
                    raise _Reject(f"exceptional class {c!r} loses area")


def _interior_components(slices, level, splitting) -> tuple[FixedComponent, ...]:
    below = next(s for s in slices if s.interval[1] == level)
    above = next(s for s in slices if s.interval[0] == level)
    comps = []
    for cls, genus in splitting:
        bplus = pair(above.euler, cls)
        bminus = -pair(below.euler, cls)
        comps.append(
            FixedComponent(level, InteriorSurface(cls, genus, (bplus, bminus)))
        )
    return tuple(comps)


def _assemble(max_dim, k, m, splitting, slices, blowdowns, top_data):
    comps = [point(-3, MIN_WEIGHTS)]
    comps += [point(-1, INDEX2_WEIGHTS) for _ in range(k)]
    if splitting:
        comps += list(_interior_components(slices, 0, splitting))
    comps += [point(1, INDEX4_WEIGHTS) for _ in range(m)]
    if max_dim == 0:
        comps.append(point(3, MAX_WEIGHTS))
    elif max_dim == 2:
        comps.append(FixedComponent(2, ExtremalSurface((top_data, 0))))
    else:
        lat, euler = top_data
        comps.append(FixedComponent(1, ExtremalFourManifold(lat, euler)))
    return TFD(None, max_dim, tuple(comps), tuple(slices), tuple(blowdowns))


def _candidate_totals(k: int, max_dim: int, has_blowdown: bool, bound: int):
    """Integral class candidates for the level-0 fixed surface.

    Coefficients on the exceptional part are nondecreasing (one representative
    per index permutation) and pre-filtered by the affine area constraints at
    level one, which are the binding ones.
    """
    lat = make_blowup_lattice(k)
    b_floor = -2 if has_blowdown else -1
    for a in range(-bound, bound + 1):
        for tail in _sorted_tails(k, b_floor, bound):
            volume = 3 * a + sum(tail)
            if volume < 1:
                continue
            if k >= 2 and not has_blowdown:
                # classes u - Ei - Ej keep positive area at the top of the sweep
                if a + tail[-1] + tail[-2] > -1:
                    continue
            # reduced volume at level one stays positive
            if (4 - a) ** 2 - sum((b + 2) ** 2 for b in tail) < 1:
                continue
            yield CohClass(lat, (a,) + tail)


def _sorted_tails(n, lo, hi, prev=None):
    if n == 0:
        yield ()
        return
    start = lo if prev is None else prev
    for b in range(start, hi + 1):
        for rest in _sorted_tails(n - 1, lo, hi, b):
            yield (b,) + rest


def _counts_for(max_dim: int, crit: frozenset[int]):
    """Possible (k, m) point counts at levels -1 and +1, or None if empty."""
    want_minus = -1 in crit
    want_plus = 1 in crit
    ks = range(1, 9) if want_minus else (0,)
    out = []
    for k in ks:
        if max_dim == 0:
            m = k
        elif max_dim == 2:
            if k == 0:
                continue  # the counting identity |Z_1| + 1 = |Z_-1| needs k >= 1
            m = k - 1
        else:
            m = 0
        if (m >= 1) != want_plus:
            continue
        out.append((k, m))
    return out


def enumerate_tfd(profile: ExtremalProfile, crit, bound: int = 6) -> list[TFD]:
    """All topological fixed-point data with the given extrema and interior levels."""
    crit = frozenset(crit)
    if not crit <= {-1, 0, 1}:
        raise ValueError(f"interior critical levels {sorted(crit)} outside -1..1")
    max_dim = profile.max_dim
    if max_dim == 4 and 1 in crit:
        return []  # level one is occupied by the maximum itself
    found: dict[tuple, TFD] = {}
    for k, m in _counts_for(max_dim, crit):
        if 0 in crit:
            totals = list(_candidate_totals(k, max_dim, m > 0, bound))
        else:
            totals = [None]
        for total in totals:
            try:
                slices, blowdowns = _sweep_path(max_dim, k, total, m, bound)
                top_data = _check_top(max_dim, slices[-1], bound)
                _check_slices(slices, max_dim, bound)
            except (_Reject, HamfixError):
                continue
            if total is not None:
                splittings = component_splittings(total.lattice, total, bound)
            else:
                splittings = [()]
            if not splittings:
                continue
            accepted = []
            for splitting in splittings:
                tfd = _assemble(max_dim, k, m, splitting, slices, blowdowns, top_data)
                if not integrate(tfd, ONE).is_zero():
                    continue
                if not integrate(tfd, C1).is_zero():
                    continue
                b = betti(tfd)
                if b != tuple(reversed(b)):
                    continue
                accepted.append(tfd)
            for tfd in accepted:
                canon = _canonicalize(tfd, k, bound)
                key = serialization(canon)
                _check_bound_witness(canon, bound)
                found.setdefault(key, canon)
    return sorted(found.values(), key=sort_key)


def _check_bound_witness(tfd: TFD, bound: int):
    coeff_pools = []
    for fc in tfd.components:
        if isinstance(fc.spec, InteriorSurface):
            coeff_pools.extend(fc.spec.surface_class.coeffs)
    for _, classes in tfd.blowdowns:
        for c in classes:
            coeff_pools.extend(c.coeffs)
    if any(abs(c) >= bound for c in coeff_pools):
        raise BoundTooSmall(f"candidate coefficients reach the search bound {bound}")


def _canonicalize(tfd: TFD, k: int, bound: int) -> TFD:
    """Minimize the serialization over permutations of the exceptional indices."""
    if k <= 1:
        return tfd
    best = None
    interior = [fc for fc in tfd.components if isinstance(fc.spec, InteriorSurface)]
    m = sum(1 for fc in tfd.components if fc.level == 1 and fc.dim == 0)
    for perm in itertools.permutations(range(k)):
        lat = make_blowup_lattice(k)
        def permute(cls: CohClass) -> CohClass:
            tail = cls.coeffs[1:]
            return CohClass(lat, (cls.coeffs[0],) + tuple(tail[p] for p in perm))
        total = lat.zero()
        split = []
        for fc in interior:
            c = permute(fc.spec.surface_class)
            split.append((c, fc.spec.genus))
            total = total + c
        split.sort(key=lambda t: t[0].coeffs)
        try:
            slices, blowdowns = _sweep_path(
                tfd.max_dim, k, total if interior else None, m, bound
            )
            top_data = _check_top(tfd.max_dim, slices[-1], bound)
        except (_Reject, HamfixError):
            continue
        cand = _assemble(tfd.max_dim, k, m, tuple(split), slices, blowdowns, top_data)
        key = serialization(cand)
        if best is None or key < best[0]:
            best = (key, cand)
    if best is None:
        raise InternalArithmeticError("canonicalization lost the candidate")
    return best[1]


def serialization(tfd: TFD):
    """Canonical nested-tuple form of a TFD, used for ordering and matching."""
    per_level = []
    for level in tfd.crit_levels:
        descs = []
        for fc in tfd.at_level(level):
            s = fc.spec
            if isinstance(s, IsolatedPoint):
                descs.append(("pt", s.weights))
            elif isinstance(s, InteriorSurface):
                descs.append(("surface", s.surface_class.coeffs, s.genus))
            elif isinstance(s, ExtremalSurface):
                descs.append(("sphere", s.normal_degrees[0] + s.normal_degrees[1]))
            else:
                descs.append(
                    ("fourmanifold", s.lattice.kind, s.lattice.blowups,
                     s.euler_at_boundary.coeffs)
                )
        per_level.append((level, tuple(sorted(descs))))
    lat = tfd.reduced_lattice
    return (tfd.max_dim, (lat.kind, lat.blowups), tuple(per_level))


def sort_key(tfd: TFD):
    crit = tfd.interior_crit
    k = len([fc for fc in tfd.components if fc.level == -1 and fc.dim == 0])
    interior = tuple(
        sorted(
            fc.spec.surface_class.coeffs
            for fc in tfd.components
            if isinstance(fc.spec, InteriorSurface)
        )
    )
    return (tfd.max_dim, len(crit), crit, k, interior, serialization(tfd))


def classify_all(bound: int = 6, strict: bool = True) -> list[TFD]:
    """Classify over every profile and interior critical set, labeled and sorted.

    With strict=True a discrepancy against the embedded golden table raises
    ClassificationMismatch; strict=False returns whatever the predicate suite
    produces.
    """
    from . import golden

    labeled = list(_classify_cached(bound))
    if strict:
        got = {t.label for t in labeled}
        want = {row["label"] for row in golden.GOLDEN6}
        extra = sorted(got - want)
        missing = sorted(want - got)
        if extra or missing:
            raise ClassificationMismatch(
                f"classification differs from the golden table "
                f"(extra {extra}, missing {missing})",
                extra=extra,
                missing=missing,
            )
    return labeled


@lru_cache(maxsize=None)
def _classify_cached(bound: int) -> tuple[TFD, ...]:
    rows: dict[tuple, TFD] = {}
    for max_dim in (0, 2, 4):
        profile = ExtremalProfile(0, max_dim)
        levels = (-1, 0, 1) if max_dim != 4 else (-1, 0)
        for r in range(len(levels) + 1):
            for crit in itertools.combinations(levels, r):
                for tfd in enumerate_tfd(profile, crit, bound):
                    rows.setdefault(serialization(tfd), tfd)
    ordered = sorted(rows.values(), key=sort_key)
    return tuple(_attach_labels(ordered))


def _attach_labels(ordered: list[TFD]) -> list[TFD]:
    from . import golden

    by_key = {golden.golden_serialization(row): row["label"] for row in golden.GOLDEN6}
    out = []
    prev_label = None
    extra_idx = 0
    for tfd in ordered:
        label = by_key.get(serialization(tfd))
        if label is None:
            extra_idx += 1
            base = prev_label if prev_label else "row"
            label = f"{base}{'b' if extra_idx == 1 else chr(ord('b') + extra_idx - 1)}"
        else:
            prev_label = label
            extra_idx = 0
        out.append(TFD(label, tfd.max_dim, tfd.components, tfd.slices, tfd.blowdowns))
    return out
