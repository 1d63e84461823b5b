"""Classification of semifree circle actions on monotone symplectic 4-manifolds.

Every reduced space is a sphere, so the bookkeeping is one-dimensional: the
reduced class is 2 - t*e on the rank-one lattice generated by the point dual
u, and the area function replaces the quadratic volume of the 6-dimensional
case.  Critical levels lie in {-2,-1,0,1,2}: isolated extrema at +-2, sphere
extrema at +-1, interior points at 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ClassificationMismatch, OutOfInterval
from . import golden


@dataclass(frozen=True)
class TFD4:
    """One four-dimensional fixed-point data row."""

    label: str | None
    min_level: int  # -2 isolated point, -1 sphere
    max_level: int  # +2 isolated point, +1 sphere
    k: int  # interior fixed points at level 0
    euler_min: int  # u-coefficient of the Euler class just above the minimum

    @property
    def euler_max(self) -> int:
        """u-coefficient of the Euler class just below the maximum."""
        return self.euler_min + self.k

    @property
    def crit_levels(self) -> tuple[int, ...]:
        levels = [self.min_level, self.max_level]
        if self.k:
            levels.append(0)
        return tuple(sorted(levels))

    def dh(self, t) -> Fraction:
        """Area of the reduced sphere at level t (piecewise linear)."""
        t = Fraction(t)
        if not self.min_level <= t <= self.max_level:
            raise OutOfInterval(f"{t} outside [{self.min_level}, {self.max_level}]")
        e = self.euler_min if t <= 0 else self.euler_max
        return 2 - t * e

    @property
    def betti(self) -> tuple[int, int, int, int, int]:
        b2 = self.k
        b2 += 1 if self.min_level == -1 else 0
        b2 += 1 if self.max_level == 1 else 0
        return (1, 0, b2, 0, 1)


def enumerate_case3_tuples(box: int = 4) -> set[tuple[int, int, int]]:
    """Integer data (a, b, k) for actions with two sphere extrema.

    a is the area of the minimal sphere, b the Euler coefficient above it and
    k the interior point count; monotonicity forces a - b = 2 and the maximal
    sphere keeps positive area a - 2b - k.
    """
    out = set()
    for a in range(1, box + 1):
        b = a - 2
        if abs(b) > box:
            continue
        for k in range(0, box + 1):
            if a - 2 * b - k > 0:
                out.add((a, b, k))
    return out


def flip_case3_tuple(t: tuple[int, int, int]) -> tuple[int, int, int]:
    """Orientation reversal on case-III data; an involution."""
    a, b, k = t
    return (a - 2 * b - k, -b - k, k)


def dedupe_case3(tuples) -> list[tuple[int, int, int]]:
    """One representative per flip orbit: smallest |Euler coefficient| wins."""
    reps = set()
    for t in tuples:
        orbit = {t, flip_case3_tuple(t)}
        reps.add(min(orbit, key=lambda s: (abs(s[1]), s[1], s)))
    return sorted(reps)


def classify4(strict: bool = True) -> list[TFD4]:
    """All eight rows of the four-dimensional classification."""
    rows: list[TFD4] = []
    # isolated minimum and maximum: the reduced class must die at level 2
    for k in range(0, 5):
        if 2 - 2 * (k - 1) == 0:
            rows.append(TFD4(None, -2, 2, k, -1))
    # isolated minimum, sphere maximum: positive area at the top
    for k in range(0, 5):
        if 3 - k >= 1:
            rows.append(TFD4(None, -2, 1, k, -1))
    # two sphere extrema
    for a, b, k in dedupe_case3(enumerate_case3_tuples()):
        rows.append(TFD4(None, -1, 1, k, b))
    rows.sort(key=lambda r: (r.min_level != -2, r.max_level != 2, r.k, -r.euler_min))
    labeled = []
    matched = set()
    for r in rows:
        label = None
        for g in golden.GOLDEN4:
            key = (g["min_level"], g["max_level"], g["k"], g["euler_min"])
            if key == (r.min_level, r.max_level, r.k, r.euler_min):
                label = g["label"]
                matched.add(label)
                break
        labeled.append(TFD4(label, r.min_level, r.max_level, r.k, r.euler_min))
    if strict:
        extra = sorted(str(r) for r in labeled if r.label is None)
        missing = sorted(set(golden.GOLDEN4_BY_LABEL) - matched)
        if extra or missing:
            raise ClassificationMismatch(
                f"4-dimensional table mismatch (extra {extra}, missing {missing})",
                extra=extra,
                missing=missing,
            )
    return labeled


def flip_row(row: TFD4) -> TFD4:
    """Orientation reversal followed by renormalization to the emitted form."""
    min_level, max_level = -row.max_level, -row.min_level
    euler_min = -(row.euler_min + row.k)
    if max_level == 2 and min_level > -2:
        # renormalize so the isolated extremum is the minimum again
        return TFD4(row.label, -max_level, -min_level, row.k, -(euler_min + row.k))
    if min_level == -1 and max_level == 1:
        a = 2 + euler_min
        rep = dedupe_case3([(a, euler_min, row.k)])[0]
        return TFD4(row.label, -1, 1, rep[2], rep[1])
    return TFD4(row.label, min_level, max_level, row.k, euler_min)
