"""Intersection lattices of monotone symplectic 4-manifolds and exact cohomology classes.

Two lattice presentations cover every reduced space that can occur: the
blow-up basis (u, E1, ..., Ek) of a k-fold blow-up of the plane with
intersection form diag(1, -1, ..., -1), and the product basis (x, y) of a
product of spheres with form [[0,1],[1,0]].  All arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidBlowupCount, LatticeMismatch, NoExceptionalBasis

BLOWUP = "blowup"
PRODUCT = "product"


@dataclass(frozen=True)
class SurfaceLattice:
    """Second cohomology of a reduced space with its intersection pairing."""

    kind: str
    blowups: int = 0

    @property
    def rank(self) -> int:
        return 2 if self.kind == PRODUCT else self.blowups + 1

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        if self.kind == PRODUCT:
            return ((0, 1), (1, 0))
        n = self.rank
        return tuple(
            tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n))
            for i in range(n)
        )

    @property
    def anticanonical(self) -> CohClass:
        if self.kind == PRODUCT:
            return CohClass(self, (2, 2))
        return CohClass(self, (3,) + (-1,) * self.blowups)

    def basis_names(self) -> tuple[str, ...]:
        if self.kind == PRODUCT:
            return ("x", "y")
        return ("u",) + tuple(f"E{i}" for i in range(1, self.blowups + 1))

    def zero(self) -> CohClass:
        return CohClass(self, (0,) * self.rank)

    def basis_class(self, i: int) -> CohClass:
        return CohClass(self, tuple(1 if j == i else 0 for j in range(self.rank)))

    def __repr__(self) -> str:
        if self.kind == PRODUCT:
            return "SurfaceLattice(S2xS2)"
        return f"SurfaceLattice(P2#{self.blowups})"


def make_blowup_lattice(k: int) -> SurfaceLattice:
    """Lattice of the k-fold blow-up of the plane, 0 <= k <= 8."""
    if not 0 <= k <= 8:
        raise InvalidBlowupCount(f"blow-up count {k} outside 0..8")
    return SurfaceLattice(BLOWUP, k)


def product_lattice() -> SurfaceLattice:
    """Lattice of a product of two spheres."""
    return SurfaceLattice(PRODUCT)


@dataclass(frozen=True)
class CohClass:
    """Exact coefficient vector over a SurfaceLattice."""

    lattice: SurfaceLattice
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.lattice.rank:
            raise LatticeMismatch(
                f"{len(self.coeffs)} coefficients for rank {self.lattice.rank}"
            )
        object.__setattr__(self, "coeffs", tuple(_normalize(c) for c in self.coeffs))

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __add__(self, other: CohClass) -> CohClass:
        _check_same(self, other)
        return CohClass(self.lattice, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CohClass) -> CohClass:
        _check_same(self, other)
        return CohClass(self.lattice, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CohClass:
        return CohClass(self.lattice, tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar) -> CohClass:
        return CohClass(self.lattice, tuple(scalar * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __repr__(self) -> str:
        names = self.lattice.basis_names()
        terms = []
        for c, n in zip(self.coeffs, names):
            if c == 0:
                continue
            if c == 1:
                terms.append(f"+{n}")
            elif c == -1:
                terms.append(f"-{n}")
            else:
                terms.append(f"{c:+}{n}")
        if not terms:
            return "0"
        out = "".join(terms)
        return out[1:] if out.startswith("+") else out


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _check_same(a: CohClass, b: CohClass) -> None:
    if a.lattice != b.lattice:
        raise LatticeMismatch(f"{a.lattice} vs {b.lattice}")


def pair(a: CohClass, b: CohClass):
    """Intersection pairing a.gram.b, exact."""
    _check_same(a, b)
    gram = a.lattice.gram
    total = 0
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        row = gram[i]
        for j, bj in enumerate(b.coeffs):
            if bj and row[j]:
                total += ai * row[j] * bj
    return _normalize(total)


def exceptional_classes(lattice: SurfaceLattice, bound: int = 3) -> tuple[CohClass, ...]:
    """All integral classes C with C.C = -1 and anticanonical pairing 1.

    Coefficients are searched in [-bound, bound]; the result is complete for
    every blow-up lattice once bound >= 6 (the largest degree of a square -1
    sphere class on a k <= 8 blow-up), and already at bound = 3 for k <= 3.
    """
    if lattice.kind == PRODUCT:
        raise NoExceptionalBasis("product lattice has no square -1 classes")
    if bound < 3:
        raise ValueError("bound must be at least 3")
    k = lattice.blowups
    found = []
    for a in range(-bound, bound + 1):
        square_budget = a * a + 1  # sum of b_i^2
        linear_target = 1 - 3 * a  # sum of b_i
        for tail in _bounded_vectors(k, bound, square_budget, linear_target):
            found.append(CohClass(lattice, (a,) + tail))
    found.sort(key=lambda c: c.coeffs)
    return tuple(found)


def _bounded_vectors(n, bound, square_sum, linear_sum):
    """Integer vectors of length n in [-bound,bound] with given sum of squares and sum."""
    if n == 0:
        if square_sum == 0 and linear_sum == 0:
            yield ()
        return
    for b in range(-bound, bound + 1):
        rest_sq = square_sum - b * b
        rest_lin = linear_sum - b
        if rest_sq < 0:
            continue
        # remaining n-1 entries: each square <= rest_sq, |sum| <= (n-1)*bound
        if abs(rest_lin) > (n - 1) * bound:
            continue
        if rest_lin * rest_lin > rest_sq * (n - 1):
            continue  # Cauchy-Schwarz
        for tail in _bounded_vectors(n - 1, bound, rest_sq, rest_lin):
            yield (b,) + tail


def adjunction_genus(lattice: SurfaceLattice, c: CohClass):
    """Genus of a connected embedded surface in class c, or None if impossible.

    g = (c.c - K'.c + 2)/2 with K' the anticanonical class; classes whose
    genus is negative or fractional admit no connected embedded
    representative.
    """
    if not c.is_integral:
        return None
    self_int = pair(c, c)
    degree = pair(lattice.anticanonical, c)
    twice = self_int - degree + 2
    if twice % 2 != 0:
        return None
    g = twice // 2
    return g if g >= 0 else None


def li_positive(lattice: SurfaceLattice, c: CohClass, exceptional=None) -> bool:
    """Positivity against every exceptional class, required when c.c >= 0."""
    if pair(c, c) < 0:
        return True
    if lattice.kind == PRODUCT:
        return True
    if exceptional is None:
        exceptional = exceptional_classes(lattice, 6 if lattice.blowups > 3 else 3)
    return all(pair(c, e) >= 0 for e in exceptional)


def component_splittings(
    lattice: SurfaceLattice, total: CohClass, bound: int = 6
) -> list[tuple[tuple[CohClass, int], ...]]:
    """All decompositions of `total` into disjoint embedded surface classes.

    Each splitting is a multiset of (class, genus) pairs: the classes are
    integral, sum to `total`, are pairwise orthogonal, have anticanonical
    degree >= 1 and a valid adjunction genus, and every class of nonnegative
    square meets each exceptional class nonnegatively.
    """
    if not total.is_integral:
        raise ValueError("total class must be integral")
    volume = pair(lattice.anticanonical, total)
    if volume <= 0:
        return []
    exc = None
    if lattice.kind == BLOWUP:
        exc = exceptional_classes(lattice, max(bound, 3))
    candidates = []
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=lattice.rank):
        c = CohClass(lattice, coeffs)
        vol = pair(lattice.anticanonical, c)
        if not 1 <= vol <= volume:
            continue
        g = adjunction_genus(lattice, c)
        if g is None:
            continue
        if not li_positive(lattice, c, exc):
            continue
        candidates.append((c, g, vol))
    candidates.sort(key=lambda t: t[0].coeffs)
    out: list[tuple[tuple[CohClass, int], ...]] = []
    _split_search(lattice, total, volume, candidates, 0, [], out)
    return out


def _split_search(lattice, remaining, vol_left, candidates, start, chosen, out):
    if remaining.is_zero():
        if chosen:
            out.append(tuple(chosen))
        return
    if vol_left <= 0:
        return
    for i in range(start, len(candidates)):
        c, g, vol = candidates[i]
        if vol > vol_left:
            continue
        if any(pair(c, prev) != 0 for prev, _ in chosen):
            continue
        chosen.append((c, g))
        _split_search(lattice, remaining - c, vol_left - vol, candidates, i, chosen, out)
        chosen.pop()
