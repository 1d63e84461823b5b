"""Exact equivariant localization sums over fixed-point data.

Every integral is a finite sum of fixed-component contributions, each an
exact Laurent polynomial in the degree-two generator x of the classifying
space.  Surface contributions are computed in a rank-one nilpotent extension
(q^2 = 0 on a 2-sphere or torus); contributions of 4-dimensional extrema are
expanded as Laurent series in 1/x with cohomology truncated above the top
degree of the surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    InconsistentFixedPointData,
    InternalArithmeticError,
    InvalidFixedComponent,
)
from .lattice import CohClass, SurfaceLattice, pair

ONE = "one"
C1 = "c1"
C1_CUBED = "c1cubed"
INTEGRANDS = (ONE, C1, C1_CUBED)

_POWER = {ONE: 0, C1: 1, C1_CUBED: 3}


@dataclass(frozen=True)
class LaurentPoly:
    """Finitely supported map from integer x-degrees to exact rationals."""

    terms: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def from_dict(d: dict) -> LaurentPoly:
        items = tuple(sorted((k, Fraction(v)) for k, v in d.items() if v != 0))
        return LaurentPoly(items)

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly(())

    @staticmethod
    def x_power(degree: int, coeff=1) -> LaurentPoly:
        return LaurentPoly.from_dict({degree: coeff})

    def coeff(self, degree: int) -> Fraction:
        for d, c in self.terms:
            if d == degree:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        d = dict(self.terms)
        for deg, c in other.terms:
            d[deg] = d.get(deg, Fraction(0)) + c
        return LaurentPoly.from_dict(d)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + LaurentPoly(tuple((d, -c) for d, c in other.terms))

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        d: dict[int, Fraction] = {}
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                deg = d1 + d2
                d[deg] = d.get(deg, Fraction(0)) + c1 * c2
        return LaurentPoly.from_dict(d)

    def scale(self, s) -> LaurentPoly:
        return LaurentPoly.from_dict({d: c * s for d, c in self.terms})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for d, c in reversed(self.terms):
            piece = f"+{c}" if c > 0 else f"{c}"
            if d == 1:
                piece += "*x"
            elif d != 0:
                piece += f"*x^{d}"
            bits.append(piece)
        return " ".join(bits)


@dataclass(frozen=True)
class IsolatedPoint:
    """Isolated fixed point with semifree tangent weights."""

    weights: tuple[int, int, int]


@dataclass(frozen=True)
class InteriorSurface:
    """Fixed surface at an interior level, embedded in the reduced space."""

    surface_class: CohClass
    genus: int
    normal_degrees: tuple[int, int]  # (positive bundle, negative bundle)


@dataclass(frozen=True)
class ExtremalSurface:
    """Extremal fixed 2-sphere; normal bundle splits with these degrees."""

    normal_degrees: tuple[int, int]


@dataclass(frozen=True)
class ExtremalFourManifold:
    """Extremal 4-dimensional fixed component, identified with a reduced space."""

    lattice: SurfaceLattice
    euler_at_boundary: CohClass


@dataclass(frozen=True)
class FixedComponent:
    """A fixed component together with its balanced moment-map level."""

    level: int
    spec: object

    def __post_init__(self):
        s = self.spec
        if isinstance(s, IsolatedPoint):
            if sorted(abs(w) for w in s.weights) != [1, 1, 1]:
                raise InvalidFixedComponent(f"weights {s.weights} not semifree")
            if self.level != -sum(s.weights):
                raise InvalidFixedComponent(
                    f"level {self.level} != -sum{s.weights} (balanced condition)"
                )
        elif isinstance(s, InteriorSurface):
            bplus, bminus = s.normal_degrees
            if bplus + bminus != pair(s.surface_class, s.surface_class):
                raise InvalidFixedComponent(
                    "normal degrees must sum to the class self-intersection"
                )
            if s.genus < 0:
                raise InvalidFixedComponent("negative genus")
        elif isinstance(s, ExtremalSurface):
            if self.level not in (-2, 2):
                raise InvalidFixedComponent("extremal sphere must sit at level +-2")
        elif isinstance(s, ExtremalFourManifold):
            if self.level not in (-1, 1):
                raise InvalidFixedComponent("4-dim extremum must sit at level +-1")
            if s.euler_at_boundary.lattice != s.lattice:
                raise InvalidFixedComponent("boundary Euler class over wrong lattice")
        else:
            raise InvalidFixedComponent(f"unknown component spec {s!r}")

    @property
    def index(self) -> int:
        """Morse-Bott index (twice the number of negative weights)."""
        s = self.spec
        if isinstance(s, IsolatedPoint):
            return 2 * sum(1 for w in s.weights if w < 0)
        if isinstance(s, InteriorSurface):
            return 2
        if isinstance(s, ExtremalSurface):
            return 4 if self.level > 0 else 0
        return 2 if self.level > 0 else 0

    @property
    def dim(self) -> int:
        s = self.spec
        if isinstance(s, IsolatedPoint):
            return 0
        if isinstance(s, ExtremalFourManifold):
            return 4
        return 2


def point(level: int, weights: tuple[int, int, int]) -> FixedComponent:
    return FixedComponent(level, IsolatedPoint(tuple(weights)))


def contribution(fc: FixedComponent, alpha: str) -> LaurentPoly:
    """Localization summand of the component for one of the three integrands."""
    if alpha not in _POWER:
        raise ValueError(f"unknown integrand {alpha!r}")
    p = _POWER[alpha]
    s = fc.spec
    if isinstance(s, IsolatedPoint):
        sigma = sum(s.weights)
        prod = s.weights[0] * s.weights[1] * s.weights[2]
        return LaurentPoly.x_power(p - 3, Fraction(sigma**p, prod))
    if isinstance(s, InteriorSurface):
        return _interior_surface_contribution(s, p)
    if isinstance(s, ExtremalSurface):
        return _extremal_sphere_contribution(s, fc.level, p)
    if isinstance(s, ExtremalFourManifold):
        return _four_manifold_contribution(s, fc.level, p)
    raise InvalidFixedComponent(f"unknown component spec {s!r}")


def _interior_surface_contribution(s: InteriorSurface, p: int) -> LaurentPoly:
    # Normal weights (+1, -1): equivariant Euler class (x + b+ q)(-x + b- q)
    # with q^2 = 0, so the inverse is -x^-2 - (b- - b+) q x^-3.  The restricted
    # first Chern class is Vol(Z) q, hence the cube contributes nothing.
    bplus, bminus = s.normal_degrees
    volume = pair(s.surface_class, s.surface_class) + 2 - 2 * s.genus
    inv_const = LaurentPoly.x_power(-2, -1)
    inv_q = LaurentPoly.x_power(-3, -(bminus - bplus))
    if p == 0:
        num_const, num_q = LaurentPoly.x_power(0), LaurentPoly.zero()
    elif p == 1:
        num_const, num_q = LaurentPoly.zero(), LaurentPoly.x_power(0, volume)
    else:
        return LaurentPoly.zero()  # (Vol q)^3 = 0
    # fiber integration keeps the q-coefficient
    return num_const * inv_q + num_q * inv_const


def _extremal_sphere_contribution(s: ExtremalSurface, level: int, p: int) -> LaurentPoly:
    # Maximum at +2: weights (-1,-1); minimum at -2: weights (+1,+1).
    d_sum = s.normal_degrees[0] + s.normal_degrees[1]
    w = -1 if level > 0 else 1
    # Euler class (wx + d1 q)(wx + d2 q) = x^2 + w d_sum x q,
    # inverse x^-2 - w d_sum q x^-3; restriction of c1 is 2wx + (d_sum + 2) q.
    inv_const = LaurentPoly.x_power(-2)
    inv_q = LaurentPoly.x_power(-3, -w * d_sum)
    num_const = LaurentPoly.zero()
    num_q = LaurentPoly.zero()
    if p == 0:
        num_const = LaurentPoly.x_power(0)
    else:
        # (2wx + (d_sum+2) q)^p, keeping at most one q
        num_const = LaurentPoly.x_power(p, Fraction((2 * w) ** p))
        num_q = LaurentPoly.x_power(p - 1, Fraction(p * (2 * w) ** (p - 1) * (d_sum + 2)))
    return num_const * inv_q + num_q * inv_const


def _four_manifold_contribution(s: ExtremalFourManifold, level: int, p: int) -> LaurentPoly:
    # Maximum at +1 (normal weight -1): Euler class -x - e, restricted c1 is
    # c1(S) - x - e; the mirrored minimum at -1 carries x + e and c1(S) + x + e,
    # where e is the Euler class of the circle bundle on the boundary slice.
    e = s.euler_at_boundary
    c1 = s.lattice.anticanonical
    w = -1 if level > 0 else 1
    a_class = c1 - e if level > 0 else c1 + e
    # the Euler class is w(x + e): max 1/(-x-e) = -x^-1 + e x^-2 - e^2 x^-3,
    # min 1/(x+e) = x^-1 - e x^-2 + e^2 x^-3
    ee = pair(e, e)
    inv = (
        (0, LaurentPoly.x_power(-1, w)),  # scalar part
        (1, LaurentPoly.x_power(-2, -w)),  # coefficient of e
        (2, LaurentPoly.x_power(-3, w)),  # coefficient of e.e
    )
    # expand (a + wx)^p = sum binom(p, j) a^j (wx)^(p-j), truncating a^j at j = 2
    num = []  # (power of a_class, LaurentPoly)
    for j in range(0, min(p, 2) + 1):
        num.append((j, LaurentPoly.x_power(p - j, Fraction(comb(p, j) * w ** (p - j)))))
    aa = pair(a_class, a_class)
    ae = pair(a_class, e)
    out = LaurentPoly.zero()
    for ja, pa in num:
        for je, pe in inv:
            if ja + je != 2:
                continue  # fiber integration keeps total cohomology degree 4
            if ja == 2:
                scalar = aa
            elif ja == 1:
                scalar = ae
            else:
                scalar = ee
            out = out + (pa * pe).scale(scalar)
    return out


def integrate(components, alpha: str) -> LaurentPoly:
    """Sum of localization contributions over all fixed components."""
    comps = getattr(components, "components", components)
    total = LaurentPoly.zero()
    for fc in comps:
        total = total + contribution(fc, alpha)
    return total


def chern_number(components) -> int:
    """The cube of the first Chern class evaluated on the fundamental class.

    Requires the two lower localization identities to vanish exactly; the
    answer is the constant coefficient of the degree-six sum.
    """
    if not integrate(components, ONE).is_zero():
        raise InconsistentFixedPointData("sum of 1/Euler does not vanish")
    if not integrate(components, C1).is_zero():
        raise InconsistentFixedPointData("sum of c1/Euler does not vanish")
    total = integrate(components, C1_CUBED)
    for d, c in total.terms:
        if d < 0 and c != 0:
            raise InternalArithmeticError(f"negative-degree coefficient {c} at x^{d}")
    value = total.coeff(0)
    if value.denominator != 1:
        raise InternalArithmeticError(f"non-integral Chern number {value}")
    return int(value)


def betti(components) -> tuple[int, ...]:
    """Betti numbers b_0..b_6 from the perfect Morse-Bott decomposition."""
    comps = getattr(components, "components", components)
    b = [0] * 7
    for fc in comps:
        shift = fc.index
        for deg, mult in _component_poincare(fc):
            b[shift + deg] += mult
    return tuple(b)


def _component_poincare(fc: FixedComponent):
    s = fc.spec
    if isinstance(s, IsolatedPoint):
        return ((0, 1),)
    if isinstance(s, InteriorSurface):
        return ((0, 1), (1, 2 * s.genus), (2, 1))
    if isinstance(s, ExtremalSurface):
        return ((0, 1), (2, 1))
    return ((0, 1), (2, s.lattice.rank), (4, 1))
