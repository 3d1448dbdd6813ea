"""Constructors for the concrete polytope families under study.

All data is exact rational. Regular polygons are impossible over the
rationals, but every count we verify is combinatorial, so any convex
polygon works; we fix one reproducible recipe built from rational points
on the unit circle. The paired-polygon product family and the prism carry
at most two variables per inequality; the dual cyclic polytope is the
dense maximizer they are compared against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisibilityError
from .model import Constraint, FamilyTag, HPolytope
from .ratlin import ONE, ZERO, Vec


@dataclass(frozen=True)
class PolygonSpec:
    """An m-gon to be placed on one pair of ambient coordinates."""
    m: int
    variable_pair: tuple[int, int]

    def __post_init__(self):
        if self.m < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        if not self.variable_pair[0] < self.variable_pair[1]:
            raise ValueError("variable pair must be ordered")


def polygon_vertices(m: int) -> list[Vec]:
    """m rational points on the unit circle in counterclockwise order.

    Uses the parametrization p(t) = ((1-t^2)/(1+t^2), 2t/(1+t^2)) at the
    m-1 integer parameters t = -floor((m-1)/2), ..., ceil((m-1)/2)-1,
    followed by the point (-1, 0). Distinct circle points are in strictly
    convex position, and listing them by increasing angle keeps the order
    counterclockwise.
    """
    if m < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    points: list[Vec] = []
    for t in range(-((m - 1) // 2), m // 2):
        den = Fraction(1 + t * t)
        points.append((Fraction(1 - t * t) / den, Fraction(2 * t) / den))
    points.append((-ONE, ZERO))
    return points


def _polygon_edges(vertices: list[Vec]) -> list[tuple[Vec, Fraction]]:
    """Outward edge inequalities (a, b) with a.x <= b for a ccw vertex list."""
    m = len(vertices)
    edges = []
    for j in range(m):
        u = vertices[j]
        v = vertices[(j + 1) % m]
        a = (v[1] - u[1], u[0] - v[0])  # right normal of u -> v, outward for ccw
        b = a[0] * u[0] + a[1] * u[1]
        for w in vertices:
            if a[0] * w[0] + a[1] * w[1] > b:
                raise AssertionError("edge normal does not contain the polygon")
        edges.append((a, b))
    return edges


def convex_polygon(m: int) -> HPolytope:
    """A convex m-gon in the plane: m constraints, m vertices, origin inside."""
    if m < 3:
        raise ValueError(f"m = {m}: a polygon needs at least 3 vertices")
    edges = _polygon_edges(polygon_vertices(m))
    constraints = tuple(
        Constraint(a, b, label=f"e{j}") for j, (a, b) in enumerate(edges))
    return HPolytope(2, constraints, FamilyTag("polygon", m, 2))


def embedded_polygon_rows(spec: PolygonSpec, dim: int) -> list[Constraint]:
    """The m-gon's rows placed on the given coordinate pair of R^dim."""
    lo, hi = spec.variable_pair
    pair_index = lo // 2
    rows = []
    for j, (a, b) in enumerate(_polygon_edges(polygon_vertices(spec.m))):
        coeffs = [ZERO] * dim
        coeffs[lo] = a[0]
        coeffs[hi] = a[1]
        rows.append(Constraint(tuple(coeffs), b, label=f"p{pair_index}e{j}"))
    return rows


def pstar(n: int, d: int) -> HPolytope:
    """The paired-polygon construction: d/2 disjoint polygons for even d.

    Even d places one (n/(d/2))-gon on each coordinate pair, giving a
    bounded simple d-polytope whose every row touches two variables. Odd d
    applies the even construction to the first d-1 coordinates with n-1
    rows and adds the single half-space x_d >= 0; the result is a pointed
    but unbounded polyhedron, kept verbatim rather than capped.
    """
    if d < 2:
        raise ValueError("dimension must be at least 2")
    half = d // 2
    if d % 2 == 0:
        if n % half != 0:
            raise DivisibilityError(
                f"floor(d/2) = {half} must be a divisor of n = {n} when d is even")
        m = n // half
        if m < 3:
            raise DivisibilityError(
                f"n/(d/2) = {m} < 3: each coordinate pair needs a polygon")
        rows: list[Constraint] = []
        for i in range(half):
            rows.extend(embedded_polygon_rows(PolygonSpec(m, (2 * i, 2 * i + 1)), d))
        return HPolytope(d, tuple(rows), FamilyTag("pstar", n, d))
    if (n - 1) % half != 0:
        raise DivisibilityError(
            f"floor(d/2) = {half} must be a divisor of n-1 = {n - 1} when d is odd")
    m = (n - 1) // half
    if m < 3:
        raise DivisibilityError(
            f"(n-1)/floor(d/2) = {m} < 3: each coordinate pair needs a polygon")
    rows = []
    for i in range(half):
        rows.extend(embedded_polygon_rows(PolygonSpec(m, (2 * i, 2 * i + 1)), d))
    last = [ZERO] * d
    last[d - 1] = -ONE
    rows.append(Constraint(tuple(last), ZERO, label="xlast_lo"))
    return HPolytope(d, tuple(rows), FamilyTag("pstar", n, d))


def dual_cyclic(n: int, d: int) -> HPolytope:
    """A geometric realization of the dual cyclic polytope c*(n, d).

    Takes the n moment-curve points m(t) = (t, t^2, ..., t^d) at t = 1..n,
    recenters them at their centroid so the origin is interior, and emits
    the polar-style rows (m(t_i) - centroid).y <= 1. Integer parameters are
    generic on the moment curve, so the result is simple, bounded, and
    nonredundant with the extremal face counts.
    """
    if n <= d:
        raise ValueError(f"need more constraints than dimensions, got n={n} d={d}")
    if d < 2:
        raise ValueError("dimension must be at least 2")
    points = [tuple(Fraction(t ** j) for j in range(1, d + 1)) for t in range(1, n + 1)]
    centroid = tuple(sum(p[j] for p in points) / n for j in range(d))
    rows = []
    for i, p in enumerate(points):
        coeffs = tuple(p[j] - centroid[j] for j in range(d))
        rows.append(Constraint(coeffs, ONE, label=f"t{i + 1}"))
    return HPolytope(d, tuple(rows), FamilyTag("dualcyclic", n, d))


def prism3(n: int) -> HPolytope:
    """A 3-polytope with n rows attaining the maximal d=3 face counts.

    An (n-2)-gon on the first two coordinates, extruded by 0 <= x_3 <= 1.
    Two variables per inequality, f_0 = 2n-4 and f_1 = 3n-6.
    """
    if n < 5:
        raise ValueError(f"n = {n}: the prism needs at least 5 constraints")
    rows = []
    for j, (a, b) in enumerate(_polygon_edges(polygon_vertices(n - 2))):
        rows.append(Constraint((a[0], a[1], ZERO), b, label=f"e{j}"))
    rows.append(Constraint((ZERO, ZERO, -ONE), ZERO, label="z_lo"))
    rows.append(Constraint((ZERO, ZERO, ONE), ONE, label="z_hi"))
    return HPolytope(3, tuple(rows), FamilyTag("prism3", n, 3))


def from_family(tag: FamilyTag) -> HPolytope:
    """Rebuild a constructor instance from its family tag."""
    if tag.name == "pstar":
        return pstar(tag.n, tag.d)
    if tag.name == "dualcyclic":
        return dual_cyclic(tag.n, tag.d)
    if tag.name == "prism3":
        return prism3(tag.n)
    if tag.name == "polygon":
        return convex_polygon(tag.n)
    raise ValueError(f"unknown family {tag.name!r}")
