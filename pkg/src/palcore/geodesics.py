"""Geodesics of hyperbolic 3-space as unordered endpoint pairs on the boundary.

A geodesic is determined by its two ideal endpoints in C u {inf}. The
half-turn about a geodesic is realized by a trace-zero unimodular matrix
(the line matrix); orthogonality and common perpendiculars reduce to trace
conditions on products of line matrices.

A degenerate pair [p, p] is allowed as a marker for the "axis" of a
parabolic fixing p; it has no line matrix but a common perpendicular from
it is still defined (the perpendicular must end at p).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DegenerateGeodesic, NotOrthogonal, SharedEndpoint, SingularMatrix
from .sl2c import (
    INFINITY,
    BoundaryPoint,
    GroupElement,
    boundary_from_json,
    boundary_key,
    boundary_to_json,
    chordal_distance,
    classify,
    fixed_points,
    normalize,
)


@dataclass(frozen=True)
class Geodesic:
    """Unordered pair of boundary points, stored in canonical order.

    Canonical order is lexicographic by (Re, Im) with inf greatest, so two
    Geodesics with the same endpoint set compare equal.
    """

    e1: BoundaryPoint
    e2: BoundaryPoint

    def __post_init__(self) -> None:
        a, b = self.e1, self.e2
        if not isinstance(a, type(INFINITY)):
            object.__setattr__(self, "e1", complex(a))
            a = self.e1
        if not isinstance(b, type(INFINITY)):
            object.__setattr__(self, "e2", complex(b))
            b = self.e2
        if boundary_key(a) > boundary_key(b):
            object.__setattr__(self, "e1", b)
            object.__setattr__(self, "e2", a)

    @property
    def degenerate(self) -> bool:
        if self.e1 is INFINITY or self.e2 is INFINITY:
            return self.e1 is INFINITY and self.e2 is INFINITY
        return self.e1 == self.e2

    def endpoints(self) -> tuple[BoundaryPoint, BoundaryPoint]:
        return (self.e1, self.e2)

    def separation(self) -> float:
        """Chordal distance between the two endpoints."""
        return chordal_distance(self.e1, self.e2)

    def to_json(self) -> dict:
        return {"e1": boundary_to_json(self.e1), "e2": boundary_to_json(self.e2)}

    @classmethod
    def from_json(cls, obj: dict) -> "Geodesic":
        return cls(boundary_from_json(obj["e1"]), boundary_from_json(obj["e2"]))

    def __repr__(self) -> str:
        return f"Geodesic[{self.e1}, {self.e2}]"


def geodesic_distance(g1: Geodesic, g2: Geodesic) -> float:
    """Max chordal endpoint distance, minimized over the two pairings."""
    a1, a2 = g1.endpoints()
    b1, b2 = g2.endpoints()
    straight = max(chordal_distance(a1, b1), chordal_distance(a2, b2))
    crossed = max(chordal_distance(a1, b2), chordal_distance(a2, b1))
    return min(straight, crossed)


def transform(g: Geodesic, m: GroupElement) -> Geodesic:
    """Image of a geodesic under the Moebius action of m."""
    return Geodesic(m.apply(g.e1), m.apply(g.e2))


def axis(g: GroupElement, tol: Tolerances = DEFAULT_TOLERANCES) -> Geodesic:
    """Invariant geodesic of a non-identity element.

    Loxodromic and elliptic elements give the geodesic between their fixed
    points. A parabolic gives the degenerate marker [p, p] at its single
    fixed point. Raises IdentityElement for (plus or minus) the identity.
    """
    return Geodesic(*fixed_points(g, tol))


def line_matrix(g: Geodesic, tol: Tolerances = DEFAULT_TOLERANCES) -> GroupElement:
    """Trace-zero unimodular matrix whose Moebius action is the half-turn
    about g. It fixes both endpoints and squares to -I.

    Raises DegenerateGeodesic for a marker [p, p].
    """
    if g.degenerate:
        raise DegenerateGeodesic(f"no line matrix for degenerate {g}")
    if g.e2 is INFINITY:
        p = g.e1
        raw = GroupElement(1 + 0j, -2 * p, 0j, -1 + 0j)
    else:
        p, q = g.e1, g.e2
        raw = GroupElement(p + q, -2 * p * q, 2 + 0j, -(p + q))
    return normalize(raw, tol)


def half_turn_conjugate(
    axis_geo: Geodesic, g: GroupElement, tol: Tolerances = DEFAULT_TOLERANCES
) -> GroupElement:
    """Conjugate g by the half-turn about axis_geo: H g H^-1."""
    h = line_matrix(axis_geo, tol)
    return h * g * h.inverse()


def are_orthogonal(
    g1: Geodesic, g2: Geodesic, tol: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """True iff the geodesics meet at a right angle in hyperbolic space.

    Criterion: tr(L1 L2) = 0 for the line matrices, tested against tol.geo
    relative to the product's entry scale.
    """
    prod = line_matrix(g1, tol) * line_matrix(g2, tol)
    return abs(prod.trace()) <= tol.geo * max(1.0, prod.max_norm())


def orthogonality_residual(
    g1: Geodesic, g2: Geodesic, tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """|tr(L1 L2)| scaled by the product's entry size; 0 means orthogonal."""
    prod = line_matrix(g1, tol) * line_matrix(g2, tol)
    return abs(prod.trace()) / max(1.0, prod.max_norm())


def _shared_endpoint(g1: Geodesic, g2: Geodesic, eps: float) -> bool:
    return any(
        chordal_distance(u, v) <= eps
        for u in g1.endpoints()
        for v in g2.endpoints()
    )


def common_perpendicular(
    g1: Geodesic, g2: Geodesic, tol: Tolerances = DEFAULT_TOLERANCES
) -> Geodesic:
    """The unique geodesic orthogonal to both inputs.

    Both inputs proper: take the trace-zero part of L1 L2, normalize, and
    read off its fixed points; when the inputs intersect this yields the
    perpendicular through the intersection point, so there is a single code
    path. A degenerate marker [p, p] contributes p as one endpoint, with the
    other endpoint the half-turn image of p about the proper input (or the
    second marker point).

    Raises SharedEndpoint when the inputs share an endpoint within tol.geo
    in the chordal metric (an elementary configuration).
    """
    if _shared_endpoint(g1, g2, tol.geo):
        raise SharedEndpoint(f"{g1} and {g2} share an endpoint")
    if g1.degenerate and g2.degenerate:
        return Geodesic(g1.e1, g2.e1)
    if g1.degenerate or g2.degenerate:
        marker, proper = (g1, g2) if g1.degenerate else (g2, g1)
        p = marker.e1
        q = line_matrix(proper, tol).apply(p)
        return Geodesic(p, q)
    prod = line_matrix(g1, tol) * line_matrix(g2, tol)
    half_tr = prod.trace() / 2
    traceless = GroupElement(
        prod.a - half_tr, prod.b, prod.c, prod.d - half_tr
    )
    try:
        t = normalize(traceless, tol)
    except SingularMatrix as exc:
        raise SharedEndpoint(
            f"perpendicular between {g1} and {g2} is not determined"
        ) from exc
    return Geodesic(*fixed_points(t, tol))


def position_on_vertical_axis(
    g: Geodesic,
    tol: Tolerances = DEFAULT_TOLERANCES,
    eps: float | None = None,
) -> float:
    """Signed position along [0, inf] where g crosses it orthogonally.

    g must have antipodal endpoints x and -x (the orthogonality condition
    against the vertical axis); the crossing height is then |x| and the
    hyperbolic position is ln|x|. The value returned is the symmetric mean
    (ln|e1| + ln|e2|)/2, which equals ln|x| for exact input.

    eps overrides tol.geo as the antipodality tolerance (relative to the
    endpoint magnitude).
    """
    if g.degenerate:
        raise DegenerateGeodesic(f"no crossing position for degenerate {g}")
    if g.e1 is INFINITY or g.e2 is INFINITY:
        raise NotOrthogonal(f"{g} has an end at infinity, cannot cross [0, inf]")
    x, y = g.e1, g.e2
    if eps is None:
        eps = tol.geo
    scale = max(1.0, abs(x), abs(y))
    if abs(x + y) > eps * scale:
        raise NotOrthogonal(f"endpoints of {g} are not antipodal: |x+y|={abs(x + y)}")
    if x == 0 or y == 0:
        raise NotOrthogonal(f"{g} has an end at the origin, cannot cross [0, inf]")
    return 0.5 * (math.log(abs(x)) + math.log(abs(y)))


VERTICAL_AXIS = Geodesic(0j, INFINITY)


def is_proper_axis(g: GroupElement, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """True if g has a non-degenerate axis (loxodromic or elliptic)."""
    return classify(g, tol) in ("loxodromic", "elliptic")
