"""A concrete two-generator representation and its palindromic axis map.

Given a non-elementary pair (A, B), the axes of A and B have a unique
common perpendicular, the core geodesic. Every palindromic word in A and B
has its axis orthogonal to the core, so it crosses the core at a single
signed position s. The map Pi sends palindromes (and palindromic pairs,
through their double altitude) to these positions.

Positions are computed in a normalized frame: the core is moved to
[0, inf] with its lexicographically smaller endpoint at 0, and the
remaining diagonal freedom is pinned by placing the first proper generator
axis (or, for two parabolics, the double altitude of the pair) at position
0. The pin makes Pi values conjugation invariant.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    CommutingPair,
    DegenerateAxis,
    ElementaryGroup,
    IdentityElement,
    IdentityImage,
    NotPalindrome,
    OrthogonalityViolation,
    SharedEndpoint,
    SingularMatrix,
    TrivialPalindromization,
)
from .farey import primitive_word
from .geodesics import Geodesic, axis, common_perpendicular
from .sl2c import (
    INFINITY,
    GroupElement,
    boundary_key,
    classify,
    fixed_points,
    is_identity,
    matrix_from_json,
    normalize,
)
from .words import (
    Word,
    elliptic_power_factorization,  # noqa: F401  (re-exported; pure word op)
    evaluate,
    is_palindrome,
    reverse,
)

PALINDROME_WORD = "palindrome-word"
PALINDROME_PAIR = "palindrome-pair"
PARABOLIC_END = "parabolic-end"


@dataclass(frozen=True)
class PiImage:
    """Signed position of a palindromic axis along the core.

    s is the hyperbolic position; parabolic palindromes are tagged with
    s = +/-inf at the core end they fix. source records the route taken
    (single palindrome, palindrome pair, or parabolic end); word and
    element_class are display metadata.
    """

    s: float
    source: str
    word: str | None = None
    element_class: str | None = None

    @property
    def finite(self) -> bool:
        return math.isfinite(self.s)

    def to_json(self) -> dict:
        if math.isinf(self.s):
            s_out: float | str = "inf" if self.s > 0 else "-inf"
        else:
            s_out = self.s
        out: dict = {"s": s_out, "source": self.source}
        if self.word is not None:
            out["word"] = self.word
        if self.element_class is not None:
            out["class"] = self.element_class
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "PiImage":
        raw = obj["s"]
        if raw == "inf":
            s = math.inf
        elif raw == "-inf":
            s = -math.inf
        else:
            s = float(raw)
        return cls(s, obj["source"], obj.get("word"), obj.get("class"))


@dataclass(frozen=True)
class Representation:
    """Normalized generator pair with its core geodesic.

    A and B are the unimodular input generators; core is their axes' common
    perpendicular in the input frame; normalizer conjugates the input frame
    to the working frame with core = [0, inf]; norm_A and norm_B are the
    conjugated generators.
    """

    A: GroupElement
    B: GroupElement
    core: Geodesic
    normalizer: GroupElement
    norm_A: GroupElement
    norm_B: GroupElement
    tol: Tolerances

    def conjugate_in(self, g: GroupElement) -> GroupElement:
        """Move g from the input frame into the normalized frame."""
        return normalize(self.normalizer * g * self.normalizer.inverse(), self.tol)

    def evaluate_normalized(self, w: Word) -> GroupElement:
        """Image of w in the normalized frame.

        The result is not renormalized: a product of unimodular matrices is
        unimodular to relative rounding error, while recomputing its
        determinant from entries of a long product cancels catastrophically.
        """
        return evaluate(w, self.norm_A, self.norm_B)

    def to_json(self) -> dict:
        return {"A": self.A.to_json(), "B": self.B.to_json()}


def _generator_axis(g: GroupElement, tol: Tolerances) -> Geodesic:
    try:
        return axis(g, tol)
    except IdentityElement as exc:
        raise ElementaryGroup("a generator is the identity") from exc


def _frame_map(core: Geodesic, tol: Tolerances) -> GroupElement:
    """Moebius map sending core to [0, inf], smaller endpoint to 0."""
    e1, e2 = core.endpoints()
    if e2 is INFINITY:
        raw = GroupElement(1 + 0j, -e1, 0j, 1 + 0j)
    else:
        raw = GroupElement(1 + 0j, -e1, 1 + 0j, -e2)
    return normalize(raw, tol)


def _pin_from_points(pts, tol: Tolerances) -> GroupElement:
    x, y = pts
    if x is INFINITY or y is INFINITY:
        raise OrthogonalityViolation("pinning axis does not cross the core")
    scale = max(1.0, abs(x), abs(y))
    if abs(x + y) > tol.geo * scale or x == 0 or y == 0:
        raise OrthogonalityViolation(
            f"pinning axis endpoints are not antipodal: {x}, {y}"
        )
    y_star = max((x, y), key=boundary_key)
    lam = cmath.sqrt(1 / y_star)
    return normalize(GroupElement(lam, 0j, 0j, 1 / lam), tol)


def _scale_pin(a0: GroupElement, b0: GroupElement, tol: Tolerances) -> GroupElement:
    for g in (a0, b0):
        if classify(g, tol) in ("loxodromic", "elliptic"):
            return _pin_from_points(fixed_points(g, tol), tol)
    # both generators parabolic: pin the double altitude of the pair instead
    t_raw = a0 * b0 * (b0 * a0) - b0 * a0 * (a0 * b0)
    try:
        t = normalize(t_raw, tol)
    except SingularMatrix as exc:
        raise ElementaryGroup("parabolic generators commute") from exc
    return _pin_from_points(fixed_points(t, tol), tol)


def build(a_raw, b_raw, tol: Tolerances = DEFAULT_TOLERANCES) -> Representation:
    """Construct a Representation from two matrices.

    Inputs may be GroupElements, 2x2 row sequences, or flat 4-sequences;
    they are normalized to determinant 1. Raises ElementaryGroup when the
    generator axes share an endpoint (including equal or inverse
    generators and an identity generator), SingularMatrix for degenerate
    input.
    """
    A = normalize(_as_element(a_raw), tol)
    B = normalize(_as_element(b_raw), tol)
    ax_a = _generator_axis(A, tol)
    ax_b = _generator_axis(B, tol)
    try:
        core = common_perpendicular(ax_a, ax_b, tol)
    except SharedEndpoint as exc:
        raise ElementaryGroup(str(exc)) from exc
    n0 = _frame_map(core, tol)
    a0 = normalize(n0 * A * n0.inverse(), tol)
    b0 = normalize(n0 * B * n0.inverse(), tol)
    pin = _scale_pin(a0, b0, tol)
    nmap = normalize(pin * n0, tol)
    return Representation(
        A=A,
        B=B,
        core=core,
        normalizer=nmap,
        norm_A=normalize(nmap * A * nmap.inverse(), tol),
        norm_B=normalize(nmap * B * nmap.inverse(), tol),
        tol=tol,
    )


def _as_element(raw) -> GroupElement:
    if isinstance(raw, GroupElement):
        return raw
    seq = list(raw)
    if len(seq) == 2:
        (a, b), (c, d) = seq
        return GroupElement(complex(a), complex(b), complex(c), complex(d))
    if len(seq) == 4:
        a, b, c, d = seq
        return GroupElement(complex(a), complex(b), complex(c), complex(d))
    raise ValueError(f"cannot interpret {raw!r} as a 2x2 matrix")


def rep_from_json(obj: dict, tol: Tolerances = DEFAULT_TOLERANCES) -> Representation:
    """Build a representation from {"A": matrix, "B": matrix} JSON data."""
    return build(matrix_from_json(obj["A"]), matrix_from_json(obj["B"]), tol)


# the generic quadratic fixed-point solve is trusted as a cross-check only
# when the discriminant carries this many relative digits; below the gate
# the root splitting is rounding noise while the entry ratio b/c is not
_DISC_GATE = 1e-10


def _crossing_position(m: GroupElement, eps: float, tol: Tolerances) -> float:
    """Position where the axis of m crosses the core [0, inf].

    m is expected to have (anti)symmetric diagonal in the normalized frame:
    equal diagonal entries for a palindrome image, trace zero for a double
    altitude. Either way the axis endpoints are +/-sqrt(b/c), so
    s = ln|b/c| / 2, a ratio of directly accumulated entries that stays
    accurate when the quadratic root splitting has cancelled away. The
    quadratic solve is still run as an independent check whenever its
    discriminant is numerically meaningful.
    """
    scale = max(1.0, m.max_norm())
    if abs(m.a - m.d) > eps * scale:
        raise OrthogonalityViolation(
            f"diagonal asymmetry {abs(m.a - m.d):.3e} at scale {scale:.3e}: "
            "axis not orthogonal to the core"
        )
    if abs(m.b) <= tol.singular * scale or abs(m.c) <= tol.singular * scale:
        raise OrthogonalityViolation(
            "off-diagonal entry below the certifiable floor, axis endpoint "
            "indistinguishable from a core end"
        )
    ratio = m.b / m.c
    s = 0.5 * math.log(abs(ratio))
    tr = m.trace()
    disc = tr * tr - 4  # unimodular input
    if abs(disc) > _DISC_GATE * max(1.0, abs(tr) ** 2):
        x, y = fixed_points(m, tol)
        if x is INFINITY or y is INFINITY or x == 0 or y == 0:
            raise OrthogonalityViolation("quadratic solve put an endpoint on a core end")
        if abs(x + y) > eps * max(1.0, abs(x), abs(y)):
            raise OrthogonalityViolation(
                f"fixed points not antipodal: residual {abs(x + y):.3e}"
            )
        s_roots = 0.5 * (math.log(abs(x)) + math.log(abs(y)))
        if abs(s_roots - s) > max(eps, 1e-9 * max(1.0, abs(s))):
            raise OrthogonalityViolation(
                f"entry-ratio position {s:.6e} disagrees with quadratic solve "
                f"{s_roots:.6e}"
            )
    return s


def _parabolic_end(m: GroupElement, eps: float) -> float:
    """Core-end tag of a parabolic palindrome image.

    An exactly parabolic palindrome in the normalized frame is upper or
    lower triangular with equal unit diagonal, so it fixes inf (c = 0,
    tag +inf) or 0 (b = 0, tag -inf).
    """
    scale = max(1.0, m.max_norm())
    small_b = abs(m.b) <= eps * scale
    small_c = abs(m.c) <= eps * scale
    if small_c and not small_b:
        return math.inf
    if small_b and not small_c:
        return -math.inf
    raise OrthogonalityViolation(
        "parabolic palindrome image does not fix a core end"
    )


def pi_of_palindrome(rep: Representation, w: Word) -> PiImage:
    """Position of the axis of a palindromic word on the core.

    The word is evaluated in the normalized frame; its axis endpoints must
    be antipodal (+x, -x) within a word-length-scaled tolerance, and the
    position is ln|x|. Parabolic images are tagged at the core end they
    fix. OrthogonalityViolation signals numerical breakdown: an exact
    palindrome axis is always orthogonal to the core.
    """
    if not is_palindrome(w):
        raise NotPalindrome(f"{w!r} is not a palindrome")
    m = rep.evaluate_normalized(w)
    if is_identity(m, rep.tol.classify):
        raise IdentityImage(f"{w!r} evaluates to the identity")
    kind = classify(m, rep.tol)
    eps = rep.tol.geo_scaled(len(w))
    if kind == "parabolic":
        return PiImage(_parabolic_end(m, eps), PARABOLIC_END, str(w), kind)
    s = _crossing_position(m, eps, rep.tol)
    return PiImage(s, PALINDROME_WORD, str(w), kind)


def pi_of_pair(rep: Representation, u: Word, v: Word) -> PiImage:
    """Position of the double altitude of a palindrome pair on the core.

    With U, V the images of the pair, T = UVVU - VUUV is trace zero; its
    normalization is the half-turn about the common perpendicular of the
    axes of UV and VU, which crosses the core orthogonally. The position of
    that crossing is returned. The recorded element class is that of UV.
    """
    for w in (u, v):
        if not is_palindrome(w):
            raise NotPalindrome(f"{w!r} is not a palindrome")
    U = rep.evaluate_normalized(u)
    V = rep.evaluate_normalized(v)
    uv, vu = U * V, V * U
    t_raw = uv * vu - vu * uv
    scale = (uv * vu).max_norm()
    if t_raw.max_norm() <= rep.tol.classify * max(1.0, scale):
        raise CommutingPair(f"images of {u!r} and {v!r} commute")
    try:
        t = normalize(t_raw, rep.tol)
    except SingularMatrix as exc:
        raise CommutingPair(
            f"double altitude of {u!r}, {v!r} is not determined"
        ) from exc
    eps = rep.tol.geo_scaled(len(u) + len(v))
    s = _crossing_position(t, eps, rep.tol)
    return PiImage(s, PALINDROME_PAIR, f"{u}|{v}", classify(uv, rep.tol))


def pair_perpendicular_by_axes(rep: Representation, u: Word, v: Word) -> Geodesic:
    """Independent route to the double altitude: the common perpendicular
    of the axes of UV and VU in the normalized frame. Used to cross-check
    pi_of_pair, which goes through the matrix formula instead."""
    U = rep.evaluate_normalized(u)
    V = rep.evaluate_normalized(v)
    return common_perpendicular(axis(U * V, rep.tol), axis(V * U, rep.tol), rep.tol)


def palindromize(rep: Representation, w: Word) -> tuple[Word, PiImage]:
    """The palindrome P = reverse(w) w and its position on the core.

    In the normalized frame the image of P has equal diagonal entries and
    off-diagonal entries 2bd and 2ac in terms of the entries of the image
    of w, so its fixed points have the closed form +/-sqrt(P_b / P_c) and
    the position is ln|P_b / P_c| / 2. The quadratic fixed-point solve is
    compared against that form whenever it is well conditioned;
    disagreement raises OrthogonalityViolation. Raises
    TrivialPalindromization when P evaluates to (plus or minus) the
    identity, e.g. for half-turn images with axis orthogonal to the core.
    """
    pal = reverse(w) * w
    if not pal:
        raise TrivialPalindromization("empty word palindromizes to the identity")
    m = rep.evaluate_normalized(pal)
    if is_identity(m, rep.tol.classify):
        raise TrivialPalindromization(f"{w!r} palindromizes to the identity")
    return pal, pi_of_palindrome(rep, pal)


class Hexagon(tuple):
    """Six geodesics in cyclic order with named access."""

    def __new__(cls, axis_a, core, axis_b, perp_b, axis_ab, perp_a):
        return super().__new__(cls, (axis_a, core, axis_b, perp_b, axis_ab, perp_a))

    axis_a = property(lambda self: self[0])
    core = property(lambda self: self[1])
    axis_b = property(lambda self: self[2])
    perp_b = property(lambda self: self[3])
    axis_ab = property(lambda self: self[4])
    perp_a = property(lambda self: self[5])

    NAMES = ("axis_a", "core", "axis_b", "perp_b", "axis_ab", "perp_a")

    def to_json(self) -> list:
        return [
            {"name": name, **geo.to_json()} for name, geo in zip(self.NAMES, self)
        ]


def hexagon(rep: Representation) -> Hexagon:
    """The right-angled hexagon of the pair: axes of A, B, AB alternating
    with the core and the perpendiculars from the axes of A and B to the
    axis of AB. Consecutive entries in the cyclic order are orthogonal, and
    the half-turns factor the generators: A = H(perp_a) H(core) and
    B = H(core) H(perp_b) up to sign.

    Raises DegenerateAxis when A, B, or AB is parabolic.
    """
    tol = rep.tol
    ab = normalize(rep.A * rep.B, tol)
    if is_identity(ab, tol.classify):
        raise ElementaryGroup("product of the generators is the identity")
    for name, g in (("first generator", rep.A), ("second generator", rep.B),
                    ("generator product", ab)):
        if classify(g, tol) == "parabolic":
            raise DegenerateAxis(f"{name} is parabolic, no proper axis")
    ax_a = axis(rep.A, tol)
    ax_b = axis(rep.B, tol)
    ax_ab = axis(ab, tol)
    try:
        perp_a = common_perpendicular(ax_a, ax_ab, tol)
        perp_b = common_perpendicular(ax_b, ax_ab, tol)
    except SharedEndpoint as exc:
        raise ElementaryGroup(str(exc)) from exc
    return Hexagon(ax_a, rep.core, ax_b, perp_b, ax_ab, perp_a)


def rational_pi(rep: Representation, p: int, q: int) -> PiImage:
    """Pi image of the slope p/q: the palindromic representative when pq is
    even, the palindromic factor pair through its double altitude when pq
    is odd."""
    node = primitive_word(p, q)
    if node.factorization is None:
        return pi_of_palindrome(rep, node.word)
    return pi_of_pair(rep, *node.factorization)
