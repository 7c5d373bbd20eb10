"""Shared fixtures: canonical control representations and seeded random
generators in general position."""

import math
import random

import pytest

from palcore.config import DEFAULT_TOLERANCES
from palcore.errors import PalcoreError
from palcore.representation import Representation, build
from palcore.sl2c import GroupElement, classify, normalize
from palcore.words import LETTERS, Word, is_palindrome


def hyperbolic_on_axis(r: float, half_trace: float) -> GroupElement:
    """Hyperbolic element with axis [-r, r] and trace 2*half_trace."""
    c = half_trace
    s = math.sqrt(c * c - 1)
    return GroupElement(c, r * s, s / r, c)


def loxodromic_between(p: complex, q: complex, lam: complex) -> GroupElement:
    """Loxodromic with fixed points p, q and multiplier lam (|lam| != 1)."""
    frame = normalize(GroupElement(p, q, 1, 1))
    core_form = GroupElement(lam, 0, 0, 1 / lam)
    return frame * core_form * frame.inverse()


def _separated_points(rng: random.Random, count: int, min_gap: float = 0.45):
    pts: list[complex] = []
    while len(pts) < count:
        z = complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))
        if all(abs(z - w) >= min_gap for w in pts):
            pts.append(z)
    return pts


def random_multiplier(rng: random.Random) -> complex:
    # stretch kept away from 1 and angle away from pi so traces stay clear
    # of the parabolic and near-elliptic bands
    r = rng.uniform(1.5, 2.6)
    theta = rng.uniform(-0.9, 0.9)
    return r * complex(math.cos(theta), math.sin(theta))


def random_loxodromic(rng: random.Random) -> GroupElement:
    p, q = _separated_points(rng, 2)
    return loxodromic_between(p, q, random_multiplier(rng))


def random_mobius(rng: random.Random) -> GroupElement:
    while True:
        entries = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(4)]
        g = GroupElement(*entries)
        if abs(g.det()) > 0.1:
            return normalize(g)


def random_representation(seed: int) -> Representation:
    """Seeded non-elementary pair of loxodromics with separated axes."""
    rng = random.Random(seed)
    for _ in range(64):
        p1, q1, p2, q2 = _separated_points(rng, 4)
        A = loxodromic_between(p1, q1, random_multiplier(rng))
        B = loxodromic_between(p2, q2, random_multiplier(rng))
        if classify(A, DEFAULT_TOLERANCES) != "loxodromic":
            continue
        if classify(B, DEFAULT_TOLERANCES) != "loxodromic":
            continue
        try:
            return build(A, B)
        except PalcoreError:
            continue
    raise RuntimeError(f"no representation in general position for seed {seed}")


def random_palindrome(rng: random.Random, max_half: int = 4) -> Word:
    """Nonempty reduced palindromic word."""
    while True:
        half = [rng.choice(LETTERS) for _ in range(rng.randint(1, max_half))]
        center = [rng.choice(LETTERS)] if rng.random() < 0.5 else []
        w = Word(tuple(half) + tuple(center) + tuple(reversed(half)))
        if w and is_palindrome(w):
            return w


@pytest.fixture
def tol():
    return DEFAULT_TOLERANCES


@pytest.fixture
def rep1():
    """Fuchsian pair: axes [-1, 1] and [-2, 2], translation length 2 each.

    Normalizes to the identity frame, so positions on the core are directly
    readable: the a-axis sits at 0 and the b-axis at ln 2.
    """
    c1, s1 = math.cosh(1), math.sinh(1)
    A = GroupElement(c1, s1, s1, c1)
    B = GroupElement(c1, 2 * s1, s1 / 2, c1)
    return build(A, B)


@pytest.fixture
def schottky():
    """Classical Schottky pair: separated axes [-1, 1] and [-8, 8], trace 3."""
    return build(hyperbolic_on_axis(1.0, 1.5), hyperbolic_on_axis(8.0, 1.5))


@pytest.fixture
def mu4():
    """Discrete parabolic pair: translation by 1 and its transpose at mu=4."""
    return build(GroupElement(1, 1, 0, 1), GroupElement(1, 0, 4, 1))


@pytest.fixture
def mu_half():
    """Non-discrete parabolic pair (Jorgensen value 0.25)."""
    return build(GroupElement(1, 1, 0, 1), GroupElement(1, 0, 0.5, 1))
