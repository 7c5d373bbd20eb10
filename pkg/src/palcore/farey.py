"""Enumeration of primitive conjugacy classes by non-negative rationals.

Reduced slopes p/q (including 1/0) index primitive classes of the rank-2
free group through the Stern-Brocot tree. Each slope carries a preferred
representative word e_{p/q} with q letters a and p letters b:

- pq even: the unique palindromic rotation of the Christoffel word;
- pq odd: the product of the parent representatives in ascending slope
  order, which factors e_{p/q} into two palindromes.

Every constructed word is checked at runtime to be cyclically equivalent
to the Christoffel word of its slope; a failure raises SchemeViolation
rather than silently repairing the scheme.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Iterable

from .errors import InvalidRational, SchemeViolation
from .words import Word, cyclically_equal, is_palindrome

Slope = tuple[int, int]


def validate_slope(p: int, q: int) -> None:
    if not (isinstance(p, int) and isinstance(q, int)):
        raise InvalidRational(f"slope entries must be integers, got {p!r}/{q!r}")
    if p < 0 or q < 0:
        raise InvalidRational(f"negative slope {p}/{q} is out of range")
    if p == 0 and q == 0:
        raise InvalidRational("0/0 is not a slope")
    if math.gcd(p, q) != 1:
        raise InvalidRational(f"{p}/{q} is not in lowest terms")


def _descend(p: int, q: int) -> tuple[Slope, Slope, int]:
    """Stern-Brocot descent to p/q: returns (lower parent, upper parent,
    tree depth), where the roots 0/1 and 1/0 have depth 0."""
    lo, hi = (0, 1), (1, 0)
    steps = 0
    while True:
        steps += 1
        mp, mq = lo[0] + hi[0], lo[1] + hi[1]
        if (mp, mq) == (p, q):
            return lo, hi, steps
        if p * mq > mp * q:
            lo = (mp, mq)
        else:
            hi = (mp, mq)


def farey_parents(p: int, q: int) -> tuple[Slope, Slope]:
    """The two Farey parents of p/q in ascending order.

    They satisfy the mediant property (sums of numerators and denominators)
    and the unimodularity |ru - ts| = 1. The roots 0/1 and 1/0 have no
    parents and raise InvalidRational.
    """
    validate_slope(p, q)
    if (p, q) in ((0, 1), (1, 0)):
        raise InvalidRational(f"root slope {p}/{q} has no parents")
    lo, hi, _ = _descend(p, q)
    return lo, hi


def slope_depth(p: int, q: int) -> int:
    """Mediant steps from the tree roots: 0/1 and 1/0 are 0, 1/1 is 1."""
    validate_slope(p, q)
    if (p, q) in ((0, 1), (1, 0)):
        return 0
    return _descend(p, q)[2]


def christoffel(p: int, q: int) -> Word:
    """Lower Christoffel word of slope p/q: q letters a and p letters b.

    Letter k (1-based) is b exactly when floor(kp/n) increases at k, with
    n = p + q.
    """
    validate_slope(p, q)
    n = p + q
    letters = tuple(
        2 if (k * p) // n > ((k - 1) * p) // n else 1 for k in range(1, n + 1)
    )
    return Word(letters)


def _rotations(w: Word) -> list[Word]:
    n = len(w)
    return [Word(w.letters[i:] + w.letters[:i]) for i in range(n)]


@dataclass(frozen=True)
class FareyNode:
    """A slope with its representative word and bookkeeping.

    factorization is present exactly when pq is odd; it is the pair of
    palindromic parent words whose product is the representative.
    """

    p: int
    q: int
    depth: int
    parents: tuple[Slope, Slope] | None
    word: Word
    factorization: tuple[Word, Word] | None

    @property
    def slope(self) -> Slope:
        return (self.p, self.q)


@lru_cache(maxsize=None)
def primitive_word(p: int, q: int) -> FareyNode:
    """Representative word e_{p/q}, with palindromic factorization when
    pq is odd. See the module docstring for the construction."""
    validate_slope(p, q)
    base = christoffel(p, q)
    if (p, q) == (0, 1) or (p, q) == (1, 0):
        return FareyNode(p, q, 0, None, base, None)
    lo, hi, depth = _descend(p, q)
    if (p * q) % 2 == 0:
        pals = [rot for rot in _rotations(base) if is_palindrome(rot)]
        if len(pals) != 1:
            raise SchemeViolation(
                f"{p}/{q}: expected exactly one palindromic rotation, found {len(pals)}"
            )
        word = pals[0]
        factorization = None
    else:
        left = primitive_word(*lo).word
        right = primitive_word(*hi).word
        if not (is_palindrome(left) and is_palindrome(right)):
            raise SchemeViolation(f"{p}/{q}: parent words are not both palindromic")
        word = left * right
        factorization = (left, right)
    if not cyclically_equal(word, base):
        raise SchemeViolation(
            f"{p}/{q}: representative {word} is not conjugate to Christoffel {base}"
        )
    return FareyNode(p, q, depth, (lo, hi), word, factorization)


def are_associates(s1: Slope, s2: Slope) -> bool:
    """True iff the primitive classes are associates: |ps - rq| = 1."""
    p, q = s1
    r, s = s2
    validate_slope(p, q)
    validate_slope(r, s)
    return abs(p * s - r * q) == 1


def enumerate_farey(depth: int) -> list[FareyNode]:
    """All slopes within `depth` mediant steps of the roots, as populated
    nodes in deterministic (q, p) order. Depth 0 is just 0/1 and 1/0."""
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    slopes: list[Slope] = [(0, 1), (1, 0)]

    def gather(lo: Slope, hi: Slope, level: int) -> None:
        if level > depth:
            return
        med = (lo[0] + hi[0], lo[1] + hi[1])
        slopes.append(med)
        gather(lo, med, level + 1)
        gather(med, hi, level + 1)

    gather((0, 1), (1, 0), 1)
    nodes = [primitive_word(p, q) for p, q in slopes]
    nodes.sort(key=lambda n: (n.q, n.p))
    return nodes


def farey_to_csv(nodes: Iterable[FareyNode], stream: IO[str]) -> None:
    """Write nodes as CSV with header p,q,word,is_palindrome,factor1,factor2."""
    writer = csv.writer(stream)
    writer.writerow(["p", "q", "word", "is_palindrome", "factor1", "factor2"])
    for node in nodes:
        pal = is_palindrome(node.word)
        f1, f2 = "", ""
        if node.factorization is not None:
            f1, f2 = (str(w) for w in node.factorization)
        writer.writerow(
            [node.p, node.q, str(node.word), "true" if pal else "false", f1, f2]
        )
