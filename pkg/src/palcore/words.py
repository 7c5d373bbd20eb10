"""Words in the free group on two letters.

Letters are small integers: +1 and -1 for the first generator and its
inverse, +2 and -2 for the second. Words are always stored freely reduced.
Text form uses lowercase for a generator and uppercase for its inverse,
e.g. "abA" = a b a^-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import NotPalindrome, SchemeViolation
from .sl2c import GroupElement

LETTERS = (1, -1, 2, -2)


def _reduce_letters(raw: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in raw:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """Freely reduced word; construction reduces its input.

    labels names the two generators for display (default "a", "b");
    inverses display as the uppercased label.
    """

    letters: tuple[int, ...] = ()
    labels: tuple[str, str] = ("a", "b")

    def __post_init__(self) -> None:
        for x in self.letters:
            if x not in (1, -1, 2, -2):
                raise ValueError(f"invalid letter {x!r}")
        object.__setattr__(self, "letters", _reduce_letters(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.labels != other.labels:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.letters + other.letters, self.labels)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word((), self.labels)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)), self.labels)

    def __str__(self) -> str:
        chars = []
        for x in self.letters:
            lab = self.labels[abs(x) - 1]
            chars.append(lab if x > 0 else lab.upper())
        return "".join(chars)

    def __repr__(self) -> str:
        return f"Word({str(self) or 'identity'})"


IDENTITY_WORD = Word()


def reduce(raw: Iterable[int], labels: tuple[str, str] = ("a", "b")) -> Word:
    """Freely reduce a raw letter sequence into a Word."""
    return Word(tuple(raw), labels)


def parse(text: str, labels: tuple[str, str] = ("a", "b")) -> Word:
    """Parse text like "abA" into a Word; case selects generator vs inverse."""
    lower_to_index = {lab: i + 1 for i, lab in enumerate(labels)}
    letters = []
    for ch in text:
        idx = lower_to_index.get(ch.lower())
        if idx is None:
            raise ValueError(f"unknown letter {ch!r} for alphabet {labels}")
        letters.append(idx if ch.islower() else -idx)
    return Word(tuple(letters), labels)


def reverse(w: Word) -> Word:
    """The word read backwards (letter exponents kept, order flipped)."""
    return Word(tuple(reversed(w.letters)), w.labels)


def is_palindrome(w: Word) -> bool:
    """True iff w reads the same forwards and backwards, letterwise."""
    return w.letters == tuple(reversed(w.letters))


class AbelianImage(NamedTuple):
    ea: int
    eb: int


def abelianize(w: Word) -> AbelianImage:
    """Exponent sums of the two generators."""
    ea = sum(1 if x == 1 else -1 for x in w.letters if abs(x) == 1)
    eb = sum(1 if x == 2 else -1 for x in w.letters if abs(x) == 2)
    return AbelianImage(ea, eb)


def evaluate(w: Word, A: GroupElement, B: GroupElement) -> GroupElement:
    """Homomorphic image of w under a -> A, b -> B."""
    table = {1: A, -1: A.inverse(), 2: B, -2: B.inverse()}
    out = GroupElement.identity()
    for x in w.letters:
        out = out * table[x]
    return out


def cyclic_reduce(w: Word) -> Word:
    """Strip matching inverse letters from the two ends until none remain."""
    letters = list(w.letters)
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        letters = letters[1:-1]
    return Word(tuple(letters), w.labels)


def cyclically_equal(u: Word, v: Word) -> bool:
    """True iff the cyclic reductions are rotations of one another."""
    cu = cyclic_reduce(u).letters
    cv = cyclic_reduce(v).letters
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    doubled = cu + cu
    n = len(cu)
    return any(doubled[i : i + n] == cv for i in range(n))


class NielsenResult(NamedTuple):
    u: Word
    v: Word
    generates: bool


# pair moves tried in this fixed order; first strict length drop wins
_PAIR_MOVES = (
    lambda u, v: (u * v, v),
    lambda u, v: (u * v.inverse(), v),
    lambda u, v: (v * u, v),
    lambda u, v: (v.inverse() * u, v),
    lambda u, v: (u, v * u),
    lambda u, v: (u, v * u.inverse()),
    lambda u, v: (u, u * v),
    lambda u, v: (u, u.inverse() * v),
)


def nielsen_reduce_pair(u: Word, v: Word) -> NielsenResult:
    """Greedy Nielsen reduction of a pair of words.

    Repeatedly multiplies one word by the other (or an inverse) whenever the
    total length strictly drops, trying moves in a fixed order for
    determinism. generates is true iff the reduced pair is the standard
    basis up to inversion: two length-one words using both letters.
    """
    while True:
        total = len(u) + len(v)
        for move in _PAIR_MOVES:
            nu, nv = move(u, v)
            if len(nu) + len(nv) < total:
                u, v = nu, nv
                break
        else:
            break
    generates = (
        len(u) == 1
        and len(v) == 1
        and {abs(u.letters[0]), abs(v.letters[0])} == {1, 2}
    )
    return NielsenResult(u, v, generates)


def _whitehead_images(m: int, x: int) -> tuple[dict[int, tuple[int, ...]], ...]:
    """The three type-2 Whitehead automorphisms with multiplier m acting on
    the other generator x; each returned as a letter substitution table."""

    def table(x_image: tuple[int, ...]) -> dict[int, tuple[int, ...]]:
        inv = tuple(-t for t in reversed(x_image))
        return {m: (m,), -m: (-m,), x: x_image, -x: inv}

    return (
        table((x, m)),        # x -> x m
        table((-m, x)),       # x -> m^-1 x
        table((-m, x, m)),    # x -> m^-1 x m
    )


def _cyclic_length_after(letters: tuple[int, ...], sub: dict[int, tuple[int, ...]]) -> tuple[int, ...]:
    out: list[int] = []
    for t in letters:
        out.extend(sub[t])
    reduced = list(_reduce_letters(out))
    while len(reduced) >= 2 and reduced[0] == -reduced[-1]:
        reduced = reduced[1:-1]
    return tuple(reduced)


def is_primitive(w: Word) -> bool:
    """Whitehead test for primitivity in the rank-2 free group.

    Cyclically reduce, then greedily apply any of the twelve type-2
    Whitehead automorphisms that strictly shortens the cyclic word. The
    word is primitive iff this terminates at length one.
    """
    current = cyclic_reduce(w).letters
    if not current:
        return False
    while len(current) > 1:
        for m in LETTERS:
            x = 2 if abs(m) == 1 else 1
            candidates = _whitehead_images(m, x)
            hit = None
            for sub in candidates:
                image = _cyclic_length_after(current, sub)
                if len(image) < len(current):
                    hit = image
                    break
            if hit is not None:
                current = hit
                break
        else:
            return False
    return True


def rewrite_in_generators(w: Word, side: str) -> Word:
    """Rewrite w over a new basis obtained by one elementary move.

    side="a": the new basis is (a, c) with c = ab; since substituting
    c = ab into w(a, c) recovers w(a, b) with b replaced by ab, the output
    has the same letter pattern as w with the second letter relabeled c.
    side="b": the new basis is (d, b) with d = ba, relabeling the first
    letter.
    """
    if side == "a":
        return Word(w.letters, (w.labels[0], "c"))
    if side == "b":
        return Word(w.letters, ("d", w.labels[1]))
    raise ValueError(f"side must be 'a' or 'b', got {side!r}")


def expand_generators(w: Word, side: str) -> Word:
    """Substitute the composite letter back: c -> ab (side "a") or
    d -> ba (side "b"), returning a word over the original alphabet."""
    if side == "a":
        sub = {1: (1,), -1: (-1,), 2: (1, 2), -2: (-2, -1)}
    elif side == "b":
        sub = {1: (2, 1), -1: (-1, -2), 2: (2,), -2: (-2,)}
    else:
        raise ValueError(f"side must be 'a' or 'b', got {side!r}")
    out: list[int] = []
    for t in w.letters:
        out.extend(sub[t])
    return Word(tuple(out))


class EllipticPowerFactorization(NamedTuple):
    left: Word
    right: Word
    power: Word
    power_is_palindrome: bool


def elliptic_power_factorization(
    p1: Word, p2: Word, n: int
) -> EllipticPowerFactorization:
    """Palindromic factorization of (P1 P2)^n as ((P1 P2)^(n-1) P1) . P2.

    Both factors are palindromes whenever P1 and P2 are; this is checked at
    runtime along with the product identity. power_is_palindrome reports
    whether (P1 P2)^n is itself a palindrome (it is when P1 P2 is a
    palindrome and n is odd).
    """
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    if not is_palindrome(p1):
        raise NotPalindrome(f"{p1!r} is not a palindrome")
    if not is_palindrome(p2):
        raise NotPalindrome(f"{p2!r} is not a palindrome")
    e = p1 * p2
    power = e ** n
    left = (e ** (n - 1)) * p1
    if not is_palindrome(left):
        raise SchemeViolation(f"left factor {left!r} failed the palindrome check")
    if (left * p2).letters != power.letters:
        raise SchemeViolation("factor product does not reduce to the power")
    return EllipticPowerFactorization(left, p2, power, is_palindrome(power))


def reduced_words(max_len: int, labels: tuple[str, str] = ("a", "b")) -> Iterator[Word]:
    """All nonempty reduced words up to max_len, ordered by length then by
    letter sequence in the fixed order a, a^-1, b, b^-1."""
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        next_frontier = []
        for stem in frontier:
            for x in LETTERS:
                if stem and stem[-1] == -x:
                    continue
                grown = stem + (x,)
                next_frontier.append(grown)
                yield Word(grown, labels)
        frontier = next_frontier
