"""Discreteness evidence from the compactness of the palindromic spectrum.

For a discrete non-elementary group the axes of all palindromic elements
cross the core geodesic in a compact interval (with parabolic palindromes
escaping to core ends when cusps are present); for a non-discrete group
the crossing positions are unbounded. The probe samples the position
spectrum over the Farey tree of primitive classes plus random
palindromizations, tracks the growth of max|s| by tree depth, and reports
an evidence verdict. A Jorgensen inequality value is attached as an
independent classical cross-check.

Verdicts are evidence labels, not theorems: a bounded spectrum over a
finite search cannot certify discreteness.
"""
from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass
from typing import IO, Iterable, NamedTuple

from .config import DEFAULT_ESCAPE, DEFAULT_PLATEAU
from .errors import PalcoreError
from .farey import enumerate_farey
from .representation import (
    PARABOLIC_END,
    PiImage,
    Representation,
    palindromize,
    pi_of_palindrome,
    rational_pi,
)
from .words import LETTERS, Word, reduced_words, reverse

BOUNDED_CONSISTENT_WITH_GF = "BOUNDED_CONSISTENT_WITH_GF"
UNBOUNDED_EVIDENCE_NONDISCRETE = "UNBOUNDED_EVIDENCE_NONDISCRETE"
PARABOLIC_ENDS_DETECTED = "PARABOLIC_ENDS_DETECTED"
INCONCLUSIVE = "INCONCLUSIVE"

VERDICTS = (
    BOUNDED_CONSISTENT_WITH_GF,
    UNBOUNDED_EVIDENCE_NONDISCRETE,
    PARABOLIC_ENDS_DETECTED,
    INCONCLUSIVE,
)


@dataclass(frozen=True)
class SpectrumEntry:
    """Pi image of one slope, or the error that prevented it."""

    p: int
    q: int
    depth: int
    image: PiImage | None = None
    error: str | None = None

    def to_json(self) -> dict:
        out: dict = {"p": self.p, "q": self.q, "depth": self.depth}
        if self.image is not None:
            out.update(self.image.to_json())
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass(frozen=True)
class SampleEntry:
    """Palindromization of one random word, or the error it raised."""

    base: str
    word: str | None = None
    image: PiImage | None = None
    error: str | None = None

    def to_json(self) -> dict:
        out: dict = {"base": self.base}
        if self.word is not None:
            out["word"] = self.word
        if self.image is not None:
            out.update(self.image.to_json())
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass(frozen=True)
class WitnessRecord:
    """A palindrome whose |s| exceeded the escape threshold."""

    word: str
    s: float
    source: str
    c: str | None = None
    d: str | None = None
    n: int | None = None

    def to_json(self) -> dict:
        out: dict = {"word": self.word, "s": self.s, "source": self.source}
        if self.c is not None:
            out.update({"c": self.c, "d": self.d, "n": self.n})
        return out


class JorgensenResult(NamedTuple):
    value: float
    passed: bool

    def to_json(self) -> dict:
        return {"value": self.value, "pass": self.passed}


def jorgensen_baseline(rep: Representation) -> JorgensenResult:
    """|tr^2 A - 4| + |tr[A,B] - 2| and whether it meets the classical
    lower bound 1 required of discrete non-elementary groups."""
    a, b = rep.A, rep.B
    comm = a * b * a.inverse() * b.inverse()
    value = abs(a.trace() ** 2 - 4) + abs(comm.trace() - 2)
    return JorgensenResult(value, value >= 1.0)


def pi_spectrum(rep: Representation, depth: int) -> list[SpectrumEntry]:
    """Pi image for every slope of the Farey tree to the given depth.

    Entries are in deterministic (q, p) order. Per-slope failures are
    recorded on the entry, not raised.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    entries = []
    for node in enumerate_farey(depth):
        try:
            image = rational_pi(rep, node.p, node.q)
            entries.append(SpectrumEntry(node.p, node.q, node.depth, image=image))
        except PalcoreError as exc:
            entries.append(
                SpectrumEntry(
                    node.p, node.q, node.depth,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    return entries


def spectrum_to_csv(entries: Iterable[SpectrumEntry], stream: IO[str]) -> None:
    """Write spectrum entries as CSV with header p,q,s,class,source."""
    writer = csv.writer(stream)
    writer.writerow(["p", "q", "s", "class", "source"])
    for e in entries:
        if e.image is None:
            writer.writerow([e.p, e.q, "", "", f"error:{e.error}"])
            continue
        if math.isinf(e.image.s):
            s_out = "inf" if e.image.s > 0 else "-inf"
        else:
            s_out = repr(e.image.s)
        writer.writerow([e.p, e.q, s_out, e.image.element_class or "", e.image.source])


def random_word(rng: random.Random, length: int) -> Word:
    """Random reduced word of exactly the given length: uniform letters
    with no immediate backtracking."""
    letters = [rng.choice(LETTERS)]
    while len(letters) < length:
        options = [x for x in LETTERS if x != -letters[-1]]
        letters.append(rng.choice(options))
    return Word(tuple(letters))


def sample_palindromizations(
    rep: Representation, count: int, max_length: int, seed: int
) -> list[SampleEntry]:
    """Palindromize `count` seeded random words of length <= max_length."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        w = random_word(rng, rng.randint(1, max(1, max_length)))
        try:
            pal, image = palindromize(rep, w)
            out.append(SampleEntry(str(w), word=str(pal), image=image))
        except PalcoreError as exc:
            out.append(
                SampleEntry(str(w), error=f"{type(exc).__name__}: {exc}")
            )
    return out


def _growth_series(entries: list[SpectrumEntry], depth: int) -> tuple[float, ...]:
    best = 0.0
    out = []
    for d in range(depth + 1):
        level = [
            abs(e.image.s)
            for e in entries
            if e.depth <= d and e.image is not None and e.image.finite
        ]
        if level:
            best = max(best, max(level))
        out.append(best)
    return tuple(out)


@dataclass(frozen=True)
class ProbeReport:
    """Everything the probe measured, plus the verdict derived from it."""

    depth: int
    seed: int
    samples_requested: int
    s_escape: float
    plateau_delta: float
    spectrum: tuple[SpectrumEntry, ...]
    random_palindrome_samples: tuple[SampleEntry, ...]
    interval: tuple[float, float] | None
    growth: tuple[float, ...]
    verdict: str
    witnesses: tuple[WitnessRecord, ...]
    jorgensen: JorgensenResult

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "seed": self.seed,
            "samples_requested": self.samples_requested,
            "s_escape": self.s_escape,
            "plateau_delta": self.plateau_delta,
            "spectrum": [e.to_json() for e in self.spectrum],
            "random_palindrome_samples": [
                e.to_json() for e in self.random_palindrome_samples
            ],
            "interval": list(self.interval) if self.interval is not None else None,
            "growth": list(self.growth),
            "verdict": self.verdict,
            "witnesses": [w.to_json() for w in self.witnesses],
            "jorgensen": self.jorgensen.to_json(),
        }


def probe(
    rep: Representation,
    depth: int,
    random_samples: int = 0,
    seed: int = 0,
    s_escape: float = DEFAULT_ESCAPE,
    plateau_delta: float = DEFAULT_PLATEAU,
) -> ProbeReport:
    """Run the spectrum probe and classify the evidence.

    Verdict rules, in order of precedence:
    - any finite |s| beyond s_escape (spectrum or samples): UNBOUNDED
      evidence, with every escaping palindrome recorded as a witness;
    - any parabolic-end tag: PARABOLIC_ENDS_DETECTED (with cusps the
      finite positions drift logarithmically, so no plateau is demanded;
      the interval reported covers the non-parabolic entries);
    - growth of max|s| increased less than plateau_delta from depth-2 to
      depth: BOUNDED_CONSISTENT_WITH_GF;
    - otherwise INCONCLUSIVE.

    Per-entry computation failures are recorded in the report and do not
    affect the verdict beyond their absence from the statistics.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    spectrum = tuple(pi_spectrum(rep, depth))
    samples = tuple(
        sample_palindromizations(rep, random_samples, 2 * depth, seed)
    )
    finite_spectrum = [
        e.image.s for e in spectrum if e.image is not None and e.image.finite
    ]
    interval = (
        (min(finite_spectrum), max(finite_spectrum)) if finite_spectrum else None
    )
    growth = _growth_series(list(spectrum), depth)

    witnesses: list[WitnessRecord] = []
    for e in spectrum:
        if e.image is not None and e.image.finite and abs(e.image.s) > s_escape:
            witnesses.append(
                WitnessRecord(e.image.word or "", e.image.s, e.image.source)
            )
    for smp in samples:
        img = smp.image
        if img is not None and img.finite and abs(img.s) > s_escape:
            witnesses.append(WitnessRecord(smp.word or "", img.s, img.source))

    tagged_parabolic = any(
        e.image is not None and e.image.source == PARABOLIC_END for e in spectrum
    ) or any(
        smp.image is not None and smp.image.source == PARABOLIC_END
        for smp in samples
    )
    plateaued = (
        depth >= 2
        and bool(finite_spectrum)
        and growth[depth] - growth[depth - 2] < plateau_delta
    )

    if witnesses:
        verdict = UNBOUNDED_EVIDENCE_NONDISCRETE
    elif tagged_parabolic:
        verdict = PARABOLIC_ENDS_DETECTED
    elif plateaued:
        verdict = BOUNDED_CONSISTENT_WITH_GF
    else:
        verdict = INCONCLUSIVE

    return ProbeReport(
        depth=depth,
        seed=seed,
        samples_requested=random_samples,
        s_escape=s_escape,
        plateau_delta=plateau_delta,
        spectrum=spectrum,
        random_palindrome_samples=samples,
        interval=interval,
        growth=growth,
        verdict=verdict,
        witnesses=tuple(witnesses),
        jorgensen=jorgensen_baseline(rep),
    )


def witness_search(
    rep: Representation,
    max_conj_power: int,
    max_word_len: int,
    s_escape: float = DEFAULT_ESCAPE,
) -> WitnessRecord | None:
    """Search for an escaping palindrome among conjugate-push words.

    For words C, D up to max_word_len (ordered by length, then letters) and
    powers n up to max_conj_power, form U = C^n D C^-n and test the two
    palindromes U.reverse(U) and reverse(U).U; the first with finite
    |s| > s_escape is returned with its (C, D, n) data. Returns None when
    the grid is exhausted.
    """
    if max_conj_power < 1 or max_word_len < 1:
        raise ValueError("search bounds must be >= 1")
    vocabulary = list(reduced_words(max_word_len))
    for c in vocabulary:
        c_inv = c.inverse()
        for d in vocabulary:
            conj_left = Word()
            for n in range(1, max_conj_power + 1):
                conj_left = conj_left * c
                u = conj_left * d * (c_inv ** n)
                if not u:
                    continue
                for pal in (u * reverse(u), reverse(u) * u):
                    if not pal:
                        continue
                    try:
                        image = pi_of_palindrome(rep, pal)
                    except PalcoreError:
                        continue
                    if image.finite and abs(image.s) > s_escape:
                        return WitnessRecord(
                            str(pal), image.s, image.source,
                            c=str(c), d=str(d), n=n,
                        )
    return None
