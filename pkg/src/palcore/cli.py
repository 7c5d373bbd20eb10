"""Command-line front end: classify matrices, enumerate primitive words,
export position spectra, run the discreteness probe, dump the hexagon.

Generator files are JSON {"A": matrix, "B": matrix}; a matrix is either
[[a, b], [c, d]] rows or an {"a": ..., "d": ...} entry map, with each
entry a real number or an [re, im] pair. "inf" is the literal for the
point at infinity in all output.

The probe exit code encodes the verdict: 0 for bounded or parabolic-ends,
2 for unbounded evidence, 3 for inconclusive, 1 for any error.
"""
from __future__ import annotations

import json
import sys

import click

from .config import DEFAULT_ESCAPE, DEFAULT_PLATEAU, DEFAULT_TOLERANCES, Tolerances
from .errors import PalcoreError
from .farey import primitive_word
from .probe import (
    BOUNDED_CONSISTENT_WITH_GF,
    INCONCLUSIVE,
    PARABOLIC_ENDS_DETECTED,
    UNBOUNDED_EVIDENCE_NONDISCRETE,
    pi_spectrum,
    probe,
    spectrum_to_csv,
)
from .representation import hexagon, rep_from_json
from .sl2c import boundary_to_json, classify, fixed_points, matrix_from_json, normalize
from .words import is_palindrome

_EXIT_CODES = {
    BOUNDED_CONSISTENT_WITH_GF: 0,
    PARABOLIC_ENDS_DETECTED: 0,
    UNBOUNDED_EVIDENCE_NONDISCRETE: 2,
    INCONCLUSIVE: 3,
}


def verdict_exit_code(verdict: str) -> int:
    """Map a probe verdict to the process exit code."""
    return _EXIT_CODES[verdict]


def _fail(message) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _tolerances(tol_geo: float | None) -> Tolerances:
    if tol_geo is None:
        return DEFAULT_TOLERANCES
    if tol_geo <= 0:
        _fail("--tol-geo must be positive")
    return DEFAULT_TOLERANCES.with_geo(tol_geo)


def _load_rep(path: str, tol: Tolerances):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return rep_from_json(data, tol)
    except (OSError, ValueError, KeyError, PalcoreError) as exc:
        _fail(exc)


def _emit(text: str, out: str) -> None:
    if out == "-":
        click.echo(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


@click.group()
def main() -> None:
    """Explore two-generator matrix groups through palindromic axes."""


@main.command("classify")
@click.argument("matrix_json")
def cmd_classify(matrix_json: str) -> None:
    """Classify a matrix: MATRIX_JSON like "[[1,1],[0,1]]"."""
    try:
        m = normalize(matrix_from_json(json.loads(matrix_json)))
        kind = classify(m)
        record: dict = {
            "class": kind,
            "trace": [m.trace().real, m.trace().imag],
        }
        if kind != "identity":
            pts = fixed_points(m)
            if kind == "parabolic":
                pts = pts[:1]
            record["fixed"] = [boundary_to_json(p) for p in pts]
        click.echo(json.dumps(record))
    except (ValueError, KeyError, PalcoreError) as exc:
        _fail(exc)


@main.command("primitive")
@click.argument("slope")
def cmd_primitive(slope: str) -> None:
    """Representative word of a slope: SLOPE like "3/5" (1/0 allowed)."""
    try:
        p_text, _, q_text = slope.partition("/")
        node = primitive_word(int(p_text), int(q_text))
        record: dict = {
            "p": node.p,
            "q": node.q,
            "word": str(node.word),
            "palindrome": is_palindrome(node.word),
        }
        if node.factorization is not None:
            record["factors"] = [str(w) for w in node.factorization]
        click.echo(json.dumps(record))
    except (ValueError, PalcoreError) as exc:
        _fail(exc)


@main.command("pi-map")
@click.option("--gens", required=True, help="generator JSON file")
@click.option("--depth", default=4, show_default=True, help="Farey tree depth")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--tol-geo", type=float, default=None, help="geometric tolerance")
@click.option("--out", default="-", show_default=True, help="output path, - for stdout")
def cmd_pi_map(gens: str, depth: int, fmt: str, tol_geo: float | None, out: str) -> None:
    """Position spectrum of the palindromic axes over the Farey tree."""
    rep = _load_rep(gens, _tolerances(tol_geo))
    try:
        entries = pi_spectrum(rep, depth)
    except ValueError as exc:
        _fail(exc)
    if fmt == "csv":
        import io

        buf = io.StringIO()
        spectrum_to_csv(entries, buf)
        _emit(buf.getvalue().rstrip("\n"), out)
    else:
        _emit(json.dumps([e.to_json() for e in entries], indent=2), out)


@main.command("probe")
@click.option("--gens", required=True, help="generator JSON file")
@click.option("--depth", default=6, show_default=True, help="Farey tree depth")
@click.option("--samples", default=0, show_default=True,
              help="random palindromization count")
@click.option("--seed", default=0, show_default=True, help="sampling seed")
@click.option("--escape", default=DEFAULT_ESCAPE, show_default=True,
              help="|s| threshold for escape evidence")
@click.option("--plateau", default=DEFAULT_PLATEAU, show_default=True,
              help="growth increment below which the spectrum counts as plateaued")
@click.option("--tol-geo", type=float, default=None, help="geometric tolerance")
@click.option("--out", default="-", show_default=True, help="output path, - for stdout")
def cmd_probe(gens: str, depth: int, samples: int, seed: int, escape: float,
              plateau: float, tol_geo: float | None, out: str) -> None:
    """Probe the pair for discreteness evidence; exit code is the verdict."""
    rep = _load_rep(gens, _tolerances(tol_geo))
    try:
        report = probe(rep, depth, random_samples=samples, seed=seed,
                       s_escape=escape, plateau_delta=plateau)
    except (ValueError, PalcoreError) as exc:
        _fail(exc)
    _emit(json.dumps(report.to_json(), indent=2), out)
    sys.exit(verdict_exit_code(report.verdict))


@main.command("hexagon")
@click.option("--gens", required=True, help="generator JSON file")
@click.option("--tol-geo", type=float, default=None, help="geometric tolerance")
@click.option("--out", default="-", show_default=True, help="output path, - for stdout")
def cmd_hexagon(gens: str, tol_geo: float | None, out: str) -> None:
    """The six geodesics of the right-angled hexagon of the pair."""
    rep = _load_rep(gens, _tolerances(tol_geo))
    try:
        hexa = hexagon(rep)
    except PalcoreError as exc:
        _fail(exc)
    _emit(json.dumps(hexa.to_json(), indent=2), out)


if __name__ == "__main__":
    main()
