"""Bundled reference polynomials with load-time validation.

The reference data ships verbatim under ``fixtures/n{N}/``: ``{name}.poly``
holds a generator in u-coordinates (``{name}_x.poly`` in x-coordinates) and
``syzygy-{k}.gen`` a relation in generator symbols.  Nothing is trusted on
faith: every record is classified at load time as ``validated`` or
``transcription-suspect`` by running it through the invariance verifiers
(generators) or exact expansion against the validated generators
(relations).  Suspect records stay available but must not feed golden
comparisons.
"""

from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .invariants import Generator, GeneratorSet, verify_invariant_u, verify_invariant_x
from .rings import Polynomial, degree, u_ring, weight_u, x_ring
from .syzygies import check_syzygy
from .textio import PolyParseError, parse_poly

VALIDATED = "validated"
SUSPECT = "transcription-suspect"

_DATA_ROOT = Path(__file__).parent / "fixtures"


@dataclass
class FixtureRecord:
    n: int
    name: str
    coordinates: str  # "u", "x" or "gen"
    body: str
    status: str
    poly: Optional[Polynomial]
    note: str = ""


def fixture_root() -> Path:
    return _DATA_ROOT


def available_fixture_ns(base: Path = None) -> list:
    root = Path(base) if base else _DATA_ROOT
    out = []
    for p in sorted(root.glob("n*")):
        m = re.fullmatch(r"n(\d+)", p.name)
        if m and p.is_dir():
            out.append(int(m.group(1)))
    return out


def _name_key(name: str):
    m = re.match(r"[a-z]+(\d+)(.*)", name)
    if m:
        return (int(m.group(1)), m.group(2))
    return (0, name)


def _validate_generator(n: int, name: str, coords: str, body: str) -> FixtureRecord:
    ctx = u_ring(n) if coords == "u" else x_ring(n)
    try:
        poly = parse_poly(body, ctx)
    except PolyParseError as exc:
        return FixtureRecord(n, name, coords, body, SUSPECT, None, str(exc))
    if poly.is_zero():
        return FixtureRecord(n, name, coords, body, SUSPECT, poly, "parsed to zero")
    verify = verify_invariant_u if coords == "u" else verify_invariant_x
    if verify(n, poly):
        return FixtureRecord(n, name, coords, body, VALIDATED, poly)
    return FixtureRecord(n, name, coords, body, SUSPECT, poly,
                         "fails the invariance verifier")


def generator_set_from_records(n: int, records) -> GeneratorSet:
    """Generator set over the validated u-coordinate records, by degree."""
    gens = []
    for rec in records:
        if rec.coordinates == "u" and rec.status == VALIDATED:
            d = degree(rec.poly)
            gens.append(Generator(rec.name, d, weight_u(rec.poly), rec.poly, None))
    gens.sort(key=lambda g: (g.degree, g.name))
    return GeneratorSet(n, tuple(gens))


def load_fixtures(n: int, base: Path = None, workers: int = 1) -> list:
    """Load and classify every fixture for one form degree."""
    root = Path(base) if base else _DATA_ROOT
    folder = root / f"n{n}"
    if not folder.is_dir():
        raise FileNotFoundError(f"no fixtures for n={n} under {root}")

    gen_jobs = []
    for path in sorted(folder.glob("*.poly"), key=lambda p: _name_key(p.stem)):
        stem = path.stem
        if stem.endswith("_x"):
            name, coords = stem[:-2], "x"
        else:
            name, coords = stem, "u"
        gen_jobs.append((name, coords, path.read_text().strip()))

    if workers > 1 and len(gen_jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(
                lambda job: _validate_generator(n, *job), gen_jobs))
    else:
        records = [_validate_generator(n, *job) for job in gen_jobs]

    gens = generator_set_from_records(n, records)
    gctx = gens.gen_context() if len(gens) else None
    cache = {}
    for path in sorted(folder.glob("syzygy-*.gen"), key=lambda p: _name_key(p.stem.split("-")[-1])):
        body = path.read_text().strip()
        name = path.stem
        if gctx is None:
            records.append(FixtureRecord(n, name, "gen", body, SUSPECT, None,
                                         "no validated generators to expand against"))
            continue
        try:
            # a reference to a suspect generator is an unknown variable here,
            # so it lands in the parse-error branch
            rel = parse_poly(body, gctx)
        except PolyParseError as exc:
            records.append(FixtureRecord(n, name, "gen", body, SUSPECT, None, str(exc)))
            continue
        if check_syzygy(gens, rel, cache):
            records.append(FixtureRecord(n, name, "gen", body, VALIDATED, rel))
        else:
            records.append(FixtureRecord(n, name, "gen", body, SUSPECT, rel,
                                         "expansion through the generators is nonzero"))
    return records


def fixture_generator_set(n: int, base: Path = None) -> GeneratorSet:
    return generator_set_from_records(n, load_fixtures(n, base))


def load_generator_dir(n: int, path) -> GeneratorSet:
    """Read a --gens directory: every *.poly is a u-coordinate generator.

    Files with an ``_x`` suffix are skipped (they are the optional x-forms
    written next to the u-forms).  Every generator must pass the u-ring
    verifier; anything else is a usage error.
    """
    folder = Path(path)
    gens = []
    for p in sorted(folder.glob("*.poly"), key=lambda p: _name_key(p.stem)):
        if p.stem.endswith("_x"):
            continue
        poly = parse_poly(p.read_text().strip(), u_ring(n))
        if poly.is_zero() or not verify_invariant_u(n, poly):
            raise ValueError(f"{p.name} is not a verified invariant")
        gens.append(Generator(p.stem, degree(poly), weight_u(poly), poly, None))
    if not gens:
        raise ValueError(f"no generator files in {folder}")
    gens.sort(key=lambda g: (g.degree, g.name))
    return GeneratorSet(n, tuple(gens))


def write_generator_dir(gens: GeneratorSet, path) -> None:
    """Write a generator set in the fixture directory layout."""
    from .textio import format_poly
    folder = Path(path)
    folder.mkdir(parents=True, exist_ok=True)
    for g in gens:
        (folder / f"{g.name}.poly").write_text(format_poly(g.u_poly) + "\n")
        if g.x_poly is not None:
            (folder / f"{g.name}_x.poly").write_text(format_poly(g.x_poly) + "\n")
