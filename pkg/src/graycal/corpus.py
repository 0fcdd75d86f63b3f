"""Built-in example complexes, 2-categories and random generators."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .formats import emit_scaled, emit_twocat, parse_scaled, parse_twocat
from .scaled import ScaledSet, scale_flat, scale_sharp
from .simplicial import (
    FiniteSimplicialSet,
    Simplex,
    boundary_delta,
    codegeneracy,
    collapse_edge,
    delta,
    horn,
    nondeg,
    point,
    quotient_simplex,
)
from .twocat import (
    TwoCategory,
    iso_pair_category,
    mixed_invertibility_category,
    terminal_two_category,
    walking_arrow,
    walking_invertible_two_cell,
    walking_two_cell,
)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str       # "scaled" or "2cat"
    payload: str
    tags: tuple[str, ...]


def sweep_complexes() -> dict[str, ScaledSet]:
    """The small scaled complexes used by the acceptance sweeps."""
    return {
        "delta0": scale_flat(point()),
        "delta1-flat": scale_flat(delta(1)),
        "delta1-sharp": scale_sharp(delta(1)),
        "delta2-flat": scale_flat(delta(2)),
        "delta2-sharp": scale_sharp(delta(2)),
        "boundary2-flat": scale_flat(boundary_delta(2)),
        "horn21-flat": scale_flat(horn(2, 1)),
    }


def corpus_two_categories() -> dict[str, TwoCategory]:
    return {
        "terminal": terminal_two_category(),
        "walking-arrow": walking_arrow(),
        "walking-2cell": walking_two_cell(),
        "walking-invertible-2cell": walking_invertible_two_cell(),
        "iso-pair": iso_pair_category(),
        "mixed-invertibility": mixed_invertibility_category(),
    }


def random_scaled_complex(rng: random.Random, max_cells: int = 6) -> ScaledSet:
    """A random valid scaled complex with at most max_cells nondegenerate cells."""
    n_vertices = rng.randint(1, min(3, max_cells))
    cells: dict[str, tuple[Simplex, ...]] = {f"v{i}": () for i in range(n_vertices)}
    budget = max_cells - n_vertices
    edges: list[tuple[str, str, str]] = []
    n_edges = rng.randint(0, budget)
    for k in range(n_edges):
        a = f"v{rng.randrange(n_vertices)}"
        b = f"v{rng.randrange(n_vertices)}"
        name = f"e{k}"
        cells[name] = (nondeg(b, 0), nondeg(a, 0))
        edges.append((name, a, b))
    budget -= n_edges
    tri_names = []
    for k in range(rng.randint(0, budget)):
        vs = [f"v{rng.randrange(n_vertices)}" for _ in range(3)]

        def pick_edge(a: str, b: str) -> Simplex | None:
            options: list[Simplex] = [nondeg(e, 1) for e, s, t in edges if s == a and t == b]
            if a == b:
                options.append(Simplex(codegeneracy(0, 0), a))
            if not options:
                return None
            return rng.choice(options)

        d0 = pick_edge(vs[1], vs[2])
        d1 = pick_edge(vs[0], vs[2])
        d2 = pick_edge(vs[0], vs[1])
        if d0 is None or d1 is None or d2 is None:
            continue
        name = f"t{k}"
        cells[name] = (d0, d1, d2)
        tri_names.append(name)
    space = FiniteSimplicialSet(cells, validate=True)
    thin = frozenset(t for t in tri_names if rng.random() < 0.5)
    return ScaledSet(space, thin)


def random_pool(count: int = 50, seed: int = 20260810, max_cells: int = 6) -> list[ScaledSet]:
    rng = random.Random(seed)
    return [random_scaled_complex(rng, max_cells) for _ in range(count)]


def saturation_corpus() -> dict[str, ScaledSet]:
    """Five complexes exercising the saturation closure."""
    from .anodyne import FIVE_TRIANGLES
    from .gray import gray
    from .scaled import opposite_scaled

    d4five = ScaledSet(delta(4), frozenset(FIVE_TRIANGLES))
    return {
        "delta4-five": d4five,
        "delta4-five-op": opposite_scaled(d4five),
        "delta3-missing-013": ScaledSet(delta(3), frozenset({"012", "023", "123"})),
        "delta3-missing-023": ScaledSet(delta(3), frozenset({"012", "013", "123"})),
        "sharp2-times-edge": gray(ScaledSet(delta(2), frozenset({"012"})),
                                  scale_flat(delta(1))),
    }


def entries() -> list[CorpusEntry]:
    out = []
    for name, scaled in sweep_complexes().items():
        out.append(CorpusEntry(name, "scaled", emit_scaled(scaled), ("sweep",)))
    out.append(CorpusEntry("quotient3", "scaled", emit_scaled(scale_flat(quotient_simplex(3))),
                           ("quotient",)))
    out.append(CorpusEntry("collapse2-12", "scaled", emit_scaled(scale_flat(collapse_edge(2, 1))),
                           ("quotient",)))
    for name, cat in corpus_two_categories().items():
        out.append(CorpusEntry(name, "2cat", emit_twocat(cat), ("twocat",)))
    return out


def check_entry(entry: CorpusEntry) -> list[str]:
    """Parse an entry and run its tagged property suite."""
    problems = []
    if entry.kind == "scaled":
        try:
            scaled = parse_scaled(entry.payload)
        except Exception as exc:
            return [f"parse failed: {exc}"]
        if emit_scaled(scaled) != entry.payload:
            problems.append("round-trip is not the identity")
        from .simplicial import validate_complex
        problems.extend(validate_complex(scaled.space))
    else:
        try:
            cat = parse_twocat(entry.payload)
        except Exception as exc:
            return [f"parse failed: {exc}"]
        if emit_twocat(cat) != entry.payload:
            problems.append("round-trip is not the identity")
        from .twocat import validate_two_category
        problems.extend(validate_two_category(cat))
    return problems
