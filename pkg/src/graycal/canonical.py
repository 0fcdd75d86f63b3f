"""Canonical serialization and digests for (scaled) simplicial sets.

Cells are renamed by structural fingerprints refined to a fixpoint; any
remaining ties are broken by individualization, keeping the lexicographically
least serialization.  Isomorphic complexes therefore serialize identically,
independent of cell names and construction order.
"""

from __future__ import annotations

import hashlib

from .simplicial import FiniteSimplicialSet, Simplex

_MAX_BRANCH = 2000


def _h(*parts) -> str:
    return hashlib.sha256(repr(parts).encode()).hexdigest()[:16]


def _fingerprints(space: FiniteSimplicialSet, thin: frozenset[str]) -> dict[str, str]:
    fp = {name: _h("init", space.dim_of(name), name in thin and space.dim_of(name) == 2)
          for name in space.cell_names}
    cofaces: dict[str, list[tuple[int, tuple[int, ...], str]]] = {n: [] for n in space.cell_names}
    for name in space.cell_names:
        for i, f in enumerate(space.faces_of(name)):
            cofaces[f.base].append((i, f.eta.values, name))

    def partition(m: dict[str, str]) -> int:
        return len(set(m.values()))

    for _ in range(max(1, space.cell_count())):
        nxt = {}
        for name in space.cell_names:
            down = tuple((f.eta.values, fp[f.base]) for f in space.faces_of(name))
            up = tuple(sorted((i, eta, fp[y]) for i, eta, y in cofaces[name]))
            nxt[name] = _h(space.dim_of(name), name in thin and space.dim_of(name) == 2,
                           down, up)
        if partition(nxt) == partition(fp):
            fp = nxt
            break
        fp = nxt
    return fp


def _serialize(space: FiniteSimplicialSet, thin: frozenset[str],
               order: list[str]) -> str:
    idx = {name: k for k, name in enumerate(order)}
    lines = []
    for name in order:
        faces = " ".join(
            f"c{idx[f.base]}" if not f.is_degenerate
            else "deg(" + "".join(map(str, f.eta.values)) + f",c{idx[f.base]})"
            for f in space.faces_of(name)
        )
        lines.append(f"simplex c{idx[name]} dim {space.dim_of(name)} faces {faces}".rstrip())
    for name in order:
        if space.dim_of(name) == 2 and name in thin:
            lines.append(f"thin c{idx[name]}")
    return "\n".join(lines) + "\n"


def canonical_order(space: FiniteSimplicialSet,
                    thin: frozenset[str] = frozenset()) -> list[str]:
    """A canonical listing of the cells, dimension by dimension."""
    fp = _fingerprints(space, thin)
    best: list[str] | None = None

    def face_key(name: str, idx: dict[str, int]):
        return tuple((f.eta.values, idx[f.base]) for f in space.faces_of(name))

    def extend(order: list[str], remaining_dims: list[int]) -> list[str] | None:
        nonlocal best
        if not remaining_dims:
            return list(order)
        d = remaining_dims[0]
        idx = {name: k for k, name in enumerate(order)}
        pending = sorted(
            (c for c in space.cells_of_dim(d) if c not in idx),
            key=lambda c: (fp[c], face_key(c, idx)),
        )
        if not pending:
            return extend(order, remaining_dims[1:])
        keys = [(fp[c], face_key(c, idx)) for c in pending]
        first_key = keys[0]
        tied = [c for c, k in zip(pending, keys) if k == first_key]
        if len(tied) == 1:
            return extend(order + [pending[0]], remaining_dims)
        # individualize: try each tied cell first, keep the lex-least outcome
        results = []
        for pick in tied[:_MAX_BRANCH]:
            res = extend(order + [pick], remaining_dims)
            if res is not None:
                results.append(res)
        if not results:
            return None
        return min(results, key=lambda o: _serialize(space, thin, o))

    dims = sorted(d for d in range(space.dimension + 1) if space.cells_of_dim(d))
    out = extend([], dims)
    assert out is not None
    return out


def canonical_serialization(space: FiniteSimplicialSet,
                            thin: frozenset[str] = frozenset()) -> str:
    return _serialize(space, thin, canonical_order(space, thin))


def digest(space: FiniteSimplicialSet, thin: frozenset[str] = frozenset()) -> str:
    """Hex digest of the canonical serialization; stable under renaming."""
    return hashlib.sha256(canonical_serialization(space, thin).encode()).hexdigest()


def isomorphic(a: FiniteSimplicialSet, b: FiniteSimplicialSet,
               thin_a: frozenset[str] = frozenset(),
               thin_b: frozenset[str] = frozenset()) -> bool:
    return canonical_serialization(a, thin_a) == canonical_serialization(b, thin_b)
