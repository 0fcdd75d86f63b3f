"""Maps of finite simplicial sets and exhaustive map enumeration."""

from __future__ import annotations

import weakref
from typing import Iterator, Mapping, Sequence

from .simplicial import (
    FiniteSimplicialSet,
    MonotoneMap,
    ProductComplex,
    Simplex,
    coface,
    codegeneracy,
    delta,
    identity_map,
    nondeg,
)


class SSetMap:
    """A simplicial map, recorded on nondegenerate cells of the source.

    The assignment sends each cell to an equal-dimension simplex of the
    target; commuting with the face operators is checked on construction
    and implies compatibility with degeneracies by normal-form uniqueness.
    """

    def __init__(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet,
                 assign: Mapping[str, Simplex], validate: bool = True):
        self.source = source
        self.target = target
        self.assign = dict(assign)
        if validate:
            problems = self.violations()
            if problems:
                raise ValueError("invalid simplicial map: " + "; ".join(problems[:5]))

    def violations(self) -> list[str]:
        out = []
        for name in self.source.cell_names:
            if name not in self.assign:
                out.append(f"cell {name} unassigned")
        if out:
            return out
        for name, img in self.assign.items():
            if not self.source.has_cell(name):
                out.append(f"assignment names foreign cell {name}")
                continue
            n = self.source.dim_of(name)
            if img.dim != n:
                out.append(f"image of {name} has dimension {img.dim}, expected {n}")
                continue
            if not self.target.has_cell(img.base):
                out.append(f"image of {name} uses missing cell {img.base}")
                continue
            if n == 0:
                continue
            x = nondeg(name, n)
            for i in range(n + 1):
                if self.image_of(self.source.face(x, i)) != self.target.face(img, i):
                    out.append(f"face {i} of {name} does not commute")
        return out

    def image_of_cell(self, name: str) -> Simplex:
        return self.assign[name]

    def image_of(self, x: Simplex) -> Simplex:
        img = self.assign[x.base]
        return Simplex(img.eta.compose(x.eta), img.base)

    def is_mono(self) -> bool:
        seen = set()
        for name in self.source.cell_names:
            img = self.assign[name]
            if img.is_degenerate or img.base in seen:
                return False
            seen.add(img.base)
        return True

    def compose(self, inner: "SSetMap") -> "SSetMap":
        """self o inner."""
        if inner.target is not self.source:
            raise ValueError("maps not composable")
        assign = {a: self.image_of(inner.assign[a]) for a in inner.assign}
        return SSetMap(inner.source, self.target, assign, validate=False)

    def as_key(self):
        return tuple(sorted(self.assign.items()))

    def __eq__(self, other):
        return (isinstance(other, SSetMap) and self.source is other.source
                and self.target is other.target and self.assign == other.assign)

    def __hash__(self):
        return hash(self.as_key())

    def __repr__(self):
        return f"SSetMap({self.source!r} -> {self.target!r}, {len(self.assign)} cells)"


def identity_sset_map(space: FiniteSimplicialSet) -> SSetMap:
    return SSetMap(space, space,
                   {c: nondeg(c, space.dim_of(c)) for c in space.cell_names},
                   validate=False)


# ---------------------------------------------------------------------------
# Enumeration by backtracking over cells in increasing dimension
# ---------------------------------------------------------------------------

class _TargetIndex:
    """Per-dimension index of all target simplices by their face tuples."""

    def __init__(self, target: FiniteSimplicialSet):
        self.target = target
        self._by_faces: dict[int, dict[tuple, list[Simplex]]] = {}
        self._all: dict[int, list[Simplex]] = {}

    def all_of_dim(self, n: int) -> list[Simplex]:
        if n not in self._all:
            self._all[n] = self.target.simplices(n)
        return self._all[n]

    def with_faces(self, n: int, faces: tuple) -> list[Simplex]:
        idx = self._by_faces.get(n)
        if idx is None:
            idx = {}
            for z in self.all_of_dim(n):
                key = tuple(self.target.face(z, i) for i in range(n + 1))
                idx.setdefault(key, []).append(z)
            self._by_faces[n] = idx
        return idx.get(faces, [])


_INDEX_CACHE: "weakref.WeakKeyDictionary[FiniteSimplicialSet, _TargetIndex]" = \
    weakref.WeakKeyDictionary()


def _index_for(target: FiniteSimplicialSet) -> _TargetIndex:
    idx = _INDEX_CACHE.get(target)
    if idx is None:
        idx = _TargetIndex(target)
        _INDEX_CACHE[target] = idx
    return idx


def enumerate_maps(
    source: FiniteSimplicialSet,
    target: FiniteSimplicialSet,
    fixed: Mapping[str, Simplex] | None = None,
    thin_source: frozenset[str] | None = None,
    thin_target: frozenset[str] | None = None,
    limit: int | None = None,
) -> Iterator[SSetMap]:
    """All simplicial maps source -> target extending ``fixed``.

    Cells are assigned in increasing dimension, with candidates looked up by
    the face images already forced; this prunes on face compatibility.  When
    ``thin_source``/``thin_target`` are given, only scaled maps (thin
    triangles landing on thin or degenerate triangles) are produced.
    """
    fixed = dict(fixed or {})
    order = [c for d in range(source.dimension + 1) for c in source.cells_of_dim(d)]
    index = _index_for(target)
    assign: dict[str, Simplex] = {}

    def thin_ok(name: str, img: Simplex) -> bool:
        if thin_source is None or name not in thin_source:
            return True
        return img.is_degenerate or (thin_target is not None and img.base in thin_target)

    def candidates(name: str) -> list[Simplex]:
        n = source.dim_of(name)
        if name in fixed:
            cand = [fixed[name]]
        elif n == 0:
            cand = index.all_of_dim(0)
        else:
            x = nondeg(name, n)
            want = tuple(_image(assign, source.face(x, i)) for i in range(n + 1))
            cand = index.with_faces(n, want)
        if n == 0:
            return [c for c in cand if thin_ok(name, c)]
        # fixed entries still need face-consistency with earlier assignments
        if name in fixed:
            x = nondeg(name, n)
            want = tuple(_image(assign, source.face(x, i)) for i in range(n + 1))
            cand = [c for c in cand
                    if tuple(target.face(c, i) for i in range(n + 1)) == want]
        return [c for c in cand if thin_ok(name, c)]

    count = 0

    def search(k: int) -> Iterator[SSetMap]:
        nonlocal count
        if limit is not None and count >= limit:
            return
        if k == len(order):
            count += 1
            yield SSetMap(source, target, dict(assign), validate=False)
            return
        name = order[k]
        for img in candidates(name):
            assign[name] = img
            yield from search(k + 1)
            del assign[name]
            if limit is not None and count >= limit:
                return

    yield from search(0)


def _image(assign: Mapping[str, Simplex], x: Simplex) -> Simplex:
    img = assign[x.base]
    return Simplex(img.eta.compose(x.eta), img.base)


def count_maps(source: FiniteSimplicialSet, target: FiniteSimplicialSet) -> int:
    return sum(1 for _ in enumerate_maps(source, target))


# ---------------------------------------------------------------------------
# Convenience constructions
# ---------------------------------------------------------------------------

def map_from_top(source_delta: FiniteSimplicialSet, target: FiniteSimplicialSet,
                 top: Simplex) -> SSetMap:
    """The map Delta^k -> target classified by a k-simplex.

    ``source_delta`` must be the standard simplex with vertex-string names.
    """
    k = top.dim
    assign = {}
    for name in source_delta.cell_names:
        keep = tuple(int(ch) for ch in name)
        assign[name] = target.multiface(top, keep)
    return SSetMap(source_delta, target, assign, validate=False)


def map_from_quotient_top(source_q: FiniteSimplicialSet, target: FiniteSimplicialSet,
                          top: Simplex) -> SSetMap:
    """The map (Delta^k with 01 collapsed) -> target classified by a k-simplex
    whose 01-edge is degenerate."""
    edge = target.multiface(top, (0, 1))
    if not edge.is_degenerate:
        raise ValueError("top simplex does not collapse the edge 01")
    assign = {}
    for name in source_q.cell_names:
        if name == "pt":
            assign[name] = target.multiface(top, (0,))
        else:
            keep = tuple(int(ch) for ch in name)
            assign[name] = target.multiface(top, keep)
    return SSetMap(source_q, target, assign, validate=True)


def poset_simplex(target_delta: FiniteSimplicialSet, values: Sequence[int]) -> Simplex:
    """The simplex of Delta^n with the given weakly increasing vertex values."""
    chain = sorted(set(values))
    base = "".join(str(v) for v in chain)
    index = {v: k for k, v in enumerate(chain)}
    eta = MonotoneMap(len(values) - 1, len(chain) - 1, tuple(index[v] for v in values))
    return Simplex(eta, base)


def delta_inclusion(i: int, n: int) -> SSetMap:
    """delta_i : Delta^{n-1} -> Delta^n."""
    mu = coface(i, n)
    src, tgt = delta(n - 1), delta(n)
    assign = {name: poset_simplex(tgt, [mu(int(ch)) for ch in name])
              for name in src.cell_names}
    return SSetMap(src, tgt, assign, validate=False)


def delta_collapse(j: int, n: int) -> SSetMap:
    """sigma_j : Delta^{n+1} -> Delta^n."""
    mu = codegeneracy(j, n)
    src, tgt = delta(n + 1), delta(n)
    assign = {name: poset_simplex(tgt, [mu(int(ch)) for ch in name])
              for name in src.cell_names}
    return SSetMap(src, tgt, assign, validate=False)


def product_map(pleft: ProductComplex, pright: ProductComplex,
                fx: SSetMap, fy: SSetMap) -> SSetMap:
    """The product of two maps, between already constructed product complexes."""
    assign = {}
    for name in pleft.cell_names:
        cx, cy = pleft.components_of_cell(name)
        assign[name] = pright.pair(fx.image_of(cx), fy.image_of(cy))
    return SSetMap(pleft, pright, assign, validate=False)


def swap_map(p: ProductComplex, q: ProductComplex) -> SSetMap:
    """The symmetry X x Y -> Y x X between constructed products."""
    assign = {}
    for name in p.cell_names:
        cx, cy = p.components_of_cell(name)
        assign[name] = q.pair(cy, cx)
    return SSetMap(p, q, assign, validate=False)
