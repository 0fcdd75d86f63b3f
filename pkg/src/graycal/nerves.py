"""Nerves of finite strict 2-categories as scaled simplicial sets.

An n-simplex is a normalised oplax functor out of the n-th ordinal: objects
on vertices, 1-cells on the edges (identities on repeats) and a comparison
2-cell f_ik => f_jk . f_ij on each triangle, subject to the cocycle
condition on every quadruple.  Triangles are thin when their 2-cell is
invertible; the data is 3-coskeletal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .families import complex_from_family
from .invertibility import InvertibilityOracle
from .scaled import ScaledSet
from .simplicial import FiniteSimplicialSet
from .twocat import TwoCategory


@dataclass(frozen=True)
class NerveSimplex:
    objs: tuple[str, ...]
    one: tuple[tuple[tuple[int, int], str], ...]        # (i,j) -> 1-cell, i < j
    two: tuple[tuple[tuple[int, int, int], str], ...]   # (i,j,k) -> 2-cell, i < j < k

    @property
    def dim(self) -> int:
        return len(self.objs) - 1

    def one_dict(self):
        return dict(self.one)

    def two_dict(self):
        return dict(self.two)


def _mk(objs, one: dict, two: dict) -> NerveSimplex:
    return NerveSimplex(tuple(objs), tuple(sorted(one.items())), tuple(sorted(two.items())))


class NerveData:
    """Accessors treating repeated indices as identities."""

    def __init__(self, cat: TwoCategory, simplex: NerveSimplex):
        self.cat = cat
        self.s = simplex
        self._one = simplex.one_dict()
        self._two = simplex.two_dict()

    def one(self, i: int, j: int) -> str:
        if i == j:
            return self.cat.id1[self.s.objs[i]]
        return self._one[(i, j)]

    def two(self, i: int, j: int, k: int) -> str:
        if i == j or j == k:
            return self.cat.id2[self.one(i, k)]
        return self._two[(i, j, k)]


def _cocycle_holds(cat: TwoCategory, d: NerveData, i, j, k, l) -> bool:
    lhs = cat.v(cat.whisker_left(d.one(k, l), d.two(i, j, k)), d.two(i, k, l))
    rhs = cat.v(cat.whisker_right(d.two(j, k, l), d.one(i, j)), d.two(i, j, l))
    return lhs == rhs


def _simplices_of_dim(cat: TwoCategory, n: int, lower: list[NerveSimplex]) -> list[NerveSimplex]:
    if n == 0:
        return [_mk((x,), {}, {}) for x in cat.objects]
    out = []
    for base in lower:
        d_base = NerveData(cat, base)
        for x in cat.objects:
            edge_slots = [(i, n) for i in range(n)]
            edge_choices = [cat.hom1(base.objs[i], x) for i in range(n)]
            if any(not c for c in edge_choices):
                continue
            for edges in itertools.product(*edge_choices):
                one = base.one_dict()
                for (i, _), f in zip(edge_slots, edges):
                    one[(i, n)] = f
                tri_slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
                tri_choices = []
                ok = True
                for i, j in tri_slots:
                    src = one[(i, n)]
                    tgt = cat.h1(one[(j, n)], d_base.one(i, j))
                    cand = cat.hom2(src, tgt)
                    if not cand:
                        ok = False
                        break
                    tri_choices.append(cand)
                if not ok:
                    continue
                for tris in itertools.product(*tri_choices):
                    two = base.two_dict()
                    for (i, j), a in zip(tri_slots, tris):
                        two[(i, j, n)] = a
                    cand = _mk(base.objs + (x,), one, two)
                    d = NerveData(cat, cand)
                    if all(_cocycle_holds(cat, d, i, j, k, n)
                           for i, j, k in itertools.combinations(range(n), 3)):
                        out.append(cand)
    return out


def _reindex(cat: TwoCategory, s: NerveSimplex, mu) -> NerveSimplex:
    """Pull back along a monotone reindexing given as a value list."""
    d = NerveData(cat, s)
    m = len(mu) - 1
    objs = tuple(s.objs[mu[i]] for i in range(m + 1))
    one = {(i, j): d.one(mu[i], mu[j]) for i in range(m + 1) for j in range(i + 1, m + 1)}
    two = {(i, j, k): d.two(mu[i], mu[j], mu[k])
           for i, j, k in itertools.combinations(range(m + 1), 3)}
    return _mk(objs, one, two)


@dataclass
class NerveComplex:
    scaled: ScaledSet
    cat: TwoCategory
    dim_bound: int
    element_of: dict[str, NerveSimplex]
    name_of: dict[NerveSimplex, str]

    @property
    def space(self) -> FiniteSimplicialSet:
        return self.scaled.space


def oplax_nerve(cat: TwoCategory, dim_bound: int = 4) -> NerveComplex:
    """The nerve on normalised-oplax simplex data, materialized up to
    dim_bound (the data is 3-coskeletal beyond that); thin triangles are the
    ones whose comparison 2-cell is invertible."""
    elements: dict[int, list[NerveSimplex]] = {}
    lower: list[NerveSimplex] = []
    for n in range(dim_bound + 1):
        lower = _simplices_of_dim(cat, n, lower)
        elements[n] = lower

    def face(s: NerveSimplex, i: int) -> NerveSimplex:
        mu = [v for v in range(s.dim + 1) if v != i]
        return _reindex(cat, s, mu)

    def degeneracy(s: NerveSimplex, j: int) -> NerveSimplex:
        mu = list(range(j + 1)) + list(range(j, s.dim + 1))
        return _reindex(cat, s, mu)

    fam = complex_from_family(elements, face, degeneracy,
                              sort_key=lambda s: (s.objs, s.one, s.two), prefix="n")
    thin = set()
    for name in fam.space.cells_of_dim(2):
        s: NerveSimplex = fam.element_of[name]
        if cat.two_cell_invertible(NerveData(cat, s).two(0, 1, 2)):
            thin.add(name)
    return NerveComplex(ScaledSet(fam.space, frozenset(thin)), cat, dim_bound,
                        fam.element_of, fam.name_of)


def duskin_nerve(cat: TwoCategory, dim_bound: int = 4) -> NerveComplex:
    """For strict 2-categories the oriental simplex data coincides with the
    classical nerve; this is the same complex, kept as a named entry point."""
    return oplax_nerve(cat, dim_bound)


def nerve_map(functor, source: NerveComplex, target: NerveComplex):
    """The simplicial map of nerves induced by a normalised oplax functor.

    The triangle data of the image composes the functor's comparison cell at
    the pair of edges with the image of the original 2-cell.
    """
    from .families import _normal_form
    from .maps import SSetMap

    F = functor
    B = target.cat

    def apply(s: NerveSimplex) -> NerveSimplex:
        d = NerveData(source.cat, s)
        n = s.dim
        objs = tuple(F.on_obj[x] for x in s.objs)
        one = {(i, j): F.on_one[d.one(i, j)]
               for i in range(n + 1) for j in range(i + 1, n + 1)}
        two = {}
        for i, j, k in itertools.combinations(range(n + 1), 3):
            two[(i, j, k)] = B.v(F.comp[(d.one(j, k), d.one(i, j))],
                                 F.on_two[d.two(i, j, k)])
        return _mk(objs, one, two)

    def face(s: NerveSimplex, i: int) -> NerveSimplex:
        return _reindex(B, s, [v for v in range(s.dim + 1) if v != i])

    def degeneracy(s: NerveSimplex, j: int) -> NerveSimplex:
        return _reindex(B, s, list(range(j + 1)) + list(range(j, s.dim + 1)))

    from .simplicial import Simplex

    assign = {}
    for name, s in source.element_of.items():
        eta, base = _normal_form(apply(s), s.dim, face, degeneracy)
        assign[name] = Simplex(eta, target.name_of[base])
    return SSetMap(source.space, target.space, assign, validate=True)


def oplax_scaling(scaled: ScaledSet, depth: int = 4) -> ScaledSet:
    """Restrict the scaling to thin triangles with an invertible outer leg
    (edge 01 or edge 12), using witnessed invertibility."""
    from .simplicial import nondeg

    oracle = InvertibilityOracle(scaled, depth)
    space = scaled.space
    keep = set()
    for t in scaled.thin:
        tri = nondeg(t, 2)
        if oracle.invertible(space.multiface(tri, (0, 1))) or \
           oracle.invertible(space.multiface(tri, (1, 2))):
            keep.add(t)
    return scaled.with_thin(keep)
