"""Finite strict 2-categories and normalised oplax functors between them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping


class TwoCategory:
    """A finite strict 2-category with explicit composition tables.

    1-cells and 2-cells are named; ``h1``/``h2`` are the horizontal tables
    (defined exactly on composable pairs) and ``v`` the vertical one.
    """

    def __init__(self, objects, one_cells: Mapping[str, tuple[str, str]],
                 two_cells: Mapping[str, tuple[str, str]],
                 id1: Mapping[str, str], id2: Mapping[str, str],
                 h1: Mapping[tuple[str, str], str],
                 h2: Mapping[tuple[str, str], str],
                 v: Mapping[tuple[str, str], str]):
        self.objects = tuple(objects)
        self.one_cells = dict(one_cells)      # name -> (src obj, tgt obj)
        self.two_cells = dict(two_cells)      # name -> (src 1-cell, tgt 1-cell)
        self.id1 = dict(id1)
        self.id2 = dict(id2)
        self._h1 = dict(h1)
        self._h2 = dict(h2)
        self._v = dict(v)

    # -- accessors -----------------------------------------------------------

    def src1(self, f: str) -> str:
        return self.one_cells[f][0]

    def tgt1(self, f: str) -> str:
        return self.one_cells[f][1]

    def src2(self, a: str) -> str:
        return self.two_cells[a][0]

    def tgt2(self, a: str) -> str:
        return self.two_cells[a][1]

    def h1(self, g: str, f: str) -> str:
        return self._h1[(g, f)]

    def h2(self, b: str, a: str) -> str:
        return self._h2[(b, a)]

    def v(self, b: str, a: str) -> str:
        return self._v[(b, a)]

    def hom1(self, x: str, y: str) -> list[str]:
        return [f for f, (s, t) in self.one_cells.items() if s == x and t == y]

    def hom2(self, f: str, g: str) -> list[str]:
        return [a for a, (s, t) in self.two_cells.items() if s == f and t == g]

    def composable1(self) -> Iterator[tuple[str, str]]:
        for g, f in itertools.product(self.one_cells, repeat=2):
            if self.src1(g) == self.tgt1(f):
                yield g, f

    def whisker_left(self, h: str, a: str) -> str:
        return self.h2(self.id2[h], a)

    def whisker_right(self, a: str, f: str) -> str:
        return self.h2(a, self.id2[f])

    def two_cell_invertible(self, a: str) -> bool:
        f, g = self.two_cells[a]
        for b in self.hom2(g, f):
            if self.v(b, a) == self.id2[f] and self.v(a, b) == self.id2[g]:
                return True
        return False


def validate_two_category(cat: TwoCategory) -> list[str]:
    """Exhaustively check units, associativity and the interchange law."""
    bad = []
    for x in cat.objects:
        i = cat.id1.get(x)
        if i is None or cat.one_cells.get(i) != (x, x):
            bad.append(f"identity 1-cell of {x} missing or mistyped")
    for f in cat.one_cells:
        i = cat.id2.get(f)
        if i is None or cat.two_cells.get(i) != (f, f):
            bad.append(f"identity 2-cell of {f} missing or mistyped")
    if bad:
        return bad

    # horizontal composition of 1-cells
    for g, f in cat.composable1():
        gf = cat._h1.get((g, f))
        if gf is None:
            bad.append(f"h1 undefined on ({g},{f})")
        elif cat.one_cells[gf] != (cat.src1(f), cat.tgt1(g)):
            bad.append(f"h1({g},{f}) mistyped")
    if bad:
        return bad
    for f in cat.one_cells:
        if cat._h1.get((cat.id1[cat.tgt1(f)], f)) != f or \
           cat._h1.get((f, cat.id1[cat.src1(f)])) != f:
            bad.append(f"1-cell unit law fails at {f}")
    for h, g in cat.composable1():
        for f in cat.one_cells:
            if cat.tgt1(f) != cat.src1(g):
                continue
            if cat.h1(cat.h1(h, g), f) != cat.h1(h, cat.h1(g, f)):
                bad.append(f"h1 associativity fails at ({h},{g},{f})")

    # vertical composition
    for b, a in itertools.product(cat.two_cells, repeat=2):
        if cat.src2(b) == cat.tgt2(a):
            ba = cat._v.get((b, a))
            if ba is None:
                bad.append(f"v undefined on ({b},{a})")
            elif cat.two_cells[ba] != (cat.src2(a), cat.tgt2(b)):
                bad.append(f"v({b},{a}) mistyped")
    if bad:
        return bad
    for a in cat.two_cells:
        if cat._v.get((a, cat.id2[cat.src2(a)])) != a or \
           cat._v.get((cat.id2[cat.tgt2(a)], a)) != a:
            bad.append(f"vertical unit law fails at {a}")
    for c, b, a in itertools.product(cat.two_cells, repeat=3):
        if cat.src2(c) == cat.tgt2(b) and cat.src2(b) == cat.tgt2(a):
            if cat.v(cat.v(c, b), a) != cat.v(c, cat.v(b, a)):
                bad.append(f"vertical associativity fails at ({c},{b},{a})")

    # horizontal composition of 2-cells
    def obj_src(a):
        return cat.src1(cat.src2(a))

    def obj_tgt(a):
        return cat.tgt1(cat.src2(a))

    for b, a in itertools.product(cat.two_cells, repeat=2):
        if obj_src(b) == obj_tgt(a):
            ba = cat._h2.get((b, a))
            want = (cat.h1(cat.src2(b), cat.src2(a)), cat.h1(cat.tgt2(b), cat.tgt2(a)))
            if ba is None:
                bad.append(f"h2 undefined on ({b},{a})")
            elif cat.two_cells[ba] != want:
                bad.append(f"h2({b},{a}) mistyped")
    if bad:
        return bad
    for g, f in cat.composable1():
        if cat.h2(cat.id2[g], cat.id2[f]) != cat.id2[cat.h1(g, f)]:
            bad.append(f"h2 of identities fails at ({g},{f})")
    for c, b, a in itertools.product(cat.two_cells, repeat=3):
        if obj_src(c) == obj_tgt(b) and obj_src(b) == obj_tgt(a):
            if cat.h2(cat.h2(c, b), a) != cat.h2(c, cat.h2(b, a)):
                bad.append(f"h2 associativity fails at ({c},{b},{a})")
    # interchange
    for bp, b in itertools.product(cat.two_cells, repeat=2):
        if cat.src2(bp) != cat.tgt2(b):
            continue
        for ap, a in itertools.product(cat.two_cells, repeat=2):
            if cat.src2(ap) != cat.tgt2(a):
                continue
            if obj_src(b) != obj_tgt(a):
                continue
            lhs = cat.h2(cat.v(bp, b), cat.v(ap, a))
            rhs = cat.v(cat.h2(bp, ap), cat.h2(b, a))
            if lhs != rhs:
                bad.append(f"interchange fails at ({bp},{b},{ap},{a})")
    return bad


# ---------------------------------------------------------------------------
# Building 2-categories
# ---------------------------------------------------------------------------

def from_category(objects, arrows: Mapping[str, tuple[str, str]],
                  compose: Mapping[tuple[str, str], str],
                  identities: Mapping[str, str]) -> TwoCategory:
    """A 1-category as a 2-category with only identity 2-cells."""
    two = {f"id:{f}": (f, f) for f in arrows}
    id2 = {f: f"id:{f}" for f in arrows}
    h1 = dict(compose)
    for g, f in itertools.product(arrows, repeat=2):
        if arrows[g][0] == arrows[f][1] and (g, f) not in h1:
            raise ValueError(f"composition table misses ({g},{f})")
    h2 = {}
    v = {}
    for g, f in h1:
        h2[(id2[g], id2[f])] = id2[h1[(g, f)]]
    for f in arrows:
        v[(id2[f], id2[f])] = id2[f]
    return TwoCategory(objects, arrows, two, dict(identities), id2, h1, h2, v)


def terminal_two_category() -> TwoCategory:
    return from_category(["*"], {"i": ("*", "*")}, {("i", "i"): "i"}, {"*": "i"})


def walking_arrow() -> TwoCategory:
    arrows = {"ia": ("a", "a"), "ib": ("b", "b"), "u": ("a", "b")}
    comp = {("ia", "ia"): "ia", ("ib", "ib"): "ib",
            ("u", "ia"): "u", ("ib", "u"): "u"}
    return from_category(["a", "b"], arrows, comp, {"a": "ia", "b": "ib"})


def iso_pair_category() -> TwoCategory:
    """The walking isomorphism pair: x <-> y with both composites identities."""
    arrows = {"ix": ("x", "x"), "iy": ("y", "y"), "f": ("x", "y"), "g": ("y", "x")}
    comp = {("ix", "ix"): "ix", ("iy", "iy"): "iy",
            ("f", "ix"): "f", ("iy", "f"): "f",
            ("g", "iy"): "g", ("ix", "g"): "g",
            ("g", "f"): "ix", ("f", "g"): "iy"}
    return from_category(["x", "y"], arrows, comp, {"x": "ix", "y": "iy"})


def chain_category() -> TwoCategory:
    """The composable triangle 0 -> 1 -> 2 (a poset, no invertible arrows)."""
    arrows = {"i0": ("p0", "p0"), "i1": ("p1", "p1"), "i2": ("p2", "p2"),
              "c01": ("p0", "p1"), "c12": ("p1", "p2"), "c02": ("p0", "p2")}
    comp = {("i0", "i0"): "i0", ("i1", "i1"): "i1", ("i2", "i2"): "i2",
            ("c01", "i0"): "c01", ("i1", "c01"): "c01",
            ("c12", "i1"): "c12", ("i2", "c12"): "c12",
            ("c02", "i0"): "c02", ("i2", "c02"): "c02",
            ("c12", "c01"): "c02"}
    return from_category(["p0", "p1", "p2"], arrows, comp,
                         {"p0": "i0", "p1": "i1", "p2": "i2"})


def mixed_invertibility_category() -> TwoCategory:
    """Disjoint union of the isomorphism pair and the composable triangle;
    some edges of the nerve are invertible and some are not."""
    a, b = iso_pair_category(), chain_category()
    return TwoCategory(
        a.objects + b.objects,
        {**a.one_cells, **b.one_cells},
        {**a.two_cells, **b.two_cells},
        {**a.id1, **b.id1},
        {**a.id2, **b.id2},
        {**a._h1, **b._h1},
        {**a._h2, **b._h2},
        {**a._v, **b._v},
    )


def _two_object_two_cell(invertible: bool) -> TwoCategory:
    objects = ["a", "b"]
    one = {"ia": ("a", "a"), "ib": ("b", "b"), "f": ("a", "b"), "g": ("a", "b")}
    id1 = {"a": "ia", "b": "ib"}
    two = {"jia": ("ia", "ia"), "jib": ("ib", "ib"),
           "jf": ("f", "f"), "jg": ("g", "g"), "al": ("f", "g")}
    id2 = {"ia": "jia", "ib": "jib", "f": "jf", "g": "jg"}
    if invertible:
        two["be"] = ("g", "f")
    h1 = {("ia", "ia"): "ia", ("ib", "ib"): "ib",
          ("f", "ia"): "f", ("ib", "f"): "f",
          ("g", "ia"): "g", ("ib", "g"): "g"}

    # vertical composition: identities act trivially; al/be compose to identities
    v = {}
    cells = list(two)
    for bb, aa in itertools.product(cells, repeat=2):
        if two[bb][0] != two[aa][1]:
            continue
        if aa in ("jia", "jib", "jf", "jg") or aa == f"j{two[aa][0]}":
            pass
        if aa.startswith("j"):
            v[(bb, aa)] = bb
        elif bb.startswith("j"):
            v[(bb, aa)] = aa
        elif bb == "be" and aa == "al":
            v[(bb, aa)] = "jf"
        elif bb == "al" and aa == "be":
            v[(bb, aa)] = "jg"
        else:
            raise AssertionError("unexpected vertical composite")

    # horizontal composition of 2-cells: whiskering with identity cells
    h2 = {}
    for bb, aa in itertools.product(cells, repeat=2):
        sb, tb = two[bb]
        sa, ta = two[aa]
        if one[sb][0] != one[sa][1]:
            continue
        src = h1[(sb, sa)]
        tgt = h1[(two[bb][1], two[aa][1])]
        if bb.startswith("j") and aa.startswith("j"):
            h2[(bb, aa)] = id2[src]
        elif aa.startswith("j"):  # aa is an identity at an object-like 1-cell ia
            h2[(bb, aa)] = bb
        else:  # bb is jib
            h2[(bb, aa)] = aa
    return TwoCategory(objects, one, two, id1, id2, h1, h2, v)


def walking_two_cell() -> TwoCategory:
    """Two objects, two parallel 1-cells and one non-invertible 2-cell."""
    return _two_object_two_cell(False)


def walking_invertible_two_cell() -> TwoCategory:
    """Two objects, two parallel 1-cells and one invertible 2-cell."""
    return _two_object_two_cell(True)


# ---------------------------------------------------------------------------
# Normalised oplax functors
# ---------------------------------------------------------------------------

@dataclass
class NormalOplaxFunctor:
    """Object/1-cell/2-cell assignments plus one comparison 2-cell per
    composable pair, in the direction F(g f) => F(g) F(f)."""

    source: TwoCategory
    target: TwoCategory
    on_obj: dict[str, str]
    on_one: dict[str, str]
    on_two: dict[str, str]
    comp: dict[tuple[str, str], str] = field(default_factory=dict)

    def key(self):
        return (tuple(sorted(self.on_obj.items())), tuple(sorted(self.on_one.items())),
                tuple(sorted(self.on_two.items())), tuple(sorted(self.comp.items())))

    def is_strict(self) -> bool:
        t = self.target
        return all(c == t.id2[t.src2(c)] for c in self.comp.values())


def validate_oplax(F: NormalOplaxFunctor) -> list[str]:
    """The normalisation, cocycle, vertical and horizontal conditions."""
    A, B = F.source, F.target
    bad = []
    for f, (x, y) in A.one_cells.items():
        if f not in F.on_one:
            bad.append(f"1-cell {f} unassigned")
            continue
        if B.one_cells[F.on_one[f]] != (F.on_obj[x], F.on_obj[y]):
            bad.append(f"image of {f} mistyped")
    for a, (f, g) in A.two_cells.items():
        if a not in F.on_two:
            bad.append(f"2-cell {a} unassigned")
            continue
        if B.two_cells[F.on_two[a]] != (F.on_one[f], F.on_one[g]):
            bad.append(f"image of {a} mistyped")
    if bad:
        return bad

    # normalisation
    for x in A.objects:
        if F.on_one[A.id1[x]] != B.id1[F.on_obj[x]]:
            bad.append(f"F does not preserve the identity of {x}")
    for f in A.one_cells:
        if F.on_two[A.id2[f]] != B.id2[F.on_one[f]]:
            bad.append(f"F does not preserve the identity 2-cell of {f}")
    for g, f in A.composable1():
        c = F.comp.get((g, f))
        if c is None:
            bad.append(f"comparison cell missing for ({g},{f})")
            continue
        want = (F.on_one[A.h1(g, f)], B.h1(F.on_one[g], F.on_one[f]))
        if B.two_cells[c] != want:
            bad.append(f"comparison cell for ({g},{f}) mistyped")
    if bad:
        return bad
    for f, (x, y) in A.one_cells.items():
        if F.comp[(A.id1[y], f)] != B.id2[F.on_one[f]] or \
           F.comp[(f, A.id1[x])] != B.id2[F.on_one[f]]:
            bad.append(f"comparison with an identity not trivial at {f}")

    # cocycle
    for h, g in A.composable1():
        for f in A.one_cells:
            if A.tgt1(f) != A.src1(g):
                continue
            lhs = B.v(B.whisker_left(F.on_one[h], F.comp[(g, f)]),
                      F.comp[(h, A.h1(g, f))])
            rhs = B.v(B.whisker_right(F.comp[(h, g)], F.on_one[f]),
                      F.comp[(A.h1(h, g), f)])
            if lhs != rhs:
                bad.append(f"cocycle fails at ({h},{g},{f})")

    # vertical compatibility
    for b, a in itertools.product(A.two_cells, repeat=2):
        if A.src2(b) == A.tgt2(a):
            if F.on_two[A.v(b, a)] != B.v(F.on_two[b], F.on_two[a]):
                bad.append(f"vertical compatibility fails at ({b},{a})")

    # horizontal compatibility
    for b, a in itertools.product(A.two_cells, repeat=2):
        fb, gb = A.two_cells[b]
        fa, ga = A.two_cells[a]
        if A.src1(fb) != A.tgt1(fa):
            continue
        lhs = B.v(F.comp[(gb, ga)], F.on_two[A.h2(b, a)])
        rhs = B.v(B.h2(F.on_two[b], F.on_two[a]), F.comp[(fb, fa)])
        if lhs != rhs:
            bad.append(f"horizontal compatibility fails at ({b},{a})")
    return bad


def identity_oplax(A: TwoCategory) -> NormalOplaxFunctor:
    return NormalOplaxFunctor(
        A, A,
        {x: x for x in A.objects},
        {f: f for f in A.one_cells},
        {a: a for a in A.two_cells},
        {(g, f): A.id2[A.h1(g, f)] for g, f in A.composable1()},
    )


def compose_oplax(G: NormalOplaxFunctor, F: NormalOplaxFunctor) -> NormalOplaxFunctor:
    """G after F; the comparison of the composite is G of F's comparison
    followed by G's comparison at the image pair.  The result is re-validated."""
    if F.target is not G.source:
        raise ValueError("functors not composable")
    A, C = F.source, G.target
    comp = {}
    for g, f in A.composable1():
        comp[(g, f)] = C.v(G.comp[(F.on_one[g], F.on_one[f])],
                           G.on_two[F.comp[(g, f)]])
    GF = NormalOplaxFunctor(
        A, C,
        {x: G.on_obj[F.on_obj[x]] for x in A.objects},
        {f: G.on_one[F.on_one[f]] for f in A.one_cells},
        {a: G.on_two[F.on_two[a]] for a in A.two_cells},
        comp,
    )
    bad = validate_oplax(GF)
    if bad:
        raise ValueError("composite is not a normalised oplax functor: " + bad[0])
    return GF


def enumerate_oplax_functors(A: TwoCategory, B: TwoCategory) -> list[NormalOplaxFunctor]:
    """Brute-force enumeration of all normalised oplax functors A -> B."""
    out = []
    obj_lists = [B.objects for _ in A.objects]
    for objs in itertools.product(*obj_lists):
        on_obj = dict(zip(A.objects, objs))
        free_one = [f for f in A.one_cells if f not in A.id1.values()]
        choices = []
        ok = True
        for f in free_one:
            x, y = A.one_cells[f]
            cand = B.hom1(on_obj[x], on_obj[y])
            if not cand:
                ok = False
                break
            choices.append(cand)
        if not ok:
            continue
        for ones in itertools.product(*choices):
            on_one = {A.id1[x]: B.id1[on_obj[x]] for x in A.objects}
            on_one.update(dict(zip(free_one, ones)))
            free_two = [a for a in A.two_cells if a not in A.id2.values()]
            tchoices = []
            ok = True
            for a in free_two:
                f, g = A.two_cells[a]
                cand = B.hom2(on_one[f], on_one[g])
                if not cand:
                    ok = False
                    break
                tchoices.append(cand)
            if not ok:
                continue
            for twos in itertools.product(*tchoices):
                on_two = {A.id2[f]: B.id2[on_one[f]] for f in A.one_cells}
                on_two.update(dict(zip(free_two, twos)))
                pairs = [(g, f) for g, f in A.composable1()
                         if not (f in A.id1.values() or g in A.id1.values())]
                ccands = []
                ok = True
                for g, f in pairs:
                    cand = B.hom2(on_one[A.h1(g, f)], B.h1(on_one[g], on_one[f]))
                    if not cand:
                        ok = False
                        break
                    ccands.append(cand)
                if not ok:
                    continue
                for comps in itertools.product(*ccands):
                    comp = {}
                    for g, f in A.composable1():
                        if f in A.id1.values() or g in A.id1.values():
                            comp[(g, f)] = B.id2[on_one[A.h1(g, f)]]
                    comp.update(dict(zip(pairs, comps)))
                    F = NormalOplaxFunctor(A, B, dict(on_obj), on_one, dict(on_two), comp)
                    if not validate_oplax(F):
                        out.append(F)
    return out
