"""Mapping complexes between two vertices of a scaled simplicial set.

An n-simplex from x to y is a map out of the cylinder over the n-simplex
that is constant on the two ends and sends every comparison triangle
((i,0),(i,1),(j,1)) to a thin one; an edge is marked when its square's
triangle ((0,0),(1,0),(1,1)) is thin.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import complex_from_family
from .maps import SSetMap, delta_collapse, delta_inclusion, enumerate_maps, identity_sset_map, product_map, poset_simplex
from .scaled import ScaledSet
from .simplicial import FiniteSimplicialSet, ProductComplex, Simplex, delta, nondeg, product


@dataclass
class HomComplex:
    space: FiniteSimplicialSet
    marked: frozenset[str]              # marked edges
    element_of: dict[str, SSetMap]
    name_of: dict

    def edge_count(self) -> int:
        return len(self.space.cells_of_dim(1))


def _cylinder(n: int) -> ProductComplex:
    return product(delta(n), delta(1))


def _constant_on_ends(cyl: ProductComplex, f: SSetMap, x: str, y: str) -> bool:
    for name in cyl.cell_names:
        _, cy = cyl.components_of_cell(name)
        if cy.base == "0":
            img = f.image_of_cell(name)
            if img.base_dim != 0 or img.base != x:
                return False
        elif cy.base == "1":
            img = f.image_of_cell(name)
            if img.base_dim != 0 or img.base != y:
                return False
    return True


def _comparison_triangles(cyl: ProductComplex, n: int) -> list[Simplex]:
    tris = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            cx = poset_simplex(cyl.left, (i, i, j))
            cy = poset_simplex(cyl.right, (0, 1, 1))
            tris.append(cyl.pair(cx, cy))
    return tris


def hom_complex(scaled: ScaledSet, x: str, y: str, dim_bound: int = 3) -> HomComplex:
    """Enumerate the mapping complex from x to y up to dim_bound."""
    space = scaled.space
    if not (space.has_cell(x) and space.dim_of(x) == 0 and
            space.has_cell(y) and space.dim_of(y) == 0):
        raise ValueError("endpoints must be vertices of the complex")
    cylinders = {n: _cylinder(n) for n in range(dim_bound + 2)}

    elements: dict[int, list[SSetMap]] = {}
    for n in range(dim_bound + 1):
        cyl = cylinders[n]
        fixed = {}
        for i in range(n + 1):
            fixed[f"({i})x(0)"] = nondeg(x, 0)
            fixed[f"({i})x(1)"] = nondeg(y, 0)
        found = []
        tris = _comparison_triangles(cyl, n)
        for f in enumerate_maps(cyl, space, fixed=fixed):
            if not _constant_on_ends(cyl, f, x, y):
                continue
            if all(scaled.is_thin(f.image_of(t)) for t in tris if t.dim == 2):
                found.append(f)
        elements[n] = found

    def transport(f: SSetMap, kind: str, idx: int) -> SSetMap:
        n = _hom_dim(f, cylinders)
        m = n - 1 if kind == "face" else n + 1
        dm = delta_inclusion(idx, n) if kind == "face" else delta_collapse(idx, n)
        pm = product_map(cylinders[m], cylinders[n], dm,
                         identity_sset_map(cylinders[n].right))
        return f.compose(pm)

    fam = complex_from_family(
        elements,
        lambda f, i: transport(f, "face", i),
        lambda f, j: transport(f, "degeneracy", j),
        sort_key=lambda m: m.as_key(), prefix="h",
    )
    marked = set()
    cyl1 = cylinders[1]
    corner = cyl1.pair(poset_simplex(cyl1.left, (0, 1, 1)),
                       poset_simplex(cyl1.right, (0, 0, 1)))
    for name in fam.space.cells_of_dim(1):
        f = fam.element_of[name]
        if scaled.is_thin(f.image_of(corner)):
            marked.add(name)
    return HomComplex(fam.space, frozenset(marked), fam.element_of, fam.name_of)


def _hom_dim(f: SSetMap, cylinders: dict[int, ProductComplex]) -> int:
    for n, cyl in cylinders.items():
        if f.source is cyl:
            return n
    raise ValueError("map does not belong to the hom family")
