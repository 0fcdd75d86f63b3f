"""Build a finite simplicial set from an abstract simplex family.

A family provides hashable elements per dimension together with face and
degeneracy callables; the builder finds the nondegenerate elements, puts
every face into normal form and emits a named complex plus the element
correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Mapping

from .simplicial import (
    FiniteSimplicialSet,
    MonotoneMap,
    Simplex,
    codegeneracy,
    identity_map,
)


@dataclass
class FamilyComplex:
    space: FiniteSimplicialSet
    element_of: dict[str, Hashable]          # cell name -> nondegenerate element
    name_of: dict[Hashable, str]

    def simplex_of(self, element: Hashable, dim: int,
                   face: Callable, degeneracy: Callable) -> Simplex:
        eta, base = _normal_form(element, dim, face, degeneracy)
        return Simplex(eta, self.name_of[base])


def _normal_form(x, dim: int, face: Callable, degeneracy: Callable):
    for j in range(dim):
        if degeneracy(face(x, j), j) == x:
            eta, base = _normal_form(face(x, j), dim - 1, face, degeneracy)
            return eta.compose(codegeneracy(j, dim - 1)), base
    return identity_map(dim), x


def complex_from_family(
    elements: Mapping[int, list],
    face: Callable,
    degeneracy: Callable,
    sort_key: Callable = repr,
    prefix: str = "e",
) -> FamilyComplex:
    """Assemble the complex on the nondegenerate elements of the family.

    ``elements`` must be closed under faces up to its top dimension; names
    are assigned deterministically from ``sort_key``.
    """
    name_of: dict[Hashable, str] = {}
    element_of: dict[str, Hashable] = {}
    nondeg_by_dim: dict[int, list] = {}
    top = max(elements) if elements else -1
    for d in range(top + 1):
        seen = set()
        uniq = []
        for x in elements.get(d, ()):
            if x in seen:
                continue
            seen.add(x)
            uniq.append(x)
        uniq.sort(key=sort_key)
        nd = []
        for x in uniq:
            if d > 0 and any(degeneracy(face(x, j), j) == x for j in range(d)):
                continue
            nd.append(x)
        nondeg_by_dim[d] = nd
        for k, x in enumerate(nd):
            name = f"{prefix}{d}_{k}"
            name_of[x] = name
            element_of[name] = x

    cells: dict[str, tuple[Simplex, ...]] = {}
    for d in range(top + 1):
        for x in nondeg_by_dim[d]:
            if d == 0:
                cells[name_of[x]] = ()
                continue
            faces = []
            for i in range(d + 1):
                eta, base = _normal_form(face(x, i), d - 1, face, degeneracy)
                if base not in name_of:
                    raise ValueError("family is not closed under faces")
                faces.append(Simplex(eta, name_of[base]))
            cells[name_of[x]] = tuple(faces)
    space = FiniteSimplicialSet(cells, validate=True)
    return FamilyComplex(space, element_of, name_of)
