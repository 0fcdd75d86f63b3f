"""Scaled simplicial sets: thin triangles, cores and saturation."""

from __future__ import annotations

from dataclasses import dataclass, field

from .maps import SSetMap
from .simplicial import (
    FiniteSimplicialSet,
    Simplex,
    nondeg,
    opposite,
    subcomplex,
)


@dataclass(frozen=True)
class ScaledSet:
    """A simplicial set with a set of thin 2-simplices.

    Only nondegenerate thin triangles are stored; degenerate 2-simplices are
    implicitly thin everywhere.
    """

    space: FiniteSimplicialSet
    thin: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        for t in self.thin:
            if not self.space.has_cell(t) or self.space.dim_of(t) != 2:
                raise ValueError(f"thin record {t!r} is not a 2-simplex of the complex")

    def is_thin(self, x: Simplex) -> bool:
        if x.dim != 2:
            raise ValueError("thinness concerns 2-simplices")
        return x.is_degenerate or x.base in self.thin

    def with_thin(self, thin) -> "ScaledSet":
        return ScaledSet(self.space, frozenset(thin))

    def triangles(self) -> tuple[str, ...]:
        return self.space.cells_of_dim(2)


def scale_flat(space: FiniteSimplicialSet) -> ScaledSet:
    """Only degenerate triangles are thin."""
    return ScaledSet(space, frozenset())


def scale_sharp(space: FiniteSimplicialSet) -> ScaledSet:
    """Every triangle is thin."""
    return ScaledSet(space, frozenset(space.cells_of_dim(2)))


def scaled_subcomplex(scaled: ScaledSet, keep) -> ScaledSet:
    keep = set(keep)
    return ScaledSet(subcomplex(scaled.space, keep), scaled.thin & keep)


def opposite_scaled(scaled: ScaledSet) -> ScaledSet:
    # the opposite complex keeps cell names, so the thin set carries over
    return ScaledSet(opposite(scaled.space), scaled.thin)


@dataclass(frozen=True)
class ScaledMap:
    """A simplicial map carrying thin triangles to thin triangles."""

    map: SSetMap
    source: ScaledSet
    target: ScaledSet

    def __post_init__(self):
        if not (self.map.source.same_presentation(self.source.space)
                and self.map.target.same_presentation(self.target.space)):
            raise ValueError("underlying map does not match the scaled endpoints")
        bad = scaling_violations(self.map, self.source, self.target)
        if bad:
            raise ValueError(f"map does not preserve thinness on {sorted(bad)[:3]}")

    def image_of(self, x: Simplex) -> Simplex:
        return self.map.image_of(x)


def scaling_violations(f: SSetMap, source: ScaledSet, target: ScaledSet) -> list[str]:
    bad = []
    for t in source.thin:
        img = f.image_of_cell(t)
        if not (img.is_degenerate or img.base in target.thin):
            bad.append(t)
    return bad


def is_scaled_map(f: SSetMap, source: ScaledSet, target: ScaledSet) -> bool:
    return not scaling_violations(f, source, target)


# ---------------------------------------------------------------------------
# Core
# ---------------------------------------------------------------------------

def core(scaled: ScaledSet) -> FiniteSimplicialSet:
    """The maximal subcomplex whose simplices have all 2-dimensional faces thin."""
    import itertools

    space = scaled.space
    keep = []
    for name in space.cell_names:
        n = space.dim_of(name)
        if n <= 1:
            keep.append(name)
            continue
        x = nondeg(name, n)
        ok = True
        for triple in itertools.combinations(range(n + 1), 3):
            if not scaled.is_thin(space.multiface(x, triple)):
                ok = False
                break
        if ok:
            keep.append(name)
    return subcomplex(space, keep)


# ---------------------------------------------------------------------------
# Saturation
# ---------------------------------------------------------------------------

# the premise faces and conclusions of the four-simplex closure rule
FOUR_SIMPLEX_PREMISES = ((0, 2, 4), (1, 2, 3), (0, 1, 3), (1, 3, 4), (0, 1, 2))
FOUR_SIMPLEX_CONCLUSIONS = ((0, 3, 4), (0, 1, 4))


def _saturation_pass(space: FiniteSimplicialSet, thin: set[str]) -> bool:
    """One forward pass of the rule against a frozen snapshot; returns
    whether anything was added."""
    scaled = ScaledSet(space, frozenset(thin))
    new = set()
    for sigma in space.simplices(4):
        if all(scaled.is_thin(space.multiface(sigma, p)) for p in FOUR_SIMPLEX_PREMISES):
            for c in FOUR_SIMPLEX_CONCLUSIONS:
                face = space.multiface(sigma, c)
                if not face.is_degenerate and face.base not in thin:
                    new.add(face.base)
    thin |= new
    return bool(new)


def saturation_additions(scaled: ScaledSet) -> frozenset[str]:
    """The triangles added by a single forward pass of the four-simplex rule."""
    thin = set(scaled.thin)
    _saturation_pass(scaled.space, thin)
    return frozenset(thin - scaled.thin)


def saturate(scaled: ScaledSet) -> ScaledSet:
    """The saturated closure: close under the four-simplex rule on both the
    complex and its opposite until a joint fixpoint; the underlying complex
    is unchanged."""
    space = scaled.space
    op_space = opposite(space)  # shares cell names
    thin = set(scaled.thin)
    while True:
        grew = _saturation_pass(space, thin)
        grew |= _saturation_pass(op_space, thin)
        if not grew:
            break
    return ScaledSet(space, frozenset(thin))


def rule_instance_additions(scaled: ScaledSet, sigma: Simplex) -> frozenset[str]:
    """The triangles one four-simplex instance of the rule would scale."""
    space = scaled.space
    if not all(scaled.is_thin(space.multiface(sigma, p)) for p in FOUR_SIMPLEX_PREMISES):
        return frozenset()
    out = set()
    for c in FOUR_SIMPLEX_CONCLUSIONS:
        face = space.multiface(sigma, c)
        if not face.is_degenerate and face.base not in scaled.thin:
            out.add(face.base)
    return frozenset(out)
