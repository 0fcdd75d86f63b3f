"""The Gray tensor product of scaled simplicial sets and its variants.

A triangle of the product is thin when both components are thin and the
directional degeneration condition of the chosen variant holds.  The
``minus``/``gray``/``plus`` rules form a chain; ``verity-2`` transliterates
the two-simplex marking rule for stratified sets (a marked edge being a
degenerate one) and coincides with ``plus``; ``equiv`` relaxes edge
degeneracy to witnessed invertibility.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from .invertibility import InvertibilityOracle
from .maps import SSetMap, identity_sset_map, product_map, swap_map
from .scaled import ScaledSet, ScaledMap, opposite_scaled
from .simplicial import (
    FiniteSimplicialSet,
    ProductComplex,
    PushoutComplex,
    Simplex,
    nondeg,
    opposite,
    product,
    pushout,
)

VARIANTS = ("minus", "gray", "plus", "equiv", "verity-2")


def edge_along(space: FiniteSimplicialSet, c: Simplex, i: int) -> Simplex:
    return space.multiface(c, (i, i + 1))


def degenerates_along(space: FiniteSimplicialSet, c: Simplex, i: int) -> bool:
    """The simplex is degenerate and its edge (i, i+1) is degenerate too;
    collapsing to a point counts."""
    return c.is_degenerate and edge_along(space, c, i).is_degenerate


def degenerates_to_point(c: Simplex) -> bool:
    return c.base_dim == 0


def _marked_edge(e: Simplex) -> bool:
    # scaled sets carry no edge markings; a marked edge is a degenerate one
    return e.is_degenerate


@dataclass
class _VariantRule:
    variant: str
    left: ScaledSet
    right: ScaledSet
    oracle_left: Optional[InvertibilityOracle] = None
    oracle_right: Optional[InvertibilityOracle] = None

    def thin_pair(self, cx: Simplex, cy: Simplex) -> bool:
        if not (self.left.is_thin(cx) and self.right.is_thin(cy)):
            return False
        lspace, rspace = self.left.space, self.right.space
        v = self.variant
        if v == "minus":
            return (degenerates_to_point(cx) or degenerates_to_point(cy)
                    or (degenerates_along(lspace, cx, 1) and degenerates_along(rspace, cy, 0)))
        if v == "gray":
            return degenerates_along(lspace, cx, 1) or degenerates_along(rspace, cy, 0)
        if v == "plus":
            return edge_along(lspace, cx, 1).is_degenerate or edge_along(rspace, cy, 0).is_degenerate
        if v == "verity-2":
            return _marked_edge(edge_along(lspace, cx, 1)) or _marked_edge(edge_along(rspace, cy, 0))
        if v == "equiv":
            return (self.oracle_left.invertible(edge_along(lspace, cx, 1))
                    or self.oracle_right.invertible(edge_along(rspace, cy, 0)))
        raise ValueError(f"unknown variant {v!r}")


def gray(left: ScaledSet, right: ScaledSet, variant: str = "gray",
         depth: int = 4, space: ProductComplex | None = None) -> ScaledSet:
    """The Gray product on the cartesian product of the underlying complexes.

    ``space`` may supply an already built product of the two underlying
    complexes to share; for ``equiv`` the inputs are probed for the lowest
    extension property and a warning is raised when it fails.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if space is None:
        space = product(left.space, right.space)
    rule = _VariantRule(variant, left, right)
    if variant == "equiv":
        rule.oracle_left = InvertibilityOracle(left, depth)
        rule.oracle_right = InvertibilityOracle(right, depth)
        from .anodyne import is_bicategory_up_to
        for side, name in ((left, "left"), (right, "right")):
            if not is_bicategory_up_to(side, 2).ok:
                warnings.warn(f"{name} factor fails the extension property at bound 2; "
                              "the equiv scaling is only guaranteed on bicategory-like inputs")
    thin = set()
    for name in space.cells_of_dim(2):
        cx, cy = space.components_of_cell(name)
        if rule.thin_pair(cx, cy):
            thin.add(name)
    return ScaledSet(space, frozenset(thin))


# ---------------------------------------------------------------------------
# Associativity
# ---------------------------------------------------------------------------

def _triple_components(outer: ProductComplex, name: str, left_nested: bool):
    cab, cc = outer.components_of_cell(name)
    inner: ProductComplex = outer.left if left_nested else outer.right
    if left_nested:
        ca, cb = inner.components(cab)
        return ca, cb, cc
    ca = cab
    cb, cc2 = inner.components(cc)
    return ca, cb, cc2


@dataclass(frozen=True)
class AssociativityReport:
    ok: bool
    left_thin: frozenset
    right_thin: frozenset
    direct_thin: frozenset

    def __bool__(self):
        return self.ok


def check_associativity(x: ScaledSet, y: ScaledSet, z: ScaledSet,
                        variant: str = "gray",
                        product_cache: dict | None = None) -> AssociativityReport:
    """Compare (x . y) . z, x . (y . z) and the direct three-condition rule.

    Thin sets are flattened to componentwise triples, so the comparison is a
    pure set equality across the two bracketings.  A shared ``product_cache``
    (keyed by factor identities) lets sweeps reuse the underlying products.
    """
    def prod(a, b):
        if product_cache is None:
            return product(a, b)
        key = (id(a), id(b))
        if key not in product_cache:
            product_cache[key] = product(a, b)
        return product_cache[key]

    pxy = prod(x.space, y.space)
    gxy = gray(x, y, variant, space=pxy)
    pl = prod(pxy, z.space)
    gl = gray(gxy, z, variant, space=pl)

    pyz = prod(y.space, z.space)
    gyz = gray(y, z, variant, space=pyz)
    pr = prod(x.space, pyz)
    gr = gray(x, gyz, variant, space=pr)

    left = frozenset(_triple_components(pl, t, True) for t in gl.thin)
    right = frozenset(_triple_components(pr, t, False) for t in gr.thin)

    direct = set()
    for name in pl.cells_of_dim(2):
        ca, cb, cc = _triple_components(pl, name, True)
        if not (x.is_thin(ca) and y.is_thin(cb) and z.is_thin(cc)):
            continue
        a12 = degenerates_along(x.space, ca, 1)
        b12 = degenerates_along(y.space, cb, 1)
        b01 = degenerates_along(y.space, cb, 0)
        c01 = degenerates_along(z.space, cc, 0)
        if (a12 and b12) or (b01 and c01) or (a12 and c01):
            direct.add((ca, cb, cc))
    direct = frozenset(direct)
    return AssociativityReport(left == right == direct, left, right, direct)


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DualityReport:
    ok: bool
    iso: Optional[SSetMap]
    detail: str

    def __bool__(self):
        return self.ok


def check_duality(x: ScaledSet, y: ScaledSet, variant: str = "gray") -> DualityReport:
    """Verify x . y == opposite(opposite(y) . opposite(x)) via the canonical map."""
    gxy = gray(x, y, variant)
    pxy: ProductComplex = gxy.space
    xop, yop = opposite_scaled(x), opposite_scaled(y)
    gdual = gray(yop, xop, variant)
    pdual: ProductComplex = gdual.space
    dual_space = opposite(pdual)  # same cell names as pdual

    assign = {}
    for name in pxy.cell_names:
        cx, cy = pxy.components_of_cell(name)
        from .simplicial import opposite_simplex
        target = pdual.pair(opposite_simplex(cy), opposite_simplex(cx))
        if target.is_degenerate:
            return DualityReport(False, None, f"canonical map degenerates on {name}")
        assign[name] = target
    try:
        iso = SSetMap(pxy, dual_space, assign, validate=True)
    except ValueError as exc:
        return DualityReport(False, None, f"canonical map is not simplicial: {exc}")
    if not iso.is_mono() or len(assign) != dual_space.cell_count():
        return DualityReport(False, iso, "canonical map is not bijective on cells")
    thin_image = frozenset(assign[t].base for t in gxy.thin)
    if thin_image != gdual.thin:
        return DualityReport(False, iso, "thin sets do not correspond")
    return DualityReport(True, iso, "canonical duality isomorphism verified")


def swap_asymmetry(x: ScaledSet, y: ScaledSet, variant: str = "gray") -> Optional[str]:
    """A triangle on which the symmetry map fails to preserve thinness, if any."""
    gxy = gray(x, y, variant)
    gyx = gray(y, x, variant)
    sw = swap_map(gxy.space, gyx.space)
    for t in sorted(gxy.thin):
        img = sw.image_of_cell(t)
        if not (img.is_degenerate or img.base in gyx.thin):
            return t
    return None


# ---------------------------------------------------------------------------
# Colimit distribution
# ---------------------------------------------------------------------------

def scaled_pushout(f: ScaledMap, g: ScaledMap) -> tuple[ScaledSet, ScaledMap, ScaledMap]:
    """Pushout in scaled sets: thin triangles are the leg images of thin ones."""
    q: PushoutComplex = pushout(f.map, g.map)
    thin = set()
    for t in f.target.thin:
        img = q.leg_x.image_of_cell(t)
        if not img.is_degenerate:
            thin.add(img.base)
    for t in g.target.thin:
        img = q.leg_b.image_of_cell(t)
        if not img.is_degenerate:
            thin.add(img.base)
    qs = ScaledSet(q, frozenset(thin))
    return (qs,
            ScaledMap(q.leg_x, f.target, qs),
            ScaledMap(q.leg_b, g.target, qs))


@dataclass(frozen=True)
class DistributionReport:
    ok: bool
    detail: str

    def __bool__(self):
        return self.ok


def _compare_product_of_pushout(qs: ScaledSet, factor: ScaledSet,
                                rhs: ScaledSet, factor_on_left: bool) -> Optional[str]:
    """Match up (pushout) x factor against pushout of the products, cell by cell."""
    lhs = gray(qs, factor) if not factor_on_left else gray(factor, qs)
    lspace: ProductComplex = lhs.space
    rspace: PushoutComplex = rhs.space
    assign = {}
    for name in lspace.cell_names:
        ca, cb = lspace.components_of_cell(name)
        cq, cf = (cb, ca) if factor_on_left else (ca, cb)
        prefix = cq.base[:2]
        stripped = Simplex(cq.eta, cq.base[2:])
        inner: ProductComplex = rspace.leg_b.source if prefix == "b:" else rspace.leg_x.source
        pair = (inner.pair(cf, stripped) if factor_on_left else inner.pair(stripped, cf))
        if pair.is_degenerate:
            return f"comparison degenerates on {name}"
        assign[name] = nondeg(prefix + pair.base, lspace.dim_of(name))
    try:
        comparison = SSetMap(lspace, rspace, assign, validate=True)
    except ValueError as exc:
        return f"comparison map is not simplicial: {exc}"
    if not comparison.is_mono() or len(assign) != rspace.cell_count():
        return "comparison map is not bijective"
    if frozenset(assign[t].base for t in lhs.thin) != rhs.thin:
        return "thin sets do not correspond"
    return None


def check_colimit_distribution(f: ScaledMap, g: ScaledMap, y: ScaledSet,
                               ) -> DistributionReport:
    """Check (X +_A B) . Y == (X . Y) +_{A . Y} (B . Y), and the mirror
    statement in the right variable."""
    if not f.map.is_mono():
        return DistributionReport(False, "first leg of the span must be injective")
    qs, _, _ = scaled_pushout(f, g)

    for factor_on_left in (False, True):
        def tensor(s: ScaledSet) -> ScaledSet:
            return gray(y, s) if factor_on_left else gray(s, y)

        ga, gx, gb = tensor(f.source), tensor(f.target), tensor(g.target)
        if factor_on_left:
            fy = product_map(ga.space, gx.space, identity_sset_map(y.space), f.map)
            gy = product_map(ga.space, gb.space, identity_sset_map(y.space), g.map)
        else:
            fy = product_map(ga.space, gx.space, f.map, identity_sset_map(y.space))
            gy = product_map(ga.space, gb.space, g.map, identity_sset_map(y.space))
        rhs, _, _ = scaled_pushout(ScaledMap(fy, ga, gx), ScaledMap(gy, ga, gb))
        problem = _compare_product_of_pushout(qs, y, rhs, factor_on_left)
        if problem:
            side = "right" if factor_on_left else "left"
            return DistributionReport(False, f"{side}-variable comparison failed: {problem}")
    return DistributionReport(True, "product distributes over the pushout in both variables")


# ---------------------------------------------------------------------------
# Mapping complexes Fun^gr / Fun^opgr
# ---------------------------------------------------------------------------

@dataclass
class FunComplex:
    scaled: ScaledSet
    direction: str
    dim_bound: int
    element_of: dict[str, SSetMap]      # cell name -> defining map
    name_of: dict


def fun_gray(x: ScaledSet, y: ScaledSet, direction: str = "opgr",
             dim_bound: int = 2) -> FunComplex:
    """The mapping complex whose n-simplices are scaled maps out of the Gray
    product with the flat n-simplex (on the left for ``opgr``, on the right
    for ``gr``); a triangle is thin when the map stays scaled after
    sharpening the simplex factor."""
    from .families import complex_from_family
    from .maps import delta_collapse, delta_inclusion, enumerate_maps
    from .scaled import is_scaled_map, scale_flat, scale_sharp
    from .simplicial import delta

    if direction not in ("gr", "opgr"):
        raise ValueError("direction must be 'gr' or 'opgr'")

    prods: dict[int, ProductComplex] = {}
    sources: dict[int, ScaledSet] = {}
    for n in range(dim_bound + 2):
        dn = scale_flat(delta(n))
        if direction == "opgr":
            src = gray(dn, x)
        else:
            src = gray(x, dn)
        prods[n] = src.space
        sources[n] = src

    def simplex_factor_map(mu_kind: str, idx: int, n: int) -> SSetMap:
        return delta_inclusion(idx, n) if mu_kind == "face" else delta_collapse(idx, n)

    def transport(f: SSetMap, n: int, mu_kind: str, idx: int) -> SSetMap:
        m = n - 1 if mu_kind == "face" else n + 1
        dm = simplex_factor_map(mu_kind, idx, n)
        if direction == "opgr":
            pm = product_map(prods[m], prods[n], dm, identity_sset_map(x.space))
        else:
            pm = product_map(prods[m], prods[n], identity_sset_map(x.space), dm)
        return f.compose(pm)

    elements: dict[int, list[SSetMap]] = {}
    for n in range(dim_bound + 1):
        elements[n] = [m for m in enumerate_maps(prods[n], y.space,
                                                 thin_source=sources[n].thin,
                                                 thin_target=y.thin)]

    def face(f: SSetMap, i: int) -> SSetMap:
        n = _fun_dim(f, prods)
        return transport(f, n, "face", i)

    def degeneracy(f: SSetMap, j: int) -> SSetMap:
        n = _fun_dim(f, prods)
        return transport(f, n, "degeneracy", j)

    fam = complex_from_family(elements, face, degeneracy,
                              sort_key=lambda m: m.as_key(), prefix="f")

    sharp2 = (gray(scale_sharp(delta(2)), x, space=prods[2]) if direction == "opgr"
              else gray(x, scale_sharp(delta(2)), space=prods[2]))
    thin = set()
    for name in fam.space.cells_of_dim(2):
        f = fam.element_of[name]
        if is_scaled_map(f, sharp2, y):
            thin.add(name)
    return FunComplex(ScaledSet(fam.space, frozenset(thin)), direction, dim_bound,
                      fam.element_of, fam.name_of)


def _fun_dim(f: SSetMap, prods: dict[int, ProductComplex]) -> int:
    for n, p in prods.items():
        if f.source is p:
            return n
    raise ValueError("map does not belong to the mapping-complex family")
