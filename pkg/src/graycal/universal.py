"""Triangle classes on products and the witness construction for the
universal property of the Gray product.

Over a product of two scaled sets three nested scalings are in play: the
oplax class L (thin pairs with an invertible outer leg in the product), the
intermediate class G (L plus the pairs collapsing to a point on one side or
degenerating in the Gray directions on both), and the invertible-leg class
where one designated leg is invertible in its own factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .anodyne import AnodyneCertificate, CertStep, derived_3, verify_certificate
from .gray import degenerates_along, degenerates_to_point, edge_along
from .invertibility import InvertibilityOracle
from .maps import SSetMap, map_from_top
from .scaled import ScaledSet, ScaledMap, opposite_scaled
from .simplicial import (
    MonotoneMap,
    ProductComplex,
    Simplex,
    delta,
    nondeg,
    opposite_simplex,
    product,
)


@dataclass
class TriangleClasses:
    product: ProductComplex
    product_thin: frozenset[str]   # thin pairs of the product scaling
    oplax: ScaledSet        # L
    intermediate: ScaledSet  # G
    invertible_leg: ScaledSet

    @property
    def chain_ok(self) -> bool:
        return (self.oplax.thin <= self.intermediate.thin
                and self.intermediate.thin <= self.invertible_leg.thin)


def product_scaling(c: ScaledSet, d: ScaledSet,
                    space: ProductComplex | None = None) -> ScaledSet:
    """The product scaled set: thin pairs of thin triangles."""
    if space is None:
        space = product(c.space, d.space)
    thin = set()
    for name in space.cells_of_dim(2):
        cx, cy = space.components_of_cell(name)
        if c.is_thin(cx) and d.is_thin(cy):
            thin.add(name)
    return ScaledSet(space, frozenset(thin))


def oplax_class(prod_scaled: ScaledSet, depth: int = 4) -> ScaledSet:
    """Thin triangles of the product whose edge 01 or 12 is invertible."""
    space = prod_scaled.space
    oracle = InvertibilityOracle(prod_scaled, depth)
    keep = set()
    for t in prod_scaled.thin:
        tri = nondeg(t, 2)
        if oracle.invertible(space.multiface(tri, (0, 1))) or \
           oracle.invertible(space.multiface(tri, (1, 2))):
            keep.add(t)
    return prod_scaled.with_thin(keep)


def triangle_classes(c: ScaledSet, d: ScaledSet, depth: int = 4) -> TriangleClasses:
    space = product(c.space, d.space)
    prod_scaled = product_scaling(c, d, space)
    lset = oplax_class(prod_scaled, depth)

    g_thin = set(lset.thin)
    for t in prod_scaled.thin:
        cx, cy = space.components_of_cell(t)
        if degenerates_to_point(cx) or degenerates_to_point(cy) or \
                (degenerates_along(c.space, cx, 1) and degenerates_along(d.space, cy, 0)):
            g_thin.add(t)

    ox = InvertibilityOracle(c, depth)
    oy = InvertibilityOracle(d, depth)
    eq_thin = set()
    for t in prod_scaled.thin:
        cx, cy = space.components_of_cell(t)
        if ox.invertible(edge_along(c.space, cx, 1)) or \
                oy.invertible(edge_along(d.space, cy, 0)):
            eq_thin.add(t)

    classes = TriangleClasses(space, prod_scaled.thin, lset,
                              prod_scaled.with_thin(g_thin),
                              prod_scaled.with_thin(eq_thin))
    if not classes.chain_ok:
        raise RuntimeError("triangle classes failed their inclusion chain")
    return classes


# ---------------------------------------------------------------------------
# Classifying which oplax maps come from the Gray product
# ---------------------------------------------------------------------------

@dataclass
class OplaxVerdict:
    satisfies: bool
    via_intermediate: bool
    offending: Optional[str]

    @property
    def consistent(self) -> bool:
        return self.satisfies == self.via_intermediate


def classify_oplax_functor(phi: ScaledMap, classes: TriangleClasses,
                           target: ScaledSet) -> OplaxVerdict:
    """Decide the slice and square conditions for a map out of the oplax
    scaling, and cross-check them against sending the whole intermediate
    class to thin triangles; the two answers must agree."""
    space = classes.product
    if not phi.map.source.same_presentation(space):
        raise ValueError("map is not defined on the product")
    if phi.source.thin != classes.oplax.thin:
        raise ValueError("map must be scaled for the oplax class")

    offending = None
    ok = True
    for t in classes.product_thin:
        cx, cy = space.components_of_cell(t)
        # (i): restriction to either family of slices stays scaled
        if degenerates_to_point(cx) or degenerates_to_point(cy):
            if not _image_thin(phi, t, target):
                ok, offending = False, f"slice condition fails on {t}"
                break
        # (ii): the square over a pair of edges goes to a thin triangle
        if degenerates_along(space.left, cx, 1) and degenerates_along(space.right, cy, 0):
            if not _image_thin(phi, t, target):
                ok, offending = False, f"square condition fails on {t}"
                break

    via_g = all(_image_thin(phi, t, target) for t in classes.intermediate.thin)
    verdict = OplaxVerdict(ok, via_g, offending)
    if not verdict.consistent:
        raise RuntimeError("slice/square conditions disagree with the intermediate class")
    return verdict


def _image_thin(phi: ScaledMap, t: str, target: ScaledSet) -> bool:
    img = phi.map.image_of_cell(t)
    return img.is_degenerate or img.base in target.thin


# ---------------------------------------------------------------------------
# The witness 4-simplex
# ---------------------------------------------------------------------------

@dataclass
class WitnessReport:
    simplex: Simplex                    # the 4-simplex in the product
    face_classes: dict[str, str]        # face -> class it was checked into
    derivation: AnodyneCertificate
    used_duality: bool

    @property
    def ok(self) -> bool:
        return verify_certificate(self.derivation).ok


_B_VERTICES = ((0, 0), (1, 0), (1, 1), (1, 2), (2, 2))


def _b_simplex(space: ProductComplex, alpha: Simplex, beta: Simplex) -> Simplex:
    xs = tuple(v[0] for v in _B_VERTICES)
    ys = tuple(v[1] for v in _B_VERTICES)
    ca = space.left.apply(alpha, MonotoneMap(4, 2, xs))
    cb = space.right.apply(beta, MonotoneMap(4, 2, ys))
    return space.pair(ca, cb)


def build_theorem_witness(c: ScaledSet, d: ScaledSet, alpha: Simplex, beta: Simplex,
                          depth: int = 4, classes: TriangleClasses | None = None,
                          dual_classes: "TriangleClasses | None" = None) -> WitnessReport:
    """Construct the 4-simplex through (0,0),(1,0),(1,1),(1,2),(2,2) over a
    pair of thin triangles whose designated leg is invertible, and machine
    check every face-membership claim together with the two derived-triangle
    steps recovering the faces 023 and then 024.

    The directly implemented case inverts the 12-leg of the first component;
    a pair with only the 01-leg of the second component invertible is
    handled through the opposite duality.
    """
    if not (c.is_thin(alpha) and d.is_thin(beta)):
        raise ValueError("both triangles must be thin in their factors")
    ox = InvertibilityOracle(c, depth)
    oy = InvertibilityOracle(d, depth)
    if ox.invertible(edge_along(c.space, alpha, 1)):
        return _build_direct(c, d, alpha, beta, depth, used_duality=False,
                             classes=classes)
    if oy.invertible(edge_along(d.space, beta, 0)):
        cop, dop = opposite_scaled(d), opposite_scaled(c)
        rep = _build_direct(cop, dop, opposite_simplex(beta), opposite_simplex(alpha),
                            depth, used_duality=True, classes=dual_classes)
        return rep
    raise ValueError("neither leg of the pair has a witnessed inverse")


def _build_direct(c: ScaledSet, d: ScaledSet, alpha: Simplex, beta: Simplex,
                  depth: int, used_duality: bool,
                  classes: TriangleClasses | None = None) -> WitnessReport:
    if classes is None:
        classes = triangle_classes(c, d, depth)
    space = classes.product
    b = _b_simplex(space, alpha, beta)

    def face(keep) -> Simplex:
        return space.multiface(b, keep)

    def in_class(x: Simplex, which: ScaledSet) -> bool:
        return x.is_degenerate or x.base in which.thin

    claims = {
        "012": (face((0, 1, 2)), classes.intermediate, "G"),
        "013": (face((0, 1, 3)), classes.intermediate, "G"),
        "123": (face((1, 2, 3)), classes.intermediate, "G"),
        "034": (face((0, 3, 4)), classes.oplax, "L"),
        "134": (face((1, 3, 4)), classes.oplax, "L"),
        "234": (face((2, 3, 4)), classes.oplax, "L"),
    }
    face_classes = {}
    for label, (x, which, tag) in claims.items():
        if not in_class(x, which):
            raise RuntimeError(f"face {label} fails its membership claim ({tag})")
        face_classes[label] = tag

    # replay the two derivations as certificate steps on top of G
    f023 = face((0, 2, 3))
    f024 = face((0, 2, 4))
    added = [x.base for x in (f023, f024) if not x.is_degenerate]
    ambient = ScaledSet(space, classes.intermediate.thin | frozenset(added))
    steps = []
    if not f023.is_degenerate and f023.base not in classes.intermediate.thin:
        steps.append(CertStep(derived_3(2),
                              map_from_top(delta(3), space, space.multiface(b, (0, 1, 2, 3)))))
    if not f024.is_degenerate and f024.base not in (classes.intermediate.thin | {x.base for x in (f023,) if not x.is_degenerate}):
        steps.append(CertStep(derived_3(1),
                              map_from_top(delta(3), space, space.multiface(b, (0, 2, 3, 4)))))
    cert = AnodyneCertificate(ambient, frozenset(space.cell_names),
                              classes.intermediate.thin, tuple(steps))
    outcome = verify_certificate(cert)
    if not outcome.ok:
        raise RuntimeError(f"witness derivation failed to replay: {outcome.reason}")
    return WitnessReport(b, face_classes, cert, used_duality)
