import itertools

from graycal.anodyne import is_bicategory_up_to
from graycal.canonical import isomorphic
from graycal.maps import count_maps
from graycal.nerves import NerveData, duskin_nerve, nerve_map, oplax_nerve, oplax_scaling
from graycal.scaled import scale_flat, scale_sharp
from graycal.simplicial import delta, nondeg, skeleton
from graycal.twocat import (
    chain_category,
    enumerate_oplax_functors,
    iso_pair_category,
    mixed_invertibility_category,
    terminal_two_category,
    walking_arrow,
    walking_invertible_two_cell,
    walking_two_cell,
)


def test_terminal_nerve_is_the_point():
    nerve = oplax_nerve(terminal_two_category(), 4)
    assert isomorphic(nerve.space, delta(0))


def test_arrow_nerve_is_the_flat_edge():
    nerve = oplax_nerve(walking_arrow(), 3)
    assert isomorphic(nerve.space, delta(1))
    assert nerve.scaled.thin == frozenset()


def test_chain_nerve_is_the_sharp_triangle():
    nerve = oplax_nerve(chain_category(), 3)
    assert isomorphic(nerve.space, delta(2))
    # a 1-category has only identity 2-cells, hence everything is thin
    assert len(nerve.scaled.thin) == 1


def test_walking_two_cell_nerve():
    nerve = oplax_nerve(walking_two_cell(), 3)
    tris = nerve.space.cells_of_dim(2)
    # the two whiskerings of the generating 2-cell
    assert len(tris) == 2
    for t in tris:
        data = NerveData(nerve.cat, nerve.element_of[t])
        assert data.two(0, 1, 2) == "al"
    assert nerve.scaled.thin == frozenset()
    inv = oplax_nerve(walking_invertible_two_cell(), 3)
    assert len(inv.scaled.thin) == len(inv.space.cells_of_dim(2)) == 4


def test_duskin_agrees_with_oplax_on_one_categories():
    for builder in (walking_arrow, chain_category, iso_pair_category):
        a = duskin_nerve(builder(), 3)
        b = oplax_nerve(builder(), 3)
        assert a.space.cell_names == b.space.cell_names
        assert a.scaled.thin == b.scaled.thin


def test_nerve_is_three_coskeletal():
    nerve = oplax_nerve(walking_two_cell(), 4)
    space = nerve.space
    # every compatible 4-sphere fills uniquely: the 4-cells are exactly the
    # distinct boundary tuples of their five 3-faces
    boundaries = set()
    for c in space.cells_of_dim(4):
        x = nondeg(c, 4)
        boundaries.add(tuple(space.face(x, i) for i in range(5)))
    assert len(boundaries) == len(space.cells_of_dim(4))


def test_nerve_fully_faithful_probe():
    pairs = [(walking_two_cell(), walking_invertible_two_cell()),
             (walking_arrow(), walking_two_cell())]
    for a, b in pairs:
        na = oplax_nerve(a, 3)
        nb = oplax_nerve(b, 3)
        simplicial = count_maps(skeleton(na.space, 3), skeleton(nb.space, 3))
        functorial = len(enumerate_oplax_functors(a, b))
        assert simplicial == functorial


def test_nerve_maps_preserve_thin_triangles_with_degenerate_leg():
    # a normalised oplax functor preserves triangles whose outer leg is an
    # identity and whose 2-cell is invertible; at nerve level its induced
    # map keeps such thin triangles thin
    a, b = walking_invertible_two_cell(), walking_invertible_two_cell()
    na, nb = oplax_nerve(a, 3), oplax_nerve(b, 3)
    for F in enumerate_oplax_functors(a, b):
        m = nerve_map(F, na, nb)
        space = na.space
        for t in na.scaled.thin:
            x = nondeg(t, 2)
            if space.multiface(x, (0, 1)).is_degenerate or \
               space.multiface(x, (1, 2)).is_degenerate:
                img = m.image_of_cell(t)
                assert img.is_degenerate or img.base in nb.scaled.thin


def test_nerves_pass_the_extension_property():
    nerve = oplax_nerve(mixed_invertibility_category(), 3)
    assert is_bicategory_up_to(nerve.scaled, 3).ok


def test_oplax_scaling_on_flat_and_sharp():
    d2f = scale_flat(delta(2))
    assert oplax_scaling(d2f).thin == d2f.thin
    d2s = scale_sharp(delta(2))
    # no leg of the top triangle of a poset is invertible
    assert oplax_scaling(d2s).thin == frozenset()


def test_oplax_scaling_keeps_invertible_legs():
    nerve = oplax_nerve(mixed_invertibility_category(), 2).scaled
    scaled = oplax_scaling(nerve)
    assert scaled.thin
    assert scaled.thin < nerve.thin
    # idempotent and monotone decreasing
    assert oplax_scaling(scaled).thin == scaled.thin
