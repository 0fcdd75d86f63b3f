import itertools

import pytest
from hypothesis import given, settings, strategies as st

from graycal.simplicial import (
    FiniteSimplicialSet,
    MonotoneMap,
    Simplex,
    boundary_delta,
    codegeneracy,
    collapse_edge,
    delta,
    disjoint_union,
    empty_complex,
    horn,
    nondeg,
    opposite,
    opposite_simplex,
    point,
    product,
    pushout,
    quotient_horn,
    quotient_simplex,
    standard_object,
    subcomplex,
    validate_complex,
)
from graycal.maps import SSetMap, identity_sset_map
from graycal.canonical import isomorphic
from graycal.corpus import random_scaled_complex
import random


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def monotone_maps(n, m):
    """All weakly increasing maps [n] -> [m], enumerated directly."""
    return [v for v in itertools.product(range(m + 1), repeat=n + 1)
            if all(v[i] <= v[i + 1] for i in range(n))]


def surjection_count(n, m):
    return sum(1 for v in monotone_maps(n, m) if set(v) == set(range(m + 1)))


def grid_chain_count(dims, length):
    """Strictly increasing chains of the given length in a product of ordinals."""
    points = list(itertools.product(*[range(d + 1) for d in dims]))

    def le(a, b):
        return all(x <= y for x, y in zip(a, b))

    count = 0
    for chain in itertools.combinations(points, length):
        ordered = sorted(chain)
        if all(le(ordered[i], ordered[i + 1]) and ordered[i] != ordered[i + 1]
               for i in range(length - 1)):
            count += 1
    return count


# ---------------------------------------------------------------------------
# enumerate_simplices
# ---------------------------------------------------------------------------

def test_simplices_of_the_edge():
    # oracle: all monotone maps [2] -> [1]; every one is degenerate
    assert len(monotone_maps(2, 1)) == 4
    d1 = delta(1)
    two = d1.simplices(2)
    assert len(two) == 4
    assert all(x.is_degenerate for x in two)
    # split by base dimension: 2 over the edge, 2 over vertices
    assert sum(1 for x in two if x.base_dim == 1) == surjection_count(2, 1) * 1 == 2
    assert sum(1 for x in two if x.base_dim == 0) == 2


@pytest.mark.parametrize("n", [0, 1, 2, 5])
def test_point_has_one_simplex_per_dimension(n):
    assert len(point().simplices(n)) == 1


def test_boundary_two_has_no_nondegenerate_triangles():
    b = boundary_delta(2)
    assert all(x.is_degenerate for x in b.simplices(2))


def test_simplices_are_duplicate_free():
    d2 = delta(2)
    xs = d2.simplices(3)
    assert len(xs) == len(set(xs))
    # oracle: total 3-simplices = monotone maps [3] -> [2]
    assert len(xs) == len(monotone_maps(3, 2))


# ---------------------------------------------------------------------------
# standard objects
# ---------------------------------------------------------------------------

def test_inner_horn_two_one():
    h = standard_object("horn", 2, 1)
    assert len(h.cells_of_dim(0)) == 3
    assert sorted(h.cells_of_dim(1)) == ["01", "12"]


def test_boundary_three_counts():
    b = standard_object("boundary", 3)
    assert [len(b.cells_of_dim(k)) for k in range(4)] == [4, 6, 4, 0]


def test_quotient_horn_three():
    q = standard_object("quotient-horn", 3)
    assert len(q.cells_of_dim(0)) == 3
    assert not validate_complex(q)


def test_horn_rejects_bad_parameters():
    with pytest.raises(ValueError):
        horn(0, 0)
    with pytest.raises(ValueError):
        horn(2, 3)
    with pytest.raises(ValueError):
        quotient_horn(2)


def test_quotient_matches_pushout_construction():
    # the direct collapse agrees with the pushout of the edge inclusion
    d3, d1, pt = delta(3), delta(1), point()
    edge = SSetMap(d1, d3, {"0": nondeg("0", 0), "1": nondeg("1", 0),
                            "01": nondeg("01", 1)})
    to_pt = SSetMap(d1, pt, {"0": nondeg("pt", 0), "1": nondeg("pt", 0),
                             "01": Simplex(codegeneracy(0, 0), "pt")})
    q = pushout(edge, to_pt)
    assert isomorphic(q, quotient_simplex(3))


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def test_square_counts():
    p = product(delta(1), delta(1))
    got = [len(p.cells_of_dim(k)) for k in range(3)]
    oracle = [grid_chain_count((1, 1), k + 1) for k in range(3)]
    assert got == oracle == [4, 5, 2]


def test_prism_three_cells():
    p = product(delta(2), delta(1))
    assert len(p.cells_of_dim(3)) == grid_chain_count((2, 1), 4) == 3


def test_product_with_point_is_identity():
    for x in (delta(2), boundary_delta(2), quotient_simplex(2)):
        assert isomorphic(product(x, point()), x)
        assert isomorphic(product(point(), x), x)


def test_product_faces_are_componentwise():
    p = product(delta(2), delta(1))
    for name in p.cell_names:
        n = p.dim_of(name)
        if n == 0:
            continue
        cx, cy = p.components_of_cell(name)
        x = nondeg(name, n)
        for i in range(n + 1):
            fx, fy = p.components(p.face(x, i))
            assert fx == p.left.face(cx, i)
            assert fy == p.right.face(cy, i)


def test_product_is_valid_complex():
    assert not validate_complex(product(delta(2), delta(2)))
    assert not validate_complex(product(quotient_simplex(2), delta(1)))


def test_opposite_of_product():
    d1, d2 = delta(1), delta(2)
    p = product(d2, d1)
    po = opposite(p)
    q = product(opposite(d2), opposite(d1))
    # canonical comparison: same cells, componentwise opposites
    assign = {}
    for name in p.cell_names:
        cx, cy = p.components_of_cell(name)
        assign[name] = q.pair(opposite_simplex(cx), opposite_simplex(cy))
    m = SSetMap(po, q, assign)
    assert m.is_mono() and len(assign) == q.cell_count()


def test_empty_products():
    assert product(empty_complex(), delta(3)).cell_count() == 0
    assert product(delta(3), empty_complex()).cell_count() == 0


# ---------------------------------------------------------------------------
# pushouts
# ---------------------------------------------------------------------------

def test_disjoint_union():
    q = disjoint_union(delta(1), delta(2))
    assert len(q.cells_of_dim(0)) == 5
    assert len(q.cells_of_dim(1)) == 4
    assert not validate_complex(q)


def test_glue_two_edges_at_a_point():
    d1, pt = delta(1), point()
    inc = SSetMap(pt, d1, {"pt": nondeg("0", 0)})
    q = pushout(inc, inc)
    assert len(q.cells_of_dim(0)) == 3
    assert len(q.cells_of_dim(1)) == 2


def test_fill_a_boundary():
    d3, b3 = delta(3), boundary_delta(3)
    inc = identity_sset_map(b3)
    into = SSetMap(b3, d3, {c: nondeg(c, b3.dim_of(c)) for c in b3.cell_names})
    q = pushout(into, inc)
    assert isomorphic(q, d3)


def test_pushout_rejects_non_mono():
    d1, pt = delta(1), point()
    collapse = SSetMap(d1, pt, {"0": nondeg("pt", 0), "1": nondeg("pt", 0),
                                "01": Simplex(codegeneracy(0, 0), "pt")})
    with pytest.raises(ValueError):
        pushout(collapse, identity_sset_map(d1))


def test_pushout_universal_property():
    # glue two triangles along an edge, then compare cocones into Delta^2
    d2, d1 = delta(2), delta(1)
    edge = SSetMap(d1, d2, {"0": nondeg("0", 0), "1": nondeg("1", 0),
                            "01": nondeg("01", 1)})
    q = pushout(edge, edge)
    target = d2
    u = identity_sset_map(d2)
    # both legs map identically: the mediating map collapses the two copies
    mediating = {}
    for c in q.cell_names:
        base = c[2:]
        mediating[c] = nondeg(base, q.dim_of(c))
    w = SSetMap(q, target, mediating)
    assert w.compose(q.leg_x).assign == u.assign
    assert w.compose(q.leg_b).assign == u.assign
    # uniqueness: a mediating map is determined on every cell by the legs
    for c in q.cell_names:
        assert c.startswith(("x:", "b:"))


# ---------------------------------------------------------------------------
# opposites
# ---------------------------------------------------------------------------

def test_opposite_is_involutive_bit_exact():
    for x in (delta(3), product(delta(1), delta(2)), quotient_simplex(3)):
        oo = opposite(opposite(x))
        assert oo.cell_names == x.cell_names
        assert all(oo.faces_of(c) == x.faces_of(c) for c in x.cell_names)


def test_opposite_of_simplex_reverses_horns():
    assert isomorphic(opposite(horn(2, 0)), horn(2, 2))
    assert isomorphic(opposite(delta(3)), delta(3))


# ---------------------------------------------------------------------------
# normal forms and identities
# ---------------------------------------------------------------------------

def test_normal_form_is_stable():
    d2 = delta(2)
    for x in d2.simplices(3):
        again = d2.apply(x, MonotoneMap(3, 3, (0, 1, 2, 3)))
        assert again == x


def test_degeneracy_detection():
    d1 = delta(1)
    e = nondeg("01", 1)
    s0 = d1.degenerate(e, 0)
    assert s0.is_degenerate and d1.face(s0, 0) == e


def test_simplicial_identities_on_random_complexes():
    rng = random.Random(7)
    for _ in range(25):
        scaled = random_scaled_complex(rng)
        assert not validate_complex(scaled.space)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_random_complex_products_stay_valid(seed):
    rng = random.Random(seed)
    a = random_scaled_complex(rng, 4)
    b = random_scaled_complex(rng, 4)
    p = product(a.space, b.space)
    assert not validate_complex(p)
    assert isomorphic(opposite(opposite(p)), p)


def test_subcomplex_requires_closure():
    d2 = delta(2)
    with pytest.raises(ValueError):
        subcomplex(d2, {"012"})


def test_collapse_edge_positions():
    c = collapse_edge(2, 1)
    assert sorted(c.cells_of_dim(0)) == ["0", "pt"]
    assert not validate_complex(c)
