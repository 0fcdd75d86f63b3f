import itertools

import pytest

from graycal.maps import (
    SSetMap,
    count_maps,
    delta_collapse,
    delta_inclusion,
    enumerate_maps,
    identity_sset_map,
    map_from_top,
    poset_simplex,
)
from graycal.simplicial import boundary_delta, delta, horn, nondeg, point, product


def monotone_vertex_maps(n, m):
    """Oracle: maps Delta^n -> Delta^m are the weakly increasing vertex maps."""
    return [v for v in itertools.product(range(m + 1), repeat=n + 1)
            if all(v[i] <= v[i + 1] for i in range(n))]


def test_maps_from_the_point_are_vertices():
    for target in (delta(2), boundary_delta(3), horn(2, 1)):
        assert count_maps(point(), target) == len(target.cells_of_dim(0))


def test_maps_between_edges():
    assert count_maps(delta(1), delta(1)) == len(monotone_vertex_maps(1, 1)) == 3


def test_maps_triangle_to_edge():
    assert count_maps(delta(2), delta(1)) == len(monotone_vertex_maps(2, 1)) == 4


def test_maps_edge_to_triangle():
    assert count_maps(delta(1), delta(2)) == len(monotone_vertex_maps(1, 2)) == 6


def test_enumerated_maps_are_valid_and_complete():
    found = list(enumerate_maps(delta(1), delta(2)))
    assert len(set(m.as_key() for m in found)) == len(found)
    for m in found:
        assert not m.violations()
    # completeness against the vertex-map oracle
    vertex_images = {tuple(m.image_of_cell(str(v)).base for v in range(2)) for m in found}
    assert vertex_images == {(str(a), str(b)) for a, b in monotone_vertex_maps(1, 2)}


def test_enumerate_maps_respects_fixed():
    fixed = {"0": nondeg("0", 0), "1": nondeg("2", 0)}
    found = list(enumerate_maps(delta(1), delta(2), fixed=fixed))
    assert len(found) == 1
    assert found[0].image_of_cell("01") == nondeg("02", 1)


def test_scaled_enumeration_filters_thin():
    d2 = delta(2)
    flat_thin = frozenset()
    sharp_thin = frozenset({"012"})
    all_maps = list(enumerate_maps(d2, d2))
    scaled = list(enumerate_maps(d2, d2, thin_source=sharp_thin, thin_target=flat_thin))
    # the identity is excluded: it sends the thin top cell to a non-thin one
    assert len(scaled) < len(all_maps)
    assert all(m.image_of_cell("012").is_degenerate for m in scaled)


def test_compose_and_identity():
    d1, d2 = delta(1), delta(2)
    f = SSetMap(d1, d2, {"0": nondeg("0", 0), "1": nondeg("1", 0), "01": nondeg("01", 1)})
    assert f.compose(identity_sset_map(d1)).assign == f.assign
    assert identity_sset_map(d2).compose(f).assign == f.assign


def test_mono_detection():
    d1, d2 = delta(1), delta(2)
    f = SSetMap(d1, d2, {"0": nondeg("0", 0), "1": nondeg("1", 0), "01": nondeg("01", 1)})
    assert f.is_mono()
    g = SSetMap(d1, d2, {"0": nondeg("0", 0), "1": nondeg("0", 0),
                         "01": d2.degenerate(nondeg("0", 0), 0)})
    assert not g.is_mono()


def test_invalid_map_rejected():
    d1, d2 = delta(1), delta(2)
    with pytest.raises(ValueError):
        SSetMap(d1, d2, {"0": nondeg("0", 0), "1": nondeg("2", 0), "01": nondeg("01", 1)})


def test_map_from_top():
    d2, d3 = delta(2), delta(3)
    m = map_from_top(d2, d3, nondeg("013", 2))
    assert not m.violations()
    assert m.image_of_cell("01") == nondeg("01", 1)
    assert m.image_of_cell("12") == nondeg("13", 1)


def test_delta_inclusion_and_collapse():
    inc = delta_inclusion(1, 2)
    assert inc.image_of_cell("01") == nondeg("02", 1)
    col = delta_collapse(0, 1)
    assert col.image_of_cell("012").is_degenerate
    assert not inc.violations() and not col.violations()


def test_poset_simplex_normalizes():
    d2 = delta(2)
    x = poset_simplex(d2, (0, 0, 2))
    assert x.base == "02" and x.is_degenerate
