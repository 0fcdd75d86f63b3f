import pytest

from graycal.invertibility import (
    INVERTIBLE,
    NOT_DECIDED,
    InvertibilityWitness,
    check_invertible,
    replay_witness,
)
from graycal.nerves import duskin_nerve
from graycal.scaled import scale_flat, scale_sharp
from graycal.simplicial import Simplex, codegeneracy, delta, nondeg
from graycal.twocat import iso_pair_category, mixed_invertibility_category


def test_degenerate_edge_is_trivially_invertible():
    d1 = scale_flat(delta(1))
    verdict = check_invertible(d1, Simplex(codegeneracy(0, 0), "0"))
    assert verdict.status == INVERTIBLE
    assert replay_witness(d1, verdict.edge, verdict.witness)


def test_flat_edge_is_not_decided():
    d1 = scale_flat(delta(1))
    assert check_invertible(d1, nondeg("01", 1)).status == NOT_DECIDED


def test_iso_pair_nerve_edges_invert_at_depth_two():
    nerve = duskin_nerve(iso_pair_category(), 2).scaled
    edges = nerve.space.cells_of_dim(1)
    assert len(edges) == 2
    for e in edges:
        deep = check_invertible(nerve, nondeg(e, 1), depth=2)
        assert deep.status == INVERTIBLE
        assert len(deep.witness.inverse) == 1
        assert replay_witness(nerve, deep.edge, deep.witness)
        shallow = check_invertible(nerve, nondeg(e, 1), depth=1)
        assert shallow.status == NOT_DECIDED


def test_monotone_in_depth():
    nerve = duskin_nerve(iso_pair_category(), 2).scaled
    e = nerve.space.cells_of_dim(1)[0]
    for depth in (2, 3, 4, 5):
        assert check_invertible(nerve, nondeg(e, 1), depth=depth).status == INVERTIBLE


def test_mixed_category_distinguishes_edges():
    nerve = duskin_nerve(mixed_invertibility_category(), 2).scaled
    verdicts = {e: check_invertible(nerve, nondeg(e, 1), depth=4).status
                for e in nerve.space.cells_of_dim(1)}
    assert INVERTIBLE in verdicts.values()
    assert NOT_DECIDED in verdicts.values()


def test_only_thin_triangles_give_relations():
    # with the sharp scaling the 2-simplex composes its legs; flat does not
    sharp = scale_sharp(delta(2))
    v = check_invertible(sharp, nondeg("01", 1))
    assert v.status == NOT_DECIDED  # composable but nothing inverts in a poset


def test_tampered_witness_is_rejected():
    nerve = duskin_nerve(iso_pair_category(), 2).scaled
    e = nerve.space.cells_of_dim(1)[0]
    verdict = check_invertible(nerve, nondeg(e, 1), depth=2)
    w = verdict.witness
    assert replay_witness(nerve, verdict.edge, w)
    wrong_inverse = InvertibilityWitness((e,), w.left_chain, w.right_chain)
    assert not replay_witness(nerve, verdict.edge, wrong_inverse)
    truncated = InvertibilityWitness(w.inverse, w.left_chain[:-1], w.right_chain)
    assert not replay_witness(nerve, verdict.edge, truncated)


def test_rejects_non_edges():
    with pytest.raises(ValueError):
        check_invertible(scale_flat(delta(2)), nondeg("012", 2))
