import pytest

from graycal.anodyne import verify_certificate
from graycal.filtrations import (
    _case_c_sigmas,
    case_B_pushouts,
    case_a_sigma_order,
    certify_lemma1,
    certify_lemma2,
    filtration_case_A,
    filtration_case_A_transposed,
    filtration_case_C,
    opposite_certificate,
)
from graycal.gray import gray
from graycal.scaled import ScaledSet, scale_flat
from graycal.simplicial import delta, product


def test_lemma1_adds_exactly_one_triangle():
    cert = certify_lemma1()
    assert verify_certificate(cert).ok
    diff = cert.ambient.thin - cert.start_thin
    assert len(diff) == 1
    t = next(iter(diff))
    space = cert.ambient.space
    cx, cy = space.components_of_cell(t)
    # projects to the identity on the triangle factor
    assert not cx.is_degenerate and cx.base == "012"
    # and degenerates along 01 on the edge factor
    assert cy.is_degenerate and space.right.multiface(cy, (0, 1)).is_degenerate


def test_lemma1_start_is_the_minimal_variant():
    cert = certify_lemma1()
    left = ScaledSet(delta(2), frozenset({"012"}))
    right = scale_flat(delta(1))
    assert cert.start_thin == gray(left, right, "minus", space=cert.ambient.space).thin
    assert cert.ambient.thin == gray(left, right, "gray", space=cert.ambient.space).thin


@pytest.mark.parametrize("i", [0, 2])
def test_lemma2_adds_the_diagonal(i):
    cert = certify_lemma2(i)
    assert verify_certificate(cert).ok
    diff = cert.ambient.thin - cert.start_thin
    assert len(diff) == 1
    t = next(iter(diff))
    cx, cy = cert.ambient.space.components_of_cell(t)
    assert not cx.is_degenerate and not cy.is_degenerate


def test_lemma2_rejects_other_indices():
    with pytest.raises(ValueError):
        certify_lemma2(1)


def test_case_a_literal_sequence():
    order = case_a_sigma_order(2, 1, 1)
    assert order == [
        ((0, 0), (1, 0), (2, 1)),
        ((0, 0), (1, 0), (2, 0), (2, 1)),
        ((0, 0), (1, 0), (1, 1), (2, 1)),
        ((0, 0), (0, 1), (1, 1), (2, 1)),
    ]


def test_case_a_small_replays_and_ends_with_derived_step():
    cert = filtration_case_A(2, 1, 1)
    assert verify_certificate(cert).ok
    kinds = [s.gen.kind for s in cert.steps]
    assert kinds[-1] == "derived-3-simplex"
    assert kinds[:-1] == ["inner-horn"] * 4
    # the last missing thin triangle has vertices (0,0),(2,0),(2,1)
    before_last = cert.start_thin | {
        s.attach.image_of_cell(t).base
        for s in cert.steps[:-1] for t in s.gen.target().thin
        if not s.attach.image_of_cell(t).is_degenerate
    }
    missing = cert.ambient.thin - before_last
    assert len(missing) == 1
    cx, cy = cert.ambient.space.components_of_cell(next(iter(missing)))
    assert cx.eta.values == (0, 1, 1) and cx.base == "02"
    assert cy.eta.values == (0, 0, 1)


def test_case_a_coverage():
    # the union of the start stage and the attached cells is everything
    for m, n, i in ((2, 2, 1), (3, 1, 1), (3, 2, 2)):
        cert = filtration_case_A(m, n, i)
        covered = set(cert.start_cells)
        for step in cert.steps:
            for name in step.attach.source.cell_names:
                img = step.attach.image_of_cell(name)
                if not img.is_degenerate:
                    covered.add(img.base)
        assert covered == set(cert.ambient.space.cell_names)


def test_case_a_step_order_soundness():
    # each horn's missing face is genuinely new at its step
    cert = filtration_case_A(3, 2, 1)
    stage = set(cert.start_cells)
    for step in cert.steps:
        gen = step.gen
        fresh = [c for c in gen.target().space.cell_names
                 if not gen.source().space.has_cell(c)]
        for c in fresh:
            assert step.attach.image_of_cell(c).base not in stage
        for c in gen.source().space.cell_names:
            assert step.attach.image_of_cell(c).base in stage
        for c in fresh:
            stage.add(step.attach.image_of_cell(c).base)


def test_case_a_rejects_bad_parameters():
    with pytest.raises(ValueError):
        filtration_case_A(1, 1, 1)
    with pytest.raises(ValueError):
        filtration_case_A(3, 1, 0)
    with pytest.raises(ValueError):
        filtration_case_A(3, 1, 3)


def test_case_c_crossing_edges_degenerate_in_both_factors():
    for m, n in ((3, 1), (3, 2)):
        cert = filtration_case_C(m, n)
        assert verify_certificate(cert).ok
        space = cert.ambient.space
        for sigma in _case_c_sigmas(m, n):
            cx_vals = sigma.xs[sigma.p:sigma.p + 2]
            cy_vals = sigma.ys[sigma.p:sigma.p + 2]
            assert cx_vals == (0, 1) and cy_vals[0] == cy_vals[1]


def test_case_c_zero_horns_carry_the_long_triangle():
    cert = filtration_case_C(3, 1)
    quotient_steps = [s for s in cert.steps if s.gen.kind == "quotient-horn"]
    assert quotient_steps
    for s in quotient_steps:
        (k,) = s.gen.params
        assert f"01{k}" in s.gen.target().thin


def test_case_c_rejects_small_m():
    with pytest.raises(ValueError):
        filtration_case_C(2, 1)


def test_case_b_report():
    rep = case_B_pushouts()
    assert rep.ok
    assert verify_certificate(rep.edge_first).ok
    assert verify_certificate(rep.simplex_first).ok
    assert len(rep.edge_first.ambient.thin - rep.edge_first.start_thin) == 2
    assert len(rep.simplex_first.ambient.thin - rep.simplex_first.start_thin) == 2


def test_opposite_certificate_replays():
    cert = filtration_case_A(3, 1, 1)
    assert verify_certificate(opposite_certificate(cert)).ok


@pytest.mark.parametrize("m,n,i", [(2, 1, 1), (3, 1, 2), (3, 2, 1)])
def test_transposed_case_a(m, n, i):
    cert, note = filtration_case_A_transposed(m, n, i)
    assert verify_certificate(cert).ok
    assert "opposite-duality" in note
    # the ambient is the mirrored product
    space = cert.ambient.space
    assert space.left.dimension == n and space.right.dimension == m
