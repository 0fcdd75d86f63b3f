import pytest

from graycal.anodyne import (
    AnodyneCertificate,
    CertStep,
    GeneratorInstance,
    check_extension,
    derived_3,
    generators_up_to,
    inner_horn,
    is_bicategory_up_to,
    quotient_horn_gen,
    saturation_4,
    scaled_maps_from,
    verify_certificate,
)
from graycal.maps import SSetMap, map_from_top
from graycal.scaled import ScaledMap, ScaledSet, saturate, scale_flat, scale_sharp
from graycal.simplicial import delta, horn, nondeg


FIVE = frozenset({"024", "123", "013", "134", "012"})


def identity_attach(src: ScaledSet, target: ScaledSet) -> ScaledMap:
    m = SSetMap(src.space, target.space,
                {c: nondeg(c, src.space.dim_of(c)) for c in src.space.cell_names})
    return ScaledMap(m, src, target)


def test_generator_parameter_validation():
    with pytest.raises(ValueError):
        inner_horn(2, 0)
    with pytest.raises(ValueError):
        inner_horn(2, 2)
    with pytest.raises(ValueError):
        quotient_horn_gen(2)
    with pytest.raises(ValueError):
        derived_3(0)
    with pytest.raises(ValueError):
        GeneratorInstance("mystery")


def test_generators_up_to_dimension():
    kinds = [str(g) for g in generators_up_to(3)]
    assert "inner-horn(2,1)" in kinds and "inner-horn(3,2)" in kinds
    assert "quotient-horn(3)" in kinds
    assert all("saturation" not in k for k in kinds)
    assert any("saturation" in str(g) for g in generators_up_to(4))


def test_horn_extension_into_sharp_triangle():
    gen = inner_horn(2, 1)
    target = scale_sharp(delta(2))
    f = identity_attach(gen.source(), target)
    assert check_extension(gen, target, f).found


def test_horn_extension_fails_into_the_horn():
    gen = inner_horn(2, 1)
    target = scale_flat(horn(2, 1))
    f = identity_attach(gen.source(), target)
    res = check_extension(gen, target, f)
    assert not res.found and res.extension is None


def test_saturation_extension_after_saturate():
    gen = saturation_4()
    before = ScaledSet(delta(4), FIVE)
    f = identity_attach(gen.source(), before)
    assert not check_extension(gen, before, f).found
    after = saturate(before)
    f2 = identity_attach(gen.source(), after)
    assert check_extension(gen, after, f2).found


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_sharp_simplices_are_bicategories(n):
    rep = is_bicategory_up_to(scale_sharp(delta(n)), 4)
    assert rep.ok


def test_flat_horn_fails_with_witness():
    rep = is_bicategory_up_to(scale_flat(horn(2, 1)), 2)
    assert not rep.ok
    gen, attach = rep.failures[0]
    assert str(gen) == "inner-horn(2,1)"
    assert attach.map.source.same_presentation(gen.source().space)


def test_empty_certificate_accepts():
    ambient = scale_sharp(delta(2))
    cert = AnodyneCertificate(ambient, frozenset(ambient.space.cell_names),
                              ambient.thin, ())
    assert verify_certificate(cert).ok


def test_incomplete_certificate_rejected():
    ambient = scale_sharp(delta(2))
    cert = AnodyneCertificate(ambient, frozenset(ambient.space.cell_names),
                              frozenset(), ())
    outcome = verify_certificate(cert)
    assert not outcome.ok and "scaling" in outcome.reason


def test_certificate_step_thinness_is_checked():
    # a derived-3 step whose required source triangles are not yet thin
    d3 = delta(3)
    ambient = scale_sharp(d3)
    gen = derived_3(1)
    attach = map_from_top(d3, d3, nondeg("0123", 3))
    cert = AnodyneCertificate(ambient, frozenset(d3.cell_names),
                              frozenset({"012"}), (CertStep(gen, attach),))
    outcome = verify_certificate(cert)
    assert not outcome.ok and outcome.failed_step == 0
    assert "non-thin" in outcome.reason


def test_certificate_freshness_is_checked():
    # attaching a horn filler that already lives in the stage
    d2 = delta(2)
    ambient = scale_sharp(d2)
    gen = inner_horn(2, 1)
    attach = map_from_top(d2, d2, nondeg("012", 2))
    cert = AnodyneCertificate(ambient, frozenset(d2.cell_names),
                              ambient.thin, (CertStep(gen, attach),))
    outcome = verify_certificate(cert)
    assert not outcome.ok and "existing stage" in outcome.reason


def test_scaled_maps_enumeration_counts():
    # horn sources into the sharp triangle: every simplicial map qualifies
    gen = inner_horn(2, 1)
    maps = list(scaled_maps_from(gen.source(), scale_sharp(delta(2))))
    assert len(maps) > 0
    assert all(not m.map.violations() for m in maps)
