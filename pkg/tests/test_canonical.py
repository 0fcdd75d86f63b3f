import random

from graycal.canonical import canonical_serialization, digest, isomorphic
from graycal.corpus import random_scaled_complex
from graycal.simplicial import (
    boundary_delta,
    delta,
    disjoint_union,
    point,
    product,
    relabel,
)


def test_digest_is_stable_under_random_renaming():
    rng = random.Random(3)
    for _ in range(10):
        scaled = random_scaled_complex(rng)
        space = scaled.space
        names = list(space.cell_names)
        permuted = list(names)
        rng.shuffle(permuted)
        mapping = {old: f"r_{new}" for old, new in zip(names, permuted)}
        renamed = relabel(space, mapping)
        thin_renamed = frozenset(mapping[t] for t in scaled.thin)
        assert digest(space, scaled.thin) == digest(renamed, thin_renamed)


def test_distinct_scalings_have_distinct_digests():
    d2 = delta(2)
    assert digest(d2, frozenset()) != digest(d2, frozenset({"012"}))


def test_isomorphism_detection():
    assert isomorphic(product(delta(1), point()), delta(1))
    assert not isomorphic(delta(2), boundary_delta(2))
    assert isomorphic(boundary_delta(1), disjoint_union(point(), point()))


def test_symmetric_complexes_canonicalize():
    # two disjoint edges: every vertex looks alike; the branch search settles it
    two = disjoint_union(delta(1), delta(1))
    other = disjoint_union(delta(1), delta(1))
    assert canonical_serialization(two) == canonical_serialization(other)
    assert isomorphic(two, relabel(two, {c: f"z{k}" for k, c in enumerate(two.cell_names)}))


def test_serialization_mentions_thinness():
    d2 = delta(2)
    text = canonical_serialization(d2, frozenset({"012"}))
    assert "thin" in text
