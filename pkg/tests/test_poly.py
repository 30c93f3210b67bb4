import random

import pytest

from d8index.poly import (contains_by_enumeration, graded_ideal_slice,
                          ideal_contains, ideal_subset,
                          slice_intersection_is_zero)
from d8index.rings import RingMismatchError, YW_F2, get_ring
from d8index.verify import random_homogeneous

BOUND = get_ring("D8_Z_BOUND")
D8 = get_ring("D8_F2")


def _yw(text):
    return YW_F2.parse(text)


def test_graded_ideal_slice_examples():
    slice3 = graded_ideal_slice([_yw("y^2"), _yw("y^3+w*y")], 3)
    assert [str(e) for e in slice3] == ["y^3", "y^3+w*y"]
    # generator degrees in the bound ring are 4 and 6: nothing in degree 5
    assert graded_ideal_slice([BOUND.parse("Y^2"), BOUND.parse("Y^3+W*Y")], 5) == []
    assert graded_ideal_slice([], 7) == []


def test_graded_ideal_slice_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        graded_ideal_slice([_yw("y+w")], 3)


def test_ideal_contains_f2_examples():
    gens = [_yw("y^2"), _yw("y^3+w*y")]
    assert ideal_contains(gens, _yw("y*w"))
    assert not ideal_contains([_yw("y^3+w*y"), _yw("y^4")], _yw("y*w"))


def test_ideal_contains_bound_ring_examples():
    gens = [BOUND.parse("Y^2"), BOUND.parse("Y^3+W*Y"), BOUND.parse("M*Y")]
    assert ideal_contains(gens, BOUND.parse("Y*W"))
    assert not ideal_contains([BOUND.parse("Y^2"), BOUND.parse("Y^3+W*Y")],
                              BOUND.parse("Y*M"))


def test_ideal_contains_zero_and_degree_zero():
    gens = [_yw("y^2")]
    assert ideal_contains(gens, YW_F2.zero())
    with pytest.raises(ValueError):
        ideal_contains(gens, YW_F2.one())


def test_ideal_contains_ring_mismatch():
    with pytest.raises(RingMismatchError):
        ideal_contains([_yw("y")], D8.gen("y"))


def test_torsion_membership():
    """2W is a Z/4 multiple of W but 2 itself only reaches even coefficients."""
    full = get_ring("D8_Z_FULL")
    W = full.gen("W")
    assert ideal_contains([2 * W], 2 * W)
    assert not ideal_contains([2 * W], W)
    assert ideal_contains([W], 2 * W)


def test_ideal_subset_examples():
    a1 = [BOUND.parse("Y*M"), BOUND.parse("Y*W")]
    assert ideal_subset(a1, [BOUND.parse("Y"), BOUND.parse("Y^2")])
    assert not ideal_subset(a1, [BOUND.parse("Y^2"), BOUND.parse("Y^3+W*Y")])
    assert ideal_subset([], a1)


def test_ideal_subset_reflexive_transitive():
    g1 = [_yw("y^2"), _yw("y^3+w*y")]
    g2 = [_yw("y^2"), _yw("w*y")]  # same ideal, different generators
    assert ideal_subset(g1, g1)
    assert ideal_subset(g1, g2) and ideal_subset(g2, g1)
    a, b, c = [_yw("y^4")], [_yw("y^2")], [_yw("y")]
    assert ideal_subset(a, b) and ideal_subset(b, c) and ideal_subset(a, c)


def test_membership_monotone_under_more_generators():
    rng = random.Random(5)
    for _ in range(60):
        ring = rng.choice([YW_F2, BOUND])
        degree = rng.randint(2, 8)
        gens = [g for g in (random_homogeneous(ring, rng.randint(1, degree), rng)
                            for _ in range(2)) if g]
        if not gens:
            continue
        f = random_homogeneous(ring, degree, rng)
        if not f:
            continue
        extra = random_homogeneous(ring, rng.randint(1, degree), rng)
        if ideal_contains(gens, f):
            assert ideal_contains(gens + [extra], f)


@pytest.mark.parametrize("ring_name,degree_cap", [("D8_F2", 8), ("H1_F2", 8),
                                                  ("D8_Z_BOUND", 10),
                                                  ("D8_Z_FULL", 10),
                                                  ("H2_Z", 10)])
def test_oracle_agreement_sample(ring_name, degree_cap):
    """Quick seeded slice of the full oracle-equivalence acceptance run."""
    ring = get_ring(ring_name)
    rng = random.Random(42)
    for _ in range(60):
        degree = rng.randint(2, degree_cap)
        gens = [g for g in (random_homogeneous(ring, rng.randint(1, degree), rng)
                            for _ in range(rng.randint(1, 2))) if g]
        f = random_homogeneous(ring, degree, rng)
        if not f:
            continue
        if len(graded_ideal_slice(gens, degree)) > 8:
            continue
        assert ideal_contains(gens, f) == contains_by_enumeration(gens, f)


def test_slice_intersection():
    x = D8.gen("x")
    y, w = D8.gen("y"), D8.gen("w")
    for n in range(1, 10):
        assert slice_intersection_is_zero([x], [y * w], n)
    # <y^2> and <y^3> share y^5 in degree 5
    assert not slice_intersection_is_zero([_yw("y^2")], [_yw("y^3")], 5)
    assert slice_intersection_is_zero([_yw("y^2")], [_yw("w")], 3)
