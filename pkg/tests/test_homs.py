import random

import pytest

from d8index.homs import (F2_DIAGRAM, FULL_TO_BOUND, MOD2_REDUCTION, RingHom,
                          Z_DIAGRAM, check_reduction_cube, hom_kernel_slice,
                          homs_equal_up_to_degree, lift_bound_to_full,
                          restriction)
from d8index.rings import get_ring
from d8index.verify import random_homogeneous

D8 = get_ring("D8_F2")
FULL = get_ring("D8_Z_FULL")
BOUND = get_ring("D8_Z_BOUND")
H1 = get_ring("H1_F2")


def test_restriction_images():
    res = restriction("D8", "H1", "F2")
    assert res(D8.gen("w")) == H1.parse("a^2+a*b")
    assert res(D8.gen("x")) == H1.zero()
    res_k3 = restriction("H2", "K3", "F2")
    assert res_k3(get_ring("H2_F2").gen("u")) == get_ring("K3_F2").parse("t3^2")
    assert restriction("D8", "H2", "Z")(FULL.gen("Y")) == get_ring("H2_Z").parse("2*U")


def test_reduction_images():
    c = MOD2_REDUCTION["D8"]
    assert c(FULL.gen("M")) == D8.parse("w*x+w*y")
    assert c(FULL.gen("X")) == D8.parse("x^2")
    # the images respect M^2 = W(X+Y): (wx+wy)^2 = w^2(x^2+y^2)
    assert D8.parse("w*x+w*y") ** 2 == D8.parse("w^2") * D8.parse("x^2+y^2")


def test_composed_restrictions_through_canonical_subgroup():
    # w restricts to zero on every order-2 subgroup except K3
    for node in ("K1", "K2", "K4", "K5"):
        assert restriction("D8", node, "F2")(D8.gen("w")) == \
            F2_DIAGRAM.ring_of(node).zero()
    assert restriction("D8", "K3", "F2")(D8.gen("w")) == \
        get_ring("K3_F2").parse("t3^2")


def test_assumption_images_for_order_two_subgroups():
    res1 = restriction("H1", "K1", "F2")
    res2 = restriction("H1", "K2", "F2")
    assert res1(H1.gen("a")) == get_ring("K1_F2").gen("t1")
    assert res1(H1.gen("b")) == get_ring("K1_F2").gen("t1")
    assert res2(H1.gen("a")) == get_ring("K2_F2").zero()
    assert res2(H1.gen("b")) == get_ring("K2_F2").gen("t2")
    h3 = get_ring("H3_F2")
    res4 = restriction("H3", "K4", "F2")
    res5 = restriction("H3", "K5", "F2")
    assert res4(h3.parse("c")) == res4(h3.parse("d")) == get_ring("K4_F2").gen("t4")
    assert res5(h3.parse("c")) == get_ring("K5_F2").zero()


def test_invalid_homs_rejected():
    with pytest.raises(ValueError):
        RingHom(D8, H1, {"x": "a", "y": "b", "w": "a*b"})  # breaks x*y = 0
    with pytest.raises(ValueError):
        RingHom(D8, H1, {"x": 0, "y": "b", "w": "a"})  # wrong degree
    with pytest.raises(ValueError):
        RingHom(FULL, get_ring("H2_Z"),
                {"X": "U", "Y": "2*U", "M": 0, "W": "U^2"})  # 2X != 0


def test_hom_multiplicative_on_random_elements():
    rng = random.Random(7)
    homs = list(F2_DIAGRAM.edges.values()) + list(Z_DIAGRAM.edges.values()) \
        + list(MOD2_REDUCTION.values()) + [FULL_TO_BOUND]
    for hom in homs:
        for _ in range(25):
            p = random_homogeneous(hom.domain, rng.randint(1, 8), rng)
            q = random_homogeneous(hom.domain, rng.randint(1, 8), rng)
            assert hom(p * q) == hom(p) * hom(q)
            assert hom(p + q) == hom(p) + hom(q)


def test_homs_equal_up_to_degree():
    via_h1 = F2_DIAGRAM.edges[("H1", "K3")].compose(F2_DIAGRAM.edges[("D8", "H1")])
    via_h2 = F2_DIAGRAM.edges[("H2", "K3")].compose(F2_DIAGRAM.edges[("D8", "H2")])
    assert homs_equal_up_to_degree(via_h1, via_h2, 8)
    ident = RingHom.identity(D8)
    assert homs_equal_up_to_degree(ident, ident, 8)
    with pytest.raises(ValueError):
        homs_equal_up_to_degree(ident, via_h1, 4)


def test_diagrams_commute():
    for diagram in (F2_DIAGRAM, Z_DIAGRAM):
        results = diagram.check_commutativity(12)
        assert results, "expected at least one multi-route comparison"
        assert all(ok for _, ok in results), results


def test_reduction_cube_commutes():
    results = check_reduction_cube(8)
    assert len(results) == 7
    assert all(ok for _, ok in results), results


def test_kernel_slices():
    assert hom_kernel_slice(restriction("D8", "H1", "F2"), 1) == [D8.gen("x")]
    assert hom_kernel_slice(restriction("D8", "H3", "F2"), 1) == [D8.gen("y")]
    assert hom_kernel_slice(restriction("D8", "H1", "Z"), 2) == [FULL.gen("X")]
    # X + Y is the degree-2 kernel of the restriction to the cyclic subgroup
    assert hom_kernel_slice(restriction("D8", "H2", "Z"), 2) == \
        [FULL.gen("X") + FULL.gen("Y")]
    with pytest.raises(ValueError):
        hom_kernel_slice(restriction("D8", "H1", "F2"), 0)


def test_kernel_slice_elements_die():
    for hom in (restriction("D8", "H1", "F2"), restriction("D8", "H1", "Z"),
                MOD2_REDUCTION["H2"]):
        for degree in range(1, 7):
            for e in hom_kernel_slice(hom, degree):
                assert hom(e) == hom.codomain.zero()
                assert e.degree() == degree


def test_full_to_bound_and_lift():
    assert FULL_TO_BOUND(FULL.gen("X")) == BOUND.zero()
    assert FULL_TO_BOUND(FULL.gen("W")) == BOUND.gen("W")
    e = BOUND.parse("Y^2*M+2*W^2")
    lifted = lift_bound_to_full(e)
    assert lifted == FULL.parse("Y^2*M+2*W^2")
    assert FULL_TO_BOUND(lifted) == e


def test_restriction_lookup_errors():
    with pytest.raises(KeyError):
        restriction("D8", "K1", "Z")
    with pytest.raises(KeyError):
        restriction("H1", "H2", "F2")
    with pytest.raises(KeyError):
        restriction("D8", "H1", "Q")
