"""Homogeneous ideal membership and inclusion, decided degree by degree.

Every ideal handled here is homogeneous and every graded piece of every
ring is a finite abelian group, so membership is exact linear algebra on
the degree slice: Gaussian elimination over F2, and a Z/4 Howell-form
solve for the Z-coefficient rings, where each order-2 basis monomial
contributes an extra relation column 2*e_i.

`contains_by_enumeration` is the independent brute-force oracle: it
enumerates all coefficient assignments to the slice elements and never
touches the elimination code paths.
"""

from .linalg import gf2_in_span, gf2_nullspace, howell_solve, z4_kernel
from .rings import GradedSlice, RingMismatchError

__all__ = [
    "GradedSlice",
    "graded_ideal_slice",
    "ideal_contains",
    "ideal_subset",
    "contains_by_enumeration",
    "slice_intersection_is_zero",
    "element_bitmask",
    "element_coeffs",
]


def _check_homogeneous(elems):
    for e in elems:
        if not e.is_homogeneous():
            raise ValueError(f"inhomogeneous element {e}")


def _common_ring(elems):
    rings = {e.ring for e in elems}
    if len(rings) > 1:
        raise RingMismatchError("elements from different rings")
    return rings.pop() if rings else None


def graded_ideal_slice(gens, degree):
    """Spanning set {m * g} of the degree piece of the ideal <gens>:
    g runs over the generators and m over the normal-form monomials with
    deg(m) + deg(g) = degree.  Zero products are dropped."""
    _check_homogeneous(gens)
    ring = _common_ring(gens)
    out = []
    for g in gens:
        if not g:
            continue
        mdeg = degree - g.degree()
        if mdeg < 0:
            continue
        for mono in ring.monomials(mdeg):
            prod = ring.monomial_element(mono) * g
            if prod:
                out.append(prod)
    return out


def element_bitmask(e, slice_):
    """Coordinates of an F2 element over the slice basis, as a bitmask."""
    index = {m: i for i, m in enumerate(slice_.basis)}
    v = 0
    for mono in e.terms:
        v |= 1 << index[mono]
    return v


def element_coeffs(e, slice_):
    """Coordinates of a Z-ring element over the slice basis."""
    index = {m: i for i, m in enumerate(slice_.basis)}
    v = [0] * len(slice_.basis)
    for mono, c in e.terms.items():
        v[index[mono]] = c
    return v


def _relation_columns(slice_):
    """Columns 2*e_i identifying 2*(order-2 monomial) with zero."""
    cols = []
    n = len(slice_.basis)
    for i, order in enumerate(slice_.orders):
        if order == 2:
            col = [0] * n
            col[i] = 2
            cols.append(col)
    return cols


def _membership_degree(gens, f):
    """Shared prechecks; returns the slice degree or None when trivial."""
    _check_homogeneous(list(gens) + [f])
    _common_ring(list(gens) + [f])
    if not f:
        return None  # 0 lies in every ideal
    degree = f.degree()
    if degree == 0:
        raise ValueError("membership is defined for positive-degree elements")
    return degree


def ideal_contains(gens, f):
    """True iff the homogeneous element f lies in the ideal <gens>."""
    degree = _membership_degree(gens, f)
    if degree is None:
        return True
    ring = f.ring
    slice_ = ring.graded_slice(degree)
    span = graded_ideal_slice(gens, degree)
    if ring.coeff == "F2":
        return gf2_in_span([element_bitmask(e, slice_) for e in span],
                           element_bitmask(f, slice_))
    cols = [element_coeffs(e, slice_) for e in span] + _relation_columns(slice_)
    if not cols:
        return False
    return howell_solve(cols, element_coeffs(f, slice_))


def ideal_subset(a_gens, b_gens):
    """True iff <a_gens> is contained in <b_gens>."""
    return all(ideal_contains(b_gens, g) for g in a_gens)


def contains_by_enumeration(gens, f):
    """Brute-force membership oracle.

    Builds the set of all achievable sums over every coefficient
    assignment to the slice elements (all of F2^n, respectively all of
    (Z/4)^n pushed into the quotient group) and looks the target up.
    """
    degree = _membership_degree(gens, f)
    if degree is None:
        return True
    ring = f.ring
    slice_ = ring.graded_slice(degree)
    span = graded_ideal_slice(gens, degree)
    if ring.coeff == "F2":
        sums = {0}
        for v in (element_bitmask(e, slice_) for e in span):
            sums |= {s ^ v for s in sums}
        return element_bitmask(f, slice_) in sums

    orders = slice_.orders

    def canon(vec):
        return tuple(c % o for c, o in zip(vec, orders))

    sums = {canon([0] * len(slice_.basis))}
    for e in span:
        v = element_coeffs(e, slice_)
        new = set(sums)
        for s in sums:
            for c in (1, 2, 3):
                new.add(canon([a + c * b for a, b in zip(s, v)]))
        sums = new
    return canon(element_coeffs(f, slice_)) in sums


def slice_intersection_is_zero(a_gens, b_gens, degree):
    """True iff the degree pieces of <a_gens> and <b_gens> meet only in 0.

    Solves A*u = B*v on the slice (modulo the order-2 relations in the
    Z case) and checks every solution gives the zero element.
    """
    _check_homogeneous(list(a_gens) + list(b_gens))
    ring = _common_ring(list(a_gens) + list(b_gens))
    slice_ = ring.graded_slice(degree)
    span_a = graded_ideal_slice(a_gens, degree)
    span_b = graded_ideal_slice(b_gens, degree)
    if not span_a or not span_b:
        return True

    if ring.coeff == "F2":
        cols_a = [element_bitmask(e, slice_) for e in span_a]
        cols_b = [element_bitmask(e, slice_) for e in span_b]
        for mask in gf2_nullspace(cols_a + cols_b):
            x = 0
            for i, col in enumerate(cols_a):
                if mask >> i & 1:
                    x ^= col
            if x:
                return False
        return True

    rel = _relation_columns(slice_)
    cols_a = [element_coeffs(e, slice_) for e in span_a]
    cols_b = [element_coeffs(e, slice_) for e in span_b]
    neg_b = [[(-x) % 4 for x in col] for col in cols_b]
    combined = cols_a + rel + neg_b
    na = len(cols_a) + len(rel)
    for ker in z4_kernel(combined):
        x = [0] * len(slice_.basis)
        for i in range(na):
            if ker[i]:
                col = combined[i]
                x = [(a + ker[i] * b) % 4 for a, b in zip(x, col)]
        if any(c % o for c, o in zip(x, slice_.orders)):
            return False
    return True
