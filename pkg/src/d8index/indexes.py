"""Fadell-Husseini index ideals of the spaces acted on by D8 and (Z2)^k.

The ideal of a G-space is the kernel of H*(BG;R) -> H*_G(X;R); this
catalog stores each one that enters the two-hyperplane mass partition
argument as a finite list of homogeneous generators, together with the
pi/Pi polynomial families that present the product-of-spheres indexes.

pi_d lives in F2[y,w] (deg y=1, w=2) and Pi_d in the bound ring
Z[Y,M,W]/(2Y,2M,4W,M^2-WY) (deg Y=2, W=4); both satisfy the recurrence
p_0 = 0, p_1 = y, p_{d+1} = y*p_d + w*p_{d-1}, equivalently the
generating function y/(1-y-w), and expand to
sum_i binom(d-1-i, i) w^i y^{d-2i} with mod-2 binomial coefficients.
"""

from dataclasses import dataclass, field

from .homs import lift_bound_to_full
from .poly import slice_intersection_is_zero
from .rings import (D8_F2, D8_Z_BOUND, D8_Z_FULL, H1_F2, RingPresentation,
                    YW_F2, Z2xZ2_F2, Z2xZ2_Z, f2_polynomial_ring)

__all__ = [
    "IndexIdeal",
    "lucas_binom_mod2",
    "pi_poly",
    "pi_poly_binomial",
    "capital_pi_poly",
    "capital_pi_poly_binomial",
    "rho_poly",
    "pi_in_d8",
    "index_sphere_r4j_f2",
    "index_sphere_r4j_z",
    "index_product_spheres_f2",
    "index_product_spheres_z",
    "index_rep_sphere_z2k",
    "index_torus_z2k",
    "index_join",
    "index_product_groups",
    "index_h1_z_product",
    "join_scheme_obstruction",
]


@dataclass(frozen=True)
class IndexIdeal:
    """A ring reference, homogeneous generators, and which index stage
    the ideal is: the full kernel and/or the partial kernel seen by
    spectral-sequence page k (metadata only, nothing is re-derived)."""

    ring: RingPresentation
    gens: tuple
    full: bool
    partial_k: int | None
    source: str = field(default="", compare=False)

    def __str__(self):
        return "; ".join(str(g) for g in self.gens)

    def is_principal(self):
        return len(self.gens) == 1


def lucas_binom_mod2(n, k):
    """binom(n, k) mod 2 by the digit-wise rule: odd iff the binary
    digits of k are dominated by those of n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be >= 0")
    return 1 if (n & k) == k else 0


_PI_CACHE = {}


def _pi_family(ring, y_sym, w_sym, d):
    """The recurrence family p_0=0, p_1=y, p_{d+1} = y*p_d + w*p_{d-1}."""
    key = (ring, y_sym, w_sym)
    chain = _PI_CACHE.setdefault(key, [ring.zero(), ring.gen(y_sym)])
    y, w = ring.gen(y_sym), ring.gen(w_sym)
    while len(chain) <= d:
        chain.append(y * chain[-1] + w * chain[-2])
    return chain[d]


def _pi_binomial(ring, y_sym, w_sym, d):
    y, w = ring.gen(y_sym), ring.gen(w_sym)
    total = ring.zero()
    for i in range(d // 2 + 1):
        n = d - 1 - i
        if n < 0:
            continue
        if lucas_binom_mod2(n, i):
            total = total + w ** i * y ** (d - 2 * i)
    return total


def pi_poly(d):
    """pi_d in F2[y,w], computed by the recurrence."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return _pi_family(YW_F2, "y", "w", d)


def pi_poly_binomial(d):
    """pi_d by direct binomial expansion; cross-check for pi_poly."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return _pi_binomial(YW_F2, "y", "w", d)


def capital_pi_poly(d):
    """Pi_d in the bound ring, homogeneous of degree 2d."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return _pi_family(D8_Z_BOUND, "Y", "W", d)


def capital_pi_poly_binomial(d):
    if d < 0:
        raise ValueError("d must be >= 0")
    return _pi_binomial(D8_Z_BOUND, "Y", "W", d)


def pi_in_d8(d):
    """pi_d embedded in the full mod-2 cohomology ring of D8."""
    return _pi_family(D8_F2, "y", "w", d)


def rho_poly(d):
    """rho_d = a^d + (a+b)^d in F2[a,b], the restriction of pi_d."""
    a, b = H1_F2.gen("a"), H1_F2.gen("b")
    return a ** d + (a + b) ** d


# ------------------------------------------------------------- D8 indexes

def index_sphere_r4j_f2(j):
    """Mod-2 index of the sphere of j copies of the 3-dimensional
    representation R4: the principal ideal <y^j w^j>."""
    if j < 1:
        raise ValueError("j must be >= 1")
    gen = D8_F2.gen("y") ** j * D8_F2.gen("w") ** j
    return IndexIdeal(D8_F2, (gen,), full=True, partial_k=3 * j + 1,
                      source=f"S(R4^{j}), D8, F2")


def index_sphere_r4j_z(j):
    """Integral index of S(R4^j), in the bound ring: <Y^(j/2) W^(j/2)>
    for even j, <Y^((j+1)/2) W^((j-1)/2) M, Y^((j+1)/2) W^((j+1)/2)>
    for odd j."""
    if j < 1:
        raise ValueError("j must be >= 1")
    Y, M, W = (D8_Z_BOUND.gen(s) for s in ("Y", "M", "W"))
    if j % 2 == 0:
        gens = (Y ** (j // 2) * W ** (j // 2),)
    else:
        gens = (Y ** ((j + 1) // 2) * W ** ((j - 1) // 2) * M,
                Y ** ((j + 1) // 2) * W ** ((j + 1) // 2))
    return IndexIdeal(D8_Z_BOUND, gens, full=True, partial_k=3 * j + 1,
                      source=f"S(R4^{j}), D8, Z")


def index_product_spheres_f2(d, kind="partial"):
    """Mod-2 index of S^d x S^d: partial stage d+2 is <pi_{d+1}, pi_{d+2}>,
    the full kernel adds w^{d+1}."""
    if d < 1:
        raise ValueError("d must be >= 1")
    gens = [pi_in_d8(d + 1), pi_in_d8(d + 2)]
    if kind == "partial":
        return IndexIdeal(D8_F2, tuple(gens), full=False, partial_k=d + 2,
                          source=f"S^{d} x S^{d}, D8, F2")
    if kind == "full":
        gens.append(D8_F2.gen("w") ** (d + 1))
        return IndexIdeal(D8_F2, tuple(gens), full=True, partial_k=None,
                          source=f"S^{d} x S^{d}, D8, F2")
    raise ValueError(f"kind must be 'partial' or 'full', not {kind!r}")


def index_product_spheres_z(d):
    """Integral index of S^d x S^d at stage d+2, in the bound ring."""
    if d < 1:
        raise ValueError("d must be >= 1")
    M = D8_Z_BOUND.gen("M")
    if d % 2 == 0:
        gens = (capital_pi_poly((d + 2) // 2), capital_pi_poly((d + 4) // 2),
                M * capital_pi_poly(d // 2))
    else:
        gens = (capital_pi_poly((d + 1) // 2), capital_pi_poly((d + 3) // 2))
    return IndexIdeal(D8_Z_BOUND, gens, full=False, partial_k=d + 2,
                      source=f"S^{d} x S^{d}, D8, Z")


# ---------------------------------------------------------- (Z2)^k indexes

def _tk_ring(k):
    return Z2xZ2_F2 if k == 2 else f2_polynomial_ring(f"t{i+1}" for i in range(k))


def index_rep_sphere_z2k(sign_vectors, k):
    """Mod-2 (Z2)^k index of the sphere of a sum of one-dimensional
    representations, each given by its +-1 vector: the principal ideal
    generated by the product of the linear forms sum_i abar_i t_i, where
    abar_i = 1 exactly for the -1 entries."""
    if not sign_vectors:
        raise ValueError("at least one sign vector required")
    ring = _tk_ring(k)
    ts = [ring.gen(f"t{i+1}") for i in range(k)]
    product = ring.one()
    for vec in sign_vectors:
        if len(vec) != k:
            raise ValueError(f"sign vector {vec} has length != {k}")
        form = ring.zero()
        for entry, t in zip(vec, ts):
            if entry == -1:
                form = form + t
            elif entry != 1:
                raise ValueError(f"sign entries must be +-1, got {entry}")
        product = product * form  # an all-+1 vector contributes the factor 0
    return IndexIdeal(ring, (product,), full=True, partial_k=None,
                      source=f"S(V), (Z2)^{k}, F2")


def index_torus_z2k(ns):
    """Index of S^{n_1} x ... x S^{n_k} under the product antipodal
    actions: <t_1^{n_1+1}, ..., t_k^{n_k+1}>."""
    ns = list(ns)
    if not ns or any(n < 0 for n in ns):
        raise ValueError("sphere dimensions must be >= 0")
    ring = _tk_ring(len(ns))
    gens = tuple(ring.gen(f"t{i+1}") ** (n + 1) for i, n in enumerate(ns))
    return IndexIdeal(ring, gens, full=True, partial_k=None,
                      source=f"torus {tuple(ns)}, (Z2)^{len(ns)}, F2")


def index_h1_z_product(n):
    """Integral (Z2)^2 index of S^n x S^n:
    <tau1^((n+1)/2), tau2^((n+1)/2)> for odd n, and
    <tau1^((n+2)/2), tau2^((n+2)/2), tau1^(n/2) mu, tau2^(n/2) mu> for
    even n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t1, t2, mu = (Z2xZ2_Z.gen(s) for s in ("tau1", "tau2", "mu"))
    if n % 2 == 1:
        gens = (t1 ** ((n + 1) // 2), t2 ** ((n + 1) // 2))
    else:
        gens = (t1 ** ((n + 2) // 2), t2 ** ((n + 2) // 2),
                t1 ** (n // 2) * mu, t2 ** (n // 2) * mu)
    return IndexIdeal(Z2xZ2_Z, gens, full=True, partial_k=None,
                      source=f"S^{n} x S^{n}, (Z2)^2, Z")


# ----------------------------------------------------------- constructions

def index_join(f, g):
    """Index of the sphere of a direct sum, from principal indexes of
    the summand spheres: <f> join <g> = <f*g>."""
    if not (f.is_principal() and g.is_principal()):
        raise ValueError("join requires principal index ideals")
    if f.ring != g.ring:
        raise ValueError("join requires indexes in the same ring")
    return IndexIdeal(f.ring, (f.gens[0] * g.gens[0],), full=True,
                      partial_k=None, source=f"join({f.source}, {g.source})")


def index_product_groups(f, g):
    """Index of a product of group actions over a field: the ideal in
    the tensor polynomial ring generated by both generator lists.  Valid
    only for relation-free F2 rings; with torsion coefficients the
    product formula fails."""
    for ideal in (f, g):
        if ideal.ring.coeff != "F2" or ideal.ring.relations:
            raise ValueError("product formula needs relation-free field "
                             "coefficients")
    syms_f, syms_g = f.ring.gens, g.ring.gens
    if set(syms_f) & set(syms_g):
        raise ValueError("generator name clash between the factor rings")
    ring = f2_polynomial_ring(syms_f + syms_g, f.ring.degrees + g.ring.degrees)

    def transfer(e, offset, width):
        terms = {}
        for mono, c in e.terms.items():
            full = [0] * width
            full[offset:offset + len(mono)] = list(mono)
            terms[tuple(full)] = c
        return ring.element(terms)

    width = len(ring.gens)
    gens = tuple(transfer(e, 0, width) for e in f.gens)
    gens += tuple(transfer(e, len(syms_f), width) for e in g.gens)
    return IndexIdeal(ring, gens, full=f.full and g.full, partial_k=None,
                      source=f"product({f.source}, {g.source})")


def join_scheme_obstruction(j, coeff="F2", degree_cap=None):
    """True iff the join-scheme index obstruction vanishes.

    With F2 coefficients: x * y^j w^j = 0 in H*(D8;F2).  With Z
    coefficients: the ideal <X> meets the sphere index (lifted to the
    full ring) only in 0 in every degree up to the cap."""
    if j < 1:
        raise ValueError("j must be >= 1")
    if coeff == "F2":
        x, y, w = (D8_F2.gen(s) for s in ("x", "y", "w"))
        return not (x * y ** j * w ** j)
    if coeff == "Z":
        if degree_cap is None:
            degree_cap = 3 * j + 6
        x_gen = [D8_Z_FULL.gen("X")]
        sphere = [lift_bound_to_full(g) for g in index_sphere_r4j_z(j).gens]
        return all(slice_intersection_is_zero(x_gen, sphere, n)
                   for n in range(1, degree_cap + 1))
    raise ValueError(f"unknown coefficient system {coeff!r}")
