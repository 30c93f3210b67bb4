"""Runnable verification suites behind the `verify` CLI command.

Each suite returns a list of Check records; a suite passes when every
check does.  The suites re-run, at machine speed, the identities the
library is built on: the inclusion lemma sweeps, the restriction
diagram commutativity, the index identities, and the agreement of the
linear-algebra membership decision with brute-force enumeration.
"""

import math
import random
from dataclasses import dataclass

from . import bounds, indexes
from .homs import (F2_DIAGRAM, MOD2_REDUCTION, RingHom, Z_DIAGRAM,
                   check_reduction_cube, lift_bound_to_full, restriction)
from .poly import (contains_by_enumeration, graded_ideal_slice, ideal_contains,
                   ideal_subset)
from .rings import CATALOG, D8_F2, H1_F2, YW_F2, Z2xZ2_F2

__all__ = ["Check", "SUITE_NAMES", "run_suite", "random_homogeneous"]

SUITE_NAMES = ("lemmas", "diagram", "indexes", "oracle")


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _check(name, ok, detail=""):
    return Check(name, bool(ok), detail)


# ------------------------------------------------------------------ lemmas

def suite_lemmas(max_degree=None):
    del max_degree  # the sweep ranges below are fixed
    checks = []

    ok = all(indexes.lucas_binom_mod2(n, k) == math.comb(n, k) % 2
             for n in range(64) for k in range(n + 1))
    checks.append(_check("binomial parity rule, n < 64", ok))

    ok = all(indexes.capital_pi_poly(2 ** q)
             == indexes.capital_pi_poly_binomial(2 ** q)
             == CATALOG["D8_Z_BOUND"].gen("Y") ** (2 ** q)
             for q in range(1, 7))
    checks.append(_check("Pi at powers of two collapses to Y^(2^q), q <= 6", ok))

    for q in range(1, 5):
        checks.append(_check(f"A_(2^{q}) inside B_(2^{q + 1}-1)",
                             bounds.verify_inclusion_power_case(q)))

    ok = all(bounds.verify_inclusion_step(j, d)
             for j in range(1, 13) for d in range(1, 25))
    checks.append(_check("inclusion step A_j->A_(j+1), j <= 12, d <= 24", ok))

    ok = all(bounds.verify_membership_transfer(d, j)
             for d in range(1, 21) for j in range(1, 11))
    checks.append(_check("membership transfer in F2[a,c], d <= 20, j <= 10", ok))

    return checks


# ----------------------------------------------------------------- diagram

def suite_diagram(max_degree=12):
    checks = []
    for ring in CATALOG.values():
        checks.append(_check(f"rewrite confluence in {ring.name}",
                             ring.check_confluence(12)))
    checks.append(_check("rewrite confluence in YW_F2", YW_F2.check_confluence(12)))

    rng = random.Random(97)
    ok = True
    for ring in CATALOG.values():
        for _ in range(1000):
            e = random_homogeneous(ring, rng.randint(1, 10), rng, strict=False)
            nf = ring.normal_form(dict(e.terms))
            if nf != e.terms:
                ok = False
    checks.append(_check("normal form is idempotent, 1000 samples per ring", ok))

    for diagram in (F2_DIAGRAM, Z_DIAGRAM):
        results = diagram.check_commutativity(max_degree)
        ok = all(flag for _, flag in results)
        checks.append(_check(
            f"{diagram.coeff} diagram: {len(results)} route comparisons "
            f"commute up to degree {max_degree}", ok))

    cube = check_reduction_cube(min(max_degree, 8))
    checks.append(_check("mod-2 reduction cube commutes", all(f for _, f in cube)))

    fixed = {("K1", "a"): "t1", ("K1", "b"): "t1",
             ("K2", "a"): "0", ("K2", "b"): "t2"}
    ok = all(restriction("H1", node, "F2")(H1_F2.gen(sym))
             == F2_DIAGRAM.ring_of(node).parse(img)
             for (node, sym), img in fixed.items())
    checks.append(_check("order-2 subgroup images fixed as declared", ok))

    rng = random.Random(11)
    ok = True
    all_homs = (list(F2_DIAGRAM.edges.values()) + list(Z_DIAGRAM.edges.values())
                + list(MOD2_REDUCTION.values()))
    for hom in all_homs:
        for _ in range(20):
            p = random_homogeneous(hom.domain, rng.randint(1, 8), rng)
            q = random_homogeneous(hom.domain, rng.randint(1, 8), rng)
            if hom(p * q) != hom(p) * hom(q):
                ok = False
    checks.append(_check("homomorphisms are multiplicative on samples", ok))

    return checks


# ----------------------------------------------------------------- indexes

def suite_indexes(max_degree=64):
    checks = []
    cap = max_degree

    ok = all(indexes.pi_poly(d) == indexes.pi_poly_binomial(d)
             for d in range(cap + 1))
    ok = ok and all(indexes.capital_pi_poly(d)
                    == indexes.capital_pi_poly_binomial(d)
                    for d in range(cap + 1))
    checks.append(_check(f"recurrence matches binomial expansion, d <= {cap}", ok))

    bound = CATALOG["D8_Z_BOUND"]
    Y, W = bound.gen("Y"), bound.gen("W")
    series = bound.zero()
    power = bound.one()
    for _ in range(20):  # y*(y+w)^n starts in degree 2n+2, so n <= 19 suffices
        series = series + Y * power
        power = power * (Y + W)
    truncated = bound.element({m: c for m, c in series.terms.items()
                               if bound.monomial_degree(m) <= 40})
    total = bound.zero()
    for d in range(21):
        total = total + indexes.capital_pi_poly(d)
    checks.append(_check("generating function y/(1-y-w) to degree 40",
                         truncated == total))

    res_h1 = restriction("D8", "H1", "F2")
    ok = all(res_h1(indexes.pi_in_d8(d)) == indexes.rho_poly(d)
             for d in range(cap + 1))
    checks.append(_check(f"restriction of pi_d is rho_d, d <= {cap}", ok))

    a, b = H1_F2.gen("a"), H1_F2.gen("b")
    ok = all(indexes.rho_poly(d + 2)
             == b * indexes.rho_poly(d + 1) + a * (a + b) * indexes.rho_poly(d)
             for d in range(cap + 1))
    checks.append(_check(f"rho recurrence, d <= {cap}", ok))

    c_d8 = MOD2_REDUCTION["D8"]
    ok = all(c_d8(lift_bound_to_full(indexes.capital_pi_poly(d)))
             == indexes.pi_in_d8(2 * d) for d in range(cap + 1))
    checks.append(_check(f"mod-2 reduction of Pi_d is pi_2d, d <= {cap}", ok))

    joined = indexes.index_join(
        indexes.IndexIdeal(D8_F2, (D8_F2.gen("w"),), True, None, "S(V2), D8, F2"),
        indexes.IndexIdeal(D8_F2, (D8_F2.gen("y"),), True, None, "S(V1), D8, F2"))
    checks.append(_check("join of <w> and <y> is the sphere index <y*w>",
                         joined.gens == indexes.index_sphere_r4j_f2(1).gens))

    ok = all(indexes.join_scheme_obstruction(j, "F2") for j in range(1, 11))
    checks.append(_check("join scheme gives no mod-2 obstruction, j <= 10", ok))

    ok = all(indexes.join_scheme_obstruction(j, "Z") for j in range(1, 11))
    checks.append(_check("join scheme gives no integral obstruction, j <= 10", ok))

    ok = True
    for d in range(1, 21):
        full = indexes.index_product_spheres_f2(d, "full")
        images = [res_h1(g) for g in full.gens]
        expected = [indexes.rho_poly(d + 1), indexes.rho_poly(d + 2),
                    (a * (a + b)) ** (d + 1)]
        if images != expected:
            ok = False
    checks.append(_check("full-index restriction images, d <= 20", ok))

    ok = True
    for d in range(1, min(cap, 30) + 1):
        f2_next = indexes.index_product_spheres_f2(d + 1).gens
        f2_here = indexes.index_product_spheres_f2(d).gens
        z_next = indexes.index_product_spheres_z(d + 1).gens
        z_here = indexes.index_product_spheres_z(d).gens
        if not (ideal_subset(f2_next, f2_here) and ideal_subset(z_next, z_here)):
            ok = False
    checks.append(_check("product index chains shrink as d grows, d <= 30", ok))

    rep = indexes.index_rep_sphere_z2k([(-1, 1), (1, -1)], 2)
    t1, t2 = Z2xZ2_F2.gen("t1"), Z2xZ2_F2.gen("t2")
    rename = RingHom(Z2xZ2_F2, H1_F2, {"t1": "a", "t2": "a+b"}, "t->H1")
    ok = (rep.gens == (t1 * t2,)
          and res_h1(D8_F2.gen("w")) == a * (a + b)
          and rename(rep.gens[0]) == a * (a + b))
    checks.append(_check("sphere index of the 2-plane matches the H1 value", ok))

    return checks


# ------------------------------------------------------------------ oracle

def random_homogeneous(ring, degree, rng, max_terms=3, strict=True):
    """Random homogeneous element of the given degree (may be zero when
    the degree piece vanishes or, for strict=False, on coefficient luck)."""
    monos = ring.monomials(degree)
    if not monos:
        return ring.zero()
    count = rng.randint(1, min(max_terms, len(monos)))
    chosen = rng.sample(monos, count)
    hi = 1 if ring.coeff == "F2" else 3
    terms = {m: rng.randint(1, hi) for m in chosen}
    e = ring.element(terms)
    if strict and not e:
        terms = {chosen[0]: 1}
        e = ring.element(terms)
    return e


def _random_instance(ring, rng, max_degree, slice_cap):
    """A membership instance (gens, f) whose slice stays below the cap."""
    while True:
        degree = rng.randint(2, max_degree)
        gens = []
        for _ in range(rng.randint(1, 3)):
            gdeg = rng.randint(1, degree)
            g = random_homogeneous(ring, gdeg, rng, max_terms=2)
            if g:
                gens.append(g)
        slice_elems = graded_ideal_slice(gens, degree)
        while len(slice_elems) > slice_cap and gens:
            gens.pop()
            slice_elems = graded_ideal_slice(gens, degree)
        if rng.random() < 0.5 and slice_elems:
            f = ring.zero()
            hi = 1 if ring.coeff == "F2" else 3
            for e in rng.sample(slice_elems, rng.randint(1, len(slice_elems))):
                f = f + rng.randint(1, hi) * e
            if not f:
                f = slice_elems[0]
        else:
            f = random_homogeneous(ring, degree, rng)
        if f:
            return gens, f


def suite_oracle(count=500, seed=1789, max_degree=None):
    del max_degree
    checks = []
    rng = random.Random(seed)
    for ring in CATALOG.values():
        if ring.coeff == "F2":
            deg_cap, slice_cap = 8, 15
        else:
            deg_cap, slice_cap = 10, 8
        mismatches = 0
        for _ in range(count):
            gens, f = _random_instance(ring, rng, deg_cap, slice_cap)
            if ideal_contains(gens, f) != contains_by_enumeration(gens, f):
                mismatches += 1
        checks.append(_check(
            f"membership matches enumeration on {count} instances in {ring.name}",
            mismatches == 0, detail=f"{mismatches} mismatches"))
    return checks


_SUITES = {
    "lemmas": suite_lemmas,
    "diagram": suite_diagram,
    "indexes": suite_indexes,
    "oracle": suite_oracle,
}


def run_suite(name, max_degree=None):
    """Run one named suite, or all of them."""
    if name == "all":
        out = []
        for key in SUITE_NAMES:
            out.extend(run_suite(key, max_degree))
        return out
    try:
        suite = _SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}") from None
    if name == "oracle":
        return suite()
    if max_degree is None:
        return suite()
    return suite(max_degree=max_degree)
