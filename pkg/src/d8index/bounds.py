"""Admissibility criteria for the two-hyperplane mass partition problem.

A triple (d, j, 2) is admissible when j masses in R^d can always be
equiparted by two hyperplanes.  Each criterion here certifies
admissibility from an index computation:

* F2_D8:  y^j w^j not in <pi_{d+1}, pi_{d+2}>            in F2[y,w]
* Z_D8:   A_j not contained in B_d                        in the bound ring
* H1_F2:  a^j b^j (a+b)^j not in <a^{d+1}, (a+b)^{d+1}>   in F2[a,b]

A_j is the generator set of the integral sphere index and B_d that of
the integral product index; an equivariant map forces the product index
to contain the sphere index, so it is NON-inclusion that certifies.
The published inclusion sign is the other way around, which would
certify (d,j) = (1,1) against the ham-sandwich lower bound; the literal
reading stays available behind `literal_inclusion`.

Besides the criteria the module carries the two classical bounds on the
minimal admissible dimension (`ramos_lower`, `mvz_upper`), scan drivers,
and the mechanical verifiers of the inclusion lemmas that show the Z
criterion never improves on the upper bound.
"""

from dataclasses import dataclass

from .indexes import index_product_spheres_z, index_sphere_r4j_z, pi_poly
from .poly import ideal_contains, ideal_subset
from .rings import H1_F2, YW_F2

__all__ = [
    "CRITERIA",
    "AdmissibilityVerdict",
    "BoundReport",
    "admissible_f2",
    "admissible_z",
    "admissible_h1_f2",
    "admissible",
    "a_ideal",
    "b_ideal",
    "ramos_lower",
    "mvz_upper",
    "min_certified_d",
    "default_scan_cap",
    "bound_report",
    "verify_inclusion_power_case",
    "verify_inclusion_step",
    "verify_membership_transfer",
    "dimension_condition",
]

CRITERIA = ("F2_D8", "Z_D8", "H1_F2")


@dataclass(frozen=True)
class AdmissibilityVerdict:
    d: int
    j: int
    criterion: str
    certified: bool
    witness: str

    def to_dict(self):
        return {"d": self.d, "j": self.j, "criterion": self.criterion,
                "certified": self.certified, "witness": self.witness}


@dataclass(frozen=True)
class BoundReport:
    j: int
    ramos_lower: int
    mvz_upper: int
    f2_min_d: int | None
    z_min_d: int | None
    h1_min_d: int | None
    scan_cap: int

    def to_dict(self):
        return {"j": self.j, "ramos_lower": self.ramos_lower,
                "mvz_upper": self.mvz_upper, "f2_min_d": self.f2_min_d,
                "z_min_d": self.z_min_d, "h1_min_d": self.h1_min_d,
                "scan_cap": self.scan_cap}


def _check_positive(**kwargs):
    for name, value in kwargs.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def admissible_f2(d, j):
    """Certify (d, j, 2) from the mod-2 D8 index of S^d x S^d."""
    _check_positive(d=d, j=j)
    y, w = YW_F2.gen("y"), YW_F2.gen("w")
    target = y ** j * w ** j
    contained = ideal_contains([pi_poly(d + 1), pi_poly(d + 2)], target)
    if contained:
        witness = (f"y^{j}*w^{j} decomposes over the degree-{3 * j} slice "
                   f"of <pi_{d + 1}, pi_{d + 2}>")
    else:
        witness = (f"y^{j}*w^{j} is outside the degree-{3 * j} slice "
                   f"of <pi_{d + 1}, pi_{d + 2}>")
    return AdmissibilityVerdict(d, j, "F2_D8", not contained, witness)


def a_ideal(j):
    """Generators of the integral sphere index A_j (bound ring)."""
    _check_positive(j=j)
    return list(index_sphere_r4j_z(j).gens)


def b_ideal(d):
    """Generators of the integral product index B_d (bound ring)."""
    _check_positive(d=d)
    return list(index_product_spheres_z(d).gens)


def admissible_z(d, j, literal_inclusion=False):
    """Certify (d, j, 2) from the integral D8 indexes.

    Default reading: certified iff A_j is NOT contained in B_d.  Set
    `literal_inclusion` to certify on containment instead.
    """
    _check_positive(d=d, j=j)
    a_gens, b_gens = a_ideal(j), b_ideal(d)
    failing = None
    for g in a_gens:
        if not ideal_contains(b_gens, g):
            failing = g
            break
    if failing is None:
        witness = f"every generator of A_{j} lies in B_{d}"
    else:
        witness = (f"generator {failing} of A_{j} escapes B_{d} at degree "
                   f"{failing.degree()}")
    certified = (failing is None) if literal_inclusion else (failing is not None)
    return AdmissibilityVerdict(d, j, "Z_D8", certified, witness)


def admissible_h1_f2(d, j):
    """Certify (d, j, 2) from the (Z2)^2 subgroup index criterion."""
    _check_positive(d=d, j=j)
    a, b = H1_F2.gen("a"), H1_F2.gen("b")
    target = a ** j * b ** j * (a + b) ** j
    gens = [a ** (d + 1), (a + b) ** (d + 1)]
    contained = ideal_contains(gens, target)
    if contained:
        witness = (f"a^{j}*b^{j}*(a+b)^{j} decomposes over the degree-{3 * j} "
                   f"slice of <a^{d + 1}, (a+b)^{d + 1}>")
    else:
        witness = (f"a^{j}*b^{j}*(a+b)^{j} is outside the degree-{3 * j} "
                   f"slice of <a^{d + 1}, (a+b)^{d + 1}>")
    return AdmissibilityVerdict(d, j, "H1_F2", not contained, witness)


_CRITERION_FUNCS = {
    "F2_D8": admissible_f2,
    "Z_D8": admissible_z,
    "H1_F2": admissible_h1_f2,
}


def admissible(d, j, criterion):
    try:
        func = _CRITERION_FUNCS[criterion]
    except KeyError:
        raise KeyError(f"unknown criterion {criterion!r}") from None
    return func(d, j)


# -------------------------------------------------------------- Delta bounds

def ramos_lower(j, k):
    """Lower bound ceil((2^k - 1) j / k) for the minimal admissible d."""
    if j < 0 or k < 1:
        raise ValueError("need j >= 0 and k >= 1")
    return -(-(2 ** k - 1) * j // k)


def mvz_upper(j, k):
    """Upper bound 2^(k+q-1) + r for the minimal admissible d, where
    j = 2^q + r with 0 <= r < 2^q."""
    if j < 1 or k < 1:
        raise ValueError("need j >= 1 and k >= 1")
    q = j.bit_length() - 1
    r = j - (1 << q)
    return 2 ** (k + q - 1) + r


def default_scan_cap(j):
    return max(2 * mvz_upper(j, 2), 24)


def min_certified_d(j, criterion, d_cap=None):
    """Smallest d <= d_cap the criterion certifies, or None.

    Scans upward from d = 1; certification is upward closed in d (the
    index chains shrink as d grows), which the tests spot-check rather
    than assume.
    """
    _check_positive(j=j)
    if d_cap is None:
        d_cap = default_scan_cap(j)
    for d in range(1, d_cap + 1):
        if admissible(d, j, criterion).certified:
            return d
    return None


def bound_report(j, scan_cap=None):
    _check_positive(j=j)
    if scan_cap is None:
        scan_cap = default_scan_cap(j)
    return BoundReport(
        j=j,
        ramos_lower=ramos_lower(j, 2),
        mvz_upper=mvz_upper(j, 2),
        f2_min_d=min_certified_d(j, "F2_D8", scan_cap),
        z_min_d=min_certified_d(j, "Z_D8", scan_cap),
        h1_min_d=min_certified_d(j, "H1_F2", scan_cap),
        scan_cap=scan_cap,
    )


# ------------------------------------------------- inclusion lemma verifiers

def verify_inclusion_power_case(q):
    """Check A_{2^q} is contained in B_{2^(q+1)-1}."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return ideal_subset(a_ideal(2 ** q), b_ideal(2 ** (q + 1) - 1))


def verify_inclusion_step(j, d):
    """Check the step instance: A_j in B_d implies A_{j+1} in B_{d+1}."""
    _check_positive(j=j, d=d)
    if not ideal_subset(a_ideal(j), b_ideal(d)):
        return True
    return ideal_subset(a_ideal(j + 1), b_ideal(d + 1))


def verify_membership_transfer(d, j):
    """Check, in F2[a,c], that membership of a^j c^j (a+c)^j in
    <a^{d+1}, c^{d+1}> forces membership in
    <a^{d+1}+c^{d+1}, a^{d+2}+c^{d+2}>; this transfers the subgroup
    criterion to the symmetric one."""
    _check_positive(d=d, j=j)
    a, c = H1_F2.gen("a"), H1_F2.gen("b")  # c := a+b plays the second variable
    target = a ** j * c ** j * (a + c) ** j
    if not ideal_contains([a ** (d + 1), c ** (d + 1)], target):
        return True
    return ideal_contains([a ** (d + 1) + c ** (d + 1),
                           a ** (d + 2) + c ** (d + 2)], target)


def dimension_condition(d, j, k):
    """Necessary dimension count for the join scheme:
    d*k + k - 1 > j*(2^k - 1) + k - 2, i.e. d >= (2^k - 1) j / k."""
    _check_positive(d=d, j=j, k=k)
    return d * k + k - 1 > j * (2 ** k - 1) + k - 2
