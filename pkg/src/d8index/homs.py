"""Ring homomorphisms, the subgroup restriction diagrams of D8, and the
mod-2 coefficient reduction maps.

A homomorphism is a generator-image table, validated at construction:
images must preserve degree, kill the domain's additive torsion, and
send every rewrite relation to zero in the codomain.  Restrictions from
D8 to the order-2 subgroups are defined by composing through a fixed
intermediate subgroup (K1, K2 via H1; K3 via H2; K4, K5 via H3); the
diagram commutativity checks confirm the choice of route is immaterial.

The generator images encode the subgroup lattice data of D8: which
generators die on restriction, the K4/K5 images fixed up to the
symmetric swap, and the reduction images X -> x^2, Y -> y^2,
M -> w(x+y), W -> w^2.
"""

from .linalg import gf2_nullspace, z4_kernel
from .poly import _relation_columns, element_bitmask, element_coeffs
from .rings import (D8_F2, D8_Z_BOUND, D8_Z_FULL, H1_F2, H1_Z, H2_F2,
                    H2_Z, H3_F2, H3_Z, K1_F2, K2_F2, K3_F2, K3_Z, K4_F2,
                    K5_F2, RingMismatchError, Z2xZ2_F2, Z2xZ2_Z)

__all__ = [
    "RingHom",
    "homs_equal_up_to_degree",
    "hom_kernel_slice",
    "RestrictionDiagram",
    "F2_DIAGRAM",
    "Z_DIAGRAM",
    "MOD2_REDUCTION",
    "FULL_TO_BOUND",
    "lift_bound_to_full",
    "restriction",
    "check_reduction_cube",
]


class RingHom:
    """Degree-preserving ring homomorphism given on generators."""

    def __init__(self, domain, codomain, images, name=""):
        self.domain = domain
        self.codomain = codomain
        self.name = name or f"{domain.name}->{codomain.name}"
        imgs = []
        for i, sym in enumerate(domain.gens):
            if sym not in images:
                raise ValueError(f"{self.name}: no image for generator {sym}")
            img = images[sym]
            if isinstance(img, str):
                img = codomain.parse(img)
            elif isinstance(img, int):
                if img != 0:
                    raise ValueError(f"{self.name}: integer image must be 0")
                img = codomain.zero()
            if img.ring != codomain:
                raise RingMismatchError(f"{self.name}: image of {sym} lives in "
                                        f"{img.ring.name}")
            if img and img.degree() != domain.degrees[i]:
                raise ValueError(f"{self.name}: image of {sym} has degree "
                                 f"{img.degree()}, expected {domain.degrees[i]}")
            imgs.append(img)
        self.images = tuple(imgs)
        self._pow_cache = {}
        self._validate()

    def _validate(self):
        dom = self.domain
        for i, img in enumerate(self.images):
            if dom.coeff == "Z" and dom.orders[i] * img != self.codomain.zero():
                raise ValueError(f"{self.name}: image of {dom.gens[i]} does not "
                                 f"kill the order-{dom.orders[i]} torsion")
        for pat, rep in dom.relations:
            lhs = self._apply_monomial(pat)
            rhs = self.codomain.zero()
            for mono, coeff in rep:
                rhs = rhs + coeff * self._apply_monomial(mono)
            if lhs != rhs:
                raise ValueError(f"{self.name}: relation on pattern {pat} is "
                                 f"not respected ({lhs} != {rhs})")

    def _gen_power(self, i, e):
        key = (i, e)
        cached = self._pow_cache.get(key)
        if cached is None:
            cached = self.images[i] ** e
            self._pow_cache[key] = cached
        return cached

    def _apply_monomial(self, mono):
        result = self.codomain.one()
        for i, e in enumerate(mono):
            if e:
                result = result * self._gen_power(i, e)
        return result

    def __call__(self, element):
        if element.ring != self.domain:
            raise RingMismatchError(f"{self.name} applied to an element of "
                                    f"{element.ring.name}")
        out = self.codomain.zero()
        for mono, coeff in element.terms.items():
            out = out + coeff * self._apply_monomial(mono)
        return out

    def compose(self, inner):
        """self o inner (inner applied first)."""
        if inner.codomain != self.domain:
            raise RingMismatchError(f"cannot compose {self.name} after {inner.name}")
        images = {sym: self(img) for sym, img in zip(inner.domain.gens, inner.images)}
        return RingHom(inner.domain, self.codomain, images,
                       name=f"{self.name} o {inner.name}")

    @staticmethod
    def identity(ring):
        return RingHom(ring, ring, {s: ring.gen(s) for s in ring.gens},
                       name=f"id_{ring.name}")

    def __repr__(self):
        return f"RingHom({self.name})"


def homs_equal_up_to_degree(h1, h2, n):
    """True iff h1 and h2 agree on every normal-form monomial of degree
    <= n.  Agreement on generators would suffice for genuine ring maps;
    checking monomials guards against multiplicativity bugs."""
    if h1.domain != h2.domain or h1.codomain != h2.codomain:
        raise ValueError("homomorphisms with different signatures")
    for degree in range(1, n + 1):
        for mono in h1.domain.monomials(degree):
            if h1._apply_monomial(mono) != h2._apply_monomial(mono):
                return False
    return True


def hom_kernel_slice(hom, degree):
    """Generators of the kernel of `hom` on the degree slice."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    dom, cod = hom.domain, hom.codomain
    dslice = dom.graded_slice(degree)
    cslice = cod.graded_slice(degree)
    images = [hom._apply_monomial(m) for m in dslice.basis]

    if dom.coeff == "F2" and cod.coeff == "F2":
        cols = [element_bitmask(e, cslice) for e in images]
        kernel_masks = gf2_nullspace(cols)
        out = []
        for mask in kernel_masks:
            terms = {m: 1 for i, m in enumerate(dslice.basis) if mask >> i & 1}
            e = dom.element(terms)
            if e:
                out.append(e)
        return out

    cols = [element_coeffs(e, cslice) for e in images] + _relation_columns(cslice)
    out = []
    seen = set()
    for ker in z4_kernel(cols):
        terms = {m: ker[i] for i, m in enumerate(dslice.basis) if ker[i]}
        e = dom.element(terms)
        if e and e not in seen:
            seen.add(e)
            out.append(e)
    return out


class RestrictionDiagram:
    """Subgroup restriction diagram: one cohomology ring per node and one
    homomorphism per covering relation of the subgroup lattice."""

    def __init__(self, coeff, rings, edges, via):
        self.coeff = coeff
        self.rings = dict(rings)
        self.nodes = tuple(rings)
        self.edges = dict(edges)
        self.via = dict(via)  # canonical intermediate for two-step routes

    def ring_of(self, node):
        return self.rings[node]

    def res(self, src, dst):
        """Restriction along src >= dst (canonical route when needed)."""
        if src == dst:
            return RingHom.identity(self.rings[src])
        if (src, dst) in self.edges:
            return self.edges[(src, dst)]
        mid = self.via.get(dst)
        if mid is not None and (src, mid) in self.edges and (mid, dst) in self.edges:
            return self.edges[(mid, dst)].compose(self.edges[(src, mid)])
        raise KeyError(f"no restriction {src} -> {dst} in the {self.coeff} diagram")

    def routes(self, src, dst):
        """Every one- or two-step route from src to dst."""
        found = []
        if (src, dst) in self.edges:
            found.append((f"{src}->{dst}", self.edges[(src, dst)]))
        for (a, mid) in self.edges:
            if a == src and (mid, dst) in self.edges:
                found.append((f"{src}->{mid}->{dst}",
                              self.edges[(mid, dst)].compose(self.edges[(src, mid)])))
        return found

    def check_commutativity(self, max_degree=12):
        """Compare all routes between every node pair; returns a list of
        (label, ok) for every pair admitting at least two routes."""
        results = []
        for src in self.nodes:
            for dst in self.nodes:
                if src == dst:
                    continue
                routes = self.routes(src, dst)
                if len(routes) < 2:
                    continue
                base_label, base = routes[0]
                for label, hom in routes[1:]:
                    ok = homs_equal_up_to_degree(base, hom, max_degree)
                    results.append((f"{self.coeff}: {base_label} == {label}", ok))
        return results


def _hom(dom, cod, images, name):
    return RingHom(dom, cod, images, name=name)


# --------------------------------------------------------------- F2 diagram

_F2_EDGES = {
    ("D8", "H1"): _hom(D8_F2, H1_F2,
                       {"x": 0, "y": "b", "w": "a^2+a*b"}, "res_H1_D8"),
    ("D8", "H2"): _hom(D8_F2, H2_F2,
                       {"x": "e", "y": "e", "w": "u"}, "res_H2_D8"),
    ("D8", "H3"): _hom(D8_F2, H3_F2,
                       {"x": "d", "y": 0, "w": "c^2+c*d"}, "res_H3_D8"),
    ("H1", "K1"): _hom(H1_F2, K1_F2, {"a": "t1", "b": "t1"}, "res_K1_H1"),
    ("H1", "K2"): _hom(H1_F2, K2_F2, {"a": 0, "b": "t2"}, "res_K2_H1"),
    ("H1", "K3"): _hom(H1_F2, K3_F2, {"a": "t3", "b": 0}, "res_K3_H1"),
    ("H2", "K3"): _hom(H2_F2, K3_F2, {"e": 0, "u": "t3^2"}, "res_K3_H2"),
    ("H3", "K3"): _hom(H3_F2, K3_F2, {"c3": "t3", "d3": 0}, "res_K3_H3"),
    ("H3", "K4"): _hom(H3_F2, K4_F2, {"c3": "t4", "d3": "t4"}, "res_K4_H3"),
    ("H3", "K5"): _hom(H3_F2, K5_F2, {"c3": 0, "d3": "t5"}, "res_K5_H3"),
}

F2_DIAGRAM = RestrictionDiagram(
    "F2",
    {"D8": D8_F2, "H1": H1_F2, "H2": H2_F2, "H3": H3_F2,
     "K1": K1_F2, "K2": K2_F2, "K3": K3_F2, "K4": K4_F2, "K5": K5_F2},
    _F2_EDGES,
    {"K1": "H1", "K2": "H1", "K3": "H2", "K4": "H3", "K5": "H3"},
)

# ---------------------------------------------------------------- Z diagram

_Z_EDGES = {
    ("D8", "H1"): _hom(D8_Z_FULL, H1_Z,
                       {"X": 0, "Y": "beta", "M": "mu",
                        "W": "alpha^2+alpha*beta"}, "res_H1_D8_Z"),
    ("D8", "H2"): _hom(D8_Z_FULL, H2_Z,
                       {"X": "2*U", "Y": "2*U", "M": 0, "W": "U^2"},
                       "res_H2_D8_Z"),
    ("D8", "H3"): _hom(D8_Z_FULL, H3_Z,
                       {"X": "delta", "Y": 0, "M": "eta",
                        "W": "gamma^2+gamma*delta"}, "res_H3_D8_Z"),
    ("H1", "K3"): _hom(H1_Z, K3_Z,
                       {"alpha": "theta3", "beta": 0, "mu": 0}, "res_K3_H1_Z"),
    ("H2", "K3"): _hom(H2_Z, K3_Z, {"U": "theta3"}, "res_K3_H2_Z"),
    ("H3", "K3"): _hom(H3_Z, K3_Z,
                       {"gamma": "theta3", "delta": 0, "eta": 0}, "res_K3_H3_Z"),
}

Z_DIAGRAM = RestrictionDiagram(
    "Z",
    {"D8": D8_Z_FULL, "H1": H1_Z, "H2": H2_Z, "H3": H3_Z, "K3": K3_Z},
    _Z_EDGES,
    {"K3": "H2"},
)

# --------------------------------------------------- coefficient reduction

MOD2_REDUCTION = {
    "D8": _hom(D8_Z_FULL, D8_F2,
               {"X": "x^2", "Y": "y^2", "M": "w*x+w*y", "W": "w^2"}, "c_D8"),
    "H1": _hom(H1_Z, H1_F2,
               {"alpha": "a^2", "beta": "b^2", "mu": "a^2*b+a*b^2"}, "c_H1"),
    "H2": _hom(H2_Z, H2_F2, {"U": "u"}, "c_H2"),
    "H3": _hom(H3_Z, H3_F2,
               {"gamma": "c^2", "delta": "d^2", "eta": "c^2*d+c*d^2"}, "c_H3"),
    "K3": _hom(K3_Z, K3_F2, {"theta3": "t3^2"}, "c_K3"),
    "Z2xZ2": _hom(Z2xZ2_Z, Z2xZ2_F2,
                  {"tau1": "t1^2", "tau2": "t2^2", "mu": "t1^2*t2+t1*t2^2"},
                  "c_Z2xZ2"),
}

# quotient identifying the Z-coefficient D8 ring with the bound ring
FULL_TO_BOUND = _hom(D8_Z_FULL, D8_Z_BOUND,
                     {"X": 0, "Y": "Y", "M": "M", "W": "W"}, "quot_bound")


def lift_bound_to_full(element):
    """Section of the bound-ring quotient: Y -> Y, M -> M, W -> W.

    A substitution on normal forms, not a ring map (it does not respect
    M^2 = W*Y); exact here because bound-ring normal monomials map to
    X-free full-ring normal monomials of the same additive order.
    """
    if element.ring != D8_Z_BOUND:
        raise RingMismatchError("expected an element of the bound ring")
    terms = {(0,) + mono: c for mono, c in element.terms.items()}
    return D8_Z_FULL.element(terms)


def restriction(src, dst, coeff):
    """Catalog lookup: restriction from subgroup `src` to `dst` for the
    given coefficient system ('F2' or 'Z')."""
    if coeff == "F2":
        return F2_DIAGRAM.res(src, dst)
    if coeff == "Z":
        return Z_DIAGRAM.res(src, dst)
    raise KeyError(f"unknown coefficient system {coeff!r}")


def check_reduction_cube(max_degree=8):
    """Mod-2 reduction commutes with restriction: for each subgroup pair
    in the Z diagram, res_F2 o c == c o res_Z up to the degree."""
    results = []
    pairs = [(s, d) for (s, d) in Z_DIAGRAM.edges] + [("D8", "K3")]
    for src, dst in pairs:
        lhs = F2_DIAGRAM.res(src, dst).compose(MOD2_REDUCTION[src])
        rhs = MOD2_REDUCTION[dst].compose(Z_DIAGRAM.res(src, dst))
        ok = homs_equal_up_to_degree(lhs, rhs, max_degree)
        results.append((f"cube {src}->{dst}", ok))
    return results
