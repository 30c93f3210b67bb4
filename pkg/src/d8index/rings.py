"""Graded commutative ring presentations with torsion, and their elements.

A ring is presented by generators with degrees, an additive order class
per generator (2, or 4 for the degree-4 class), and monomial rewrite
rules such as x*y -> 0 or M^2 -> W*X + W*Y.  Elements are stored in
normal form: a dict from admissible monomials (exponent tuples) to
coefficients already reduced modulo the monomial's additive order.

Coefficient conventions.  In an F2 ring every coefficient lives mod 2.
In a Z-coefficient ring a positive-degree normal monomial has additive
order 4 when every generator in its support has order class 4, else
order 2; the degree-0 monomial is not reduced at all (H^0 = Z).

The module ends with the catalog of the cohomology rings of D8 and its
subgroups, for both coefficient systems, keyed by stable identifiers.
"""

import re

__all__ = [
    "Monomial",
    "RingMismatchError",
    "ElementParseError",
    "GradedSlice",
    "RingPresentation",
    "RingElement",
    "CATALOG",
    "get_ring",
    "f2_polynomial_ring",
    "YW_F2",
]

Monomial = tuple


class RingMismatchError(ValueError):
    """Operands belong to different ring presentations."""


class ElementParseError(ValueError):
    """Text does not match the element grammar of the target ring."""


class GradedSlice:
    """Basis of the degree-n piece of a ring: normal-form monomials in
    descending lexicographic order, with their additive orders."""

    __slots__ = ("degree", "basis", "orders")

    def __init__(self, degree, basis, orders):
        self.degree = degree
        self.basis = tuple(basis)
        self.orders = tuple(orders)

    def __len__(self):
        return len(self.basis)


_FACTOR_RE = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(?:\^(\d+))?$")


class RingPresentation:
    """A graded commutative ring given by generators and rewrite rules.

    relations: iterable of (pattern, replacement) pairs.  `pattern` is a
    monomial exponent tuple; any monomial divisible by it rewrites to
    (monomial/pattern) * replacement, where `replacement` maps monomials
    to integer coefficients.  The systems used here are confluent and
    terminating (checked by `check_confluence`).
    """

    def __init__(self, name, coeff, gens, degrees, orders=None,
                 relations=(), display=None):
        if coeff not in ("F2", "Z"):
            raise ValueError(f"unknown coefficient system {coeff!r}")
        self.name = name
        self.coeff = coeff
        self.gens = tuple(gens)
        self.degrees = tuple(degrees)
        self.orders = tuple(orders) if orders is not None else (2,) * len(self.gens)
        if not (len(self.gens) == len(self.degrees) == len(self.orders)):
            raise ValueError("generator/degree/order length mismatch")
        self.relations = tuple(
            (tuple(pat), tuple(sorted((tuple(m), int(c)) for m, c in dict(rep).items())))
            for pat, rep in relations
        )
        self.display = tuple(display) if display is not None else self.gens
        self._symbols = {}
        for i, s in enumerate(self.gens):
            self._symbols[s] = i
        for i, s in enumerate(self.display):
            self._symbols.setdefault(s, i)
        # factors print in descending generator degree, ties by position
        self._print_order = sorted(range(len(self.gens)),
                                   key=lambda i: (-self.degrees[i], i))
        self._mono_cache = {}
        # equality is structural: the name is only a catalog label
        self._key = (self.coeff, self.gens, self.degrees, self.orders,
                     self.relations)

    def __eq__(self, other):
        return isinstance(other, RingPresentation) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"RingPresentation({self.name})"

    # -- monomial helpers ------------------------------------------------

    def monomial_degree(self, mono):
        return sum(e * d for e, d in zip(mono, self.degrees))

    def monomial_order(self, mono):
        """Additive order of a normal monomial: 2, 4, or 0 for 'free'."""
        if self.coeff == "F2":
            return 2
        support = [self.orders[i] for i, e in enumerate(mono) if e]
        if not support:
            return 0
        return 4 if min(support) == 4 else 2

    def _reduce_coeff(self, mono, c):
        order = self.monomial_order(mono)
        return c % order if order else c

    def _matching_rule(self, mono):
        for pat, rep in self.relations:
            if all(m >= p for m, p in zip(mono, pat)):
                return pat, rep
        return None

    def is_normal_monomial(self, mono):
        return self._matching_rule(mono) is None

    def normal_form(self, terms):
        """Rewrite a raw {monomial: int} dict to normal form.

        Rules are applied until none matches (each rule strictly lowers
        a well-founded measure, so this terminates), then coefficients
        are reduced modulo each monomial's additive order.
        """
        out = {}
        stack = list(terms.items())
        while stack:
            mono, coeff = stack.pop()
            if coeff == 0:
                continue
            rule = self._matching_rule(mono)
            if rule is None:
                out[mono] = out.get(mono, 0) + coeff
                continue
            pat, rep = rule
            rest = tuple(m - p for m, p in zip(mono, pat))
            for rmono, rcoeff in rep:
                stack.append((tuple(a + b for a, b in zip(rest, rmono)),
                              coeff * rcoeff))
        reduced = {}
        for mono, c in out.items():
            c = self._reduce_coeff(mono, c)
            if c:
                reduced[mono] = c
        return reduced

    def check_confluence(self, max_degree=12):
        """Rewriting reaches the same normal form whichever matching rule
        fires first, for every monomial of degree <= max_degree."""
        for degree in range(max_degree + 1):
            for mono in self.all_exponents(degree):
                firsts = []
                for pat, rep in self.relations:
                    if not all(m >= p for m, p in zip(mono, pat)):
                        continue
                    rest = tuple(m - p for m, p in zip(mono, pat))
                    start = {}
                    for rmono, rcoeff in rep:
                        key = tuple(a + b for a, b in zip(rest, rmono))
                        start[key] = start.get(key, 0) + rcoeff
                    firsts.append(self.normal_form(start))
                if firsts and any(f != firsts[0] for f in firsts[1:]):
                    return False
        return True

    def all_exponents(self, degree):
        """Every exponent tuple of the given degree, normal or not."""
        result = []

        def rec(i, remaining, prefix):
            if i == len(self.gens):
                if remaining == 0:
                    result.append(tuple(prefix))
                return
            d = self.degrees[i]
            for e in range(remaining // d + 1):
                rec(i + 1, remaining - e * d, prefix + [e])

        rec(0, degree, [])
        return result

    def monomials(self, degree):
        """Normal-form monomials of the degree, descending lex order."""
        cached = self._mono_cache.get(degree)
        if cached is None:
            cached = sorted(
                (m for m in self.all_exponents(degree) if self.is_normal_monomial(m)),
                reverse=True,
            )
            self._mono_cache[degree] = cached
        return list(cached)

    def graded_slice(self, degree):
        basis = self.monomials(degree)
        return GradedSlice(degree, basis, [self.monomial_order(m) for m in basis])

    # -- element constructors --------------------------------------------

    def element(self, terms):
        terms = dict(terms)
        for mono in terms:
            if len(mono) != len(self.gens):
                raise ValueError(f"exponent tuple {mono} does not match the "
                                 f"{len(self.gens)} generators of {self.name}")
        return RingElement(self, self.normal_form(terms), _normal=True)

    def zero(self):
        return RingElement(self, {}, _normal=True)

    def one(self):
        return self.element({(0,) * len(self.gens): 1})

    def gen(self, symbol):
        i = self._symbols.get(symbol)
        if i is None:
            raise KeyError(f"{self.name} has no generator {symbol!r}")
        mono = [0] * len(self.gens)
        mono[i] = 1
        return self.element({tuple(mono): 1})

    def monomial_element(self, mono, coeff=1):
        return self.element({tuple(mono): coeff})

    # -- grammar -----------------------------------------------------------

    def parse(self, text):
        """Parse the element grammar: terms joined by `+`, each term a
        `*`-separated product of an optional integer and powers sym^k."""
        text = text.strip()
        if not text:
            raise ElementParseError("empty element")
        terms = {}
        for raw_term in text.split("+"):
            raw_term = raw_term.strip()
            if not raw_term:
                raise ElementParseError(f"empty term in {text!r}")
            coeff = 1
            mono = [0] * len(self.gens)
            for factor in raw_term.split("*"):
                factor = factor.strip()
                if not factor:
                    raise ElementParseError(f"empty factor in {raw_term!r}")
                # minus only on integers: the free degree-0 part of a
                # Z-coefficient ring can carry negative values
                if factor.isdigit() or (factor[0] == "-" and factor[1:].isdigit()):
                    coeff *= int(factor)
                    continue
                m = _FACTOR_RE.match(factor)
                if m is None:
                    raise ElementParseError(f"bad factor {factor!r}")
                sym, exp = m.group(1), m.group(2)
                i = self._symbols.get(sym)
                if i is None:
                    raise ElementParseError(f"unknown symbol {sym!r} in {self.name}")
                mono[i] += int(exp) if exp else 1
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + coeff
        return self.element(terms)

    def format_monomial(self, mono, coeff):
        factors = []
        for i in self._print_order:
            e = mono[i]
            if e == 0:
                continue
            sym = self.display[i]
            factors.append(sym if e == 1 else f"{sym}^{e}")
        if not factors:
            return str(coeff)
        if coeff != 1:
            factors.insert(0, str(coeff))
        return "*".join(factors)


class RingElement:
    """Normal-form element of a ring presentation.

    Immutable by convention; `terms` maps normal monomials to nonzero
    coefficients already reduced modulo their additive order.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, _normal=False):
        self.ring = ring
        self.terms = terms if _normal else ring.normal_form(dict(terms))

    # -- queries ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_homogeneous(self):
        return len({self.ring.monomial_degree(m) for m in self.terms}) <= 1

    def degree(self):
        """Degree of a homogeneous element; None for the zero element."""
        degs = {self.ring.monomial_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element {self}")
        return degs.pop()

    def __eq__(self, other):
        return (isinstance(other, RingElement)
                and self.ring == other.ring and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"elements of {self.ring.name} and {other.ring.name}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.element({(0,) * len(self.ring.gens): other})
        self._check_ring(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return self.ring.element(terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.ring.element({m: c * other for m, c in self.terms.items()})
        self._check_ring(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return self.ring.element(terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [self.ring.format_monomial(m, self.terms[m])
                 for m in sorted(self.terms, reverse=True)]
        return "+".join(parts)

    def __repr__(self):
        return f"<{self.ring.name}: {self}>"


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

def _f2(name, gens, degrees, relations=(), display=None):
    return RingPresentation(name, "F2", gens, degrees, relations=relations,
                            display=display)


def _z(name, gens, degrees, orders, relations=()):
    return RingPresentation(name, "Z", gens, degrees, orders=orders,
                            relations=relations)


# mod-2 cohomology of D8 and its subgroups
D8_F2 = _f2("D8_F2", ("x", "y", "w"), (1, 1, 2),
            relations=[((1, 1, 0), {})])
H1_F2 = _f2("H1_F2", ("a", "b"), (1, 1))
H2_F2 = _f2("H2_F2", ("e", "u"), (1, 2),
            relations=[((2, 0), {})])
# the order-2 subgroup generators collide with the dimension parameter d,
# hence internal names c3/d3; printing and parsing accept c/d as well
H3_F2 = _f2("H3_F2", ("c3", "d3"), (1, 1), display=("c", "d"))
K1_F2 = _f2("K1_F2", ("t1",), (1,))
K2_F2 = _f2("K2_F2", ("t2",), (1,))
K3_F2 = _f2("K3_F2", ("t3",), (1,))
K4_F2 = _f2("K4_F2", ("t4",), (1,))
K5_F2 = _f2("K5_F2", ("t5",), (1,))
Z2xZ2_F2 = _f2("Z2xZ2_F2", ("t1", "t2"), (1, 1))
Z2_F2 = _f2("Z2_F2", ("t",), (1,))

# integral cohomology; all torsion, orders as forced by 2X=2Y=2M=4W=0
D8_Z_FULL = _z("D8_Z_FULL", ("X", "Y", "M", "W"), (2, 2, 3, 4), (2, 2, 2, 4),
               relations=[((1, 1, 0, 0), {}),
                          ((0, 0, 2, 0), {(1, 0, 0, 1): 1, (0, 1, 0, 1): 1})])
D8_Z_BOUND = _z("D8_Z_BOUND", ("Y", "M", "W"), (2, 3, 4), (2, 2, 4),
                relations=[((0, 2, 0), {(1, 0, 1): 1})])
H1_Z = _z("H1_Z", ("alpha", "beta", "mu"), (2, 2, 3), (2, 2, 2),
          relations=[((0, 0, 2), {(2, 1, 0): 1, (1, 2, 0): 1})])
H2_Z = _z("H2_Z", ("U",), (2,), (4,))
H3_Z = _z("H3_Z", ("gamma", "delta", "eta"), (2, 2, 3), (2, 2, 2),
          relations=[((0, 0, 2), {(2, 1, 0): 1, (1, 2, 0): 1})])
K3_Z = _z("K3_Z", ("theta3",), (2,), (2,))
Z2xZ2_Z = _z("Z2xZ2_Z", ("tau1", "tau2", "mu"), (2, 2, 3), (2, 2, 2),
             relations=[((0, 0, 2), {(2, 1, 0): 1, (1, 2, 0): 1})])
Z2_Z = _z("Z2_Z", ("tau",), (2,), (2,))

CATALOG = {r.name: r for r in (
    D8_F2, D8_Z_FULL, D8_Z_BOUND,
    H1_F2, H1_Z, H2_F2, H2_Z, H3_F2, H3_Z,
    K1_F2, K2_F2, K3_F2, K4_F2, K5_F2, K3_Z,
    Z2xZ2_F2, Z2xZ2_Z, Z2_F2, Z2_Z,
)}

# the two-variable polynomial ring where the pi family and the mod-2
# admissibility criterion live; not a group cohomology ring
YW_F2 = _f2("YW_F2", ("y", "w"), (1, 2))


def get_ring(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown ring identifier {name!r}") from None


def f2_polynomial_ring(symbols, degrees=None):
    """Free F2 polynomial ring on the given symbols (default degree 1)."""
    symbols = tuple(symbols)
    if degrees is None:
        degrees = (1,) * len(symbols)
    return _f2("F2[" + ",".join(symbols) + "]", symbols, degrees)
