"""Finite monoids presented by multiplication tables.

Also the structure the product monad carries: homomorphisms, the unique
augmentation to the trivial monoid, substructure enumeration, and the
fusion test that detects when a monoid is a group (and so has an antipode).
"""

import itertools

from .finset import FinSet, FinMap, pair_label, product, terminal_map


class MonoidError(Exception):
    """Structural error in a monoid, hom, or substructure."""


class NotHopfError(MonoidError):
    """Raised when an antipode is requested but some element is not invertible."""

    def __init__(self, witness):
        super().__init__("not Hopf: element %r has no two-sided inverse" % witness)
        self.witness = witness


class Monoid:
    """A finite monoid: carrier, unit, and total multiplication table.

    Construction checks the table is total with images in the carrier;
    the algebraic laws are the business of validate_monoid.
    """

    def __init__(self, carrier, unit, table):
        if not isinstance(carrier, FinSet):
            carrier = FinSet(carrier)
        if unit not in carrier:
            raise MonoidError("unit %r is not in the carrier" % unit)
        tbl = {}
        for a in carrier:
            for b in carrier:
                if (a, b) not in table:
                    raise MonoidError("table missing entry for (%s, %s)" % (a, b))
                c = table[(a, b)]
                if c not in carrier:
                    raise MonoidError("product %s*%s = %r lies outside the carrier" % (a, b, c))
                tbl[(a, b)] = c
        if len(table) != len(tbl):
            extra = sorted(set(table) - set(tbl))
            raise MonoidError("table mentions %r outside the carrier" % (extra[0],))
        self.carrier = carrier
        self.unit = unit
        self.table = tbl
        self._hash = None

    @property
    def elements(self):
        return self.carrier.elements

    def mul(self, a, b):
        return self.table[(a, b)]

    def __len__(self):
        return len(self.carrier)

    def __eq__(self, other):
        return (isinstance(other, Monoid) and self.carrier == other.carrier
                and self.unit == other.unit and self.table == other.table)

    def __hash__(self):
        if self._hash is None:
            key = tuple(self.table[(a, b)] for a in self.elements for b in self.elements)
            self._hash = hash((self.carrier.elements, self.unit, key))
        return self._hash

    def __repr__(self):
        return "Monoid(%s; unit=%s)" % (",".join(self.elements), self.unit)

    def inverse(self, a):
        """The two-sided inverse of a, or None."""
        for b in self.elements:
            if self.mul(a, b) == self.unit and self.mul(b, a) == self.unit:
                return b
        return None


def validate_monoid(m):
    """Return a list of law violations; empty means m is a monoid."""
    out = []
    for a in m.elements:
        if m.mul(m.unit, a) != a:
            out.append("unit law fails: %s*%s = %s" % (m.unit, a, m.mul(m.unit, a)))
        if m.mul(a, m.unit) != a:
            out.append("unit law fails: %s*%s = %s" % (a, m.unit, m.mul(a, m.unit)))
    for a, b, c in itertools.product(m.elements, repeat=3):
        left = m.mul(m.mul(a, b), c)
        right = m.mul(a, m.mul(b, c))
        if left != right:
            out.append("associativity fails at (%s, %s, %s): %s vs %s"
                       % (a, b, c, left, right))
    return out


def trivial_monoid():
    return Monoid(FinSet(("e",)), "e", {("e", "e"): "e"})


class MonoidHom:
    """A monoid homomorphism, validated on construction."""

    def __init__(self, src, dst, assignment):
        if isinstance(assignment, FinMap):
            if assignment.dom != src.carrier or assignment.cod != dst.carrier:
                raise MonoidError("hom carrier map has the wrong endpoints")
            fmap = assignment
        else:
            fmap = FinMap(src.carrier, dst.carrier, assignment)
        if fmap(src.unit) != dst.unit:
            raise MonoidError("hom sends unit to %r" % fmap(src.unit))
        for a, b in itertools.product(src.elements, repeat=2):
            if fmap(src.mul(a, b)) != dst.mul(fmap(a), fmap(b)):
                raise MonoidError("hom breaks multiplicativity at (%s, %s)" % (a, b))
        self.src = src
        self.dst = dst
        self.map = fmap

    @classmethod
    def identity(cls, m):
        return cls(m, m, FinMap.identity(m.carrier))

    def __call__(self, a):
        return self.map(a)

    def __mul__(self, other):
        """Composition, self after other."""
        if other.dst != self.src:
            raise MonoidError("hom composition mismatch")
        return MonoidHom(other.src, self.dst, self.map * other.map)

    def __eq__(self, other):
        return (isinstance(other, MonoidHom) and self.src == other.src
                and self.dst == other.dst and self.map == other.map)

    def __hash__(self):
        return hash((self.src, self.dst, self.map))

    def __repr__(self):
        return "MonoidHom(%r)" % self.map

    def is_injective(self):
        return self.map.is_injective()

    def is_isomorphism(self):
        return self.map.is_bijection()


def kernel_pairs(h):
    """Pairs the hom identifies: the congruence it induces on the source."""
    out = []
    for a, b in itertools.combinations(h.src.elements, 2):
        if h(a) == h(b):
            out.append((a, b))
    return tuple(out)


class Augmentation:
    """The unique monoid map to the trivial monoid, as a carrier-level counit."""

    def __init__(self, owner):
        self.owner = owner
        self.counit = terminal_map(owner.carrier)

    def __repr__(self):
        return "Augmentation(%r)" % self.owner


def canonical_augmentation(m):
    return Augmentation(m)


def submonoid(m, subset):
    """The submonoid on the given closed subset, with its inclusion hom."""
    elems = tuple(sorted(subset))
    if m.unit not in elems:
        raise MonoidError("submonoid must contain the unit")
    inside = set(elems)
    table = {}
    for a in elems:
        for b in elems:
            c = m.mul(a, b)
            if c not in inside:
                raise MonoidError("subset not closed: %s*%s = %s escapes" % (a, b, c))
            table[(a, b)] = c
    S = Monoid(FinSet(elems), m.unit, table)
    incl = MonoidHom(S, m, {a: a for a in elems})
    return S, incl


def enumerate_submonoids(m):
    """All submonoids with inclusions, ordered by size then element list.

    Exhaustive over subsets; intended for carriers of a dozen elements or so.
    """
    rest = [a for a in m.elements if a != m.unit]
    out = []
    for k in range(len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            subset = set(combo)
            subset.add(m.unit)
            if all(m.mul(a, b) in subset for a in subset for b in subset):
                out.append(submonoid(m, subset))
    out.sort(key=lambda pair: (len(pair[0]), pair[0].elements))
    return out


def enumerate_subgroups(m):
    """Submonoids in which every element has a two-sided inverse."""
    out = []
    for S, incl in enumerate_submonoids(m):
        if all(S.inverse(a) is not None for a in S.elements):
            out.append((S, incl))
    return out


def fusion_morphism(m):
    """The self-map of the square sending (a, b) to (a, ab)."""
    P = product(m.carrier, m.carrier)
    table = {p: pair_label(a, m.mul(a, b)) for p, (a, b) in P._pairs.items()}
    return FinMap(P, P, table)


def hopf_witness(m):
    """A non-invertible element, or None when all elements are invertible."""
    for a in m.elements:
        if m.inverse(a) is None:
            return a
    return None


def is_hopf(m):
    """True iff fusion is a bijection, i.e. iff m is a group."""
    return fusion_morphism(m).is_bijection()


def antipode(m):
    """Inversion as a carrier map; defined exactly when m is a group."""
    if not is_hopf(m):
        raise NotHopfError(hopf_witness(m))
    table = {a: m.inverse(a) for a in m.elements}
    s = FinMap(m.carrier, m.carrier, table)
    for a in m.elements:
        assert m.mul(s(a), a) == m.unit and m.mul(a, s(a)) == m.unit
    return s
