"""Invariants of monoid maps, stabilizers of subfunctors, and the induced
Galois connection between submonoids and natural families of subsets.

The two directions are computed along independent routes.  Invariants come
from an equalizer of curried maps into an exponential, with a direct scan
as the oracle; stabilizers come either from a direct scan or through the
end of the underlying-carrier diagram.  The connection laws and the closed
object correspondence are then checked rather than assumed.
"""

import itertools
from functools import lru_cache

from .finset import FinMap, curry, equalizer, exponential, product
from .monoid import MonoidHom, enumerate_submonoids, submonoid
from . import ends


class GaloisError(Exception):
    """Structural error in a subfunctor, relation, or correspondence input."""


def _naturality_violation(site, comps):
    """First (morphism, element) pushing a chosen subset outside another,
    or None.  comps holds element-index sets per site object."""
    for i, j in itertools.product(range(site.nobj), repeat=2):
        if not comps[i]:
            continue
        nj = len(site.objects[j].carrier)
        if site._pair_is_lazy(i, j):
            # every map is a morphism, and constants land anywhere
            if nj and len(comps[j]) < nj:
                missing = min(q for q in range(nj) if q not in comps[j])
                return (i, j, site.objects[j].carrier.elements[missing])
            continue
        for f in site.iter_hom_tuples(i, j):
            for p in comps[i]:
                if f[p] not in comps[j]:
                    return (i, j, site.objects[i].carrier.elements[p])
    return None


class Subfunctor:
    """Per-object subsets of a site's carriers, closed under all morphisms."""

    def __init__(self, site, subsets):
        unknown = sorted(set(subsets) - set(site.names))
        if unknown:
            raise GaloisError("subfunctor names unknown object %r" % unknown[0])
        comps = []
        idxsets = []
        for name, act in zip(site.names, site.objects):
            chosen = tuple(sorted(set(subsets.get(name, ()))))
            for x in chosen:
                if x not in act.carrier:
                    raise GaloisError("element %r is not in site object %r" % (x, name))
            comps.append(chosen)
            idxsets.append({act.carrier.index(x) for x in chosen})
        bad = _naturality_violation(site, idxsets)
        if bad is not None:
            i, j, x = bad
            raise GaloisError("not natural: a morphism %r -> %r moves %r outside the subset"
                              % (site.names[i], site.names[j], x))
        self.site = site
        self.components = dict(zip(site.names, comps))
        self._hash = None

    @classmethod
    def full(cls, site):
        return cls(site, {name: act.carrier.elements
                          for name, act in zip(site.names, site.objects)})

    @classmethod
    def empty(cls, site):
        return cls(site, {})

    def component(self, name):
        return self.components[name]

    def as_dict(self):
        return {name: list(v) for name, v in self.components.items()}

    def size(self):
        return sum(len(v) for v in self.components.values())

    def __le__(self, other):
        if self.site != other.site:
            raise GaloisError("subfunctors over different sites are incomparable")
        return all(set(self.components[n]) <= set(other.components[n])
                   for n in self.site.names)

    def __eq__(self, other):
        return (isinstance(other, Subfunctor) and self.site == other.site
                and self.components == other.components)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.site, tuple(self.components[n] for n in self.site.names)))
        return self._hash

    def __repr__(self):
        return "Subfunctor(%s)" % ", ".join(
            "%s:{%s}" % (n, ",".join(v)) for n, v in self.components.items())

    def diagram(self):
        return ends.SubsetDiagram(self.site, [self.components[n] for n in self.site.names])


def fixes(h, V):
    """Whether every element coming from h acts as the identity on V."""
    if h.dst != V.site.monoid:
        raise GaloisError("the hom must land in the site's monoid")
    for name, act in zip(V.site.names, V.site.objects):
        for v in V.components[name]:
            for b in h.src.elements:
                if act.apply(h(b), v) != v:
                    return False
    return True


def _invariant_component(h, M):
    """Elements of one site object fixed by the image of h, computed as an
    equalizer of curried maps after restricting the exponent along h."""
    A = h.dst.carrier
    B = h.src.carrier
    X = M.carrier
    P = product(X, A)
    acting = FinMap(P, X, {p: M.apply(a, x) for p, (x, a) in P._pairs.items()})
    dropping = FinMap(P, X, {p: x for p, (x, a) in P._pairs.items()})
    over_A = exponential(A, X)
    over_B = exponential(B, X)
    hidx = tuple(A.index(h(b)) for b in B)
    along_h = FinMap(over_A, over_B,
                     {phi: over_B.map_element(tuple(over_A.map_images(phi)[q] for q in hidx))
                      for phi in over_A})
    left = along_h * curry(acting)
    right = along_h * curry(dropping)
    eq, _ = equalizer(left, right)
    return eq.elements


@lru_cache(maxsize=None)
def invariants(h, site):
    """The subfunctor of elements fixed by everything in the image of h."""
    if h.dst != site.monoid:
        raise GaloisError("the hom must land in the site's monoid")
    subsets = {name: _invariant_component(h, act)
               for name, act in zip(site.names, site.objects)}
    return Subfunctor(site, subsets)


def invariants_oracle(h, site):
    """Direct scan for the same subfunctor: keep x with h(b).x = x for all b."""
    if h.dst != site.monoid:
        raise GaloisError("the hom must land in the site's monoid")
    subsets = {}
    for name, act in zip(site.names, site.objects):
        subsets[name] = tuple(x for x in act.carrier
                              if all(act.apply(h(b), x) == x for b in h.src.elements))
    return Subfunctor(site, subsets)


@lru_cache(maxsize=None)
def stabilizer(V):
    """The largest submonoid acting as the identity on V, with inclusion."""
    m = V.site.monoid
    kept = [a for a in m.elements
            if all(act.apply(a, v) == v
                   for name, act in zip(V.site.names, V.site.objects)
                   for v in V.components[name])]
    return submonoid(m, kept)


def stabilizer_via_end(V, max_families=ends.MAX_ENUMERATION):
    """The stabilizer again, through the end: equalize the reconstruction
    map against the trivial path after restricting all families to V."""
    site = V.site
    m = site.monoid
    end = ends.end_of_forgetful(site, max_families)
    rho = ends.reconstruction_hom(m, site, end=end)
    path = ends.trivial_path(m, site, end=end, max_families=max_families)
    cut, _ = ends.family_restriction(end, V.diagram(), max_families)
    eq, _ = equalizer(cut * rho.map, cut * path)
    S, _ = submonoid(m, eq.elements)
    return S


def galois_correspondence(m, site):
    """Sweep all submonoids and their invariant images, flag the closed
    objects on both sides, and report the induced bijection."""
    rows = []
    inv_of = {}
    for S, incl in enumerate_submonoids(m):
        V = invariants(incl, site)
        T, _ = stabilizer(V)
        inv_of[S.elements] = V
        rows.append({
            "elements": list(S.elements),
            "invariants": V.as_dict(),
            "stabilizer_of_invariants": list(T.elements),
            "closed": T.elements == S.elements,
        })
    images = []
    for row in rows:
        V = inv_of[tuple(row["elements"])]
        if V not in images:
            images.append(V)
    vrows = []
    for V in images:
        T, incl = stabilizer(V)
        W = invariants(incl, site)
        vrows.append({
            "subsets": V.as_dict(),
            "stabilizer": list(T.elements),
            "invariants_of_stabilizer": W.as_dict(),
            "closed": W == V,
        })
    closed_subs = [tuple(r["elements"]) for r in rows if r["closed"]]
    closed_vs = [V for V, r in zip(images, vrows) if r["closed"]]
    pairing = {S: inv_of[S] for S in closed_subs}
    targets = list(pairing.values())
    injective = all(targets[i] != targets[j]
                    for i in range(len(targets)) for j in range(i + 1, len(targets)))
    onto = all(V in targets for V in closed_vs) and all(V in closed_vs for V in targets)
    bijective = injective and onto and len(closed_subs) == len(closed_vs)
    reversing = all(
        (set(s1) <= set(s2)) == (pairing[s2] <= pairing[s1])
        for s1, s2 in itertools.product(closed_subs, repeat=2))
    return {
        "schema": "galmon/1",
        "kind": "correspondence",
        "monoid": {"elements": list(m.elements), "unit": m.unit},
        "site": list(site.names),
        "submonoids": rows,
        "subfunctors": vrows,
        "closed_submonoids": [list(s) for s in closed_subs],
        "closed_subfunctors": [V.as_dict() for V in closed_vs],
        "bijection": [{"submonoid": list(s), "subfunctor": pairing[s].as_dict()}
                      for s in closed_subs],
        "bijective": bijective,
        "inclusion_reversing": bool(bijective and reversing),
    }


def connection_law_failures(m, site, extra_subfunctors=()):
    """Violations of the five connection laws over all submonoids, the full
    and empty subfunctors, every invariant image, and any extras."""
    failures = []
    pairs = enumerate_submonoids(m)
    inv = {}
    for S, incl in pairs:
        inv[S.elements] = invariants(incl, site)
    tested = [Subfunctor.full(site), Subfunctor.empty(site)]
    for V in list(inv.values()) + list(extra_subfunctors):
        if V not in tested:
            tested.append(V)

    def inv_of_monoid(T):
        _, incl = submonoid(m, T.elements)
        return invariants(incl, site)

    for S, incl in pairs:
        T, _ = stabilizer(inv[S.elements])
        if not set(S.elements) <= set(T.elements):
            failures.append("submonoid {%s} escapes the stabilizer of its invariants"
                            % ",".join(S.elements))
        if inv_of_monoid(T) != inv[S.elements]:
            failures.append("invariants not idempotent at {%s}" % ",".join(S.elements))
    for V in tested:
        T, _ = stabilizer(V)
        W = inv_of_monoid(T)
        if not V <= W:
            failures.append("%r escapes the invariants of its stabilizer" % V)
        T2, _ = stabilizer(W)
        if T2.elements != T.elements:
            failures.append("stabilizer not idempotent at %r" % V)
    for (S1, _), (S2, _) in itertools.product(pairs, repeat=2):
        if set(S1.elements) <= set(S2.elements):
            if not inv[S2.elements] <= inv[S1.elements]:
                failures.append("invariants not order reversing on {%s} <= {%s}"
                                % (",".join(S1.elements), ",".join(S2.elements)))
    for V1, V2 in itertools.product(tested, repeat=2):
        if V1 <= V2:
            T1, _ = stabilizer(V1)
            T2, _ = stabilizer(V2)
            if not set(T2.elements) <= set(T1.elements):
                failures.append("stabilizer not order reversing on %r <= %r" % (V1, V2))
    return failures


def connection_laws(m, site, extra_subfunctors=()):
    return not connection_law_failures(m, site, extra_subfunctors)


def enumerate_subfunctors(site, limit=200_000):
    """All natural subfunctors of a small site, smallest first."""
    sizes = [len(act.carrier) for act in site.objects]
    total = 1
    for n in sizes:
        total *= 2 ** n
    if total > limit:
        raise GaloisError("site too large to enumerate subfunctors")
    found = []
    for masks in itertools.product(*[range(2 ** n) for n in sizes]):
        idxsets = [{p for p in range(n) if mask >> p & 1}
                   for n, mask in zip(sizes, masks)]
        if _naturality_violation(site, idxsets) is None:
            subsets = {name: tuple(act.carrier.elements[p] for p in sorted(s))
                       for name, act, s in zip(site.names, site.objects, idxsets)}
            found.append(Subfunctor(site, subsets))
    found.sort(key=lambda V: (V.size(), tuple(V.components[n] for n in site.names)))
    return found


def random_subfunctor(site, rng):
    """A natural subfunctor grown from random seeds by closing under the
    site morphisms."""
    idxsets = []
    for act in site.objects:
        n = len(act.carrier)
        idxsets.append({p for p in range(n) if n and rng.random() < 0.4})
    changed = True
    while changed:
        changed = False
        for i, j in itertools.product(range(site.nobj), repeat=2):
            if not idxsets[i]:
                continue
            nj = len(site.objects[j].carrier)
            if site._pair_is_lazy(i, j):
                if nj and len(idxsets[j]) < nj:
                    idxsets[j] = set(range(nj))
                    changed = True
                continue
            for f in site.iter_hom_tuples(i, j):
                for p in list(idxsets[i]):
                    if f[p] not in idxsets[j]:
                        idxsets[j].add(f[p])
                        changed = True
    subsets = {name: tuple(act.carrier.elements[p] for p in sorted(s))
               for name, act, s in zip(site.names, site.objects, idxsets)}
    return Subfunctor(site, subsets)


class Preorder:
    """Finitely many elements with a reflexive, transitive order table."""

    def __init__(self, elements, leq):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise GaloisError("preorder elements must be distinct")
        rel = set()
        for x, y in leq:
            if x not in elements or y not in elements:
                raise GaloisError("order pair (%r, %r) mentions a stranger" % (x, y))
            rel.add((x, y))
        for x in elements:
            if (x, x) not in rel:
                raise GaloisError("order is not reflexive at %r" % x)
        for x, y in rel:
            for y2, z in rel:
                if y2 == y and (x, z) not in rel:
                    raise GaloisError("order is not transitive through (%r, %r, %r)" % (x, y, z))
        self.elements = elements
        self.rel = frozenset(rel)

    def le(self, x, y):
        return (x, y) in self.rel

    def __repr__(self):
        return "Preorder(%s)" % ",".join(self.elements)


class FiniteRelation:
    """A relation between two preorders, closed downward on both sides."""

    def __init__(self, left, right, holds):
        pairs = set()
        for x, y in holds:
            if x not in left.elements or y not in right.elements:
                raise GaloisError("relation pair (%r, %r) mentions a stranger" % (x, y))
            pairs.add((x, y))
        for x, y in pairs:
            for x2 in left.elements:
                for y2 in right.elements:
                    if left.le(x2, x) and right.le(y2, y) and (x2, y2) not in pairs:
                        raise GaloisError(
                            "relation is not functorial: holds(%r, %r) but not holds(%r, %r)"
                            % (x, y, x2, y2))
        self.left = left
        self.right = right
        self.pairs = frozenset(pairs)

    def holds(self, x, y):
        return (x, y) in self.pairs


class Representants:
    """Greatest related elements on each side, where they exist."""

    def __init__(self, greatest_right, undefined_right, greatest_left, undefined_left):
        self.greatest_right = greatest_right
        self.undefined_right = tuple(undefined_right)
        self.greatest_left = greatest_left
        self.undefined_left = tuple(undefined_left)

    @property
    def total(self):
        return not self.undefined_right and not self.undefined_left


def representants(R):
    """For each element, the greatest element related to it on the other
    side, plus the points where no greatest exists."""
    greatest_right, undef_right = {}, []
    for x in R.left.elements:
        related = [y for y in R.right.elements if R.holds(x, y)]
        tops = [y0 for y0 in related if all(R.right.le(y, y0) for y in related)]
        if tops:
            greatest_right[x] = tops[0]
        else:
            undef_right.append(x)
    greatest_left, undef_left = {}, []
    for y in R.right.elements:
        related = [x for x in R.left.elements if R.holds(x, y)]
        tops = [x0 for x0 in related if all(R.left.le(x, x0) for x in related)]
        if tops:
            greatest_left[y] = tops[0]
        else:
            undef_left.append(y)
    return Representants(greatest_right, undef_right, greatest_left, undef_left)
