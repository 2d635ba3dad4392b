"""Left actions of a finite monoid on finite sets.

An action is a total table (a, x) -> a.x.  Sites are finite lists of named
actions; their morphisms (all equivariant maps between listed objects) are
derived on demand and cached, never stored by hand.  Hom sets between
trivial actions contain every map, so those pairs are iterated lazily.
"""

import itertools
from functools import lru_cache

from .finset import (FinSet, FinMap, SizingError, MAX_ENUMERATION, hom_set,
                     map_label, product, singleton)
from .monoid import trivial_monoid, enumerate_subgroups, hopf_witness, is_hopf


class ActionError(Exception):
    """Structural error in an action, equivariant map, or site."""


class MAction:
    """A monoid acting on a finite carrier through a total table."""

    def __init__(self, monoid, carrier, act):
        if not isinstance(carrier, FinSet):
            carrier = FinSet(carrier)
        table = {}
        for a in monoid.elements:
            for x in carrier:
                if (a, x) not in act:
                    raise ActionError("action table missing entry for (%s, %s)" % (a, x))
                y = act[(a, x)]
                if y not in carrier:
                    raise ActionError("image %s.%s = %r lies outside the carrier" % (a, x, y))
                table[(a, x)] = y
        if len(act) != len(table):
            extra = sorted(set(act) - set(table))
            raise ActionError("action table mentions %r outside the carrier" % (extra[0],))
        self.monoid = monoid
        self.carrier = carrier
        self.act = table
        self._hash = None
        self._trivial = None
        self._idx = None

    def apply(self, a, x):
        return self.act[(a, x)]

    def __eq__(self, other):
        return (isinstance(other, MAction) and self.monoid == other.monoid
                and self.carrier == other.carrier and self.act == other.act)

    def __hash__(self):
        if self._hash is None:
            key = tuple(self.act[(a, x)] for a in self.monoid.elements for x in self.carrier)
            self._hash = hash((self.monoid, self.carrier, key))
        return self._hash

    def __repr__(self):
        return "MAction(%r on %r)" % (self.monoid, self.carrier)

    @property
    def is_trivial_action(self):
        if self._trivial is None:
            self._trivial = all(y == x for (_, x), y in self.act.items())
        return self._trivial

    def index_table(self):
        """Per monoid element, the action as a tuple of carrier indices."""
        if self._idx is None:
            idx = self.carrier.index
            self._idx = {a: tuple(idx(self.act[(a, x)]) for x in self.carrier)
                         for a in self.monoid.elements}
        return self._idx


def validate_action(M):
    """Return a list of axiom violations; empty means M is an action."""
    m = M.monoid
    out = []
    for x in M.carrier:
        y = M.apply(m.unit, x)
        if y != x:
            out.append("unit fails: %s.%s = %s" % (m.unit, x, y))
    for a, b in itertools.product(m.elements, repeat=2):
        ab = m.mul(a, b)
        for x in M.carrier:
            if M.apply(ab, x) != M.apply(a, M.apply(b, x)):
                out.append("associativity fails at (%s, %s, %s): %s vs %s"
                           % (a, b, x, M.apply(ab, x), M.apply(a, M.apply(b, x))))
    return out


class EquivariantMap:
    """A carrier map commuting with the two actions, checked on construction."""

    def __init__(self, src, dst, fmap):
        if src.monoid != dst.monoid:
            raise ActionError("equivariant map needs a common monoid")
        if not isinstance(fmap, FinMap):
            fmap = FinMap(src.carrier, dst.carrier, fmap)
        for a in src.monoid.elements:
            for x in src.carrier:
                if fmap(src.apply(a, x)) != dst.apply(a, fmap(x)):
                    raise ActionError("not equivariant at (%s, %s)" % (a, x))
        self.src = src
        self.dst = dst
        self.map = fmap

    @classmethod
    def identity(cls, M):
        return cls(M, M, FinMap.identity(M.carrier))

    def __call__(self, x):
        return self.map(x)

    def __mul__(self, other):
        return EquivariantMap(other.src, self.dst, self.map * other.map)

    def __eq__(self, other):
        return (isinstance(other, EquivariantMap) and self.src == other.src
                and self.dst == other.dst and self.map == other.map)

    def __hash__(self):
        return hash((self.src, self.dst, self.map))

    def __repr__(self):
        return "EquivariantMap(%r)" % self.map


def trivial_action(m, X):
    if not isinstance(X, FinSet):
        X = FinSet(X)
    return MAction(m, X, {(a, x): x for a in m.elements for x in X})


def free_action(m, X):
    """The monoid multiplying into the left factor of A x X."""
    if not isinstance(X, FinSet):
        X = FinSet(X)
    P = product(m.carrier, X)
    label = {(b, x): p for p, (b, x) in P._pairs.items()}
    act = {}
    for a in m.elements:
        for p, (b, x) in P._pairs.items():
            act[(a, p)] = label[(m.mul(a, b), x)]
    return MAction(m, P, act)


def restrict_action(h, M):
    """Pull an action on the target of h back along h."""
    if M.monoid != h.dst:
        raise ActionError("restriction needs an action of the hom's target")
    act = {(b, x): M.apply(h(b), x) for b in h.src.elements for x in M.carrier}
    return MAction(h.src, M.carrier, act)


def _equivariant_tuples(M, N):
    """Yield image-index tuples of equivariant maps M -> N.

    Backtracks point by point, closing each choice under the action, so the
    cost tracks the number of solutions rather than |N|^|M|.  Solutions come
    out in image-tuple lexicographic order, the canonical hom order.
    """
    xs = M.carrier.elements
    n = len(xs)
    if n == 0:
        yield ()
        return
    ny = len(N.carrier)
    if ny == 0:
        return
    aM = M.index_table()
    aN = N.index_table()
    elems = M.monoid.elements
    assign = [-1] * n

    def close(i, y, trail):
        # force f(a.x) = a.y for everything reachable; False on a clash
        stack = [(i, y)]
        while stack:
            p, q = stack.pop()
            cur = assign[p]
            if cur != -1:
                if cur != q:
                    return False
                continue
            assign[p] = q
            trail.append(p)
            for a in elems:
                stack.append((aM[a][p], aN[a][q]))
        return True

    def free_point():
        for p in range(n):
            if assign[p] == -1:
                return p
        return -1

    def rec():
        p = free_point()
        if p == -1:
            yield tuple(assign)
            return
        for y in range(ny):
            trail = []
            if close(p, y, trail):
                yield from rec()
            for q in trail:
                assign[q] = -1

    yield from rec()


def equivariant_maps(M, N):
    """All equivariant maps M -> N in canonical table order."""
    if M.monoid != N.monoid:
        raise ActionError("equivariant maps need a common monoid")
    xs = M.carrier.elements
    ys = N.carrier.elements
    out = []
    for t in _equivariant_tuples(M, N):
        if len(out) >= MAX_ENUMERATION:
            raise SizingError("hom set between actions exceeds the ceiling")
        fmap = FinMap(M.carrier, N.carrier, {x: ys[i] for x, i in zip(xs, t)})
        # the search already established equivariance
        em = EquivariantMap.__new__(EquivariantMap)
        em.src, em.dst, em.map = M, N, fmap
        out.append(em)
    return out


def fixed_points(M):
    """The subcarrier on which every monoid element acts as the identity."""
    kept = [x for x in M.carrier
            if all(M.apply(a, x) == x for a in M.monoid.elements)]
    F = FinSet(kept, check=False)
    return F, FinMap(F, M.carrier, {x: x for x in kept})


def _probes(maps, limit=8):
    return maps[:limit]


def check_trivial_fixed_adjunction(m, X, M):
    """Equivariant maps out of the trivial action on X correspond to plain
    maps into the fixed points of M; checks the bijection and spot-checks
    naturality by pre- and post-composition."""
    if not isinstance(X, FinSet):
        X = FinSet(X)
    EX = trivial_action(m, X)
    lhs = equivariant_maps(EX, M)
    F, _ = fixed_points(M)
    rhs = hom_set(X, F)
    if len(lhs) != len(rhs):
        return False
    down = {}
    for f in lhs:
        if any(f(x) not in F for x in X):
            return False  # images of an equivariant map must be fixed
        key = tuple(f(x) for x in X)
        if key in down:
            return False
        down[key] = FinMap(X, F, {x: f(x) for x in X})
    for g in rhs:
        if g.image_tuple() not in down:
            return False
    for g0 in _probes(hom_set(X, X)):
        Eg0 = EquivariantMap(EX, EX, g0)
        for k in _probes(equivariant_maps(M, M)):
            kF = FinMap(F, F, {x: k(x) for x in F})
            for f in lhs:
                composite = k * f * Eg0
                left = tuple(composite(x) for x in X)
                right = (kF * down[tuple(f(x) for x in X)] * g0).image_tuple()
                if left != right:
                    return False
    return True


def coinduct(h, N):
    """The right adjoint of restriction along h: maps from the target
    monoid (acting on itself through h) into N, translated on the right."""
    A = h.dst
    B = h.src
    twisted = MAction(B, A.carrier,
                      {(b, a): A.mul(h(b), a) for b in B.elements for a in A.carrier})
    graph = {}
    for f in equivariant_maps(twisted, N):
        images = tuple(f(a) for a in A.carrier)
        graph[map_label(A.carrier.elements, images)] = images
    K = FinSet(graph, check=False)
    K._graph = graph
    K._enc = {v: k for k, v in graph.items()}
    K._base = A.carrier
    K._target = N.carrier
    aidx = A.carrier.index
    act = {}
    for a in A.elements:
        shift = tuple(aidx(A.mul(a2, a)) for a2 in A.carrier)
        for e, images in graph.items():
            act[(a, e)] = K._enc[tuple(images[i] for i in shift)]
    return MAction(A, K, act)


def transpose_to_coinduced(h, M, f, K):
    """Send f: restrict(M) -> N to its mate M -> coinduct(N)."""
    table = {}
    for x in M.carrier:
        images = tuple(f(M.apply(a, x)) for a in h.dst.carrier)
        table[x] = K.carrier.map_element(images)
    return EquivariantMap(M, K, table)


def transpose_from_coinduced(h, M, N, g):
    """Send g: M -> coinduct(N) to its mate restrict(M) -> N."""
    HM = restrict_action(h, M)
    table = {x: g.dst.carrier.map_apply(g(x), h.dst.unit) for x in M.carrier}
    return EquivariantMap(HM, N, table)


def check_restriction_coinduction_adjunction(h, M, N):
    """Bijection and spot-checked naturality of restriction -| coinduction."""
    K = coinduct(h, N)
    HM = restrict_action(h, M)
    lhs = equivariant_maps(HM, N)
    rhs = equivariant_maps(M, K)
    if len(lhs) != len(rhs):
        return False
    rhs_keys = {g.map.image_tuple() for g in rhs}
    up = {}
    for f in lhs:
        g = transpose_to_coinduced(h, M, f, K)
        if g.map.image_tuple() not in rhs_keys:
            return False
        if transpose_from_coinduced(h, M, N, g) != f:
            return False
        up[f] = g
    if len(set(up.values())) != len(lhs):
        return False
    for u in _probes(equivariant_maps(M, M)):
        Hu = EquivariantMap(HM, HM, u.map)
        for f in lhs:
            if transpose_to_coinduced(h, M, f * Hu, K) != up[f] * u:
                return False
    for v in _probes(equivariant_maps(N, N)):
        Kv = EquivariantMap(K, K, {e: K.carrier.map_element(
            tuple(v(y) for y in K.carrier.map_images(e))) for e in K.carrier})
        for f in lhs:
            if transpose_to_coinduced(h, M, v * f, K) != Kv * up[f]:
                return False
    return True


class Site:
    """A finite list of named actions of one monoid.

    Morphisms between listed objects are all equivariant maps, derived on
    first use.  Pairs of trivial actions have every map as a morphism, so
    those hom sets are iterated lazily instead of being materialized.
    """

    def __init__(self, monoid, objects):
        objects = list(objects)
        names = [name for name, _ in objects]
        if len(set(names)) != len(names):
            raise ActionError("site object names must be distinct")
        for name, act in objects:
            if act.monoid != monoid:
                raise ActionError("site object %r acts for the wrong monoid" % name)
            bad = validate_action(act)
            if bad:
                raise ActionError("site object %r is not an action: %s" % (name, bad[0]))
        self.monoid = monoid
        self.names = tuple(names)
        self.objects = tuple(act for _, act in objects)
        self._homs = {}
        self._hash = None

    @property
    def nobj(self):
        return len(self.names)

    def action_named(self, name):
        return self.objects[self.names.index(name)]

    def __eq__(self, other):
        return (isinstance(other, Site) and self.monoid == other.monoid
                and self.names == other.names and self.objects == other.objects)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.monoid, self.names, self.objects))
        return self._hash

    def __repr__(self):
        return "Site(%s)" % ", ".join(self.names)

    def _pair_is_lazy(self, i, j):
        return self.objects[i].is_trivial_action and self.objects[j].is_trivial_action

    def hom_raw_size(self, i, j):
        nx = len(self.objects[i].carrier)
        return len(self.objects[j].carrier) ** nx if nx else 1

    def iter_hom_tuples(self, i, j):
        """Image-index tuples of all morphisms object i -> object j."""
        if self._pair_is_lazy(i, j):
            nx = len(self.objects[i].carrier)
            ny = len(self.objects[j].carrier)
            if nx == 0:
                return iter([()])
            return itertools.product(range(ny), repeat=nx)
        return iter(self._filtered(i, j))

    def _filtered(self, i, j):
        if (i, j) not in self._homs:
            self._homs[(i, j)] = tuple(_equivariant_tuples(self.objects[i], self.objects[j]))
        return self._homs[(i, j)]

    def hom_maps(self, i, j):
        """Morphisms as EquivariantMap objects; refuses oversized lazy pairs."""
        if self._pair_is_lazy(i, j) and self.hom_raw_size(i, j) > 100_000:
            raise SizingError("hom set between %r and %r is too large to materialize"
                              % (self.names[i], self.names[j]))
        return equivariant_maps(self.objects[i], self.objects[j])


def coset_action(m, sub_elements):
    """Left translation on left cosets of a subgroup; labels are the cosets."""
    subset = tuple(sorted(sub_elements))
    label_of = {}
    for a in m.elements:
        coset = frozenset(m.mul(a, s) for s in subset)
        label_of[a] = "{%s}" % ",".join(sorted(coset))
    carrier = FinSet(sorted(set(label_of.values())), check=False)
    rep = {}
    for a in m.elements:
        rep.setdefault(label_of[a], a)
    act = {}
    for a in m.elements:
        for c in carrier:
            act[(a, c)] = label_of[m.mul(a, rep[c])]
    return MAction(m, carrier, act)


def canonical_site(m, recipe, custom=()):
    """Assemble a site from '+'-joined builder names.

    Builders: 'free' (the monoid on itself, paired with a point), 'trivial'
    (a one-point trivial action), 'cosets' (left cosets of every subgroup;
    groups only).  Extra named actions come in through `custom`.
    """
    objects = []
    for token in recipe.split("+"):
        token = token.strip()
        if token == "free":
            objects.append(("F(1)", free_action(m, singleton())))
        elif token == "trivial":
            objects.append(("E(1)", trivial_action(m, singleton())))
        elif token == "cosets":
            if not is_hopf(m):
                raise ActionError("coset site needs a group; %r has no inverse"
                                  % hopf_witness(m))
            for S, _ in enumerate_subgroups(m):
                name = "G/{%s}" % ",".join(S.elements)
                objects.append((name, coset_action(m, S.elements)))
        elif token == "custom":
            objects.extend(custom)
        else:
            raise ActionError("unknown site builder %r" % token)
    return Site(m, objects)


@lru_cache(maxsize=None)
def default_site(m):
    """Cosets plus the free object for groups; free plus trivial otherwise."""
    if is_hopf(m):
        return canonical_site(m, "cosets+free")
    return canonical_site(m, "free+trivial")


def underlying_site(site):
    """The site of underlying carriers: trivial actions of the one-point
    monoid on the distinct carriers, with the index map from `site`."""
    t = trivial_monoid()
    carriers = []
    for act in site.objects:
        if act.carrier not in carriers:
            carriers.append(act.carrier)
    carriers.sort(key=lambda c: (len(c), c.elements))
    base = Site(t, [("X%d" % i, trivial_action(t, c)) for i, c in enumerate(carriers)])
    ob_map = tuple(carriers.index(act.carrier) for act in site.objects)
    return base, ob_map
