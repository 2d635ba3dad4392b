"""Ends of hom diagrams over a site, as concrete finite carriers.

The carrier of [V, W] collects one map V(M) -> W(M) per site object,
subject to the wedge condition against every site morphism.  Families are
found by filtering each object's candidates against its own endomorphisms
and then extending across objects with incremental wedge checks; this
visits no more assignments than the product of the filtered candidate
counts, which is what the sizing guard bounds.

When V = W the end is a monoid under componentwise composition, and a
monoid map into End[U] (U the underlying-carrier diagram) is exactly an
action of its source on every site object at once.
"""

import itertools
from functools import lru_cache

from .finset import (FinSet, FinMap, SizingError, MAX_ENUMERATION, map_label,
                     exponential, product, proj_right, curry, singleton, terminal_map)
from .monoid import Monoid, MonoidHom
from .actions import Site, trivial_action, underlying_site


class EndError(Exception):
    """Structural error in a diagram, functor, or end computation."""


class SiteDiagram:
    """A functor from a site into finite sets.

    Subclasses provide obs (one carrier per site object) and mor(i, j, f),
    the image of the site morphism with carrier-index tuple f, again as an
    index tuple over the object carriers.
    """

    site = None
    obs = None

    def mor(self, i, j, f):
        raise NotImplementedError

    def __eq__(self, other):
        return (isinstance(other, SiteDiagram) and self.site == other.site
                and self.obs == other.obs and self._mor_key() == other._mor_key())

    def __hash__(self):
        return hash((self.site, tuple(self.obs), self._mor_key()))

    def _mor_key(self):
        return type(self).__name__


class ForgetfulDiagram(SiteDiagram):
    """Underlying carriers; morphisms pass through unchanged."""

    def __init__(self, site):
        self.site = site
        self.obs = [act.carrier for act in site.objects]

    def mor(self, i, j, f):
        return f


class SubsetDiagram(SiteDiagram):
    """Chosen subsets of the carriers; morphisms restrict.

    The caller is responsible for naturality; a morphism that carries a
    chosen element outside the chosen subset is reported as an error here.
    """

    def __init__(self, site, subsets):
        self.site = site
        self.obs = []
        self._embed = []
        self._back = []
        for i, chosen in enumerate(subsets):
            carrier = site.objects[i].carrier
            sub = FinSet(chosen, check=False)
            for x in sub:
                if x not in carrier:
                    raise EndError("subset element %r is not in site object %r"
                                   % (x, site.names[i]))
            self.obs.append(sub)
            self._embed.append(tuple(carrier.index(x) for x in sub))
            back = [None] * len(carrier)
            for p, x in enumerate(sub):
                back[carrier.index(x)] = p
            self._back.append(back)

    def mor(self, i, j, f):
        emb, back = self._embed[i], self._back[j]
        out = []
        for p in range(len(self.obs[i])):
            q = back[f[emb[p]]]
            if q is None:
                raise EndError("subsets are not closed under the site morphisms")
            out.append(q)
        return tuple(out)

    def _mor_key(self):
        return ("subset",) + tuple(self._embed)


class TableDiagram(SiteDiagram):
    """Explicit functor data, validated for functoriality on construction."""

    def __init__(self, site, obs, tables):
        for i in range(site.nobj):
            if site.hom_raw_size(i, i) > 100_000:
                raise SizingError("site too large for explicit functor tables")
        self.site = site
        self.obs = list(obs)
        self.tables = tables
        for i, j in itertools.product(range(site.nobj), repeat=2):
            for f in site.iter_hom_tuples(i, j):
                img = tables.get((i, j), {}).get(f)
                if img is None or len(img) != len(self.obs[i]):
                    raise EndError("functor data missing or misshapen on a morphism %r -> %r"
                                   % (site.names[i], site.names[j]))
                if any(q >= len(self.obs[j]) for q in img):
                    raise EndError("functor data escapes the target carrier")
        for i in range(site.nobj):
            ident = tuple(range(len(site.objects[i].carrier)))
            if tables[(i, i)][ident] != tuple(range(len(self.obs[i]))):
                raise EndError("functor data does not preserve the identity at %r"
                               % site.names[i])
        for i, j, k in itertools.product(range(site.nobj), repeat=3):
            for f in site.iter_hom_tuples(i, j):
                for g in site.iter_hom_tuples(j, k):
                    comp = tuple(g[p] for p in f)
                    left = tables[(i, k)][comp]
                    right = tuple(tables[(j, k)][g][p] for p in tables[(i, j)][f])
                    if left != right:
                        raise EndError("functor data breaks composition across %r -> %r -> %r"
                                       % (site.names[i], site.names[j], site.names[k]))

    def mor(self, i, j, f):
        return self.tables[(i, j)][f]

    def _mor_key(self):
        return ("table", tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.tables.items())))


class EndObject:
    """The end of [V, W]: wedge families with per-object projections."""

    def __init__(self, site, V, W, families):
        self.site = site
        self.V = V
        self.W = W
        self.families = tuple(families)
        labels = []
        for fam in self.families:
            comps = []
            for i in range(site.nobj):
                ws = W.obs[i].elements
                comps.append(map_label(V.obs[i].elements, tuple(ws[q] for q in fam[i])))
            labels.append("(%s)" % ",".join(comps))
        self.carrier = FinSet(labels, check=False)
        self.family_of = dict(zip(labels, self.families))
        self.elem_of = dict(zip(self.families, labels))
        self._monoid = None
        self._projections = {}

    def __len__(self):
        return len(self.families)

    def __repr__(self):
        return "EndObject(%d families over %r)" % (len(self.families), self.site)

    def component_images(self, elem, i):
        """The i-th component of a family, as a tuple of target elements."""
        ws = self.W.obs[i].elements
        return tuple(ws[q] for q in self.family_of[elem][i])

    def projection(self, i):
        """The map into [V(M_i), W(M_i)] reading off the i-th component."""
        if i not in self._projections:
            E = exponential(self.V.obs[i], self.W.obs[i])
            table = {elem: E.map_element(self.component_images(elem, i))
                     for elem in self.carrier}
            self._projections[i] = FinMap(self.carrier, E, table)
        return self._projections[i]

    def monoid(self):
        """Componentwise composition; defined when V and W coincide."""
        if self._monoid is None:
            if self.V.obs != self.W.obs:
                raise EndError("only an end of a self-hom diagram is a monoid")
            unit_fam = tuple(tuple(range(len(ob))) for ob in self.V.obs)
            if unit_fam not in self.elem_of:
                raise EndError("identity family fails the wedge condition")
            table = {}
            for fam_f, ef in self.elem_of.items():
                for fam_g, eg in self.elem_of.items():
                    comp = tuple(tuple(ti[q] for q in tj)
                                 for ti, tj in zip(fam_f, fam_g))
                    if comp not in self.elem_of:
                        raise EndError("families are not closed under composition")
                    table[(ef, eg)] = self.elem_of[comp]
            self._monoid = Monoid(self.carrier, self.elem_of[unit_fam], table)
        return self._monoid


def internal_nat(V, W, max_families=MAX_ENUMERATION):
    """Compute the end of [V, W] over the diagrams' common site."""
    site = V.site
    if site != W.site:
        raise EndError("both diagrams must live over the same site")
    k = site.nobj
    vsize = [len(ob) for ob in V.obs]
    wsize = [len(ob) for ob in W.obs]

    cands = []
    for i in range(k):
        raw = wsize[i] ** vsize[i] if vsize[i] else 1
        if raw > max_families:
            raise SizingError("object %r alone carries %d candidate maps"
                              % (site.names[i], raw))
        kept = []
        rng = range(vsize[i])
        for t in itertools.product(range(wsize[i]), repeat=vsize[i]):
            ok = True
            for f in site.iter_hom_tuples(i, i):
                Vf = V.mor(i, i, f)
                Wf = W.mor(i, i, f)
                for p in rng:
                    if t[Vf[p]] != Wf[t[p]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                kept.append(t)
        cands.append(kept)

    total = 1
    for kept in cands:
        total *= len(kept)
    if total > max_families:
        raise SizingError("%d candidate families exceed the guard of %d"
                          % (total, max_families))

    # translated morphism actions, cached for pairs with materialized homs
    pair_mors = {}

    def mors(j, i):
        if site._pair_is_lazy(j, i):
            return ((V.mor(j, i, f), W.mor(j, i, f))
                    for f in site.iter_hom_tuples(j, i))
        if (j, i) not in pair_mors:
            pair_mors[(j, i)] = tuple((V.mor(j, i, f), W.mor(j, i, f))
                                      for f in site.iter_hom_tuples(j, i))
        return pair_mors[(j, i)]

    families = []
    assign = [None] * k

    def fits(i, t):
        for j in range(i):
            tj = assign[j]
            for Vf, Wf in mors(j, i):
                for p in range(vsize[j]):
                    if Wf[tj[p]] != t[Vf[p]]:
                        return False
            for Vf, Wf in mors(i, j):
                for p in range(vsize[i]):
                    if Wf[t[p]] != tj[Vf[p]]:
                        return False
        return True

    def rec(i):
        if i == k:
            families.append(tuple(assign))
            return
        for t in cands[i]:
            if fits(i, t):
                assign[i] = t
                rec(i + 1)
                assign[i] = None

    rec(0)
    return EndObject(site, V, W, families)


@lru_cache(maxsize=None)
def end_of_forgetful(site, max_families=MAX_ENUMERATION):
    U = ForgetfulDiagram(site)
    return internal_nat(U, U, max_families)


def end_monoid(end):
    """The end of a self-hom diagram as a monoid."""
    return end.monoid()


class SiteFunctor:
    """An object reindexing between sites that keeps carriers and maps as
    they are; each source morphism must already be a target morphism."""

    def __init__(self, src, dst, ob_map, check=True):
        if len(ob_map) != src.nobj:
            raise EndError("object map must cover the source site")
        for i, gi in enumerate(ob_map):
            if src.objects[i].carrier != dst.objects[gi].carrier:
                raise EndError("functor must preserve the carrier of %r" % src.names[i])
        if check:
            for i, j in itertools.product(range(src.nobj), repeat=2):
                gi, gj = ob_map[i], ob_map[j]
                if dst._pair_is_lazy(gi, gj):
                    continue  # every map is a morphism there
                allowed = set(dst._filtered(gi, gj))
                for f in src.iter_hom_tuples(i, j):
                    if f not in allowed:
                        raise EndError("a morphism %r -> %r is not a morphism downstairs"
                                       % (src.names[i], src.names[j]))
        self.src = src
        self.dst = dst
        self.ob_map = tuple(ob_map)

    def __repr__(self):
        return "SiteFunctor(%r -> %r)" % (self.src, self.dst)


def restrict_end(end, functor, max_families=MAX_ENUMERATION, target_end=None):
    """Restrict a self-hom end along a site functor into its site.

    Returns the monoid map End[W] -> End[W o G] that drops the components
    the functor does not reach.
    """
    if functor.dst != end.site:
        raise EndError("functor must land in the end's site")
    if target_end is None:
        target_end = end_of_forgetful(functor.src, max_families)
    for i, gi in enumerate(functor.ob_map):
        if target_end.V.obs[i] != end.V.obs[gi] or target_end.W.obs[i] != end.W.obs[gi]:
            raise EndError("restriction target disagrees on object %r" % functor.src.names[i])
    table = {}
    for fam, elem in end.elem_of.items():
        sub = tuple(fam[gi] for gi in functor.ob_map)
        if sub not in target_end.elem_of:
            raise EndError("a restricted family fails the wedge condition downstairs")
        table[elem] = target_end.elem_of[sub]
    return MonoidHom(end.monoid(), target_end.monoid(), table)


def reconstruction_hom(m, site, end=None, max_families=MAX_ENUMERATION):
    """The monoid map sending a in m to the family (x -> a.x) over the site."""
    if end is None:
        end = end_of_forgetful(site, max_families)
    table = {}
    for a in m.elements:
        fam = tuple(act.index_table()[a] for act in site.objects)
        if fam not in end.elem_of:
            raise EndError("the action family of %r fails the wedge condition" % a)
        table[a] = end.elem_of[fam]
    return MonoidHom(m, end.monoid(), table)


def reconstruction_composite_check(m, site, end=None):
    """Acting through the reconstruction map reproduces every action table."""
    if end is None:
        end = end_of_forgetful(site)
    rho = reconstruction_hom(m, site, end=end)
    for i, act in enumerate(site.objects):
        xs = act.carrier.elements
        for a in m.elements:
            fam = end.family_of[rho(a)]
            for p, x in enumerate(xs):
                if xs[fam[i][p]] != act.apply(a, x):
                    return False
    return True


def trivial_path(m, site, end=None, max_families=MAX_ENUMERATION):
    """The composite A -> 1 -> End[carriers] -> End[U]: every element goes
    to the identity family, reached through the underlying-carrier site."""
    if end is None:
        end = end_of_forgetful(site, max_families)
    base, ob_map = underlying_site(site)
    base_end = end_of_forgetful(base, max_families)
    down = SiteFunctor(site, base, ob_map)
    r = restrict_end(base_end, down, max_families, target_end=end)
    eps = terminal_map(m.carrier)
    eta = FinMap(singleton(), base_end.carrier, {"*": base_end.monoid().unit})
    return r.map * eta * eps


def extend_with_trivials(site):
    """The site plus a trivial action on every carrier it mentions, and the
    functor data of both directions of the extension."""
    base, _ = underlying_site(site)
    objects = list(zip(site.names, site.objects))
    into = []
    for i, b in enumerate(base.objects):
        t = trivial_action(site.monoid, b.carrier)
        hit = None
        for j, act in enumerate(site.objects):
            if act == t:
                hit = j
                break
        if hit is None:
            hit = len(objects)
            objects.append(("E(X%d)" % i, t))
        into.append(hit)
    extended = Site(site.monoid, objects)
    carriers = [b.carrier for b in base.objects]
    down = tuple(carriers.index(act.carrier) for _, act in objects)
    return extended, base, tuple(into), down


def augmentation_square_check(m, site, max_families=MAX_ENUMERATION):
    """Two identities of the underlying-carrier restriction.

    First: restricting to carriers and coming back along the trivial-action
    section is the identity on the carrier end.  Second: the trivial path
    agrees with the family of curried projections A x X -> X, object by
    object.  Both are checked elementwise.
    """
    extended, base, into, down = extend_with_trivials(site)
    end_up = end_of_forgetful(extended, max_families)
    end_base = end_of_forgetful(base, max_families)
    to_up = restrict_end(end_base, SiteFunctor(extended, base, down),
                         max_families, target_end=end_up)
    back = restrict_end(end_up, SiteFunctor(base, extended, into),
                        max_families, target_end=end_base)
    ident = FinMap.identity(end_base.carrier)
    if back.map * to_up.map != ident:
        return False
    eps = terminal_map(m.carrier)
    eta = FinMap(singleton(), end_base.carrier, {"*": end_base.monoid().unit})
    by_path = to_up.map * eta * eps
    for a in m.elements:
        comps = []
        for act in extended.objects:
            X = act.carrier
            P = product(m.carrier, X)
            dropped = curry(proj_right(P))  # A -> [X, X], constantly the identity
            comps.append(dropped(a))
        if by_path(a) != "(%s)" % ",".join(comps):
            return False
    return True


def family_restriction(end, sub, max_families=MAX_ENUMERATION):
    """Precompose a self-hom end with a subset diagram of its source.

    Returns the carrier map End[U] -> End[sub, U] together with the end it
    lands in; each component is the original one restricted to the subset,
    so the projection squares commute by the very same table.
    """
    if sub.site != end.site:
        raise EndError("subset diagram must live over the end's site")
    target = internal_nat(sub, end.W, max_families)
    table = {}
    for fam, elem in end.elem_of.items():
        parts = []
        for i, emb in enumerate(sub._embed):
            parts.append(tuple(fam[i][p] for p in emb))
        cut = tuple(parts)
        if cut not in target.elem_of:
            raise EndError("a restricted family fails the wedge condition")
        table[elem] = target.elem_of[cut]
    return FinMap(end.carrier, target.carrier, table), target
