"""Finite sets and total maps: the ambient cartesian closed category.

Elements are plain strings.  Carriers built by product() and exponential()
remember how their elements were assembled, so currying and uncurrying can
decode them without string parsing.  Every constructor sorts elements into
a single canonical order and every operation here is pure.
"""

import itertools
from functools import lru_cache

ARROW = "↦"  # separates argument from image in function-element labels

# Hard ceiling on any single enumerated carrier or hom scan.
MAX_ENUMERATION = 10_000_000


class FinSetError(Exception):
    """Structural error in a finite-set construction."""


class SizingError(Exception):
    """An enumeration would exceed the configured ceiling."""


_OPENERS = {"(": ")", "{": "}"}
_CLOSERS = {")": "(", "}": "{"}


def check_symbol(sym):
    """Reject symbols that would make pair or function labels ambiguous."""
    if not isinstance(sym, str) or sym == "":
        raise FinSetError("element symbol must be a nonempty string: %r" % (sym,))
    stack = []
    for ch in sym:
        if ch in _OPENERS:
            stack.append(ch)
        elif ch in _CLOSERS:
            if not stack or stack[-1] != _CLOSERS[ch]:
                raise FinSetError("unbalanced brackets in symbol %r" % sym)
            stack.pop()
        elif not stack and (ch == "," or ch == ARROW):
            raise FinSetError("symbol %r contains a top-level %r" % (sym, ch))
    if stack:
        raise FinSetError("unbalanced brackets in symbol %r" % sym)


def split_top(s):
    """Split at commas that sit outside every bracket."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch in _OPENERS:
            depth += 1
        elif ch in _CLOSERS:
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(s[start:i])
            start = i + 1
    parts.append(s[start:])
    return parts


def pair_label(x, y):
    return "(%s,%s)" % (x, y)


def map_label(xs, ys):
    """Canonical label of the function sending xs[i] to ys[i]."""
    return "{%s}" % ",".join(x + ARROW + y for x, y in zip(xs, ys))


class FinSet:
    """An ordered finite set of distinct symbols."""

    def __init__(self, elements=(), check=True):
        elems = tuple(sorted(elements))
        if len(set(elems)) != len(elems):
            dup = sorted(e for e in set(elems) if list(elems).count(e) > 1)
            raise FinSetError("duplicate element symbol %r" % dup[0])
        if check:
            for e in elems:
                check_symbol(e)
        self.elements = elems
        self._lookup = {x: i for i, x in enumerate(elems)}
        self._hash = None
        # structure metadata, set by product()/exponential(); never compared
        self._pairs = None     # elem -> (left, right)
        self._factors = None   # (left FinSet, right FinSet)
        self._graph = None     # elem -> tuple of images over _base.elements
        self._enc = None       # images tuple -> elem
        self._base = None
        self._target = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._lookup

    def index(self, x):
        return self._lookup[x]

    def __eq__(self, other):
        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.elements)
        return self._hash

    def __repr__(self):
        body = ",".join(self.elements[:6])
        if len(self.elements) > 6:
            body += ",...[%d]" % len(self.elements)
        return "FinSet{%s}" % body

    @property
    def is_product(self):
        return self._pairs is not None

    @property
    def is_exponential(self):
        return self._graph is not None

    def pair_parts(self, elem):
        """Decode an element of a product carrier."""
        if self._pairs is None:
            raise FinSetError("%r is not a product carrier" % self)
        return self._pairs[elem]

    def map_images(self, elem):
        """Images of a function element, in base order."""
        if self._graph is None:
            raise FinSetError("%r does not carry function elements" % self)
        return self._graph[elem]

    def map_apply(self, elem, x):
        """Evaluate a function element at a point of its base."""
        return self.map_images(elem)[self._base.index(x)]

    def map_element(self, images):
        """Encode a tuple of images, in base order, as a function element."""
        if self._enc is None:
            raise FinSetError("%r does not carry function elements" % self)
        try:
            return self._enc[tuple(images)]
        except KeyError:
            raise FinSetError("no function element with images %r" % (images,))


class FinMap:
    """A total map between finite sets, stored as an assignment table."""

    def __init__(self, dom, cod, assignment):
        missing = [x for x in dom if x not in assignment]
        if missing:
            raise FinSetError("map undefined at %r" % missing[0])
        table = {}
        for x in dom:
            y = assignment[x]
            if y not in cod:
                raise FinSetError("image %r of %r lies outside the codomain" % (y, x))
            table[x] = y
        if len(assignment) != len(table):
            extra = sorted(set(assignment) - set(table))
            raise FinSetError("assignment mentions %r outside the domain" % extra[0])
        self.dom = dom
        self.cod = cod
        self.assignment = table
        self._hash = None

    @classmethod
    def identity(cls, X):
        return cls(X, X, {x: x for x in X})

    def __call__(self, x):
        return self.assignment[x]

    def __mul__(self, other):
        """Composition, self after other."""
        if other.cod != self.dom:
            raise FinSetError("composition mismatch: %r then %r" % (other, self))
        return FinMap(other.dom, self.cod,
                      {x: self.assignment[y] for x, y in other.assignment.items()})

    def __eq__(self, other):
        return (isinstance(other, FinMap) and self.dom == other.dom
                and self.cod == other.cod and self.assignment == other.assignment)

    def __hash__(self):
        if self._hash is None:
            items = tuple(self.assignment[x] for x in self.dom)
            self._hash = hash((self.dom.elements, self.cod.elements, items))
        return self._hash

    def __repr__(self):
        items = ["%s%s%s" % (x, ARROW, y) for x, y in list(self.assignment.items())[:6]]
        if len(self.assignment) > 6:
            items.append("...[%d]" % len(self.assignment))
        return "FinMap{%s}" % ",".join(items)

    def is_injective(self):
        return len(set(self.assignment.values())) == len(self.dom)

    def is_bijection(self):
        return len(self.dom) == len(self.cod) and self.is_injective()

    def image_tuple(self):
        """Images in domain order; the canonical key of this map."""
        return tuple(self.assignment[x] for x in self.dom)


_SINGLETON = FinSet(("*",))


def singleton():
    """The terminal object: one element '*'."""
    return _SINGLETON


def terminal_map(X):
    return FinMap(X, _SINGLETON, {x: "*" for x in X})


@lru_cache(maxsize=None)
def product(X, Y):
    """Cartesian product with decodable pair elements."""
    if len(X) * len(Y) > MAX_ENUMERATION:
        raise SizingError("product of %d x %d elements exceeds the ceiling"
                          % (len(X), len(Y)))
    pairs = {}
    for x in X:
        for y in Y:
            pairs[pair_label(x, y)] = (x, y)
    P = FinSet(pairs, check=False)
    P._pairs = pairs
    P._factors = (X, Y)
    return P


def proj_left(P):
    X, _ = P._factors
    return FinMap(P, X, {p: xy[0] for p, xy in P._pairs.items()})


def proj_right(P):
    _, Y = P._factors
    return FinMap(P, Y, {p: xy[1] for p, xy in P._pairs.items()})


def pairing(f, g):
    """The unique map into product(f.cod, g.cod) with the given components."""
    if f.dom != g.dom:
        raise FinSetError("pairing needs a common domain")
    P = product(f.cod, g.cod)
    return FinMap(f.dom, P, {x: pair_label(f(x), g(x)) for x in f.dom})


@lru_cache(maxsize=None)
def exponential(X, Z):
    """Internal hom [X, Z]: all total maps as decodable function elements."""
    n = len(Z) ** len(X) if len(X) else 1
    if n > MAX_ENUMERATION:
        raise SizingError("exponential of size %d^%d exceeds the ceiling"
                          % (len(Z), len(X)))
    xs = X.elements
    graph, enc = {}, {}
    for images in itertools.product(Z.elements, repeat=len(xs)):
        e = map_label(xs, images)
        graph[e] = images
        enc[images] = e
    E = FinSet(graph, check=False)
    E._graph = graph
    E._enc = enc
    E._base = X
    E._target = Z
    return E


def curry(f):
    """Transpose f: Y x X -> Z into Y -> [X, Z]."""
    P = f.dom
    if not P.is_product:
        raise FinSetError("curry needs a product domain")
    Y, X = P._factors
    E = exponential(X, f.cod)
    table = {}
    for y in Y:
        images = tuple(f(pair_label(y, x)) for x in X)
        table[y] = E.map_element(images)
    return FinMap(Y, E, table)


def uncurry(g):
    """Transpose g: Y -> [X, Z] into Y x X -> Z."""
    E = g.cod
    if not E.is_exponential:
        raise FinSetError("uncurry needs function elements in the codomain")
    P = product(g.dom, E._base)
    table = {p: E.map_apply(g(y), x) for p, (y, x) in P._pairs.items()}
    return FinMap(P, E._target, table)


def evaluation(X, Z):
    """ev: [X, Z] x X -> Z."""
    E = exponential(X, Z)
    P = product(E, X)
    return FinMap(P, Z, {p: E.map_apply(phi, x) for p, (phi, x) in P._pairs.items()})


def equalizer(f, g):
    """The subset where f and g agree, with its inclusion."""
    if f.dom != g.dom or f.cod != g.cod:
        raise FinSetError("equalizer needs a parallel pair")
    kept = [x for x in f.dom if f(x) == g(x)]
    E = FinSet(kept, check=False)
    return E, FinMap(E, f.dom, {x: x for x in kept})


def hom_set(X, Y):
    """All total maps X -> Y in canonical table order."""
    n = len(Y) ** len(X) if len(X) else 1
    if n > MAX_ENUMERATION:
        raise SizingError("hom set of size %d^%d exceeds the ceiling"
                          % (len(Y), len(X)))
    xs = X.elements
    out = []
    for images in itertools.product(Y.elements, repeat=len(xs)):
        out.append(FinMap(X, Y, dict(zip(xs, images))))
    return out
