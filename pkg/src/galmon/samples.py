"""A small catalog of concrete monoids and actions used in tests and demos."""

import itertools

from .finset import FinSet
from .monoid import Monoid, trivial_monoid
from .actions import MAction


def cyclic(n):
    """The cyclic group of order n, written e, g, g2, ..."""
    assert n >= 1
    names = ["e"] + ["g" if k == 1 else "g%d" % k for k in range(1, n)]
    table = {}
    for i, j in itertools.product(range(n), repeat=2):
        table[(names[i], names[j])] = names[(i + j) % n]
    return Monoid(FinSet(names), "e", table)


def klein_four():
    """The group Z2 x Z2 on e, a, b, c with every square trivial."""
    names = ["e", "a", "b", "c"]
    mul = {"e": {"e": "e", "a": "a", "b": "b", "c": "c"},
           "a": {"e": "a", "a": "e", "b": "c", "c": "b"},
           "b": {"e": "b", "a": "c", "b": "e", "c": "a"},
           "c": {"e": "c", "a": "b", "b": "a", "c": "e"}}
    return Monoid(FinSet(names), "e", {(x, y): mul[x][y] for x in names for y in names})


def _perm_name(p):
    # disjoint cycle notation over 1..n, identity spelled e
    seen, cycles = set(), []
    for start in sorted(p):
        if start in seen or p[start] == start:
            seen.add(start)
            continue
        cyc, q = [start], p[start]
        seen.add(start)
        while q != start:
            cyc.append(q)
            seen.add(q)
            q = p[q]
        cycles.append(cyc)
    if not cycles:
        return "e"
    return "".join("(%s)" % "".join(str(i) for i in c) for c in cycles)


def symmetric3():
    """The symmetric group on 1, 2, 3 in cycle notation, composing right to left."""
    points = (1, 2, 3)
    perms = [dict(zip(points, img)) for img in itertools.permutations(points)]
    names = {_perm_name(p): p for p in perms}
    table = {}
    for u, p in names.items():
        for v, q in names.items():
            table[(u, v)] = _perm_name({i: p[q[i]] for i in points})
    return Monoid(FinSet(names), "e", table)


def natural_action3():
    """S3 permuting the three points it is named after."""
    m = symmetric3()
    perms = {}
    for img in itertools.permutations((1, 2, 3)):
        p = dict(zip((1, 2, 3), img))
        perms[_perm_name(p)] = p
    act = {(name, str(i)): str(perms[name][i]) for name in m.elements for i in (1, 2, 3)}
    return MAction(m, FinSet(("1", "2", "3")), act)


def idempotent_pair():
    """The two-element monoid e, z with z*z = z; the smallest non-group."""
    names = ("e", "z")
    table = {("e", "e"): "e", ("e", "z"): "z", ("z", "e"): "z", ("z", "z"): "z"}
    return Monoid(FinSet(names), "e", table)


def left_zero_with_unit(n):
    """A unit adjoined to n left-zero elements: x*y = x off the unit."""
    assert n >= 1
    names = ["e"] + ["l%d" % k for k in range(n)]
    table = {}
    for x in names:
        for y in names:
            if x == "e":
                table[(x, y)] = y
            elif y == "e":
                table[(x, y)] = x
            else:
                table[(x, y)] = x
    return Monoid(FinSet(names), "e", table)


def right_zero_with_unit(n):
    """A unit adjoined to n right-zero elements: x*y = y off the unit."""
    assert n >= 1
    names = ["e"] + ["r%d" % k for k in range(n)]
    table = {}
    for x in names:
        for y in names:
            if x == "e":
                table[(x, y)] = y
            elif y == "e":
                table[(x, y)] = x
            else:
                table[(x, y)] = y
    return Monoid(FinSet(names), "e", table)


def nilpotent3():
    """e, n, 0 with n*n = 0 and 0 absorbing."""
    names = ("0", "e", "n")
    table = {}
    for x in names:
        for y in names:
            if x == "e":
                table[(x, y)] = y
            elif y == "e":
                table[(x, y)] = x
            else:
                table[(x, y)] = "0"
    return Monoid(FinSet(names), "e", table)


def mult_mod(n):
    """Integers modulo n under multiplication, unit 1."""
    assert n >= 2
    names = [str(k) for k in range(n)]
    table = {(str(i), str(j)): str(i * j % n)
             for i in range(n) for j in range(n)}
    return Monoid(FinSet(names), "1", table)


def swap_action():
    """The two-element group exchanging 0 and 1."""
    m = cyclic(2)
    act = {("e", "0"): "0", ("e", "1"): "1", ("g", "0"): "1", ("g", "1"): "0"}
    return MAction(m, FinSet(("0", "1")), act)


def groups_up_to_order_6():
    return [trivial_monoid(), cyclic(2), cyclic(3), cyclic(4), klein_four(),
            cyclic(5), cyclic(6), symmetric3()]


def nongroup_monoids():
    return [idempotent_pair(), left_zero_with_unit(2), right_zero_with_unit(2),
            nilpotent3(), mult_mod(3), mult_mod(4)]


def acceptance_fixtures():
    """The sweep used throughout: small groups plus the smallest non-group."""
    return [trivial_monoid(), cyclic(2), cyclic(3), cyclic(4),
            idempotent_pair(), symmetric3()]
