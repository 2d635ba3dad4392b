"""Regenerate the JSON fixtures in this directory from the built-in samples."""

import json
import os

from galmon import samples
from galmon.actions import default_site
from galmon.galois import invariants
from galmon.monoid import submonoid

HERE = os.path.dirname(os.path.abspath(__file__))


def monoid_doc(m):
    return {"elements": list(m.elements), "unit": m.unit,
            "table": {a: {b: m.mul(a, b) for b in m.elements} for a in m.elements}}


def action_doc(M):
    return {"set": list(M.carrier.elements),
            "act": {a: {x: M.apply(a, x) for x in M.carrier}
                    for a in M.monoid.elements}}


def hom_doc(h):
    return {"src": monoid_doc(h.src), "map": {b: h(b) for b in h.src.elements}}


def dump(name, doc):
    with open(os.path.join(HERE, name), "w") as fd:
        json.dump(doc, fd, sort_keys=True, indent=2)
        fd.write("\n")


def main():
    s3 = samples.symmetric3()
    z2 = samples.cyclic(2)
    for name, m in [("trivial", samples.cyclic(1)), ("z2", z2),
                    ("z3", samples.cyclic(3)), ("z4", samples.cyclic(4)),
                    ("e2", samples.idempotent_pair()), ("s3", s3)]:
        dump(name + ".json", monoid_doc(m))

    dump("s3_natural.json", action_doc(samples.natural_action3()))
    dump("z2_swap.json", action_doc(samples.swap_action()))

    a3, incl = submonoid(s3, ("e", "(123)", "(132)"))
    dump("a3_in_s3.json", hom_doc(incl))
    from galmon.monoid import MonoidHom
    dump("z2_in_s3.json", hom_doc(MonoidHom(z2, s3, {"e": "e", "g": "(12)"})))
    dump("a3_invariants.json", {"subsets": invariants(incl, default_site(s3)).as_dict()})


if __name__ == "__main__":
    main()
