"""Command line driver: JSON in, JSON (or DOT) out, deterministic bytes.

Exit codes: 0 success, 1 invalid input (schema or axiom), 2 a sizing guard
refused to enumerate.  Every JSON report carries schema "galmon/1".
"""

import argparse
import json
import os
import random
import sys

from .finset import FinSet, FinSetError, SizingError, MAX_ENUMERATION
from .monoid import (Monoid, MonoidHom, MonoidError, validate_monoid,
                     enumerate_submonoids, enumerate_subgroups,
                     is_hopf, hopf_witness, antipode, kernel_pairs)
from .actions import (MAction, ActionError, Site, validate_action,
                      canonical_site, default_site, coinduct)
from .ends import EndError, end_of_forgetful, end_monoid, reconstruction_hom
from .galois import (GaloisError, Subfunctor, invariants, invariants_oracle,
                     stabilizer, stabilizer_via_end, galois_correspondence,
                     connection_law_failures, random_subfunctor)

SCHEMA = "galmon/1"


class InputError(Exception):
    """A file failed the published schema; the message names the cell."""


def _load(path):
    try:
        with open(path) as fd:
            return json.load(fd)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror))
    except json.JSONDecodeError as exc:
        raise InputError("%s is not JSON: %s" % (path, exc))


def _field(doc, key, kind, where):
    if key not in doc:
        raise InputError("%s is missing %r" % (where, key))
    if not isinstance(doc[key], kind):
        raise InputError("%s field %r has the wrong shape" % (where, key))
    return doc[key]


def parse_monoid(doc, where="monoid file"):
    """Read {"elements": [...], "unit": ..., "table": {a: {b: ab}}}."""
    elements = _field(doc, "elements", list, where)
    unit = _field(doc, "unit", str, where)
    rows = _field(doc, "table", dict, where)
    table = {}
    for a in elements:
        if a not in rows:
            raise InputError("%s table is missing row %r" % (where, a))
        row = rows[a]
        if not isinstance(row, dict):
            raise InputError("%s table row %r has the wrong shape" % (where, a))
        for b in elements:
            if b not in row:
                raise InputError("%s table row %r is missing column %r" % (where, a, b))
            table[(a, b)] = row[b]
    return Monoid(FinSet(elements), unit, table)


def parse_action(doc, m, where="action file"):
    """Read {"set": [...], "act": {a: {x: ax}}} over the given monoid."""
    carrier = _field(doc, "set", list, where)
    rows = _field(doc, "act", dict, where)
    act = {}
    for a in m.elements:
        if a not in rows:
            raise InputError("%s act is missing row %r" % (where, a))
        row = rows[a]
        if not isinstance(row, dict):
            raise InputError("%s act row %r has the wrong shape" % (where, a))
        for x in carrier:
            if x not in row:
                raise InputError("%s act row %r is missing column %r" % (where, a, x))
            act[(a, x)] = row[x]
    return MAction(m, FinSet(carrier), act)


def parse_subfunctor(doc, site, where="subfunctor file"):
    """Read {"subsets": {"<object-name>": [...]}}; omitted objects are empty."""
    subsets = _field(doc, "subsets", dict, where)
    for name, chosen in subsets.items():
        if not isinstance(chosen, list):
            raise InputError("%s subset %r has the wrong shape" % (where, name))
    return Subfunctor(site, {k: tuple(v) for k, v in subsets.items()})


def parse_hom(doc, dst, where="hom file"):
    """Read {"src": {...monoid...}, "map": {b: a}} into the given target."""
    src = parse_monoid(_field(doc, "src", dict, where), where="%s src" % where)
    bad = validate_monoid(src)
    if bad:
        raise InputError("%s src is not a monoid: %s" % (where, bad[0]))
    table = _field(doc, "map", dict, where)
    for b in src.elements:
        if b not in table:
            raise InputError("%s map is missing %r" % (where, b))
    return MonoidHom(src, dst, {b: table[b] for b in src.elements})


def _site_for(m, spec, extra_actions=()):
    if spec == "default":
        return default_site(m)
    tokens = []
    custom = list(extra_actions)
    for token in spec.split("+"):
        token = token.strip()
        if token.startswith("custom:"):
            directory = token[len("custom:"):]
            try:
                names = sorted(f for f in os.listdir(directory) if f.endswith(".json"))
            except OSError as exc:
                raise InputError("cannot list %s: %s" % (directory, exc.strerror))
            for fname in names:
                doc = _load(os.path.join(directory, fname))
                custom.append((fname[:-len(".json")],
                               parse_action(doc, m, where=fname)))
            tokens.append("custom")
        else:
            tokens.append(token)
    return canonical_site(m, "+".join(tokens), custom=custom)


def _require(args, flag):
    value = getattr(args, flag.lstrip("-").replace("-", "_"))
    if value is None:
        raise InputError("this command needs %s" % flag)
    return value


def _monoid_from(args):
    doc = _load(_require(args, "--monoid"))
    m = parse_monoid(doc)
    bad = validate_monoid(m)
    if bad:
        raise InputError("monoid file violates the laws: %s" % bad[0])
    return m


def _actions_from(args, m):
    out = []
    for path in args.action or []:
        name = os.path.splitext(os.path.basename(path))[0]
        out.append((name, parse_action(_load(path), m, where=path)))
    return out


def cmd_validate(args):
    doc = _load(_require(args, "--monoid"))
    m = parse_monoid(doc)
    report = {"schema": SCHEMA, "command": "validate",
              "monoid": {"elements": list(m.elements), "unit": m.unit},
              "violations": validate_monoid(m), "actions": {}}
    for path in args.action or []:
        name = os.path.splitext(os.path.basename(path))[0]
        act = parse_action(_load(path), m, where=path)
        report["actions"][name] = {"set": list(act.carrier.elements),
                                   "violations": validate_action(act)}
    bad = bool(report["violations"]) or any(
        entry["violations"] for entry in report["actions"].values())
    return (1 if bad else 0), report


def cmd_subgroups(args):
    m = _monoid_from(args)
    return 0, {"schema": SCHEMA, "command": "subgroups",
               "submonoids": [list(S.elements) for S, _ in enumerate_submonoids(m)],
               "subgroups": [list(S.elements) for S, _ in enumerate_subgroups(m)]}


def cmd_hopf(args):
    m = _monoid_from(args)
    report = {"schema": SCHEMA, "command": "hopf", "hopf": is_hopf(m)}
    if report["hopf"]:
        s = antipode(m)
        report["antipode"] = {a: s(a) for a in m.elements}
        report["witness"] = None
    else:
        report["antipode"] = None
        report["witness"] = hopf_witness(m)
    return 0, report


def cmd_inv(args):
    m = _monoid_from(args)
    site = _site_for(m, args.site, _actions_from(args, m))
    h = parse_hom(_load(_require(args, "--hom")), m)
    V = invariants(h, site)
    O = invariants_oracle(h, site)
    return 0, {"schema": SCHEMA, "command": "inv",
               "hom": {"src": list(h.src.elements),
                       "map": {b: h(b) for b in h.src.elements}},
               "site": list(site.names),
               "invariants": V.as_dict(), "oracle": O.as_dict(),
               "agree": V == O}


def cmd_stab(args):
    m = _monoid_from(args)
    site = _site_for(m, args.site, _actions_from(args, m))
    V = parse_subfunctor(_load(_require(args, "--sub")), site)
    S, _ = stabilizer(V)
    T = stabilizer_via_end(V, max_families=args.max_families)
    return 0, {"schema": SCHEMA, "command": "stab",
               "site": list(site.names), "subfunctor": V.as_dict(),
               "stabilizer": list(S.elements),
               "stabilizer_via_end": list(T.elements),
               "agree": S.elements == T.elements}


def cmd_end(args):
    m = _monoid_from(args)
    site = _site_for(m, args.site, _actions_from(args, m))
    end = end_of_forgetful(site, args.max_families)
    E = end_monoid(end)
    rho = reconstruction_hom(m, site, end=end)
    return 0, {"schema": SCHEMA, "command": "end",
               "site": list(site.names),
               "families": list(end.carrier.elements),
               "size": len(end),
               "unit": E.unit,
               "reconstruction": {"map": {a: rho(a) for a in m.elements},
                                  "injective": rho.is_injective(),
                                  "isomorphism": rho.is_isomorphism(),
                                  "kernel_pairs": [list(p) for p in kernel_pairs(rho)]}}


def cmd_corr(args):
    m = _monoid_from(args)
    site = _site_for(m, args.site, _actions_from(args, m))
    report = galois_correspondence(m, site)
    report["command"] = "corr"
    if args.out == "dot":
        return 0, _corr_dot(report)
    return 0, report


def cmd_coinduce(args):
    m = _monoid_from(args)
    h = parse_hom(_load(_require(args, "--hom")), m)
    paths = args.action or []
    if not paths:
        raise InputError("this command needs --action")
    N = parse_action(_load(paths[0]), h.src, where=paths[0])
    K = coinduct(h, N)
    return 0, {"schema": SCHEMA, "command": "coinduce",
               "monoid": list(m.elements),
               "set": list(K.carrier.elements),
               "act": {a: {x: K.apply(a, x) for x in K.carrier}
                       for a in m.elements}}


def cmd_laws(args):
    m = _monoid_from(args)
    site = _site_for(m, args.site, _actions_from(args, m))
    rng = random.Random(args.seed)
    extras = [random_subfunctor(site, rng) for _ in range(3)]
    failures = connection_law_failures(m, site, extra_subfunctors=extras)
    return 0, {"schema": SCHEMA, "command": "laws",
               "site": list(site.names), "seed": args.seed,
               "extra_subfunctors": [V.as_dict() for V in extras],
               "failures": failures, "ok": not failures}


def _hasse_edges(keys, below):
    """Cover relations of a finite order given its full comparison test."""
    edges = []
    for a in keys:
        for b in keys:
            if a == b or not below(a, b):
                continue
            if any(c not in (a, b) and below(a, c) and below(c, b) for c in keys):
                continue
            edges.append((a, b))
    return edges


def _corr_dot(report):
    subs = [tuple(s) for s in report["closed_submonoids"]]
    vs = report["closed_subfunctors"]
    pair_of = {tuple(entry["submonoid"]): vs.index(entry["subfunctor"])
               for entry in report["bijection"]}
    lines = ["digraph correspondence {", "  rankdir=BT;"]
    lines.append("  subgraph cluster_submonoids {")
    lines.append('    label="closed submonoids";')
    for i, s in enumerate(subs):
        lines.append('    S%d [label="{%s}"];' % (i, ",".join(s)))
    for a, b in _hasse_edges(subs, lambda a, b: set(a) < set(b)):
        lines.append("    S%d -> S%d;" % (subs.index(a), subs.index(b)))
    lines.append("  }")
    lines.append("  subgraph cluster_subfunctors {")
    lines.append('    label="closed subfunctors";')

    def vbelow(a, b):
        return a != b and all(set(a[k]) <= set(b[k]) for k in a)

    for i, v in enumerate(vs):
        sizes = "/".join(str(len(v[name])) for name in report["site"])
        lines.append('    V%d [label="sizes %s"];' % (i, sizes))
    for a, b in _hasse_edges(list(range(len(vs))), lambda i, j: vbelow(vs[i], vs[j])):
        lines.append("    V%d -> V%d;" % (a, b))
    lines.append("  }")
    for i, s in enumerate(subs):
        lines.append("  S%d -> V%d [style=dashed, dir=none];" % (i, pair_of[s]))
    lines.append("}")
    return "\n".join(lines) + "\n"


COMMANDS = {
    "validate": cmd_validate,
    "subgroups": cmd_subgroups,
    "hopf": cmd_hopf,
    "inv": cmd_inv,
    "stab": cmd_stab,
    "end": cmd_end,
    "corr": cmd_corr,
    "coinduce": cmd_coinduce,
    "laws": cmd_laws,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="galmon",
        description="invariants and stabilizers of finite monoid actions")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, doc in [
            ("validate", "check a monoid table and any actions against the laws"),
            ("subgroups", "list all submonoids and subgroups"),
            ("hopf", "test for a group structure and print the antipode"),
            ("inv", "invariants of a hom, equalizer route and oracle"),
            ("stab", "stabilizer of a subfunctor, direct and through the end"),
            ("end", "the end of the underlying-carrier diagram and reconstruction"),
            ("corr", "the full closed-object correspondence"),
            ("coinduce", "the coinduced action along a hom"),
            ("laws", "the connection laws over a site")]:
        p = sub.add_parser(name, help=doc)
        p.add_argument("--monoid", help="monoid JSON file")
        p.add_argument("--action", action="append", help="action JSON file (repeatable)")
        p.add_argument("--site", default="default",
                       help="default | free | cosets | trivial | a+b | custom:<dir>")
        p.add_argument("--sub", help="subfunctor JSON file")
        p.add_argument("--hom", help="hom JSON file")
        p.add_argument("--out", choices=["json", "dot"], default="json")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-families", type=int, default=MAX_ENUMERATION,
                       dest="max_families")
    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code, payload = COMMANDS[args.command](args)
    except SizingError as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc)},
                         sort_keys=True, indent=2))
        return 2
    except (InputError, FinSetError, MonoidError, ActionError, EndError, GaloisError) as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc)},
                         sort_keys=True, indent=2))
        return 1
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
