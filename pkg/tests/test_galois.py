import random

import pytest

from galmon.finset import FinSet
from galmon.monoid import MonoidHom, submonoid, trivial_monoid, enumerate_submonoids
from galmon.actions import Site, trivial_action, canonical_site, default_site
from galmon.galois import (GaloisError, Subfunctor, fixes, invariants,
                           invariants_oracle, stabilizer, stabilizer_via_end,
                           galois_correspondence, connection_laws,
                           connection_law_failures, enumerate_subfunctors,
                           random_subfunctor, Preorder, FiniteRelation,
                           representants)
from galmon import samples

Z2 = samples.cyclic(2)
Z4 = samples.cyclic(4)
E2 = samples.idempotent_pair()
S3 = samples.symmetric3()
SWAP = samples.swap_action()
NAT3 = samples.natural_action3()


def hom_from_subset(m, subset):
    _, incl = submonoid(m, subset)
    return incl


def s3_nat_site():
    return canonical_site(S3, "custom", custom=(("nat", NAT3),))


def test_subfunctor_validation():
    site = canonical_site(Z2, "free+trivial")
    V = Subfunctor(site, {"E(1)": ("*",)})
    assert V.component("F(1)") == ()
    with pytest.raises(GaloisError):
        Subfunctor(site, {"nosuch": ("*",)})
    with pytest.raises(GaloisError):
        Subfunctor(site, {"E(1)": ("zzz",)})
    with pytest.raises(GaloisError) as err:
        Subfunctor(site, {"F(1)": ("(e,*)",)})  # translation moves it
    assert "not natural" in str(err.value)


def test_subfunctor_order_and_extremes():
    site = canonical_site(Z2, "free+trivial")
    top = Subfunctor.full(site)
    bot = Subfunctor.empty(site)
    assert bot <= top and not top <= bot
    assert top.size() == 3 and bot.size() == 0
    assert top.as_dict() == {"F(1)": ["(e,*)", "(g,*)"], "E(1)": ["*"]}


def test_fixes_examples():
    site = canonical_site(Z2, "custom", custom=(("sw", SWAP),))
    whole = Subfunctor.full(site)
    one = trivial_monoid()
    assert fixes(MonoidHom(one, Z2, {"e": "e"}), whole)
    assert not fixes(MonoidHom.identity(Z2), whole)
    assert fixes(MonoidHom.identity(Z2), Subfunctor.empty(site))
    with pytest.raises(GaloisError):
        fixes(MonoidHom.identity(S3), whole)


def test_invariants_examples():
    site = s3_nat_site()
    assert invariants(MonoidHom.identity(S3), site).component("nat") == ()
    h = hom_from_subset(S3, ("e", "(12)"))
    assert invariants(h, site).component("nat") == ("3",)
    one = trivial_monoid()
    V = invariants(MonoidHom(one, S3, {"e": "e"}), site)
    assert V == Subfunctor.full(site)


def test_invariants_on_free_and_trivial_objects():
    site = canonical_site(Z2, "free+trivial")
    V = invariants(MonoidHom.identity(Z2), site)
    assert V.component("F(1)") == ()
    assert V.component("E(1)") == ("*",)


def test_invariants_match_oracle():
    for m, site in [(Z2, default_site(Z2)), (E2, default_site(E2)),
                    (S3, canonical_site(S3, "cosets"))]:
        for S, incl in enumerate_submonoids(m):
            assert invariants(incl, site) == invariants_oracle(incl, site)


def test_fixes_its_own_invariants():
    site = default_site(Z4)
    for S, incl in enumerate_submonoids(Z4):
        assert fixes(incl, invariants(incl, site))


def test_invariants_universal():
    site = canonical_site(Z2, "free+trivial+custom", custom=(("sw", SWAP),))
    h = MonoidHom.identity(Z2)
    Inv = invariants(h, site)
    for V in enumerate_subfunctors(site):
        if fixes(h, V):
            assert V <= Inv


def test_enumerate_subfunctors():
    site = canonical_site(Z2, "free+trivial")
    found = enumerate_subfunctors(site)
    assert len(found) == 3
    assert found[0] == Subfunctor.empty(site)
    assert found[-1] == Subfunctor.full(site)
    big = trivial_action(Z2, FinSet(tuple("x%02d" % i for i in range(20))))
    with pytest.raises(GaloisError):
        enumerate_subfunctors(Site(Z2, [("big", big)]))


def test_random_subfunctor_is_natural():
    rng = random.Random(11)
    for site in [default_site(Z2), default_site(E2), s3_nat_site()]:
        for _ in range(10):
            V = random_subfunctor(site, rng)  # constructor checks naturality
            assert V.site == site


def test_stabilizer_examples():
    coset_site = canonical_site(S3, "cosets")
    S, _ = stabilizer(Subfunctor.empty(coset_site))
    assert S.elements == S3.elements
    T, _ = stabilizer(Subfunctor.full(coset_site))
    assert T.elements == ("e",)
    h = hom_from_subset(S3, ("e", "(12)"))
    site = default_site(S3)
    W, _ = stabilizer(invariants(h, site))
    assert W.elements == ("(12)", "e")


def test_stabilizer_via_end_agrees():
    for m in [Z2, Z4, E2]:
        site = default_site(m)
        for S, incl in enumerate_submonoids(m):
            V = invariants(incl, site)
            direct, _ = stabilizer(V)
            assert stabilizer_via_end(V).elements == direct.elements


def test_stabilizer_over_empty_site():
    site = Site(Z4, [])
    S = stabilizer_via_end(Subfunctor.empty(site))
    assert S.elements == Z4.elements


def test_stabilizer_shrinks_as_the_site_grows():
    small = canonical_site(S3, "cosets")
    big = default_site(S3)
    for S, incl in enumerate_submonoids(S3):
        Vs, _ = stabilizer(invariants(incl, small))
        Vb, _ = stabilizer(invariants(incl, big))
        assert set(Vb.elements) <= set(Vs.elements)


def test_correspondence_s3():
    report = galois_correspondence(S3, default_site(S3))
    assert report["bijective"] and report["inclusion_reversing"]
    assert len(report["closed_submonoids"]) == 6
    assert all(row["closed"] for row in report["submonoids"])


def test_correspondence_z4():
    report = galois_correspondence(Z4, default_site(Z4))
    assert report["bijective"] and report["inclusion_reversing"]
    chains = [tuple(s) for s in report["closed_submonoids"]]
    assert chains == [("e",), ("e", "g2"), ("e", "g", "g2", "g3")]
    sizes = [sum(len(v) for v in entry["subfunctor"].values())
             for entry in report["bijection"]]
    assert sizes == sorted(sizes, reverse=True)


def test_correspondence_trivial():
    one = trivial_monoid()
    report = galois_correspondence(one, default_site(one))
    assert report["bijective"]
    assert report["closed_submonoids"] == [["e"]]
    assert len(report["closed_subfunctors"]) == 1


def test_connection_laws():
    assert connection_laws(S3, default_site(S3))
    assert connection_laws(E2, canonical_site(E2, "free+trivial"))
    assert connection_laws(Z2, canonical_site(Z2, "trivial"))
    assert connection_laws(Z2, Site(Z2, []))
    assert connection_law_failures(Z4, default_site(Z4)) == []


def test_connection_laws_with_extras():
    site = s3_nat_site()
    extras = [Subfunctor(site, {"nat": ("3",)}),
              Subfunctor(site, {"nat": ("1", "2", "3")})]
    assert connection_laws(S3, site, extra_subfunctors=extras)


def test_antitone():
    site = default_site(S3)
    pairs = enumerate_submonoids(S3)
    for S1, i1 in pairs:
        for S2, i2 in pairs:
            if set(S1.elements) <= set(S2.elements):
                assert invariants(i2, site) <= invariants(i1, site)


def test_preorder_validation():
    P = Preorder("ab", [("a", "a"), ("b", "b"), ("a", "b")])
    assert P.le("a", "b") and not P.le("b", "a")
    with pytest.raises(GaloisError):
        Preorder("ab", [("a", "a")])  # not reflexive at b
    with pytest.raises(GaloisError):
        Preorder("abc", [("a", "a"), ("b", "b"), ("c", "c"),
                         ("a", "b"), ("b", "c")])  # not transitive
    with pytest.raises(GaloisError):
        Preorder("ab", [("a", "z")])


def test_relation_functoriality():
    P = Preorder("ab", [("a", "a"), ("b", "b"), ("a", "b")])
    FiniteRelation(P, P, [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")])
    with pytest.raises(GaloisError) as err:
        FiniteRelation(P, P, [("b", "b")])  # (a,b) below (b,b) is missing
    assert "not functorial" in str(err.value)


def test_representants_centralizer():
    # subgroups of S3 ordered by inclusion, related when they commute
    # elementwise; the greatest subgroup commuting with everything is {e}
    subs = [S.elements for S, _ in enumerate_submonoids(S3)]
    names = {s: "{%s}" % ",".join(s) for s in subs}
    leq = [(names[s], names[t]) for s in subs for t in subs
           if set(s) <= set(t)]
    P = Preorder([names[s] for s in subs], leq)
    holds = [(names[s], names[t]) for s in subs for t in subs
             if all(S3.mul(x, y) == S3.mul(y, x) for x in s for y in t)]
    R = FiniteRelation(P, P, holds)
    rep = representants(R)
    assert rep.total
    whole = names[S3.elements]
    assert rep.greatest_right[whole] == names[("e",)]
    assert rep.greatest_right[names[("e",)]] == whole


def test_representants_everything_related():
    P = Preorder("ab", [("a", "a"), ("b", "b"), ("a", "b")])
    R = FiniteRelation(P, P, [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")])
    rep = representants(R)
    assert rep.greatest_right == {"a": "b", "b": "b"}


def test_representants_undefined():
    # two incomparable tops, both related to everything: no greatest
    P = Preorder("abc", [("a", "a"), ("b", "b"), ("c", "c"),
                         ("a", "b"), ("a", "c")])
    holds = [(x, y) for x in "abc" for y in "abc"]
    R = FiniteRelation(P, P, holds)
    rep = representants(R)
    assert not rep.total
    assert set(rep.undefined_right) == {"a", "b", "c"}
