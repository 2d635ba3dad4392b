import itertools

import pytest

from galmon.finset import FinSet, FinMap, SizingError, exponential
from galmon.monoid import MonoidHom, is_hopf, kernel_pairs, submonoid, trivial_monoid
from galmon.actions import (MAction, Site, trivial_action, free_action,
                            canonical_site, default_site, coset_action,
                            underlying_site)
from galmon.ends import (EndError, ForgetfulDiagram, SubsetDiagram, TableDiagram,
                         internal_nat, end_of_forgetful, end_monoid, SiteFunctor,
                         restrict_end, reconstruction_hom,
                         reconstruction_composite_check, trivial_path,
                         extend_with_trivials, augmentation_square_check,
                         family_restriction)
from galmon import samples

Z2 = samples.cyclic(2)
Z3 = samples.cyclic(3)
E2 = samples.idempotent_pair()
S3 = samples.symmetric3()
SWAP = samples.swap_action()


def free_site(m):
    return canonical_site(m, "free")


def test_end_over_point_site():
    site = canonical_site(Z2, "trivial")
    end = end_of_forgetful(site)
    assert len(end) == 1
    assert end_monoid(end).elements == (end.monoid().unit,)


def test_end_sizes_over_free_site():
    assert len(end_of_forgetful(free_site(Z2))) == 2
    assert len(end_of_forgetful(free_site(S3))) == 6
    assert len(end_of_forgetful(free_site(E2))) == 2


def test_end_over_empty_site():
    end = end_of_forgetful(Site(Z2, []))
    assert len(end) == 1
    assert len(end_monoid(end).elements) == 1


def test_end_monoid_is_group_for_s3():
    E = end_monoid(end_of_forgetful(free_site(S3)))
    assert len(E.elements) == 6 and is_hopf(E)


def test_wedge_condition_holds_post_hoc():
    site = default_site(Z2)
    end = end_of_forgetful(site)
    U = end.V
    for fam in end.families:
        for i, j in itertools.product(range(site.nobj), repeat=2):
            for f in site.iter_hom_tuples(i, j):
                Vf, Wf = U.mor(i, j, f), U.mor(i, j, f)
                for p in range(len(U.obs[i])):
                    assert Wf[fam[i][p]] == fam[j][Vf[p]]


def test_projections_are_monoid_homs():
    site = default_site(Z2)
    end = end_of_forgetful(site)
    E = end.monoid()
    for i in range(site.nobj):
        for ef in E.elements:
            images_f = end.component_images(ef, i)
            for eg in E.elements:
                images_g = end.component_images(eg, i)
                prod = end.component_images(E.mul(ef, eg), i)
                xs = end.V.obs[i].elements
                composed = tuple(images_f[xs.index(y)] for y in images_g)
                assert prod == composed
        unit_images = end.component_images(E.unit, i)
        assert unit_images == end.V.obs[i].elements


def test_reconstruction_trivial_monoid():
    one = trivial_monoid()
    site = canonical_site(one, "free")
    rho = reconstruction_hom(one, site)
    assert rho.is_isomorphism()


def test_reconstruction_is_iso_over_free_site():
    for m in [Z2, Z3, E2, S3]:
        site = free_site(m)
        rho = reconstruction_hom(m, site)
        assert rho.is_isomorphism()
        assert reconstruction_composite_check(m, site)


def test_reconstruction_injective_with_free_object_present():
    site = default_site(S3)
    rho = reconstruction_hom(S3, site)
    assert rho.is_injective()
    assert reconstruction_composite_check(S3, site)


def test_reconstruction_kernel_without_free_object():
    # over the single coset object G/A3, only the parity of a permutation acts
    a3 = ("e", "(123)", "(132)")
    site = Site(S3, [("G/A3", coset_action(S3, a3))])
    end = end_of_forgetful(site)
    assert len(end) == 2
    rho = reconstruction_hom(S3, site, end=end)
    assert not rho.is_injective()
    kernel = {frozenset(p) for p in kernel_pairs(rho)}
    assert len(kernel) == 6
    assert frozenset(("(123)", "(132)")) in kernel
    assert frozenset(("(12)", "(13)")) in kernel
    assert frozenset(("e", "(12)")) not in kernel


def test_restrict_end_along_identity():
    site = default_site(Z2)
    end = end_of_forgetful(site)
    r = restrict_end(end, SiteFunctor(site, site, tuple(range(site.nobj))),
                     target_end=end)
    assert all(r(e) == e for e in end.carrier)


def test_restrict_end_to_one_object_is_that_projection():
    site = canonical_site(Z2, "free+trivial")
    end = end_of_forgetful(site)
    sub = Site(Z2, [("F(1)", site.action_named("F(1)"))])
    sub_end = end_of_forgetful(sub)
    r = restrict_end(end, SiteFunctor(sub, site, (0,)), target_end=None)
    for e in end.carrier:
        assert sub_end.component_images(r(e), 0) == end.component_images(e, 0)


def test_restrict_end_composes():
    A = canonical_site(Z2, "free+trivial+custom", custom=(("sw", SWAP),))
    B = Site(Z2, list(zip(A.names[:2], A.objects[:2])))
    C = Site(Z2, [(A.names[0], A.objects[0])])
    endA, endB, endC = (end_of_forgetful(s) for s in (A, B, C))
    rBA = restrict_end(endA, SiteFunctor(B, A, (0, 1)), target_end=endB)
    rCB = restrict_end(endB, SiteFunctor(C, B, (0,)), target_end=endC)
    rCA = restrict_end(endA, SiteFunctor(C, A, (0,)), target_end=endC)
    assert (rCB * rBA).map == rCA.map


def test_trivial_path_lands_on_unit():
    site = default_site(Z2)
    end = end_of_forgetful(site)
    path = trivial_path(Z2, site, end=end)
    unit = end.monoid().unit
    assert all(path(a) == unit for a in Z2.elements)


def test_extend_with_trivials():
    site = canonical_site(Z2, "free+trivial")
    extended, base, into, down = extend_with_trivials(site)
    assert extended.nobj == 3
    assert extended.names[:2] == site.names
    assert into == (1, 2)
    assert down == (1, 0, 1)
    again, _, _, _ = extend_with_trivials(extended)
    assert again.nobj == 3


def test_augmentation_square():
    assert augmentation_square_check(trivial_monoid(), default_site(trivial_monoid()))
    assert augmentation_square_check(Z2, default_site(Z2))
    assert augmentation_square_check(E2, default_site(E2))


def test_site_functor_checks_morphisms():
    # swap and the trivial two-point action share a carrier, but the swap
    # self-morphisms are not all morphisms of the trivial object pair's site
    sw = Site(Z2, [("sw", SWAP)])
    tv = Site(Z2, [("tv", trivial_action(Z2, FinSet(("0", "1"))))])
    SiteFunctor(sw, tv, (0,))  # into an all-maps hom set: fine
    with pytest.raises(EndError):
        SiteFunctor(tv, sw, (0,))
    with pytest.raises(EndError):
        SiteFunctor(sw, free_site(Z2), (0,))  # carrier mismatch
    with pytest.raises(EndError):
        SiteFunctor(sw, tv, (0, 0))


def test_restrict_end_rejects_wrong_site():
    end = end_of_forgetful(free_site(Z2))
    sub = Site(Z2, [("F(1)", free_site(Z2).objects[0])])
    f = SiteFunctor(sub, free_site(Z2), (0,))
    other = end_of_forgetful(free_site(Z3))
    with pytest.raises(EndError):
        restrict_end(other, f)


def test_internal_nat_rejects_mismatched_sites():
    U = ForgetfulDiagram(free_site(Z2))
    W = ForgetfulDiagram(free_site(Z3))
    with pytest.raises(EndError):
        internal_nat(U, W)


def test_subset_diagram_escape():
    site = canonical_site(Z2, "free+trivial")
    U = ForgetfulDiagram(site)
    sub = SubsetDiagram(site, [("(e,*)",), ("*",)])
    with pytest.raises(EndError):
        internal_nat(sub, U)
    with pytest.raises(EndError):
        SubsetDiagram(site, [("zzz",), ()])


def test_table_diagram_validation():
    one = trivial_monoid()
    site = Site(one, [("a", trivial_action(one, FinSet(("p",)))),
                      ("b", trivial_action(one, FinSet(("u", "v"))))])
    obs = [site.objects[0].carrier, site.objects[1].carrier]

    def forgetful_tables():
        return {(i, j): {f: f for f in site.iter_hom_tuples(i, j)}
                for i in range(2) for j in range(2)}

    TableDiagram(site, obs, forgetful_tables())

    broken = forgetful_tables()
    del broken[(0, 1)][(0,)]
    with pytest.raises(EndError):
        TableDiagram(site, obs, broken)

    broken = forgetful_tables()
    broken[(1, 1)][(0, 1)] = (1, 0)
    with pytest.raises(EndError):
        TableDiagram(site, obs, broken)

    broken = forgetful_tables()
    broken[(0, 1)][(0,)], broken[(0, 1)][(1,)] = (1,), (0,)
    with pytest.raises(EndError):
        TableDiagram(site, obs, broken)

    broken = forgetful_tables()
    broken[(0, 1)][(0,)] = (7,)
    with pytest.raises(EndError):
        TableDiagram(site, obs, broken)


def test_sizing_guard_per_object():
    with pytest.raises(SizingError):
        end_of_forgetful(free_site(S3), 10)


def test_sizing_guard_family_product():
    swap2 = MAction(Z2, FinSet(("a", "b")),
                    {("e", "a"): "a", ("e", "b"): "b",
                     ("g", "a"): "b", ("g", "b"): "a"})
    site = Site(Z2, [("sw", SWAP), ("sw2", swap2)])
    with pytest.raises(SizingError):
        end_of_forgetful(site, 3)
    assert len(end_of_forgetful(site, 16)) == 2


def test_monoid_needs_self_hom_end():
    site = default_site(Z2)
    end = end_of_forgetful(site)
    sub = SubsetDiagram(site, [() for _ in range(site.nobj)])
    cut, target = family_restriction(end, sub)
    with pytest.raises(EndError):
        target.monoid()


def test_family_restriction_full_and_empty():
    site = default_site(Z2)
    end = end_of_forgetful(site)
    full = SubsetDiagram(site, [act.carrier.elements for act in site.objects])
    cut, target = family_restriction(end, full)
    assert cut.is_bijection()
    empty = SubsetDiagram(site, [() for _ in range(site.nobj)])
    cut, target = family_restriction(end, empty)
    assert len(target) == 1
    assert all(cut(e) == target.carrier.elements[0] for e in end.carrier)


def test_family_restriction_components():
    site = default_site(S3)
    end = end_of_forgetful(site)
    sub = SubsetDiagram(site, [act.carrier.elements for act in site.objects])
    cut, target = family_restriction(end, sub)
    for e in end.carrier:
        for i in range(site.nobj):
            assert target.component_images(cut(e), i) == end.component_images(e, i)
