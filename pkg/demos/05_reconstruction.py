"""Reconstructing a monoid from its actions: the end of the self-hom
diagram over a site, the map a -> (x -> a.x) into it, and what is lost
when the site is too poor to separate elements."""

from galmon.actions import Site, canonical_site, coset_action, default_site
from galmon.ends import (end_of_forgetful, end_monoid, reconstruction_hom,
                         reconstruction_composite_check,
                         augmentation_square_check)
from galmon.monoid import kernel_pairs
from galmon import samples

s3 = samples.symmetric3()

# over the free site, the end has exactly one family per monoid element
site = canonical_site(s3, "free")
end = end_of_forgetful(site)
print("families over {F(1)}:", len(end))
rho = reconstruction_hom(s3, site, end=end)
assert rho.is_isomorphism()
assert len(end_monoid(end).elements) == 6
print("rho is an isomorphism; acting through it reproduces the tables:",
      reconstruction_composite_check(s3, site))

# a site with only the coset space of A3 sees nothing but parity
a3 = ("e", "(123)", "(132)")
poor = Site(s3, [("G/A3", coset_action(s3, a3))])
rho2 = reconstruction_hom(s3, poor)
pairs = kernel_pairs(rho2)
print("over {G/A3} the end has", len(end_of_forgetful(poor)), "families;")
print("rho identifies", len(pairs), "pairs, e.g.", pairs[0])
assert not rho2.is_injective()
assert len(pairs) == 6

# both identities of the underlying-carrier restriction square
assert augmentation_square_check(s3, default_site(s3))
print("augmentation square verified over the default site")

print("ok")
