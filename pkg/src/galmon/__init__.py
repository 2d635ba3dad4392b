"""Invariants and stabilizers of finite monoid actions.

Finite sets with products and exponentials carry actions of a finite
monoid; a site is a chosen family of such actions.  For a monoid map into
the acting monoid the package computes the subfunctor of invariants as an
equalizer, recovers stabilizing submonoids through ends of hom diagrams,
and checks the Galois connection the two constructions induce.
"""

from .finset import (FinSet, FinMap, FinSetError, SizingError, singleton,
                     product, proj_left, proj_right, pairing, exponential,
                     curry, uncurry, evaluation, equalizer, hom_set)
from .monoid import (Monoid, MonoidHom, MonoidError, NotHopfError, Augmentation,
                     validate_monoid, trivial_monoid, canonical_augmentation,
                     submonoid, enumerate_submonoids, enumerate_subgroups,
                     fusion_morphism, is_hopf, hopf_witness, antipode, kernel_pairs)
from .actions import (MAction, EquivariantMap, ActionError, Site,
                      validate_action, trivial_action, free_action,
                      restrict_action, equivariant_maps, fixed_points,
                      check_trivial_fixed_adjunction, coinduct,
                      check_restriction_coinduction_adjunction,
                      coset_action, canonical_site, default_site, underlying_site)
from .ends import (EndObject, EndError, SiteDiagram, ForgetfulDiagram,
                   SubsetDiagram, TableDiagram, SiteFunctor, internal_nat,
                   end_of_forgetful, end_monoid, restrict_end,
                   reconstruction_hom, reconstruction_composite_check,
                   trivial_path, augmentation_square_check, family_restriction)
from .galois import (Subfunctor, GaloisError, fixes, invariants,
                     invariants_oracle, stabilizer, stabilizer_via_end,
                     galois_correspondence, connection_laws,
                     connection_law_failures, enumerate_subfunctors,
                     random_subfunctor, Preorder, FiniteRelation,
                     Representants, representants)

__version__ = "0.1.0"
