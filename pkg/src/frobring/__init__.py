"""frobring: exact classification of finite rings and MacWilliams verification.

Build explicit finite rings from small expressions, classify them
(semisimple / quasi-Frobenius / Frobenius / socle-embedding), construct
torsion-free characters, and verify or refute the monomial-extension
property for Hamming-weight-preserving code isomorphisms, with every
computation exact and an exhaustive oracle behind every algorithm.
"""

from .catalog import STANDARD_CATALOG, catalog_rings
from .codes import (Code, CodeHom, MonomialTransform, all_codes,
                    exhaustive_extension_oracle, extend_to_monomial,
                    hamming_weight, kernel_match, search_counterexample,
                    span_code, unit_between, verify_macwilliams)
from .construct import (FpAlgebra, GaloisField, GroupRing, MatrixRing,
                        Opposite, Product, RingExpr, ZMod, build_ring,
                        expr_order, expr_to_text)
from .decomp import (Classification, PrincipalDecomposition, SocleProfile,
                     classify, indecomposables_isomorphic,
                     nakayama_permutation, principal_decomposition,
                     simple_top, socle_profile)
from .duality import (AbelianBasis, Character, DualGroup, abelian_basis,
                      dual_group, dual_is_cyclic, find_torsion_free_character,
                      gamma, delta, haar_character_sum,
                      hamming_weight_via_characters, is_left_torsion_free,
                      is_right_torsion_free, semisimple_character,
                      scan_torsion_free, torsion_free_via_density)
from .errors import (CapExceeded, FrobringError, InternalInconsistency,
                     NotARing, NotASubgroup, NotInWedderburnForm,
                     NotPrimitive, ParseError, ReduciblePolynomial)
from .exact import QZ, RootSum, cyclotomic
from .ideals import (LeftIdeal, TwoSidedIdeal, cyclic_left_ideal,
                     minimal_left_ideals, minimal_right_ideals, quotient_ring,
                     radical, socle_left, socle_right, span_left)
from .injectivity import is_pseudo_injective_left, is_pseudo_injective_right
from .kernels import BACKEND as KERNEL_BACKEND
from .rings import FiniteRing, ring_from_text, ring_to_text
from .specparse import parse_ring_file, parse_ring_spec

__version__ = "0.1.0"
