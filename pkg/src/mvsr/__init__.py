"""Finite MV-algebras, their semiring reducts, semimodules and tensors.

Everything operates on explicit finite operation tables with elements
0..size-1, checked eagerly and guarded by configurable enumeration bounds.
The submodules stay importable on their own; this surface just collects the
constructors most sessions start from.
"""
from .grothendieck import (enumerate_projective_classes, grothendieck_completion,
                           k0_of_hom, k0_report, k0_stability)
from .matrix import SemiringMatrix, idempotent_matrices, matrix_semiring
from .mv import (MvAlgebra, MvHom, check_mv_axioms, gamma_chain,
                 gamma_property_report, lukasiewicz_chain, quotient,
                 reduct_vee_odot, reduct_wedge_oplus)
from .projective import (are_isomorphic, cyclic_mv_trichotomy,
                         is_projective_matrix_criterion,
                         is_projective_retract_oracle)
from .semimodule import (FiniteSemimodule, SemimoduleHom, check_semimodule,
                         free_semimodule, hom_set, module_over_self)
from .semiring import (FiniteSemiring, SemiringHom, check_semiring_axioms,
                       boolean_semiring)
from .snf import smith_normal_form
from .tensor import (adjunction_witness, full_embedding_check, hom_point_iso,
                     tensor_product, tensor_report, truncation_demo,
                     zeta_isomorphism)
from .tropical import TropicalUSemifield

__version__ = "0.1.0"
