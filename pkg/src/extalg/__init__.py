"""Exact exterior algebra over an orthonormal basis.

Multivectors have rational (or Gaussian-rational) coefficients; every
operation is exact.
"""

from .decompose import (Carving, Factorization, balanced_blade_decomposition, bivector_rank,
                        carve_in_complement, carve_minimal_internal, classify_carving,
                        classify_factorization, factor_in_complement, factor_maximal_orthogonal,
                        internal_carving, maximal_inner_blade, minimal_outer_blade,
                        orthogonal_factor)
from .errors import (DomainError, NotAFactorizationError, NotInnerBladeError,
                     NotOuterBladeError, ResourceLimitError)
from .fermion import (NormalOrderedOperator, annihilate, create, occupancy, operator_matrix,
                      scom_apply, scom_direct, scom_expand, scom_expand_diagonal, vacancy,
                      venn_partition)
from .linalg import Subspace
from .multivector import (LinearMap, Multivector, clifford, hodge_left, hodge_right, inner,
                          lcontr, outermorphism_apply, project, rcontr, wedge)
from .plucker import PluckerRelation, plucker_dedupe, plucker_evaluate, plucker_generate
from .scalars import Gaussian, I
from .simplicity import (cartan_first_order, cartan_second_order, eastwood_sample,
                         is_simple)
from .spaces import (GradeProfile, grade_profile, inner_space, is_balanced, is_blade,
                     is_inner_balanced, is_outer_balanced, outer_space)
from .textfmt import ParseError, format_multivector, parse_multivector

__version__ = "0.1.0"
