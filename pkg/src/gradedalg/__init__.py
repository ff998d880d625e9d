"""Exact-arithmetic workbench for graded commutative algebra.

Hilbert series and duality functional equations, degreewise dimensions of
finitely presented graded rings and modules, minimal free resolutions and
Betti growth, local cohomology by stable Koszul cochains and by graded
duality, hypersurface periodicity and matrix factorizations, and squeezed
resolutions over group algebras.
"""

__version__ = "0.1.0"

from .fields import PrimeField, ExtensionField, Rationals, FieldSpec, FieldError
from .series import (LaurentPoly, SeriesExpr, DualityParams, SeriesError,
                     check_cm_functional_equation, solve_almost_cm, NotAlmostCM)
from .parsing import parse_series, parse_poly, parse_homogeneous, ParseError, ring_with_relations
from .linalg import Matrix, RowSpace
from .rings import GradedRing, RingComponent, PresentationError, polynomial_ring
from .modules import FreeModule, PolyMatrix, GradedModule
from .resolution import (Resolution, BettiTable, ResolutionError,
                         minimal_resolution, ext_growth_class, GrowthClass)
from .koszul import KoszulComplex, koszul_homology, is_regular_sequence, KoszulError
from .localcoh import (CohomologyTable, LocalCohomologyError, cech_table,
                       duality_table, ext_dims, grothendieck_vanishing_check,
                       radical_invariance_check, gorenstein_duality_check)
from .hypersurface import (HypersurfaceData, HypersurfaceError, HomotopySystem,
                           MatrixFactorization, splice_periodic_resolution,
                           matrix_factorization_from_resolution,
                           gulliksen_periodicity_check)
from .groups import GroupTable, GroupError, group_preset, group_from_dict, GROUP_PRESETS
from .modrep import (GroupAlgebra, GroupModule, RepresentationError, radical,
                     principal_indecomposables, projective_cover,
                     k_coradical_tower, squeezed_resolution)
from .presets import (Preset, PresetError, PRESETS, preset_names, get_preset,
                      preset_run, ShiftLedger, shift_ledger_check)
