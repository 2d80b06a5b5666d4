"""Lattice-state classification with machine-checkable certificates.

Bipartite two-qubit-pair states indexed by subsets of a 4x4 lattice are
decided NPT-entangled, PPT-entangled or separable; every verdict carries
a certificate (a violating point, a quadruple-free point, or an exact
convex covering by special quadruples) that re-verifies independently.
"""

from .classify import (Classification, CensusReport, NPT_ENTANGLED,
                       PPT_ENTANGLED, SEPARABLE, UNDECIDED, census, classify,
                       classify_rank11_conjecture,
                       equivalence_check_final_proposition)
from .coverings import (Covering, FeasibilityResult, covering_relation_check,
                        find_integer_uniform_covering, find_uniform_covering,
                        verify_decomposition)
from .exactmath import DenseMatrix, GaussianRational
from .fixtures import EXPLORER_FIXTURES, FIXTURES, fixture
from .patterns import (Pattern, PatternParseError, RowColProfile,
                       cross_count, ppt_combinatorial, prop_ppt2_point,
                       prop_ppt3_point, row_col_profile)
from .pauli import (EPSILON, L16, Phase, commutes, dense, pauli_product,
                    string_product, tau, transposition_sign)
from .quadruples import (ComplementAnalysis, Quadruple, QuadrupleCatalog,
                         analyze_complement, catalog_all, is_special,
                         q00_catalog, quadruple_free_point, quadruples_inside,
                         saturating_vectors)
from .states import (PPT_EIGENVALUE_TOLERANCE, SigmaDiagonalState,
                     SpectralReport, basis_vector, bell_pt_coefficients,
                     bell_separable, density_matrix, hermitian_eigenvalues,
                     lattice_pt_min_eigenvalues, partial_transpose,
                     ppt_spectral, symmetric_vector)
from .symmetry import (SymmetryElement, apply_symmetry, canonical_form,
                       canonical_form_with_element, orbit, symmetry_group)
from .witness import (DiagonalCoefficients, WitnessReport, choi_matrix,
                      delta_max_estimate, family_report, gamma_t_coefficients,
                      gamma_t_expectation, gamma_t_lambda, phi_v_witness,
                      seesaw_sup, witness_value)

__version__ = "0.1.0"
