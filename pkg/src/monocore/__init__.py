"""Cores, integral closures, adjoints and first coefficient ideals of
zero-dimensional monomial ideals in polynomial rings."""

from .core_engine import (CoreReport, ReductionData, adjoint_colon,
                          check_adj_hypothesis, check_colon_lemma,
                          check_comes_out, containment_relation, core_colon,
                          core_mono, find_monomial_reduction,
                          first_coefficient_ideal,
                          random_locally_minimal_reduction, reduction_number)
from .errors import (GenericityError, HypothesisError, IdealParseError,
                     OracleDisagreementError)
from .formulas import (Dim2Shape, Dim3Shape, WeightedCoreResult, core_dim2,
                       core_dim3, decompose, fci_dim2, fci_dim3, gcd_rescale,
                       parse_dim2, parse_dim3, weighted_core)
from .grobner import (PolyIdeal, buchberger, colon_poly, intersect_poly,
                      monomial_hull, monomial_part, normal_form)
from .ideal_io import format_ideal, format_ideal_file, parse_ideal_file
from .monomials import (MonomialIdeal, RingContext, graded_piece,
                        maximal_ideal, minimalize, monomial_str,
                        pure_power_ideal, ring, unit_ideal, weighted_at_least,
                        zero_ideal)
from .newton import (LpResult, adjoint, closure_of_power, integral_closure,
                     is_integrally_closed, is_normal_up_to, lp_solve,
                     np_interior, np_member)
from .scalars import FieldSpec, canonicalize, field_inverse, sample_nonzero

__version__ = "0.1.0"
