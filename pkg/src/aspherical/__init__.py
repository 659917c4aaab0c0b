"""Exact Chevalley-Eilenberg cohomology, invariant symplectic forms and
Betti-number criteria for symplectically aspherical groups."""

from .exterior import Form, basis, e, power, standard_symplectic, wedge
from .lie import (LieAlgebra, ParseError, JacobiError, Solvability, StructureReport, abelian, ad, ce_differential,
                  check_jacobi, direct_sum, parse_algebra, structure_report)
from .cohomology import (CohomologyClass, CohomologyRing, NotApplicable, NotClosedError, betti, class_of,
                         cohomology_ring, cup, differential_matrix, poincare_check)
from .symplectic import (PfaffianPolynomial, SymplecticReport, Verdict, closed_two_forms, cup_length_two,
                         find_symplectic, integralize, is_h2_decomposable, pfaffian_polynomial)
from .classifier import (ClassEvidence, GroupProfile, chain_report, classify, kunneth, product_criteria,
                         profile_from_algebra)
from .catalog import CatalogEntry, parse_catalog, run_catalog

__version__ = "0.1.0"
