"""Degree bounds and split-case decisions for tight closure in plane-curve cones."""

from .bounds import (BoundReport, DegreeData, SlopeEstimates, ample_split, bound_report,
                     charp_transfer, generic_bounds, genus_bounds_n3, mindeg_split,
                     slope_estimates, split_bounds, vanishing_bound)
from .decision import Decision, Verdict, decide, degree_sweep
from .fields import GF, QQ, PrimeField, Rationals
from .forcing import (ForcingClass, IdealData, SplittingData, class_is_zero, forcing_class,
                      splitting_data)
from .groebner import (GroebnerBasis, SyzygyMatrix, buchberger, ideal_membership,
                       module_coordinates, normal_form, syzygies)
from .hypersurface import CechClass, HypersurfaceRing, cech_reduce, h0_dim, h1_dim, make_ring
from .poly import LaurentElement, ModuleVector, Polynomial, parse_polynomial, total_degree

__version__ = "0.1.0"
