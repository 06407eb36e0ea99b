"""Exact-arithmetic workbench for holomorphic fixed-point formulas.

The package verifies the Lefschetz fixed-point identity in two computable
models, each through two independent routes:

* equivariant line bundles on projective space under diagonal
  automorphisms (global cohomology trace vs. fixed-point sum), and
* a discrete kernel calculus over finite sets, where the categorical trace
  of a lax square is assembled from explicit evaluation, coevaluation and
  coherence cells and compared against direct matrix contraction.

The Weyl character formula appears as the same identity for the finite
fixed-point set of a Weyl group, checked against the Freudenthal
recursion.  All arithmetic is exact (rationals and rational functions);
nothing is floating point.
"""

from .scalars import (MultiPoly, RF_ONE, RF_ZERO, Rational, RationalFunction,
                      probably_equal, rf_equal)
from .linalg import (Matrix, ShapeError, char_poly_via_elimination,
                     char_poly_via_exterior, det, exterior_power_trace,
                     poly_in_var)
from .graded import GradedMap, GradedSpace, euler_trace
from .kernels import (CompositionError, FinObj, Kernel, LaxSquare, TwoCell,
                      UNIT, chern_character, chern_direct,
                      check_triangle_identities, compose_kernels,
                      compose_lax_squares, dual_kernel, equivariant_square,
                      identity_kernel, integrate, lefschetz_discrete,
                      pushforward_kernel, tensor_kernels, trace_of_kernel,
                      trace_of_lax_square)
from .projective import (BundleSpec, FixedPoint, NotTransversalError,
                         ProjScenario, VerifyReport, ab_rhs,
                         cohomology_action, fixed_points, lambda_x,
                         lefschetz_lhs, local_term, skyscraper_local_trace,
                         tangent_action, verify_identity)
from .weyl import (CARTAN_TABLES, RootSystem, WeightPolynomial, WeylElement,
                   build_root_system, denominator_product, exact_divide,
                   fixed_point_character_sum, freudenthal_multiplicities,
                   weyl_character, weyl_denominator, weyl_dimension,
                   weyl_group)
from .exprs import ExprError, format_scalar, parse_scalar
from .selftest import PropertyResult, SelfTestReport, run_selftest

__version__ = "0.1.0"
