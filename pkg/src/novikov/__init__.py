"""Exact Morse-Novikov (weight-twisted) cohomology of finite simplicial complexes."""

from .linalg import QQ, RationalSparseMatrix, rational, naive_dense_rank
from .complexes import (Complex, SimplicialMap, OrientedManifoldCertificate,
                        validate, simplex, boundary_sphere, circle, path_complex,
                        product, connected_sum, barycentric_subdivision,
                        mapping_torus, disjoint_union, cone, suspension,
                        subcomplex, full_subcomplex, is_subcomplex,
                        orientable_certificate, builtin, builtin_names,
                        identity_map)
from .weights import (WeightCocycle, GaugeFunction, check_cocycle, is_exact,
                      component_exactness, gauge_transform, gauge_normalize_on,
                      from_integral_class, tensor, inverse, pullback,
                      product_system, holonomy, trivial_weights, trivial_gauge,
                      find_relating_gauge, random_weight_cocycle, random_gauge,
                      integral_cocycle_basis)
from .cohomology import (TwistedComplex, CohomologyResult, InducedMap,
                         coboundary_matrix, cohomology, betti_numbers,
                         modular_rank_function, h0_criterion,
                         relative_cohomology, les_of_pair, induced_map,
                         pullback_cochain_matrix, cup, lefschetz_number,
                         classical_lefschetz_number, restrict_weights,
                         verify_euler, verify_kunneth, verify_poincare,
                         verify_mayer_vietoris, verify_blowup_dims,
                         blowup_model, standard_les_pair, standard_mv_split,
                         NotOrientableError, VerificationReport)

__all__ = [name for name in dir() if not name.startswith("_")]
