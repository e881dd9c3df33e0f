"""Exact local-ring invariants over small presentations: artinian
quotients, cones, fiber products, and the classification predicates and
verification harnesses built on them."""

from .scalars import FractionField, PrimeField, Rationals
from .poly import Poly, PolyRing
from .groebner import IdealSpec, buchberger, standard_monomials
from .artin import (
    base_change_fraction_field,
    local_invariants,
    quotient_algebra,
    tensor_algebra,
)
from .homalg import (
    SeriesTrunc,
    bass_series,
    ext_dims,
    is_semidualizing,
    minimal_resolution,
    poincare_series,
)
from .fiber import (
    FiberSpec,
    RingProfile,
    artinian_profile,
    classify_fcmt_cm,
    classify_fcmt_depth_le1,
    classify_gorenstein_fiber,
    cone_profile,
    fiber_bass_series,
    fiber_poincare_k,
    fiber_present,
    fiber_profile,
    monomial_dim1_profile,
    nil_multiplicity_check,
    plane_curve_profile,
    proposition_proof_invariant,
    recognized_normal_form,
    regular_profile,
)
from .specfile import RingSpecFile, load_spec_file, parse_spec_text, to_profile
from .verify import (
    build,
    named_example,
    semidualizing_family,
    verify_corpus_formulas,
    verify_theorem_1_1,
    verify_theorem_1_2,
)

__version__ = "0.1.0"
