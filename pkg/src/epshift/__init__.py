"""Exact algebra on integer shift semigroups decorated by eventually
periodic subsets of the naturals.

The building blocks: :class:`~epshift.omega_sets.EpSet` (canonical
eventually periodic sets), :class:`~epshift.family.Family` (finite
shift-closed families), :class:`~epshift.core.Element` and
:class:`~epshift.core.SemigroupCtx` (the inverse semigroup itself, with a
zero when the family has an empty member), structural classification,
named morphisms onto reference semigroups, and a partial-map oracle that
validates the whole product formula pointwise.
"""

from .classify import StructureReport, classify, d_class_count
from .core import (Element, SemigroupCtx, ZERO, green, green_witness,
                   idempotent_leq, inverse, is_idempotent, multiply,
                   natural_leq)
from .errors import (ClosureDiverged, DomainError, EmptyOutsideFamily,
                     NotIdempotent, NotOmegaClosed, NotRelated,
                     NotSingletonSet, OutsideFamily, ParseError,
                     WrongIsoType, WrongProgression, ZeroInFamily)
from .family import Family, SingletonFamily, close, is_omega_closed
from .kernel import BACKEND as KERNEL_BACKEND
from .morphisms import (BrandtElt, ExtBicyclicElt, MatrixUnitElt, brandt_mul,
                        ext_bicyclic_mul, matrix_unit_mul, partial_shift_iso,
                        progression_reindex, sigma_hom, singleton_ctx,
                        to_brandt, to_ext_bicyclic, to_matrix_units)
from .omega_sets import (EMPTY, EpSet, as_arith_progression, as_singleton,
                         exists_shift_subset, intersect, is_inductive,
                         is_subset, shift, union)
from .partial_maps import (PartialShift, WindowFn, compose_shifts,
                           eval_window, restricted_compose_dom)

__version__ = "0.1.0"

__all__ = [
    "BrandtElt", "ClosureDiverged", "DomainError", "Element", "EMPTY",
    "EmptyOutsideFamily", "EpSet", "ExtBicyclicElt", "Family",
    "KERNEL_BACKEND", "MatrixUnitElt", "NotIdempotent", "NotOmegaClosed",
    "NotRelated", "NotSingletonSet", "OutsideFamily", "ParseError",
    "PartialShift", "SemigroupCtx", "SingletonFamily", "StructureReport",
    "WindowFn", "WrongIsoType", "WrongProgression", "ZERO", "ZeroInFamily",
    "as_arith_progression", "as_singleton", "brandt_mul", "classify",
    "close", "compose_shifts", "d_class_count", "eval_window",
    "exists_shift_subset", "ext_bicyclic_mul", "green", "green_witness",
    "idempotent_leq", "intersect", "inverse", "is_idempotent",
    "is_inductive", "is_omega_closed", "is_subset", "matrix_unit_mul",
    "multiply", "natural_leq", "partial_shift_iso", "progression_reindex",
    "restricted_compose_dom", "shift", "sigma_hom", "singleton_ctx",
    "to_brandt", "to_ext_bicyclic", "to_matrix_units", "union",
]
