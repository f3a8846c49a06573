"""Named homomorphisms and the reference semigroups they target.

Three reference structures live here: integer pairs under the min-based
bicyclic product, matrix units, and the Brandt extension of the min
semilattice on the naturals.  The maps onto them are exact and, where the
structure theory says so, bijective.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import ISO_EXTENDED_BICYCLIC, ISO_MATRIX_UNITS, classify
from .core import Element, SemigroupCtx, ZERO
from .errors import NotSingletonSet, WrongIsoType, WrongProgression, ZeroInFamily
from .family import SingletonFamily
from .omega_sets import EpSet, as_singleton
from .partial_maps import PartialShift


@dataclass(frozen=True)
class ExtBicyclicElt:
    """Integer pair under the min-based product."""

    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def ext_bicyclic_mul(a: ExtBicyclicElt, b: ExtBicyclicElt) -> ExtBicyclicElt:
    m = min(a.j, b.i)
    return ExtBicyclicElt(a.i + b.i - m, a.j + b.j - m)


class _AbsorbingZero:
    """Shared shape of the zeros of the reference semigroups."""

    __slots__ = ("_label",)

    def __init__(self, label: str):
        self._label = label

    is_zero = True

    def __str__(self) -> str:
        return "0"

    def __repr__(self) -> str:
        return self._label


MATRIX_ZERO = _AbsorbingZero("MATRIX_ZERO")
BRANDT_ZERO = _AbsorbingZero("BRANDT_ZERO")


@dataclass(frozen=True)
class MatrixUnitElt:
    """Nonzero matrix unit ``(row, col)``; ``(a,b)(c,d) = (a,d)`` iff ``b == c``."""

    row: int
    col: int

    is_zero = False

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


def matrix_unit_mul(x, y):
    if x is MATRIX_ZERO or y is MATRIX_ZERO:
        return MATRIX_ZERO
    if x.col == y.row:
        return MatrixUnitElt(x.row, y.col)
    return MATRIX_ZERO


@dataclass(frozen=True)
class BrandtElt:
    """Triple over integer indices with a min-semilattice middle coordinate."""

    left: int
    mid: int
    right: int

    is_zero = False

    def __post_init__(self):
        if self.mid < 0:
            raise ValueError("middle coordinate must be a natural")

    def __str__(self) -> str:
        return f"({self.left},{self.mid},{self.right})"


def brandt_mul(x, y):
    if x is BRANDT_ZERO or y is BRANDT_ZERO:
        return BRANDT_ZERO
    if x.right == y.left:
        return BrandtElt(x.left, min(x.mid, y.mid), y.right)
    return BRANDT_ZERO


# -- integer <-> natural bijection for the matrix-unit index set -----------

def int_to_nat(n: int) -> int:
    """Zigzag bijection from the integers onto the naturals."""
    return 2 * n if n >= 0 else -2 * n - 1


def nat_to_int(m: int) -> int:
    return m // 2 if m % 2 == 0 else -(m + 1) // 2


# -- the maps ---------------------------------------------------------------

def sigma_hom(a: Element, ctx: SemigroupCtx = None) -> int:
    """Index difference ``i - j``: the quotient map onto the additive integers.

    Defined only over families without the empty set; with a zero present
    the group quotient collapses to the trivial group.
    """
    if ctx is not None and ctx.family.has_empty:
        raise ZeroInFamily("family contains {}, the group quotient is trivial")
    if a.is_zero:
        raise ZeroInFamily("the zero has no image in the integer quotient")
    return a.i - a.j


def to_ext_bicyclic(ctx: SemigroupCtx, a: Element) -> ExtBicyclicElt:
    """Drop the set component; bijective when the family is one inductive set."""
    if classify(ctx).iso_type != ISO_EXTENDED_BICYCLIC:
        raise WrongIsoType("family is not a single nonempty inductive set")
    return ExtBicyclicElt(a.i, a.j)


def to_matrix_units(ctx: SemigroupCtx, a: Element):
    """Map onto matrix units over integer indices.

    Needs the family ``{ {}, {k} }``.  The indices come out in the
    integers; compose with :func:`int_to_nat` for natural-indexed units
    (any bijection of the index set is an isomorphism of matrix units).
    """
    if classify(ctx).iso_type != ISO_MATRIX_UNITS:
        raise WrongIsoType("family is not {{}, singleton}")
    if a.is_zero:
        return MATRIX_ZERO
    return MatrixUnitElt(a.i, a.j)


def to_matrix_units_nat(ctx: SemigroupCtx, a: Element):
    """Natural-indexed variant of :func:`to_matrix_units` via the zigzag."""
    x = to_matrix_units(ctx, a)
    if x is MATRIX_ZERO:
        return MATRIX_ZERO
    return MatrixUnitElt(int_to_nat(x.row), int_to_nat(x.col))


def to_brandt(a: Element):
    """``(i, j, {k}) -> (i+k, k, j+k)``: onto the Brandt extension of min.

    Elements must carry singleton sets (the ambient family is the symbolic
    one of all singletons plus the empty set).
    """
    if a.is_zero:
        return BRANDT_ZERO
    k = as_singleton(a.fset)
    if k is None:
        raise NotSingletonSet(f"{a} does not carry a singleton set")
    return BrandtElt(a.i + k, k, a.j + k)


def singleton_ctx() -> SemigroupCtx:
    """Context over the symbolic all-singletons family (domain of to_brandt)."""
    return SemigroupCtx(SingletonFamily())


def progression_reindex(a: Element, old_start: int, new_start: int,
                        step: int) -> Element:
    """Swap the progression ``old_start + step*w`` for ``new_start + step*w``.

    An isomorphism between the two progression-family semigroups; the zero
    maps to the zero.
    """
    if a.is_zero:
        return ZERO
    if a.fset != EpSet.progression(old_start, step):
        raise WrongProgression(
            f"{a} does not carry the progression {old_start}+{step}*w")
    return Element(a.i, a.j, EpSet.progression(new_start, step))


def partial_shift_iso(alpha: PartialShift) -> ExtBicyclicElt:
    """Read the shift's parameters off as a bicyclic pair; an isomorphism."""
    return ExtBicyclicElt(alpha.i, alpha.j)
