"""Finite shift-closed families of eventually periodic sets.

A family ``M`` is *omega-closed* when ``F1 & shift(F2, -n)`` stays inside
``M`` for all members ``F1, F2`` and every natural ``n``.  The quantifier
over ``n`` is finite in disguise: once ``n`` passes the threshold of
``F2``, the down-shift only depends on ``n`` modulo the period of ``F2``,
so ``n < threshold + period`` already produces every possible value.
"""

from __future__ import annotations

from typing import Iterable, Optional, Tuple

from .errors import ClosureDiverged, NotOmegaClosed
from .omega_sets import EMPTY, EpSet, intersect, shift, sort_key

DEFAULT_CLOSURE_CAP = 4096

Witness = Tuple[EpSet, EpSet, int]


def _shift_span(f: EpSet) -> int:
    """Number of distinct down-shifts of ``f``: its threshold plus period."""
    return f.threshold + f.period


class Family:
    """Immutable finite omega-closed family.

    Construction verifies the closure property unless ``check=False``
    (used by :func:`close`, whose output is closed by construction).
    """

    __slots__ = ("_members", "_sorted", "has_empty")

    def __init__(self, members: Iterable[EpSet], *, check: bool = True):
        self._members = frozenset(members)
        if not self._members:
            raise ValueError("a family needs at least one member")
        self._sorted = tuple(sorted(self._members, key=sort_key))
        self.has_empty = EMPTY in self._members
        if check:
            witness = omega_closure_witness(self._members)
            if witness is not None:
                f1, f2, n = witness
                raise NotOmegaClosed(
                    f"{f1} ∩ shift({f2}, -{n}) = {intersect(f1, shift(f2, -n))} "
                    "is outside the family",
                    f1=str(f1), f2=str(f2), n=n)

    @property
    def members(self) -> Tuple[EpSet, ...]:
        return self._sorted

    @property
    def nonempty_members(self) -> Tuple[EpSet, ...]:
        return tuple(f for f in self._sorted if not f.is_empty)

    def __contains__(self, f) -> bool:
        return f in self._members

    def __iter__(self):
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __str__(self) -> str:
        return "family{ " + "; ".join(str(f) for f in self._sorted) + " }"

    def __repr__(self) -> str:
        return f"Family.parse({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Family":
        from . import grammar

        return grammar.parse_family(text)


class SingletonFamily:
    """The infinite family of all singletons plus the empty set, symbolically.

    Only membership is decidable; enumeration is refused.  Products of
    elements over this family only ever intersect shifted singletons, so
    the semigroup layer works on it unchanged.
    """

    has_empty = True

    def __contains__(self, f) -> bool:
        return isinstance(f, EpSet) and (f.is_empty or f.size == 1)

    def __len__(self):
        raise TypeError("singleton family is infinite")

    def __iter__(self):
        raise TypeError("singleton family is infinite")

    def __str__(self) -> str:
        return "family{ all singletons; {} }"

    __repr__ = __str__


def omega_closure_witness(members: Iterable[EpSet]) -> Optional[Witness]:
    """First ``(F1, F2, n)`` violating closure, or ``None`` if closed."""
    pool = frozenset(members)
    ordered = sorted(pool, key=sort_key)
    for f1 in ordered:
        for f2 in ordered:
            for n in range(_shift_span(f2)):
                if intersect(f1, shift(f2, -n)) not in pool:
                    return (f1, f2, n)
    return None


def is_omega_closed(members: Iterable[EpSet]) -> Tuple[bool, Optional[Witness]]:
    """Decide closure of a candidate set; returns ``(verdict, witness)``."""
    witness = omega_closure_witness(members)
    return (witness is None, witness)


def close(generators: Iterable[EpSet], cap: int = DEFAULT_CLOSURE_CAP) -> Family:
    """Smallest omega-closed family containing ``generators``.

    Worklist fixpoint over ``F1 & shift(F2, -n)``.  Every new set is an
    intersection of down-shifted generators, so its period divides the lcm
    of the generator periods and its threshold never grows: the fixpoint is
    finite.  ``cap`` guards against combinatorial blow-up; exceeding it
    raises :class:`ClosureDiverged` rather than truncating silently.
    """
    members = set()
    queue = []
    for g in generators:
        if g not in members:
            members.add(g)
            queue.append(g)
    if not members:
        raise ValueError("close() needs at least one generator")

    def consider(f: EpSet):
        if f not in members:
            members.add(f)
            if len(members) > cap:
                raise ClosureDiverged(
                    f"closure exceeded {cap} members", cap=cap)
            queue.append(f)

    while queue:
        f = queue.pop()
        snapshot = tuple(members)
        for g in snapshot:
            for n in range(_shift_span(f)):
                consider(intersect(g, shift(f, -n)))
            for n in range(_shift_span(g)):
                consider(intersect(f, shift(g, -n)))
    return Family(members, check=False)
