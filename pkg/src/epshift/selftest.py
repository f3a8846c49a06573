"""Seeded verification suites behind ``selftest``, ``check-hom`` and
``oracle-check``.

Every suite draws its own deterministic RNG from ``(seed, suite name)``,
counts each individual assertion, and reports the first failure verbatim.
The suites cross-check closed-form criteria against independent routes:
explicit products, pointwise window composition, and brute-force scans
with widened bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import lcm
from typing import Callable, Dict, List, Optional

from .classify import (ISO_EXTENDED_BICYCLIC, ISO_MATRIX_UNITS, ISO_PROGRESSION,
                       ISO_TRIVIAL, classify, d_class_count)
from .core import (Element, SemigroupCtx, ZERO, green, green_witness, inverse,
                   idempotent_leq, is_idempotent, natural_leq)
from .errors import ClosureDiverged
from .family import Family, close, is_omega_closed
from .morphisms import (BrandtElt, ExtBicyclicElt, brandt_mul,
                        ext_bicyclic_mul, matrix_unit_mul, partial_shift_iso,
                        progression_reindex, sigma_hom, singleton_ctx,
                        to_ext_bicyclic, to_matrix_units, to_matrix_units_nat,
                        to_brandt)
from .omega_sets import EMPTY, EpSet, exists_shift_subset, is_subset, shift
from .partial_maps import (PartialShift, compose_shifts,
                           restricted_compose_dom, restricted_compose_dom_closed)

DEFAULT_SEED = 7
DEFAULT_SAMPLES = 10_000
DEFAULT_WINDOW = 128


@dataclass
class SuiteOptions:
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    window: int = DEFAULT_WINDOW
    max_family: int = 4096
    max_threshold: int = 8
    max_period: int = 6
    index_span: int = 20
    sweep_pairs: int = 150
    sweep_margin: int = 2


@dataclass
class SuiteResult:
    name: str
    seed: int
    checks: int = 0
    failures: int = 0
    first_failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "seed": self.seed,
            "checks": self.checks,
            "failures": self.failures,
            "passed": self.passed,
            "first_failure": self.first_failure,
        }


class _Tally:
    def __init__(self, result: SuiteResult):
        self.result = result

    def check(self, ok, describe) -> bool:
        self.result.checks += 1
        if not ok:
            self.result.failures += 1
            if self.result.first_failure is None:
                self.result.first_failure = (
                    describe() if callable(describe) else str(describe))
        return bool(ok)


def _rng(opts: SuiteOptions, name: str) -> random.Random:
    return random.Random(f"{opts.seed}:{name}")


# -- random generators ------------------------------------------------------

def random_epset(rng: random.Random, max_threshold=8, max_period=6,
                 allow_empty=True) -> EpSet:
    while True:
        t = rng.randint(0, max_threshold)
        p = rng.randint(1, max_period)
        h = rng.getrandbits(t) if t else 0
        r = rng.getrandbits(p) if rng.random() < 0.75 else 0
        f = EpSet.from_raw(h, t, p, r)
        if allow_empty or not f.is_empty:
            return f


def random_closed_family(rng: random.Random, opts: SuiteOptions,
                         max_members: int = 16) -> Family:
    for _ in range(64):
        gens = [random_epset(rng, opts.max_threshold, opts.max_period)
                for _ in range(rng.randint(1, 3))]
        try:
            # closing with the member budget as the cap keeps bad draws cheap
            return close(gens, cap=max_members)
        except ClosureDiverged:
            continue
    return close([EpSet.ray(rng.randint(0, opts.max_threshold))])


def random_element(rng: random.Random, fam, span=20, zero_prob=0.06) -> Element:
    choices = fam.nonempty_members
    if not choices or (fam.has_empty and rng.random() < zero_prob):
        return ZERO
    return Element(rng.randint(-span, span), rng.randint(-span, span),
                   rng.choice(choices))


class _AnyFamily:
    """Permissive pseudo-family used when a product only needs has_empty."""

    has_empty = True

    def __contains__(self, f):
        return True


def _free_ctx() -> SemigroupCtx:
    return SemigroupCtx(_AnyFamily())


# -- brute-force helpers -----------------------------------------------------

def decision_bound(f1: EpSet, f2: EpSet) -> int:
    """The documented decision bound for shift-containment scans."""
    return f1.threshold + f2.threshold + 2 * lcm(f1.period, f2.period)


def _member_mask(f: EpSet, width: int) -> int:
    # rebuilt from the public fields, independently of the kernel's
    # pattern-replication trick
    m = 0
    for e in f.head:
        if e < width:
            m |= 1 << e
    t, p = f.threshold, f.period
    for c in f.residues:
        n = t + (c - t) % p
        while n < width:
            m |= 1 << n
            n += p
    return m


def brute_least_shift_subset(f1: EpSet, f2: EpSet, kmax: int) -> Optional[int]:
    """Least ``k <= kmax`` with ``k + f1`` inside ``f2`` by windowed scan.

    The window covers every threshold plus two full combined periods, which
    decides containment of eventually periodic sets exactly.
    """
    q = lcm(f1.period, f2.period)
    width = max(f1.threshold + kmax, f2.threshold) + 2 * q + 2
    m1 = _member_mask(f1, width)
    m2 = _member_mask(f2, width)
    full = (1 << width) - 1
    for k in range(kmax + 1):
        # the window covers every threshold plus two combined periods, so
        # bits shifted past it already have equal representatives inside
        if ((m1 << k) & ~m2 & full) == 0:
            return k
    return None


def _brute_green_j(f1: EpSet, f2: EpSet) -> bool:
    b = decision_bound(f1, f2)
    return (brute_least_shift_subset(f1, f2, 4 * b) is not None
            and brute_least_shift_subset(f2, f1, 4 * b) is not None)


# -- suite: associativity ----------------------------------------------------

def _fixed_families(opts: SuiteOptions) -> List[Family]:
    return [
        close([EpSet.ray(0)], cap=opts.max_family),
        close([EpSet.of(3)], cap=opts.max_family),
        close([EpSet.progression(2, 3)], cap=opts.max_family),
        close([EpSet.of(0, 1)], cap=opts.max_family),
    ]


def suite_associativity(opts: SuiteOptions) -> SuiteResult:
    """(a*b)*c == a*(b*c) over fixed and randomly closed families."""
    res = SuiteResult("associativity", opts.seed)
    tally = _Tally(res)
    rng = _rng(opts, "associativity")
    families = _fixed_families(opts)
    families += [random_closed_family(rng, opts) for _ in range(20)]
    per_family = max(1, opts.samples)
    for fam in families:
        ctx = SemigroupCtx(fam)
        for _ in range(per_family):
            a = random_element(rng, fam, opts.index_span)
            b = random_element(rng, fam, opts.index_span)
            c = random_element(rng, fam, opts.index_span)
            lhs = ctx.mul(ctx.mul(a, b), c)
            rhs = ctx.mul(a, ctx.mul(b, c))
            tally.check(lhs == rhs,
                        lambda a=a, b=b, c=c, lhs=lhs, rhs=rhs:
                        f"associativity broke: ({a}*{b})*{c} = {lhs} "
                        f"but {a}*({b}*{c}) = {rhs}")
    return res


# -- suite: inverse axioms ----------------------------------------------------

def suite_inverse_axioms(opts: SuiteOptions) -> SuiteResult:
    """Inverse axioms, uniqueness of inverses and commuting idempotents."""
    res = SuiteResult("inverse-axioms", opts.seed)
    tally = _Tally(res)
    rng = _rng(opts, "inverse-axioms")
    families = _fixed_families(opts)
    families += [random_closed_family(rng, opts) for _ in range(8)]
    for n in range(opts.samples):
        fam = families[n % len(families)]
        ctx = SemigroupCtx(fam)
        a = random_element(rng, fam, opts.index_span)
        ai = inverse(a)
        tally.check(ctx.mul(ctx.mul(a, ai), a) == a,
                    lambda a=a: f"a*a^-1*a != a for a = {a}")
        tally.check(ctx.mul(ctx.mul(ai, a), ai) == ai,
                    lambda a=a: f"a^-1*a*a^-1 != a^-1 for a = {a}")
        # idempotents commute
        e = random_element(rng, fam, opts.index_span)
        f = random_element(rng, fam, opts.index_span)
        e = e if e.is_zero else Element(e.i, e.i, e.fset)
        f = f if f.is_zero else Element(f.j, f.j, f.fset)
        tally.check(ctx.mul(e, f) == ctx.mul(f, e),
                    lambda e=e, f=f: f"idempotents do not commute: {e}, {f}")
        # uniqueness: anything acting like an inverse is the inverse
        x = ai if rng.random() < 0.5 else random_element(rng, fam,
                                                         opts.index_span)
        if ctx.mul(ctx.mul(a, x), a) == a and ctx.mul(ctx.mul(x, a), x) == x:
            tally.check(x == ai,
                        lambda a=a, x=x: f"second inverse {x} found for {a}")
    return res


# -- suite: natural order -----------------------------------------------------

def suite_natural_order(opts: SuiteOptions) -> SuiteResult:
    """Closed-form order against the definitional check ``a == a*a^-1*b``."""
    res = SuiteResult("natural-order", opts.seed)
    tally = _Tally(res)
    rng = _rng(opts, "natural-order")
    families = _fixed_families(opts)
    families += [random_closed_family(rng, opts) for _ in range(8)]
    for n in range(opts.samples):
        fam = families[n % len(families)]
        ctx = SemigroupCtx(fam)
        b = random_element(rng, fam, opts.index_span)
        if rng.random() < 0.5:
            e = random_element(rng, fam, opts.index_span)
            e = e if e.is_zero else Element(e.i, e.i, e.fset)
            a = ctx.mul(b, e)
        else:
            a = random_element(rng, fam, opts.index_span)
        claimed = natural_leq(a, b)
        definitional = ctx.mul(ctx.mul(a, inverse(a)), b) == a
        tally.check(claimed == definitional,
                    lambda a=a, b=b, claimed=claimed:
                    f"order criterion says {claimed} for {a} vs {b} "
                    "but the definitional product check disagrees")
        if not a.is_zero and not b.is_zero:
            e1 = Element(a.i, a.i, a.fset)
            e2 = Element(b.i, b.i, b.fset)
            tally.check(idempotent_leq(e1, e2) == natural_leq(e1, e2),
                        lambda e1=e1, e2=e2:
                        f"idempotent order disagrees on {e1}, {e2}")
        tally.check(natural_leq(ZERO, b) and natural_leq(a, a),
                    "zero must be the minimum and the order reflexive")
    return res


# -- suite: Green's relations --------------------------------------------------

def _exact_r(ctx, a, b) -> bool:
    # a and b generate the same right ideal iff each divides the other
    return (ctx.mul(a, ctx.mul(inverse(a), b)) == b
            and ctx.mul(b, ctx.mul(inverse(b), a)) == a)


def _exact_l(ctx, a, b) -> bool:
    return (ctx.mul(ctx.mul(b, inverse(a)), a) == b
            and ctx.mul(ctx.mul(a, inverse(b)), b) == a)


def _connects(ctx, c, a, b) -> bool:
    return (ctx.mul(c, inverse(c)) == ctx.mul(a, inverse(a))
            and ctx.mul(inverse(c), c) == ctx.mul(inverse(b), b))


def suite_green(opts: SuiteOptions) -> SuiteResult:
    """Closed-form Green criteria against product-level witnesses.

    For R and L the solvability of ``a*x == b`` reduces exactly to the
    single candidate ``x = a^-1*b``, so the product check is complete, not
    a sampled sweep.  D is checked through connecting elements, J through
    brute-force shift scans at four times the decision bound, and a
    bounded structured sweep re-confirms a subsample from scratch.
    """
    res = SuiteResult("green", opts.seed)
    tally = _Tally(res)
    rng = _rng(opts, "green")
    families = _fixed_families(opts)
    families += [random_closed_family(rng, opts) for _ in range(8)]
    swept = 0
    for n in range(opts.samples):
        fam = families[n % len(families)]
        ctx = SemigroupCtx(fam)
        a = random_element(rng, fam, opts.index_span, zero_prob=0.03)
        b = random_element(rng, fam, opts.index_span, zero_prob=0.03)
        if rng.random() < 0.4 and not (a.is_zero or b.is_zero):
            # same set, and often a shared index, so true cases are common
            b = Element(a.i if rng.random() < 0.5 else b.i,
                        b.j, a.fset)

        for rel, exact in (("R", _exact_r), ("L", _exact_l)):
            claimed = green(a, b, rel)
            tally.check(claimed == exact(ctx, a, b),
                        lambda a=a, b=b, rel=rel, claimed=claimed:
                        f"{rel} criterion says {claimed} on {a}, {b} but "
                        "the divisibility products disagree")
            if claimed and not a.is_zero:
                x, y = green_witness(a, b, rel)
                if rel == "R":
                    ok = ctx.mul(a, x) == b and ctx.mul(b, y) == a
                else:
                    ok = ctx.mul(x, a) == b and ctx.mul(y, b) == a
                tally.check(ok, lambda a=a, b=b, rel=rel:
                            f"{rel} witness products failed for {a}, {b}")

        claimed_h = green(a, b, "H")
        tally.check(claimed_h == (green(a, b, "R") and green(a, b, "L")),
                    "H must be R meet L")
        tally.check(claimed_h == (a == b),
                    lambda a=a, b=b: f"H-related but distinct: {a}, {b}")

        claimed_d = green(a, b, "D")
        if a.is_zero or b.is_zero:
            found = a.is_zero and b.is_zero
        else:
            found = any(_connects(ctx, Element(a.i, b.j, f), a, b)
                        for f in fam.nonempty_members)
        tally.check(claimed_d == found,
                    lambda a=a, b=b, claimed_d=claimed_d:
                    f"D criterion says {claimed_d} on {a}, {b} but the "
                    "connecting-element search disagrees")

        claimed_j = green(a, b, "J")
        if a.is_zero or b.is_zero:
            brute_j = a.is_zero and b.is_zero
        else:
            brute_j = _brute_green_j(a.fset, b.fset)
            if brute_j and not a.is_zero:
                bound = decision_bound(a.fset, b.fset)
                k = brute_least_shift_subset(a.fset, b.fset, 4 * bound)
                dominated = Element(b.i + k, b.j + k, a.fset)
                tally.check(
                    ctx.mul(ctx.mul(dominated, inverse(dominated)), b)
                    == dominated and green(dominated, a, "D"),
                    lambda a=a, b=b: f"domination witness failed on {a}, {b}")
        tally.check(claimed_j == brute_j,
                    lambda a=a, b=b, claimed_j=claimed_j:
                    f"J criterion says {claimed_j} on {a}, {b} but the "
                    "brute scan disagrees")

        # structured from-scratch sweep on a bounded subsample
        if swept < opts.sweep_pairs and not (a.is_zero or b.is_zero):
            sa = Element(max(-6, min(6, a.i)), max(-6, min(6, a.j)), a.fset)
            sb = Element(max(-6, min(6, b.i)), max(-6, min(6, b.j)), b.fset)
            swept += 1
            lo = min(sa.i, sa.j, sb.i, sb.j) - opts.sweep_margin
            hi = max(sa.i, sa.j, sb.i, sb.j) + opts.sweep_margin
            cands = [Element(p, q, f)
                     for p in range(lo, hi + 1)
                     for q in range(lo, hi + 1)
                     for f in fam.nonempty_members]
            got_r = (any(ctx.mul(sa, x) == sb for x in cands)
                     and any(ctx.mul(sb, y) == sa for y in cands))
            got_l = (any(ctx.mul(x, sa) == sb for x in cands)
                     and any(ctx.mul(y, sb) == sa for y in cands))
            got_d = any(_connects(ctx, c, sa, sb) for c in cands)
            tally.check(green(sa, sb, "R") == got_r,
                        lambda sa=sa, sb=sb: f"R sweep disagrees on {sa}, {sb}")
            tally.check(green(sa, sb, "L") == got_l,
                        lambda sa=sa, sb=sb: f"L sweep disagrees on {sa}, {sb}")
            tally.check(green(sa, sb, "D") == got_d,
                        lambda sa=sa, sb=sb: f"D sweep disagrees on {sa}, {sb}")
    return res


# -- suite: product oracle -----------------------------------------------------

def suite_oracle(opts: SuiteOptions) -> SuiteResult:
    """Triple product against pointwise composition of restricted shifts."""
    res = SuiteResult("oracle", opts.seed)
    tally = _Tally(res)
    rng = _rng(opts, "oracle")
    ctx = _free_ctx()
    for _ in range(opts.samples):
        a = PartialShift(rng.randint(-16, 16), rng.randint(-16, 16))
        b = PartialShift(rng.randint(-16, 16), rng.randint(-16, 16))
        f1 = random_epset(rng, opts.max_threshold, opts.max_period)
        f2 = random_epset(rng, opts.max_threshold, opts.max_period)

        # commuting square: composing shifts matches the pair product
        tally.check(
            partial_shift_iso(compose_shifts(a, b))
            == ext_bicyclic_mul(partial_shift_iso(a), partial_shift_iso(b)),
            lambda a=a, b=b: f"index composition square broke on {a}, {b}")

        if f1.is_empty or f2.is_empty:
            continue
        ea = Element(a.i, a.j, f1)
        eb = Element(b.i, b.j, f2)
        prod = ctx.mul(ea, eb)
        comp = compose_shifts(a, b)
        # widen until the window covers every translation plus each set's
        # threshold and two full periods
        width = max(opts.window,
                    3 * max(abs(a.i), abs(a.j), abs(b.i), abs(b.j))
                    + max(f1.threshold + 2 * f1.period,
                          f2.threshold + 2 * f2.period) + 16)
        pointwise = restricted_compose_dom(a, f1, b, f2, width)
        if prod.is_zero:
            tally.check(not pointwise,
                        lambda ea=ea, eb=eb:
                        f"{ea}*{eb} collapsed to zero but the pointwise "
                        "domain is nonempty")
            continue
        tally.check((prod.i, prod.j) == (comp.i, comp.j),
                    lambda ea=ea, eb=eb, prod=prod, comp=comp:
                    f"indices of {ea}*{eb} = {prod} disagree with {comp}")
        translated = frozenset(
            prod.i + m
            for m in prod.fset.members(width - prod.i + 1)
            if -width <= prod.i + m <= width)
        tally.check(translated == pointwise,
                    lambda ea=ea, eb=eb:
                    f"set component of {ea}*{eb} disagrees with the "
                    "pointwise composition domain")
        base, s = restricted_compose_dom_closed(a, f1, b, f2)
        tally.check(base == prod.i and s == prod.fset,
                    lambda ea=ea, eb=eb:
                    f"closed-form domain disagrees with product on {ea}, {eb}")
    return res


# -- suite: classification ------------------------------------------------------

def suite_classification(opts: SuiteOptions) -> SuiteResult:
    """Golden structure verdicts plus randomized cross-validation."""
    res = SuiteResult("classification", opts.seed)
    tally = _Tally(res)
    rng = _rng(opts, "classification")

    for k in (0, 1, 2, 5, 8):
        r = classify(SemigroupCtx(close([EpSet.ray(k)])))
        tally.check(
            r.iso_type == ISO_EXTENDED_BICYCLIC and r.bisimple and r.simple
            and r.e_unitary and not r.has_zero and r.d_classes == 1,
            f"ray family [{k}) misclassified: {r.iso_type}")
    for k in (0, 1, 3, 5, 7):
        r = classify(SemigroupCtx(close([EpSet.of(k)])))
        tally.check(
            r.iso_type == ISO_MATRIX_UNITS and r.iso_params == (k,)
            and r.zero_bisimple and r.zero_simple and not r.simple
            and not r.e_unitary,
            f"singleton family {{{k}}} misclassified: {r.iso_type}")
    for i0, j0 in ((2, 3), (0, 2), (1, 4), (3, 1), (5, 5)):
        r = classify(SemigroupCtx(Family([EMPTY, EpSet.progression(i0, j0)])))
        tally.check(
            r.iso_type == ISO_PROGRESSION and r.iso_params == (i0, j0)
            and r.zero_bisimple and r.has_zero,
            f"progression family {i0}+{j0}*w misclassified: "
            f"{r.iso_type}{r.iso_params}")
    r = classify(SemigroupCtx(Family([EMPTY])))
    tally.check(r.iso_type == ISO_TRIVIAL and r.has_identity and r.bisimple,
                f"trivial family misclassified: {r.iso_type}")

    per_family = max(1, opts.samples // 24)
    for _ in range(24):
        fam = random_closed_family(rng, opts)
        ctx = SemigroupCtx(fam)
        r = classify(ctx)
        reps = [Element(0, 0, f) for f in fam.nonempty_members]
        all_j = all(green(x, y, "J") for x in reps for y in reps)
        if r.has_zero:
            tally.check(r.zero_simple == (bool(reps) and all_j),
                        lambda fam=fam: f"zero-simplicity disagrees with "
                        f"J-universality on {fam}")
            tally.check(not r.simple, "a semigroup with zero is not simple")
        else:
            tally.check(r.simple == all_j,
                        lambda fam=fam: f"simplicity disagrees with "
                        f"J-universality on {fam}")
        tally.check(r.d_classes == d_class_count(ctx) == len(fam.nonempty_members),
                    "D-class count mismatch")

        for _ in range(per_family):
            a = random_element(rng, fam, opts.index_span)
            b = random_element(rng, fam, opts.index_span)
            if r.bisimple:
                tally.check(green(a, b, "D"),
                            lambda a=a, b=b: f"bisimple family but {a}, {b} "
                            "are not D-related")
            # E-unitarity scan: idempotents sitting below s
            s = random_element(rng, fam, opts.index_span)
            below = []
            if fam.has_empty:
                below.append(ZERO)
            if not s.is_zero:
                for k in range(3):
                    for f in fam.nonempty_members:
                        e = Element(s.i + k, s.i + k, f)
                        if natural_leq(e, s):
                            below.append(e)
            for e in below:
                if not is_idempotent(s):
                    tally.check(not r.e_unitary,
                                lambda s=s, e=e:
                                f"claimed E-unitary yet {e} <= {s} with {s} "
                                "not idempotent")
            # identity probes
            if not r.has_identity and fam.nonempty_members:
                f = rng.choice(fam.nonempty_members)
                i = rng.randint(-opts.index_span, opts.index_span)
                e = Element(i, i, f)
                x = Element(i - 1, i - 1, f)
                tally.check(ctx.mul(e, x) != x,
                            lambda e=e, x=x: f"identity candidate {e} "
                            f"unexpectedly fixes {x}")
        if not r.bisimple:
            f1, f2 = fam.members[0], fam.members[1]
            x = ZERO if f1.is_empty else Element(0, 0, f1)
            y = ZERO if f2.is_empty else Element(0, 0, f2)
            tally.check(not green(x, y, "D"),
                        "non-bisimple family with D-universal witnesses")
    return res


# -- suite: morphisms -----------------------------------------------------------

def _hom_sigma(tally: _Tally, rng: random.Random, opts: SuiteOptions):
    k = rng.randint(0, 4)
    fam = close([EpSet.ray(k)]) if rng.random() < 0.5 else Family(
        [EpSet.ray(j) for j in range(k, k + rng.randint(1, 3))])
    ctx = SemigroupCtx(fam)
    for _ in range(opts.samples):
        a = random_element(rng, fam, opts.index_span)
        b = random_element(rng, fam, opts.index_span)
        tally.check(sigma_hom(ctx.mul(a, b), ctx)
                    == sigma_hom(a, ctx) + sigma_hom(b, ctx),
                    lambda a=a, b=b: f"sigma not additive on {a}, {b}")
        # congruence classes are the fibers: scan for a merging idempotent
        same = sigma_hom(a, ctx) == sigma_hom(b, ctx)
        hi = max(a.i, b.i)
        merged = any(
            ctx.mul(e, a) == ctx.mul(e, b)
            for m in range(hi, hi + 3)
            for f in fam.members
            for e in (Element(m, m, f),))
        tally.check(same == merged,
                    lambda a=a, b=b, same=same:
                    f"sigma classes say {same} on {a}, {b} but the "
                    "merging-idempotent scan disagrees")


def _hom_ext_bicyclic(tally: _Tally, rng: random.Random, opts: SuiteOptions):
    k = rng.randint(0, 6)
    ctx = SemigroupCtx(close([EpSet.ray(k)]))
    f = ctx.family.members[0]
    for _ in range(opts.samples):
        a = Element(rng.randint(-20, 20), rng.randint(-20, 20), f)
        b = Element(rng.randint(-20, 20), rng.randint(-20, 20), f)
        fa, fb = to_ext_bicyclic(ctx, a), to_ext_bicyclic(ctx, b)
        tally.check(to_ext_bicyclic(ctx, ctx.mul(a, b))
                    == ext_bicyclic_mul(fa, fb),
                    lambda a=a, b=b: f"pair map not a homomorphism on {a}, {b}")
        tally.check((fa == fb) == (a == b), "pair map must be injective")
        # surjectivity: explicit preimage
        tgt = ExtBicyclicElt(rng.randint(-20, 20), rng.randint(-20, 20))
        tally.check(to_ext_bicyclic(ctx, Element(tgt.i, tgt.j, f)) == tgt,
                    "pair map must be surjective")
        s1 = PartialShift(rng.randint(-16, 16), rng.randint(-16, 16))
        s2 = PartialShift(rng.randint(-16, 16), rng.randint(-16, 16))
        tally.check(partial_shift_iso(compose_shifts(s1, s2))
                    == ext_bicyclic_mul(partial_shift_iso(s1),
                                        partial_shift_iso(s2)),
                    lambda s1=s1, s2=s2:
                    f"shift composition square broke on {s1}, {s2}")


def _hom_matrix_units(tally: _Tally, rng: random.Random, opts: SuiteOptions):
    k = rng.randint(0, 8)
    ctx = SemigroupCtx(close([EpSet.of(k)]))
    fset = EpSet.of(k)
    for _ in range(opts.samples):
        def rnd():
            if rng.random() < 0.08:
                return ZERO
            return Element(rng.randint(-20, 20), rng.randint(-20, 20), fset)
        a, b = rnd(), rnd()
        if rng.random() < 0.5 and not (a.is_zero or b.is_zero):
            b = Element(a.j, b.j, fset)  # hit the nonzero product case
        fa, fb = to_matrix_units(ctx, a), to_matrix_units(ctx, b)
        tally.check(to_matrix_units(ctx, ctx.mul(a, b))
                    == matrix_unit_mul(fa, fb),
                    lambda a=a, b=b:
                    f"matrix-unit map not a homomorphism on {a}, {b}")
        na, nb = to_matrix_units_nat(ctx, a), to_matrix_units_nat(ctx, b)
        tally.check(to_matrix_units_nat(ctx, ctx.mul(a, b))
                    == matrix_unit_mul(na, nb),
                    "natural-indexed matrix-unit map not a homomorphism")
        tally.check((fa == fb) == (a == b), "matrix-unit map must be injective")


def _hom_brandt(tally: _Tally, rng: random.Random, opts: SuiteOptions):
    ctx = singleton_ctx()
    hits: Dict[tuple, int] = {}
    for _ in range(opts.samples):
        k1, k2 = rng.randint(0, 8), rng.randint(0, 8)
        j1 = rng.randint(-12, 12)
        case = rng.choice((-1, 0, 1))
        match = rng.random() < 0.5
        if case == 0:
            i2 = j1
            if not match and k1 == k2:
                k2 = k1 + 1
            if match:
                k2 = k1
        else:
            d = rng.randint(1, 6) * case
            i2 = j1 + d
            if match:
                # inner indices line up: j1 + k1 == i2 + k2
                k2 = j1 + k1 - i2
                if k2 < 0:
                    k1 += -k2
                    k2 = 0
            elif j1 + k1 == i2 + k2:
                k2 += 1
        a = Element(rng.randint(-12, 12), j1, EpSet.of(k1))
        b = Element(i2, rng.randint(-12, 12), EpSet.of(k2))
        hits[(case, a.j + k1 == b.i + k2)] = hits.get(
            (case, a.j + k1 == b.i + k2), 0) + 1
        lhs = to_brandt(ctx.mul(a, b))
        rhs = brandt_mul(to_brandt(a), to_brandt(b))
        tally.check(lhs == rhs,
                    lambda a=a, b=b, lhs=lhs, rhs=rhs:
                    f"triple map not a homomorphism on {a}, {b}: "
                    f"{lhs} vs {rhs}")
    tally.check(len(hits) == 6,
                f"not all six product case splits were exercised: {sorted(hits)}")
    # surjectivity: explicit preimages of random codomain triples
    for _ in range(min(opts.samples, 500)):
        left, mid = rng.randint(-12, 12), rng.randint(0, 10)
        right = rng.randint(-12, 12)
        pre = Element(left - mid, right - mid, EpSet.of(mid))
        tally.check(to_brandt(pre) == BrandtElt(left, mid, right),
                    "triple map must be surjective")


def _hom_reindex(tally: _Tally, rng: random.Random, opts: SuiteOptions):
    j0 = rng.randint(1, 5)
    i1, i2 = rng.randint(0, 8), rng.randint(0, 8)
    c1 = SemigroupCtx(Family([EMPTY, EpSet.progression(i1, j0)]))
    c2 = SemigroupCtx(Family([EMPTY, EpSet.progression(i2, j0)]))
    fset = EpSet.progression(i1, j0)
    for _ in range(opts.samples):
        def rnd():
            if rng.random() < 0.06:
                return ZERO
            return Element(rng.randint(-16, 16), rng.randint(-16, 16), fset)
        a, b = rnd(), rnd()
        fa = progression_reindex(a, i1, i2, j0)
        fb = progression_reindex(b, i1, i2, j0)
        tally.check(progression_reindex(c1.mul(a, b), i1, i2, j0)
                    == c2.mul(fa, fb),
                    lambda a=a, b=b:
                    f"progression reindexing not a homomorphism on {a}, {b}")
    tally.check(progression_reindex(ZERO, i1, i2, j0) is ZERO,
                "reindexing must fix the zero")


_HOM_SUITES: Dict[str, Callable] = {
    "sigma": _hom_sigma,
    "ext-bicyclic": _hom_ext_bicyclic,
    "shift-iso": _hom_ext_bicyclic,
    "matrix-units": _hom_matrix_units,
    "brandt": _hom_brandt,
    "reindex": _hom_reindex,
}


def run_check_hom(name: str, opts: SuiteOptions) -> SuiteResult:
    res = SuiteResult(f"hom-{name}", opts.seed)
    _HOM_SUITES[name](_Tally(res), _rng(opts, f"hom-{name}"), opts)
    return res


def suite_morphisms(opts: SuiteOptions) -> SuiteResult:
    """Homomorphism, injectivity and surjectivity checks for every map."""
    res = SuiteResult("morphisms", opts.seed)
    tally = _Tally(res)
    rng = _rng(opts, "morphisms")
    for name in ("sigma", "ext-bicyclic", "matrix-units", "brandt", "reindex"):
        _HOM_SUITES[name](tally, rng, opts)
    return res


# -- suite: family machinery -----------------------------------------------------

def suite_family_machinery(opts: SuiteOptions) -> SuiteResult:
    """Closure really closes, and bounded scans match widened brute force."""
    res = SuiteResult("family-machinery", opts.seed)
    tally = _Tally(res)
    rng = _rng(opts, "family-machinery")
    done = 0
    while done < 100:
        gens = [random_epset(rng, opts.max_threshold, opts.max_period)
                for _ in range(rng.randint(1, 3))]
        try:
            # the sampling contract keeps random families small
            fam = close(gens, cap=16)
        except ClosureDiverged:
            continue
        done += 1
        ok, witness = is_omega_closed(fam.members)
        tally.check(ok, lambda gens=gens, witness=witness:
                    f"closure of {[str(g) for g in gens]} not closed: "
                    f"witness {witness}")
        tally.check(close(fam.members, cap=len(fam) + 1) == fam,
                    "closure must be idempotent")
        try:
            bigger = close(list(gens) + [random_epset(rng, opts.max_threshold,
                                                      opts.max_period)],
                           cap=64)
        except ClosureDiverged:
            pass
        else:
            tally.check(all(f in bigger for f in fam.members),
                        "closure must be monotone in its generators")
    for _ in range(opts.samples):
        f1 = random_epset(rng, opts.max_threshold, opts.max_period)
        f2 = random_epset(rng, opts.max_threshold, opts.max_period)
        bound = decision_bound(f1, f2)
        got = exists_shift_subset(f1, f2)
        brute = brute_least_shift_subset(f1, f2, 4 * bound)
        tally.check(got == brute,
                    lambda f1=f1, f2=f2, got=got, brute=brute:
                    f"shift-containment scan: {got} vs brute {brute} "
                    f"on {f1}, {f2}")
        if got is not None:
            tally.check(is_subset(shift(f1, got), f2),
                        "reported shift does not actually embed")
    return res


# -- registry -----------------------------------------------------------------

SUITES: Dict[str, Callable[[SuiteOptions], SuiteResult]] = {
    "associativity": suite_associativity,
    "inverse-axioms": suite_inverse_axioms,
    "natural-order": suite_natural_order,
    "green": suite_green,
    "oracle": suite_oracle,
    "classification": suite_classification,
    "morphisms": suite_morphisms,
    "family-machinery": suite_family_machinery,
}


def run_suite(name: str, opts: Optional[SuiteOptions] = None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; "
                         f"choose from {', '.join(sorted(SUITES))}")
    return SUITES[name](opts or SuiteOptions())


def run_all(opts: Optional[SuiteOptions] = None) -> List[SuiteResult]:
    opts = opts or SuiteOptions()
    return [fn(opts) for fn in SUITES.values()]
