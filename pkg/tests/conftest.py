"""Shared test helpers: an independent brute-force model of the sets."""

import random

import pytest

from epshift.omega_sets import EpSet


def raw_member(h, t, p, r, n):
    """Membership straight from the defining formula of a quadruple."""
    if n < 0:
        return 0
    return (h >> n) & 1 if n < t else (r >> (n % p)) & 1


def naive_members(h, t, p, r, width):
    """The set's members below ``width`` as a plain Python set."""
    return {n for n in range(width) if raw_member(h, t, p, r, n)}


def epset_members(f: EpSet, width):
    return {n for n in range(width) if n in f}


def random_raw(rng: random.Random, max_threshold=9, max_period=7,
               finite_bias=0.3):
    t = rng.randint(0, max_threshold)
    p = rng.randint(1, max_period)
    h = rng.getrandbits(t) if t else 0
    r = 0 if rng.random() < finite_bias else rng.getrandbits(p)
    return h, t, p, r


def random_epset(rng: random.Random, **kw) -> EpSet:
    return EpSet.from_raw(*random_raw(rng, **kw))


@pytest.fixture
def rng():
    return random.Random(0xEB5)
