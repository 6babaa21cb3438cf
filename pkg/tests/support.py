"""Shared random generators for the property suites (exact backend)."""

from __future__ import annotations

import random
from fractions import Fraction

from parawheel import SL2, DualVec, HyperNumber, Subgroup


def rand_fraction(
    rng: random.Random,
    lo: int = -9,
    hi: int = 9,
    max_den: int = 9,
    nonzero: bool = False,
) -> Fraction:
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if not (nonzero and q == 0):
            return q


def rand_hyper(rng: random.Random, sigma: int) -> HyperNumber:
    return HyperNumber(sigma, rand_fraction(rng), rand_fraction(rng))


def rand_unit_hyper(rng: random.Random, sigma: int) -> HyperNumber:
    """Random planar number that is not a zero divisor."""
    while True:
        w = rand_hyper(rng, sigma)
        if w.modulus_sq() != 0:
            return w


def rand_sl2(rng: random.Random) -> SL2:
    """Random rational determinant-one matrix."""
    while True:
        a = rand_fraction(rng, nonzero=True)
        b = rand_fraction(rng)
        c = rand_fraction(rng)
        return SL2(a, b, c, (1 + b * c) / a)


def rand_dualvec(rng: random.Random, tag: Subgroup) -> DualVec:
    """Random admissible finite point; N' avoids u = 0 and v = -1."""
    if tag is Subgroup.N:
        return DualVec(tag, rand_fraction(rng), rand_fraction(rng))
    while True:
        u = rand_fraction(rng, nonzero=True)
        v = rand_fraction(rng)
        if v != -1:
            return DualVec(tag, u, v)
