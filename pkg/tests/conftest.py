import random
from fractions import Fraction

import pytest

from ordfield.laurent import RatFunc, rf_normalize, poly


@pytest.fixture
def rng():
    return random.Random(20260810)


def rand_rat(rng: random.Random, bits: int = 32) -> Fraction:
    return Fraction(rng.randint(-(1 << bits), 1 << bits), rng.randint(1, 1 << bits))


def rand_nonzero_rat(rng: random.Random, bits: int = 32) -> Fraction:
    while True:
        q = rand_rat(rng, bits)
        if q:
            return q


def rand_poly(rng: random.Random, max_deg: int = 2, coeff: int = 9, nonzero: bool = False):
    while True:
        deg = rng.randint(0, max_deg)
        p = poly(Fraction(rng.randint(-coeff, coeff)) for _ in range(deg + 1))
        if p or not nonzero:
            return p


def rand_ratfunc(rng: random.Random, max_deg: int = 2, coeff: int = 9) -> RatFunc:
    num = rand_poly(rng, max_deg, coeff)
    den = rand_poly(rng, max_deg, coeff, nonzero=True)
    return rf_normalize(num, den)


def rand_nonzero_ratfunc(rng: random.Random, max_deg: int = 2, coeff: int = 9) -> RatFunc:
    while True:
        f = rand_ratfunc(rng, max_deg, coeff)
        if f:
            return f
