import random
from fractions import Fraction

import pytest

from fptkit import Polynomial, PolyRing, parse_polynomial


@pytest.fixture(scope="session")
def ring5():
    return PolyRing(5, ["x", "y"])


@pytest.fixture(scope="session")
def ring7():
    return PolyRing(7, ["x", "y"])


@pytest.fixture(scope="session")
def quartic5(ring5):
    return parse_polynomial("x^4 + y^3 + x^2*y^2", ring5)


@pytest.fixture(scope="session")
def cusp7(ring7):
    return parse_polynomial("x^2 + y^3", ring7)


@pytest.fixture(scope="session")
def quartic5_report(quartic5):
    from fptkit import jumping_numbers_unit_interval

    return jumping_numbers_unit_interval(quartic5, 6)


def random_poly(rng: random.Random, ring: PolyRing, max_deg: int, max_terms: int,
                min_deg: int = 0) -> Polynomial:
    """Random nonzero bivariate polynomial with total degree in [min_deg, max_deg]."""
    p = ring.prime
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            d = rng.randint(min_deg, max_deg)
            a = rng.randint(0, d)
            c = rng.randrange(1, p)
            m = (a, d - a)
            terms[m] = (terms.get(m, 0) + c) % p
        terms = {m: c for m, c in terms.items() if c}
        if terms:
            return Polynomial(ring, terms)


def random_fraction(rng: random.Random, max_num: int = 60, max_den: int = 60) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
