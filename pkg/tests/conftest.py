"""Shared randomized generators for the test suite (fixed seeds, exact)."""

import random
from fractions import Fraction

from tropcalc import Polynomial, Superform


def random_polynomial(rng: random.Random, n: int, max_deg: int = 4,
                      n_terms: int = 3) -> Polynomial:
    coeffs = {}
    for _ in range(n_terms):
        exps = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(n)] += 1
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        exps = tuple(exps)
        coeffs[exps] = coeffs.get(exps, Fraction(0)) + c
    return Polynomial(n, coeffs)


def random_superform(rng: random.Random, n: int, p: int, q: int,
                     n_terms: int = 2) -> Superform:
    form = Superform.zero(n, p, q)
    for _ in range(n_terms):
        i_idx = tuple(sorted(rng.sample(range(n), p)))
        j_idx = tuple(sorted(rng.sample(range(n), q)))
        form = form + Superform.monomial(n, i_idx, j_idx,
                                         random_polynomial(rng, n))
    return form
