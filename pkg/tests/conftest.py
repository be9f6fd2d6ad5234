"""Shared generators for randomized suites."""

import random

from polymf3 import RatMatrix, RationalFunction
from polymf3.laws import random_polynomial, random_single_term


def random_fraction_entry(rng: random.Random, ctx) -> RationalFunction:
    num = random_polynomial(rng, ctx, max_terms=2, max_degree=1)
    if rng.random() < 0.3:
        den = random_single_term(rng, ctx, 1)
        while den.is_zero:
            den = random_single_term(rng, ctx, 1)
        return RationalFunction(num, den)
    return RationalFunction.from_value(ctx, num)


def random_fraction_matrix(rng: random.Random, ctx, n: int) -> RatMatrix:
    return RatMatrix(
        ctx, n, n, [random_fraction_entry(rng, ctx) for _ in range(n * n)]
    )
