"""Seeded random matrices and polynomials for the randomized checks."""
from __future__ import annotations

import random
from fractions import Fraction

from .matrix import TropMatrix
from .poly import MaxPolynomial
from .semiring import EPS

DENOMINATORS = (1, 1, 1, 2, 3)


def random_scalar(rng: random.Random, eps_density: float, span: int = 6):
    if rng.random() < eps_density:
        return EPS
    return Fraction(rng.randint(-span, span), rng.choice(DENOMINATORS))


def random_matrix(rng: random.Random, n: int, eps_density: float) -> TropMatrix:
    return TropMatrix([[random_scalar(rng, eps_density) for _ in range(n)] for _ in range(n)])


def matrix_ensemble(count: int, seed: int = 0, max_n: int = 7, max_eps: float = 0.6):
    """``count`` matrices with ``n`` uniform in ``1..max_n`` and epsilon density uniform in ``[0, max_eps]``."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_matrix(rng, rng.randint(1, max_n), rng.uniform(0.0, max_eps))


def random_polynomial(rng: random.Random, max_degree: int = 10, max_eps: float = 0.7) -> MaxPolynomial:
    density = rng.uniform(0.0, max_eps)
    length = rng.randint(1, max_degree + 1)
    while True:
        coeffs = [random_scalar(rng, density, span=10) for _ in range(length)]
        if any(c != EPS for c in coeffs):
            return MaxPolynomial(coeffs)
