"""Formal max-plus polynomials and their tropical roots."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import AllEpsilon, ParseError
from .semiring import EPS, Scalar, format_scalar, is_eps, parse_scalar, scalar


@dataclass(frozen=True, init=False)
class MaxPolynomial:
    """Coefficients ``c_0, ..., c_n`` indexed by exponent."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(scalar(c) for c in coeffs))

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if not is_eps(self.coeffs[k]):
                return k
        raise AllEpsilon("polynomial has no finite coefficient")

    def finite_terms(self) -> list[tuple[int, Fraction]]:
        return [(k, c) for k, c in enumerate(self.coeffs) if not is_eps(c)]

    def __call__(self, t: Scalar) -> Scalar:
        return evaluate(self, t)

    def to_json(self) -> str:
        return json.dumps([format_scalar(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "MaxPolynomial":
        doc = json.loads(text)
        if not isinstance(doc, list):
            raise ParseError("polynomial must be a JSON array of scalar tokens")
        return cls(parse_scalar(t) if isinstance(t, str) or t is None else t for t in doc)


@dataclass(frozen=True)
class RootMultiset:
    """Tropical roots with multiplicities, ascending, ``EPS`` first."""

    pairs: tuple = ()

    @property
    def size(self) -> int:
        return sum(m for _, m in self.pairs)

    def as_list(self) -> list:
        return [r for r, m in self.pairs for _ in range(m)]

    def finite_roots(self) -> set:
        return {r for r, _ in self.pairs if not is_eps(r)}

    def multiplicity(self, root: Scalar) -> int:
        return dict(self.pairs).get(root, 0)

    @classmethod
    def from_counts(cls, counts: dict) -> "RootMultiset":
        return cls(tuple(sorted(((r, m) for r, m in counts.items() if m > 0), key=lambda p: p[0])))


def evaluate(P: MaxPolynomial, t: Scalar) -> Scalar:
    """``max_k c_k + k*t`` over finite terms; at ``t = EPS`` only ``c_0`` survives."""
    t = scalar(t)
    if is_eps(t):
        return P.coeffs[0] if P.coeffs else EPS
    return max((c + k * t for k, c in P.finite_terms()), default=EPS)


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def upper_hull(points: list[tuple[int, Fraction]]) -> list[tuple[int, Fraction]]:
    """Upper concave hull of points sorted by x; collinear points are dropped."""
    hull: list = []
    for p in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) >= 0:
            hull.pop()
        hull.append(p)
    return hull


def roots(P: MaxPolynomial) -> RootMultiset:
    """Tropical roots from the Newton polygon.

    Each edge ``(k_i, c_i) -> (k_j, c_j)`` of the upper hull gives the root
    ``(c_i - c_j) / (k_j - k_i)`` with multiplicity ``k_j - k_i``; a missing
    constant term gives ``EPS`` with multiplicity equal to the lowest exponent.
    """
    points = P.finite_terms()
    if not points:
        raise AllEpsilon("polynomial has no finite coefficient")
    hull = upper_hull(points)
    pairs = []
    if hull[0][0] > 0:
        pairs.append((EPS, hull[0][0]))
    for (k0, c0), (k1, c1) in zip(hull, hull[1:]):
        pairs.append((Fraction(c0 - c1, k1 - k0), k1 - k0))
    return RootMultiset(tuple(pairs))


def roots_oracle(P: MaxPolynomial, grid_lo=None, grid_hi=None, step=None, *, mode: str = "exact") -> RootMultiset:
    """Independent root finder working from the definition.

    ``t`` is a root when at least two monomials attain ``P(t)``.  In ``"exact"``
    mode every pairwise crossing ``(c_i - c_j)/(j - i)`` is tested, and the
    multiplicity is the spread between the highest and lowest attaining
    exponents.  ``"grid"`` mode only tests ``grid_lo, grid_lo + step, ...,
    grid_hi`` and so only finds roots lying on that grid.
    """
    terms = P.finite_terms()
    if not terms:
        raise AllEpsilon("polynomial has no finite coefficient")
    if mode == "exact":
        candidates = {
            Fraction(ci - cj, j - i) for a, (i, ci) in enumerate(terms) for (j, cj) in terms[a + 1:]
        }
    elif mode == "grid":
        lo, hi, h = scalar(grid_lo), scalar(grid_hi), scalar(step)
        if h <= 0:
            raise ValueError("grid step must be positive")
        candidates = set()
        t = lo
        while t <= hi:
            candidates.add(t)
            t += h
    else:
        raise ValueError(f"unknown mode {mode!r}")

    counts: Counter = Counter()
    if terms[0][0] > 0:
        counts[EPS] = terms[0][0]
    for t in candidates:
        values = [c + k * t for k, c in terms]
        top = max(values)
        attaining = [k for (k, _), v in zip(terms, values) if v == top]
        if len(attaining) >= 2:
            counts[t] = attaining[-1] - attaining[0]
    return RootMultiset.from_counts(counts)
