"""Exact arithmetic in the max-plus semiring.

A scalar is either a :class:`fractions.Fraction` (finite value) or :data:`EPS`,
the bottom element.  ``EPS`` is ``float('-inf')``: it is never a finite number,
orders below every rational, and is absorbing under ``+``, so ``max`` and ``+``
implement the semiring operations directly.  Finite floats are rejected at the
boundary; decimal input goes through :func:`parse_scalar`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .errors import InverseOfEpsilon, ParseError

EPS = float("-inf")
ZERO = Fraction(0)

Scalar = Union[Fraction, float]

_EPS_TOKENS = {"-inf", "−∞", "-∞", "ε", "eps", "-infinity"}


def is_eps(a) -> bool:
    # canonical scalars are Fractions or -inf, so the type test decides it
    return isinstance(a, float) and a == EPS


def scalar(value) -> Scalar:
    """Coerce ``value`` to a canonical scalar.

    Accepts ``Fraction``, ``int``, ``None`` (epsilon), ``float('-inf')`` and
    scalar tokens (see :func:`parse_scalar`).  Finite floats are refused so that
    binary rounding never reaches the exact core.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if value is None:
        return EPS
    if isinstance(value, float):
        if value == EPS:
            return EPS
        raise ParseError(f"finite float {value!r} refused; pass a decimal string or Fraction")
    if isinstance(value, str):
        return parse_scalar(value)
    raise ParseError(f"not a scalar: {value!r}")


def parse_scalar(token: str | None) -> Scalar:
    """Parse ``"-inf"``/``"−∞"``/``None``, a decimal like ``"-1.5"`` or ``"p/q"``."""
    if token is None:
        return EPS
    text = token.strip()
    if text.lower() in _EPS_TOKENS or text in _EPS_TOKENS:
        return EPS
    try:
        return Fraction(text.replace("−", "-"))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar token {token!r}") from exc


def format_scalar(a: Scalar) -> str:
    """Inverse of :func:`parse_scalar`: ``"-inf"``, ``"5"`` or ``"-3/2"``."""
    if is_eps(a):
        return "-inf"
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def tadd(a: Scalar, b: Scalar) -> Scalar:
    return a if a >= b else b


def tmul(a: Scalar, b: Scalar) -> Scalar:
    if is_eps(a) or is_eps(b):
        return EPS
    return a + b


def tpow(a: Scalar, k: int) -> Scalar:
    if k < 0:
        raise ValueError("tpow needs k >= 0; use tinv for negative powers")
    if k == 0:
        return ZERO
    if is_eps(a):
        return EPS
    return k * a


def tinv(a: Scalar) -> Scalar:
    if is_eps(a):
        raise InverseOfEpsilon("epsilon has no tropical inverse")
    return -a


def tsum(values: Iterable[Scalar]) -> Scalar:
    """Tropical sum (maximum) of an iterable; ``EPS`` when empty."""
    return max(values, default=EPS)


def common_denominator(values: Iterable[Scalar]) -> int:
    """Least common multiple of the denominators of the finite values."""
    dens = {v.denominator for v in values if not is_eps(v)}
    return math.lcm(*dens) if dens else 1


def lift(a: Scalar, denom: int):
    """Map a scalar onto the integer grid ``Z / denom`` (``EPS`` stays ``EPS``).

    Kernels that do many operations work on these integers and map back with
    :func:`unlift`; the results are exact.
    """
    if is_eps(a):
        return EPS
    a = Fraction(a)
    q, r = divmod(denom, a.denominator)
    if r:
        raise ValueError(f"denominator of {a} does not divide the grid {denom}")
    return a.numerator * q


def unlift(v, denom: int) -> Scalar:
    if v == EPS:
        return EPS
    return Fraction(v, denom)
