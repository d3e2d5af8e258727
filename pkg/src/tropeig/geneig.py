"""Generalized eigenvectors ``x^T ⊗ A ⊗ x = λ ⊗ x^T ⊗ x`` for algebraic eigenvalues.

Every vector built here is supported on at most two coordinates ``p`` and
``q``, so each construction costs O(n^2) for the index search and O(1) for the
vector itself.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .charpoly import DEFAULT_SIZE_CAP, spectrum
from .errors import InternalVerificationFailed, NotAnEigenvalue, PreconditionViolated, ZeroVector
from .matrix import TropMatrix, TropVector, is_nonzero, quadratic_form, require_square, self_inner, unit_vector
from .semiring import EPS, Scalar, is_eps, scalar, tmul


class Case(str, enum.Enum):
    LEQ_CASE1 = "LEQ_CASE1"  # all a_ii <= λ, a_pq >= a_qp
    LEQ_CASE2 = "LEQ_CASE2"  # all a_ii <= λ, a_qp > a_pq
    SECOND_CASE1 = "SECOND_CASE1"  # a_qq >= λ, λ + a_qq <= 2 max(a_pq, a_qp)
    SECOND_CASE2 = "SECOND_CASE2"  # a_qq >= λ, otherwise
    EPSILON_CASE = "EPSILON_CASE"


@dataclass(frozen=True)
class GenEigenpair:
    lam: Scalar
    vector: TropVector
    case: Case
    p: int
    q: int

    def to_dict(self) -> dict:
        from .semiring import format_scalar

        return {
            "lambda": format_scalar(self.lam),
            "vector": [format_scalar(v) for v in self.vector],
            "case": self.case.value,
            "p": self.p + 1,
            "q": self.q + 1,
        }


def verify(A: TropMatrix, pair: GenEigenpair) -> bool:
    if not is_nonzero(pair.vector):
        raise ZeroVector("generalized eigenvector must be nonzero")
    return quadratic_form(A, pair.vector) == tmul(pair.lam, self_inner(pair.vector))


def _two_point(n: int, p: int, xp: Scalar, q: int, xq: Scalar) -> TropVector:
    x = [EPS] * n
    x[p] = xp
    x[q] = xq
    return tuple(x)


def construct_leq(A: TropMatrix, lam, p: int, q: int) -> GenEigenpair:
    """Construction for ``λ`` dominating the whole diagonal, given ``a_pq >= λ``."""
    n = require_square(A)
    lam = scalar(lam)
    if is_eps(lam):
        raise PreconditionViolated("lambda must be finite")
    if any(a > lam for a in A.diagonal()):
        raise PreconditionViolated("some diagonal entry exceeds lambda")
    apq, aqp = A[p, q], A[q, p]
    if apq < lam:
        raise PreconditionViolated(f"a_pq = {apq} < lambda = {lam}")
    if apq >= aqp:
        pair = GenEigenpair(lam, _two_point(n, q, lam - apq, p, Fraction(0)), Case.LEQ_CASE1, p, q)
    else:
        pair = GenEigenpair(lam, _two_point(n, p, lam - aqp, q, Fraction(0)), Case.LEQ_CASE2, p, q)
    return pair


def construct_second(A: TropMatrix, lam, p: int, q: int) -> GenEigenpair:
    """Construction for a diagonal entry ``a_qq >= λ``, with ``a_pp`` the smallest diagonal entry."""
    n = require_square(A)
    lam = scalar(lam)
    diag = A.diagonal()
    if is_eps(lam):
        raise PreconditionViolated("lambda must be finite")
    if diag[q] < lam:
        raise PreconditionViolated(f"a_qq = {diag[q]} < lambda = {lam}")
    if diag[p] != min(diag):
        raise PreconditionViolated("a_pp is not the smallest diagonal entry")
    if lam < diag[p]:
        raise PreconditionViolated("lambda lies below the numerical range")
    top = max(A[p, q], A[q, p])
    if lam + diag[q] <= 2 * top:
        xq, case = lam - top, Case.SECOND_CASE1
    else:
        xq, case = (lam - diag[q]) / 2, Case.SECOND_CASE2
    if p == q:
        xq = Fraction(0)
    return GenEigenpair(lam, _two_point(n, p, Fraction(0), q, xq), case, p, q)


def _dispatch(A: TropMatrix, lam: Scalar) -> GenEigenpair:
    n = A.n
    diag = A.diagonal()
    if is_eps(lam):
        p = next((i for i in range(n) if is_eps(diag[i])), None)
        if p is None:
            raise InternalVerificationFailed("epsilon eigenvalue but no epsilon on the diagonal")
        return GenEigenpair(lam, unit_vector(n, p), Case.EPSILON_CASE, p, p)
    q = next((i for i in range(n) if diag[i] >= lam), None)
    if q is not None:
        p = diag.index(min(diag))
        return construct_second(A, lam, p, q)
    for p in range(n):
        for q in range(n):
            if A[p, q] >= lam:
                return construct_leq(A, lam, p, q)
    raise InternalVerificationFailed(f"no entry >= lambda = {lam}; eigenvalue outside the numerical range")


def construct(A: TropMatrix, lam, *, eigenvalues=None, size_cap: int | None = DEFAULT_SIZE_CAP) -> GenEigenpair:
    """Scaled generalized eigenvector for the algebraic eigenvalue ``lam``.

    Pass ``eigenvalues`` to skip recomputing the spectrum.  The result is
    re-verified before it is returned.
    """
    require_square(A)
    lam = scalar(lam)
    if eigenvalues is None:
        eigenvalues = spectrum(A, size_cap).as_list()
    if lam not in eigenvalues:
        raise NotAnEigenvalue(f"{lam} is not an algebraic eigenvalue")
    pair = _dispatch(A, lam)
    if not verify(A, pair) or max(pair.vector) != 0:
        raise InternalVerificationFailed(f"construction {pair.case.value} failed for lambda={lam}")
    return pair


def construct_all(A: TropMatrix, size_cap: int | None = DEFAULT_SIZE_CAP) -> list[GenEigenpair]:
    """One pair per distinct eigenvalue, ascending."""
    eigs = spectrum(A, size_cap).as_list()
    return [construct(A, lam, eigenvalues=eigs) for lam in sorted(set(eigs))]


def eigenpairs_from(A: TropMatrix, k: int, size_cap: int | None = DEFAULT_SIZE_CAP) -> list[GenEigenpair]:
    """Pairs for ``λ_k, ..., λ_n`` (``k`` 0-based), repeated eigenvalues repeated."""
    eigs = spectrum(A, size_cap).as_list()
    if not 0 <= k < len(eigs):
        raise IndexError(f"k={k} out of range for n={len(eigs)}")
    by_value = {lam: construct(A, lam, eigenvalues=eigs) for lam in set(eigs[k:])}
    return [by_value[lam] for lam in eigs[k:]]
