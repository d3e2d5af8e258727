"""Numerical range, Rayleigh quotients and the greatest geometric eigenvalue."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import networkx as nx
import numpy as np

from .errors import DimensionMismatch, NoFiniteCycle, SpectrumMismatch, ZeroVector
from .matrix import TropMatrix, TropVector, is_nonzero, matvec, quadratic_form, require_square, scale, self_inner
from .semiring import EPS, Scalar, common_denominator, is_eps, lift, scalar, tmul, unlift


@dataclass(frozen=True)
class RangeInterval:
    """Closed interval ``[lo, hi]``; ``lo = EPS`` means unbounded below."""

    lo: Scalar
    hi: Scalar

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi


def numerical_range(A: TropMatrix) -> RangeInterval:
    require_square(A)
    return RangeInterval(min(A.diagonal()), max(A.entries()))


def rayleigh_quotient(A: TropMatrix, x: Sequence[Scalar]) -> Scalar:
    """``(x^T ⊗ A ⊗ x) ⊗ (x^T ⊗ x)^{-1}``, invariant under scaling ``x``."""
    if not is_nonzero(x):
        raise ZeroVector("Rayleigh quotient of the zero vector")
    q = quadratic_form(A, x)
    return EPS if is_eps(q) else q - self_inner(x)


# -- greatest geometric eigenvalue -------------------------------------------

def precedence_graph(A: TropMatrix) -> nx.DiGraph:
    n = require_square(A)
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_weighted_edges_from((i, j, A[i, j]) for i in range(n) for j in range(n) if not is_eps(A[i, j]))
    return g


def _karp(w, nodes: list[int]) -> Fraction:
    """Maximum cycle mean of a strongly connected node set (Karp's recurrence)."""
    m = len(nodes)
    s = nodes[0]
    walks = [{v: (0 if v == s else EPS) for v in nodes}]
    for _ in range(m):
        prev = walks[-1]
        walks.append({v: max((prev[u] + w[u][v] for u in nodes if prev[u] != EPS and w[u][v] != EPS), default=EPS) for v in nodes})
    best = None
    for v in nodes:
        top = walks[m][v]
        if top == EPS:
            continue
        worst = min(Fraction(top - walks[k][v], m - k) for k in range(m) if walks[k][v] != EPS)
        if best is None or worst > best:
            best = worst
    return best


def max_cycle_mean(A: TropMatrix) -> Scalar:
    """Largest mean weight over the cycles of the precedence digraph (``EPS`` if acyclic)."""
    n = require_square(A)
    d = common_denominator(A.entries())
    w = [[lift(v, d) for v in row] for row in A.rows]
    g = precedence_graph(A)
    best = EPS
    for comp in nx.strongly_connected_components(g):
        nodes = sorted(comp)
        if len(nodes) == 1 and is_eps(A[nodes[0], nodes[0]]):
            continue
        mean = _karp(w, nodes) / d
        if mean > best:
            best = mean
    return best


def _longest_paths(B: list[list]) -> list[list]:
    """Weights of the heaviest nonempty paths; ``B`` must have no positive cycle."""
    n = len(B)
    plus = [row[:] for row in B]
    for k in range(n):
        pk = plus[k]
        for i in range(n):
            pik = plus[i][k]
            if is_eps(pik):
                continue
            pi = plus[i]
            for j in range(n):
                if not is_eps(pk[j]) and pik + pk[j] > pi[j]:
                    pi[j] = pik + pk[j]
    return plus


def geometric_eigenvector(A: TropMatrix) -> TropVector:
    """A scaled ``x`` with ``A ⊗ x = λ ⊗ x`` for ``λ`` the maximum cycle mean.

    Takes the tropical sum of the Kleene-star columns of ``(-λ) ⊗ A`` over
    all critical nodes (each column alone is already an eigenvector).
    """
    n = require_square(A)
    lam = max_cycle_mean(A)
    if is_eps(lam):
        raise NoFiniteCycle("precedence digraph has no cycle")
    plus = _longest_paths([[tmul(v, -lam) for v in row] for row in A.rows])
    crit = [j for j in range(n) if plus[j][j] == 0]
    star = [[Fraction(0) if i == j else plus[i][j] for j in range(n)] for i in range(n)]
    x = scale(tuple(max(star[i][j] for j in crit) for i in range(n)))
    if matvec(A, x) != tuple(tmul(lam, v) for v in x):
        raise AssertionError("Kleene-star column is not an eigenvector")
    return x


# -- Rayleigh bound over a span of generalized eigenvectors -------------------

@dataclass(frozen=True)
class SpanSample:
    """Coefficients of a max-combination ``u = ⊕_i c_i ⊗ x_i``."""

    coefficients: tuple

    def vector(self, vectors: Sequence[Sequence[Scalar]]) -> TropVector:
        if len(vectors) != len(self.coefficients):
            raise DimensionMismatch("one coefficient per spanning vector")
        n = len(vectors[0])
        return tuple(max(tmul(c, x[j]) for c, x in zip(self.coefficients, vectors)) for j in range(n))


@dataclass(frozen=True)
class RayleighReport:
    lambda_k: Scalar
    min_observed: Scalar
    witness: SpanSample
    all_geq_lambda_k: bool
    samples: int

    @property
    def holds(self) -> bool:
        return self.all_geq_lambda_k and self.min_observed == self.lambda_k


def sample_span(m: int, count: int, seed: int = 0, values=range(-5, 6), eps_prob: float = 0.25) -> list[SpanSample]:
    """Seeded coefficient samples, none of them all-``EPS``."""
    rng = np.random.default_rng(seed)
    table = np.array([scalar(v) for v in values] + [EPS], dtype=object)
    picks = rng.integers(0, len(values), size=(count, m))
    dead = rng.random((count, m)) < eps_prob
    rescue = rng.integers(0, m, size=count)
    all_dead = dead.all(axis=1)
    dead[all_dead, rescue[all_dead]] = False
    picks[dead] = len(values)
    return [SpanSample(tuple(row)) for row in table[picks].tolist()]


_EXACT_LIMIT = 2.0 ** 50


def _span_quotients(A: TropMatrix, vectors, coeffs: list[tuple]):
    """Rayleigh quotients of many max-combinations at once.

    Everything is mapped onto a common integer grid ``Z/d`` and evaluated in
    float64, which is exact for integers below 2**53 and represents ``EPS`` as
    ``-inf``.  Returns the quotients on the grid together with ``d``.
    """
    # samples reuse a few coefficient objects; keying on identity avoids Fraction hashing
    distinct = {id(c): c for cs in coeffs for c in cs}
    d = common_denominator([*A.entries(), *(v for x in vectors for v in x), *distinct.values()])
    cache = {key: float(lift(v, d)) for key, v in distinct.items()}

    def grid(rows):
        return np.array([[float(lift(v, d)) for v in row] for row in rows], dtype=np.float64)

    W, X = grid(A.rows), grid(vectors)
    C = np.array([[cache[id(c)] for c in cs] for cs in coeffs], dtype=np.float64)
    if max(float(np.abs(a[np.isfinite(a)]).max(initial=0)) for a in (W, X, C)) * 4 >= _EXACT_LIMIT:
        raise OverflowError("values too large for the exact float64 grid")
    with np.errstate(invalid="raise"):
        U = (C[:, :, None] + X[None, :, :]).max(axis=1)
        Q = (U[:, :, None] + W[None, :, :] + U[:, None, :]).max(axis=(1, 2))
        top = U.max(axis=1)
        if not np.isfinite(top).all():
            raise ZeroVector("a sample combines to the zero vector")
        return Q - 2 * top, d


def rayleigh_span_check(A: TropMatrix, pairs: Sequence, samples: Sequence[SpanSample]) -> RayleighReport:
    """Check the Rayleigh lower bound on ``span{x_k, ..., x_n}``.

    ``pairs`` are the generalized eigenpairs for ``λ_k <= ... <= λ_n``.  Every
    sampled combination must have quotient ``>= λ_k``; the minimum is then
    certified by ``u = x_k`` itself, whose quotient is exactly ``λ_k``.
    """
    from .geneig import verify

    if not pairs:
        raise SpectrumMismatch("no eigenpairs supplied")
    lams = [p.lam for p in pairs]
    if any(b < a for a, b in zip(lams, lams[1:])):
        raise SpectrumMismatch("eigenpairs must be sorted by eigenvalue")
    for p in pairs:
        if not verify(A, p) or max(p.vector) != 0:
            raise SpectrumMismatch(f"pair for lambda={p.lam} is not a scaled generalized eigenvector")

    own = SpanSample((Fraction(0),) + (EPS,) * (len(pairs) - 1))
    candidates = [own, *samples]
    for s in candidates:
        if len(s.coefficients) != len(pairs):
            raise DimensionMismatch("sample length differs from the number of eigenpairs")
        if all(is_eps(c) for c in s.coefficients):
            raise ZeroVector("sample has no finite coefficient")
    quotients, d = _span_quotients(A, [p.vector for p in pairs], [s.coefficients for s in candidates])
    lam_k = lams[0]
    low = int(np.argmin(quotients))
    return RayleighReport(
        lambda_k=lam_k,
        min_observed=unlift(int(quotients[low]) if np.isfinite(quotients[low]) else EPS, d),
        witness=candidates[low],
        all_geq_lambda_k=bool((quotients >= float(lift(lam_k, d))).all()),
        samples=len(samples),
    )
