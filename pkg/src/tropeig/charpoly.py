"""Characteristic max-polynomial and algebraic eigenvalues.

The coefficient of ``x^(n-k)`` is ``delta_k``, the best weight of a permutation
on some ``k``-element principal submatrix (equivalently, of a family of
disjoint cycles covering ``k`` nodes of the precedence digraph).
"""
from __future__ import annotations

import itertools

from .errors import SizeLimitExceeded
from .matrix import TropMatrix, require_square
from .poly import MaxPolynomial, RootMultiset, roots
from .semiring import EPS, common_denominator, lift, unlift

DEFAULT_SIZE_CAP = 10
ORACLE_SIZE_CAP = 9


def _grid(A: TropMatrix):
    d = common_denominator(A.entries())
    return d, [[lift(v, d) for v in row] for row in A.rows]


def _check_cap(n: int, cap: int | None):
    if cap is not None and n > cap:
        raise SizeLimitExceeded(f"n={n} exceeds size cap {cap}; raise the cap explicitly")


def _cycle_weights(w: list[list], n: int) -> list:
    """Best Hamiltonian cycle weight on each vertex subset (bitmask).

    Held-Karp over paths that start at the lowest vertex of the subset and only
    extend to higher vertices, so each cycle is found once.
    """
    size = 1 << n
    path = [None] * size
    cycle = [EPS] * size
    for s in range(n):
        path[1 << s] = {s: 0}
    for mask in range(1, size):
        ends = path[mask]
        if not ends:
            continue
        s = (mask & -mask).bit_length() - 1
        best = EPS
        for v, wt in ends.items():
            back = w[v][s]
            if back != EPS and wt + back > best:
                best = wt + back
            row = w[v]
            for u in range(s + 1, n):
                bit = 1 << u
                if mask & bit or row[u] == EPS:
                    continue
                nxt = path[mask | bit]
                if nxt is None:
                    nxt = path[mask | bit] = {}
                cand = wt + row[u]
                if cand > nxt.get(u, EPS):
                    nxt[u] = cand
        cycle[mask] = best
    return cycle


def char_coefficients(A: TropMatrix, size_cap: int | None = DEFAULT_SIZE_CAP) -> MaxPolynomial:
    """Coefficients ``c_0..c_n`` of the characteristic max-polynomial of ``A``."""
    n = require_square(A)
    _check_cap(n, size_cap)
    d, w = _grid(A)
    cycle = _cycle_weights(w, n)

    size = 1 << n
    cover = [EPS] * size
    cover[0] = 0
    delta = [EPS] * (n + 1)
    delta[0] = 0
    for mask in range(1, size):
        low = mask & -mask
        rest = mask ^ low
        best = EPS
        sub = rest
        while True:
            c = cycle[low | sub]
            if c != EPS:
                other = cover[rest ^ sub]
                if other != EPS and c + other > best:
                    best = c + other
            if sub == 0:
                break
            sub = (sub - 1) & rest
        cover[mask] = best
        k = mask.bit_count()
        if best != EPS and best > delta[k]:
            delta[k] = best
    return MaxPolynomial(unlift(delta[n - j], d) for j in range(n + 1))


def char_coefficients_oracle(A: TropMatrix, size_cap: int | None = ORACLE_SIZE_CAP) -> MaxPolynomial:
    """Same contract as :func:`char_coefficients`, by brute force.

    Expands the permanent of ``A ⊕ x⊗I`` over all ``n!`` permutations: every
    fixed point may contribute either ``a_ii`` or a factor ``x``.
    """
    n = require_square(A)
    _check_cap(n, size_cap)
    d, w = _grid(A)
    coeffs = [EPS] * (n + 1)
    for perm in itertools.permutations(range(n)):
        moved = 0
        dead = False
        fixed = []
        for i, j in enumerate(perm):
            if i == j:
                fixed.append(w[i][i])
            elif w[i][j] == EPS:
                dead = True
                break
            else:
                moved += w[i][j]
        if dead:
            continue
        for pick in itertools.product((False, True), repeat=len(fixed)):
            # pick[t] -> fixed point t takes the x term
            weight = moved
            for take_x, a in zip(pick, fixed):
                if not take_x:
                    weight = weight + a
            power = sum(pick)
            if weight > coeffs[power]:
                coeffs[power] = weight
    return MaxPolynomial(unlift(c, d) for c in coeffs)


def spectrum(A: TropMatrix, size_cap: int | None = DEFAULT_SIZE_CAP) -> RootMultiset:
    """Algebraic eigenvalues of ``A`` with multiplicities."""
    return roots(char_coefficients(A, size_cap))


def algebraic_eigenvalues(A: TropMatrix, size_cap: int | None = DEFAULT_SIZE_CAP) -> tuple:
    """``(lambda_1, ..., lambda_n)`` ascending, ``EPS`` first, with repetition."""
    return tuple(spectrum(A, size_cap).as_list())
