"""Exit criteria.  Each test records one PASS/FAIL line shown in the terminal summary."""
import collections
import functools
import random
import time
from fractions import Fraction

from conftest import ACCEPTANCE_RESULTS, EXAMPLE_ROWS
from tropeig.charpoly import char_coefficients, char_coefficients_oracle, spectrum
from tropeig.cli import RunConfig, run
from tropeig.ensemble import matrix_ensemble, random_matrix, random_polynomial, random_scalar
from tropeig.geneig import Case, construct, construct_all, construct_leq, construct_second, verify
from tropeig.matrix import TropMatrix, matrix_to_json, max_norm, quadratic_form, scale, vector
from tropeig.poly import roots, roots_oracle
from tropeig.semiring import EPS, is_eps, tadd, tmul
from tropeig.spectral import max_cycle_mean, numerical_range, precedence_graph, rayleigh_quotient, rayleigh_span_check, sample_span

import networkx as nx

ENSEMBLE_SIZE = 10_000
ENSEMBLE_SEED = 2024
E = EPS


def record(key, ok, detail=""):
    ACCEPTANCE_RESULTS[key] = (bool(ok), detail)
    assert ok, f"{key}: {detail}"


@functools.lru_cache(maxsize=None)
def ensemble():
    start = time.perf_counter()
    mats = list(matrix_ensemble(ENSEMBLE_SIZE, seed=ENSEMBLE_SEED, max_n=7, max_eps=0.6))
    spectra = [spectrum(A).as_list() for A in mats]
    return mats, spectra, time.perf_counter() - start


def test_1_worked_example_eigenvalues(tmp_path):
    path = tmp_path / "example.json"
    path.write_text(matrix_to_json(TropMatrix(EXAMPLE_ROWS)))
    start = time.perf_counter()
    status, out = run(RunConfig("eig", str(path)))
    elapsed = time.perf_counter() - start
    expected = "0, 2, 4, 5"
    record("1. worked example eigenvalues", status == 0 and out == expected and elapsed < 1.0,
           f"eig -> {out!r} (expected {expected!r}) in {elapsed:.3f}s")


def test_2_worked_example_eigenvectors():
    A = TropMatrix(EXAMPLE_ROWS)
    got = {lam: construct_second(A, lam, 2, 3).vector for lam in (0, 2, 4)}
    got[5] = construct_leq(A, 5, 0, 3).vector
    expected = {
        0: vector([E, E, 0, -3]),
        2: vector([E, E, 0, "-3/2"]),
        4: vector([E, E, 0, "-1/2"]),
        5: vector([0, E, E, 0]),
    }
    pinned_ok = got == expected and all(quadratic_form(A, x) == lam for lam, x in got.items())
    default = construct_all(A)
    default_ok = all(verify(A, p) for p in default)
    record("2. worked example eigenvectors", pinned_ok and default_ok,
           f"pinned vectors match={got == expected}; default pairs verified={default_ok}")


def test_3_range_containment():
    mats, spectra, build_time = ensemble()
    start = time.perf_counter()
    violations = 0
    for A, eigs in zip(mats, spectra):
        r = numerical_range(A)
        violations += sum(lam not in r for lam in eigs)
    elapsed = build_time + time.perf_counter() - start
    record("3. numerical range containment", violations == 0 and elapsed <= 60,
           f"{len(mats)} matrices, {violations} violations, {elapsed:.1f}s")


def test_4_construction_soundness():
    mats, spectra, _ = ensemble()
    violations = 0
    cases = collections.Counter()
    for A, eigs in zip(mats, spectra):
        for lam in set(eigs):
            pair = construct(A, lam, eigenvalues=eigs)
            cases[pair.case] += 1
            ok = verify(A, pair)
            if not is_eps(lam):
                ok = ok and max_norm(pair.vector) == 0 and quadratic_form(A, pair.vector) == lam
            violations += not ok
    counts = {c.value: cases[c] for c in Case}
    record("4. construction soundness", violations == 0 and min(counts.values()) >= 50,
           f"{violations} violations, branch counts {counts}")


def test_5_charpoly_oracle():
    rng = random.Random(55)
    mismatches = 0
    count = 2000
    for _ in range(count):
        A = random_matrix(rng, rng.randint(1, 6), rng.uniform(0, 0.6))
        mismatches += char_coefficients(A) != char_coefficients_oracle(A)
    record("5. charpoly oracle equivalence", mismatches == 0, f"{count} matrices, {mismatches} mismatches")


def test_6_root_oracle():
    rng = random.Random(66)
    mismatches = 0
    count = 5000
    for _ in range(count):
        P = random_polynomial(rng, max_degree=10, max_eps=0.7)
        r = roots(P)
        mismatches += r.finite_roots() != roots_oracle(P).finite_roots() or r.size != P.degree
    record("6. root oracle equivalence", mismatches == 0, f"{count} polynomials, {mismatches} mismatches")


def test_7_greatest_eigenvalue():
    mats, spectra, _ = ensemble()
    violations = 0
    cyclic = 0
    for A, eigs in zip(mats, spectra):
        mcm = max_cycle_mean(A)
        acyclic = nx.is_directed_acyclic_graph(precedence_graph(A))
        if not is_eps(mcm):
            cyclic += 1
            violations += eigs[-1] != mcm
        violations += all(is_eps(v) for v in eigs) != acyclic
        violations += acyclic != is_eps(mcm)
    record("7. greatest eigenvalue = max cycle mean", violations == 0,
           f"{len(mats)} matrices ({cyclic} with a cycle), {violations} violations")


def test_8_rayleigh_bound():
    mats, spectra, _ = ensemble()
    violations = 0
    checks = 0
    for idx, (A, eigs) in enumerate(zip(mats, spectra)):
        by_value = {lam: construct(A, lam, eigenvalues=eigs) for lam in set(eigs)}
        pairs = [by_value[lam] for lam in eigs]
        for k in range(A.n):
            span = pairs[k:]
            rep = rayleigh_span_check(A, span, sample_span(len(span), 200, seed=idx * 8 + k))
            checks += 1
            violations += not (rep.all_geq_lambda_k and rep.min_observed == eigs[k])
    record("8. Rayleigh bound", violations == 0, f"{checks} (matrix, k) checks x 200 samples, {violations} violations")


def test_9_axioms_and_scaling_laws():
    rng = random.Random(99)
    n_cases = 1000
    failures = collections.Counter()
    for _ in range(n_cases):
        a, b, c = (random_scalar(rng, 0.2, span=20) for _ in range(3))
        failures["semiring"] += not (
            tadd(a, tadd(b, c)) == tadd(tadd(a, b), c)
            and tmul(a, tmul(b, c)) == tmul(tmul(a, b), c)
            and tadd(a, b) == tadd(b, a)
            and tmul(a, b) == tmul(b, a)
            and tadd(a, a) == a
            and tmul(a, tadd(b, c)) == tadd(tmul(a, b), tmul(a, c))
        )

        n = rng.randint(1, 6)
        A = random_matrix(rng, n, rng.uniform(0, 0.6))
        x = [random_scalar(rng, 0.4) for _ in range(n)]
        if all(is_eps(v) for v in x):
            x[rng.randrange(n)] = Fraction(rng.randint(-5, 5))
        x = tuple(x)
        y = scale(x)
        failures["scale idempotence"] += not (scale(y) == y and max_norm(y) == 0)
        failures["quotient scaling invariance"] += rayleigh_quotient(A, x) != rayleigh_quotient(A, y)

        shift = Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))
        B = A.shifted(shift)
        eigs = spectrum(A).as_list()
        shifted = [tmul(v, shift) for v in eigs]
        failures["charpoly shift"] += spectrum(B).as_list() != shifted
        failures["geneig covariance"] += not all(verify(B, construct(B, lam)) for lam in set(shifted))
    bad = {k: v for k, v in failures.items() if v}
    record("9. axioms and scaling laws", not bad, f"{n_cases} cases per suite ({len(failures)} suites), failures {bad or 'none'}")
