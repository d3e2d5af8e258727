"""Run the randomized checks over a seeded ensemble and print a summary table."""
import argparse
import collections
import time

from tropeig import construct, max_cycle_mean, numerical_range, rayleigh_span_check, sample_span, spectrum, verify
from tropeig.ensemble import matrix_ensemble
from tropeig.semiring import is_eps


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--max-eps", type=float, default=0.6)
    parser.add_argument("--samples", type=int, default=200)
    args = parser.parse_args()

    t0 = time.perf_counter()
    cases = collections.Counter()
    bad = collections.Counter()
    for idx, A in enumerate(matrix_ensemble(args.count, args.seed, args.max_n, args.max_eps)):
        eigs = spectrum(A).as_list()
        r = numerical_range(A)
        bad["range"] += any(lam not in r for lam in eigs)
        mcm = max_cycle_mean(A)
        bad["cycle mean"] += eigs[-1] != mcm
        by_value = {}
        for lam in set(eigs):
            pair = by_value[lam] = construct(A, lam, eigenvalues=eigs)
            cases[pair.case.value] += 1
            bad["verify"] += not verify(A, pair)
        pairs = [by_value[lam] for lam in eigs]
        for k in range(A.n):
            rep = rayleigh_span_check(A, pairs[k:], sample_span(A.n - k, args.samples, seed=idx))
            bad["rayleigh"] += not rep.holds
        if is_eps(mcm):
            cases["acyclic"] += 1

    print(f"{args.count} matrices in {time.perf_counter() - t0:.1f}s")
    for name in ("range", "cycle mean", "verify", "rayleigh"):
        print(f"  {name:<11} violations: {bad[name]}")
    for name, count in sorted(cases.items()):
        print(f"  {name:<13} {count}")


if __name__ == "__main__":
    main()
