"""Walk through the 4x4 worked example: spectrum, coefficients, eigenvectors, Rayleigh checks."""
import argparse

from tropeig import (
    char_coefficients,
    construct_all,
    construct_leq,
    construct_second,
    eigenpairs_from,
    format_scalar,
    numerical_range,
    rayleigh_span_check,
    sample_span,
    spectrum,
)
from tropeig.matrix import load_matrix


def show(x):
    return "(" + ", ".join(format_scalar(v) for v in x) + ")"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("matrix", nargs="?", default="data/example.json")
    parser.add_argument("--samples", type=int, default=1000)
    args = parser.parse_args()

    A = load_matrix(args.matrix)
    P = char_coefficients(A)
    print("coefficients c_0..c_n:", show(P.coeffs))
    eigs = spectrum(A).as_list()
    print("algebraic eigenvalues:", show(eigs))
    r = numerical_range(A)
    print(f"numerical range: [{format_scalar(r.lo)}, {format_scalar(r.hi)}]")

    print("\ndefault constructions")
    for pair in construct_all(A):
        d = pair.to_dict()
        print(f"  lambda={d['lambda']:>5}  x={show(pair.vector)}  {d['case']} p={d['p']} q={d['q']}")

    print("\npinned constructions, (p, q) = (3, 4) and (1, 4)")
    for lam in (0, 2, 4):
        print(f"  lambda={lam}  x={show(construct_second(A, lam, 2, 3).vector)}")
    print(f"  lambda=5  x={show(construct_leq(A, 5, 0, 3).vector)}")

    print("\nRayleigh lower bound over span{x_k..x_n}")
    for k in range(A.n):
        pairs = eigenpairs_from(A, k)
        rep = rayleigh_span_check(A, pairs, sample_span(len(pairs), args.samples, seed=k))
        print(f"  k={k + 1}  lambda_k={format_scalar(rep.lambda_k):>5}  min={format_scalar(rep.min_observed):>5}  holds={rep.holds}")


if __name__ == "__main__":
    main()
