"""Command-line front end: ``tropeig <command> [options] MATRIX_FILE``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import charpoly, geneig, spectral
from .errors import (
    DimensionMismatch,
    InternalVerificationFailed,
    NotAnEigenvalue,
    ParseError,
    SizeLimitExceeded,
    SpectrumMismatch,
    TropicalError,
    ZeroVector,
)
from .matrix import load_matrix, quadratic_form, self_inner
from .semiring import format_scalar as fmt
from .semiring import parse_scalar, tmul

SCHEMA = 1
COMMANDS = ("eig", "charpoly", "geneig", "numrange", "rayleigh", "verify", "oracle-check")
EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    input_path: str
    format: str | None = None
    output: str = "text"
    lam: str | None = None
    k: int | None = None
    samples: int = 1000
    seed: int = 0
    size_cap: int | None = None
    vector: str | None = None


class _Failed(Exception):
    """A check ran but did not hold; carries the report to print."""

    def __init__(self, doc: dict, text: str):
        super().__init__(text)
        self.doc, self.text = doc, text


def _vec(x) -> str:
    return "(" + ", ".join(fmt(v) for v in x) + ")"


def _cap(cfg: RunConfig, default: int) -> int:
    return default if cfg.size_cap is None else cfg.size_cap


def _eig(A, cfg):
    roots = charpoly.spectrum(A, _cap(cfg, charpoly.DEFAULT_SIZE_CAP))
    eigs = roots.as_list()
    doc = {
        "n": A.n,
        "eigenvalues": [fmt(v) for v in eigs],
        "roots": [{"root": fmt(r), "multiplicity": m} for r, m in roots.pairs],
    }
    return doc, ", ".join(fmt(v) for v in eigs)


def _charpoly(A, cfg):
    P = charpoly.char_coefficients(A, _cap(cfg, charpoly.DEFAULT_SIZE_CAP))
    doc = {"n": A.n, "coefficients": [fmt(c) for c in P.coeffs]}
    lines = ["power  coefficient"] + [f"x^{k:<4} {fmt(c)}" for k, c in enumerate(P.coeffs)]
    return doc, "\n".join(lines)


def _pair_doc(A, pair):
    return {**pair.to_dict(), "verified": geneig.verify(A, pair)}


def _pair_text(d):
    return f"lambda={d['lambda']}  x=({', '.join(d['vector'])})  case={d['case']}  p={d['p']} q={d['q']}  verified={str(d['verified']).lower()}"


def _geneig(A, cfg):
    cap = _cap(cfg, charpoly.DEFAULT_SIZE_CAP)
    if cfg.lam is not None:
        d = _pair_doc(A, geneig.construct(A, parse_scalar(cfg.lam), size_cap=cap))
        return d, _pair_text(d)
    pairs = [_pair_doc(A, p) for p in geneig.construct_all(A, cap)]
    return {"pairs": pairs}, "\n".join(_pair_text(d) for d in pairs)


def _numrange(A, cfg):
    r = spectral.numerical_range(A)
    return {"lo": fmt(r.lo), "hi": fmt(r.hi)}, f"[{fmt(r.lo)}, {fmt(r.hi)}]"


def _rayleigh(A, cfg):
    if cfg.k is None:
        raise ParseError("rayleigh requires --k")
    if not 1 <= cfg.k <= A.n:
        raise ParseError(f"--k must lie in 1..{A.n}")
    pairs = geneig.eigenpairs_from(A, cfg.k - 1, _cap(cfg, charpoly.DEFAULT_SIZE_CAP))
    samples = spectral.sample_span(len(pairs), cfg.samples, cfg.seed)
    rep = spectral.rayleigh_span_check(A, pairs, samples)
    doc = {
        "k": cfg.k,
        "lambda_k": fmt(rep.lambda_k),
        "min_observed": fmt(rep.min_observed),
        "witness": [fmt(c) for c in rep.witness.coefficients],
        "witness_vector": [fmt(v) for v in rep.witness.vector([p.vector for p in pairs])],
        "all_geq_lambda_k": rep.all_geq_lambda_k,
        "samples": rep.samples,
        "seed": cfg.seed,
        "holds": rep.holds,
    }
    text = (
        f"k={cfg.k} lambda_k={doc['lambda_k']} min_observed={doc['min_observed']} "
        f"samples={rep.samples} all_geq={str(rep.all_geq_lambda_k).lower()} holds={str(rep.holds).lower()}"
    )
    if not rep.holds:
        raise _Failed(doc, text)
    return doc, text


def _verify(A, cfg):
    if cfg.lam is None or cfg.vector is None:
        raise ParseError("verify requires --lambda and a vector argument")
    lam = parse_scalar(cfg.lam)
    x = tuple(parse_scalar(t) for t in cfg.vector.split(","))
    if len(x) != A.n:
        raise DimensionMismatch(f"vector has {len(x)} entries, matrix is {A.n}x{A.n}")
    pair = geneig.GenEigenpair(lam, x, geneig.Case.EPSILON_CASE, 0, 0)
    ok = geneig.verify(A, pair)
    doc = {
        "lambda": fmt(lam),
        "vector": [fmt(v) for v in x],
        "quadratic_form": fmt(quadratic_form(A, x)),
        "rhs": fmt(tmul(lam, self_inner(x))),
        "verified": ok,
    }
    text = f"x^T A x = {doc['quadratic_form']}, lambda (x) x^T x = {doc['rhs']}: {'verified' if ok else 'NOT verified'}"
    if not ok:
        raise _Failed(doc, text)
    return doc, text


def _oracle_check(A, cfg):
    fast = charpoly.char_coefficients(A, _cap(cfg, charpoly.DEFAULT_SIZE_CAP))
    slow = charpoly.char_coefficients_oracle(A, _cap(cfg, 8))
    equal = fast == slow
    doc = {
        "n": A.n,
        "coefficients": [fmt(c) for c in fast.coeffs],
        "oracle_coefficients": [fmt(c) for c in slow.coeffs],
        "equal": equal,
    }
    text = f"charpoly {'matches' if equal else 'DIFFERS FROM'} oracle: {', '.join(doc['coefficients'])}"
    if not equal:
        raise _Failed(doc, text)
    return doc, text


_HANDLERS = {
    "eig": _eig,
    "charpoly": _charpoly,
    "geneig": _geneig,
    "numrange": _numrange,
    "rayleigh": _rayleigh,
    "verify": _verify,
    "oracle-check": _oracle_check,
}


def _emit(cfg: RunConfig, doc: dict, text: str) -> str:
    if cfg.output == "json":
        return json.dumps({"schema": SCHEMA, "command": cfg.command, **doc}, sort_keys=True)
    return text


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit_status, report)``."""
    try:
        A = load_matrix(cfg.input_path, cfg.format)
        doc, text = _HANDLERS[cfg.command](A, cfg)
    except _Failed as fail:
        return EXIT_FAILED, _emit(cfg, fail.doc, fail.text)
    except (NotAnEigenvalue, SpectrumMismatch, InternalVerificationFailed) as exc:
        return EXIT_FAILED, _emit(cfg, {"error": type(exc).__name__, "message": str(exc)}, f"error: {exc}")
    except (ParseError, SizeLimitExceeded, DimensionMismatch, ZeroVector, TropicalError, OSError) as exc:
        return EXIT_INPUT, _emit(cfg, {"error": type(exc).__name__, "message": str(exc)}, f"error: {exc}")
    return EXIT_OK, _emit(cfg, doc, text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropeig", description="Max-plus algebraic eigenvalues and generalized eigenvectors.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input_path", metavar="MATRIX_FILE")
    common.add_argument("--format", choices=("json", "csv"), default=None, help="input format (default: by extension)")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--size-cap", type=int, default=None, help="override the matrix size limit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("geneig", "verify"):
            p.add_argument("--lambda", dest="lam", metavar="TOKEN", help="eigenvalue token; write --lambda=-inf for epsilon")
        if name == "verify":
            p.add_argument("vector", help="comma-separated scalar tokens; put '--' before it if it starts with '-'")
        if name == "rayleigh":
            p.add_argument("--k", type=int, required=True, help="1-based eigenvalue index")
            p.add_argument("--samples", type=int, default=1000)
            p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if v is not None or k in ("format", "size_cap")})
    if cfg.seed < 0:
        print("error: --seed must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    status, report = run(cfg)
    print(report, file=sys.stdout if status == EXIT_OK or cfg.output == "json" else sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
