"""Command-line front end: one verb per library operation, JSON in and out.

Exit codes: 0 success, 1 domain-level negative (not equivalent, invalid
chain, not realizable, failed check), 2 input error.  Errors go to stderr
as {"error": code, "message": text}.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .matrices import (
    DimensionCapError,
    DimensionMismatchError,
    column_class,
    compound,
    divisor_chain,
    rank,
)
from .oracle import ScanConfig, cross_check_checker, enumerate_realized_triples, verify_bound_theorems
from .realizability import (
    NOT_REALIZABLE,
    InvalidChainError,
    SearchExhaustedError,
    Triple,
    UnsupportedConstructionError,
    check_chain,
    check_triple,
    realize_product_equal,
)
from .rings import Z, RingMismatchError
from .smith import (
    SingularMatrixError,
    block_normal_form,
    equivalent,
    smith_normal_form,
    transform_certificate,
    verify_block_lemma,
)


class CliError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("bad-arguments", message)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CliError("no-such-file", f"cannot read {path!r}")
    except json.JSONDecodeError as exc:
        raise CliError("bad-json", f"{path}: {exc}")


def _emit(obj, path: str | None = None) -> None:
    text = json.dumps(obj, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _matrix_arg(path: str):
    try:
        return jsonio.decode_matrix(_load_json(path))
    except ValueError as exc:
        raise CliError("bad-input", str(exc))


def _cmd_divisors(args) -> int:
    m = _matrix_arg(args.infile)
    chain = divisor_chain(m)
    if m.is_zero():
        cls = None
    else:
        cls = "principal" if column_class(m).principal else "non-principal"
    _emit({
        "d": [jsonio.encode_ideal(d) for d in chain.d],
        "e": [jsonio.encode_ideal(e) for e in chain.elementary],
        "rank": rank(m),
        "columnClass": cls,
    })
    return 0


def _cmd_compound(args) -> int:
    m = _matrix_arg(args.infile)
    if not 1 <= args.k <= m.n:
        raise CliError("bad-input", f"k must be in 1..{m.n}, got {args.k}")
    _emit(jsonio.encode_matrix(compound(m, args.k)))
    return 0


def _cmd_smith(args) -> int:
    m = _matrix_arg(args.infile)
    if m.ring != Z:
        raise CliError("ring-mismatch", "smith runs over Z only")
    s = smith_normal_form(m)
    _emit({
        "P": jsonio.encode_matrix(s.P),
        "D": jsonio.encode_matrix(s.D),
        "Q": jsonio.encode_matrix(s.Q),
        "diagonal": list(s.diagonal),
        "verified": True,
    })
    return 0


def _cmd_equivalent(args) -> int:
    a = _matrix_arg(args.a)
    b = _matrix_arg(args.b)
    eq = equivalent(a, b)
    p = q = None
    if eq and a.ring == Z:
        cert = transform_certificate(a, b)
        if cert is not None:
            p, q = (jsonio.encode_matrix(cert[0]), jsonio.encode_matrix(cert[1]))
    _emit({"equivalent": eq, "P": p, "Q": q})
    return 0 if eq else 1


def _chain_arg(path: str):
    try:
        return jsonio.decode_chain(_load_json(path))
    except ValueError as exc:
        raise CliError("bad-input", str(exc))


def _cmd_check_chain(args) -> int:
    ok = check_chain(_chain_arg(args.infile))
    _emit({"valid": ok})
    return 0 if ok else 1


def _cmd_check_triple(args) -> int:
    try:
        triple = jsonio.decode_triple(_load_json(args.infile))
    except ValueError as exc:
        raise CliError("bad-input", str(exc))
    verdict = check_triple(triple)
    _emit(jsonio.encode_verdict(verdict))
    return 1 if verdict.outcome == NOT_REALIZABLE else 0


def _cmd_realize(args) -> int:
    a = _chain_arg(args.a)
    b = _chain_arg(args.b)
    if args.c is not None:
        c = _chain_arg(args.c)
        try:
            verdict = check_triple(Triple(a, b, c))
        except ValueError as exc:
            raise CliError("bad-input", str(exc))
        _emit(jsonio.encode_verdict(verdict))
        return 1 if verdict.outcome == NOT_REALIZABLE else 0
    try:
        wa, wb = realize_product_equal(a, b)
    except InvalidChainError as exc:
        print(json.dumps({"error": "invalid-chain", "message": str(exc)}), file=sys.stderr)
        return 1
    except (UnsupportedConstructionError, SearchExhaustedError) as exc:
        print(json.dumps({"error": "no-construction", "message": str(exc)}), file=sys.stderr)
        return 1
    _emit({
        "witnessA": jsonio.encode_matrix(wa),
        "witnessB": jsonio.encode_matrix(wb),
        "productChain": [jsonio.encode_ideal(x * y) for x, y in zip(a.d, b.d)],
    })
    return 0


def _cmd_block_form(args) -> int:
    m = _matrix_arg(args.infile)
    if m.ring != Z:
        raise CliError("ring-mismatch", "block-form runs over Z only")
    try:
        bnf = block_normal_form(m)
    except SingularMatrixError as exc:
        print(json.dumps({"error": "singular-matrix", "message": str(exc)}), file=sys.stderr)
        return 1
    _emit({
        "blocks": [jsonio.encode_matrix(blk) for blk in bnf.blocks],
        "P": jsonio.encode_matrix(bnf.P),
        "Q": jsonio.encode_matrix(bnf.Q),
        "verified": True,
    })
    return 0


def _cmd_verify_lemma(args) -> int:
    obj = _load_json(args.infile)
    ring = obj.get("ring")
    try:
        blocks = [jsonio.decode_matrix({"ring": ring, "entries": entries})
                  for entries in obj.get("blocks", [])]
        report = verify_block_lemma(blocks)
    except ValueError as exc:
        raise CliError("bad-input", str(exc))
    _emit({
        "expected": [jsonio.encode_ideal(i) for i in report.expected_elementary],
        "actual": [jsonio.encode_ideal(i) for i in report.actual_elementary],
        "elementaryOk": list(report.elementary_ok),
        "classOk": report.class_ok,
        "passed": report.passed,
    })
    return 0 if report.passed else 1


def _cmd_oracle_scan(args) -> int:
    cfg = ScanConfig(
        n=args.n,
        entry_bound=args.bound,
        ring=args.ring,
        det_bound=args.det_bound,
        sample_count=args.samples,
        seed=args.seed,
        mode=args.mode,
        pair_ceiling=args.ceiling,
    )
    try:
        if args.check == "triples":
            report = enumerate_realized_triples(cfg)
        elif args.check == "bounds":
            report = verify_bound_theorems(cfg)
        else:
            report = cross_check_checker(cfg)
    except ValueError as exc:
        raise CliError("bad-input", str(exc))
    _emit(report.to_json(), args.out)
    return 0 if report.passed else 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="detdiv", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("divisors", help="divisor chain, rank, column class of a matrix")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_divisors)

    p = sub.add_parser("compound", help="matrix of k x k minors")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_compound)

    p = sub.add_parser("smith", help="Smith normal form with transforms (Z)")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_smith)

    p = sub.add_parser("equivalent", help="unimodular equivalence of two matrices")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_equivalent)

    p = sub.add_parser("check-chain", help="validity of one divisor chain")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_check_chain)

    p = sub.add_parser("check-triple", help="realizability verdict for a chain triple")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_check_triple)

    p = sub.add_parser("realize", help="construct witnesses for chains")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("block-form", help="doubled-size block normal form (Z)")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_block_form)

    p = sub.add_parser("verify-lemma", help="check a block-diagonal divisor assembly")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_verify_lemma)

    p = sub.add_parser("oracle-scan", help="brute-force scans and cross checks")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--ring", choices=["Z", "ZSqrt-5"], default="Z")
    p.add_argument("--mode", choices=["auto", "exhaustive", "sampled"], default="auto")
    p.add_argument("--det-bound", dest="det_bound", type=int)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ceiling", type=int, default=10_000_000)
    p.add_argument("--check", choices=["triples", "bounds", "cross"], default="triples")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_oracle_scan)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(json.dumps({"error": exc.code, "message": exc.message}), file=sys.stderr)
        return 2
    except (RingMismatchError,) as exc:
        print(json.dumps({"error": "ring-mismatch", "message": str(exc)}), file=sys.stderr)
        return 2
    except (DimensionMismatchError,) as exc:
        print(json.dumps({"error": "dimension-mismatch", "message": str(exc)}), file=sys.stderr)
        return 2
    except (DimensionCapError,) as exc:
        print(json.dumps({"error": "dimension-cap", "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
