"""Command-line front end: ``blockshuffle <subcommand> ...``.

Exit status: 0 on success, 1 when a check or verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Sequence

from . import blocks_mzv as bm
from .hopf import HOPF_CHECKS, run_hopf_check
from .lyndon import cfl_factorize, decompose_shuffle, decompose_star, lyndon_count, lyndon_words
from .mzv import METHODS, EvalParams, PrecisionError
from .ncpoly import ParseError, Word, parse_word_expr
from .products import DIAMONDS, PRODUCTS, product
from .series import SERIES, named_series
from .series_iso import DEFAULT_DEGREE, IDENTITY_CHECKS, psi


class UsageError(Exception):
    pass


def _monomial(text: str) -> Word:
    p = parse_word_expr(text)
    if len(p) != 1 or next(iter(p.terms.values())) != 1:
        raise UsageError(f"expected a single word, got {text!r}")
    return next(iter(p.words()))


def _emit(args, text: str, obj) -> None:
    print(json.dumps(obj, indent=2) if args.json else text)


def _word_str(w: Word) -> str:
    return " ".join(f"z{i}" for i in w) if w else "1"


# -- handlers -----------------------------------------------------------------------

def cmd_product(args) -> int:
    u, v = parse_word_expr(args.u), parse_word_expr(args.v)
    p = product(args.kind, u, v, DIAMONDS[args.diamond])
    _emit(args, str(p), p.to_json_obj())
    return 0


def cmd_psi(args) -> int:
    p = parse_word_expr(args.expr)
    degree = max(args.degree, p.max_length(), 1)
    out = psi(named_series(args.f, degree), p, DIAMONDS[args.diamond])
    _emit(args, str(out), out.to_json_obj())
    return 0


def cmd_identity_check(args) -> int:
    z = parse_word_expr(args.z)
    if not z.is_letter_combination():
        raise UsageError("--z must be a combination of single letters")
    names = sorted(IDENTITY_CHECKS) if args.which == "all" else [args.which]
    results = {name: bool(IDENTITY_CHECKS[name](z, args.degree)) for name in names}
    lines = [f"{'PASS' if ok else 'FAIL'} {name} (z = {z}, degree {args.degree})" for name, ok in results.items()]
    _emit(args, "\n".join(lines), results)
    return 0 if all(results.values()) else 1


def cmd_lyndon(args) -> int:
    if args.action == "list":
        words = lyndon_words(args.letters, args.n)
        _emit(args, "\n".join(_word_str(w) for w in words), [list(w) for w in words])
    elif args.action == "factor":
        factors = cfl_factorize(_monomial(args.word))
        _emit(args, " | ".join(_word_str(f) for f in factors), [list(f) for f in factors])
    elif args.action == "decompose":
        p = parse_word_expr(args.expr)
        expr = decompose_shuffle(p) if args.product == "sh" else decompose_star(p)
        obj = [
            {"coef": str(c), "factors": [list(w) for w in key]}
            for key, c in sorted(expr.terms.items(), key=lambda t: (-len(t[0]), t[0]))
        ]
        _emit(args, str(expr), obj)
    else:
        n = lyndon_count(args.grading, args.n, args.letters)
        _emit(args, str(n), n)
    return 0


def cmd_hopf_check(args) -> int:
    names = HOPF_CHECKS if args.which == "all" else (args.which,)
    reports = [run_hopf_check(name, args.bound, args.max_letter) for name in names]
    obj = [{"check": r.name, "cases": r.checked, "pass": r.passed, "failures": [str(f) for f in r.failures[:5]]} for r in reports]
    _emit(args, "\n".join(r.summary() for r in reports), obj)
    return 0 if all(r.passed for r in reports) else 1


def cmd_blocks(args) -> int:
    if args.action == "to-z":
        w = bm.block_decompose(bm.parse_binary(args.input))
        _emit(args, _word_str(w), list(w))
    elif args.action == "to-binary":
        if args.input.strip().startswith("z"):
            b = bm.z_word_to_binary(_monomial(args.input))
        else:
            b = bm.phi_index(int(x) for x in args.input.replace(",", " ").split())
        _emit(args, bm.format_binary(b), list(b))
    else:
        idx = bm.binary_to_index(bm.parse_binary(args.input))
        _emit(args, bm.zeta_name(idx), list(idx))
    return 0


def _random_words(rng: random.Random, count: int, max_weight: int) -> list[tuple[Word, Word]]:
    if max_weight < 2:
        raise UsageError("--max-weight must be at least 2")
    pairs: list[tuple[Word, Word]] = []
    while len(pairs) < count:
        u = tuple(rng.randint(1, 5) for _ in range(rng.randint(1, 3)))
        v = tuple(rng.randint(1, 5) for _ in range(rng.randint(1, 3)))
        if sum(u) + sum(v) <= max_weight:
            pairs.append((u, v))
    return pairs


def _relations(args) -> list[bm.Relation]:
    family = args.family
    if family == "product":
        if args.random:
            rng = random.Random(args.seed)
            return [bm.relation_from_block_product(u, v) for u, v in _random_words(rng, args.random, args.max_weight)]
        if args.u is None or args.v is None:
            raise UsageError("--family product needs --u and --v (or --random COUNT)")
        return [bm.relation_from_block_product(_monomial(args.u), _monomial(args.v))]
    if family == "quasipower":
        z = parse_word_expr(args.z or "z2")
        return bm.quasipower_relations(z, args.k if args.k is not None else 1)
    if family == "bunchsof2":
        return [bm.bunchsof2_relation(args.n, args.k if args.k is not None else 0, args.p)]
    return [bm.bowman_bradley_relation(args.n, args.k if args.k is not None else 0)]


def cmd_relations(args) -> int:
    rels = _relations(args)
    text = "\n".join(f"[{r.provenance}]{' (regularized)' if r.regularized else ''}\n  {r}" for r in rels)
    _emit(args, text, [r.to_json_obj() for r in rels])
    return 0


def cmd_verify(args) -> int:
    params = EvalParams(N=args.N, method=args.method)
    reports = []
    for rel in _relations(args):
        if not rel.rendered and rel.closed_form is None:
            reports.append(bm.VerifyReport(rel.provenance, 0.0, 0.0, 0.0, 0.0, args.tol, rel.regularized, True))
            continue
        reports.append(bm.verify_relation(rel, params, args.tol))
    _emit(args, "\n".join(r.summary() for r in reports), [r.to_json_obj() for r in reports])
    # regularized relations are reported but do not decide the exit status
    return 0 if all(r.passed for r in reports if not r.regularized) else 1


# -- parser -----------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised inputs")
    return common


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=bm.FAMILIES, required=True)
    p.add_argument("--u", help="first word (product family)")
    p.add_argument("--v", help="second word (product family)")
    p.add_argument("--random", type=int, default=0, metavar="COUNT", help="random word pairs (product family)")
    p.add_argument("--max-weight", type=int, default=8)
    p.add_argument("--z", help="letter combination (quasipower family)")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="blockshuffle", description="Word algebras, block shuffles and MZV relations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[common], help="multiply two polynomials")
    p.add_argument("--kind", choices=sorted(PRODUCTS), default="bsh")
    p.add_argument("--diamond", choices=sorted(DIAMONDS), default="additive")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("psi", parents=[common], help="apply Psi_f")
    p.add_argument("--f", choices=sorted(SERIES), default="tanh")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--diamond", choices=sorted(DIAMONDS), default="additive")
    p.add_argument("expr")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("identity-check", parents=[common], help="generating-function identities")
    p.add_argument("--which", choices=[*sorted(IDENTITY_CHECKS), "all"], default="all")
    p.add_argument("--z", default="z2")
    p.add_argument("--degree", type=int, default=5)
    p.set_defaults(func=cmd_identity_check)

    p = sub.add_parser("lyndon", parents=[common], help="Lyndon words")
    lsub = p.add_subparsers(dest="action", required=True)
    q = lsub.add_parser("list", parents=[common])
    q.add_argument("--letters", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q = lsub.add_parser("factor", parents=[common])
    q.add_argument("word")
    q = lsub.add_parser("decompose", parents=[common])
    q.add_argument("--product", choices=("sh", "star"), default="star")
    q.add_argument("expr")
    q = lsub.add_parser("count", parents=[common])
    q.add_argument("--grading", choices=("length", "weight"), required=True)
    q.add_argument("--letters", type=int)
    q.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lyndon)

    p = sub.add_parser("hopf-check", parents=[common], help="exhaustive Hopf-structure checks")
    p.add_argument("--which", choices=[*HOPF_CHECKS, "all"], default="all")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--max-letter", type=int, default=4)
    p.set_defaults(func=cmd_hopf_check)

    p = sub.add_parser("blocks", parents=[common], help="binary words and block decomposition")
    p.add_argument("action", choices=("to-z", "to-binary", "to-index"))
    p.add_argument("input", help="binary word (e.g. e0e1e0e1), z-word, or index '2 1 3'")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("relations", parents=[common], help="generate MZV relations")
    p.add_argument("action", choices=("generate",))
    _family_args(p)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("verify", parents=[common], help="numerically verify relations")
    _family_args(p)
    p.add_argument("--N", type=int, default=10**6)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--method", choices=METHODS, default="convolution")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
