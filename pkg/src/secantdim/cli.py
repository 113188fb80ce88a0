"""Command-line interface.

Subcommands:

* dim      -- measure one statement S(m, n; 1, d; s; t).
* scan     -- sweep a grid of (m, n, s) cells for defects.
* certify  -- run one named certificate (Q, Runder, Rover, R2n, witnessRmm,
              strassen).
* prove    -- search for an inductive proof tree; prints it as JSON.
* strassen -- build the skew matrix for a (1, 2) tensor on P^2 x P^(2k+1)
              and report its rank and Pfaffian.

Exit codes: 0 success / statement true, 2 deficiency observed, 3 unknown,
64 usage error, 74 I/O error, 1 any other error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import Statement
from .certificates import (OUTCOME_TRUE, certify_Q, certify_R2n,
                           certify_R_over, certify_R_under,
                           eval_statement_checked, witness_Rmm)
from .field import PRIMARY_PRIME, PrimeField, SeededRng, derive_seed, pfaffian, rank
from .prover import Prover, proof_to_json
from .scan import records_to_csv, records_to_jsonl, run_scan, scan_summary
from .strassen import random_points, random_tensor, slices_from_points, strassen_matrix

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DEFICIENT = 2
EXIT_UNKNOWN = 3
EXIT_USAGE = 64
EXIT_IO = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=PRIMARY_PRIME)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", type=str, default=None)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    return common


def build_parser() -> _Parser:
    parser = _Parser(prog="secantdim",
                     description="dimension certificates for secant varieties "
                                 "of P^m x P^n in bidegree (1, d)")
    common = _common()
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("dim", parents=[common],
                       help="measure one statement")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, default=0)

    p = sub.add_parser("scan", parents=[common],
                       help="sweep a grid for defective secant varieties")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--cache", type=str, default=None)

    p = sub.add_parser("certify", parents=[common],
                       help="run one named certificate")
    p.add_argument("name", type=str)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--s", type=int, default=None)

    p = sub.add_parser("prove", parents=[common],
                       help="search for an inductive proof")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, default=0)

    p = sub.add_parser("strassen", parents=[common],
                       help="skew-matrix rank/Pfaffian for a (1,2) tensor")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=None)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def cmd_dim(args) -> int:
    st = Statement(args.m, args.n, args.d, args.s, args.t)
    field = PrimeField(args.prime)
    verdict = eval_statement_checked(st, seed=args.seed, trials=args.trials,
                                     field=field)
    _emit(json.dumps(verdict.as_dict()) + "\n", args.out)
    return EXIT_OK if verdict.outcome == OUTCOME_TRUE else EXIT_DEFICIENT


def cmd_scan(args) -> int:
    records = run_scan(args.max_m, args.max_n, seed=args.seed,
                       prime=args.prime, trials=args.trials, jobs=args.jobs,
                       cache_path=args.cache)
    text = records_to_csv(records) if args.format == "csv" \
        else records_to_jsonl(records)
    _emit(text, args.out)
    print(scan_summary(records), file=sys.stderr)
    return EXIT_OK


_CERT_PARAMS = {"Q": ("m", "n"), "Runder": ("m", "n"), "Rover": ("m", "n"),
                "R2n": ("n",), "witnessRmm": ("m",), "strassen": ("k",)}


def cmd_certify(args) -> int:
    name = args.name
    required = _CERT_PARAMS.get(name)
    if required is None:
        print(f"secantdim certify: unknown certificate {name!r}", file=sys.stderr)
        return EXIT_USAGE
    missing = [p for p in required if getattr(args, p) is None]
    if missing:
        flags = ", ".join(f"--{p}" for p in missing)
        print(f"secantdim certify {name}: missing {flags}", file=sys.stderr)
        return EXIT_USAGE
    field = PrimeField(args.prime)
    kwargs = dict(seed=args.seed, trials=args.trials, field=field)
    if name == "Q":
        verdict = certify_Q(args.m, args.n, **kwargs)
    elif name == "Runder":
        verdict = certify_R_under(args.m, args.n, **kwargs)
    elif name == "Rover":
        verdict = certify_R_over(args.m, args.n, **kwargs)
    elif name == "R2n":
        verdict = certify_R2n(args.n, **kwargs)
    elif name == "witnessRmm":
        ok = witness_Rmm(args.m, field)
        _emit(json.dumps({"certificate": name, "m": args.m,
                          "outcome": OUTCOME_TRUE if ok else "deficient"}) + "\n",
              args.out)
        return EXIT_OK if ok else EXIT_DEFICIENT
    else:
        return cmd_strassen(args)
    payload = {"certificate": name,
               "params": {k: v for k, v in (("m", args.m), ("n", args.n))
                          if v is not None}}
    payload.update(verdict.as_dict())
    _emit(json.dumps(payload) + "\n", args.out)
    return EXIT_OK if verdict.outcome == OUTCOME_TRUE else EXIT_DEFICIENT


def cmd_prove(args) -> int:
    st = Statement(args.m, args.n, args.d, args.s, args.t)
    field = PrimeField(args.prime)
    prover = Prover(seed=args.seed, trials=args.trials, field=field)
    node = prover.prove(st)
    if node is None:
        _emit(json.dumps({"statement": {"m": st.m, "n": st.n, "d": st.d,
                                        "s": st.s, "t": st.t},
                          "outcome": "unknown"}) + "\n", args.out)
        return EXIT_UNKNOWN
    _emit(proof_to_json(node) + "\n", args.out)
    return EXIT_OK


def cmd_strassen(args) -> int:
    if args.k is None or args.k < 1:
        print("secantdim strassen: --k must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    field = PrimeField(args.prime)
    order = 3 * (2 * args.k + 2)
    if args.s is None:
        tensor = random_tensor(SeededRng(derive_seed(args.seed, "strassen-gen",
                                                     args.k), field), args.k)
        source = "generic"
    else:
        rng = SeededRng(derive_seed(args.seed, "strassen", args.k, args.s), field)
        tensor = slices_from_points(random_points(rng, args.s, args.k),
                                    args.k, field)
        source = "decomposable-sum"
    mat = strassen_matrix(tensor)
    r = rank(mat)
    pf = pfaffian(mat)
    payload = {"k": args.k, "s": args.s, "source": source, "order": order,
               "rank": r, "pfaffian": pf}
    if args.s is not None:
        payload["rank_bound"] = 2 * args.s
        payload["rank_le_2s"] = r <= 2 * args.s
    payload["pfaffian_zero"] = pf == 0
    payload["full_rank"] = r == order
    _emit(json.dumps(payload) + "\n", args.out)
    if args.s is not None and r > 2 * args.s:
        return EXIT_ERROR
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handlers = {"dim": cmd_dim, "scan": cmd_scan, "certify": cmd_certify,
                "prove": cmd_prove, "strassen": cmd_strassen}
    try:
        return handlers[args.command](args)
    except OSError as exc:
        print(f"secantdim: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, ArithmeticError) as exc:
        print(f"secantdim: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
