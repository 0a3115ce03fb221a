"""Command-line front end: parameter parsing, suite orchestration, reports.

Subcommands:

* ``enumerate`` -- multipartitions, tableau counts, level splits, contents;
* ``verify``    -- run a verification suite, emit a JSON/text report;
* ``gram``      -- Gram matrices of all cell modules, as TSV;
* ``decomp``    -- the decomposition matrix over a prime field, as TSV.

Exit codes: 0 all checks pass, 1 a check failed, 2 a hypothesis gate
refused the run, 3 the instance exceeds the size guards, 4 an internal
computation failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import ArikiKoikeAlgebra, DEFAULT_MAX_DIM
from .linalg import determinant
from .fields import (
    ComputationError,
    GateError,
    Params,
    Rationals,
    SizeGuardError,
    f_s_value,
    parse_field,
    parse_params_file,
)
from .morita import MoritaSuite
from .report import CheckResult, all_ok, render_json, render_text
from .schur import schur_suite
from .specht import decomposition_matrix, decomposition_to_tsv, gram_matrix, gram_to_tsv
from .suites import cellular_suite, relations_suite, specht_suite
from .tableaux import content, lambda_sets, multipartitions, std_tableaux

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_GATE = 2
EXIT_SIZE = 3
EXIT_INTERNAL = 4

DEFAULT_Q_LIST = ["1", "5", "7", "11", "13", "17", "19"]
SUITES = ("relations", "cellular", "specht", "morita", "schur", "all")


def _add_param_flags(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int, default=None, help="number of strands")
    p.add_argument("--r", type=int, default=None, help="number of cyclotomic parameters")
    p.add_argument("--s", type=int, default=None, help="split point (1 <= s < r)")
    p.add_argument("--q", type=str, default=None, help="the invertible parameter q")
    p.add_argument("--Q", type=str, default=None, help="comma-separated cyclotomic parameters")
    p.add_argument("--field", type=str, default=None, help='coefficient field: "Q" or "GF(p)"')
    p.add_argument("--params", type=str, default=None, help="key=value parameter file")
    p.add_argument("--out", type=str, default=None, help="write output to a file")
    p.add_argument("--format", type=str, default=None, choices=("json", "text", "tsv"))
    p.add_argument("--seed", type=int, default=2024, help="seed for randomized spot checks")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM, dest="max_dim",
                   help="override the dimension guard")


def build_params(args) -> Params:
    if args.params:
        with open(args.params, "r", encoding="utf-8") as fh:
            base = parse_params_file(fh.read(), n_override=args.n)
        field = parse_field(args.field) if args.field else base.field
        r = args.r if args.r is not None else base.r
        q = field(args.q) if args.q else field(str(base.q))
        Q = tuple(field(x) for x in args.Q.split(",")) if args.Q else tuple(
            field(str(x)) for x in base.Q)
        n = args.n if args.n is not None else base.n
        s = args.s if args.s is not None else base.s
        return Params(field=field, q=q, Q=Q, n=n, r=r, s=s)
    field = parse_field(args.field) if args.field else Rationals()
    r = args.r if args.r is not None else 1
    if args.Q:
        Q = tuple(field(x.strip()) for x in args.Q.split(","))
        if args.r is None:
            r = len(Q)
    else:
        Q = tuple(field(x) for x in DEFAULT_Q_LIST[:r])
    if len(Q) != r:
        raise ValueError(f"expected {r} entries in Q, got {len(Q)}")
    q = field(args.q) if args.q else field(2)
    n = args.n if args.n is not None else 2
    return Params(field=field, q=q, Q=Q, n=n, r=r, s=args.s)


def suite_size_guard(params: Params, max_dim: int):
    """Default desk-scale guards; an explicitly raised --max-dim lifts them."""
    dim = 1
    for k in range(1, params.n + 1):
        dim *= params.r * k
    if dim > max_dim:
        raise SizeGuardError(f"instance dimension {dim} exceeds the cap {max_dim}")
    if max_dim > DEFAULT_MAX_DIM:
        return
    r, n = params.r, params.n
    ok = (r == 1 and n <= 6) or (r == 2 and n <= 4) or (r == 3 and n <= 3) or dim <= 384
    if not ok:
        raise SizeGuardError(
            f"n={n}, r={r} exceeds the default suite guards (raise --max-dim to override)"
        )


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_enumerate(args) -> int:
    params = build_params(args)
    lines = []
    entries = []
    lams = multipartitions(params.n, params.r)
    lines.append(f"multipartitions n={params.n} r={params.r}: {len(lams)}")
    for lam in lams:
        cnt = len(std_tableaux(lam))
        cont = content(lam, params)
        entries.append({
            "shape": lam.serialize(),
            "std_count": cnt,
            "content": [str(x) for x in cont],
        })
        lines.append(f"  {lam.serialize()}  std={cnt}  content={{{','.join(str(x) for x in cont)}}}")
    split = None
    if params.s is not None and params.s < params.r:
        split = []
        bs = [args.b] if args.b is not None else list(range(params.n + 1))
        for b in bs:
            level, above = lambda_sets(params.n, params.r, params.s, b)
            split.append({
                "b": b,
                "level": [l.serialize() for l in level],
                "above": [l.serialize() for l in above],
            })
            lines.append(
                f"level b={b}: {{{', '.join(l.serialize() for l in level)}}}"
                f"  above: {{{', '.join(l.serialize() for l in above)}}}"
            )
    if (args.format or "text") == "json":
        payload = {"n": params.n, "r": params.r, "multipartitions": entries}
        if split is not None:
            payload["levels"] = split
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        _emit("\n".join(lines), args.out)
    return EXIT_PASS


def run_suites(params: Params, suite: str, seed: int, max_dim: int,
               only_b: int | None = None) -> list[CheckResult]:
    out: list[CheckResult] = []
    if suite in ("relations", "all"):
        out += relations_suite(params, seed=seed, max_dim=max_dim)
    if suite in ("cellular", "all"):
        out += cellular_suite(params, seed=seed, max_dim=max_dim)
    if suite in ("specht", "all"):
        out += specht_suite(params, max_dim=max_dim)
    if suite in ("morita", "all"):
        ms = MoritaSuite(params, max_dim=max_dim)
        if only_b is not None:
            b = only_b
            out += ms.verify_counting()
            out += ms.verify_intertwining(b)
            out += ms.verify_annihilation(b)
            out += ms.verify_kernel_vanishing(b)
            out += ms.verify_leading_terms(b)
            out += ms.verify_bases(b)
            out += ms.verify_filtration(b)
            out += ms.verify_end_basis(b)
            out += ms.verify_theta_map(b)
            out += ms.verify_bimodule(b)
            out += ms.verify_faithfulness(b)
            out += ms.verify_free_decomposition(b)
            out += ms.verify_pair_bijection(b)
        else:
            out += ms.run_all()
    if suite in ("schur", "all"):
        out += schur_suite(params, max_dim=max_dim)
    return out


def cmd_verify(args) -> int:
    params = build_params(args)
    suite_size_guard(params, args.max_dim)
    if args.suite in ("morita", "schur", "all"):
        # fail fast on the hypothesis gate, before any check runs
        s = params.require_split()
        fs = f_s_value(params)
        if not fs:
            raise GateError(
                "refusing the Morita/Schur suites: the separation product "
                f"f_s(q,Q) vanishes for s={s} (its invertibility is the "
                "hypothesis of the splitting theorems)"
            )
    results = run_suites(params, args.suite, args.seed, args.max_dim, only_b=args.b)
    fmt = args.format or "json"
    _emit(render_json(results) if fmt == "json" else render_text(results), args.out)
    return EXIT_PASS if all_ok(results) else EXIT_FAIL


def cmd_gram(args) -> int:
    params = build_params(args)
    suite_size_guard(params, args.max_dim)
    alg = ArikiKoikeAlgebra(params, max_dim=args.max_dim)
    blocks = []
    for lam in multipartitions(params.n, params.r):
        blocks.append(gram_to_tsv(alg, lam))
        det = determinant(gram_matrix(alg, lam), params.field)
        blocks.append(f"# det = {det}")
    _emit("\n".join(blocks), args.out)
    return EXIT_PASS


def cmd_decomp(args) -> int:
    params = build_params(args)
    suite_size_guard(params, args.max_dim)
    if params.field.characteristic == 0:
        raise GateError("decomp requires a prime field; pass --field GF(p)")
    data = decomposition_matrix(params, max_dim=args.max_dim)
    _emit(decomposition_to_tsv(data), args.out)
    return EXIT_PASS


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ariki-koike",
        description="Exact verification suite for Ariki-Koike algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list multipartitions, counts, levels")
    _add_param_flags(p_enum)
    p_enum.add_argument("--b", type=int, default=None, help="restrict to one level")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    _add_param_flags(p_verify)
    p_verify.add_argument("--suite", type=str, default="all", choices=SUITES)
    p_verify.add_argument("--b", type=int, default=None,
                          help="restrict the Morita suite to one level")
    p_verify.set_defaults(func=cmd_verify)

    p_gram = sub.add_parser("gram", help="emit all Gram matrices as TSV")
    _add_param_flags(p_gram)
    p_gram.set_defaults(func=cmd_gram)

    p_dec = sub.add_parser("decomp", help="emit the decomposition matrix as TSV")
    _add_param_flags(p_dec)
    p_dec.set_defaults(func=cmd_decomp)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GateError as exc:
        print(f"hypothesis gate: {exc}", file=sys.stderr)
        return EXIT_GATE
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ComputationError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        parser.error(str(exc))
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
