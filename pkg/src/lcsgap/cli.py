"""Command-line orchestration: generate graphs and families, run the
reduction, solve and verify instances, and emit gap-experiment reports.

Subcommands: gen-graph, gen-family, reduce, solve, verify, gap-experiment,
verify-sync.  Exit codes: 0 success, 2 parameter error, 3
certification/budget failure (including a failed verification), 4 I/O
error.  Every command is deterministic given its seed and inputs; timing
lives in a sidecar .log next to the artifact, never inside it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import families as fam_mod
from . import graph as graph_mod
from . import lcs as lcs_mod
from . import reduction as red_mod
from . import soundness as snd_mod
from .errors import (
    BudgetError,
    CertificationError,
    LcsGapError,
    ParameterError,
)
from .seeds import EXPERIMENT_STREAM, derive_seed

CSV_COLUMNS = [
    "seed",
    "n",
    "k",
    "m",
    "beta",
    "gamma",
    "ell_yes",
    "ell_no",
    "witness_len",
    "best_found",
    "verdict",
]


def _frac(text: str) -> Fraction:
    try:
        return red_mod.parse_frac(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected INT or NUM/DEN, got {text!r}") from exc


def _write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="ascii")


def _write_json(path, obj) -> None:
    _write_text(path, red_mod.canonical_json(obj))


def _read_symbols_file(path):
    text = Path(path).read_text(encoding="ascii")
    return [int(x) for x in text.split()]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_gen_graph(args) -> int:
    if args.planted_k is not None:
        g, clique = graph_mod.plant_clique(args.n, args.planted_k, args.p, args.seed)
    else:
        g = graph_mod.erdos_renyi(args.n, args.p, args.seed)
        clique = None
    graph_mod.write_graph(g, args.out)
    print(f"wrote {args.out} n={g.n} edges={len(g.edges)} seed={args.seed}")
    if clique is not None:
        print("planted clique: " + " ".join(str(v) for v in clique))
    return 0


def _construct_family(args, alpha: Fraction):
    if args.construction == "random":
        if args.seed is None:
            raise ParameterError("--seed is required for the random construction")
        return fam_mod.random_family(
            args.n, alpha, args.sigma_prime, args.m, args.seed, args.max_retries
        )
    if args.construction == "greedy":
        return fam_mod.greedy_family(args.n, alpha, args.sigma_prime, args.m)
    if args.construction == "sync-file":
        if not args.sync_file:
            raise ParameterError("--sync-file is required for the sync-file construction")
        if not fam_mod.check_sync_block_params(alpha, args.n, args.m):
            raise ParameterError(
                f"block length m={args.m} too short for alpha={alpha}, n={args.n} "
                f"(need m > 2*alpha^-2*log2 n)"
            )
        s = _read_symbols_file(args.sync_file)
        eps = alpha / 2
        c = 1 / (eps * eps)
        report = fam_mod.verify_sync_string(s, c, eps, budget=args.sync_budget)
        if not report.is_valid:
            raise CertificationError(
                f"supplied string fails the synchronization check at quadruple "
                f"{report.violating_quadruple} (c={c}, epsilon={eps})"
            )
        family = fam_mod.alternate_blocks(s, args.n, args.m, alpha)
        if not family.certified:
            raise CertificationError("alternate blocks did not certify at the requested alpha")
        return family
    raise ParameterError(f"unknown construction {args.construction!r}")


def _resolve_alpha(args) -> Fraction:
    if (args.alpha is None) == (args.beta is None):
        raise ParameterError("give exactly one of --alpha or --beta")
    if args.alpha is not None:
        return Fraction(args.alpha)
    return Fraction(args.beta) ** 2 / 8


def cmd_gen_family(args) -> int:
    alpha = _resolve_alpha(args)
    family = _construct_family(args, alpha)
    fam_mod.write_family(family, args.out)
    print(
        f"wrote {args.out} n={family.n} m={family.m} sigma'={family.sigma_prime} "
        f"alpha={red_mod.frac_str(family.alpha)} certified={family.certified} "
        f"seed={args.seed}"
    )
    return 0


def cmd_reduce(args) -> int:
    g = graph_mod.read_graph(args.graph)
    inst = red_mod.jiang_li(g)
    graph_hash = red_mod.file_sha256(args.graph)
    out_meta = args.out_meta or (args.out_instance + ".meta.json")

    if args.symbolic_only:
        red_mod.write_instance(inst.all_strings, g.n, 1, args.out_instance)
        meta = red_mod.build_metadata("symbolic", None, inst.all_strings, graph_hash, None, args.seed)
        _write_json(out_meta, meta)
        print(f"wrote {args.out_instance} strings={2 * g.n} sigma={g.n}")
        return 0

    if args.m is None:
        raise ParameterError("--m is required unless --symbolic-only")
    params = None
    if args.beta is not None or args.gamma is not None:
        if args.beta is None or args.gamma is None:
            raise ParameterError("give both --beta and --gamma, or neither")
        params = red_mod.make_params(g.n, args.gamma, args.beta, args.m)

    if args.family:
        family = fam_mod.read_family(args.family)
        family_path = args.family
    else:
        alpha = params.alpha if params is not None else args.alpha
        if alpha is None:
            raise ParameterError("need --alpha when reducing without --beta/--gamma")
        if args.sigma_prime is None:
            raise ParameterError("--sigma-prime is required when constructing a family")
        gen_args = argparse.Namespace(
            construction=args.construction,
            seed=args.seed,
            n=g.n,
            sigma_prime=args.sigma_prime,
            m=args.m,
            max_retries=args.max_retries,
            sync_file=None,
            sync_budget=0,
        )
        family = _construct_family(gen_args, Fraction(alpha))
        family_path = args.out_family or (args.out_instance + ".family.txt")
        fam_mod.write_family(family, family_path)
    family_hash = red_mod.file_sha256(family_path)

    block = red_mod.alphabet_reduce(inst, family, params)
    red_mod.write_instance(block.all_strings, family.sigma_prime, family.m, args.out_instance)
    meta = red_mod.build_metadata(
        "block", params, block.block_layout, graph_hash, family_hash, args.seed
    )
    _write_json(out_meta, meta)
    lengths = [len(s) for s in block.all_strings]
    print(
        f"wrote {args.out_instance} strings={len(lengths)} sigma={family.sigma_prime} "
        f"m={family.m} lengths={min(lengths)}..{max(lengths)}"
    )
    if params is not None:
        print(
            f"ell_yes={params.ell_yes} ell_no={red_mod.frac_str(params.ell_no)} "
            f"k={params.k}"
        )
    return 0


_SOLVERS = ["product-dp", "subset-enum", "once-per-symbol", "single-symbol", "heuristic"]


def _dispatch_solver(args, strings, sigma):
    if args.solver == "product-dp":
        return lcs_mod.multi_lcs_product_dp(strings, budget=args.budget)
    if args.solver == "subset-enum":
        return lcs_mod.multi_lcs_subset_enum(strings, max_n=args.max_n)
    if args.solver == "once-per-symbol":
        return lcs_mod.multi_lcs_once_per_symbol(strings)
    if args.solver == "single-symbol":
        return lcs_mod.single_symbol_approx(strings, sigma)
    if args.solver == "heuristic":
        if args.seed is None:
            raise ParameterError("--seed is required for the heuristic solver")
        return lcs_mod.heuristic_multi_lcs(strings, effort=args.effort, seed=args.seed)
    raise ParameterError(f"unknown solver {args.solver!r}")


def cmd_solve(args) -> int:
    strings, sigma, _m = red_mod.read_instance(args.instance)
    t0 = time.monotonic()
    try:
        result = _dispatch_solver(args, strings, sigma)
    except (BudgetError, ParameterError) as exc:
        if args.out:
            _write_json(args.out, {"error": str(exc), "solver": args.solver})
        raise
    elapsed_ms = int((time.monotonic() - t0) * 1000)
    if not lcs_mod.is_common_subsequence(result.witness, strings):
        raise AssertionError("witness failed re-verification before writing")
    record = result.to_record()
    record["elapsed_ms"] = None  # timing goes to the sidecar, artifact stays reproducible
    if args.out:
        _write_json(args.out, record)
        _write_text(str(args.out) + ".log", f"solver={args.solver} elapsed_ms={elapsed_ms}\n")
    print(f"length={result.length} exact={result.exact} solver={result.solver.value}")
    return 0


def cmd_verify(args) -> int:
    strings, _sigma, _m = red_mod.read_instance(args.instance)
    if args.result:
        record = json.loads(Path(args.result).read_text(encoding="ascii"))
        witness = record["witness"]
        claimed = record["length"]
    elif args.witness is not None:
        witness = [int(x) for x in args.witness.split()]
        claimed = len(witness)
    else:
        raise ParameterError("give --result or --witness")
    ok = lcs_mod.is_common_subsequence(witness, strings) and claimed == len(witness)
    print("OK" if ok else "FAIL")
    return 0 if ok else 3


def cmd_verify_sync(args) -> int:
    if args.text is not None:
        s = [ord(ch) for ch in args.text]
    elif args.string_file:
        s = _read_symbols_file(args.string_file)
    else:
        raise ParameterError("give --text or --string-file")
    report = fam_mod.verify_sync_string(
        s, args.c, args.epsilon, budget=args.budget, scanner=args.scanner
    )
    record = {
        "is_valid": report.is_valid,
        "violating_quadruple": list(report.violating_quadruple)
        if report.violating_quadruple
        else None,
        "c": red_mod.frac_str(report.c),
        "epsilon": red_mod.frac_str(report.epsilon),
    }
    if args.out:
        _write_json(args.out, record)
    print(f"is_valid={report.is_valid} quadruple={report.violating_quadruple}")
    return 0 if report.is_valid else 3


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def cmd_gap_experiment(args) -> int:
    params = red_mod.make_params(args.n, args.gamma, args.beta, args.m)
    rows = []
    details = []
    for t in range(args.trials):
        trial_seed = derive_seed(args.seed, EXPERIMENT_STREAM, t)
        row = {
            "seed": trial_seed,
            "n": params.n,
            "k": params.k,
            "m": params.m,
            "beta": red_mod.frac_str(params.beta),
            "gamma": red_mod.frac_str(params.gamma),
            "ell_yes": params.ell_yes,
            "ell_no": red_mod.frac_str(params.ell_no),
        }
        if args.mode == "yes":
            g, clique = graph_mod.plant_clique(args.n, params.k, args.edge_prob, trial_seed)
            inst = red_mod.jiang_li(g)
            family = fam_mod.random_family(
                args.n, params.alpha, args.sigma_prime, args.m, trial_seed, args.max_retries
            )
            block = red_mod.alphabet_reduce(inst, family, params)
            witness = red_mod.expand_witness(family, red_mod.clique_to_witness(inst, clique))
            if len(witness) < params.ell_yes:
                raise AssertionError("expanded witness shorter than ell_yes")
            if not lcs_mod.is_common_subsequence(witness, block.all_strings):
                raise AssertionError("expanded witness failed verification")
            report = snd_mod.extract_dense_subgraph(witness, block)
            row.update(
                witness_len=len(witness), best_found=len(witness), verdict=report.verdict
            )
            details.append({"trial": t, "extraction": report.to_record()})
        else:
            g = graph_mod.erdos_renyi(args.n, args.edge_prob, trial_seed)
            oracle = graph_mod.dks_brute_force(
                g, params.k, params.gamma**2 / 4, budget=args.dks_budget
            )
            if oracle.kind != "NO":
                row.update(witness_len=0, best_found=0, verdict="SKIPPED-GAP")
                rows.append(row)
                details.append({"trial": t, "oracle": oracle.kind})
                continue
            family = fam_mod.random_family(
                args.n, params.alpha, args.sigma_prime, args.m, trial_seed, args.max_retries
            )
            block = red_mod.alphabet_reduce(red_mod.jiang_li(g), family, params)
            found = lcs_mod.heuristic_multi_lcs(block.all_strings, args.effort, trial_seed)
            bad = Fraction(found.length) > params.ell_no
            row.update(
                witness_len=0,
                best_found=found.length,
                verdict="NO-VIOLATION" if bad else "NO-OK",
            )
            details.append({"trial": t, "oracle": "NO", "best_found": found.length})
        rows.append(row)
    _write_text(args.out_csv, _csv_text(rows))
    if args.out_json:
        summary = {
            "mode": args.mode,
            "trials": args.trials,
            "params": red_mod.params_to_dict(params),
            "verdicts": sorted(set(r["verdict"] for r in rows)),
            "rows": rows,
            "details": details,
        }
        _write_json(args.out_json, summary)
    print(f"wrote {args.out_csv} trials={len(rows)}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcsgap", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-graph", help="write a random or planted-clique graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--planted-k", type=int, default=None)
    g.add_argument("--p", type=float, default=0.0, help="background edge probability")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen_graph)

    f = sub.add_parser("gen-family", help="construct and certify a string family")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--sigma-prime", type=int, required=True)
    f.add_argument("--alpha", type=_frac, default=None)
    f.add_argument("--beta", type=_frac, default=None, help="alpha is derived as beta^2/8")
    f.add_argument(
        "--construction", choices=["random", "greedy", "sync-file"], default="random"
    )
    f.add_argument("--seed", type=int, default=None)
    f.add_argument("--max-retries", type=int, default=8)
    f.add_argument("--sync-file", default=None)
    f.add_argument("--sync-budget", type=int, default=200_000_000)
    f.add_argument("--out", required=True)
    f.set_defaults(func=cmd_gen_family)

    r = sub.add_parser("reduce", help="graph -> block instance over the small alphabet")
    r.add_argument("--graph", required=True)
    r.add_argument("--m", type=int, default=None)
    r.add_argument("--sigma-prime", type=int, default=None)
    r.add_argument("--beta", type=_frac, default=None)
    r.add_argument("--gamma", type=_frac, default=None)
    r.add_argument("--alpha", type=_frac, default=None, help="family bound when no --beta/--gamma")
    r.add_argument("--seed", type=int, default=None)
    r.add_argument("--construction", choices=["random", "greedy"], default="random")
    r.add_argument("--max-retries", type=int, default=8)
    r.add_argument("--family", default=None, help="use an existing family file")
    r.add_argument("--symbolic-only", action="store_true", help="emit the vertex-alphabet instance")
    r.add_argument("--out-instance", required=True)
    r.add_argument("--out-meta", default=None)
    r.add_argument("--out-family", default=None)
    r.set_defaults(func=cmd_reduce)

    s = sub.add_parser("solve", help="run a solver on an instance file")
    s.add_argument("--instance", required=True)
    s.add_argument("--solver", choices=_SOLVERS, required=True)
    s.add_argument("--budget", type=int, default=10**8)
    s.add_argument("--max-n", type=int, default=20)
    s.add_argument("--effort", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="re-verify a witness against an instance")
    v.add_argument("--instance", required=True)
    v.add_argument("--result", default=None, help="result JSON from solve")
    v.add_argument("--witness", default=None, help="space-separated symbols")
    v.set_defaults(func=cmd_verify)

    y = sub.add_parser("verify-sync", help="check the long-distance synchronization property")
    y.add_argument("--string-file", default=None)
    y.add_argument("--text", default=None, help="ASCII string; characters become symbols")
    y.add_argument("--c", type=_frac, required=True)
    y.add_argument("--epsilon", type=_frac, required=True)
    y.add_argument("--budget", type=int, default=200_000_000)
    y.add_argument("--scanner", choices=["forward", "reverse"], default="forward")
    y.add_argument("--out", default=None)
    y.set_defaults(func=cmd_verify_sync)

    e = sub.add_parser("gap-experiment", help="batch YES/NO trials with a CSV report")
    e.add_argument("--mode", choices=["yes", "no"], required=True)
    e.add_argument("--trials", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--beta", type=_frac, required=True)
    e.add_argument("--gamma", type=_frac, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--sigma-prime", type=int, required=True)
    e.add_argument("--edge-prob", type=float, default=0.0)
    e.add_argument("--effort", type=int, default=100_000)
    e.add_argument("--seed", type=int, required=True)
    e.add_argument("--max-retries", type=int, default=8)
    e.add_argument("--dks-budget", type=int, default=2_000_000)
    e.add_argument("--out-csv", required=True)
    e.add_argument("--out-json", default=None)
    e.set_defaults(func=cmd_gap_experiment)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LcsGapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
