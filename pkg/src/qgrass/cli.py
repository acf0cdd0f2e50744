"""Command-line entry point: ``qgrass <command> ...``; every command prints a JSON run report."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .cluster import Seed, cc_map, denominator_vector, explore, mutate_sequence
from .grass import chi_table_bruteforce, check_table_invariants
from .hall import BudgetExceeded, gr_count_via_hall, hom_stratum_census
from .knitting import chi_postinjective, chi_preprojective, knit
from .kronecker import kronecker_table
from .linalg import is_prime
from .quiver import Quiver, a1, a_linear, d4_subspace, kronecker, parse_dim
from .rep import IntRep, count_submodules, reduce_mod
from .tangent import NotExceptional, check_bounds, smoothness_scan

BUILTIN_QUIVERS: dict[str, Callable[[], Quiver]] = {
    "A1": a1,
    "A2": lambda: a_linear(2),
    "A3": lambda: a_linear(3),
    "D4": d4_subspace,
    "kronecker": kronecker,
}


class CliError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would print usage text; we want JSON
        raise CliError("usage", message)


class _Run:
    def __init__(self, argv: Sequence[str]):
        self.argv = list(argv)
        self.inputs: dict[str, str] = {}
        self.violations: list = []

    def read_json(self, path: str) -> dict:
        try:
            raw = Path(path).read_bytes()
        except OSError as exc:
            raise CliError("io", f"cannot read {path}: {exc}") from exc
        self.inputs[path] = hashlib.sha256(raw).hexdigest()
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise CliError("malformed-json", f"{path}: {exc}") from exc

    def quiver(self, ref: str | None, rep_data: dict | None = None) -> Quiver:
        if ref is None:
            if rep_data is None or "quiver" not in rep_data:
                raise CliError("usage", "--quiver is required")
            return Quiver.from_dict(rep_data["quiver"])
        if ref in BUILTIN_QUIVERS:
            return BUILTIN_QUIVERS[ref]()
        return Quiver.from_dict(self.read_json(ref))

    def rep(self, args) -> IntRep:
        data = self.read_json(args.rep)
        Q = self.quiver(args.quiver, data)
        return IntRep.from_dict(data, Q)


def _primes(text: str) -> list[int]:
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise CliError("usage", f"bad prime list {text!r}") from exc
    bad = [p for p in ps if not is_prime(p)]
    if bad:
        raise CliError("usage", f"not prime: {bad}")
    return ps


def _prime(text: str) -> int:
    (p,) = _primes(text)
    return p


def _dim(Q: Quiver, text: str):
    try:
        return Q.check_dim(parse_dim(text))
    except ValueError as exc:
        raise CliError("usage", str(exc)) from exc


# -- commands -----------------------------------------------------------------------


def cmd_count(run: _Run, args):
    M = run.rep(args)
    e = _dim(M.quiver, args.dim)
    return {"count": count_submodules(reduce_mod(M, _prime(args.prime)), e)}


def cmd_chi(run: _Run, args):
    M = run.rep(args)
    t = chi_table_bruteforce(M, _primes(args.primes), extend=args.extend)
    run.violations += [v.to_dict() for v in check_table_invariants(t)]
    return t


def cmd_knit(run: _Run, args):
    Q = run.quiver(args.quiver)
    return knit(Q, args.layers).to_dict()


def cmd_ar_chi(run: _Run, args):
    Q = run.quiver(args.quiver)
    m, i = parse_dim(args.vertex)
    if i not in Q.vertices:
        raise CliError("usage", f"unknown vertex {i}")
    return chi_postinjective(Q, m, i) if args.post else chi_preprojective(Q, m, i)


def cmd_hall_count(run: _Run, args):
    M = reduce_mod(run.rep(args), _prime(args.prime))
    e = _dim(M.quiver, args.dim)
    trace: dict = {}
    val = gr_count_via_hall(M.quiver, e, M, budget=args.budget, trace=trace)
    census = hom_stratum_census(M.quiver, e, M, budget=args.budget)
    direct = count_submodules(M, e)
    if val != direct:
        run.violations.append({"hall": val, "count_submodules": direct})
    return {
        "count": val,
        "count_submodules": direct,
        "census": census.to_dict(),
        "intermediate": [{"e": list(k), "count": v} for k, v in sorted(trace.items())],
    }


def cmd_tangent(run: _Run, args):
    M = reduce_mod(run.rep(args), _prime(args.prime))
    e = _dim(M.quiver, args.dim)
    if args.smooth:
        rep = smoothness_scan(M, e)
    else:
        rep = check_bounds(M, e)
    run.violations += rep.violations
    return rep.to_dict()


def _seq(Q: Quiver, text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        if not tok.strip():
            continue
        v = int(tok)
        if v not in Q.index:
            raise CliError("usage", f"unknown vertex {v} in mutation sequence")
        out.append(Q.index[v])
    return out


def cmd_mutate(run: _Run, args):
    Q = run.quiver(args.quiver)
    seed = mutate_sequence(Seed.initial(Q), _seq(Q, args.seq))
    return {
        "sequence": args.seq,
        **seed.to_dict(),
        "cluster_terms": [u.to_list() for u in seed.cluster],
    }


def cmd_cluster_vars(run: _Run, args):
    Q = run.quiver(args.quiver)
    ex = explore(Q, args.depth)
    run.violations += ex.anomalies
    variables = sorted(ex.variables.values(), key=lambda u: (sum(denominator_vector(u)), u.canonical()))
    return {
        "depth": args.depth,
        "seeds": len(ex.seeds),
        "variables": [
            {"laurent": u.canonical(), "denominator": list(denominator_vector(u)), "terms": u.to_list()}
            for u in variables
        ],
    }


def cmd_cc(run: _Run, args):
    M = run.rep(args)
    t = chi_table_bruteforce(M, _primes(args.primes), extend=args.extend)
    X = cc_map(M.quiver, t)
    return {
        "laurent": X.canonical(),
        "terms": X.to_list(),
        "denominator": list(denominator_vector(X)),
        "chi": t.to_dict(),
    }


def cmd_kronecker(run: _Run, args):
    r = kronecker_table(args.kind, args.n, _primes(args.primes), lam=args.lam)
    run.violations += [{"e": row["e"], "closed_form": row["closed_form"], "bruteforce": row["bruteforce"]} for row in r.mismatches]
    return r.to_dict()


def cmd_verify(run: _Run, args):
    from .verify import run_criterion, CRITERIA

    which = sorted(CRITERIA) if not args.criteria else [int(x) for x in args.criteria.split(",")]
    results = [run_criterion(k, quick=args.suite == "smoke") for k in which]
    for c in results:
        print(c.line(), file=sys.stderr)
        if not c.passed:
            run.violations.append({"criterion": c.number, "failures": c.failures[:20]})
    return {"suite": args.suite, "criteria": [c.to_dict() for c in results]}


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="qgrass",
        description="Quiver Grassmannians over finite fields. Dimension vectors are "
        'comma-separated in vertex-id order, e.g. "1,2". --quiver accepts a JSON file '
        f"or one of {', '.join(BUILTIN_QUIVERS)}.",
    )
    p.add_argument("--version", action="version", version=f"qgrass {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def common(sp, rep=False, fmt=False):
        sp.add_argument("--quiver", help="quiver JSON file or builtin name")
        if rep:
            sp.add_argument("--rep", required=True, help="representation JSON file")
        sp.add_argument("--out", help="write the report here instead of stdout")
        if fmt:
            sp.add_argument("--format", choices=("json", "tsv"), default="json")
        return sp

    sp = common(sub.add_parser("count", help="#Gr_e(M)(F_p)"), rep=True)
    sp.add_argument("--dim", required=True)
    sp.add_argument("--prime", required=True)
    sp.set_defaults(func=cmd_count)

    sp = common(sub.add_parser("chi", help="counting polynomials and chi for every e"), rep=True, fmt=True)
    sp.add_argument("--primes", default="2,3,5,7")
    sp.add_argument("--extend", action="store_true", help="append primes when the degree bound needs more")
    sp.set_defaults(func=cmd_chi)

    sp = common(sub.add_parser("knit", help="preprojective component, layers 0..L"))
    sp.add_argument("--layers", type=int, default=4)
    sp.set_defaults(func=cmd_knit)

    sp = common(sub.add_parser("ar-chi", help="chi table of tau_-^m P_i by the mesh recursion"), fmt=True)
    sp.add_argument("--vertex", required=True, help='"m,i" for tau_-^m P_i')
    sp.add_argument("--post", action="store_true", help="tau_+^m I_i instead")
    sp.set_defaults(func=cmd_ar_chi)

    sp = common(sub.add_parser("hall-count", help="count via Hom strata of E_e"), rep=True)
    sp.add_argument("--dim", required=True)
    sp.add_argument("--prime", required=True)
    sp.add_argument("--budget", type=int, default=None, help="max points per stratum census")
    sp.set_defaults(func=cmd_hall_count)

    sp = common(sub.add_parser("tangent", help="tangent dimensions at every F_p-point"), rep=True)
    sp.add_argument("--dim", required=True)
    sp.add_argument("--prime", required=True)
    sp.add_argument("--smooth", action="store_true", help="require exceptional M and constant dimension")
    sp.set_defaults(func=cmd_tangent)

    sp = common(sub.add_parser("mutate", help="mutate the initial seed along vertex ids"))
    sp.add_argument("--seq", required=True)
    sp.set_defaults(func=cmd_mutate)

    sp = common(sub.add_parser("cluster-vars", help="cluster variables reached within a depth"))
    sp.add_argument("--depth", type=int, required=True)
    sp.set_defaults(func=cmd_cluster_vars)

    sp = common(sub.add_parser("cc", help="cluster character of a module"), rep=True)
    sp.add_argument("--primes", default="2,3,5,7")
    sp.add_argument("--extend", action="store_true")
    sp.set_defaults(func=cmd_cc)

    sp = sub.add_parser("kronecker", help="closed formulas against brute force")
    sp.add_argument("--kind", choices=("M", "DM", "Mreg"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lam", type=int, default=0)
    sp.add_argument("--primes", default="2,3,5,7")
    sp.add_argument("--out", "--report", dest="out")
    sp.add_argument("--format", choices=("json", "tsv"), default="json")
    sp.set_defaults(func=cmd_kronecker)

    sp = sub.add_parser("verify", help="run the acceptance criteria")
    sp.add_argument("--suite", choices=("smoke", "full"), default="full")
    sp.add_argument("--criteria", help="comma-separated subset, e.g. 1,3")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)
    return p


CHECK_COMMANDS = {"chi", "hall-count", "tangent", "cluster-vars", "kronecker", "verify"}


def _tsv(command: str, results) -> str:
    if hasattr(results, "to_tsv"):
        return results.to_tsv()
    if command == "kronecker":
        lines = ["e\tbruteforce\tclosed_form\tswap\tmatch"]
        for r in results["entries"]:
            e = ",".join(map(str, r["e"]))
            lines.append(f"{e}\t{r['bruteforce']}\t{r['closed_form']}\t{r['swap']}\t{int(r['match'])}")
        return "\n".join(lines) + "\n"
    raise CliError("usage", f"--format tsv is not available for {command}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    run = _Run(argv)
    t0 = time.perf_counter()
    out = None
    try:
        args = build_parser().parse_args(argv)
        out = getattr(args, "out", None)
        results = args.func(run, args)
        if getattr(args, "format", "json") == "tsv":
            _emit(_tsv(args.command, results), out)
            return 1 if run.violations and args.command in CHECK_COMMANDS else 0
        if hasattr(results, "to_dict"):
            results = results.to_dict()
        report = {
            "command": ["qgrass", *argv],
            "inputs": run.inputs,
            "results": results,
            "violations": run.violations,
            "wall_time": round(time.perf_counter() - t0, 4),
        }
        _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", out)
        return 1 if run.violations and args.command in CHECK_COMMANDS else 0
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except BudgetExceeded as exc:
        err = {"type": "budget-exceeded", "message": str(exc), "required": exc.required, "budget": exc.budget}
    except NotExceptional as exc:
        err = {"type": "not-exceptional", "message": str(exc), "ext_MM": exc.ext}
    except CliError as exc:
        err = {"type": exc.kind, "message": str(exc)}
    except (ValueError, KeyError, ArithmeticError, RuntimeError) as exc:
        err = {"type": type(exc).__name__, "message": str(exc)}
    report = {"command": ["qgrass", *argv], "error": err, "wall_time": round(time.perf_counter() - t0, 4)}
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", None)
    return 2


if __name__ == "__main__":
    sys.exit(main())
