"""
lltlab - Command Line
=====================
Subcommands:
    llt        LLT polynomial of a path (def | perm | cm)
    eexpand    e-expansion at q -> 1+q (conj | shift | recursion)
    hl         Hall-Littlewood operator words applied to 1
    macdonald  H~_mu[X; q, 1]
    nabla      nabla e_n, optionally specialized
    verify     run a verification suite
    table      Kreweras, connected graph, Pi_mu and forgotten tables

Exit codes: 0 success, 1 verification failure or internal error, 2 usage
or input error.
"""

from __future__ import annotations
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .cache import ResultCache
from .config import Settings, load_config
from .dyck import corners, forced_pairs, zeta_and_corners
from .epositivity import (
    EExpansion, areaprime_recursion, conjecture_expansion, connected_graphs_sequence,
    kreweras_poly, shift_and_e_expand,
)
from .hall_littlewood import hl_word
from .llt import cm_run, llt_classical, llt_column, llt_marked, nabla_en
from .macdonald import forgotten_pleth, htilde_t1, pi_mu
from .models import (
    Basis, DyckPath, HLKind, InputError, MarkedPath, ResidualMarks,
)
from .render import (
    dumps, eexpansion_to_json, parse_int_list, parse_marks, parse_partition, symf_to_json,
)
from .ring import poly_triples, render_poly, render_rat, to_rat, R
from .runner import run_suite
from .suites import SUITES, SuiteOptions, get_suite
from .symfunc import SymF, partitions_of, p1_derivative, specialize_symf

logger = logging.getLogger(__name__)


# =============================================================================
# PARSER
# =============================================================================

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Machine-readable output")
    common.add_argument("--cache-dir", default=None, help="Result cache directory (overrides LLTLAB_CACHE)")
    common.add_argument("--config", default=None, help="Path to config.json")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    common.add_argument("--log", action="store_true", help="Also log to logs/lltlab_<timestamp>.log")
    return common


def _add_path_args(parser: argparse.ArgumentParser, default_marks: str):
    parser.add_argument("--path", required=True, help="Area word, e.g. 0,1,2,1,2,2")
    parser.add_argument("--coarea", action="store_true", help="Read --path as a coarea word")
    parser.add_argument("--marks", default=default_marks, help="all | none | i:j,k:l")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="lltlab", description="LLT polynomials and e-positivity")
    parser.add_argument("--version", action="version", version=f"lltlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    llt = sub.add_parser("llt", parents=[common], help="LLT polynomial of a path")
    _add_path_args(llt, "all")
    llt.add_argument("--method", choices=["def", "perm", "cm"], default="def",
                     help="def: (column) parking functions on D; perm, cm: marked path Z")
    llt.add_argument("--zeta", action="store_true", help="With perm/cm, read --path as D and use its zeta image")
    llt.add_argument("--basis", default="e", help="Output basis: e, h, p, m, s or f")
    llt.add_argument("--shift", action="store_true", help="e-expansion at q -> 1+q")

    eexpand = sub.add_parser("eexpand", parents=[common], help="e-expansion at q -> 1+q")
    _add_path_args(eexpand, "all")
    eexpand.add_argument("--method", choices=["conj", "shift", "recursion"], default="conj")
    eexpand.add_argument("--classical", action="store_true",
                         help="Read --path as D; marks are forced pairs of D")
    eexpand.add_argument("--residual-marks", default=None, help="inherited (default) | all_corners")

    hl = sub.add_parser("hl", parents=[common], help="Operator word applied to 1")
    hl.add_argument("--op", default="B", help="B, Bt or C")
    hl.add_argument("--word", required=True, help="Composition, e.g. 3,1,1")
    hl.add_argument("--basis", default="e")
    hl.add_argument("--shift", action="store_true")

    mac = sub.add_parser("macdonald", parents=[common], help="H~_mu[X; q, 1]")
    mac.add_argument("--mu", required=True, help="Partition, e.g. 3,1,1")
    mac.add_argument("--basis", default="e")
    mac.add_argument("--shift", action="store_true")

    nabla = sub.add_parser("nabla", parents=[common], help="nabla e_n by the shuffle sum")
    nabla.add_argument("--n", type=int, required=True)
    nabla.add_argument("--q", type=int, default=None, help="Specialize q")
    nabla.add_argument("--t", type=int, default=None, help="Specialize t")
    nabla.add_argument("--basis", default="s")
    nabla.add_argument("--shift", action="store_true")
    nabla.add_argument("--hilbert", action="store_true", help="Apply d^n/dp_1^n")

    verify = sub.add_parser("verify", parents=[common], help="Run a verification suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    verify.add_argument("--n", type=int, required=True, help="Size bound")
    verify.add_argument("--jobs", type=int, default=None, help="Worker processes")
    verify.add_argument("--residual-marks", default=None, help="inherited (default) | all_corners")
    verify.add_argument("--sample", type=int, default=100, help="Random sample size for the recursion suite")
    verify.add_argument("--seed", type=int, default=0)

    table = sub.add_parser("table", parents=[common], help="Integer and polynomial tables")
    table.add_argument("--kind", required=True, choices=["kreweras", "graphs", "pi", "forgotten"])
    table.add_argument("--n", type=int, required=True)
    return parser


# =============================================================================
# HELPERS
# =============================================================================

def _read_path(args) -> DyckPath:
    word = parse_int_list(args.path, "path")
    return DyckPath.from_coarea(word) if args.coarea else DyckPath(word)


def _emit(args, value):
    """Print a SymF or EExpansion as text or JSON"""
    if isinstance(value, EExpansion):
        print(dumps(eexpansion_to_json(value)) if args.json else str(value))
    else:
        print(dumps(symf_to_json(value)) if args.json else str(value))


def _finish(args, F: SymF):
    if args.shift:
        _emit(args, shift_and_e_expand(F))
    else:
        _emit(args, F.to(Basis.from_string(args.basis)))


def _settings(args) -> Settings:
    settings = load_config(Path(args.config) if args.config else None)
    return settings.override(
        cache_dir=Path(args.cache_dir) if args.cache_dir else None,
        jobs=getattr(args, "jobs", None),
        residual_marks=(
            ResidualMarks.from_string(args.residual_marks)
            if getattr(args, "residual_marks", None) else None
        ),
    )


def _classical_marks(D: DyckPath, text: str) -> MarkedPath:
    """zeta(D) marked by the chosen forced pairs of D"""
    Z = zeta_and_corners(D).path
    return MarkedPath(Z, parse_marks(text, forced_pairs(D)))


# =============================================================================
# COMMANDS
# =============================================================================

def cmd_llt(args, settings: Settings, cache: ResultCache) -> int:
    path = _read_path(args)
    if args.method == "def":
        forced = forced_pairs(path)
        marks = parse_marks(args.marks, forced)
        if marks == forced:
            F = cache.memo(f"llt:def:{path}", lambda: llt_classical(path))
        else:
            key = ",".join(f"{i}:{j}" for i, j in sorted(marks))
            F = cache.memo(f"llt:cpf:{path}|{key}", lambda: llt_column(path, marks))
        _finish(args, F)
        return 0

    if args.zeta:
        M = _classical_marks(path, args.marks)
    else:
        M = MarkedPath(path, parse_marks(args.marks, corners(path)))
    if args.method == "perm":
        F = cache.memo(f"llt:perm:{M.key()}", lambda: llt_marked(M))
    else:
        F = cache.memo(f"llt:cm:{M.key()}", lambda: cm_run(M))
    _finish(args, F)
    return 0


def cmd_eexpand(args, settings: Settings, cache: ResultCache) -> int:
    path = _read_path(args)
    if args.classical:
        target = path
        M = _classical_marks(path, args.marks)
        marks = parse_marks(args.marks, forced_pairs(path))
    else:
        M = MarkedPath(path, parse_marks(args.marks, corners(path)))
        target, marks = M, M.marks

    if args.method == "conj":
        result = cache.memo(
            f"eexpand:conj:{'D' if args.classical else 'Z'}:{path}|{sorted(marks)}",
            lambda: conjecture_expansion(target, marks), "eexpansion",
        )
    elif args.method == "shift":
        if args.classical and marks == forced_pairs(path):
            F = cache.memo(f"llt:def:{path}", lambda: llt_classical(path))
        else:
            F = cache.memo(f"llt:perm:{M.key()}", lambda: llt_marked(M))
        result = shift_and_e_expand(F)
    else:
        policy = settings.residual_marks
        result = shift_and_e_expand(areaprime_recursion(M.path, M.marks, policy))
    _emit(args, result)
    return 0


def cmd_hl(args, settings: Settings, cache: ResultCache) -> int:
    kind = HLKind.from_string(args.op)
    word = parse_int_list(args.word, "word")
    F = cache.memo(f"hl:{kind.value}:{','.join(map(str, word))}", lambda: hl_word(kind, word))
    _finish(args, F)
    return 0


def cmd_macdonald(args, settings: Settings, cache: ResultCache) -> int:
    mu = parse_partition(args.mu)
    F = cache.memo(f"macdonald:{','.join(map(str, mu))}", lambda: htilde_t1(mu))
    _finish(args, F)
    return 0


def cmd_nabla(args, settings: Settings, cache: ResultCache) -> int:
    F = cache.memo(f"nabla:{args.n}", lambda: nabla_en(args.n))
    if args.hilbert:
        F = p1_derivative(F, args.n)
    if args.q is not None or args.t is not None:
        F = specialize_symf(F, args.q, args.t)
    _finish(args, F)
    return 0


def cmd_verify(args, settings: Settings, cache: ResultCache) -> int:
    suite = get_suite(args.suite)
    suite.check_bound(args.n)
    options = SuiteOptions(
        residual_marks=settings.residual_marks,
        cache_dir=str(cache.cache_dir) if cache.enabled else None,
        sample=args.sample,
        seed=args.seed,
    )

    progress = None
    if not args.json:
        print("=" * 60)
        print(f"lltlab verify: {suite.name} (n = {args.n}, jobs = {settings.jobs})")
        print(f"  {suite.description}")
        print("=" * 60)

        def progress(label: str, current: int, total: int):
            step = max(1, total // 50)
            if current % step == 0 or current == total:
                print(f"  [{current}/{total}] {label}")

    report = run_suite(suite, args.n, options, jobs=settings.jobs, progress=progress)

    if args.json:
        print(dumps(report.to_dict()))
    else:
        print()
        print("=" * 60)
        status = "PASS" if report.passed else f"FAIL ({len(report.failures)} counterexamples)"
        print(f"{suite.name}: {status} over {report.instances} instances in {report.elapsed:.2f}s")
        for failure in report.failures[:5]:
            print(f"  {failure.instance}")
            print(f"    expected: {failure.expected}")
            print(f"    got:      {failure.got}")
        for note in report.notes:
            print(f"  note: {note}")
        print("=" * 60)
    return 0 if report.passed else 1


def _table_rows(kind: str, n: int) -> List[tuple]:
    if kind == "kreweras":
        return [(str(k), kreweras_poly(k)) for k in range(n + 1)]
    if kind == "graphs":
        return [(str(k), value) for k, value in enumerate(connected_graphs_sequence(n), start=1)]
    if kind == "pi":
        return [(",".join(map(str, mu)), pi_mu(mu)) for mu in partitions_of(n)]
    return [(",".join(map(str, mu)), forgotten_pleth(mu)) for mu in partitions_of(n)]


def cmd_table(args, settings: Settings, cache: ResultCache) -> int:
    if args.n < 0:
        raise InputError(f"table size must be nonnegative, got {args.n}")
    rows = _table_rows(args.kind, args.n)
    if args.json:
        payload = []
        for key, value in rows:
            if isinstance(value, int):
                payload.append({"index": key, "value": value})
            else:
                value = to_rat(value)
                entry = {"index": key, "coeff": poly_triples(value.numer.set_ring(R))}
                if value.denom != 1:
                    entry["den"] = poly_triples(value.denom.set_ring(R))
                payload.append(entry)
        print(dumps({"kind": args.kind, "n": args.n, "rows": payload}))
        return 0
    for key, value in rows:
        if isinstance(value, int):
            print(f"{key}: {value}")
        else:
            value = to_rat(value)
            text = render_poly(value.numer.set_ring(R)) if value.denom == 1 else render_rat(value)
            print(f"{key}: {text}")
    return 0


COMMANDS = {
    "llt": cmd_llt,
    "eexpand": cmd_eexpand,
    "hl": cmd_hl,
    "macdonald": cmd_macdonald,
    "nabla": cmd_nabla,
    "verify": cmd_verify,
    "table": cmd_table,
}


# =============================================================================
# DISPATCH
# =============================================================================

def dispatch(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2

    try:
        settings = _settings(args)
        cache = ResultCache(settings.cache_dir)
        return COMMANDS[args.command](args, settings, cache)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.exception("%s failed: %s", args.command, e)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
