"""
Command-line front end.

    classify N K        one plane row for G(N, K)
    graph N K           G(N, K) itself with its core verdict (JSON or DOT)
    verify              closed forms against the search oracles
    retract N K         the folding onto an inner cycle (JSON or DOT)
    cayley NAME [N K]   a Cayley digraph construction (DOT or JSON report)
    table NAME [N K]    a construction's operation table as JSON
    check-table PATH    analyze a user table, optionally against --target N K
    scan                the plane dataset as CSV

Exit codes: 0 success, 1 usage, 2 disagreement, 3 inconclusive search.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, TextIO

from algebra import analyze
from cayley_builder import (build_cayley, cay1_representation, generates, group_representation,
                            is_2gen_monoid_graph, is_group_graph, loopless_semigroup_obstruction,
                            named_construction, underlying_graph, verify_representation)
from constants import (BRUTE_AUT_DEFAULT_N, EXCEPTIONAL_AUT_ORDERS, ORACLE_CEILINGS, PLANE_COLUMNS,
                       PLANE_HEADER, CoreReason, CoreStatus, ExitCode)
from core_classifier import (build_retraction, classify_core, core_witness_cycle,
                             has_spoked_min_odd_cycle, is_endomorphism_transitive,
                             retraction_target)
from gp_core import DomainError, GPParams, build_gp, is_bipartite_gp, min_odd_cycle_witnesses, odd_girth
from hom_engine import BudgetExhausted, SearchBudget, is_core_oracle, is_endo_transitive_oracle
from serialize import (CoreVerdictSerializer, GraphSerializer, PlaneRowSerializer,
                       RepresentationReportSerializer, RetractionSerializer, TableSerializer, cayley_to_dot,
                       deserialize_table, dumps, graph_to_dot, retraction_to_dot)
from symmetry import aut_group_bruteforce, expected_aut_order, is_vertex_transitive, orbits
from utils import coprime, square_is, square_is_pm_k, valid_pairs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlaneRow:
    n: int
    k: int
    bipartite: bool
    core: bool
    vertex_transitive: bool
    group_graph: bool
    two_gen_monoid_graph: bool
    loopless_obstruction: bool
    aut_order_expected: Optional[int]
    aut_order_found: Optional[int] = None


@dataclass(frozen=True)
class CheckOutcome:
    check: str
    n: int
    k: int
    status: str
    detail: str = ""


AGREE, DISAGREE, INCONCLUSIVE = "agree", "disagree", "inconclusive"


def _budget(node_cap: Optional[int]) -> SearchBudget:
    return SearchBudget.from_env() if node_cap is None else SearchBudget(node_cap=node_cap)


def plane_row(n: int, k: int, brute_aut: bool = False, node_cap: Optional[int] = None) -> PlaneRow:
    """
    :raises ParameterError: for invalid (n, k)
    :raises BudgetExhausted: if the automorphism search runs out
    """
    params = GPParams(n, k)
    found = None
    if brute_aut or n <= BRUTE_AUT_DEFAULT_N:
        found = len(aut_group_bruteforce(build_gp(params), _budget(node_cap)))
    return PlaneRow(
        n=n,
        k=k,
        bipartite=is_bipartite_gp(params),
        core=classify_core(n, k).is_core,
        vertex_transitive=is_vertex_transitive(n, k),
        group_graph=is_group_graph(n, k),
        two_gen_monoid_graph=is_2gen_monoid_graph(n, k),
        loopless_obstruction=loopless_semigroup_obstruction(n, k),
        aut_order_expected=expected_aut_order(n, k),
        aut_order_found=found,
    )


# --- verify checks: each returns (agrees, detail) for one instance ---

def _check_core(n: int, k: int, budget: SearchBudget) -> tuple[bool, str]:
    closed = classify_core(n, k).is_core
    oracle = is_core_oracle(build_gp(GPParams(n, k)), budget, vertices=(0, n))
    spoked = has_spoked_min_odd_cycle(n, k)
    return closed == oracle == spoked, f"closed={closed} oracle={oracle} spoked={spoked}"


def _check_endo(n: int, k: int, budget: SearchBudget) -> tuple[bool, str]:
    closed = is_endomorphism_transitive(n, k)
    oracle = is_endo_transitive_oracle(build_gp(GPParams(n, k)), budget, sources=(0, n))
    return closed == oracle, f"closed={closed} oracle={oracle}"


def _check_aut(n: int, k: int, budget: SearchBudget) -> tuple[bool, str]:
    graph = build_gp(GPParams(n, k))
    perms = aut_group_bruteforce(graph, budget)
    expected = expected_aut_order(n, k)
    if expected is None:
        expected = EXCEPTIONAL_AUT_ORDERS[(n, k)]
    transitive = len(orbits(graph.order, perms)) == 1
    agrees = len(perms) == expected and transitive == is_vertex_transitive(n, k)
    return agrees, f"expected={expected} found={len(perms)} transitive={transitive}"


def _check_retract(n: int, k: int, budget: SearchBudget) -> tuple[bool, str]:
    params = GPParams(n, k)
    try:
        f = build_retraction(n, k)
    except DomainError as e:
        return False, str(e)
    target = retraction_target(n, k)
    agrees = f.image_set() == frozenset(target) and len(target) == params.inner_len
    return agrees, f"image={len(f.image_set())} inner_len={params.inner_len}"


def _check_spokes(n: int, k: int, budget: SearchBudget) -> tuple[bool, str]:
    params = GPParams(n, k)
    worst = max(w.spoke_count for w in min_odd_cycle_witnesses(params))
    verdict = classify_core(n, k)
    witness = core_witness_cycle(n, k)
    d, a, g = verdict.d, verdict.a, params.inner_len
    if verdict.reason is CoreReason.C2:
        witness_ok = witness is not None and witness.length == g - a + d + 2
    elif verdict.reason is CoreReason.C3:
        witness_ok = witness is not None and witness.length == a + d + 2
    else:
        witness_ok = witness is None
    return worst <= 2 and witness_ok, f"max_spokes={worst} witness_ok={witness_ok}"


def _check_representation(rep, budget: SearchBudget, group: bool) -> tuple[bool, str]:
    n, k = rep.target
    report = verify_representation(rep.table, rep.connection, n, k, rep.hint, budget)
    if group:
        agrees = report.algebra.is_group and report.realizes_target
    else:
        agrees = (report.associative and report.identity is not None and report.generates
                  and report.loopless and report.algebra.is_orthogroup and report.realizes_target)
    agrees = agrees and rep.table.order == 2 * n
    return agrees, f"realizes={report.realizes_target} loops={report.loop_count}"


def _check_cay1(n: int, k: int, budget: SearchBudget) -> tuple[bool, str]:
    return _check_representation(cay1_representation(n, k), budget, group=False)


def _check_group(n: int, k: int, budget: SearchBudget) -> tuple[bool, str]:
    return _check_representation(group_representation(n, k), budget, group=True)


def _check_coprime(n: int, k: int, budget: SearchBudget) -> tuple[bool, str]:
    core = classify_core(n, k).is_core
    predicted = not is_bipartite_gp(GPParams(n, k)) and k != 1
    return core == predicted, f"core={core} predicted={predicted}"


def _non_bipartite(n: int, k: int) -> bool:
    return not is_bipartite_gp(GPParams(n, k))


def _not_core(n: int, k: int) -> bool:
    return classify_core(n, k).status is CoreStatus.NOT_CORE


Check = Callable[[int, int, SearchBudget], tuple[bool, str]]

CHECKS: dict[str, tuple[Check, Callable[[int, int], bool]]] = {
    "core": (_check_core, _non_bipartite),
    "endo": (_check_endo, lambda n, k: True),
    "aut": (_check_aut, lambda n, k: True),
    "retract": (_check_retract, _not_core),
    "spokes": (_check_spokes, _non_bipartite),
    "cay1": (_check_cay1, square_is_pm_k),
    "group": (_check_group, lambda n, k: square_is(n, k, 1)),
    "coprime": (_check_coprime, coprime),
}


def run_check(task: tuple[str, int, int, Optional[int]]) -> CheckOutcome:
    """ one (check, n, k) instance; module level so a process pool can pickle it """
    name, n, k, node_cap = task
    check, _ = CHECKS[name]
    try:
        agrees, detail = check(n, k, _budget(node_cap))
    except BudgetExhausted as e:
        logger.warning("%s G(%d,%d): %s", name, n, k, e)
        return CheckOutcome(name, n, k, INCONCLUSIVE, str(e))
    return CheckOutcome(name, n, k, AGREE if agrees else DISAGREE, detail)


def _ordered_map(func, tasks: Sequence, jobs: int) -> list:
    if jobs <= 1:
        return [func(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, tasks))


def verify_tasks(n_max: int, checks: Iterable[str], node_cap: Optional[int] = None) -> list[tuple]:
    tasks = []
    for name in checks:
        ceiling = ORACLE_CEILINGS[name]
        limit = n_max
        if n_max > ceiling:
            logger.warning("%s check clamped to n <= %d", name, ceiling)
            limit = ceiling
        _, applies = CHECKS[name]
        tasks.extend((name, n, k, node_cap) for n, k in valid_pairs(limit) if applies(n, k))
    return tasks


def cmd_verify(n_max: int, checks: Sequence[str], node_cap: Optional[int] = None,
               jobs: int = 1, out: TextIO = sys.stdout) -> ExitCode:
    outcomes = _ordered_map(run_check, verify_tasks(n_max, checks, node_cap), jobs)
    for o in outcomes:
        print(f"{o.check} {o.n} {o.k} {o.status} {o.detail}".rstrip(), file=out)
    for name in checks:
        mine = [o for o in outcomes if o.check == name]
        counts = {s: sum(o.status == s for o in mine) for s in (AGREE, DISAGREE, INCONCLUSIVE)}
        print(f"# {name}: {counts[AGREE]} agree, {counts[DISAGREE]} disagree, "
              f"{counts[INCONCLUSIVE]} inconclusive", file=out)
    if any(o.status == DISAGREE for o in outcomes):
        return ExitCode.DISAGREEMENT
    if any(o.status == INCONCLUSIVE for o in outcomes):
        return ExitCode.INCONCLUSIVE
    return ExitCode.OK


def cmd_classify(n: int, k: int, brute_aut: bool = False, node_cap: Optional[int] = None,
                 fmt: str = "json", out: TextIO = sys.stdout) -> ExitCode:
    row = plane_row(n, k, brute_aut, node_cap)
    if fmt == "json":
        print(dumps(PlaneRowSerializer(row).data), file=out)
    else:
        for column in PLANE_COLUMNS:
            print(f"{column}: {_cell(getattr(row, column))}", file=out)
    return ExitCode.OK


def cmd_graph(n: int, k: int, fmt: str = "json", out: TextIO = sys.stdout) -> ExitCode:
    graph = build_gp(GPParams(n, k))
    if fmt == "dot":
        print(graph_to_dot(graph, f"G_{n}_{k}"), file=out)
        return ExitCode.OK
    data = {
        "graph": GraphSerializer(graph).data,
        "verdict": CoreVerdictSerializer(classify_core(n, k)).data,
        "odd_girth": odd_girth(graph),
    }
    print(dumps(data), file=out)
    return ExitCode.OK


def cmd_retract(n: int, k: int, fmt: str = "json", out: TextIO = sys.stdout) -> ExitCode:
    f = build_retraction(n, k)
    target = retraction_target(n, k)
    if fmt == "dot":
        print(retraction_to_dot(build_gp(GPParams(n, k)), f, target), file=out)
    else:
        data = RetractionSerializer({"n": n, "k": k, "target": sorted(target), "map": f.to_json()}).data
        print(dumps(data), file=out)
    return ExitCode.OK


def cmd_cayley(name: str, n: Optional[int] = None, k: Optional[int] = None, fmt: str = "dot",
               node_cap: Optional[int] = None, out: TextIO = sys.stdout) -> ExitCode:
    rep = named_construction(name, n, k)
    if fmt == "dot":
        print(cayley_to_dot(build_cayley(rep.table, rep.connection), name), file=out)
        return ExitCode.OK
    tn, tk = rep.target
    report = verify_representation(rep.table, rep.connection, tn, tk, rep.hint, _budget(node_cap))
    print(dumps(RepresentationReportSerializer(report).data), file=out)
    return ExitCode.OK if report.realizes_target else ExitCode.DISAGREEMENT


def cmd_table(name: str, n: Optional[int] = None, k: Optional[int] = None,
              out: TextIO = sys.stdout) -> ExitCode:
    print(dumps(TableSerializer(named_construction(name, n, k)).data), file=out)
    return ExitCode.OK


def cmd_check_table(path: str, target: Optional[Sequence[int]] = None, node_cap: Optional[int] = None,
                    out: TextIO = sys.stdout) -> ExitCode:
    """
    :raises ValueError: on unreadable or malformed table JSON
    """
    with open(path) as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: {e}") from None
    table, connection = deserialize_table(obj)
    if target is None:
        report = analyze(table, connection or None)
        graph, census = underlying_graph(build_cayley(table, connection))
        data = {
            "associative": report.associative,
            "identity": report.identity,
            "is_group": report.is_group,
            "is_orthogroup": report.is_orthogroup,
            "generates": generates(table, connection),
            "loop_count": census.loops,
            "edges": graph.edge_count(),
        }
        print(dumps(data), file=out)
        return ExitCode.OK
    n, k = target
    report = verify_representation(table, connection, n, k, budget=_budget(node_cap))
    print(dumps(RepresentationReportSerializer(report).data), file=out)
    return ExitCode.OK if report.realizes_target else ExitCode.DISAGREEMENT


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _scan_row(task: tuple[int, int, bool, Optional[int]]) -> PlaneRow:
    n, k, brute_aut, node_cap = task
    return plane_row(n, k, brute_aut, node_cap)


def cmd_scan(n_max: int, out_path: Optional[str] = None, brute_aut: bool = False,
             node_cap: Optional[int] = None, jobs: int = 1, out: TextIO = sys.stdout) -> ExitCode:
    tasks = [(n, k, brute_aut, node_cap) for n, k in valid_pairs(n_max)]
    rows = _ordered_map(_scan_row, tasks, jobs)
    handle = open(out_path, "w", newline="") if out_path else out
    try:
        print(PLANE_HEADER, file=handle)
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(PLANE_COLUMNS)
        for row in rows:
            writer.writerow([_cell(getattr(row, c)) for c in PLANE_COLUMNS])
    finally:
        if out_path:
            handle.close()
    logger.debug("wrote %d plane rows", len(rows))
    return ExitCode.OK


class _Parser(argparse.ArgumentParser):
    """ usage errors exit with 1 """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(int(ExitCode.USAGE), f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="petersen-plane", description="Generalized Petersen graph toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="Log search statistics to stderr.")
    p.add_argument("--budget", type=int, default=None,
                   help="Node cap for every search (overrides GP_ORACLE_BUDGET).")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="One plane row for G(n,k).")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--brute-aut", action="store_true", help="Count Aut by search at any n.")
    s.add_argument("--format", choices=("json", "text"), default="json")

    s = sub.add_parser("graph", help="G(n,k) with its core verdict and odd girth.")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--format", choices=("json", "dot"), default="json")

    s = sub.add_parser("verify", help="Compare closed forms against the search oracles.")
    s.add_argument("--n-max", type=int, default=12)
    s.add_argument("--check", action="append", choices=sorted(CHECKS), default=None,
                   help="Run only this check; repeatable. Default: all.")
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("retract", help="The retraction of a non-core G(n,k) onto an inner cycle.")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--format", choices=("json", "dot"), default="json")

    s = sub.add_parser("cayley", help="A Cayley digraph construction.")
    s.add_argument("construction")
    s.add_argument("n", type=int, nargs="?")
    s.add_argument("k", type=int, nargs="?")
    s.add_argument("--format", choices=("dot", "json"), default="dot")

    s = sub.add_parser("table", help="A construction's table as JSON.")
    s.add_argument("name")
    s.add_argument("n", type=int, nargs="?")
    s.add_argument("k", type=int, nargs="?")

    s = sub.add_parser("check-table", help="Analyze a table JSON file.")
    s.add_argument("path")
    s.add_argument("--target", type=int, nargs=2, metavar=("N", "K"))

    s = sub.add_parser("scan", help="The plane dataset as CSV.")
    s.add_argument("--n-max", "--nmax", dest="n_max", type=int, default=16)
    s.add_argument("--out", default=None, help="CSV path; stdout when omitted.")
    s.add_argument("--brute-aut", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    return p


def dispatch(args: argparse.Namespace, out: TextIO = sys.stdout) -> ExitCode:
    if args.command == "classify":
        return cmd_classify(args.n, args.k, args.brute_aut, args.budget, args.format, out)
    if args.command == "graph":
        return cmd_graph(args.n, args.k, args.format, out)
    if args.command == "verify":
        return cmd_verify(args.n_max, args.check or list(CHECKS), args.budget, args.jobs, out)
    if args.command == "retract":
        return cmd_retract(args.n, args.k, args.format, out)
    if args.command == "cayley":
        return cmd_cayley(args.construction, args.n, args.k, args.format, args.budget, out)
    if args.command == "table":
        return cmd_table(args.name, args.n, args.k, out)
    if args.command == "check-table":
        return cmd_check_table(args.path, args.target, args.budget, out)
    return cmd_scan(args.n_max, args.out, args.brute_aut, args.budget, args.jobs, out)


def main(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", force=True)
    try:
        return int(dispatch(args, out))
    except KeyError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return int(ExitCode.USAGE)
    except (DomainError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCode.USAGE)
    except BudgetExhausted as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return int(ExitCode.INCONCLUSIVE)
