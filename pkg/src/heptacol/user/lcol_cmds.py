"""High-level commands shared by the CLI and the notebook magics."""

import logging
import random
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Union

from ..Engine.engine_solver import Outcome, Status, solve, verify_colouring
from ..GraphCore.graph_basic import Graph
from ..GraphCore.graph_traversal import Bipartition, bipartite_check, connected_components
from ..InstanceParser.emitter import emit_instance, witness_line
from ..InstanceParser.parser import Instance, parse_colouring, parse_instance
from ..Recognition.recog_cycles import shortest_odd_cycle
from ..Recognition.recog_forbidden import PromiseViolation, check_promise
from ..Recognition.recog_twins import recognize_blownup_c7
from ..Skeleton.skel_build import build_skeleton
from ..Skeleton.skel_report import skeleton_dot, skeleton_report
from ..TestKit.kit_generators import GenSpec, generate
from ..TestKit.kit_named import NAMED
from ..TestKit.kit_oracle import oracle_solve
from ..aux.settings import SolverSettings

LOG = logging.getLogger(__name__)

ORACLE_LIMIT = 40
SUITES = ("named", "blowups", "random")


def load_instance(path: Union[str, Path]) -> Instance:
    return parse_instance(Path(path).read_text())


def make_instance(text: str) -> Instance:
    """Generate an instance from a string in instance format"""
    return parse_instance(text)


def solve_instance(instance: Instance, settings: Optional[SolverSettings] = None) -> Outcome:
    return solve(instance.graph, instance.lists, settings=settings)


def check_colouring(instance: Instance, colouring_text: str) -> bool:
    colouring = parse_colouring(colouring_text, instance.graph.n)
    return verify_colouring(instance.graph, instance.lists, colouring)


def oracle_outcome(instance: Instance) -> Status:
    colouring = oracle_solve(instance.graph, instance.lists)
    return Status.UNSAT if colouring is None else Status.SAT


def _component_kind(sub: Graph) -> dict:
    if sub.n == 1 or isinstance(bipartite_check(sub), Bipartition):
        return {"kind": "bipartite"}
    cycle = shortest_odd_cycle(sub)
    if len(cycle) == 5:
        return {"kind": "c5_skeleton", "cycle": cycle}
    if len(cycle) == 7:
        return {"kind": "blownup_c7", "cycle": cycle}
    return {"kind": "long_odd_cycle", "cycle": cycle}


def explain_promise(graph: Graph) -> dict:
    """
    Promise check plus, per component, the route the solver takes and
    the skeleton report when a five-cycle anchors it.
    """
    violation = check_promise(graph)
    report = {"status": "OK" if violation is None else "INVALID", "components": []}
    if violation is not None:
        report["witness"] = witness_line(violation)
        if violation.note:
            report["note"] = violation.note
    for comp in connected_components(graph):
        sub, ids = graph.induced_subgraph(comp)
        entry = {"vertices": [v + 1 for v in ids]}
        entry.update(_component_kind(sub))
        if "cycle" in entry:
            entry["cycle"] = [ids[v] + 1 for v in entry["cycle"]]
        if entry["kind"] == "c5_skeleton" and violation is None:
            sk = build_skeleton(sub, shortest_odd_cycle(sub))
            if isinstance(sk, PromiseViolation):
                entry["skeleton"] = {"violation": sk.relabel(ids).note}
            else:
                local = skeleton_report(sub, sk, offset=0)
                entry["skeleton"] = _relabel_report(local, ids)
        elif entry["kind"] == "blownup_c7" and violation is None:
            dec = recognize_blownup_c7(sub, shortest_odd_cycle(sub))
            if not isinstance(dec, PromiseViolation):
                entry["classes"] = [[ids[v] + 1 for v in cls] for cls in dec.classes]
        report["components"].append(entry)
    return report


def _relabel_report(obj, ids):
    """Map the vertex ids of a local skeleton report to 1-indexed global ids."""
    if isinstance(obj, dict):
        return {k: (v if k in ("r", "c5_colouring") else _relabel_report(v, ids)) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_relabel_report(v, ids) for v in obj]
    if isinstance(obj, int) and not isinstance(obj, bool):
        return ids[obj] + 1
    return obj


def promise_dot(graph: Graph) -> Optional[str]:
    """DOT dump of the first component anchored on a five-cycle."""
    for comp in connected_components(graph):
        sub, ids = graph.induced_subgraph(comp)
        if sub.n < 5 or isinstance(bipartite_check(sub), Bipartition):
            continue
        cycle = shortest_odd_cycle(sub)
        if len(cycle) != 5:
            continue
        sk = build_skeleton(sub, cycle)
        if isinstance(sk, PromiseViolation):
            return None
        if len(ids) < graph.n:
            LOG.info("DOT dump covers the component of vertex %d only", ids[0] + 1)
        return skeleton_dot(sub, sk, names=ids)
    return None


def generate_instance(spec: GenSpec) -> str:
    graph, lists = generate(spec)
    comments = [f"generated kind={spec.kind} seed={spec.seed} sizes={','.join(map(str, spec.sizes))}"]
    return emit_instance(graph, lists, comments)


def _bench_instances(suite: str, seed: int) -> Iterator[tuple]:
    if suite == "named":
        for name, factory in NAMED.items():
            yield name, factory(), None
    elif suite == "blowups":
        for size in (10, 50, 200):
            yield f"blownup_c5_{size}", generate(GenSpec("blownup_c5", (size,) * 5))[0], None
        for size in (10, 50, 100):
            yield f"blownup_c7_{size}", generate(GenSpec("blownup_c7", (size,) * 7))[0], None
    elif suite == "random":
        rng = random.Random(seed)
        for j in range(12):
            kind = ("blownup_c5", "blownup_c7", "skeleton_built", "random_rejection")[j % 4]
            if kind == "skeleton_built":
                sizes = tuple(rng.randint(0, 3) for _ in range(10))
            elif kind == "random_rejection":
                sizes = (rng.randint(6, 14),)
            else:
                sizes = tuple(rng.randint(1, 4) for _ in range(5 if kind == "blownup_c5" else 7))
            spec = GenSpec(kind, sizes, seed=rng.randrange(10 ** 6), list_prob=0.4, w_count=2, components=2)
            graph, lists = generate(spec)
            yield f"{kind}_{j}", graph, lists
    else:
        raise ValueError(f"unknown bench suite {suite!r}, expected one of {SUITES}")


def run_bench(suite: str, seed: int = 0, settings: Optional[SolverSettings] = None) -> List[Dict]:
    """
    Solve each instance of a suite in verify mode; compare with the oracle
    up to ORACLE_LIMIT vertices.
    """
    settings = (settings or SolverSettings()).override(mode="verify")
    rows = []
    for name, graph, lists in _bench_instances(suite, seed):
        outcome = solve(graph, lists, settings=settings)
        row = {"name": name, "n": graph.n, "m": graph.m, "status": outcome.status.value}
        if outcome.status is not Status.INVALID and graph.n <= ORACLE_LIMIT:
            oracle = Status.UNSAT if oracle_solve(graph, lists) is None else Status.SAT
            row["oracle"] = "agree" if oracle is outcome.status else "DISAGREE"
        else:
            row["oracle"] = "skip"
        row.update(outcome.stats.as_dict())
        rows.append(row)
    return rows
