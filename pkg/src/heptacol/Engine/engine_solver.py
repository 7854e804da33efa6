"""Top-level list 3-colouring of {P7, triangle}-free graphs.

Each connected component is handled on its own:

    * bipartite components go through propagation, safe elimination and
      2-SAT, with a three-way branching fallback when full lists remain
    * a shortest odd cycle of length 5 anchors the skeleton enumeration
    * a shortest odd cycle of length 7 must be a blown-up C7
    * a triangle or a longer chordless odd cycle is a promise violation
"""

import enum
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from ..GraphCore.graph_basic import Graph
from ..GraphCore.graph_traversal import Bipartition, bipartite_check, connected_components
from ..Recognition.recog_cycles import shortest_odd_cycle
from ..Recognition.recog_forbidden import PromiseViolation, check_promise
from ..Recognition.recog_twins import recognize_blownup_c7
from ..Sat2.sat_instance import solve_2sat
from ..Skeleton.skel_build import build_skeleton
from ..Skeleton.skel_chain import build_chain
from ..aux.exceptions import Conflict, InternalInvariantError
from ..aux.helpers import FULL_MASK, bit, smallest_colour
from ..aux.settings import SolverSettings
from .engine_branches import BranchDescriptor, apply_branch, enumerate_branches
from .engine_c7 import colour_blownup_c7
from .engine_lists import ListState, eliminate_safe, propagate
from .engine_palette import enumerate_c5_colourings, palette_analysis
from .engine_reduce import decode_assignment, residual_to_2sat

LOG = logging.getLogger(__name__)

Colouring = List[int]
ComponentResult = Union[Colouring, PromiseViolation, None]


class Status(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    INVALID = "INVALID"


@dataclass
class SolveStats:
    branches: int = 0
    branches_survived: int = 0
    propagations: int = 0
    safe_assignments: int = 0
    sat_instances: int = 0
    c5_colourings: int = 0
    fallback_used: int = 0
    millis: float = 0.0

    def absorb(self, other: "SolveStats") -> None:
        for name in ("branches", "branches_survived", "propagations", "safe_assignments",
                     "sat_instances", "c5_colourings", "fallback_used"):
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def as_dict(self, timing: bool = True) -> dict:
        record = {
            "branches": self.branches,
            "branches_survived": self.branches_survived,
            "propagations": self.propagations,
            "sat_instances": self.sat_instances,
            "fallback_used": self.fallback_used,
        }
        if timing:
            record["millis"] = round(self.millis, 3)
        return record


@dataclass
class Outcome:
    """
    attributes:
        status: SAT, UNSAT or INVALID
        colouring: colour of every vertex (SAT only)
        violation: the witness (INVALID only)
        stats: counters of the run
    """

    status: Status
    colouring: Optional[Tuple[int, ...]] = None
    violation: Optional[PromiseViolation] = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def is_sat(self) -> bool:
        return self.status is Status.SAT


def verify_colouring(graph: Graph, masks: Optional[Sequence[int]], colouring: Sequence[int]) -> bool:
    """Total, proper and within every list."""
    if len(colouring) != graph.n:
        return False
    for v, c in enumerate(colouring):
        if c not in (1, 2, 3):
            return False
        if masks is not None and not masks[v] & bit(c):
            return False
    return all(colouring[u] != colouring[v] for u, v in graph.edges())


def _state_counts(before: int, state: ListState) -> int:
    return len(state.trail) - before


def _finish(graph: Graph, state: ListState, stats: SolveStats) -> Optional[Colouring]:
    inst, var_map = residual_to_2sat(state, graph)
    stats.sat_instances += 1
    assignment = solve_2sat(inst)
    if assignment is None:
        return None
    return decode_assignment(state, var_map, assignment)


def _branch_search(graph: Graph, root: ListState, stats: SolveStats) -> Optional[Colouring]:
    """Depth-first three-way branching on the smallest full-list vertex."""
    stack = [root]
    while stack:
        state = stack.pop()
        full = state.full_vertices()
        if not full:
            result = _finish(graph, state, stats)
            if result is not None:
                return result
            continue
        v = full[0]
        children = []
        for colour in (1, 2, 3):
            child = state.copy()
            before = len(child.trail)
            stats.branches += 1
            try:
                child.assign(v, colour, ("fallback", v))
                propagate(graph, child)
            except Conflict:
                continue
            finally:
                stats.propagations += _state_counts(before, child)
            stats.branches_survived += 1
            stats.safe_assignments += len(eliminate_safe(graph, child))
            children.append(child)
        # colour 1 explored first
        stack.extend(reversed(children))
    return None


def _solve_bipartite(graph: Graph, masks: Sequence[int], split: Bipartition, stats: SolveStats) -> Optional[Colouring]:
    if all(m == FULL_MASK for m in masks):
        return [1 if v in split.left else 2 for v in range(graph.n)]
    state = ListState(masks)
    try:
        propagate(graph, state)
    except Conflict as err:
        LOG.debug("bipartite component: %s", err)
        return None
    finally:
        stats.propagations += len(state.trail)
    stats.safe_assignments += len(eliminate_safe(graph, state))
    if state.full_vertices():
        stats.fallback_used += 1
        LOG.warning("bipartite component keeps %d full lists; falling back to branching",
                    len(state.full_vertices()))
        return _branch_search(graph, state, stats)
    return _finish(graph, state, stats)


def _first_success(branches: Iterable[BranchDescriptor],
                   evaluate: Callable[[BranchDescriptor], Tuple[Optional[Colouring], SolveStats]],
                   stats: SolveStats, workers: int) -> Optional[Colouring]:
    """Evaluate branches in order; with several workers, batch-wise, keeping the least-index success."""
    if workers == 1:
        for branch in branches:
            result, local = evaluate(branch)
            stats.absorb(local)
            if result is not None:
                return result
        return None
    it = iter(branches)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        while True:
            batch = [b for _, b in zip(range(4 * workers), it)]
            if not batch:
                return None
            # counters stop at the first success, as in the sequential order
            for result, local in pool.map(evaluate, batch):
                stats.absorb(local)
                if result is not None:
                    return result


def _solve_c5(graph: Graph, masks: Sequence[int], cycle: Sequence[int],
              settings: SolverSettings, stats: SolveStats) -> ComponentResult:
    sk = build_skeleton(graph, cycle)
    if isinstance(sk, PromiseViolation):
        return sk
    LOG.info("skeleton on %s: |T|=%s |D|=%s |W|=%d, %d components",
             sk.c, [len(t) for t in sk.T], [len(d) for d in sk.D], len(sk.W), len(sk.components))
    base = ListState(masks)

    for c5col in enumerate_c5_colourings([masks[v] for v in sk.c]):
        stats.c5_colourings += 1
        palette = palette_analysis(c5col)
        chains = {}
        for i in palette.undetermined:
            if not sk.T[i]:
                continue
            chain = build_chain(graph, sk, i)
            if isinstance(chain, PromiseViolation):
                return chain
            chains[i] = chain

        def evaluate(branch: BranchDescriptor) -> Tuple[Optional[Colouring], SolveStats]:
            local = SolveStats(branches=1)
            state = base.copy()
            try:
                apply_branch(state, branch, sk, chains)
                propagate(graph, state)
            except Conflict:
                return None, local
            finally:
                local.propagations = len(state.trail)
            local.branches_survived = 1
            made = eliminate_safe(graph, state)
            local.safe_assignments = len(made)
            if settings.debug:
                if eliminate_safe(graph, state):
                    raise InternalInvariantError("safe elimination is not idempotent")
                if ListState.replay(masks, state.trail) != state.masks:
                    raise InternalInvariantError("trail replay disagrees with the lists")
            full = state.full_vertices()
            if full:
                raise InternalInvariantError(
                    f"vertex {full[0]} keeps three colours after branch {branch.label()}")
            return _finish(graph, state, local), local

        result = _first_success(enumerate_branches(sk, chains, c5col), evaluate, stats, settings.parallel)
        if result is not None:
            LOG.debug("colouring found under cycle colouring %s", c5col)
            return result
    return None


def _solve_component(graph: Graph, masks: Sequence[int], settings: SolverSettings,
                     stats: SolveStats) -> ComponentResult:
    if graph.n == 1:
        return [smallest_colour(masks[0])]
    split = bipartite_check(graph)
    if isinstance(split, Bipartition):
        return _solve_bipartite(graph, masks, split, stats)
    cycle = shortest_odd_cycle(graph)
    LOG.debug("shortest odd cycle of length %d", len(cycle))
    if len(cycle) == 3:
        return PromiseViolation.triangle(*cycle)
    if len(cycle) == 5:
        return _solve_c5(graph, masks, cycle, settings, stats)
    if len(cycle) == 7:
        dec = recognize_blownup_c7(graph, cycle)
        if isinstance(dec, PromiseViolation):
            return dec
        colours = colour_blownup_c7(dec, masks)
        if colours is None:
            return None
        return [colours[v] for v in range(graph.n)]
    # a chordless odd cycle of length at least 9
    return PromiseViolation.induced_p7(cycle[:7], note=f"chordless odd cycle of length {len(cycle)}")


def _solve(graph: Graph, masks: List[int], settings: SolverSettings, stats: SolveStats) -> Outcome:
    if settings.mode == "verify":
        violation = check_promise(graph)
        if violation is not None:
            return Outcome(Status.INVALID, violation=violation, stats=stats)
    colouring = [0] * graph.n
    for comp in connected_components(graph):
        if len(comp) == graph.n:
            sub, ids = graph, tuple(range(graph.n))
        else:
            sub, ids = graph.induced_subgraph(comp)
        result = _solve_component(sub, [masks[v] for v in ids], settings, stats)
        if isinstance(result, PromiseViolation):
            LOG.info("promise violation: %s %s", result.kind.value, result.note)
            return Outcome(Status.INVALID, violation=result.relabel(ids), stats=stats)
        if result is None:
            return Outcome(Status.UNSAT, stats=stats)
        for local, v in enumerate(ids):
            colouring[v] = result[local]
    if not verify_colouring(graph, masks, colouring):
        raise InternalInvariantError("assembled colouring fails verification")
    return Outcome(Status.SAT, colouring=tuple(colouring), stats=stats)


def solve(graph: Graph, lists: Optional[Sequence[int]] = None, mode: Optional[str] = None,
          settings: Optional[SolverSettings] = None) -> Outcome:
    """
    Decide list 3-colourability.

    Parameters:
        lists: colour mask per vertex, all full when omitted
        mode: overrides settings.mode
    Returns:
        SAT with a verified colouring, UNSAT, or INVALID with the witness

    In trust mode a failed structural assertion is reported as a structure
    breach; in verify mode it propagates as InternalInvariantError.
    """
    settings = (settings or SolverSettings()).override(mode=mode)
    masks = [FULL_MASK] * graph.n if lists is None else list(lists)
    if len(masks) != graph.n:
        raise ValueError(f"expected {graph.n} lists, got {len(masks)}")
    for v, m in enumerate(masks):
        if not 0 < m <= FULL_MASK:
            raise ValueError(f"vertex {v} has an invalid colour list {m!r}")
    stats = SolveStats()
    start = time.perf_counter()
    try:
        outcome = _solve(graph, masks, settings, stats)
    except InternalInvariantError as err:
        if settings.mode == "verify":
            raise
        LOG.warning("structural assertion failed: %s", err)
        outcome = Outcome(Status.INVALID, violation=PromiseViolation.breach(str(err)), stats=stats)
    stats.millis = (time.perf_counter() - start) * 1000.0
    LOG.info("%s after %d branches, %d 2-SAT instances", outcome.status.value, stats.branches, stats.sat_instances)
    return outcome
