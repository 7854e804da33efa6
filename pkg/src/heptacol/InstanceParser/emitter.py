"""Text and JSON emission for instances and solver outcomes.

Vertices are written 1-indexed.
"""

import json
from typing import Iterable, List, Optional, Sequence

from ..Engine.engine_solver import Outcome, Status
from ..GraphCore.graph_basic import Graph
from ..Recognition.recog_forbidden import PromiseViolation
from ..aux.helpers import FULL_MASK, mask_digits


def emit_instance(graph: Graph, lists: Optional[Sequence[int]] = None, comments: Iterable[str] = ()) -> str:
    """Write an instance file; list lines only for vertices without the full list."""
    lines = [f"c {text}" if text else "c" for text in comments]
    lines.append(f"p lcol {graph.n} {graph.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges())
    if lists is not None:
        lines.extend(f"l {v + 1} {mask_digits(m)}" for v, m in enumerate(lists) if m != FULL_MASK)
    return "\n".join(lines) + "\n"


def witness_line(violation: PromiseViolation) -> str:
    return " ".join(["witness", violation.kind.value] + [str(v + 1) for v in violation.vertices])


def _witness_record(violation: PromiseViolation) -> dict:
    return {
        "kind": violation.kind.value,
        "vertices": [v + 1 for v in violation.vertices],
        "note": violation.note,
    }


def emit_result(outcome: Outcome, fmt: str = "text", with_stats: bool = False) -> str:
    """
    Render an outcome.

    text: first line SAT|UNSAT|INVALID, then `v <id> <colour>` lines or a
    witness line; with_stats appends `c stat <name> <value>` comment lines.
    json: {status, colouring?, witness?, stats}, keys sorted; millis only
    with with_stats so that plain output is byte-deterministic.
    """
    if fmt == "json":
        record = {"status": outcome.status.value, "stats": outcome.stats.as_dict(timing=with_stats)}
        if outcome.status is Status.SAT:
            record["colouring"] = list(outcome.colouring)
        elif outcome.status is Status.INVALID:
            record["witness"] = _witness_record(outcome.violation)
        return json.dumps(record, sort_keys=True) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown output format {fmt!r}")

    lines: List[str] = [outcome.status.value]
    if outcome.status is Status.SAT:
        lines.extend(f"v {v + 1} {c}" for v, c in enumerate(outcome.colouring))
    elif outcome.status is Status.INVALID:
        lines.append(witness_line(outcome.violation))
    if with_stats:
        lines.extend(f"c stat {name} {value}" for name, value in sorted(outcome.stats.as_dict().items()))
    return "\n".join(lines) + "\n"
