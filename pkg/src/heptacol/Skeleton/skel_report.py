"""Diagnostic views of a skeleton: a JSON-ready report and a DOT dump.

Set indices are reported 1..5 and vertices are shifted by ``offset`` so
that reports line up with instance files.
"""

from typing import Dict, Optional, Sequence

from ..GraphCore.graph_basic import Graph, VertexSet
from ..Recognition.recog_forbidden import PromiseViolation
from .skel_build import Skeleton, classify_w, wd_components
from .skel_chain import build_chain

ROLE_COLOURS = {"C": "black", "T": "royalblue", "D": "darkorange", "W": "forestgreen", "M": "gray50"}


def _ids(vs: VertexSet, offset: int):
    return [v + offset for v in vs]


def w_types(graph: Graph, sk: Skeleton, c5col: Sequence[int]) -> Dict[str, list]:
    """
    Split the W vertices that still need the D-case enumeration under a
    colouring of the cycle. Such vertices see no determined T set and see
    two sets with different colour options, at least one of them a free D
    set: Type 1 pair an undetermined T_i with a D_j (j != i), Type 2 pair
    two D sets.
    """
    undetermined = {i for i in range(5) if c5col[(i - 1) % 5] == c5col[(i + 1) % 5]}
    free_d = set(range(5)) - undetermined
    # the colour each set can no longer use
    t_lost = {i: c5col[(i - 1) % 5] for i in undetermined}
    d_lost = {i: c5col[i] for i in range(5)}
    kinds = {"type1": [], "type2": []}
    for w, labels in classify_w(graph, sk).items():
        if any(kind == "T" and idx not in undetermined for kind, idx in labels):
            continue
        ts = [idx for kind, idx in labels if kind == "T"]
        ds = [idx for kind, idx in labels if kind == "D"]
        if any(j != i and j in free_d and t_lost[i] != d_lost[j] for i in ts for j in ds):
            kinds["type1"].append(w)
        elif any((j in free_d or k in free_d) and d_lost[j] != d_lost[k] for j in ds for k in ds if j < k):
            kinds["type2"].append(w)
    return kinds


def skeleton_report(graph: Graph, sk: Skeleton, c5col: Optional[Sequence[int]] = None, offset: int = 1) -> dict:
    report = {
        "cycle": [v + offset for v in sk.c],
        "T": {str(i + 1): _ids(sk.T[i], offset) for i in range(5)},
        "D": {str(i + 1): _ids(sk.D[i], offset) for i in range(5)},
        "W": _ids(sk.W, offset),
        "components": [
            {
                "vertices": _ids(comp.vertices, offset),
                "sides": [_ids(side, offset) for side in comp.sides],
                "side_nbhd": [_ids(nb, offset) for nb in comp.side_nbhd],
            }
            for comp in sk.components
        ],
        "wd_components": {},
        "chains": {},
    }
    for i in range(5):
        wds = wd_components(graph, sk, i)
        if isinstance(wds, PromiseViolation):
            report["wd_components"][str(i + 1)] = {"violation": wds.note}
        elif wds:
            report["wd_components"][str(i + 1)] = [_ids(wd.vertices, offset) for wd in wds]
        if sk.T[i]:
            chain = build_chain(graph, sk, i)
            if isinstance(chain, PromiseViolation):
                report["chains"][str(i + 1)] = {"violation": chain.note}
            else:
                report["chains"][str(i + 1)] = {
                    "v0": chain.v0 + offset,
                    "r": chain.r,
                    "levels": [_ids(level, offset) for level in chain.levels],
                }
    if c5col is not None:
        report["c5_colouring"] = list(c5col)
        report["w_types"] = {k: [v + offset for v in vs] for k, vs in w_types(graph, sk, c5col).items()}
    return report


def skeleton_dot(graph: Graph, sk: Skeleton, offset: int = 1, names: Optional[Sequence[int]] = None) -> str:
    """Render the graph in DOT with vertices coloured by skeleton role; names maps local ids to printed ids."""
    name = (lambda v: v + offset) if names is None else (lambda v: names[v] + offset)
    lines = ["graph skeleton {", "  node [style=filled, fontcolor=white];"]
    for v in range(graph.n):
        kind, idx = sk.role(v)
        label = f"{name(v)}" if idx < 0 else f"{name(v)}\\n{kind}{idx + 1}"
        lines.append(f'  {name(v)} [label="{label}", fillcolor={ROLE_COLOURS[kind]}];')
    for u, v in graph.edges():
        bold = u in sk.c and v in sk.c
        lines.append(f"  {name(u)} -- {name(v)}" + (" [penwidth=3];" if bold else ";"))
    lines.append("}")
    return "\n".join(lines) + "\n"
