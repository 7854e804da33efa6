"""The five-cycle skeleton.

Given an induced C5 with vertices c_0..c_4 (indices modulo 5) every
neighbour of the cycle lies in exactly one of

    T_i - neighbours on the cycle are exactly c_{i-1}, c_{i+1}
    D_i - the only neighbour on the cycle is c_i

S is the cycle together with all T_i and D_i, W the isolated vertices of
G - S. This module builds the sets, validates the structure of the
components of G - S and of G[W + D_i], and returns explicit witnesses
(triangles, induced P7s) when the structure breaks.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..GraphCore.graph_basic import Graph, VertexSet
from ..GraphCore.graph_traversal import OddCycle, bipartite_check, connected_components
from ..Recognition.recog_cycles import shortest_odd_cycle
from ..Recognition.recog_forbidden import PromiseViolation, is_induced_path

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentInfo:
    """
    A non-trivial component of G - S.

    attributes:
        vertices: the component
        sides: stable bipartition (U_1, U_2)
        side_nbhd: common neighbours (N_1, N_2) of each side in S
        t_nbhd: neighbourhood of the component in T_0..T_4
    """

    vertices: VertexSet
    sides: Tuple[VertexSet, VertexSet]
    side_nbhd: Tuple[VertexSet, VertexSet]
    t_nbhd: Tuple[VertexSet, ...]


@dataclass(frozen=True)
class WDComponent:
    """A non-trivial component of G[W + D_i], split into its W and D_i sides."""

    index: int
    vertices: VertexSet
    w_side: VertexSet
    d_side: VertexSet
    w_tnbhd: VertexSet
    d_tnbhd: VertexSet

    @property
    def t_nbhd(self) -> VertexSet:
        return self.w_tnbhd | self.d_tnbhd


@dataclass(frozen=True)
class Skeleton:
    c: Tuple[int, ...]
    T: Tuple[VertexSet, ...]
    D: Tuple[VertexSet, ...]
    S: VertexSet
    W: VertexSet
    components: Tuple[ComponentInfo, ...]
    # colouring-independent, filled on demand
    _wd: Dict[int, object] = field(default_factory=dict, compare=False, repr=False)
    _chains: Dict[int, object] = field(default_factory=dict, compare=False, repr=False)

    def role(self, v: int) -> Optional[Tuple[str, int]]:
        """Return ('C'|'T'|'D', i) for members of S, ('W', -1) or ('M', -1) otherwise."""
        if v in self.c:
            return ("C", self.c.index(v))
        for i in range(5):
            if v in self.T[i]:
                return ("T", i)
            if v in self.D[i]:
                return ("D", i)
        if v in self.W:
            return ("W", -1)
        return ("M", -1)


def p7_or_breach(graph: Graph, path: Sequence[int], note: str) -> PromiseViolation:
    """Return an induced-P7 witness if the path checks out, else a breach."""
    path = tuple(path)
    if len(path) == 7 and is_induced_path(graph, path):
        return PromiseViolation.induced_p7(path, note=note)
    LOG.warning("could not certify witness %s (%s)", path, note)
    return PromiseViolation.breach(note, path)


def _nbhd_in(graph: Graph, v: int, target: VertexSet) -> VertexSet:
    return graph.neighbour_set(v) & target


def _t_index(T: Sequence[VertexSet], u: int) -> int:
    return next(i for i in range(5) if u in T[i])


def _tail(c: Sequence[int], start: int, count: int) -> Tuple[int, ...]:
    return tuple(c[(start + j) % 5] for j in range(count))


def _odd_component_witness(graph: Graph, members: VertexSet, S: VertexSet, T, D, c) -> PromiseViolation:
    sub, ids = graph.induced_subgraph(members)
    local = shortest_odd_cycle(sub)
    odd = [ids[v] for v in local]
    if len(odd) == 3:
        return PromiseViolation.triangle(*odd, note="odd cycle in G - S")
    on_odd = set(odd)
    # shortest path from the odd cycle to S, interior outside S
    parent = {v: None for v in odd}
    queue = deque(odd)
    hit = None
    while queue and hit is None:
        v = queue.popleft()
        for w in graph.adj[v]:
            if w in parent:
                continue
            parent[w] = v
            if w in S:
                hit = w
                break
            queue.append(w)
    if hit is None:
        return PromiseViolation.breach("odd cycle in G - S not linked to S")
    walk = [hit]
    while parent[walk[-1]] is not None:
        walk.append(parent[walk[-1]])
    walk.reverse()                    # odd-cycle vertex, p_1 .. p_k, s
    first = walk[1]
    k = len(odd)
    head = None
    for idx, x in enumerate(odd):
        if not graph.has_edge(first, x):
            continue
        for step in (1, -1):
            x2, x1 = odd[(idx + step) % k], odd[(idx + 2 * step) % k]
            if graph.has_edge(first, x2):
                return PromiseViolation.triangle(first, x, x2, note="odd cycle in G - S")
            if not graph.has_edge(first, x1):
                head = (x1, x2, x)
                break
        if head:
            break
    if head is None:
        return PromiseViolation.breach("odd cycle in G - S without induced attachment")
    s = hit
    j = _t_index(T, s) if any(s in t for t in T) else None
    tail = _tail(c, j + 1, 3) if j is not None else _tail(c, next(i for i in range(5) if s in D[i]), 3)
    path = head + tuple(walk[1:]) + tail
    return p7_or_breach(graph, path[:7], "odd cycle in G - S")


def _check_component(graph: Graph, members: VertexSet, S: VertexSet, T, D, c) -> Union[ComponentInfo, PromiseViolation]:
    all_d = VertexSet()
    for d in D:
        all_d = all_d | d
    # no edge of G - S has an end with a neighbour in some D_j
    for x in members:
        touch = _nbhd_in(graph, x, all_d)
        if touch:
            u = touch.smallest()
            y = (graph.neighbour_set(x) & members).smallest()
            if graph.has_edge(y, u):
                return PromiseViolation.triangle(x, y, u, note="edge of G - S meeting D")
            j = next(i for i in range(5) if u in D[i])
            return p7_or_breach(graph, (y, x, u) + _tail(c, j, 4), "edge of G - S meeting D")

    sub, ids = graph.induced_subgraph(members)
    split = bipartite_check(sub)
    if isinstance(split, OddCycle):
        return _odd_component_witness(graph, members, S, T, D, c)
    sides = (VertexSet.of(ids[v] for v in split.left), VertexSet.of(ids[v] for v in split.right))

    # ends of every induced P3 inside the component see the same S-neighbours
    for y in members:
        inner = [x for x in graph.adj[y] if x in members]
        first = _nbhd_in(graph, inner[0], S)
        for x in inner[1:]:
            other = _nbhd_in(graph, x, S)
            if other == first:
                continue
            a, b = (inner[0], x) if first - other else (x, inner[0])
            u = (_nbhd_in(graph, a, S) - _nbhd_in(graph, b, S)).smallest()
            if graph.has_edge(y, u):
                return PromiseViolation.triangle(a, y, u, note="P3 in G - S with unequal T-neighbourhoods")
            j = _t_index(T, u)
            return p7_or_breach(graph, (b, y, a, u) + _tail(c, j + 1, 3),
                                "P3 in G - S with unequal T-neighbourhoods")

    n1 = _nbhd_in(graph, sides[0].smallest(), S)
    n2 = _nbhd_in(graph, sides[1].smallest(), S)
    shared = n1 & n2
    if shared:
        x = sides[0].smallest()
        y = (graph.neighbour_set(x) & members).smallest()
        return PromiseViolation.triangle(x, y, shared.smallest(), note="component sides share an S-neighbour")
    if not n1 and not n2:
        return PromiseViolation.breach("component of G - S without neighbours in S (graph not connected)",
                                       members.as_tuple()[:1])
    union = n1 | n2
    return ComponentInfo(members, sides, (n1, n2), tuple(union & T[i] for i in range(5)))


def build_skeleton(graph: Graph, c5: Sequence[int]) -> Union[Skeleton, PromiseViolation]:
    """
    Classify the neighbours of the induced five-cycle c5 and validate the
    components of G - S.

    Requires a connected graph. Returns the Skeleton, or the first
    violation found with its witness.
    """
    c = tuple(c5)
    if len(c) != 5:
        raise ValueError("c5 must list five vertices")
    position = {v: i for i, v in enumerate(c)}
    T: List[List[int]] = [[] for _ in range(5)]
    D: List[List[int]] = [[] for _ in range(5)]
    for x in range(graph.n):
        if x in position:
            continue
        hits = sorted(position[w] for w in graph.adj[x] if w in position)
        if not hits:
            continue
        for a in hits:
            if (a + 1) % 5 in hits:
                return PromiseViolation.triangle(x, c[a], c[(a + 1) % 5], note="consecutive cycle neighbours")
        if len(hits) == 1:
            D[hits[0]].append(x)
        else:
            a, b = hits
            i = (a + 1) % 5 if (b - a) % 5 == 2 else (b + 1) % 5
            T[i].append(x)

    for i in range(5):
        for group, anchor, name in ((T[i], c[(i - 1) % 5], "T"), (D[i], c[i], "D")):
            members = set(group)
            for x in group:
                for y in graph.adj[x]:
                    if y in members:
                        return PromiseViolation.triangle(x, y, anchor, note=f"{name}_{i + 1} not stable")

    Ts = tuple(VertexSet.of(t) for t in T)
    Ds = tuple(VertexSet.of(d) for d in D)
    S = VertexSet.of(c)
    for part in Ts + Ds:
        S = S | part

    rest = [v for v in range(graph.n) if v not in S]
    sub, ids = graph.induced_subgraph(rest)
    W = []
    components = []
    for comp in connected_components(sub):
        members = VertexSet.of(ids[v] for v in comp)
        if len(members) == 1:
            W.append(members.smallest())
            continue
        info = _check_component(graph, members, S, Ts, Ds, c)
        if isinstance(info, PromiseViolation):
            return info
        components.append(info)

    LOG.debug("skeleton: |T|=%s |D|=%s |W|=%d components=%d",
              [len(t) for t in Ts], [len(d) for d in Ds], len(W), len(components))
    return Skeleton(c, Ts, Ds, S, VertexSet.of(W), tuple(components))


def wd_components(graph: Graph, sk: Skeleton, i: int) -> Union[List[WDComponent], PromiseViolation]:
    """
    Non-trivial components of G[W + D_i] with the common T_i-neighbourhood
    of each side; validates that no W vertex sees two consecutive D sets.
    """
    if i in sk._wd:
        return sk._wd[i]
    c = sk.c
    for j in ((i - 1) % 5, i):
        for w in sk.W:
            left = _nbhd_in(graph, w, sk.D[j])
            right = _nbhd_in(graph, w, sk.D[(j + 1) % 5])
            if left and right:
                d1, d2 = left.smallest(), right.smallest()
                if graph.has_edge(d1, d2):
                    return PromiseViolation.triangle(d1, w, d2, note="W vertex meeting consecutive D sets")
                return p7_or_breach(graph, (d1, w, d2) + _tail(c, j + 1, 4),
                                    "W vertex meeting consecutive D sets")

    pool = sk.W | sk.D[i]
    seen = set()
    result = []
    for root in pool:
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in graph.adj[v]:
                if w in pool and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        if len(comp) < 2:
            continue
        members = VertexSet.of(comp)
        for y in comp:
            inner = [x for x in graph.adj[y] if x in members]
            first = _nbhd_in(graph, inner[0], sk.T[i])
            for x in inner[1:]:
                other = _nbhd_in(graph, x, sk.T[i])
                if other == first:
                    continue
                a, b = (inner[0], x) if first - other else (x, inner[0])
                u = (_nbhd_in(graph, a, sk.T[i]) - _nbhd_in(graph, b, sk.T[i])).smallest()
                if graph.has_edge(y, u):
                    return PromiseViolation.triangle(a, y, u, note=f"P3 in G[W + D_{i + 1}] with unequal T-neighbourhoods")
                return p7_or_breach(graph, (b, y, a, u) + _tail(c, i + 1, 3),
                                    f"P3 in G[W + D_{i + 1}] with unequal T-neighbourhoods")
        w_side = members & sk.W
        d_side = members & sk.D[i]
        result.append(WDComponent(i, members, w_side, d_side,
                                  _nbhd_in(graph, w_side.smallest(), sk.T[i]),
                                  _nbhd_in(graph, d_side.smallest(), sk.T[i])))
    sk._wd[i] = result
    return result


def classify_w(graph: Graph, sk: Skeleton) -> Dict[int, Tuple[Tuple[str, int], ...]]:
    """Map every W vertex to the sorted list of (kind, index) sets it touches."""
    touched = {}
    for w in sk.W:
        labels = set()
        for x in graph.adj[w]:
            kind, idx = sk.role(x)
            if kind in ("T", "D"):
                labels.add((kind, idx))
        touched[w] = tuple(sorted(labels))
    return touched
