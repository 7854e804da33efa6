"""Seeded generators of {P7, triangle}-free instances.

    * blownup_c5 / blownup_c7 - class blow-ups of a 5- or 7-cycle
    * skeleton_built - a C5 with populated T_i, D_i, W and G - S components
    * random_rejection - random triangle-free graphs, rejected while they hold an induced P7

Every generated graph passes check_promise. Randomness comes only from
random.Random(spec.seed).
"""

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from ..GraphCore.graph_basic import Graph, build_graph
from ..GraphCore.graph_traversal import connected_components
from ..Recognition.recog_forbidden import check_promise
from ..aux.exceptions import RejectionBudgetExceeded
from ..aux.helpers import FULL_MASK

LOG = logging.getLogger(__name__)

KINDS = ("blownup_c5", "blownup_c7", "skeleton_built", "random_rejection")

# proper non-empty sublists of {1, 2, 3}
PARTIAL_MASKS = (0b001, 0b010, 0b011, 0b100, 0b101, 0b110)


@dataclass(frozen=True)
class GenSpec:
    """
    attributes:
        kind: one of KINDS
        sizes: class sizes for blow-ups; for skeleton_built the sizes of
            T_0..T_4 followed by D_0..D_4; for random_rejection (n,)
        seed: random seed
        list_prob: probability that a vertex gets a random proper sublist
        density: edge probability for random_rejection and optional
            skeleton edges
        w_count: W vertices for skeleton_built
        components: G - S components (single edges) for skeleton_built
        type2: force a W vertex adjacent to D_1 and D_4
        budget: attempts before giving up
    """

    kind: str
    sizes: Tuple[int, ...] = ()
    seed: int = 0
    list_prob: float = 0.0
    density: float = 0.3
    w_count: int = 0
    components: int = 0
    type2: bool = False
    budget: int = 10_000

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if any(s < 0 for s in self.sizes):
            raise ValueError("sizes must be non-negative")


class _Builder:
    """Edge collector that refuses triangles."""

    def __init__(self):
        self.adj: List[Set[int]] = []

    def add_vertex(self) -> int:
        self.adj.append(set())
        return len(self.adj) - 1

    def can_join(self, u: int, v: int) -> bool:
        return u != v and v not in self.adj[u] and not self.adj[u] & self.adj[v]

    def join(self, u: int, v: int) -> bool:
        if not self.can_join(u, v):
            return False
        self.adj[u].add(v)
        self.adj[v].add(u)
        return True

    def graph(self) -> Graph:
        edges = [(u, v) for u in range(len(self.adj)) for v in self.adj[u] if u < v]
        return build_graph(len(self.adj), edges)


def blowup(base_edges: Sequence[Tuple[int, int]], sizes: Sequence[int]) -> Graph:
    """Replace base vertex i by a stable class of sizes[i] vertices, joined completely along base edges."""
    if any(s < 1 for s in sizes):
        raise ValueError("every class needs at least one vertex")
    start = [0]
    for s in sizes:
        start.append(start[-1] + s)
    edges = []
    for a, b in base_edges:
        edges.extend((u, v) for u in range(start[a], start[a + 1]) for v in range(start[b], start[b + 1]))
    return build_graph(start[-1], edges)


def cycle_edges(length: int) -> List[Tuple[int, int]]:
    return [(i, (i + 1) % length) for i in range(length)]


def random_lists(n: int, list_prob: float, rng: random.Random) -> Optional[List[int]]:
    if list_prob <= 0:
        return None
    return [rng.choice(PARTIAL_MASKS) if rng.random() < list_prob else FULL_MASK for _ in range(n)]


def _skeleton_draft(spec: GenSpec, rng: random.Random) -> Graph:
    """
    C5 on vertices 0..4, then (with type2) d_1, d_4 and a W vertex on both
    as 5, 6, 7, then the T_i and D_i populations, W vertices, single-edge
    components of G - S and random optional edges.
    """
    t_sizes = tuple(spec.sizes[:5]) + (0,) * (5 - len(spec.sizes[:5]))
    d_sizes = tuple(spec.sizes[5:10]) + (0,) * (5 - len(spec.sizes[5:10]))
    b = _Builder()
    c = [b.add_vertex() for _ in range(5)]
    for i in range(5):
        b.join(c[i], c[(i + 1) % 5])
    D = [[] for _ in range(5)]
    if spec.type2:
        D[1].append(b.add_vertex())
        D[4].append(b.add_vertex())
        w = b.add_vertex()
        b.join(D[1][0], c[1])
        b.join(D[4][0], c[4])
        b.join(w, D[1][0])
        b.join(w, D[4][0])
    T = [[b.add_vertex() for _ in range(t_sizes[i])] for i in range(5)]
    for i in range(5):
        D[i].extend(b.add_vertex() for _ in range(d_sizes[i]))
    for i in range(5):
        for t in T[i]:
            b.join(t, c[(i - 1) % 5])
            b.join(t, c[(i + 1) % 5])
        for d in D[i]:
            b.join(d, c[i])

    pool = [v for i in range(5) for v in T[i] + D[i]]
    for _ in range(spec.w_count):
        if not pool:
            break
        w = b.add_vertex()
        for v in rng.sample(pool, min(len(pool), rng.randint(1, 2))):
            b.join(w, v)

    # nested T_i-neighbourhoods: the j-th component on T_i sees a prefix of it
    for j in range(spec.components):
        i = rng.randrange(5)
        if not T[i]:
            continue
        x, y = b.add_vertex(), b.add_vertex()
        b.join(x, y)
        for t in T[i][:1 + j % len(T[i])]:
            b.join(x, t)

    # T_i - T_{i+1} and D_i - T_i edges keep every cycle neighbourhood intact
    candidates = [(u, v) for i in range(5) for u in T[i] for v in T[(i + 1) % 5]]
    candidates += [(u, v) for i in range(5) for u in D[i] for v in T[i]]
    for u, v in candidates:
        if rng.random() < spec.density:
            b.join(u, v)
    return b.graph()


def _repair(graph: Graph, keep: int = 5) -> Graph:
    """
    Delete the largest witness vertex outside 0..keep-1 until the promise
    holds, then keep the component of vertex 0.
    """
    while True:
        violation = check_promise(graph)
        if violation is None:
            break
        victim = max(v for v in violation.vertices if v >= keep)
        graph, _ = graph.induced_subgraph(v for v in range(graph.n) if v != victim)
    if graph.n:
        graph, _ = graph.induced_subgraph(connected_components(graph)[0])
    return graph


def _random_triangle_free(n: int, density: float, rng: random.Random) -> Graph:
    b = _Builder()
    for _ in range(n):
        b.add_vertex()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() < density:
            b.join(u, v)
    return b.graph()


def generate(spec: GenSpec) -> Tuple[Graph, Optional[List[int]]]:
    """
    Build the instance described by spec.

    Raises:
        RejectionBudgetExceeded: no promise instance within spec.budget attempts
    """
    rng = random.Random(spec.seed)
    if spec.kind == "blownup_c5":
        graph = blowup(cycle_edges(5), spec.sizes or (1,) * 5)
    elif spec.kind == "blownup_c7":
        graph = blowup(cycle_edges(7), spec.sizes or (1,) * 7)
    elif spec.kind == "skeleton_built":
        graph = _repair(_skeleton_draft(spec, rng))
    else:
        graph = None
        for attempt in range(spec.budget):
            n = spec.sizes[0] if spec.sizes else 10
            candidate = _random_triangle_free(n, spec.density, rng)
            if check_promise(candidate) is None:
                graph = candidate
                LOG.debug("%s accepted after %d attempts", spec.kind, attempt + 1)
                break
        if graph is None:
            raise RejectionBudgetExceeded(f"{spec.kind}: no promise instance in {spec.budget} attempts")
    return graph, random_lists(graph.n, spec.list_prob, rng)


def inject_violation(graph: Graph, kind: str, seed: int = 0) -> Graph:
    """
    Return a copy with a triangle (a new vertex on both ends of an edge)
    or an induced P7 (a pendant path of six new vertices).
    """
    rng = random.Random(seed)
    edges = list(graph.edges())
    n = graph.n
    if kind == "triangle":
        if edges:
            u, v = rng.choice(edges)
            return build_graph(n + 1, edges + [(u, n), (v, n)])
        return build_graph(n + 3, edges + [(n, n + 1), (n + 1, n + 2), (n, n + 2)])
    if kind == "induced_p7":
        anchor = rng.randrange(n) if n else None
        new = list(range(n, n + 6))
        path = [(new[j], new[j + 1]) for j in range(5)]
        if anchor is None:
            return build_graph(n + 7, path + [(n + 5, n + 6)])
        return build_graph(n + 6, edges + path + [(anchor, new[0])])
    raise ValueError(f"unknown violation kind {kind!r}")
