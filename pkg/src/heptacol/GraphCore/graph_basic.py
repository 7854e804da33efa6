"""Immutable simple undirected graphs over dense vertex ids 0..n-1.

This module contains the following:
    * VertexSet - immutable membership bitset
    * Graph - adjacency lists plus a constant-time edge predicate
    * build_graph - validated construction from an edge list
    * adjacency_query - edge predicate as a free function
"""

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from ..aux.exceptions import DuplicateEdge, LoopEdge, VertexOutOfRange

# rows of the bit matrix stay below 2 MB in total up to this order
BITMATRIX_LIMIT = 4096


@dataclass(frozen=True, order=False)
class VertexSet:
    """
    Set of vertices stored as the bits of a Python integer.

    attributes:
        bits (int): bit v is set iff vertex v is a member
    """

    bits: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            bits |= 1 << v
        return cls(bits)

    def __iter__(self) -> Iterator[int]:
        b = self.bits
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.bits >> v) & 1 == 1

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits)

    def __le__(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.bits != other.bits

    def smallest(self) -> int:
        if not self.bits:
            raise ValueError("empty vertex set")
        return (self.bits & -self.bits).bit_length() - 1

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(self)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self), self.as_tuple())

    def __repr__(self) -> str:
        return "VertexSet({" + ", ".join(str(v) for v in self) + "})"


class Graph:
    """
    Finite simple undirected graph.

    attributes:
        n (int): number of vertices, named 0..n-1
        adj (tuple of tuples): sorted neighbour list of each vertex
    """

    __slots__ = ("n", "adj", "_rows", "_m")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(a) for a in adj)
        self._m = sum(len(a) for a in self.adj) // 2
        if n <= BITMATRIX_LIMIT:
            rows = []
            for nbrs in self.adj:
                row = 0
                for w in nbrs:
                    row |= 1 << w
                rows.append(row)
            self._rows = tuple(rows)
        else:
            self._rows = None

    @property
    def m(self) -> int:
        return self._m

    @property
    def is_trivial(self) -> bool:
        return self.n == 1

    def has_edge(self, u: int, v: int) -> bool:
        if self._rows is not None:
            return (self._rows[u] >> v) & 1 == 1
        nbrs = self.adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def neighbours(self, v: int) -> Tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbour_set(self, v: int) -> VertexSet:
        if self._rows is not None:
            return VertexSet(self._rows[v])
        return VertexSet.of(self.adj[v])

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield every edge once as (u, v) with u < v, in ascending order."""
        for u, nbrs in enumerate(self.adj):
            for w in nbrs:
                if w > u:
                    yield (u, w)

    def vertices(self) -> range:
        return range(self.n)

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """
        Return G[vertices] relabelled to 0..k-1 together with the
        ascending tuple of original ids (new id i is original ids[i]).
        """
        ids = tuple(sorted(set(vertices)))
        local = {v: i for i, v in enumerate(ids)}
        adj = [[local[w] for w in self.adj[v] if w in local] for v in ids]
        return Graph(len(ids), adj), ids

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Build a graph on vertices 0..n-1 from a list of vertex pairs.

    Raises:
        LoopEdge: an edge (u, u)
        VertexOutOfRange: an endpoint outside 0..n-1
        DuplicateEdge: the same unordered pair given twice
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    nbrs: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        if u == v:
            raise LoopEdge(u)
        if v in nbrs[u]:
            raise DuplicateEdge(u, v)
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, [sorted(s) for s in nbrs])


def adjacency_query(graph: Graph, u: int, v: int) -> bool:
    """True iff {u, v} is an edge; always False for u == v."""
    return u != v and graph.has_edge(u, v)
