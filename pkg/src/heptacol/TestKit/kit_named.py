"""Named reference graphs and chromatic-polynomial counts, via networkx."""

import networkx as nx
import sympy

from ..GraphCore.graph_basic import Graph, build_graph
from .kit_generators import blowup, cycle_edges


def from_networkx(g: nx.Graph) -> Graph:
    """Relabel the nodes 0..n-1 in sorted order and build a Graph."""
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    return build_graph(g.number_of_nodes(), [(u, v) for u, v in g.edges() if u != v])


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(graph.vertices())
    g.add_edges_from(graph.edges())
    return g


def petersen() -> Graph:
    return from_networkx(nx.petersen_graph())


def grotzsch() -> Graph:
    """The Mycielski graph of C5: triangle-free, chromatic number 4."""
    return from_networkx(nx.mycielski_graph(4))


def cycle(n: int) -> Graph:
    return build_graph(n, cycle_edges(n))


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def blownup_cycle(length: int, size: int) -> Graph:
    return blowup(cycle_edges(length), [size] * length)


def chromatic_value(graph: Graph, k: int) -> int:
    """Number of proper k-colourings, from the chromatic polynomial."""
    poly = nx.chromatic_polynomial(to_networkx(graph))
    symbols = sorted(poly.free_symbols, key=str)
    if not symbols:
        return int(poly)
    return int(sympy.expand(poly.subs(symbols[0], k)))


NAMED = {
    "petersen": petersen,
    "grotzsch": grotzsch,
    "c5": lambda: cycle(5),
    "c7": lambda: cycle(7),
    "p6": lambda: path(6),
    "blownup_c5": lambda: blownup_cycle(5, 3),
    "blownup_c7": lambda: blownup_cycle(7, 2),
}
