from heptacol.GraphCore.graph_basic import Graph, build_graph


def c5_with(*extra) -> Graph:
    """C5 on 0..4 plus new vertices 5, 6, ...; each argument lists the smaller neighbours of one new vertex."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for j, nbrs in enumerate(extra):
        edges.extend((5 + j, u) for u in nbrs)
    return build_graph(5 + len(extra), edges)


def c7_with(*extra) -> Graph:
    edges = [(i, (i + 1) % 7) for i in range(7)]
    for j, nbrs in enumerate(extra):
        edges.extend((7 + j, u) for u in nbrs)
    return build_graph(7 + len(extra), edges)
