"""Nested neighbourhood chains inside an undetermined T_i."""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Tuple, Union

from ..GraphCore.graph_basic import Graph, VertexSet
from ..Recognition.recog_forbidden import PromiseViolation
from .skel_build import Skeleton, p7_or_breach, wd_components

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chain:
    """
    levels[0] = {v0}, levels[1..r] the distinct component neighbourhoods in
    T_i ordered by strict inclusion, levels[r + 1] = T_i.
    """

    index: int
    v0: int
    levels: Tuple[VertexSet, ...]

    @property
    def r(self) -> int:
        return len(self.levels) - 2

    def steps(self) -> Iterator[Tuple[int, VertexSet]]:
        """Yield (k, N_{k+1} - N_k) for k = 0..r."""
        for k in range(self.r + 1):
            yield k, self.levels[k + 1] - self.levels[k]

    def case_count(self) -> int:
        """Number of (a)/(b)-style witnesses w summed over all levels."""
        return sum(len(diff) for _, diff in self.steps())


def _crossing_witness(graph: Graph, sk: Skeleton, i: int, first, second) -> PromiseViolation:
    (x_set, a_members), (y_set, b_members) = first, second
    u = (x_set - y_set).smallest()
    z = (y_set - x_set).smallest()
    v = (graph.neighbour_set(u) & a_members).smallest()
    w = (graph.neighbour_set(v) & a_members).smallest()
    if graph.has_edge(u, w):
        return PromiseViolation.triangle(u, v, w, note=f"crossing neighbourhoods in T_{i + 1}")
    y = (graph.neighbour_set(z) & b_members).smallest()
    x = (graph.neighbour_set(y) & b_members).smallest()
    if graph.has_edge(z, x):
        return PromiseViolation.triangle(x, y, z, note=f"crossing neighbourhoods in T_{i + 1}")
    return p7_or_breach(graph, (x, y, z, sk.c[(i + 1) % 5], u, v, w),
                        f"crossing neighbourhoods in T_{i + 1}")


def build_chain(graph: Graph, sk: Skeleton, i: int) -> Union[Chain, PromiseViolation]:
    """
    Order the T_i-neighbourhoods of the non-trivial components of G - S
    and of G[W + D_i] by inclusion.

    Equal neighbourhoods share a level; a neighbourhood equal to T_i merges
    with the closing level. v0 is the smallest vertex of the first level.
    Chains do not depend on the colouring and are cached on the skeleton.
    """
    if i in sk._chains:
        return sk._chains[i]
    if not sk.T[i]:
        raise ValueError(f"T_{i + 1} is empty")
    wds = wd_components(graph, sk, i)
    if isinstance(wds, PromiseViolation):
        return wds

    entries = [(comp.t_nbhd[i], comp.vertices) for comp in sk.components]
    entries += [(wd.t_nbhd, wd.vertices) for wd in wds]
    distinct = {}
    for nbhd, members in entries:
        if nbhd and nbhd.bits not in distinct:
            distinct[nbhd.bits] = (nbhd, members)
    ordered: List = sorted(distinct.values(), key=lambda e: e[0].sort_key())

    for prev, cur in zip(ordered, ordered[1:]):
        if not prev[0] <= cur[0]:
            return _crossing_witness(graph, sk, i, prev, cur)

    inner = [nbhd for nbhd, _ in ordered if nbhd != sk.T[i]]
    v0 = inner[0].smallest() if inner else sk.T[i].smallest()
    chain = Chain(i, v0, (VertexSet.of([v0]),) + tuple(inner) + (sk.T[i],))
    LOG.debug("chain for T_%d: r=%d sizes=%s", i + 1, chain.r, [len(x) for x in chain.levels])
    sk._chains[i] = chain
    return chain
