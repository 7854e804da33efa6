"""Partial-colouring branches for one colouring of the anchor cycle.

Per undetermined T index i (palette (p, q), chain N_0 ⊆ N_1 ⊊ ... ⊊ T_i):

    c      all of T_i get p
    d      all of T_i get q
    a(k,w) all of N_k get p, w ∈ N_{k+1} - N_k gets q
    b(k,w) all of N_k get q, w gets p

Per free D index i (pair (a, b), anchor v_i the smallest vertex of D_i):

    g      all of D_i get a
    h      all of D_i get b
    e(v')  v_i gets a, v' gets b
    f(v')  v_i gets b, v' gets a
"""

import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..Skeleton.skel_build import Skeleton
from ..Skeleton.skel_chain import Chain
from .engine_lists import ListState
from .engine_palette import palette_analysis


@dataclass(frozen=True)
class TCase:
    index: int
    tag: str
    k: Optional[int] = None
    w: Optional[int] = None


@dataclass(frozen=True)
class DCase:
    index: int
    tag: str
    witness: Optional[int] = None


@dataclass(frozen=True)
class BranchDescriptor:
    c5_colouring: Tuple[int, ...]
    t_cases: Tuple[TCase, ...]
    d_cases: Tuple[DCase, ...]

    def label(self) -> str:
        parts = [f"C={''.join(map(str, self.c5_colouring))}"]
        for t in self.t_cases:
            parts.append(f"T{t.index + 1}:{t.tag}" + (f"({t.k},{t.w})" if t.w is not None else ""))
        for d in self.d_cases:
            parts.append(f"D{d.index + 1}:{d.tag}" + (f"({d.witness})" if d.witness is not None else ""))
        return " ".join(parts)


def _t_choices(i: int, chain: Optional[Chain]) -> List[TCase]:
    if chain is None:
        return []
    choices = [TCase(i, "c"), TCase(i, "d")]
    for tag in ("a", "b"):
        for k, diff in chain.steps():
            choices.extend(TCase(i, tag, k, w) for w in diff)
    return choices


def _d_choices(i: int, members) -> List[DCase]:
    if not members:
        return []
    anchor = members.smallest()
    others = [v for v in members if v != anchor]
    choices = [DCase(i, "g"), DCase(i, "h")]
    for tag in ("e", "f"):
        choices.extend(DCase(i, tag, v) for v in others)
    return choices


def enumerate_branches(sk: Skeleton, chains: Dict[int, Chain], c5col: Sequence[int]) -> Iterator[BranchDescriptor]:
    """
    Lazily yield the Cartesian product of the per-index case choices,
    T indices before D indices, each ascending. Empty sets contribute a
    single empty choice.
    """
    palette = palette_analysis(c5col)
    t_lists = [_t_choices(i, chains.get(i)) for i in palette.undetermined if sk.T[i]]
    d_lists = [_d_choices(i, sk.D[i]) for i in palette.free_d if sk.D[i]]
    n_t = len(t_lists)
    for combo in itertools.product(*t_lists, *d_lists):
        yield BranchDescriptor(palette.colouring, tuple(combo[:n_t]), tuple(combo[n_t:]))


def branch_count(sk: Skeleton, chains: Dict[int, Chain], c5col: Sequence[int]) -> int:
    """Closed-form size of enumerate_branches for the same arguments."""
    palette = palette_analysis(c5col)
    t_factors = [2 + 2 * chains[i].case_count() for i in palette.undetermined if sk.T[i]]
    d_factors = [2 + 2 * (len(sk.D[i]) - 1) for i in palette.free_d if sk.D[i]]
    return math.prod(t_factors + d_factors)


def apply_branch(state: ListState, branch: BranchDescriptor, sk: Skeleton, chains: Dict[int, Chain]) -> ListState:
    """
    Seed the branch into state: the cycle colouring, the forced and
    two-colour palettes of T and D, then the case assignments.

    Raises:
        Conflict: a seeded colour is outside the vertex's current list
    """
    palette = palette_analysis(branch.c5_colouring)
    for i, v in enumerate(sk.c):
        state.assign(v, branch.c5_colouring[i], ("cycle", i))
    for i in range(5):
        for v in sk.T[i]:
            state.restrict(v, palette.t_mask(i), ("palette", "T", i))
        for v in sk.D[i]:
            state.restrict(v, palette.d_mask(i), ("palette", "D", i))

    for case in branch.t_cases:
        p, q = palette.options[case.index]
        cause = ("case", case.tag, case.index)
        if case.tag in ("c", "d"):
            colour = p if case.tag == "c" else q
            for v in sk.T[case.index]:
                state.assign(v, colour, cause)
            continue
        inner, outer = (p, q) if case.tag == "a" else (q, p)
        for v in chains[case.index].levels[case.k]:
            state.assign(v, inner, cause)
        state.assign(case.w, outer, cause)

    for case in branch.d_cases:
        a, b = palette.d_pairs[case.index]
        members = sk.D[case.index]
        cause = ("case", case.tag, case.index)
        if case.tag in ("g", "h"):
            colour = a if case.tag == "g" else b
            for v in members:
                state.assign(v, colour, cause)
            continue
        first, second = (a, b) if case.tag == "e" else (b, a)
        state.assign(members.smallest(), first, cause)
        state.assign(case.witness, second, cause)
    return state
