"""Colourings of the anchor cycle and the palettes they induce on T_i and D_i.

Indices are 0-based here; T_i sees c_{i-1} and c_{i+1}.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..aux.helpers import COLOURS, bit


@dataclass(frozen=True)
class Palette:
    """
    attributes:
        colouring: the colours of c_0..c_4
        forced: T index -> the single colour left for T_i
        options: undetermined T index -> (p, q), q the colour used once on C
        d_pairs: D index -> the two colours other than colour(c_i), ascending
        undetermined: the two consecutive undetermined T indices, ascending
        free_d: the three remaining D indices, ascending
        q: the colour used exactly once on C
    """

    colouring: Tuple[int, ...]
    forced: Dict[int, int]
    options: Dict[int, Tuple[int, int]]
    d_pairs: Dict[int, Tuple[int, int]]
    undetermined: Tuple[int, ...]
    free_d: Tuple[int, ...]
    q: int

    def t_mask(self, i: int) -> int:
        if i in self.forced:
            return bit(self.forced[i])
        p, q = self.options[i]
        return bit(p) | bit(q)

    def d_mask(self, i: int) -> int:
        a, b = self.d_pairs[i]
        return bit(a) | bit(b)


def enumerate_c5_colourings(masks: Sequence[int]) -> List[Tuple[int, ...]]:
    """All proper colourings of the cycle within the given masks, lexicographic."""
    if len(masks) != 5:
        raise ValueError("expected five masks")
    allowed = [[c for c in COLOURS if masks[i] & bit(c)] for i in range(5)]
    return [col for col in itertools.product(*allowed)
            if all(col[i] != col[(i + 1) % 5] for i in range(5))]


def palette_analysis(c5col: Sequence[int]) -> Palette:
    col = tuple(c5col)
    if len(col) != 5 or any(col[i] == col[(i + 1) % 5] for i in range(5)):
        raise ValueError(f"{col} is not a proper colouring of the 5-cycle")
    # a proper 3-colouring of C5 uses one colour exactly once
    q = next(c for c in COLOURS if col.count(c) == 1)
    forced, options = {}, {}
    for i in range(5):
        left, right = col[(i - 1) % 5], col[(i + 1) % 5]
        if left != right:
            forced[i] = next(c for c in COLOURS if c not in (left, right))
        else:
            p = next(c for c in COLOURS if c not in (left, q))
            options[i] = (p, q)
    d_pairs = {i: tuple(c for c in COLOURS if c != col[i]) for i in range(5)}
    undetermined = tuple(sorted(options))
    free_d = tuple(i for i in range(5) if i not in options)
    return Palette(col, forced, options, d_pairs, undetermined, free_d, q)
