"""Colour-mask helpers.

A colour list L(v) ⊆ {1, 2, 3} is stored as a 3-bit integer: bit c-1 is set
iff colour c is admissible. These helpers are the only place that knows the
encoding.
"""

from typing import Iterable, Tuple

COLOURS = (1, 2, 3)
FULL_MASK = 0b111

# colours per mask, ascending
_MASK_COLOURS = tuple(
    tuple(c for c in COLOURS if m >> (c - 1) & 1) for m in range(8))


def bit(colour: int) -> int:
    return 1 << (colour - 1)


def mask_of(colours: Iterable[int]) -> int:
    """
    Return the mask admitting exactly the given colours.

    Raises:
        ValueError: a colour outside {1, 2, 3}
    """
    mask = 0
    for c in colours:
        if c not in COLOURS:
            raise ValueError(f"colour {c} outside {{1,2,3}}")
        mask |= bit(c)
    return mask


def colours_of(mask: int) -> Tuple[int, ...]:
    return _MASK_COLOURS[mask]


def mask_size(mask: int) -> int:
    return len(_MASK_COLOURS[mask])


def only_colour(mask: int) -> int:
    """Return the colour of a singleton mask."""
    cols = _MASK_COLOURS[mask]
    if len(cols) != 1:
        raise ValueError(f"mask {mask:03b} is not a singleton")
    return cols[0]


def smallest_colour(mask: int) -> int:
    return _MASK_COLOURS[mask][0]


def mask_digits(mask: int) -> str:
    """Return the list as an ascending digit string, e.g. 0b101 -> '13'."""
    return "".join(str(c) for c in _MASK_COLOURS[mask])
