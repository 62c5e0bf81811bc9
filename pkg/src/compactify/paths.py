"""Simple 2-D lattice paths, their pairing reduction, and the compactification degree.

A path is a nonempty string over the step alphabet ``URDL`` (up, right,
down, left).  Reduction normalizes the path to start horizontally and end
vertically, collapses each maximal horizontal-run/vertical-run pair into one
diagonal step, and rotates the diagonal word back onto the axes.
"""

from __future__ import annotations

import itertools
import random
import re
from typing import Iterator, NamedTuple

ALPHABET = "URDL"

#: Largest length accepted by exhaustive enumeration.
ENUMERATION_BOUND = 12

# One quarter turn clockwise: U->R->D->L->U.
_CLOCKWISE = str.maketrans("URDL", "RDLU")
_ROTATE_STEP = {"U": "R", "R": "D", "D": "L", "L": "U"}

# A maximal horizontal run followed by a maximal vertical run; only the two
# leading steps decide the diagonal.
_PAIR_RE = re.compile(r"([RL])[RL]*([UD])[UD]*")

# (first horizontal, first vertical) -> diagonal, already rotated 45 degrees
# clockwise onto the axes: NE->R, SE->D, SW->L, NW->U.
_PAIR_STEP = {("R", "U"): "R", ("R", "D"): "D", ("L", "D"): "L", ("L", "U"): "U"}


def check_path(p: str) -> str:
    """Validate a path string, reporting the first offending position."""
    if not p:
        raise ValueError("empty path")
    for pos, ch in enumerate(p):
        if ch not in ALPHABET:
            raise ValueError(f"invalid step {ch!r} at position {pos}")
    return p


class NormalizedPath(NamedTuple):
    path: str
    rotated_whole: bool
    rotated_last: bool


def normalize(p: str) -> NormalizedPath:
    """Rotate the whole path and/or its last step a quarter turn clockwise so
    that the result starts horizontally and ends vertically."""
    check_path(p)
    if len(p) < 2:
        raise ValueError("normalization needs at least two steps")
    rotated_whole = p[0] in "UD"
    if rotated_whole:
        p = p.translate(_CLOCKWISE)
    rotated_last = p[-1] in "RL"
    if rotated_last:
        p = p[:-1] + _ROTATE_STEP[p[-1]]
    return NormalizedPath(p, rotated_whole, rotated_last)


def reduce_path(p: str) -> str:
    """One reduction step: normalize, collapse each horizontal/vertical run
    pair to a single step, keyed by the first step of either run."""
    norm = normalize(p).path
    return "".join(_PAIR_STEP[hv] for hv in _PAIR_RE.findall(norm))


def reduction_trace(p: str) -> list[str]:
    """The sequence p, reduce(p), reduce^2(p), ... down to a single step."""
    check_path(p)
    trace = [p]
    while len(trace[-1]) > 1:
        trace.append(reduce_path(trace[-1]))
    return trace


def cdeg(p: str) -> int:
    """Compactification degree: how many reductions reach a single step."""
    return len(reduction_trace(p)) - 1


def fringe_size(p: str, r: int) -> int:
    """Length of the r-th reduction of p, or 0 when p cannot be reduced r times."""
    check_path(p)
    if r < 0:
        raise ValueError("fringe index must be nonnegative")
    current = p
    for _ in range(r):
        if len(current) < 2:
            return 0
        current = reduce_path(current)
    return len(current)


def fringe_sizes(p: str) -> list[int]:
    """Lengths along the whole reduction trace (index r holds fringe r)."""
    return [len(q) for q in reduction_trace(p)]


def total_fringe_size(p: str) -> int:
    """Sum of the path's length over all its reductions."""
    return sum(len(q) for q in reduction_trace(p))


def enumerate_paths(n: int) -> Iterator[str]:
    """All 4**n paths of length n, lexicographic in U < R < D < L order."""
    if not 1 <= n <= ENUMERATION_BOUND:
        raise ValueError(f"enumeration length {n} outside [1, {ENUMERATION_BOUND}]")
    return ("".join(steps) for steps in itertools.product(ALPHABET, repeat=n))


def random_path(n: int, seed: int | random.Random) -> str:
    """Uniformly random path of length n (i.i.d. uniform steps)."""
    if n < 1:
        raise ValueError("length must be positive")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return "".join(rng.choices(ALPHABET, k=n))


def rotate_path(p: str, quarter_turns: int = 1) -> str:
    """Rotate every step clockwise by the given number of quarter turns."""
    check_path(p)
    shift = quarter_turns % 4
    if shift == 0:
        return p
    return p.translate(str.maketrans(ALPHABET, ALPHABET[shift:] + ALPHABET[:shift]))
