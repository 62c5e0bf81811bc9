"""Exhaustive enumeration oracles.

These sweeps recompute, by direct counting over every tree or path, the
quantities that the explicit formulas in :mod:`compactify.exact` claim in
closed form.  They are deliberately dumb: one pass over all objects of a
given size, delegating per-object work to the same public operations the
library exposes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import paths, trees

#: Default sweep caps; chosen to keep single sweeps within desk-scale minutes.
TREE_SWEEP_BOUND = 12
PATH_SWEEP_BOUND = 10


@dataclass(frozen=True)
class TreeSweep:
    """Aggregates over all binary trees with n internal nodes."""

    n: int
    count: int
    branch_sums: tuple[int, ...]  # index r: total r-branches over all trees
    branch_square_sums: tuple[int, ...]  # index r: sum of squared counts
    total_branch_sum: int
    register_counts: tuple[int, ...]  # index r: trees with register == r

    def mean_r_branches(self, r: int) -> Fraction:
        value = self.branch_sums[r] if r < len(self.branch_sums) else 0
        return Fraction(value, self.count)

    def var_r_branches(self, r: int) -> Fraction:
        total = self.branch_sums[r] if r < len(self.branch_sums) else 0
        square = self.branch_square_sums[r] if r < len(self.branch_square_sums) else 0
        mean = Fraction(total, self.count)
        return Fraction(square, self.count) - mean * mean

    def mean_total_branches(self) -> Fraction:
        return Fraction(self.total_branch_sum, self.count)


def sweep_trees(n: int, bound: int = TREE_SWEEP_BOUND) -> TreeSweep:
    """Enumerate all trees of size n and aggregate branch statistics."""
    if n > bound:
        raise ValueError(f"tree sweep size {n} exceeds bound {bound}")
    max_r = n.bit_length() + 1
    branch_sums = [0] * (max_r + 1)
    branch_squares = [0] * (max_r + 1)
    register_counts = [0] * (max_r + 1)
    count = 0
    total_branches = 0
    for t in trees.enumerate_trees(n):
        count += 1
        profile = trees.branch_profile(t)
        register_counts[len(profile.counts) - 1] += 1
        for r, c in enumerate(profile.counts):
            branch_sums[r] += c
            branch_squares[r] += c * c
        total_branches += profile.total()
    return TreeSweep(
        n=n,
        count=count,
        branch_sums=tuple(branch_sums),
        branch_square_sums=tuple(branch_squares),
        total_branch_sum=total_branches,
        register_counts=tuple(register_counts),
    )


@dataclass(frozen=True)
class PathSweep:
    """Aggregates over all 4**n lattice paths of length n."""

    n: int
    count: int
    cdeg_counts: tuple[int, ...]  # index r: paths with degree exactly r
    fringe_sums: tuple[int, ...]  # index r: total r-th fringe size
    fringe_square_sums: tuple[int, ...]
    total_fringe_sum: int

    def mean_cdeg(self) -> Fraction:
        total = sum(r * c for r, c in enumerate(self.cdeg_counts))
        return Fraction(total, self.count)

    def var_cdeg(self) -> Fraction:
        mean = self.mean_cdeg()
        second = Fraction(sum(r * r * c for r, c in enumerate(self.cdeg_counts)), self.count)
        return second - mean * mean

    def mean_fringe(self, r: int) -> Fraction:
        value = self.fringe_sums[r] if r < len(self.fringe_sums) else 0
        return Fraction(value, self.count)

    def var_fringe(self, r: int) -> Fraction:
        total = self.fringe_sums[r] if r < len(self.fringe_sums) else 0
        square = self.fringe_square_sums[r] if r < len(self.fringe_square_sums) else 0
        mean = Fraction(total, self.count)
        return Fraction(square, self.count) - mean * mean

    def mean_total_fringe(self) -> Fraction:
        return Fraction(self.total_fringe_sum, self.count)


def sweep_paths(n: int, bound: int = PATH_SWEEP_BOUND) -> PathSweep:
    """Enumerate all paths of length n and aggregate reduction statistics."""
    if n > bound:
        raise ValueError(f"path sweep length {n} exceeds bound {bound}")
    max_r = n.bit_length() + 1
    cdeg_counts = [0] * (max_r + 1)
    fringe_sums = [0] * (max_r + 1)
    fringe_squares = [0] * (max_r + 1)
    count = 0
    total_fringe = 0
    for p in paths.enumerate_paths(n):
        count += 1
        sizes = paths.fringe_sizes(p)
        cdeg_counts[len(sizes) - 1] += 1
        for r, s in enumerate(sizes):
            fringe_sums[r] += s
            fringe_squares[r] += s * s
        total_fringe += sum(sizes)
    return PathSweep(
        n=n,
        count=count,
        cdeg_counts=tuple(cdeg_counts),
        fringe_sums=tuple(fringe_sums),
        fringe_square_sums=tuple(fringe_squares),
        total_fringe_sum=total_fringe,
    )


def register_survives_reduction(n: int) -> bool:
    """Check, over every tree of size n, that one reduction lowers the
    register by exactly one and that the register counts the reductions
    down to a single leaf."""
    for t in trees.enumerate_trees(n):
        reg = trees.register(t)
        trace = trees.reduction_trace(t)
        if len(trace) - 1 != reg:
            return False
        for step, shape in enumerate(trace):
            if trees.register(shape) != reg - step:
                return False
    return True


def branches_become_leaves(n: int) -> bool:
    """Check, over every tree of size n, that the r-branch count equals the
    leaf count after r reductions."""
    for t in trees.enumerate_trees(n):
        profile = trees.branch_profile(t)
        trace = trees.reduction_trace(t)
        for r, expected in enumerate(profile.counts):
            if trees.leaves(trace[r]) != expected:
                return False
    return True
