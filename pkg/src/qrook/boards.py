"""Ferrers boards inside an n x n grid and their step decompositions.

A board is stored as its weakly increasing column heights c_1 <= ... <= c_n.
Cells use matrix coordinates: row 1 is the top row, and column j of the
board occupies rows 1..c_j (boards are justified to the top-right).
A board is *admissible* when c_n <= n, i.e. it fits inside the grid;
taller boards can be constructed but are accepted only by the step-board
formula routes that are defined for them.

Boards and step specs are immutable; all operations are pure functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class FerrersBoard:
    heights: tuple[int, ...]

    def __post_init__(self):
        hs = tuple(int(h) for h in self.heights)
        object.__setattr__(self, "heights", hs)
        if any(h < 0 for h in hs):
            raise ValueError("column heights must be nonnegative")
        if any(a > b for a, b in zip(hs, hs[1:])):
            raise ValueError("not a Ferrers board: heights must weakly increase")

    @property
    def n(self) -> int:
        """Grid side = number of columns."""
        return len(self.heights)

    @property
    def area(self) -> int:
        return sum(self.heights)

    @property
    def admissible(self) -> bool:
        return not self.heights or self.heights[-1] <= self.n

    def contains(self, row: int, col: int) -> bool:
        """Cell membership: (row, col) is on the board iff row <= c_col."""
        return 1 <= col <= self.n and 1 <= row <= self.heights[col - 1]

    def cells(self) -> Iterator[tuple[int, int]]:
        """All board cells in row-major order (admissible boards only)."""
        for row in range(1, self.n + 1):
            for col in range(1, self.n + 1):
                if row <= self.heights[col - 1]:
                    yield (row, col)

    def spec_string(self) -> str:
        return "heights:" + ",".join(str(h) for h in self.heights)

    def __str__(self):
        return self.spec_string()


@dataclass(frozen=True)
class StepSpec:
    """A staircase presentation of a Ferrers board: blocks (h_i, d_i).

    The first d_1 columns have height h_1, the next d_2 columns have
    height h_1 + h_2, and so on; d_i >= 1 and h_i >= 0.  Several specs
    may present the same board (a block may repeat the previous height
    via h_i = 0), and the block structure itself is meaningful: words
    and their canonical rook-placement lifts are defined per block.
    """

    steps: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = tuple((int(h), int(d)) for h, d in self.steps)
        object.__setattr__(self, "steps", norm)
        if any(d < 1 for _, d in norm):
            raise ValueError("block widths d_i must be positive")
        if any(h < 0 for h, _ in norm):
            raise ValueError("block rises h_i must be nonnegative")

    @property
    def t(self) -> int:
        return len(self.steps)

    @property
    def rises(self) -> tuple[int, ...]:
        return tuple(h for h, _ in self.steps)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.steps)

    @property
    def n(self) -> int:
        return sum(self.widths)

    @property
    def block_heights(self) -> tuple[int, ...]:
        """Partial sums H_i = h_1 + ... + h_i."""
        return tuple(itertools.accumulate(self.rises))

    @property
    def col_offsets(self) -> tuple[int, ...]:
        """Partial sums D_i = d_1 + ... + d_i."""
        return tuple(itertools.accumulate(self.widths))

    @property
    def area(self) -> int:
        return sum(d * H for d, H in zip(self.widths, self.block_heights))

    @property
    def admissible(self) -> bool:
        return self.t == 0 or self.block_heights[-1] <= self.n

    def condition_overlap(self) -> bool:
        """d_{i-1} + d_i >= h_i for all i, with d_0 = 0."""
        prev = 0
        for h, d in self.steps:
            if prev + d < h:
                return False
            prev = d
        return True

    def condition_dominance(self) -> bool:
        """D_i >= H_i for all i."""
        return all(D >= H for D, H in zip(self.col_offsets, self.block_heights))

    def expand(self) -> FerrersBoard:
        heights: list[int] = []
        for H, d in zip(self.block_heights, self.widths):
            heights.extend([H] * d)
        return FerrersBoard(tuple(heights))

    def truncated(self) -> "StepSpec":
        """Drop the last block."""
        return StepSpec(self.steps[:-1])

    def spec_string(self) -> str:
        return "steps:" + ",".join(f"{h}x{d}" for h, d in self.steps)

    def __str__(self):
        return self.spec_string()


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def board_from_heights(heights: Sequence[int]) -> FerrersBoard:
    """Board with the given weakly increasing column heights."""
    return FerrersBoard(tuple(heights))


def triangular_board(n: int) -> FerrersBoard:
    """Heights (0, 1, ..., n-1): the cells (i, j) with 1 <= i < j <= n."""
    if n < 1:
        raise ValueError("triangular board needs n >= 1")
    return FerrersBoard(tuple(range(n)))


def staircase_board(n: int) -> FerrersBoard:
    """Heights (1, 2, ..., n): the upper-triangular cells including the diagonal."""
    if n < 1:
        raise ValueError("staircase board needs n >= 1")
    return FerrersBoard(tuple(range(1, n + 1)))


def g_board(v: Sequence[int]) -> FerrersBoard:
    """Block board for a multiplicity vector v: block i has width v_i and
    height v_1 + ... + v_{i-1} (the first block is empty)."""
    parts = [int(x) for x in v]
    if any(x < 0 for x in parts) or sum(parts) < 1:
        raise ValueError("multiplicity vector must be nonnegative with positive sum")
    heights: list[int] = []
    offset = 0
    for width in parts:
        heights.extend([offset] * width)
        offset += width
    return FerrersBoard(tuple(heights))


def g_spec(v: Sequence[int]) -> StepSpec:
    """Step presentation of g_board(v) with blocks exactly the v_i (all v_i >= 1)."""
    parts = tuple(int(x) for x in v)
    if any(x < 1 for x in parts):
        raise ValueError("block multiplicities must be positive")
    rises = (0,) + parts[:-1]
    return StepSpec(tuple(zip(rises, parts)))


# ---------------------------------------------------------------------------
# Transformations
# ---------------------------------------------------------------------------


def complement(board: FerrersBoard) -> FerrersBoard:
    """Complementary board with heights (n-c_n, ..., n-c_1); an involution."""
    if not board.admissible:
        raise ValueError("complement is defined for admissible boards only")
    n = board.n
    return FerrersBoard(tuple(n - c for c in reversed(board.heights)))


def flip(board: FerrersBoard) -> FerrersBoard:
    """Reflect the cell set about the cross diagonal: (i, j) -> (n-j+1, n-i+1).

    Preserves the area and, more importantly, all rook numbers.
    """
    if not board.admissible:
        raise ValueError("flip is defined for admissible boards only")
    n = board.n
    # Column j' of the flipped board collects the cells of row n-j'+1.
    heights = tuple(sum(1 for c in board.heights if c >= n - j + 1) for j in range(1, n + 1))
    return FerrersBoard(heights)


def step_decomposition(board: FerrersBoard) -> StepSpec:
    """Maximal runs of equal column heights as (rise, width) blocks."""
    steps: list[tuple[int, int]] = []
    prev_height = 0
    for height, run in itertools.groupby(board.heights):
        steps.append((height - prev_height, len(list(run))))
        prev_height = height
    return StepSpec(tuple(steps))


def sections(board: FerrersBoard) -> list[tuple[int, int]]:
    """Maximal intervals of consecutive columns with equal height, as
    1-based inclusive (first, last) pairs.  These generate all sections:
    a placement canonical on each maximal run is canonical on every
    sub-window of it."""
    out: list[tuple[int, int]] = []
    start = 1
    for _, run in itertools.groupby(board.heights):
        width = len(list(run))
        out.append((start, start + width - 1))
        start += width
    return out


# ---------------------------------------------------------------------------
# Families (for the verification suites)
# ---------------------------------------------------------------------------


def all_ferrers_boards(n: int) -> Iterator[FerrersBoard]:
    """All admissible boards with grid side n, i.e. 0 <= c_1 <= ... <= c_n <= n."""
    for heights in itertools.combinations_with_replacement(range(n + 1), n):
        yield FerrersBoard(heights)


def all_step_specs(n: int, max_rise: int = 3, admissible_only: bool = False) -> Iterator[StepSpec]:
    """All step specs with total width n and every rise h_i <= max_rise."""
    for t in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), t - 1):
            bounds = (0,) + cuts + (n,)
            widths = tuple(b - a for a, b in zip(bounds, bounds[1:]))
            for rises in itertools.product(range(max_rise + 1), repeat=t):
                if admissible_only and sum(rises) > n:
                    continue
                yield StepSpec(tuple(zip(rises, widths)))


# ---------------------------------------------------------------------------
# CLI board grammar
# ---------------------------------------------------------------------------


def parse_board_spec(text: str) -> tuple[FerrersBoard, StepSpec | None]:
    """Parse "heights:0,1,2" | "steps:1x1,1x1" | "tri:7" | "stair:4" | "gv:2,3,2".

    Returns the board together with the explicit StepSpec when the
    input carries block structure (steps/gv), else None.
    """
    kind, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"unknown board spec {text!r}")
    try:
        if kind == "heights":
            return board_from_heights([int(x) for x in rest.split(",")]), None
        if kind == "steps":
            pairs = []
            for item in rest.split(","):
                h, _, d = item.partition("x")
                pairs.append((int(h), int(d)))
            spec = StepSpec(tuple(pairs))
            return spec.expand(), spec
        if kind == "tri":
            return triangular_board(int(rest)), None
        if kind == "stair":
            return staircase_board(int(rest)), None
        if kind == "gv":
            v = [int(x) for x in rest.split(",")]
            return g_board(v), g_spec(v) if all(x >= 1 for x in v) else None
    except ValueError as exc:
        raise ValueError(f"bad board spec {text!r}: {exc}") from exc
    raise ValueError(f"unknown board spec {text!r}")
