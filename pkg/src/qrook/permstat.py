"""Multiset permutations, their classical statistics, and the placement
statistics they induce.

Words are sequences over the alphabet {1..t} with a multiplicity vector
v; when v = (1,...,1) a word is a permutation of S_n.  Classical
statistics: descents/major index, excedences (positions above the
sorted rearrangement), and Denert's statistic on permutations.

A word lifts to many full rook placements (one per ordering of equal
letters within their column block); two canonical lifts matter here:

* the *standard* lift minimizes the crossing statistic ``mat`` within
  every block: on-board rows take the rightmost block columns with
  columns decreasing as rows increase, off-board rows take the leftmost
  columns with columns increasing;
* the *regular* lift minimizes the circle statistic ``xi``: on-board
  rows take the leftmost columns and off-board rows the remaining ones,
  in both cases with columns decreasing as rows increase.

On triangular boards the descent graph of a permutation (rooks read off
the cycle factorization cut at successive minima) turns descent counts
into hit counts, which induces the two eight-member families of
descent-paired statistics, and the excedence-paired statistics built
from block boards.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .boards import StepSpec, g_spec, triangular_board
from .placements import Placement, _mat_raw, _xi_raw


@dataclass(frozen=True)
class Word:
    """A multiset permutation with its multiplicity vector."""

    letters: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        v = tuple(int(x) for x in self.v)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "v", v)
        if any(x < 1 or x > len(v) for x in letters):
            raise ValueError("letters must lie in 1..t")
        counts = Counter(letters)
        if any(counts.get(i + 1, 0) != m for i, m in enumerate(v)):
            raise ValueError("letter multiset does not match the multiplicity vector")

    @staticmethod
    def of(letters: Sequence[int], v: Sequence[int] | None = None) -> "Word":
        letters = tuple(int(x) for x in letters)
        if v is None:
            top = max(letters) if letters else 0
            counts = Counter(letters)
            v = tuple(counts.get(i, 0) for i in range(1, top + 1))
        return Word(letters, tuple(v))

    @property
    def n(self) -> int:
        return len(self.letters)

    def sorted_word(self) -> tuple[int, ...]:
        """The nondecreasing rearrangement (the unique descent-free word)."""
        return tuple(sorted(self.letters))

    def is_permutation(self) -> bool:
        return all(m == 1 for m in self.v)


def _letters(w) -> tuple[int, ...]:
    if type(w) is tuple:
        return w
    if isinstance(w, Word):
        return w.letters
    return tuple(int(x) for x in w)


def words_over(v: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All words with multiplicity vector v, in lexicographic order."""
    v = [int(x) for x in v]
    n = sum(v)
    word: list[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for a in range(1, len(v) + 1):
            if v[a - 1]:
                v[a - 1] -= 1
                word.append(a)
                yield from rec()
                word.pop()
                v[a - 1] += 1

    yield from rec()


def permutations_of(n: int) -> Iterator[tuple[int, ...]]:
    import itertools

    return itertools.permutations(range(1, n + 1))


# ---------------------------------------------------------------------------
# Classical statistics
# ---------------------------------------------------------------------------


def des(w) -> int:
    """Number of positions i with w_i > w_{i+1}."""
    s = _letters(w)
    return sum(1 for a, b in zip(s, s[1:]) if a > b)


def maj(w) -> int:
    """Sum of the descent positions (1-based)."""
    s = _letters(w)
    return sum(i for i, (a, b) in enumerate(zip(s, s[1:]), start=1) if a > b)


def exc(w) -> int:
    """Positions strictly above the sorted rearrangement."""
    s = _letters(w)
    return sum(1 for a, f in zip(s, sorted(s)) if a > f)


def den(perm) -> int:
    """Denert's statistic on a permutation."""
    s = _letters(perm)
    n = len(s)
    if sorted(s) != list(range(1, n + 1)):
        raise ValueError("Denert's statistic needs a permutation")
    total = 0
    for i in range(1, n + 1):
        si = s[i - 1]
        for j in range(i + 1, n + 1):
            sj = s[j - 1]
            if si <= j < sj:
                total += 1
            elif si > sj > j:
                total += 1
            elif j >= si > sj:
                total += 1
    return total


# ---------------------------------------------------------------------------
# Graphs of words
# ---------------------------------------------------------------------------


def graph(perm) -> Placement:
    """Rook at (i, sigma_i) for each position i."""
    return Placement.from_permutation(_letters(perm))


def word_of_placement(placement: Placement, widths: Sequence[int]) -> tuple[int, ...]:
    """Collapse a full placement to a word: the letter at position i is the
    index of the column block containing the rook of row i."""
    widths = tuple(int(d) for d in widths)
    n = sum(widths)
    sigma = placement.sigma(n)
    offsets = []
    acc = 0
    for d in widths:
        acc += d
        offsets.append(acc)
    return tuple(bisect_right(offsets, col - 1) + 1 for col in sigma)


def _block_rows(letters: tuple[int, ...], t: int) -> list[list[int]]:
    rows: list[list[int]] = [[] for _ in range(t)]
    for i, a in enumerate(letters, start=1):
        rows[a - 1].append(i)
    return rows


@lru_cache(maxsize=None)
def _spec_context(spec: StepSpec) -> tuple:
    """(widths, block heights, column heights, area, t) — hoisted out of the
    per-word statistic loops."""
    heights: list[int] = []
    for H, d in zip(spec.block_heights, spec.widths):
        heights.extend([H] * d)
    return spec.widths, spec.block_heights, tuple(heights), spec.area, spec.t


def _standard_sigma(letters: tuple[int, ...], spec: StepSpec) -> tuple[int, ...]:
    # Per block: off-board rows (below the block height) take the leftmost
    # columns, ascending; on-board rows take the rightmost, descending.
    widths, block_heights, _, _, t = _spec_context(spec)
    sigma = [0] * len(letters)
    lo = 1
    for (rows, H, d) in zip(_block_rows(letters, t), block_heights, widths):
        if len(rows) != d:
            raise ValueError("word multiset does not match the block widths")
        hi = lo + d - 1
        split = bisect_right(rows, H)
        for idx, row in enumerate(rows[:split]):
            sigma[row - 1] = hi - idx
        for idx, row in enumerate(rows[split:]):
            sigma[row - 1] = lo + idx
        lo = hi + 1
    return tuple(sigma)


def _regular_sigma(letters: tuple[int, ...], spec: StepSpec) -> tuple[int, ...]:
    # Per block: on-board rows take the leftmost columns, off-board rows the
    # remaining ones; in both groups columns decrease as rows increase.
    widths, block_heights, _, _, t = _spec_context(spec)
    sigma = [0] * len(letters)
    lo = 1
    for (rows, H, d) in zip(_block_rows(letters, t), block_heights, widths):
        if len(rows) != d:
            raise ValueError("word multiset does not match the block widths")
        hi = lo + d - 1
        split = bisect_right(rows, H)
        for idx, row in enumerate(rows[:split]):
            sigma[row - 1] = lo + split - 1 - idx
        for idx, row in enumerate(rows[split:]):
            sigma[row - 1] = hi - idx
        lo = hi + 1
    return tuple(sigma)


def b_standard_graph(w, spec: StepSpec) -> Placement:
    """The unique lift of the word whose crossing statistic is minimal on
    every block."""
    return Placement.from_permutation(_standard_sigma(_letters(w), spec))


def b_regular_graph(w, spec: StepSpec) -> Placement:
    """The unique lift of the word whose circle statistic is minimal on
    every block."""
    return Placement.from_permutation(_regular_sigma(_letters(w), spec))


def is_block_standard(placement: Placement, spec: StepSpec) -> bool:
    sigma = placement.sigma(spec.n)
    letters = word_of_placement(placement, spec.widths)
    return _standard_sigma(letters, spec) == sigma


def is_block_regular(placement: Placement, spec: StepSpec) -> bool:
    sigma = placement.sigma(spec.n)
    letters = word_of_placement(placement, spec.widths)
    return _regular_sigma(letters, spec) == sigma


def mat_word(w, spec: StepSpec) -> int:
    """Crossing statistic of the standard lift of the word."""
    letters = _letters(w)
    _, _, heights, area, _ = _spec_context(spec)
    return _mat_raw(_standard_sigma(letters, spec), heights, area)


def xi_word(w, spec: StepSpec) -> int:
    """Circle statistic of the regular lift of the word."""
    letters = _letters(w)
    _, _, heights, _, _ = _spec_context(spec)
    return _xi_raw(_regular_sigma(letters, spec), heights)


def lifts(w, widths: Sequence[int]) -> Iterator[Placement]:
    """All full placements that collapse to the word (block-wise column
    assignments in every order)."""
    import itertools

    letters = _letters(w)
    widths = tuple(int(d) for d in widths)
    rows_by_block = _block_rows(letters, len(widths))
    col_ranges = []
    lo = 1
    for d in widths:
        col_ranges.append(range(lo, lo + d))
        lo += d
    for assignment in itertools.product(
        *(itertools.permutations(cols) for cols in col_ranges)
    ):
        sigma = [0] * len(letters)
        for rows, cols in zip(rows_by_block, assignment):
            for row, col in zip(rows, cols):
                sigma[row - 1] = col
        yield Placement.from_permutation(sigma)


# ---------------------------------------------------------------------------
# Descent graphs and the descent-paired families
# ---------------------------------------------------------------------------


def descent_graph(perm) -> Placement:
    """Rook placement read off the cycle factorization cut at successive
    minima: each cycle is a maximal prefix segment ending at the smallest
    value not yet used, and a rook sits at (i, j) whenever i immediately
    follows j cyclically inside its cycle.  The number of rooks strictly
    above the diagonal equals the number of descents."""
    s = _letters(perm)
    n = len(s)
    if sorted(s) != list(range(1, n + 1)):
        raise ValueError("descent graph needs a permutation")
    cells: list[tuple[int, int]] = []
    pos = 0
    used: set[int] = set()
    while pos < n:
        target = min(set(range(1, n + 1)) - used)
        end = pos
        while s[end] != target:
            end += 1
        cycle = s[pos : end + 1]
        used.update(cycle)
        for j, i in zip(cycle, cycle[1:]):
            cells.append((i, j))
        cells.append((cycle[0], cycle[-1]))
        pos = end + 1
    return Placement.from_cells(cells)


def reverse_perm(perm) -> tuple[int, ...]:
    return tuple(reversed(_letters(perm)))


FAMILIES = ("mat", "xi")


def _family_kernel(family: str) -> Callable[[tuple[int, ...], tuple[int, ...], int], int]:
    if family == "mat":
        return _mat_raw
    if family == "xi":
        return lambda sigma, heights, area: _xi_raw(sigma, heights)
    raise ValueError(f"unknown statistic family {family!r}")


def stat_family(perm, family: str = "mat", variant: int = 1, *, reflected_shift: bool = True) -> int:
    """The eight descent-paired statistics induced by a placement statistic
    on the triangular board.

    Variants: 1 = statistic of the descent graph plus the affine shift
    n*des - C(n,2); 2 = the same for the cross-diagonal reflection of
    the descent graph; 3 = statistic of the descent graph of the
    reversed permutation, no shift; 4 = its reflection; 5..8 = the
    complements n*des - (variants 1..4).

    ``reflected_shift`` selects whether the reflected variants mirror
    the shift convention of their unreflected siblings (default) or
    swap it.
    """
    s = _letters(perm)
    n = len(s)
    board = triangular_board(n)
    heights, area = board.heights, board.area
    kernel = _family_kernel(family)
    k = des(s)
    shift = n * k - n * (n - 1) // 2

    def value(v: int) -> int:
        if v == 1:
            sigma = descent_graph(s).sigma(n)
            return shift + kernel(sigma, heights, area)
        if v == 2:
            sigma = descent_graph(s).reflect(n).sigma(n)
            base = kernel(sigma, heights, area)
            return shift + base if reflected_shift else base
        if v == 3:
            sigma = descent_graph(reverse_perm(s)).sigma(n)
            return kernel(sigma, heights, area)
        if v == 4:
            sigma = descent_graph(reverse_perm(s)).reflect(n).sigma(n)
            base = kernel(sigma, heights, area)
            return base if reflected_shift else shift + base
        raise ValueError("variant must lie in 1..8")

    if 1 <= variant <= 4:
        return value(variant)
    if 5 <= variant <= 8:
        # the fiber of des = k is symmetric about n*k/2, so complementing
        # against n*des keeps the joint distribution
        return n * k - value(variant - 4)
    raise ValueError("variant must lie in 1..8")


# ---------------------------------------------------------------------------
# Excedence-paired statistics on block boards
# ---------------------------------------------------------------------------


def _g_context(v: tuple[int, ...]) -> tuple[StepSpec, tuple[int, ...], int, int]:
    spec = g_spec(v)
    _, _, heights, area, _ = _spec_context(spec)
    return spec, heights, area, sum(v)


def stat5(w, v: Sequence[int]) -> int:
    """n*exc - Area + crossing statistic of the standard lift on the block board."""
    letters = _letters(w)
    v = tuple(int(x) for x in v)
    spec, heights, area, n = _g_context(v)
    k = exc(letters)
    return n * k - area + _mat_raw(_standard_sigma(letters, spec), heights, area)


def stat6(w, v: Sequence[int]) -> int:
    """n*exc - Area + circle statistic of the regular lift on the block board."""
    letters = _letters(w)
    v = tuple(int(x) for x in v)
    spec, heights, area, n = _g_context(v)
    k = exc(letters)
    return n * k - area + _xi_raw(_regular_sigma(letters, spec), heights)


def stat7(w, v: Sequence[int]) -> int:
    """Like stat5, but routed through the cross-diagonal reflection: the
    standard lift of the word is reflected, and the crossing statistic
    is evaluated against the reflected board (the block board of
    reversed(v)).  Reflection preserves the excedence count, so pairing
    with exc keeps the joint distribution."""
    letters = _letters(w)
    v = tuple(int(x) for x in v)
    rev = tuple(reversed(v))
    spec, _, area, n = _g_context(v)
    _, _, rev_heights, rev_area, _ = _spec_context(g_spec(rev))
    sigma = _standard_sigma(letters, spec)
    reflected = Placement.from_permutation(sigma).reflect(n).sigma(n)
    return n * exc(letters) - rev_area + _mat_raw(reflected, rev_heights, rev_area)


# ---------------------------------------------------------------------------
# Closed-form excedence statistics
# ---------------------------------------------------------------------------


def theorem5_stat(perm) -> int:
    """Closed-form partner of exc on permutations: equidistributed jointly
    with (des, maj)."""
    s = _letters(perm)
    n = len(s)
    if sorted(s) != list(range(1, n + 1)):
        raise ValueError("needs a permutation")
    total = 0
    for i in range(1, n + 1):
        si = s[i - 1]
        total += si - i if si > i else 1 - si
    for i in range(1, n + 1):
        si = s[i - 1]
        for j in range(i + 1, n + 1):
            sj = s[j - 1]
            if si > sj > j:
                total += 1
            if si <= j and si < sj:
                total += 1
    return total


def theorem5_statx(w, v: Sequence[int]) -> int:
    """Closed-form partner of exc on words over v."""
    s = _letters(w)
    v = tuple(int(x) for x in v)
    n = len(s)
    if sum(v) != n:
        raise ValueError("multiplicity vector does not match the word length")
    f = tuple(sorted(s))
    prefix = [0]
    for m in v:
        prefix.append(prefix[-1] + m)
    total = n * (n - 1) // 2
    for i in range(1, n + 1):
        si = s[i - 1]
        if si <= f[i - 1]:
            total += sum(1 for j in range(i + 1, n + 1) if si > s[j - 1])
            bound = min(i - 1, prefix[si - 1])
            total += sum(1 for m in range(1, bound + 1) if s[m - 1] < si)
            total -= n - i + prefix[si - 1]
        else:
            total += sum(1 for m in range(1, i) if s[m - 1] < si)
            total -= i - 1
    return total


# ---------------------------------------------------------------------------
# Distributions
# ---------------------------------------------------------------------------


def joint_distribution(words: Iterable, stat_a: Callable, stat_b: Callable) -> Counter:
    """Multiset of (stat_a(w), stat_b(w)) pairs."""
    return Counter((stat_a(w), stat_b(w)) for w in words)


def generating_poly(words: Iterable, stat: Callable):
    """Sum of q^stat(w) as a LaurentPoly."""
    from .qpoly import LaurentPoly

    counts: Counter = Counter(stat(w) for w in words)
    return LaurentPoly(dict(counts))


def parse_word(text: str) -> tuple[int, ...]:
    """Word literal: plain digits for alphabets up to 9, else comma-separated."""
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    if not text.isdigit():
        raise ValueError(f"malformed word literal {text!r}")
    return tuple(int(ch) for ch in text)
