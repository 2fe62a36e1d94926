"""Littlewood-Richardson tableaux.

The brute-force enumerator here is the oracle every classifier is checked
against.  Alongside it live the string-sequence characterisation of LR
tableaux, the stretch step, and the column-by-column generator built on it.

Fillings are handled internally as ``{(row, col): label}`` dicts.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import SizeMismatch
from .partition_core import Partition, conjugate, dominance_interval, dominated_by, union
from .skew_shapes import Cell, SkewShape, basic_form, from_cells, make_skew, profiles, residual_after

Filling = dict[Cell, int]


# -- tableau value type -------------------------------------------------------


@dataclass(frozen=True)
class LRTableau:
    """A filling of ``shape``; ``rows[i]`` lists row i+1 left to right."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_filling(cls, shape: SkewShape, filling: Mapping[Cell, int]) -> "LRTableau":
        rows = []
        for i in range(1, shape.num_rows + 1):
            first, last = shape.row_span(i)
            rows.append(tuple(filling[(i, j)] for j in range(first, last + 1)))
        return cls(shape, tuple(rows))

    @cached_property
    def filling(self) -> Filling:
        out: Filling = {}
        for i, row in enumerate(self.rows, start=1):
            first, _ = self.shape.row_span(i)
            for k, label in enumerate(row):
                out[(i, first + k)] = label
        return out

    def label(self, cell: Cell) -> int:
        return self.filling[cell]

    @cached_property
    def reading_word(self) -> tuple[int, ...]:
        return tuple(label for row in self.rows for label in reversed(row))

    @cached_property
    def content(self) -> Partition:
        return _content(self.reading_word)

    @property
    def conjugate_content(self) -> Partition:
        return conjugate(self.content)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(label for row in self.rows for label in row)

    def __str__(self) -> str:
        lines = []
        for i, row in enumerate(self.rows, start=1):
            first, _ = self.shape.row_span(i)
            lines.append(". " * (first - 1) + " ".join(map(str, row)))
        return "\n".join(lines)


def _content(labels: Iterable[int]) -> Partition:
    counts = Counter(labels)
    top = max(counts, default=0)
    return Partition(counts[v] for v in range(1, top + 1))


def is_lattice_word(word: Iterable[int]) -> bool:
    counts: Counter[int] = Counter()
    for letter in word:
        if letter < 1:
            return False
        if letter > 1 and counts[letter - 1] <= counts[letter]:
            return False
        counts[letter] += 1
    return True


def is_semistandard(filling: Mapping[Cell, int]) -> bool:
    for (r, c), label in filling.items():
        if label < 1:
            return False
        right = filling.get((r, c + 1))
        if right is not None and right < label:
            return False
        below = filling.get((r + 1, c))
        if below is not None and below <= label:
            return False
    return True


def reading_word(filling: Mapping[Cell, int]) -> list[int]:
    """Rows top to bottom, each read right to left."""
    return [filling[cell] for cell in sorted(filling, key=lambda rc: (rc[0], -rc[1]))]


def is_lr_filling(filling: Mapping[Cell, int]) -> bool:
    return is_semistandard(filling) and is_lattice_word(reading_word(filling))


# -- brute-force oracle ---------------------------------------------------------


def _search_plan(shape: SkewShape) -> list[tuple[Cell, int, int]]:
    """Cells in reading order with the plan indices of the cell above and to the right."""
    order = sorted(shape.cells, key=lambda rc: (rc[0], -rc[1]))
    index = {cell: k for k, cell in enumerate(order)}
    return [
        (cell, index.get((cell[0] - 1, cell[1]), -1), index.get((cell[0], cell[1] + 1), -1))
        for cell in order
    ]


def _lr_search(shape: SkewShape, content: Partition | None, on_leaf) -> None:
    """Depth-first search over LR fillings in reading order.

    Each cell is bounded below by the cell above (column strictness) and
    above by the cell to its right (row weakness).  The lattice condition is
    checked letter by letter, so any failing prefix is cut immediately.
    """
    plan = _search_plan(shape)
    total = len(plan)
    labels = [0] * total
    counts = [0] * (total + 2)
    limits = list(content) if content is not None else None

    def descend(k: int, top: int) -> None:
        if k == total:
            on_leaf(labels, counts, top)
            return
        _, above, right = plan[k]
        low = labels[above] + 1 if above >= 0 else 1
        high = labels[right] if right >= 0 else top + 1
        if limits is not None:
            high = min(high, len(limits))
        for v in range(low, high + 1):
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            if limits is not None and counts[v] >= limits[v - 1]:
                continue
            labels[k] = v
            counts[v] += 1
            descend(k + 1, v if v > top else top)
            counts[v] -= 1

    descend(0, 0)


def lr_content_counts(shape: SkewShape) -> Counter[Partition]:
    """Number of LR tableaux of ``shape`` for every content, from one search."""
    tally: Counter[tuple[int, ...]] = Counter()

    def record(labels, counts, top):
        tally[tuple(counts[1 : top + 1])] += 1

    _lr_search(shape, None, record)
    return Counter({Partition(k): v for k, v in tally.items()})


def enumerate_lr(shape: SkewShape, content: Iterable[int]) -> list[LRTableau]:
    """All LR tableaux of ``shape`` with the given content, row-major lexicographic."""
    target = Partition(content)
    if target.size != shape.size:
        raise SizeMismatch(f"content {target} has size {target.size}, shape has {shape.size}")
    plan = _search_plan(shape)
    found: list[LRTableau] = []

    def record(labels, counts, top):
        filling = {plan[k][0]: labels[k] for k in range(len(plan))}
        found.append(LRTableau.from_filling(shape, filling))

    _lr_search(shape, target, record)
    found.sort(key=LRTableau.sort_key)
    return found


def all_lr_tableaux(shape: SkewShape) -> list[LRTableau]:
    """Every LR tableau of ``shape`` regardless of content, row-major lexicographic."""
    plan = _search_plan(shape)
    found: list[LRTableau] = []

    def record(labels, counts, top):
        filling = {plan[k][0]: labels[k] for k in range(len(plan))}
        found.append(LRTableau.from_filling(shape, filling))

    _lr_search(shape, None, record)
    found.sort(key=LRTableau.sort_key)
    return found


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    outer, inner, content = Partition(lam), Partition(mu), Partition(nu)
    if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
        return 0
    if outer.size - inner.size != content.size:
        return 0
    count = 0

    def record(labels, counts, top):
        nonlocal count
        count += 1

    _lr_search(make_skew(outer, inner), content, record)
    return count


# -- expansions -------------------------------------------------------------------


@dataclass(frozen=True)
class SchurExpansion:
    """``terms`` maps each content nu to its coefficient; ``support`` holds the conjugates."""

    shape: SkewShape
    terms: dict[Partition, int]

    @cached_property
    def support(self) -> frozenset[Partition]:
        return frozenset(conjugate(nu) for nu in self.terms)

    def coefficient(self, nu: Iterable[int]) -> int:
        return self.terms.get(Partition(nu), 0)

    @property
    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)


def schur_expansion(shape: SkewShape) -> SchurExpansion:
    counts = lr_content_counts(basic_form(shape))
    terms = {nu: counts[nu] for nu in sorted(counts, reverse=True)}
    return SchurExpansion(shape, terms)


def support(shape: SkewShape) -> frozenset[Partition]:
    return schur_expansion(shape).support


@dataclass(frozen=True)
class IntervalReport:
    shape: SkewShape
    w: Partition
    n: Partition
    interval: tuple[Partition, ...]
    expansion: SchurExpansion
    missing: tuple[Partition, ...]

    @property
    def support(self) -> frozenset[Partition]:
        return self.expansion.support

    @property
    def is_multiplicity_free(self) -> bool:
        return self.expansion.is_multiplicity_free

    @property
    def is_full_interval(self) -> bool:
        return not self.missing


def interval_report(shape: SkewShape) -> IntervalReport:
    w, n = profiles(shape)
    interval = tuple(dominance_interval(w, n))
    expansion = schur_expansion(shape)
    missing = tuple(p for p in interval if p not in expansion.support)
    return IntervalReport(shape, w, n, interval, expansion, missing)


# -- extremal fillings and the sigma chain -----------------------------------------


def min_filling(shape: SkewShape) -> Filling:
    """Each column numbered 1, 2, ... from the top."""
    filling: Filling = {}
    for r, c in sorted(shape.cells):
        above = filling.get((r - 1, c))
        filling[(r, c)] = above + 1 if above is not None else 1
    return filling


def max_filling(shape: SkewShape) -> Filling:
    """Strip i of the V-sequence numbered 1, 2, ... from the top."""
    filling: Filling = {}
    longest = max(shape.row_lengths, default=0)
    for step in range(1, longest + 1):
        strip = sorted(
            (i + 1, l - step + 1)
            for i, l in enumerate(shape.outer)
            if l - shape.inner.part(i) >= step
        )
        for k, cell in enumerate(strip, start=1):
            filling[cell] = k
    return filling


def extremal_fillings(shape: SkewShape) -> tuple[LRTableau, LRTableau]:
    shape.require_basic()
    return (
        LRTableau.from_filling(shape, min_filling(shape)),
        LRTableau.from_filling(shape, max_filling(shape)),
    )


def sigma_chain(shape: SkewShape) -> list[Partition]:
    """``w``, then ``(n_1..n_i) ∪ cols(residual_i)`` for each V-strip, ending at ``n``.

    Consecutive repeats are collapsed, so a straight shape yields ``[w]``.
    """
    shape.require_basic()
    w, n = profiles(shape)
    chain = [w]
    for i in range(1, len(n)):
        rest, _ = profiles(residual_after(shape, i))
        chain.append(union(n[:i], rest))
    chain.append(n)
    out: list[Partition] = []
    for p in chain:
        if not out or out[-1] != p:
            out.append(p)
    return out


# -- complete sequences of strings -------------------------------------------------


@dataclass(frozen=True)
class StringSequence:
    strings: tuple[tuple[int, ...], ...]
    strips: tuple[frozenset[Cell], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.strings)


def _rightmost(residual: Mapping[Cell, int]) -> dict[int, Cell]:
    out: dict[int, Cell] = {}
    for r, c in residual:
        if r not in out or c > out[r][1]:
            out[r] = (r, c)
    return out


def _strings_of_length(residual: Mapping[Cell, int], length: int) -> Iterator[tuple[int, ...]]:
    """Row tuples whose rightmost boxes read 1..length downward, smallest rows first."""
    ends = _rightmost(residual)
    rows_by_label: dict[int, list[int]] = {}
    for r in sorted(ends):
        rows_by_label.setdefault(residual[ends[r]], []).append(r)

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        last = prefix[-1] if prefix else 0
        for r in rows_by_label.get(len(prefix) + 1, ()):
            if r > last:
                yield from extend(prefix + (r,))

    return extend(())


def _strip(residual: Mapping[Cell, int], string: tuple[int, ...]) -> frozenset[Cell]:
    ends = _rightmost(residual)
    return frozenset(ends[r] for r in string)


def iter_string_sequences(filling: Mapping[Cell, int]) -> Iterator[StringSequence]:
    """Every complete sequence of strings, the greedy smallest-rows one first.

    Each string has the length of the largest label left in the residual.
    """

    def walk(residual: dict[Cell, int], acc_strings, acc_strips) -> Iterator[StringSequence]:
        if not residual:
            yield StringSequence(tuple(acc_strings), tuple(acc_strips))
            return
        length = max(residual.values())
        for string in _strings_of_length(residual, length):
            strip = _strip(residual, string)
            rest = {cell: v for cell, v in residual.items() if cell not in strip}
            yield from walk(rest, acc_strings + [string], acc_strips + [strip])

    return walk(dict(filling), [], [])


def complete_string_sequence(tableau: LRTableau | Mapping[Cell, int]) -> StringSequence | None:
    """The canonical complete sequence of strings, or ``None`` if there is none."""
    filling = tableau.filling if isinstance(tableau, LRTableau) else tableau
    return next(iter_string_sequences(filling), None)


# -- the stretch step -----------------------------------------------------------------

CANONICAL = "canonical"
CANONICAL_ANY_SITE = "canonical-any-site"
ALL_SEQUENCES = "all-sequences"
ANY_CHOICE = "any-choice"
STRETCH_MODES = (CANONICAL, CANONICAL_ANY_SITE, ALL_SEQUENCES, ANY_CHOICE)


def _stretch_with(filling: Mapping[Cell, int], seq: StringSequence, which: int, row: int) -> Filling:
    """Stretch string ``which`` of ``seq`` down to the unreached ``row``.

    The rightmost residual box of ``row`` takes the label one past the
    string's rows above it, and the string's boxes below ``row`` move up by one.
    """
    residual = {c: v for c, v in filling.items() if not any(c in s for s in seq.strips[:which])}
    ends = _rightmost(residual)
    string = seq.strings[which]
    out = dict(filling)
    out[ends[row]] = sum(1 for y in string if y < row) + 1
    for y in string:
        if y > row:
            out[ends[y]] += 1
    return out


def _stretch_sites(filling: Mapping[Cell, int], seq: StringSequence) -> Iterator[tuple[int, int]]:
    """All (string index, unreached residual row) pairs, in order."""
    removed: set[Cell] = set()
    for j, (string, strip) in enumerate(zip(seq.strings, seq.strips)):
        rows = sorted({r for (r, c) in filling if (r, c) not in removed})
        for r in rows:
            if r not in string:
                yield j, r
        removed |= strip


def stretch_step(tableau: LRTableau) -> LRTableau:
    """One application of the stretch procedure on the canonical string sequence.

    Returns ``tableau`` itself when every string reaches every row of its residual.
    """
    filling = tableau.filling
    seq = complete_string_sequence(filling)
    if seq is None:
        raise ValueError("stretch_step needs an LR tableau")
    site = next(_stretch_sites(filling, seq), None)
    if site is None:
        return tableau
    return LRTableau.from_filling(tableau.shape, _stretch_with(filling, seq, *site))


def stretch_candidates(filling: Mapping[Cell, int], mode: str = CANONICAL) -> list[Filling]:
    """Distinct valid LR results of stretching ``filling`` under the given choice rule."""
    if mode not in STRETCH_MODES:
        raise ValueError(f"unknown stretch mode {mode!r}")
    seqs = iter_string_sequences(filling)
    if mode in (CANONICAL, CANONICAL_ANY_SITE):
        first = next(seqs, None)
        seqs = iter(() if first is None else (first,))
    out: dict[tuple, Filling] = {}
    for seq in seqs:
        sites = _stretch_sites(filling, seq)
        if mode in (CANONICAL, ALL_SEQUENCES):
            first_site = next(sites, None)
            sites = iter(() if first_site is None else (first_site,))
        for which, row in sites:
            result = _stretch_with(filling, seq, which, row)
            if is_lr_filling(result):
                out.setdefault(_key(result), result)
    return list(out.values())


def _key(filling: Mapping[Cell, int]) -> tuple:
    return tuple(sorted(filling.items()))


# -- the column-by-column generator ------------------------------------------------


@dataclass
class GenerationTrace:
    """Stages of the generator and, for every tableau, the tableau it was stretched from."""

    shape: SkewShape
    stages: list[list[LRTableau]] = field(default_factory=list)
    parents: dict[tuple, tuple | None] = field(default_factory=dict)


def _columns_from(shape: SkewShape, start: int) -> SkewShape:
    inner = [max(shape.inner.part(i), start - 1) for i in range(shape.num_rows)]
    outer = [max(l, inner[i]) for i, l in enumerate(shape.outer)]
    return SkewShape(Partition(outer), Partition(inner))


def generate_all_lr_trace(shape: SkewShape, mode: str = CANONICAL_ANY_SITE) -> GenerationTrace:
    """Run the column-by-column generator, keeping every stage.

    Stage ``i`` pads each tableau of the sub-shape on the last ``i + 1``
    columns with the minimum filling of the remaining columns on the left.
    """
    shape.require_basic()
    trace = GenerationTrace(shape)
    if not shape.size:
        trace.stages.append([LRTableau.from_filling(shape, {})])
        return trace
    base = min_filling(shape)
    width = shape.num_cols

    def pad(partial: Filling, start: int) -> LRTableau:
        full = {cell: v for cell, v in base.items() if cell[1] < start}
        full.update(partial)
        return LRTableau.from_filling(shape, full)

    current: dict[tuple, Filling] = {}
    last = {cell: v for cell, v in base.items() if cell[1] == width}
    current[_key(last)] = last
    trace.parents[_key(last)] = None
    trace.stages.append([pad(last, width)])
    for start in range(width - 1, 0, -1):
        column = {cell: v for cell, v in base.items() if cell[1] == start}
        frontier: deque[Filling] = deque()
        grown: dict[tuple, Filling] = {}
        for partial in current.values():
            seed = dict(partial)
            seed.update(column)
            if is_lr_filling(seed):
                key = _key(seed)
                if key not in grown:
                    grown[key] = seed
                    trace.parents.setdefault(key, _key(partial))
                    frontier.append(seed)
        while frontier:
            item = frontier.popleft()
            for nxt in stretch_candidates(item, mode):
                key = _key(nxt)
                if key not in grown:
                    grown[key] = nxt
                    trace.parents.setdefault(key, _key(item))
                    frontier.append(nxt)
        current = grown
        trace.stages.append(sorted((pad(f, start) for f in current.values()), key=LRTableau.sort_key))
    return trace


def generate_all_lr(shape: SkewShape, mode: str = CANONICAL_ANY_SITE) -> list[LRTableau]:
    return generate_all_lr_trace(shape, mode).stages[-1]


def restrict(shape: SkewShape, start: int) -> SkewShape:
    """The sub-shape made of columns ``start`` and onward (empty rows kept)."""
    return _columns_from(shape, start)


def support_from_cells(cells: Iterable[Cell]) -> frozenset[Partition]:
    return support(from_cells(cells))


def is_dominance_chain(chain: list[Partition]) -> bool:
    return all(dominated_by(a, b) for a, b in zip(chain, chain[1:]))


# -- column ribbons ---------------------------------------------------------------


@lru_cache(maxsize=1_000_000)
def _vertical_strips(content: tuple[int, ...], size: int, top_max: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Add ``size`` boxes to distinct rows of ``content`` keeping it a partition.

    Returns ``(new content, largest row used)`` for strips whose smallest row
    is at most ``top_max`` (rows are 1-based labels).
    """
    parts = list(content) + [0] * size

    def rec(row: int, left: int, first: int, last: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if left == 0:
            yield tuple(p for p in parts if p), last
            return
        for r in range(row, len(parts)):
            if first == 0 and r + 1 > top_max:
                return
            if r == 0 or parts[r - 1] > parts[r]:
                parts[r] += 1
                yield from rec(r + 1, left - 1, first or r + 1, r + 1)
                parts[r] -= 1

    return tuple(rec(0, size, 0, 0))


def ribbon_lr_counts(cols: Iterable[int]) -> Counter[Partition]:
    """Expansion of the column ribbon with column lengths ``cols`` (right to left).

    The reading word of such a ribbon is its columns read top to bottom in
    order, so an LR filling is a chain of vertical strips on the content; the
    top of each column may not exceed the bottom of the column before it.
    States with equal content and bottom label are merged.
    """
    states: Counter[tuple[tuple[int, ...], int]] = Counter({((), 1): 1})
    for length in cols:
        nxt: Counter[tuple[tuple[int, ...], int]] = Counter()
        for (content, bottom), ways in states.items():
            # A strip can never start below row len(content) + 1.
            top = min(bottom, len(content) + 1)
            for new, last in _vertical_strips(content, length, top):
                nxt[(new, last)] += ways
        states = nxt
    out: Counter[Partition] = Counter()
    for (content, _), ways in states.items():
        out[Partition(content)] += ways
    return out
