"""Skew diagrams, their symmetries and structural decompositions.

Cells are ``(row, col)`` pairs, both 1-based, rows counted top to bottom
(English convention).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import EmptySubset, LengthExceeded, NotBasic, NotContained, NotRibbon, ParseError
from .partition_core import Partition, conjugate, format_partition, parse_partition

Cell = tuple[int, int]


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if len(self.inner) > len(self.outer) or any(
            m > l for m, l in zip(self.inner, self.outer)
        ):
            raise NotContained(f"{self.inner} is not contained in {self.outer}")

    # -- derived data ------------------------------------------------------

    @cached_property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(l - self.inner.part(i) for i, l in enumerate(self.outer))

    @cached_property
    def column_lengths(self) -> tuple[int, ...]:
        outer_c, inner_c = conjugate(self.outer), conjugate(self.inner)
        return tuple(l - inner_c.part(j) for j, l in enumerate(outer_c))

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(self.iter_cells())

    def iter_cells(self) -> Iterator[Cell]:
        """Cells in reading order of rows: top to bottom, left to right."""
        for i, l in enumerate(self.outer):
            for j in range(self.inner.part(i) + 1, l + 1):
                yield (i + 1, j)

    def row_span(self, row: int) -> tuple[int, int]:
        """First and last column of a (1-based) row; empty rows give (k+1, k)."""
        return self.inner.part(row - 1) + 1, self.outer.part(row - 1)

    @cached_property
    def is_basic(self) -> bool:
        return all(self.row_lengths) and all(self.column_lengths)

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    @property
    def num_cols(self) -> int:
        return self.outer.part(0)

    def require_basic(self) -> None:
        if not self.is_basic:
            raise NotBasic(f"{self} has an empty row or column")

    def __str__(self) -> str:
        return format_shape(self)

    def __repr__(self) -> str:
        return f"SkewShape({format_shape(self)})"


def make_skew(outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
    return SkewShape(Partition(outer), Partition(inner))


def from_cells(cells: Iterable[Cell]) -> SkewShape:
    """Basic skew shape whose cells are ``cells`` with empty rows/columns squeezed out."""
    cell_set = set(cells)
    if not cell_set:
        return SkewShape(Partition())
    rows = {r: k for k, r in enumerate(sorted({r for r, _ in cell_set}), start=1)}
    cols = {c: k for k, c in enumerate(sorted({c for _, c in cell_set}), start=1)}
    by_row: dict[int, list[int]] = {}
    for r, c in cell_set:
        by_row.setdefault(rows[r], []).append(cols[c])
    outer, inner = [], []
    for r in range(1, len(rows) + 1):
        row = sorted(by_row[r])
        if row[-1] - row[0] + 1 != len(row):
            raise ValueError("cells do not form a skew shape (gap inside a row)")
        outer.append(row[-1])
        inner.append(row[0] - 1)
    try:
        shape = SkewShape(Partition(outer), Partition(inner))
    except ValueError as exc:
        raise ValueError("cells do not form a skew shape") from exc
    if shape.cells != {(rows[r], cols[c]) for r, c in cell_set}:
        raise ValueError("cells do not form a skew shape")
    return shape


def basic_form(shape: SkewShape) -> SkewShape:
    """Delete every empty row and empty column."""
    if shape.is_basic:
        return shape
    return from_cells(shape.cells)


def profiles(shape: SkewShape) -> tuple[Partition, Partition]:
    """``(w, n)``: sorted column lengths and the conjugate of sorted row lengths."""
    cols = Partition(sorted((c for c in shape.column_lengths if c), reverse=True))
    rows = Partition(sorted((r for r in shape.row_lengths if r), reverse=True))
    return cols, conjugate(rows)


def _components_of_cells(cells: frozenset[Cell]) -> list[set[Cell]]:
    seen: set[Cell] = set()
    out: list[set[Cell]] = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            r, c = stack.pop()
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    comp.add(nb)
                    stack.append(nb)
        out.append(comp)
    return out


def components(shape: SkewShape) -> list[SkewShape]:
    """Edge-connected components, each as a basic shape, north-east first."""
    shape.require_basic()
    comps = _components_of_cells(shape.cells)
    comps.sort(key=lambda comp: min(r for r, _ in comp))
    return [from_cells(comp) for comp in comps]


def is_connected(shape: SkewShape) -> bool:
    return len(_components_of_cells(shape.cells)) <= 1


def has_2x2_block(shape: SkewShape) -> bool:
    cells = shape.cells
    return any(
        (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells
        for r, c in cells
    )


@dataclass(frozen=True)
class ShapeFlags:
    connected: bool
    ribbon: bool
    vertical_strip: bool
    horizontal_strip: bool
    has_2x2_block: bool
    is_partition: bool
    is_rotated_partition: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


def shape_predicates(shape: SkewShape) -> ShapeFlags:
    shape.require_basic()
    connected = is_connected(shape)
    block = has_2x2_block(shape)
    return ShapeFlags(
        connected=connected,
        ribbon=connected and not block,
        vertical_strip=all(l <= 1 for l in shape.row_lengths),
        horizontal_strip=all(l <= 1 for l in shape.column_lengths),
        has_2x2_block=block,
        is_partition=not shape.inner,
        # A basic shape rotates to a straight one iff its outer shape is a rectangle.
        is_rotated_partition=len(set(shape.outer)) <= 1,
    )


def rotate_pi(shape: SkewShape) -> SkewShape:
    """Half-turn inside the bounding box of the outer partition."""
    m, n = shape.num_cols, shape.num_rows
    outer = [m - shape.inner.part(n - i) for i in range(1, n + 1)]
    inner = [m - shape.outer.part(n - i) for i in range(1, n + 1)]
    return SkewShape(Partition(outer), Partition(inner))


def conjugate_shape(shape: SkewShape) -> SkewShape:
    return SkewShape(conjugate(shape.outer), conjugate(shape.inner))


def direct_sum(top: SkewShape, bottom: SkewShape) -> SkewShape:
    """``top`` strictly north-east of ``bottom``, sharing no rows or columns."""
    shift = bottom.num_cols
    outer = [l + shift for l in top.outer] + list(bottom.outer)
    inner = [top.inner.part(i) + shift for i in range(top.num_rows)] + [
        bottom.inner.part(i) for i in range(bottom.num_rows)
    ]
    return SkewShape(Partition(outer), Partition(inner))


def bullet(u: Iterable[int], v: Iterable[int], n: int) -> SkewShape:
    """The rotated ``u`` glued above-left of ``v`` inside ``n`` rows.

    Row i of the result runs from column ``u_1 - u_{n+1-i} + 1`` to ``u_1 + v_i``.
    """
    pu, pv = Partition(u), Partition(v)
    if len(pu) > n or len(pv) > n:
        raise LengthExceeded(f"{pu} or {pv} has more than {n} parts")
    top = pu.part(0)
    outer = [top + pv.part(i) for i in range(n)]
    inner = [top - pu.part(n - 1 - i) for i in range(n)]
    return SkewShape(Partition(outer), Partition(inner))


# -- V-sequence ---------------------------------------------------------------


@dataclass(frozen=True)
class VSequence:
    """Iterated removal of the rightmost cell of every nonempty row.

    ``residuals[i]`` is the shape left after removing ``strips[0..i]``; its
    inner partition is always the original one.
    """

    shape: SkewShape
    strips: tuple[frozenset[Cell], ...]
    residuals: tuple[SkewShape, ...]

    @property
    def strip_sizes(self) -> Partition:
        return Partition(len(s) for s in self.strips)


def residual_after(shape: SkewShape, steps: int) -> SkewShape:
    """The shape left after removing the first ``steps`` strips of the V-sequence."""
    outer = [max(m, l - steps) for m, l in zip_longest_parts(shape.inner, shape.outer)]
    return SkewShape(Partition(outer), shape.inner)


def zip_longest_parts(inner: Partition, outer: Partition) -> Iterator[tuple[int, int]]:
    for i, l in enumerate(outer):
        yield inner.part(i), l


def v_sequence(shape: SkewShape) -> VSequence:
    shape.require_basic()
    longest = max(shape.row_lengths, default=0)
    strips: list[frozenset[Cell]] = []
    residuals: list[SkewShape] = []
    for step in range(1, longest + 1):
        strip = frozenset(
            (i + 1, l - step + 1)
            for i, (m, l) in enumerate(zip_longest_parts(shape.inner, shape.outer))
            if l - m >= step
        )
        strips.append(strip)
        residuals.append(residual_after(shape, step))
    return VSequence(shape, tuple(strips), tuple(residuals))


# -- maximal blocks -------------------------------------------------------------

DEPTH = "depth"
WIDTH = "width"


@dataclass(frozen=True)
class BlockReduction:
    """Result of stripping maximal blocks.

    ``steps`` lists the removals in order as ``(kind, extent)``: a ``depth``
    step removed one full-height column of ``extent`` cells, a ``width`` step
    one full-width row of ``extent`` cells.  Iterating gives
    ``(reduced, depth, width)``.
    """

    reduced: SkewShape
    depth: int
    width: int
    steps: tuple[tuple[str, int], ...] = field(default=())

    def __iter__(self) -> Iterator:
        return iter((self.reduced, self.depth, self.width))

    def lift(self, xi: Iterable[int]) -> Partition:
        """Carry a partition in the reduced shape's interval back to the original."""
        from .partition_core import add, union

        out = Partition(xi)
        for kind, extent in reversed(self.steps):
            if kind == DEPTH:
                out = union(out, (extent,))
            else:
                out = add(out, (1,) * extent)
        return out


def _full_height_column(shape: SkewShape) -> int | None:
    n = shape.num_rows
    for j, length in enumerate(shape.column_lengths, start=1):
        if length == n:
            return j
    return None


def _full_width_row(shape: SkewShape) -> int | None:
    m = shape.num_cols
    for i, length in enumerate(shape.row_lengths, start=1):
        if length == m:
            return i
    return None


def strip_maximal_blocks(shape: SkewShape) -> BlockReduction:
    """Remove full-height columns and full-width rows until none remain."""
    shape.require_basic()
    steps: list[tuple[str, int]] = []
    current = shape
    while current.size:
        col = _full_height_column(current)
        if col is not None:
            steps.append((DEPTH, current.num_rows))
            current = from_cells((r, c) for r, c in current.cells if c != col)
            continue
        row = _full_width_row(current)
        if row is not None:
            steps.append((WIDTH, current.num_cols))
            current = from_cells((r, c) for r, c in current.cells if r != row)
            continue
        break
    depth = sum(1 for kind, _ in steps if kind == DEPTH)
    return BlockReduction(current, depth, len(steps) - depth, tuple(steps))


# -- ribbons ----------------------------------------------------------------------


@dataclass(frozen=True)
class RibbonComposition:
    """Column lengths of a column ribbon, read from the rightmost column."""

    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        cols = tuple(int(c) for c in self.cols)
        if not cols or any(c < 1 for c in cols):
            raise NotRibbon(f"ribbon columns must be positive and nonempty, got {cols}")
        object.__setattr__(self, "cols", cols)

    @property
    def s(self) -> int:
        return len(self.cols)

    def __str__(self) -> str:
        return "ribbon:(" + ",".join(map(str, self.cols)) + ")"


def ribbon_shape(r: RibbonComposition | Iterable[int]) -> SkewShape:
    """Build the ribbon: column 1 is rightmost and occupies the top rows, and
    each next column starts at the bottom row of the previous one."""
    comp = r if isinstance(r, RibbonComposition) else RibbonComposition(tuple(r))
    s = comp.s
    cells = []
    top = 1
    for i, length in enumerate(comp.cols, start=1):
        col = s + 1 - i
        cells.extend((row, col) for row in range(top, top + length))
        top += length - 1
    return from_cells(cells)


def ribbon_codec(shape: SkewShape) -> RibbonComposition:
    flags = shape_predicates(basic_form(shape))
    if not flags.ribbon:
        raise NotRibbon(f"{shape} is not a ribbon")
    basic = basic_form(shape)
    comp = RibbonComposition(tuple(reversed(basic.column_lengths)))
    if ribbon_shape(comp) != basic:
        raise NotRibbon(f"{shape} is not a column ribbon")
    return comp


def ribbon_subdiagram_stats(r: RibbonComposition | Iterable[int], subset: Iterable[int]) -> tuple[int, int]:
    """``(I, vertical space)`` of the sub-ribbon on the (1-based) columns ``subset``."""
    comp = r if isinstance(r, RibbonComposition) else RibbonComposition(tuple(r))
    chosen = set(subset)
    if not chosen:
        raise EmptySubset("column subset must be nonempty")
    if not chosen <= set(range(1, comp.s + 1)):
        raise ValueError(f"column indices must lie in 1..{comp.s}")
    adjacent = sum(1 for i in chosen if i + 1 in chosen)
    return adjacent, sum(comp.cols[i - 1] for i in chosen) - adjacent


# -- text syntax -------------------------------------------------------------------

_RIBBON = re.compile(r"^\s*ribbon\s*:\s*\(([^()]*)\)\s*$")
_COMPOSITION = re.compile(r"^\s*\(([^()]*)\)\s*$")


def parse_shape(text: str) -> SkewShape:
    """Parse ``[4,4,2]/[2,1]``, a straight shape ``[3,2]``, or ``ribbon:(3,2,5)``."""
    if _RIBBON.match(text):
        return ribbon_shape(parse_ribbon(text))
    pieces = text.split("/")
    if len(pieces) > 2:
        raise ParseError(f"too many '/' in shape {text!r}")
    outer = parse_partition(pieces[0])
    inner = parse_partition(pieces[1]) if len(pieces) == 2 else Partition()
    try:
        return SkewShape(outer, inner)
    except NotContained as exc:
        raise ParseError(str(exc)) from exc


def parse_ribbon(text: str) -> RibbonComposition:
    """Parse ``ribbon:(3,2,5)`` or a bare ``(3,2,5)``."""
    match = _RIBBON.match(text) or _COMPOSITION.match(text)
    if not match:
        raise ParseError(f"bad ribbon {text!r}")
    try:
        cols = tuple(int(tok) for tok in match.group(1).split(","))
        return RibbonComposition(cols)
    except (ValueError, NotRibbon) as exc:
        raise ParseError(f"bad ribbon {text!r}: {exc}") from exc


def format_shape(shape: SkewShape) -> str:
    if not shape.inner:
        return format_partition(shape.outer)
    return f"{format_partition(shape.outer)}/{format_partition(shape.inner)}"
