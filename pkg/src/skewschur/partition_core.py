"""Integer partitions and the dominance order.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers.  Trailing zeros are dropped on construction, so ``Partition((3, 2, 0))``
and ``Partition((3, 2))`` are the same value, and both compare equal to the
plain tuple ``(3, 2)``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator

from .errors import DoesNotFit, NotComparable, ParseError, SizeMismatch


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (the empty tuple is zero)."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        for i, p in enumerate(values):
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {values}")
            if i and p > values[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing, got {values}")
        return super().__new__(cls, values)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), or 0 past the end."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return format_partition(self)

    def __str__(self) -> str:
        return format_partition(self)


def _raw(parts: Iterable[int]) -> tuple[int, ...]:
    return tuple(Partition(parts))


def conjugate(p: Iterable[int]) -> Partition:
    parts = Partition(p)
    if not parts:
        return Partition()
    return Partition(sum(1 for q in parts if q > i) for i in range(parts[0]))


def _check_same_size(a: tuple[int, ...], b: tuple[int, ...]) -> None:
    if sum(a) != sum(b):
        raise SizeMismatch(f"{format_partition(a)} and {format_partition(b)} have different sizes")


def _dominated(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    # Prefix sums of b never fall below those of a; same size assumed.
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def dominated_by(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff ``a`` is below ``b`` in dominance order."""
    pa, pb = Partition(a), Partition(b)
    _check_same_size(pa, pb)
    return _dominated(pa, pb)


def covers(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff ``a`` covers ``b``: one box of ``b`` lifted to make ``a``.

    The box moves from row j to row i < j where either j = i + 1 or
    rows i and j of ``b`` have equal length.
    """
    pa, pb = Partition(a), Partition(b)
    _check_same_size(pa, pb)
    width = max(len(pa), len(pb))
    diff = [pa.part(i) - pb.part(i) for i in range(width)]
    nonzero = [i for i, d in enumerate(diff) if d]
    if len(nonzero) != 2:
        return False
    i, j = nonzero
    if diff[i] != 1 or diff[j] != -1:
        return False
    return j == i + 1 or pb.part(i) == pb.part(j)


@lru_cache(maxsize=None)
def _partitions_of(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        return iter(())
    largest = n if max_part is None else min(n, max_part)
    return (Partition(p) for p in _partitions_of(n, largest))


def dominance_interval(w: Iterable[int], n: Iterable[int]) -> list[Partition]:
    """Every partition between ``w`` and ``n`` in dominance order, decreasing lex."""
    low, high = Partition(w), Partition(n)
    _check_same_size(low, high)
    if not _dominated(low, high):
        raise NotComparable(f"{low} is not dominated by {high}")
    # Parts are bounded by high[0], lengths by len(low).
    cap = high[0] if high else 0
    return [
        Partition(p)
        for p in _partitions_of(low.size, cap)
        if len(p) <= len(low) and _dominated(low, p) and _dominated(p, high)
    ]


def add(a: Iterable[int], b: Iterable[int]) -> Partition:
    pa, pb = Partition(a), Partition(b)
    width = max(len(pa), len(pb))
    return Partition(pa.part(i) + pb.part(i) for i in range(width))


def union(a: Iterable[int], b: Iterable[int]) -> Partition:
    return Partition(sorted(tuple(Partition(a)) + tuple(Partition(b)), reverse=True))


# Tags returned by shape_class.
ZERO = "zero"
ONE_LINE_RECTANGLE = "one-line rectangle"
RECTANGLE = "rectangle"
FAT_HOOK = "fat hook"
NEAR_RECTANGLE = "near rectangle"
HOOK = "hook"
OTHER = "other"


def is_rectangle(p: Iterable[int]) -> bool:
    return len(set(Partition(p))) <= 1


def is_fat_hook(p: Iterable[int]) -> bool:
    return len(set(Partition(p))) == 2


def is_one_line_rectangle(p: Iterable[int]) -> bool:
    parts = Partition(p)
    return bool(parts) and is_rectangle(parts) and (len(parts) == 1 or parts[0] == 1)


def is_two_line_rectangle(p: Iterable[int]) -> bool:
    parts = Partition(p)
    return bool(parts) and is_rectangle(parts) and (len(parts) == 2 or parts[0] == 2)


def _fat_hook_blocks(parts: Partition) -> tuple[int, int, int, int]:
    """Write a fat hook as (a^b, c^d) with a > c and return (a, b, c, d)."""
    a, c = parts[0], parts[-1]
    b = parts.count(a)
    return a, b, c, len(parts) - b


def shape_class(p: Iterable[int]) -> frozenset[str]:
    """All taxonomy tags that apply to ``p``.

    The zero partition is tagged ``zero`` and ``rectangle`` (it has at most one
    part size) but is never a near rectangle.
    """
    parts = Partition(p)
    if not parts:
        return frozenset({ZERO, RECTANGLE})
    tags: set[str] = set()
    if is_rectangle(parts):
        tags.add(RECTANGLE)
        if is_one_line_rectangle(parts):
            tags.add(ONE_LINE_RECTANGLE)
    elif is_fat_hook(parts):
        tags.add(FAT_HOOK)
        a, b, c, d = _fat_hook_blocks(parts)
        # Dropping the top block row, the bottom block row, the first column,
        # or the last long column leaves a rectangle exactly in these cases.
        if b == 1 or d == 1 or c == 1 or a - c == 1:
            tags.add(NEAR_RECTANGLE)
        if b == 1 and c == 1:
            tags.add(HOOK)
    if not tags:
        tags.add(OTHER)
    return frozenset(tags)


def is_near_rectangle(p: Iterable[int]) -> bool:
    return NEAR_RECTANGLE in shape_class(p)


def _check_fits(parts: Partition, m: int, n: int) -> None:
    if len(parts) > n or (parts and parts[0] > m):
        raise DoesNotFit(f"{parts} does not fit in a {m}x{n} rectangle")


def complement(p: Iterable[int], m: int, n: int) -> Partition:
    """The complement of ``p`` inside the rectangle with n rows of length m."""
    parts = Partition(p)
    _check_fits(parts, m, n)
    return Partition(m - parts.part(n - k) for k in range(1, n + 1))


def boundary_path(p: Iterable[int], m: int, n: int) -> list[int]:
    """Run lengths of the lattice path from the SW to the NE corner bordering ``p``."""
    parts = Partition(p)
    _check_fits(parts, m, n)
    steps: list[str] = []
    x = 0
    for row in range(n - 1, -1, -1):
        target = parts.part(row)
        steps.extend("R" * (target - x))
        x = target
        steps.append("U")
    steps.extend("R" * (m - x))
    runs: list[int] = []
    for i, step in enumerate(steps):
        if i and step == steps[i - 1]:
            runs[-1] += 1
        else:
            runs.append(1)
    return runs


def shortness(p: Iterable[int], m: int, n: int) -> int:
    """Shortest straight segment of the boundary path of ``p`` in the m x n box.

    For the zero and the full partition the path is one vertical and one
    horizontal run, so the value is min(m, n).
    """
    if m <= 0 or n <= 0:
        raise DoesNotFit("the bounding rectangle must be nonempty")
    return min(boundary_path(p, m, n))


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``[5,4,2]``, ``[]`` or the exponent form ``[3^2,1]``."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError(f"partition must be bracketed: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return Partition()
    parts: list[int] = []
    for token in inner.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise ParseError(f"bad partition entry {token!r} in {text!r}")
        value = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) is not None else 1
        parts.extend([value] * repeat)
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_partition(p: Iterable[int]) -> str:
    return "[" + ",".join(str(q) for q in p) + "]"


def prefix_sums(p: Iterable[int]) -> list[int]:
    return list(accumulate(p))
