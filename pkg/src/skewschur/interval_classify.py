"""Closed-form classifiers for skew Schur expansions.

* :func:`classify_mf` and :func:`classify_product_mf` decide
  multiplicity-freeness from the shape alone.
* :func:`match_full_interval_config` recognises the shapes whose expansion is
  multiplicity-free with support equal to the whole Schur interval.
* :func:`detect_bad_config` produces certified partitions missing from the
  support.
* :func:`ribbon_full_support` decides full support for column ribbons.
* :func:`product_full_interval` and :func:`pieri_fixture_expansions` cover
  products of two Schur functions.

Every verdict here is derived from shape data only; the tests compare each
one against the brute-force enumerator in :mod:`skewschur.lr_engine`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Iterator

from .errors import HypothesisViolated, NotRibbon, OutOfRange
from .lr_engine import SchurExpansion
from .partition_core import (
    Partition,
    complement,
    conjugate,
    dominance_interval,
    dominated_by,
    is_fat_hook,
    is_near_rectangle,
    is_one_line_rectangle,
    is_rectangle,
    is_two_line_rectangle,
    shortness,
    union,
)
from .skew_shapes import (
    RibbonComposition,
    SkewShape,
    basic_form,
    components,
    conjugate_shape,
    direct_sum,
    has_2x2_block,
    is_connected,
    make_skew,
    profiles,
    residual_after,
    ribbon_codec,
    ribbon_subdiagram_stats,
    rotate_pi,
    strip_maximal_blocks,
    v_sequence,
)

# -- multiplicity-free classification ----------------------------------------------


@dataclass(frozen=True)
class MFClass:
    """Cases that apply; empty means the expansion has a coefficient above 1."""

    cases: frozenset[str]
    details: dict[str, str] = field(default_factory=dict, compare=False)

    @property
    def multiplicity_free(self) -> bool:
        return bool(self.cases)


def _mf_cases(one: Partition, other: Partition, m: int, n: int, names: tuple[str, str]) -> dict[str, str]:
    """Shape cases R1-R3 with ``one`` as the rectangle and ``other`` as the partner."""
    first, second = names
    found: dict[str, str] = {}
    if one and is_rectangle(one):
        short = shortness(one, m, n)
        if short == 1:
            found["R1"] = f"{first} is a rectangle of shortness 1"
        if short == 2 and is_fat_hook(other):
            found["R2"] = f"{first} is a rectangle of shortness 2 and {second} a fat hook"
        if is_fat_hook(other) and shortness(other, m, n) == 1:
            found["R3"] = f"{first} is a rectangle and {second} a fat hook of shortness 1"
    return found


def classify_mf(shape: SkewShape) -> MFClass:
    shape.require_basic()
    mu = shape.inner
    m, n = shape.num_cols, shape.num_rows
    lam_star = complement(shape.outer, m, n)
    details: dict[str, str] = {}
    if not mu or not lam_star:
        details["R0"] = "inner shape is zero" if not mu else "complement is zero"
    for case, text in _mf_cases(mu, lam_star, m, n, ("inner shape", "complement")).items():
        details.setdefault(case, text)
    for case, text in _mf_cases(lam_star, mu, m, n, ("complement", "inner shape")).items():
        details.setdefault(case, text)
    if is_rectangle(mu) and is_rectangle(lam_star):
        details["R4"] = "inner shape and complement are rectangles"
    return MFClass(frozenset(details), details)


def classify_product_mf(mu: Iterable[int], nu: Iterable[int]) -> MFClass:
    a, b = Partition(mu), Partition(nu)
    details: dict[str, str] = {}
    if not a or not b:
        details["P0"] = "a factor is zero"
    if is_one_line_rectangle(a) or is_one_line_rectangle(b):
        details["P1"] = "a factor is a one-line rectangle"
    if (is_two_line_rectangle(a) and is_fat_hook(b)) or (is_two_line_rectangle(b) and is_fat_hook(a)):
        details["P2"] = "a two-line rectangle times a fat hook"
    if (a and is_rectangle(a) and is_near_rectangle(b)) or (b and is_rectangle(b) and is_near_rectangle(a)):
        details["P3"] = "a rectangle times a near rectangle"
    if is_rectangle(a) and is_rectangle(b):
        details["P4"] = "both factors are rectangles"
    return MFClass(frozenset(details), details)


# -- symmetries -----------------------------------------------------------------------

IDENTITY = "id"
ROTATION = "pi"
CONJUGATION = "conj"
ROTATION_CONJUGATION = "pi-conj"
SYMMETRIES = (IDENTITY, ROTATION, CONJUGATION, ROTATION_CONJUGATION)


def apply_symmetry(shape: SkewShape, symmetry: str) -> SkewShape:
    if symmetry == IDENTITY:
        return shape
    if symmetry == ROTATION:
        return rotate_pi(shape)
    if symmetry == CONJUGATION:
        return conjugate_shape(shape)
    if symmetry == ROTATION_CONJUGATION:
        return conjugate_shape(rotate_pi(shape))
    raise ValueError(f"unknown symmetry {symmetry!r}")


def _transports_by_conjugation(symmetry: str) -> bool:
    return symmetry in (CONJUGATION, ROTATION_CONJUGATION)


@lru_cache(maxsize=200_000)
def reduce_shape(shape: SkewShape) -> SkewShape:
    """Basic form with every maximal block stripped."""
    return strip_maximal_blocks(basic_form(shape)).reduced


# -- named shape families -----------------------------------------------------------


def _shape(outer: Iterable[int], inner: Iterable[int]) -> SkewShape:
    return make_skew(list(outer), list(inner))


def f1(a: int, x: int) -> SkewShape:
    """A column of ``x`` cells north-east of a row of ``a`` cells."""
    return _shape([a + 1] * x + [a], [a] * x)


def f1_tilde(a: int, x: int) -> SkewShape:
    """A single cell north-east of the rectangle with ``x`` rows of length ``a``."""
    return _shape([a + 1] + [a] * x, [a])


def f2(a: int, b: int, c: int, d: int) -> SkewShape:
    return _shape([a + b + c + d, b + c + d, d], [c + d])


def f3(a: int, b: int, x: int, y: int) -> SkewShape:
    m = a + b + 2
    return _shape([m] * (x + 1) + [a + 1] * (y + 1), [a + b + 1] * x + [a] * (y + 1))


def f4(a: int, x: int, y: int) -> SkewShape:
    return _shape([a + 2] * x + [a + 1] + [1] * y, [a + 1] * x)


def f4_tilde(a: int, b: int, x: int) -> SkewShape:
    return _shape([a + b + 1] * x + [a + b, a], [a + b] * x)


def f5(a: int, b: int, x: int, y: int) -> SkewShape:
    return _shape([a + b + 2] * x + [a + b + 1] * (y + 1) + [a], [a + b] * (x + y))


def f5_tilde(a: int, x: int, y: int, z: int) -> SkewShape:
    return _shape([a + 3] * x + [a + 2] * (y + 1) + [1] * z, [a + 1] * (x + y))


def f5_hat(a: int, b: int, c: int, x: int) -> SkewShape:
    m = a + b + c + 1
    return _shape([m] * (x + 1) + [a + b], [a + b + c] * x + [a])


def f6(a: int, b: int, x: int, y: int) -> SkewShape:
    return _shape([a + b + 1] + [a + 1] * x + [1] * y, [1])


def f7(k: int, w1: int) -> SkewShape:
    """Three columns of lengths 1, k+1, w1 ending on the bottom row, then a
    column of k+1 cells starting on the top row; w1 + 1 rows in all."""
    rows = w1 + 1
    outer = [4] * (k + 1) + [3] * (rows - k - 1)
    inner = [3] + [2] * (rows - k - 2) + [1] * k + [0]
    return _shape(outer, inner)


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple[str, ...]
    build: Callable[..., SkewShape]
    ranges: Callable[[int], Iterator[tuple[int, ...]]]


def _a2_params(bound: int) -> Iterator[tuple[int, ...]]:
    for a, b, c, d in product(range(1, bound + 1), range(bound + 1), range(bound + 1), range(1, bound + 1)):
        if a <= c + 1 and d <= b + 1:
            yield a, b, c, d


def _a3_params(bound: int) -> Iterator[tuple[int, ...]]:
    for a, b, x, y in product(range(1, bound + 1), repeat=4):
        if (a == 1 and x == 1) or (a == 1 and x <= y + 1) or (a <= b + 1 and x == 1):
            yield a, b, x, y


def _a4_params(bound: int) -> Iterator[tuple[int, ...]]:
    for a, x, y in product(range(1, bound + 1), repeat=3):
        if (a == 1 and x <= y + 1) or (a >= 2 and x == 1):
            yield a, x, y


def _a6_params(bound: int) -> Iterator[tuple[int, ...]]:
    for a, x in product(range(1, bound + 1), repeat=2):
        yield a, x


def _a7_params(bound: int) -> Iterator[tuple[int, ...]]:
    for k in range(1, bound + 1):
        for w1 in range(k + 2, bound + 1):
            yield k, w1


FULL_FAMILIES = (
    Family("A2", ("a", "b", "c", "d"), f2, _a2_params),
    Family("A3", ("a", "b", "x", "y"), f3, _a3_params),
    Family("A4", ("a", "x", "y"), f4, _a4_params),
    Family("A6", ("a", "x"), lambda a, x: f6(a, 1, x, 1), _a6_params),
    Family("A7", ("k", "w1"), f7, _a7_params),
)
CONFIG_ORDER = ("Partition", "A1") + tuple(f.name for f in FULL_FAMILIES)


@lru_cache(maxsize=None)
def _family_table(name: str, bound: int) -> dict[SkewShape, tuple[int, ...]]:
    """Reduced instance shape -> first parameter tuple producing it."""
    family = next(f for f in FULL_FAMILIES if f.name == name)
    table: dict[SkewShape, tuple[int, ...]] = {}
    for params in family.ranges(bound):
        key = reduce_shape(family.build(*params))
        table.setdefault(key, params)
    return table


def a7_profile_ok(shape: SkewShape) -> bool:
    """Column-profile form of the A7 family: w = (w1, k+1, k+1, 1) with w1 >= k+2."""
    w, _ = profiles(shape)
    if len(w) != 4 or w[1] != w[2] or w[3] != 1:
        return False
    k = w[1] - 1
    return k >= 1 and w[0] >= k + 2


# -- full-interval configurations -----------------------------------------------------


@dataclass(frozen=True)
class ConfigMatch:
    config: str | None
    symmetry: str | None = None
    stripped_blocks: tuple[int, int] = (0, 0)
    params: dict[str, int] = field(default_factory=dict)
    all_matches: tuple[tuple[str, str, tuple[int, ...]], ...] = ()

    @property
    def matched(self) -> bool:
        return self.config is not None


def template_shape(config: str, params: dict[str, int]) -> SkewShape:
    family = next(f for f in FULL_FAMILIES if f.name == config)
    return family.build(*(params[p] for p in family.params))


def match_full_interval_config(shape: SkewShape) -> ConfigMatch:
    shape.require_basic()
    blocks = strip_maximal_blocks(shape)
    stripped = (blocks.depth, blocks.width)
    reduced = blocks.reduced
    matches: list[tuple[str, str, tuple[int, ...]]] = []

    if not reduced.size or not shape.inner or len(set(shape.outer)) == 1:
        matches.append(("Partition", IDENTITY, ()))
    for candidate in (shape, reduced):
        if candidate.size and (candidate.num_cols == 2 or candidate.num_rows == 2):
            matches.append(("A1", IDENTITY, ()))
            break

    bound = max(shape.num_rows, shape.num_cols) + 1
    images = {sym: reduce_shape(apply_symmetry(shape, sym)) for sym in SYMMETRIES}
    for family in FULL_FAMILIES:
        table = _family_table(family.name, bound)
        for sym in SYMMETRIES:
            params = table.get(images[sym])
            if params is not None:
                matches.append((family.name, sym, params))

    if not matches:
        return ConfigMatch(None, stripped_blocks=stripped)
    matches.sort(key=lambda m: (CONFIG_ORDER.index(m[0]), SYMMETRIES.index(m[1])))
    name, sym, params = matches[0]
    names: tuple[str, ...] = ()
    for family in FULL_FAMILIES:
        if family.name == name:
            names = family.params
    return ConfigMatch(
        name,
        sym,
        stripped,
        dict(zip(names, params)),
        tuple(matches),
    )


# -- witnesses of a missing partition ------------------------------------------------

DISCONNECTED = "disconnected"
SAME = "same"
LAS = "las"
TF3_F0 = "TF3-F0"
F1 = "F1"
RIBBON = "ribbon"
INDUCTION = "induction"


@dataclass(frozen=True)
class Witness:
    xi: Partition
    reason: str


def _in_interval(xi: Partition, w: Partition, n: Partition) -> bool:
    return xi.size == w.size and dominated_by(w, xi) and dominated_by(xi, n)


def _lowered_one_box(parts: Partition) -> Iterator[Partition]:
    """Partitions strictly below ``parts`` obtained by moving one box down.

    The box leaves part i for a later part j (possibly a new one) with
    parts[i] >= parts[j] + 2.
    """
    padded = list(parts) + [0]
    seen: set[Partition] = set()
    for i, j in combinations(range(len(padded)), 2):
        if padded[i] >= padded[j] + 2:
            moved = list(padded)
            moved[i] -= 1
            moved[j] += 1
            cand = Partition(sorted(moved, reverse=True))
            if cand not in seen:
                seen.add(cand)
                yield cand


def _first_strip_witness(shape: SkewShape) -> Partition | None:
    """A partition with first part n_1 whose tail lies strictly below the residual's minimum.

    The tail is then outside the support of the residual, so the whole
    partition is outside the support of ``shape``.
    """
    w, n = profiles(shape)
    if not n:
        return None
    rest, _ = profiles(residual_after(shape, 1))
    for tail in _lowered_one_box(rest):
        xi = union((n[0],), tail)
        if _in_interval(xi, w, n):
            return xi
    return None


def _disconnected_witness(shape: SkewShape) -> Partition | None:
    """The explicit lowering used for several components with a 2x2 block."""
    w, n = profiles(shape)
    rest, _ = profiles(residual_after(shape, 1))
    big = [p for p in rest if p >= 2]
    if not big:
        return None
    ones = len(rest) - len(big)
    tail = big[:-1] + [big[-1] - 1] + [1] * (ones + 1)
    xi = union((n[0],), tail)
    return xi if _in_interval(xi, w, n) else None


def _same_witness(shape: SkewShape) -> Partition | None:
    w, n = profiles(shape)
    seq = v_sequence(shape)
    last = seq.strips[-1]
    if not (len(w) > len(n) and len(last) >= 2 and len({c for _, c in last}) == 1):
        return None
    for k in range(1, len(n)):
        residual = basic_form(residual_after(shape, k))
        comps = components(residual)
        if len(comps) >= 2 and any(has_2x2_block(c) for c in comps):
            inner = _disconnected_witness(residual)
            if inner is None:
                return None
            xi = union(n[:k], inner)
            return xi if _in_interval(xi, w, n) else None
    return None


def _f1_witness(reduced: SkewShape) -> Partition | None:
    rows, cols = reduced.num_rows, reduced.num_cols
    for a in range(2, cols + 1):
        for x in range(2, rows + 1):
            if reduced == reduce_shape(f1(a, x)):
                return Partition([x, 2] + [1] * (a - 2))
            if reduced == reduce_shape(f1_tilde(a, x)):
                return Partition([x + 1] + [x] * (a - 2) + [x - 1, 1])
    return None


def _transport(xi: Partition, symmetry: str) -> Partition:
    return conjugate(xi) if _transports_by_conjugation(symmetry) else xi


def _ribbon_witness(shape: SkewShape) -> Partition | None:
    for sym in (IDENTITY, CONJUGATION):
        image = apply_symmetry(shape, sym)
        try:
            comp = ribbon_codec(image)
        except NotRibbon:
            continue
        if not ribbon_hypothesis_holds(comp):
            continue
        verdict = ribbon_full_support(comp)
        if not verdict.full and verdict.witness is not None:
            return _transport(verdict.witness.xi, sym)
    return None


@lru_cache(maxsize=100_000)
def detect_bad_config(shape: SkewShape) -> Witness | None:
    """A partition in the Schur interval that is certainly not in the support.

    Best effort: ``None`` does not mean the support is full.
    """
    shape.require_basic()
    w, n = profiles(shape)
    if w == n:
        return None

    if len(components(shape)) >= 2 and any(has_2x2_block(c) for c in components(shape)):
        xi = _disconnected_witness(shape)
        if xi is not None:
            return Witness(xi, DISCONNECTED)

    xi = _same_witness(shape)
    if xi is not None:
        return Witness(xi, SAME)

    xi = _first_strip_witness(shape)
    if xi is not None:
        return Witness(xi, LAS if is_connected(shape) else DISCONNECTED)

    for sym in (ROTATION, CONJUGATION, ROTATION_CONJUGATION):
        xi = _first_strip_witness(apply_symmetry(shape, sym))
        if xi is not None:
            return Witness(_transport(xi, sym), TF3_F0)

    for sym in SYMMETRIES:
        image = apply_symmetry(shape, sym)
        blocks = strip_maximal_blocks(image)
        xi = _f1_witness(blocks.reduced)
        if xi is not None:
            return Witness(_transport(blocks.lift(xi), sym), F1)

    xi = _ribbon_witness(shape)
    if xi is not None:
        return Witness(xi, RIBBON)

    blocks = strip_maximal_blocks(shape)
    if blocks.steps:
        inner = detect_bad_config(blocks.reduced)
        if inner is not None:
            return Witness(blocks.lift(inner.xi), inner.reason)

    for sym in SYMMETRIES:
        image = apply_symmetry(shape, sym)
        iw, inn = profiles(image)
        rest = basic_form(residual_after(image, 1))
        if not rest.size:
            continue
        inner = detect_bad_config(rest)
        if inner is None:
            continue
        xi = union((inn[0],), inner.xi)
        if _in_interval(xi, iw, inn):
            return Witness(_transport(xi, sym), INDUCTION)
    return None


# -- ribbons ------------------------------------------------------------------------------


@dataclass(frozen=True)
class RibbonWitness:
    subset_s: frozenset[int]
    subset_b: frozenset[int]
    k: int
    xi: Partition


@dataclass(frozen=True)
class RibbonVerdict:
    full: bool
    witness: RibbonWitness | None = None


def ribbon_hypothesis_holds(r: RibbonComposition | Iterable[int]) -> bool:
    cols = r.cols if isinstance(r, RibbonComposition) else tuple(r)
    return len(cols) > 2 and all(c > 1 for c in cols[1:-1])


def ribbon_full_support(r: RibbonComposition | Iterable[int]) -> RibbonVerdict:
    """Decide full support for a column ribbon by searching all splits of the columns
    into S, B and a single k."""
    comp = r if isinstance(r, RibbonComposition) else RibbonComposition(tuple(r))
    if not ribbon_hypothesis_holds(comp):
        raise HypothesisViolated(f"{comp} needs more than two columns and interior columns longer than 1")
    cols = comp.cols
    s = len(cols)
    indices = range(1, s + 1)
    for k in indices:
        rest = [i for i in indices if i != k]
        for size in range(len(rest) + 1):
            for b in combinations(rest, size):
                chosen = [i for i in rest if i not in b]
                if not chosen:
                    continue
                p, vspace = ribbon_subdiagram_stats(comp, chosen)
                if p < 1:
                    continue
                r_k = cols[k - 1]
                if not all(cols[l - 1] >= r_k and cols[l - 1] >= vspace + 1 for l in b):
                    continue
                if r_k + p - 1 < vspace + 1:
                    continue
                xi = Partition(sorted([cols[l - 1] for l in b] + [r_k + p - 1, vspace + 1], reverse=True))
                return RibbonVerdict(False, RibbonWitness(frozenset(chosen), frozenset(b), k, xi))
    return RibbonVerdict(True)


def ribbon_deficit_support(r: RibbonComposition | Iterable[int]) -> RibbonVerdict:
    """Full-support test for column ribbons that also allows several long columns
    to share the spare boxes.

    The ribbon is not full iff some column set S with p = I(S) >= 1 and
    vertical space V leaves the other columns T needing at most p - 1 extra
    boxes in total to reach length V + 1.  With T = B + {k} and all the spare
    boxes on k this is :func:`ribbon_full_support`; the extra freedom covers
    compositions such as (5,2,2,2,2,5), where (6,6,6) is missing from the
    support although no single-column split exists.
    """
    comp = r if isinstance(r, RibbonComposition) else RibbonComposition(tuple(r))
    if not ribbon_hypothesis_holds(comp):
        raise HypothesisViolated(f"{comp} needs more than two columns and interior columns longer than 1")
    cols = comp.cols
    s = len(cols)
    for size in range(1, s):
        for chosen in combinations(range(1, s + 1), size):
            p, vspace = ribbon_subdiagram_stats(comp, chosen)
            if p < 1:
                continue
            others = [i for i in range(1, s + 1) if i not in chosen]
            lifts = {i: max(0, vspace + 1 - cols[i - 1]) for i in others}
            spare = p - 1 - sum(lifts.values())
            if spare < 0:
                continue
            k = min(others, key=lambda i: (cols[i - 1], i))
            lifts[k] += spare
            xi = Partition(sorted([cols[i - 1] + lifts[i] for i in others] + [vspace + 1], reverse=True))
            b = frozenset(others) - {k}
            return RibbonVerdict(False, RibbonWitness(frozenset(chosen), b, k, xi))
    return RibbonVerdict(True)


# -- products --------------------------------------------------------------------------


@dataclass(frozen=True)
class ProductVerdict:
    case: str | None
    full: bool
    mf: bool


def _is_row(p: Partition) -> bool:
    return len(p) == 1


def _is_column(p: Partition) -> bool:
    return bool(p) and p[0] == 1


def _hook_arms(p: Partition) -> tuple[int, int] | None:
    """``(first part, number of 1s below it)`` when ``p`` is a hook or a row."""
    if not p or any(q != 1 for q in p[1:]):
        return None
    return p[0], len(p) - 1


def _product_case(mu: Partition, nu: Partition) -> str | None:
    if not mu or not nu:
        return "a"
    if (_is_row(mu) and _is_row(nu)) or (_is_column(mu) and _is_column(nu)):
        return "b"
    for one, other in ((mu, nu), (nu, mu)):
        hook = _hook_arms(other)
        if _is_column(one) and hook is not None:
            x, (a, y) = len(one), hook
            if (a == 2 and 1 <= x <= y + 1) or (a >= 3 and x == 1):
                return "c"
        if _is_row(one) and hook is not None:
            x, (z, a) = one[0], hook
            if (a == 1 and 1 <= x <= z) or (a >= 2 and x == 1):
                return "c'"
    return None


def _near_equal_hooks(a: Partition, b: Partition) -> bool:
    """Both of the form ``(r, 1)`` with first parts at least 2 and differing by at most 1."""
    if len(a) != 2 or len(b) != 2 or a[1] != 1 or b[1] != 1:
        return False
    return min(a[0], b[0]) >= 2 and abs(a[0] - b[0]) <= 1


def product_full_interval(mu: Iterable[int], nu: Iterable[int]) -> ProductVerdict:
    """Whether every ``lambda`` in ``[mu | nu, mu + nu]`` has a positive coefficient.

    Cases ``a``..``c'`` are the multiplicity-free ones.  ``hook-pair`` collects
    the others: two hooks ``(r, 1)``, ``(s, 1)`` with ``|r - s| <= 1``, their
    conjugates, and the single pair ``(2, 1)``, ``(3, 1, 1)``.
    """
    a, b = Partition(mu), Partition(nu)
    mf = classify_product_mf(a, b).multiplicity_free
    case = _product_case(a, b)
    if case is not None:
        return ProductVerdict(case, True, mf)
    if _near_equal_hooks(a, b) or _near_equal_hooks(conjugate(a), conjugate(b)):
        return ProductVerdict("hook-pair", True, mf)
    if {a, b} == {Partition((2, 1)), Partition((3, 1, 1))}:
        return ProductVerdict("hook-pair", True, mf)
    return ProductVerdict(None, False, mf)


def product_shape(mu: Iterable[int], nu: Iterable[int]) -> SkewShape:
    """The disconnected shape whose skew Schur function is the product."""
    return direct_sum(make_skew(Partition(mu)), make_skew(Partition(nu)))


def _expansion(mu: Partition, nu: Partition, lams: Iterable[Iterable[int]]) -> SchurExpansion:
    terms: dict[Partition, int] = {}
    for lam in lams:
        parts = list(lam)
        if any(p < q for p, q in zip(parts, parts[1:])) or any(p < 0 for p in parts):
            continue
        terms[Partition(parts)] = 1
    ordered = {k: terms[k] for k in sorted(terms, reverse=True)}
    return SchurExpansion(product_shape(mu, nu), ordered)


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise OutOfRange(message)


def pieri_fixture_expansions(case: str, **params: int) -> SchurExpansion:
    """Closed-form product expansions with every coefficient 1.

    ``a``: ``nu`` given as a tuple in ``params['nu']`` times zero.
    ``b``: two columns ``1^x`` and ``1^y``, ``x >= y >= 1``.  ``b'`` is its conjugate.
    ``c``: ``1^x`` times ``(2, 1^y)`` with ``1 <= x <= y + 1``.
    ``c'``: ``(x)`` times ``(z, 1)`` with ``1 <= x <= z``.
    ``d``: ``(a, 1^y)`` times ``(1)`` with ``a >= 3, y >= 1``.
    ``d'``: ``(z, 1^a)`` times ``(1)`` with ``a >= 2, z >= 1``.
    """
    if case == "a":
        nu = Partition(params.get("nu", ()))
        return _expansion(Partition(), nu, [nu])
    if case in ("b", "b'"):
        x, y = params["x"], params["y"]
        _need(x >= y >= 1, "case b needs x >= y >= 1")
        if case == "b":
            lams = [[2] * (y - j) + [1] * (x - y + 2 * j) for j in range(y + 1)]
            return _expansion(Partition([1] * x), Partition([1] * y), lams)
        lams = [[x + y - j, j] for j in range(y + 1)]
        return _expansion(Partition([x]), Partition([y]), lams)
    if case == "c":
        x, y = params["x"], params["y"]
        _need(y >= 0 and 1 <= x <= y + 1, "case c needs 1 <= x <= y + 1")
        return _expansion(Partition([1] * x), Partition([2] + [1] * y), _case_c_terms(x, y))
    if case == "c'":
        x, z = params["x"], params["z"]
        _need(1 <= x <= z, "case c' needs 1 <= x <= z")
        lams = [conjugate(lam) for lam in _case_c_terms(x, z - 1)]
        return _expansion(Partition([x]), Partition([z, 1]), lams)
    if case == "d":
        a, y = params["a"], params["y"]
        _need(a >= 3 and y >= 1, "case d needs a >= 3 and y >= 1")
        lams = [[a] + [1] * (y + 1), [a, 2] + [1] * (y - 1), [a + 1] + [1] * y]
        return _expansion(Partition([a] + [1] * y), Partition([1]), lams)
    if case == "d'":
        a, z = params["a"], params["z"]
        _need(a >= 2 and z >= 1, "case d' needs a >= 2 and z >= 1")
        lams = [[z] + [1] * (a + 1), [z + 1] + [1] * a]
        if z >= 2:
            lams.append([z, 2] + [1] * (a - 1))
        return _expansion(Partition([z] + [1] * a), Partition([1]), lams)
    raise OutOfRange(f"unknown fixture case {case!r}")


def _case_c_terms(x: int, y: int) -> list[Partition]:
    k = y - x + 1
    raw = [[x + j + k, x - j + 1] for j in range(x + 1)]
    raw += [[x + j + k, x - j, 1] for j in range(x)]
    out = []
    for parts in raw:
        if all(p >= q for p, q in zip(parts, parts[1:])):
            out.append(conjugate(Partition(parts)))
    return out


def product_interval(mu: Iterable[int], nu: Iterable[int]) -> list[Partition]:
    """The dominance interval between the union and the sum of two partitions."""
    a, b = Partition(mu), Partition(nu)
    from .partition_core import add

    return dominance_interval(union(a, b), add(a, b))
