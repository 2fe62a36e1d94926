"""Exhaustive cross-validation of the closed-form classifiers against brute force.

Each ``cross_validate_*`` function walks a finite universe, asks the closed-form
classifier and the tableau enumerator the same question, and returns a
:class:`ScanReport` listing every disagreement.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Iterator, Sequence

from .interval_classify import (
    classify_mf,
    classify_product_mf,
    detect_bad_config,
    match_full_interval_config,
    product_shape,
    ribbon_full_support,
    ribbon_hypothesis_holds,
)
from .lr_engine import interval_report, ribbon_lr_counts, schur_expansion
from .partition_core import Partition, conjugate, dominance_interval, partitions_of
from .skew_shapes import SkewShape, components, format_shape, has_2x2_block, profiles, ribbon_shape


def enumerate_basic_shapes(max_size: int, max_rows: int, max_cols: int) -> list[SkewShape]:
    """Every nonempty basic skew shape within the bounds, sorted by (size, outer, inner)."""
    found: list[SkewShape] = []

    def extend(outer: list[int], inner: list[int], size: int) -> None:
        if outer:
            shape = SkewShape(Partition(outer), Partition(inner))
            if shape.is_basic:
                found.append(shape)
        if len(outer) == max_rows:
            return
        top_outer = outer[-1] if outer else max_cols
        top_inner = inner[-1] if inner else max_cols
        for length in range(1, top_outer + 1):
            for offset in range(0, min(top_inner, length - 1) + 1):
                if size + length - offset <= max_size:
                    extend(outer + [length], inner + [offset], size + length - offset)

    extend([], [], 0)
    found.sort(key=lambda s: (s.size, tuple(s.outer), tuple(s.inner)))
    return found


@dataclass
class ScanReport:
    name: str
    bounds: dict[str, int]
    checked: int = 0
    disagreements: list[dict[str, Any]] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": 1,
            "scan": self.name,
            "bounds": self.bounds,
            "checked": self.checked,
            "disagreements": self.disagreements,
            "stats": dict(sorted(self.stats.items())),
            "elapsed_seconds": round(self.elapsed, 3),
        }

    def to_table(self) -> str:
        bounds = ", ".join(f"{k}={v}" for k, v in self.bounds.items())
        lines = [
            f"scan {self.name} ({bounds})",
            f"  {'checked':<24}{self.checked}",
            f"  {'disagreements':<24}{len(self.disagreements)}",
        ]
        for key, value in sorted(self.stats.items()):
            lines.append(f"  {key:<24}{value}")
        for item in self.disagreements[:20]:
            lines.append("  ! " + json.dumps(item, sort_keys=True))
        if len(self.disagreements) > 20:
            lines.append(f"  ... {len(self.disagreements) - 20} more")
        lines.append(f"  {'elapsed':<24}{self.elapsed:.2f}s")
        return "\n".join(lines)


def _bump(stats: dict[str, int], key: str) -> None:
    stats[key] = stats.get(key, 0) + 1


def _run(worker: Callable[[Any], dict[str, Any]], items: Sequence[Any], jobs: int) -> Iterator[dict[str, Any]]:
    if jobs <= 1 or len(items) < 2:
        yield from map(worker, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(worker, items, chunksize=max(1, len(items) // (8 * jobs)))


# -- main classification scan -------------------------------------------------------


def _main_worker(args: tuple[SkewShape, frozenset[str]]) -> dict[str, Any]:
    shape, disabled = args
    report = interval_report(shape)
    mf = report.expansion.is_multiplicity_free
    oracle = not report.missing and mf
    match = match_full_interval_config(shape)
    config = match.config
    if config in disabled:
        survivors = [m for m in match.all_matches if m[0] not in disabled]
        config = survivors[0][0] if survivors else None
    out: dict[str, Any] = {
        "shape": format_shape(shape),
        "oracle": oracle,
        "mf": mf,
        "full": not report.missing,
        "config": config,
    }
    if not report.missing:
        comps = components(shape)
        if len(comps) > 1 and any(has_2x2_block(c) for c in comps):
            out["non_ribbon_component"] = True
    else:
        witness = detect_bad_config(shape)
        if witness is not None:
            out["witness"] = witness.reason
            if witness.xi not in report.missing:
                out["bad_witness"] = str(witness.xi)
    return out


def cross_validate_main(
    max_size: int = 9,
    max_rows: int = 7,
    max_cols: int = 7,
    jobs: int = 1,
    disabled_configs: Iterable[str] = (),
) -> ScanReport:
    """Compare :func:`match_full_interval_config` with the enumerator.

    ``disabled_configs`` drops the named configurations from the matcher's
    verdict, which lets the tests confirm that the scan notices a missing one.
    Witnesses from :func:`detect_bad_config` are checked along the way, as is
    the rule that a disconnected shape with full support has ribbon components.
    """
    start = time.perf_counter()
    disabled = frozenset(disabled_configs)
    shapes = enumerate_basic_shapes(max_size, max_rows, max_cols)
    report = ScanReport("main", {"max_size": max_size, "max_rows": max_rows, "max_cols": max_cols})
    for row in _run(_main_worker, [(s, disabled) for s in shapes], jobs):
        report.checked += 1
        predicted = row["config"] is not None
        _bump(report.stats, f"config:{row['config']}")
        for key in ("mf", "full"):
            if row[key]:
                _bump(report.stats, f"oracle_{key}")
        if row["oracle"]:
            _bump(report.stats, "oracle_mf_and_full")
        if "witness" in row:
            _bump(report.stats, f"witness:{row['witness']}")
        if predicted != row["oracle"]:
            report.disagreements.append(
                {"shape": row["shape"], "oracle_full": row["oracle"], "config": row["config"]}
            )
        if "bad_witness" in row:
            report.disagreements.append({"shape": row["shape"], "witness_in_support": row["bad_witness"]})
        if "non_ribbon_component" in row:
            # A full support forces every component of a disconnected shape to be a ribbon.
            report.disagreements.append({"shape": row["shape"], "full_with_non_ribbon_component": True})
    report.elapsed = time.perf_counter() - start
    return report


# -- multiplicity-free scans ----------------------------------------------------------


def _mf_worker(shape: SkewShape) -> dict[str, Any]:
    oracle = schur_expansion(shape).is_multiplicity_free
    verdict = classify_mf(shape)
    return {"shape": format_shape(shape), "oracle": oracle, "cases": sorted(verdict.cases)}


def cross_validate_mf(max_size: int = 9, max_rows: int = 7, max_cols: int = 7, jobs: int = 1) -> ScanReport:
    start = time.perf_counter()
    shapes = enumerate_basic_shapes(max_size, max_rows, max_cols)
    report = ScanReport("mf", {"max_size": max_size, "max_rows": max_rows, "max_cols": max_cols})
    for row in _run(_mf_worker, shapes, jobs):
        report.checked += 1
        _bump(report.stats, "mf" if row["oracle"] else "not_mf")
        if bool(row["cases"]) != row["oracle"]:
            report.disagreements.append(
                {"shape": row["shape"], "oracle_mf": row["oracle"], "cases": row["cases"]}
            )
    report.elapsed = time.perf_counter() - start
    return report


def _partitions_up_to(max_size: int) -> list[Partition]:
    return [p for n in range(max_size + 1) for p in partitions_of(n)]


def _product_worker(pair: tuple[Partition, Partition]) -> dict[str, Any]:
    mu, nu = pair
    oracle = schur_expansion(product_shape(mu, nu)).is_multiplicity_free
    verdict = classify_product_mf(mu, nu)
    return {"mu": str(mu), "nu": str(nu), "oracle": oracle, "cases": sorted(verdict.cases)}


def cross_validate_product_mf(max_size: int = 6, jobs: int = 1) -> ScanReport:
    """All ordered pairs with ``|mu|, |nu| <= max_size`` (zero included)."""
    start = time.perf_counter()
    parts = _partitions_up_to(max_size)
    pairs = [(mu, nu) for mu in parts for nu in parts if mu and nu]
    report = ScanReport("product-mf", {"max_size": max_size})
    for mu in parts:
        # A zero factor makes the product a single Schur function.
        report.checked += 2 if mu else 1
        for _ in range(2 if mu else 1):
            _bump(report.stats, "mf")
        if not classify_product_mf(mu, ()).multiplicity_free:
            report.disagreements.append({"mu": str(mu), "nu": "[]", "oracle_mf": True, "cases": []})
    for row in _run(_product_worker, pairs, jobs):
        report.checked += 1
        _bump(report.stats, "mf" if row["oracle"] else "not_mf")
        if bool(row["cases"]) != row["oracle"]:
            report.disagreements.append(
                {"mu": row["mu"], "nu": row["nu"], "oracle_mf": row["oracle"], "cases": row["cases"]}
            )
    report.elapsed = time.perf_counter() - start
    return report


# -- ribbons ----------------------------------------------------------------------------


def ribbon_compositions(max_columns: int, max_length: int) -> list[tuple[int, ...]]:
    """Compositions meeting the ribbon hypothesis: 3..max_columns parts, each in 1..max_length."""
    out = []
    for s in range(3, max_columns + 1):
        for cols in product(range(1, max_length + 1), repeat=s):
            if ribbon_hypothesis_holds(cols):
                out.append(cols)
    return out


def _ribbon_worker(cols: tuple[int, ...]) -> dict[str, Any]:
    w, n = profiles(ribbon_shape(cols))
    support = {conjugate(nu) for nu in ribbon_lr_counts(cols)}
    missing = [xi for xi in dominance_interval(w, n) if xi not in support]
    verdict = ribbon_full_support(cols)
    out: dict[str, Any] = {"cols": list(cols), "oracle": not missing, "predicted": verdict.full}
    if verdict.witness is not None and verdict.witness.xi in support:
        out["bad_witness"] = str(verdict.witness.xi)
    return out


def cross_validate_ribbon(max_columns: int = 6, max_length: int = 5, jobs: int = 1) -> ScanReport:
    start = time.perf_counter()
    comps = ribbon_compositions(max_columns, max_length)
    report = ScanReport("ribbon", {"max_columns": max_columns, "max_length": max_length})
    for row in _run(_ribbon_worker, comps, jobs):
        report.checked += 1
        _bump(report.stats, "full" if row["oracle"] else "not_full")
        if row["oracle"] != row["predicted"] or "bad_witness" in row:
            report.disagreements.append(row)
    report.elapsed = time.perf_counter() - start
    return report


SCANS = {
    "main": cross_validate_main,
    "mf": cross_validate_mf,
    "product-mf": cross_validate_product_mf,
    "ribbon": cross_validate_ribbon,
}

