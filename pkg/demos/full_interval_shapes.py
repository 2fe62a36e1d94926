"""Recognise multiplicity-free shapes with full support, and certify the others.

For each shape we print the multiplicity-free cases that apply, the named
configuration it matches (if any), and otherwise a partition of the interval
that the support misses.

Run:  python demos/full_interval_shapes.py
"""

from skewschur.interval_classify import classify_mf, detect_bad_config, match_full_interval_config
from skewschur.lr_engine import interval_report
from skewschur.partition_core import format_partition
from skewschur.skew_shapes import basic_form, format_shape, make_skew

SHAPES = [
    ((4, 4, 3), (2,)),
    ((7, 7, 4), (6, 2)),
    ((4, 4, 4, 4, 3, 3), (3, 2, 1, 1, 1)),
    ((4, 3, 3, 3), (2, 1)),
    ((6, 5, 4, 4, 1), (4, 2, 1)),
    ((4, 3, 3), (3, 1, 1)),
]

for outer, inner in SHAPES:
    shape = basic_form(make_skew(outer, inner))
    mf = classify_mf(shape)
    match = match_full_interval_config(shape)
    print(format_shape(shape))
    print("  multiplicity-free cases:", ", ".join(sorted(mf.cases)) or "none")
    if match.matched:
        params = ", ".join(f"{k}={v}" for k, v in match.params.items())
        print(f"  full interval: {match.config} via {match.symmetry}" + (f" ({params})" if params else ""))
    else:
        witness = detect_bad_config(shape)
        missing = interval_report(shape).missing
        if witness is not None:
            print(f"  not full: {format_partition(witness.xi)} is missing ({witness.reason})")
        elif missing:
            print(f"  not full: {format_partition(missing[0])} is missing (found by enumeration)")
        else:
            print("  full support, but some coefficient exceeds 1")
    print()
