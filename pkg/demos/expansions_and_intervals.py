"""Expand a few skew Schur functions and compare each support with its interval.

Run:  python demos/expansions_and_intervals.py
"""

from skewschur.lr_engine import interval_report, sigma_chain
from skewschur.partition_core import format_partition
from skewschur.skew_shapes import format_shape, make_skew


def show(outer, inner=()):
    shape = make_skew(outer, inner)
    report = interval_report(shape)
    terms = " + ".join(
        (f"{c} " if c > 1 else "") + f"s{format_partition(nu)}" for nu, c in report.expansion.sorted_terms()
    )
    print(f"s{format_shape(shape)} = {terms}")
    print(f"  interval from {format_partition(report.w)} to {format_partition(report.n)}: {len(report.interval)} partitions")
    if report.missing:
        print("  missing from the support: " + ", ".join(format_partition(p) for p in report.missing))
    else:
        print("  the support is the whole interval")
    print()


show((4, 4, 3), (2,))
show((4, 1, 1), (1,))
show((3, 2, 1), (2, 1))
show((4, 4, 4, 4, 3, 3), (3, 2, 1, 1, 1))

# A chain from the minimum to the maximum that stays inside the support.
shape = make_skew((5, 4, 4, 2, 2, 1, 1), (3, 3, 1))
print(f"chain for {format_shape(shape)}:")
print("  " + " < ".join(format_partition(p) for p in sigma_chain(shape)))
