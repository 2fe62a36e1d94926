"""Column ribbons: the split criterion against brute force.

A column ribbon is given by its column lengths read right to left.  The
split criterion looks for columns S whose leftover space forces a missing
partition, with one column k absorbing the spare boxes.  Letting several
columns share those boxes gives a strictly stronger test; the composition
(5,2,2,2,2,5) shows why it is needed.

Run:  python demos/ribbons.py
"""

from skewschur.interval_classify import ribbon_deficit_support, ribbon_full_support
from skewschur.lr_engine import ribbon_lr_counts
from skewschur.partition_core import conjugate, dominance_interval, format_partition
from skewschur.skew_shapes import profiles, ribbon_shape


def missing(cols):
    w, n = profiles(ribbon_shape(cols))
    support = {conjugate(nu) for nu in ribbon_lr_counts(cols)}
    return [xi for xi in dominance_interval(w, n) if xi not in support]


for cols in [(6, 2, 2, 2, 2, 7, 6), (3, 2, 5, 2, 2, 7, 3), (4, 2, 1), (5, 2, 2, 2, 2, 5)]:
    split = ribbon_full_support(cols)
    deficit = ribbon_deficit_support(cols)
    gaps = missing(cols)
    print(f"ribbon {cols}")
    print(f"  enumeration: {'full' if not gaps else f'{len(gaps)} missing, e.g. ' + format_partition(gaps[0])}")
    for label, verdict in (("single spare column", split), ("shared spare boxes", deficit)):
        if verdict.full:
            print(f"  {label:<20} full")
        else:
            wit = verdict.witness
            print(
                f"  {label:<20} not full: S={sorted(wit.subset_s)} B={sorted(wit.subset_b)} "
                f"k={wit.k} xi={format_partition(wit.xi)}"
            )
    print()
