"""Products of two Schur functions whose support fills the interval.

Run:  python demos/products.py
"""

from skewschur.interval_classify import pieri_fixture_expansions, product_full_interval
from skewschur.partition_core import format_partition

PAIRS = [((), (3, 1)), ((2,), (3,)), ((1, 1), (2, 1, 1)), ((2,), (3, 1)), ((3, 1), (4, 1)), ((2, 1), (3, 1, 1)), ((2, 2), (2, 1))]

for mu, nu in PAIRS:
    verdict = product_full_interval(mu, nu)
    label = f"case {verdict.case}" if verdict.full else "not full"
    mf = "multiplicity-free" if verdict.mf else "has a coefficient above 1"
    print(f"s{format_partition(mu)} s{format_partition(nu)}: {label}, {mf}")

print()
fixture = pieri_fixture_expansions("c", x=2, y=2)
print("s[1,1] s[2,1,1] = " + " + ".join(f"s{format_partition(nu)}" for nu in fixture.terms))
