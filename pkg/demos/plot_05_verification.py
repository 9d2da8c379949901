"""
Checking published parameters
=============================

Rebuild a few tabulated codes and compare n, k, d and properties.
Large dimensions only get a lower bound.
"""

from qcforge.corpus import Resolver, load_corpus
from qcforge.verify import format_report, verify_record

res = Resolver()
rows = [r for r in load_corpus("tables1-3") if r.k <= 20]
outcomes = [verify_record(r, res) for r in rows]
print(format_report(outcomes))

# over budget: the distance becomes (#blocks) * d(cyclic)
big = res.lookup("table1#9")
print(verify_record(big, res).line())

# a row whose printed distance is below what the generators guarantee
print(verify_record(res.lookup("table1#15"), res).line())
