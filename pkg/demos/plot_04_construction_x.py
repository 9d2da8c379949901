"""
Gluing a nested pair
====================

A QC code C2 sits inside the QC code C1 obtained by dropping a factor of
its generator.  Appending a short code to the extra rows lifts the distance.
"""

from qcforge.constructx import algorithm1, qc_supercodes
from qcforge.corpus import Resolver, load_catalog
from qcforge.qc import qc_distance

res = Resolver()
spec = res.spec(res.lookup("table7#0"))
print(spec.n, spec.k, qc_distance(spec))

for sup in qc_supercodes(spec, 1):
    print(sup.k, qc_distance(sup, budget=31))

glue = [c for c in load_catalog() if c.matrix.q == 2 and c.matrix.k == 1 and c.matrix.n <= 3]
for rec in algorithm1(spec, 1, glue, max_len=3):
    print(rec.params, rec.d_flag, rec.cx["c3"]["n"])
