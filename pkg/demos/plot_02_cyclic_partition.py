"""
Classes of cyclic codes
=======================

Codes whose zero sets differ by a multiplier are equivalent, so a search
only needs one code per class.
"""

from qcforge.codec import encode_gen
from qcforge.cyclic import enumerate_class_reps
from qcforge.galois import cyclotomic_cosets, field

print(cyclotomic_cosets(2, 21))

classes = enumerate_class_reps(field(2), 21)
print(len(classes), "classes")
for c in classes[:8]:
    print(c.dim, encode_gen(c.generator), len(c.members))

# repeated roots: length 14 = 7 * 2, each coset can be taken twice
for c in enumerate_class_reps(field(2), 14, k_min=6, k_max=8):
    print(c.dim, c.multiset)
