"""
Compact generator strings
=========================

Generators are stored as short digit strings, lowest powers first.
"""

from qcforge.codec import decode_gen, encode_gen
from qcforge.galois import Poly, field, format_poly

# binary: each octal digit carries three coefficients
g = decode_gen("53", 2)
print(format_poly(g))
print(g.coefficient_vector(6))

# ternary packs two coefficients per base-9 digit
print(format_poly(decode_gen("48", 3)))

# GF(4) uses 0, 1, a, b with a^2 = a + 1
p = Poly(field(4), [1, 2, 3])
print(encode_gen(p), "->", format_poly(p))

# round trip over GF(5), one digit per coefficient
s = encode_gen(Poly(field(5), [0, 1, 4, 2]))
print(s, decode_gen(s, 5) == Poly(field(5), [0, 1, 4, 2]))
