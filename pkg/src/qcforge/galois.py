"""Arithmetic over GF(2), GF(3), GF(4), GF(5), their extensions, and polynomials.

Base-field elements are plain ints ``0..q-1``.  For GF(4) the int ``c0 + 2*c1``
stands for ``c0 + c1*a`` with ``a^2 = a + 1``; so ``2`` is ``a`` and ``3`` is
``b = a^2 = a + 1``.

Extension-field elements are tuples of base-field ints (ascending powers of the
adjoined root).  Polynomials are immutable :class:`Poly` values with ascending
coefficients over either kind of field.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from .errors import ClosureError, FieldMismatchError, InvalidInputError

NEG_INF = float("-inf")

SUPPORTED_ORDERS = (2, 3, 4, 5)


class GF:
    """One of the small fields GF(2), GF(3), GF(4), GF(5).

    Use :func:`field` to get the shared instance.
    """

    def __init__(self, q: int):
        if q not in SUPPORTED_ORDERS:
            raise InvalidInputError(f"unsupported field order q={q}")
        self.q = q
        self.char = 2 if q == 4 else q
        self.prime = q != 4
        self.zero = 0
        self.one = 1
        if self.prime:
            add = [[(a + b) % q for b in range(q)] for a in range(q)]
            mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            add = [[a ^ b for b in range(4)] for a in range(4)]
            mul = [[_gf4_mul(a, b) for b in range(4)] for a in range(4)]
        self.add_table = tuple(tuple(r) for r in add)
        self.mul_table = tuple(tuple(r) for r in mul)
        self.neg_table = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
        inv = [0] * q
        for a in range(1, q):
            inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
        self.inv_table = tuple(inv)

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[a]

    def elements(self):
        return range(self.q)

    def element(self, index: int):
        return index

    def index(self, a) -> int:
        return a

    def __eq__(self, other):
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"GF({self.q})"

    def __reduce__(self):
        return (field, (self.q,))


def _gf4_mul(a: int, b: int) -> int:
    a0, a1 = a & 1, a >> 1
    b0, b1 = b & 1, b >> 1
    c0 = (a0 & b0) ^ (a1 & b1)
    c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
    return c0 | (c1 << 1)


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


class ExtField:
    """GF(q^e) as ``base[y] / modulus(y)``.

    Elements are length-``e`` tuples of base elements.
    """

    def __init__(self, base: GF, modulus: "Poly"):
        if modulus.field != base:
            raise FieldMismatchError("modulus must be defined over the base field")
        if modulus.is_zero() or modulus.coeffs[-1] != base.one:
            raise InvalidInputError("modulus must be monic")
        self.base = base
        self.modulus = modulus
        self.e = modulus.degree
        self.q = base.q ** self.e
        self.char = base.char
        self.zero = (0,) * self.e
        self.one = (1,) + (0,) * (self.e - 1)
        # y^j mod modulus for j = e .. 2e-2, rows of the reduction matrix
        red = []
        cur = [base.neg(c) for c in modulus.coeffs[:-1]]  # y^e
        for _ in range(max(self.e - 1, 0)):
            red.append(list(cur))
            cur = self._times_y(cur)
        self._red = red
        if base.prime:
            self._red_np = np.array(red, dtype=np.int64).reshape(len(red), self.e)

    def _times_y(self, v):
        b = self.base
        top = v[-1]
        out = [0] + list(v[:-1])
        if top:
            for j, mj in enumerate(self.modulus.coeffs[:-1]):
                out[j] = b.sub(out[j], b.mul(top, mj))
        return out

    def add(self, a, b):
        t = self.base.add_table
        return tuple(t[x][y] for x, y in zip(a, b))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        n = self.base.neg_table
        return tuple(n[x] for x in a)

    def mul(self, a, b):
        e = self.e
        base = self.base
        if base.prime:
            p = base.q
            prod = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
            low = prod[:e]
            if e > 1:
                low = low + prod[e:] @ self._red_np
            return tuple(int(v) for v in low % p)
        prod = [0] * (2 * e - 1)
        mt, at = base.mul_table, base.add_table
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] = at[prod[i + j]][mt[ai][bj]]
        out = prod[:e]
        for d in range(e, 2 * e - 1):
            c = prod[d]
            if c:
                row = self._red[d - e]
                for j in range(e):
                    out[j] = at[out[j]][mt[c][row[j]]]
        return tuple(out)

    def pow(self, a, n: int):
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    def embed(self, c):
        return (c,) + (0,) * (self.e - 1)

    def is_base(self, a) -> bool:
        return all(c == 0 for c in a[1:])

    def element(self, index: int):
        out = []
        for _ in range(self.e):
            index, r = divmod(index, self.base.q)
            out.append(r)
        return tuple(out)

    def index(self, a) -> int:
        v = 0
        for c in reversed(a):
            v = v * self.base.q + c
        return v

    def elements(self):
        return (self.element(i) for i in range(self.q))

    def __eq__(self, other):
        return isinstance(other, ExtField) and other.base == self.base and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Ext", self.base, self.modulus.coeffs))

    def __repr__(self):
        return f"GF({self.base.q}^{self.e})"


class Poly:
    """Dense polynomial with ascending coefficients; ``coeffs[i]`` multiplies x^i."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fld, coeffs=()):
        zero = fld.zero
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, fld):
        return cls(fld, ())

    @classmethod
    def one(cls, fld):
        return cls(fld, (fld.one,))

    @classmethod
    def monomial(cls, fld, k: int, c=None):
        c = fld.one if c is None else c
        return cls(fld, (fld.zero,) * k + (c,))

    @classmethod
    def x_n_minus_1(cls, fld, n: int):
        return cls(fld, (fld.neg(fld.one),) + (fld.zero,) * (n - 1) + (fld.one,))

    # -- basic queries ------------------------------------------------
    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coefficient_vector(self, length: int) -> list:
        if len(self.coeffs) > length:
            raise InvalidInputError(f"degree {self.degree} does not fit in length {length}")
        return list(self.coeffs) + [self.field.zero] * (length - len(self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead)
        return self.scale(inv)

    def scale(self, c) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def __call__(self, x):
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def reverse(self, length: int | None = None) -> "Poly":
        length = len(self.coeffs) if length is None else length
        return Poly(self.field, list(reversed(self.coefficient_vector(length))))

    # -- arithmetic ---------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Poly(self.field, _mul_coeffs(self.field, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k: int):
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field!r}, {format_poly(self)})"


def _mul_coeffs(f, a, b):
    if not a or not b:
        return []
    if isinstance(f, GF) and f.prime and min(len(a), len(b)) > 24:
        prod = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % f.q
        return prod.tolist()
    out = [f.zero] * (len(a) + len(b) - 1)
    add, mul = f.add, f.mul
    zero = f.zero
    for i, x in enumerate(a):
        if x == zero:
            continue
        for j, y in enumerate(b):
            if y != zero:
                out[i + j] = add(out[i + j], mul(x, y))
    return out


def format_poly(p: Poly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == p.field.zero:
            continue
        if isinstance(p.field, GF) and p.field.q == 4:
            cs = "1ab"[c - 1] if c else "0"
        else:
            cs = str(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(cs)
        elif c == p.field.one:
            terms.append(mono)
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms)


def poly_divmod(a: Poly, b: Poly):
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    f = a.field
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) <= db:
        return Poly.zero(f), a
    inv = f.inv(b.lead)
    bc = b.coeffs
    quot = [f.zero] * (len(rem) - db)
    zero = f.zero
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == zero:
            continue
        c = f.mul(c, inv)
        quot[i - db] = c
        off = i - db
        for j, bj in enumerate(bc):
            if bj != zero:
                rem[off + j] = f.sub(rem[off + j], f.mul(c, bj))
    return Poly(f, quot), Poly(f, rem[:db])


def poly_mul_mod(a: Poly, b: Poly, m: int) -> Poly:
    """``a * b mod (x^m - 1)``."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    if m < 1:
        raise InvalidInputError("m must be positive")
    return reduce_mod_xm1(a * b, m)


def reduce_mod_xm1(a: Poly, m: int) -> Poly:
    f = a.field
    if len(a.coeffs) <= m:
        return a
    out = [f.zero] * m
    for i, c in enumerate(a.coeffs):
        out[i % m] = f.add(out[i % m], c)
    return Poly(f, out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    if a.is_zero() and b.is_zero():
        raise InvalidInputError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_pow_mod(a: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(a.field) % mod
    base = a % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def divides(d: Poly, a: Poly) -> bool:
    return (a % d).is_zero()


# -- number theory helpers ------------------------------------------------

def multiplicative_order(q: int, n: int) -> int:
    if gcd(q, n) != 1:
        raise InvalidInputError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    k, v = 1, q % n
    while v != 1:
        v = (v * q) % n
        k += 1
    return k


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def split_characteristic(n: int, p: int) -> tuple[int, int]:
    """Write ``n = n' * p^t`` with ``p`` not dividing ``n'``."""
    if n < 1:
        raise InvalidInputError("n must be positive")
    t = 0
    while n % p == 0:
        n //= p
        t += 1
    return n, t


def cyclotomic_cosets(q: int, n_prime: int) -> list[tuple[int, ...]]:
    """Orbits of ``{0..n'-1}`` under ``w -> q*w mod n'``, sorted by minimum element."""
    if n_prime < 1 or gcd(q, n_prime) != 1:
        raise InvalidInputError(f"need gcd(q, n') = 1, got q={q}, n'={n_prime}")
    seen = [False] * n_prime
    out = []
    for s in range(n_prime):
        if seen[s]:
            continue
        orbit = []
        w = s
        while not seen[w]:
            seen[w] = True
            orbit.append(w)
            w = (w * q) % n_prime
        out.append(tuple(sorted(orbit)))
    return out


# -- irreducibility and extension fields ---------------------------------

def is_irreducible(f: Poly) -> bool:
    """Rabin's test over a base field GF(q)."""
    fld = f.field
    e = f.degree
    if f.is_zero() or e < 1:
        return False
    if e == 1:
        return True
    f = f.monic()
    x = Poly.monomial(fld, 1)
    q = fld.q
    # x^(q^i) mod f for i = 1..e
    powers = [x % f]
    for _ in range(e):
        powers.append(poly_pow_mod(powers[-1], q, f))
    if powers[e] != x % f:
        return False
    for r in prime_factors(e):
        h = powers[e // r] - x
        if not poly_gcd(h, f).is_one():
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(q: int, e: int) -> Poly:
    """Monic irreducible of degree ``e`` whose lower coefficients have the smallest base-q index."""
    fld = field(q)
    for idx in range(q ** e):
        low = []
        v = idx
        for _ in range(e):
            v, r = divmod(v, q)
            low.append(r)
        cand = Poly(fld, low + [1])
        if is_irreducible(cand):
            return cand
    raise AssertionError("no irreducible found")  # unreachable for finite fields


@lru_cache(maxsize=None)
def extension_field(q: int, e: int) -> ExtField:
    return ExtField(field(q), smallest_irreducible(q, e))


def element_order(ext: ExtField, a) -> int:
    n = ext.q - 1
    if a == ext.zero:
        raise InvalidInputError("zero has no multiplicative order")
    order = n
    for r in prime_factors(n):
        while order % r == 0 and ext.pow(a, order // r) == ext.one:
            order //= r
    return order


def _order(q) -> int:
    return q.q if isinstance(q, GF) else int(q)


def primitive_root_of_unity(q, n_prime: int):
    """Return ``(ext, beta)`` with beta of multiplicative order exactly n' in GF(q^e).

    ``e`` is the multiplicative order of q mod n'.  ``q`` may be an int or a :class:`GF`.
    """
    return _primitive_root_of_unity(_order(q), n_prime)


@lru_cache(maxsize=None)
def _primitive_root_of_unity(q: int, n_prime: int):
    fld = field(q)
    if n_prime < 1 or gcd(n_prime, fld.char) != 1:
        raise InvalidInputError(f"n'={n_prime} must be coprime to the characteristic {fld.char}")
    e = multiplicative_order(q, n_prime)
    ext = extension_field(q, e)
    cof = (ext.q - 1) // n_prime
    primes = prime_factors(n_prime)
    for idx in range(1, ext.q):
        beta = ext.pow(ext.element(idx), cof)
        if all(ext.pow(beta, n_prime // r) != ext.one for r in primes):
            return ext, beta
    raise AssertionError("no primitive root found")  # unreachable


def minimal_poly(coset, beta, ext: ExtField) -> Poly:
    """``prod (x - beta^w)`` over ``w`` in ``coset``, returned over the base field."""
    x = Poly(ext, (ext.zero, ext.one))
    prod = Poly.one(ext)
    for w in coset:
        prod = prod * (x - Poly(ext, (ext.pow(beta, w),)))
    if not all(ext.is_base(c) for c in prod.coeffs):
        raise ClosureError(f"coset {tuple(coset)} is not closed under multiplication by q")
    return Poly(ext.base, [c[0] for c in prod.coeffs])


def coset_factors(q, n_prime: int) -> tuple:
    """``((coset, minimal polynomial), ...)`` for every q-cyclotomic coset mod n'."""
    return _coset_factors(_order(q), n_prime)


@lru_cache(maxsize=None)
def _coset_factors(q: int, n_prime: int) -> tuple:
    ext, beta = primitive_root_of_unity(q, n_prime)
    return tuple((c, minimal_poly(c, beta, ext)) for c in cyclotomic_cosets(q, n_prime))


def factor_xn_minus_1(q, n: int) -> tuple:
    """Irreducible factorization of ``x^n - 1`` over GF(q) as ``((factor, multiplicity), ...)``.

    Factors appear in coset order (by minimum exponent).
    """
    q = _order(q)
    fld = field(q)
    n_prime, t = split_characteristic(n, fld.char)
    mult = fld.char ** t
    return tuple((g, mult) for _, g in coset_factors(q, n_prime))


def factor_divisor(p: Poly, n: int) -> list[tuple[Poly, int]]:
    """Factor a divisor of ``x^n - 1`` using the irreducible factors of ``x^n - 1``."""
    if p.is_zero():
        raise InvalidInputError("cannot factor the zero polynomial")
    rest = p.monic()
    out = []
    for g, _ in factor_xn_minus_1(p.field.q, n):
        k = 0
        while True:
            quo, rem = divmod(rest, g)
            if not rem.is_zero():
                break
            rest = quo
            k += 1
        if k:
            out.append((g, k))
    if not rest.is_one():
        raise InvalidInputError("polynomial is not a divisor of x^n - 1")
    return out
