"""Cyclic codes of a given length, partitioned up to multiplier equivalence.

A cyclic code of length ``n = n' * p^t`` over GF(q) (``p`` the characteristic)
is determined by a multiset of q-cyclotomic cosets mod ``n'``: each coset
stands for an irreducible factor of ``x^n' - 1`` and may be repeated up to
``p^t`` times.  Multipliers ``w -> a*w mod n'`` with ``gcd(a, n') = 1`` permute
the cosets; multisets in one orbit give permutation-equivalent codes, and one
canonical representative per orbit is kept.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import gcd

import numpy as np

from .errors import DivisibilityError, InvalidInputError
from .galois import (
    GF,
    Poly,
    coset_factors,
    cyclotomic_cosets,
    field,
    reduce_mod_xm1,
    split_characteristic,
)
from .linalg import (
    DEFAULT_BUDGET,
    GenMatrix,
    MinDistance,
    dual_basis,
    macwilliams,
    min_distance_exact,
    weight_distribution,
)

__all__ = [
    "CosetMultiset",
    "CyclicClass",
    "CyclicCode",
    "cyclotomic_cosets",
    "multiplier_image",
    "enumerate_class_reps",
    "cyclic_code_from_gen",
    "is_codeword",
    "multiplier_permutation",
    "bch_bound",
    "coordinate_multiplier",
    "lift_unit",
    "apply_multiplier",
    "multiset_of",
    "cyclic_distance",
]


@dataclass(frozen=True)
class CosetMultiset:
    """Multiplicities of the cyclotomic cosets mod ``n'``, in coset order."""

    q: int
    n_prime: int
    t: int
    mults: tuple[int, ...]

    def __post_init__(self):
        cosets = self.cosets
        if len(self.mults) != len(cosets):
            raise InvalidInputError("one multiplicity per coset required")
        cap = self.max_mult
        if any(m < 0 or m > cap for m in self.mults):
            raise InvalidInputError(f"multiplicities must lie in [0, {cap}]")

    @property
    def char(self) -> int:
        return field(self.q).char

    @property
    def max_mult(self) -> int:
        return self.char ** self.t

    @property
    def n(self) -> int:
        return self.n_prime * self.max_mult

    @property
    def cosets(self) -> list[tuple[int, ...]]:
        return cyclotomic_cosets(self.q, self.n_prime)

    @property
    def degree(self) -> int:
        return sum(len(c) * m for c, m in zip(self.cosets, self.mults))

    @property
    def entries(self) -> dict:
        return {c: m for c, m in zip(self.cosets, self.mults) if m}

    def is_zero_code(self) -> bool:
        return self.degree == self.n

    def generator(self) -> Poly:
        g = Poly.one(field(self.q))
        for (_, mp), m in zip(coset_factors(self.q, self.n_prime), self.mults):
            if m:
                g = g * mp ** m
        return g

    def __str__(self):
        parts = []
        for c, m in zip(self.cosets, self.mults):
            if m:
                s = "{" + ",".join(map(str, c)) + "}"
                parts.append(s if m == 1 else f"{s}^{m}")
        return " ".join(parts) if parts else "{}"


def _coset_index(q: int, n_prime: int) -> dict[int, int]:
    idx = {}
    for i, c in enumerate(cyclotomic_cosets(q, n_prime)):
        for w in c:
            idx[w] = i
    return idx


def _coset_permutation(q: int, n_prime: int, a: int) -> tuple[int, ...]:
    """``perm[i]`` is the index of the coset containing ``a * cosets[i]``."""
    idx = _coset_index(q, n_prime)
    return tuple(idx[(a * c[0]) % n_prime] for c in cyclotomic_cosets(q, n_prime))


def multiplier_image(ms: CosetMultiset, a: int) -> CosetMultiset:
    """Map every exponent ``w`` to ``a*w mod n'``; multiplicities travel with their coset."""
    if gcd(a, ms.n_prime) != 1:
        raise InvalidInputError(f"multiplier {a} is not a unit mod {ms.n_prime}")
    perm = _coset_permutation(ms.q, ms.n_prime, a % ms.n_prime)
    mults = [0] * len(ms.mults)
    for i, m in enumerate(ms.mults):
        mults[perm[i]] = m
    return CosetMultiset(ms.q, ms.n_prime, ms.t, tuple(mults))


def _multiplier_perms(q: int, n_prime: int) -> list[tuple[int, tuple[int, ...]]]:
    """One (a, coset permutation) per distinct permutation, smallest a first."""
    seen = {}
    for a in range(1, max(n_prime, 2)):
        if gcd(a, n_prime) != 1:
            continue
        perm = _coset_permutation(q, n_prime, a % n_prime)
        seen.setdefault(perm, a)
    if not seen:
        seen[(0,)] = 1
    return sorted(((a, p) for p, a in seen.items()))


@dataclass
class CyclicClass:
    """Canonical representative of one equivalence class of cyclic codes.

    ``members`` lists every multiset of the orbit with a multiplier ``a`` such
    that ``multiplier_image(multiset, a) == member``.
    """

    multiset: CosetMultiset
    generator: Poly
    check: Poly
    dim: int
    members: list[tuple[CosetMultiset, int]] = dc_field(default_factory=list)

    @property
    def n(self) -> int:
        return self.multiset.n

    @property
    def is_full_space(self) -> bool:
        return self.dim == self.n

    def code(self) -> "CyclicCode":
        return cyclic_code_from_gen(self.generator, self.n)


def enumerate_class_reps(fld, n: int, k_min: int | None = None, k_max: int | None = None) -> list[CyclicClass]:
    """One class per multiplier orbit of coset multisets (zero code excluded).

    Classes come back ordered by dimension (descending), then by multiplicity
    vector.  ``k_min``/``k_max`` filter by dimension before any polynomial is built.
    """
    fld = field(fld) if isinstance(fld, int) else fld
    if n < 1:
        raise InvalidInputError("n must be positive")
    q = fld.q
    n_prime, t = split_characteristic(n, fld.char)
    cosets = cyclotomic_cosets(q, n_prime)
    sizes = [len(c) for c in cosets]
    cap = fld.char ** t
    perms = _multiplier_perms(q, n_prime)
    k_min = 1 if k_min is None else k_min
    k_max = n if k_max is None else k_max
    orbits: dict[tuple, list[tuple[tuple, int]]] = {}
    for mults in itertools.product(range(cap + 1), repeat=len(cosets)):
        deg = sum(s * m for s, m in zip(sizes, mults))
        if deg == n:
            continue
        k = n - deg
        if k < k_min or k > k_max:
            continue
        best = None
        for a, perm in perms:
            img = [0] * len(mults)
            for i, m in enumerate(mults):
                img[perm[i]] = m
            img = tuple(img)
            if best is None or img < best:
                best = img
        # record how to reach this multiset from the canonical one
        orbits.setdefault(best, [])
        orbits[best].append(mults)
    classes = []
    for rep, mems in orbits.items():
        ms = CosetMultiset(q, n_prime, t, rep)
        g = ms.generator()
        h = Poly.x_n_minus_1(fld, n) // g
        members = []
        for mem in mems:
            target = CosetMultiset(q, n_prime, t, mem)
            a = next(a for a, _ in perms if multiplier_image(ms, a) == target)
            members.append((target, a))
        classes.append(CyclicClass(ms, g, h, n - g.degree, members))
    classes.sort(key=lambda c: (-c.dim, c.multiset.mults))
    return classes


@dataclass
class CyclicCode:
    field: GF
    m: int
    g: Poly
    h: Poly
    k: int
    _distance: MinDistance | None = None

    @cached_property
    def matrix(self) -> GenMatrix:
        """The k x m circulant generator matrix, row ``i`` = ``x^i g``."""
        return circulant(self.g, self.m, self.k)

    def distance(self, **kw) -> MinDistance:
        if self._distance is None:
            self._distance = min_distance_exact(self.matrix, **kw)
        return self._distance

    @property
    def n(self) -> int:
        return self.m


def circulant(p: Poly, m: int, rows: int) -> GenMatrix:
    """``rows`` x ``m`` matrix whose row i is ``x^i p mod x^m - 1``."""
    base = np.array(reduce_mod_xm1(p, m).coefficient_vector(m), dtype=np.uint8)
    out = np.empty((rows, m), dtype=np.uint8)
    for i in range(rows):
        out[i] = np.roll(base, i)
    return GenMatrix(p.field, out, n=m)


def cyclic_code_from_gen(g: Poly, m: int) -> CyclicCode:
    if m < 1:
        raise InvalidInputError("m must be positive")
    quo, rem = divmod(Poly.x_n_minus_1(g.field, m), g)
    if not rem.is_zero():
        raise DivisibilityError(f"g does not divide x^{m} - 1")
    g = g.monic()
    h = Poly.x_n_minus_1(g.field, m) // g
    return CyclicCode(g.field, m, g, h, m - g.degree)


def is_codeword(v, code: CyclicCode) -> bool:
    """``v(x) h(x) == 0 mod x^m - 1``."""
    v = list(v)
    if len(v) != code.m:
        raise InvalidInputError(f"expected length {code.m}, got {len(v)}")
    prod = reduce_mod_xm1(Poly(code.field, v) * code.h, code.m)
    return prod.is_zero()


def multiplier_permutation(n: int, a: int) -> np.ndarray:
    """Coordinate map ``i -> a*i mod n`` as an index array: ``out[a*i % n] = in[i]``."""
    if gcd(a, n) != 1:
        raise InvalidInputError(f"{a} is not a unit mod {n}")
    return (a * np.arange(n)) % n


def apply_multiplier(rows: np.ndarray, a: int) -> np.ndarray:
    rows = np.atleast_2d(rows)
    n = rows.shape[1]
    out = np.zeros_like(rows)
    out[:, multiplier_permutation(n, a)] = rows
    return out


def lift_unit(a: int, n_prime: int, n: int) -> int:
    """Smallest unit mod ``n`` congruent to ``a`` mod ``n'``."""
    for A in range(a % n_prime if n_prime > 1 else 1, n + 1, n_prime):
        if A and gcd(A, n) == 1:
            return A
    raise InvalidInputError(f"no unit mod {n} lifts {a} mod {n_prime}")


def coordinate_multiplier(a: int, n_prime: int, n: int) -> int:
    """Unit A mod n whose coordinate map ``i -> A*i`` sends a code with zeros Z to
    the code with zeros ``a*Z`` (so A lifts ``a^-1`` mod n')."""
    if n_prime == 1:
        return 1
    return lift_unit(pow(a, -1, n_prime), n_prime, n)


def bch_bound(ms: CosetMultiset) -> int:
    """BCH lower bound on the distance of the code of ``ms``.

    Uses the longest run of consecutive zeros ``b, b+s, ..., b+(r-1)s`` for any
    stride ``s`` coprime to n'.  Only valid for simple roots (t == 0); for
    repeated-root lengths this returns the trivial bound 1.
    """
    if ms.t > 0:
        return 1
    n = ms.n_prime
    zeros = set()
    for c, m in zip(ms.cosets, ms.mults):
        if m:
            zeros.update(c)
    if not zeros:
        return 1
    if len(zeros) == n:
        return n + 1
    best = 0
    for s in range(1, n):
        if gcd(s, n) != 1:
            continue
        for b in zeros:
            r = 0
            w = b
            while w in zeros and r < n:
                r += 1
                w = (w + s) % n
            best = max(best, r)
    return best + 1


def multiset_of(g: Poly, m: int) -> CosetMultiset:
    """The coset multiset whose generator is ``g`` (a monic divisor of x^m - 1)."""
    fld = g.field
    n_prime, t = split_characteristic(m, fld.char)
    rest = g.monic()
    mults = []
    for _, mp in coset_factors(fld.q, n_prime):
        c = 0
        while True:
            quo, rem = divmod(rest, mp)
            if not rem.is_zero():
                break
            rest, c = quo, c + 1
        mults.append(c)
    if not rest.is_one():
        raise DivisibilityError(f"g does not divide x^{m} - 1")
    return CosetMultiset(fld.q, n_prime, t, tuple(mults))


def cyclic_distance(code: CyclicCode, budget: int | None = None, threads: int | None = None,
                    max_dual_words: int = 1 << 22) -> tuple[int, bool]:
    """(distance, exact).  Enumerates the code within budget, else the dual
    through MacWilliams, else falls back to the BCH bound (exact=False)."""
    budget = DEFAULT_BUDGET[code.field.q] if budget is None else budget
    if code.k == 0:
        return 0, True
    if code.k <= budget:
        return int(code.distance(budget=budget, threads=threads)), True
    q = code.field.q
    if q ** (code.m - code.k) <= max_dual_words:
        if code.k == code.m:
            return 1, True
        weights = macwilliams(weight_distribution(dual_basis(code.matrix)), code.m, q)
        return next(w for w in range(1, code.m + 1) if weights[w]), True
    return bch_bound(multiset_of(code.g, code.m)), False
