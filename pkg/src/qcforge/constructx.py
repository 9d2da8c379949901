"""Construction X, QC sub/supercodes, and shorten/puncture/expurgate."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .codec import CodeRecord, encode_gen, encode_vector
from .errors import FieldMismatchError, InvalidInputError, RankError
from .galois import Poly, factor_divisor
from .linalg import (
    DEFAULT_BUDGET,
    GenMatrix,
    classify_properties,
    extend_basis,
    is_subspace,
    matmul,
    min_distance_exact,
    rref,
    right_kernel,
)
from .qc import DistanceResult, QCSpec, build_qc_matrix, qc_distance

log = logging.getLogger(__name__)

__all__ = [
    "CXTriple",
    "construction_x",
    "degree_divisors",
    "qc_supercodes",
    "qc_subcodes",
    "algorithm1",
    "modify",
    "CatalogCode",
]


@dataclass(frozen=True)
class CXTriple:
    """``C2 ⊂ C1`` of equal length with ``k1 - k2 = b``, and a glue code ``C3`` of dimension ``b``."""

    c1: GenMatrix
    c2: GenMatrix
    c3: GenMatrix

    def __post_init__(self):
        if not (self.c1.field == self.c2.field == self.c3.field):
            raise FieldMismatchError("Construction X codes must share a field")
        b = self.c1.rank - self.c2.rank
        if b < 1:
            raise RankError("C2 must be a proper subcode of C1 (b >= 1)")
        if self.c3.rank != b:
            raise RankError(f"C3 has dimension {self.c3.rank}, expected b = {b}")
        if not is_subspace(self.c2, self.c1):
            raise InvalidInputError("C2 is not contained in C1")

    @property
    def b(self) -> int:
        return self.c1.rank - self.c2.rank


def construction_x(t: CXTriple) -> GenMatrix:
    """The matrix ``[[G1*, G3], [G2, 0]]`` with ``G1*`` completing ``G2`` to a basis of ``C1``."""
    g2 = rref(t.c2)[0].rows
    g1s = extend_basis(t.c2, t.c1).rows
    g3 = rref(t.c3)[0].rows
    n3 = t.c3.n
    top = np.hstack([g1s, g3])
    bottom = np.hstack([g2, np.zeros((g2.shape[0], n3), dtype=np.uint8)])
    return GenMatrix(t.c1.field, np.vstack([top, bottom]), n=t.c1.n + n3)


def degree_divisors(p: Poly, b: int, m: int) -> list[Poly]:
    """Monic divisors of ``p`` (itself dividing x^m - 1) of degree exactly ``b``.

    Divisors are built from the factorization with multiplicities, so a
    repeated factor yields one divisor per exponent, not duplicates.
    """
    if b < 0:
        raise InvalidInputError("b must be non-negative")
    factors = factor_divisor(p, m)
    out = []
    for exps in itertools.product(*(range(k + 1) for _, k in factors)):
        if sum(f.degree * e for (f, _), e in zip(factors, exps)) != b:
            continue
        d = Poly.one(p.field)
        for (f, _), e in zip(factors, exps):
            if e:
                d = d * f ** e
        out.append(d)
    out.sort(key=encode_gen)
    return out


def _with_generator(spec: QCSpec, g: Poly) -> QCSpec:
    return QCSpec(spec.field, spec.m, spec.ell, g, spec.fs)


def qc_supercodes(spec: QCSpec, b: int) -> list[QCSpec]:
    """``(f_i g/p)`` for every degree-b divisor p of g whose code has dimension k + b."""
    if b < 1:
        raise InvalidInputError("b must be at least 1")
    k = spec.k
    out = []
    for p in degree_divisors(spec.g, b, spec.m):
        sup = _with_generator(spec, spec.g // p)
        if sup.k == k + b:
            out.append(sup)
    return out


def qc_subcodes(spec: QCSpec, b: int) -> list[QCSpec]:
    """``(f_i p g)`` for every degree-b divisor p of h whose code has dimension k - b."""
    if b < 1:
        raise InvalidInputError("b must be at least 1")
    k = spec.k
    out = []
    for p in degree_divisors(spec.h, b, spec.m):
        sub = _with_generator(spec, spec.g * p)
        if sub.k == k - b:
            out.append(sub)
    return out


@dataclass
class CatalogCode:
    """A small glue code from the C3 catalog."""

    matrix: GenMatrix
    d: int
    tag: str | None = None

    @property
    def params(self) -> str:
        return f"[{self.matrix.n},{self.matrix.k},{self.d}]_{self.matrix.q}"

    @classmethod
    def from_record(cls, rec: CodeRecord) -> "CatalogCode":
        from .codec import decode_vector

        G = GenMatrix(rec.q, [decode_vector(r, rec.q) for r in rec.rows], n=rec.n)
        return cls(G, rec.d, rec.tag)


def _spec_summary(spec: QCSpec, dist: DistanceResult) -> dict:
    g, fs = spec.encoded()
    return {"n": spec.n, "k": spec.k, "d": dist.value, "d_flag": dist.flag, "m": spec.m,
            "ell": spec.ell, "g": g, "fs": fs}


def algorithm1(
    spec: QCSpec,
    b: int,
    catalog: list[CatalogCode],
    max_len: int,
    direction: str = "super",
    budget: int | None = None,
    threads: int | None = None,
    compute_output: bool = True,
) -> list[CodeRecord]:
    """Construction X codes from a QC code and its best degree-b QC super/subcode.

    With ``direction="super"`` the original is C2 and the supercode C1; with
    ``"sub"`` the original is C1 and the subcode C2.  The partner code with the
    largest distance wins (ties go to the smaller encoding of its generator).
    Every catalog code of dimension b and length <= ``max_len`` is glued on.
    """
    if direction not in ("super", "sub"):
        raise InvalidInputError("direction must be 'super' or 'sub'")
    budget = DEFAULT_BUDGET[spec.field.q] if budget is None else budget
    # the generator tuple may not be in canonical ASR form; recover g by gcd
    spec = QCSpec.from_components(spec.components, spec.m)
    partners = qc_supercodes(spec, b) if direction == "super" else qc_subcodes(spec, b)
    if not partners:
        return []
    scored = []
    for p in partners:
        dist = qc_distance(p, budget=budget, threads=threads)
        scored.append((dist, p))
    # stable: degree_divisors already returns divisors in encoding order
    best_dist, best = max(scored, key=lambda s: (s[0].exact, s[0].value))
    orig_dist = qc_distance(spec, budget=budget, threads=threads)
    if direction == "super":
        (c1, d1), (c2, d2) = (best, best_dist), (spec, orig_dist)
    else:
        (c1, d1), (c2, d2) = (spec, orig_dist), (best, best_dist)
    G1 = build_qc_matrix(c1, strict=False)
    G2 = build_qc_matrix(c2, strict=False)
    out = []
    for c3 in catalog:
        G3 = c3.matrix
        if G3.k != b or G3.n > max_len or G3.field != spec.field:
            continue
        G = construction_x(CXTriple(G1, G2, G3))
        lower = min(d2.value, d1.value + c3.d) if d1.exact and d2.exact else None
        if compute_output and G.k <= budget:
            d = int(min_distance_exact(G, budget=budget, threads=threads, lower_bound=lower))
            flag, note = "exact", None
        else:
            # the sandwich bound only needs lower bounds on d1 and d2
            d = min(d2.value, d1.value + c3.d)
            flag, note = "bound", "lower bound min(d2, d1 + d3)"
        out.append(CodeRecord(
            q=spec.field.q, n=G.n, k=G.k, d=d, d_flag=flag,
            properties=classify_properties(G).names(), provenance="constructx",
            cx={"c1": _spec_summary(c1, d1), "c2": _spec_summary(c2, d2),
                "c3": {"n": G3.n, "k": G3.k, "d": c3.d,
                       "rows": [encode_vector(r, G3.q) for r in rref(G3)[0].rows]},
                "direction": direction, "b": b},
            note=note,
        ))
    return out


def modify(G: GenMatrix, method: str, positions=()) -> GenMatrix:
    """Shorten, puncture or expurgate.  ``positions`` are 0-indexed coordinates."""
    pos = sorted(set(int(p) for p in positions))
    if method in ("shorten", "puncture"):
        if not pos:
            raise InvalidInputError(f"{method} needs at least one position")
        bad = [p for p in pos if p < 0 or p >= G.n]
        if bad:
            raise InvalidInputError(f"positions out of range 1..{G.n}: {[p + 1 for p in bad]}")
    keep = [j for j in range(G.n) if j not in set(pos)]
    if method == "puncture":
        R, r = rref(GenMatrix(G.field, G.rows[:, keep], n=len(keep)))
        return R
    if method == "shorten":
        # messages whose codewords vanish on the positions
        K = right_kernel(G.rows[:, pos].T, G.field)
        sub = matmul(K, G.rows, G.field) if K.shape[0] else np.zeros((0, G.n), dtype=np.uint8)
        R, _ = rref(GenMatrix(G.field, sub[:, keep], n=len(keep)))
        return R
    if method == "expurgate":
        if G.q != 2:
            raise InvalidInputError("expurgation is defined over GF(2) only")
        rows = rref(G)[0].rows.copy()
        odd = np.flatnonzero(rows.sum(axis=1) % 2)
        if odd.size == 0:
            log.warning("code is already even-weight; expurgation leaves it unchanged")
            return GenMatrix(G.field, rows, n=G.n)
        pivot = rows[odd[0]].copy()
        rows[odd] ^= pivot
        rows = np.delete(rows, odd[0], axis=0)
        return rref(GenMatrix(G.field, rows, n=G.n))[0]
    raise InvalidInputError(f"unknown modification {method!r}")
