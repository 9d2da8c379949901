"""Matrix algebra over the small fields, exact minimum distance, property flags."""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import BudgetExceededError, FieldMismatchError, InvalidInputError, NotASubcodeError, RankError
from .galois import GF, field

DEFAULT_BUDGET = {2: 31, 3: 18, 4: 14, 5: 14}


def _tables(fld: GF):
    return (
        np.array(fld.add_table, dtype=np.uint8),
        np.array(fld.mul_table, dtype=np.uint8),
        np.array(fld.neg_table, dtype=np.uint8),
    )


class GenMatrix:
    """Row-major matrix over GF(q); rows are codewords, entries are field ints.

    The array is read-only after construction.  For GF(2) :attr:`packed` gives
    the rows as little-endian 64-bit words (column ``j`` is bit ``j % 64`` of
    word ``j // 64``).
    """

    def __init__(self, fld, rows, n: int | None = None):
        if isinstance(fld, int):
            fld = field(fld)
        arr = np.array(rows, dtype=np.uint8)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else np.zeros((0, n or 0), dtype=np.uint8)
        if arr.ndim != 2:
            raise InvalidInputError("generator matrix must be two-dimensional")
        if n is not None and arr.shape[1] != n:
            raise InvalidInputError(f"expected {n} columns, got {arr.shape[1]}")
        if arr.size and arr.max() >= fld.q:
            raise InvalidInputError(f"entries must lie in 0..{fld.q - 1}")
        arr.setflags(write=False)
        self.field = fld
        self.rows = arr
        self._rank = None

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def rank(self) -> int:
        if self._rank is None:
            self._rank = rref(self)[1]
        return self._rank

    @property
    def packed(self) -> np.ndarray:
        if self.q != 2:
            raise InvalidInputError("bit packing is only defined over GF(2)")
        return pack_gf2(self.rows)

    def __repr__(self):
        return f"GenMatrix(GF({self.q}), {self.k}x{self.n})"

    def __eq__(self, other):
        return isinstance(other, GenMatrix) and self.field == other.field and np.array_equal(self.rows, other.rows)

    __hash__ = None


def pack_gf2(rows: np.ndarray) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.uint8)
    k, n = rows.shape
    words = (n + 63) // 64
    padded = np.zeros((k, words * 64), dtype=np.uint8)
    padded[:, :n] = rows
    bits = padded.reshape(k, words, 64).astype(np.uint64)
    shifts = np.arange(64, dtype=np.uint64)
    return (bits << shifts).sum(axis=2, dtype=np.uint64)


def unpack_gf2(words: np.ndarray, n: int) -> np.ndarray:
    words = np.asarray(words, dtype=np.uint64)
    k = words.shape[0]
    shifts = np.arange(64, dtype=np.uint64)
    bits = (words[:, :, None] >> shifts) & np.uint64(1)
    return bits.reshape(k, -1)[:, :n].astype(np.uint8)


def _check_same(a: GenMatrix, b: GenMatrix):
    if a.field != b.field:
        raise FieldMismatchError(f"GF({a.q}) vs GF({b.q})")
    if a.n != b.n:
        raise InvalidInputError(f"length mismatch: {a.n} vs {b.n}")


def _rref_array(a: np.ndarray, fld: GF):
    add, mul, neg = _tables(fld)
    a = np.array(a, dtype=np.uint8, copy=True)
    nrows, ncols = a.shape
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = mul[fld.inv(lead)][a[r]]
        col = a[:, c].copy()
        col[r] = 0
        idx = np.flatnonzero(col)
        if idx.size:
            a[idx] = add[a[idx], mul[neg[col[idx]][:, None], a[r][None, :]]]
        pivots.append(c)
        r += 1
    return a, r, pivots


def rref(M: GenMatrix) -> tuple[GenMatrix, int]:
    """Reduced row echelon form and rank; zero rows are dropped."""
    a, r, _ = _rref_array(M.rows, M.field)
    out = GenMatrix(M.field, a[:r], n=M.n)
    out._rank = r
    return out, r


def pivots(M: GenMatrix) -> list[int]:
    return _rref_array(M.rows, M.field)[2]


def matmul(a: np.ndarray, b: np.ndarray, fld: GF) -> np.ndarray:
    """``a @ b`` over GF(q)."""
    if fld.prime:
        return ((a.astype(np.int64) @ b.astype(np.int64)) % fld.q).astype(np.uint8)
    a0, a1 = (a & 1).astype(np.int64), (a >> 1).astype(np.int64)
    b0, b1 = (b & 1).astype(np.int64), (b >> 1).astype(np.int64)
    c0 = (a0 @ b0 + a1 @ b1) % 2
    c1 = (a0 @ b1 + a1 @ b0 + a1 @ b1) % 2
    return (c0 | (c1 << 1)).astype(np.uint8)


def _stack(*ms: GenMatrix) -> GenMatrix:
    return GenMatrix(ms[0].field, np.vstack([m.rows for m in ms]), n=ms[0].n)


def _require_full_rank(G: GenMatrix):
    if G.rank != G.k:
        raise RankError(f"generator matrix has rank {G.rank} < {G.k} rows")


def right_kernel(a: np.ndarray, fld: GF) -> np.ndarray:
    """Basis (as rows) of ``{x : a x^T = 0}``."""
    a = np.asarray(a, dtype=np.uint8)
    ncols = a.shape[1]
    _, _, neg = _tables(fld)
    R, r, piv = _rref_array(a, fld)
    R = R[:r]
    pset = set(piv)
    free = [j for j in range(ncols) if j not in pset]
    out = np.zeros((len(free), ncols), dtype=np.uint8)
    for t, j in enumerate(free):
        out[t, j] = 1
        out[t, piv] = neg[R[:, j]]
    return out


def dual_basis(G: GenMatrix) -> GenMatrix:
    """Basis of the dual code: an (n-k) x n matrix H with ``G H^T = 0``."""
    _require_full_rank(G)
    return GenMatrix(G.field, right_kernel(G.rows, G.field), n=G.n)


def contains(G: GenMatrix, v) -> bool:
    """Is the vector ``v`` in the row space of ``G``?"""
    v = np.asarray(v, dtype=np.uint8).reshape(1, -1)
    if v.shape[1] != G.n:
        raise InvalidInputError("length mismatch")
    return rref(_stack(G, GenMatrix(G.field, v)))[1] == G.rank


def is_subspace(A: GenMatrix, B: GenMatrix) -> bool:
    """True iff every row of ``A`` lies in the row space of ``B``."""
    _check_same(A, B)
    if A.k == 0:
        return True
    return rref(_stack(B, A))[1] == B.rank


def extend_basis(G2: GenMatrix, G1: GenMatrix) -> GenMatrix:
    """Rows of ``G1`` that, stacked on ``G2``, span the row space of ``G1``."""
    _check_same(G2, G1)
    if not is_subspace(G2, G1):
        raise NotASubcodeError("row space of G2 is not contained in that of G1")
    base, r = rref(G2)
    picked = []
    cur = base.rows
    target = G1.rank
    for row in G1.rows:
        if r == target:
            break
        trial = np.vstack([cur, row[None, :]])
        _, r2, _ = _rref_array(trial, G1.field)
        if r2 > r:
            picked.append(row)
            cur = trial
            r = r2
    return GenMatrix(G1.field, np.array(picked, dtype=np.uint8).reshape(len(picked), G1.n), n=G1.n)


@dataclass(frozen=True)
class PropertyFlags:
    self_orthogonal: bool
    dual_containing: bool
    lcd: bool
    reversible: bool

    def names(self) -> list[str]:
        order = ("self_orthogonal", "dual_containing", "lcd", "reversible")
        return [name for name in order if getattr(self, name)]


def classify_properties(G: GenMatrix) -> PropertyFlags:
    _require_full_rank(G)
    fld = G.field
    gram = matmul(G.rows, G.rows.T, fld)
    self_orth = not gram.any()
    H = dual_basis(G)
    dual_cont = is_subspace(H, G)
    lcd = rref(GenMatrix(fld, gram))[1] == G.k
    rev = is_subspace(GenMatrix(fld, G.rows[:, ::-1]), G)
    return PropertyFlags(self_orth, dual_cont, lcd, rev)


class MinDistance(int):
    """An int carrying ``exact``: False when enumeration stopped early."""

    def __new__(cls, value: int, exact: bool = True):
        obj = super().__new__(cls, value)
        obj.exact = exact
        return obj

    def __repr__(self):
        return f"MinDistance({int(self)}, exact={self.exact})"


def default_threads() -> int:
    env = os.environ.get("QCFORGE_THREADS")
    return max(1, int(env)) if env else 1


def min_distance_exact(
    G: GenMatrix,
    early_exit: int | None = None,
    budget: int | None = None,
    threads: int | None = None,
    lower_bound: int | None = None,
    check: bool = False,
) -> MinDistance:
    """Minimum Hamming weight over all nonzero codewords.

    Enumerates every message (Gray-code order over GF(2), projective modular
    Gray order otherwise).  With ``early_exit`` set, the walk stops at the
    first word of weight <= early_exit and the result is flagged inexact.
    ``lower_bound`` is a proven bound: reaching it ends the walk and the
    result is still exact.
    """
    _require_full_rank(G)
    k = G.k
    if k == 0:
        return MinDistance(0)
    budget = DEFAULT_BUDGET[G.q] if budget is None else budget
    if k > budget:
        raise BudgetExceededError(f"dimension {k} exceeds enumeration budget {budget} for GF({G.q})")
    threads = default_threads() if threads is None else threads
    stop = -1
    if lower_bound is not None:
        stop = lower_bound
    if early_exit is not None:
        stop = max(stop, early_exit)
    if G.q == 2:
        value = _kernels.min_weight_gf2(G.packed, stop=stop, threads=threads, check=check)
    else:
        add, mul, neg = _tables(G.field)
        value = _kernels.min_weight_qary(G.rows, G.q, add, mul, neg, stop=stop, threads=threads)
    exact = True
    if early_exit is not None and value <= early_exit:
        exact = lower_bound is not None and value <= lower_bound
    return MinDistance(value, exact)


def codewords(G: GenMatrix) -> np.ndarray:
    """All q^k codewords as rows (small codes only)."""
    q, k = G.q, G.k
    if q ** k > 1 << 22:
        raise BudgetExceededError("too many codewords to list")
    msgs = np.array(np.unravel_index(np.arange(q ** k), (q,) * k)).T.astype(np.uint8).reshape(q ** k, k)
    return matmul(msgs, G.rows, G.field)


def weight_distribution(G: GenMatrix, max_words: int = 1 << 24) -> list[int]:
    """``A_w`` for w = 0..n by listing every codeword in chunks."""
    q, k, n = G.q, G.k, G.n
    if q ** k > max_words:
        raise BudgetExceededError(f"{q}^{k} codewords exceed the listing limit")
    counts = np.zeros(n + 1, dtype=np.int64)
    # split the message space: high digits enumerate chunks, low digits are tabulated
    low = min(k, 12 if q == 2 else 7)
    low_msgs = np.array(np.unravel_index(np.arange(q ** low), (q,) * low)).T.astype(np.uint8).reshape(q ** low, low)
    base = matmul(low_msgs, G.rows[k - low:], G.field) if low else np.zeros((1, n), dtype=np.uint8)
    add = np.array(G.field.add_table, dtype=np.uint8)
    high = k - low
    for idx in range(q ** high):
        digits = np.array(np.unravel_index(idx, (q,) * high), dtype=np.uint8).reshape(1, high) if high else None
        if high:
            prefix = matmul(digits, G.rows[:high], G.field)[0]
            words = add[base, prefix[None, :]]
        else:
            words = base
        counts += np.bincount((words != 0).sum(axis=1), minlength=n + 1)
    return [int(c) for c in counts]


def macwilliams(dual_weights: list[int], n: int, q: int) -> list[int]:
    """Weight distribution of a code from that of its dual (exact integer arithmetic)."""
    from math import comb

    size = sum(dual_weights)
    out = []
    for w in range(n + 1):
        total = 0
        for i, a in enumerate(dual_weights):
            if not a:
                continue
            # Krawtchouk polynomial K_w(i)
            kw = sum((-1) ** j * (q - 1) ** (w - j) * comb(i, j) * comb(n - i, w - j) for j in range(w + 1))
            total += a * kw
        if total % size:
            raise ArithmeticError("MacWilliams transform produced a non-integer count")
        out.append(total // size)
    return out
