from __future__ import annotations

import itertools
import logging

import numpy as np
import pytest

from qcforge.constructx import (
    CatalogCode,
    CXTriple,
    algorithm1,
    construction_x,
    degree_divisors,
    modify,
    qc_subcodes,
    qc_supercodes,
)
from qcforge.corpus import Resolver, load_catalog
from qcforge.cyclic import enumerate_class_reps
from qcforge.errors import InvalidInputError, RankError
from qcforge.galois import Poly, field
from qcforge.linalg import GenMatrix, is_subspace, min_distance_exact
from qcforge.qc import QCSpec, asr_sample, build_qc_matrix

F2 = field(2)


def P(*coeffs):
    return Poly(F2, list(coeffs))


def brute_distance(G):
    q = G.q
    best = G.n
    f = G.field
    for msg in itertools.product(range(q), repeat=G.k):
        if not any(msg):
            continue
        w = np.zeros(G.n, dtype=int)
        for c, row in zip(msg, G.rows):
            for j, v in enumerate(row):
                w[j] = f.add(int(w[j]), f.mul(c, int(v)))
        best = min(best, int(np.count_nonzero(w)))
    return best


# g = (1 + x)(1 + x + x^3), so the [14,3] code sits inside a [14,4] and a [14,6] QC code
SMALL = QCSpec(F2, 7, 2, P(1, 0, 1, 1, 1), (P(1), P(0, 1)))


def test_degree_divisors():
    g = SMALL.g
    assert degree_divisors(g, 1, 7) == [P(1, 1)]
    assert degree_divisors(g, 3, 7) == [P(1, 1, 0, 1)]
    assert degree_divisors(g, 0, 7) == [P(1)]
    assert degree_divisors(g, 2, 7) == []
    # a repeated factor gives one divisor per exponent
    sq = P(1, 1) ** 2
    assert degree_divisors(sq, 1, 14) == [P(1, 1)]
    with pytest.raises(InvalidInputError):
        degree_divisors(g, -1, 7)


def test_supercode_and_subcode_containment():
    (sup,) = qc_supercodes(SMALL, 1)
    assert sup.g == P(1, 1, 0, 1) and sup.k == 4
    (sup3,) = qc_supercodes(SMALL, 3)
    assert sup3.k == 6
    G = build_qc_matrix(SMALL)
    assert is_subspace(G, build_qc_matrix(sup))
    assert qc_supercodes(SMALL, 5) == []
    with pytest.raises(InvalidInputError):
        qc_supercodes(SMALL, 0)
    subs = qc_subcodes(sup, 1)
    assert subs and all(is_subspace(build_qc_matrix(s), build_qc_matrix(sup)) for s in subs)


@pytest.mark.parametrize("q,m", [(2, 15), (3, 8), (4, 5)])
def test_partners_are_nested(q, m):
    fld = field(q)
    for ci, cls in enumerate(enumerate_class_reps(fld, m)):
        if cls.is_full_space or cls.dim < 2:
            continue
        spec = asr_sample(cls.code(), 2, rng_seed=[q, m, ci])
        G = build_qc_matrix(spec)
        # partners keep the f_i, so they need not satisfy deg f_i < deg h
        for b in (1, 2):
            for sup in qc_supercodes(spec, b):
                assert sup.k == spec.k + b and is_subspace(G, build_qc_matrix(sup, strict=False))
            for sub in qc_subcodes(spec, b):
                assert sub.k == spec.k - b and is_subspace(build_qc_matrix(sub, strict=False), G)


def test_irreducible_divisor_gives_trivial_generator():
    spec = QCSpec(F2, 7, 2, P(1, 1, 0, 1), (P(1), P(1, 1)))
    (sup,) = qc_supercodes(spec, 3)
    assert sup.g == P(1) and sup.k == 7


def test_triple_validation():
    G1 = build_qc_matrix(qc_supercodes(SMALL, 1)[0])
    G2 = build_qc_matrix(SMALL)
    with pytest.raises(RankError):
        CXTriple(G2, G2, GenMatrix(2, [[1, 1]]))
    with pytest.raises(RankError):
        CXTriple(G1, G2, GenMatrix(2, [[1, 0], [0, 1]]))
    with pytest.raises(InvalidInputError):
        CXTriple(G1, GenMatrix(2, [[1] + [0] * 13]), GenMatrix(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))


def test_construction_x_bound_by_brute_force():
    G1 = build_qc_matrix(qc_supercodes(SMALL, 1)[0])
    G2 = build_qc_matrix(SMALL)
    d1, d2 = brute_distance(G1), brute_distance(G2)
    for glue in ([[1]], [[1, 1]], [[1, 1, 1]]):
        G3 = GenMatrix(2, glue)
        G = construction_x(CXTriple(G1, G2, G3))
        assert (G.n, G.rank) == (14 + G3.n, 4)
        d = brute_distance(G)
        assert min(d2, d1 + G3.n) <= d <= d2
        assert min_distance_exact(G) == d


def test_algorithm1_small():
    catalog = [CatalogCode(GenMatrix(2, [[1] * r]), r, f"rep{r}") for r in (1, 2, 3, 4)]
    recs = algorithm1(SMALL, 1, catalog, max_len=3)
    assert [r.n for r in recs] == [15, 16, 17]
    for rec in recs:
        assert rec.k == 4 and rec.d_flag == "exact"
        assert rec.cx["b"] == 1 and rec.cx["direction"] == "super"
    G1 = build_qc_matrix(qc_supercodes(SMALL, 1)[0])
    G2 = build_qc_matrix(SMALL)
    assert recs[0].cx["c1"]["d"] == brute_distance(G1)
    assert recs[0].cx["c2"]["d"] == brute_distance(G2)
    for rec, glue in zip(recs, catalog):
        assert rec.d == brute_distance(construction_x(CXTriple(G1, G2, glue.matrix)))
    down = algorithm1(qc_supercodes(SMALL, 1)[0], 1, catalog, max_len=2, direction="sub")
    assert down and all(r.k == 4 for r in down)
    assert algorithm1(SMALL, 2, catalog, max_len=3) == []
    with pytest.raises(InvalidInputError):
        algorithm1(SMALL, 1, catalog, 3, direction="sideways")


def test_algorithm1_over_budget_emits_bound():
    catalog = [CatalogCode(GenMatrix(2, [[1, 1]]), 2)]
    (rec,) = algorithm1(SMALL, 1, catalog, max_len=2, budget=3)
    assert rec.d_flag == "bound"
    assert rec.d <= brute_distance(construction_x(CXTriple(
        build_qc_matrix(qc_supercodes(SMALL, 1)[0]), build_qc_matrix(SMALL), catalog[0].matrix)))


def test_catalog_codes_are_exact():
    for c in load_catalog():
        assert c.matrix.rank == c.matrix.k
        if c.matrix.k <= 12:
            assert min_distance_exact(c.matrix) == c.d, c.tag


def test_table7_first_row_glued():
    res = Resolver()
    spec = res.spec(res.lookup("table7#0"))
    glue = [c for c in load_catalog() if c.matrix.q == 2 and c.matrix.k == 1 and c.matrix.n == 2]
    recs = algorithm1(spec, 1, glue, max_len=2)
    assert [(r.n, r.k, r.d) for r in recs] == [(98, 30, 26)]


REP5 = GenMatrix(2, [[1, 1, 1, 1, 1]])
HAM = GenMatrix(2, [[1, 1, 0, 1, 0, 0, 0], [0, 1, 1, 0, 1, 0, 0], [0, 0, 1, 1, 0, 1, 0], [0, 0, 0, 1, 1, 0, 1]])


def test_modify_repetition():
    short = modify(REP5, "shorten", [0])
    assert short.k == 0 and short.n == 4
    punct = modify(REP5, "puncture", [0, 1])
    assert punct.rows.tolist() == [[1, 1, 1]]


def test_modify_hamming():
    s = modify(HAM, "shorten", [6])
    assert (s.n, s.k, int(min_distance_exact(s))) == (6, 3, 3)
    p = modify(HAM, "puncture", [6])
    assert (p.n, p.k, int(min_distance_exact(p))) == (6, 4, 2)
    e = modify(HAM, "expurgate")
    assert (e.n, e.k, int(min_distance_exact(e))) == (7, 3, 4)
    assert not (e.rows.sum(axis=1) % 2).any()


def test_expurgate_even_code_is_unchanged(caplog):
    even = GenMatrix(2, [[1, 1, 0, 0], [0, 0, 1, 1]])
    with caplog.at_level(logging.WARNING):
        out = modify(even, "expurgate")
    assert out.k == 2 and "already even" in caplog.text


def test_modify_errors():
    with pytest.raises(InvalidInputError):
        modify(HAM, "shorten", [7])
    with pytest.raises(InvalidInputError):
        modify(HAM, "puncture", [])
    with pytest.raises(InvalidInputError):
        modify(HAM, "augment", [1])
    with pytest.raises(InvalidInputError):
        modify(GenMatrix(3, [[1, 2, 0]]), "expurgate")
