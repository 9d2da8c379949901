from __future__ import annotations

import json

from qcforge.codec import CodeRecord
from qcforge.corpus import Resolver
from qcforge.verify import (
    BOUND_ONLY,
    CONFIRMED,
    MISMATCH,
    PARSE_ERROR,
    format_report,
    summary_line,
    verify_record,
    verify_records,
)


def _get(res, tag):
    return res.lookup(tag)


def test_outcomes_on_shipped_rows():
    res = Resolver()
    confirmed = verify_record(_get(res, "table2#3"), res)
    assert confirmed.outcome == CONFIRMED and confirmed.d == 36 and confirmed.d_exact
    bound = verify_record(_get(res, "table1#9"), res)
    assert bound.outcome == BOUND_ONLY and not bound.d_exact and bound.d <= 20
    # the printed distance is below the proven lower bound
    wrong = verify_record(_get(res, "table1#15"), res)
    assert wrong.outcome == MISMATCH and "lower bound" in wrong.problems[0]


def _hamming(**kw):
    base = dict(q=2, n=7, k=4, d=3, provenance="catalog",
                rows=["1101000", "0110100", "0011010", "0001101"], tag="ham")
    base.update(kw)
    return CodeRecord(**base)


def test_small_records():
    ok, = verify_records([_hamming()], resolver=Resolver(include_corpus=False))
    assert ok.outcome == CONFIRMED
    bad_d, = verify_records([_hamming(d=4)])
    assert bad_d.outcome == MISMATCH
    bad_k, = verify_records([_hamming(k=3)])
    assert bad_k.outcome == MISMATCH and any("dimension" in p for p in bad_k.problems)
    bad_prop, = verify_records([_hamming(properties=["self_orthogonal"])])
    assert bad_prop.outcome == MISMATCH
    # a claimed lower bound is met by the exact value
    lower, = verify_records([_hamming(d=2, d_flag="bound")])
    assert lower.outcome == CONFIRMED


def test_parse_error_and_report():
    rec = CodeRecord(q=2, n=14, k=3, d=6, provenance="constructx", cx={"c1": {"ref": "nope"}})
    out, = verify_records([rec])
    assert out.outcome == PARSE_ERROR
    ham, = verify_records([_hamming()])
    text = format_report([ham, out])
    assert text.splitlines()[-1] == summary_line([ham, out])
    assert "confirmed=1" in text and "parse-error=1" in text
    assert json.loads(out.to_json())["outcome"] == PARSE_ERROR
