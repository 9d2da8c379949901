"""Shipped record files and rebuilding generator matrices from records.

Records may point at each other through tags (``{"ref": "table7#2"}`` inside a
Construction X triple, or ``"source": "table4#5"`` for a modification), so a
:class:`Resolver` indexes every loaded record by tag and memoizes the matrices
and distances it computes.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .codec import CodeRecord, decode_gen, decode_vector, load_records
from .constructx import CatalogCode, CXTriple, construction_x, modify
from .errors import InvalidInputError
from .galois import field
from .linalg import DEFAULT_BUDGET, GenMatrix, min_distance_exact
from .qc import DistanceResult, QCSpec, build_qc_matrix, qc_distance

CORPORA = ("tables1-3", "table7", "tables4-6", "c3-catalog")


def corpus_path(name: str) -> Path:
    if name not in CORPORA:
        raise InvalidInputError(f"unknown corpus {name!r}; expected one of {', '.join(CORPORA)}")
    return Path(str(resources.files("qcforge") / "data" / f"{name}.records"))


def load_corpus(name: str) -> list[CodeRecord]:
    return load_records(corpus_path(name))


def load_catalog(path=None) -> list[CatalogCode]:
    recs = load_corpus("c3-catalog") if path is None else load_records(path)
    return [CatalogCode.from_record(r) for r in recs if r.provenance == "catalog"]


def spec_from_fields(q: int, m: int, ell: int, g: str | None, fs: list[str]) -> QCSpec:
    comps = [decode_gen(s, q) for s in fs]
    if len(comps) != ell:
        raise InvalidInputError(f"expected {ell} generator strings, got {len(comps)}")
    if g is None:
        return QCSpec.from_components(comps, m)
    return QCSpec(field(q), m, ell, decode_gen(g, q), tuple(comps))


class Resolver:
    """Builds matrices and distance information for records, following tag references."""

    def __init__(self, records=(), budget: int | None = None, threads: int | None = None,
                 include_corpus: bool = True):
        self.budget = budget
        self.threads = threads
        self.by_tag: dict[str, CodeRecord] = {}
        if include_corpus:
            for name in CORPORA:
                try:
                    self.add(load_corpus(name))
                except FileNotFoundError:
                    pass
        self.add(records)
        self._matrix: dict[tuple, GenMatrix] = {}
        self._dist: dict[tuple, DistanceResult] = {}

    def add(self, records):
        for r in records:
            if r.tag:
                self.by_tag[r.tag] = r

    def _budget(self, q: int) -> int:
        return DEFAULT_BUDGET[q] if self.budget is None else self.budget

    def lookup(self, ref) -> CodeRecord:
        tag = ref["ref"] if isinstance(ref, dict) else ref
        try:
            return self.by_tag[tag]
        except KeyError:
            raise InvalidInputError(f"unknown record reference {tag!r}") from None

    def _component(self, q: int, part: dict) -> CodeRecord:
        """A Construction X component: a tag reference or an inline QC/catalog description."""
        if "ref" in part:
            return self.lookup(part)
        if "rows" not in part and "fs" not in part:
            raise InvalidInputError(f"component {part.get('params', part)} has no generators to rebuild from")
        if "rows" in part:
            return CodeRecord(q=q, n=part["n"], k=part["k"], d=part.get("d"), provenance="catalog",
                              rows=part["rows"], d_flag="exact")
        return CodeRecord(q=q, n=part["n"], k=part["k"], d=part.get("d"), provenance="qc",
                          m=part["m"], ell=part["ell"], g=part.get("g"), fs=part["fs"])

    def _source(self, rec: CodeRecord) -> CodeRecord:
        src = rec.modification.get("source")
        if isinstance(src, dict):
            return CodeRecord(**src)
        return self.lookup(src)

    def spec(self, rec: CodeRecord) -> QCSpec:
        if rec.provenance not in ("qc", "cyclic"):
            raise InvalidInputError(f"record {rec.tag or rec.params} does not have QC provenance")
        return spec_from_fields(rec.q, rec.m, rec.ell, rec.g, rec.fs)

    def cx_parts(self, rec: CodeRecord) -> tuple[CodeRecord, CodeRecord, CodeRecord]:
        cx = rec.cx or {}
        try:
            return tuple(self._component(rec.q, cx[key]) for key in ("c1", "c2", "c3"))
        except KeyError as exc:
            raise InvalidInputError(f"Construction X record lacks component {exc}") from None

    def matrix(self, rec: CodeRecord) -> GenMatrix:
        key = (rec.provenance, rec.m, rec.ell) + rec.key()
        if key in self._matrix:
            return self._matrix[key]
        if rec.provenance in ("qc", "cyclic"):
            G = build_qc_matrix(self.spec(rec), strict=False)
        elif rec.provenance == "catalog":
            G = GenMatrix(rec.q, [decode_vector(r, rec.q) for r in rec.rows], n=rec.n)
        elif rec.provenance == "constructx":
            c1, c2, c3 = (self.matrix(p) for p in self.cx_parts(rec))
            G = construction_x(CXTriple(c1, c2, c3))
        elif rec.provenance == "modification":
            mod = rec.modification or {}
            positions = [p - 1 for p in mod.get("positions", [])]
            G = modify(self.matrix(self._source(rec)), mod.get("method"), positions)
        else:
            raise InvalidInputError(f"cannot rebuild provenance {rec.provenance!r}")
        self._matrix[key] = G
        return G

    def distance(self, rec: CodeRecord) -> DistanceResult:
        """Exact distance within budget, else the best proven lower bound."""
        key = (rec.provenance, rec.m, rec.ell) + rec.key()
        if key in self._dist:
            return self._dist[key]
        G = self.matrix(rec)
        budget = self._budget(rec.q)
        if G.k <= budget:
            res = DistanceResult(int(min_distance_exact(G, budget=budget, threads=self.threads)),
                                 True, "enumeration")
        else:
            res = self._lower_bound(rec, G)
        self._dist[key] = res
        return res

    def _lower_bound(self, rec: CodeRecord, G: GenMatrix) -> DistanceResult:
        if rec.provenance == "qc":
            return qc_distance(self.spec(rec), budget=self._budget(rec.q), threads=self.threads, G=G)
        if rec.provenance == "catalog":
            return DistanceResult(rec.d or 1, False, "catalog value")
        if rec.provenance == "constructx":
            c1, c2, c3 = (self.distance(p) for p in self.cx_parts(rec))
            return DistanceResult(min(c2.value, c1.value + c3.value), False, "min(d2, d1 + d3)")
        if rec.provenance == "modification":
            mod = rec.modification
            src = self.distance(self._source(rec))
            method = mod.get("method")
            if method == "puncture":
                return DistanceResult(max(1, src.value - len(mod.get("positions", []))), False,
                                      "d(source) - punctured positions")
            value = src.value
            if method == "expurgate" and value % 2:
                value += 1
            return DistanceResult(value, False, f"d(source) under {method}")
        return DistanceResult(1, False, "trivial bound")
