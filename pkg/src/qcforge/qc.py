"""One-generator quasi-cyclic codes in ASR form ``(f_1 g, ..., f_l g)``."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .codec import CodeRecord, encode_gen, load_records
from .cyclic import CyclicCode, cyclic_code_from_gen, cyclic_distance, enumerate_class_reps
from .errors import BudgetExceededError, InvalidInputError, SpecError
from .galois import GF, Poly, field, poly_gcd, reduce_mod_xm1
from .linalg import DEFAULT_BUDGET, GenMatrix, classify_properties, min_distance_exact

log = logging.getLogger(__name__)

__all__ = [
    "CodeRecord",
    "QCSpec",
    "build_qc_matrix",
    "asr_sample",
    "asr_search",
    "theorem1_check",
    "SearchConfig",
    "DistanceResult",
    "qc_distance",
]


@dataclass(frozen=True)
class QCSpec:
    field: GF
    m: int
    ell: int
    g: Poly
    fs: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.fs) != self.ell:
            raise SpecError(f"expected {self.ell} f-polynomials, got {len(self.fs)}")
        object.__setattr__(self, "fs", tuple(self.fs))

    @classmethod
    def from_components(cls, components, m: int) -> "QCSpec":
        """Recover ``g`` and the ``f_i`` from a full generator tuple ``(a_1, ..., a_l)``.

        ``g = gcd(a_1, ..., a_l, x^m - 1)`` and ``f_i = (a_i / g) mod h``.
        """
        comps = [reduce_mod_xm1(a, m) for a in components]
        fld = comps[0].field
        xm1 = Poly.x_n_minus_1(fld, m)
        g = xm1
        for a in comps:
            g = poly_gcd(g, a)
        h = xm1 // g
        fs = tuple((a // g) % h for a in comps)
        return cls(fld, m, len(comps), g, fs)

    @property
    def n(self) -> int:
        return self.m * self.ell

    @property
    def h(self) -> Poly:
        return Poly.x_n_minus_1(self.field, self.m) // self.g

    @property
    def components(self) -> tuple[Poly, ...]:
        return tuple(reduce_mod_xm1(f * self.g, self.m) for f in self.fs)

    @property
    def k(self) -> int:
        """Dimension of the generated code, ``m - deg gcd(components, x^m - 1)``."""
        d = Poly.x_n_minus_1(self.field, self.m)
        for a in self.components:
            d = poly_gcd(d, a)
        return self.m - d.degree

    def violations(self) -> list[str]:
        """Reasons the ASR hypotheses fail (empty when they hold)."""
        out = []
        xm1 = Poly.x_n_minus_1(self.field, self.m)
        if self.g.is_zero() or not (xm1 % self.g).is_zero():
            return [f"g does not divide x^{self.m} - 1"]
        h = self.h
        for i, f in enumerate(self.fs):
            if f.is_zero() or not poly_gcd(f, h).is_one():
                out.append(f"gcd(f_{i + 1}, h) != 1")
            if not f.is_zero() and f.degree >= h.degree:
                out.append(f"deg f_{i + 1} >= deg h")
        return out

    def validate(self) -> "QCSpec":
        bad = self.violations()
        if bad:
            raise SpecError("; ".join(bad))
        return self

    def encoded(self) -> tuple[str, list[str]]:
        return encode_gen(self.g), [encode_gen(f) for f in self.fs]

    def cyclic_code(self) -> CyclicCode:
        return cyclic_code_from_gen(self.g, self.m)


def build_qc_matrix(spec: QCSpec, strict: bool = True) -> GenMatrix:
    """k x (m*l) generator matrix; row ``i`` concatenates ``x^i f_j g mod x^m - 1`` over j.

    With ``strict`` the ASR hypotheses are enforced; otherwise any generator
    tuple is accepted and ``k`` comes from the gcd of its components.
    """
    if strict:
        spec.validate()
    m, k = spec.m, spec.k
    rows = np.empty((k, spec.n), dtype=np.uint8)
    for j, comp in enumerate(spec.components):
        base = np.array(comp.coefficient_vector(m), dtype=np.uint8)
        for i in range(k):
            rows[i, j * m:(j + 1) * m] = np.roll(base, i)
    return GenMatrix(spec.field, rows, n=spec.n)


def _draw_unit(h: Poly, rng: np.random.Generator) -> Poly:
    fld = h.field
    dh = h.degree
    while True:
        f = Poly(fld, rng.integers(0, fld.q, size=dh).tolist())
        if not f.is_zero() and poly_gcd(f, h).is_one():
            return f


def asr_sample(code: CyclicCode, ell: int, rng_seed=None, rng: np.random.Generator | None = None) -> QCSpec:
    """Draw ``f_1..f_l`` uniformly among polynomials of degree < deg h coprime to h."""
    if ell < 1:
        raise InvalidInputError("ell must be positive")
    if code.k < 1:
        raise InvalidInputError("the cyclic code must have positive dimension")
    rng = np.random.default_rng(rng_seed) if rng is None else rng
    fs = tuple(_draw_unit(code.h, rng) for _ in range(ell))
    return QCSpec(code.field, code.m, ell, code.g, fs)


def theorem1_check(spec: QCSpec, d_cyclic: int, d_qc: int) -> bool:
    return d_qc >= spec.ell * d_cyclic


@dataclass(frozen=True)
class DistanceResult:
    """Exact distance, or a proven lower bound when ``exact`` is False."""

    value: int
    exact: bool
    method: str

    @property
    def flag(self) -> str:
        return "exact" if self.exact else "bound"


def qc_distance(spec: QCSpec, budget: int | None = None, threads: int | None = None,
                G: GenMatrix | None = None) -> DistanceResult:
    budget = DEFAULT_BUDGET[spec.field.q] if budget is None else budget
    G = build_qc_matrix(spec, strict=False) if G is None else G
    if G.k <= budget:
        return DistanceResult(int(min_distance_exact(G, budget=budget, threads=threads)), True, "enumeration")
    # every block lies in <g>, and blocks with gcd(f_i, h) = 1 vanish only on the zero word
    h = spec.h
    coprime = sum(1 for f in spec.fs if not f.is_zero() and poly_gcd(f, h).is_one())
    d_cyc, exact = cyclic_distance(spec.cyclic_code(), budget=budget, threads=threads)
    how = "d(cyclic)" if exact else "BCH bound"
    return DistanceResult(max(coprime, 1) * d_cyc, False, f"{max(coprime, 1)} * {how}")


# -- search ---------------------------------------------------------------

@dataclass
class SearchConfig:
    q: int = 2
    m_values: list[int] = dc_field(default_factory=list)
    ells: list[int] = dc_field(default_factory=lambda: [2])
    k_min: int | None = None
    k_max: int | None = None
    samples: int = 10_000
    seed: int = 0
    targets: dict | None = None
    threads: int = 1
    budget: int | None = None
    prune_slack: int | None = None

    @classmethod
    def from_file(cls, path) -> "SearchConfig":
        """Parse ``key = value`` lines (``#`` starts a comment)."""
        path = Path(path)
        raw = {}
        for lineno, line in enumerate(path.read_text().splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidInputError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            raw[key] = value
        return cls.from_mapping(raw, base=path.parent)

    @classmethod
    def from_mapping(cls, raw: dict, base=Path(".")) -> "SearchConfig":
        known = {"field", "m", "ell", "kmin", "kmax", "samples", "seed", "target_file",
                 "threads", "budget", "slack"}
        unknown = set(raw) - known
        if unknown:
            raise InvalidInputError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls()
        try:
            if "field" in raw:
                cfg.q = int(raw["field"])
                field(cfg.q)
            cfg.m_values = parse_int_list(raw.get("m", ""))
            if "ell" in raw:
                cfg.ells = parse_int_list(raw["ell"])
            cfg.k_min = int(raw["kmin"]) if "kmin" in raw else None
            cfg.k_max = int(raw["kmax"]) if "kmax" in raw else None
            cfg.samples = int(raw.get("samples", cfg.samples))
            cfg.seed = int(raw.get("seed", cfg.seed))
            cfg.threads = int(raw.get("threads", cfg.threads))
            cfg.budget = int(raw["budget"]) if "budget" in raw else None
            cfg.prune_slack = int(raw["slack"]) if "slack" in raw else None
        except ValueError as exc:
            raise InvalidInputError(f"bad config value: {exc}") from None
        if "target_file" in raw:
            p = Path(raw["target_file"])
            cfg.targets = targets_from_records(load_records(p if p.is_absolute() else base / p))
        return cfg


def parse_int_list(text: str) -> list[int]:
    """``"26"``, ``"20-24"`` or ``"26, 28, 30-32"``."""
    out = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def targets_from_records(records) -> dict:
    """Best claimed distance per (q, n, k)."""
    out = {}
    for r in records:
        if r.d is None:
            continue
        key = (r.q, r.n, r.k)
        out[key] = max(out.get(key, 0), r.d)
    return out


def default_targets() -> dict:
    from .corpus import load_corpus

    return targets_from_records(load_corpus("tables1-3"))


@dataclass
class SearchSummary:
    m: int
    classes: int = 0
    samples: int = 0
    records: int = 0


def _pair_seed(seed: int, m: int, class_index: int, ell: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([seed, m, class_index, ell])


def _search_pair(cfg: SearchConfig, m: int, ci: int, cls, ell: int, targets: dict, budget: int):
    """Samples for one (class, ell) pair; returns (records, samples drawn)."""
    q = cfg.q
    code = cls.code()
    k = code.k
    n = m * ell
    target = targets.get((q, n, k))
    d_cyc, d_cyc_exact = cyclic_distance(code, budget=budget, threads=1)
    if cfg.prune_slack is not None and target is not None and d_cyc_exact:
        if ell * d_cyc < target - cfg.prune_slack:
            return [], 0
    rng = np.random.default_rng(_pair_seed(cfg.seed, m, ci, ell))
    out = []
    best = 0 if target is None else target
    drawn = 0
    seen = set()
    for _ in range(cfg.samples):
        spec = asr_sample(code, ell, rng=rng)
        drawn += 1
        g_enc, fs_enc = spec.encoded()
        key = (g_enc, tuple(fs_enc))
        if key in seen:
            continue
        seen.add(key)
        G = build_qc_matrix(spec)
        if k > budget:
            lb = ell * d_cyc
            if target is not None and lb < target:
                continue
            d, flag, note = lb, "bound", "lower bound (dimension over budget)"
        else:
            stop = best - 1 if best > 0 else None
            d = min_distance_exact(G, early_exit=stop, budget=budget, threads=1)
            if not d.exact or d < best:
                continue
            if target is None:
                best = max(best, int(d))
            d, flag, note = int(d), "exact", None
        props = classify_properties(G).names()
        out.append(CodeRecord(
            q=q, n=n, k=k, d=d, d_flag=flag, properties=props, provenance="qc",
            m=m, ell=ell, g=g_enc, fs=fs_enc, seed=cfg.seed,
            timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"), note=note,
        ))
    return out, drawn


def asr_search(cfg: SearchConfig, summaries: list | None = None):
    """Yield :class:`CodeRecord` s meeting the distance target for each (class, ell) pair.

    Each pair draws from its own RNG seeded by ``(seed, m, class index, ell)``,
    so the record set does not depend on ``threads``.  With a target for
    ``(q, n, k)`` every sample reaching it is emitted; without one, a pair
    emits every sample matching its running best.
    Records are yielded in pair order and deduplicated by generator encoding.
    """
    targets = default_targets() if cfg.targets is None else cfg.targets
    budget = cfg.budget if cfg.budget is not None else DEFAULT_BUDGET[cfg.q]
    fld = field(cfg.q)
    emitted = set()
    for m in cfg.m_values:
        summary = SearchSummary(m)
        if summaries is not None:
            summaries.append(summary)
        if cfg.samples <= 0:
            continue
        k_max = m - 1 if cfg.k_max is None else min(cfg.k_max, m - 1)
        classes = enumerate_class_reps(fld, m, k_min=cfg.k_min, k_max=k_max)
        summary.classes = len(classes)
        jobs = [(ci, cls, ell) for ci, cls in enumerate(classes) for ell in cfg.ells]

        def run(job):
            ci, cls, ell = job
            return _search_pair(cfg, m, ci, cls, ell, targets, budget)

        if cfg.threads > 1:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                results = list(pool.map(run, jobs))
        else:
            results = map(run, jobs)
        for recs, drawn in results:
            summary.samples += drawn
            for rec in recs:
                key = rec.key()
                if key in emitted:
                    continue
                emitted.add(key)
                summary.records += 1
                yield rec


def record_to_spec(rec: CodeRecord) -> QCSpec:
    """QCSpec for a QC-provenance record (either g + fs or a full generator tuple)."""
    from .codec import decode_gen

    if rec.provenance != "qc":
        raise InvalidInputError(f"record {rec.params} does not have QC provenance")
    comps = [decode_gen(s, rec.q) for s in rec.fs]
    if rec.g is None:
        return QCSpec.from_components(comps, rec.m)
    g = decode_gen(rec.g, rec.q)
    return QCSpec(field(rec.q), rec.m, rec.ell, g, tuple(comps))
