"""Rebuild records and compare measured parameters with the claimed ones."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field as dc_field

from .codec import CodeRecord
from .corpus import Resolver
from .errors import QCForgeError
from .linalg import classify_properties

CONFIRMED = "confirmed"
BOUND_ONLY = "bound-only"
MISMATCH = "parameter-mismatch"
PARSE_ERROR = "parse-error"


@dataclass
class VerifyOutcome:
    label: str
    claimed: str
    outcome: str
    n: int | None = None
    k: int | None = None
    d: int | None = None
    d_exact: bool = False
    d_method: str | None = None
    properties: list[str] = dc_field(default_factory=list)
    problems: list[str] = dc_field(default_factory=list)

    def line(self) -> str:
        if self.outcome == PARSE_ERROR:
            return f"{self.label:<16} {self.claimed:<18} {self.outcome}: {'; '.join(self.problems)}"
        dtxt = f"d={self.d}" if self.d_exact else f"d>={self.d}"
        props = ",".join(self.properties) or "-"
        text = f"{self.label:<16} {self.claimed:<18} {self.outcome:<18} n={self.n} k={self.k} {dtxt} [{props}]"
        if self.problems:
            text += "  " + "; ".join(self.problems)
        return text

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def verify_record(rec: CodeRecord, resolver: Resolver, label: str | None = None) -> VerifyOutcome:
    label = label or rec.tag or rec.params
    out = VerifyOutcome(label, rec.params, CONFIRMED)
    try:
        G = resolver.matrix(rec)
        k = G.rank
        out.n, out.k = G.n, k
        if G.n != rec.n:
            out.problems.append(f"length {G.n} != claimed {rec.n}")
        if k != rec.k:
            out.problems.append(f"dimension {k} != claimed {rec.k}")
        if k != G.k:
            from .linalg import rref

            G = rref(G)[0]
        dist = resolver.distance(rec)
        props = classify_properties(G).names() if k else []
    except (QCForgeError, ValueError, KeyError, TypeError) as exc:
        out.outcome = PARSE_ERROR
        out.problems.append(f"{type(exc).__name__}: {exc}")
        return out
    out.d, out.d_exact, out.d_method = dist.value, dist.exact, dist.method
    out.properties = props
    if rec.d is not None:
        lower_only = rec.d_flag == "bound"
        if dist.exact:
            bad = dist.value < rec.d if lower_only else dist.value != rec.d
            if bad:
                out.problems.append(f"distance {dist.value} != claimed {rec.d}")
        elif dist.value > rec.d and not lower_only:
            out.problems.append(f"lower bound {dist.value} exceeds claimed distance {rec.d}")
    missing = [p for p in rec.properties if p not in props]
    if missing:
        out.problems.append(f"claimed properties not satisfied: {','.join(missing)}")
    if out.problems:
        out.outcome = MISMATCH
    elif not dist.exact and rec.d is not None:
        out.outcome = BOUND_ONLY
    return out


def verify_records(records, budget: int | None = None, threads: int | None = None,
                   resolver: Resolver | None = None) -> list[VerifyOutcome]:
    resolver = resolver or Resolver(records, budget=budget, threads=threads)
    return [verify_record(r, resolver) for r in records]


def summarize(outcomes) -> Counter:
    return Counter(o.outcome for o in outcomes)


def summary_line(outcomes) -> str:
    counts = summarize(outcomes)
    return " ".join(f"{key}={counts.get(key, 0)}" for key in (CONFIRMED, BOUND_ONLY, MISMATCH, PARSE_ERROR))


def format_report(outcomes) -> str:
    return "\n".join([o.line() for o in outcomes] + [summary_line(outcomes)])
