"""Compact generator strings and the line-delimited record format.

Generator strings are read left to right in ascending powers of x.  Over GF(2)
each octal digit carries three coefficients, low bit first: the digit D stands
for ``(c0, c1, c2)`` with ``D = c0 + 2*c1 + 4*c2``.  So ``1 + x^2 + x^3 + x^4``
(coefficients ``10111``, padded to ``101110``) is written ``"53"``.  GF(3)
strings use base-9 digits carrying two coefficients each (``D = c0 + 3*c1``);
GF(4) strings spell one coefficient per character from ``0, 1, a, b`` with
``b = a^2 = a + 1``; GF(5) strings use one digit per coefficient.

Record files hold one JSON object per line after a version header.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field as dc_field
from pathlib import Path

from .errors import InvalidInputError, RecordFormatError
from .galois import Poly, field

log = logging.getLogger(__name__)

HEADER = "# qcforge-records v1"

_GF4_CHARS = {"0": 0, "1": 1, "a": 2, "b": 3}
_GF4_SYMBOLS = "01ab"


def _block(q: int) -> tuple[int, int]:
    """(coefficients per digit, digit radix)."""
    return {2: (3, 8), 3: (2, 9), 4: (1, 4), 5: (1, 5)}[q]


def decode_gen(s: str, q: int) -> Poly:
    fld = field(q)
    s = s.strip()
    if not s:
        raise InvalidInputError("empty generator string")
    coeffs = []
    if q == 4:
        for ch in s:
            if ch not in _GF4_CHARS:
                raise InvalidInputError(f"invalid GF(4) symbol {ch!r} in {s!r}")
            coeffs.append(_GF4_CHARS[ch])
        return Poly(fld, coeffs)
    per, radix = _block(q)
    for ch in s:
        if not ch.isdigit() or int(ch) >= radix:
            raise InvalidInputError(f"invalid digit {ch!r} for GF({q}) in {s!r}")
        d = int(ch)
        for _ in range(per):
            d, c = divmod(d, q)
            coeffs.append(c)
    return Poly(fld, coeffs)


def encode_gen(p: Poly) -> str:
    q = p.field.q
    if p.is_zero():
        return "0"
    coeffs = list(p.coeffs)
    if q == 4:
        return "".join(_GF4_SYMBOLS[c] for c in coeffs)
    per, _ = _block(q)
    coeffs += [0] * (-len(coeffs) % per)
    digits = []
    for i in range(0, len(coeffs), per):
        d = 0
        for c in reversed(coeffs[i:i + per]):
            d = d * q + c
        digits.append(str(d))
    return "".join(digits)


def encode_vector(v, q: int) -> str:
    """One symbol per coordinate (used for catalog generator rows)."""
    if q == 4:
        return "".join(_GF4_SYMBOLS[int(c)] for c in v)
    return "".join(str(int(c)) for c in v)


def decode_vector(s: str, q: int) -> list[int]:
    if q == 4:
        try:
            return [_GF4_CHARS[ch] for ch in s]
        except KeyError as exc:
            raise InvalidInputError(f"invalid GF(4) symbol in {s!r}") from exc
    out = [int(ch) for ch in s]
    if any(c >= q for c in out):
        raise InvalidInputError(f"symbol out of range for GF({q}) in {s!r}")
    return out


@dataclass
class CodeRecord:
    """One code: parameters, properties and how it was obtained.

    ``d_flag`` is ``"exact"``, ``"bound"`` (d is only an upper bound from an
    early exit, or a lower bound when ``note`` says so) or ``"claimed"``
    (a literature value not yet verified).  For QC provenance, ``g`` is the
    encoded generator and ``fs`` the encoded f-polynomials; ``g is None``
    means ``fs`` already lists the full generator tuple ``(f_1 g, ..., f_l g)``.
    """

    q: int
    n: int
    k: int
    d: int | None
    d_flag: str = "claimed"
    properties: list[str] = dc_field(default_factory=list)
    provenance: str = "qc"
    m: int | None = None
    ell: int | None = None
    g: str | None = None
    fs: list[str] = dc_field(default_factory=list)
    cx: dict | None = None
    modification: dict | None = None
    rows: list[str] | None = None
    seed: int | None = None
    timestamp: str | None = None
    tag: str | None = None
    note: str | None = None

    @property
    def params(self) -> str:
        d = "?" if self.d is None else self.d
        return f"[{self.n},{self.k},{d}]_{self.q}"

    def key(self) -> tuple:
        return (self.q, self.n, self.k, self.g, tuple(self.fs), tuple(self.rows or ()),
                json.dumps(self.cx, sort_keys=True), json.dumps(self.modification, sort_keys=True))

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


_REQUIRED = {"q": int, "n": int, "k": int}
_KINDS = {"qc", "constructx", "modification", "catalog", "cyclic"}
_FLAGS = {"exact", "bound", "claimed"}


def _parse_record(text: str, lineno: int) -> CodeRecord:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecordFormatError(f"invalid JSON: {exc.msg}", lineno) from None
    if not isinstance(obj, dict):
        raise RecordFormatError("record must be a JSON object", lineno)
    for key, typ in _REQUIRED.items():
        if not isinstance(obj.get(key), typ):
            raise RecordFormatError(f"missing or non-integer field {key!r}", lineno)
    known = set(CodeRecord.__dataclass_fields__)
    extra = set(obj) - known
    if extra:
        raise RecordFormatError(f"unknown fields {sorted(extra)}", lineno)
    try:
        rec = CodeRecord(**obj)
    except TypeError as exc:
        raise RecordFormatError(str(exc), lineno) from None
    if rec.q not in (2, 3, 4, 5):
        raise RecordFormatError(f"unsupported q={rec.q}", lineno)
    if rec.provenance not in _KINDS:
        raise RecordFormatError(f"unknown provenance {rec.provenance!r}", lineno)
    if rec.d_flag not in _FLAGS:
        raise RecordFormatError(f"unknown d_flag {rec.d_flag!r}", lineno)
    if rec.provenance == "qc":
        if not rec.fs or rec.ell != len(rec.fs) or rec.m is None or rec.m * rec.ell != rec.n:
            raise RecordFormatError("QC record needs fs, ell = len(fs) and n = m * ell", lineno)
    if rec.provenance == "catalog" and (not rec.rows or any(len(r) != rec.n for r in rec.rows)):
        raise RecordFormatError("catalog record needs rows of length n", lineno)
    return rec


def load_records(path) -> list[CodeRecord]:
    """Read a record file; malformed lines raise :class:`RecordFormatError` with the line number.

    Duplicate records (same q, n, k and generators) are skipped with a log notice.
    """
    path = Path(path)
    text = path.read_text()
    out = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            if lineno == 1 and line.strip() != HEADER:
                raise RecordFormatError(f"unsupported header {line.strip()!r}", lineno)
            continue
        rec = _parse_record(line, lineno)
        key = rec.key()
        if key in seen:
            log.info("%s:%d duplicate record %s skipped", path, lineno, rec.params)
            continue
        seen.add(key)
        out.append(rec)
    return out


def persist_records(records, path) -> int:
    """Append records to ``path`` (creating it with a header); returns the number written.

    Records whose key is already present in the file are skipped.
    """
    path = Path(path)
    existing = set()
    if path.exists() and path.stat().st_size:
        existing = {r.key() for r in load_records(path)}
        fresh = False
    else:
        fresh = True
    written = 0
    with path.open("a") as fh:
        if fresh:
            fh.write(HEADER + "\n")
        for rec in records:
            key = rec.key()
            if key in existing:
                log.info("duplicate record %s not written", rec.params)
                continue
            existing.add(key)
            fh.write(rec.to_json() + "\n")
            written += 1
    return written
