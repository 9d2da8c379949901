"""``qcforge`` command line.

Exit codes: 0 success, 1 a parameter mismatch was found, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from . import __version__
from .codec import CodeRecord, decode_gen, decode_vector, encode_gen, encode_vector, load_records, persist_records
from .constructx import algorithm1, modify
from .corpus import Resolver, load_catalog, load_corpus
from .cyclic import enumerate_class_reps
from .errors import QCForgeError
from .galois import Poly, cyclotomic_cosets, field, format_poly, split_characteristic
from .linalg import classify_properties, default_threads, is_subspace
from .qc import SearchConfig, asr_search
from .verify import MISMATCH, summarize, summary_line, verify_record

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field_arg(text: str) -> int:
    q = int(text)
    if q not in (2, 3, 4, 5):
        raise argparse.ArgumentTypeError("q must be 2, 3, 4 or 5")
    return q


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positions(text: str) -> list[int]:
    from .qc import parse_int_list

    try:
        return parse_int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad position list {text!r}") from None


def _threads(args) -> int:
    return args.threads if args.threads is not None else default_threads()


def _pick(records, tag: str | None, index: int | None) -> CodeRecord:
    if tag is not None:
        for r in records:
            if r.tag == tag:
                return r
        raise UsageError(f"no record tagged {tag!r}")
    index = 1 if index is None else index
    if not 1 <= index <= len(records):
        raise UsageError(f"record index {index} out of range 1..{len(records)}")
    return records[index - 1]


def _load(path: str) -> list[CodeRecord]:
    """A record file path, or the name of a shipped corpus."""
    p = Path(path)
    if not p.exists() and path in ("tables1-3", "table7", "tables4-6", "c3-catalog"):
        return load_corpus(path)
    return load_records(p)


def _emit(records, out: str | None):
    for r in records:
        print(r.to_json())
    if out:
        n = persist_records(records, out)
        print(f"{n} record(s) appended to {out}", file=sys.stderr)


# -- commands ---------------------------------------------------------------

def cmd_cosets(args) -> int:
    fld = field(args.q)
    n_prime, t = split_characteristic(args.n, fld.char)
    cosets = cyclotomic_cosets(args.q, n_prime)
    print(" ".join("{" + ",".join(map(str, c)) + "}" for c in cosets))
    if t:
        print(f"repeated roots: n = {n_prime} * {fld.char}^{t}; each coset may occur up to {fld.char ** t} times")
    return EXIT_OK


def cmd_partition(args) -> int:
    fld = field(args.q)
    n_prime, t = split_characteristic(args.n, fld.char)
    classes = enumerate_class_reps(fld, args.n, k_min=args.kmin, k_max=args.kmax)
    print("cosets: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in cyclotomic_cosets(args.q, n_prime)))
    print(f"{len(classes)} classes of nonzero cyclic codes of length {args.n} over GF({args.q}) "
          "(zero code excluded)")
    for c in classes:
        flag = "  full space" if c.is_full_space else ""
        print(f"k={c.dim:<4} g={encode_gen(c.generator):<20} zeros={c.multiset}  "
              f"members={len(c.members)}{flag}")
    return EXIT_OK


def cmd_decode_gen(args) -> int:
    p = decode_gen(args.string, args.q)
    print(format_poly(p))
    print("coefficients: " + encode_vector(p.coefficient_vector(max(p.degree + 1, 1)), args.q))
    return EXIT_OK


def cmd_encode_gen(args) -> int:
    coeffs = decode_vector(args.coefficients, args.q)
    print(encode_gen(Poly(field(args.q), coeffs)))
    return EXIT_OK


def _verify_and_print(records, args, out_path=None) -> int:
    resolver = Resolver(records, budget=args.budget, threads=_threads(args))
    outcomes = []
    for r in records:
        o = verify_record(r, resolver)
        outcomes.append(o)
        print(o.line(), flush=True)
    counts = summarize(outcomes)
    print(summary_line(outcomes))
    if out_path:
        with open(out_path, "w") as fh:
            for o in outcomes:
                fh.write(o.to_json() + "\n")
    return EXIT_MISMATCH if counts.get(MISMATCH) else EXIT_OK


def cmd_verify(args) -> int:
    return _verify_and_print(_load(args.records), args, args.report_json)


def cmd_search(args) -> int:
    cfg = SearchConfig.from_file(args.config)
    if args.threads is not None:
        cfg.threads = args.threads
    if args.budget is not None:
        cfg.budget = args.budget
    summaries = []
    found = []
    for rec in asr_search(cfg, summaries):
        found.append(rec)
        print(rec.to_json(), flush=True)
    if args.ledger and found:
        persist_records(found, args.ledger)
    for s in summaries:
        print(f"m={s.m}: classes={s.classes} samples={s.samples} records={s.records}")
    return EXIT_OK


def cmd_constx(args) -> int:
    records = _load(args.records)
    rec = _pick(records, args.tag, args.index)
    resolver = Resolver(records, budget=args.budget, threads=_threads(args))
    spec = resolver.spec(rec)
    catalog = load_catalog(args.catalog)
    out = algorithm1(spec, args.b, catalog, args.max_len, direction=args.direction,
                     budget=args.budget, threads=_threads(args))
    if not out:
        print(f"no degree-{args.b} QC {args.direction}code qualifies", file=sys.stderr)
    for r in out:
        c1, c2, c3 = r.cx["c1"], r.cx["c2"], r.cx["c3"]
        line = (f"{r.params} ({r.d_flag})  C1=[{c1['n']},{c1['k']},{c1['d']}]({c1['d_flag']}) "
                f"C2=[{c2['n']},{c2['k']},{c2['d']}]({c2['d_flag']}) C3=[{c3['n']},{c3['k']},{c3['d']}]")
        if r.d_flag == "exact" and c1["d_flag"] == c2["d_flag"] == "exact":
            d1, d2, d3 = c1["d"], c2["d"], c3["d"]
            ok = d2 >= r.d >= min(d2, d1 + d3)
            line += f"  sandwich {d2} >= {r.d} >= {min(d2, d1 + d3)}: {'ok' if ok else 'VIOLATED'}"
        print(line, file=sys.stderr)
    _emit(out, args.out)
    return EXIT_OK


def cmd_modify(args) -> int:
    records = _load(args.records)
    rec = _pick(records, args.tag, args.index)
    resolver = Resolver(records, budget=args.budget, threads=_threads(args))
    G = resolver.matrix(rec)
    positions = [p - 1 for p in args.positions or []]
    M = modify(G, args.method, positions)
    source = rec.tag if rec.tag else asdict(rec)
    new = CodeRecord(q=M.q, n=M.n, k=M.k, d=None, provenance="modification",
                     modification={"source": source, "method": args.method, "positions": args.positions or []})
    dist = resolver.distance(new)
    new.d, new.d_flag = dist.value, dist.flag
    if not dist.exact:
        new.note = f"lower bound: {dist.method}"
    new.properties = classify_properties(M).names() if M.k else []
    print(f"{rec.params} -> {new.params} ({new.d_flag})", file=sys.stderr)
    _emit([new], args.out)
    return EXIT_OK


def _table_records(table: int) -> list[CodeRecord]:
    if table in (1, 2, 3):
        return [r for r in load_corpus("tables1-3") if r.tag.startswith(f"table{table}#")]
    if table == 7:
        return load_corpus("table7")
    return [r for r in load_corpus("tables4-6") if r.tag.startswith(f"table{table}#")]


TABLE7_PAIRS = [(0, 1), (0, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12), (13, 14), (15, 16),
                (17, 18), (19, 20), (21, 22), (23, 24), (25, 26), (27, 28), (29, 30)]


def cmd_reproduce(args) -> int:
    records = _table_records(args.table)
    status = _verify_and_print(records, args)
    if args.table == 7:
        resolver = Resolver(budget=args.budget, threads=_threads(args))
        bad = 0
        for a, b in TABLE7_PAIRS:
            A = resolver.matrix(resolver.lookup(f"table7#{a}"))
            B = resolver.matrix(resolver.lookup(f"table7#{b}"))
            small, big = (A, B) if A.rank < B.rank else (B, A)
            ok = is_subspace(small, big)
            bad += not ok
            print(f"table7#{a} / table7#{b}: [{small.n},{small.rank}] inside [{big.n},{big.rank}] "
                  f"b={big.rank - small.rank}: {'yes' if ok else 'NO'}")
        if bad:
            status = EXIT_MISMATCH
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker threads (default: $QCFORGE_THREADS or 1)")
    common.add_argument("--budget", type=_positive, default=None,
                        help="largest dimension for exhaustive distance computation")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="qcforge", description="Quasi-cyclic code search and verification.")
    p.add_argument("--version", action="version", version=f"qcforge {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cosets", parents=[common], help="cyclotomic cosets of q mod n'")
    s.add_argument("--q", type=_field_arg, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.set_defaults(func=cmd_cosets)

    s = sub.add_parser("partition", parents=[common], help="equivalence classes of cyclic codes")
    s.add_argument("--q", type=_field_arg, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--kmin", type=int)
    s.add_argument("--kmax", type=int)
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("search", parents=[common], help="ASR search driven by a key=value config")
    s.add_argument("config")
    s.add_argument("--ledger", help="record file to append results to")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", parents=[common], help="rebuild records and check their parameters")
    s.add_argument("records", help="record file, or a shipped corpus name")
    s.add_argument("--report-json", help="also write the report as one JSON object per line")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("constx", parents=[common], help="Construction X from a QC record and its best QC partner code")
    s.add_argument("records")
    s.add_argument("--tag")
    s.add_argument("--index", type=_positive, help="1-based record index (default 1)")
    s.add_argument("--b", type=_positive, required=True)
    s.add_argument("--catalog", help="glue-code catalog (default: shipped c3-catalog)")
    s.add_argument("--max-len", type=_positive, default=12)
    s.add_argument("--direction", choices=("super", "sub"), default="super")
    s.add_argument("--out", help="record file to append results to")
    s.set_defaults(func=cmd_constx)

    s = sub.add_parser("modify", parents=[common], help="shorten, puncture or expurgate a record's code")
    s.add_argument("records")
    s.add_argument("--tag")
    s.add_argument("--index", type=_positive)
    s.add_argument("--method", choices=("shorten", "puncture", "expurgate"), required=True)
    s.add_argument("--positions", type=_positions, help="1-based positions, e.g. 141-143 or 5,9")
    s.add_argument("--out")
    s.set_defaults(func=cmd_modify)

    s = sub.add_parser("decode-gen", parents=[common], help="expand a compact generator string")
    s.add_argument("--q", type=_field_arg, required=True)
    s.add_argument("string")
    s.set_defaults(func=cmd_decode_gen)

    s = sub.add_parser("encode-gen", parents=[common], help="compact string for a coefficient list")
    s.add_argument("--q", type=_field_arg, required=True)
    s.add_argument("coefficients", help="one symbol per coefficient, lowest power first (e.g. 10111)")
    s.set_defaults(func=cmd_encode_gen)

    s = sub.add_parser("reproduce", parents=[common], help="verify every row of one of the tables 1-7")
    s.add_argument("table", type=int, choices=range(1, 8), metavar="TABLE")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, QCForgeError, ValueError, OSError) as exc:
        print(f"qcforge {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
