"""``gr-cup`` command line.

Artifacts go to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 usage or precondition error, 3 verification failure, 4 cache I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional

from .cache import ENGINE_VERSION, BasisCache, CacheIOError, default_cache_dir
from .f2poly import Poly, format_poly, s_polynomial
from .grassmann_ideal import expected_lt, ideal_generators, paper_family, special_m
from .groebner import (
    GroebnerBasis, buchberger, family_basis, is_groebner, reduce_basis,
    verify_reduction_chain,
)
from .invariants import (
    cup_im_p, height_w2, nonimmersion_bound, report, report_dict,
    sw_inverse_identity,
)

log = logging.getLogger("grcup")

EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_CACHE = 4

CSV_HEADER = ["n", "special", "m", "cup_im_p", "height_w2", "conjecture", "match"]


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _plist(F: Poly) -> list:
    return [list(t) for t in F.terms]


def _emit(line: str = "") -> None:
    sys.stdout.write(line + "\n")
    sys.stdout.flush()


def get_basis(n: int, cache_root, use_cache: bool = True) -> GroebnerBasis:
    """Reduced basis of J_n from the cache, computing and storing on a miss."""
    cache = BasisCache(cache_root)
    if use_cache:
        gb = cache.load(n)
        if gb is not None:
            return gb
    log.info("computing basis for n=%d", n)
    gb = reduce_basis(buchberger(ideal_generators(n).nonzero(), n=n))
    if use_cache:
        cache.store(gb)
    return gb


# -- commands ------------------------------------------------------------

def cmd_generators(args) -> int:
    pres = ideal_generators(args.n)
    if args.format == "json":
        _emit(_dump({"n": pres.n, "special": pres.special, "m": pres.m,
                     "g": [_plist(g) for g in pres.generators],
                     "engine_version": ENGINE_VERSION}))
    else:
        _emit(f"n = {pres.n}")
        _emit(f"special = {str(pres.special).lower()}" + (f" (m = {pres.m})" if pres.special else ""))
        for d, g in zip((1, 2, 3), pres.generators):
            _emit(f"g{pres.n + d} = {format_poly(g)}")
    return 0


def verify_basis(n: int, gb: GroebnerBasis, jobs: int) -> List[str]:
    """Run all available checks; returns certificate lines, raises on failure."""
    lines = []
    cert = is_groebner(gb.polys, jobs=jobs)
    if not cert:
        i, j = cert.pair
        raise VerificationFailed(
            f"S-pair ({i},{j}) has nonzero remainder {format_poly(cert.remainder)}")
    lines.append(f"is_groebner: true ({cert.pairs_checked} S-pairs reduce to 0)")
    m = special_m(n)
    if m is not None:
        fam = family_basis(m)
        fcert = is_groebner(fam.polys, jobs=jobs)
        if not fcert:
            raise VerificationFailed(f"closed-form family fails at pair {fcert.pair}")
        if reduce_basis(fam).polys != gb.polys:
            raise VerificationFailed("reduced basis differs from the reduced closed-form family")
        count = 0
        for i in range(m + 1):
            for j in range(i + 1, m + 1):
                rep = verify_reduction_chain(m, i, j)
                if not rep:
                    raise VerificationFailed(
                        f"chain ({i},{j}) breaks at step {rep.failed_step}: {rep.detail}")
                count += 1
        lines.append(f"family_groebner: true ({fcert.pairs_checked} S-pairs)")
        lines.append(f"reduction_chains: {count} replayed")
        lines.append("family_equals_basis: true")
    return lines


def cmd_basis(args) -> int:
    n = args.n
    m = special_m(n)
    if args.paper_family:
        if m is None:
            raise UsageError(f"--paper-family requires n = 2^(m+1) - 4, got n={n}")
        gb = reduce_basis(family_basis(m))
    else:
        gb = get_basis(n, args.cache_root)
    certs = verify_basis(n, gb, args.jobs) if args.verify else None
    if args.format == "json":
        out = {"n": n, "m": m, "engine_version": ENGINE_VERSION,
               "basis": [_plist(g) for g in gb.polys],
               "leading_terms": [list(g.lt) for g in gb.polys]}
        if certs is not None:
            out["verified"] = True
            out["certificates"] = certs
        _emit(_dump(out))
    else:
        _emit(f"n = {n}")
        for k, g in enumerate(gb.polys):
            _emit(f"G{k} = {format_poly(g)}    LT = {g.lt}")
        if certs is not None:
            for line in certs:
                _emit(line)
            _emit("verified: true")
    return 0


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "-"
    return str(v)


def cmd_cup(args) -> int:
    gb = get_basis(args.n, args.cache_root)
    rep = report(args.n, gb)
    if args.format == "json":
        d = report_dict(rep)
        out = {"n": d.pop("n"), "m": d.pop("m"), "engine_version": ENGINE_VERSION}
        out.update(d)
        _emit(_dump(out))
        return 0
    _emit(f"n: {rep.n}")
    _emit(f"m: {_fmt_value(rep.m)}")
    _emit(f"cup_im_p: {rep.cup_im_p}")
    _emit(f"witness: {format_poly(Poly([rep.witness]))}")
    _emit(f"height_w2: {rep.height_w2}")
    if rep.cup_total_reported is not None:
        _emit(f"cup_total_reported: {rep.cup_total_reported} [{rep.cup_total_source}]")
    if rep.chi_table is not None:
        _emit("chi_table: " + " ".join(f"{r.chi1}:{r.chi2}" for r in rep.chi_table))
        _emit(f"chi_form: {rep.chi_form}")
        _emit(f"sw_inverse_identity: {_fmt_value(rep.sw_inverse_identity)}")
        _emit(f"sw_normal: {format_poly(rep.sw_normal)}")
        _emit(f"nonimmersion_dim: {rep.nonimmersion_dim}")
        _emit(f"paper_positive_bound: {rep.paper_positive_bound} [published, not computed]")
    for note in rep.notes:
        _emit(f"note: {note}")
    return 0


def cmd_immersion(args) -> int:
    n = args.n
    m = special_m(n)
    if m is None:
        raise UsageError(f"immersion bounds need n = 2^(m+1) - 4, got n={n}")
    gb = get_basis(n, args.cache_root)
    imm = nonimmersion_bound(n, gb)
    ident = sw_inverse_identity(n, gb)
    fields = {"n": n, "m": m, "engine_version": ENGINE_VERSION,
              "sw_inverse_identity": ident, "sw_normal": _plist(imm.sw_normal),
              "d_max": imm.d_max, "nonimmersion_dim": imm.nonimmersion_dim,
              "paper_positive_bound": imm.paper_positive_bound}
    if args.format == "json":
        _emit(_dump(fields))
    else:
        for k, v in fields.items():
            if k == "sw_normal":
                v = format_poly(imm.sw_normal)
            _emit(f"{k}: {_fmt_value(v)}")
        if m == 2:
            _emit(f"note: non-immersion in R^{imm.nonimmersion_dim} subsumes the published R^17 claim")
    return 0


def conjecture_value(n: int) -> Optional[int]:
    """Conjectured cup-length from the two readable clauses; None elsewhere."""
    m = 2
    while (1 << (m + 1)) - 4 <= n:
        lo = (1 << (m + 1)) - 4
        hi = (1 << (m + 1)) + (1 << m) - 6
        if lo <= n <= hi:
            return (1 << (m + 1)) - 3
        k = n - ((1 << (m + 1)) + (1 << m) - 5)
        if 0 <= k <= 2:
            return (1 << (m + 1)) - 3 + k
        m += 1
    return None


def table_row(n: int, cache_root) -> dict:
    gb = get_basis(n, cache_root)
    m = special_m(n)
    cup, _ = cup_im_p(n, gb)
    conj = conjecture_value(n)
    match = None
    if m is not None and conj is not None:
        match = cup + 1 == conj
    return {"n": n, "special": m is not None, "m": m, "cup_im_p": cup,
            "height_w2": height_w2(n, gb), "conjecture": conj, "match": match}


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def _rows(ns: List[int], cache_root, jobs: int) -> Iterable[dict]:
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            yield from ex.map(table_row, ns, [cache_root] * len(ns))
    else:
        for n in ns:
            yield table_row(n, cache_root)


def cmd_table(args) -> int:
    ns = list(range(args.n_from, args.n_to + 1))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        sys.stdout.write(buf.getvalue())
        sys.stdout.flush()
    elif args.format == "text":
        _emit(" ".join(f"{h:>10}" for h in CSV_HEADER))
    for row in _rows(ns, args.cache_root, args.jobs):
        if args.format == "csv":
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerow([_csv_cell(row[h]) for h in CSV_HEADER])
            sys.stdout.write(buf.getvalue())
            sys.stdout.flush()
        elif args.format == "json":
            _emit(_dump({**row, "engine_version": ENGINE_VERSION}))
        else:
            _emit(" ".join(f"{_csv_cell(row[h]) or '-':>10}" for h in CSV_HEADER))
    return 0


def _special_ns(args) -> List[int]:
    if args.n is not None:
        ns = [args.n]
    else:
        lo = args.n_from if args.n_from is not None else 4
        hi = args.n_to if args.n_to is not None else 60
        ns = list(range(lo, hi + 1))
    return [n for n in ns if special_m(n) is not None]


def check_claims(n: int, cache_root, jobs: int = 1) -> List[tuple]:
    """(name, ok) for every checkable claim at special ``n``."""
    m = special_m(n)
    gens = ideal_generators(n).generators
    P = paper_family(m)
    out = [
        ("g_{n+1} = 0", not gens[0]),
        ("P0 = g_{n+2}", P[0] == gens[1]),
        ("P1 = g_{n+3}", P[1] == gens[2]),
        ("LT(P_i) = (2^m-2^i, 2^i-1)", all(P[i].lt == expected_lt(i, m) for i in range(m + 1))),
        ("S(P_i,P_i+1) = P_i+2", all(s_polynomial(P[i], P[i + 1]) == P[i + 2] for i in range(m - 1))),
        ("closed-form family is Groebner", bool(is_groebner(P, jobs=jobs))),
        ("reduction chains replay", all(verify_reduction_chain(m, i, j)
                                        for i in range(m + 1) for j in range(i + 1, m + 1))),
    ]
    gb = get_basis(n, cache_root)
    out.append(("Buchberger basis = closed-form family", reduce_basis(family_basis(m)).polys == gb.polys))
    cup, _ = cup_im_p(n, gb)
    out.append(("cup(Im p*) = n", cup == n))
    out.append(("height(w2) = n", height_w2(n, gb) == n))
    out.append(("(1+w2+w3)^(n+4) = 1", sw_inverse_identity(n, gb)))
    return out


def cmd_verify_all(args) -> int:
    ns = _special_ns(args)
    if not ns:
        raise UsageError("no n = 2^(m+1) - 4 in the requested range")
    failed = False
    for n in ns:
        for name, ok in check_claims(n, args.cache_root, args.jobs):
            failed |= not ok
            if args.format == "json":
                _emit(_dump({"n": n, "m": special_m(n), "engine_version": ENGINE_VERSION,
                             "check": name, "ok": bool(ok)}))
            else:
                _emit(f"{'PASS' if ok else 'FAIL'} n={n} {name}")
    return EXIT_VERIFY if failed else 0


# -- argument handling ---------------------------------------------------

COMMANDS = {
    "generators": cmd_generators,
    "basis": cmd_basis,
    "cup": cmd_cup,
    "immersion": cmd_immersion,
    "table": cmd_table,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--from", dest="n_from", type=int)
    common.add_argument("--to", dest="n_to", type=int)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--cache-dir")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--paper-family", action="store_true",
                        help="use the closed-form basis instead of Buchberger (special n only)")
    common.add_argument("--verify", action="store_true")
    common.add_argument("-q", "--quiet", action="store_true", help="suppress diagnostics")

    parser = argparse.ArgumentParser(
        prog="gr-cup",
        description="Groebner bases and cup-length of the subring Im p* of H*(G~(n,3); Z/2).")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "generators": "print g_{n+1}, g_{n+2}, g_{n+3}",
        "basis": "reduced Groebner basis of J_n",
        "cup": "cup-length, height of w2 and related invariants",
        "immersion": "normal Stiefel-Whitney class and non-immersion bound",
        "table": "sweep n over a range (CSV header: " + ",".join(CSV_HEADER) + ")",
        "verify-all": "check every computable claim for special n in a range",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def _validate(args, parser) -> None:
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    if args.command == "table":
        if args.n_from is None or args.n_to is None:
            if args.n is None:
                parser.error("table needs --from and --to (or --n)")
            args.n_from = args.n_to = args.n
        if args.n_from < 4 or args.n_from > args.n_to:
            parser.error("need 4 <= --from <= --to")
    elif args.command == "verify-all":
        if args.n is not None and args.n < 4:
            parser.error("--n must be at least 4")
        if args.n_from is not None and args.n_from < 4:
            parser.error("--from must be at least 4")
    else:
        if args.n is None:
            parser.error(f"{args.command} needs --n")
        if args.n < 4:
            parser.error(f"--n must be at least 4, got {args.n}")
    if args.format == "csv" and args.command != "table":
        parser.error("--format csv is only available for table")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        stream=sys.stderr, format="gr-cup: %(message)s", force=True)
    args.cache_root = default_cache_dir(args.cache_dir)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"gr-cup: error: {exc}\n")
        return EXIT_USAGE
    except VerificationFailed as exc:
        sys.stderr.write(f"gr-cup: verification failed: {exc}\n")
        return EXIT_VERIFY
    except CacheIOError as exc:
        sys.stderr.write(f"gr-cup: cache error: {exc}\n")
        return EXIT_CACHE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
