"""``kl`` command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 computation error, 4 disagreement between code paths.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable

from . import algebra, families, tables
from .bc import dominance_report
from .corpus import named_corpus, random_matrices
from .errors import FlatNotInLattice, KLError, SpecParseError
from .kl import cancellation_check, check_defining_identity, kl_coeff_closed, kl_poly
from .lattice import Boolean, Braid, FlatLattice, Uniform, braid_blocks, braid_flat, build_lattice, char_poly, members, parse_spec, to_bits
from .polynomial import IntPoly, LaurentPoly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE, EXIT_MISMATCH = 0, 1, 2, 3, 4


class Mismatch(Exception):
    pass


def _digits(poly) -> list[str]:
    return [str(c) for c in poly.coeffs]


def _emit(record, fmt: str, text: Callable[[dict], str]):
    if fmt == "json":
        print(json.dumps(record, indent=2))
    else:
        print(text(record))


# compute -----------------------------------------------------------------


def _fast(spec) -> tuple[IntPoly, IntPoly, int] | None:
    if isinstance(spec, Uniform):
        return families.uniform_kl(spec.m, spec.d), families.uniform_char_poly(spec.m, spec.d), spec.d
    if isinstance(spec, Braid):
        return families.braid_kl(spec.n), families.braid_char_poly(spec.n), spec.n - 1
    if isinstance(spec, Boolean):
        return IntPoly([1]), IntPoly([-1, 1]) ** spec.n, spec.n
    return None


def cmd_compute(args) -> int:
    spec = parse_spec(args.spec)
    fast = _fast(spec)
    path = args.path
    if path == "auto":
        path = "fast" if fast is not None else "generic"
    if path in ("fast", "both") and fast is None:
        raise SpecParseError(f"no fast path for {args.spec}; use --path generic")
    record: dict = {"matroid": args.spec, "path": path}
    if path in ("generic", "both"):
        lat = build_lattice(spec)
        res = kl_poly(lat)
        p, chi, rank = res.poly, char_poly(lat), lat.rank
        record["flats"] = len(lat)
    if path == "fast":
        p, chi, rank = fast
    if path == "both" and (fast[0] != p or fast[1] != chi):
        raise Mismatch(f"generic {p} / {chi} vs fast {fast[0]} / {fast[1]}")
    record.update(rank=rank, kl=_digits(p), char=_digits(chi))
    _emit(record, args.format, lambda r: f"{r['matroid']}  rank {r['rank']}\nP(t) = {p}\nchi(t) = {chi}")
    return EXIT_OK


# table ---------------------------------------------------------------------


def _table_columns(args) -> dict[int, IntPoly]:
    if args.family == "uniform":
        if args.m is None or args.dmax is None:
            raise SpecParseError("table uniform needs --m and --dmax")
        ref = tables.UNIFORM.get(args.m)
        dmin = args.dmin if args.dmin is not None else (min(ref) if ref else 1)
        return {d: families.uniform_kl(args.m, d) for d in range(dmin, args.dmax + 1)}
    if args.nmax is None:
        raise SpecParseError("table braid needs --nmax")
    nmin = args.nmin if args.nmin is not None else 1
    return {n: families.braid_kl(n) for n in range(nmin, args.nmax + 1)}


def _grid(cols: dict[int, IntPoly], head: str) -> list[list[str]]:
    depth = max((p.degree + 1 for p in cols.values()), default=0)
    rows = [[head] + [str(k) for k in cols]]
    for i in range(depth):
        label = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
        rows.append([label] + [str(p[i]) if i <= p.degree else "" for p in cols.values()])
    return rows


def cmd_table(args) -> int:
    cols = _table_columns(args)
    head = "d=" if args.family == "uniform" else "n="
    if args.format == "json":
        record = {"family": args.family, "columns": {str(k): _digits(p) for k, p in cols.items()}}
        if args.family == "uniform":
            record["m"] = args.m
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(_grid(cols, head))
        sys.stdout.write(buf.getvalue())
    else:
        grid = _grid(cols, head)
        widths = [max(len(row[k]) for row in grid) for k in range(len(grid[0]))]
        for row in grid:
            print(" ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return EXIT_OK


# algebra -------------------------------------------------------------------


def parse_flat(lat: FlatLattice, text: str):
    """Braid flats as ``12|34`` (1-based vertices, omitted singletons allowed); others as ``0,2,5``."""
    text = text.strip()
    if lat.family and lat.family[0] == "braid":
        n = lat.family[1]
        blocks = []
        for part in filter(None, text.split("|")):
            labels = part.split(",") if "," in part else list(part)
            try:
                block = [int(x) - 1 for x in labels]
            except ValueError:
                raise SpecParseError(f"bad braid block {part!r}") from None
            if any(not 0 <= v < n for v in block):
                raise FlatNotInLattice(f"vertex out of range in {text!r}")
            blocks.append(block)
        seen = [v for b in blocks for v in b]
        if len(seen) != len(set(seen)):
            raise FlatNotInLattice(f"blocks of {text!r} overlap")
        flat = braid_flat(n, blocks)
    else:
        try:
            elems = [int(x) for x in text.replace(",", " ").split()]
        except ValueError:
            raise SpecParseError(f"bad flat {text!r}") from None
        if any(not 0 <= e < lat.size for e in elems):
            raise FlatNotInLattice(f"element out of range in {text!r}")
        flat = to_bits(elems)
    lat.index_of(flat)
    return flat


def flat_name(lat: FlatLattice, flat) -> str:
    if lat.family and lat.family[0] == "braid":
        n = lat.family[1]
        sep = "," if n > 9 else ""
        return "|".join(sep.join(str(v + 1) for v in b) for b in braid_blocks(n, flat))
    return ",".join(str(e) for e in members(flat))


def _poly_record(c: LaurentPoly) -> dict:
    return {"low": c.low if c.coeffs else 0, "coeffs": [str(x) for x in c.coeffs], "text": str(c)}


def cmd_algebra(args) -> int:
    lat = build_lattice(args.spec)
    record: dict = {"matroid": args.spec, "rank": lat.rank, "flats": len(lat)}
    if args.scan:
        found = algebra.positivity_scan(lat, first_only=args.first)
        record["findings"] = [
            {"F": flat_name(lat, f.F), "G": flat_name(lat, f.G), "H": flat_name(lat, f.H), "C": _poly_record(f.coefficient)}
            for f in found
        ]
        record["holds"] = not found

        def text(r):
            lines = [f"{len(found)} structure constants outside N[q]"]
            lines += [f"C[{x['F']}][{x['G']}]^[{x['H']}] = {x['C']['text']}" for x in r["findings"]]
            return "\n".join(lines)

        _emit(record, args.format, text)
        return EXIT_OK
    if not args.product:
        raise SpecParseError("algebra needs --product F G or --scan")
    F, G = (parse_flat(lat, s) for s in args.product)
    prod = algebra.product_in_kl_basis(lat, F, G)
    record["F"], record["G"] = flat_name(lat, F), flat_name(lat, G)
    record["product"] = [dict(flat=flat_name(lat, h), **_poly_record(c)) for h, c in prod.items()]

    def text(r):
        lines = [f"x[{r['F']}] * x[{r['G']}] ="]
        lines += [f"  ({t['text']}) x[{t['flat']}]" for t in r["product"]]
        return "\n".join(lines)

    _emit(record, args.format, text)
    return EXIT_OK


# verify ---------------------------------------------------------------------


def _verify_identities(order):
    for name, spec in named_corpus(6):
        lat = build_lattice(spec)
        p = kl_poly(lat).poly
        ok = p[0] == 1 and (lat.rank == 0 or 2 * p.degree < lat.rank)
        ok = ok and check_defining_identity(lat, p)
        if lat.rank > 0:
            ok = ok and cancellation_check(lat)
        yield name, ok


def _verify_gf(order):
    for m in range(4):
        yield f"uniform gf m={m} order={order}", families.gf_check_uniform(m, order)
    yield f"braid gf order={order}", families.gf_check_braid(order)


def _verify_coefficients(order):
    lats = [(n, build_lattice(s)) for n, s in named_corpus(7)]
    lats += [(f"random matrix {k}", build_lattice(s)) for k, s in enumerate(random_matrices(20, seed=1))]
    for name, lat in lats:
        p = kl_poly(lat).poly
        yield f"closed forms {name}", all(kl_coeff_closed(lat, i) == p[i] for i in range(4))
    for m, cols in tables.UNIFORM.items():
        ok = all(
            families.uniform_coeff_closed(m, d, i) == families.uniform_kl(m, d)[i]
            for d in cols for i in range(4)
        )
        yield f"uniform closed forms m={m}", ok
    yield "braid cubic n<=20", all(families.braid_cubic(n) == families.braid_kl(n)[3] for n in range(1, 21))


def _verify_tables(order):
    for m, cols in tables.UNIFORM.items():
        yield f"uniform table m={m}", all(tuple(families.uniform_kl(m, d).coeffs) == v for d, v in cols.items())
    yield "braid table n<=20", all(tuple(families.braid_kl(n).coeffs) == v for n, v in tables.BRAID.items())


def _expected_ok(lat, fn, n, F, G):
    got = {frozenset(members(h)): c for h, c in algebra.product_in_kl_basis(lat, F, G).items()}
    want = {k: IntPoly(v).to_laurent() for k, v in fn(n, frozenset(members(F)), frozenset(members(G))).items()}
    return got == want


def _verify_algebra(order):
    for n in range(1, 5):
        lat = build_lattice(Boolean(n))
        ok = True
        for F in lat.flats:
            for G in lat.flats:
                closed = algebra.boolean_product_closed(n, members(F), members(G))
                got = {frozenset(members(h)): c for h, c in algebra.product_in_kl_basis(lat, F, G).items()}
                ok = ok and got == closed
        yield f"boolean closed form n={n}", ok
    for rank, fn in ((2, tables.uniform_rank2_product), (3, tables.uniform_rank3_product)):
        for n in range(3, 7):
            lat = build_lattice(Uniform(n - rank, rank))
            ok = all(_expected_ok(lat, fn, n, F, G) for F in lat.flats for G in lat.flats)
            yield f"rank {rank} uniform table n={n}", ok
    lat = build_lattice(Braid(4))
    prod = algebra.product_in_kl_basis(lat, lat.bottom, lat.bottom)
    want = {f: IntPoly(tables.BRAID4_BOTTOM_SQUARE[bin(f).count("1")]).to_laurent() for f in lat.flats}
    yield "braid 4 bottom square", prod == want
    yield "uniform 2,4 has a negative constant", bool(algebra.positivity_scan(build_lattice(Uniform(2, 4)), True))
    yield "braid 5 positive", not algebra.positivity_scan(build_lattice(Braid(5)), True)


SUITES = {
    "identities": _verify_identities,
    "gf": _verify_gf,
    "coefficients": _verify_coefficients,
    "tables": _verify_tables,
    "algebra": _verify_algebra,
}


def cmd_verify(args) -> int:
    failures = 0
    for name, ok in SUITES[args.suite](args.order):
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=sys.stderr)
        failures += not ok
    print(f"{args.suite}: {'pass' if not failures else f'{failures} failed'}")
    return EXIT_OK if not failures else EXIT_FAIL


# dominance (extra) --------------------------------------------------------------


def cmd_bc(args) -> int:
    lat = build_lattice(args.spec)
    rep = dominance_report(lat)
    record = {
        "matroid": args.spec,
        "h": _digits(rep.h),
        "kl": _digits(rep.kl),
        "same_degree": rep.same_degree,
        "dominates": rep.dominates,
    }
    _emit(record, args.format, lambda r: rep.summary())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kl", description="Kazhdan-Lusztig polynomials of matroids")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="KL and characteristic polynomial of one matroid")
    c.add_argument("spec")
    c.add_argument("--path", choices=("auto", "generic", "fast", "both"), default="auto")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="tables of uniform or braid KL coefficients")
    t.add_argument("family", choices=("uniform", "braid"))
    t.add_argument("--m", type=int)
    t.add_argument("--dmin", type=int)
    t.add_argument("--dmax", type=int)
    t.add_argument("--nmin", type=int)
    t.add_argument("--nmax", type=int)
    t.add_argument("--format", choices=("json", "text", "csv"), default="text")
    t.set_defaults(func=cmd_table)

    a = sub.add_parser("algebra", help="products in the KL basis of the deformed Möbius algebra")
    a.add_argument("spec")
    a.add_argument("--product", nargs=2, metavar=("F", "G"))
    a.add_argument("--scan", action="store_true")
    a.add_argument("--first", action="store_true", help="stop the scan at the first finding")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.set_defaults(func=cmd_algebra)

    v = sub.add_parser("verify", help="run a named check suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--order", type=int, default=6)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bc", help="broken-circuit h-polynomial against the KL polynomial")
    b.add_argument("spec")
    b.add_argument("--format", choices=("json", "text"), default="text")
    b.set_defaults(func=cmd_bc)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecParseError, FlatNotInLattice) as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    except Mismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (KLError, ValueError, RecursionError, MemoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
