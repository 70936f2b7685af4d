"""Command-line interface.

Codes travel as text matrices ('rows cols' header, one 0/1 string per row);
CSS codes as a key:value header followed by labeled matrix blocks.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import tables
from .bch import search_self_orthogonal_bch
from .channel import ChannelSpec, monte_carlo
from .codes import DEFAULT_BUDGET, LinearCode
from .constructions import (
    OuterCode,
    augment,
    concatenate,
    construction_x,
    construction_x3,
    construction_x4,
    construction_y1,
    construction_y4,
    extend_parity_dual,
    nebe,
    outer_field,
    plotkin,
    product,
    shorten,
    triple_sum,
)
from .css import (
    CssCode,
    LookupDecoder,
    css_from_projective_geometry,
    css_from_reed_muller,
    css_from_self_orthogonal_cyclic,
)
from .errors import QcssError
from .gf2 import BitMatrix
from .projgeom import ProjGeometry, build_so_code, enumerate_spaces
from .reedmuller import rm_generator


def _load_code(path: str) -> LinearCode:
    return LinearCode.from_text(Path(path).read_text())


def _save_code(code: LinearCode, path: str) -> None:
    Path(path).write_text(code.to_text())


def _cmd_construct(args) -> int:
    codes = [_load_code(p) for p in args.inputs]
    name = args.name
    arity = {
        "augment": 1, "shorten": 1, "plotkin": 2, "triple": 2, "nebe": 3,
        "product": 2, "concat": 1, "x": 3, "x3": 5, "x4": 4, "y1": 1,
        "y4": 1, "extend-dual": 1,
    }[name]
    if len(codes) != arity:
        print(f"{name} needs {arity} input code(s), got {len(codes)}", file=sys.stderr)
        return 2
    if name == "augment":
        report = augment(codes[0])
    elif name == "shorten":
        report = shorten(codes[0], args.coordinate)
    elif name == "plotkin":
        report = plotkin(codes[0], codes[1])
    elif name == "triple":
        report = triple_sum(codes[0], codes[1])
    elif name == "nebe":
        report = nebe(codes[0], codes[1], codes[2])
    elif name == "product":
        report = product(codes[0], codes[1])
    elif name == "concat":
        if not args.outer:
            print("concat needs --outer FILE", file=sys.stderr)
            return 2
        report = concatenate(codes[0], _load_outer(args.outer, codes[0].k))
    elif name == "x":
        report = construction_x(codes[0], codes[1], codes[2])
    elif name == "x3":
        report = construction_x3(*codes)
    elif name == "x4":
        report = construction_x4(*codes)
    elif name == "y1":
        report = construction_y1(codes[0])
    elif name == "y4":
        report = construction_y4(codes[0])
    else:  # extend-dual
        report = extend_parity_dual(codes[0])
    _save_code(report.code, args.out)
    rel = report.dual_distance_relation
    print(f"[{report.code.n},{report.code.k}] written to {args.out}")
    if report.predicted_dual_distance is not None:
        print(f"dual distance {rel} {report.predicted_dual_distance}")
    if report.warning:
        print(f"warning: {report.warning}")
    return 0


def _load_outer(path: str, k1: int) -> OuterCode:
    """Outer-code format: 'n k' header, then k lines of n hex symbols."""
    lines = [ln.split() for ln in Path(path).read_text().strip().splitlines()]
    n, k = int(lines[0][0]), int(lines[0][1])
    rows = tuple(tuple(int(sym, 16) for sym in ln) for ln in lines[1 : k + 1])
    return OuterCode(field=outer_field(k1), n=n, rows=rows)


def _cmd_bch_search(args) -> int:
    hits = search_self_orthogonal_bch(args.n)
    if args.json:
        import json

        payload = [
            {
                "n": h.quantum_n,
                "quantum_k": h.quantum_k,
                "designed_distance": h.designed_distance,
                "generator": hex(h.code_spec.generator),
                "dimension": h.code_spec.dimension,
            }
            for h in hits
        ]
        print(json.dumps(payload, indent=2))
    else:
        for h in hits:
            print(
                f"[[{h.quantum_n},{h.quantum_k},{h.designed_distance}]] "
                f"dim={h.code_spec.dimension} g=0x{h.code_spec.generator:X}"
            )
    return 0


def _cmd_rm(args) -> int:
    rm = rm_generator(args.m, args.r)
    if args.emit == "code":
        sys.stdout.write(rm.code.to_text())
    else:
        if not rm.code.is_self_orthogonal():
            print(f"RM({args.m},{args.r}) is not self-orthogonal", file=sys.stderr)
            return 1
        n = rm.n
        print(f"[[{n},{n - 2 * rm.k},{1 << (args.r + 1)}]]")
    return 0


def _cmd_pg(args) -> int:
    geom = ProjGeometry(args.k, args.q)
    cfg = enumerate_spaces(geom, args.l)
    if args.emit == "config":
        sys.stdout.write(cfg.incidence.to_text())
        return 0
    code = build_so_code(cfg)
    if args.emit == "code":
        sys.stdout.write(code.to_text())
        return 0
    d = code.min_distance() if code.k <= 24 else None
    label = f"[[{code.n},{code.n - 2 * code.k},?]]" if d is None else None
    if d is not None:
        from .codes import macwilliams

        dual_d = macwilliams(code.weight_enumerator(), code.n, code.k).min_distance()
        label = f"[[{code.n},{code.n - 2 * code.k},{dual_d}]]"
    print(label)
    return 0


def _cmd_css_build(args) -> int:
    if args.decoder == "lookup":
        c1 = _load_code(args.c1)
        c2 = _load_code(args.c2) if args.c2 else c1
        css = CssCode(c1, c2, decoder1=LookupDecoder(c1), decoder2=LookupDecoder(c2))
        meta = {"decoder": "lookup"}
    elif args.decoder == "reed":
        m, r = args.decoder_args
        css = css_from_reed_muller(int(m), int(r))
        meta = {"decoder": f"reed {m} {r}"}
    elif args.decoder == "rudolph":
        k, q, l = args.decoder_args
        css = css_from_projective_geometry(int(k), int(q), int(l))
        meta = {"decoder": f"rudolph {k} {q} {l}"}
    else:  # bch
        from .bch import spec_from_zero_set, zero_set_of_polynomial

        n, ghex = args.decoder_args
        n = int(n)
        g = int(ghex, 16)
        spec = spec_from_zero_set(n, zero_set_of_polynomial(n, g))
        css = css_from_self_orthogonal_cyclic(spec)
        meta = {"decoder": f"bch {n} {ghex}"}
    out = Path(args.out)
    blocks = [f"n: {css.n}", f"quantum-k: {css.quantum_k}"]
    blocks += [f"{key}: {value}" for key, value in meta.items()]
    blocks.append("G1")
    blocks.append(css.c1.generator.to_text().rstrip("\n"))
    blocks.append("G2")
    blocks.append(css.c2.generator.to_text().rstrip("\n"))
    out.write_text("\n".join(blocks) + "\n")
    print(f"[[{css.n},{css.quantum_k},{css.distance or '?'}]] written to {out}")
    return 0


def load_css(path: str) -> CssCode:
    """Rebuild a CSS code (with its decoder) from a .css file."""
    text = Path(path).read_text().splitlines()
    header: dict[str, str] = {}
    i = 0
    while i < len(text) and ":" in text[i] and not text[i].startswith("G1"):
        key, value = text[i].split(":", 1)
        header[key.strip()] = value.strip()
        i += 1
    decoder = header.get("decoder", "lookup").split()
    if decoder[0] == "reed":
        return css_from_reed_muller(int(decoder[1]), int(decoder[2]))
    if decoder[0] == "rudolph":
        return css_from_projective_geometry(int(decoder[1]), int(decoder[2]), int(decoder[3]))
    if decoder[0] == "bch":
        from .bch import spec_from_zero_set, zero_set_of_polynomial

        n = int(decoder[1])
        g = int(decoder[2], 16)
        spec = spec_from_zero_set(n, zero_set_of_polynomial(n, g))
        return css_from_self_orthogonal_cyclic(spec)
    # lookup: read the explicit matrices
    assert text[i] == "G1"
    j = text.index("G2")
    g1 = BitMatrix.from_text("\n".join(text[i + 1 : j]))
    g2 = BitMatrix.from_text("\n".join(text[j + 1 :]))
    c1 = LinearCode(g1)
    c2 = LinearCode(g2)
    return CssCode(c1, c2, decoder1=LookupDecoder(c1), decoder2=LookupDecoder(c2))


def _cmd_simulate(args) -> int:
    css = load_css(args.css)
    channel = ChannelSpec.depolarizing(args.p)
    report = monte_carlo(css, channel, trials=args.trials, seed=args.seed)
    print(
        f"trials={report.trials} successes={report.successes} "
        f"decode_failures={report.decode_failures} logical_errors={report.logical_errors} "
        f"logical_rate={report.logical_rate:.3e}"
    )
    if args.csv:
        Path(args.csv).write_text(report.to_csv())
    return 0


def _cmd_min_distance(args) -> int:
    code = _load_code(args.code)
    if args.split:
        res = code.min_distance_split(args.bound)
        if res.found:
            print(f"minimum distance {res.value}")
        else:
            print(
                f"no codeword of weight <= {args.bound}; lightest seen: {res.witness_weight}"
            )
        return 0
    print(f"minimum distance {code.min_distance(budget=args.budget)}")
    return 0


def _cmd_spectrum(args) -> int:
    code = _load_code(args.code)
    enum = code.weight_enumerator(budget=args.budget)
    text = enum.to_csv()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify_tables(args) -> int:
    sections: dict[str, list[tables.RowReport]] = {}
    ok = True
    if args.table in (None, 1):
        reps = tables.verify_table1(budget=args.budget)
        sections["table1"] = reps
        print(tables.format_reports("table 1 (cyclic codes)", reps))
        ok &= all(r.passed for r in reps)
    if args.table in (None, 2):
        reps = tables.verify_table2(budget=args.budget)
        sections["table2"] = reps
        print(tables.format_reports("table 2 (projective geometries)", reps))
        ok &= all(r.passed for r in reps)
    if args.table is None:
        reps = tables.verify_extended_table1(budget=min(args.budget, 1 << 22))
        sections["table1_extended"] = reps
        print(tables.format_reports("table 1 parity-extended family", reps))
        ok &= all(r.passed for r in reps)
        match = tables.rm_scan_matches_expected()
        hits = tables.rm_scan()
        print("reed-muller scan:", ", ".join(f"[[{h.n},{h.quantum_k},{h.distance}]]" for h in hits))
        print("  matches expected set:", "yes" if match else "NO")
        ok &= match
    if args.json:
        Path(args.json).write_text(tables.reports_to_json(sections))
    return 0 if ok else 1


def _parse_budget(text: str) -> int:
    if text.startswith("2^"):
        return 1 << int(text[2:])
    return int(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="qcss")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="combine codes")
    p.add_argument("name", choices=[
        "augment", "shorten", "plotkin", "triple", "nebe", "product",
        "concat", "x", "x3", "x4", "y1", "y4", "extend-dual",
    ])
    p.add_argument("--in", dest="inputs", action="append", default=[], metavar="FILE")
    p.add_argument("--out", required=True)
    p.add_argument("--coordinate", type=int, default=0, help="for shorten")
    p.add_argument("--outer", help="outer code file for concat")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("bch-search", help="self-orthogonal cyclic codes of a length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bch_search)

    p = sub.add_parser("rm", help="reed-muller code or its quantum parameters")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--emit", choices=["code", "quantum"], default="quantum")
    p.set_defaults(func=_cmd_rm)

    p = sub.add_parser("pg", help="projective geometry configuration or code")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--emit", choices=["config", "code", "quantum"], default="quantum")
    p.set_defaults(func=_cmd_pg)

    p = sub.add_parser("css-build", help="assemble a CSS code file")
    p.add_argument("--c1", help="generator matrix file (lookup decoder)")
    p.add_argument("--c2")
    p.add_argument("--decoder", choices=["lookup", "bch", "reed", "rudolph"], required=True)
    p.add_argument("--decoder-args", nargs="*", default=[],
                   help="bch: n ghex; reed: m r; rudolph: k q l")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_css_build)

    p = sub.add_parser("simulate", help="depolarizing-channel monte carlo")
    p.add_argument("--css", required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--csv")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("min-distance", help="exact or split-certified distance")
    p.add_argument("--code", required=True)
    p.add_argument("--split", action="store_true")
    p.add_argument("--bound", type=int, default=15)
    p.add_argument("--budget", type=_parse_budget, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_min_distance)

    p = sub.add_parser("spectrum", help="weight enumerator as CSV")
    p.add_argument("--code", required=True)
    p.add_argument("--out")
    p.add_argument("--budget", type=_parse_budget, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("verify-tables", help="re-derive the bundled reference tables")
    p.add_argument("--table", type=int, choices=[1, 2])
    p.add_argument("--budget", type=_parse_budget, default=DEFAULT_BUDGET)
    p.add_argument("--json", help="also write a JSON report")
    p.set_defaults(func=_cmd_verify_tables)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QcssError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
