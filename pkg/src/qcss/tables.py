"""Verification harness for the bundled reference tables of cyclic-code and
projective-geometry CSS constructions.

Each row is re-derived from scratch and audited; a report carries one named
check per claim so that a single failing row pinpoints what broke.  Checks
that an enumeration budget rules out are recorded as skipped, not passed.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .bch import (
    bch_bound,
    match_polynomial_against_search,
    multiplicative_order_of_two,
    poly_deg,
    poly_divides,
    search_self_orthogonal_bch,
    spec_from_zero_set,
    zero_set_of_polynomial,
)
from .codes import DEFAULT_BUDGET, LinearCode, macwilliams
from .constructions import extend_parity_dual
from .errors import ResourceLimit
from .projgeom import ProjGeometry, RudolphDecoder, build_so_code, enumerate_spaces
from .reedmuller import rm_generator

# (n, quantum dimension, distance, generator polynomial of the
# self-orthogonal code, hex)
TABLE1_ROWS: tuple[tuple[int, int, int, int], ...] = (
    (15, 7, 3, 0x9AF),
    (21, 9, 3, 0xA4CB),
    (21, 3, 5, 0x1A8F),
    (31, 1, 7, 0x147BF),
    (31, 11, 5, 0x32E8AB),
    (31, 21, 3, 0x6A45F67),
    (45, 13, 5, 0x3A23AD59),
    (51, 35, 3, 0xE326E7B34B1),
    (55, 15, 4, 0xDDD946DFD),
    (63, 51, 3, 0x3F566ED27179461),
    (63, 39, 5, 0xA35C93F631679),
    (63, 27, 7, 0x3320C9F34AF3),
    (85, 69, 3, 0x35ABEA2C24A198F4BB4D),
    (85, 53, 5, 0x3FECD96C8FA9F07243),
    (89, 23, 9, 0x1764DDCBD3B8989),
    (93, 73, 3, 0xEC77E31E49181E3F23EFB),
    (93, 63, 5, 0x703365A734791C2C4EAF),
    (93, 43, 7, 0x1A97E0808F8470F23D),
    (93, 13, 11, 0x3E3E4297282E6B),
    (127, 113, 3, 0x1BE0B087462729A5EBB8F32455B3FB5),
    (127, 99, 5, 0x3190488E5B884A8F2CBF766953B65),
    (127, 85, 7, 0x7B58F033D746D85D06A9F911B4B),
    (127, 71, 9, 0xE2053619F3BBDFFAD8BB92E3F),
    (127, 57, 11, 0x1363666EFD9347B31283796F),
    (127, 43, 13, 0x2612A3178A1AD1832FE6A5),
    (127, 29, 15, 0x73DFA983C0D3A089566B),
)

# (label, geometry dimension, field order, space rank,
#  n, k, d, d_perp, quantum_k, tabulated decoding radius t).  The last row is
# commonly tabulated as PG(3,8), but its 73 + 1 coordinates match the point
# count of the plane over GF(8); PG(3,8) would have 585 points.
TABLE2_ROWS: tuple[tuple[str, int, int, int, int, int, int, int, int, int], ...] = (
    ("PG(2,2) 1-sp.", 2, 2, 1, 8, 4, 4, 4, 0, 1),
    ("PG(3,2) 2-sp.", 3, 2, 2, 16, 5, 8, 4, 6, 1),
    ("PG(4,2) 2-sp.", 4, 2, 2, 32, 16, 8, 8, 0, 3),
    ("PG(4,2) 3-sp.", 4, 2, 3, 32, 6, 16, 4, 20, 1),
    ("PG(5,2) 3-sp.", 5, 2, 3, 64, 22, 16, 8, 20, 2),
    ("PG(5,2) 4-sp.", 5, 2, 4, 64, 7, 32, 4, 50, 1),
    ("PG(6,2) 3-sp.", 6, 2, 3, 128, 64, 16, 16, 0, 5),
    ("PG(6,2) 4-sp.", 6, 2, 4, 128, 29, 32, 8, 70, 2),
    ("PG(6,2) 5-sp.", 6, 2, 5, 128, 8, 64, 4, 112, 1),
    ("PG(2,4) 1-sp.", 2, 4, 1, 22, 10, 6, 6, 2, 2),
    ("PG(3,4) 2-sp.", 3, 4, 2, 86, 17, 22, 6, 52, 2),
    ("PG(2,8) 1-sp. [tabulated as PG(3,8)]", 2, 8, 1, 74, 28, 10, 10, 18, 4),
)

RM_EXPECTED: frozenset[tuple[int, int, int]] = frozenset(
    {(16, 6, 4), (32, 20, 4), (64, 50, 4), (64, 20, 8), (128, 112, 4), (128, 70, 8)}
)

SPLIT_BOUND_128 = 15


@dataclass
class RowReport:
    label: str
    checks: dict[str, bool | None] = field(default_factory=dict)
    values: dict[str, object] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        bad = [k for k, v in self.checks.items() if v is False]
        skipped = [k for k, v in self.checks.items() if v is None]
        extra = ""
        if bad:
            extra += " failed: " + ",".join(bad)
        if skipped:
            extra += " skipped: " + ",".join(skipped)
        return f"{status:4}  {self.label:34}{extra}  ({self.seconds:.1f}s)"


def verify_table1(budget: int = DEFAULT_BUDGET) -> list[RowReport]:
    searches: dict[int, list] = {}
    return [verify_table1_row(row, budget, searches) for row in TABLE1_ROWS]


def verify_table1_row(
    row: tuple[int, int, int, int],
    budget: int = DEFAULT_BUDGET,
    searches: dict[int, list] | None = None,
) -> RowReport:
    n, kq, d, g = row
    if searches is None:
        searches = {}
    t0 = time.time()
    rep = RowReport(label=f"[[{n},{kq},{d}]] 0x{g:X}")
    k = (n - kq) // 2
    rep.values["dimension"] = k
    rep.checks["divides_xn_plus_1"] = poly_divides(g, (1 << n) | 1)
    rep.checks["degree_matches_dimension"] = poly_deg(g) == n - k
    zeros = zero_set_of_polynomial(n, g)
    rep.checks["zero_set_complete"] = len(zeros) == poly_deg(g)
    zset = set(zeros)
    rep.checks["self_orthogonal"] = all(
        i in zset for i in range(n) if (n - i) % n not in zset
    )
    dual_zeros = [i for i in range(n) if (n - i) % n not in zset]
    designed = bch_bound(dual_zeros, n)
    rep.values["designed_distance"] = designed
    rep.checks["designed_distance_at_least_d"] = designed >= d

    if n not in searches:
        searches[n] = search_self_orthogonal_bch(n)
    match = match_polynomial_against_search(n, g, searches[n])
    ok = (
        match is not None
        and match.hit.quantum_k == kq
        and match.hit.designed_distance >= d
    )
    rep.checks["search_reproduces_row"] = ok
    if match is not None:
        rep.values["search_unit"] = match.unit
        if match.unit == 1:
            rep.notes.append("hex reproduced verbatim by the default field")
        elif match.alternate_primitive_poly is not None:
            rep.notes.append(
                f"hex reproduced with primitive polynomial 0x{match.alternate_primitive_poly:X}"
            )
        else:
            rep.notes.append(f"matches the search after root relabeling by {match.unit}")

    if rep.checks["self_orthogonal"] and (1 << k) <= budget:
        spec = spec_from_zero_set(n, zeros)
        enum = spec.to_code().weight_enumerator(budget)
        dual_enum = macwilliams(enum, n, k)
        exact = dual_enum.min_distance()
        rep.values["exact_dual_distance"] = exact
        rep.checks["exact_dual_distance_at_least_d"] = exact >= d
        if exact > d:
            rep.notes.append(
                f"true dual distance is {exact}; the tabulated {d} is the designed value"
            )
    elif (1 << k) > budget:
        rep.checks["exact_dual_distance_at_least_d"] = None
        rep.notes.append(f"2^{k} words exceed the budget; bound-certified only")
    rep.seconds = time.time() - t0
    return rep


def verify_extended_table1(budget: int = 1 << 20) -> list[RowReport]:
    """The additional codes obtained by adding a parity bit to every row."""
    reports = []
    for n, kq, d, g in TABLE1_ROWS:
        t0 = time.time()
        rep = RowReport(label=f"extended [[{n},{kq},{d}]] -> n={n + 1}")
        zeros = zero_set_of_polynomial(n, g)
        spec = spec_from_zero_set(n, zeros)
        code = spec.to_code()
        ext = extend_parity_dual(code)
        rep.checks["dimensions"] = (ext.code.n, ext.code.k) == (n + 1, code.k + 1)
        rep.checks["self_orthogonal"] = ext.code.is_self_orthogonal()
        k = code.k + 1
        if (1 << k) <= budget:
            dual_enum = macwilliams(ext.code.weight_enumerator(budget), n + 1, k)
            exact = dual_enum.min_distance()
            rep.values["dual_distance"] = exact
            rep.checks["dual_distance_at_least_d"] = exact >= d
        else:
            rep.checks["dual_distance_at_least_d"] = None
        rep.seconds = time.time() - t0
        reports.append(rep)
    return reports


def verify_table2(budget: int = DEFAULT_BUDGET, rows=None) -> list[RowReport]:
    reports = []
    for label, gk, q, l, n, k, d, d_perp, kq, t_printed in (rows or TABLE2_ROWS):
        t0 = time.time()
        rep = RowReport(label=f"{label} [[{n},{kq},{d_perp}]]")
        geom = ProjGeometry(gk, q)
        cfg = enumerate_spaces(geom, l)  # raises if counts or invariants break
        rep.values["configuration"] = (cfg.b, cfg.v, cfg.r, cfg.k_prime, cfg.lam)
        code = build_so_code(cfg)
        rep.checks["length"] = code.n == n
        rep.checks["dimension"] = code.k == k
        rep.checks["self_orthogonal"] = code.is_self_orthogonal()
        rep.checks["quantum_dimension"] = n - 2 * k == kq

        if (1 << k) <= budget:
            enum = code.weight_enumerator(budget)
            rep.values["d"] = enum.min_distance()
            rep.checks["distance"] = enum.min_distance() == d
            dual_enum = macwilliams(enum, n, k)
            rep.values["d_perp"] = dual_perp = dual_enum.min_distance()
            rep.checks["dual_distance"] = dual_perp == d_perp
        elif k <= 29:
            # enumerable in principle; the caller chose a smaller budget
            rep.checks["distance"] = None
            rep.checks["dual_distance"] = None
            rep.notes.append(f"2^{k} words exceed the budget; spectrum skipped")
        else:
            split = code.min_distance_split(SPLIT_BOUND_128)
            rep.values["split_patterns"] = split.patterns_scanned
            rep.values["split_witness"] = split.witness_weight
            certified = (not split.found) and split.witness_weight == d
            rep.checks["distance"] = certified and split.value == SPLIT_BOUND_128 + 1
            rep.notes.append(
                f"distance certified by split search: no codeword below {split.value}, "
                f"witness row weight {split.witness_weight}"
            )
            # self-dual row: the dual distance equals the primal one
            rep.checks["dual_distance"] = code.dual().same_code(code) and d == d_perp

        if kq == 0:
            rep.checks["self_dual"] = code.dual().same_code(code)

        decoder = RudolphDecoder(cfg, extended=code.n == cfg.v + 1)
        cap = (d_perp - 1) // 2
        rep.values["one_step_bound"] = decoder.one_step_bound
        rep.values["two_pass_bound"] = decoder.two_pass_bound
        rep.values["distance_cap"] = cap
        candidates = {
            min(decoder.one_step_bound, cap),
            min(decoder.two_pass_bound, cap),
        }
        rep.values["t_printed"] = t_printed
        if t_printed not in candidates:
            rep.notes.append(
                f"tabulated t={t_printed} matches neither bound capped by the distance: {sorted(candidates)}"
            )
        rep.seconds = time.time() - t0
        reports.append(rep)
    return reports


@dataclass(frozen=True)
class RmScanHit:
    m: int
    r: int
    n: int
    quantum_k: int
    distance: int


def rm_scan(m_range=range(4, 8)) -> list[RmScanHit]:
    """Self-orthogonal Reed-Muller codes giving nontrivial quantum codes.

    Nontrivial means positive quantum dimension and dual distance above 2
    (order-0 codes only detect, and self-dual orders encode nothing).
    """
    hits = []
    for m in m_range:
        for r in range(0, m):
            rm = rm_generator(m, r)
            if not rm.code.is_self_orthogonal():
                continue
            n = rm.n
            kq = n - 2 * rm.k
            d = 1 << (r + 1)  # dual of RM(m, r) is RM(m, m-r-1)
            if kq <= 0 or d <= 2:
                continue
            hits.append(RmScanHit(m=m, r=r, n=n, quantum_k=kq, distance=d))
    return hits


def rm_scan_matches_expected() -> bool:
    return {(h.n, h.quantum_k, h.distance) for h in rm_scan()} == set(RM_EXPECTED)


def format_reports(title: str, reports: list[RowReport]) -> str:
    lines = [title]
    for rep in reports:
        lines.append("  " + rep.line())
        for note in rep.notes:
            lines.append(f"        note: {note}")
    good = sum(1 for r in reports if r.passed)
    lines.append(f"  {good}/{len(reports)} rows pass")
    return "\n".join(lines)


def reports_to_json(sections: dict[str, list[RowReport]]) -> str:
    payload = {}
    for name, reports in sections.items():
        payload[name] = [
            {
                "label": r.label,
                "passed": r.passed,
                "checks": r.checks,
                "values": {k: repr(v) if not isinstance(v, (int, float, str, list, tuple, type(None))) else v for k, v in r.values.items()},
                "notes": r.notes,
                "seconds": round(r.seconds, 3),
            }
            for r in reports
        ]
    return json.dumps(payload, indent=2, default=str)
