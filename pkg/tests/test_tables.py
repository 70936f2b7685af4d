from qcss.tables import (
    RM_EXPECTED,
    TABLE1_ROWS,
    TABLE2_ROWS,
    format_reports,
    reports_to_json,
    rm_scan,
    rm_scan_matches_expected,
    verify_extended_table1,
    verify_table1_row,
    verify_table2,
)


def test_table_shapes():
    assert len(TABLE1_ROWS) == 26
    assert len(TABLE2_ROWS) == 12
    for n, kq, d, g in TABLE1_ROWS:
        assert (n - kq) % 2 == 0
        assert g.bit_length() - 1 == n - (n - kq) // 2  # degree audit


def test_short_table1_rows_pass():
    searches = {}
    for row in TABLE1_ROWS:
        if row[0] > 31:
            continue
        rep = verify_table1_row(row, budget=1 << 16, searches=searches)
        assert rep.passed, rep.line()


def test_corrupted_polynomial_flagged():
    n, kq, d, g = TABLE1_ROWS[0]
    rep = verify_table1_row((n, kq, d, g ^ 1), budget=1 << 16)
    assert not rep.passed
    bad = {k for k, v in rep.checks.items() if v is False}
    assert bad & {"divides_xn_plus_1", "zero_set_complete", "self_orthogonal",
                  "degree_matches_dimension", "search_reproduces_row"}


def test_row_with_wrong_distance_flagged():
    n, kq, d, g = TABLE1_ROWS[0]
    rep = verify_table1_row((n, kq, d + 2, g), budget=1 << 16)
    assert not rep.passed
    assert rep.checks["designed_distance_at_least_d"] is False


def test_rm_scan_expected_set():
    hits = rm_scan()
    assert {(h.n, h.quantum_k, h.distance) for h in hits} == set(RM_EXPECTED)
    assert rm_scan_matches_expected()
    assert len(hits) == 6


def test_extended_family_self_orthogonal():
    reports = verify_extended_table1(budget=1 << 18)
    assert all(r.checks["dimensions"] for r in reports)
    assert all(r.checks["self_orthogonal"] for r in reports)
    checked = [r for r in reports if r.checks["dual_distance_at_least_d"] is not None]
    assert checked  # at least the small rows get their parity-extended distance
    assert all(r.passed for r in reports)


def test_verify_table2_small_rows():
    from qcss.tables import TABLE2_ROWS

    small = [row for row in TABLE2_ROWS if row[5] <= 17]  # dimension fits 2^18
    reports = verify_table2(budget=1 << 18, rows=small)
    assert len(reports) == 8
    for rep in reports:
        assert rep.passed, rep.line()


def test_report_formatting_and_json():
    reps = [verify_table1_row(TABLE1_ROWS[0], budget=1 << 16)]
    text = format_reports("demo", reps)
    assert "pass" in text and "[[15,7,3]]" in text
    payload = reports_to_json({"demo": reps})
    assert '"passed": true' in payload
