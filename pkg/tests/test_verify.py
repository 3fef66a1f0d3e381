from concurrent.futures import ThreadPoolExecutor

import pytest

from triblucas.errors import UnknownIdentityError
from triblucas.verify import (
    EXPECTED_FAIL,
    FAIL,
    PASS,
    SweepRange,
    errata_report,
    list_identities,
    overall_success,
    reports_to_json,
    run_all,
    run_identity,
)

EXPECTED_IDS = [
    "eq2.2", "eq2.4", "closed-vs-recurrence-triangle", "def1-methods",
    "eq3.3", "eq3.4", "eq3.5", "eq3.6", "eq3.7", "eq3.8", "eq3.9", "eq3.10",
    "eq1.5", "prop3", "cor4", "thm5", "prop6", "cor8", "binet-T", "binet-K",
    "poly-at-1", "thm10-printed", "thm10-corrected", "cor11", "thm12",
    "cor13", "eq1.6-shift",
]

SMALL = SweepRange(n_max=10, s_max=2, h_max=4, order=12)


def test_catalog_is_complete_and_stable():
    catalog = list_identities()
    assert [identity_id for identity_id, _, _ in catalog] == EXPECTED_IDS
    assert len(catalog) == 27
    for identity_id, description, formula_key in catalog:
        assert description and formula_key


def test_every_catalog_entry_runs():
    reports = run_all(SMALL)
    assert [r.id for r in reports] == EXPECTED_IDS
    for report in reports:
        assert report.points_checked > 0, report.id


def test_statuses_partition_as_documented():
    reports = run_all(SMALL)
    by_id = {r.id: r for r in reports}
    for identity_id, report in by_id.items():
        if identity_id in ("thm10-printed", "eq1.6-shift"):
            assert report.status == EXPECTED_FAIL, identity_id
            assert report.total_failures > 0
            assert report.failures
        else:
            assert report.status == PASS, (identity_id, report.notes)
            assert report.total_failures == 0
    assert overall_success(reports)


def test_run_identity_examples():
    assert run_identity("eq3.9", SMALL).status == PASS

    printed = run_identity("thm10-printed", SMALL)
    assert printed.status == EXPECTED_FAIL
    first = printed.failures[0]
    assert dict(first.params) == {"s": "0", "x": "1", "power": "3"}

    thm5 = run_identity("thm5", SweepRange(n_max=20, h_max=12, order=8))
    assert thm5.status == PASS and thm5.total_failures == 0


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        run_identity("nosuch", SMALL)


def test_counterexamples_capped_but_counted():
    printed = run_identity("thm10-printed", SMALL)
    assert len(printed.failures) == 10
    assert printed.total_failures > 10


def test_expected_fail_inverts_when_mismatch_invisible():
    # With only two coefficients expanded the printed defect (power 2s+3)
    # is out of view, so the faithful-reproduction guard must flag it.
    tiny = SweepRange(n_max=2, s_max=1, order=2)
    report = run_identity("thm10-printed", tiny)
    assert report.status == FAIL
    assert "UNEXPECTED" in report.notes


def test_reports_shrink_with_range_but_statuses_hold():
    tiny = SweepRange(n_max=6, s_max=1, h_max=2, order=8)
    reports = run_all(tiny)
    assert overall_success(reports)
    statuses = {r.id: r.status for r in reports}
    assert statuses["thm10-printed"] == EXPECTED_FAIL
    assert statuses["thm10-corrected"] == PASS


def test_determinism_byte_identical_json():
    first = reports_to_json(run_all(SMALL))
    second = reports_to_json(run_all(SMALL))
    assert first == second
    assert first.startswith('[{"id":"eq2.2"')


def test_report_json_shape():
    import json
    payload = json.loads(reports_to_json([run_identity("eq2.2", SMALL)]))
    assert list(payload[0]) == ["id", "status", "points_checked",
                                "total_failures", "failures", "notes"]
    assert payload[0]["status"] == "pass"
    assert "domain" in payload[0]["notes"]


def test_concurrent_equals_serial():
    ids = ["eq3.3", "eq2.2", "thm5", "prop3"]
    serial = [run_identity(i, SMALL) for i in ids]
    with ThreadPoolExecutor(max_workers=4) as pool:
        concurrent = list(pool.map(lambda i: run_identity(i, SMALL), ids))
    assert serial == concurrent


def test_sweep_range_validation():
    with pytest.raises(ValueError):
        SweepRange(n_max=0)
    with pytest.raises(ValueError):
        SweepRange(order=0)


def test_sweep_range_derived_caps():
    assert SweepRange().n_max_poly == 24
    assert SweepRange().n_max_recur == 20
    assert SweepRange(n_max=6).n_max_poly == 6
    assert SweepRange(n_max=6).n_max_recur == 6


def test_errata_records():
    report = errata_report()
    keys = [record.key for record in report.records]
    assert keys == ["thm10-z2", "eq1.6-shift", "thm12-domain"]

    z2 = report.records[0]
    assert z2.corrected == "z^2 T_(2s)(x)"
    assert "-2 (printed) vs 0 (corrected)" in z2.evidence
    assert "z^3" in z2.evidence

    shift = report.records[1]
    assert "z^1: True" in shift.evidence
    assert "z^3: True" in shift.evidence

    domain = report.records[2]
    assert "s=1 sweep passes" in domain.evidence
    assert "9 at z^4 vs direct 11" in domain.evidence

    text = report.render()
    assert text.startswith("FORMULA ERRATA")
    for record in report.records:
        assert record.key in text
