import pytest
from core.errors import InvalidParamsError, UnknownIdentityError
from services.harness.catalog import (
    REMARK_ID,
    SCAN_ID,
    CatalogEntry,
    default_catalog,
    known_checks,
    run_catalog,
    run_check,
)
from services.harness.checks import CONGRUENCES
from services.harness.formulas import IDENTITIES


def test_known_checks():
    checks = known_checks()
    assert checks == sorted(checks)
    assert len(checks) == len(IDENTITIES) + len(CONGRUENCES) + 2
    assert REMARK_ID in checks and SCAN_ID in checks


def test_run_check_dispatch():
    assert run_check("pz-gf", {"z": 0, "order": 10}).identity_id == "pz-gf"
    assert run_check("congP", {"t": 2, "n_max": 8}).passed
    remark = run_check(REMARK_ID, {"z": 1, "t": 4})
    assert remark.params["witness"] == "3,1"
    scan = run_check(SCAN_ID, {"t": 3, "n_max": 6})
    assert scan.params["t_range"] == [2, 3]


def test_run_check_errors():
    with pytest.raises(UnknownIdentityError):
        run_check("nothing-here")
    with pytest.raises(InvalidParamsError):
        run_check("bgt-gf", {"t": 0})
    with pytest.raises(InvalidParamsError):
        run_check(REMARK_ID, {"z": 0, "t": 4})


def test_default_catalog_quick():
    entries = default_catalog(quick=True)
    known = set(known_checks())
    assert all(entry.check_id in known for entry in entries)
    assert {entry.check_id for entry in entries} == known
    assert entries[-1].check_id == SCAN_ID
    for entry in entries:
        entry.request()


def test_default_catalog_full_is_larger():
    assert len(default_catalog()) > len(default_catalog(quick=True))


def test_closed_forms_flag_reaches_identities():
    entries = default_catalog(quick=True, closed_forms=True)
    han_ji = [e for e in entries if e.check_id == "han-ji-addition"]
    assert han_ji and all(e.params["closed_forms"] for e in han_ji)


def test_catalog_has_seeded_random_entries():
    entries = default_catalog(quick=True)
    assert any(e.params.get("rho") == "random" for e in entries)
    assert any(e.params.get("rho1") == "random" for e in entries)


@pytest.mark.parametrize("jobs", [1, 2])
def test_run_catalog_keeps_order(jobs):
    entries = [
        CatalogEntry("congP", {"t": 2, "n_max": 5}),
        CatalogEntry("pz-gf", {"z": 1, "order": 8}),
        CatalogEntry(REMARK_ID, {"z": 0, "t": 3}),
    ]
    reports = run_catalog(entries, jobs=jobs)
    assert [r.identity_id for r in reports] == ["congP", "pz-gf", REMARK_ID]
    assert all(r.passed for r in reports)


@pytest.mark.slow
def test_quick_catalog_passes():
    entries = default_catalog(quick=True)
    reports = run_catalog(entries, jobs=1)
    failures = [(e.check_id, e.params, r.witness) for e, r in zip(entries, reports) if not r.passed]
    assert failures == []


def test_every_catalog_remark_passes():
    remarks = [e for e in default_catalog() if e.check_id == REMARK_ID]
    assert {(e.params["z"], e.params["t"]) for e in remarks} >= {(1, 3), (1, 5), (1, 7), (1, 9)}
    for entry in remarks:
        report = run_check(entry.check_id, entry.params)
        assert report.passed, (entry.params, report.witness)


def test_default_catalog_overrides():
    entries = default_catalog(quick=True, order=12, n_max=9)
    orders = {e.params["order"] for e in entries if e.check_id == "pz-gf"}
    assert orders == {12}
    assert {e.params["n_max"] for e in entries if e.check_id == "congP"} == {9}
    no_order = [e.params["order"] for e in entries if e.check_id == "NO"]
    assert no_order == [12]
    assert all(e.params["order"] <= 12 for e in entries if e.check_id == "z-NO")
