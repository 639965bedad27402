import json

from conductor_lab.catalog import catalog_entries, catalog_report, catalog_rows


def test_claims_are_cited():
    for entry in catalog_entries():
        assert entry.claims, entry.name
        for claim in entry.claims:
            assert claim.anchor
            assert 3 <= len(claim.quote.split()) <= 6, claim.quote
            assert claim.citation.startswith(claim.anchor)


def test_entry_names_unique():
    names = [e.name for e in catalog_entries()]
    assert len(names) == len(set(names))


def test_report_is_deterministic():
    assert catalog_report("json") == catalog_report("json")
    assert catalog_report("table") == catalog_report("table")


def test_one_row_per_claim():
    rows = catalog_rows()
    assert len(rows) == sum(len(e.claims) for e in catalog_entries())
    tacnode_defects = [r for r in rows if r.entry == "tacnode" and r.invariant == "type_defect"]
    assert sorted(r.claimed for r in tacnode_defects) == [0, 2]
    assert [r.agrees for r in sorted(tacnode_defects, key=lambda r: r.claimed)] == [True, False]


def test_ordinary_germs_agree():
    rows = catalog_rows()
    for r in rows:
        if r.entry in ("node", "cusp", "smooth", "node+cusp+tacnode", "ribbon"):
            assert r.agrees is True, (r.entry, r.invariant)
        if r.entry == "<3,4,5>" and r.invariant != "omega_generators":
            assert r.agrees is True, r.invariant


def test_unverifiable_claims_are_not_judged():
    rows = {(r.entry, r.invariant): r for r in catalog_rows()}
    row = rows[("quotient(3;1,1,2)", "defect")]
    assert row.computed is None and row.agrees is None
    assert rows[("quotient(3;1,1,2)", "gorenstein")].agrees is True


def test_json_shape():
    rows = json.loads(catalog_report("json"))
    assert rows[0]["entry"] == "smooth"
    tac = [r for r in rows if r["entry"] == "tacnode" and r["invariant"] == "conductor"][0]
    assert tac["computed"] == [2, 2] and tac["claimed"] == [4, 4] and tac["agrees"] is False


def test_table_footer_counts():
    rows = catalog_rows()
    last = catalog_report("table").rstrip().splitlines()[-1]
    assert last == f"{len(rows)} claims, {sum(r.agrees is False for r in rows)} disagreements"


def test_explicit_truncation():
    assert catalog_rows(truncation=60) == catalog_rows()
