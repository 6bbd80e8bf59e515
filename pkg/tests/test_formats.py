import json

import jsonschema
import pytest

from walsh_forge import FamilyParams, PFunction, build_field, walsh_spectrum
from walsh_forge import formats
from walsh_forge.report import MAX_COUNTEREXAMPLES, Report, merge, report_schema
from walsh_forge.walsh import SpectrumError


def test_field_description_roundtrip(tmp_path):
    ctx = build_field(5, 2)
    path = tmp_path / "f.json"
    path.write_text(formats.field_json(ctx))
    assert formats.load_field(path) == ctx


def test_spectrum_json_roundtrip():
    ctx = build_field(3, 2)
    spec = walsh_spectrum(PFunction.trace_form(ctx, [(ctx.xi, 2)]))
    obj = json.loads(json.dumps(formats.spectrum_to_json(spec)))
    ctx2, entries = formats.spectrum_from_json(obj)
    assert ctx2 == ctx and entries == spec.entries


def test_cache_rejects_tampered_file(tmp_path, monkeypatch):
    monkeypatch.setenv(formats.CACHE_ENV, str(tmp_path))
    ctx = build_field(3, 2)
    f = PFunction.trace_form(ctx, [(1, 2)])
    spec = walsh_spectrum(f)
    path = formats.store_spectrum(spec, "Tr(x^2)")
    entries = formats.cached_spectrum(ctx, "Tr(x^2)")
    assert entries == spec.entries
    obj = json.loads(path.read_text())
    obj["entries"][1]["coeffs"] = [0, 0]
    path.write_text(json.dumps(obj))
    with pytest.raises(SpectrumError):
        formats.spectrum_from_entries(f, formats.cached_spectrum(ctx, "Tr(x^2)"))


def test_fingerprint_depends_on_field_and_function():
    a, b = build_field(3, 2), build_field(3, 2, [2, 1, 1])
    assert formats.fingerprint(a, "Tr(x^2)") != formats.fingerprint(b, "Tr(x^2)")
    assert formats.fingerprint(a, "Tr(x^2)") != formats.fingerprint(a, "Tr(x^4)")


def test_csv_exports():
    from walsh_forge.expsums import c_table
    from walsh_forge.units import verify_prop2
    P = FamilyParams(3, 1)
    ctx = P.field()
    text = formats.ctable_to_csv(c_table(P))
    assert text.splitlines()[0] == "a_log,C_value" and len(text.splitlines()) == 82
    rows = []
    verify_prop2(P, rows=rows)
    text = formats.counts_to_csv(ctx, rows)
    assert text.splitlines()[0] == "b_log,c,n_plus,n_minus"
    assert len(text.splitlines()) == 1 + 81 * 3


def test_report_contract():
    rep = Report("prop1", {"p": 3, "k": 1})
    assert rep.passed
    jsonschema.validate(json.loads(rep.dumps()), report_schema())
    for i in range(MAX_COUNTEREXAMPLES + 5):
        rep.fail("x", i=i)
    obj = json.loads(rep.dumps())
    jsonschema.validate(obj, report_schema())
    assert not obj["pass"]
    assert len(obj["counterexamples"]) == MAX_COUNTEREXAMPLES
    assert obj["total_counterexamples"] == MAX_COUNTEREXAMPLES + 5
    merged = merge("all", {"p": 3, "k": 1}, [rep, Report("prop2", {"p": 3, "k": 1})])
    assert merged.total_counterexamples == MAX_COUNTEREXAMPLES + 5
    jsonschema.validate(json.loads(merged.dumps()), report_schema())


def test_schema_rejects_inconsistent_pass():
    bad = json.loads(Report("prop1", {"p": 3, "k": 1}).dumps())
    bad["counterexamples"] = [{"check": "x"}]
    bad["total_counterexamples"] = 1
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, report_schema())
