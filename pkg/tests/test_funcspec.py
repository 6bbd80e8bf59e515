import pytest

from walsh_forge import build_field, walsh_spectrum
from walsh_forge.funcspec import FunctionSpecError, parse_function_spec


@pytest.mark.parametrize("text,canonical", [
    ("Tr(x^34 + x^2)", "Tr(x^34 + x^2)"),
    ("Tr( x^34+x^2 )", "Tr(x^34 + x^2)"),
    ("Tr(xi^10 x^22 + x^4)", "Tr(xi^10 x^22 + x^4)"),
    ("Tr(ξ^10 x^22 + x^4)", "Tr(xi^10 x^22 + x^4)"),
    ("Tr(xi^0 x^2)", "Tr(x^2)"),
    ("Tr([0,0,1,1] x^22)", "Tr([0,0,1,1] x^22)"),
])
def test_roundtrip(text, canonical):
    spec = parse_function_spec(text)
    assert str(spec) == canonical
    assert parse_function_spec(str(spec)) == spec


@pytest.mark.parametrize("text,column", [
    ("Tr(x^^)", 6),
    ("Tr(x^2", 7),
    ("Tx(x^2)", 1),
    ("Tr(x^2 + )", 10),
    ("Tr(x^2) extra", 9),
    ("Tr(y^2)", 4),
])
def test_errors_report_column(text, column):
    with pytest.raises(FunctionSpecError) as err:
        parse_function_spec(text)
    assert err.value.column == column
    assert f"column {column}" in str(err.value)


def test_to_function_matches_manual():
    ctx = build_field(3, 4)
    f = parse_function_spec("Tr(xi^10 x^22 + x^4)").to_function(ctx)
    assert f.terms == ((ctx.xi**10, 22), (ctx.one, 4))
    g = parse_function_spec("Tr([0,1,0,0] x^2)").to_function(ctx)
    h = parse_function_spec("Tr(xi^1 x^2)").to_function(ctx)
    assert walsh_spectrum(g).entries == walsh_spectrum(h).entries


def test_coordinate_length_checked():
    ctx = build_field(3, 4)
    with pytest.raises(ValueError):
        parse_function_spec("Tr([1,2] x^2)").to_function(ctx)
