import cmath

import numpy as np
import pytest

from walsh_forge import (CycInt, PFunction, Regularity, build_field, classify, inverse_walsh,
                         walsh_at, walsh_spectrum)
from walsh_forge.gf import trace
from walsh_forge.walsh import SpectrumError, WalshSpectrum, check_parseval


def direct_walsh(f, b):
    """Oracle: the defining sum, one element at a time."""
    ctx = f.ctx
    counts = [0] * ctx.p
    for x in ctx.elements():
        counts[(f(x) - trace(b * x)) % ctx.p] += 1
    return CycInt.from_counts(ctx.p, counts)


def float_walsh(f, b):
    ctx = f.ctx
    w = cmath.exp(2j * cmath.pi / ctx.p)
    return sum(w ** ((f(x) - trace(b * x)) % ctx.p) for x in ctx.elements())


@pytest.fixture(scope="module")
def gf81():
    return build_field(3, 4)


def test_spectrum_matches_direct_sum(gf81):
    f = PFunction.trace_form(gf81, [(1, 34), (1, 2)])
    spec = walsh_spectrum(f)
    for b in list(gf81.elements())[::5]:
        assert spec[b] == direct_walsh(f, b)
        assert walsh_at(f, b) == spec[b]
        assert abs(complex(spec[b]) - float_walsh(f, b)) < 1e-6


def test_spectrum_matches_direct_sum_p5():
    ctx = build_field(5, 2)
    f = PFunction.trace_form(ctx, [(ctx.xi, 3), (1, 2)])
    spec = walsh_spectrum(f)
    for b in ctx.elements():
        assert spec[b] == direct_walsh(f, b)


def test_non_bent_with_irrational_norms():
    # |S(b)|^2 is not rational here, yet Parseval holds in Z[w]
    ctx = build_field(5, 2)
    f = PFunction.trace_form(ctx, [(ctx.xi, 3), (1, 2)])
    spec = walsh_spectrum(f)
    assert any(not z.is_rational() for z in spec.norms())
    assert classify(spec).regularity is Regularity.NOT_BENT
    total = sum(abs(complex(z)) ** 2 for z in spec.entries)
    assert abs(total - ctx.q**2) < 1e-6


def test_table_and_trace_form_agree(gf81):
    f = PFunction.trace_form(gf81, [(gf81.xi**5, 10), (1, 4)])
    g = PFunction.from_table(gf81, [f(x) for x in gf81.elements()])
    assert walsh_spectrum(f).entries == walsh_spectrum(g).entries


def test_parallel_jobs_agree(gf81):
    f = PFunction.trace_form(gf81, [(1, 34), (1, 2)])
    assert walsh_spectrum(f, jobs=3).entries == walsh_spectrum(f).entries


def test_parseval_and_inverse(gf81):
    f = PFunction.trace_form(gf81, [(gf81.xi**10, 22), (1, 4)])
    spec = walsh_spectrum(f)
    check_parseval(spec)
    for x in gf81.elements():
        inverse_walsh(spec, x)


def test_parseval_detects_corruption(gf81):
    f = PFunction.trace_form(gf81, [(1, 2)])
    spec = walsh_spectrum(f)
    bad = list(spec.entries)
    bad[3] = bad[3] + 1
    with pytest.raises(SpectrumError):
        check_parseval(WalshSpectrum(gf81, f, bad))


def test_inverse_detects_wrong_function(gf81):
    f = PFunction.trace_form(gf81, [(1, 2)])
    g = PFunction.trace_form(gf81, [(1, 4)])
    spec = walsh_spectrum(f)
    wrong = WalshSpectrum(gf81, g, spec.entries)
    with pytest.raises(SpectrumError):
        for x in gf81.elements():
            inverse_walsh(wrong, x)


def test_classification_examples(gf81):
    cases = {
        ((1, 1),): Regularity.NOT_BENT,                    # linear
        ((1, 34), (1, 2)): Regularity.WEAKLY_REGULAR,
        ((gf81.xi**10, 22), (1, 4)): Regularity.BENT_NOT_WEAKLY_REGULAR,
    }
    for terms, want in cases.items():
        assert classify(walsh_spectrum(PFunction.trace_form(gf81, terms))).regularity is want


def test_quadratic_forms_are_bent():
    # Tr(a x^2) is bent for every a != 0 and its dual is a quadratic again
    for p, n in ((3, 2), (3, 3), (5, 2), (7, 1)):
        ctx = build_field(p, n)
        for a in (ctx.one, ctx.xi):
            cls = classify(walsh_spectrum(PFunction.trace_form(ctx, [(a, 2)])))
            assert cls.is_bent
            assert cls.regularity in (Regularity.WEAKLY_REGULAR, Regularity.REGULAR)


def test_regular_dual_matches_transform():
    # Tr(x^2) over GF(9): S(0) = +3, S(b) = 3 w^(-Tr(b^2)/4)
    ctx = build_field(3, 2)
    f = PFunction.trace_form(ctx, [(1, 2)])
    spec = walsh_spectrum(f)
    cls = classify(spec)
    inv4 = pow(4, -1, 3)
    for b in ctx.elements():
        assert cls.dual[b.code] == (-trace(b * b) * inv4) % 3
    assert cls.regularity is Regularity.REGULAR
    assert cls.unit == (1, 0)


def test_regular_function_detected():
    # over GF(25), Tr(x^2) has S(0) = -5 and Tr(xi x^2) has S(0) = +5
    ctx = build_field(5, 2)
    assert classify(walsh_spectrum(PFunction.trace_form(ctx, [(1, 2)]))).unit == (-1, 0)
    spec = walsh_spectrum(PFunction.trace_form(ctx, [(ctx.xi, 2)]))
    cls = classify(spec)
    assert cls.regularity is Regularity.REGULAR
    assert cls.unit[0] == 1
    for b in ctx.elements():
        z = spec[b]
        assert z == 5 * CycInt.one(5).rotate(cls.dual[b.code])


def affine_shift(f, c, e):
    ctx = f.ctx
    vals = (f.values() + ctx.trace_table[ctx.vmul(c.code, ctx.all_codes())] + e) % ctx.p
    return PFunction.from_table(ctx, vals)


@pytest.mark.parametrize("terms_key", ["wr", "nwr", "not_bent"])
def test_affine_invariance(gf81, terms_key):
    terms = {"wr": [(1, 34), (1, 2)],
             "nwr": [(gf81.xi**30, 22), (1, 4)],
             "not_bent": [(1, 4), (gf81.xi, 2), (1, 1)]}[terms_key]
    f = PFunction.trace_form(gf81, terms)
    base = classify(walsh_spectrum(f))
    rng = np.random.default_rng(7)
    for _ in range(6):
        c = gf81.from_code(int(rng.integers(gf81.q)))
        e = int(rng.integers(3))
        spec = walsh_spectrum(affine_shift(f, c, e))
        cls = classify(spec)
        assert cls.is_bent == base.is_bent
        weak = {Regularity.WEAKLY_REGULAR, Regularity.REGULAR}
        assert (cls.regularity in weak) == (base.regularity in weak)
        # S_{f + Tr(cx) + e}(b) = w^e S_f(b - c)
        ref = walsh_spectrum(f)
        for b in list(gf81.elements())[::9]:
            assert spec[b] == ref[b - c].rotate(e)


def test_table_validation(gf81):
    with pytest.raises(ValueError):
        PFunction.from_table(gf81, [0] * 10)
    with pytest.raises(ValueError):
        PFunction(gf81)
