import itertools

import numpy as np
import pytest

from walsh_forge.gf import (CONWAY_POLYNOMIALS, ContextMismatch, FieldError, build_field,
                            is_irreducible, quadratic_character, subfield_elements, trace)


def schoolbook_mul(a, b, modulus, p):
    """Independent oracle: coordinate-wise product reduced by the monic modulus."""
    n = len(modulus) - 1
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    for deg in range(len(prod) - 1, n - 1, -1):
        c = prod[deg] % p
        if c:
            for i, m in enumerate(modulus):
                prod[deg - n + i] -= c * m
    return tuple(v % p for v in prod[:n])


@pytest.fixture(scope="module")
def gf81():
    return build_field(3, 4)


def test_conway_default_for_81(gf81):
    assert gf81.modulus == (2, 0, 0, 2, 1)      # x^4 + 2x^3 + 2
    assert gf81.xi.coords == (0, 1, 0, 0)
    assert gf81.source == "conway"


@pytest.mark.parametrize("key", sorted(CONWAY_POLYNOMIALS))
def test_bundled_conway_entries_validate(key):
    p, n = key
    if p**n > 10**6:
        ctx = build_field(p, n, table_cap=0)
    else:
        ctx = build_field(p, n)
    assert ctx.source == "conway"
    assert is_irreducible(ctx.modulus, p)


def test_rejects_even_and_composite():
    with pytest.raises(FieldError, match="odd characteristic only"):
        build_field(2, 4)
    with pytest.raises(FieldError, match="odd characteristic only"):
        build_field(9, 1)


def test_rejects_reducible_modulus():
    with pytest.raises(FieldError, match="reducible modulus"):
        build_field(3, 2, [2, 0, 1])        # x^2 - 1
    with pytest.raises(FieldError, match="monic"):
        build_field(3, 2, [1, 1, 2])


def test_cache_returns_same_object():
    assert build_field(5, 2) is build_field(5, 2)


def test_multiplication_matches_schoolbook(gf81):
    ctx = gf81
    for a, b in itertools.product(range(ctx.q), repeat=2):
        want = schoolbook_mul(ctx.decode(a), ctx.decode(b), ctx.modulus, ctx.p)
        assert ctx.decode(ctx.mul_codes(a, b)) == want


def test_vmul_matches_poly_path(gf81):
    ctx = gf81
    a = np.repeat(ctx.all_codes(), ctx.q)
    b = np.tile(ctx.all_codes(), ctx.q)
    fast = ctx.vmul(a, b)
    rng = np.random.default_rng(1)
    for i in rng.choice(len(a), 500, replace=False):
        assert fast[i] == ctx.mul_codes_poly(int(a[i]), int(b[i]))


def test_field_axioms_exhaustive(gf81):
    ctx = gf81
    els = list(ctx.elements())
    zero, one = ctx.zero, ctx.one
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inverse() == one
    rng = np.random.default_rng(2)
    for _ in range(3000):
        a, b, c = (ctx.from_code(int(v)) for v in rng.integers(0, ctx.q, 3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a


def test_zech_addition_matches_coordinates(gf81):
    ctx = gf81
    for a, b in itertools.product(range(1, ctx.q), repeat=2):
        assert ctx.zech_add(a, b) == ctx.add_codes(a, b)


def test_pow_matches_repeated_multiplication():
    ctx = build_field(5, 2)
    for x in ctx.elements():
        acc = ctx.one
        for e in range(60):
            assert x**e == acc
            acc = acc * x
    x = ctx.xi
    assert x ** -1 == x.inverse()
    assert ctx.zero**0 == ctx.one
    with pytest.raises(FieldError):
        ctx.zero ** -1


def test_frobenius_is_additive(gf81):
    for a in gf81.elements():
        for b in (gf81.xi, gf81.xi**7, gf81(2)):
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()


def test_trace_fibres_are_balanced(gf81):
    counts = np.bincount(gf81.trace_table, minlength=3)
    assert counts.tolist() == [27, 27, 27]
    for x in gf81.elements():
        assert trace(x) == int(gf81.trace_table[x.code])


def test_relative_trace_lands_in_subfield():
    ctx = build_field(3, 4)
    for x in ctx.elements():
        t = trace(x, 2)
        assert t.in_subfield(2)
        assert ctx.vtrace(np.array([x.code]), 2)[0] == t.code
    sub = subfield_elements(ctx, 2)
    assert len(sub) == 9
    # transitivity Tr_1^4 = Tr_1^2 o Tr_2^4
    for x in ctx.elements():
        assert trace(trace(x, 2), 1, over=2) == trace(x)


def test_quadratic_character_multiplicative(gf81):
    els = list(gf81.elements())[1:]
    chi = {x.code: quadratic_character(x) for x in els}
    assert sum(1 for v in chi.values() if v == 1) == 40
    for a in els[::7]:
        for b in els:
            assert chi[(a * b).code] == chi[a.code] * chi[b.code]
    vec = gf81.vquadratic_character(gf81.all_codes())
    assert vec[0] == 0
    assert all(vec[c] == v for c, v in chi.items())


def test_subfield_quadratic_character():
    ctx = build_field(3, 4)
    for x in subfield_elements(ctx, 2)[1:]:
        # every element of GF(9) is a square in GF(81)
        assert quadratic_character(x) == 1
        assert quadratic_character(x, 2) in (1, -1)


def test_logs_and_exp_are_inverse(gf81):
    for i in range(gf81.q - 1):
        x = gf81.from_log(i)
        assert x.log() == i
    with pytest.raises(FieldError):
        gf81.zero.log()


def test_context_mismatch():
    a = build_field(3, 2).xi
    b = build_field(3, 2, [2, 1, 1]).xi    # x^2 + x + 2
    with pytest.raises(ContextMismatch):
        a + b


def test_search_fallback_without_tables():
    ctx = build_field(3, 5, table_cap=0)
    assert not ctx.has_tables
    x = ctx.xi
    assert x ** (ctx.q - 1) == 1
    assert x ** ((ctx.q - 1) // 11) != 1
