"""The polynomials T+(X, c) and T-(X, c) and their root structure.

    T+-(X, c) = X^d +- (X+c)^d + X^(d p^k) +- (X+c)^(d p^k),   d = (p^2k + 1)/2

Everything here is decided by evaluating the polynomials on every element of
GF(p^4k); no symbolic algebra is involved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldElem, FieldError
from .params import FamilyParams
from .report import Report


@dataclass(frozen=True)
class TPolySpec:
    params: FamilyParams
    sign: int          # +1 for T+, -1 for T-
    c: FieldElem

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not self.c.in_subfield(self.params.k):
            raise FieldError(f"c = {self.c!r} is not in GF(p^{self.params.k})")

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def dpk(self) -> int:
        return self.params.d * self.params.pk

    @property
    def degree(self) -> int:
        # leading monomials X^(d p^k) + (X+c)^(d p^k) give 2 X^(d p^k) for T+;
        # 2 != 0 in odd characteristic so nothing cancels. For T- they cancel.
        return self.dpk


def t_plus(params: FamilyParams, c) -> TPolySpec:
    ctx = params.field()
    return TPolySpec(params, 1, ctx(c))


def t_minus(params: FamilyParams, c) -> TPolySpec:
    ctx = params.field()
    return TPolySpec(params, -1, ctx(c))


def t_eval(spec: TPolySpec, x: FieldElem) -> FieldElem:
    d, dpk = spec.d, spec.dpk
    y = x + spec.c
    return x**d + spec.sign * y**d + x**dpk + spec.sign * y**dpk


def t_values(params: FamilyParams, sign: int, xs, c) -> np.ndarray:
    """Vectorized T(x, c) over arrays of codes ``xs`` and ``c`` (broadcast)."""
    ctx = params.field()
    d, dpk = params.d, params.d * params.pk
    ys = ctx.vadd(xs, c)
    lhs = ctx.vadd(ctx.vpow(xs, d), ctx.vpow(xs, dpk))
    rhs = ctx.vadd(ctx.vpow(ys, d), ctx.vpow(ys, dpk))
    return ctx.vadd(lhs, rhs) if sign == 1 else ctx.vsub(lhs, rhs)


def roots_over_field(spec: TPolySpec) -> list[FieldElem]:
    ctx = spec.c.ctx
    vals = t_values(spec.params, spec.sign, ctx.all_codes(), spec.c.code)
    return [ctx.from_code(int(c)) for c in np.flatnonzero(vals == 0)]


def _root_codes(params: FamilyParams, sign: int, c_code: int, squared: bool = False) -> np.ndarray:
    ctx = params.field()
    xs = ctx.all_codes()
    arg = ctx.vpow(xs, 2) if squared else xs
    return np.flatnonzero(t_values(params, sign, arg, c_code) == 0)


def verify_prop3(params: FamilyParams) -> Report:
    """Root count, squareness and disjointness for T+(X, c), c in GF(p^k)*."""
    rep = Report("prop3", params.as_dict())
    with rep.timed():
        ctx = params.field()
        chi = ctx.vquadratic_character
        cs = [int(c) for c in ctx.subfield_codes(params.k) if c]
        deg = t_plus(params, 1).degree
        root_sets = {}
        base = None
        for c in cs:
            spec = t_plus(params, ctx.from_code(c))
            rep.expect(t_eval(spec, ctx.zero) == 2 * spec.c, "T+(0,c) = 2c", c=c)
            roots = _root_codes(params, 1, c)
            root_sets[c] = set(roots.tolist())
            rep.expect(len(roots) == deg, "T+(X,c) splits", c=c, roots=len(roots), degree=deg)
            for x in roots:
                shifted = ctx.add_codes(int(x), c)
                if not (x != 0 and chi(x) == 1 and chi(shifted) == 1):
                    rep.fail("T+ root: x, x+c nonzero squares", c=c, x=list(ctx.decode(int(x))))
            minus_roots = _root_codes(params, -1, c)
            bad = minus_roots[chi(minus_roots) >= 0]
            for x in bad:
                rep.fail("T- has no square roots", c=c, x=list(ctx.decode(int(x))))
            if c == 1:
                base = roots
        if base is not None:
            for c in cs:
                scaled = set(ctx.vmul(base, c).tolist())
                rep.expect(scaled == root_sets[c], "roots(T+(X,c)) = c * roots(T+(X,1))", c=c)
        for i, c1 in enumerate(cs):
            for c2 in cs[i + 1:]:
                common = root_sets[c1] & root_sets[c2]
                rep.expect(not common, "disjoint root sets", c1=c1, c2=c2, common=len(common))

        zero_roots = set(_root_codes(params, 1, 0).tolist())
        expected_nz = (params.p2k + 1) * (params.pk - 1) // 2
        rep.expect(len(zero_roots - {0}) == expected_nz, "nonzero roots of T+(X,0)",
                   found=len(zero_roots - {0}), expected=expected_nz)
        for c in cs:
            common = zero_roots & root_sets[c]
            rep.expect(not common, "T+(X,0) and T+(X,c) share no roots", c=c, common=len(common))
        sq_zero = _root_codes(params, 1, 0, squared=True)
        expected_sq = (params.p2k + 1) * (params.pk - 1)
        nz = int(np.count_nonzero(sq_zero))
        rep.expect(nz == expected_sq, "nonzero roots of T+(X^2,0)", found=nz, expected=expected_sq)
        rep.details = {"degree": deg,
                       "root_counts": {str(c): len(s) for c, s in root_sets.items()},
                       "nonzero_roots_T_plus_X_0": len(zero_roots - {0}),
                       "nonzero_roots_T_plus_X2_0": nz}
    return rep


def verify_cor1(params: FamilyParams) -> Report:
    rep = Report("cor1", params.as_dict())
    with rep.timed():
        ctx = params.field()
        q = ctx.q
        chi = ctx.vquadratic_character
        cs = [int(c) for c in ctx.subfield_codes(params.k)]
        deg = t_plus(params, 1).degree
        cover = np.zeros(q, dtype=np.int64)
        sizes = {}
        squares = ctx.vpow(ctx.all_codes(), 2)
        for c in cs:
            roots = _root_codes(params, 1, c, squared=True)
            cover[roots] += 1
            sizes[str(c)] = len(roots)
            if c == 0:
                continue
            rep.expect(len(roots) == 2 * deg, "T+(X^2,c) splits", c=c, roots=len(roots))
            shifted = ctx.vadd(squares[roots], c)
            for x in roots[chi(shifted) != 1]:
                rep.fail("x^2 + c is a square", c=c, x=list(ctx.decode(int(x))))
            minus = _root_codes(params, -1, c, squared=True)
            for x in minus:
                rep.fail("T-(X^2,c) has no roots", c=c, x=list(ctx.decode(int(x))))
        overlap = np.flatnonzero(cover != 1)
        for x in overlap:
            rep.fail("root sets over c in GF(p^k) partition GF(p^n)", x=list(ctx.decode(int(x))),
                     multiplicity=int(cover[x]))

        # c = 0: roots are 0 and the b != 0 with Tr_k^2k(b^(p^2k + 1)) = 0
        zero_roots = set(_root_codes(params, 1, 0, squared=True).tolist())
        norm = ctx.vpow(ctx.all_codes(), params.p2k + 1)
        tr = ctx.vtrace(norm, params.k, over=2 * params.k)
        predicted = {0} | set(np.flatnonzero(tr == 0).tolist())
        rep.expect(zero_roots == predicted, "roots of T+(X^2,0) described by the norm trace",
                   found=len(zero_roots), predicted=len(predicted))
        rep.details = {"root_set_sizes": sizes}
    return rep


def cor2_roots(params: FamilyParams) -> tuple[np.ndarray, np.ndarray]:
    """For every b (by code): number of y in GF(p^k) with T+(b^2, y) = 0 and
    the smallest such y (-1 when none)."""
    ctx = params.field()
    b2 = ctx.vpow(ctx.all_codes(), 2)
    count = np.zeros(ctx.q, dtype=np.int64)
    first = np.full(ctx.q, -1, dtype=np.int64)
    for y in ctx.subfield_codes(params.k):
        hit = t_values(params, 1, b2, int(y)) == 0
        first[hit & (first < 0)] = y
        count += hit
    return count, first


def verify_cor2(params: FamilyParams) -> Report:
    rep = Report("cor2", params.as_dict())
    with rep.timed():
        ctx = params.field()
        allb = ctx.all_codes()
        b2 = ctx.vpow(allb, 2)
        count, root = cor2_roots(params)
        for b in np.flatnonzero(count != 1):
            rep.fail("T+(b^2,Y) has a unique root in GF(p^k)", b=list(ctx.decode(int(b))),
                     roots=int(count[b]))
        ok = count == 1
        shifted = ctx.vadd(b2[ok], root[ok])
        for b in allb[ok][ctx.vquadratic_character(shifted) < 0]:
            rep.fail("b^2 + y is a square", b=list(ctx.decode(int(b))))
        for y in ctx.subfield_codes(params.k):
            zero = t_values(params, -1, b2, int(y)) == 0
            if y == 0:
                for b in allb[~zero]:
                    rep.fail("T-(b^2,0) = 0", b=list(ctx.decode(int(b))))
            else:
                for b in allb[zero]:
                    rep.fail("T-(b^2,y) = 0 only at y = 0", b=list(ctx.decode(int(b))), y=int(y))
        rep.details = {"b_checked": int(ctx.q)}
    return rep
