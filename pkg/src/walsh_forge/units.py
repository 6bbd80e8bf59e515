"""The cyclic subgroup U of order p^2k + 1 in GF(p^4k)* and the counters
n+(c), n-(c) over its square and nonsquare halves.

Membership in U+ / U- is decided by exponentiation, never by discrete-log
parity, so these checks do not share a failure mode with the log tables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldElem, FieldError, trace
from .params import FamilyParams
from .report import Report


class UnitGroupError(ArithmeticError):
    pass


def _tr(x: FieldElem, k: int) -> FieldElem:
    # trace() hands back a bare residue when k == 1
    return x.ctx(trace(x, k))


@dataclass(frozen=True)
class UnitSet:
    params: FamilyParams
    elements: tuple[FieldElem, ...]
    plus: tuple[FieldElem, ...]
    minus: tuple[FieldElem, ...]


def build_unit_set(params: FamilyParams) -> UnitSet:
    ctx = params.field()
    order = params.p2k + 1
    gen = ctx.xi ** (params.p2k - 1)
    elems = [ctx.one]
    u = gen
    while u != ctx.one:
        elems.append(u)
        u = u * gen
    if len(elems) != order:
        raise UnitGroupError(f"|U| = {len(elems)}, expected {order}")
    half = order // 2
    plus, minus = [], []
    for u in elems:
        v = u**half
        if v == 1:
            plus.append(u)
        elif v == -1:
            minus.append(u)
        else:
            raise UnitGroupError(f"u^((p^2k+1)/2) = {v!r} is not +-1")
    if len(plus) != half or len(minus) != half:
        raise UnitGroupError(f"|U+| = {len(plus)}, |U-| = {len(minus)}, expected {half} each")
    if {(-u).code for u in plus} != {u.code for u in minus}:
        raise UnitGroupError("-U+ != U-")
    for u in elems:
        if _tr(u, params.k).is_zero():
            raise UnitGroupError(f"Tr_k^n(u) = 0 at u = {u!r}")
    return UnitSet(params, tuple(elems), tuple(plus), tuple(minus))


def count_n(b: FieldElem, c: FieldElem, units: UnitSet) -> tuple[int, int]:
    """(n+(c), n-(c)) = numbers of u in U+ / U- with Tr_k^n(bu) = c."""
    k = units.params.k
    if not c.in_subfield(k):
        raise FieldError(f"c = {c!r} is not in GF(p^{k})")
    n_plus = sum(1 for u in units.plus if _tr(b * u, k) == c)
    n_minus = sum(1 for u in units.minus if _tr(b * u, k) == c)
    return n_plus, n_minus


def verify_prop2(params: FamilyParams, b_set=None, rows: list | None = None) -> Report:
    """Check n+(c) - n-(c) for every b in ``b_set`` (default: the whole field)
    and every c in GF(p^k). ``rows``, if given, collects (b, c, n+, n-) codes."""
    rep = Report("prop2", params.as_dict())
    with rep.timed():
        ctx = params.field()
        k = params.k
        units = build_unit_set(params)
        half = len(units.plus)
        spk = params.s * params.pk
        if b_set is None:
            bs = ctx.all_codes()
        else:
            bs = np.array([ctx(b).code for b in b_set], dtype=np.int64)
        subfield = ctx.subfield_codes(k)

        # traces[i, j] = Tr_k^n(b_j u_i)
        tr_plus = np.stack([ctx.vtrace(ctx.vmul(bs, u.code), k) for u in units.plus])
        tr_minus = np.stack([ctx.vtrace(ctx.vmul(bs, u.code), k) for u in units.minus])
        tb = ctx.vtrace(ctx.vpow(bs, params.d), k)
        neg_tb = ctx.vneg(tb)
        total_plus = np.zeros(len(bs), dtype=np.int64)
        total_minus = np.zeros(len(bs), dtype=np.int64)
        for c in subfield:
            n_plus = (tr_plus == c).sum(axis=0)
            n_minus = (tr_minus == c).sum(axis=0)
            total_plus += n_plus
            total_minus += n_minus
            want = np.where(tb == 0, 0, np.where(tb == c, spk, np.where(neg_tb == c, -spk, 0)))
            for j in np.flatnonzero(n_plus - n_minus != want):
                rep.fail("n+(c) - n-(c)", b=list(ctx.decode(int(bs[j]))),
                         c=list(ctx.decode(int(c))), found=int(n_plus[j] - n_minus[j]),
                         expected=int(want[j]))
            if rows is not None:
                rows.extend(zip(bs.tolist(), [int(c)] * len(bs), n_plus.tolist(), n_minus.tolist()))
        for j in np.flatnonzero((total_plus != half) | (total_minus != half)):
            rep.fail("counting partition", b=list(ctx.decode(int(bs[j]))))

        nonsquare = ctx.vquadratic_character(bs) == -1
        zero_tr2k = ctx.vtrace(ctx.vpow(bs, params.d), 2 * k) == 0
        rep.details = {"b_checked": len(bs), "unit_order": len(units.elements),
                       "nonsquare_zero_trace_b": int(np.count_nonzero(nonsquare & zero_tr2k)),
                       "nonzero_trace_b": int(np.count_nonzero(tb))}
    if rows is not None:
        rows.sort()
    return rep
