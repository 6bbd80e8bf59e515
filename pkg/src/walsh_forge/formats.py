"""File formats: field descriptions, spectra, and CSV exports."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from pathlib import Path

from .cyclotomic import CycInt
from .expsums import CTable
from .gf import FieldCtx, field_from_description
from .walsh import PFunction, WalshSpectrum, check_parseval

CACHE_ENV = "WALSH_FORGE_CACHE_DIR"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def field_json(ctx: FieldCtx) -> str:
    return dumps(ctx.description())


def load_field(path: str | os.PathLike) -> FieldCtx:
    return field_from_description(json.loads(Path(path).read_text()))


def _b_log(ctx: FieldCtx, code: int) -> str:
    return "" if code == 0 else str(int(ctx.log[code]))


def spectrum_to_json(spec: WalshSpectrum) -> dict:
    ctx = spec.ctx
    return {
        "field": ctx.description(),
        "function": spec.function.descriptor(),
        "entries": [{"b": list(ctx.decode(code)), "coeffs": list(z.coeffs)}
                    for code, z in enumerate(spec.entries)],
    }


def spectrum_from_json(obj: dict) -> tuple[FieldCtx, list[CycInt]]:
    ctx = field_from_description(obj["field"])
    entries = [None] * ctx.q
    for e in obj["entries"]:
        entries[ctx.encode(e["b"])] = CycInt(ctx.p, e["coeffs"])
    return ctx, entries


def _mag_sq_text(z: CycInt) -> str:
    norm = z * z.conj()
    return str(norm.rational_value()) if norm.is_rational() else str(norm)


def spectrum_to_csv(spec: WalshSpectrum) -> str:
    ctx = spec.ctx
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["b_log", "b_coords", "coeff_vector", "mag_sq"])
    for code, z in enumerate(spec.entries):
        w.writerow([_b_log(ctx, code), " ".join(map(str, ctx.decode(code))),
                    " ".join(map(str, z.coeffs)), _mag_sq_text(z)])
    return buf.getvalue()


def ctable_to_csv(table: CTable) -> str:
    ctx = table.params.field()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a_log", "C_value"])
    for code, v in enumerate(table.values):
        w.writerow([_b_log(ctx, code), int(v)])
    return buf.getvalue()


def counts_to_csv(ctx: FieldCtx, rows) -> str:
    """(b, c, n+, n-) rows, element codes as produced by verify_prop2."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["b_log", "c", "n_plus", "n_minus"])
    for b, c, n_plus, n_minus in rows:
        w.writerow([_b_log(ctx, b), " ".join(map(str, ctx.decode(c))), n_plus, n_minus])
    return buf.getvalue()


def roots_to_csv(ctx: FieldCtx, root_sets: dict) -> str:
    """``root_sets`` maps a c (FieldElem) to an iterable of roots."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["c", "root_log", "root_coords"])
    for c in sorted(root_sets):
        for x in sorted(root_sets[c]):
            w.writerow([" ".join(map(str, c.coords)), _b_log(ctx, x.code),
                        " ".join(map(str, x.coords))])
    return buf.getvalue()


def fingerprint(ctx: FieldCtx, function_text: str) -> str:
    h = hashlib.sha256()
    h.update(json.dumps(ctx.description(), sort_keys=True).encode())
    h.update(b"\0")
    h.update(function_text.encode())
    return h.hexdigest()[:32]


def cache_dir() -> Path | None:
    d = os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def cached_spectrum(ctx: FieldCtx, function_text: str) -> list[CycInt] | None:
    d = cache_dir()
    if d is None:
        return None
    path = d / f"{fingerprint(ctx, function_text)}.json"
    if not path.exists():
        return None
    cached_ctx, entries = spectrum_from_json(json.loads(path.read_text()))
    if cached_ctx != ctx or any(e is None for e in entries):
        return None
    return entries


def store_spectrum(spec: WalshSpectrum, function_text: str) -> Path | None:
    d = cache_dir()
    if d is None:
        return None
    d.mkdir(parents=True, exist_ok=True)
    path = d / f"{fingerprint(spec.ctx, function_text)}.json"
    path.write_text(json.dumps(spectrum_to_json(spec)))
    return path


def spectrum_from_entries(f: PFunction, entries: list[CycInt]) -> WalshSpectrum:
    spec = WalshSpectrum(f.ctx, f, list(entries))
    check_parseval(spec)
    return spec
