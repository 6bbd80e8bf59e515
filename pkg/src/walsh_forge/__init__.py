"""Exact Walsh spectra and bent-function verification over GF(p^n), p odd."""

from .cyclotomic import CycInt, cyc_root, mag_sq, match_scaled_root, ratio_is_scaled_root
from .gf import (FieldCtx, FieldElem, FieldError, build_field, quadratic_character,
                 subfield_elements, trace)
from .params import FamilyParams
from .report import Report
from .walsh import (Classification, PFunction, Regularity, WalshSpectrum, classify,
                    inverse_walsh, walsh_at, walsh_spectrum)

__version__ = "0.1.0"

__all__ = [
    "Classification", "CycInt", "FamilyParams", "FieldCtx", "FieldElem", "FieldError",
    "PFunction", "Regularity", "Report", "WalshSpectrum", "build_field", "classify",
    "cyc_root", "inverse_walsh", "mag_sq", "match_scaled_root", "quadratic_character",
    "ratio_is_scaled_root", "subfield_elements", "trace", "walsh_at", "walsh_spectrum",
]
