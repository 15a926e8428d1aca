"""Exact approximation numbers of anisotropic periodic Sobolev embeddings."""

from __future__ import annotations

__version__ = "0.1.0"

from .profile import SmoothnessProfile, make_profile, parse_profile, quasi_norm
from .lattice import ResourceGuardError, count_lattice, get_backend, use_backend
from .spectrum import SpectrumEntry, approx_number, spectrum_prefix, spectrum_values
from .limitspace import limit_approx_number, limit_count
from .volumetrics import log_volume_ball, strong_equiv_constant
from .envelopes import asymptotic_envelope, piecewise_envelope, strong_equiv_bracket
from .tractability import info_complexity, limit_info_complexity, wt_ratio

__all__ = [
    "__version__",
    "SmoothnessProfile",
    "make_profile",
    "parse_profile",
    "quasi_norm",
    "ResourceGuardError",
    "count_lattice",
    "get_backend",
    "use_backend",
    "SpectrumEntry",
    "approx_number",
    "spectrum_prefix",
    "spectrum_values",
    "limit_approx_number",
    "limit_count",
    "log_volume_ball",
    "strong_equiv_constant",
    "asymptotic_envelope",
    "piecewise_envelope",
    "strong_equiv_bracket",
    "info_complexity",
    "limit_info_complexity",
    "wt_ratio",
]
