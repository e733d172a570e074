"""Exact energies of integral circulant graphs."""

from ._icg import (
    ResourceError,
    brute_force_emax,
    brute_force_emax_general,
    canonical_maximizer,
    classify,
    emax,
    emax_alternative,
    emin,
    energy,
    energy_general,
    h_equidistant,
    h_value,
    koolen_moulton_check,
    normalize,
    replay,
    run_cli,
    spectrum,
    verify_theorem,
)

__all__ = [
    "ResourceError",
    "brute_force_emax",
    "brute_force_emax_general",
    "canonical_maximizer",
    "classify",
    "emax",
    "emax_alternative",
    "emin",
    "energy",
    "energy_general",
    "h_equidistant",
    "h_value",
    "koolen_moulton_check",
    "normalize",
    "replay",
    "run_cli",
    "spectrum",
    "verify_theorem",
]
