"""Gentle and locally gentle quiver presentations: invariants, resolutions and brute-force checks."""

from .catalog import NAMED
from .fileformat import PresentationSyntaxError, format_presentation, parse_presentation
from .invariants import (
    center,
    classify,
    cohen_macaulay,
    depth,
    gk_dim,
    global_dim,
    hilbert_series,
    injective_dim,
    prime_radical,
)
from .maxpaths import decompose_maximal_paths, koszul_dual
from .quiver import (
    GentlePresentation,
    Path,
    PresentationError,
    Quiver,
    build_quiver,
    make_presentation,
    path_basis,
    validate_presentation,
)
from .resolutions import ext_simple, injective_resolution, projective_resolution
from .spectrum import prime_spectrum

__all__ = [
    "NAMED",
    "GentlePresentation",
    "Path",
    "PresentationError",
    "PresentationSyntaxError",
    "Quiver",
    "build_quiver",
    "center",
    "classify",
    "cohen_macaulay",
    "decompose_maximal_paths",
    "depth",
    "ext_simple",
    "format_presentation",
    "gk_dim",
    "global_dim",
    "hilbert_series",
    "injective_dim",
    "injective_resolution",
    "koszul_dual",
    "make_presentation",
    "parse_presentation",
    "path_basis",
    "prime_radical",
    "prime_spectrum",
    "projective_resolution",
    "validate_presentation",
]
