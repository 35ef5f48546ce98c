"""Exact parabolic and cohomogeneity-one computations for noncompact
symmetric spaces (python bindings over the C++ core)."""

from ._coh1 import (  # noqa: F401
    DomainError,
    CohUsageError,
    boundary,
    classify,
    database_roundtrip_ok,
    database_text,
    diff_against_reference,
    dim_space,
    enumerate_parabolics,
    extend,
    gradation,
    list_spaces,
    nilpotent_candidates,
    parabolic,
    root_system,
    space_info,
    __version__,
)
