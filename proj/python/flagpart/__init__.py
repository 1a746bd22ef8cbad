"""Exact point counts of flag-manifold partition pieces over finite fields."""

from flagpart._core import (  # noqa: F401
    __version__,
    count,
    data_check,
    flag_total,
    interpolate,
    solve_traces,
    verify,
)
