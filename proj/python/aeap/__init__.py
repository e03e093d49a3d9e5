"""Cascading failures and auxiliary entity allocation in interdependent networks."""

from ._core import (
    AeapError,
    CapExceededError,
    Network,
    acfmhv,
    afmhv,
    apply_modification,
    export_lp,
    format_network,
    gen_network,
    k_most_vulnerable,
    parse_network,
    protection_set,
    reduce_setcover,
    simulate_cascade,
    solve,
    trace_csv,
)

__all__ = [
    "AeapError",
    "CapExceededError",
    "Network",
    "acfmhv",
    "afmhv",
    "apply_modification",
    "export_lp",
    "format_network",
    "gen_network",
    "k_most_vulnerable",
    "parse_network",
    "protection_set",
    "reduce_setcover",
    "simulate_cascade",
    "solve",
    "trace_csv",
]
