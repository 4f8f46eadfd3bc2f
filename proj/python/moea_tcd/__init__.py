"""NSGA-II with classic and truthful crowding distance, GSEMO and bitstring benchmarks."""

from ._core import (
    ConfigError,
    ContractViolation,
    __version__,
    classic_crowding_distance,
    compare_dominance,
    evaluate,
    front_size,
    list_presets,
    mei,
    non_dominated_sort,
    run,
    run_preset,
    truthful_crowding_distance,
)

__all__ = [
    "ConfigError",
    "ContractViolation",
    "__version__",
    "classic_crowding_distance",
    "compare_dominance",
    "evaluate",
    "front_size",
    "list_presets",
    "mei",
    "non_dominated_sort",
    "run",
    "run_preset",
    "truthful_crowding_distance",
]
