"""Polar codes on the binary erasure channel with a fault-prone SC decoder."""

try:
    from ._core import (
        ConfigError,
        ResourceError,
        estimate_fer,
        expected_epsilon,
        fer_bounds,
        index_to_sign_string,
        info_set,
        k_from_rate,
        optimal_blocklength,
        polar_encode,
        protection_report,
        rate_loss,
        sign_string_to_index,
        z_table,
        __version__,
    )
except ImportError:  # extension built out of tree (e.g. plain cmake build)
    from _core import (
        ConfigError,
        ResourceError,
        estimate_fer,
        expected_epsilon,
        fer_bounds,
        index_to_sign_string,
        info_set,
        k_from_rate,
        optimal_blocklength,
        polar_encode,
        protection_report,
        rate_loss,
        sign_string_to_index,
        z_table,
        __version__,
    )

__all__ = [
    "ConfigError",
    "ResourceError",
    "estimate_fer",
    "expected_epsilon",
    "fer_bounds",
    "index_to_sign_string",
    "info_set",
    "k_from_rate",
    "optimal_blocklength",
    "polar_encode",
    "protection_report",
    "rate_loss",
    "sign_string_to_index",
    "z_table",
    "__version__",
]
