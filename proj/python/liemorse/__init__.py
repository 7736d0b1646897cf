from ._liemorse import (
    ComplexTooLarge,
    Error,
    InvalidArgument,
    comparable_noncovering_count,
    critical_ratio,
    exterior_algebra,
    homology,
    predicted_mod_p_dims,
    run_cli,
)


def sol_homology(n, ring="Z"):
    return homology(f"chain:{n}", ring)


def dims(table):
    return [row["free_rank"] for row in table]


__all__ = [
    "ComplexTooLarge",
    "Error",
    "InvalidArgument",
    "comparable_noncovering_count",
    "critical_ratio",
    "dims",
    "exterior_algebra",
    "homology",
    "predicted_mod_p_dims",
    "run_cli",
    "sol_homology",
]
