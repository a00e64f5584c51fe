"""Shared sweeps used by the CLI verify command and the acceptance suite."""

from __future__ import annotations

import math

from .families import hyperstar, loose_path
from .matching import matching_polynomial
from .spectral import rho_from_matching_poly, rho_power_iteration


def path_radius_closed_form(m: int, r: int) -> float:
    """(2 cos(pi / (m + 2)))^(2/r)."""
    return (2.0 * math.cos(math.pi / (m + 2))) ** (2.0 / r)


def star_radius_closed_form(m: int, r: int) -> float:
    """m^(1/r)."""
    return m ** (1.0 / r)


def closed_form_sweep(
    max_m: int = 10,
    ranks: tuple[int, ...] = (3, 4, 5),
    tolerance: float = 1e-9,
) -> list[dict]:
    """Check both spectral routes against the path/star closed forms.

    Returns a list of failure records; empty means every case agreed.
    """
    failures = []
    for r in ranks:
        for m in range(1, max_m + 1):
            cases = (
                ("loose-path", loose_path(m, r).graph, path_radius_closed_form(m, r)),
                ("hyperstar", hyperstar(m, r).graph, star_radius_closed_form(m, r)),
            )
            for label, graph, expected in cases:
                exact = rho_from_matching_poly(matching_polynomial(graph)).rho
                numeric = rho_power_iteration(graph).rho
                for method, value in (("matching", exact), ("power", numeric)):
                    gap = abs(value - expected)
                    if gap > tolerance:
                        failures.append(
                            {
                                "family": label,
                                "m": m,
                                "r": r,
                                "method": method,
                                "rho": value,
                                "expected": expected,
                                "gap": gap,
                            }
                        )
    return failures
