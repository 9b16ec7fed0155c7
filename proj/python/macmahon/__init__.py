"""Descent statistics on multiset permutations and Ehrhart data of product polytopes."""

from ._core import (
    InternalDefect,
    carlitz_polynomial,
    count_points,
    descent_polynomial,
    ehrhart,
    hstar,
    run_cli,
    statistics,
    verify,
)

__all__ = [
    "InternalDefect",
    "carlitz_polynomial",
    "count_points",
    "descent_polynomial",
    "ehrhart",
    "hstar",
    "run_cli",
    "statistics",
    "verify",
]
