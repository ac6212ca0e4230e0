"""Counterexample-guided inductive synthesis laboratory."""

from ._core import (
    Error,
    check,
    demo,
    hcheck,
    mincheck,
    pair_decode,
    pair_encode,
    point_decode,
    point_encode,
    run,
    zigzag_decode,
    zigzag_encode,
)

__all__ = [
    "Error",
    "check",
    "demo",
    "hcheck",
    "mincheck",
    "pair_decode",
    "pair_encode",
    "point_decode",
    "point_encode",
    "run",
    "zigzag_decode",
    "zigzag_encode",
]
