"""Chow-Witt Schubert calculus on Grassmannians."""

from ._core import (
    SchubertError,
    balanced,
    catalan,
    decompose_even,
    even_diagrams,
    mult,
    p1_power,
    plucker,
    run_cli,
    schubert_problem,
    sq2,
    wmult,
)

__all__ = [
    "SchubertError",
    "balanced",
    "catalan",
    "decompose_even",
    "even_diagrams",
    "mult",
    "p1_power",
    "plucker",
    "run_cli",
    "schubert_problem",
    "sq2",
    "wmult",
]
