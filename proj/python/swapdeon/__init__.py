"""Bounded countermodel search and proof checking for deontic LFIs."""

from ._core import (
    SwapdeonError,
    __version__,
    axioms,
    check_model,
    find_countermodel,
    logics,
    render,
    run_cli,
    truth_table,
    verify_proof,
)

__all__ = [
    "SwapdeonError",
    "__version__",
    "axioms",
    "check_model",
    "find_countermodel",
    "logics",
    "render",
    "run_cli",
    "truth_table",
    "verify_proof",
]
