"""Exact linear forms in zeta(3).

Thin wrapper over the compiled ``apery._core`` module: exact coefficient
construction, certified evaluation, verification suites, and the gate report.
All big numbers cross the boundary as decimal strings.
"""

from ._core import (
    certificate,
    eval_form,
    fit,
    gate,
    linear_form,
    table,
    verify,
    zeta3,
)

__all__ = [
    "certificate",
    "eval_form",
    "fit",
    "gate",
    "linear_form",
    "table",
    "verify",
    "zeta3",
]

__version__ = "1.0.0"
