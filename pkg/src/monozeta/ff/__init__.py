"""Finite-field point counts of jet schemes, the independent oracle for the jet classes.

The compiled kernel is used when it was built; ``MONOZETA_PURE=1`` forces the
pure-Python kernel.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("MONOZETA_PURE") == "1":
    _impl = _kernel_py
    KERNEL = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[no-redef]

        KERNEL = "cython"
    except ImportError:
        _impl = _kernel_py
        KERNEL = "python"

count_task = _impl.count_task

from .count import CountReport, count_jets, count_naive, count_report, verify_class  # noqa: E402
from .system import JetSystem, build_jet_system, evaluate  # noqa: E402

__all__ = [
    "KERNEL",
    "count_task",
    "JetSystem",
    "build_jet_system",
    "evaluate",
    "count_jets",
    "count_naive",
    "count_report",
    "verify_class",
    "CountReport",
]
