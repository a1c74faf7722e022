"""Kernel selection: compiled extension when importable, pure Python otherwise."""

from __future__ import annotations

from types import ModuleType

from . import _scan_py

try:
    from . import _scan as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure"


def available_backends() -> dict[str, ModuleType]:
    """Importable kernel lanes, keyed by name (used by the benchmark)."""
    out: dict[str, ModuleType] = {"pure": _scan_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out


def select_kernel(moving_count: int) -> tuple[str, ModuleType]:
    """Pick the lane for a scan with ``moving_count`` mask bits."""
    if _compiled is not None and moving_count <= 63:
        return "compiled", _compiled
    return "pure", _scan_py
