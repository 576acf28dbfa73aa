"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python twin
is the fallback. CTSWAP_BACKEND=c|py|auto forces the choice (``c`` fails
loudly if the extension is missing, for benchmark hygiene).
"""

from __future__ import annotations

import os

from . import _pykernels


def _load_compiled():
    from . import _ckernels  # noqa: PLC0415

    return _ckernels


def _select(name: str):
    if name in ("py", "python", "pure"):
        return _pykernels
    if name in ("c", "compiled", "ext"):
        try:
            return _load_compiled()
        except ImportError as exc:
            raise RuntimeError(
                "CTSWAP_BACKEND requested the compiled kernels but the "
                "ctswap._ckernels extension is not built"
            ) from exc
    if name == "auto":
        try:
            return _load_compiled()
        except ImportError:
            return _pykernels
    raise ValueError(f"unknown backend {name!r} (expected auto, c or py)")


kernels = _select(os.environ.get("CTSWAP_BACKEND", "auto").lower())


def backend_name() -> str:
    """Name of the kernel backend active for this process."""
    return kernels.BACKEND


def get_kernels(name: str | None = None):
    """Fetch a kernel module by name; ``None`` returns the active one."""
    if name is None:
        return kernels
    return _select(name)


def available_backends() -> list[str]:
    names = ["python"]
    try:
        _load_compiled()
        names.insert(0, "c")
    except ImportError:
        pass
    return names
