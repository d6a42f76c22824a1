"""Backend selection: compiled kernels when available, pure Python otherwise.

The compiled path only handles the 2-D built-in objectives (those exposing a
``kernel_id`` attribute); arbitrary callables always run through the Python
loops. Set ``CHAOSEARCH_BACKEND=python`` to force the fallback, or call
:func:`set_backend` at runtime (used by the backend comparison script).
"""

import os

from . import _pykernels

try:
    from . import _kernels
except ImportError:
    _kernels = None

_env = os.environ.get("CHAOSEARCH_BACKEND")
if _env == "compiled" and _kernels is None:
    raise ImportError(
        "CHAOSEARCH_BACKEND=compiled but the chaosearch._kernels extension "
        "is not built; reinstall the package or drop the override"
    )
_active_compiled = _kernels is not None and _env != "python"


def have_compiled():
    return _kernels is not None


def backend_name():
    return "compiled" if _active_compiled else "python"


def set_backend(name):
    """Switch between 'compiled' and 'python' at runtime."""
    global _active_compiled
    if name == "compiled":
        if _kernels is None:
            raise ValueError("compiled kernels are not available")
        _active_compiled = True
    elif name == "python":
        _active_compiled = False
    else:
        raise ValueError(f"unknown backend {name!r}")


def _kernel_id(f, dimension):
    kid = getattr(f, "kernel_id", None)
    if _active_compiled and kid is not None and dimension == 2:
        return kid
    return None


def rough_search(f, coeff_a, state, lower, upper, n_iters, points, values):
    kid = _kernel_id(f, state.shape[0])
    if kid is not None:
        _kernels.rough_search(kid, coeff_a, state, lower, upper, n_iters, points, values)
    else:
        _pykernels.rough_search(f, coeff_a, state, lower, upper, n_iters, points, values)


def local_search(f, coeff_a, state, lower, upper, n_iters, point, value):
    kid = _kernel_id(f, state.shape[0])
    if kid is not None:
        return _kernels.local_search(kid, coeff_a, state, lower, upper, n_iters, point, value)
    return _pykernels.local_search(f, coeff_a, state, lower, upper, n_iters, point, value)
