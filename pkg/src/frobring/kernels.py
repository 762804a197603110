"""Kernel backend selection.

Imports the compiled extension when it is available, otherwise the
pure-Python fallback.  Set FROBRING_PURE=1 to force the fallback (used
by tests and the benchmark to compare the two).
"""

import os

from . import _kernels_py

if os.environ.get("FROBRING_PURE") == "1":
    _impl = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure"

ring_law_violation = _impl.ring_law_violation
additive_closure = _impl.additive_closure
left_span = _impl.left_span
unit_mask = _impl.unit_mask
quasiregular_mask = _impl.quasiregular_mask
code_span = _impl.code_span
code_lattice = _impl.code_lattice
linear_maps = _impl.linear_maps
