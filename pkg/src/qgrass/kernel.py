"""Backend selection for the submodule counting kernel.

The compiled ``_ckernel`` extension is used when it was built; otherwise the
pure-Python ``_pykernel`` runs the same algorithm. Set ``QGRASS_PURE_PYTHON=1``
to force the fallback.
"""

from __future__ import annotations

import os
from typing import TYPE_CHECKING, Sequence

from . import _pykernel

if TYPE_CHECKING:
    from .rep import IntRep

_c = None
if os.environ.get("QGRASS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel as _c  # type: ignore[no-redef]
    except ImportError:
        _c = None

BACKEND = "cython" if _c is not None else "python"


def prepare(M: "IntRep", e: Sequence[int]):
    """Flatten (M, e) into the kernel problem: non-sinks first, then sinks."""
    Q = M.quiver
    nonsinks = [v for v in Q.topo if Q.arrows_from(v)]
    sinks = [v for v in Q.topo if not Q.arrows_from(v)]
    order = nonsinks + sinks
    pos = {v: k for k, v in enumerate(order)}
    dims = [M.dim(v) for v in order]
    ee = [e[Q.index[v]] for v in order]
    in_arrows = [[(pos[h.src], M.matrices[h.id]) for h in Q.arrows_to(v)] for v in order]
    return M.p, dims, ee, in_arrows, len(nonsinks)


def count_submodules(M: "IntRep", e: Sequence[int], backend: str | None = None) -> int:
    args = prepare(M, e)
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _c is None:
            raise RuntimeError("compiled kernel is not available")
        return _c.count_submodules(*args)
    return _pykernel.count_submodules(*args)
