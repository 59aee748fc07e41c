"""Kernel backend selection.

The numeric hot loops live behind a five-function contract implemented twice:

* ``divnet._kernels``    -- Cython extension, used when importable.
* ``divnet._kernels_py`` -- numpy/pure-Python twin, always available.

Both expose:

    sieve_tables(limit)                 -> (spf, s, d3) int64 arrays, index 0 unused
    divisibility_csr(n_max)             -> (indptr, indices) int64 CSR adjacency,
                                           neighbors of n = indices[indptr[n]:indptr[n+1]],
                                           sorted ascending, both edge directions stored
    triangle_edge_counts(indptr, indices) -> int64 per-node count of edges among neighbors
    betweenness_pair_scan(indptr, indices) -> float64 per-node betweenness, normalized
                                           by (N-1)(N-2), via common-neighbor scan over
                                           non-adjacent pairs (valid for diameter <= 2)
    brandes_betweenness(indptr, indices)  -> float64 per-node betweenness, same
                                           normalization, via BFS shortest-path counting
                                           (valid for any graph)

Set DIVNET_PURE_PYTHON=1 to force the fallback even when the extension built.
"""

import os

from . import _kernels_py

if os.environ.get("DIVNET_PURE_PYTHON") == "1":
    kernels = _kernels_py
    BACKEND_NAME = "pure-python (forced)"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND_NAME = "compiled"
    except ImportError:
        kernels = _kernels_py
        BACKEND_NAME = "pure-python"


def backend_name() -> str:
    """Which kernel implementation this process selected at import."""
    return BACKEND_NAME
