"""Cell forms on M_{0,n}: shuffle ideal, convergence on the standard cell, periods.

Polygons are lists of labels ("0", "1", "t1", ..., "inf"). Sums use the JSON
shapes of the command-line tool: PolygonSum is [{"coeff": "p/q", "polygon": [...]}],
FormSum is [{"coeff": "p/q", "sign": 1, "factors": [["t1", "1"], ...]}].
"""

from ._cellforms import (
    CellformsError,
    DomainError,
    InternalError,
    NoConvergenceError,
    UnstableError,
    basis01,
    canonicalize,
    cell_form,
    convergent_basis,
    converges_on_delta,
    delta_basis,
    ideal_generators,
    insertion_forms,
    integrate,
    mzv_fit,
    mzv_values,
    pole_orders,
    polygons,
    rank,
    reduce,
    run,
    shuffle,
    verify,
    verify_kernel,
    zagier_dims,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
