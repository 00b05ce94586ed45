"""Enumeration kernels with optional compiled backend.

The compiled extension (``qtoric._kernels``, built from Cython) is used when
it imported successfully and the inputs fit in 64-bit arithmetic; otherwise
the pure-Python twin ``qtoric._kernels_py`` runs.  Set ``QTORIC_PURE=1`` to
force the pure backend.  Both produce identical output.
"""

from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if not os.environ.get("QTORIC_PURE"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

_C_LIMIT = 2**62  # stay clear of int64 overflow inside the extension


def backend() -> str:
    """Name of the backend in use: 'compiled' or 'python'."""
    return "python" if _compiled is None else "compiled"


def _fits(value: int) -> bool:
    return -_C_LIMIT < value < _C_LIMIT


def fiber_solutions(gens, target, limit=-1):
    """All x in N^len(gens) with sum(x_i * gens[i]) == target.

    ``gens`` is a sequence of nonzero tuples of nonnegative ints, all the
    same length as ``target``.  Output tuples are lexicographically
    ascending; with ``limit > 0`` enumeration stops after that many.
    """
    gens = [tuple(int(c) for c in g) for g in gens]
    target = tuple(int(c) for c in target)
    width = len(target)
    for g in gens:
        if len(g) != width:
            raise ValueError("generator width does not match target")
        if any(c < 0 for c in g):
            raise ValueError("generators must be nonnegative")
        if not any(g):
            raise ValueError("zero generator makes the fiber infinite")
    if any(c < 0 for c in target):
        return []
    impl = _kernels_py
    if _compiled is not None and all(_fits(c) for c in target):
        impl = _compiled
    return impl.fiber_solutions(gens, target, int(limit))


def affine_points(nvars, ineqs, sum_bound=-1, order=None):
    """All x in N^nvars satisfying coeffs.x + const >= 0 for every row.

    ``ineqs`` is a sequence of (coeffs, const) pairs; ``sum_bound >= 0``
    additionally imposes sum(x) <= sum_bound.  ``order`` is the variable
    assignment order (default: last variable first); every variable must be
    bounded either by the sum bound or by a row with a negative coefficient
    on it and no positive coefficient on any later-assigned variable, else
    ValueError.  Output is sorted lexicographically.
    """
    nvars = int(nvars)
    if nvars <= 0:
        raise ValueError("nvars must be positive")
    rows = []
    for coeffs, const in ineqs:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != nvars:
            raise ValueError("inequality width does not match nvars")
        rows.append((coeffs, int(const)))
    if order is None:
        order = tuple(range(nvars - 1, -1, -1))
    else:
        order = tuple(int(v) for v in order)
        if sorted(order) != list(range(nvars)):
            raise ValueError("order must be a permutation of range(nvars)")
    sum_bound = int(sum_bound)
    impl = _kernels_py
    if _compiled is not None:
        small = _fits(sum_bound) and all(
            all(_fits(c) for c in coeffs) and _fits(const)
            for coeffs, const in rows
        )
        if small:
            impl = _compiled
    return impl.affine_points(nvars, rows, sum_bound, order)
