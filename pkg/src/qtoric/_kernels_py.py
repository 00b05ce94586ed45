"""Pure-Python enumeration kernels.

Same interface as the compiled extension ``qtoric._kernels``; the dispatcher
in ``qtoric.kernels`` validates inputs, so both implementations may assume:

* ``fiber_solutions``: generators are nonzero tuples of nonnegative ints,
  target is a tuple of nonnegative ints of matching length;
* ``affine_points``: every inequality row has ``nvars`` coefficients, the
  assignment order is a permutation of range(nvars), and every variable is
  bounded (statically checkable) by the sum bound or by a usable row.
"""

from __future__ import annotations


def fiber_solutions(gens, target, limit=-1):
    """All x in N^n with sum(x_i * gens[i]) == target, lex-ascending.

    Stops early after ``limit`` solutions when limit > 0.
    """
    n = len(gens)
    width = len(target)
    # suffix support: coordinates reachable by generators i..n-1
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        mask = suffix[i + 1]
        for j in range(width):
            if gens[i][j]:
                mask |= 1 << j
        suffix[i] = mask
    out = []
    x = [0] * n

    def rec(i, residual):
        if limit > 0 and len(out) >= limit:
            return
        if i == n:
            if not any(residual):
                out.append(tuple(x))
            return
        mask = suffix[i]
        for j in range(width):
            if residual[j] and not (mask >> j) & 1:
                return  # some coordinate can never be matched
        g = gens[i]
        m_max = min(residual[j] // g[j] for j in range(width) if g[j])
        for m in range(m_max + 1):
            x[i] = m
            rec(i + 1, [residual[j] - m * g[j] for j in range(width)])
            if limit > 0 and len(out) >= limit:
                break
        x[i] = 0

    rec(0, list(target))
    return out


def affine_points(nvars, ineqs, sum_bound, order):
    """All x in N^nvars with coeffs.x + const >= 0 per row, sum(x) <= sum_bound.

    ``sum_bound < 0`` means no sum bound.  Variables are assigned in ``order``;
    a variable's upper bound comes from the sum bound and from rows whose
    coefficient on it is negative with no positive coefficient on any
    later-assigned variable.  Rows are finally checked once all their support
    is assigned.  Output is sorted lexicographically.
    """
    pos_of = [0] * nvars
    for k, v in enumerate(order):
        pos_of[v] = k
    bounding = [[] for _ in range(nvars)]  # per position: row indices usable as ub
    check_at = [[] for _ in range(nvars)]  # per position: rows fully assigned there
    for r, (coeffs, const) in enumerate(ineqs):
        support = [v for v in range(nvars) if coeffs[v]]
        if not support:
            if const < 0:
                return []
            continue
        last = max(pos_of[v] for v in support)
        check_at[last].append(r)
        for k, v in enumerate(order):
            if coeffs[v] < 0 and all(
                coeffs[u] <= 0 for u in order[k + 1 :]
            ):
                bounding[k].append(r)
    if sum_bound < 0:
        for k in range(nvars):
            if not bounding[k]:
                raise ValueError(
                    f"variable {order[k]} has no upper bound in this assignment order"
                )
    touched = [
        [r for r in range(len(ineqs)) if ineqs[r][0][v]] for v in range(nvars)
    ]
    out = []
    x = [0] * nvars
    partial = [const for _, const in ineqs]  # running coeffs.x + const

    def rec(k, used):
        if k == nvars:
            out.append(tuple(x))
            return
        v = order[k]
        ub = sum_bound - used if sum_bound >= 0 else None
        for r in bounding[k]:
            b = partial[r] // (-ineqs[r][0][v])
            if ub is None or b < ub:
                ub = b
        if ub < 0:
            return
        for val in range(ub + 1):
            x[v] = val
            if val:
                for r in touched[v]:
                    partial[r] += ineqs[r][0][v]
            if all(partial[r] >= 0 for r in check_at[k]):
                rec(k + 1, used + val)
        for r in touched[v]:
            partial[r] -= ineqs[r][0][v] * ub
        x[v] = 0

    rec(0, 0)
    out.sort()
    return out
