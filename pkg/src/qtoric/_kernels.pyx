# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Twin of ``qtoric._kernels_py`` with the same contracts; the dispatcher in
``qtoric.kernels`` validates inputs and keeps values inside 64-bit range
before calling in here.  Output must match the pure version bit for bit.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset


cdef inline long floordiv(long a, long d) noexcept:
    # Python-style floor division for a positive divisor
    cdef long q = a / d
    if a % d != 0 and a < 0:
        q -= 1
    return q


# ---------------------------------------------------------------------------
# fiber_solutions


cdef struct FiberCtx:
    long n
    long width
    long limit
    long* gens      # n * width
    long* residual  # width
    long* x         # n
    unsigned char* reach  # (n + 1) * width: generator suffix touches coord


cdef int _fiber_rec(FiberCtx* ctx, long i, list out) except -1:
    cdef long j, m_max, b
    cdef long m = 0
    cdef long* g
    if ctx.limit > 0 and len(out) >= ctx.limit:
        return 0
    if i == ctx.n:
        for j in range(ctx.width):
            if ctx.residual[j] != 0:
                return 0
        out.append(tuple([ctx.x[j] for j in range(ctx.n)]))
        return 0
    for j in range(ctx.width):
        if ctx.residual[j] != 0 and not ctx.reach[i * ctx.width + j]:
            return 0  # some coordinate can never be matched
    g = ctx.gens + i * ctx.width
    m_max = -1
    for j in range(ctx.width):
        if g[j] != 0:
            b = ctx.residual[j] / g[j]
            if m_max < 0 or b < m_max:
                m_max = b
    for m in range(m_max + 1):
        ctx.x[i] = m
        if m > 0:
            for j in range(ctx.width):
                ctx.residual[j] -= g[j]
        _fiber_rec(ctx, i + 1, out)
        if ctx.limit > 0 and len(out) >= ctx.limit:
            break
    for j in range(ctx.width):
        ctx.residual[j] += g[j] * m
    ctx.x[i] = 0
    return 0


def fiber_solutions(gens, target, limit=-1):
    """All x in N^n with sum(x_i * gens[i]) == target, lex-ascending."""
    cdef long n = len(gens)
    cdef long width = len(target)
    cdef FiberCtx ctx
    cdef long i, j
    cdef list out = []
    ctx.n = n
    ctx.width = width
    ctx.limit = limit
    ctx.gens = <long*> calloc(n * width if n * width else 1, sizeof(long))
    ctx.residual = <long*> calloc(width if width else 1, sizeof(long))
    ctx.x = <long*> calloc(n if n else 1, sizeof(long))
    ctx.reach = <unsigned char*> calloc((n + 1) * width if width else 1, 1)
    if not ctx.gens or not ctx.residual or not ctx.x or not ctx.reach:
        free(ctx.gens); free(ctx.residual); free(ctx.x); free(ctx.reach)
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(width):
                ctx.gens[i * width + j] = gens[i][j]
        for j in range(width):
            ctx.residual[j] = target[j]
        for i in range(n - 1, -1, -1):
            for j in range(width):
                ctx.reach[i * width + j] = (
                    ctx.reach[(i + 1) * width + j]
                    or ctx.gens[i * width + j] != 0
                )
        _fiber_rec(&ctx, 0, out)
    finally:
        free(ctx.gens); free(ctx.residual); free(ctx.x); free(ctx.reach)
    return out


# ---------------------------------------------------------------------------
# affine_points


cdef struct AffCtx:
    long nvars
    long nrows
    long sum_bound
    long* coeffs    # nrows * nvars
    long* partial   # nrows: running coeffs.x + const
    long* order
    long* x
    # CSR-style index lists
    long* bound_idx
    long* bound_off   # nvars + 1
    long* check_idx
    long* check_off   # nvars + 1
    long* touch_idx
    long* touch_off   # nvars + 1


cdef int _aff_rec(AffCtx* ctx, long k, long used, list out) except -1:
    cdef long v, r, t, val, ub, b, c
    cdef bint have
    if k == ctx.nvars:
        out.append(tuple([ctx.x[t] for t in range(ctx.nvars)]))
        return 0
    v = ctx.order[k]
    have = False
    ub = 0
    if ctx.sum_bound >= 0:
        ub = ctx.sum_bound - used
        have = True
    for t in range(ctx.bound_off[k], ctx.bound_off[k + 1]):
        r = ctx.bound_idx[t]
        b = floordiv(ctx.partial[r], -ctx.coeffs[r * ctx.nvars + v])
        if not have or b < ub:
            ub = b
            have = True
    if ub < 0:
        return 0
    for val in range(ub + 1):
        ctx.x[v] = val
        if val > 0:
            for t in range(ctx.touch_off[v], ctx.touch_off[v + 1]):
                r = ctx.touch_idx[t]
                ctx.partial[r] += ctx.coeffs[r * ctx.nvars + v]
        for t in range(ctx.check_off[k], ctx.check_off[k + 1]):
            if ctx.partial[ctx.check_idx[t]] < 0:
                break
        else:
            _aff_rec(ctx, k + 1, used + val, out)
    for t in range(ctx.touch_off[v], ctx.touch_off[v + 1]):
        r = ctx.touch_idx[t]
        ctx.partial[r] -= ctx.coeffs[r * ctx.nvars + v] * ub
    ctx.x[v] = 0
    return 0


def affine_points(nvars, ineqs, sum_bound, order):
    """All x in N^nvars with coeffs.x + const >= 0 per row, sorted lex."""
    cdef long n = nvars
    cdef long nrows = len(ineqs)
    cdef AffCtx ctx
    cdef long r, v, k, t, last
    cdef bint usable
    cdef list out = []
    cdef list keep_rows = []
    # constant rows are decided up front, exactly like the pure twin
    for r in range(nrows):
        coeffs, const = ineqs[r]
        for v in range(n):
            if coeffs[v] != 0:
                break
        else:
            if const < 0:
                return []
            continue
        keep_rows.append((coeffs, const))
    nrows = len(keep_rows)

    memset(&ctx, 0, sizeof(AffCtx))
    ctx.nvars = n
    ctx.nrows = nrows
    ctx.sum_bound = sum_bound
    ctx.coeffs = <long*> calloc(nrows * n if nrows else 1, sizeof(long))
    ctx.partial = <long*> calloc(nrows if nrows else 1, sizeof(long))
    ctx.order = <long*> calloc(n, sizeof(long))
    ctx.x = <long*> calloc(n, sizeof(long))
    ctx.bound_idx = <long*> calloc(nrows * n if nrows else 1, sizeof(long))
    ctx.bound_off = <long*> calloc(n + 1, sizeof(long))
    ctx.check_idx = <long*> calloc(nrows if nrows else 1, sizeof(long))
    ctx.check_off = <long*> calloc(n + 1, sizeof(long))
    ctx.touch_idx = <long*> calloc(nrows * n if nrows else 1, sizeof(long))
    ctx.touch_off = <long*> calloc(n + 1, sizeof(long))
    if (not ctx.coeffs or not ctx.partial or not ctx.order or not ctx.x
            or not ctx.bound_idx or not ctx.bound_off or not ctx.check_idx
            or not ctx.check_off or not ctx.touch_idx or not ctx.touch_off):
        _aff_free(&ctx)
        raise MemoryError()
    try:
        for r in range(nrows):
            coeffs, const = keep_rows[r]
            for v in range(n):
                ctx.coeffs[r * n + v] = coeffs[v]
            ctx.partial[r] = const
        for k in range(n):
            ctx.order[k] = order[k]

        # pos_of for locating a row's last assigned variable
        pos_of = [0] * n
        for k in range(n):
            pos_of[ctx.order[k]] = k
        check_lists = [[] for _ in range(n)]
        bound_lists = [[] for _ in range(n)]
        touch_lists = [[] for _ in range(n)]
        for r in range(nrows):
            last = -1
            for v in range(n):
                if ctx.coeffs[r * n + v] != 0:
                    if pos_of[v] > last:
                        last = pos_of[v]
                    touch_lists[v].append(r)
            check_lists[last].append(r)
            for k in range(n):
                v = ctx.order[k]
                if ctx.coeffs[r * n + v] < 0:
                    usable = True
                    for t in range(k + 1, n):
                        if ctx.coeffs[r * n + ctx.order[t]] > 0:
                            usable = False
                            break
                    if usable:
                        bound_lists[k].append(r)
        if sum_bound < 0:
            for k in range(n):
                if not bound_lists[k]:
                    raise ValueError(
                        f"variable {ctx.order[k]} has no upper bound "
                        f"in this assignment order"
                    )
        _fill_csr(check_lists, ctx.check_idx, ctx.check_off, n)
        _fill_csr(bound_lists, ctx.bound_idx, ctx.bound_off, n)
        _fill_csr(touch_lists, ctx.touch_idx, ctx.touch_off, n)

        _aff_rec(&ctx, 0, 0, out)
    finally:
        _aff_free(&ctx)
    out.sort()
    return out


cdef void _aff_free(AffCtx* ctx) noexcept:
    free(ctx.coeffs); free(ctx.partial); free(ctx.order); free(ctx.x)
    free(ctx.bound_idx); free(ctx.bound_off)
    free(ctx.check_idx); free(ctx.check_off)
    free(ctx.touch_idx); free(ctx.touch_off)


cdef int _fill_csr(list lists, long* idx, long* off, long n) except -1:
    cdef long k, pos = 0
    for k in range(n):
        off[k] = pos
        for r in lists[k]:
            idx[pos] = r
            pos += 1
    off[n] = pos
    return 0
