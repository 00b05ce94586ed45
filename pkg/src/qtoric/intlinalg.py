"""Exact integer and rational linear algebra helpers.

Vectors are int tuples.  Everything here is exact: integer echelon forms for
lattices, Fraction-based elimination for ranks and kernels, Fourier-Motzkin
for inequality systems, and the polyhedral-cone utilities (facets, extreme
rays, triangulation, fundamental parallelepipeds) used by the semigroup
normality and interior computations.  Scales are small; clarity over speed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, product


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(a, k):
    return tuple(x * k for x in a)


def primitive(v):
    """v divided by the gcd of its entries, (0,...) stays put."""
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


# ---------------------------------------------------------------------------
# integer lattices (row echelon over Z)


def lattice_basis(vectors):
    """Echelon basis (rows) of the subgroup of Z^n generated by the vectors.

    Rows come out with strictly increasing pivot columns, positive pivots,
    and entries above each pivot reduced into [0, pivot).  The result is the
    Hermite normal form of the row span, a canonical lattice basis.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    width = len(rows[0])
    basis = []
    for col in range(width):
        # invariant: every row in rows is zero in all columns < col
        nz = [r for r in rows if r[col]]
        if not nz:
            continue
        piv = nz[0]
        for r in nz[1:]:
            g, s, t = _xgcd(piv[col], r[col])
            a, b = piv[col] // g, r[col] // g
            piv[:], r[:] = (
                [s * x + t * y for x, y in zip(piv, r)],
                [a * y - b * x for x, y in zip(piv, r)],
            )
        basis.append(piv)
        rows = [r for r in rows if r is not piv and any(r)]
        if not rows:
            break
    # normalize: positive pivots, reduce above
    for b in basis:
        if b[_pivot(b)] < 0:
            b[:] = [-x for x in b]
    # increasing pivot order: later rows are zero on earlier pivot columns,
    # so a reduced column is never touched again
    for i in range(len(basis)):
        p = _pivot(basis[i])
        piv = basis[i][p]
        for j in range(i):
            k = basis[j][p] // piv
            if k:
                basis[j][:] = [x - k * y for x, y in zip(basis[j], basis[i])]
    return [tuple(b) for b in basis]


def _pivot(row):
    for i, x in enumerate(row):
        if x:
            return i
    raise ValueError("zero row has no pivot")


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_coords(basis, v):
    """Integer coordinates of v in an echelon lattice basis, or None."""
    coords = []
    rest = list(v)
    for b in basis:
        p = _pivot(b)
        c, rem = divmod(rest[p], b[p])
        if rem:
            return None
        coords.append(c)
        if c:
            rest = [x - c * y for x, y in zip(rest, b)]
    if any(rest):
        return None
    return tuple(coords)


def mat_rank(vectors):
    return len(lattice_basis(vectors))


# ---------------------------------------------------------------------------
# rational elimination


def kernel_vector(rows, width):
    """Primitive integer spanning vector of a 1-dim nullspace, else None.

    rows: integer vectors; solves r . x = 0 for all rows.
    """
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []  # (row index, col)
    rank = 0
    for col in range(width):
        sel = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [x / pv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    if width - rank != 1:
        return None
    free = next(c for c in range(width) if c not in pivots)
    sol = [Fraction(0)] * width
    sol[free] = Fraction(1)
    for r, col in enumerate(pivots):
        sol[col] = -mat[r][free]
    lcm = 1
    for x in sol:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    return primitive(tuple(int(x * lcm) for x in sol))


# ---------------------------------------------------------------------------
# Fourier-Motzkin


def _fm_normalize(rows):
    seen = set()
    out = []
    for coeffs, const in rows:
        g = 0
        for x in coeffs:
            g = math.gcd(g, x)
        g = math.gcd(g, const)
        if g > 1:
            coeffs = tuple(x // g for x in coeffs)
            const = const // g
        if not any(coeffs):
            if const < 0:
                return None  # 0 >= positive: infeasible
            continue
        key = (coeffs, const)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def fm_feasible_point(rows, nvars):
    """A rational point satisfying coeffs . x + const >= 0 for every row.

    Returns a list of Fractions, or None when the system is infeasible.
    Eliminates the last variable first and back-substitutes preferring small
    integers, so well-constrained systems come back with integer entries.
    """
    rows = _fm_normalize([(tuple(c), k) for c, k in rows])
    if rows is None:
        return None
    stages = []
    current = rows
    for var in range(nvars - 1, 0, -1):
        stages.append(current)
        pos = [r for r in current if r[0][var] > 0]
        neg = [r for r in current if r[0][var] < 0]
        zero = [r for r in current if r[0][var] == 0]
        new = list(zero)
        for pc, pk in pos:
            for nc, nk in neg:
                a, b = pc[var], -nc[var]
                coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
                new.append((coeffs, b * pk + a * nk))
        current = _fm_normalize(new)
        if current is None:
            return None
    stages.append(current)
    point = [Fraction(0)] * nvars
    for var in range(nvars):
        system = stages[nvars - 1 - var]
        lo, hi = None, None
        for coeffs, const in system:
            a = coeffs[var]
            if a == 0:
                continue
            rest = sum(coeffs[j] * point[j] for j in range(var)) + const
            bound = Fraction(-rest, a)
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            return None
        if lo is not None:
            cand = Fraction(math.ceil(lo))
            point[var] = cand if (hi is None or cand <= hi) else lo
        elif hi is not None:
            point[var] = min(Fraction(math.floor(hi)), hi)
        else:
            point[var] = Fraction(0)
    return point


# ---------------------------------------------------------------------------
# polyhedral cones (pointed, full-dimensional in their coordinates)


def cone_facets(rays, dim):
    """Irredundant inward facet normals of cone(rays), full-dim in Z^dim.

    Every facet of a finitely generated cone is spanned by generators, so
    candidate normals come from (dim-1)-subsets of the rays.  Returned
    primitive, deduplicated, sorted.
    """
    rays = [tuple(r) for r in rays if any(r)]
    if dim == 1:
        sign = 1 if rays[0][0] > 0 else -1
        if any((x > 0) != (sign > 0) for (x,) in rays):
            raise ValueError("cone is not pointed")
        return [(sign,)]
    found = set()
    for sub in combinations(rays, dim - 1):
        normal = kernel_vector(sub, dim)
        if normal is None:
            continue
        sides = {1 if dot(normal, g) > 0 else (-1 if dot(normal, g) < 0 else 0) for g in rays}
        if 1 in sides and -1 in sides:
            continue
        if -1 in sides:
            normal = tuple(-x for x in normal)
        if mat_rank([g for g in rays if dot(normal, g) == 0]) == dim - 1:
            found.add(normal)
    facets = sorted(found)
    if not facets and len(rays) > 0:
        raise ValueError("cone has no facets; input may not be pointed")
    return facets


def extreme_rays(gens, facets, dim):
    """One generator per extreme ray of the cone.

    Representatives are kept as given (not normalized to primitive vectors),
    so callers that need semigroup elements can use them directly; among
    parallel generators the one with the smallest (coordinate-sum, lex) key
    is chosen.
    """
    reps = {}
    for g in gens:
        if not any(g):
            continue
        active = [f for f in facets if dot(f, g) == 0]
        if dim == 1 or mat_rank(active) == dim - 1:
            p = primitive(g)
            old = reps.get(p)
            if old is None or (sum(g), g) < (sum(old), old):
                reps[p] = tuple(g)
    order = {primitive(g): i for i, g in reversed(list(enumerate(gens)))}
    return [reps[p] for p in sorted(reps, key=order.get)]


def triangulate_cone(rays, dim):
    """Simplicial subcones (tuples of dim independent rays) covering the cone.

    Pulling triangulation: cone(v, F) over the facets F avoiding the first
    ray v.  Lower-dimensional faces are triangulated in coordinates of the
    lattice their rays generate.
    """
    rays = [tuple(r) for r in rays]
    if len(rays) == dim:
        return [tuple(rays)]
    facets = cone_facets(rays, dim)
    rays = extreme_rays(rays, facets, dim)
    if len(rays) == dim:
        return [tuple(rays)]
    v = rays[0]
    simplices = []
    for f in facets:
        if dot(f, v) == 0:
            continue
        face_rays = [g for g in rays if dot(f, g) == 0]
        basis = lattice_basis(face_rays)
        coords = [lattice_coords(basis, g) for g in face_rays]
        for sub in triangulate_cone(coords, dim - 1):
            members = tuple(face_rays[coords.index(s)] for s in sub)
            simplices.append((v,) + members)
    return simplices


def _det_and_adjugate(rows):
    """(det, adj) with adj integer and rows . adj == det * identity."""
    d = len(rows)
    mat = [[Fraction(x) for x in r] for r in rows]
    inv = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    det = Fraction(1)
    for col in range(d):
        sel = next((i for i in range(col, d) if mat[i][col]), None)
        if sel is None:
            return 0, None
        if sel != col:
            mat[col], mat[sel] = mat[sel], mat[col]
            inv[col], inv[sel] = inv[sel], inv[col]
            det = -det
        pv = mat[col][col]
        det *= pv
        mat[col] = [x / pv for x in mat[col]]
        inv[col] = [x / pv for x in inv[col]]
        for i in range(d):
            if i != col and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    det_int = int(det)
    adj = [[inv[i][j] * det for j in range(d)] for i in range(d)]
    adj_int = [[int(x) for x in row] for row in adj]
    assert all(adj[i][j] == adj_int[i][j] for i in range(d) for j in range(d))
    return det_int, adj_int


def parallelepiped_points(simplex_rays):
    """Lattice points of the half-open parallelepiped sum t_i * r_i, 0<=t_i<1.

    simplex_rays: linearly independent integer vectors in Z^d (a simplicial
    subcone).  Includes the origin; |det| points in total.
    """
    d = len(simplex_rays)
    det, adj = _det_and_adjugate([list(r) for r in simplex_rays])
    if det == 0:
        raise ValueError("rays are linearly dependent")
    if det < 0:
        det, adj = -det, [[-x for x in row] for row in adj]
    if det == 1:
        return [(0,) * d]
    ranges = []
    for j in range(d):
        lo = sum(min(0, r[j]) for r in simplex_rays)
        hi = sum(max(0, r[j]) for r in simplex_rays)
        ranges.append(range(lo, hi + 1))
    points = []
    for z in product(*ranges):
        # t = z . rays^{-1}; accept when every t_i is in [0, 1)
        ok = True
        for i in range(d):
            u = sum(z[j] * adj[j][i] for j in range(d))
            if u < 0 or u >= det:
                ok = False
                break
        if ok:
            points.append(tuple(z))
    assert len(points) == det
    return points
