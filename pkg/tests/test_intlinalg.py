"""Integer/rational linear algebra: lattices, cones, Fourier-Motzkin."""

import random

from qtoric import intlinalg as ila


def recombine(basis, coords):
    n = len(basis[0])
    w = [0] * n
    for k, b in zip(coords, basis):
        w = [x + k * y for x, y in zip(w, b)]
    return tuple(w)


def test_lattice_basis_examples():
    assert ila.lattice_basis([(2, 0), (0, 3), (1, 1)]) == [(1, 0), (0, 1)]
    assert ila.lattice_basis([(6,), (10,), (15,)]) == [(1,)]
    assert ila.lattice_basis([(2, 0), (0, 2)]) == [(2, 0), (0, 2)]
    assert ila.lattice_basis([]) == []
    assert ila.lattice_basis([(0, 0)]) == []


def test_lattice_coords():
    basis = ila.lattice_basis([(2, 0), (0, 2)])
    assert ila.lattice_coords(basis, (4, 6)) == (2, 3)
    assert ila.lattice_coords(basis, (1, 0)) is None
    assert ila.lattice_coords(basis, (0, 0)) == (0, 0)


def test_mat_rank():
    assert ila.mat_rank([(1, 0), (0, 1)]) == 2
    assert ila.mat_rank([(2, 0), (3, 0)]) == 1
    assert ila.mat_rank([(1, 2, 3), (2, 4, 6), (1, 1, 1)]) == 2


def test_lattice_basis_randomized_canonical():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 5)
        m = rng.randint(1, 6)
        vs = [tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(m)]
        basis = ila.lattice_basis(vs)
        for v in vs:
            c = ila.lattice_coords(basis, v)
            assert c is not None and recombine(basis, c) == v if basis else not any(v)
        assert ila.lattice_basis(basis) == basis
        shuffled = vs[:]
        rng.shuffle(shuffled)
        assert ila.lattice_basis(shuffled) == basis


def test_kernel_vector():
    assert ila.kernel_vector([(1, 1)], 2) in [(1, -1), (-1, 1)]
    # nullity 2 -> None
    assert ila.kernel_vector([(0, 0, 0)], 3) is None
    v = ila.kernel_vector([(1, 2, 3), (0, 1, 1)], 3)
    assert v is not None
    assert ila.dot(v, (1, 2, 3)) == 0 and ila.dot(v, (0, 1, 1)) == 0


def test_fm_feasible_point():
    # x >= 1, y >= 2, x + y <= 5
    rows = [((1, 0), -1), ((0, 1), -2), ((-1, -1), 5)]
    pt = ila.fm_feasible_point(rows, 2)
    assert pt is not None
    for coeffs, const in rows:
        assert sum(c * x for c, x in zip(coeffs, pt)) + const >= 0
    assert ila.fm_feasible_point([((1,), -1), ((-1,), 0)], 1) is None


def test_cone_facets_quadrant():
    assert ila.cone_facets([(1, 0), (0, 1)], 2) == [(0, 1), (1, 0)]
    assert ila.cone_facets([(1, 0), (1, 2)], 2) == [(0, 1), (2, -1)]


def test_extreme_rays_drop_interior():
    rays = [(1, 0), (1, 1), (0, 1)]
    facets = ila.cone_facets(rays, 2)
    assert ila.extreme_rays(rays, facets, 2) == [(1, 0), (0, 1)]


def test_extreme_rays_parallel_representative():
    # among parallel generators the smallest is kept, unnormalized
    rays = [(4, 0), (2, 0), (0, 1)]
    facets = ila.cone_facets(rays, 2)
    assert ila.extreme_rays(rays, facets, 2) == [(2, 0), (0, 1)]


def test_triangulate_and_parallelepiped():
    tri = ila.triangulate_cone([(1, 0), (1, 1), (0, 1)], 2)
    assert tri == [((1, 0), (0, 1))]
    pts = ila.parallelepiped_points([(1, 1), (1, -1)])
    assert sorted(pts) == [(0, 0), (1, 0)]
    assert ila.parallelepiped_points([(1, 0), (0, 1)]) == [(0, 0)]


def test_triangulation_covers_cone_points():
    # 3-dim cone over a square: two simplices, every point covered exactly
    rays = [(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)]
    tri = ila.triangulate_cone(rays, 3)
    assert len(tri) == 2
    rng = random.Random(3)
    for _ in range(50):
        lam = [rng.randint(0, 3) for _ in rays]
        pt = tuple(sum(l * r[i] for l, r in zip(lam, rays)) for i in range(3))
        inside = 0
        for simplex in tri:
            det, adj = ila._det_and_adjugate(list(simplex))
            coords = [
                sum(pt[i] * adj[i][j] for i in range(3)) for j in range(3)
            ]
            if det < 0:
                det, coords = -det, [-c for c in coords]
            if all(c >= 0 for c in coords):
                inside += 1
        assert inside >= 1
