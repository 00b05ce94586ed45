"""Positive affine semigroups: membership, Hilbert basis, presentation,
normality, relative interior, Gorenstein witness."""

import random

import pytest

from qtoric.semigroup import AffineSemigroup, CongruencePair

PI24_GENS = [
    (1, 0, 0, 0, 0),
    (1, 1, 0, 0, 0),
    (1, 1, 1, 0, 0),
    (1, 1, 0, 1, 0),
    (1, 1, 1, 1, 0),
    (1, 1, 1, 1, 1),
]


def pi24():
    return AffineSemigroup(PI24_GENS)


def test_validation():
    with pytest.raises(ValueError):
        AffineSemigroup([(0, 0)])
    with pytest.raises(ValueError):
        AffineSemigroup([(1, -1)])
    with pytest.raises(ValueError):
        AffineSemigroup([(1,), (1, 1)])
    with pytest.raises(ValueError):
        AffineSemigroup([])
    assert AffineSemigroup([], ambient_rank=2).rank() == 0


def test_rank():
    assert AffineSemigroup([(1, 0), (0, 1)]).rank() == 2
    assert AffineSemigroup([(2, 0), (3, 0)]).rank() == 1
    assert pi24().rank() == 5


def test_rank_invariance():
    rng = random.Random(5)
    gens = list(PI24_GENS)
    for _ in range(5):
        rng.shuffle(gens)
        assert AffineSemigroup(gens).rank() == 5
    # unimodular change of coordinates preserves rank
    swapped = [(g[1], g[0], g[2], g[3], g[4] + g[0]) for g in PI24_GENS]
    assert AffineSemigroup(swapped).rank() == 5


def test_member():
    S = pi24()
    zero = S.member((0, 0, 0, 0, 0))
    assert zero == (0,) * 6
    xi = S.member((2, 2, 1, 1, 0))
    assert xi is not None
    acc = [0] * 5
    for m, g in zip(xi, S.generators):
        acc = [a + m * c for a, c in zip(acc, g)]
    assert tuple(acc) == (2, 2, 1, 1, 0)
    # the interior inequality a0 >= a_i fails for e_1
    assert S.member((0, 1, 0, 0, 0)) is None


def test_fiber_of_straightening_degree():
    S = pi24()
    fib = S.fiber((2, 2, 1, 1, 0))
    e = lambda i: tuple(1 if j == i else 0 for j in range(6))
    both = sorted(
        [
            tuple(x + y for x, y in zip(e(1), e(4))),  # [13] + [24]
            tuple(x + y for x, y in zip(e(2), e(3))),  # [14] + [23]
        ]
    )
    assert sorted(fib) == both


def test_hilbert_basis_redundant_generator():
    S = AffineSemigroup([(1, 0), (0, 1), (1, 1)])
    assert S.hilbert_basis() == ((0, 1), (1, 0))
    wit = S.reduction_witnesses()
    assert set(wit) == {(1, 1)}
    assert sum(wit[(1, 1)]) >= 2


def test_hilbert_basis_pi24():
    assert pi24().hilbert_basis() == tuple(sorted(PI24_GENS))


def test_hilbert_basis_numerical():
    assert AffineSemigroup([(2,), (3,)]).hilbert_basis() == ((2,), (3,))


def test_hilbert_minimality_property():
    # no output element is a sum of two nonzero members
    for gens in [PI24_GENS, [(2,), (3,)], [(1, 0), (1, 1), (1, 2), (2, 2)]]:
        S = AffineSemigroup(gens)
        for h in S.hilbert_basis():
            assert all(
                sum(xi) < 2 for xi in S.fiber(h)
            ), f"{h} decomposes"


def test_presentation_free():
    S = AffineSemigroup([(1, 0), (0, 1)])
    assert S.presentation().pairs == ()


def test_presentation_numerical():
    S = AffineSemigroup([(2,), (3,)])
    pres = S.presentation(12)
    assert pres.pairs == (CongruencePair((3, 0), (0, 2)),)
    assert pres.certified_bound == 12


def test_presentation_pi24():
    S = pi24()
    pres = S.presentation()
    assert pres.pairs == (
        CongruencePair((0, 1, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0)),
    )


def test_presentation_pairs_sound():
    S = pi24()
    for left, right in S.presentation().pairs:
        im = lambda xi: tuple(
            sum(m * g[k] for m, g in zip(xi, S.generators)) for k in range(5)
        )
        assert im(left) == im(right)


def test_presentation_bound_too_small():
    with pytest.raises(ValueError):
        pi24().presentation(3)


def test_normality():
    assert AffineSemigroup([(1, 0), (0, 1)]).is_normal().normal
    v = pi24().is_normal()
    assert v.normal and v.mode == "exact"
    bad = AffineSemigroup([(2,), (3,)]).is_normal()
    assert not bad.normal and bad.counterexample == (1,)
    badb = AffineSemigroup([(2,), (3,)]).is_normal(bound=10)
    assert not badb.normal and badb.counterexample == (1,) and badb.bound == 10


def test_normality_non_saturated_2d():
    # group of <(1,0),(1,2)> misses odd second coordinates, so it is normal
    assert AffineSemigroup([(1, 0), (1, 2)]).is_normal().normal
    # <(1,0),(1,1),(1,3)> has group Z^2 and cone 0 <= y <= 3x, missing (1,2)
    T = AffineSemigroup([(1, 0), (1, 1), (1, 3)])
    vt = T.is_normal()
    assert not vt.normal and vt.counterexample == (1, 2)
    vb = T.is_normal(bound=6)
    assert not vb.normal and vb.counterexample == (1, 2)
    # adding the missing point saturates it
    assert AffineSemigroup([(1, 0), (1, 1), (1, 2), (1, 3)]).is_normal().normal


def test_normal_members_enumeration():
    # for normal S every cone lattice point up to the bound is a member
    S = pi24()
    members = set(S.elements_up_to(8))
    from qtoric.intlinalg import dot, lattice_coords

    basis, _, facets, _ = S.cone_geometry()
    from qtoric.semigroup import _orthant_points

    for v in _orthant_points(5, 8):
        z = lattice_coords(basis, v)
        if z is None or any(dot(f, z) < 0 for f in facets):
            continue
        assert v in members


def test_relint():
    assert AffineSemigroup([(1, 0), (0, 1)]).relint_members(2) == ((1, 1),)
    assert AffineSemigroup([(2,), (3,)]).relint_members(5) == (
        (2,),
        (3,),
        (4,),
        (5,),
    )
    ri = pi24().relint_members(12)
    assert ri == ((4, 3, 2, 2, 1),)


def test_gorenstein():
    w = AffineSemigroup([(1, 0), (0, 1)]).gorenstein_witness(6)
    assert w is not None and w.witness == (1, 1)
    w3 = AffineSemigroup([(1, 0, 0), (0, 1, 0), (0, 0, 1)]).gorenstein_witness(7)
    assert w3 is not None and w3.witness == (1, 1, 1)
    assert AffineSemigroup([(2,), (3,)]).gorenstein_witness(10) is None
    wp = pi24().gorenstein_witness(12)
    assert wp is not None and wp.witness == (4, 3, 2, 2, 1)


def test_gorenstein_witness_is_relint_shift():
    S = AffineSemigroup([(1, 0), (0, 1)])
    w = S.gorenstein_witness(8).witness
    relint = set(S.relint_members(8))
    shifted = {
        tuple(a + b for a, b in zip(w, v)) for v in S.elements_up_to(8 - sum(w))
    }
    assert {v for v in shifted if sum(v) <= 8} == relint


def test_json_roundtrip():
    S = pi24()
    T = AffineSemigroup.from_json_dict(S.as_json_dict())
    assert T == S and T.ambient_rank == 5
