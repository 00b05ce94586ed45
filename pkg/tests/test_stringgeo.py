"""Root data, string cones, weighted semigroups, and Schubert faces."""

import itertools
import random

import pytest

from qtoric import kernels
from qtoric import stringgeo as sg
from qtoric.demos import a2_twist_matrix, demo_a2_schubert
from qtoric.exact import ONE, Q, RatFunc


@pytest.fixture(scope="module")
def a2():
    return sg.RootDatum.builtin("A2")


@pytest.fixture(scope="module")
def a2_wsg(a2):
    return sg.weighted_semigroup(sg.string_cone(a2, (1, 2, 1)))


def test_builtin_root_data():
    counts = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "C2": 4, "G2": 6}
    for label, expected in counts.items():
        datum = sg.RootDatum.builtin(label)
        assert len(datum.positive_roots()) == expected
    assert sg.RootDatum.builtin("A2").positive_roots() == ((0, 1), (1, 0), (1, 1))
    assert sg.RootDatum.builtin("B2").symmetrizers == (1, 2)
    assert sg.RootDatum.builtin("C2").symmetrizers == (2, 1)
    assert sg.RootDatum.builtin("G2").symmetrizers == (3, 1)
    with pytest.raises(ValueError):
        sg.RootDatum.builtin("E8")


def test_cartan_validation():
    with pytest.raises(ValueError):
        sg.RootDatum([[2, -1]])
    with pytest.raises(ValueError):
        sg.RootDatum([[1]])
    with pytest.raises(ValueError):
        sg.RootDatum([[2, 1], [1, 2]])
    with pytest.raises(ValueError):
        sg.RootDatum([[2, -1], [0, 2]])
    with pytest.raises(ValueError):
        sg.RootDatum([[2, -1], [-1, 2]], symmetrizers=(1, 2))
    with pytest.raises(ValueError):
        sg.RootDatum([[2, -1], [-1, 2]], symmetrizers=(0, 0))
    # affine matrix: reflection closure must not terminate
    with pytest.raises(ValueError, match="finite type"):
        sg.RootDatum([[2, -2], [-2, 2]]).positive_roots()


def test_root_datum_json_roundtrip(a2):
    data = a2.as_json_dict()
    back = sg.RootDatum.from_json_dict(data)
    assert back == a2 and back.name == "A2"


def test_weyl_length_against_permutation_inversions(a2):
    # A2 Weyl group is the symmetric group on three letters
    def perm_of(word):
        perm = [1, 2, 3]
        for i in reversed(word):
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return perm

    def inversions(perm):
        return sum(
            1
            for i in range(3)
            for j in range(i + 1, 3)
            if perm[i] > perm[j]
        )

    assert sg.weyl_length(a2, ()) == 0 and sg.is_reduced(a2, ())
    for k in range(5):
        for word in itertools.product((1, 2), repeat=k):
            assert sg.weyl_length(a2, word) == inversions(perm_of(word))
    assert sg.weyl_length(a2, (1, 2, 1)) == 3
    assert sg.is_reduced(a2, (1, 2, 1))
    assert sg.weyl_length(a2, (1, 1)) == 0
    assert not sg.is_reduced(a2, (1, 1))
    with pytest.raises(ValueError):
        sg.weyl_length(a2, (3,))


def test_longest_words():
    a2 = sg.RootDatum.builtin("A2")
    assert sg.weyl_length(a2, (2, 1, 2)) == 3
    a3 = sg.RootDatum.builtin("A3")
    assert sg.weyl_length(a3, (1, 2, 1, 3, 2, 1)) == 6
    assert sg.is_reduced(a3, (1, 2, 1, 3, 2, 1))
    b2 = sg.RootDatum.builtin("B2")
    assert sg.weyl_length(b2, (1, 2, 1, 2)) == 4


def test_is_adapted(a2):
    w0 = (1, 2, 1)
    assert sg.is_adapted(a2, w0, ())
    assert sg.is_adapted(a2, w0, (1,))
    assert not sg.is_adapted(a2, w0, (2,))
    assert sg.is_adapted(a2, w0, (1, 2))
    assert not sg.is_adapted(a2, w0, (2, 1))
    # adaptedness compares Weyl elements, not letter strings
    assert sg.is_adapted(a2, w0, (2, 1, 2))
    with pytest.raises(ValueError):
        sg.is_adapted(a2, (1, 2), (1,))
    with pytest.raises(ValueError):
        sg.is_adapted(a2, w0, (1, 1))


def test_string_cone_builtins(a2):
    cone = sg.string_cone(a2, (1, 2, 1))
    assert cone.rows == ((0, 1, -1),)
    assert cone.provenance == "builtin"
    assert sg.string_cone(a2, (2, 1, 2)).rows == ((0, 1, -1),)
    a1 = sg.RootDatum.builtin("A1")
    assert sg.string_cone(a1, (1,)).rows == ()


def test_cone_data_required():
    a3 = sg.RootDatum.builtin("A3")
    with pytest.raises(ValueError, match="cone data required"):
        sg.string_cone(a3, (1, 2, 1, 3, 2, 1))
    b2 = sg.RootDatum.builtin("B2")
    with pytest.raises(ValueError, match="cone data required"):
        sg.string_cone(b2, (1, 2, 1, 2))


def test_user_cone_oracle(a2):
    cone = sg.string_cone(a2, (1, 2, 1), inequalities=((0, 1, -1),))
    assert cone.provenance == "user_supplied"
    # dropping the only inequality overcounts some weight slice
    with pytest.raises(ValueError, match="lattice points"):
        sg.string_cone(a2, (1, 2, 1), inequalities=())
    with pytest.raises(ValueError, match="not reduced"):
        sg.string_cone(a2, (1, 1, 2), inequalities=((0, 1, -1),))
    with pytest.raises(ValueError, match="coefficients"):
        sg.string_cone(a2, (1, 2, 1), inequalities=((1, -1),))


def test_weighted_semigroup_rows(a2_wsg):
    a1 = sg.RootDatum.builtin("A1")
    w1 = sg.weighted_semigroup(sg.string_cone(a1, (1,)))
    assert w1.rows == ((-1, 1),)
    assert set(a2_wsg.rows) == {
        (0, 1, -1, 0, 0),
        (0, 0, -1, 1, 0),
        (0, -1, 1, 0, 1),
        (-1, 1, -2, 1, 0),
    }


def test_weight_slice_points_by_hand():
    # weight (1,0) slice of the A2 word (1,2,1) system, solved directly
    rows = [
        ((0, 1, -1), 0),
        ((0, 0, -1), 1),
        ((0, -1, 1), 0),
        ((-1, 1, -2), 1),
    ]
    assert kernels.affine_points(3, rows) == [(0, 0, 0), (0, 1, 1), (1, 0, 0)]


def test_counts_match_weyl_dim_a2(a2, a2_wsg):
    frozen = {
        (0, 0): 1,
        (1, 0): 3,
        (0, 1): 3,
        (1, 1): 8,
        (2, 0): 6,
        (2, 1): 15,
        (2, 2): 27,
        (3, 3): 64,
    }
    for lam, expected in frozen.items():
        assert sg.weyl_dim(a2, lam) == expected
    for lam in itertools.product(range(4), repeat=2):
        assert sg.count_points(a2_wsg, lam) == sg.weyl_dim(a2, lam)


def test_counts_match_weyl_dim_a1():
    a1 = sg.RootDatum.builtin("A1")
    wsg = sg.weighted_semigroup(sg.string_cone(a1, (1,)))
    for r in range(11):
        assert sg.count_points(wsg, (r,)) == r + 1 == sg.weyl_dim(a1, (r,))


def test_weyl_dim_other_types():
    b2 = sg.RootDatum.builtin("B2")
    assert (sg.weyl_dim(b2, (1, 0)), sg.weyl_dim(b2, (0, 1))) == (4, 5)
    g2 = sg.RootDatum.builtin("G2")
    assert {sg.weyl_dim(g2, (1, 0)), sg.weyl_dim(g2, (0, 1))} == {7, 14}
    a3 = sg.RootDatum.builtin("A3")
    assert sg.weyl_dim(a3, (1, 0, 0)) == 4
    assert sg.weyl_dim(a3, (0, 1, 0)) == 6
    assert sg.weyl_dim(a3, (1, 0, 1)) == 15
    assert sg.weyl_dim(a3, (1, 1, 1)) == 64
    for label in ("A1", "A2", "A3", "B2", "C2", "G2"):
        datum = sg.RootDatum.builtin(label)
        assert sg.weyl_dim(datum, (0,) * datum.rank) == 1
    with pytest.raises(ValueError):
        sg.weyl_dim(b2, (1, -1))


def test_schubert_faces(a2_wsg):
    s1 = sg.faces(a2_wsg, w_word=(1,))
    assert s1.zero_vars == (1, 2)
    assert sg.count_points(s1, (1, 0)) == 2
    identity = sg.faces(a2_wsg, w_word=())
    for lam in itertools.product(range(4), repeat=2):
        assert sg.count_points(identity, lam) == 1
    with pytest.raises(ValueError, match="not adapted"):
        sg.faces(a2_wsg, w_word=(2,))
    with pytest.raises(ValueError, match="not reduced"):
        sg.faces(a2_wsg, w_word=(1, 1))


def test_parabolic_faces(a2_wsg):
    cut = sg.faces(a2_wsg, I=(1,))
    assert cut.zero_vars == (3,)
    assert sg.count_points(cut, (1, 0)) == 0
    assert sg.count_points(cut, (0, 2)) == 6
    both = sg.faces(sg.faces(a2_wsg, I=(2,)), w_word=(1,))
    assert both.zero_vars == (1, 2, 4)
    with pytest.raises(ValueError):
        sg.faces(a2_wsg, I=(3,))


def test_bruhat_chain_counts_nondecreasing(a2_wsg):
    chain = [(), (1,), (1, 2), (1, 2, 1)]
    for lam in itertools.product(range(4), repeat=2):
        counts = [
            sg.count_points(sg.faces(a2_wsg, w_word=w), lam) for w in chain
        ]
        assert counts == sorted(counts)
    assert [
        sg.count_points(sg.faces(a2_wsg, w_word=w), (1, 1)) for w in chain
    ] == [1, 2, 5, 8]


def test_face_points_are_slice_of_full(a2_wsg):
    rows = [(r, 0) for r in a2_wsg.rows]
    full = kernels.affine_points(5, rows, sum_bound=6)
    face_rows = rows + [
        (tuple(-1 if j == v else 0 for j in range(5)), 0) for v in (1, 2)
    ]
    face = kernels.affine_points(5, face_rows, sum_bound=6)
    assert face == [p for p in full if p[1] == 0 and p[2] == 0]


def test_weighted_points_closed_under_addition(a2_wsg):
    rows = [(r, 0) for r in a2_wsg.rows]
    pts = kernels.affine_points(5, rows, sum_bound=5)
    rng = random.Random(11)
    for _ in range(60):
        p, q = rng.choice(pts), rng.choice(pts)
        s = tuple(x + y for x, y in zip(p, q))
        assert all(sum(c * x for c, x in zip(row, s)) >= 0 for row in a2_wsg.rows)


def test_a1_toric_algebra():
    a1 = sg.RootDatum.builtin("A1")
    wsg = sg.weighted_semigroup(sg.string_cone(a1, (1,)))
    matrix = ((0, -1), (1, 0))
    result = sg.schubert_toric_algebra(wsg, matrix)
    assert result.semigroup.hilbert_basis() == ((0, 1), (1, 1))
    assert result.required_bound == 3
    # ordered-monomial twist of u2 u1 = q^2 u1 u2: a quantum plane
    algebra = result.algebra
    assert algebra.multiply((0, 1), (1, 1))[0] == RatFunc.q_power(1)
    assert algebra.multiply((1, 1), (0, 1))[0] == ONE
    with pytest.raises(ValueError, match="3"):
        sg.schubert_toric_algebra(wsg, matrix, bound=2)


def test_a2_schubert_cell_algebra(a2_wsg):
    cut = sg.faces(a2_wsg, w_word=(1,))
    result = sg.schubert_toric_algebra(cut, a2_twist_matrix())
    assert set(result.semigroup.hilbert_basis()) == {
        (0, 0, 0, 1, 0),
        (0, 0, 0, 0, 1),
        (1, 0, 0, 1, 0),
    }
    assert result.required_bound == 4
    assert result.report.as_cohen_macaulay
    assert result.report.local_dimension == 3


def test_full_a2_toric_algebra(a2_wsg):
    result = sg.schubert_toric_algebra(a2_wsg, a2_twist_matrix())
    assert set(result.semigroup.hilbert_basis()) == {
        (0, 0, 0, 0, 1),
        (0, 0, 0, 1, 0),
        (0, 1, 0, 0, 1),
        (0, 1, 1, 1, 0),
        (1, 0, 0, 1, 0),
        (1, 1, 0, 0, 1),
    }
    assert result.required_bound == 12
    report = result.report
    assert report.domain and report.satisfies_chi
    assert report.local_dimension == 5
    assert report.as_cohen_macaulay and report.maximal_order
    assert report.gorenstein.status == "witness"
    assert report.gorenstein.witness == (1, 2, 1, 2, 2)
    with pytest.raises(ValueError, match="12"):
        sg.schubert_toric_algebra(a2_wsg, a2_twist_matrix(), bound=5)


def test_trivial_twist_is_commutative(a2_wsg):
    zero = tuple(tuple(0 for _ in range(5)) for _ in range(5))
    result = sg.schubert_toric_algebra(a2_wsg, zero)
    basis = result.semigroup.hilbert_basis()
    for s in basis:
        for t in basis:
            assert result.algebra.multiply(s, t)[0] == ONE


def test_everything_pinned_rejected(a2_wsg):
    cut = sg.faces(a2_wsg, I=(1, 2), w_word=())
    with pytest.raises(ValueError, match="pinned"):
        sg.schubert_toric_algebra(cut, a2_twist_matrix())


def test_demo_a2_schubert_full():
    report = demo_a2_schubert()
    assert report["all_match"]
    table = {tuple(row["weight"]): row["points"] for row in report["counts"]}
    assert table[(1, 0)] == 3 and table[(1, 1)] == 8
    assert table[(2, 0)] == 6 and table[(2, 2)] == 27
    assert len(report["hilbert_basis"]) == 6
    assert report["required_bound"] == 12
    assert report["homological"]["gorenstein"]["status"] == "witness"


def test_demo_a2_schubert_cell():
    report = demo_a2_schubert(w_word=(1,))
    assert report["zero_coordinates"] == [1, 2]
    assert len(report["hilbert_basis"]) == 3
    assert not report["all_match"]
    with pytest.raises(ValueError, match="not adapted"):
        demo_a2_schubert(w_word=(2,))
    with pytest.raises(ValueError, match="q0"):
        demo_a2_schubert(q0=1)


def test_demo_a2_schubert_specialized():
    report = demo_a2_schubert(q0=2, w_word=(1, 2))
    assert report["parameter"] == "2"
    coeffs = {c["coefficient"] for c in report["products"]}
    assert coeffs <= {"1", "2", "4", "8", "16"}
