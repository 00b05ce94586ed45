"""Root data, string cones, and the weighted semigroups of Schubert varieties.

A reduced word for a Weyl group element carries a polyhedral cone of
string parameters.  Cutting the cone with weight-linear inequalities
yields a polytope whose lattice points count a representation basis, and
bundling the weight into extra coordinates yields a positive affine
semigroup S~ whose twisted semigroup algebras are the degenerate forms
of quantum flag and Schubert coordinate rings.

String cone inequality systems are taken as data: built-ins cover rank
one and two (validated against the Weyl dimension formula at load), and
anything else must be supplied explicitly, where it is validated the
same way whenever the word has full length.
"""

import math
from fractions import Fraction
from typing import NamedTuple, Optional

from . import intlinalg as ila
from . import kernels
from .degen import HomologicalReport, homological_report
from .exact import Q, RatFunc
from .semigroup import AffineSemigroup
from .twisted import TwistedAlgebra, restrict_to_semigroup

_BUILTIN_CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "C2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}

# closure guard: anything beyond this is not a desk-scale finite type
_MAX_POSITIVE_ROOTS = 10000


class RootDatum:
    """Symmetrizable Cartan matrix acting on simple-root coordinates.

    Convention: cartan[i][j] is the pairing of the j-th simple root
    against the i-th coroot, so s_i(beta) subtracts
    (sum_j cartan[i][j] beta_j) times the i-th simple root.
    """

    def __init__(self, cartan, symmetrizers=None, name: Optional[str] = None):
        cartan = tuple(tuple(int(c) for c in row) for row in cartan)
        n = len(cartan)
        if n == 0 or any(len(row) != n for row in cartan):
            raise ValueError("cartan matrix must be square and nonempty")
        for i in range(n):
            if cartan[i][i] != 2:
                raise ValueError("cartan diagonal entries must equal 2")
            for j in range(n):
                if i != j and cartan[i][j] > 0:
                    raise ValueError("cartan off-diagonal entries must be <= 0")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise ValueError("cartan zero pattern must be symmetric")
        self.cartan = cartan
        self.name = name
        if symmetrizers is None:
            symmetrizers = self._infer_symmetrizers()
        symmetrizers = tuple(int(d) for d in symmetrizers)
        if len(symmetrizers) != n or any(d <= 0 for d in symmetrizers):
            raise ValueError("symmetrizers must be positive, one per row")
        for i in range(n):
            for j in range(n):
                if symmetrizers[i] * cartan[i][j] != symmetrizers[j] * cartan[j][i]:
                    raise ValueError("cartan matrix is not symmetrized by the given weights")
        self.symmetrizers = symmetrizers
        self._roots = None

    def _infer_symmetrizers(self):
        # propagate d_j / d_i = c_ij / c_ji along the Dynkin graph
        n = len(self.cartan)
        d = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if j == i or self.cartan[i][j] == 0:
                        continue
                    ratio = Fraction(self.cartan[i][j], self.cartan[j][i])
                    if d[j] is None:
                        d[j] = d[i] * ratio
                        stack.append(j)
                    elif d[j] != d[i] * ratio:
                        raise ValueError("cartan matrix is not symmetrizable")
        scale = 1
        for x in d:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
        ints = [int(x * scale) for x in d]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        return tuple(x // g for x in ints)

    @classmethod
    def builtin(cls, label: str) -> "RootDatum":
        if label not in _BUILTIN_CARTAN:
            raise ValueError(f"unknown type {label!r}; choose from {sorted(_BUILTIN_CARTAN)}")
        return cls(_BUILTIN_CARTAN[label], name=label)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def __repr__(self):
        tag = self.name or f"rank {self.rank}"
        return f"RootDatum({tag})"

    def __eq__(self, other):
        if not isinstance(other, RootDatum):
            return NotImplemented
        return self.cartan == other.cartan and self.symmetrizers == other.symmetrizers

    def __hash__(self):
        return hash((self.cartan, self.symmetrizers))

    def reflect(self, i: int, beta) -> tuple:
        """Simple reflection s_i applied to a vector in root coordinates (i is 0-based)."""
        c = sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
        return tuple(b - c if j == i else b for j, b in enumerate(beta))

    def positive_roots(self) -> tuple:
        """All positive roots in simple-root coordinates, by reflection closure."""
        if self._roots is None:
            n = self.rank
            simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
            seen = set(simple)
            queue = list(simple)
            while queue:
                beta = queue.pop()
                for i in range(n):
                    img = self.reflect(i, beta)
                    if img not in seen and all(x >= 0 for x in img):
                        seen.add(img)
                        queue.append(img)
                        if len(seen) > _MAX_POSITIVE_ROOTS:
                            raise ValueError("reflection closure did not terminate; matrix is not of finite type")
            self._roots = tuple(sorted(seen, key=lambda r: (sum(r), r)))
        return self._roots

    def as_json_dict(self):
        data = {
            "cartan": [list(row) for row in self.cartan],
            "symmetrizers": list(self.symmetrizers),
        }
        if self.name is not None:
            data["name"] = self.name
        return data

    @classmethod
    def from_json_dict(cls, data) -> "RootDatum":
        return cls(data["cartan"], data.get("symmetrizers"), data.get("name"))


def _check_word(datum: RootDatum, word) -> tuple:
    word = tuple(int(i) for i in word)
    for i in word:
        if not 1 <= i <= datum.rank:
            raise ValueError(f"letter {i} outside 1..{datum.rank}")
    return word


def _word_matrix(datum: RootDatum, word) -> tuple:
    """Matrix of the product of reflections on root coordinates (rightmost acts first)."""
    n = datum.rank
    cols = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    for i in reversed(word):
        cols = [datum.reflect(i - 1, c) for c in cols]
    return tuple(cols)


def weyl_length(datum: RootDatum, word) -> int:
    """Length of the Weyl element: positive roots sent to negative ones."""
    word = _check_word(datum, word)
    cols = _word_matrix(datum, word)
    n = datum.rank
    count = 0
    for beta in datum.positive_roots():
        img = tuple(sum(cols[j][k] * beta[j] for j in range(n)) for k in range(n))
        if all(x <= 0 for x in img):
            count += 1
    return count


def is_reduced(datum: RootDatum, word) -> bool:
    word = _check_word(datum, word)
    return weyl_length(datum, word) == len(word)


def is_adapted(datum: RootDatum, w0_word, w_word) -> bool:
    """Whether the length-l(w) prefix of w0_word equals w as a Weyl element.

    w0_word must be a reduced word for the longest element (its length
    must be the number of positive roots); w_word must be reduced.
    """
    w0_word = _check_word(datum, w0_word)
    w_word = _check_word(datum, w_word)
    nroots = len(datum.positive_roots())
    if len(w0_word) != nroots or not is_reduced(datum, w0_word):
        raise ValueError(f"need a reduced word of the longest element (length {nroots})")
    if not is_reduced(datum, w_word):
        raise ValueError(f"word {w_word} is not reduced")
    prefix = w0_word[: len(w_word)]
    return _word_matrix(datum, prefix) == _word_matrix(datum, w_word)


class StringCone(NamedTuple):
    """Homogeneous inequality system on the string parameters of a reduced word.

    Each row is a coefficient vector c with the meaning sum(c . a) >= 0;
    the coordinates themselves are implicitly nonnegative.
    """

    datum: RootDatum
    word: tuple
    rows: tuple
    provenance: str

    @property
    def nvars(self) -> int:
        return len(self.word)


_BUILTIN_CONES = {
    ("A1", (1,)): (),
    ("A2", (1, 2, 1)): ((0, 1, -1),),
    ("A2", (2, 1, 2)): ((0, 1, -1),),
}

_validated_cones = set()


def string_cone(datum: RootDatum, word, inequalities=None) -> StringCone:
    """String cone of a reduced word, from the built-in table or user rows.

    Built-in systems exist for A1 and the two A2 longest words; anything
    else needs explicit inequality rows.  Full-length words (longest
    element) are validated by comparing lattice-point counts of every
    weight polytope with r_i <= 3 against the Weyl dimension formula;
    shorter words parametrize Demazure-type subfamilies with no product
    formula available, so their user-supplied rows are accepted as given.
    """
    word = _check_word(datum, word)
    if not is_reduced(datum, word):
        raise ValueError(f"word {word} is not reduced")
    if inequalities is None:
        rows = _BUILTIN_CONES.get((datum.name, word))
        if rows is None:
            raise ValueError(
                f"cone data required for type {datum.name or '?'} word {word}: "
                "pass explicit inequality rows"
            )
        provenance = "builtin"
    else:
        rows = tuple(tuple(int(c) for c in row) for row in inequalities)
        if any(len(row) != len(word) for row in rows):
            raise ValueError(f"inequality rows must have {len(word)} coefficients")
        provenance = "user_supplied"
    cone = StringCone(datum, word, rows, provenance)
    key = (datum.cartan, datum.symmetrizers, word, rows)
    if key not in _validated_cones:
        if len(word) == len(datum.positive_roots()):
            _validate_by_counts(cone)
        _validated_cones.add(key)
    return cone


def _dominant_grid(rank, top):
    lams = [()]
    for _ in range(rank):
        lams = [lam + (r,) for lam in lams for r in range(top + 1)]
    return lams


def _validate_by_counts(cone: StringCone):
    wsg = weighted_semigroup(cone)
    for lam in _dominant_grid(cone.datum.rank, 3):
        expected = weyl_dim(cone.datum, lam)
        got = count_points(wsg, lam)
        if got != expected:
            raise ValueError(
                f"cone rows rejected: weight {lam} has {got} lattice points "
                f"but dimension {expected}"
            )


class WeightedSemigroup(NamedTuple):
    """Lattice points (a, r) where a lies in the r-weighted string polytope.

    rows are homogeneous inequalities on the N + rank coordinates;
    zero_vars are coordinates pinned to zero by face cuts.
    """

    cone: StringCone
    rows: tuple
    zero_vars: tuple

    @property
    def nvars(self) -> int:
        return len(self.cone.word) + self.cone.datum.rank


def weighted_semigroup(cone: StringCone) -> WeightedSemigroup:
    """Bundle the weight into coordinates: cone rows plus the chain

    a_l <= r_{i_l} - sum_{m>l} <alpha_{i_m}, alpha_{i_l}> a_m,
    each written as a homogeneous form in (a_1..a_N, r_1..r_n) >= 0.
    """
    datum, word = cone.datum, cone.word
    N, n = len(word), datum.rank
    rows = [tuple(row) + (0,) * n for row in cone.rows]
    for l in range(N):
        coeffs = [0] * (N + n)
        coeffs[l] = -1
        for m in range(l + 1, N):
            coeffs[m] -= datum.cartan[word[l] - 1][word[m] - 1]
        coeffs[N + word[l] - 1] += 1
        rows.append(tuple(coeffs))
    return WeightedSemigroup(cone, tuple(rows), ())


def faces(wsg: WeightedSemigroup, I=(), w_word=None) -> WeightedSemigroup:
    """Cut S~ by r_i = 0 for i in I and a_i = 0 for l(w) < i <= N.

    I holds 1-based fundamental weight indices; w_word picks a Schubert
    cell and must be adapted to the cone's reduced word (None keeps the
    full cell).
    """
    datum, word = wsg.cone.datum, wsg.cone.word
    N, n = len(word), datum.rank
    zeros = set(wsg.zero_vars)
    for i in I:
        i = int(i)
        if not 1 <= i <= n:
            raise ValueError(f"fundamental index {i} outside 1..{n}")
        zeros.add(N + i - 1)
    if w_word is not None:
        if not is_adapted(datum, word, w_word):
            raise ValueError(
                f"word {tuple(word)} is not adapted to {tuple(w_word)}: "
                "its prefix is a different Weyl element"
            )
        for pos in range(len(tuple(w_word)), N):
            zeros.add(pos)
    return WeightedSemigroup(wsg.cone, wsg.rows, tuple(sorted(zeros)))


def count_points(wsg: WeightedSemigroup, lam) -> int:
    """Number of lattice points of the weight-lam slice of S~."""
    datum, word = wsg.cone.datum, wsg.cone.word
    N, n = len(word), datum.rank
    lam = tuple(int(r) for r in lam)
    if len(lam) != n or any(r < 0 for r in lam):
        raise ValueError(f"weight must be {n} nonnegative integers")
    for v in wsg.zero_vars:
        if v >= N and lam[v - N] != 0:
            return 0
    if N == 0:
        return 1
    slice_rows = []
    for row in wsg.rows:
        const = sum(row[N + k] * lam[k] for k in range(n))
        slice_rows.append((row[:N], const))
    for v in wsg.zero_vars:
        if v < N:
            slice_rows.append((tuple(-1 if j == v else 0 for j in range(N)), 0))
    return len(kernels.affine_points(N, slice_rows))


def weyl_dim(datum: RootDatum, lam) -> int:
    """dim of the highest weight module, Weyl product over positive roots."""
    lam = tuple(int(r) for r in lam)
    if len(lam) != datum.rank or any(r < 0 for r in lam):
        raise ValueError(f"weight must be {datum.rank} nonnegative integers")
    d = datum.symmetrizers
    total = Fraction(1)
    for beta in datum.positive_roots():
        num = sum((lam[j] + 1) * c * d[j] for j, c in enumerate(beta))
        den = sum(c * d[j] for j, c in enumerate(beta))
        total *= Fraction(num, den)
    assert total.denominator == 1
    return int(total)


class SchubertAlgebra(NamedTuple):
    """Twisted semigroup algebra of a weighted string semigroup face."""

    algebra: TwistedAlgebra
    semigroup: AffineSemigroup
    report: HomologicalReport
    required_bound: int
    bound: int


def _reduced_system(wsg: WeightedSemigroup):
    """Inequality rows with the pinned-to-zero coordinates eliminated."""
    keep = [v for v in range(wsg.nvars) if v not in set(wsg.zero_vars)]
    rows = []
    for row in wsg.rows:
        cut = tuple(row[v] for v in keep)
        if any(cut):
            rows.append(cut)
    return keep, sorted(set(rows))


def _extreme_ray_bound(rows, nvars) -> tuple:
    """Extreme rays of {x >= 0, rows . x >= 0} and the Hilbert basis size bound.

    The constraint rows together with the unit vectors span the dual
    cone, so its facet normals are exactly the primitive generators of
    the extreme rays.  Every Hilbert basis element of the saturated
    semigroup lies in a fundamental cell of some triangulation, hence
    has coordinate sum at most the total over the rays.
    """
    units = [tuple(1 if j == v else 0 for j in range(nvars)) for v in range(nvars)]
    dual_gens = units + list(rows)
    interior = ila.fm_feasible_point([(g, -1) for g in dual_gens], nvars)
    if interior is None:
        raise ValueError(
            "inequality system forces equalities beyond the declared zero coordinates"
        )
    rays = ila.cone_facets(dual_gens, nvars)
    for ray in rays:
        assert all(ila.dot(g, ray) >= 0 for g in dual_gens)
    return tuple(rays), sum(sum(r) for r in rays)


def schubert_toric_algebra(
    wsg: WeightedSemigroup, matrix, base: RatFunc = Q, bound: Optional[int] = None
) -> SchubertAlgebra:
    """Twisted algebra on the Hilbert basis of a weighted string semigroup.

    Lattice points are harvested up to a coordinate-sum bound and
    reduced to the irreducible ones.  The harvest is complete once the
    bound reaches the certified requirement (sum of extreme ray sums);
    smaller explicit bounds are refused, None takes the certified value.
    matrix is an antisymmetric commutation exponent matrix on the full
    (a, r) coordinates, and the resulting cocycle is its ordered-monomial
    twist restricted to the semigroup.  The attached report checks
    normality exactly rather than assuming it.
    """
    keep, rows = _reduced_system(wsg)
    nred = len(keep)
    if nred == 0:
        raise ValueError("every coordinate is pinned to zero")
    rays, required = _extreme_ray_bound(rows, nred)
    if bound is None:
        bound = required
    elif bound < required:
        raise ValueError(
            f"Hilbert basis completeness requires bound >= {required}, got {bound}"
        )
    pts = [
        p
        for p in kernels.affine_points(nred, [(r, 0) for r in rows], sum_bound=bound)
        if any(p)
    ]
    pts.sort(key=lambda p: (sum(p), p))
    pts_set = set(pts)
    irreducible = []
    for p in pts:
        s = sum(p)
        decomposable = False
        for u in pts:
            if 2 * sum(u) > s:
                break
            if all(x >= y for x, y in zip(p, u)):
                rest = tuple(x - y for x, y in zip(p, u))
                if rest in pts_set:
                    decomposable = True
                    break
        if not decomposable:
            irreducible.append(p)
    embedded = []
    for p in irreducible:
        full = [0] * wsg.nvars
        for v, x in zip(keep, p):
            full[v] = x
        embedded.append(tuple(full))
    embedded.sort()
    semigroup = AffineSemigroup(embedded, ambient_rank=wsg.nvars)
    assert set(semigroup.hilbert_basis()) == set(embedded)
    cocycle = restrict_to_semigroup(matrix, base, semigroup)
    report = homological_report(semigroup, bound)
    return SchubertAlgebra(
        algebra=TwistedAlgebra(semigroup, cocycle),
        semigroup=semigroup,
        report=report,
        required_bound=required,
        bound=bound,
    )
