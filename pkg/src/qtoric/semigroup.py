"""Positive affine semigroups given by generators in a nonnegative orthant.

An :class:`AffineSemigroup` is the set of nonnegative integer combinations of
finitely many nonzero vectors in N^r.  Positivity (the only invertible
element is 0) is automatic because every generator has coordinate-sum >= 1,
which also bounds every representation of a vector by its coordinate-sum and
makes membership, Hilbert bases and fiber enumeration exactly decidable.

Queries are cached; caches fill once behind a lock, so concurrent readers
are safe.
"""

from __future__ import annotations

import threading
from typing import NamedTuple, Optional

from . import intlinalg as ila
from .kernels import fiber_solutions


class CongruencePair(NamedTuple):
    """A pair of exponent vectors with the same image under the generator map."""

    left: tuple
    right: tuple


class Presentation(NamedTuple):
    """Congruence generators plus the fiber bound their completeness was checked to."""

    pairs: tuple
    certified_bound: int


class NormalityVerdict(NamedTuple):
    """Outcome of a normality check; counterexample is a lattice point of the
    cone that is not a member (None when normal)."""

    normal: bool
    mode: str
    bound: Optional[int]
    counterexample: Optional[tuple]


class GorensteinWitness(NamedTuple):
    witness: tuple
    bound: int


def _vec(v, width=None):
    t = tuple(int(c) for c in v)
    if width is not None and len(t) != width:
        raise ValueError(f"vector {t} does not have length {width}")
    return t


class AffineSemigroup:
    """Semigroup generated by nonzero vectors with nonnegative coordinates."""

    def __init__(self, generators, ambient_rank=None):
        gens = [tuple(int(c) for c in g) for g in generators]
        if ambient_rank is None:
            if not gens:
                raise ValueError("ambient_rank required when there are no generators")
            ambient_rank = len(gens[0])
        self.ambient_rank = int(ambient_rank)
        if self.ambient_rank <= 0:
            raise ValueError("ambient_rank must be positive")
        for g in gens:
            if len(g) != self.ambient_rank:
                raise ValueError(f"generator {g} does not have length {self.ambient_rank}")
            if any(c < 0 for c in g):
                raise ValueError(f"generator {g} has a negative coordinate")
            if not any(g):
                raise ValueError("the zero vector is not allowed as a generator")
        self.generators = tuple(gens)
        self._lock = threading.Lock()
        self._cache = {}

    # -- plumbing ---------------------------------------------------------

    def _cached(self, key, compute):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)

    def __repr__(self):
        return f"AffineSemigroup(rank {self.rank()} in N^{self.ambient_rank}, {len(self.generators)} generators)"

    def __eq__(self, other):
        return (
            isinstance(other, AffineSemigroup)
            and self.ambient_rank == other.ambient_rank
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.generators))

    def as_json_dict(self):
        return {
            "ambient_rank": self.ambient_rank,
            "generators": [list(g) for g in self.generators],
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(data["generators"], ambient_rank=data.get("ambient_rank"))

    # -- basic queries ----------------------------------------------------

    def rank(self) -> int:
        """Rank of the integer lattice spanned by the generators."""
        return self._cached("rank", lambda: ila.mat_rank(self.generators))

    def member(self, v) -> Optional[tuple]:
        """A witness exponent xi with sum(xi_i * gen_i) == v, or None.

        The lexicographically smallest witness is returned; the search is
        exact because every generator has coordinate-sum >= 1.
        """
        v = _vec(v, self.ambient_rank)
        if any(c < 0 for c in v):
            return None
        if not any(v):
            return (0,) * len(self.generators)
        if not self.generators:
            return None
        sols = fiber_solutions(self.generators, v, limit=1)
        return sols[0] if sols else None

    def fiber(self, v) -> list:
        """All exponent vectors mapping to v, lexicographically ascending."""
        v = _vec(v, self.ambient_rank)
        if not self.generators:
            return [()] if not any(v) else []
        return fiber_solutions(self.generators, v)

    def elements_up_to(self, bound: int) -> tuple:
        """All semigroup elements with coordinate-sum <= bound, sorted."""
        bound = int(bound)
        if bound < 0:
            return ()
        full_bound, elems = self._cached("elements", lambda: (-1, {(0,) * self.ambient_rank}))
        if bound > full_bound:
            elems = {(0,) * self.ambient_rank}
            frontier = list(elems)
            while frontier:
                nxt = []
                for v in frontier:
                    for g in self.generators:
                        w = ila.vec_add(v, g)
                        if sum(w) <= bound and w not in elems:
                            elems.add(w)
                            nxt.append(w)
                frontier = nxt
            with self._lock:
                cached = self._cache.get("elements")
                if cached is None or cached[0] < bound:
                    self._cache["elements"] = (bound, elems)
        return tuple(sorted(v for v in elems if sum(v) <= bound))

    # -- Hilbert basis ----------------------------------------------------

    def _hilbert(self):
        basis = []
        witnesses = {}
        for g in sorted(set(self.generators)):
            # g is reducible iff it has a representation of total multiplicity >= 2
            reducible = None
            for xi in fiber_solutions(self.generators, g):
                if sum(xi) >= 2:
                    reducible = xi
                    break
            if reducible is None:
                basis.append(g)
            else:
                witnesses[g] = reducible
        return tuple(basis), witnesses

    def hilbert_basis(self) -> tuple:
        """The irreducible elements, sorted lexicographically ascending."""
        return self._cached("hilbert", self._hilbert)[0]

    def reduction_witnesses(self) -> dict:
        """For each reducible generator, an exponent of total multiplicity >= 2."""
        return dict(self._cached("hilbert", self._hilbert)[1])

    # -- presentation ------------------------------------------------------

    def min_presentation_bound(self) -> int:
        if not self.generators:
            return 0
        return 2 * max(sum(g) for g in self.generators)

    def presentation(self, degree_bound: Optional[int] = None) -> Presentation:
        """A minimal congruence generating set, certified up to degree_bound.

        Pairs satisfy pi(left) == pi(right) over the generators as given;
        completeness (every fiber of coordinate-sum <= degree_bound connected
        by the pairs) is verified by enumeration and recorded in the result.
        left is the lexicographically larger side.
        """
        minimum = self.min_presentation_bound() + 2
        if degree_bound is None:
            degree_bound = minimum
        degree_bound = int(degree_bound)
        if degree_bound < minimum - 2:
            raise ValueError(
                f"degree_bound {degree_bound} too small; need at least {minimum - 2}"
            )
        return self._cached(("presentation", degree_bound), lambda: self._present(degree_bound))

    def _present(self, bound):
        fibers = {}
        for v in self.elements_up_to(bound):
            fib = self.fiber(v)
            if len(fib) >= 2:
                fibers[v] = fib
        candidates = []
        for v in sorted(fibers, key=lambda u: (sum(u), u)):
            fib = fibers[v]
            top = fib[-1]
            for other in fib[:-1]:
                candidates.append(CongruencePair(top, other))
        # drop pairs one at a time, highest degree first, keeping all fibers connected
        kept = list(candidates)
        gen_sums = [sum(g) for g in self.generators]
        deg = lambda p: sum(x * s for x, s in zip(p.left, gen_sums))
        for pair in sorted(candidates, key=lambda p: (deg(p), p), reverse=True):
            trial = [p for p in kept if p != pair]
            if self._fibers_connected(fibers, trial):
                kept = trial
        if not self._fibers_connected(fibers, kept):
            raise AssertionError("presentation lost completeness during minimization")
        return Presentation(tuple(kept), bound)

    def _fibers_connected(self, fibers, pairs):
        moves = [(p.left, p.right) for p in pairs] + [(p.right, p.left) for p in pairs]
        for fib in fibers.values():
            seen = {fib[0]}
            stack = [fib[0]]
            while stack:
                xi = stack.pop()
                for a, b in moves:
                    if all(x >= y for x, y in zip(xi, a)):
                        nxt = tuple(x - y + z for x, y, z in zip(xi, a, b))
                        if nxt not in seen:
                            seen.add(nxt)
                            stack.append(nxt)
            if len(seen) != len(fib):
                return False
        return True

    # -- cone geometry ------------------------------------------------------

    def _geometry(self):
        """Lattice basis of G(S), generator coordinates, facets, extreme rays."""
        basis = ila.lattice_basis(self.generators)
        coords = []
        for g in self.generators:
            c = ila.lattice_coords(basis, g)
            assert c is not None
            coords.append(c)
        dim = len(basis)
        if dim == 0:
            return basis, tuple(coords), (), ()
        facets = ila.cone_facets(coords, dim)
        rays = ila.extreme_rays(coords, facets, dim)
        return basis, tuple(coords), facets, rays

    def cone_geometry(self):
        """(lattice basis of G(S), generator lattice-coords, facet normals, extreme rays).

        Facet normals and extreme rays are expressed in lattice coordinates,
        where the cone is full-dimensional.
        """
        return self._cached("geometry", self._geometry)

    def _to_ambient(self, coords, basis):
        v = (0,) * self.ambient_rank
        for c, b in zip(coords, basis):
            v = ila.vec_add(v, ila.vec_scale(b, c))
        return v

    # -- normality ----------------------------------------------------------

    def is_normal(self, bound: Optional[int] = None) -> NormalityVerdict:
        """Decide S == G(S) ∩ R+S (exact when bound is None, else bounded).

        Exact mode triangulates the cone in lattice coordinates and checks
        every lattice point of each simplex's fundamental parallelepiped for
        membership; bounded mode checks all lattice points of the cone with
        coordinate-sum <= bound.
        """
        if bound is None:
            return self._cached("normal_exact", self._normal_exact)
        return self._normal_bounded(int(bound))

    def _normal_exact(self):
        basis, coords, facets, rays = self.cone_geometry()
        dim = len(basis)
        if dim == 0:
            return NormalityVerdict(True, "exact", None, None)
        for simplex in ila.triangulate_cone(list(rays), dim):
            for pt in ila.parallelepiped_points(list(simplex)):
                v = self._to_ambient(pt, basis)
                if any(c < 0 for c in v):
                    # outside the orthant hence outside S, but inside the cone
                    return NormalityVerdict(False, "exact", None, v)
                if self.member(v) is None:
                    return NormalityVerdict(False, "exact", None, v)
        return NormalityVerdict(True, "exact", None, None)

    def _normal_bounded(self, bound):
        basis, coords, facets, rays = self.cone_geometry()
        members = set(self.elements_up_to(bound))
        for v in _orthant_points(self.ambient_rank, bound):
            z = ila.lattice_coords(basis, v)
            if z is None:
                continue
            if any(ila.dot(f, z) < 0 for f in facets):
                continue
            if v not in members:
                return NormalityVerdict(False, "bounded", bound, v)
        return NormalityVerdict(True, "bounded", bound, None)

    # -- relative interior ---------------------------------------------------

    def relint_members(self, bound: int) -> tuple:
        """Members with coordinate-sum <= bound strictly inside every facet."""
        bound = int(bound)
        basis, coords, facets, rays = self.cone_geometry()
        out = []
        for v in self.elements_up_to(bound):
            z = ila.lattice_coords(basis, v)
            assert z is not None
            if all(ila.dot(f, z) >= 1 for f in facets):
                out.append(v)
        return tuple(out)

    def gorenstein_witness(self, bound: int) -> Optional[GorensteinWitness]:
        """s in relint S with relint S == s + S, both sides truncated at bound.

        Candidates are tried by (coordinate-sum, lex); the first one whose
        shifted copy of S matches the relative interior up to the bound is
        returned.  None means no witness survived the bounded check.
        """
        bound = int(bound)
        relint = set(self.relint_members(bound))
        for s in sorted(relint, key=lambda u: (sum(u), u)):
            shifted = {
                ila.vec_add(s, v) for v in self.elements_up_to(bound - sum(s))
            }
            shifted = {v for v in shifted if sum(v) <= bound}
            if shifted == relint:
                return GorensteinWitness(s, bound)
        return None


def _orthant_points(rank, bound):
    """All of N^rank with coordinate-sum <= bound, lexicographic order."""
    point = [0] * rank

    def rec(i, left):
        if i == rank:
            yield tuple(point)
            return
        for c in range(left + 1):
            point[i] = c
            yield from rec(i + 1, left - c)
        point[i] = 0

    yield from rec(0, bound)
