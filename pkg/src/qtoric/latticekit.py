"""Finite distributive lattices and the semigroup str(L).

A lattice enters as a Hasse diagram (or the built-in chain of u-subsets
Pi(u, v)); the order, meet and join tables are computed and validated, never
trusted.  Elements are kept in a canonical order, sorted by (number of
elements strictly below, label text), which is always a linear extension of
the order.  str(L) lives in N^(r+1) where r counts join-irreducibles: the
labelings (a_0, ..., a_r) with a_0 >= a_i for all i and a_i >= a_j whenever
x_i < x_j, generated by the images pi([l]) = e_0 + sum of e_i over x_i <= l.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .semigroup import AffineSemigroup, CongruencePair


class LatticeError(ValueError):
    """Input does not describe a finite lattice."""


class DistributivityVerdict(NamedTuple):
    distributive: bool
    witness: Optional[tuple]  # (a, b, c) with a^(bvc) != (a^b)v(a^c)


class StrSemigroupData(NamedTuple):
    """str(L) with its defining inequalities.

    inequality_rows are inward normals w on N^(r+1) (a admissible iff
    w.a >= 0 for every row); inequality_text renders the same rows with
    coordinates a0..ar.  generators follow the canonical element order.
    """

    semigroup: AffineSemigroup
    inequality_rows: tuple
    inequality_text: tuple


def _label_key(below_count, label):
    return (below_count, str(label))


class FiniteLattice:
    def __init__(self, elements, leq_pairs):
        """elements: hashable labels; leq_pairs: set of (x, y) with x <= y,
        already reflexive and transitive.  Validates the lattice axioms."""
        if not elements:
            raise LatticeError("a lattice needs at least one element")
        if len(set(elements)) != len(elements):
            raise LatticeError("duplicate element labels")
        leq = set(leq_pairs)
        for x in elements:
            if (x, x) not in leq:
                raise LatticeError(f"missing reflexive pair for {x!r}")
        for x, y in leq:
            if (y, x) in leq and x != y:
                raise LatticeError(f"antisymmetry fails on {x!r}, {y!r}")
        for x, y in list(leq):
            for z in elements:
                if (y, z) in leq and (x, z) not in leq:
                    raise LatticeError(f"transitivity fails on {x!r},{y!r},{z!r}")
        below = {x: sum(1 for y in elements if (y, x) in leq and y != x) for x in elements}
        self.elements = tuple(sorted(elements, key=lambda x: _label_key(below[x], x)))
        self._index = {x: i for i, x in enumerate(self.elements)}
        self._leq = leq
        self._meet = {}
        self._join = {}
        for x in self.elements:
            for y in self.elements:
                self._meet[x, y] = self._bound(x, y, lower=True)
                self._join[x, y] = self._bound(x, y, lower=False)
        self.minimum = self.elements[0]
        self.maximum = max(self.elements, key=lambda x: below[x])
        for x in self.elements:
            if not self.leq(self.minimum, x) or not self.leq(x, self.maximum):
                raise LatticeError("no unique minimum/maximum")

    def _bound(self, x, y, lower):
        if lower:
            cands = [z for z in self.elements if self.leq(z, x) and self.leq(z, y)]
            best = [z for z in cands if all(self.leq(w, z) for w in cands)]
        else:
            cands = [z for z in self.elements if self.leq(x, z) and self.leq(y, z)]
            best = [z for z in cands if all(self.leq(z, w) for w in cands)]
        if len(best) != 1:
            kind = "meet" if lower else "join"
            raise LatticeError(f"{kind} of {x!r} and {y!r} does not exist")
        return best[0]

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_covers(cls, elements, covers):
        """covers: pairs of element indices (i, j) meaning elements[i] < elements[j]
        is a covering relation."""
        elements = [tuple(e) if isinstance(e, list) else e for e in elements]
        n = len(elements)
        adj = {x: set() for x in elements}
        for i, j in covers:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise LatticeError(f"bad cover pair ({i}, {j})")
            adj[elements[i]].add(elements[j])
        # reflexive-transitive closure; cycles surface as antisymmetry failures
        leq = set()
        for x in elements:
            seen = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for z in adj[y]:
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
            leq.update((x, y) for y in seen)
        return cls(elements, leq)

    @classmethod
    def from_order(cls, elements, leq):
        """leq: callable deciding x <= y."""
        pairs = {(x, y) for x in elements for y in elements if leq(x, y)}
        return cls(list(elements), pairs)

    @classmethod
    def pi(cls, u, v):
        """The lattice of u-subsets of {1..v} ordered componentwise."""
        u, v = int(u), int(v)
        if not (1 <= u <= v):
            raise LatticeError("Pi(u, v) needs 1 <= u <= v")
        from itertools import combinations

        elems = [tuple(c) for c in combinations(range(1, v + 1), u)]
        return cls.from_order(
            elems, lambda x, y: all(a <= b for a, b in zip(x, y))
        )

    @classmethod
    def from_json_dict(cls, data):
        if "builtin" in data:
            if data["builtin"] != "Pi":
                raise LatticeError(f"unknown builtin {data['builtin']!r}")
            return cls.pi(data["u"], data["v"])
        return cls.from_covers(data["elements"], data["covers"])

    def as_json_dict(self):
        idx = self._index
        return {
            "elements": [list(e) if isinstance(e, tuple) else e for e in self.elements],
            "covers": [[idx[x], idx[y]] for x, y in self.cover_pairs()],
        }

    # -- order queries -------------------------------------------------------

    def leq(self, x, y) -> bool:
        return (x, y) in self._leq

    def meet(self, x, y):
        return self._meet[x, y]

    def join(self, x, y):
        return self._join[x, y]

    def cover_pairs(self):
        """All (x, y) with x < y covering, in canonical order."""
        out = []
        for x in self.elements:
            for y in self.elements:
                if x != y and self.leq(x, y) and not any(
                    z != x and z != y and self.leq(x, z) and self.leq(z, y)
                    for z in self.elements
                ):
                    out.append((x, y))
        return out

    # -- lattice structure ----------------------------------------------------

    def check_distributive(self) -> DistributivityVerdict:
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    lhs = self.meet(a, self.join(b, c))
                    rhs = self.join(self.meet(a, b), self.meet(a, c))
                    if lhs != rhs:
                        return DistributivityVerdict(False, (a, b, c))
        return DistributivityVerdict(True, None)

    def join_irreducibles(self) -> tuple:
        """Non-minimum elements that are not joins of two smaller elements,
        in canonical (linear-extension) order."""
        cached = getattr(self, "_irr", None)
        if cached is not None:
            return cached
        out = []
        for x in self.elements:
            if x == self.minimum:
                continue
            if all(
                self.join(y, z) != x
                for y in self.elements
                if y != x and self.leq(y, x)
                for z in self.elements
                if z != x and self.leq(z, x)
            ):
                out.append(x)
        self._irr = tuple(out)
        return self._irr

    # -- str(L) ----------------------------------------------------------------

    def pi_map(self, l) -> tuple:
        """e_0 + sum of e_i over join-irreducibles x_i <= l, in N^(r+1)."""
        irr = self.join_irreducibles()
        if l not in self._index:
            raise LatticeError(f"{l!r} is not an element")
        return (1,) + tuple(1 if self.leq(x, l) else 0 for x in irr)

    def str_semigroup(self) -> StrSemigroupData:
        irr = self.join_irreducibles()
        r = len(irr)
        gens = [self.pi_map(l) for l in self.elements]
        semigroup = AffineSemigroup(gens, ambient_rank=r + 1)

        def row(i_from, i_to):
            # a_{i_from} - a_{i_to} >= 0
            w = [0] * (r + 1)
            w[i_from] += 1
            w[i_to] -= 1
            return tuple(w)

        rows = []
        text = []
        pos = {x: i + 1 for i, x in enumerate(irr)}
        minimal = [
            x for x in irr if not any(y != x and self.leq(y, x) for y in irr)
        ]
        maximal = [
            x for x in irr if not any(y != x and self.leq(x, y) for y in irr)
        ]
        for x in minimal:
            rows.append(row(0, pos[x]))
            text.append(f"a0 >= a{pos[x]}")
        for x in irr:
            for y in irr:
                if x != y and self.leq(x, y) and not any(
                    z != x and z != y and self.leq(x, z) and self.leq(z, y)
                    for z in irr
                ):
                    rows.append(row(pos[x], pos[y]))
                    text.append(f"a{pos[x]} >= a{pos[y]}")
        for x in maximal:
            w = [0] * (r + 1)
            w[pos[x]] = 1
            rows.append(tuple(w))
            text.append(f"a{pos[x]} >= 0")
        if not irr:
            rows.append((1,))
            text.append("a0 >= 0")
        return StrSemigroupData(semigroup, tuple(rows), tuple(text))

    def str_presentation(self) -> tuple:
        """One congruence pair per unordered incomparable pair {l, l'}:
        (e_meet + e_join, e_l + e_l'), indices in canonical element order."""
        idx = self._index
        n = len(self.elements)

        def e2(i, j):
            v = [0] * n
            v[i] += 1
            v[j] += 1
            return tuple(v)

        pairs = []
        for i, x in enumerate(self.elements):
            for j in range(i + 1, n):
                y = self.elements[j]
                if not self.leq(x, y) and not self.leq(y, x):
                    left = e2(idx[self.meet(x, y)], idx[self.join(x, y)])
                    right = e2(i, j)
                    pairs.append(CongruencePair(left, right))
        return tuple(pairs)
