"""Degeneration criteria for filtered algebras over affine semigroups.

Given an algebra presented on one generator per Hilbert basis element of
a positive affine semigroup, these checks certify that the weight
filtration by a positive functional phi degenerates the algebra to a
cocycle-twisted semigroup algebra: commutation and straightening
relations must hold modulo strictly phi-lower terms, and the induced
graded products must reproduce a reference cocycle table.  An
alternative criterion tests order-triangularity of section-monomial
products against a linear order collapsed into N.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .exact import ONE, RatFunc, ZERO
from .freealg import (
    GeneratorSet,
    NCPoly,
    RewriteSystem,
    exponent_of_word,
    word_of_exponent,
)
from .intlinalg import dot, fm_feasible_point, vec_add, vec_sub
from .twisted import TwistedAlgebra


class PhiMorphism:
    """Integer linear functional on the ambient lattice of a semigroup."""

    def __init__(self, vector):
        self.vector = tuple(int(c) for c in vector)

    def of(self, v) -> int:
        if len(v) != len(self.vector):
            raise ValueError(f"{v} has wrong length for {self}")
        return dot(self.vector, v)

    def weights(self, semigroup):
        """Per-generator values; every generator must have value >= 1."""
        w = tuple(self.of(g) for g in semigroup.generators)
        if any(x < 1 for x in w):
            raise ValueError(
                f"{self} is not strictly positive on the generators: {w}"
            )
        return w

    def __eq__(self, other):
        return isinstance(other, PhiMorphism) and self.vector == other.vector

    def __hash__(self):
        return hash(self.vector)

    def __repr__(self):
        return f"PhiMorphism({self.vector})"

    def as_json_dict(self):
        return {"vector": list(self.vector)}

    @classmethod
    def from_json_dict(cls, data):
        return cls(data["vector"])


def _signed_vectors(dim, total):
    """All integer vectors with L1 norm == total, ascending lexicographic."""
    if dim == 1:
        if total == 0:
            yield (0,)
        else:
            yield (-total,)
            yield (total,)
        return
    for first in range(-total, total + 1):
        for rest in _signed_vectors(dim - 1, total - abs(first)):
            yield (first,) + rest


def infer_phi(semigroup, strict_pairs=(), l1_limit=12) -> Optional[PhiMorphism]:
    """Find a positive functional separating the given strict pairs.

    Constraints: value >= 1 on every Hilbert basis element, and for each
    (smaller, larger) pair value(larger) >= value(smaller) + 1.  Returns
    the feasible vector of least L1 norm, ties broken by ascending
    lexicographic order, or None if the constraints are infeasible.  If
    the least norm exceeds l1_limit a feasible but unoptimized integer
    vector is returned.
    """
    dim = len(semigroup.generators[0])
    rows = [(h, -1) for h in semigroup.hilbert_basis()]
    for smaller, larger in strict_pairs:
        rows.append((vec_sub(larger, smaller), -1))
    point = fm_feasible_point(rows, dim)
    if point is None:
        return None
    denom = 1
    for c in point:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    fallback = tuple(int(c * denom) for c in point)
    limit = min(sum(abs(c) for c in fallback), l1_limit)

    def feasible(w):
        return all(dot(coeffs, w) + const >= 0 for coeffs, const in rows)

    for total in range(limit + 1):
        for w in _signed_vectors(dim, total):
            if feasible(w):
                return PhiMorphism(w)
    return PhiMorphism(fallback)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def strict_pairs_from_rules(algebra: RewriteSystem, semigroup):
    """Cross-fiber drops required by the relations' lower terms.

    For every rule and every right-hand word whose exponent lands in a
    different fiber than the left-hand side, the filtration must drop
    strictly; returns the (smaller, larger) ambient pairs sorted.
    """
    n = algebra.gens.n
    if n != len(semigroup.generators):
        raise ValueError("algebra and semigroup have different generator counts")

    def project(word):
        xi = exponent_of_word(word, n)
        out = semigroup.generators[0]
        out = tuple(0 for _ in out)
        for i, m in enumerate(xi):
            for _ in range(m):
                out = vec_add(out, semigroup.generators[i])
        return out

    pairs = set()
    for lhs, rhs in algebra.rules:
        top = project(lhs)
        for w in rhs.terms:
            pw = project(w)
            if pw != top:
                pairs.add((pw, top))
    return tuple(sorted(pairs))


class Section:
    """Lexicographically greatest factorization through the generators."""

    def __init__(self, semigroup):
        self.semigroup = semigroup
        self._cache = {}

    def exponent(self, s):
        s = tuple(int(c) for c in s)
        if s not in self._cache:
            fib = self.semigroup.fiber(s)
            if not fib:
                raise ValueError(f"{s} is not a semigroup member")
            self._cache[s] = fib[-1]  # fibers are sorted ascending
        return self._cache[s]

    def word(self, s):
        return word_of_exponent(self.exponent(s))


class TypeReport(NamedTuple):
    is_type: bool
    phi: PhiMorphism
    commutation: dict  # (i, j) -> (c_ij, lower NCPoly)
    straightening: tuple  # (pair_index, big, small, d, lower NCPoly)
    failures: tuple


def _split_top(gens, weights, poly, top_weight):
    """Split a normal form into its weight-top part and the rest."""

    def wt(word):
        return sum(weights[i] for i in word)

    top, rest = {}, {}
    for w, c in poly.terms.items():
        if wt(w) == top_weight:
            top[w] = c
        elif wt(w) < top_weight:
            rest[w] = c
        else:
            raise AssertionError(f"word {w} exceeds its relation weight")
    return NCPoly(top), NCPoly(rest)


def _proportion(top_u, top_v):
    """Scalar d with top_u == d * top_v, or None."""
    if top_v.is_zero() or top_u.is_zero():
        return None
    if set(top_u.terms) != set(top_v.terms):
        return None
    words = iter(top_u.terms)
    w0 = next(words)
    d = top_u.terms[w0] / top_v.terms[w0]
    for w in words:
        if top_u.terms[w] != d * top_v.terms[w]:
            return None
    return d


def check_s_phi_type(algebra: RewriteSystem, semigroup, phi: PhiMorphism, cap=None) -> TypeReport:
    """Do the relations hold modulo strictly phi-lower terms?

    Uses the index correspondence generator i <-> i-th semigroup
    generator.  For every i < j some nonzero c_ij must satisfy
    b_j b_i = c_ij b_i b_j + (phi-lower), and for every presentation
    pair the two section monomials must agree up to a nonzero scalar
    and phi-lower terms.  The report carries those scalars and the
    lower-term ledgers; failures are collected, not raised.
    """
    if not algebra.completed:
        raise ValueError("complete the rewrite system first")
    n = algebra.gens.n
    if n != len(semigroup.generators):
        raise ValueError("algebra and semigroup have different generator counts")
    failures = []
    weights = phi.weights(semigroup)  # raises if phi is not positive
    commutation = {}
    for i in range(n):
        for j in range(i + 1, n):
            bound = weights[i] + weights[j]
            u = algebra.normal_form(NCPoly.term((j, i)), cap=cap)
            v = algebra.normal_form(NCPoly.term((i, j)), cap=cap)
            try:
                top_u, _ = _split_top(algebra.gens, weights, u, bound)
                top_v, _ = _split_top(algebra.gens, weights, v, bound)
            except AssertionError as exc:
                failures.append(str(exc))
                continue
            c = _proportion(top_u, top_v)
            if c is None:
                failures.append(
                    f"no scalar relates b{j}*b{i} and b{i}*b{j} modulo lower terms"
                )
                continue
            lower = u - v.scale(c)
            commutation[(i, j)] = (c, lower)
    pres = semigroup.presentation()
    weights_by_index = weights
    G = algebra.gens
    straightening = []
    for k, (left, right) in enumerate(pres.pairs):
        wl, wr = word_of_exponent(left), word_of_exponent(right)
        if G.word_key(wl) >= G.word_key(wr):
            big, small, wb, ws = left, right, wl, wr
        else:
            big, small, wb, ws = right, left, wr, wl
        bound = sum(m * w for m, w in zip(big, weights_by_index))
        u = algebra.normal_form(NCPoly.term(wb), cap=cap)
        v = algebra.normal_form(NCPoly.term(ws), cap=cap)
        try:
            top_u, _ = _split_top(G, weights, u, bound)
            top_v, _ = _split_top(G, weights, v, bound)
        except AssertionError as exc:
            failures.append(str(exc))
            continue
        d = _proportion(top_u, top_v)
        if d is None:
            failures.append(
                f"no scalar relates the monomials of presentation pair {k}"
            )
            continue
        lower = u - v.scale(d)
        straightening.append((k, big, small, d, lower))
    return TypeReport(
        is_type=not failures,
        phi=phi,
        commutation=commutation,
        straightening=tuple(straightening),
        failures=tuple(failures),
    )


def associated_graded(algebra: RewriteSystem, semigroup, phi: PhiMorphism) -> RewriteSystem:
    """Drop strictly phi-lower right-hand terms from every rule.

    The algebra's monomial order must already weight generators by phi,
    so that rewriting is filtration-compatible.  The result is not
    completed; complete it to the same cap before comparing dimensions.
    """
    weights = phi.weights(semigroup)
    if tuple(algebra.gens.weights) != weights:
        raise ValueError(
            "algebra order weights differ from phi values; "
            f"{algebra.gens.weights} vs {weights}"
        )

    def wt(word):
        return sum(weights[i] for i in word)

    rules = []
    for lhs, rhs in algebra.rules:
        bound = wt(lhs)
        kept = {w: c for w, c in rhs.terms.items() if wt(w) == bound}
        rules.append((lhs, NCPoly(kept)))
    return RewriteSystem(algebra.gens, rules)


def gr_multiplication_table(algebra: RewriteSystem, semigroup, bound, cap=None):
    """{(s, t): leading coefficient of the section-monomial product}.

    The coefficient of the section word of s + t inside the normal form
    of the product of the section words of s and t; this is the product
    on the associated graded in the section basis.
    """
    sec = Section(semigroup)
    elems = semigroup.elements_up_to(bound)
    table = {}
    for s in elems:
        ws = sec.word(s)
        for t in elems:
            product = NCPoly.term(ws + sec.word(t))
            nf = algebra.normal_form(product, cap=cap)
            target = sec.word(vec_add(s, t))
            table[(s, t)] = nf.terms.get(target, ZERO)
    return table


class DegenerationVerdict(NamedTuple):
    isomorphic: bool
    bound: int
    witness: Optional[tuple]  # (s, t, got, expected)


def matches_twisted(
    algebra: RewriteSystem,
    semigroup,
    phi: PhiMorphism,
    reference: TwistedAlgebra,
    bound,
    cap=None,
) -> DegenerationVerdict:
    """Compare graded section products with a reference cocycle table.

    The identification rescales basis vectors: X_u corresponds to the
    section monomial divided by the reference coefficient lambda(u) of
    that ordered monomial, so the tables must satisfy
    gr(s, t) * lambda(s+t) == lambda(s) * lambda(t) * alpha(s, t).
    """
    phi.weights(semigroup)
    sec = Section(semigroup)
    table = gr_multiplication_table(algebra, semigroup, bound, cap=cap)
    lam = {}
    for s in semigroup.elements_up_to(2 * bound):
        lam[s] = reference.monomial_coefficient(sec.exponent(s))
    for (s, t), got in sorted(table.items()):
        st = vec_add(s, t)
        expected = lam[s] * lam[t] * reference.cocycle(s, t)
        if got * lam[st] != expected:
            return DegenerationVerdict(False, bound, (s, t, got, expected / lam[st]))
    return DegenerationVerdict(True, bound, None)


def collapse_lex_to_N(tup, radix) -> int:
    """Positional collapse: lexicographic order on digit tuples becomes <.

    All entries must lie in 0..radix; on tuples whose componentwise sum
    stays within the radix the map is additive, so it converts a
    bounded region of the lattice order into an order on N.
    """
    radix = int(radix)
    if radix < 1:
        raise ValueError("radix must be positive")
    out = 0
    for c in tup:
        c = int(c)
        if not 0 <= c <= radix:
            raise ValueError(f"digit {c} outside 0..{radix}")
        out = out * (radix + 1) + c
    return out


class OrderBasisReport(NamedTuple):
    holds: bool
    bound: int
    failures: tuple


def check_s_order_basis(
    algebra: RewriteSystem, semigroup, phi: PhiMorphism, bound, cap=None
) -> OrderBasisReport:
    """Triangularity of section products against an N-collapsed order.

    Section monomials must be irreducible, every product must expand in
    section monomials with a nonzero coefficient on the section word of
    the sum, and all other terms must project strictly below the sum in
    the order that ranks elements by (phi value, coordinates) collapsed
    into N.  Failures are reported, never raised.
    """
    phi.weights(semigroup)
    sec = Section(semigroup)
    elems = semigroup.elements_up_to(bound)
    failures = []
    for s in elems:
        if not algebra.is_irreducible(sec.word(s)):
            failures.append(f"section word of {s} is reducible")
    if failures:
        return OrderBasisReport(False, bound, tuple(failures))

    n = algebra.gens.n

    def project(word):
        xi = exponent_of_word(word, n)
        out = tuple(0 for _ in semigroup.generators[0])
        for i, m in enumerate(xi):
            for _ in range(m):
                out = vec_add(out, semigroup.generators[i])
        return out

    # collect every tuple the order will compare, to fix one radix
    keyed = {}
    products = {}
    for s in elems:
        for t in elems:
            st = vec_add(s, t)
            nf = algebra.normal_form(
                NCPoly.term(sec.word(s) + sec.word(t)), cap=cap
            )
            products[(s, t)] = nf
            keyed[st] = (phi.of(st),) + st
            for w in nf.terms:
                u = project(w)
                keyed[u] = (phi.of(u),) + u
    radix = max((max(tup) for tup in keyed.values()), default=1)
    radix = max(radix, 1)
    rank = {u: collapse_lex_to_N(tup, radix) for u, tup in keyed.items()}

    for (s, t), nf in sorted(products.items()):
        st = vec_add(s, t)
        target = sec.word(st)
        if nf.terms.get(target, ZERO).is_zero():
            failures.append(
                f"product over {s} and {t} misses the section word of {st}"
            )
            continue
        for w in nf.terms:
            if w == target:
                continue
            u = project(w)
            if w != sec.word(u):
                failures.append(
                    f"product over {s} and {t} leaves the section basis at {w}"
                )
            elif rank[u] >= rank[st]:
                failures.append(
                    f"term {u} of the product over {s} and {t} is not lower"
                )
    return OrderBasisReport(not failures, bound, tuple(failures))


class GorensteinStatus(NamedTuple):
    status: str  # "witness", "none_up_to_bound", "not_applicable"
    witness: Optional[tuple]
    bound: Optional[int]


class HomologicalReport(NamedTuple):
    domain: bool
    satisfies_chi: bool
    local_dimension: int
    as_cohen_macaulay: bool
    maximal_order: bool
    gorenstein: GorensteinStatus
    normality: object


def homological_report(semigroup, bound) -> HomologicalReport:
    """Ring-theoretic profile of any twisting of the semigroup algebra.

    Domain, chi, and local dimension = rank hold for every positive
    affine semigroup; the Cohen-Macaulay and maximal-order properties
    are equivalent to normality, and for normal semigroups the
    Gorenstein property is witnessed by an interior lattice point whose
    shifted semigroup matches the interior (searched up to the bound).
    """
    nv = semigroup.is_normal()
    rank = semigroup.rank()
    if not nv.normal:
        gor = GorensteinStatus("not_applicable", None, None)
    else:
        witness = semigroup.gorenstein_witness(bound)
        if witness is None:
            gor = GorensteinStatus("none_up_to_bound", None, bound)
        else:
            gor = GorensteinStatus("witness", witness.witness, witness.bound)
    return HomologicalReport(
        domain=True,
        satisfies_chi=True,
        local_dimension=rank,
        as_cohen_macaulay=nv.normal,
        maximal_order=nv.normal,
        gorenstein=gor,
        normality=nv,
    )


class EquivalenceReport(NamedTuple):
    agrees: bool
    dimensions: tuple  # (degree, dim_a, dim_b)


def check_presentation_equivalence(
    algebra_a: RewriteSystem, algebra_b: RewriteSystem, degrees, cap=None
) -> EquivalenceReport:
    """Graded dimension agreement over the listed degrees."""
    rows = []
    agrees = True
    for deg in degrees:
        da = algebra_a.graded_dimension(deg, cap=cap)
        db = algebra_b.graded_dimension(deg, cap=cap)
        rows.append((tuple(deg), da, db))
        if da != db:
            agrees = False
    return EquivalenceReport(agrees, tuple(rows))
