"""Finitely presented N^r-graded noncommutative algebras via rewriting.

Words are tuples of generator indices.  The monomial order compares
(phi-weight, length, the index tuple lexicographically); it is admissible
(compatible with concatenation) and well-founded because weights are
positive.  A RewriteSystem holds homogeneous rules lhs -> rhs with rhs
strictly below lhs; completion resolves all overlap ambiguities of
phi-weight <= cap and certifies confluence up to that cap, never beyond.
Coefficients live in the rational-function field; specializing the
parameter keeps the same code path with constant coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from .exact import ONE, RatFunc, ZERO
from .kernels import fiber_solutions


class CapExceeded(RuntimeError):
    """A word's phi-weight exceeds the certified completion cap."""

    def __init__(self, word, weight, cap):
        super().__init__(f"word {word} has weight {weight} > cap {cap}")
        self.word = word
        self.weight = weight
        self.cap = cap


class InconsistentAlgebra(RuntimeError):
    """Completion derived a relation forcing a unit among the generators."""


def _rf(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.from_fraction(Fraction(x))
    raise TypeError(f"cannot use {x!r} as a coefficient")


class GeneratorSet:
    """Named generators with N^r-degrees and positive integer weights.

    The generator order (index order) is the precedence used by the
    monomial order; weights default to 1.
    """

    def __init__(self, names, degrees, weights=None):
        self.names = tuple(str(n) for n in names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        self.degrees = tuple(tuple(int(c) for c in d) for d in degrees)
        if len(self.degrees) != len(self.names):
            raise ValueError("need one degree per generator")
        if not self.degrees:
            raise ValueError("at least one generator required")
        self.r = len(self.degrees[0])
        for d in self.degrees:
            if len(d) != self.r:
                raise ValueError("degree vectors must share one length")
            if any(c < 0 for c in d) or not any(d):
                raise ValueError(f"degree {d} must be nonzero and nonnegative")
        if weights is None:
            weights = (1,) * len(self.names)
        self.weights = tuple(int(w) for w in weights)
        if len(self.weights) != len(self.names):
            raise ValueError("need one weight per generator")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")

    @property
    def n(self):
        return len(self.names)

    def check_word(self, word):
        word = tuple(int(i) for i in word)
        for i in word:
            if not 0 <= i < self.n:
                raise ValueError(f"generator index {i} out of range")
        return word

    def word_degree(self, word):
        deg = [0] * self.r
        for i in word:
            for k in range(self.r):
                deg[k] += self.degrees[i][k]
        return tuple(deg)

    def word_weight(self, word):
        return sum(self.weights[i] for i in word)

    def word_key(self, word):
        return (self.word_weight(word), len(word), word)

    def word_str(self, word):
        if not word:
            return "1"
        return "*".join(self.names[i] for i in word)


def word_of_exponent(xi):
    """The ascending monomial word b_0^xi0 b_1^xi1 ... as an index tuple."""
    out = []
    for i, m in enumerate(xi):
        out.extend([i] * m)
    return tuple(out)


def exponent_of_word(word, n):
    """Letter multiset of a word as an exponent vector, ignoring order."""
    xi = [0] * n
    for i in word:
        xi[i] += 1
    return tuple(xi)


class NCPoly:
    """Noncommutative polynomial: finite map word -> nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, coeff in (terms or {}).items():
            coeff = _rf(coeff)
            if not coeff.is_zero():
                clean[tuple(word)] = coeff
        self.terms = clean

    @classmethod
    def term(cls, word, coeff=1):
        return cls({tuple(word): coeff})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return NCPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) - c
        return NCPoly(out)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    w = u + v
                    c = out.get(w, ZERO) + a * b
                    out[w] = c
            return NCPoly(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = _rf(c)
        if c.is_zero():
            return NCPoly()
        return NCPoly({w: k * c for w, k in self.terms.items()})

    def leading(self, gens):
        """(word, coeff) of the maximal term under the monomial order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        word = max(self.terms, key=gens.word_key)
        return word, self.terms[word]

    def homogeneous_degree(self, gens):
        """The common N^r-degree of all words, or None if mixed/zero."""
        degs = {gens.word_degree(w) for w in self.terms}
        if len(degs) == 1:
            return next(iter(degs))
        return None

    def render(self, gens):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=gens.word_key, reverse=True):
            c = str(self.terms[w])
            parts.append(f"({c})*{gens.word_str(w)}" if w else f"({c})")
        return " + ".join(parts)

    def __repr__(self):
        return f"NCPoly({self.terms!r})"


class CompletionCertificate(NamedTuple):
    cap: int
    ambiguities: tuple  # all overlap words of weight <= cap among final rules
    rule_count: int


class IndependenceVerdict(NamedTuple):
    independent: bool
    witness: Optional[tuple]  # ((word, coeff), ...) summing to zero


class RewriteSystem:
    """Oriented homogeneous rules; complete() certifies confluence to a cap."""

    def __init__(self, gens: GeneratorSet, rules, certificate=None):
        self.gens = gens
        cooked = []
        for lhs, rhs in rules:
            lhs = gens.check_word(lhs)
            if not lhs:
                raise ValueError("empty left-hand side")
            if not isinstance(rhs, NCPoly):
                rhs = NCPoly(rhs)
            deg = gens.word_degree(lhs)
            key = gens.word_key(lhs)
            for w in rhs.terms:
                gens.check_word(w)
                if gens.word_key(w) >= key:
                    raise ValueError(
                        f"rule {lhs} -> ... is not oriented: {w} is not smaller"
                    )
                if gens.word_degree(w) != deg:
                    raise ValueError(
                        f"rule {lhs} -> ... is not homogeneous at {w}"
                    )
            cooked.append((lhs, rhs))
        self.rules = tuple(cooked)
        self.certificate = certificate

    @property
    def completed(self):
        return self.certificate is not None

    @property
    def cap(self):
        return self.certificate.cap if self.certificate else None

    # -- reduction ----------------------------------------------------------

    def _find_redex(self, word):
        for pos in range(len(word)):
            for ridx, (lhs, _) in enumerate(self.rules):
                if word[pos : pos + len(lhs)] == lhs:
                    return pos, ridx
        return None

    def normal_form(self, p, cap=None) -> NCPoly:
        """Reduce until no word contains a rule's left-hand side.

        With a cap (explicit, or the certified cap once completed), input
        words above it raise CapExceeded: confluence is only certified below.
        """
        if not isinstance(p, NCPoly):
            p = NCPoly.term(p)
        if cap is None:
            cap = self.cap
        if cap is not None:
            for w in p.terms:
                wt = self.gens.word_weight(w)
                if wt > cap:
                    raise CapExceeded(w, wt, cap)
        out = {}
        work = list(p.terms.items())
        while work:
            word, coeff = work.pop()
            hit = self._find_redex(word)
            if hit is None:
                c = out.get(word, ZERO) + coeff
                if c.is_zero():
                    out.pop(word, None)
                else:
                    out[word] = c
                continue
            pos, ridx = hit
            lhs, rhs = self.rules[ridx]
            head, tail = word[:pos], word[pos + len(lhs) :]
            for rw, rc in rhs.terms.items():
                work.append((head + rw + tail, coeff * rc))
        return NCPoly(out)

    def is_irreducible(self, word) -> bool:
        return self._find_redex(tuple(word)) is None

    # -- completion ----------------------------------------------------------

    def complete(self, cap: int) -> "RewriteSystem":
        """Resolve all overlap ambiguities of weight <= cap.

        Returns a new system whose certificate lists every checked overlap
        word; raises InconsistentAlgebra if a derived relation forces the
        empty word (a unit relation, contradicting connectedness).
        """
        gens = self.gens
        cap = int(cap)
        key = gens.word_key
        rules = []  # mutually lhs-subword-free

        def rule_poly(lhs, rhs):
            return NCPoly.term(lhs) - rhs

        def reduce_by(rules_list, p):
            sys = RewriteSystem(gens, rules_list)
            return sys.normal_form(p, cap=None)

        pending = [rule_poly(l, r) for l, r in self.rules]
        guard = 0
        while pending:
            guard += 1
            if guard > 100000:
                raise RuntimeError("completion did not stabilize")
            pending.sort(key=lambda q: key(q.leading(gens)[0]) if q else (0, 0, ()))
            p = pending.pop(0)
            p = reduce_by(rules, p)
            if p.is_zero():
                continue
            lhs, lc = p.leading(gens)
            if not lhs:
                raise InconsistentAlgebra(
                    "a relation reduces to an invertible constant"
                )
            # p = lc*lhs + rest, so lhs - p/lc drops the leading term
            rhs = NCPoly.term(lhs) - p.scale(lc.inverse())
            keep = []
            for l2, r2 in rules:
                if _contains(l2, lhs):
                    pending.append(rule_poly(l2, r2))
                else:
                    keep.append((l2, r2))
            rules = keep
            for l2, r2 in rules:
                for q in _overlap_spolys(gens, (lhs, rhs), (l2, r2), cap):
                    pending.append(q)
                for q in _overlap_spolys(gens, (l2, r2), (lhs, rhs), cap):
                    pending.append(q)
            for q in _overlap_spolys(gens, (lhs, rhs), (lhs, rhs), cap):
                pending.append(q)
            rules.append((lhs, rhs))
        rules.sort(key=lambda lr: key(lr[0]))
        final = RewriteSystem(gens, rules)
        ambiguities = []
        for l1, r1 in rules:
            for l2, r2 in rules:
                for u, q in _overlap_spolys(gens, (l1, r1), (l2, r2), cap, with_words=True):
                    if not final.normal_form(q, cap=None).is_zero():
                        raise AssertionError(f"completion failed to resolve {u}")
                    ambiguities.append(u)
        cert = CompletionCertificate(cap, tuple(sorted(set(ambiguities), key=key)), len(rules))
        return RewriteSystem(gens, rules, certificate=cert)

    # -- graded structure ------------------------------------------------------

    def _require_completed(self):
        if not self.completed:
            raise RuntimeError("call complete() first")

    def _max_weight_of_degree(self, degree):
        """Largest phi-weight among letter multisets of the given N^r-degree."""
        fib = fiber_solutions(self.gens.degrees, degree)
        if not fib:
            return None
        return max(sum(m * w for m, w in zip(xi, self.gens.weights)) for xi in fib)

    def irreducible_words(self, degree) -> list:
        """All irreducible words of exact N^r-degree, lexicographic order."""
        degree = tuple(int(c) for c in degree)
        lhss = [lhs for lhs, _ in self.rules]
        out = []
        word = []

        def blocked():
            m = len(word)
            for lhs in lhss:
                k = len(lhs)
                if k <= m and tuple(word[m - k :]) == lhs:
                    return True
            return False

        def rec(remaining):
            if not any(remaining):
                out.append(tuple(word))
                return
            for i in range(self.gens.n):
                d = self.gens.degrees[i]
                if all(r >= c for r, c in zip(remaining, d)):
                    word.append(i)
                    if not blocked():
                        rec(tuple(r - c for r, c in zip(remaining, d)))
                    word.pop()

        rec(degree)
        return out

    def graded_dimension(self, degree, cap=None) -> int:
        """Number of irreducible words of the exact N^r-degree."""
        self._require_completed()
        degree = tuple(int(c) for c in degree)
        if cap is None:
            cap = self.cap
        need = self._max_weight_of_degree(degree)
        if need is None:
            return 0
        if need > cap:
            raise CapExceeded(degree, need, cap)
        return len(self.irreducible_words(degree))

    def monomials_independent(self, words, cap=None) -> IndependenceVerdict:
        """Exact linear independence of normal forms, degree by degree."""
        self._require_completed()
        words = [self.gens.check_word(w) for w in words]
        groups = {}
        for idx, w in enumerate(words):
            groups.setdefault(self.gens.word_degree(w), []).append(idx)
        for deg in sorted(groups):
            pivots = {}  # leading word -> (terms dict, combo dict idx -> coeff)
            for idx in groups[deg]:
                w = words[idx]
                terms = dict(self.normal_form(NCPoly.term(w), cap=cap).terms)
                combo = {idx: ONE}
                while terms:
                    lead = max(terms, key=self.gens.word_key)
                    if lead not in pivots:
                        pivots[lead] = (terms, combo)
                        break
                    pterms, pcombo = pivots[lead]
                    f = terms[lead] / pterms[lead]
                    for u, c in pterms.items():
                        nc = terms.get(u, ZERO) - f * c
                        if nc.is_zero():
                            terms.pop(u, None)
                        else:
                            terms[u] = nc
                    for i, c in pcombo.items():
                        nc = combo.get(i, ZERO) - f * c
                        if nc.is_zero():
                            combo.pop(i, None)
                        else:
                            combo[i] = nc
                else:
                    witness = tuple(
                        (words[i], combo[i]) for i in sorted(combo)
                    )
                    return IndependenceVerdict(False, witness)
        return IndependenceVerdict(True, None)

    def specialize(self, q0) -> "RewriteSystem":
        """Evaluate coefficients at q0 (not completed: re-complete after)."""
        q0 = Fraction(q0)
        out = []
        for lhs, rhs in self.rules:
            out.append(
                (
                    lhs,
                    NCPoly(
                        {
                            w: RatFunc.from_fraction(c.specialize(q0))
                            for w, c in rhs.terms.items()
                        }
                    ),
                )
            )
        return RewriteSystem(self.gens, out)

    def as_json_dict(self):
        return {
            "generators": [
                {"name": n, "degree": list(d), "weight": w}
                for n, d, w in zip(self.gens.names, self.gens.degrees, self.gens.weights)
            ],
            "relations": [
                {
                    "lhs_word": list(lhs),
                    "rhs": [
                        {"coeff": str(c), "word": list(w)}
                        for w, c in sorted(
                            rhs.terms.items(), key=lambda t: self.gens.word_key(t[0]), reverse=True
                        )
                    ],
                }
                for lhs, rhs in self.rules
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        from .exact import parse

        gens = GeneratorSet(
            [g["name"] for g in data["generators"]],
            [g["degree"] for g in data["generators"]],
            [g.get("weight", 1) for g in data["generators"]],
        )
        rules = []
        for rel in data["relations"]:
            rhs = {}
            for t in rel["rhs"]:
                w = tuple(t["word"])
                rhs[w] = rhs.get(w, ZERO) + parse(t["coeff"])
            rules.append((tuple(rel["lhs_word"]), NCPoly(rhs)))
        return cls(gens, rules)


def algebra_from_type_data(
    semigroup,
    presentation,
    weights,
    commutation=None,
    straightening=None,
    degrees=None,
    names=None,
) -> RewriteSystem:
    """Presented algebra on one generator per Hilbert basis element.

    Relations: for i < j a commutation rule b_j b_i -> c_ij b_i b_j + lower,
    and for each presentation pair a straightening rule rewriting the
    order-larger ordered monomial as d_k times the order-smaller one plus
    lower terms.  "Lower" is enforced: every supplied lower exponent must
    have strictly smaller total weight than the rule's main terms, else a
    validation error.  d_k scales the order-smaller monomial.

    commutation: {(i, j): (c_ij, {exponent: coeff})} with i < j; missing
    pairs default to plain commutation (c = 1, no lower terms).
    straightening: {pair_index: (d, {exponent: coeff})}; defaults d = 1.
    degrees: per-generator N^r degrees; defaults to the semigroup
    generators themselves (which forbids lower terms, as those would
    break homogeneity).
    """
    gens_s = semigroup.generators
    n = len(gens_s)
    hb = semigroup.hilbert_basis()
    if sorted(gens_s) != list(hb) or len(set(gens_s)) != n:
        raise ValueError("semigroup generators must be exactly its Hilbert basis")
    weights = tuple(int(w) for w in weights)
    if len(weights) != n or any(w < 1 for w in weights):
        raise ValueError("need one positive weight per generator")
    if degrees is None:
        degrees = gens_s
    if names is None:
        names = [f"x{i}" for i in range(n)]
    G = GeneratorSet(names, degrees, weights)

    def wt(xi):
        return sum(m * w for m, w in zip(xi, weights))

    def check_exponent(xi):
        xi = tuple(int(m) for m in xi)
        if len(xi) != n or any(m < 0 for m in xi):
            raise ValueError(f"bad exponent vector {xi}")
        return xi

    def lower_poly(lower, bound, what):
        terms = {}
        for xi, coeff in (lower or {}).items():
            xi = check_exponent(xi)
            coeff = _rf(coeff)
            if coeff.is_zero():
                continue
            if wt(xi) >= bound:
                raise ValueError(
                    f"lower term {xi} of {what} has weight {wt(xi)} >= {bound}"
                )
            w = word_of_exponent(xi)
            terms[w] = terms.get(w, ZERO) + coeff
        return terms

    commutation = dict(commutation or {})
    straightening = dict(straightening or {})
    rules = []
    for i in range(n):
        for j in range(i + 1, n):
            c, lower = commutation.pop((i, j), (ONE, None))
            c = _rf(c)
            if c.is_zero():
                raise ValueError(f"commutation coefficient for ({i},{j}) is zero")
            terms = lower_poly(lower, weights[i] + weights[j], f"pair ({i},{j})")
            main = terms.get((i, j), ZERO) + c
            if main.is_zero():
                terms.pop((i, j), None)
            else:
                terms[(i, j)] = main
            rules.append(((j, i), NCPoly(terms)))
    if commutation:
        raise ValueError(f"unknown commutation keys {sorted(commutation)}")
    pairs = list(getattr(presentation, "pairs", presentation))
    for k, (left, right) in enumerate(pairs):
        left, right = check_exponent(left), check_exponent(right)
        target = tuple(
            sum(m * g[t] for m, g in zip(left, gens_s))
            for t in range(len(gens_s[0]))
        )
        other = tuple(
            sum(m * g[t] for m, g in zip(right, gens_s))
            for t in range(len(gens_s[0]))
        )
        if target != other:
            raise ValueError(f"pair {k} does not present a congruence: {left} vs {right}")
        if wt(left) != wt(right):
            raise ValueError(
                f"weights are not additive on pair {k}: {wt(left)} != {wt(right)}"
            )
        d, lower = straightening.pop(k, (ONE, None))
        d = _rf(d)
        if d.is_zero():
            raise ValueError(f"straightening coefficient for pair {k} is zero")
        wl, wr = word_of_exponent(left), word_of_exponent(right)
        lhs, small = (wl, wr) if G.word_key(wl) > G.word_key(wr) else (wr, wl)
        terms = lower_poly(lower, wt(left), f"pair {k}")
        main = terms.get(small, ZERO) + d
        if main.is_zero():
            terms.pop(small, None)
        else:
            terms[small] = main
        rules.append((lhs, NCPoly(terms)))
    if straightening:
        raise ValueError(f"unknown straightening keys {sorted(straightening)}")
    return RewriteSystem(G, rules)


def _contains(word, sub):
    k = len(sub)
    return any(word[i : i + k] == sub for i in range(len(word) - k + 1))


def _overlap_spolys(gens, rule1, rule2, cap, with_words=False):
    """S-polynomials of proper overlaps (suffix of lhs1 = prefix of lhs2).

    Only ambiguity words of phi-weight <= cap are produced.
    """
    l1, r1 = rule1
    l2, r2 = rule2
    out = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[len(l1) - k :] != l2[:k]:
            continue
        u = l1 + l2[k:]
        if gens.word_weight(u) > cap:
            continue
        # reduce u at position 0 with rule1, and at len(l1)-k with rule2
        left = r1 * NCPoly.term(l2[k:])
        right = NCPoly.term(l1[: len(l1) - k]) * r2
        q = left - right
        out.append((u, q) if with_words else q)
    return out
