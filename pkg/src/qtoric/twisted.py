"""2-cocycles on affine semigroups and their twisted semigroup algebras.

A cocycle alpha assigns an invertible scalar to each pair of semigroup
elements subject to alpha(s,t)alpha(s+t,u) = alpha(t,u)alpha(s,t+u).
The twisted algebra has basis X_s indexed by the semigroup with product
X_s X_t = alpha(s,t) X_{s+t}.  Bicharacters q^{<s, B t>} are cocycles for
free; tables on generator pairs extend through chosen factorizations and
must be checked, since an arbitrary table need not satisfy the identity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from .exact import ONE, Q, RatFunc, parse
from .freealg import GeneratorSet, RewriteSystem, algebra_from_type_data, word_of_exponent
from .intlinalg import vec_add


class CocycleVerdict(NamedTuple):
    holds: bool
    witness: Optional[tuple]  # (s, t, u) violating the identity


def lower_part(matrix):
    """Strictly lower triangular part, entries above the diagonal dropped."""
    n = len(matrix)
    return tuple(
        tuple(int(matrix[i][j]) if i > j else 0 for j in range(n))
        for i in range(n)
    )


def _check_matrix(matrix, dim):
    matrix = tuple(tuple(int(c) for c in row) for row in matrix)
    if len(matrix) != dim or any(len(row) != dim for row in matrix):
        raise ValueError(f"matrix must be {dim}x{dim}")
    return matrix


class Cocycle:
    """Scalar-valued pairing on a semigroup, bicharacter or table-extended."""

    def __init__(self, semigroup, kind, data, base):
        self.semigroup = semigroup
        self.kind = kind
        self.data = data
        self.base = base
        if base.is_zero():
            raise ValueError("base must be invertible")
        self._fact_cache = {}

    @classmethod
    def bicharacter(cls, semigroup, matrix, base=Q) -> "Cocycle":
        """alpha(s, t) = base^(s . matrix . t) on ambient coordinates."""
        dim = len(semigroup.generators[0])
        return cls(semigroup, "bicharacter", _check_matrix(matrix, dim), base)

    @classmethod
    def from_table(cls, semigroup, entries, base=Q) -> "Cocycle":
        """Extend values on ordered generator pairs through factorizations.

        entries: {(i, j): value} over all ordered pairs of generator
        indices; value may be a RatFunc or an integer exponent of base.
        alpha(s, t) multiplies entries along the componentwise product of
        the lexicographically least factorizations of s and t.  Whether
        the result is a cocycle must be checked with check().
        """
        n = len(semigroup.generators)
        table = {}
        for (i, j), val in entries.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"generator index pair ({i},{j}) out of range")
            if isinstance(val, int):
                val = base ** val
            if not isinstance(val, RatFunc):
                val = RatFunc.from_fraction(Fraction(val))
            if val.is_zero():
                raise ValueError(f"table entry ({i},{j}) must be invertible")
            table[(i, j)] = val
        missing = [
            (i, j) for i in range(n) for j in range(n) if (i, j) not in table
        ]
        if missing:
            raise ValueError(f"table is missing generator pairs {missing}")
        return cls(semigroup, "table", table, base)

    def _factorization(self, s):
        s = tuple(int(c) for c in s)
        if s in self._fact_cache:
            return self._fact_cache[s]
        xi = self.semigroup.member(s)
        if xi is None:
            raise ValueError(f"{s} is not a semigroup member")
        self._fact_cache[s] = xi
        return xi

    def __call__(self, s, t) -> RatFunc:
        s = tuple(int(c) for c in s)
        t = tuple(int(c) for c in t)
        if self.kind == "bicharacter":
            e = sum(
                si * bij * tj
                for si, row in zip(s, self.data)
                for bij, tj in zip(row, t)
            )
            return self.base ** e
        xi, eta = self._factorization(s), self._factorization(t)
        out = ONE
        for i, a in enumerate(xi):
            if not a:
                continue
            for j, b in enumerate(eta):
                if not b:
                    continue
                out = out * self.data[(i, j)] ** (a * b)
        return out

    def ratio(self, s, t) -> RatFunc:
        """Commutation factor: X_t X_s = ratio(s, t) X_s X_t."""
        return self(t, s) / self(s, t)

    def check(self, bound) -> CocycleVerdict:
        """Test the cocycle identity on all member triples up to the bound."""
        elems = self.semigroup.elements_up_to(bound)
        values = {(s, t): self(s, t) for s in elems for t in elems}
        for s in elems:
            for t in elems:
                st = vec_add(s, t)
                a_st = values[(s, t)]
                for u in elems:
                    tu = vec_add(t, u)
                    left = a_st * self(st, u)
                    right = values[(t, u)] * self(s, tu)
                    if left != right:
                        return CocycleVerdict(False, (s, t, u))
        return CocycleVerdict(True, None)

    def as_json_dict(self):
        if self.kind == "bicharacter":
            data = {"matrix": [list(r) for r in self.data]}
        else:
            data = {
                "entries": [
                    {"pair": [i, j], "value": str(v)}
                    for (i, j), v in sorted(self.data.items())
                ]
            }
        return {"kind": self.kind, "base": str(self.base), **data}

    @classmethod
    def from_json_dict(cls, semigroup, data) -> "Cocycle":
        base = parse(data.get("base", "q"))
        if data["kind"] == "bicharacter":
            return cls.bicharacter(semigroup, data["matrix"], base)
        entries = {
            tuple(e["pair"]): parse(e["value"]) for e in data["entries"]
        }
        return cls.from_table(semigroup, entries, base)


def restrict_to_semigroup(matrix, base, semigroup) -> Cocycle:
    """Ordered-monomial cocycle of an antisymmetric exponent matrix.

    For variables u_i with u_j u_i = base^(2 b_ij) u_i u_j (i < j), the
    ordered monomials u^s multiply by base^(s . lower(b) . t), and that
    bicharacter is the cocycle induced on any subsemigroup of exponents.
    """
    dim = len(semigroup.generators[0])
    matrix = _check_matrix(matrix, dim)
    for i in range(dim):
        for j in range(dim):
            if matrix[i][j] != -matrix[j][i]:
                raise ValueError("exponent matrix must be antisymmetric")
    return Cocycle.bicharacter(semigroup, lower_part(matrix), base)


class TwistedAlgebra:
    """Semigroup algebra with product X_s X_t = alpha(s, t) X_{s+t}."""

    def __init__(self, semigroup, cocycle: Cocycle):
        if cocycle.semigroup is not semigroup and (
            cocycle.semigroup.generators != semigroup.generators
        ):
            raise ValueError("cocycle is defined on a different semigroup")
        self.semigroup = semigroup
        self.cocycle = cocycle

    def multiply(self, s, t):
        """(coefficient, s + t); both factors must be semigroup members."""
        s, t = tuple(int(c) for c in s), tuple(int(c) for c in t)
        for v in (s, t):
            if self.semigroup.member(v) is None:
                raise ValueError(f"{v} is not a semigroup member")
        return self.cocycle(s, t), vec_add(s, t)

    def product(self, a, b):
        """Multiply finite linear combinations {element: coeff}."""
        out = {}
        for s, cs in a.items():
            for t, ct in b.items():
                coeff, st = self.multiply(s, t)
                acc = out.get(st)
                term = cs * ct * coeff
                total = term if acc is None else acc + term
                if total.is_zero():
                    out.pop(st, None)
                else:
                    out[st] = total
        return out

    def monomial_coefficient(self, xi) -> RatFunc:
        """gamma with X^xi = gamma * X_{pi(xi)} for the ordered monomial."""
        gens = self.semigroup.generators
        xi = tuple(int(m) for m in xi)
        if len(xi) != len(gens) or any(m < 0 for m in xi):
            raise ValueError(f"bad exponent vector {xi}")
        acc = (0,) * len(gens[0])
        coeff = ONE
        for i in word_of_exponent(xi):
            coeff = coeff * self.cocycle(acc, gens[i])
            acc = vec_add(acc, gens[i])
        return coeff

    def multiplication_table(self, bound):
        """{(s, t): coefficient} over all member pairs up to the bound."""
        elems = self.semigroup.elements_up_to(bound)
        return {(s, t): self.cocycle(s, t) for s in elems for t in elems}

    def presented(self, weights, degrees=None, names=None) -> RewriteSystem:
        """The twisted algebra as a rewriting presentation, no lower terms."""
        S = self.semigroup
        gens = S.generators
        n = len(gens)
        commutation = {
            (i, j): (self.cocycle.ratio(gens[i], gens[j]), None)
            for i in range(n)
            for j in range(i + 1, n)
        }
        pres = S.presentation()
        if degrees is None:
            degrees = gens
        if names is None:
            names = [f"x{i}" for i in range(n)]
        G = GeneratorSet(names, degrees, weights)
        straightening = {}
        for k, (left, right) in enumerate(pres.pairs):
            wl, wr = word_of_exponent(left), word_of_exponent(right)
            big, small = (
                (left, right) if G.word_key(wl) > G.word_key(wr) else (right, left)
            )
            d = self.monomial_coefficient(big) / self.monomial_coefficient(small)
            straightening[k] = (d, None)
        return algebra_from_type_data(
            S, pres, weights, commutation, straightening, degrees, names
        )
