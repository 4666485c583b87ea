"""Sparse multivariate polynomials over F_p, linear actions, and invariants.

Polynomials store nonzero coefficients keyed by exponent tuples; rendering
and iteration follow a graded order (total degree, then descending
lexicographic exponents) so "x^2*y + x*y^2" style strings are reproducible
and parseable back.
"""

from __future__ import annotations

import itertools
import re
from typing import Optional, Sequence

from . import modp


def default_names(nvars: int) -> tuple:
    if nvars == 1:
        return ("t",)
    if nvars <= 4:
        return tuple("xyzw"[:nvars])
    return tuple("x%d" % i for i in range(nvars))


def _term_key(exps: tuple) -> tuple:
    return (sum(exps), tuple(-e for e in exps))


class PolyFp:
    """A polynomial over F_p in a fixed number of variables."""

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p: int, nvars: int, terms=None):
        self.p = p
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            c %= p
            if c:
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError("exponent tuple has wrong length")
                clean[exps] = c
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, p, nvars):
        return cls(p, nvars)

    @classmethod
    def constant(cls, p, nvars, c):
        return cls(p, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, p, nvars, i):
        exps = [0] * nvars
        exps[i] = 1
        return cls(p, nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, p, nvars, exps, c=1):
        return cls(p, nvars, {tuple(exps): c})

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "PolyFp":
        return PolyFp(
            self.p, self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d}
        )

    def truncate(self, max_degree: int) -> "PolyFp":
        return PolyFp(
            self.p,
            self.nvars,
            {e: c for e, c in self.terms.items() if sum(e) <= max_degree},
        )

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda item: _term_key(item[0]))

    def canonical(self) -> tuple:
        return tuple(self.sorted_terms())

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.p != other.p or self.nvars != other.nvars:
            raise ValueError("polynomial domains do not match")

    def __add__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return PolyFp(self.p, self.nvars, terms)

    def __sub__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) - c
        return PolyFp(self.p, self.nvars, terms)

    def __mul__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return PolyFp(self.p, self.nvars, terms)

    def scale(self, c: int) -> "PolyFp":
        return PolyFp(self.p, self.nvars, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "PolyFp":
        if k < 0:
            raise ValueError("negative power")
        result = PolyFp.constant(self.p, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyFp)
            and self.p == other.p
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.p, self.nvars, frozenset(self.terms.items())))

    def substitute_linear(self, matrix: tuple) -> "PolyFp":
        """Send variable x_j to sum_i matrix[i][j] * x_i (new variable count
        = number of matrix rows)."""
        new_nvars = len(matrix)
        if any(len(row) != self.nvars for row in matrix):
            raise ValueError("matrix shape does not match variable count")
        images = [
            PolyFp(
                self.p,
                new_nvars,
                {
                    tuple(1 if i == k else 0 for i in range(new_nvars)): matrix[k][j]
                    for k in range(new_nvars)
                },
            )
            for j in range(self.nvars)
        ]
        result = PolyFp.zero(self.p, new_nvars)
        for exps, c in self.terms.items():
            term = PolyFp.constant(self.p, new_nvars, c)
            for j, e in enumerate(exps):
                if e:
                    term = term * images[j] ** e
            result = result + term
        return result

    # -- rendering -----------------------------------------------------------

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        names = tuple(names) if names else default_names(self.nvars)
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            if c != 1 or not any(exps):
                factors.append(str(c))
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return "PolyFp(%d, %r)" % (self.p, self.render())


_FACTOR_RE = re.compile(r"^([A-Za-z]\w*)(?:\^(\d+))?$")


def parse_poly(
    text: str, p: int, nvars: int, names: Optional[Sequence[str]] = None
) -> PolyFp:
    """Inverse of PolyFp.render for '+'-separated monomial strings."""
    names = tuple(names) if names else default_names(nvars)
    position = {n: i for i, n in enumerate(names)}
    text = text.strip()
    if text in ("", "0"):
        return PolyFp.zero(p, nvars)
    terms = {}
    for chunk in text.split("+"):
        coeff = 1
        exps = [0] * nvars
        for factor in chunk.strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError("empty factor in %r" % chunk)
            if factor.isdigit():
                coeff = coeff * int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m or m.group(1) not in position:
                raise ValueError("cannot parse factor %r" % factor)
            exps[position[m.group(1)]] += int(m.group(2) or 1)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return PolyFp(p, nvars, terms)


# -- linear group actions ------------------------------------------------------


class LinearAction:
    """A finite matrix group over F_p acting on polynomial variables.

    Built from generators; the closure (including the identity) is computed
    eagerly and capped, since actions here are Weyl groups of desk-scale
    groups.
    """

    CLOSURE_CAP = 20_000

    def __init__(self, p: int, generators: Sequence[tuple]):
        self.p = p
        self.generators = tuple(tuple(tuple(r) for r in m) for m in generators)
        if not self.generators:
            raise ValueError("need at least one matrix to fix the dimension")
        self.nvars = len(self.generators[0])
        ident = modp.identity_matrix(self.nvars)
        elements = {ident}
        frontier = [ident]
        while frontier:
            cur = frontier.pop()
            for g in self.generators:
                nxt = modp.mat_mul(cur, g, p)
                if nxt not in elements:
                    if len(elements) >= self.CLOSURE_CAP:
                        raise ValueError("matrix group closure cap exceeded")
                    elements.add(nxt)
                    frontier.append(nxt)
        self.elements = tuple(sorted(elements))

    def order(self) -> int:
        return len(self.elements)

    def act(self, matrix: tuple, f: PolyFp) -> PolyFp:
        return f.substitute_linear(matrix)


def orbit_sum(f: PolyFp, action: LinearAction) -> PolyFp:
    """Sum of the distinct polynomials in the orbit of f."""
    seen = set()
    total = PolyFp.zero(f.p, f.nvars)
    for m in action.elements:
        g = f.substitute_linear(m)
        key = g.canonical()
        if key not in seen:
            seen.add(key)
            total = total + g
    return total


def _monomials_of_degree(nvars: int, d: int) -> list:
    out = [
        exps
        for exps in itertools.product(range(d + 1), repeat=nvars)
        if sum(exps) == d
    ]
    return sorted(out, key=lambda e: tuple(-x for x in e))


def invariant_basis(action: LinearAction, d: int) -> list[PolyFp]:
    """Echelon-form basis of the degree-d forms fixed by the action.

    Solves the stacked (sigma - id) kernel over the monomial basis, one block
    per generator; generators suffice since fixedness is closed under
    products.
    """
    mons = _monomials_of_degree(action.nvars, d)
    rows = []
    for g in action.generators:
        images = [
            PolyFp.monomial(action.p, action.nvars, m).substitute_linear(g)
            for m in mons
        ]
        for e in mons:
            rows.append(
                tuple(
                    (img.coefficient(e) - (1 if m == e else 0)) % action.p
                    for m, img in zip(mons, images)
                )
            )
    kernel = modp.kernel_basis(tuple(rows), action.p, len(mons))
    return [
        PolyFp(action.p, action.nvars, dict(zip(mons, vec))) for vec in kernel
    ]


# -- graded subring membership --------------------------------------------------


def _weighted_exponents(weights: Sequence[int], total: int):
    if not weights:
        if total == 0:
            yield ()
        return
    w = weights[0]
    limit = total // w if w else 0
    for e in range(limit + 1):
        for rest in _weighted_exponents(weights[1:], total - e * w):
            yield (e,) + rest


def graded_piece(generators: Sequence[PolyFp], d: int) -> list[PolyFp]:
    """Spanning set of the degree-d part of the subring the generators
    generate (monomials in the generators of weighted degree exactly d)."""
    if not generators:
        return []
    p, nvars = generators[0].p, generators[0].nvars
    weights = []
    for g in generators:
        if not g.is_homogeneous() or g.is_zero():
            raise ValueError("generators must be nonzero homogeneous polynomials")
        weights.append(g.degree())
    out = []
    for exps in _weighted_exponents(weights, d):
        prod = PolyFp.constant(p, nvars, 1)
        for g, e in zip(generators, exps):
            prod = prod * g ** e
        if not prod.is_zero():
            out.append(prod)
    return out


def subring_membership(
    f: PolyFp, generators: Sequence[PolyFp], degree_bound: int = 12
) -> bool:
    """Is f in the degree-(deg f) graded piece of the generated subring?"""
    if f.is_zero():
        return True
    if not f.is_homogeneous():
        raise ValueError("membership test requires a homogeneous polynomial")
    d = f.degree()
    if d > degree_bound:
        raise ValueError("degree %d exceeds bound %d" % (d, degree_bound))
    spanning = graded_piece(generators, d)
    mons = _monomials_of_degree(f.nvars, d)
    index = {m: i for i, m in enumerate(mons)}

    def vec(poly):
        row = [0] * len(mons)
        for e, c in poly.terms.items():
            row[index[e]] = c
        return tuple(row)

    span_vectors = [vec(g) for g in spanning]
    return modp.in_span(span_vectors, vec(f), f.p)


def relation_check(lhs: PolyFp, rhs: PolyFp) -> bool:
    """Exact equality of canonical forms."""
    return lhs == rhs
