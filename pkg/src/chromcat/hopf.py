"""Hopf-ring calculus for the mod-p homology of v_n-periodic spectra's spaces.

Everything is modelled after the quotient calculus actually used in the
worked computation: expressions are F_p-linear combinations of *-monomials
whose factors are grouplike tags [c] or circle-monomials b_{i_1} o ... o
b_{i_k}, with bivariate (s, t) polynomial coefficients truncated at a degree
bound.  Rewrite rules wired in:

  [c] * [d] = [c+d]        [c] o [d] = [cd]        [c] o m = c m  (deg m > 0)
  b_i o b_0 = 0 (i > 0)    pure b_1 monomials of weight >= p^n vanish

Mixed circle-monomials (such as b_1 o b_2) are kept as formal nonzero
symbols; nonvanishing is never concluded from them.  The unit v_n is
suppressed, so all scalars live in F_p.

``CycRing`` models the coefficient ring F_p[x_1..x_r]/(x_i^(p^n)) of the
classifying space of (Z/p)^r with v_n set to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .fgl import FGL
from .polyfp import PolyFp

WEYL_CLOSURE_CAP = 24


class HopfError(ValueError):
    pass


# -- truncated polynomial ring F_p[x_1..x_r]/(x_i^(p^n)) -----------------------


class CycRing:
    """The model ring for B(Z/p)^r at height n: exponents are capped below
    p^n per variable and anything reaching the cap dies."""

    def __init__(self, p: int, height: int, rank: int):
        self.p = p
        self.height = height
        self.rank = rank
        self.cap = p ** height

    def elt(self, terms=None) -> "RingElt":
        return RingElt(self, terms)

    def zero(self) -> "RingElt":
        return RingElt(self)

    def one(self) -> "RingElt":
        return RingElt(self, {(0,) * self.rank: 1})

    def monomial(self, exps: Sequence[int], c: int = 1) -> "RingElt":
        return RingElt(self, {tuple(exps): c})

    def variable(self, i: int) -> "RingElt":
        exps = [0] * self.rank
        exps[i] = 1
        return self.monomial(exps)

    def fgl_sum(self, fgl: FGL, a: "RingElt", b: "RingElt") -> "RingElt":
        """a +_F b evaluated in the ring (nilpotence truncates the series)."""
        # surviving monomials have every exponent below the cap
        if fgl.degree < self.rank * (self.cap - 1):
            raise HopfError("formal group law is not truncated deep enough")
        out = self.zero()
        for (i, j), c in fgl.series.coeffs.items():
            out = out + (a ** i) * (b ** j) * c
        return out

    def fgl_of_variables(self, fgl: FGL) -> "RingElt":
        if self.rank != 2:
            raise HopfError("F(w, z) needs the rank-2 ring")
        return self.fgl_sum(fgl, self.variable(0), self.variable(1))


class RingElt:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: CycRing, terms=None):
        self.ring = ring
        clean = {}
        for exps, c in (terms or {}).items():
            c %= ring.p
            if c and all(e < ring.cap for e in exps):
                clean[tuple(exps)] = c
        self.terms = clean

    def _check(self, other):
        if self.ring is not other.ring:
            raise HopfError("elements live in different rings")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return RingElt(self.ring, terms)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElt(self.ring, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        cap = self.ring.cap
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if all(x < cap for x in e):
                    terms[e] = terms.get(e, 0) + c1 * c2
        return RingElt(self.ring, terms)

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, RingElt)
            and self.ring is other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def substitute(self, images: Sequence["RingElt"]) -> "RingElt":
        out = self.ring.zero()
        for exps, c in self.terms.items():
            term = self.ring.one() * c
            for img, e in zip(images, exps):
                term = term * img ** e
            out = out + term
        return out

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        names = tuple(names) if names else tuple("wzuv"[: self.ring.rank])
        parts = []
        for exps, c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            factors = [] if c == 1 and any(exps) else [str(c)]
            for n, e in zip(names, exps):
                if e == 1:
                    factors.append(n)
                elif e > 1:
                    factors.append("%s^%d" % (n, e))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return "RingElt(%s)" % self.render()


# -- Weyl orbit restriction (Mackey formula) ------------------------------------


@dataclass
class OrbitRestriction:
    """A Mackey restriction: the reduced ring value plus, when the orbit of a
    monomial stays inside the tag set {w, z, F(w,z)}, its structured form as a
    list of ((tag, power), ...) terms ready for the homology pushforward."""

    ring: CycRing
    fgl: FGL
    total: RingElt
    terms: Optional[list]  # list of tuples of (tag, power); tags "s", "t", "s+t"

    def rendered_terms(self) -> list:
        if self.terms is None:
            return []
        return [
            " * ".join("%s^%d" % (tag, e) for tag, e in term) if term else "1"
            for term in self.terms
        ]


def orbit_from_terms(
    terms: Sequence[Sequence[tuple]], ring: CycRing, fgl: FGL
) -> OrbitRestriction:
    """Build an orbit presentation from explicit ((tag, power), ...) terms;
    used to rerun a pushforward in a different height's model."""
    values = {
        "s": ring.variable(0),
        "t": ring.variable(1) if ring.rank > 1 else None,
        "s+t": ring.fgl_of_variables(fgl) if ring.rank == 2 else None,
    }
    total = ring.zero()
    for term in terms:
        prod = ring.one()
        for tag, e in term:
            if values.get(tag) is None:
                raise HopfError("unknown series argument %r" % (tag,))
            prod = prod * values[tag] ** e
        total = total + prod
    return OrbitRestriction(
        ring=ring, fgl=fgl, total=total, terms=[tuple(t) for t in terms]
    )


def close_weyl_action(
    ring: CycRing, generators: Sequence[Sequence[RingElt]], cap: int = WEYL_CLOSURE_CAP
) -> list:
    """Close substitution endomorphisms (tuples of variable images) into a
    group; raises if the closure does not stop within the cap."""
    ident = tuple(ring.variable(i) for i in range(ring.rank))

    def key(endo):
        return tuple(tuple(sorted(img.terms.items())) for img in endo)

    elements = [ident]
    index = {key(ident): 0}
    frontier = [ident]
    while frontier:
        cur = frontier.pop()
        for gen in generators:
            gen = tuple(gen)
            nxt = tuple(img.substitute(gen) for img in cur)
            k = key(nxt)
            if k not in index:
                if len(elements) >= cap:
                    raise HopfError(
                        "Weyl action failed to close within %d elements" % cap
                    )
                index[k] = len(elements)
                elements.append(nxt)
                frontier.append(nxt)
    return elements


def weyl_orbit_restriction(
    expr: RingElt, generators: Sequence[Sequence[RingElt]], fgl: FGL
) -> OrbitRestriction:
    """Sum of expr over the closed Weyl action (one summand per group
    element, so invariant inputs pick up a multiplicity).

    For a monomial input whose orbit factors through the tags
    {w, z, F(w, z)}, the structured term list is retained; the homology
    pushforward requires that form.
    """
    ring = expr.ring
    action = close_weyl_action(ring, generators)
    total = ring.zero()
    images = []
    for endo in action:
        img = expr.substitute(endo)
        images.append(endo)
        total = total + img

    terms = None
    if expr.is_monomial():
        exps = next(iter(expr.terms))
        tags = {
            "s": ring.variable(0),
            "t": ring.variable(1) if ring.rank > 1 else None,
            "s+t": ring.fgl_of_variables(fgl) if ring.rank == 2 else None,
        }
        terms = []
        for endo in action:
            term = []
            ok = True
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                tag = next(
                    (name for name, val in tags.items() if val is not None and val == endo[i]),
                    None,
                )
                if tag is None:
                    ok = False
                    break
                term.append((tag, e))
            if not ok:
                terms = None
                break
            terms.append(tuple(term))
    return OrbitRestriction(ring=ring, fgl=fgl, total=total, terms=terms)


# -- Hopf expressions ------------------------------------------------------------

# A star-monomial is (c, omonos): the *-product of the grouplike [c] with the
# circle-monomials in omonos (each a sorted tuple of b-indices >= 1).


class HopfExpr:
    """F_p-linear combination of *-monomials with (s, t)-polynomial
    coefficients, truncated above total degree ``degree``."""

    __slots__ = ("p", "height", "degree", "terms")

    def __init__(self, p: int, height: int, degree: int, terms=None):
        self.p = p
        self.height = height
        self.degree = degree
        clean = {}
        for star, poly in (terms or {}).items():
            star = self._normalize_star(star)
            if star is None:
                continue
            poly = poly.truncate(degree)
            if poly.is_zero():
                continue
            if star in clean:
                merged = clean[star] + poly
                if merged.is_zero():
                    del clean[star]
                else:
                    clean[star] = merged
            else:
                clean[star] = poly
        self.terms = clean

    def _normalize_star(self, star):
        c, omonos = star
        kept = []
        for om in omonos:
            om = tuple(sorted(om))
            if not om:
                raise HopfError("empty circle-monomial")
            if len(om) >= self.p ** self.height and all(i == 1 for i in om):
                return None  # pure b_1 power at or above weight p^n
            kept.append(om)
        return (c % self.p, tuple(sorted(kept)))

    # -- helpers ------------------------------------------------------------------

    def _ctx(self):
        return (self.p, self.height, self.degree)

    def _check(self, other):
        if self._ctx() != other._ctx():
            raise HopfError("expressions live in different contexts")

    def _poly(self, value=None) -> PolyFp:
        if value is None:
            return PolyFp.zero(self.p, 2)
        return value

    @classmethod
    def zero(cls, p, height, degree):
        return cls(p, height, degree)

    @classmethod
    def grouplike(cls, p, height, degree, c, coeff: Optional[PolyFp] = None):
        coeff = coeff if coeff is not None else PolyFp.constant(p, 2, 1)
        return cls(p, height, degree, {(c % p, ()): coeff})

    @classmethod
    def omono(cls, p, height, degree, indices, coeff: Optional[PolyFp] = None):
        coeff = coeff if coeff is not None else PolyFp.constant(p, 2, 1)
        return cls(p, height, degree, {(0, (tuple(sorted(indices)),)): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, HopfExpr)
            and self._ctx() == other._ctx()
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self._ctx(), frozenset(self.terms.items())))

    def __add__(self, other: "HopfExpr") -> "HopfExpr":
        self._check(other)
        terms = dict(self.terms)
        for star, poly in other.terms.items():
            terms[star] = terms.get(star, self._poly()) + poly
        return HopfExpr(self.p, self.height, self.degree, terms)

    def scale_poly(self, poly: PolyFp) -> "HopfExpr":
        return HopfExpr(
            self.p,
            self.height,
            self.degree,
            {star: coeff * poly for star, coeff in self.terms.items()},
        )

    def star_mul(self, other: "HopfExpr") -> "HopfExpr":
        """The * product: grouplike tags add, circle factors concatenate."""
        self._check(other)
        terms = {}
        for (c1, ms1), p1 in self.terms.items():
            for (c2, ms2), p2 in other.terms.items():
                star = ((c1 + c2) % self.p, tuple(sorted(ms1 + ms2)))
                poly = p1 * p2
                if star in terms:
                    terms[star] = terms[star] + poly
                else:
                    terms[star] = poly
        return HopfExpr(self.p, self.height, self.degree, terms)

    def circ_mul(self, other: "HopfExpr") -> "HopfExpr":
        """The o product on atomic expressions (grouplikes and single
        circle-monomials); Hopf-ring distributivity over * is never needed in
        this calculus and is deliberately not implemented."""
        self._check(other)
        terms = {}

        def add(star, poly):
            if star in terms:
                terms[star] = terms[star] + poly
            else:
                terms[star] = poly

        for (c1, ms1), p1 in self.terms.items():
            if len(ms1) > 1:
                raise HopfError("circle product needs atomic operands")
            for (c2, ms2), p2 in other.terms.items():
                if len(ms2) > 1:
                    raise HopfError("circle product needs atomic operands")
                poly = p1 * p2
                if not ms1 and not ms2:
                    add(((c1 * c2) % self.p, ()), poly)
                elif not ms1:
                    # [c] o m = c m in positive degree; [0] o m = 0.
                    if c1 % self.p:
                        add((0, ms2), poly.scale(c1))
                elif not ms2:
                    if c2 % self.p:
                        add((0, ms1), poly.scale(c2))
                else:
                    add((0, (tuple(sorted(ms1[0] + ms2[0])),)), poly)
        return HopfExpr(self.p, self.height, self.degree, terms)

    def circ_power(self, k: int) -> "HopfExpr":
        out = HopfExpr.grouplike(self.p, self.height, self.degree, 1)
        for _ in range(k):
            out = out.circ_mul(self)
        return out

    def grouplike_part(self) -> dict:
        return {c: poly for (c, ms), poly in self.terms.items() if not ms}

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (c, ms), poly in sorted(
            self.terms.items(), key=lambda kv: (len(kv[0][1]), kv[0][1], kv[0][0])
        ):
            factors = []
            if not ms or c:
                factors.append("[%d]" % c)
            for om in ms:
                factors.append("o".join("b%d" % i for i in om))
            name = " * ".join(factors)
            coeff = poly.render(names=("s", "t"))
            parts.append(name if coeff == "1" else "(%s) %s" % (coeff, name))
        return " + ".join(parts)

    def __repr__(self):
        return "HopfExpr(%s)" % self.render()


def b_series(argument: PolyFp, p: int, height: int, degree: int) -> HopfExpr:
    """b(u) = [0] + sum_{i>=1} b_i u^i for a series argument u with zero
    constant term."""
    if argument.coefficient((0, 0)):
        raise HopfError("series argument must have zero constant term")
    terms = {(0, ()): PolyFp.constant(argument.p, 2, 1)}
    power = PolyFp.constant(argument.p, 2, 1)
    for i in range(1, degree + 1):
        power = (power * argument).truncate(degree)
        if power.is_zero():
            break
        terms[(0, ((i,),))] = power
    return HopfExpr(p, height, degree, terms)


def beta_pushforward(orbit: OrbitRestriction, degree: int) -> HopfExpr:
    """Image of the beta generating function under a Mackey orbit sum.

    Each factor u^a contributes b(u)^(o a); factors combine by o inside a
    term and term images combine by *, following the standard generating
    function relation for complex oriented theories.
    """
    if orbit.terms is None:
        raise HopfError("orbit sum is not presented in series-argument form")
    p, height = orbit.ring.p, orbit.ring.height
    if orbit.ring.p != orbit.fgl.p or orbit.ring.height != orbit.fgl.height:
        raise HopfError("ring and formal group law disagree")
    args = {
        "s": PolyFp.variable(p, 2, 0),
        "t": PolyFp.variable(p, 2, 1),
        "s+t": PolyFp(
            p, 2, {e: c for e, c in orbit.fgl.series.coeffs.items()}
        ).truncate(degree),
    }
    series = {
        tag: b_series(poly, p, height, degree) for tag, poly in args.items()
    }
    result = HopfExpr.grouplike(p, height, degree, 0)  # the *-unit [0]
    for term in orbit.terms:
        factor = HopfExpr.grouplike(p, height, degree, 1)  # the o-unit [1]
        for tag, power in term:
            factor = factor.circ_mul(series[tag].circ_power(power))
        result = result.star_mul(factor)
    return result


def mod_indecomposables(e: HopfExpr) -> HopfExpr:
    """Quotient by *-decomposables: terms with two or more circle-monomial
    factors die, a lone circle-monomial sheds its grouplike *-factor, and
    grouplike-only terms survive unchanged."""
    terms = {}
    for (c, ms), poly in e.terms.items():
        if len(ms) >= 2:
            continue
        star = (c, ()) if not ms else (0, ms)
        if star in terms:
            terms[star] = terms[star] + poly
        else:
            terms[star] = poly
    return HopfExpr(e.p, e.height, e.degree, terms)


def coefficient_of(e: HopfExpr, indices: Sequence[int], degree: int) -> PolyFp:
    """The degree-``degree`` part of the coefficient of the named
    circle-monomial in the reduced expression."""
    if degree > e.degree:
        raise HopfError("degree %d exceeds the truncation bound %d" % (degree, e.degree))
    reduced = mod_indecomposables(e)
    om = tuple(sorted(indices))
    poly = reduced.terms.get((0, (om,)))
    if poly is None:
        return PolyFp.zero(e.p, 2)
    return poly.homogeneous_part(degree)


# -- Hurewicz evaluation ---------------------------------------------------------


def _single_term_image(p, height, degree, coeff, power, t):
    """Image of beta_t under the map for coeff * x^power."""
    if power == 0:
        if t == 0:
            return HopfExpr.grouplike(p, height, degree, coeff)
        return HopfExpr.zero(p, height, degree)
    if t == 0:
        return HopfExpr.grouplike(p, height, degree, 0)
    total = HopfExpr.zero(p, height, degree)
    # compositions of t into `power` positive parts; parts with a zero entry
    # die against b_0
    for comp in _compositions(t, power):
        total = total + HopfExpr.omono(
            p, height, degree, comp, PolyFp.constant(p, 2, coeff)
        )
    return total


def _compositions(total, parts):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def hurewicz_eval(
    element: dict, t: int, p: int, height: int, degree: int = 0
) -> HopfExpr:
    """Image of beta_t under the coalgebra map of a rank-1 ring element.

    ``element`` maps exponents (< p^height) to F_p coefficients.  Sums of
    terms convolve through the coproduct psi(beta_t) = sum beta_u x beta_v;
    the result is reduced mod *-decomposables.
    """
    if not 0 <= t < p ** height:
        raise HopfError("beta index out of range")
    items = sorted((k, v % p) for k, v in element.items() if v % p)
    for k, _ in items:
        if not 0 <= k < p ** height:
            raise HopfError("exponent %d out of range" % k)
    if not items:
        # the zero map: beta_0 -> [0], higher betas -> 0
        if t == 0:
            return HopfExpr.grouplike(p, height, degree, 0)
        return HopfExpr.zero(p, height, degree)

    def eval_terms(terms, tt):
        power, coeff = terms[0]
        if len(terms) == 1:
            return _single_term_image(p, height, degree, coeff, power, tt)
        out = HopfExpr.zero(p, height, degree)
        for u in range(tt + 1):
            left = _single_term_image(p, height, degree, coeff, power, u)
            if left.is_zero():
                continue
            right = eval_terms(terms[1:], tt - u)
            out = out + left.star_mul(right)
        return out

    return mod_indecomposables(eval_terms(items, t))


def verify_kn_injectivity(p: int, height: int) -> dict:
    """Witness table showing each nonzero homogeneous element of the rank-1
    model has a beta with nonzero reduced image; aborts loudly otherwise.

    Only pure-b_1 powers and grouplikes are ever read as nonzero, exactly the
    terms whose nonvanishing the model asserts.
    """
    q = p ** height
    if q > 16:
        raise HopfError("p^n above 16 is out of desk scale")
    witnesses = []

    def first_witness(element):
        for t in range(q):
            image = hurewicz_eval(element, t, p, height)
            if not image.is_zero():
                return t, image
        return None

    for i in range(q):
        for c in range(1, p):
            found = first_witness({i: c})
            if found is None:
                raise HopfError("element %d x^%d has zero image everywhere" % (c, i))
            t, image = found
            witnesses.append(
                {"element": {i: c}, "beta": t, "image": image.render()}
            )
    for c0 in range(1, p):
        for cm in range(1, p):
            element = {0: c0, q - 1: cm}
            found = first_witness(element)
            if found is None:
                raise HopfError("special-form element has zero image everywhere")
            top = hurewicz_eval(element, q - 1, p, height)
            if top.is_zero():
                raise HopfError(
                    "special-form element vanishes on beta_%d" % (q - 1)
                )
            witnesses.append(
                {
                    "element": {0: c0, q - 1: cm},
                    "beta": q - 1,
                    "image": top.render(),
                }
            )
    # distinctness of the recovered coefficients: beta_0 reads off c_0 and
    # beta_{q-1} then reads off c_{q-1}
    seen = {}
    for c0 in range(p):
        for cm in range(p):
            element = {0: c0, q - 1: cm}
            sig = (
                hurewicz_eval(element, 0, p, height).render(),
                hurewicz_eval(element, q - 1, p, height).render(),
            )
            if sig in seen:
                raise HopfError(
                    "elements %r and %r are not separated" % (seen[sig], element)
                )
            seen[sig] = element
    return {"p": p, "height": height, "witnesses": witnesses, "ok": True}
