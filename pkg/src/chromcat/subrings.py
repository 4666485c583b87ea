"""Categories C_R cut out by restriction of invariant-polynomial subrings.

A subring of the mod-2 cohomology of G is presented by homogeneous
Weyl-invariant polynomial generators on the variables of an elementary
abelian Sylow 2-subgroup P.  A morphism f: W -> V survives when pulling the
restriction of every generator back along f agrees with restricting it to W.
Equality is checked on generators only, which suffices because restriction
and pullback are ring maps.

The condition is checked exactly, not modulo the nilradical: the two versions
agree for subrings closed under the Steenrod algebra, Steenrod operations are
out of scope here, and the shipped generator sets are meant exactly.

Scope guard: every elementary abelian subgroup must be conjugate into P, and
p must be 2 (odd primes would need the exterior part of the cohomology).
Violations raise UnsupportedGroupError rather than returning silently wrong
categories.
"""

from __future__ import annotations

from typing import Optional, Sequence

from . import modp
from .categories import ChromCategory
from .elemab import ElemAbelian, LinearMorphism, enumerate_elem_abelians, injective_homs
from .groups import FiniteGroup, GroupError
from .polyfp import LinearAction, PolyFp


class UnsupportedGroupError(GroupError):
    """The group falls outside the elementary-abelian-Sylow, p=2 scope."""


def sylow_elem_abelian(group: FiniteGroup, p: int = 2) -> ElemAbelian:
    """The first maximal elementary abelian subgroup that is a full Sylow
    p-subgroup; raises if the Sylow p-subgroup is not elementary abelian."""
    part = 1
    while group.order % (part * p) == 0:
        part *= p
    for v in enumerate_elem_abelians(group, p):
        if p ** v.rank == part:
            return v
    raise UnsupportedGroupError(
        "the Sylow %d-subgroup of %s is not elementary abelian" % (p, group.name)
    )


def _conjugation_matrix(group: FiniteGroup, sub: ElemAbelian, target: ElemAbelian, g: int):
    """Matrix of x -> gxg^-1 : sub -> target in basis coordinates, or None."""
    cols = []
    for b in sub.basis:
        image = group.conjugate(b, g)
        if image not in target:
            return None
        cols.append(target.coordinates(image))
    if sub.rank == 0:
        return tuple(() for _ in range(target.rank))
    return modp.transpose(tuple(cols))


def embeddings_into(group: FiniteGroup, sub: ElemAbelian, ambient: ElemAbelian) -> list:
    """All conjugation embeddings of sub into ambient, as distinct matrices
    in group-element scan order."""
    seen = []
    for g in group.elements():
        m = _conjugation_matrix(group, sub, ambient, g)
        if m is not None and m not in seen:
            seen.append(m)
    return seen


def weyl_action(group: FiniteGroup, sylow: ElemAbelian) -> LinearAction:
    """Action of N_G(P)/C_G(P) on the polynomial generators of H^*(BP).

    Conjugation by n acts on P with matrix A; the induced left action on
    degree-one cohomology is the inverse transpose of A.
    """
    mats = set()
    for g in group.elements():
        a = _conjugation_matrix(group, sylow, sylow, g)
        if a is not None:
            mats.add(modp.transpose(modp.mat_inverse(a, sylow.p)))
    return LinearAction(sylow.p, sorted(mats))


class SubringPresentation:
    """Generators of a subring of H^*(BG), presented on the Sylow variables."""

    def __init__(
        self,
        sylow: ElemAbelian,
        weyl: LinearAction,
        generators: Sequence[PolyFp],
        name: str = "R",
    ):
        if sylow.p != 2:
            raise UnsupportedGroupError("subring categories are implemented for p = 2 only")
        self.sylow = sylow
        self.weyl = weyl
        self.generators = tuple(generators)
        self.name = name
        self.p = sylow.p
        for g in self.generators:
            if g.nvars != sylow.rank or g.p != self.p:
                raise ValueError("generator does not live on the Sylow variables")
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
            for m in weyl.generators:
                if g.substitute_linear(m) != g:
                    raise ValueError(
                        "generator %s is not Weyl-invariant" % g.render()
                    )

    @classmethod
    def for_group(cls, group: FiniteGroup, generators: Sequence[PolyFp], name="R"):
        sylow = sylow_elem_abelian(group, 2)
        return cls(sylow, weyl_action(group, sylow), generators, name=name)


def restriction(sylow: ElemAbelian, sub: ElemAbelian, f: PolyFp) -> PolyFp:
    """Restrict a polynomial on P's variables along an actual inclusion
    sub <= P (dual linear substitution by the transposed coordinate matrix)."""
    if not sub.elements <= sylow.elements:
        raise GroupError("subgroup is not contained in the ambient Sylow subgroup")
    cols = tuple(sylow.coordinates(b) for b in sub.basis)
    # cols[j] is the coordinate row of basis j; the substitution matrix is
    # (C^T) with C the rank(P) x rank(sub) coordinate matrix.
    matrix = cols  # already the transpose of C
    if sub.rank == 0:
        matrix = ()
    return f.substitute_linear(matrix)


def _restriction_along(embedding: tuple, f: PolyFp) -> PolyFp:
    """Restriction along a conjugation embedding matrix E (rank P x rank V)."""
    return f.substitute_linear(modp.transpose(embedding))


def build_CR(
    group: FiniteGroup,
    presentation: SubringPresentation,
    embedding_choice: int = 0,
) -> ChromCategory:
    """The category C_R: objects all elementary abelians, morphisms the
    injective f with f^* Res_V = Res_W on every generator.

    Restriction to an object is computed through its embedding_choice-th
    conjugation embedding into P; independence of that choice is a tested
    property, not an assumption.
    """
    p = presentation.p
    objects = enumerate_elem_abelians(group, p)
    sylow = presentation.sylow
    res = []
    for v in objects:
        embs = embeddings_into(group, v, sylow)
        if not embs:
            raise UnsupportedGroupError(
                "object of rank %d is not conjugate into the Sylow subgroup" % v.rank
            )
        emb = embs[embedding_choice % len(embs)]
        res.append([_restriction_along(emb, g) for g in presentation.generators])

    homs = {}
    for i, w in enumerate(objects):
        for j, v in enumerate(objects):
            if w.rank > v.rank:
                continue
            kept = []
            for f in injective_homs(w, v):
                pullback = modp.transpose(f.matrix)
                if all(
                    rv.substitute_linear(pullback) == rw
                    for rv, rw in zip(res[j], res[i])
                ):
                    kept.append(f)
            if kept:
                homs[(i, j)] = tuple(kept)
    return ChromCategory(group, p, None, "subring", objects, homs, {})


def distinguishing_generator(
    presentation: SubringPresentation, f: LinearMorphism
) -> Optional[PolyFp]:
    """A generator witnessing that f is not a C_R morphism, if any."""
    group = f.source.group
    sylow = presentation.sylow
    emb_w = embeddings_into(group, f.source, sylow)
    emb_v = embeddings_into(group, f.target, sylow)
    if not emb_w or not emb_v:
        raise UnsupportedGroupError("objects are not conjugate into the Sylow subgroup")
    pullback = modp.transpose(f.matrix)
    for gen in presentation.generators:
        res_w = _restriction_along(emb_w[0], gen)
        res_v = _restriction_along(emb_v[0], gen)
        if res_v.substitute_linear(pullback) != res_w:
            return gen
    return None
