"""Chromatic categories of elementary abelian subgroups.

``build_category(G, p, n)`` constructs the level-n category: objects are all
elementary abelian p-subgroups, morphisms the injective homomorphisms f such
that every n-tuple of source elements is carried to a simultaneously conjugate
tuple.  ``quillen_category`` builds the inclusion-and-conjugation category
directly; the two agree for n at least the p-rank.

The level test does not enumerate n-tuples.  A witness conjugating a basis of
a subgroup S <= W conjugates every element of S, and every tuple generates
such a subgroup of rank <= n, so it suffices to test the canonical bases of
the rank-min(n, rank W) subgroups of W.  The all-tuples brute force lives in
the test suite as the independent oracle for this reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from . import modp
from .elemab import (
    ElemAbelian,
    LinearMorphism,
    enumerate_elem_abelians,
    injective_homs,
)
from .groups import FiniteGroup, GroupError

Level = Union[int, float, None]  # int >= 0, math.inf or None for Quillen


@dataclass
class LevelCertificate:
    """Outcome of a level-n membership test.

    ``witnesses`` maps each tested subgroup basis (tuple of source elements)
    to a conjugating group element; ``failing`` names the first basis tuple
    with no witness.
    """

    ok: bool
    witnesses: dict
    failing: Optional[tuple] = None


def is_level_n_morphism(f: LinearMorphism, n: int) -> LevelCertificate:
    """Test the tuple condition at level n via the rank-reduction above."""
    group = f.source.group
    w = f.source
    m = min(n, w.rank)
    if m <= 0:
        return LevelCertificate(True, {})
    witnesses = {}
    for rows in modp.enumerate_subspaces(w.rank, m, w.p):
        basis = tuple(w.element_at(r) for r in rows)
        images = tuple(f(x) for x in basis)
        g = group.simultaneous_conjugacy(basis, images)
        if g is None:
            return LevelCertificate(False, witnesses, failing=basis)
        witnesses[basis] = g
    return LevelCertificate(True, witnesses)


class ChromCategory:
    """A category of elementary abelian p-subgroups with linear morphisms.

    ``homs[(i, j)]`` is the tuple of LinearMorphism from objects[i] to
    objects[j]; ``witnesses[(i, j, matrix)]`` records one group element
    inducing each conjugation-induced morphism.
    """

    def __init__(self, group, p, level, kind, objects, homs, witnesses):
        self.group = group
        self.p = p
        self.level = level
        self.kind = kind  # "level" | "quillen" | "subring"
        self.objects = tuple(objects)
        self.homs = homs
        self.witnesses = witnesses

    def object_index(self, v: ElemAbelian) -> int:
        return self.objects.index(v)

    def hom(self, i: int, j: int) -> tuple:
        return self.homs.get((i, j), ())

    def hom_matrices(self, i: int, j: int) -> frozenset:
        return frozenset(f.matrix for f in self.hom(i, j))

    def iter_morphisms(self) -> Iterator[tuple]:
        for (i, j), fs in sorted(self.homs.items()):
            for f in fs:
                yield i, j, f

    def morphism_count(self) -> int:
        return sum(len(fs) for fs in self.homs.values())

    def same_objects(self, other: "ChromCategory") -> bool:
        return self.group is other.group and self.objects == other.objects

    def equals(self, other: "ChromCategory") -> bool:
        """Hom-set by hom-set equality over the identical object list."""
        if not self.same_objects(other):
            return False
        n = len(self.objects)
        return all(
            self.hom_matrices(i, j) == other.hom_matrices(i, j)
            for i in range(n)
            for j in range(n)
        )

    def __repr__(self):
        lev = "oo" if self.level is None else self.level
        return "ChromCategory(%s, p=%d, %s=%s, %d objects, %d morphisms)" % (
            self.group.name,
            self.p,
            self.kind,
            lev,
            len(self.objects),
            self.morphism_count(),
        )


def _conjugation_homs(group, objects):
    """hom(W, V) = maps x -> gxg^-1 with gWg^-1 <= V, plus one witness each."""
    homs = {}
    witnesses = {}
    for i, w in enumerate(objects):
        for j, v in enumerate(objects):
            if w.rank > v.rank:
                continue
            seen = {}
            for g in group.elements():
                images = tuple(group.conjugate(b, g) for b in w.basis)
                if any(x not in v for x in images):
                    continue
                matrix = modp.transpose(tuple(v.coordinates(x) for x in images))
                if w.rank == 0:
                    matrix = tuple(() for _ in range(v.rank))
                if matrix not in seen:
                    seen[matrix] = g
            if seen:
                homs[(i, j)] = tuple(
                    LinearMorphism(w, v, m) for m in sorted(seen)
                )
                for m, g in seen.items():
                    witnesses[(i, j, m)] = g
    return homs, witnesses


def quillen_category(group: FiniteGroup, p: int) -> ChromCategory:
    """The category generated by inclusions and conjugations, built directly."""
    objects = enumerate_elem_abelians(group, p)
    homs, witnesses = _conjugation_homs(group, objects)
    return ChromCategory(group, p, None, "quillen", objects, homs, witnesses)


def build_category(group: FiniteGroup, p: int, n: Level) -> ChromCategory:
    """The level-n category; n = 0 keeps every injective homomorphism."""
    if n is None or n == math.inf:
        return quillen_category(group, p)
    if n < 0:
        raise GroupError("level must be >= 0")
    objects = enumerate_elem_abelians(group, p)
    _, witnesses = _conjugation_homs(group, objects)
    homs = {}
    for i, w in enumerate(objects):
        for j, v in enumerate(objects):
            if w.rank > v.rank:
                continue
            kept = tuple(
                f for f in injective_homs(w, v) if is_level_n_morphism(f, n).ok
            )
            if kept:
                homs[(i, j)] = kept
    return ChromCategory(group, p, n, "level", objects, homs, witnesses)


# -- skeleton reports ---------------------------------------------------------


@dataclass
class ObjectClass:
    rank: int
    representative: int          # object index of the class representative
    members: tuple               # object indices
    aut_order: int
    aut_abelian: bool
    aut_exponent: int


@dataclass
class SkeletonEdge:
    source: int                  # index into SkeletonReport.classes
    target: int
    hom_size: int
    orbits: tuple                # (orbit_size, stabilizer_order) under Aut(target)
    two_sided_orbit_count: int   # quotient by Aut(target) x Aut(source)


@dataclass
class SkeletonReport:
    """Isomorphism classes and morphism orbit data for a category.

    The rank-0 class is omitted whenever any positive-rank object exists: the
    trivial subgroup is initial and carries no structure, and the report then
    matches the usual two-node pictures.
    """

    classes: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    def class_by_rank(self, rank: int) -> ObjectClass:
        matches = [c for c in self.classes if c.rank == rank]
        if len(matches) != 1:
            raise KeyError("rank %d does not name a unique class" % rank)
        return matches[0]

    def edge(self, source_rank: int, target_rank: int) -> SkeletonEdge:
        si = self.classes.index(self.class_by_rank(source_rank))
        ti = self.classes.index(self.class_by_rank(target_rank))
        for e in self.edges:
            if e.source == si and e.target == ti:
                return e
        raise KeyError("no edge %d -> %d" % (source_rank, target_rank))

    def to_dict(self) -> dict:
        return {
            "classes": [
                {
                    "rank": c.rank,
                    "representative": c.representative,
                    "members": list(c.members),
                    "aut_order": c.aut_order,
                    "aut_abelian": c.aut_abelian,
                    "aut_exponent": c.aut_exponent,
                }
                for c in self.classes
            ],
            "edges": [
                {
                    "source": e.source,
                    "target": e.target,
                    "hom_size": e.hom_size,
                    "orbits": [list(o) for o in e.orbits],
                    "two_sided_orbit_count": e.two_sided_orbit_count,
                }
                for e in self.edges
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph skeleton {"]
        for k, c in enumerate(self.classes):
            lines.append('  V%d [label="rank=%d |Aut|=%d"];' % (k, c.rank, c.aut_order))
        for e in self.edges:
            if e.source == e.target:
                continue
            stabs = sorted({s for (_, s) in e.orbits})
            stab = ",".join(str(s) for s in stabs)
            lines.append(
                '  V%d -> V%d [label="%d morphisms, stab=%s"];'
                % (e.source, e.target, e.hom_size, stab)
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def _iso_classes(cat: ChromCategory) -> list[list[int]]:
    objects = cat.objects
    n = len(objects)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if objects[i].rank != objects[j].rank:
                continue
            if find(i) == find(j):
                continue
            back = cat.hom_matrices(j, i)
            for f in cat.hom(i, j):
                inv = modp.mat_inverse(f.matrix, cat.p)
                if inv in back:
                    parent[find(j)] = find(i)
                    break
    classes = {}
    for i in range(n):
        classes.setdefault(find(i), []).append(i)
    return [sorted(v) for _, v in sorted(classes.items())]


def skeleton(cat: ChromCategory) -> SkeletonReport:
    """Object classes under isomorphism in the category, with orbit data."""
    groups = _iso_classes(cat)
    if len(groups) > 1:
        groups = [g for g in groups if cat.objects[g[0]].rank > 0]
    report = SkeletonReport()
    reps = []
    for members in groups:
        rep = members[0]
        auts = cat.hom(rep, rep)
        mats = [f.matrix for f in auts]
        abelian = all(
            modp.mat_mul(a, b, cat.p) == modp.mat_mul(b, a, cat.p)
            for a in mats
            for b in mats
        )
        exponent = 1
        for m in mats:
            k = modp.matrix_order(m, cat.p) if cat.objects[rep].rank else 1
            exponent = exponent * k // math.gcd(exponent, k)
        report.classes.append(
            ObjectClass(
                rank=cat.objects[rep].rank,
                representative=rep,
                members=tuple(members),
                aut_order=len(auts),
                aut_abelian=abelian,
                aut_exponent=exponent,
            )
        )
        reps.append(rep)

    for si, srep in enumerate(reps):
        for ti, trep in enumerate(reps):
            if si == ti:
                continue
            hom = cat.hom(srep, trep)
            if not hom:
                continue
            aut_t = [f.matrix for f in cat.hom(trep, trep)]
            aut_s = [f.matrix for f in cat.hom(srep, srep)]
            orbits = _orbit_decomposition(
                [f.matrix for f in hom], aut_t, [], cat.p
            )
            two_sided = _orbit_decomposition(
                [f.matrix for f in hom], aut_t, aut_s, cat.p
            )
            report.edges.append(
                SkeletonEdge(
                    source=si,
                    target=ti,
                    hom_size=len(hom),
                    orbits=tuple(
                        (len(o), len(aut_t) // len(o)) for o in orbits
                    ),
                    two_sided_orbit_count=len(two_sided),
                )
            )
    return report


def _orbit_decomposition(mats, aut_target, aut_source, p):
    remaining = set(mats)
    orbits = []
    while remaining:
        seed = min(remaining)
        orbit = set()
        if aut_source:
            for a in aut_target:
                for b in aut_source:
                    orbit.add(modp.mat_mul(modp.mat_mul(a, seed, p), b, p))
        else:
            for a in aut_target:
                orbit.add(modp.mat_mul(a, seed, p))
        remaining -= orbit
        orbits.append(sorted(orbit))
    return orbits


# -- stabilization ------------------------------------------------------------


def stabilization_rank(group: FiniteGroup, p: int) -> int:
    """Smallest n >= 1 with the level-n category equal to the Quillen one."""
    quillen = quillen_category(group, p)
    n = 1
    while True:
        if build_category(group, p, n).equals(quillen):
            return n
        n += 1


@dataclass
class HomChainReport:
    p_rank: int
    stabilization_rank: int
    strict: dict  # level n -> True iff A^(n) strictly contains A^(n+1)

    def to_dict(self) -> dict:
        return {
            "p_rank": self.p_rank,
            "stabilization_rank": self.stabilization_rank,
            "strict": {str(k): v for k, v in sorted(self.strict.items())},
        }


def hom_chain_report(group: FiniteGroup, p: int) -> HomChainReport:
    objects = enumerate_elem_abelians(group, p)
    rank = max(v.rank for v in objects)
    cats = {n: build_category(group, p, n) for n in range(1, rank + 2)}
    strict = {
        n: not cats[n].equals(cats[n + 1]) for n in range(1, rank + 1)
    }
    quillen = quillen_category(group, p)
    stab = next(
        (n for n in range(1, rank + 2) if cats[n].equals(quillen)), rank + 1
    )
    return HomChainReport(p_rank=rank, stabilization_rank=stab, strict=strict)


def witness_scan(
    library: Sequence[tuple], p: int, n: int, order_cap: int = 2048
) -> dict:
    """Scan (name, group) pairs for A^(n) != A^(n+1); reports what was found.

    Groups over the order cap are skipped with a warning entry.  Absence of a
    witness in the library proves nothing beyond the library itself.
    """
    found = []
    skipped = []
    checked = []
    for name, group in library:
        if group.order > order_cap:
            skipped.append({"name": name, "order": group.order})
            continue
        strict = not build_category(group, p, n).equals(
            build_category(group, p, n + 1)
        )
        checked.append({"name": name, "order": group.order, "strict": strict})
        if strict:
            found.append(name)
    return {"p": p, "n": n, "found": found, "checked": checked, "skipped": skipped}
