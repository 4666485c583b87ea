from __future__ import annotations

import itertools

import pytest

from chromcat import (
    GF,
    colim_points,
    component_count,
    enumerate_elem_abelians,
    filtration_tower,
    fq_points,
    quillen_category,
)
from chromcat.fqfield import FqError
from conftest import category, group
from oracles import colim_size_naive


def test_field_tables():
    for p, m in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)]:
        field = GF(p, m)
        elems = field.elements
        assert len(elems) == p ** m
        # field axioms on the full multiplication table
        for a in elems:
            assert field.add(a, field.zero) == a
            assert field.mul(a, field.one) == a
            if a != field.zero:
                assert field.mul(a, field.inverse(a)) == field.one
        for a, b in itertools.product(elems, repeat=2):
            assert field.mul(a, b) == field.mul(b, a)
        # no zero divisors
        nonzero = [a for a in elems if a != field.zero]
        for a, b in itertools.product(nonzero, repeat=2):
            assert field.mul(a, b) != field.zero


def test_q_must_be_power_of_p():
    with pytest.raises(FqError):
        GF.of_size(6, 2)
    with pytest.raises(FqError):
        GF.of_size(9, 2)


def test_fq_point_counts():
    subs = enumerate_elem_abelians(group("a4"), 2)
    assert len(fq_points(subs[0], 2)) == 1
    assert len(fq_points(subs[1], 2)) == 2
    assert len(fq_points(subs[4], 4)) == 16


def test_a4_colim_counts():
    q_cat = category("a4", 2, None)
    c1 = category("a4", 2, 1)
    assert colim_points(q_cat, 4).size == 6
    assert colim_points(c1, 4).size == 5
    assert colim_points(q_cat, 2).size == 2
    assert colim_points(c1, 2).size == 2
    assert colim_points(category("c1", 2, None), 2).size == 1


@pytest.mark.parametrize("name,p,q", [
    ("a4", 2, 4), ("a4", 2, 2), ("d8", 2, 2), ("d8", 2, 4),
    ("s3", 3, 3), ("e9", 3, 9), ("q8", 2, 4),
])
def test_union_find_matches_naive_closure(name, p, q):
    for level in (1, None):
        cat = category(name, p, level)
        assert colim_points(cat, q).size == colim_size_naive(cat, q)


def test_tower_a4():
    tower = filtration_tower(group("a4"), 2, 4)
    assert [n for n, _ in tower.levels] == [2, 1]
    assert tower.sizes() == [6, 5]
    assert len(tower.surjections) == 1
    mapping = tower.surjections[0]
    assert set(mapping) == set(range(5))  # surjective onto level-1 classes
    assert filtration_tower(group("a4"), 2, 2).sizes() == [2, 2]


def test_tower_top_matches_quillen():
    for name, p, q in [("a4", 2, 4), ("d8", 2, 4), ("s4", 2, 4), ("e9", 3, 3)]:
        tower = filtration_tower(group(name), p, q)
        top = tower.levels[0][1].size
        assert top == colim_points(quillen_category(group(name), p), q).size


def test_tower_rank_one_group():
    tower = filtration_tower(group("q8"), 2, 4)
    assert len(tower.levels) == 1
    assert tower.surjections == []


def test_monotone_in_level():
    for name, p, q in [("a4", 2, 4), ("s4", 2, 4), ("x32", 2, 4)]:
        sizes = filtration_tower(group(name), p, q).sizes()
        assert sizes == sorted(sizes, reverse=True)


def test_relation_closure_idempotent():
    # duplicating morphisms (here: adding a subcategory's morphisms back in)
    # cannot change the quotient
    from chromcat.categories import ChromCategory

    base = category("a4", 2, 1)
    doubled = ChromCategory(
        base.group,
        base.p,
        base.level,
        base.kind,
        base.objects,
        {key: fs + fs for key, fs in base.homs.items()},
        base.witnesses,
    )
    for q in (2, 4):
        assert colim_points(base, q).size == colim_points(doubled, q).size


def test_component_counts():
    assert component_count(category("a4", 2, None)) == 1
    assert component_count(category("a4", 2, 1)) == 1
    assert component_count(category("k4", 2, None)) == 1
    # D8 has two non-conjugate Klein four subgroups
    assert component_count(category("d8", 2, None)) == 2
    # A5's five Klein fours are all conjugate: one class of maximal objects
    assert component_count(category("a5", 2, None)) == 1
    assert component_count(category("s4", 2, None)) == 2


def test_rank2_orbits_stay_separate():
    # nonzero rank-2 points in different Weyl orbits are not merged
    res = colim_points(category("a4", 2, None), 4)
    field = GF(2, 2)
    pts = fq_points(category("a4", 2, None).objects[4], 4)
    # (1,0) scaled by the two primitive field elements lands in the same
    # C_3-orbit class only when the Weyl action carries one to the other
    classes = {}
    offset = sum(res.object_counts[:4])
    for k, pt in enumerate(pts):
        classes.setdefault(res.node_class[offset + k], []).append(pt)
    sizes = sorted(len(v) for v in classes.values())
    assert sum(sizes) == 16
    assert len(classes) == 6  # zero class plus five orbits of size 3
