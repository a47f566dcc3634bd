"""Type-A backend: interval catalogs, submodule supports, hereditary checks."""

import pytest

from greenseq import AlgebraSpec

from conftest import category_for, type_a_battery


def test_one_vertex():
    cat = category_for(AlgebraSpec.type_a(""))
    assert len(cat.catalog) == 1
    assert cat.catalog[0].display == "1"


def test_example_quiver_catalog(example_cat):
    assert len(example_cat.catalog) == 6
    assert sorted(m.display for m in example_cat.indecomposables()) == [
        "1", "12", "132", "2", "3", "32"]


@pytest.mark.parametrize("word", ["<<<", "<><", ">>>", "><>"])
def test_interval_count_n4(word):
    cat = category_for(AlgebraSpec.type_a(word))
    assert len(cat.catalog) == 10


def test_submodule_supports_full_interval(example_cat):
    # Over 1<-2->3, submodules of the big module are spanned below: the
    # socle vertex 2 and the two length-two wings.
    m = example_cat.resolve_token("132")
    supports = example_cat.backend.submodule_supports(m)
    assert supports == [frozenset(), frozenset({2}), frozenset({1, 2}),
                        frozenset({2, 3}), frozenset({1, 2, 3})]


def test_submodule_supports_simple(example_cat):
    s = example_cat.resolve_token("2")
    assert example_cat.backend.submodule_supports(s) == [frozenset(), frozenset({2})]


def test_submodule_supports_linear_arrow():
    cat = category_for(AlgebraSpec.type_a(">"))
    # arrow 1 -> 2: the module "21" has top 2 and socle 1
    m = cat.resolve_token("21")
    assert cat.backend.submodule_supports(m) == [
        frozenset(), frozenset({1}), frozenset({1, 2})]


def test_full_interval_records(example_cat):
    m = example_cat.resolve_token("132")
    recs = {(example_cat.display_sum(r.sub), example_cat.display_sum(r.quot))
            for r in example_cat.sub_quotient_pairs(m)}
    assert recs == {("2", "1+3"), ("12", "3"), ("32", "1")}


def test_projective_covers(example_cat):
    backend = example_cat.backend
    m = example_cat.resolve_token("132")
    p0, omega = backend.projective_cover(m)
    assert sorted(example_cat.display(p) for p in p0) == ["12", "32"]
    assert [example_cat.display(o) for o in omega] == ["2"]
    proj = example_cat.resolve_token("12")
    assert backend.projective_cover(proj) == ((proj,), ())


@pytest.mark.parametrize("spec", type_a_battery(), ids=lambda s: s.label())
def test_hom_dims_zero_or_one(spec):
    cat = category_for(spec)
    size = len(cat.catalog)
    for a in range(size):
        for b in range(size):
            assert cat.hom(a, b) in (0, 1)


@pytest.mark.parametrize("spec", type_a_battery(), ids=lambda s: s.label())
def test_euler_formula_matches_presentation(spec):
    cat = category_for(spec)
    size = len(cat.catalog)
    for a in range(size):
        for b in range(size):
            assert cat.ext1(a, b) == cat.ext1_presentation(a, b)


@pytest.mark.parametrize("spec", type_a_battery(), ids=lambda s: s.label())
def test_representation_directed(spec):
    # no cycle of non-zero non-isomorphisms through the hom relation
    cat = category_for(spec)
    size = len(cat.catalog)
    adj = {a: [b for b in range(size) if a != b and cat.hom(a, b)]
           for a in range(size)}
    state = dict.fromkeys(range(size), 0)

    def visit(a):
        state[a] = 1
        for b in adj[a]:
            assert state[b] != 1
            if state[b] == 0:
                visit(b)
        state[a] = 2

    for a in range(size):
        if state[a] == 0:
            visit(a)


def test_all_intervals_are_bricks(example_cat):
    assert example_cat.bricks == tuple(range(6))
