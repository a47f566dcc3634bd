"""Partial orders on equivalence classes: deformation, summand, HN, brick."""

import pytest

from greenseq import AlgebraSpec
from greenseq.errors import UsageError
from greenseq.green import MGS
from greenseq.orders import (build_order, check_extrema, exchange_persistence,
                             hasse_dot, iepd_cover_pairs, orders_equal_report,
                             polygon_deformation_pairs, verify_phi)

from conftest import category_for, engine_for, ids_of


def class_of_names(cat, engine, names):
    return engine.class_of(engine.index_of(ids_of(cat, names)))


# -- increasing elementary polygonal deformations ---------------------------

def test_a2_single_cover(a2_cat, a2_engine):
    pairs = iepd_cover_pairs(a2_engine)
    long_cls = class_of_names(a2_cat, a2_engine, ["2", "12", "1"])
    short_cls = class_of_names(a2_cat, a2_engine, ["1", "2"])
    assert pairs == frozenset({(long_cls, short_cls)})


def test_example_pentagon_cover(example_cat, example_engine):
    pairs = iepd_cover_pairs(example_engine)
    long_cls = class_of_names(example_cat, example_engine, ["3", "2", "12", "1"])
    short_cls = class_of_names(example_cat, example_engine, ["3", "1", "2"])
    assert (long_cls, short_cls) in pairs


def test_squares_are_not_deformation_covers(example_cat, example_engine):
    # adjacent swaps (gap one) never contribute: all recorded pairs change
    # the class and drop at least one brick
    for lo, hi in iepd_cover_pairs(example_engine):
        classes = example_engine.equivalence_classes()
        assert len(classes[lo].representative.bricks) \
            > len(classes[hi].representative.bricks)


# -- the three orders ----------------------------------------------------------

def test_example_orders_coincide(example_engine):
    posets = [build_order(tag, example_engine)
              for tag in ("pentagon", "summand", "hn")]
    report = orders_equal_report(posets)
    assert report["equal"], report["differences"]


def test_example_poset_cover_profile(example_cat, example_engine):
    poset = build_order("summand", example_engine)
    classes = example_engine.equivalence_classes()
    assert poset.size == 6
    assert len(poset.covers) == 6
    sizes = {i: len(c.key) for i, c in enumerate(classes)}
    cover_profile = sorted((sizes[up], sizes[lo]) for up, lo in poset.covers)
    # max(6) covers the two 7s, each 7 covers an 8, each 8 covers the min(9)
    assert cover_profile == [(6, 7), (6, 7), (7, 8), (7, 8), (8, 9), (8, 9)]


def test_named_sequences_incomparable(example_cat, example_engine):
    poset = build_order("hn", example_engine)
    c1 = class_of_names(example_cat, example_engine, ["2", "12", "1", "32", "3"])
    c2 = class_of_names(example_cat, example_engine, ["2", "32", "3", "12", "1"])
    assert not poset.leq[c1][c2]
    assert not poset.leq[c2][c1]


def test_a2_long_below_short_everywhere(a2_cat, a2_engine):
    lo = class_of_names(a2_cat, a2_engine, ["2", "12", "1"])
    hi = class_of_names(a2_cat, a2_engine, ["1", "2"])
    for tag in ("pentagon", "summand", "hn"):
        poset = build_order(tag, a2_engine)
        assert poset.leq[lo][hi]
        assert not poset.leq[hi][lo]


def test_pentagon_contained_in_others(example_engine):
    pent = build_order("pentagon", example_engine).relation_pairs()
    for tag in ("summand", "hn"):
        assert pent <= build_order(tag, example_engine).relation_pairs()


def test_brick_order_refused_off_nakayama(example_engine):
    with pytest.raises(UsageError, match="antisymmetry"):
        build_order("brick", example_engine)


def test_brick_order_on_nakayama():
    spec = AlgebraSpec.nakayama([3, 2, 1])
    eng = engine_for(spec)
    posets = [build_order(tag, eng)
              for tag in ("pentagon", "summand", "hn", "brick")]
    assert orders_equal_report(posets)["equal"]


def test_hn_implies_brick_containment(example_engine):
    classes = example_engine.equivalence_classes()
    poset = build_order("hn", example_engine)
    for lo, hi in poset.relation_pairs():
        blo = set(classes[lo].representative.bricks)
        bhi = set(classes[hi].representative.bricks)
        assert blo > bhi


# -- socle-quotient correspondence ------------------------------------------------

def test_phi_trivial_on_simples_sequence():
    spec = AlgebraSpec.nakayama([2, 1])
    cat, eng = category_for(spec), engine_for(spec)
    assert verify_phi(cat, eng, MGS(ids_of(cat, ["1", "2"])))


def test_phi_on_long_a2():
    spec = AlgebraSpec.nakayama([2, 1])
    cat, eng = category_for(spec), engine_for(spec)
    g = MGS(ids_of(cat, ["2", "12", "1"]))
    assert verify_phi(cat, eng, g)
    # the unique non-projective summand module is the socle quotient of 12
    summ = eng.summand_set(g)
    mods = {s.value for s in summ if not s.shifted} - set(cat.projectives)
    assert {cat.display(x) for x in mods} == {"1"}


def test_phi_exhaustive_linear_a3():
    spec = AlgebraSpec.nakayama([3, 2, 1])
    cat, eng = category_for(spec), engine_for(spec)
    for g in eng.enumerate_mgs():
        assert verify_phi(cat, eng, g)


def test_phi_refused_off_nakayama(example_cat, example_engine):
    g = MGS(ids_of(example_cat, ["1", "3", "2"]))
    with pytest.raises(UsageError):
        verify_phi(example_cat, example_engine, g)


# -- extrema --------------------------------------------------------------------------

def _posets(engine):
    return {tag: build_order(tag, engine) for tag in ("pentagon", "summand", "hn")}


def test_example_extrema(example_cat, example_engine):
    report = check_extrema(example_cat, example_engine, _posets(example_engine))
    assert report["applicable"] and report["passed"], report
    classes = example_engine.equivalence_classes()
    mx = class_of_names(example_cat, example_engine, ["1", "3", "2"])
    assert len(classes[mx].key) == 6  # projectives and shifts only
    mn = class_of_names(example_cat, example_engine,
                        ["2", "12", "32", "132", "1", "3"])
    assert len(classes[mn].key) == 9  # every summand


def test_a2_extrema(a2_cat, a2_engine):
    report = check_extrema(a2_cat, a2_engine, _posets(a2_engine))
    assert report["applicable"] and report["passed"]


def test_extrema_skipped_on_cyclic():
    spec = AlgebraSpec.nakayama([2, 2], cyclic=True)
    cat, eng = category_for(spec), engine_for(spec)
    report = check_extrema(cat, eng, _posets(eng))
    assert report["applicable"] is False
    assert "skipped" in report["notice"]


# -- exchange persistence ----------------------------------------------------------------

def test_exchange_persistence_example(example_engine):
    pent = build_order("pentagon", example_engine)
    assert exchange_persistence(example_engine, pent)["passed"]


def test_exchange_persistence_a2(a2_engine):
    pent = build_order("pentagon", a2_engine)
    assert exchange_persistence(a2_engine, pent)["passed"]


# -- unoriented polygons ----------------------------------------------------------------

def test_cyclic_2_2_is_an_unoriented_polygon():
    spec = AlgebraSpec.nakayama([2, 2], cyclic=True)
    cat, eng = category_for(spec), engine_for(spec)
    pairs = polygon_deformation_pairs(eng)
    assert len(pairs) == 1
    assert sorted(pairs[0]["sides"]) == [3, 3]
    posets = _posets(eng)
    c1 = eng.class_of(pairs[0]["first"])
    c2 = eng.class_of(pairs[0]["second"])
    for poset in posets.values():
        assert not poset.leq[c1][c2]
        assert not poset.leq[c2][c1]


def test_example_polygon_sides(example_engine):
    # every detected polygon deformation over the three-vertex quiver is a
    # square (2,2) or pentagon-like (2,k); no unoriented ones
    for p in polygon_deformation_pairs(example_engine):
        assert min(p["sides"]) == 2


# -- DOT emission ------------------------------------------------------------------------

def test_dot_byte_identical_across_equal_orders(example_engine):
    dot_s = hasse_dot(build_order("summand", example_engine), example_engine)
    dot_h = hasse_dot(build_order("hn", example_engine), example_engine)
    assert dot_s == dot_h
    assert dot_s.count("->") == 6
    assert dot_s.count("label=") == 6


def test_dot_arrow_direction(a2_cat, a2_engine):
    # arrows run from the covering (shorter) class down to the covered one
    dot = hasse_dot(build_order("summand", a2_engine), a2_engine)
    hi = class_of_names(a2_cat, a2_engine, ["1", "2"])
    lo = class_of_names(a2_cat, a2_engine, ["2", "12", "1"])
    assert f"c{hi} -> c{lo};" in dot
