"""Executable property suites.

Each suite returns a list of named checks with a pass flag and witnessing
detail; the CLI maps any failure to a non-zero exit.  Suite names follow
the command-line interface (theoremA, theoremB, theoremC, lemmas); the
individual checks are named by the property they exercise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .errors import GateError, TheoremViolation, UsageError
from .green import GreenEngine
from .modcat import DEFAULT_SUBSET_GATE, ModuleCategory, ModuleSum
from . import orders as orders_mod

SUITES = ("theoremA", "theoremB", "theoremC", "lemmas", "all")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check": self.name, "passed": self.passed, "detail": self.detail}


def build_posets(engine: GreenEngine, include_brick: bool) -> dict[str, orders_mod.ClassPoset]:
    tags = ["pentagon", "summand", "hn"]
    if include_brick:
        tags.append("brick")
    return {tag: orders_mod.build_order(tag, engine) for tag in tags}


# -- theorem A ---------------------------------------------------------------

def suite_theorem_a(cat: ModuleCategory, engine: GreenEngine) -> list[CheckResult]:
    try:
        classes = engine.equivalence_classes()
        return [CheckResult(
            "equivalence-criteria-agree", True,
            {"sequences": len(engine.enumerate_mgs()), "classes": len(classes)})]
    except TheoremViolation as exc:
        return [CheckResult("equivalence-criteria-agree", False,
                            {"witness": str(exc)})]


# -- theorem B ---------------------------------------------------------------

def suite_theorem_b(cat: ModuleCategory, engine: GreenEngine) -> list[CheckResult]:
    checks: list[CheckResult] = []
    classes = engine.equivalence_classes()
    posets = build_posets(engine, include_brick=False)
    pent = posets["pentagon"].relation_pairs()
    for tag in ("summand", "hn"):
        extra = sorted(pent - posets[tag].relation_pairs())
        checks.append(CheckResult(
            f"deformation-order-contained-in-{tag}-order", not extra,
            {"violations": extra}))

    hn_pairs = posets["hn"].relation_pairs()
    bad = []
    for lo, hi in hn_pairs:
        blo = set(classes[lo].representative.bricks)
        bhi = set(classes[hi].representative.bricks)
        if not blo >= bhi or (lo != hi and not blo > bhi):
            bad.append([lo, hi])
    checks.append(CheckResult("hn-order-implies-strict-brick-containment",
                              not bad, {"violations": bad}))

    bad = []
    for lo, hi in posets["pentagon"].relation_pairs():
        if len(classes[lo].representative.bricks) <= len(classes[hi].representative.bricks):
            bad.append([lo, hi])
    checks.append(CheckResult("deformation-strictly-shortens-length",
                              not bad, {"violations": bad}))

    unoriented = [p for p in orders_mod.polygon_deformation_pairs(engine)
                  if min(p["sides"]) >= 3]
    bad = []
    for p in unoriented:
        c1 = engine.class_of(p["first"])
        c2 = engine.class_of(p["second"])
        for tag, poset in posets.items():
            if poset.leq[c1][c2] or poset.leq[c2][c1]:
                bad.append({"pair": [c1, c2], "order": tag})
    checks.append(CheckResult("unoriented-polygon-sides-incomparable",
                              not bad,
                              {"polygons": len(unoriented), "violations": bad}))

    persistence = orders_mod.exchange_persistence(engine, posets["pentagon"])
    checks.append(CheckResult("exchange-pairs-persist-downward",
                              persistence["passed"],
                              {"failures": persistence["failures"]}))

    extrema = orders_mod.check_extrema(cat, engine, posets)
    if extrema.get("applicable"):
        checks.append(CheckResult("extrema-unique-max-and-min",
                                  extrema["passed"], {"checks": extrema["checks"]}))
    else:
        checks.append(CheckResult("extrema-unique-max-and-min", True,
                                  {"skipped": extrema["notice"]}))

    if cat.n == 2:
        # with two simples, the three orders coincide and agree with
        # reverse brick containment
        report = orders_mod.orders_equal_report(list(posets.values()))
        ok = report["equal"]
        for lo in range(len(classes)):
            for hi in range(len(classes)):
                blo = set(classes[lo].representative.bricks)
                bhi = set(classes[hi].representative.bricks)
                if posets["pentagon"].leq[lo][hi] != (blo >= bhi):
                    ok = False
        checks.append(CheckResult("two-simples-orders-all-coincide", ok,
                                  {"differences": report["differences"]}))
    return checks


# -- theorem C ----------------------------------------------------------------

def suite_theorem_c(cat: ModuleCategory, engine: GreenEngine) -> list[CheckResult]:
    if not cat.spec.is_nakayama:
        raise UsageError("theoremC applies to Nakayama algebras only")
    checks: list[CheckResult] = []
    posets = build_posets(engine, include_brick=True)
    report = orders_mod.orders_equal_report(list(posets.values()))
    checks.append(CheckResult("four-order-relations-equal", report["equal"],
                              {"differences": report["differences"]}))
    classes = engine.equivalence_classes()
    all_mgs = engine.enumerate_mgs()
    by_brickset: dict[frozenset, set[int]] = {}
    for k, g in enumerate(all_mgs):
        by_brickset.setdefault(frozenset(g.bricks), set()).add(engine.class_of(k))
    bad = [sorted(v) for v in by_brickset.values() if len(v) != 1]
    checks.append(CheckResult("equal-brick-sets-imply-equivalence", not bad,
                              {"violations": bad, "brick_sets": len(by_brickset),
                               "classes": len(classes)}))
    return checks


# -- lemma battery ---------------------------------------------------------------

def suite_lemmas(cat: ModuleCategory, engine: GreenEngine,
                 subset_gate: int = DEFAULT_SUBSET_GATE) -> list[CheckResult]:
    checks: list[CheckResult] = []
    all_mgs = engine.enumerate_mgs()
    bricks = cat.bricks

    # Non-split extensions of doubly hom-orthogonal bricks are bricks.
    bad = []
    for l, n in combinations(bricks, 2):
        if cat.hom(l, n) or cat.hom(n, l):
            continue
        for pair in ((l, n), (n, l)):
            for e in range(len(cat.catalog)):
                for rec in cat.sub_quotient_pairs(e):
                    if rec.sub.ids == (pair[0],) and rec.quot.ids == (pair[1],):
                        if not cat.is_brick(e):
                            bad.append(cat.display(e))
    checks.append(CheckResult("extension-of-orthogonal-bricks-is-brick",
                              not bad, {"violations": bad}))

    # Hom-vanishing forward forces Ext-vanishing backward on adjacent bricks.
    bad = []
    for g in all_mgs:
        for a, b in zip(g.bricks, g.bricks[1:]):
            if cat.hom(a, b) == 0 and cat.ext1(b, a) != 0:
                bad.append([cat.display(a), cat.display(b)])
    checks.append(CheckResult("adjacent-hom-vanishing-forces-ext-vanishing",
                              not bad, {"violations": bad}))

    bad = []
    for g in all_mgs:
        if not (cat.is_simple(g.bricks[0]) and cat.is_simple(g.bricks[-1])):
            bad.append([cat.display(b) for b in g.bricks])
    checks.append(CheckResult("first-and-last-brick-simple", not bad,
                              {"violations": bad}))

    bad = []
    for g in all_mgs:
        seen: set[int] = set()
        for tors in engine.torsion_chain(g):
            seen |= cat.relative_simples(tors)
        if seen != set(g.bricks):
            bad.append([cat.display(b) for b in g.bricks])
    checks.append(CheckResult("chain-relative-simples-equal-brick-set",
                              not bad, {"violations": bad}))

    bad = []
    for g in all_mgs:
        pairs = engine.exchange_pairs(g)
        outs = [p.out for p in pairs]
        ins = [p.in_ for p in pairs]
        if len(set(outs)) != len(outs) or len(set(ins)) != len(ins):
            bad.append([cat.display(b) for b in g.bricks])
    checks.append(CheckResult("exchange-components-never-repeat", not bad,
                              {"violations": bad}))

    bad = []
    for g in all_mgs:
        summ = engine.summand_set(g)
        mods = [s for s in summ if not s.shifted]
        if len(summ) != cat.n + len(g.bricks) or len(mods) != len(g.bricks):
            bad.append([cat.display(b) for b in g.bricks])
    checks.append(CheckResult("summand-count-is-n-plus-length", not bad,
                              {"violations": bad}))

    # exhaustive over module pairs; one representative per class suffices
    # since stable factors are class invariants (checked further down)
    bad = []
    for cls in engine.equivalence_classes():
        g = cls.representative
        for x in range(len(cat.catalog)):
            for y in range(x, len(cat.catalog)):
                lhs = engine.stable_factors(ModuleSum((x, y)), g)
                rhs = engine.stable_factors(x, g) + engine.stable_factors(y, g)
                if lhs != rhs:
                    bad.append({"mgs": [cat.display(b) for b in g.bricks],
                                "pair": [cat.display(x), cat.display(y)]})
    checks.append(CheckResult("hn-stable-factors-additive-over-sums",
                              not bad, {"violations": bad}))

    try:
        lattice = cat.torsion_lattice(subset_gate)
        degree = Counter()
        for up, lo, _ in lattice.covers:
            degree[up] += 1
            degree[lo] += 1
        bad = [i for i in range(len(lattice.classes)) if degree[i] != cat.n]
        checks.append(CheckResult("torsion-lattice-degree-n-regular", not bad,
                                  {"violations": bad,
                                   "classes": len(lattice.classes)}))
        count = lattice.maximal_chain_count()
        checks.append(CheckResult("mgs-count-matches-lattice-chains",
                                  count == len(all_mgs),
                                  {"chains": count, "sequences": len(all_mgs)}))
        bad = []
        for g in all_mgs:
            chain = engine.torsion_chain(g)
            for pos, (up, lo) in enumerate(zip(chain, chain[1:]), start=1):
                ui = lattice.index_of(up.members)
                li = lattice.index_of(lo.members)
                labelled = dict(lattice.covers_of(ui))
                if labelled.get(li) != g.bricks[pos - 1]:
                    bad.append({"mgs": [cat.display(b) for b in g.bricks],
                                "position": pos})
        checks.append(CheckResult("chain-steps-are-labelled-lattice-covers",
                                  not bad, {"violations": bad}))
        checks.append(_filt_interval_check(cat, lattice))
    except GateError as exc:
        checks.append(CheckResult("torsion-lattice-degree-n-regular", True,
                                  {"skipped": str(exc)}))

    bad = []
    for a in range(len(cat.catalog)):
        for b in range(len(cat.catalog)):
            if cat.ext1(a, b) != cat.ext1_presentation(a, b):
                bad.append([cat.display(a), cat.display(b)])
    checks.append(CheckResult("ext-formula-matches-presentation-oracle",
                              not bad, {"violations": bad}))

    bad = []
    for g in all_mgs:
        for i in range(1, len(g.bricks)):
            swapped = engine.square_swap(g, i)
            if swapped is None:
                continue
            same = (engine.summand_set(g) == engine.summand_set(swapped)
                    and set(engine.exchange_pairs(g))
                    == set(engine.exchange_pairs(swapped))
                    and engine.sff_key(g) == engine.sff_key(swapped))
            if not same:
                bad.append({"mgs": [cat.display(b) for b in g.bricks],
                            "position": i})
    checks.append(CheckResult("square-swaps-preserve-class-invariants",
                              not bad, {"violations": bad}))

    if cat.spec.is_nakayama:
        checks.append(_unique_filtration_check(cat))
        bad = []
        for g in all_mgs:
            if not orders_mod.verify_phi(cat, engine, g):
                bad.append([cat.display(b) for b in g.bricks])
        checks.append(CheckResult("socle-quotient-matches-summand-modules",
                                  not bad, {"violations": bad}))
    else:
        bad = [[cat.display(a), cat.display(b)]
               for a in range(len(cat.catalog))
               for b in range(len(cat.catalog))
               if cat.hom(a, b) > 1]
        checks.append(CheckResult("interval-hom-dimensions-at-most-one",
                                  not bad, {"violations": bad}))
        checks.append(_representation_directed_check(cat))
    return checks


def _filt_interval_check(cat: ModuleCategory, lattice) -> CheckResult:
    # Filtration category of the labels along any maximal chain between two
    # comparable classes equals the hom-perpendicular interval.
    if len(lattice.classes) > 20:
        return CheckResult("interval-equals-filtration-of-chain-labels", True,
                           {"skipped": f"{len(lattice.classes)} classes"})
    bad = []
    for ui, upper in enumerate(lattice.classes):
        for li, lower in enumerate(lattice.classes):
            if ui == li or not lower < upper:
                continue
            expected = cat.interval_members(upper, lower)
            for chain in lattice.maximal_chains(start=ui, end=li):
                labels = frozenset(lab for _, lab in chain)
                got = cat.filt_indecs(labels)
                if got != expected:
                    bad.append({"upper": sorted(upper), "lower": sorted(lower)})
    return CheckResult("interval-equals-filtration-of-chain-labels",
                       not bad, {"violations": bad})


def _unique_filtration_check(cat: ModuleCategory) -> CheckResult:
    # Over a Nakayama algebra, a module filtered by pairwise hom-orthogonal
    # bricks admits exactly one factor sequence.
    bricks = cat.bricks

    def count_filtrations(x: int, brickset: frozenset[int]) -> int:
        total = 1 if x in brickset else 0
        for rec in cat.sub_quotient_pairs(x):
            if len(rec.quot.ids) == 1 and rec.quot.ids[0] in brickset:
                total += count_filtrations(rec.sub.ids[0], brickset)
        return total

    bad = []
    for r in range(1, len(bricks) + 1):
        for combo in combinations(bricks, r):
            if any(cat.hom(a, b) or cat.hom(b, a)
                   for a, b in combinations(combo, 2)):
                continue
            for x in range(len(cat.catalog)):
                if count_filtrations(x, frozenset(combo)) > 1:
                    bad.append({"module": cat.display(x),
                                "bricks": [cat.display(b) for b in combo]})
    return CheckResult("orthogonal-brick-filtrations-unique", not bad,
                       {"violations": bad})


def _representation_directed_check(cat: ModuleCategory) -> CheckResult:
    # No cycle of non-zero non-isomorphisms among the indecomposables.
    size = len(cat.catalog)
    adj = {a: [b for b in range(size) if a != b and cat.hom(a, b)]
           for a in range(size)}
    state = {a: 0 for a in range(size)}
    cycle = []

    def visit(a: int) -> bool:
        state[a] = 1
        for b in adj[a]:
            if state[b] == 1 or (state[b] == 0 and visit(b)):
                cycle.append(cat.display(a))
                return True
        state[a] = 2
        return False

    has_cycle = any(state[a] == 0 and visit(a) for a in range(size))
    return CheckResult("hom-relation-is-representation-directed",
                       not has_cycle, {"cycle": cycle})


def run_suite(name: str, cat: ModuleCategory, engine: GreenEngine,
              subset_gate: int = DEFAULT_SUBSET_GATE) -> list[CheckResult]:
    if name == "theoremA":
        return suite_theorem_a(cat, engine)
    if name == "theoremB":
        return suite_theorem_b(cat, engine)
    if name == "theoremC":
        return suite_theorem_c(cat, engine)
    if name == "lemmas":
        return suite_lemmas(cat, engine, subset_gate)
    if name == "all":
        out = suite_theorem_a(cat, engine) + suite_theorem_b(cat, engine)
        if cat.spec.is_nakayama:
            out += suite_theorem_c(cat, engine)
        out += suite_lemmas(cat, engine, subset_gate)
        return out
    raise UsageError(f"unknown suite {name!r}; pick one of {SUITES}")
