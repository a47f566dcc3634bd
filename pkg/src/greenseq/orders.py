"""Partial orders on equivalence classes of maximal green sequences.

Three orders exist for every algebra: the deformation (pentagon) order
generated by increasing elementary polygonal deformations, reverse
inclusion of silting summand sets, and refinement of Harder-Narasimhan
stable factors.  Reverse inclusion of brick sets is a fourth order that
is only antisymmetric over Nakayama algebras, so it is refused elsewhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InvariantViolation, UsageError
from .green import GreenEngine, MGS, SiltingSummand
from .modcat import ModuleCategory

ORDER_TAGS = ("pentagon", "summand", "hn", "brick")

BRICK_ORDER_REFUSAL = (
    "the brick order is only defined over Nakayama algebras: over the "
    "quiver 1<-2->3 the sequences 2,12,1,32,3 and 2,32,3,12,1 have equal "
    "brick sets but are inequivalent, so reverse brick inclusion fails "
    "antisymmetry"
)


@dataclass(frozen=True)
class ClassPoset:
    tag: str
    size: int
    leq: tuple[tuple[bool, ...], ...]
    covers: tuple[tuple[int, int], ...]  # (greater, lesser)

    def relation_pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i in range(self.size)
                         for j in range(self.size)
                         if i != j and self.leq[i][j])


def iepd_cover_pairs(engine: GreenEngine) -> frozenset[tuple[int, int]]:
    """Class pairs (long, short) related by an increasing elementary
    polygonal deformation: drop the strictly-between bricks of a valid
    pattern and swap its endpoints."""
    all_mgs = engine.enumerate_mgs()
    engine.equivalence_classes()
    pairs = set()
    for k, g in enumerate(all_mgs):
        r = len(g.bricks)
        for p in range(r):
            for q in range(p + 2, r):
                seq = g.bricks[:p] + (g.bricks[q], g.bricks[p]) + g.bricks[q + 1:]
                if engine.is_valid_mgs(seq):
                    j = engine.index_of(seq)
                    lo, hi = engine.class_of(k), engine.class_of(j)
                    if lo == hi:
                        raise InvariantViolation(
                            "polygonal deformation did not change the class")
                    pairs.add((lo, hi))
    return frozenset(pairs)


def _transitive_reflexive_closure(size: int, pairs) -> list[list[bool]]:
    leq = [[i == j for j in range(size)] for i in range(size)]
    for i, j in pairs:
        leq[i][j] = True
    for k in range(size):
        for i in range(size):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(size):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def _check_partial_order(tag: str, leq: list[list[bool]]) -> None:
    size = len(leq)
    for i in range(size):
        if not leq[i][i]:
            raise InvariantViolation(f"{tag} order is not reflexive at {i}")
        for j in range(size):
            if i != j and leq[i][j] and leq[j][i]:
                raise InvariantViolation(
                    f"{tag} order fails antisymmetry on classes {i}, {j}")
            for k in range(size):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    raise InvariantViolation(
                        f"{tag} order fails transitivity on {i}, {j}, {k}")


def _covers_from_leq(leq) -> tuple[tuple[int, int], ...]:
    size = len(leq)
    covers = []
    for i in range(size):
        for j in range(size):
            if i == j or not leq[i][j]:
                continue
            if not any(k != i and k != j and leq[i][k] and leq[k][j]
                       for k in range(size)):
                covers.append((j, i))  # greater -> lesser
    return tuple(sorted(covers))


def _hn_leq(engine: GreenEngine, rep_lo: MGS, rep_hi: MGS) -> bool:
    """Do the rep_hi stable factors refine the rep_lo ones on every
    indecomposable?"""
    f_lo = engine.stable_factor_function(rep_lo)
    f_hi = engine.stable_factor_function(rep_hi)
    for x in range(len(engine.cat.catalog)):
        expected: Counter = Counter()
        for brick, mult in f_lo[x]:
            for b2, m2 in f_hi[brick]:
                expected[b2] += mult * m2
        if Counter(dict(f_hi[x])) != expected:
            return False
    return True


def build_order(tag: str, engine: GreenEngine) -> ClassPoset:
    classes = engine.equivalence_classes()
    size = len(classes)
    if tag == "pentagon":
        leq = _transitive_reflexive_closure(size, iepd_cover_pairs(engine))
    elif tag == "summand":
        keys = [frozenset(c.key) for c in classes]
        leq = [[keys[i] >= keys[j] for j in range(size)] for i in range(size)]
    elif tag == "hn":
        leq = [[i == j or _hn_leq(engine, classes[i].representative,
                                  classes[j].representative)
                for j in range(size)] for i in range(size)]
    elif tag == "brick":
        if not engine.cat.spec.is_nakayama:
            raise UsageError(BRICK_ORDER_REFUSAL)
        bricksets = [frozenset(c.representative.bricks) for c in classes]
        leq = [[bricksets[i] >= bricksets[j] for j in range(size)]
               for i in range(size)]
    else:
        raise UsageError(f"unknown order tag {tag!r}; pick one of {ORDER_TAGS}")
    _check_partial_order(tag, leq)
    return ClassPoset(tag=tag, size=size,
                      leq=tuple(tuple(row) for row in leq),
                      covers=_covers_from_leq(leq))


def orders_equal_report(posets: list[ClassPoset]) -> dict:
    differences = []
    for a in range(len(posets)):
        for b in range(a + 1, len(posets)):
            pa, pb = posets[a], posets[b]
            for i in range(pa.size):
                for j in range(pa.size):
                    if pa.leq[i][j] != pb.leq[i][j]:
                        differences.append({
                            "orders": [pa.tag, pb.tag],
                            "pair": [i, j],
                            pa.tag: pa.leq[i][j],
                            pb.tag: pb.leq[i][j],
                        })
    return {"orders": [p.tag for p in posets],
            "equal": not differences,
            "differences": differences}


def verify_phi(cat: ModuleCategory, engine: GreenEngine, g: MGS) -> bool:
    """Socle quotients of the non-simple bricks = non-projective module
    summands of the silting summand set (Nakayama only)."""
    if not cat.spec.is_nakayama:
        raise UsageError("the socle-quotient correspondence needs a Nakayama algebra")
    simples = set(cat.simples)
    left = {cat.backend.socle_quotient(b)
            for b in g.bricks if b not in simples}
    projs = set(cat.projectives)
    right = {s.value for s in engine.summand_set(g)
             if not s.shifted and s.value not in projs}
    return left == right


def source_order_simples(cat: ModuleCategory) -> list[int]:
    """Vertices ordered so that hom(P_earlier, P_later) = 0, smallest-first
    among the free choices."""
    n = cat.n
    remaining = set(range(n))
    order = []
    while remaining:
        ready = [v for v in remaining
                 if all(cat.hom(cat.projectives[v], cat.projectives[w]) == 0
                        for w in remaining if w != v)]
        if not ready:
            raise InvariantViolation("projectives admit no hom-free ordering")
        v = min(ready)
        order.append(v)
        remaining.remove(v)
    return order


def check_extrema(cat: ModuleCategory, engine: GreenEngine,
                  posets: dict[str, ClassPoset]) -> dict:
    """Unique maximum (projectives-and-shifts class) and unique minimum
    (all-bricks class) where the hypotheses apply."""
    if cat.spec.is_nakayama and cat.spec.cyclic:
        return {"applicable": False,
                "notice": "cyclic Nakayama algebra: not acyclic and not "
                          "representation-directed, extrema checks skipped"}
    classes = engine.equivalence_classes()
    report: dict = {"applicable": True, "checks": []}

    def add(name, passed, detail=None):
        report["checks"].append({"check": name, "passed": bool(passed),
                                 **({"detail": detail} if detail is not None else {})})

    max_key = tuple(sorted(
        {SiltingSummand(False, p) for p in cat.projectives}
        | {SiltingSummand(True, v) for v in range(cat.n)}))
    max_classes = [i for i, c in enumerate(classes) if c.key == max_key]
    add("projectives-and-shifts-class-exists", len(max_classes) == 1,
        {"count": len(max_classes)})
    order = source_order_simples(cat)
    gmax_seq = tuple(cat.simples[v] for v in order)
    add("source-order-simples-sequence-is-maximal-green",
        engine.is_valid_mgs(gmax_seq),
        {"sequence": [cat.display(b) for b in gmax_seq]})
    results_ok = bool(max_classes) and engine.is_valid_mgs(gmax_seq)
    if results_ok:
        mx = max_classes[0]
        add("source-order-class-is-projectives-and-shifts",
            engine.class_of(engine.index_of(gmax_seq)) == mx)
        for tag in ("summand", "hn"):
            leq = posets[tag].leq
            add(f"{tag}-order-has-unique-maximum",
                all(leq[c][mx] for c in range(len(classes))))
        pent = posets["pentagon"].leq
        add("pentagon-order-maximal-at-source-class",
            not any(c != mx and pent[mx][c] for c in range(len(classes))))
    all_bricks = frozenset(cat.bricks)
    min_classes = [i for i, c in enumerate(classes)
                   if frozenset(c.representative.bricks) == all_bricks]
    add("all-bricks-class-exists-uniquely", len(min_classes) == 1,
        {"count": len(min_classes)})
    if len(min_classes) == 1:
        mn = min_classes[0]
        for tag, poset in posets.items():
            add(f"{tag}-order-has-unique-minimum",
                all(poset.leq[mn][c] for c in range(len(classes))))
    report["passed"] = all(c["passed"] for c in report["checks"])
    return report


def exchange_persistence(engine: GreenEngine, pentagon: ClassPoset) -> dict:
    """Below a class in the deformation order, every exchange pair keeps a
    partner with the same outgoing summand."""
    classes = engine.equivalence_classes()
    failures = []
    for lo in range(pentagon.size):
        for hi in range(pentagon.size):
            if lo == hi or not pentagon.leq[lo][hi]:
                continue
            lo_pairs = engine.exchange_pairs(classes[lo].representative)
            lo_outs = {p.out for p in lo_pairs}
            for pair in engine.exchange_pairs(classes[hi].representative):
                if pair.out not in lo_outs:
                    failures.append({"lower": lo, "upper": hi,
                                     "missing_out": repr(pair.out)})
    return {"passed": not failures, "failures": failures}


def polygon_deformation_pairs(engine: GreenEngine) -> list[dict]:
    """Pairs of green sequences that differ exactly by a deformation across
    one finite polygon, with the two side lengths."""
    all_mgs = engine.enumerate_mgs()
    chains = [tuple(t.members for t in engine.torsion_chain(g)) for g in all_mgs]
    found = []
    for k in range(len(all_mgs)):
        for l in range(k + 1, len(all_mgs)):
            ck, cl = chains[k], chains[l]
            a = 0
            while a < min(len(ck), len(cl)) and ck[a] == cl[a]:
                a += 1
            b = 0
            while (b < min(len(ck), len(cl))
                   and ck[len(ck) - 1 - b] == cl[len(cl) - 1 - b]):
                b += 1
            if a == 0 or b == 0 or a + b > min(len(ck), len(cl)):
                continue
            mid_k = set(ck[a:len(ck) - b])
            mid_l = set(cl[a:len(cl) - b])
            if mid_k & mid_l:
                continue
            top, bottom = ck[a - 1], ck[len(ck) - b]
            sides = (len(ck) - b - a + 1, len(cl) - b - a + 1)
            shared = (engine.silting_summands(_tc(top))
                      & engine.silting_summands(_tc(bottom)))
            if len(shared) != engine.cat.n - 2:
                continue
            found.append({"first": k, "second": l, "sides": sides})
    return found


def _tc(members):
    from .modcat import TorsionClass

    return TorsionClass(members)


def hasse_dot(poset: ClassPoset, engine: GreenEngine) -> str:
    """Hasse diagram in DOT, arrows from the covering class down to the
    covered one.  Node labels carry the summand-set size and a
    representative brick sequence, so equal posets serialize identically."""
    classes = engine.equivalence_classes()
    lines = ["digraph hasse {", "  node [shape=box];"]
    for i, cls in enumerate(classes):
        rep = ",".join(engine.cat.display(b) for b in cls.representative.bricks)
        lines.append(f'  c{i} [label="{len(cls.key)} summands\\n{rep}"];')
    for upper, lower in poset.covers:
        lines.append(f"  c{upper} -> c{lower};")
    lines.append("}")
    return "\n".join(lines) + "\n"
