"""Maximal green sequences: enumeration, validity, torsion chains,
silting summands, exchange pairs, square deformations, equivalence
classes, and Harder-Narasimhan filtrations.

A maximal green sequence is held as its maximal backward Hom-orthogonal
sequence of bricks: hom(B_j, B_i) = 0 whenever i < j, and no brick can
be inserted anywhere.  Equivalence classes are computed four ways at
once (square-swap closure, summand sets, exchange pairs, stable-factor
functions); any disagreement raises instead of being reconciled.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import GateError, InvariantViolation, TheoremViolation, UsageError
from .modcat import ModuleCategory, ModuleSum, TorsionClass

DEFAULT_BRICK_GATE = 24


@dataclass(frozen=True)
class MGS:
    bricks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.bricks)


@dataclass(frozen=True, order=True)
class SiltingSummand:
    """Module(indec id) when shifted is False, else ShiftedProjective(vertex)."""

    shifted: bool
    value: int


@dataclass(frozen=True)
class ExchangePair:
    out: SiltingSummand
    in_: SiltingSummand

    def __post_init__(self):
        if self.out == self.in_:
            raise InvariantViolation("exchange pair with equal components")


@dataclass(frozen=True)
class HNLayer:
    position: int  # 1-based index into the green sequence
    brick: int
    factor: ModuleSum
    multiplicity: int


@dataclass(frozen=True)
class HNResult:
    layers: tuple[HNLayer, ...]


@dataclass(frozen=True)
class EquivClass:
    key: tuple[SiltingSummand, ...]
    members: tuple[int, ...]
    representative: MGS


class GreenEngine:
    def __init__(self, cat: ModuleCategory, brick_gate: int = DEFAULT_BRICK_GATE,
                 workers: int | None = None):
        self.cat = cat
        self.brick_gate = brick_gate
        self.workers = workers
        self.bricks = cat.bricks
        self._bpos = {b: k for k, b in enumerate(self.bricks)}
        nb = len(self.bricks)
        self._full = (1 << nb) - 1
        # after_ok[b]: bricks y that may sit after b (hom(y, b) = 0);
        # before_ok[b]: bricks y that may sit before b (hom(b, y) = 0).
        self._after_ok = {}
        self._before_ok = {}
        for b in self.bricks:
            after = before = 0
            for k, y in enumerate(self.bricks):
                if cat.hom(y, b) == 0:
                    after |= 1 << k
                if cat.hom(b, y) == 0:
                    before |= 1 << k
            self._after_ok[b] = after
            self._before_ok[b] = before
        self._all_mgs: list[MGS] | None = None
        self._index: dict[tuple[int, ...], int] = {}
        self._chain_cache: dict[tuple[int, ...], list[TorsionClass]] = {}
        self._silting_cache: dict[frozenset, frozenset] = {}
        self._summand_cache: dict[tuple[int, ...], frozenset] = {}
        self._exchange_cache: dict[tuple[int, ...], tuple] = {}
        self._sff_cache: dict[tuple[int, ...], tuple] = {}
        self._classes: list[EquivClass] | None = None
        self._class_of: dict[int, int] = {}

    # -- enumeration ---------------------------------------------------------

    def _insertion_maximal(self, seq: tuple[int, ...]) -> int | None:
        """None when maximal, else the bitmask of insertable bricks at the
        first open slot."""
        r = len(seq)
        suffix = [self._full] * (r + 1)
        for p in range(r - 1, -1, -1):
            suffix[p] = suffix[p + 1] & self._before_ok[seq[p]]
        prefix = self._full
        for p in range(r + 1):
            open_mask = prefix & suffix[p]
            if open_mask:
                return open_mask
            if p < r:
                prefix &= self._after_ok[seq[p]]
        return None

    def _dfs(self, prefix: list[int], cand: int, out: list[MGS]) -> None:
        if cand == 0:
            if self._insertion_maximal(tuple(prefix)) is None:
                out.append(MGS(tuple(prefix)))
            return
        m = cand
        while m:
            low = m & -m
            m ^= low
            b = self.bricks[low.bit_length() - 1]
            prefix.append(b)
            self._dfs(prefix, cand & self._after_ok[b], out)
            prefix.pop()

    def enumerate_mgs(self) -> list[MGS]:
        if self._all_mgs is not None:
            return list(self._all_mgs)
        if len(self.bricks) > self.brick_gate:
            raise GateError(
                f"{len(self.bricks)} bricks exceed the enumeration gate of "
                f"{self.brick_gate}; raise the gate to force it")

        def from_first(b: int) -> list[MGS]:
            acc: list[MGS] = []
            self._dfs([b], self._full & self._after_ok[b], acc)
            return acc

        if self.workers and self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                chunks = list(pool.map(from_first, self.bricks))
            result = [g for chunk in chunks for g in chunk]
        else:
            result = []
            for b in self.bricks:
                result.extend(from_first(b))
        self._all_mgs = result
        self._index = {g.bricks: k for k, g in enumerate(result)}
        return list(result)

    def index_of(self, seq: tuple[int, ...]) -> int:
        self.enumerate_mgs()
        return self._index[tuple(seq)]

    # -- validity --------------------------------------------------------------

    def explain_invalid(self, seq) -> str | None:
        seq = tuple(seq)
        for b in seq:
            if not (0 <= b < len(self.cat.catalog)):
                return f"id {b} is outside the catalog"
            if b not in self._bpos:
                return f"{self.cat.display(b)} is not a brick"
        if len(set(seq)) != len(seq):
            return "sequence repeats a brick"
        for j in range(len(seq)):
            for i in range(j):
                if self.cat.hom(seq[j], seq[i]) != 0:
                    return (f"hom({self.cat.display(seq[j])}, "
                            f"{self.cat.display(seq[i])}) != 0 for positions "
                            f"{i + 1} < {j + 1}")
        open_mask = self._insertion_maximal(seq)
        if open_mask is not None:
            b = self.bricks[(open_mask & -open_mask).bit_length() - 1]
            return f"not maximal: brick {self.cat.display(b)} can be inserted"
        return None

    def is_valid_mgs(self, seq) -> bool:
        return self.explain_invalid(seq) is None

    # -- torsion chain and silting summands --------------------------------------

    def torsion_chain(self, g: MGS) -> list[TorsionClass]:
        key = g.bricks
        cached = self._chain_cache.get(key)
        if cached is not None:
            return list(cached)
        chain = [self.cat.torsion_closure(frozenset(key[i:]))
                 for i in range(len(key) + 1)]
        if chain[0].members != frozenset(range(len(self.cat.catalog))):
            raise InvariantViolation(
                "green sequence does not generate the whole module category")
        if chain[-1].members:
            raise InvariantViolation("green sequence chain does not reach zero")
        for up, lo in zip(chain, chain[1:]):
            if not lo.members < up.members:
                raise InvariantViolation("green sequence chain is not strictly decreasing")
        self._chain_cache[key] = chain
        return list(chain)

    def silting_summands(self, tors: TorsionClass) -> frozenset[SiltingSummand]:
        key = tors.members
        cached = self._silting_cache.get(key)
        if cached is not None:
            return cached
        mods = {SiltingSummand(False, x)
                for x in self.cat.relative_projectives(tors)}
        shifts = set()
        for v in range(self.cat.n):
            pv = self.cat.projectives[v]
            if all(self.cat.hom(pv, t) == 0 for t in tors.members):
                shifts.add(SiltingSummand(True, v))
        result = frozenset(mods | shifts)
        if len(result) != self.cat.n:
            raise InvariantViolation(
                f"silting summand set of {sorted(key)} has size {len(result)}, "
                f"expected {self.cat.n}")
        self._silting_cache[key] = result
        return result

    def summand_set(self, g: MGS) -> frozenset[SiltingSummand]:
        key = g.bricks
        cached = self._summand_cache.get(key)
        if cached is not None:
            return cached
        out: set[SiltingSummand] = set()
        for tors in self.torsion_chain(g):
            out |= self.silting_summands(tors)
        result = frozenset(out)
        if len(result) != self.cat.n + len(g.bricks):
            raise InvariantViolation(
                f"summand set has size {len(result)}, expected "
                f"{self.cat.n}+{len(g.bricks)}")
        self._summand_cache[key] = result
        return result

    def exchange_pairs(self, g: MGS) -> tuple[ExchangePair, ...]:
        key = g.bricks
        cached = self._exchange_cache.get(key)
        if cached is not None:
            return cached
        chain = self.torsion_chain(g)
        pairs = []
        for up, lo in zip(chain, chain[1:]):
            su, sl = self.silting_summands(up), self.silting_summands(lo)
            gone, came = su - sl, sl - su
            if len(gone) != 1 or len(came) != 1:
                raise InvariantViolation(
                    f"mutation step changes {len(gone)}+{len(came)} summands")
            pairs.append(ExchangePair(next(iter(gone)), next(iter(came))))
        result = tuple(pairs)
        self._exchange_cache[key] = result
        return result

    # -- square deformations -------------------------------------------------------

    def square_swap(self, g: MGS, i: int) -> MGS | None:
        """Swap bricks at 1-based positions i, i+1 when the square exists:
        hom(B_i, B_{i+1}) = ext^1(B_i, B_{i+1}) = 0."""
        if not 1 <= i < len(g.bricks):
            raise UsageError(f"swap position {i} out of range 1..{len(g.bricks) - 1}")
        a, b = g.bricks[i - 1], g.bricks[i]
        if self.cat.hom(a, b) != 0 or self.cat.ext1(a, b) != 0:
            return None
        seq = g.bricks[:i - 1] + (b, a) + g.bricks[i + 1:]
        reason = self.explain_invalid(seq)
        if reason is not None:
            raise InvariantViolation(f"square swap broke the sequence: {reason}")
        return MGS(seq)

    # -- Harder-Narasimhan filtrations ------------------------------------------------

    def hn_filtration(self, module, g: MGS) -> HNResult:
        msum = module if isinstance(module, ModuleSum) else ModuleSum((module,))
        chain = self.torsion_chain(g)
        steps: dict[int, list[int]] = {}

        def peel(x: int) -> None:
            j = max(k for k, tors in enumerate(chain) if x in tors)
            sub, quot = self.cat.torsion_sub_with_quotient(x, chain[j + 1])
            steps.setdefault(j + 1, []).extend(quot.ids)
            for y in sub.ids:
                peel(y)

        for x in msum.ids:
            peel(x)
        layers = []
        for pos in sorted(steps):
            factor = ModuleSum(tuple(steps[pos]))
            brick = g.bricks[pos - 1]
            filt = self.cat.filt_indecs(frozenset((brick,)))
            if not set(factor.ids) <= filt:
                raise InvariantViolation(
                    f"layer {self.cat.display_sum(factor)} escapes the "
                    f"filtration category of {self.cat.display(brick)}")
            fdim, bdim = self.cat.dim_sum(factor), self.cat.indec(brick).dim
            if fdim % bdim != 0:
                raise InvariantViolation(
                    f"layer dimension {fdim} not a multiple of brick "
                    f"dimension {bdim}")
            layers.append(HNLayer(position=pos, brick=brick, factor=factor,
                                  multiplicity=fdim // bdim))
        total = self.cat.dimvec_sum(ModuleSum(tuple(
            i for layer in layers for i in layer.factor.ids)))
        if total != self.cat.dimvec_sum(msum):
            raise InvariantViolation("layer dimension vectors do not sum up")
        return HNResult(layers=tuple(layers))

    def stable_factors(self, module, g: MGS) -> Counter:
        """Multiset of bricks occurring as stable factors of the module."""
        out: Counter = Counter()
        for layer in self.hn_filtration(module, g).layers:
            out[layer.brick] += layer.multiplicity
        return out

    def stable_factor_function(self, g: MGS) -> dict[int, tuple[tuple[int, int], ...]]:
        key = g.bricks
        cached = self._sff_cache.get(key)
        if cached is not None:
            return dict(cached)
        table = {x: tuple(sorted(self.stable_factors(x, g).items()))
                 for x in range(len(self.cat.catalog))}
        self._sff_cache[key] = tuple(sorted(table.items()))
        return table

    def sff_key(self, g: MGS) -> tuple:
        self.stable_factor_function(g)
        return self._sff_cache[g.bricks]

    # -- equivalence --------------------------------------------------------------------

    def equivalence_classes(self) -> list[EquivClass]:
        if self._classes is not None:
            return list(self._classes)
        all_mgs = self.enumerate_mgs()
        count = len(all_mgs)
        by_swap = self._swap_components(all_mgs)
        by_summ = _partition(range(count),
                             lambda k: tuple(sorted(self.summand_set(all_mgs[k]))))
        by_exch = _partition(range(count),
                             lambda k: frozenset(self.exchange_pairs(all_mgs[k])))
        by_sff = _partition(range(count), lambda k: self.sff_key(all_mgs[k]))
        partitions = {
            "square-swap closure": by_swap,
            "summand sets": by_summ,
            "exchange pairs": by_exch,
            "stable-factor functions": by_sff,
        }
        names = list(partitions)
        for a in range(len(names)):
            for b in range(a + 1, len(names)):
                pa, pb = partitions[names[a]], partitions[names[b]]
                if pa != pb:
                    witness = _partition_witness(pa, pb)
                    raise TheoremViolation(
                        f"equivalence by {names[a]} disagrees with {names[b]}: "
                        f"sequences "
                        f"{[self.cat.display(x) for x in all_mgs[witness[0]].bricks]} and "
                        f"{[self.cat.display(x) for x in all_mgs[witness[1]].bricks]}")
        classes = []
        for block in sorted(by_summ, key=min):
            members = tuple(sorted(block))
            classes.append(EquivClass(
                key=tuple(sorted(self.summand_set(all_mgs[members[0]]))),
                members=members,
                representative=all_mgs[members[0]],
            ))
        self._classes = classes
        self._class_of = {k: ci for ci, cls in enumerate(classes)
                          for k in cls.members}
        return list(classes)

    def class_of(self, mgs_index: int) -> int:
        self.equivalence_classes()
        return self._class_of[mgs_index]

    def _swap_components(self, all_mgs: list[MGS]) -> set[frozenset[int]]:
        adj: dict[int, set[int]] = {k: set() for k in range(len(all_mgs))}
        for k, g in enumerate(all_mgs):
            for i in range(1, len(g.bricks)):
                swapped = self.square_swap(g, i)
                if swapped is None:
                    continue
                j = self._index.get(swapped.bricks)
                if j is None:
                    raise InvariantViolation(
                        "square swap produced an unenumerated sequence")
                adj[k].add(j)
                adj[j].add(k)
        seen: set[int] = set()
        blocks = set()
        for k in range(len(all_mgs)):
            if k in seen:
                continue
            stack, comp = [k], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            blocks.add(frozenset(comp))
        return blocks


def _partition(indices, keyfunc) -> set[frozenset[int]]:
    groups: dict = {}
    for k in indices:
        groups.setdefault(keyfunc(k), set()).add(k)
    return {frozenset(v) for v in groups.values()}


def _partition_witness(pa: set[frozenset[int]], pb: set[frozenset[int]]) -> tuple[int, int]:
    """A pair of indices grouped together by one partition but not the other."""
    for block in pa:
        for other in pb:
            inter = block & other
            if inter and inter != block:
                x = min(inter)
                y = min(block - inter)
                return (x, y)
    for block in pb:
        for other in pa:
            inter = block & other
            if inter and inter != block:
                return (min(inter), min(block - inter))
    raise InvariantViolation("partitions differ without witness")
