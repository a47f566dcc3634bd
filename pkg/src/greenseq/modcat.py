"""Backend-agnostic module-category layer.

Everything is computed over a fixed catalog of indecomposable modules
produced by a backend (Nakayama or type A).  Hom spaces are solved as
commuting-square constraint systems on the explicit arrow matrices, with
exact arithmetic; Ext^1 comes from the hereditary Euler form (type A) or
from the explicit projective cover sequence (Nakayama), cross-checkable
against the presentation-based computation in both cases.

Torsion classes are membership sets over the catalog, closed under
indecomposable quotients and under extensions with indecomposable middle
term.  A brute-force enumeration of all torsion classes, with brick
labels on the covering relations, serves as the oracle for the green
sequence machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraSpec
from .errors import GateError, InvariantViolation, UsageError
from .linalg import rank_exact, rank_mod_p

DEFAULT_SUBSET_GATE = 1 << 16


@dataclass(frozen=True)
class Indec:
    """An isomorphism class of indecomposable modules.

    matrices[k] is the structure map of arrow slot k as a row-major
    matrix of shape (spaces[dst], spaces[src]).
    """

    ident: int
    descriptor: tuple
    dimvec: tuple[int, ...]
    spaces: tuple[int, ...]
    matrices: tuple
    display: str

    @property
    def dim(self) -> int:
        return sum(self.dimvec)


@dataclass(frozen=True)
class ModuleSum:
    """Finite multiset of indecomposable summands; () is the zero module."""

    ids: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ids", tuple(sorted(self.ids)))

    @property
    def is_zero(self) -> bool:
        return not self.ids


ZERO = ModuleSum(())


@dataclass(frozen=True)
class SesRecord:
    """A short exact sequence 0 -> sub -> middle -> quot -> 0 with middle
    indecomposable and sub, quot both non-zero."""

    middle: int
    sub: ModuleSum
    quot: ModuleSum


@dataclass(frozen=True)
class TorsionClass:
    members: frozenset[int]

    @property
    def ids_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __le__(self, other: "TorsionClass") -> bool:
        return self.members <= other.members


@dataclass(frozen=True)
class TorsionLattice:
    """All torsion classes with labelled covering relations.

    covers are (upper, lower, label) index triples into `classes`.
    """

    classes: tuple[frozenset[int], ...]
    covers: tuple[tuple[int, int, int], ...]
    top: int
    bottom: int

    def index_of(self, members: frozenset[int]) -> int:
        return self.classes.index(members)

    def covers_of(self, idx: int) -> list[tuple[int, int]]:
        """(lower, label) pairs below `idx`."""
        return [(lo, lab) for up, lo, lab in self.covers if up == idx]

    def maximal_chain_count(self) -> int:
        below = {}
        for up, lo, _ in self.covers:
            below.setdefault(up, []).append(lo)
        counts = {self.bottom: 1}
        order = sorted(range(len(self.classes)), key=lambda i: len(self.classes[i]))
        for idx in order:
            if idx == self.bottom:
                continue
            counts[idx] = sum(counts[lo] for lo in below.get(idx, []))
        return counts[self.top]

    def maximal_chains(self, start: int | None = None, end: int | None = None):
        """All cover-paths from `start` down to `end`, as lists of
        (class index, label) steps."""
        start = self.top if start is None else start
        end = self.bottom if end is None else end
        below = {}
        for up, lo, lab in self.covers:
            below.setdefault(up, []).append((lo, lab))
        chains = []

        def walk(idx, acc):
            if idx == end:
                chains.append(list(acc))
                return
            for lo, lab in sorted(below.get(idx, [])):
                acc.append((lo, lab))
                walk(lo, acc)
                acc.pop()

        walk(start, [])
        return chains


class ModuleCategory:
    """Catalog of indecomposables plus the exact homological calculus."""

    def __init__(self, spec: AlgebraSpec, exact: bool = False):
        from .nakayama import NakayamaBackend
        from .typea import TypeABackend

        self.spec = spec
        self.exact = exact
        if spec.is_nakayama:
            self.backend = NakayamaBackend(spec)
        else:
            self.backend = TypeABackend(spec)
        self.n = spec.n
        self.slots = self.backend.slots
        self.catalog: list[Indec] = self.backend.catalog
        self._by_descriptor = {m.descriptor: m.ident for m in self.catalog}
        self._by_display = {m.display: m.ident for m in self.catalog}
        self._hom_cache: dict[tuple[int, int], int] = {}
        self._closure_cache: dict[frozenset, TorsionClass] = {}
        self._relproj_cache: dict[frozenset, frozenset] = {}
        self._filt_cache: dict[frozenset, frozenset] = {}
        self._lattice: TorsionLattice | None = None

    # -- catalog ----------------------------------------------------------

    def indecomposables(self) -> list[Indec]:
        return list(self.catalog)

    def indec(self, i: int) -> Indec:
        return self.catalog[i]

    @property
    def simples(self) -> tuple[int, ...]:
        return self.backend.simples

    @property
    def projectives(self) -> tuple[int, ...]:
        return self.backend.projectives

    def is_simple(self, i: int) -> bool:
        return self.catalog[i].dim == 1

    def is_projective(self, i: int) -> bool:
        return i in self.backend.projectives

    def display(self, i: int) -> str:
        return self.catalog[i].display

    def display_sum(self, m: ModuleSum) -> str:
        if m.is_zero:
            return "0"
        return "+".join(self.display(i) for i in m.ids)

    def descriptor_str(self, i: int) -> str:
        d = self.catalog[i].descriptor
        if d[0] == "U":
            return f"U({d[1]},{d[2]})"
        return f"I[{d[1]},{d[2]}]"

    def dim_sum(self, m: ModuleSum) -> int:
        return sum(self.catalog[i].dim for i in m.ids)

    def dimvec_sum(self, m: ModuleSum) -> tuple[int, ...]:
        v = [0] * self.n
        for i in m.ids:
            for k, x in enumerate(self.catalog[i].dimvec):
                v[k] += x
        return tuple(v)

    # -- hom / ext --------------------------------------------------------

    def _rank(self, rows) -> int:
        return rank_exact(rows) if self.exact else rank_mod_p(rows)

    def _hom_ii(self, a: int, b: int) -> int:
        key = (a, b)
        cached = self._hom_cache.get(key)
        if cached is not None:
            return cached
        M, N = self.catalog[a], self.catalog[b]
        offs, total = [], 0
        for v in range(self.n):
            offs.append(total)
            total += M.spaces[v] * N.spaces[v]
        rows = []
        for k, (s, d) in enumerate(self.slots):
            TM, TN = M.matrices[k], N.matrices[k]
            for i in range(N.spaces[d]):
                for j in range(M.spaces[s]):
                    row = [0] * total
                    for t in range(M.spaces[d]):
                        row[offs[d] + i * M.spaces[d] + t] += TM[t][j]
                    for t in range(N.spaces[s]):
                        row[offs[s] + t * M.spaces[s] + j] -= TN[i][t]
                    if any(row):
                        rows.append(row)
        val = total - self._rank(rows)
        self._hom_cache[key] = val
        return val

    def _as_sum(self, m) -> ModuleSum:
        if isinstance(m, ModuleSum):
            return m
        if isinstance(m, Indec):
            if not (0 <= m.ident < len(self.catalog)
                    and self.catalog[m.ident] is m):
                raise UsageError(
                    f"module {m.display!r} belongs to a different algebra")
            return ModuleSum((m.ident,))
        if isinstance(m, int):
            if not 0 <= m < len(self.catalog):
                raise UsageError(
                    f"id {m} outside the catalog (size {len(self.catalog)})")
            return ModuleSum((m,))
        raise UsageError(f"expected an indecomposable id or ModuleSum, got {m!r}")

    def _as_id(self, m) -> int:
        ids = self._as_sum(m).ids
        if len(ids) != 1:
            raise UsageError(f"expected an indecomposable, got {m!r}")
        return ids[0]

    def hom(self, a, b) -> int:
        """dim Hom(a, b); additive over direct sums in both arguments."""
        sa, sb = self._as_sum(a), self._as_sum(b)
        return sum(self._hom_ii(x, y) for x in sa.ids for y in sb.ids)

    def ext1(self, a, b) -> int:
        """dim Ext^1(a, b) for an indecomposable a."""
        a = self._as_id(a)
        sb = self._as_sum(b)
        if self.backend.hereditary:
            total = 0
            for y in sb.ids:
                total += self._hom_ii(a, y) - self._euler(a, y)
            if total < 0:
                raise InvariantViolation(
                    f"negative Ext dimension for ({a}, {b}); Euler form broken")
            return total
        return self.ext1_presentation(a, sb)

    def _euler(self, a: int, b: int) -> int:
        # <dim a, dim b> = dim Hom - dim Ext^1 for hereditary algebras;
        # the arrow term runs over structure-map slots (src, dst).
        da, db = self.catalog[a].dimvec, self.catalog[b].dimvec
        val = sum(x * y for x, y in zip(da, db))
        for s, d in self.slots:
            val -= da[s] * db[d]
        return val

    def ext1_presentation(self, a, b) -> int:
        """Ext^1 from the projective cover sequence 0 -> O -> P -> a -> 0:
        dim Ext^1(a, N) = hom(O, N) - hom(P, N) + hom(a, N)."""
        a = self._as_id(a)
        sb = self._as_sum(b)
        p0, omega = self.backend.projective_cover(a)
        val = (self.hom(ModuleSum(omega), sb) - self.hom(ModuleSum(p0), sb)
               + self.hom(a, sb))
        if val < 0:
            raise InvariantViolation(
                f"presentation gave negative Ext dimension for ({a}, {b})")
        return val

    def is_brick(self, i: int) -> bool:
        return self._hom_ii(i, i) == 1

    @property
    def bricks(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.catalog)) if self.is_brick(i))

    # -- submodule structure ----------------------------------------------

    def sub_quotient_pairs(self, i: int) -> tuple[SesRecord, ...]:
        return self.backend.records(i)

    def indec_quotients(self, i: int) -> frozenset[ModuleSum]:
        quots = {ModuleSum((i,))}
        for rec in self.backend.records(i):
            quots.add(rec.quot)
        return frozenset(quots)

    # -- torsion classes ----------------------------------------------------

    def is_torsion_class(self, members: frozenset[int]) -> bool:
        members = frozenset(members)
        for i in members:
            for q in self.indec_quotients(i):
                if not set(q.ids) <= members:
                    return False
        for i in range(len(self.catalog)):
            if i in members:
                continue
            for rec in self.backend.records(i):
                if set(rec.sub.ids) <= members and set(rec.quot.ids) <= members:
                    return False
        return True

    def torsion_closure(self, seed) -> TorsionClass:
        key = frozenset(seed)
        cached = self._closure_cache.get(key)
        if cached is not None:
            return cached
        members = set(key)
        changed = True
        while changed:
            changed = False
            for i in list(members):
                for q in self.indec_quotients(i):
                    for x in q.ids:
                        if x not in members:
                            members.add(x)
                            changed = True
            for i in range(len(self.catalog)):
                if i in members:
                    continue
                for rec in self.backend.records(i):
                    if (set(rec.sub.ids) <= members
                            and set(rec.quot.ids) <= members):
                        members.add(i)
                        changed = True
                        break
        result = TorsionClass(frozenset(members))
        if not self.is_torsion_class(result.members):
            raise InvariantViolation(
                f"torsion closure of {sorted(key)} is not closed: {sorted(members)}")
        self._closure_cache[key] = result
        return result

    def torsion_sub_with_quotient(self, i: int, tors: TorsionClass
                                  ) -> tuple[ModuleSum, ModuleSum]:
        """Torsion submodule of an indecomposable and the matching quotient."""
        candidates: list[tuple[ModuleSum, ModuleSum]] = [(ZERO, ModuleSum((i,)))]
        if i in tors:
            candidates.append((ModuleSum((i,)), ZERO))
        for rec in self.backend.records(i):
            if set(rec.sub.ids) <= tors.members:
                candidates.append((rec.sub, rec.quot))
        best = max(candidates, key=lambda sq: self.dim_sum(sq[0]))
        best_dim = self.dim_sum(best[0])
        top = [sq for sq in candidates if self.dim_sum(sq[0]) == best_dim]
        if len({sq[0] for sq in top}) != 1:
            raise InvariantViolation(
                f"torsion submodule of {self.display(i)} is not unique: "
                f"{[self.display_sum(s) for s, _ in top]}")
        bestvec = self.dimvec_sum(best[0])
        for sub, _ in candidates:
            if any(x > y for x, y in zip(self.dimvec_sum(sub), bestvec)):
                raise InvariantViolation(
                    f"torsion submodule of {self.display(i)} fails to dominate "
                    f"{self.display_sum(sub)}")
        return best

    def torsion_submodule(self, m, tors: TorsionClass) -> ModuleSum:
        sm = self._as_sum(m)
        parts: list[int] = []
        for i in sm.ids:
            sub, _ = self.torsion_sub_with_quotient(i, tors)
            parts.extend(sub.ids)
        return ModuleSum(tuple(parts))

    def relative_projectives(self, tors: TorsionClass) -> frozenset[int]:
        key = tors.members
        cached = self._relproj_cache.get(key)
        if cached is not None:
            return cached
        mem = sorted(key)
        result = frozenset(
            x for x in mem if all(self.ext1(x, m) == 0 for m in mem))
        self._relproj_cache[key] = result
        return result

    def relative_simples(self, tors: TorsionClass) -> frozenset[int]:
        # A member is relatively simple iff no proper non-zero submodule
        # (from the enumerated sequences) lies entirely in the class.
        out = set()
        for b in tors.members:
            if not any(set(rec.sub.ids) <= tors.members
                       for rec in self.backend.records(b)):
                out.add(b)
        return frozenset(out)

    def filt_indecs(self, brick_ids) -> frozenset[int]:
        """Catalog members admitting a filtration with factors in add of
        the given bricks."""
        key = frozenset(brick_ids)
        cached = self._filt_cache.get(key)
        if cached is not None:
            return cached
        members = set(key)
        changed = True
        while changed:
            changed = False
            for i in range(len(self.catalog)):
                if i in members:
                    continue
                for rec in self.backend.records(i):
                    if (set(rec.quot.ids) <= key
                            and set(rec.sub.ids) <= members):
                        members.add(i)
                        changed = True
                        break
        result = frozenset(members)
        self._filt_cache[key] = result
        return result

    # -- the brute-force lattice oracle -------------------------------------

    def torsion_lattice(self, size_gate: int = DEFAULT_SUBSET_GATE) -> TorsionLattice:
        if self._lattice is not None:
            return self._lattice
        count = len(self.catalog)
        if (1 << count) > size_gate:
            raise GateError(
                f"torsion lattice needs 2^{count} subset checks, above the "
                f"gate of {size_gate}; raise the gate to force it")
        qmask = []
        for i in range(count):
            m = 0
            for q in self.indec_quotients(i):
                for x in q.ids:
                    m |= 1 << x
            qmask.append(m)
        extmasks = []
        for i in range(count):
            recs = []
            for rec in self.backend.records(i):
                m = 0
                for x in rec.sub.ids + rec.quot.ids:
                    m |= 1 << x
                recs.append(m)
            extmasks.append(recs)
        valid: list[int] = []
        for s in range(1 << count):
            ok = True
            for i in range(count):
                if s >> i & 1:
                    if qmask[i] & ~s:
                        ok = False
                        break
                else:
                    for m in extmasks[i]:
                        if m & ~s == 0:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                valid.append(s)
        classes = tuple(sorted(
            (frozenset(i for i in range(count) if s >> i & 1) for s in valid),
            key=lambda f: (len(f), tuple(sorted(f)))))
        idx = {c: k for k, c in enumerate(classes)}
        covers = []
        for ci in classes:
            for cj in classes:
                if cj < ci and not any(cj < ck < ci for ck in classes):
                    label = self._cover_label(ci, cj)
                    covers.append((idx[ci], idx[cj], label))
        lattice = TorsionLattice(
            classes=classes,
            covers=tuple(sorted(covers)),
            top=idx[frozenset(range(count))],
            bottom=idx[frozenset()],
        )
        self._lattice = lattice
        return lattice

    def interval_members(self, upper: frozenset[int], lower: frozenset[int]
                         ) -> frozenset[int]:
        """[T, U] = T intersected with the right-hom-perpendicular of U."""
        return frozenset(
            m for m in upper
            if all(self._hom_ii(u, m) == 0 for u in lower))

    def _cover_label(self, upper: frozenset[int], lower: frozenset[int]) -> int:
        interval = self.interval_members(upper, lower)
        labels = [
            b for b in interval
            if not any(set(rec.sub.ids) <= interval
                       and set(rec.quot.ids) <= interval
                       for rec in self.backend.records(b))
        ]
        if len(labels) != 1:
            raise InvariantViolation(
                f"cover {sorted(upper)} > {sorted(lower)} has "
                f"{len(labels)} label candidates: {sorted(labels)}")
        return labels[0]

    # -- name resolution -----------------------------------------------------

    def resolve_token(self, token: str) -> int:
        """Resolve '#id', 'U(top,len)', 'I[a,b]' or a display name."""
        token = token.strip()
        if token.startswith("#"):
            try:
                i = int(token[1:])
            except ValueError:
                raise UsageError(f"bad id token {token!r}") from None
            if not 0 <= i < len(self.catalog):
                raise UsageError(f"id {i} outside the catalog (size {len(self.catalog)})")
            return i
        desc = _parse_descriptor(token)
        if desc is not None:
            if desc[0] == "U" and not self.spec.is_nakayama:
                raise UsageError(f"{token!r} is a Nakayama descriptor; this algebra is typeA")
            if desc[0] == "I" and self.spec.is_nakayama:
                raise UsageError(f"{token!r} is a typeA descriptor; this algebra is Nakayama")
            if desc not in self._by_descriptor:
                raise UsageError(f"{token!r} does not name a catalog module")
            return self._by_descriptor[desc]
        if token in self._by_display:
            return self._by_display[token]
        raise UsageError(f"cannot resolve module {token!r}")

    def resolve_module_expr(self, expr: str) -> ModuleSum:
        ids = [self.resolve_token(t) for t in expr.split("+") if t.strip()]
        if not ids:
            raise UsageError(f"empty module expression {expr!r}")
        return ModuleSum(tuple(ids))


def _parse_descriptor(token: str):
    import re

    m = re.fullmatch(r"U\((\d+),(\d+)\)", token)
    if m:
        return ("U", int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"I\[(\d+),(\d+)\]", token)
    if m:
        return ("I", int(m.group(1)), int(m.group(2)))
    return None


@lru_cache(maxsize=None)
def module_category(spec: AlgebraSpec, exact: bool = False) -> ModuleCategory:
    return ModuleCategory(spec, exact=exact)
