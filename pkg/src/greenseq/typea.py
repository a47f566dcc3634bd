"""Type-A backend: interval modules over an arbitrarily oriented A_n quiver.

The catalog consists of the n(n+1)/2 interval modules.  Following the
top-down composition-series reading (the module "12" has top 1 and socle
2), we work with right modules: the structure map of an arrow x -> y
sends the fibre at y to the fibre at x.  A subset of an interval's
support carries a submodule iff it is closed under taking arrow sources,
i.e. y in S and an in-interval arrow x -> y force x in S.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraSpec
from .errors import InvariantViolation, UsageError
from .modcat import Indec, ModuleSum, SesRecord


class TypeABackend:
    hereditary = True

    def __init__(self, spec: AlgebraSpec):
        if spec.is_nakayama:
            raise UsageError("TypeABackend needs a typeA spec")
        self.spec = spec
        self.n = spec.n
        # slot (s, d): the structure map V_s -> V_d between vertices s, d.
        slots = []
        for k, sym in enumerate(spec.orientation):
            slots.append((k + 1, k) if sym == ">" else (k, k + 1))
        self.slots = tuple(slots)
        self.catalog = self._build_catalog()
        self._by_interval = {(m.descriptor[1] - 1, m.descriptor[2] - 1): m.ident
                             for m in self.catalog}
        self._records = [self._build_records(i) for i in range(len(self.catalog))]
        self.simples = tuple(self._by_interval[(v, v)] for v in range(self.n))
        self.projectives = tuple(
            self._by_interval[self._projective_interval(v)] for v in range(self.n))
        self._cartan_solve = None

    # -- catalog ------------------------------------------------------------

    def interval(self, a0: int, b0: int) -> int:
        return self._by_interval[(a0, b0)]

    def _display(self, a0: int, b0: int) -> str:
        # Radical layering: layer of w = longest structure-map path into w
        # within the support; rows are printed top to bottom.
        supp = range(a0, b0 + 1)
        inner = [(s, d) for s, d in self.slots if a0 <= s <= b0 and a0 <= d <= b0]
        layer = {w: 0 for w in supp}
        for _ in supp:
            for s, d in inner:
                layer[d] = max(layer[d], layer[s] + 1)
        rows = []
        for lvl in range(max(layer.values(), default=0) + 1):
            row = sorted(w for w in supp if layer[w] == lvl)
            rows.append("".join(str(w + 1) for w in row))
        return "".join(rows) if self.n <= 9 else "|".join(rows)

    def _build_catalog(self) -> list[Indec]:
        catalog = []
        for a0 in range(self.n):
            for b0 in range(a0, self.n):
                spaces = tuple(1 if a0 <= v <= b0 else 0 for v in range(self.n))
                mats = []
                for s, d in self.slots:
                    m = [[0] * spaces[s] for _ in range(spaces[d])]
                    if spaces[s] and spaces[d]:
                        m[0][0] = 1
                    mats.append(tuple(tuple(r) for r in m))
                catalog.append(Indec(
                    ident=len(catalog),
                    descriptor=("I", a0 + 1, b0 + 1),
                    dimvec=spaces,
                    spaces=spaces,
                    matrices=tuple(mats),
                    display=self._display(a0, b0),
                ))
        return catalog

    # -- submodule structure ---------------------------------------------------

    def submodule_supports(self, i: int) -> list[frozenset[int]]:
        """All submodule supports of an interval module, 1-based vertices,
        including the empty set and the full support."""
        _, a1, b1 = self.catalog[i].descriptor
        a0, b0 = a1 - 1, b1 - 1
        width = b0 - a0 + 1
        inner = [(s - a0, d - a0) for s, d in self.slots
                 if a0 <= s <= b0 and a0 <= d <= b0]
        supports = []
        for mask in range(1 << width):
            # closed under structure maps: s in S forces d in S
            if all(not (mask >> s & 1) or (mask >> d & 1) for s, d in inner):
                supports.append(frozenset(
                    a0 + k + 1 for k in range(width) if mask >> k & 1))
        return sorted(supports, key=lambda f: (len(f), tuple(sorted(f))))

    def _components(self, verts: list[int]) -> list[int]:
        """Interval ids of the connected components of a vertex set."""
        out = []
        run: list[int] = []
        for v in sorted(verts):
            if run and v != run[-1] + 1:
                out.append(self.interval(run[0], run[-1]))
                run = []
            run.append(v)
        if run:
            out.append(self.interval(run[0], run[-1]))
        return out

    def _build_records(self, i: int) -> tuple[SesRecord, ...]:
        _, a1, b1 = self.catalog[i].descriptor
        a0, b0 = a1 - 1, b1 - 1
        full = set(range(a0, b0 + 1))
        recs = []
        for supp in self.submodule_supports(i):
            verts = {v - 1 for v in supp}
            if not verts or verts == full:
                continue
            sub = ModuleSum(tuple(self._components(sorted(verts))))
            quot = ModuleSum(tuple(self._components(sorted(full - verts))))
            recs.append(SesRecord(middle=i, sub=sub, quot=quot))
        return tuple(recs)

    def records(self, i: int) -> tuple[SesRecord, ...]:
        return self._records[i]

    # -- homological helpers -----------------------------------------------------

    def _projective_interval(self, v: int) -> tuple[int, int]:
        lo = v
        while lo > 0 and self.spec.orientation[lo - 1] == ">":
            lo -= 1
        hi = v
        while hi < self.n - 1 and self.spec.orientation[hi] == "<":
            hi += 1
        return lo, hi

    def _top_vertices(self, i: int) -> list[int]:
        _, a1, b1 = self.catalog[i].descriptor
        a0, b0 = a1 - 1, b1 - 1
        radical = {d for s, d in self.slots if a0 <= s <= b0 and a0 <= d <= b0}
        return [v for v in range(a0, b0 + 1) if v not in radical]

    def projective_cover(self, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        tops = self._top_vertices(i)
        p0 = tuple(sorted(self.projectives[t] for t in tops))
        deficit = [0] * self.n
        for p in p0:
            for v, x in enumerate(self.catalog[p].dimvec):
                deficit[v] += x
        for v, x in enumerate(self.catalog[i].dimvec):
            deficit[v] -= x
        if all(x == 0 for x in deficit):
            return p0, ()
        mult = self._solve_cartan(deficit)
        omega = []
        for v, m in enumerate(mult):
            omega.extend([self.projectives[v]] * m)
        return p0, tuple(sorted(omega))

    def _solve_cartan(self, target: list[int]) -> list[int]:
        # Multiplicities m with sum m_v * dimvec(P_v) = target; the Cartan
        # matrix of a hereditary algebra is unimodular, so m is integral.
        n = self.n
        rows = [[Fraction(self.catalog[self.projectives[v]].dimvec[w])
                 for v in range(n)] + [Fraction(target[w])] for w in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            rows[col] = [x / rows[col][col] for x in rows[col]]
            for r in range(n):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        mult = [rows[v][n] for v in range(n)]
        if any(m.denominator != 1 or m < 0 for m in mult):
            raise InvariantViolation(
                f"syzygy decomposition is not a projective multiset: {mult}")
        return [int(m) for m in mult]
