"""Algebra descriptions: Nakayama algebras via Kupisch series, and
hereditary type-A path algebras via an orientation word.

Orientation word: character k (1-based) describes the arrow between
vertices k and k+1; ">" means k -> k+1 and "<" means k+1 -> k.

Module categories are taken so that composition series read top-down:
the module written "12" has top S_1 and socle S_2.  Concretely this is
the category of right modules over the path algebra, so the structure
map attached to an arrow x -> y sends the fibre at y to the fibre at x.
For a Nakayama algebra with arrows i -> i+1 the same reading is obtained
from left modules: M(i, l) has radical layers S_i, S_{i+1}, ...
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpecError

NAKAYAMA = "nakayama"
TYPE_A = "typeA"


@dataclass(frozen=True)
class AlgebraSpec:
    kind: str
    kupisch: tuple[int, ...] | None = None
    cyclic: bool = False
    orientation: str | None = None

    def __post_init__(self):
        if self.kind == NAKAYAMA:
            _validate_kupisch(self.kupisch, self.cyclic)
        elif self.kind == TYPE_A:
            _validate_orientation(self.orientation)
        else:
            raise SpecError(f"unknown algebra kind {self.kind!r}")

    @staticmethod
    def nakayama(kupisch, cyclic: bool = False) -> "AlgebraSpec":
        return AlgebraSpec(kind=NAKAYAMA, kupisch=tuple(kupisch), cyclic=cyclic)

    @staticmethod
    def type_a(orientation: str) -> "AlgebraSpec":
        return AlgebraSpec(kind=TYPE_A, orientation=orientation)

    @property
    def n(self) -> int:
        """Number of vertices (= simple modules)."""
        if self.kind == NAKAYAMA:
            return len(self.kupisch)
        return len(self.orientation) + 1

    @property
    def is_nakayama(self) -> bool:
        return self.kind == NAKAYAMA

    def label(self) -> str:
        if self.kind == NAKAYAMA:
            shape = "cyclic" if self.cyclic else "linear"
            return f"nakayama-{shape}-{','.join(map(str, self.kupisch))}"
        return f"typeA-{self.orientation or 'A1'}"

    def to_dict(self) -> dict:
        if self.kind == NAKAYAMA:
            return {"type": NAKAYAMA, "cyclic": self.cyclic,
                    "kupisch": list(self.kupisch)}
        return {"type": TYPE_A, "orientation": self.orientation}

    @staticmethod
    def from_dict(data: dict) -> "AlgebraSpec":
        if not isinstance(data, dict):
            raise SpecError("algebra file must contain a JSON object")
        if "type" not in data:
            raise SpecError('algebra file is missing the "type" key')
        kind = data["type"]
        if kind == NAKAYAMA:
            allowed = {"type", "cyclic", "kupisch"}
            unknown = set(data) - allowed
            if unknown:
                raise SpecError(f"unknown keys in algebra file: {sorted(unknown)}")
            if "kupisch" not in data:
                raise SpecError('nakayama spec requires a "kupisch" list')
            kupisch = data["kupisch"]
            if (not isinstance(kupisch, list) or not kupisch
                    or not all(isinstance(c, int) and not isinstance(c, bool) for c in kupisch)):
                raise SpecError('"kupisch" must be a non-empty list of integers')
            cyclic = data.get("cyclic", False)
            if not isinstance(cyclic, bool):
                raise SpecError('"cyclic" must be a boolean')
            return AlgebraSpec.nakayama(kupisch, cyclic)
        if kind == TYPE_A:
            allowed = {"type", "orientation"}
            unknown = set(data) - allowed
            if unknown:
                raise SpecError(f"unknown keys in algebra file: {sorted(unknown)}")
            if "orientation" not in data:
                raise SpecError('typeA spec requires an "orientation" word')
            orientation = data["orientation"]
            if not isinstance(orientation, str):
                raise SpecError('"orientation" must be a string over "<>"')
            return AlgebraSpec.type_a(orientation)
        raise SpecError(f'"type" must be "{NAKAYAMA}" or "{TYPE_A}", got {kind!r}')


def _validate_kupisch(kupisch, cyclic: bool) -> None:
    if kupisch is None or len(kupisch) == 0:
        raise SpecError("Kupisch series must be non-empty")
    n = len(kupisch)
    for i, c in enumerate(kupisch, start=1):
        if not isinstance(c, int) or c < 1:
            raise SpecError(f"Kupisch entry c_{i} = {c!r} must be a positive integer")
    if cyclic:
        for i, c in enumerate(kupisch, start=1):
            if c < 2:
                raise SpecError(
                    f"cyclic Kupisch series needs c_i >= 2, but c_{i} = {c}")
            succ = kupisch[i % n]
            if c > succ + 1:
                raise SpecError(
                    f"cyclic Kupisch series needs c_{i} <= c_{i % n + 1} + 1, "
                    f"but {c} > {succ} + 1")
    else:
        if kupisch[-1] != 1:
            raise SpecError(f"linear Kupisch series needs c_{n} = 1, got {kupisch[-1]}")
        for i in range(n - 1):
            if kupisch[i] > kupisch[i + 1] + 1:
                raise SpecError(
                    f"linear Kupisch series needs c_{i + 1} <= c_{i + 2} + 1, "
                    f"but {kupisch[i]} > {kupisch[i + 1]} + 1")
            if kupisch[i] < 2:
                # c_i = 1 before the end makes the algebra a product of
                # two smaller algebras; run the blocks separately.
                raise SpecError(
                    f"linear Kupisch series with c_{i + 1} = 1 splits the algebra "
                    f"into a product; run the blocks separately")


def _validate_orientation(orientation) -> None:
    if orientation is None:
        raise SpecError("orientation word is required for typeA")
    bad = set(orientation) - {"<", ">"}
    if bad:
        raise SpecError(
            f"orientation word may only contain '<' and '>', got {sorted(bad)}")
