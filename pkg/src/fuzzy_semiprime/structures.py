"""Finite ordered groupoids: multiplication table plus a compatible partial order.

Elements are the integers ``0..n-1``; labels are for display only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

MAX_ELEMENTS = 64


class StructureError(ValueError):
    """Raised for malformed tables (wrong shape, out-of-range entries, bad labels)."""


class AxiomError(ValueError):
    """Raised when well-formed tables violate an ordered-groupoid axiom."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        first = report.violations[0]
        super().__init__(f"{first.axiom} violated at {first.witness}")


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance.

    Witness layout per axiom:
      reflexive        (a,)        a <= a missing
      antisymmetric    (a, b)      a <= b and b <= a with a != b
      transitive       (a, b, c)   a <= b, b <= c but not a <= c
      right-compatible (a, b, c)   a <= b but not a*c <= b*c
      left-compatible  (a, b, c)   a <= b but not c*a <= c*b
    """

    axiom: str
    witness: tuple


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> set:
        return {v.axiom for v in self.violations}


def _check_shape(mul, leq, labels):
    n = len(mul)
    if not 1 <= n <= MAX_ELEMENTS:
        raise StructureError(f"element count must be in [1, {MAX_ELEMENTS}], got {n}")
    for i, row in enumerate(mul):
        if len(row) != n:
            raise StructureError(f"mul row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise StructureError(f"mul[{i}][{j}] = {v!r} is not an element index")
    if len(leq) != n:
        raise StructureError(f"leq has {len(leq)} rows, expected {n}")
    for i, row in enumerate(leq):
        if len(row) != n:
            raise StructureError(f"leq row {i} has length {len(row)}, expected {n}")
    if labels is not None:
        if len(labels) != n:
            raise StructureError(f"{len(labels)} labels for {n} elements")
        if any(not isinstance(s, str) or not s for s in labels):
            raise StructureError("labels must be nonempty strings")
        if len(set(labels)) != n:
            raise StructureError("labels must be unique")


def check_axioms(mul: Sequence[Sequence[int]], leq: Sequence[Sequence[bool]]) -> ValidationReport:
    """Scan every axiom instance on well-formed tables, collecting all violations."""
    n = len(mul)
    rng = range(n)
    found = []
    found += [Violation("reflexive", (a,)) for a in rng if not leq[a][a]]
    found += [
        Violation("antisymmetric", (a, b))
        for a in rng for b in rng
        if a < b and leq[a][b] and leq[b][a]
    ]
    found += [
        Violation("transitive", (a, b, c))
        for a, b, c in product(rng, repeat=3)
        if leq[a][b] and leq[b][c] and not leq[a][c]
    ]
    for a, b in product(rng, repeat=2):
        if not leq[a][b]:
            continue
        for c in rng:
            if not leq[mul[a][c]][mul[b][c]]:
                found.append(Violation("right-compatible", (a, b, c)))
            if not leq[mul[c][a]][mul[c][b]]:
                found.append(Violation("left-compatible", (a, b, c)))
    return ValidationReport(tuple(found))


def validate(mul, leq, labels=None) -> ValidationReport:
    """Validate raw tables. Malformed input raises StructureError; axiom
    failures are reported, not raised."""
    _check_shape(mul, leq, labels)
    leq = [[bool(v) for v in row] for row in leq]
    return check_axioms(mul, leq)


def order_closure(n: int, pairs: Iterable[tuple]) -> tuple:
    """Reflexive-transitive closure of a relation on ``range(n)`` (Warshall)."""
    rel = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise StructureError(f"order pair ({a}, {b}) out of range")
        rel[a][b] = True
    for k in range(n):
        rk = rel[k]
        for i in range(n):
            if rel[i][k]:
                ri = rel[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return tuple(tuple(row) for row in rel)


def _default_labels(n):
    return tuple(chr(ord("a") + i) if n <= 26 else f"e{i}" for i in range(n))


@dataclass(frozen=True)
class OrderedGroupoid:
    """Immutable, validated ordered groupoid.

    Build through :meth:`from_tables`, :meth:`from_order` or :meth:`discrete`;
    the plain constructor trusts its arguments.
    """

    mul: tuple
    leq: tuple
    labels: tuple = field(default=None, compare=True)

    def __post_init__(self):
        if self.labels is None:
            object.__setattr__(self, "labels", _default_labels(len(self.mul)))

    @classmethod
    def from_tables(cls, mul, leq, labels=None) -> "OrderedGroupoid":
        report = validate(mul, leq, labels)
        if not report.ok:
            raise AxiomError(report)
        return cls(
            tuple(tuple(row) for row in mul),
            tuple(tuple(bool(v) for v in row) for row in leq),
            None if labels is None else tuple(labels),
        )

    @classmethod
    def from_order(cls, mul, pairs=(), labels=None) -> "OrderedGroupoid":
        """Order given as any relation; its reflexive-transitive closure is used."""
        n = len(mul)
        if not 1 <= n <= MAX_ELEMENTS:
            raise StructureError(f"element count must be in [1, {MAX_ELEMENTS}], got {n}")
        return cls.from_tables(mul, order_closure(n, pairs), labels)

    @classmethod
    def discrete(cls, mul, labels=None) -> "OrderedGroupoid":
        """A plain groupoid, i.e. the trivial (equality) order."""
        return cls.from_order(mul, (), labels)

    @property
    def n(self) -> int:
        return len(self.mul)

    @property
    def elements(self) -> range:
        return range(len(self.mul))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def product(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def square(self, x: int) -> int:
        return self.mul[x][x]

    def is_associative(self) -> bool:
        m = self.mul
        return all(m[m[x][y]][z] == m[x][m[y][z]] for x, y, z in product(self.elements, repeat=3))

    def greatest_element(self) -> Optional[int]:
        for e in self.elements:
            if all(self.leq[a][e] for a in self.elements):
                return e
        return None

    @cached_property
    def _above(self) -> tuple:
        n = self.n
        pairs = [(x, y) for x in range(n) for y in range(n)]
        return tuple(
            tuple(p for p in pairs if self.leq[a][self.mul[p[0]][p[1]]]) for a in range(n)
        )

    def pairs_above(self, a: int) -> tuple:
        """All (x, y) with a <= x*y, in lexicographic order."""
        return self._above[a]

    @cached_property
    def _downsets(self) -> tuple:
        n = self.n
        return tuple(tuple(a for a in range(n) if self.leq[a][b]) for b in range(n))

    def downset(self, b: int) -> tuple:
        """All a with a <= b, ascending."""
        return self._downsets[b]

    def strict_pairs(self) -> list:
        return [(a, b) for a in self.elements for b in self.elements if a != b and self.leq[a][b]]

    def covering_pairs(self) -> list:
        """Hasse diagram edges: a < b with nothing strictly between."""
        strict = self.strict_pairs()
        return [
            (a, b) for a, b in strict
            if not any(self.leq[a][c] and self.leq[c][b] for c in self.elements if c not in (a, b))
        ]

    def __repr__(self):
        return f"OrderedGroupoid(n={self.n}, labels={self.labels})"
