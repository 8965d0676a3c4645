"""Deciders for the two notions of fuzzy semiprimeness.

Pointwise form: ``f(x) >= f(x*x)`` for every x.
Order-theoretic form: every g with ``g*g <= f`` satisfies ``g <= f``.

The order-theoretic form is decided through fuzzy points. For the fuzzy point ``x_lam``,
``(x_lam * x_lam)(a)`` equals ``lam`` when ``a <= x*x`` and 0 otherwise, so
``x_lam * x_lam <= f`` iff ``lam <= min{f(a) : a <= x*x}``. Any violating g
gives the violating point ``x_{g(x)} <= g`` by monotonicity of the
composition. Hence f is order-theoretically semiprime iff ``f(x) >= threshold(x)`` for
every x. :func:`def2_bruteforce` checks the same statement by enumeration.

The ``*_violation`` functions take raw value sequences and only compare
values, so they give the same answers on any order-isomorphic encoding of
the grades (the search module feeds them integer ranks).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

import numpy as np

from .calculus import ONE, ZERO, FuzzySubset, format_grade, fuzzy_point
from .structures import OrderedGroupoid

BRUTEFORCE_BUDGET = 10**7
_CHUNK_CELLS = 1 << 22


class BudgetError(RuntimeError):
    """An enumeration would exceed its candidate budget."""


@dataclass(frozen=True)
class ElementWitness:
    """``x`` with ``f(x) < f(x*x)`` (or, for crisp sets, ``x*x in T``, ``x not in T``)."""

    x: object
    square: object
    grade: Optional[Fraction] = None
    square_grade: Optional[Fraction] = None

    def as_dict(self, label) -> dict:
        d = {"element": label(self.x), "square": label(self.square)}
        if self.grade is not None:
            d["grade"] = format_grade(self.grade)
            d["square_grade"] = format_grade(self.square_grade)
        return d


@dataclass(frozen=True)
class SubsetWitness:
    """A fuzzy subset ``g`` with ``g*g <= f`` and ``g(x) > f(x)``."""

    g: FuzzySubset
    x: int

    def as_dict(self, label) -> dict:
        return {
            "element": label(self.x),
            "g": self.g.as_labels(),
            "g_grade": format_grade(self.g(self.x)),
        }


@dataclass(frozen=True)
class TripleWitness:
    """``a <= x*y`` but ``min(f(x*x), f(y*y)) > f(a)``."""

    a: object
    x: object
    y: object
    lhs: Fraction
    rhs: Fraction

    def as_dict(self, label) -> dict:
        return {
            "a": label(self.a),
            "x": label(self.x),
            "y": label(self.y),
            "min_square_grades": format_grade(self.lhs),
            "grade_a": format_grade(self.rhs),
        }


@dataclass(frozen=True)
class WitnessReport:
    holds: bool
    witness: object = None
    checker: str = ""

    def as_dict(self, label=str) -> dict:
        """JSON-ready form; ``label`` maps witness elements to display strings."""
        return {
            "checker": self.checker,
            "holds": self.holds,
            "witness": None if self.witness is None else self.witness.as_dict(label),
        }


# value-level cores


def def1_violation(S: OrderedGroupoid, v: Sequence) -> Optional[int]:
    for x in S.elements:
        if v[x] < v[S.mul[x][x]]:
            return x
    return None


def thresholds(S: OrderedGroupoid, v: Sequence) -> list:
    return [min(v[a] for a in S.downset(S.mul[x][x])) for x in S.elements]


def def2_violation(S: OrderedGroupoid, v: Sequence) -> Optional[int]:
    for x in S.elements:
        if v[x] < min(v[a] for a in S.downset(S.mul[x][x])):
            return x
    return None


def property_a_violation(S: OrderedGroupoid, v: Sequence) -> Optional[tuple]:
    m = S.mul
    for a in S.elements:
        va = v[a]
        for x, y in S.pairs_above(a):
            sx, sy = v[m[x][x]], v[m[y][y]]
            if (sx if sx < sy else sy) > va:
                return a, x, y
    return None


# public deciders


def is_semiprime_def1(f: FuzzySubset) -> WitnessReport:
    S = f.structure
    x = def1_violation(S, f.grades)
    if x is None:
        return WitnessReport(True, None, "def1")
    sq = S.square(x)
    return WitnessReport(False, ElementWitness(x, sq, f(x), f(sq)), "def1")


def def2_threshold(f: FuzzySubset, x: int) -> Fraction:
    """Least grade of f on the down-set of ``x*x``: the largest ``lam`` with
    ``x_lam * x_lam <= f``."""
    S = f.structure
    return min(f(a) for a in S.downset(S.square(x)))


def is_semiprime_def2(f: FuzzySubset) -> WitnessReport:
    x = def2_violation(f.structure, f.grades)
    if x is None:
        return WitnessReport(True, None, "def2")
    point = fuzzy_point(f.structure, x, def2_threshold(f, x))
    return WitnessReport(False, SubsetWitness(point, x), "def2")


def has_property_a(f: FuzzySubset) -> WitnessReport:
    """``a <= x*y`` implies ``min(f(x*x), f(y*y)) <= f(a)``."""
    S = f.structure
    hit = property_a_violation(S, f.grades)
    if hit is None:
        return WitnessReport(True, None, "property-a")
    a, x, y = hit
    lhs = min(f(S.square(x)), f(S.square(y)))
    return WitnessReport(False, TripleWitness(a, x, y, lhs, f(a)), "property-a")


def crisp_semiprime(S: OrderedGroupoid, T) -> WitnessReport:
    T = set(T)
    if not T <= set(S.elements):
        raise ValueError(f"{sorted(T)} is not a subset of the carrier")
    for x in S.elements:
        if S.square(x) in T and x not in T:
            return WitnessReport(False, ElementWitness(x, S.square(x)), "crisp")
    return WitnessReport(True, None, "crisp")


def default_grid(f: FuzzySubset) -> tuple:
    return tuple(sorted({ZERO, ONE, *f.grades}))


def def2_bruteforce(f: FuzzySubset, grid=None, budget: int = BRUTEFORCE_BUDGET) -> WitnessReport:
    """Decide the order-theoretic form by enumerating every g with grades in ``grid``.

    Candidates are visited in mixed-radix order over the sorted grid (element 0
    most significant); the first violating g is returned. Arithmetic is on
    integer numerators over the grid's common denominator, so it is exact.
    """
    S = f.structure
    grid = default_grid(f) if grid is None else tuple(sorted(set(grid)))
    if not set(f.grades) <= set(grid):
        raise ValueError("grid must contain every grade of f")
    k, n = len(grid), S.n
    if k**n > budget:
        raise BudgetError(f"{k}^{n} candidates exceed the budget of {budget}")

    den = lcm(*(g.denominator for g in grid))
    dtype = np.int64 if den < 2**62 else object
    levels = np.array([g.numerator * (den // g.denominator) for g in grid], dtype=dtype)
    target = np.array([g.numerator * (den // g.denominator) for g in f.grades], dtype=dtype)

    xs, ys = np.divmod(np.arange(n * n), n)
    prods = np.array([S.mul[x][y] for x, y in zip(xs, ys)])
    above = np.array(S.leq, dtype=bool)[:, prods]  # above[a, p]: a <= x_p * y_p

    total = k**n
    chunk = max(1, _CHUNK_CELLS // (n * n * n))
    for start in range(0, total, chunk):
        # row r of `digits` is the base-k expansion of candidate number start + r
        idx = np.arange(start, min(total, start + chunk))
        digits = np.stack(np.unravel_index(idx, (k,) * n), axis=1)
        G = levels[digits]
        mins = np.minimum(G[:, xs], G[:, ys])
        sq = np.where(above[None, :, :], mins[:, None, :], 0).max(axis=2)
        bad = (sq <= target).all(axis=1) & (G > target).any(axis=1)
        if bad.any():
            r = int(np.argmax(bad))
            g = FuzzySubset(S, tuple(grid[i] for i in digits[r]))
            x = next(i for i in S.elements if g(i) > f(i))
            return WitnessReport(False, SubsetWitness(g, x), "def2-bruteforce")
    return WitnessReport(True, None, "def2-bruteforce")


def recheck(f: FuzzySubset, report: WitnessReport) -> bool:
    """True iff the report's witness is a genuine violation for f.

    Holding reports have nothing to recheck and return True.
    """
    if report.holds:
        return True
    S, w = f.structure, report.witness
    if report.checker == "def1":
        return w.square == S.square(w.x) and f(w.x) < f(w.square)
    if report.checker in ("def2", "def2-bruteforce"):
        return (w.g * w.g) <= f and w.g(w.x) > f(w.x)
    if report.checker == "property-a":
        a, x, y = w.a, w.x, w.y
        return S.leq[a][S.product(x, y)] and min(f(S.square(x)), f(S.square(y))) > f(a)
    raise ValueError(f"cannot recheck {report.checker!r}")
