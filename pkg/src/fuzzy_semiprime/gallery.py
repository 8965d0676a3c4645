"""Exact reproductions of the two counterexamples on infinite carriers.

* Naturals ``{2, 3, 4, ...}`` with the usual product and order, and the step
  function ``f(2) = 0``, ``f(x) = 1`` for ``x > 2``: pointwise semiprimeness
  fails at 2, while the fuzzy-point criterion holds everywhere.
* ``[0, 1]`` with the usual product and order and ``f`` the identity:
  pointwise semiprime, yet ``1/10 <= (1/2)(1/3)`` with
  ``min(f(1/4), f(1/9)) = 1/9 > 1/10``.

The infinite carriers are handled by windows and exact symbolic products;
nothing here claims a machine check of the order-theoretic definition over
all fuzzy subsets of an infinite set.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from math import isqrt

from .calculus import ONE, ZERO, FuzzySubset
from .semiprime import ElementWitness, TripleWitness, WitnessReport
from .structures import OrderedGroupoid

REMARK6_SAMPLE = tuple(
    Fraction(p, q) for p, q in [(0, 1), (1, 10), (1, 9), (1, 6), (1, 4), (1, 3), (1, 2), (1, 1)]
)
REMARK6_TRIPLE = (Fraction(1, 10), Fraction(1, 2), Fraction(1, 3))


def step(x: int) -> Fraction:
    """0 at 2, 1 above."""
    if x < 2:
        raise ValueError(f"{x} is not in the carrier {{2, 3, ...}}")
    return ZERO if x == 2 else ONE


@dataclass(frozen=True)
class Theorem4Window:
    """The carrier ``{2, ..., N}`` with the step function."""

    N: int

    def __post_init__(self):
        if self.N < 4:
            raise ValueError(f"window bound must be at least 4, got {self.N}")

    @property
    def carrier(self) -> range:
        return range(2, self.N + 1)

    @property
    def squares_inside(self) -> range:
        """Elements x whose square still lies in the window."""
        return range(2, isqrt(self.N) + 1)

    def f(self, x: int) -> Fraction:
        if not 2 <= x <= self.N:
            raise ValueError(f"{x} outside window {{2, ..., {self.N}}}")
        return step(x)


def theorem4_def1_fails(N: int = 4) -> WitnessReport:
    """Scan ``f(x) >= f(x*x)`` for every windowed x with ``x*x <= N``."""
    w = Theorem4Window(N)
    for x in w.squares_inside:
        if w.f(x) < w.f(x * x):
            return WitnessReport(False, ElementWitness(x, x * x, w.f(x), w.f(x * x)), "def1")
    return WitnessReport(True, None, "def1")


def theorem4_def2_holds(N: int) -> WitnessReport:
    """Per-element fuzzy-point criterion ``f(x) >= min{f(a) : 2 <= a <= x*x}``
    for every x with ``x*x <= N``; each down-set lies inside the window."""
    w = Theorem4Window(N)
    r = isqrt(N)
    # prefix_min[i] = min f over {2, ..., i + 2}
    values = [step(a) for a in range(2, r * r + 1)]
    prefix_min = list(accumulate(values, lambda p, q: q if exceeds(p, q) else p))
    for x in w.squares_inside:
        lam = prefix_min[x * x - 2]
        if exceeds(lam, values[x - 2]):
            return WitnessReport(False, ElementWitness(x, x * x, w.f(x), lam), "def2-window")
    return WitnessReport(True, None, "def2-window")


def theorem4_structure(N: int) -> OrderedGroupoid:
    """Finite stand-in: ``{2, ..., N}`` as a chain with products capped at N.

    Capping keeps the product monotone and associative, so this is an ordered
    semigroup on which the general deciders run directly.
    """
    w = Theorem4Window(N)
    elems = list(w.carrier)
    idx = {x: i for i, x in enumerate(elems)}
    mul = [[idx[min(x * y, N)] for y in elems] for x in elems]
    leq = [[x <= y for y in elems] for x in elems]
    return OrderedGroupoid.from_tables(mul, leq, [str(x) for x in elems])


def theorem4_fuzzy(N: int) -> FuzzySubset:
    S = theorem4_structure(N)
    return FuzzySubset(S, tuple(step(int(lab)) for lab in S.labels))


def exceeds(p: Fraction, q: Fraction) -> bool:
    """``p > q`` by integer cross-multiplication (denominators are positive)."""
    return p.numerator * q.denominator > q.numerator * p.denominator


def remark6_check(sample=REMARK6_SAMPLE) -> tuple:
    """Return (pointwise-semiprime report, condition-(a) report) for the
    identity map on ``[0, 1]``.

    Products are exact rationals; the sample need not be closed under them.
    """
    for x in sample:
        if not ZERO <= x <= ONE:
            raise ValueError(f"{x} is outside [0, 1]")
        if exceeds(x * x, x):
            def1 = WitnessReport(False, ElementWitness(x, x * x, x, x * x), "def1")
            break
    else:
        def1 = WitnessReport(True, None, "def1")

    a, x, y = REMARK6_TRIPLE
    premise = not exceeds(a, x * y)
    lhs = y * y if exceeds(x * x, y * y) else x * x
    if premise and exceeds(lhs, a):
        prop_a = WitnessReport(False, TripleWitness(a, x, y, lhs, a), "property-a")
    else:
        prop_a = WitnessReport(True, None, "property-a")
    return def1, prop_a


def theorem4_transcript(N: int) -> list:
    def1 = theorem4_def1_fails(N)
    def2 = theorem4_def2_holds(N)
    r = isqrt(N)
    w = def1.witness
    lines = [
        f"carrier window {{2, ..., {N}}}, usual product and order; f(2) = 0, f(x) = 1 for x > 2",
        f"pointwise semiprime: {'holds' if def1.holds else 'fails'}"
        + ("" if def1.holds else f" at x = {w.x}: f({w.x}) = {w.grade} < f({w.square}) = {w.square_grade}"),
        f"fuzzy-point criterion f(x) >= min{{f(a) : 2 <= a <= x*x}} checked for x = 2..{r}: "
        + ("holds" if def2.holds else f"fails at x = {def2.witness.x}"),
        "x = 2: down-set {2, 3, 4} has minimum f(2) = 0, so no point above f(2) squares under f",
        "x > 2: f(x) = 1 bounds every grade",
        "scope: per-element check on the window; not a machine proof over all g on the infinite carrier",
    ]
    return lines


def remark6_transcript() -> list:
    def1, prop_a = remark6_check()
    a, x, y = REMARK6_TRIPLE
    lhs = prop_a.witness.lhs
    lines = [
        "carrier [0, 1], usual product and order; f is the identity",
        "sample: " + ", ".join(str(s) for s in REMARK6_SAMPLE),
        f"pointwise semiprime on sample (x*x <= x): {'holds' if def1.holds else 'fails'}",
        f"condition (a) at a = {a}, x = {x}, y = {y}: {a} <= {x * y} = x*y, "
        f"min(f({x * x}), f({y * y})) = {lhs} vs f(a) = {a}: "
        + ("violated" if not prop_a.holds else "satisfied"),
        f"cross-multiplication: {lhs.numerator}*{a.denominator} = {lhs.numerator * a.denominator}"
        f" > {a.numerator * lhs.denominator} = {a.numerator}*{lhs.denominator}",
    ]
    return lines
