"""Fuzzy subsets with exact rational grades and the sup-min composition."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .structures import OrderedGroupoid

Grade = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

GradeLike = Union[Fraction, int, str]


class GradeError(ValueError):
    pass


def grade(value: GradeLike) -> Fraction:
    """Coerce to an exact grade in [0, 1].

    Accepts Fractions, ints and strings of the form ``"p"`` or ``"p/q"``.
    Floats are refused: they cannot carry exact grades.
    """
    if isinstance(value, Fraction):
        g = value
    elif isinstance(value, bool) or isinstance(value, float):
        raise GradeError(f"grade must be exact, got {value!r}")
    elif isinstance(value, int):
        g = Fraction(value)
    elif isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        if not num.isdigit() or (sep and not den.isdigit()):
            raise GradeError(f"malformed grade {value!r}")
        if sep and int(den) == 0:
            raise GradeError(f"zero denominator in grade {value!r}")
        g = Fraction(int(num), int(den) if sep else 1)
    else:
        raise GradeError(f"cannot interpret {value!r} as a grade")
    if not ZERO <= g <= ONE:
        raise GradeError(f"grade out of [0,1]: {value}")
    return g


def format_grade(g: Fraction) -> str:
    """Lowest terms, ``p/q``; 0 and 1 print bare."""
    return str(g.numerator) if g.denominator == 1 else f"{g.numerator}/{g.denominator}"


def parse_grid(spec: str) -> tuple:
    """Parse ``"0,1/2,1"`` into a sorted tuple of distinct grades."""
    parts = [p for p in spec.split(",") if p.strip()]
    if not parts:
        raise GradeError("empty grade grid")
    return tuple(sorted({grade(p) for p in parts}))


@dataclass(frozen=True)
class FuzzySubset:
    """A total map from the elements of ``structure`` into [0, 1].

    ``f <= g`` is the pointwise order and ``f * g`` the sup-min composition.
    """

    structure: OrderedGroupoid
    grades: tuple

    def __post_init__(self):
        if len(self.grades) != self.structure.n:
            raise ValueError(f"{len(self.grades)} grades for {self.structure.n} elements")
        object.__setattr__(self, "grades", tuple(grade(v) for v in self.grades))

    def __call__(self, x: int) -> Fraction:
        return self.grades[x]

    def __le__(self, other: "FuzzySubset") -> bool:
        return leq_fuzzy(self, other)

    def __ge__(self, other: "FuzzySubset") -> bool:
        return leq_fuzzy(other, self)

    def __mul__(self, other: "FuzzySubset") -> "FuzzySubset":
        return compose(self, other)

    def as_labels(self) -> dict:
        return {lab: format_grade(g) for lab, g in zip(self.structure.labels, self.grades)}

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.as_labels().items())
        return f"FuzzySubset({{{body}}})"


def _same_structure(f: FuzzySubset, g: FuzzySubset):
    if f.structure is not g.structure and f.structure != g.structure:
        raise ValueError("fuzzy subsets live on different structures")


def compose_values(S: OrderedGroupoid, fv, gv, zero=ZERO) -> list:
    """Sup-min composition on raw value sequences.

    Works for any totally ordered value type; only ``min``/``max`` are used.
    """
    out = []
    for a in S.elements:
        best = zero
        for x, y in S.pairs_above(a):
            v = fv[x] if fv[x] < gv[y] else gv[y]
            if v > best:
                best = v
        out.append(best)
    return out


def compose(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    """``(f*g)(a)`` is the max of ``min(f(x), g(y))`` over pairs with ``a <= x*y``,
    and 0 if there are none."""
    _same_structure(f, g)
    return FuzzySubset(f.structure, tuple(compose_values(f.structure, f.grades, g.grades)))


def square(f: FuzzySubset) -> FuzzySubset:
    return compose(f, f)


def leq_fuzzy(f: FuzzySubset, g: FuzzySubset) -> bool:
    _same_structure(f, g)
    return all(a <= b for a, b in zip(f.grades, g.grades))


def constant(S: OrderedGroupoid, value: GradeLike) -> FuzzySubset:
    return FuzzySubset(S, (grade(value),) * S.n)


def zero(S: OrderedGroupoid) -> FuzzySubset:
    return constant(S, ZERO)


def fuzzy_point(S: OrderedGroupoid, x: int, lam: GradeLike) -> FuzzySubset:
    """The fuzzy point ``x_lam``: ``lam`` at x and 0 elsewhere."""
    if not 0 <= x < S.n:
        raise IndexError(f"element {x} out of range")
    lam = grade(lam)
    return FuzzySubset(S, tuple(lam if y == x else ZERO for y in S.elements))


def characteristic(S: OrderedGroupoid, A: Iterable[int]) -> FuzzySubset:
    A = set(A)
    if not A <= set(S.elements):
        raise ValueError(f"{sorted(A)} is not a subset of the carrier")
    return FuzzySubset(S, tuple(ONE if x in A else ZERO for x in S.elements))


def fuzzy_from_labels(S: OrderedGroupoid, mapping: dict) -> FuzzySubset:
    """Build from ``{label: grade}``; every element must be assigned."""
    missing = [lab for lab in S.labels if lab not in mapping]
    if missing:
        raise ValueError(f"no grade for elements {missing}")
    return FuzzySubset(S, tuple(grade(mapping[lab]) for lab in S.labels))
