"""Exhaustive enumeration of small ordered groupoids and fuzzy subsets.

Enumeration is over labeled structures. Orders are visited in lexicographic
order of their relation matrices, multiplication tables in row-major
lexicographic order and fuzzy subsets in mixed-radix order over the sorted
grid, so the first witness of any scan is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator

from .calculus import ONE, ZERO, FuzzySubset, compose, compose_values, format_grade, grade
from .semiprime import (
    BudgetError,
    WitnessReport,
    def1_violation,
    def2_violation,
    has_property_a,
    is_semiprime_def1,
    is_semiprime_def2,
    property_a_violation,
)
from .structures import OrderedGroupoid, order_closure

MAX_SEARCH_N = 4
GOALS = ("def2-not-def1", "property-a-violations", "nonassoc-compose", "theorem5-scan", "theorem4-scan")


def enumerate_posets(n: int) -> Iterator[tuple]:
    """Every partial order on ``range(n)`` as a tuple-of-tuples matrix."""
    if not 1 <= n <= MAX_SEARCH_N:
        raise ValueError(f"poset size must be in [1, {MAX_SEARCH_N}], got {n}")
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    rng = range(n)
    for bits in product((False, True), repeat=len(cells)):
        rel = [[i == j for j in rng] for i in rng]
        for (i, j), b in zip(cells, bits):
            rel[i][j] = b
        if any(rel[i][j] and rel[j][i] for i, j in cells):
            continue
        if any(rel[i][j] and rel[j][k] and not rel[i][k] for i in rng for j in rng for k in rng):
            continue
        yield tuple(tuple(row) for row in rel)


def _cell_constraints(leq):
    """For each table cell (row-major), the compatibility constraints linking it
    to earlier cells: (other cell, True) means need leq[t[other]][t[cell]]."""
    n = len(leq)
    cons = [[] for _ in range(n * n)]

    def link(lo, hi):
        # constraint: leq[t[lo]][t[hi]]
        if lo < hi:
            cons[hi].append((lo, True))
        else:
            cons[lo].append((hi, False))

    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b]:
                for c in range(n):
                    link(a * n + c, b * n + c)  # a*c <= b*c
                    link(c * n + a, c * n + b)  # c*a <= c*b
    return cons


def enumerate_compatible_multiplications(leq, labels=None) -> Iterator[OrderedGroupoid]:
    """Every multiplication table compatible with the partial order ``leq``.

    Cells are filled row-major with candidate values ascending; each new cell is
    checked against the compatibility constraints with already-filled cells.
    """
    n = len(leq)
    leq = tuple(tuple(bool(v) for v in row) for row in leq)
    cons = _cell_constraints(leq)
    size = n * n
    table = [0] * size
    choice = [-1] * size
    i = 0
    while i >= 0:
        choice[i] += 1
        if choice[i] >= n:
            choice[i] = -1
            i -= 1
            continue
        v = choice[i]
        ok = True
        for j, earlier_low in cons[i]:
            if earlier_low:
                if not leq[table[j]][v]:
                    ok = False
                    break
            elif not leq[v][table[j]]:
                ok = False
                break
        if not ok:
            continue
        table[i] = v
        if i == size - 1:
            mul = tuple(tuple(table[r * n:(r + 1) * n]) for r in range(n))
            yield OrderedGroupoid(mul, leq, labels)
        else:
            i += 1


def enumerate_structures(max_n: int) -> Iterator[OrderedGroupoid]:
    """All ordered groupoids with 1..max_n elements, in canonical search order."""
    for n in range(1, max_n + 1):
        for leq in enumerate_posets(n):
            yield from enumerate_compatible_multiplications(leq)


def canonical_form(S: OrderedGroupoid) -> tuple:
    """Isomorphism invariant: least relabeled encoding over all permutations."""
    n = S.n
    best = None
    for p in permutations(range(n)):
        inv = [0] * n
        for i, pi in enumerate(p):
            inv[pi] = i
        mul = tuple(p[S.mul[inv[x]][inv[y]]] for x in range(n) for y in range(n))
        leq = tuple(S.leq[inv[x]][inv[y]] for x in range(n) for y in range(n))
        enc = (n, leq, mul)
        if best is None or enc < best:
            best = enc
    return best


def dedupe_isomorphic(structures) -> list:
    seen, out = set(), []
    for S in structures:
        key = canonical_form(S)
        if key not in seen:
            seen.add(key)
            out.append(S)
    return out


def enumerate_fuzzy(S: OrderedGroupoid, grid, budget: int = 10**7) -> Iterator[FuzzySubset]:
    grid = tuple(sorted({grade(g) for g in grid}))
    if not grid:
        raise ValueError("empty grade grid")
    if len(grid) ** S.n > budget:
        raise BudgetError(f"{len(grid)}^{S.n} fuzzy subsets exceed the budget of {budget}")
    for values in product(grid, repeat=S.n):
        yield FuzzySubset(S, values)


@dataclass(frozen=True)
class SearchTask:
    max_n: int
    grade_grid: tuple
    goal: str
    budget: int = 10**8

    def __post_init__(self):
        grid = tuple(sorted({grade(g) for g in self.grade_grid}))
        object.__setattr__(self, "grade_grid", grid)
        if ZERO not in grid or ONE not in grid:
            raise ValueError("grade grid must contain 0 and 1")
        if not 1 <= self.max_n <= MAX_SEARCH_N:
            raise ValueError(f"max_n must be in [1, {MAX_SEARCH_N}]")
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.goal not in GOALS:
            raise ValueError(f"unknown goal {self.goal!r}; expected one of {', '.join(GOALS)}")


@dataclass(frozen=True)
class AssocWitness:
    """Element where ``(f*g)*h`` and ``f*(g*h)`` differ."""

    a: int
    left: Fraction
    right: Fraction

    def as_dict(self, label) -> dict:
        return {"element": label(self.a), "left": format_grade(self.left), "right": format_grade(self.right)}


@dataclass(frozen=True)
class Hit:
    structure: OrderedGroupoid
    subsets: tuple
    report: WitnessReport

    def as_dict(self) -> dict:
        S = self.structure
        return {
            "structure": structure_dict(S),
            "subsets": [f.as_labels() for f in self.subsets],
            "report": self.report.as_dict(S.labels.__getitem__),
        }


@dataclass
class SearchResult:
    examined: int = 0
    found: list = field(default_factory=list)
    exhausted: bool = True


def structure_dict(S: OrderedGroupoid) -> dict:
    lab = S.labels
    return {
        "elements": list(lab),
        "order": [[lab[a], lab[b]] for a, b in S.covering_pairs()],
        "mul": [[lab[v] for v in row] for row in S.mul],
    }


def associativity_report(f, g, h) -> WitnessReport:
    left = compose(compose(f, g), h)
    right = compose(f, compose(g, h))
    for a in f.structure.elements:
        if left(a) != right(a):
            return WitnessReport(False, AssocWitness(a, left(a), right(a)), "associativity")
    return WitnessReport(True, None, "associativity")


def _scan_single(S, grid, goal):
    """Yield (ranks, is_hit) for every rank vector in mixed-radix order."""
    k = len(grid)
    for v in product(range(k), repeat=S.n):
        if goal == "def2-not-def1":
            hit = def1_violation(S, v) is not None and def2_violation(S, v) is None
        elif goal == "property-a-violations":
            hit = property_a_violation(S, v) is not None
        elif goal == "theorem4-scan":
            hit = def1_violation(S, v) is None and def2_violation(S, v) is not None
        else:  # theorem5-scan
            hit = (
                def1_violation(S, v) is not None
                and property_a_violation(S, v) is None
                and def2_violation(S, v) is None
            )
        yield v, hit


def _report_for(goal, f):
    if goal == "def2-not-def1" or goal == "theorem5-scan":
        return is_semiprime_def1(f)
    if goal == "property-a-violations":
        return has_property_a(f)
    return is_semiprime_def2(f)


def run_search(task: SearchTask) -> SearchResult:
    """Scan posets x compatible tables x fuzzy subsets up to ``task.max_n``.

    The deciders run on integer ranks into the sorted grid (an order
    isomorphism, so verdicts are unchanged); hits are rebuilt with exact grades
    and re-decided before being recorded. For ``nonassoc-compose`` only the
    first differing triple of each non-associative structure is kept.
    """
    grid = task.grade_grid
    result = SearchResult()
    for S in enumerate_structures(task.max_n):
        if task.goal == "nonassoc-compose":
            if S.is_associative():
                continue
            if not _scan_nonassoc(S, grid, task, result):
                return result
            continue
        for v, hit in _scan_single(S, grid, task.goal):
            if result.examined >= task.budget:
                result.exhausted = False
                return result
            result.examined += 1
            if hit:
                f = FuzzySubset(S, tuple(grid[i] for i in v))
                report = _report_for(task.goal, f)
                assert not report.holds, "rank scan and exact decider disagree"
                result.found.append(Hit(S, (f,), report))
    return result


def _scan_nonassoc(S, grid, task, result) -> bool:
    k, n = len(grid), S.n
    vectors = list(product(range(k), repeat=n))
    for fv, gv, hv in product(vectors, repeat=3):
        if result.examined >= task.budget:
            result.exhausted = False
            return False
        result.examined += 1
        fg = compose_values(S, fv, gv, 0)
        gh = compose_values(S, gv, hv, 0)
        if compose_values(S, fg, hv, 0) != compose_values(S, fv, gh, 0):
            subsets = tuple(FuzzySubset(S, tuple(grid[i] for i in v)) for v in (fv, gv, hv))
            report = associativity_report(*subsets)
            assert not report.holds
            result.found.append(Hit(S, subsets, report))
            break
    return True


def random_poset(n: int, rng) -> tuple:
    """Random partial order: closure of random edges along a random linear extension."""
    perm = list(range(n))
    rng.shuffle(perm)
    density = rng.random()
    edges = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return order_closure(n, edges)


def random_structure(n: int, rng, leq=None, max_steps: int = 20000) -> OrderedGroupoid:
    """Random ordered groupoid on n elements.

    Cells are filled row-major with values tried in random order, backtracking
    on compatibility conflicts; a run that stalls is restarted.
    """
    leq = random_poset(n, rng) if leq is None else tuple(tuple(bool(v) for v in r) for r in leq)
    cons = _cell_constraints(leq)
    size = n * n
    while True:
        table = [0] * size
        options = [None] * size
        i, steps = 0, 0
        while 0 <= i < size and steps < max_steps:
            steps += 1
            if options[i] is None:
                options[i] = rng.sample(range(n), n)
            if not options[i]:
                options[i] = None
                i -= 1
                continue
            v = options[i].pop()
            if all(leq[table[j]][v] if low else leq[v][table[j]] for j, low in cons[i]):
                table[i] = v
                i += 1
        if i == size:
            mul = tuple(tuple(table[r * n:(r + 1) * n]) for r in range(n))
            return OrderedGroupoid(mul, leq)
