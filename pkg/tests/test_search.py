import random
from fractions import Fraction
from itertools import product

import pytest

from oracles import all_posets_by_filter, compatible_tables_by_filter
from fuzzy_semiprime.calculus import FuzzySubset
from fuzzy_semiprime.search import (
    SearchTask,
    canonical_form,
    dedupe_isomorphic,
    enumerate_compatible_multiplications,
    enumerate_fuzzy,
    enumerate_posets,
    enumerate_structures,
    random_structure,
    run_search,
)
from fuzzy_semiprime.semiprime import (
    BudgetError,
    def2_bruteforce,
    has_property_a,
    is_semiprime_def1,
    is_semiprime_def2,
    recheck,
)
from fuzzy_semiprime.structures import validate

F = Fraction


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 19), (4, 219)])
def test_labeled_poset_counts(n, count):
    posets = list(enumerate_posets(n))
    assert len(posets) == len(set(posets)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_posets_match_filter_baseline(n):
    assert set(enumerate_posets(n)) == set(all_posets_by_filter(n))


def test_poset_bounds():
    with pytest.raises(ValueError):
        list(enumerate_posets(0))
    with pytest.raises(ValueError):
        list(enumerate_posets(5))


def test_multiplication_examples():
    assert len(list(enumerate_compatible_multiplications(((True,),)))) == 1
    antichain = ((True, False), (False, True))
    assert len(list(enumerate_compatible_multiplications(antichain))) == 16
    chain = ((True, True), (False, True))
    assert {S.mul for S in enumerate_compatible_multiplications(chain)} == set(compatible_tables_by_filter(chain))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pruned_equals_naive_filter(n):
    for leq in enumerate_posets(n):
        pruned = [S.mul for S in enumerate_compatible_multiplications(leq)]
        assert len(pruned) == len(set(pruned))
        assert set(pruned) == set(compatible_tables_by_filter(leq))


def test_enumerated_structures_revalidate_and_are_ordered():
    seen = list(enumerate_structures(3))
    assert len(seen) == 23960
    for S in seen[::7]:
        assert validate(S.mul, S.leq).ok
    # within one order, tables come in row-major lexicographic order
    chain = ((True, True), (False, True))
    tables = [S.mul for S in enumerate_compatible_multiplications(chain)]
    assert tables == sorted(tables)


def test_isomorphism_dedup():
    # the two chains a<b and b<a with matching constant tables are isomorphic
    structures = list(enumerate_structures(2))
    classes = dedupe_isomorphic(structures)
    assert len(classes) < len(structures)
    keys = {canonical_form(S) for S in structures}
    assert len(keys) == len(classes)


def test_enumerate_fuzzy_counts(singleton, chain_const_a):
    assert len(list(enumerate_fuzzy(singleton, (0, 1)))) == 2
    assert len(list(enumerate_fuzzy(chain_const_a, (0, "1/2", 1)))) == 9
    S3 = next(S for S in enumerate_structures(3) if S.n == 3)
    subsets = list(enumerate_fuzzy(S3, (0, 1)))
    assert len(subsets) == len(set(subsets)) == 8
    assert subsets[1].grades == (F(0), F(0), F(1))
    with pytest.raises(BudgetError):
        list(enumerate_fuzzy(S3, (0, 1), budget=7))


def test_task_validation():
    with pytest.raises(ValueError):
        SearchTask(2, ("1/2", 1), "theorem4-scan")
    with pytest.raises(ValueError):
        SearchTask(5, (0, 1), "theorem4-scan")
    with pytest.raises(ValueError):
        SearchTask(2, (0, 1), "no-such-goal")
    with pytest.raises(ValueError):
        SearchTask(2, (0, 1), "theorem4-scan", budget=0)


def test_def2_not_def1_finds_the_chain_witness():
    result = run_search(SearchTask(2, (0, 1), "def2-not-def1"))
    assert result.exhausted and result.found
    keys = {(h.structure.mul, h.structure.leq, h.subsets[0].grades) for h in result.found}
    assert (((1, 1), (1, 1)), ((True, True), (False, True)), (F(0), F(1))) in keys
    for h in result.found:
        f = h.subsets[0]
        assert validate(h.structure.mul, h.structure.leq).ok
        assert not is_semiprime_def1(f).holds and recheck(f, h.report)
        assert is_semiprime_def2(f).holds and def2_bruteforce(f).holds


@pytest.mark.parametrize("goal", ["theorem4-scan", "theorem5-scan"])
def test_theorem_scans_small_are_empty(goal):
    result = run_search(SearchTask(3, (0, "1/2", 1), goal))
    assert result.exhausted and result.found == []
    assert result.examined == sum(3**S.n for S in enumerate_structures(3))


def test_property_a_hits_recheck():
    result = run_search(SearchTask(2, (0, 1), "property-a-violations"))
    assert result.found
    for h in result.found:
        assert recheck(h.subsets[0], h.report)
        assert not has_property_a(h.subsets[0]).holds


def test_nonassoc_compose_hits():
    result = run_search(SearchTask(2, (0, 1), "nonassoc-compose"))
    assert result.exhausted and result.found
    for h in result.found:
        f, g, h3 = h.subsets
        assert not h.structure.is_associative()
        assert ((f * g) * h3).grades != (f * (g * h3)).grades


def test_budget_stops_early_and_is_deterministic():
    task = SearchTask(3, (0, 1), "def2-not-def1", budget=500)
    a, b = run_search(task), run_search(task)
    assert not a.exhausted and a.examined == 500
    assert [x.as_dict() for x in a.found] == [x.as_dict() for x in b.found]


def test_rank_scan_agrees_with_exact_deciders():
    grid = (F(0), F(1, 3), F(2, 3), F(1))
    result = run_search(SearchTask(2, grid, "property-a-violations"))
    hits = {(h.structure, h.subsets[0].grades) for h in result.found}
    expected = set()
    for S in enumerate_structures(2):
        for v in product(grid, repeat=S.n):
            if not has_property_a(FuzzySubset(S, v)).holds:
                expected.add((S, v))
    assert hits == expected


def test_random_structures_are_valid():
    rng = random.Random(7)
    for _ in range(200):
        S = random_structure(rng.randint(1, 6), rng)
        assert validate(S.mul, S.leq).ok
