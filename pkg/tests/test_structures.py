from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from fuzzy_semiprime.search import enumerate_structures
from fuzzy_semiprime.structures import (
    MAX_ELEMENTS,
    AxiomError,
    OrderedGroupoid,
    StructureError,
    order_closure,
    validate,
)

CHAIN = [[True, True], [False, True]]
ANTICHAIN = [[True, False], [False, True]]


def recheck_violation(mul, leq, v):
    w = v.witness
    if v.axiom == "reflexive":
        return not leq[w[0]][w[0]]
    if v.axiom == "antisymmetric":
        a, b = w
        return a != b and leq[a][b] and leq[b][a]
    if v.axiom == "transitive":
        a, b, c = w
        return leq[a][b] and leq[b][c] and not leq[a][c]
    a, b, c = w
    if v.axiom == "right-compatible":
        return leq[a][b] and not leq[mul[a][c]][mul[b][c]]
    return leq[a][b] and not leq[mul[c][a]][mul[c][b]]


def test_singleton_is_valid():
    assert validate([[0]], [[True]]).ok


def test_chain_with_constant_product_is_valid():
    # all 8 compatibility instances reduce to a <= a
    assert validate([[0, 0], [0, 0]], CHAIN).ok


def test_right_compatibility_violation_witness():
    report = validate([[0, 1], [0, 0]], CHAIN)
    assert not report.ok
    assert [(v.axiom, v.witness) for v in report.violations] == [("right-compatible", (0, 1, 1))]


def test_order_axiom_violations_are_reported():
    report = validate([[0, 0, 0]] * 3, [[False, True, False], [True, True, True], [False, False, True]])
    assert {"reflexive", "antisymmetric", "transitive"} <= report.axioms()
    for v in report.violations:
        assert recheck_violation([[0, 0, 0]] * 3, [[False, True, False], [True, True, True], [False, False, True]], v)


@pytest.mark.parametrize(
    "mul, leq",
    [
        ([[0, 1]], CHAIN),
        ([[0, 2], [0, 0]], CHAIN),
        ([[0, -1], [0, 0]], CHAIN),
        ([[0, 0], [0, 0]], [[True, True]]),
        ([[0, 0], [0]], CHAIN),
        ([], []),
    ],
)
def test_malformed_tables_raise_structure_error(mul, leq):
    with pytest.raises(StructureError):
        validate(mul, leq)


def test_size_bound_enforced():
    n = MAX_ELEMENTS + 1
    with pytest.raises(StructureError):
        OrderedGroupoid.from_order([[0] * n for _ in range(n)])
    n = MAX_ELEMENTS
    assert OrderedGroupoid.from_order([[0] * n for _ in range(n)]).n == n


def test_duplicate_labels_rejected():
    with pytest.raises(StructureError):
        OrderedGroupoid.from_order([[0, 0], [0, 0]], labels=["x", "x"])


def test_from_tables_raises_axiom_error_with_report():
    with pytest.raises(AxiomError) as exc:
        OrderedGroupoid.from_tables([[0, 1], [0, 0]], CHAIN)
    assert exc.value.report.violations[0].axiom == "right-compatible"


def test_order_closure_and_antisymmetry():
    leq = order_closure(3, [(0, 1), (1, 2)])
    assert leq[0][2] and all(leq[i][i] for i in range(3))
    with pytest.raises(AxiomError):
        OrderedGroupoid.from_order([[0] * 3] * 3, [(0, 1), (1, 2), (2, 0)])


def brute_associative(mul):
    n = len(mul)
    return all(mul[mul[x][y]][z] == mul[x][mul[y][z]] for x in range(n) for y in range(n) for z in range(n))


def test_is_associative_examples():
    assert OrderedGroupoid.from_order([[0, 0], [0, 0]], [(0, 1)]).is_associative()
    # multiplication of {0, 1}
    assert OrderedGroupoid.from_order([[0, 0], [0, 1]], [(0, 1)]).is_associative()
    z2 = [[0, 1], [1, 0]]
    assert OrderedGroupoid.discrete(z2).is_associative() == brute_associative(z2) is True
    rps = [[0, 0], [1, 0]]  # (b*b)*b = a*b = a, b*(b*b) = b*a = b
    assert not OrderedGroupoid.discrete(rps).is_associative()


def test_greatest_element():
    assert OrderedGroupoid.from_order([[0]]).greatest_element() == 0
    assert OrderedGroupoid.from_order([[0, 0], [0, 0]], [(0, 1)]).greatest_element() == 1
    assert OrderedGroupoid.discrete([[0, 0], [0, 0]]).greatest_element() is None


def test_pairs_above_examples():
    S = OrderedGroupoid.from_order([[0]])
    assert S.pairs_above(0) == ((0, 0),)
    C = OrderedGroupoid.from_order([[0, 0], [0, 0]], [(0, 1)])
    assert C.pairs_above(1) == ()
    assert set(C.pairs_above(0)) == set(product(range(2), repeat=2))


def test_downset_and_covering():
    S = OrderedGroupoid.from_order([[0] * 3] * 3, [(0, 1), (1, 2)])
    assert S.downset(2) == (0, 1, 2)
    assert S.covering_pairs() == [(0, 1), (1, 2)]


SMALL = list(enumerate_structures(2)) + [
    S for i, S in enumerate(enumerate_structures(3)) if i % 97 == 0
]


@pytest.mark.parametrize("S", SMALL, ids=lambda S: "".join(map(str, sum(S.mul, ()))))
def test_pairs_above_invariants(S):
    for x in S.elements:
        assert (x, x) in S.pairs_above(S.square(x))
    for a in S.elements:
        for b in S.elements:
            if S.leq[a][b]:
                assert set(S.pairs_above(b)) <= set(S.pairs_above(a))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_random_tables_report_sound_witnesses(data):
    n = data.draw(st.integers(1, 4))
    mul = data.draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    leq = data.draw(st.lists(st.lists(st.booleans(), min_size=n, max_size=n), min_size=n, max_size=n))
    report = validate(mul, leq)
    for v in report.violations:
        assert recheck_violation(mul, leq, v)
    # ok iff every axiom instance holds, scanned independently here
    rng = range(n)
    expect = (
        all(leq[i][i] for i in rng)
        and not any(leq[i][j] and leq[j][i] and i != j for i in rng for j in rng)
        and all(not (leq[i][j] and leq[j][k]) or leq[i][k] for i in rng for j in rng for k in rng)
        and all(
            leq[mul[a][c]][mul[b][c]] and leq[mul[c][a]][mul[c][b]]
            for a in rng for b in rng if leq[a][b] for c in rng
        )
    )
    assert report.ok == expect
