import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from unipolar.twosat import TwoSatInstance, neg, pos, solve


def brute(inst):
    for values in itertools.product((False, True), repeat=inst.var_count):
        if inst.satisfied_by(list(values)):
            return True
    return False


def test_forced_contradiction():
    inst = TwoSatInstance(1, [(pos(0), pos(0)), (neg(0), neg(0))])
    assert solve(inst) is None


def test_unit_clause():
    assert solve(TwoSatInstance(1, [(pos(0), pos(0))])) == [True]


def test_exactly_one_with_unit():
    # enumerating the four assignments leaves only a=T, b=F
    inst = TwoSatInstance(2, [(pos(0), pos(1)), (neg(0), neg(1)), (pos(0), pos(0))])
    assert [v for v in itertools.product((False, True), repeat=2) if inst.satisfied_by(list(v))] == [(True, False)]
    assert solve(inst) == [True, False]


def test_dimacs_dump():
    inst = TwoSatInstance(2, [(pos(0), neg(1)), (neg(0), neg(0))])
    assert inst.to_dimacs() == "p cnf 2 2\n1 -2 0\n-1 -1 0\n"


def test_long_implication_chain_does_not_recurse():
    n = 20000
    inst = TwoSatInstance(n, [(neg(i), pos(i + 1)) for i in range(n - 1)] + [(pos(0), pos(0))])
    values = solve(inst)
    assert values is not None and all(values)


literal = st.integers(0, 2 * 8 - 1)


@settings(max_examples=400)
@given(st.integers(1, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, 2 * n - 1), st.integers(0, 2 * n - 1)), max_size=20))
))
def test_matches_brute_force(case):
    n, clauses = case
    inst = TwoSatInstance(n, clauses)
    values = solve(inst)
    assert (values is not None) == brute(inst)
    if values is not None:
        assert inst.satisfied_by(values)
    assert solve(TwoSatInstance(n, list(clauses))) == values
