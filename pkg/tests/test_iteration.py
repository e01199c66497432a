import random
from collections import Counter

import pytest

from coxiter import (
    ChainFamily,
    Factorial,
    NonRationalStep,
    NotGcdOrdered,
    NotHyperplatonic,
    NotOrdered,
    NotRational,
    RingDatum,
    StepLimitExceeded,
    UnclassifiableChain,
    WrongType,
    basic_platonic_triple,
    class_group,
    classify_bpt_sequence,
    classify_chain,
    component_counts,
    cox_step,
    enumerate_bpt_chains,
    is_factorial,
    is_hyperplatonic,
    is_rational,
    iterate_chain,
    predicted_step_multiset,
    type1_to_type2,
)
from coxiter.iteration import A_PRIME_NOTICE, TYPE1_STEP_NOTICE

from _gen import random_hyperplatonic, random_rational_type1, random_rational_type2


def t2(*gcds):
    return RingDatum.type2([(g,) for g in gcds])


def t1(*gcds):
    return RingDatum.type1([(g,) for g in gcds])


@pytest.mark.parametrize("d,counts", [
    (t2(2, 2, 2), (2, 2, 2)),
    (t2(4, 2, 3, 1), (1, 1, 2, 2)),
    (t1(2, 2), (2, 2)),
    (t1(2, 2, 1), (2, 2, 4)),
    (t1(3, 1, 1), (3, 1, 3)),
    (t2(2, 2, 2, 1), (2, 2, 2, 4)),
])
def test_component_counts(d, counts):
    assert component_counts(d) == counts


def test_component_counts_errors():
    with pytest.raises(NotRational):
        component_counts(t2(6, 10, 15))
    with pytest.raises(NotGcdOrdered):
        component_counts(t2(1, 2, 4))
    with pytest.raises(NotOrdered):
        component_counts(t1(1, 3))


def test_cox_step_222():
    out = cox_step(t2(2, 2, 2))
    assert out.blocks == ((1,),) * 6
    assert is_factorial(out)


def test_cox_step_432():
    out = cox_step(t2(4, 3, 2))
    assert Counter(out.gcds()) == Counter([3, 3, 2, 1])
    # gcd-ordered as (4, 2, 3): copies grouped by source block
    assert out.blocks == ((2,), (1,), (3,), (3,))


def test_cox_step_type1():
    out = cox_step(t1(2, 2))
    assert out.ring_type == 1
    assert out.blocks == ((1,),) * 4
    assert is_factorial(out)


def test_cox_step_keeps_free_variables_and_uses_canonical_coefficients():
    d = RingDatum.type2([(2,), (2,), (2,)], [(3, 1), (1, 5), (2, 7)], m=3)
    out = cox_step(d)
    assert out.m == 3
    assert out.A[:3] == ((1, 0), (0, 1), (1, 1))


def test_cox_step_non_singleton_blocks():
    # reordered to (4,8), (2,6), (3,9); P1 rows (-l0/2 | l1/2 | 0), (-l0 | 0 | l2)
    d = RingDatum.type2([(4, 8), (3, 9), (2, 6)])
    out = cox_step(d)
    assert out.blocks == ((2, 4), (1, 3), (3, 9), (3, 9))


def test_cox_step_errors():
    with pytest.raises(Factorial):
        cox_step(t2(5, 3, 2))
    with pytest.raises(NotRational):
        cox_step(t2(6, 10, 15))
    with pytest.raises(Factorial):
        cox_step(t1(1, 1))


@pytest.mark.parametrize("blocks,bpt,expected", [
    ([(3,), (3,), (2,), (1,)], (3, 3, 2), [(2,)] * 3 + [(1,)] * 5),
    ([(6,), (4,), (1,)], (6, 4, 1), [(3,), (2,), (1,), (1,)]),
    ([(4,), (3,), (2,)], (4, 3, 2), [(3,), (3,), (2,), (1,)]),
    ([(6,), (2,), (2,), (1,)], (6, 2, 2), [(3,), (3,), (1,), (1,), (1,), (1,)] + [(1,)] * 4),
    ([(5,), (2,), (2,)], (5, 2, 2), [(5,), (5,), (1,), (1,)]),
])
def test_predicted_step_multiset(blocks, bpt, expected):
    d = RingDatum.type2(blocks)
    assert predicted_step_multiset(bpt, d) == Counter(expected)
    assert Counter(cox_step(d).blocks) == Counter(expected)


def test_predicted_step_multiset_errors():
    with pytest.raises(NotHyperplatonic):
        predicted_step_multiset((3, 3, 3), t2(3, 3, 3))
    with pytest.raises(NotOrdered):
        predicted_step_multiset((4, 3, 2), t2(2, 3, 4))
    with pytest.raises(Factorial):
        predicted_step_multiset((5, 3, 2), t2(5, 3, 2))
    with pytest.raises(WrongType):
        predicted_step_multiset((2, 2, 1), t1(2, 2))


def test_table_equivalence_random():
    rng = random.Random(2)
    for _ in range(300):
        d = random_hyperplatonic(rng)
        bpt = basic_platonic_triple(d)
        expected = predicted_step_multiset(bpt, d)
        assert Counter(cox_step(d).blocks) == expected
        perm = list(range(len(d.blocks)))
        rng.shuffle(perm)
        assert Counter(cox_step(d.permute(perm)).blocks) == expected


def test_chain_432():
    chain = iterate_chain(t2(4, 3, 2))
    assert chain.bpts() == [(4, 3, 2), (3, 3, 2), (2, 2, 2), (1, 1, 1)]
    assert classify_chain(chain) == ChainFamily("I")
    assert [str(g) for g in chain.class_groups()] == ["Z + Z/2", "Z + Z/3", "Z + Z/2 + Z/2", "Z"]
    assert A_PRIME_NOTICE in chain.notices


def test_chain_661():
    chain = iterate_chain(t2(6, 6, 1))
    assert chain.bpts() == [(6, 6, 1), (1, 1, 1)]
    assert classify_chain(chain) == ChainFamily("IV", (6, 6))


def test_chain_not_rational():
    with pytest.raises(NonRationalStep) as info:
        iterate_chain(t2(6, 10, 15))
    assert info.value.step == 0


def test_chain_rational_but_not_hyperplatonic_fails_later():
    # (6, 2, 5) is rational and its Cox ring (3, 1, 5, 5) is rational too,
    # but the next Cox ring carries five blocks with gcd 3.
    d = t2(6, 2, 5)
    assert not is_hyperplatonic(d)
    nxt = cox_step(d)
    assert sorted(nxt.gcds()) == [1, 3, 5, 5] and is_rational(nxt)
    with pytest.raises(NonRationalStep) as info:
        iterate_chain(d)
    assert info.value.step == 2


def test_chain_already_factorial():
    chain = iterate_chain(t2(5, 3, 2))
    assert len(chain) == 1
    assert classify_chain(chain) == ChainFamily("already-factorial")
    assert chain.notices == ()


def test_chain_type1():
    chain = iterate_chain(t1(2, 2))
    assert len(chain) == 2
    assert classify_chain(chain) == ChainFamily("type1-single-step")
    assert TYPE1_STEP_NOTICE in chain.notices


def test_step_limit():
    with pytest.raises(StepLimitExceeded):
        iterate_chain(t2(4, 3, 2), max_steps=2)
    assert len(iterate_chain(t2(4, 3, 2), max_steps=3)) == 4


@pytest.mark.parametrize("seq,family", [
    ([(4, 3, 2), (3, 3, 2), (2, 2, 2), (1, 1, 1)], ChainFamily("I")),
    ([(3, 3, 2), (2, 2, 2), (1, 1, 1)], ChainFamily("I")),
    ([(2, 2, 2), (1, 1, 1)], ChainFamily("I")),
    ([(4, 2, 2), (2, 2, 1), (1, 1, 1)], ChainFamily("II", (2,))),
    ([(3, 2, 2), (3, 3, 1), (1, 1, 1)], ChainFamily("III", (3,))),
    ([(6, 4, 1), (3, 2, 1)], ChainFamily("IV", (6, 4))),
    ([(3, 3, 1), (1, 1, 1)], ChainFamily("IV", (3, 3))),
])
def test_classify_sequences(seq, family):
    assert classify_bpt_sequence(seq) == family


@pytest.mark.parametrize("seq", [
    [(4, 3, 2), (1, 1, 1)],
    [(6, 4, 1), (1, 1, 1)],
    [(2, 2, 2), (1, 1, 1), (1, 1, 1)],
    [(4, 2, 2), (2, 2, 1), (1, 1, 1), (1, 1, 1)],
    [(1, 1, 1), (1, 1, 1), (2, 2, 2)],
])
def test_classify_rejects(seq):
    with pytest.raises(UnclassifiableChain):
        classify_bpt_sequence(seq)


def test_family_str():
    assert str(ChainFamily("II", (2,))) == "II(x=2)"
    assert str(ChainFamily("IV", (6, 4))) == "IV(l0=6,l1=4)"
    assert str(ChainFamily("I")) == "I"


@pytest.mark.parametrize("d,blocks,A", [
    (RingDatum.type1([(2,), (2,)], [0, 1]), ((2,), (2,), (2,)), ((-1, 0), (0, 1), (1, 1))),
    (t1(1, 1), ((1,), (1,), (1,)), None),
    (RingDatum.type1([(2,), (3,)], [0, 1]), ((6,), (2,), (3,)), None),
])
def test_type1_to_type2(d, blocks, A):
    out = type1_to_type2(d)
    assert out.ring_type == 2 and out.blocks == blocks and out.m == d.m
    if A is not None:
        assert out.A == A


def test_type1_to_type2_rejects_type2():
    with pytest.raises(WrongType):
        type1_to_type2(t2(1, 1, 1))


def test_enumerate_small():
    chains = enumerate_bpt_chains(4)
    assert chains[((4, 3, 2), (3, 3, 2), (2, 2, 2), (1, 1, 1))] == ChainFamily("I")
    assert chains[((4, 2, 2), (2, 2, 1), (1, 1, 1))] == ChainFamily("II", (2,))
    assert chains[((3, 2, 2), (3, 3, 1), (1, 1, 1))] == ChainFamily("III", (3,))
    assert chains[((4, 2, 1), (2, 1, 1))] == ChainFamily("IV", (4, 2))
    assert ((2, 2, 2), (1, 1, 1)) in enumerate_bpt_chains(2)
    assert ((6, 6, 1), (1, 1, 1)) in enumerate_bpt_chains(6)


def test_enumerate_rejects_small_bound():
    with pytest.raises(ValueError):
        enumerate_bpt_chains(1)


def test_step_level_forward_direction_random():
    # hyperplatonic => the next ring is rational, and some blocks stay > 1 at most thrice
    rng = random.Random(8)
    for _ in range(300):
        d = random_rational_type2(rng, non_factorial=True)
        nxt = cox_step(d)
        if is_hyperplatonic(d):
            assert is_rational(nxt)
        if is_rational(nxt):
            assert sum(1 for g in d.gcds() if g > 1) <= 3
        assert class_group(nxt).rank >= 1


def test_ordering_independence_random():
    from itertools import permutations

    from coxiter import cox_step_ordered, is_gcd_ordered

    rng = random.Random(9)
    for _ in range(80):
        d = random_rational_type2(rng, non_factorial=True, r_max=4)
        results = set()
        for perm in permutations(range(len(d.blocks))):
            p = d.permute(perm)
            if is_gcd_ordered(p):
                results.add(tuple(sorted(cox_step_ordered(p).gcds())))
        assert len(results) == 1


def test_type1_random():
    rng = random.Random(4)
    for _ in range(150):
        d = random_rational_type1(rng)
        chain = iterate_chain(d)
        assert len(chain) <= 2 and is_factorial(chain.steps[-1])
        assert is_rational(d) == is_rational(type1_to_type2(d))
