"""Invariant checks over a fixed set of fixtures, for ``coxiter selfcheck``."""

from collections import Counter
from typing import Callable, List, Tuple

from .classgroup import torsion_free_cover
from .criteria import (
    basic_platonic_triple,
    gcd_order,
    is_factorial,
    is_gcd_ordered,
    is_hyperplatonic,
    is_platonic_triple,
    is_rational,
)
from .iteration import (
    classify_chain,
    cox_step,
    enumerate_bpt_chains,
    iterate_chain,
    predicted_step_multiset,
    type1_to_type2,
)
from .linalg import cokernel_invariants, determinantal_divisor, invariant_factors
from .ring import RingDatum, build_p0


def type2_fixtures() -> List[RingDatum]:
    blocks = [
        [(4,), (3,), (2,)],
        [(3,), (3,), (2,)],
        [(2,), (2,), (2,)],
        [(6,), (2,), (2,)],
        [(3,), (2,), (2,)],
        [(6,), (6,), (1,)],
        [(6,), (4,), (1,)],
        [(5,), (3,), (2,)],
        [(2,), (2,), (2,), (1,)],
        [(2, 4), (3, 9), (2,)],
        [(4, 8), (3,), (6, 2), (1, 1)],
        [(9,), (5,), (4,), (2,)],
        [(6,), (2,), (5,)],
        [(6,), (10,), (15,)],
    ]
    out = [RingDatum.type2(b) for b in blocks]
    out.append(RingDatum.type2([(2,), (2,), (2,)], m=2))
    return out


def type1_fixtures() -> List[RingDatum]:
    blocks = [
        [(2,), (2,)],
        [(3,), (1,)],
        [(2, 4), (2,), (1,)],
        [(1,), (1,), (1,)],
        [(3,), (3,)],
        [(2,), (3,)],
        [(4, 6), (5,), (1, 1)],
    ]
    return [RingDatum.type1(b, m=k % 2) for k, b in enumerate(blocks)]


def _snf_oracle() -> bool:
    for d in type2_fixtures() + type1_fixtures():
        P0 = build_p0(d)
        prev = 1
        for k, f in enumerate(invariant_factors(P0), start=1):
            dk = determinantal_divisor(P0, k)
            if (dk == 0) != (f == 0) or (dk and dk // prev != f):
                return False
            prev = dk or prev
    return True


def _cover_torsion_free() -> bool:
    for d in type2_fixtures():
        if is_rational(d):
            P1 = torsion_free_cover(gcd_order(d)[0])
            if cokernel_invariants(P1).torsion:
                return False
    return True


def _table_matches_step() -> bool:
    for d in type2_fixtures():
        if is_hyperplatonic(d) and not is_factorial(d):
            bpt = basic_platonic_triple(d)
            g = d.gcds()
            perm = sorted(range(len(g)), key=lambda i: (-g[i], i))
            ordered = d.permute(perm)
            if predicted_step_multiset(bpt, ordered) != _multiset(cox_step(d)):
                return False
    return True


def _multiset(d):
    return Counter(d.blocks)


def _hyperplatonic_is_rational() -> bool:
    return all(is_rational(d) for d in type2_fixtures() if is_hyperplatonic(d))


def _bpt_platonic() -> bool:
    return all(
        is_platonic_triple(basic_platonic_triple(d))
        for d in type2_fixtures() if is_hyperplatonic(d)
    )


def _gcd_order_works() -> bool:
    return all(is_gcd_ordered(gcd_order(d)[0]) for d in type2_fixtures() if is_rational(d))


def _type1_single_step() -> bool:
    for d in type1_fixtures():
        if is_rational(d) and len(iterate_chain(d)) > 2:
            return False
    return True


def _type1_transfer() -> bool:
    return all(is_rational(d) == is_rational(type1_to_type2(d)) for d in type1_fixtures())


def _chains_classify() -> bool:
    enumerate_bpt_chains(12)
    for d in type2_fixtures():
        if is_hyperplatonic(d):
            classify_chain(iterate_chain(d))
    return True


CHECKS: List[Tuple[str, Callable[[], bool]]] = [
    ("invariant factors match determinantal divisors", _snf_oracle),
    ("torsion-free cover has torsion-free cokernel", _cover_torsion_free),
    ("bpt transition table matches cox_step", _table_matches_step),
    ("hyperplatonic implies rational", _hyperplatonic_is_rational),
    ("bpt is a platonic triple", _bpt_platonic),
    ("gcd_order yields gcd-ordered data", _gcd_order_works),
    ("Type 1 iteration stops after one step", _type1_single_step),
    ("Type 1 -> Type 2 embedding preserves rationality", _type1_transfer),
    ("all bpt chains classify", _chains_classify),
]


def run_checks() -> List[Tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS:
        try:
            results.append((name, bool(fn()), ""))
        except Exception as e:  # report, don't abort the whole run
            results.append((name, False, f"{type(e).__name__}: {e}"))
    return results
