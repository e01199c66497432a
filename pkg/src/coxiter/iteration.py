"""Cox ring iteration for trinomial rings.

One step replaces R(A, P0) by the ring whose spectrum is the total
coordinate space of Spec R(A, P0). Only the exponent data of the new ring
is determined here; the new coefficient matrix is a fixed representative
(see :data:`A_PRIME_NOTICE`), which no computed invariant depends on.
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, lcm
from typing import Dict, List, Optional, Tuple

from .classgroup import class_group, torsion_free_cover
from .criteria import (
    RationalityCase,
    _gcd_ordered,
    basic_platonic_triple,
    gcd_order,
    is_factorial,
    is_hyperplatonic,
    is_platonic_triple,
    is_rational,
    rationality_case,
)
from .errors import (
    Factorial,
    NonRationalStep,
    NotGcdOrdered,
    NotHyperplatonic,
    NotOrdered,
    NotRational,
    StepLimitExceeded,
    UnclassifiableChain,
    WrongType,
)
from .linalg import AbelianGroupInvariants
from .ring import (
    RingDatum,
    canonical_type1_coefficients,
    canonical_type2_coefficients,
)

A_PRIME_NOTICE = (
    "coefficient matrices of iterated rings are fixed representatives; "
    "only exponent data (and everything derived from it) is determined"
)
TYPE1_STEP_NOTICE = "the Cox ring of a Type 1 ring is reported in Type 1 format"

Triple = Tuple[int, int, int]


def _check_rational(d: RingDatum):
    if not is_rational(d):
        raise NotRational(f"block gcds {d.gcds()} are not rational")


def component_counts(d: RingDatum) -> Tuple[int, ...]:
    """Number of irreducible components of V(X, T_ij) for each block.

    Type 2 data must be gcd-ordered, Type 1 data sorted by decreasing gcd.
    """
    _check_rational(d)
    g = d.gcds()
    if d.ring_type == 1:
        if list(g) != sorted(g, reverse=True):
            raise NotOrdered(f"Type 1 block gcds {g} are not decreasing")
        return (g[0], g[1]) + (g[0] * g[1],) * (len(g) - 2)
    if not _gcd_ordered(g):
        raise NotGcdOrdered(f"block gcds {g} are not gcd-ordered")
    g12, g02, g01 = gcd(g[1], g[2]), gcd(g[0], g[2]), gcd(g[0], g[1])
    rest, rem = divmod(g12 * g02 * g01, g12)
    assert rem == 0
    return (g12, g02, g01) + (rest,) * (len(g) - 3)


def _column_gcds(d: RingDatum) -> List[Tuple[int, ...]]:
    P1 = torsion_free_cover(d)
    vecs, c = [], 0
    for b in d.blocks:
        vecs.append(tuple(reduce(gcd, P1.col(c + j), 0) for j in range(len(b))))
        c += len(b)
    return vecs


def cox_step_ordered(d: RingDatum) -> RingDatum:
    """One iteration step for data already in the required block order.

    Block i of the result is repeated ``component_counts(d)[i]`` times, in
    source order. For Type 2 its entries are the column gcds of the
    torsion-free cover; for Type 1 the block divided by its gcd.
    """
    if is_factorial(d):
        raise Factorial("ring is factorial; no Cox ring step needed")
    counts = component_counts(d)
    if d.ring_type == 2:
        vecs = _column_gcds(d)
    else:
        vecs = [tuple(x // g for x in b) for b, g in zip(d.blocks, d.gcds())]
    blocks = [v for v, c in zip(vecs, counts) for _ in range(c)]
    if d.ring_type == 2:
        return RingDatum.type2(blocks, canonical_type2_coefficients(len(blocks)), d.m)
    return RingDatum.type1(blocks, canonical_type1_coefficients(len(blocks)), d.m)


def normalize_order(d: RingDatum) -> Tuple[RingDatum, Tuple[int, ...]]:
    """gcd-order a Type 2 datum, or sort a Type 1 datum by decreasing gcd."""
    _check_rational(d)
    if d.ring_type == 2:
        return gcd_order(d)
    g = d.gcds()
    perm = tuple(sorted(range(len(g)), key=lambda i: (-g[i], i)))
    return d.permute(perm), perm


def cox_step(d: RingDatum) -> RingDatum:
    """Exponent data of the Cox ring of Spec R(A, P0)."""
    if is_factorial(d):
        raise Factorial("ring is factorial; no Cox ring step needed")
    ordered, _ = normalize_order(d)
    return cox_step_ordered(ordered)


def _half(v, k=2):
    assert all(x % k == 0 for x in v)
    return tuple(x // k for x in v)


def predicted_step_multiset(bpt, d: RingDatum) -> Counter:
    """Exponent vectors of the next ring, read off the bpt transition table.

    ``d`` must list the bpt blocks first, in decreasing order of gcd.
    """
    if d.ring_type != 2:
        raise WrongType("the transition table is for Type 2 data")
    bpt = tuple(sorted(bpt, reverse=True))
    if not is_hyperplatonic(d):
        raise NotHyperplatonic(f"block gcds {d.gcds()} are not hyperplatonic")
    g = d.gcds()
    if tuple(g[:3]) != bpt or any(x != 1 for x in g[3:]):
        raise NotOrdered(f"blocks {g} do not start with the bpt {bpt}")
    l0, l1, l2 = d.blocks[:3]
    tail = list(d.blocks[3:])
    x, y, z = bpt
    out: List[Tuple[int, ...]]
    if bpt == (4, 3, 2):
        out = [l1, l1, _half(l0), _half(l2)] + tail * 2
    elif bpt == (3, 3, 2):
        out = [l2] * 3 + [_half(l0, 3), _half(l1, 3)] + tail * 3
    elif (y, z) == (2, 2) and x % 2 == 0:
        out = [_half(l0), _half(l1), _half(l2)] * 2 + tail * 4
    elif (y, z) == (2, 2):
        out = [l0, l0, _half(l1), _half(l2)] + tail * 2
    elif z == 1 and gcd(x, y) > 1:
        k = gcd(x, y)
        out = [_half(l0, k), _half(l1, k)] + [l2] * k + tail * k
    else:
        raise Factorial(f"bpt {bpt} belongs to a factorial ring")
    return Counter(out)


@dataclass(frozen=True)
class IterationChain:
    """The rings X_1, X_2, ... of a Cox ring iteration, input first."""

    steps: Tuple[RingDatum, ...]
    notices: Tuple[str, ...] = field(default=())

    def __len__(self):
        return len(self.steps)

    def bpts(self) -> List[Optional[Triple]]:
        return [_bpt_or_none(d) for d in self.steps]

    def class_groups(self) -> List[AbelianGroupInvariants]:
        return [class_group(d) for d in self.steps]

    def rationality_cases(self) -> List[RationalityCase]:
        return [rationality_case(d) for d in self.steps]


def _bpt_or_none(d: RingDatum) -> Optional[Triple]:
    if d.ring_type != 2:
        return None
    try:
        return basic_platonic_triple(d)
    except NotHyperplatonic:
        return None


def iterate_chain(d: RingDatum, max_steps: int = 8) -> IterationChain:
    """Apply :func:`cox_step` until the ring is factorial.

    Raises :class:`NonRationalStep` as soon as a ring in the chain is not
    rational, since such a ring has no finitely generated class group.
    """
    if not is_rational(d):
        raise NonRationalStep(0, d)
    steps = [d]
    while not is_factorial(steps[-1]):
        if len(steps) - 1 >= max_steps:
            raise StepLimitExceeded(f"no factorial ring after {max_steps} steps")
        nxt = cox_step(steps[-1])
        if not is_rational(nxt):
            raise NonRationalStep(len(steps), nxt)
        steps.append(nxt)
    notices = (A_PRIME_NOTICE,) if len(steps) > 1 else ()
    if d.ring_type == 1 and len(steps) > 1:
        notices += (TYPE1_STEP_NOTICE,)
    return IterationChain(tuple(steps), notices)


@dataclass(frozen=True)
class ChainFamily:
    """Family of a bpt sequence; ``params`` as in the family's shape."""

    name: str
    params: Tuple[int, ...] = ()

    def __str__(self):
        keys = {"II": ("x",), "III": ("x",), "IV": ("l0", "l1")}.get(self.name, ())
        if not self.params:
            return self.name
        return f"{self.name}(" + ",".join(f"{k}={v}" for k, v in zip(keys, self.params)) + ")"


FAMILY_I: Tuple[Triple, ...] = ((1, 1, 1), (2, 2, 2), (3, 3, 2), (4, 3, 2))


def classify_bpt_sequence(seq) -> ChainFamily:
    """Match a bpt sequence, given input first, against the four families.

    Family I also matches its truncations (input (3,3,2) or (2,2,2));
    families II and III need x >= 2, family IV needs gcd(l0, l1) > 1.
    The lowest-numbered matching family wins.
    """
    rev = tuple(tuple(t) for t in reversed(seq))
    if len(rev) >= 2 and rev == FAMILY_I[:len(rev)]:
        return ChainFamily("I")
    if len(rev) == 3 and rev[0] == (1, 1, 1):
        (a, b, c), (p, q, s) = rev[1], rev[2]
        if a == b >= 2 and c == 1:
            if (p, q, s) == (2 * a, 2, 2):
                return ChainFamily("II", (a,))
            if (p, q, s) == (a, 2, 2):
                return ChainFamily("III", (a,))
    if len(rev) == 2:
        (a, b, c), (p, q, s) = rev
        k = gcd(p, q)
        if c == 1 and s == 1 and k > 1 and (a, b) == (p // k, q // k):
            return ChainFamily("IV", (p, q))
    raise UnclassifiableChain(f"bpt sequence {list(seq)} fits no known family")


def classify_chain(chain: IterationChain) -> ChainFamily:
    if len(chain) == 1:
        return ChainFamily("already-factorial")
    if chain.steps[0].ring_type == 1:
        return ChainFamily("type1-single-step")
    bpts = chain.bpts()
    if any(t is None for t in bpts):
        raise UnclassifiableChain("chain contains a ring that is not hyperplatonic")
    return classify_bpt_sequence(bpts)


def type1_to_type2(d: RingDatum) -> RingDatum:
    """Embed a Type 1 datum as a Type 2 datum with one extra leading variable.

    The new leading block is the single exponent lcm of the block gcds;
    coefficient columns are (-1, 0) followed by (a_i, 1).
    """
    if d.ring_type != 1:
        raise WrongType("type1_to_type2 expects a Type 1 datum")
    ell = lcm(*d.gcds())
    A = [(-1, 0)] + [(a, 1) for a in d.A]
    return RingDatum.type2([(ell,)] + list(d.blocks), A, d.m)


def platonic_triples(max_x: int) -> List[Triple]:
    """All decreasingly sorted platonic triples with entries at most max_x."""
    return [
        (x, y, z)
        for x in range(1, max_x + 1)
        for y in range(1, x + 1)
        for z in range(1, y + 1)
        if is_platonic_triple((x, y, z))
    ]


def enumerate_bpt_chains(max_x: int) -> Dict[Tuple[Triple, ...], ChainFamily]:
    """Iterate the minimal ring of every non-factorial platonic triple.

    Each triple becomes a Type 2 datum with three singleton blocks; the
    resulting bpt sequences are classified, raising on any misfit.
    """
    if max_x < 2:
        raise ValueError("max_x must be at least 2")
    out = {}
    for t in platonic_triples(max_x):
        d = RingDatum.type2([(x,) for x in t])
        if is_factorial(d):
            continue
        chain = iterate_chain(d)
        seq = tuple(chain.bpts())
        out[seq] = classify_chain(chain)
    return out
