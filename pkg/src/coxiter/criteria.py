"""Factoriality, rationality, hyperplatonicity and platonic triples."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Tuple

from .errors import Factorial, NotHyperplatonic, NotRational, WrongType
from .ring import RingDatum

FACTORIAL = "factorial"
SINGLE_PAIR = "single_pair"
TRIPLE_OF_TWOS = "triple_of_twos"
NOT_RATIONAL = "not_rational"

_ROMAN = {FACTORIAL: "i", SINGLE_PAIR: "ii", TRIPLE_OF_TWOS: "iii"}


@dataclass(frozen=True)
class RationalityCase:
    """Which rationality case a datum falls into.

    ``indices`` are block labels (0-based for Type 2, 1-based for Type 1).
    For Type 2 a single pair carries two indices and the triple of twos
    three; for Type 1 they carry the one or two blocks with gcd > 1.
    """

    kind: str
    indices: Tuple[int, ...] = ()

    @property
    def is_rational(self) -> bool:
        return self.kind != NOT_RATIONAL

    @property
    def roman(self):
        return _ROMAN.get(self.kind)

    def __str__(self):
        if self.kind == NOT_RATIONAL:
            return "not-rational"
        if not self.indices:
            return self.roman
        return f"{self.roman}({','.join(map(str, self.indices))})"


def is_factorial(d: RingDatum) -> bool:
    g = d.gcds()
    if d.ring_type == 1:
        return all(x == 1 for x in g)
    return all(gcd(a, b) == 1 for a, b in combinations(g, 2))


def rationality_case(d: RingDatum) -> RationalityCase:
    g = d.gcds()
    off = d.offset
    if d.ring_type == 1:
        big = [i for i, x in enumerate(g) if x > 1]
        if not big:
            return RationalityCase(FACTORIAL)
        if len(big) == 1:
            return RationalityCase(SINGLE_PAIR, (big[0] + off,))
        if len(big) == 2 and all(g[i] == 2 for i in big):
            return RationalityCase(TRIPLE_OF_TWOS, tuple(i + off for i in big))
        return RationalityCase(NOT_RATIONAL)

    bad = [(i, j) for i, j in combinations(range(len(g)), 2) if gcd(g[i], g[j]) > 1]
    if not bad:
        return RationalityCase(FACTORIAL)
    if len(bad) == 1:
        return RationalityCase(SINGLE_PAIR, bad[0])
    if len(bad) == 3:
        ijk = sorted({i for pair in bad for i in pair})
        if len(ijk) == 3 and all(gcd(g[i], g[j]) == 2 for i, j in bad):
            return RationalityCase(TRIPLE_OF_TWOS, tuple(ijk))
    return RationalityCase(NOT_RATIONAL)


def is_rational(d: RingDatum) -> bool:
    return rationality_case(d).is_rational


def _require_type2(d: RingDatum, what: str):
    if d.ring_type != 2:
        raise WrongType(f"{what} is only defined for Type 2 data")


def is_hyperplatonic(d: RingDatum) -> bool:
    """Sum of 1/gcd over all blocks strictly exceeds r - 1 (exact)."""
    _require_type2(d, "hyperplatonicity")
    return sum(Fraction(1, x) for x in d.gcds()) > d.r - 1


def is_platonic_triple(t) -> bool:
    x, y, z = sorted(t, reverse=True)
    if z < 1:
        return False
    if z == 1:
        return True
    if (y, z) == (2, 2):
        return True
    return (x, y, z) in {(5, 3, 2), (4, 3, 2), (3, 3, 2)}


def basic_platonic_triple(d: RingDatum) -> Tuple[int, int, int]:
    """The decreasingly sorted platonic triple of a hyperplatonic ring.

    All block gcds outside the triple are 1.
    """
    _require_type2(d, "the basic platonic triple")
    if not is_hyperplatonic(d):
        raise NotHyperplatonic(f"block gcds {d.gcds()} are not hyperplatonic")
    g = sorted(d.gcds(), reverse=True)
    triple = tuple(g[:3])
    assert all(x == 1 for x in g[3:]) and is_platonic_triple(triple)
    return triple


def admits_iteration(d: RingDatum) -> bool:
    """Whether the ring admits a finite chain of Cox rings ending factorial."""
    if not is_rational(d):
        return False
    if d.ring_type == 2:
        return is_hyperplatonic(d)
    from .iteration import cox_step

    try:
        nxt = cox_step(d)
    except Factorial:
        return True
    return is_rational(nxt)


def _require_rational_type2(d: RingDatum, what: str) -> RationalityCase:
    _require_type2(d, what)
    case = rationality_case(d)
    if not case.is_rational:
        raise NotRational(f"{what} needs a rational datum; gcds are {d.gcds()}")
    return case


def _gcd_ordered(g) -> bool:
    # Condition (1) compares distinct blocks only; with i == j it would force
    # every trailing gcd to be 1, which reordering cannot always achieve.
    for j in range(3, len(g)):
        if any(gcd(g[i], g[j]) != 1 for i in range(len(g)) if i != j):
            return False
    return gcd(g[1], g[2]) == gcd(gcd(g[0], g[1]), g[2])


def is_gcd_ordered(d: RingDatum) -> bool:
    _require_rational_type2(d, "gcd-ordering")
    return _gcd_ordered(d.gcds())


def gcd_order(d: RingDatum) -> Tuple[RingDatum, Tuple[int, ...]]:
    """Reorder the blocks of a rational Type 2 datum so it is gcd-ordered.

    The blocks of the non-coprime pair (or the three blocks with pairwise
    gcd 2) go first, larger gcd first; the rest follow by decreasing gcd.
    Ties keep the original order. Returns the new datum and the
    permutation, as the list of original positions in their new order.
    """
    case = _require_rational_type2(d, "gcd-ordering")
    g = d.gcds()
    front = sorted(case.indices, key=lambda i: (-g[i], i))
    rest = sorted((i for i in range(len(g)) if i not in front), key=lambda i: (-g[i], i))
    perm = tuple(front + rest)
    out = d.permute(perm)
    assert _gcd_ordered(out.gcds()), (g, perm)
    return out, perm
