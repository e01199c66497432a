"""Class group K0 = Z^(n+m) / im(P0^T), variable degrees, and the cover P1."""

from dataclasses import dataclass
from math import gcd
from typing import Dict, Tuple

from .criteria import _gcd_ordered, is_rational
from .errors import NotGcdOrdered, NotRational
from .linalg import AbelianGroupInvariants, IntegerMatrix, cokernel_invariants, smith_normal_form
from .ring import RingDatum, build_p0


@dataclass(frozen=True)
class GradingData:
    """K0 together with the class of every variable.

    Degree vectors list the free coordinates first, then one coordinate
    per torsion factor reduced into ``[0, d)``.
    """

    group: AbelianGroupInvariants
    degrees: Dict[str, Tuple[int, ...]]

    def degree_of_monomial(self, exponents: Dict[str, int]) -> Tuple[int, ...]:
        total = [0] * (self.group.rank + len(self.group.torsion))
        for label, e in exponents.items():
            total = [a + e * b for a, b in zip(total, self.degrees[label])]
        return self.reduce(total)

    def reduce(self, vec) -> Tuple[int, ...]:
        rank = self.group.rank
        return tuple(vec[:rank]) + tuple(
            x % d for x, d in zip(vec[rank:], self.group.torsion)
        )


def class_group(d: RingDatum) -> AbelianGroupInvariants:
    return cokernel_invariants(build_p0(d))


def variable_degrees(d: RingDatum) -> GradingData:
    P0 = build_p0(d)
    D, _, V = smith_normal_form(P0)
    # x -> x V maps the row span of P0 onto the row span of D.
    diag = list(D.diagonal()) + [0] * (P0.cols - min(P0.shape))
    free = [k for k, x in enumerate(diag) if x == 0]
    tors = [k for k, x in enumerate(diag) if x > 1]
    group = AbelianGroupInvariants(len(free), tuple(diag[k] for k in tors))
    degrees = {}
    for label, k in zip(d.variable_labels(), range(P0.cols)):
        row = V.row(k)
        degrees[label] = tuple(row[c] for c in free) + tuple(row[c] % diag[c] for c in tors)
    return GradingData(group, degrees)


def torsion_free_cover(d: RingDatum) -> IntegerMatrix:
    """Rows generating the kernel of Z^(n+m) -> K0 / torsion.

    Type 2 data must be rational and gcd-ordered; the first two rows of P0
    get divided by gcd(l0, l1) and gcd(l0, l2). Type 1 data must be
    rational; each block is divided by its own gcd.
    """
    if not is_rational(d):
        raise NotRational(f"block gcds {d.gcds()} are not rational")
    g = d.gcds()
    P0 = build_p0(d)
    rows = P0.to_rows()
    if d.ring_type == 1:
        starts = [0]
        for b in d.blocks:
            starts.append(starts[-1] + len(b))
        for i in range(len(rows)):
            for c in range(starts[i], starts[i + 1]):
                rows[i][c] //= g[i]
    else:
        if not _gcd_ordered(g):
            raise NotGcdOrdered(f"block gcds {g} are not gcd-ordered")
        for i, div in ((0, gcd(g[0], g[1])), (1, gcd(g[0], g[2]))):
            assert all(x % div == 0 for x in rows[i])
            rows[i] = [x // div for x in rows[i]]
    return IntegerMatrix.from_rows(rows, cols=P0.cols)
