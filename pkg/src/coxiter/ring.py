"""Trinomial ring data (A, P0) of Type 1 and Type 2.

A Type 2 datum has blocks ``l_0, ..., l_r`` (r >= 2) and a 2 x (r+1)
coefficient matrix with pairwise independent columns. A Type 1 datum has
blocks ``l_1, ..., l_r`` (r >= 2) and r pairwise different scalars.
Coefficients are exact rationals; only independence/distinctness of them
matters for anything computed here.

Blocks are stored in a plain 0-based tuple. Human-facing labels follow the
usual convention: Type 2 blocks are numbered from 0, Type 1 blocks from 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple

from .errors import (
    DegenerateCoefficients,
    EmptyBlock,
    NonpositiveExponent,
    TooFewBlocks,
    WrongType,
)
from .linalg import IntegerMatrix

Block = Tuple[int, ...]


def canonical_type2_coefficients(count: int) -> Tuple[Tuple[Fraction, Fraction], ...]:
    """Columns (1,0), (0,1), (1,1), (1,2), ..., pairwise independent."""
    cols = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    cols += [(Fraction(1), Fraction(k)) for k in range(1, count - 1)]
    return tuple(cols[:count])


def canonical_type1_coefficients(count: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(k) for k in range(count))


def _to_fraction(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"coefficient {x!r} is not exact")
    return Fraction(x)


@dataclass(frozen=True)
class RingDatum:
    """Defining data of a ring R(A, P0).

    Use :meth:`type1` / :meth:`type2` to get a validated instance; the raw
    constructor only normalizes container types.
    """

    ring_type: int
    blocks: Tuple[Block, ...]
    m: int = 0
    A: tuple = field(default=())

    def __post_init__(self):
        if self.ring_type not in (1, 2):
            raise WrongType(f"ring_type must be 1 or 2, got {self.ring_type!r}")
        object.__setattr__(self, "blocks", tuple(tuple(int(x) for x in b) for b in self.blocks))
        if self.ring_type == 2:
            A = tuple((_to_fraction(a), _to_fraction(b)) for a, b in self.A)
        else:
            A = tuple(_to_fraction(a) for a in self.A)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "m", int(self.m))

    @classmethod
    def type2(cls, blocks: Sequence[Sequence[int]], A=None, m: int = 0) -> "RingDatum":
        if A is None:
            A = canonical_type2_coefficients(len(blocks))
        return validate_datum(cls(2, blocks, m, A))

    @classmethod
    def type1(cls, blocks: Sequence[Sequence[int]], A=None, m: int = 0) -> "RingDatum":
        if A is None:
            A = canonical_type1_coefficients(len(blocks))
        return validate_datum(cls(1, blocks, m, A))

    @property
    def r(self) -> int:
        """Index r: number of blocks minus one (Type 2) or number of blocks (Type 1)."""
        return len(self.blocks) - 1 if self.ring_type == 2 else len(self.blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def offset(self) -> int:
        """Label of the first block."""
        return 0 if self.ring_type == 2 else 1

    def gcds(self) -> Tuple[int, ...]:
        return block_gcds(self)

    def variable_labels(self) -> List[str]:
        labels = [
            _tlabel(i + self.offset, j + 1)
            for i, b in enumerate(self.blocks) for j in range(len(b))
        ]
        return labels + [f"S{k + 1}" for k in range(self.m)]

    def permute(self, perm: Sequence[int]) -> "RingDatum":
        """Reorder blocks (and coefficient columns) as ``[blocks[p] for p in perm]``."""
        if sorted(perm) != list(range(len(self.blocks))):
            raise ValueError(f"{perm!r} is not a permutation of the blocks")
        return RingDatum(
            self.ring_type,
            [self.blocks[p] for p in perm],
            self.m,
            [self.A[p] for p in perm],
        )


def _tlabel(i: int, j: int) -> str:
    return f"T{i}{j}" if i < 10 and j < 10 else f"T{i}_{j}"


def validate_datum(d: RingDatum) -> RingDatum:
    """Check the structural invariants of ``d`` and return it unchanged."""
    if d.ring_type == 2 and len(d.blocks) < 3:
        raise TooFewBlocks(f"Type 2 needs at least 3 blocks, got {len(d.blocks)}")
    if d.ring_type == 1 and len(d.blocks) < 2:
        raise TooFewBlocks(f"Type 1 needs at least 2 blocks, got {len(d.blocks)}")
    for i, b in enumerate(d.blocks):
        if not b:
            raise EmptyBlock(f"block {i + d.offset} is empty")
        if any(x < 1 for x in b):
            raise NonpositiveExponent(f"block {i + d.offset} has entries < 1: {b}")
    if d.m < 0:
        raise ValueError("m must be nonnegative")
    if len(d.A) != len(d.blocks):
        raise DegenerateCoefficients(
            f"{len(d.A)} coefficient columns for {len(d.blocks)} blocks"
        )
    for i in range(len(d.A)):
        for j in range(i + 1, len(d.A)):
            if d.ring_type == 2:
                (a, b), (c, e) = d.A[i], d.A[j]
                if a * e - b * c == 0:
                    raise DegenerateCoefficients(
                        f"columns {i} and {j} of A are linearly dependent"
                    )
            elif d.A[i] == d.A[j]:
                raise DegenerateCoefficients(
                    f"a_{i + 1} = a_{j + 1} = {d.A[i]}"
                )
    return d


def build_p0(d: RingDatum) -> IntegerMatrix:
    """The r x (n+m) exponent matrix P0; free variables give zero columns."""
    width = d.n + d.m
    starts = [0]
    for b in d.blocks:
        starts.append(starts[-1] + len(b))
    rows = []
    if d.ring_type == 2:
        l0 = d.blocks[0]
        for i in range(1, len(d.blocks)):
            row = [0] * width
            row[:len(l0)] = [-x for x in l0]
            row[starts[i]:starts[i + 1]] = d.blocks[i]
            rows.append(row)
    else:
        for i, b in enumerate(d.blocks):
            row = [0] * width
            row[starts[i]:starts[i + 1]] = b
            rows.append(row)
    return IntegerMatrix.from_rows(rows, cols=width)


def block_gcds(d: RingDatum) -> Tuple[int, ...]:
    return tuple(reduce(gcd, b) for b in d.blocks)


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _monomial(d: RingDatum, i: int) -> str:
    parts = []
    for j, e in enumerate(d.blocks[i]):
        name = _tlabel(i + d.offset, j + 1)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _join_terms(terms) -> str:
    """Render ``[(coeff, monomial or None), ...]`` as a signed sum."""
    out = []
    for coeff, mono in terms:
        if coeff == 0:
            continue
        mag = abs(coeff)
        if mono is None:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_rational(mag)}*{mono}"
        if not out:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(out) if out else "0"


def relation_coefficients(d: RingDatum, i: int) -> Tuple[Fraction, Fraction, Fraction]:
    """Coefficients of the Type 2 trinomial built from blocks i, i+1, i+2.

    These are the 2x2 cofactors from expanding the 3x3 determinant with
    the monomials in the first row and the coefficient columns below.
    """

    def det2(u, v):
        return u[0] * v[1] - u[1] * v[0]

    a, b, c = d.A[i], d.A[i + 1], d.A[i + 2]
    return det2(b, c), -det2(a, c), det2(a, b)


def render_relations(d: RingDatum) -> List[str]:
    """The defining trinomials g_i as strings, one per relation."""
    out = []
    if d.ring_type == 2:
        for i in range(len(d.blocks) - 2):
            coeffs = relation_coefficients(d, i)
            out.append(_join_terms(
                [(c, _monomial(d, i + k)) for k, c in enumerate(coeffs)]
            ))
    else:
        for i in range(len(d.blocks) - 1):
            const = d.A[i + 1] - d.A[i]
            out.append(_join_terms([
                (Fraction(1), _monomial(d, i)),
                (Fraction(-1), _monomial(d, i + 1)),
                (-const, None),
            ]))
    return out
