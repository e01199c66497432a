"""Exact integer matrix algorithms.

Everything here works on Python ints, so entries never overflow. The
normal-form routines are plain elimination; they are meant for the small
matrices that come out of trinomial ring data, not for large lattices.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, List, Sequence, Tuple


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntegerMatrix":
        """Build a matrix from nested rows.

        ``cols`` is only needed for matrices with zero rows, whose width
        cannot be read off the data.
        """
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix.from_rows(
            [self.col(j) for j in range(self.cols)], cols=self.rows
        )

    @property
    def T(self) -> "IntegerMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.col(j) for j in range(other.cols)]
        return IntegerMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), c)) for c in cols]
             for i in range(self.rows)],
            cols=other.cols,
        )

    def is_diagonal(self) -> bool:
        return all(
            self[i, j] == 0
            for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def __str__(self):
        if not self.rows:
            return f"[] (0x{self.cols})"
        width = max((len(str(x)) for x in self.entries), default=1)
        return "\n".join(
            "[" + " ".join(str(x).rjust(width) for x in self.row(i)) + "]"
            for i in range(self.rows)
        )


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """Z^rank + Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... and every d_i >= 2."""

    rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _as_rows(M) -> List[List[int]]:
    if isinstance(M, IntegerMatrix):
        return M.to_rows()
    return [list(r) for r in M]


def _ncols(M, rows) -> int:
    if isinstance(M, IntegerMatrix):
        return M.cols
    return len(rows[0]) if rows else 0


def hermite_normal_form(M) -> Tuple[IntegerMatrix, IntegerMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H = U @ M``, ``U`` unimodular, pivots positive,
    entries above each pivot reduced into ``[0, pivot)`` and zero rows last.
    """
    h = _as_rows(M)
    m, n = len(h), _ncols(M, h)
    u = IntegerMatrix.identity(m).to_rows()
    r = 0
    for c in range(n):
        if r == m:
            break
        # Euclid on column c, rows r.., keeping the row ops unimodular.
        while True:
            nz = [i for i in range(r, m) if h[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(h[i][c]), i))
            h[r], h[p] = h[p], h[r]
            u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, m):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return IntegerMatrix.from_rows(h, cols=n), IntegerMatrix.from_rows(u, cols=m)


def smith_normal_form(M) -> Tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Smith normal form ``D = U @ M @ V``.

    ``D`` is diagonal with nonnegative entries ``d_1 | d_2 | ...``; ``U`` and
    ``V`` are unimodular. The pivot is always the nonzero entry of least
    absolute value in the active block (ties broken by row, then column).
    """
    d = _as_rows(M)
    m, n = len(d), _ncols(M, d)
    u = IntegerMatrix.identity(m).to_rows()
    v = IntegerMatrix.identity(n).to_rows()

    def swap_cols(a, b):
        for row in d:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]

    def add_col(dst, src, q):
        # column dst -= q * column src
        for row in d:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = d[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            d[t], d[pi] = d[pi], d[t]
            u[t], u[pi] = u[pi], u[t]
            swap_cols(t, pj)

            p = d[t][t]
            clean = True
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // p
                    d[i] = [x - q * y for x, y in zip(d[i], d[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                    clean = clean and d[i][t] == 0
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(j, t, d[t][j] // p)
                    clean = clean and d[t][j] == 0
            if not clean:
                continue
            # Divisibility: fold an offending row into row t and go again.
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % p),
                None,
            )
            if bad is None:
                break
            d[t] = [x + y for x, y in zip(d[t], d[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
        if t < m and t < n and d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    return (
        IntegerMatrix.from_rows(d, cols=n),
        IntegerMatrix.from_rows(u, cols=m),
        IntegerMatrix.from_rows(v, cols=n),
    )


def invariant_factors(M) -> Tuple[int, ...]:
    """Diagonal of the Smith normal form, length ``min(rows, cols)``."""
    return smith_normal_form(M)[0].diagonal()


def cokernel_invariants(M) -> AbelianGroupInvariants:
    """Invariants of Z^cols / (row span of M)."""
    rows = _as_rows(M)
    n = _ncols(M, rows)
    diag = invariant_factors(M)
    nonzero = sum(1 for x in diag if x)
    return AbelianGroupInvariants(n - nonzero, tuple(x for x in diag if x > 1))


def minors(M, k: int) -> Iterable[int]:
    rows = _as_rows(M)
    n = _ncols(M, rows)
    for ri in combinations(range(len(rows)), k):
        for ci in combinations(range(n), k):
            yield determinant([[rows[i][j] for j in ci] for i in ri])


def determinantal_divisor(M, k: int) -> int:
    """gcd of all k x k minors of M (0 if they all vanish)."""
    rows = _as_rows(M)
    n = _ncols(M, rows)
    if not 1 <= k <= min(len(rows), n):
        raise IndexError(f"k={k} outside 1..{min(len(rows), n)}")
    g = 0
    for x in minors(rows, k):
        g = gcd(g, x)
        if g == 1:
            break
    return g


def row_span_contains(M, N) -> bool:
    """True if every row of N is an integer combination of rows of M."""
    H, _ = hermite_normal_form(M)
    basis = [r for r in H.to_rows() if any(r)]
    for target in _as_rows(N):
        x = list(target)
        for b in basis:
            c = next(j for j, e in enumerate(b) if e)
            if x[c] % b[c]:
                return False
            q = x[c] // b[c]
            x = [a - q * e for a, e in zip(x, b)]
        if any(x):
            return False
    return True
