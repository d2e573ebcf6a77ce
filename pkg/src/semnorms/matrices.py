"""Exact rational matrices and the minor-based norm family.

The order-k norm of a square matrix of order n is binom(n, k) times the
largest absolute value of an order-k minor.  It is zero exactly when the
rank is below k, it is submultiplicative for matrix products, and for
k = n it reduces to |det| while for k = 1 it is n times the largest
absolute entry.  Everything here is exact Fraction arithmetic; a float
path exists only for the one CLI mode that asks for it.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError
from .semigroups import _parse_rational


@dataclass(frozen=True)
class RatMatrix:
    """Immutable row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if not (isinstance(self.rows, int) and isinstance(self.cols, int)):
            raise ValueError("matrix dimensions must be integers")
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        entries = tuple(Fraction(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} entries, expected {width}")
        return cls(len(rows), width, tuple(x for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence, n: int | None = None) -> "RatMatrix":
        """Square matrix with ``values`` on the leading diagonal, padded
        with zero rows/columns up to order n when n exceeds len(values)."""
        values = [Fraction(v) for v in values]
        n = len(values) if n is None else n
        if n < len(values):
            raise ValueError("diagonal longer than requested order")
        entries = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = v
        return cls(n, n, tuple(entries))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    n, inner, m = a.rows, a.cols, b.cols
    out = []
    for i in range(n):
        arow = a.entries[i * inner:(i + 1) * inner]
        for j in range(m):
            out.append(sum((arow[t] * b.entries[t * m + j] for t in range(inner)), Fraction(0)))
    return RatMatrix(n, m, tuple(out))


def _require_square(a: RatMatrix) -> None:
    if not a.is_square:
        raise ValueError(f"need a square matrix, got {a.rows}x{a.cols}")


def det(a: RatMatrix) -> Fraction:
    """Determinant by fraction-free Bareiss elimination.

    Each row is first scaled to integers by its denominator lcm, keeping
    all intermediate values integral and small; the result is rescaled at
    the end.
    """
    _require_square(a)
    n = a.rows
    scale = Fraction(1)
    m: list[list[int]] = []
    for i in range(n):
        row = [a.entry(i, j) for j in range(n)]
        lcm = math.lcm(*(x.denominator for x in row))
        scale *= lcm
        m.append([int(x * lcm) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1]) / scale


def _det_float(rows: list[list[float]]) -> float:
    n = len(rows)
    m = [row[:] for row in rows]
    detval = 1.0
    for k in range(n):
        pivot = max(range(k, n), key=lambda i: abs(m[i][k]))
        if m[pivot][k] == 0.0:
            return 0.0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            detval = -detval
        detval *= m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    return detval


def _check_subset(name: str, subset: Sequence[int], bound: int) -> tuple[int, ...]:
    idx = tuple(subset)
    if not idx:
        raise ValueError(f"{name} index subset is empty")
    for x in idx:
        if not isinstance(x, int) or not 0 <= x < bound:
            raise ValueError(f"{name} index {x!r} out of range 0..{bound - 1}")
    if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
        raise ValueError(f"{name} indices must be strictly increasing, got {idx}")
    return idx


def minor(a: RatMatrix, row_subset: Sequence[int], col_subset: Sequence[int]) -> Fraction:
    """Determinant of the submatrix picked by two equally long, strictly
    increasing index subsets."""
    rows = _check_subset("row", row_subset, a.rows)
    cols = _check_subset("column", col_subset, a.cols)
    if len(rows) != len(cols):
        raise ValueError(f"subset sizes differ: {len(rows)} rows vs {len(cols)} columns")
    sub = RatMatrix(
        len(rows), len(cols), tuple(a.entry(i, j) for i in rows for j in cols)
    )
    return det(sub)


@dataclass(frozen=True)
class MinorNormParams:
    """Order of the ambient matrices and the minor size, 0 < k <= n."""

    n: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.k, int)):
            raise ValueError("n and k must be integers")
        if self.n < 1:
            raise ValueError(f"matrix order must be positive, got n={self.n}")
        if not 0 < self.k <= self.n:
            raise ValueError(f"minor size must satisfy 0 < k <= n, got k={self.k}, n={self.n}")

    @property
    def coefficient(self) -> int:
        return math.comb(self.n, self.k)


def minor_norm(a: RatMatrix, k: int) -> Fraction:
    """binom(n, k) times the largest |order-k minor| of a square matrix."""
    _require_square(a)
    params = MinorNormParams(a.rows, k)
    best = Fraction(0)
    subsets = list(itertools.combinations(range(a.rows), k))
    for rows in subsets:
        for cols in subsets:
            value = abs(minor(a, rows, cols))
            if value > best:
                best = value
    return params.coefficient * best


def minor_norm_float(a: RatMatrix, k: int) -> float:
    """Float variant of minor_norm for larger orders; CLI-only by design."""
    _require_square(a)
    params = MinorNormParams(a.rows, k)
    grid = [[float(a.entry(i, j)) for j in range(a.cols)] for i in range(a.rows)]
    best = 0.0
    subsets = list(itertools.combinations(range(a.rows), k))
    for rows in subsets:
        for cols in subsets:
            value = abs(_det_float([[grid[i][j] for j in cols] for i in rows]))
            if value > best:
                best = value
    return params.coefficient * best


def cauchy_binet(alpha: RatMatrix, beta: RatMatrix) -> tuple[Fraction, Fraction]:
    """Both sides of det(alpha @ beta) = sum over strictly increasing
    k-subsets p of det(alpha[:, p]) * det(beta[p, :]).

    alpha is k x n and beta is n x k with k <= n.  Both sides are
    computed independently and returned so callers can assert equality
    rather than trust it.
    """
    k, n = alpha.rows, alpha.cols
    if beta.rows != n or beta.cols != k:
        raise ValueError(
            f"shape mismatch: {k}x{n} needs an {n}x{k} partner, got {beta.rows}x{beta.cols}"
        )
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    lhs = det(mat_mul(alpha, beta))
    rhs = Fraction(0)
    full = tuple(range(k))
    for subset in itertools.combinations(range(n), k):
        left = RatMatrix(k, k, tuple(alpha.entry(i, j) for i in full for j in subset))
        right = RatMatrix(k, k, tuple(beta.entry(i, j) for i in subset for j in full))
        rhs += det(left) * det(right)
    return lhs, rhs


def _rref(a: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    m = a.to_rows()
    pivots: list[int] = []
    row = 0
    for col in range(a.cols):
        pivot = next((i for i in range(row, a.rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        lead = m[row][col]
        m[row] = [x / lead for x in m[row]]
        for i in range(a.rows):
            if i != row and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == a.rows:
            break
    return m, pivots


def rank(a: RatMatrix) -> int:
    """Exact rank via rational elimination; any shape."""
    return len(_rref(a)[1])


def _inverse(a: RatMatrix) -> RatMatrix:
    """Inverse of a square full-rank matrix by Gauss-Jordan on [a | I]."""
    n = a.rows
    aug = RatMatrix(
        n,
        2 * n,
        tuple(
            a.entry(i, j) if j < n else Fraction(int(j - n == i))
            for i in range(n)
            for j in range(2 * n)
        ),
    )
    m, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return RatMatrix(n, n, tuple(m[i][j] for i in range(n) for j in range(n, 2 * n)))


def generalized_inverse(a: RatMatrix) -> RatMatrix:
    """Moore-Penrose inverse of a square rational matrix, exactly.

    Uses the rank factorization a = C R (C: pivot columns of a, R: the
    nonzero rows of the reduced echelon form), for which the inverse is
    R^T (R R^T)^-1 (C^T C)^-1 C^T.  The defining identities a g a = a and
    g a g = g are re-verified before returning.
    """
    _require_square(a)
    n = a.rows
    rref_rows, pivots = _rref(a)
    r = len(pivots)
    if r == 0:
        return RatMatrix.zeros(n, n)
    big_r = RatMatrix(r, n, tuple(rref_rows[i][j] for i in range(r) for j in range(n)))
    big_c = RatMatrix(n, r, tuple(a.entry(i, j) for i in range(n) for j in pivots))
    rt = big_r.transpose()
    ct = big_c.transpose()
    g = mat_mul(
        mat_mul(rt, _inverse(mat_mul(big_r, rt))),
        mat_mul(_inverse(mat_mul(ct, big_c)), ct),
    )
    aga = mat_mul(mat_mul(a, g), a)
    gag = mat_mul(mat_mul(g, a), g)
    if aga != a or gag != g:  # pragma: no cover
        raise RuntimeError("generalized inverse failed its defining identities")
    return g


@dataclass(frozen=True)
class MinorNormCheck:
    """PASS over a batch of pairs, or the first violation with its values."""

    ok: bool
    pair_index: int | None = None
    values: tuple[Fraction, Fraction, Fraction] | None = None  # norm(ab), norm(a), norm(b)


def check_minor_norm_submultiplicative(
    pairs: Iterable[tuple[RatMatrix, RatMatrix]], k: int
) -> MinorNormCheck:
    """norm_k(a @ b) <= norm_k(a) * norm_k(b) for every supplied pair."""
    for index, (a, b) in enumerate(pairs):
        if not (a.is_square and b.is_square and a.rows == b.rows):
            raise ValueError(f"pair {index} is not a pair of equal-order square matrices")
        na = minor_norm(a, k)
        nb = minor_norm(b, k)
        nab = minor_norm(mat_mul(a, b), k)
        if nab > na * nb:
            return MinorNormCheck(False, index, (nab, na, nb))
    return MinorNormCheck(True)


# ---------------------------------------------------------------------------
# The boundary sequence: x_m has the top-left k x k block (1/m) I_k and
# zeros elsewhere.  Every x_m has rank exactly k, hence nonzero order-k
# norm, while the entrywise limit (the zero matrix) has rank 0.


@dataclass(frozen=True)
class WitnessPoint:
    m: int
    norm_value: Fraction
    matrix_rank: int
    in_nonzero_set: bool
    pseudoinverse_norm: Fraction
    inverse_bound_holds: bool
    product: Fraction

    def to_jsonable(self) -> dict:
        return {
            "m": self.m,
            "norm_value": str(self.norm_value),
            "rank": self.matrix_rank,
            "in_nonzero_set": self.in_nonzero_set,
            "pseudoinverse_norm": str(self.pseudoinverse_norm),
            "inverse_bound_holds": self.inverse_bound_holds,
            "product": str(self.product),
        }


@dataclass(frozen=True)
class WitnessReport:
    n: int
    k: int
    coefficient: int
    points: tuple[WitnessPoint, ...]
    limit_norm_value: Fraction
    limit_rank: int
    limit_in_nonzero_set: bool
    not_closed: bool

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "coefficient": self.coefficient,
            "points": [p.to_jsonable() for p in self.points],
            "limit": {
                "norm_value": str(self.limit_norm_value),
                "rank": self.limit_rank,
                "in_nonzero_set": self.limit_in_nonzero_set,
            },
            "not_closed": self.not_closed,
        }


def witness_sequence(n: int, k: int, m_max: int) -> WitnessReport:
    """Evaluate the boundary sequence for 0 < k < n up to m = m_max.

    k = n is rejected: there the sequence argument needs the zero rows
    below the block, so the strict inequality k < n is part of the
    contract.  The conclusion flag is derived from the recorded facts
    only: every point in the nonzero-norm set, values strictly
    decreasing, and a limit of norm exactly 0 outside the set.
    """
    params = MinorNormParams(n, k)
    if k >= n:
        raise ValueError(f"need k strictly below n, got k={k}, n={n}")
    if m_max < 1:
        raise ValueError(f"m_max must be at least 1, got {m_max}")
    points = []
    for m in range(1, m_max + 1):
        x = RatMatrix.diagonal([Fraction(1, m)] * k, n)
        value = minor_norm(x, k)
        g = generalized_inverse(x)
        g_value = minor_norm(g, k)
        points.append(
            WitnessPoint(
                m=m,
                norm_value=value,
                matrix_rank=rank(x),
                in_nonzero_set=value != 0,
                pseudoinverse_norm=g_value,
                inverse_bound_holds=value != 0 and g_value >= 1 / value,
                product=value * g_value,
            )
        )
    limit = RatMatrix.zeros(n, n)
    limit_value = minor_norm(limit, k)
    decreasing = all(
        earlier.norm_value > later.norm_value
        for earlier, later in zip(points, points[1:])
    )
    not_closed = (
        all(p.in_nonzero_set for p in points)
        and limit_value == 0
        and decreasing
    )
    return WitnessReport(
        n=n,
        k=k,
        coefficient=params.coefficient,
        points=tuple(points),
        limit_norm_value=limit_value,
        limit_rank=rank(limit),
        limit_in_nonzero_set=limit_value != 0,
        not_closed=not_closed,
    )


def random_rational_matrix(
    rng, rows: int, cols: int, max_numerator: int = 9, max_denominator: int = 4
) -> RatMatrix:
    """Entries p/q with |p| <= max_numerator and 1 <= q <= max_denominator,
    drawn from the supplied random.Random instance."""
    return RatMatrix(
        rows,
        cols,
        tuple(
            Fraction(rng.randint(-max_numerator, max_numerator), rng.randint(1, max_denominator))
            for _ in range(rows * cols)
        ),
    )


# ---------------------------------------------------------------------------
# Text format: first line "rows cols", then rows*cols rational entries in
# row-major order, split across lines however is convenient.


def parse_matrix_text(text: str) -> RatMatrix:
    tokens: list[tuple[int, str, int]] = []
    last_line = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        last_line = line_no
        for m in re.finditer(r"\S+", line):
            tokens.append((line_no, m.group(), m.start() + 1))
    if len(tokens) < 2:
        raise ParseError("missing matrix dimensions", max(last_line, 1), 1)
    (l1, t1, c1), (l2, t2, c2) = tokens[0], tokens[1]
    try:
        rows = int(t1)
    except ValueError:
        raise ParseError(f"expected row count, got {t1!r}", l1, c1) from None
    try:
        cols = int(t2)
    except ValueError:
        raise ParseError(f"expected column count, got {t2!r}", l2, c2) from None
    if rows < 1 or cols < 1:
        raise ParseError("matrix dimensions must be positive", l1, c1)
    body = tokens[2:]
    if len(body) != rows * cols:
        raise ParseError(
            f"expected {rows * cols} entries for a {rows}x{cols} matrix, found {len(body)}",
            max(last_line, 1),
            1,
        )
    entries = [_parse_rational(t, line_no, col) for line_no, t, col in body]
    return RatMatrix(rows, cols, tuple(entries))


def load_matrix(path) -> RatMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())
