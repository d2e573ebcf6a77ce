"""Finite semigroups given by Cayley tables.

Elements are the indices 0..n-1 and ``table[a][b]`` is the index of the
product a*b.  Every algebraic operation works on indices only; optional
rational labels are carried along for norm constructions but are never
consulted by the algebra itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InvalidSemigroupError, ParseError


@dataclass(frozen=True)
class ValidationReport:
    """Everything wrong with a candidate Cayley table; empty means valid.

    Structural problems (non-square rows, non-integer entries) are kept
    apart from associativity failures, and out-of-range entries are kept
    apart from both.  The associativity scan only runs once all entries
    are usable as indices.
    """

    structural: tuple[str, ...] = ()
    out_of_range: tuple[tuple[int, int, object], ...] = ()
    non_associative: tuple[tuple[int, int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return not (self.structural or self.out_of_range or self.non_associative)

    def summary(self) -> str:
        if self.ok:
            return "valid Cayley table"
        parts = []
        if self.structural:
            parts.append("; ".join(self.structural))
        if self.out_of_range:
            row, col, value = self.out_of_range[0]
            parts.append(
                f"{len(self.out_of_range)} out-of-range entries "
                f"(first at row {row}, column {col}: {value!r})"
            )
        if self.non_associative:
            i, j, k = self.non_associative[0]
            parts.append(
                f"{len(self.non_associative)} associativity violations "
                f"(first at triple ({i}, {j}, {k}))"
            )
        return "; ".join(parts)

    def to_jsonable(self) -> dict:
        return {
            "valid": self.ok,
            "structural": list(self.structural),
            "out_of_range": [
                {"row": r, "col": c, "value": repr(v) if not isinstance(v, int) else v}
                for r, c, v in self.out_of_range
            ],
            "non_associative": [{"i": i, "j": j, "k": k} for i, j, k in self.non_associative],
        }


def validate(table: Sequence[Sequence[object]]) -> ValidationReport:
    """Check a candidate Cayley table exhaustively.

    Lists every out-of-range entry and every violating triple (i, j, k)
    with (i*j)*k != i*(j*k).  The triple scan is O(n^3), which is the
    point: no sampling, no shortcuts.
    """
    structural = []
    n = len(table)
    if n == 0:
        return ValidationReport(structural=("empty table",))
    for i, row in enumerate(table):
        if len(row) != n:
            structural.append(f"row {i} has {len(row)} entries, expected {n}")
    out_of_range = []
    for i, row in enumerate(table):
        for j, value in enumerate(row):
            if not isinstance(value, int) or isinstance(value, bool):
                structural.append(f"entry ({i}, {j}) is not an integer: {value!r}")
            elif not 0 <= value < n:
                out_of_range.append((i, j, value))
    if structural or out_of_range:
        return ValidationReport(
            structural=tuple(structural), out_of_range=tuple(out_of_range)
        )
    non_associative = []
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            ij = row_i[j]
            row_j = table[j]
            for k in range(n):
                if table[ij][k] != row_i[row_j[k]]:
                    non_associative.append((i, j, k))
    return ValidationReport(non_associative=tuple(non_associative))


@dataclass(frozen=True)
class FiniteSemigroup:
    """An immutable finite semigroup.

    Construction validates the table and raises InvalidSemigroupError when
    it is not square, not in range, or not associative.  ``labels`` is an
    optional per-element tuple of exact rationals.
    """

    table: tuple[tuple[int, ...], ...]
    labels: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        report = validate(table)
        if not report.ok:
            raise InvalidSemigroupError(report)
        if self.labels is not None:
            labels = tuple(Fraction(x) for x in self.labels)
            if len(labels) != len(table):
                raise InvalidSemigroupError(
                    ValidationReport(
                        structural=(
                            f"{len(labels)} labels for {len(table)} elements",
                        )
                    )
                )
            object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def identity(self) -> int | None:
        """Index of the two-sided identity, or None."""
        for e in self.elements():
            if all(self.table[e][x] == x and self.table[x][e] == x for x in self.elements()):
                return e
        return None

    def __repr__(self) -> str:
        return f"FiniteSemigroup(order={self.order})"


def adjoin_identity(s: FiniteSemigroup) -> FiniteSemigroup:
    """Return s itself if it has an identity, else s with one new element
    acting as a two-sided identity (index ``s.order``).

    Labels are dropped when a new element is adjoined: there is no
    canonical label for it.
    """
    if s.identity() is not None:
        return s
    n = s.order
    rows = [row + (i,) for i, row in enumerate(s.table)]
    rows.append(tuple(range(n + 1)))
    return FiniteSemigroup(tuple(rows))


def idempotents(s: FiniteSemigroup) -> frozenset[int]:
    """All e with e*e = e, by direct scan."""
    return frozenset(e for e in s.elements() if s.table[e][e] == e)


def inverse_set(s: FiniteSemigroup, a: int) -> frozenset[int]:
    """All b with a*b*a = a and b*a*b = b (possibly empty)."""
    _check_element(s, a)
    t = s.table
    found = []
    for b in s.elements():
        ab = t[a][b]
        ba = t[b][a]
        if t[ab][a] == a and t[ba][b] == b:
            found.append(b)
    return frozenset(found)


def is_regular(s: FiniteSemigroup) -> bool:
    """True iff every a has some x with a*x*a = a.

    Equivalent to every element having a nonempty inverse set: from
    a*x*a = a the element x*a*x is a genuine inverse of a.
    """
    t = s.table
    for a in s.elements():
        for x in s.elements():
            if t[t[a][x]][a] == a:
                break
        else:
            return False
    return True


class ZeroElements(NamedTuple):
    left: frozenset[int]
    right: frozenset[int]
    two_sided: frozenset[int]


def zero_elements(s: FiniteSemigroup) -> ZeroElements:
    """Left zeros (z*x = z for all x), right zeros (x*z = z for all x),
    and their intersection.  A two-sided zero is unique when it exists."""
    t = s.table
    left = frozenset(z for z in s.elements() if all(t[z][x] == z for x in s.elements()))
    right = frozenset(z for z in s.elements() if all(t[x][z] == z for x in s.elements()))
    return ZeroElements(left, right, left & right)


def _check_element(s: FiniteSemigroup, a: int) -> None:
    if not isinstance(a, int) or not 0 <= a < s.order:
        raise ValueError(f"element index {a!r} out of range for order {s.order}")


# ---------------------------------------------------------------------------
# Text format: first line is the order n, then n lines of n space-separated
# 0-based indices, then optionally a line "labels:" followed by n rational
# or decimal labels (same line after the colon or on following lines).

_TOKEN = re.compile(r"\S+")


def _tokens(line: str):
    for m in _TOKEN.finditer(line):
        yield m.group(), m.start() + 1


def _parse_int(token: str, line_no: int, col: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line_no, col) from None


def _parse_rational(token: str, line_no: int, col: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(
            f"expected a rational like 3, -1/2 or 0.25, got {token!r}", line_no, col
        ) from None


def parse_cayley_text(text: str) -> tuple[list[list[int]], list[Fraction] | None]:
    """Parse the Cayley-table text format into (rows, labels).

    Purely syntactic: the result may still fail ``validate``.  Blank lines
    are ignored.  Raises ParseError with 1-based line and column.
    """
    pending: list[tuple[int, str, int]] = []  # (line_no, token, col)
    label_tokens: list[tuple[int, str, int]] = []
    in_labels = False
    last_line = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        last_line = line_no
        stripped = line.strip()
        if not stripped:
            continue
        if not in_labels and stripped.startswith("labels:"):
            in_labels = True
            rest = line[line.index("labels:") + len("labels:"):]
            offset = line.index("labels:") + len("labels:")
            for token, col in _tokens(rest):
                label_tokens.append((line_no, token, offset + col))
            continue
        target = label_tokens if in_labels else pending
        for token, col in _tokens(line):
            target.append((line_no, token, col))

    if not pending:
        raise ParseError("missing table order", max(last_line, 1), 1)
    line_no, token, col = pending[0]
    n = _parse_int(token, line_no, col)
    if n <= 0:
        raise ParseError(f"order must be positive, got {n}", line_no, col)
    body = pending[1:]
    if len(body) < n * n:
        raise ParseError(
            f"expected {n * n} table entries, found {len(body)}", max(last_line, 1), 1
        )
    if len(body) > n * n:
        line_no, token, col = body[n * n]
        raise ParseError(f"unexpected extra token {token!r}", line_no, col)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            line_no, token, col = body[i * n + j]
            row.append(_parse_int(token, line_no, col))
        rows.append(row)

    labels: list[Fraction] | None = None
    if in_labels:
        if len(label_tokens) != n:
            where = label_tokens[0][0] if label_tokens else last_line
            raise ParseError(
                f"expected {n} labels, found {len(label_tokens)}", where, 1
            )
        labels = [
            _parse_rational(token, line_no, col) for line_no, token, col in label_tokens
        ]
    return rows, labels


def load_cayley_table(path) -> FiniteSemigroup:
    """Read and validate a semigroup from a Cayley-table text file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    rows, labels = parse_cayley_text(text)
    return FiniteSemigroup(tuple(tuple(r) for r in rows), tuple(labels) if labels else None)
