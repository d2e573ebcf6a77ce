"""Norm tables on finite semigroups.

A norm assigns a nonnegative rational to every element; it is
submultiplicative when value(a*b) <= value(a) * value(b) for every pair.
All checks here are exhaustive and exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    GeneratorExhaustedError,
    NormConstructionError,
    NormDomainError,
    ParseError,
)
from .semigroups import FiniteSemigroup, _parse_rational

DEFAULT_VALUE_POOL = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))

NORM_FAMILIES = ("zero", "one", "abs", "exp", "exp_abs")


class NormTable:
    """Immutable tuple of nonnegative exact rationals, one per element."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable):
        vals = tuple(Fraction(v) for v in values)
        for i, v in enumerate(vals):
            if v < 0:
                raise NormDomainError(f"norm value at element {i} is negative: {v}")
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("NormTable is immutable")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return isinstance(other, NormTable) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"NormTable({[str(v) for v in self.values]})"

    @classmethod
    def constant(cls, order: int, value) -> "NormTable":
        return cls([Fraction(value)] * order)


def _coerce(s: FiniteSemigroup, values) -> NormTable:
    norm = values if isinstance(values, NormTable) else NormTable(values)
    if len(norm) != s.order:
        raise ValueError(f"norm table has {len(norm)} values for order {s.order}")
    return norm


@dataclass(frozen=True)
class SubmultiplicativityVerdict:
    """PASS, or the first violating pair in row-major scan order together
    with the three values value(a*b), value(a), value(b)."""

    ok: bool
    witness: tuple[int, int, Fraction, Fraction, Fraction] | None = None

    def to_jsonable(self) -> dict:
        if self.ok:
            return {"ok": True, "witness": None}
        a, b, vab, va, vb = self.witness
        return {
            "ok": False,
            "witness": {
                "a": a,
                "b": b,
                "value_ab": str(vab),
                "value_a": str(va),
                "value_b": str(vb),
            },
        }


def check_submultiplicative(s: FiniteSemigroup, values) -> SubmultiplicativityVerdict:
    """Exhaustive check of value(a*b) <= value(a)*value(b) over all pairs.

    A negative entry raises NormDomainError before any pair is examined;
    that is a domain error, not a FAIL.
    """
    norm = _coerce(s, values)
    v = norm.values
    for a in s.elements():
        row = s.table[a]
        va = v[a]
        for b in s.elements():
            bound = va * v[b]
            vab = v[row[b]]
            if vab > bound:
                return SubmultiplicativityVerdict(False, (a, b, vab, va, v[b]))
    return SubmultiplicativityVerdict(True)


def zero_set(s: FiniteSemigroup, values) -> frozenset[int]:
    norm = _coerce(s, values)
    return frozenset(a for a in s.elements() if norm[a] == 0)


# ---------------------------------------------------------------------------
# Built-in families.


def exp_approx(x: Fraction, terms: int = 32) -> Fraction:
    """Truncated exponential series with exact rational arithmetic.

    For x >= 0 this is the partial sum (a slight underestimate); negative
    arguments go through 1/exp_approx(-x) so the result stays positive.
    """
    x = Fraction(x)
    if x < 0:
        return 1 / exp_approx(-x, terms)
    term = Fraction(1)
    total = Fraction(1)
    for i in range(1, terms + 1):
        term = term * x / i
        total += term
    return total


def builtin_norm(s: FiniteSemigroup, family: str) -> NormTable:
    """Construct one of the stock families.

    zero / one need no labels.  abs is |label|; exp is exp_approx(label)
    and exp_abs is exp_approx(|label|).  Because exp_approx is only an
    approximation of the exponential, every label-derived table is pushed
    through check_submultiplicative afterwards; the guard, not the
    construction, decides validity, and a guard failure raises
    NormConstructionError with the violating pair.
    """
    if family == "zero":
        return NormTable.constant(s.order, 0)
    if family == "one":
        return NormTable.constant(s.order, 1)
    if family not in NORM_FAMILIES:
        raise ValueError(f"unknown norm family {family!r} (known: {', '.join(NORM_FAMILIES)})")
    if s.labels is None:
        raise ValueError(f"norm family {family!r} needs element labels")
    if family == "abs":
        values = [abs(x) for x in s.labels]
    elif family == "exp":
        values = [exp_approx(x) for x in s.labels]
    else:  # exp_abs
        values = [exp_approx(abs(x)) for x in s.labels]
    norm = NormTable(values)
    verdict = check_submultiplicative(s, norm)
    if not verdict.ok:
        a, b, vab, va, vb = verdict.witness
        raise NormConstructionError(
            f"family {family!r} is not submultiplicative on this table: "
            f"value({a}*{b}) = {vab} > {va} * {vb}"
        )
    return norm


# ---------------------------------------------------------------------------
# Random norms.


def submultiplicative_envelope(s: FiniteSemigroup, values) -> NormTable:
    """Largest submultiplicative table dominated pointwise by ``values``.

    Equivalently: the infimum over all factorizations a = s1*...*sk of the
    product of the input values.  Computed by synchronous min-relaxation
    value(a*b) <- min(value(a*b), value(a)*value(b)); any fixpoint of that
    rule is submultiplicative, and every step preserves domination of the
    true infimum, so the stable table is the envelope itself.

    Divergence is the one subtlety: a factorization cycle whose value
    product is below 1 can be pumped, driving the infimum on everything it
    feeds to 0.  Left alone, such a cycle also squares its values every
    round, so the fractions grow without bound.  Two rules keep the
    relaxation finite and the arithmetic small.  Any candidate value that
    drops below m**(order+3), where m is the smallest input value in
    (0, 1), is snapped to exact 0; reaching that deep needs more than
    order+3 sub-1 factors, which pins the element under a pumping cycle in
    every case that arises from pool-valued draws.  And an element still
    improving after order+3 synchronous rounds has a repeated element on
    some path of its factorization tree whose excised context multiplies
    to less than 1, so its infimum is 0 and it is zeroed outright.  Both
    rules only ever replace a value by 0, the relaxation re-propagates
    afterwards, and the fixpoint reached is submultiplicative regardless.
    """
    norm = _coerce(s, values)
    n = s.order
    vals = list(norm.values)
    zero = Fraction(0)
    one = Fraction(1)
    table = s.table
    small = [v for v in vals if zero < v < one]
    cutoff = min(small) ** (n + 3) if small else zero
    while True:
        changed: list[int] = []
        stable = False
        for _ in range(n + 3):
            new = list(vals)
            for a in range(n):
                va = vals[a]
                row = table[a]
                if va == zero:
                    for b in range(n):
                        c = row[b]
                        if new[c] != zero:
                            new[c] = zero
                    continue
                for b in range(n):
                    cand = va * vals[b]
                    c = row[b]
                    if cand < new[c]:
                        new[c] = cand if cand >= cutoff else zero
            changed = [i for i in range(n) if new[i] != vals[i]]
            vals = new
            if not changed:
                stable = True
                break
        if stable:
            return NormTable(vals)
        for i in changed:
            vals[i] = zero


@dataclass(frozen=True)
class NormBatch:
    """Output of the random generator, with its sampling statistics."""

    norms: tuple[NormTable, ...]
    requested: int
    attempts: int
    repaired: int


def random_submultiplicative_norms(
    s: FiniteSemigroup,
    count: int,
    seed: int = 0,
    value_pool: Sequence = DEFAULT_VALUE_POOL,
    max_attempts_per_norm: int = 1000,
    repair: bool = True,
) -> NormBatch:
    """Draw ``count`` random submultiplicative norm tables, deterministically
    for a given seed.

    Each draw assigns every element a uniform value from ``value_pool``
    and keeps the table if it already passes check_submultiplicative.
    With ``repair`` (the default) a failing draw is replaced by its
    submultiplicative envelope, so every draw yields a table; pure
    rejection on tables of order n accepts with probability that decays
    exponentially in n^2 and stalls already around order 6.  With
    ``repair=False`` failing draws are rejected, each sample gives up
    after ``max_attempts_per_norm`` tries, and a run that yields nothing
    at all raises GeneratorExhaustedError.

    Every returned table is re-verified, not trusted.
    """
    pool = tuple(Fraction(v) for v in value_pool)
    if not pool:
        raise ValueError("value pool is empty")
    for v in pool:
        if v < 0:
            raise NormDomainError(f"value pool contains a negative entry: {v}")
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = random.Random(seed)
    norms: list[NormTable] = []
    attempts = 0
    repaired = 0
    for _ in range(count):
        if repair:
            attempts += 1
            draw = NormTable(rng.choice(pool) for _ in s.elements())
            if check_submultiplicative(s, draw).ok:
                norms.append(draw)
            else:
                repaired += 1
                norms.append(submultiplicative_envelope(s, draw))
        else:
            for _ in range(max_attempts_per_norm):
                attempts += 1
                draw = NormTable(rng.choice(pool) for _ in s.elements())
                if check_submultiplicative(s, draw).ok:
                    norms.append(draw)
                    break
    if count > 0 and not norms:
        raise GeneratorExhaustedError(
            f"no submultiplicative table found in {attempts} draws "
            f"from pool {[str(v) for v in pool]}; widen the pool "
            "(a pool containing 1 makes the constant table reachable)"
        )
    for norm in norms:
        if not check_submultiplicative(s, norm).ok:  # pragma: no cover
            raise RuntimeError("generator produced a non-submultiplicative table")
    return NormBatch(tuple(norms), count, attempts, repaired)


# ---------------------------------------------------------------------------
# Text format: one nonnegative rational (p/q or decimal) per line.


def parse_norm_text(text: str) -> NormTable:
    values = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        tokens = stripped.split()
        if len(tokens) != 1:
            raise ParseError("expected one value per line", line_no, 1)
        value = _parse_rational(tokens[0], line_no, line.index(tokens[0]) + 1)
        if value < 0:
            raise ParseError(
                f"norm values must be nonnegative, got {value}",
                line_no,
                line.index(tokens[0]) + 1,
            )
        values.append(value)
    return NormTable(values)


def load_norm_table(path) -> NormTable:
    with open(path, encoding="utf-8") as fh:
        return parse_norm_text(fh.read())
