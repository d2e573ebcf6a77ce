"""The natural partial order on an arbitrary semigroup.

a <= b iff there are x, y in S^1 with a = x*b = b*y and x*a = a.  On any
semigroup this relation is reflexive, antisymmetric and transitive, and
on a group it collapses to equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .semigroups import FiniteSemigroup, _check_element, adjoin_identity


@dataclass(frozen=True)
class OrderRelation:
    order: int
    pairs: frozenset[tuple[int, int]]

    def leq(self, a: int, b: int) -> bool:
        return (a, b) in self.pairs


def natural_leq(s: FiniteSemigroup, a: int, b: int) -> bool:
    """Brute force over S^1 x S^1; the adjoined identity covers the
    degenerate witnesses x = 1 (forcing a = b) and y = 1."""
    _check_element(s, a)
    _check_element(s, b)
    t = adjoin_identity(s).table
    n1 = len(t)
    if not any(t[x][b] == a and t[x][a] == a for x in range(n1)):
        return False
    return any(t[b][y] == a for y in range(n1))


@cache
def natural_order(s: FiniteSemigroup) -> OrderRelation:
    """All pairs (a, b) with a <= b, reflexive pairs included."""
    t = adjoin_identity(s).table
    n = s.order
    n1 = len(t)
    pairs = []
    for b in range(n):
        row_b = t[b]
        downs = {row_b[y] for y in range(n1)}
        for a in range(n):
            if a not in downs:
                continue
            if any(t[x][b] == a and t[x][a] == a for x in range(n1)):
                pairs.append((a, b))
    return OrderRelation(n, frozenset(pairs))
