"""Structural laws that every submultiplicative norm obeys, as checkers.

Each checker first verifies that the table is submultiplicative at all;
if not, the law's hypothesis is void and the verdict is INAPPLICABLE
rather than a vacuous PASS.  A FAIL verdict always carries a witness
tuple that re-evaluates to a genuine violation on its own.

The seven laws, in suite order:

P2  an idempotent's value is 0 or at least 1
P3  the zero set is closed under products
P4  a zero value spreads to the whole Green D-class
P5  if value(a) != 0 and b is an inverse of a then value(b) >= 1/value(a)
P6  on a group with no zero values, every value is at least 1
P7  a one-sided zero element with nonzero value forces every value >= 1
P8  below b in the natural order, value(b) = 0 forces value(a) = 0
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .green import green_structure
from .natural_order import natural_order
from .norms import _coerce, check_submultiplicative, zero_set
from .semigroups import (
    FiniteSemigroup,
    idempotents,
    inverse_set,
    is_regular,
    zero_elements,
)

PASS = "PASS"
FAIL = "FAIL"
INAPPLICABLE = "INAPPLICABLE"

SUITE_IDS = ("P2", "P3", "P4", "P5", "P6", "P7", "P8")

_NOT_SUBMULTIPLICATIVE = "norm table is not submultiplicative"


@dataclass(frozen=True)
class PropositionVerdict:
    proposition: str
    status: str
    witness: tuple | None = None
    detail: str = ""

    def to_jsonable(self) -> dict:
        out = {"proposition": self.proposition, "status": self.status}
        if self.witness is not None:
            out["witness"] = [
                str(x) if isinstance(x, Fraction) else x for x in self.witness
            ]
        if self.detail:
            out["detail"] = self.detail
        return out


def _scan_idempotent_dichotomy(s, norm):
    v = norm.values
    for e in sorted(idempotents(s)):
        if 0 < v[e] < 1:
            return PropositionVerdict("P2", FAIL, witness=(e, v[e]))
    return PropositionVerdict("P2", PASS)


def _scan_zero_set_closed(s, norm):
    zeros = zero_set(s, norm)
    v = norm.values
    for a in sorted(zeros):
        for b in sorted(zeros):
            ab = s.table[a][b]
            if ab not in zeros:
                return PropositionVerdict("P3", FAIL, witness=(a, b, ab, v[ab]))
    detail = (
        "zero set empty (vacuously closed)"
        if not zeros
        else f"zero set has {len(zeros)} elements"
    )
    return PropositionVerdict("P3", PASS, detail=detail)


def _scan_zero_spreads_over_d_class(s, norm):
    v = norm.values
    for part in green_structure(s).d_classes:
        block = sorted(part)
        zeros = [a for a in block if v[a] == 0]
        if not zeros:
            continue
        nonzeros = [b for b in block if v[b] != 0]
        if nonzeros:
            # Equivalently, in contrapositive form: value(a) != 0 forces
            # value(b) != 0 across the D-class; one scan covers both.
            return PropositionVerdict(
                "P4", FAIL, witness=(zeros[0], nonzeros[0], v[nonzeros[0]])
            )
    return PropositionVerdict("P4", PASS)


def _scan_inverse_lower_bound(s, norm):
    v = norm.values
    for a in s.elements():
        if v[a] == 0:
            continue
        bound = 1 / v[a]
        for b in sorted(inverse_set(s, a)):
            if v[b] < bound:
                return PropositionVerdict("P5", FAIL, witness=(a, b, v[a], v[b]))
    return PropositionVerdict("P5", PASS)


def _scan_group_lower_bound(s, norm):
    if len(idempotents(s)) != 1 or not is_regular(s):
        return PropositionVerdict("P6", INAPPLICABLE, detail="not a group")
    v = norm.values
    if any(v[a] == 0 for a in s.elements()):
        return PropositionVerdict(
            "P6", INAPPLICABLE, detail="zero values present; the law assumes none"
        )
    for a in s.elements():
        if v[a] < 1:
            return PropositionVerdict("P6", FAIL, witness=(a, v[a]))
    return PropositionVerdict("P6", PASS)


def _scan_zero_element_bound(s, norm):
    v = norm.values
    left, right, _ = zero_elements(s)
    carriers = sorted(z for z in left | right if v[z] != 0)
    if not carriers:
        detail = (
            "no one-sided zero elements"
            if not (left | right)
            else "every one-sided zero has value 0"
        )
        return PropositionVerdict("P7", INAPPLICABLE, detail=detail)
    for x in s.elements():
        if v[x] < 1:
            return PropositionVerdict("P7", FAIL, witness=(carriers[0], x, v[x]))
    return PropositionVerdict("P7", PASS)


def _scan_order_zero_downward(s, norm):
    v = norm.values
    for a, b in sorted(natural_order(s).pairs):
        if v[b] == 0 and v[a] != 0:
            return PropositionVerdict("P8", FAIL, witness=(a, b, v[a]))
    return PropositionVerdict("P8", PASS)


_SCANS = {
    "P2": _scan_idempotent_dichotomy,
    "P3": _scan_zero_set_closed,
    "P4": _scan_zero_spreads_over_d_class,
    "P5": _scan_inverse_lower_bound,
    "P6": _scan_group_lower_bound,
    "P7": _scan_zero_element_bound,
    "P8": _scan_order_zero_downward,
}


def _gated(prop_id: str, s: FiniteSemigroup, values) -> PropositionVerdict:
    norm = _coerce(s, values)
    if not check_submultiplicative(s, norm).ok:
        return PropositionVerdict(prop_id, INAPPLICABLE, detail=_NOT_SUBMULTIPLICATIVE)
    return _SCANS[prop_id](s, norm)


def check_idempotent_norm_dichotomy(s: FiniteSemigroup, values) -> PropositionVerdict:
    """P2: no idempotent value strictly between 0 and 1."""
    return _gated("P2", s, values)


def check_zero_set_closed(s: FiniteSemigroup, values) -> PropositionVerdict:
    """P3: products of zero-value elements have value zero."""
    return _gated("P3", s, values)


def check_zero_spreads_over_d_class(s: FiniteSemigroup, values) -> PropositionVerdict:
    """P4: within one D-class, values are all zero or all nonzero."""
    return _gated("P4", s, values)


def check_inverse_lower_bound(s: FiniteSemigroup, values) -> PropositionVerdict:
    """P5: inverses of a obey value(b) >= 1/value(a) when value(a) != 0."""
    return _gated("P5", s, values)


def check_group_lower_bound(s: FiniteSemigroup, values) -> PropositionVerdict:
    """P6: on a group, all-nonzero values are all >= 1."""
    return _gated("P6", s, values)


def check_zero_element_bound(s: FiniteSemigroup, values) -> PropositionVerdict:
    """P7: a one-sided zero with nonzero value forces min value >= 1."""
    return _gated("P7", s, values)


def check_order_zero_downward(s: FiniteSemigroup, values) -> PropositionVerdict:
    """P8: zero values propagate downward along the natural order."""
    return _gated("P8", s, values)


SUITE_CHECKERS = (
    check_idempotent_norm_dichotomy,
    check_zero_set_closed,
    check_zero_spreads_over_d_class,
    check_inverse_lower_bound,
    check_group_lower_bound,
    check_zero_element_bound,
    check_order_zero_downward,
)


def run_suite(s: FiniteSemigroup, values) -> tuple[PropositionVerdict, ...]:
    """All seven checkers, in suite order P2..P8."""
    return tuple(checker(s, values) for checker in SUITE_CHECKERS)


def suite_to_jsonable(verdicts) -> list[dict]:
    return [v.to_jsonable() for v in verdicts]
