"""Cayley-table validation, the semigroup type, and the text format.

Frozen oracle tables are written out by hand at the top; every derived
fact asserted below was computed independently from those tables before
the assertions were written.
"""

from fractions import Fraction

import pytest

from semnorms import (
    BUILTIN_SEMIGROUPS,
    FiniteSemigroup,
    InvalidSemigroupError,
    ParseError,
    adjoin_identity,
    builtin_semigroup,
    cyclic_group,
    full_transformation_monoid,
    idempotents,
    inverse_set,
    is_regular,
    left_zero_semigroup,
    load_cayley_table,
    null_semigroup,
    parse_cayley_text,
    symmetric_group,
    validate,
    zero_elements,
)

# Self-maps of {0, 1} in lexicographic order: 0 = const 0, 1 = identity,
# 2 = swap, 3 = const 1, composed left to right.
T2_TABLE = (
    (0, 0, 3, 3),
    (0, 1, 2, 3),
    (0, 2, 1, 3),
    (0, 3, 0, 3),
)

Z2_TABLE = ((0, 1), (1, 0))

# (1*0)*1 = 0*1 = 1 but 1*(0*1) = 1*1 = 0, and similarly for (1,1,1).
NON_ASSOCIATIVE_TABLE = [[0, 1], [0, 0]]


# ---------------------------------------------------------------------------
# validate


def test_validate_accepts_z2():
    report = validate(Z2_TABLE)
    assert report.ok
    assert report.summary() == "valid Cayley table"


def test_validate_empty_table():
    report = validate([])
    assert not report.ok
    assert report.structural == ("empty table",)


def test_validate_ragged_rows():
    report = validate([[0, 1], [0]])
    assert not report.ok
    assert any("row 1 has 1 entries" in msg for msg in report.structural)


def test_validate_non_integer_entries():
    report = validate([[0, "x"], [1.5, 0]])
    assert not report.ok
    assert len(report.structural) == 2


def test_validate_rejects_bool_entries():
    # bool is an int subclass; a table of Trues must not validate.
    report = validate([[True, 0], [0, 0]])
    assert not report.ok
    assert "not an integer" in report.structural[0]


def test_validate_collects_every_out_of_range_entry():
    report = validate([[0, 5], [-1, 0]])
    assert not report.ok
    assert report.out_of_range == ((0, 1, 5), (1, 0, -1))
    assert report.non_associative == ()


def test_validate_collects_every_non_associative_triple():
    report = validate(NON_ASSOCIATIVE_TABLE)
    assert not report.ok
    assert report.non_associative == ((1, 0, 1), (1, 1, 1))


def test_validate_summary_counts():
    report = validate(NON_ASSOCIATIVE_TABLE)
    assert "2 associativity violations" in report.summary()
    assert "(1, 0, 1)" in report.summary()


def test_report_to_jsonable_roundtrips_values():
    report = validate([[0, 5], [0, 0]])
    out = report.to_jsonable()
    assert out["valid"] is False
    assert out["out_of_range"] == [{"row": 0, "col": 1, "value": 5}]
    assert out["structural"] == []


# ---------------------------------------------------------------------------
# FiniteSemigroup


def test_construction_validates():
    with pytest.raises(InvalidSemigroupError) as exc:
        FiniteSemigroup(NON_ASSOCIATIVE_TABLE)
    assert exc.value.report.non_associative == ((1, 0, 1), (1, 1, 1))


def test_construction_freezes_rows():
    s = FiniteSemigroup([[0, 1], [1, 0]])
    assert s.table == Z2_TABLE
    assert isinstance(s.table[0], tuple)


def test_order_elements_mul():
    s = FiniteSemigroup(T2_TABLE)
    assert s.order == 4
    assert list(s.elements()) == [0, 1, 2, 3]
    assert s.mul(2, 2) == 1


def test_identity_found_and_missing():
    assert FiniteSemigroup(Z2_TABLE).identity() == 0
    assert FiniteSemigroup(T2_TABLE).identity() == 1
    assert left_zero_semigroup(3).identity() is None


def test_labels_coerced_to_fractions():
    s = FiniteSemigroup(Z2_TABLE, labels=(1, "1/2"))
    assert s.labels == (Fraction(1), Fraction(1, 2))


def test_label_count_mismatch():
    with pytest.raises(InvalidSemigroupError, match="3 labels for 2 elements"):
        FiniteSemigroup(Z2_TABLE, labels=(1, 2, 3))


def test_semigroups_are_hashable_and_equal_by_value():
    assert builtin_semigroup("t2") == builtin_semigroup("t2")
    assert hash(builtin_semigroup("z2")) == hash(builtin_semigroup("z2"))


# ---------------------------------------------------------------------------
# adjoin_identity


def test_adjoin_identity_returns_monoid_unchanged():
    s = builtin_semigroup("z2")
    assert adjoin_identity(s) is s


def test_adjoin_identity_adds_one_element():
    s = left_zero_semigroup(3)
    s1 = adjoin_identity(s)
    assert s1.order == 4
    assert s1.identity() == 3
    # The original multiplication is untouched.
    for a in range(3):
        for b in range(3):
            assert s1.table[a][b] == s.table[a][b]
    assert s1.labels is None


# ---------------------------------------------------------------------------
# element predicates


def test_idempotents():
    assert idempotents(builtin_semigroup("z2")) == {0}
    assert idempotents(builtin_semigroup("t2")) == {0, 1, 3}
    assert idempotents(builtin_semigroup("null4")) == {0}
    assert idempotents(builtin_semigroup("leftzero3")) == {0, 1, 2}


def test_inverse_set_t2():
    t2 = builtin_semigroup("t2")
    assert inverse_set(t2, 0) == {0, 3}
    assert inverse_set(t2, 1) == {1}
    assert inverse_set(t2, 2) == {2}


def test_inverse_set_null_semigroup():
    null4 = builtin_semigroup("null4")
    assert inverse_set(null4, 0) == {0}
    assert inverse_set(null4, 1) == frozenset()


def test_inverse_set_left_zero_is_everything():
    # a*b*a = a and b*a*b = b hold for every pair when x*y = x.
    lz = builtin_semigroup("leftzero3")
    for a in lz.elements():
        assert inverse_set(lz, a) == {0, 1, 2}


def test_inverse_set_rejects_bad_index():
    with pytest.raises(ValueError, match="out of range"):
        inverse_set(builtin_semigroup("z2"), 5)


def test_is_regular():
    assert is_regular(builtin_semigroup("t2"))
    assert is_regular(builtin_semigroup("t3"))
    assert is_regular(builtin_semigroup("leftzero3"))
    assert is_regular(builtin_semigroup("s3"))
    assert not is_regular(builtin_semigroup("null4"))


def test_zero_elements():
    t2 = builtin_semigroup("t2")
    zeros = zero_elements(t2)
    assert zeros.left == frozenset()
    assert zeros.right == {0, 3}
    assert zeros.two_sided == frozenset()

    null4 = builtin_semigroup("null4")
    assert zero_elements(null4).two_sided == {0}

    lz = builtin_semigroup("leftzero3")
    assert zero_elements(lz).left == {0, 1, 2}
    assert zero_elements(lz).right == frozenset()


# ---------------------------------------------------------------------------
# catalog


def test_builtin_names_and_orders():
    expected = {
        "z2": 2,
        "c4": 4,
        "s3": 6,
        "t2": 4,
        "t3": 27,
        "leftzero3": 3,
        "null4": 4,
    }
    assert set(BUILTIN_SEMIGROUPS) == set(expected)
    for name, order in expected.items():
        assert builtin_semigroup(name).order == order


def test_t2_table_is_frozen_oracle():
    assert builtin_semigroup("t2").table == T2_TABLE


def test_cyclic_groups_are_abelian():
    for s in (cyclic_group(2), cyclic_group(4)):
        for a in s.elements():
            for b in s.elements():
                assert s.mul(a, b) == s.mul(b, a)


def test_s3_is_not_abelian():
    s3 = symmetric_group(3)
    assert s3.identity() == 0
    assert any(
        s3.mul(a, b) != s3.mul(b, a) for a in s3.elements() for b in s3.elements()
    )


def test_left_zero_law():
    lz = left_zero_semigroup(3)
    for a in lz.elements():
        for b in lz.elements():
            assert lz.mul(a, b) == a


def test_null_semigroup_law():
    null = null_semigroup(4)
    for a in null.elements():
        for b in null.elements():
            assert null.mul(a, b) == 0


def test_t3_contains_identity():
    # The identity map (0,1,2) sits at lexicographic position 5 = 0*9+1*3+2.
    assert full_transformation_monoid(3).identity() == 5


def test_catalog_rejects_bad_sizes():
    for factory in (
        cyclic_group,
        symmetric_group,
        full_transformation_monoid,
        left_zero_semigroup,
        null_semigroup,
    ):
        with pytest.raises(ValueError):
            factory(0)


def test_unknown_builtin_name():
    with pytest.raises(ValueError, match="unknown semigroup name"):
        builtin_semigroup("nope")


# ---------------------------------------------------------------------------
# text format


def test_parse_round_trip():
    text = "2\n0 1\n1 0\n"
    rows, labels = parse_cayley_text(text)
    assert rows == [[0, 1], [1, 0]]
    assert labels is None


def test_parse_labels_same_line():
    rows, labels = parse_cayley_text("2\n0 1\n1 0\nlabels: 1 -1/2\n")
    assert rows == [[0, 1], [1, 0]]
    assert labels == [Fraction(1), Fraction(-1, 2)]


def test_parse_labels_following_lines():
    rows, labels = parse_cayley_text("2\n0 1\n1 0\nlabels:\n0.5\n2\n")
    assert labels == [Fraction(1, 2), Fraction(2)]


def test_parse_ignores_blank_lines():
    rows, _ = parse_cayley_text("\n2\n\n0 1\n\n1 0\n\n")
    assert rows == [[0, 1], [1, 0]]


def test_parse_missing_order():
    with pytest.raises(ParseError, match="missing table order"):
        parse_cayley_text("")


def test_parse_nonpositive_order():
    with pytest.raises(ParseError, match="order must be positive"):
        parse_cayley_text("0\n")


def test_parse_too_few_entries():
    with pytest.raises(ParseError, match="expected 4 table entries, found 3"):
        parse_cayley_text("2\n0 1\n1\n")


def test_parse_extra_token_position():
    with pytest.raises(ParseError) as exc:
        parse_cayley_text("2\n0 1\n1 0 9\n")
    assert exc.value.line == 3
    assert exc.value.column == 5


def test_parse_bad_integer_position():
    with pytest.raises(ParseError) as exc:
        parse_cayley_text("2\n0 x\n1 0\n")
    assert "expected an integer" in str(exc.value)
    assert (exc.value.line, exc.value.column) == (2, 3)


def test_parse_label_count_mismatch():
    with pytest.raises(ParseError, match="expected 2 labels, found 1"):
        parse_cayley_text("2\n0 1\n1 0\nlabels: 1\n")


def test_parse_bad_label():
    with pytest.raises(ParseError, match="expected a rational"):
        parse_cayley_text("2\n0 1\n1 0\nlabels: 1 x\n")


def test_load_cayley_table(tmp_path):
    path = tmp_path / "z2.txt"
    path.write_text("2\n0 1\n1 0\nlabels: 1 -1\n")
    s = load_cayley_table(path)
    assert s.table == Z2_TABLE
    assert s.labels == (Fraction(1), Fraction(-1))


def test_load_rejects_invalid_table(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n0 1\n0 0\n")
    with pytest.raises(InvalidSemigroupError):
        load_cayley_table(path)
