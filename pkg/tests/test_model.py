"""H-rep parsing, serialization, and the two-variable profile."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from li2poly import constructors
from li2poly.errors import HRepParseError
from li2poly.model import (Constraint, HPolytope, li2_profile, parse_hrep,
                           serialize_hrep)


def test_parse_basic():
    p = parse_hrep("2 2\n1 0 1\n0 1 1")
    assert (p.n, p.dim) == (2, 2)
    assert p.constraints[0].coeffs == (Fraction(1), Fraction(0))
    assert p.constraints[1].rhs == 1


def test_parse_fraction_entry():
    p = parse_hrep("1 1\n1/3 2")
    assert p.constraints[0].coeffs == (Fraction(1, 3),)


def test_parse_bytes_and_comments():
    p = parse_hrep(b"# family: pstar n=8 d=4\n# another comment\n2 2\n1 0 1\n0 1 1\n")
    assert p.family is not None and p.family.name == "pstar"
    assert (p.family.n, p.family.d) == (8, 4)


def test_parse_missing_rhs_errors_with_line():
    with pytest.raises(HRepParseError) as err:
        parse_hrep("2 2\n1 0 1\n0 1")
    assert err.value.line == 3


def test_parse_malformed_rational():
    with pytest.raises(HRepParseError, match="malformed"):
        parse_hrep("1 1\n1.5 2")
    with pytest.raises(HRepParseError, match="malformed"):
        parse_hrep("1 1\n1/-2 2")


def test_parse_trailing_data_rejected():
    with pytest.raises(HRepParseError, match="trailing"):
        parse_hrep("1 2\n1 0 1\n0 1 1")


def test_parse_missing_rows_rejected():
    with pytest.raises(HRepParseError, match="expected 3"):
        parse_hrep("3 2\n1 0 1\n0 1 1")


def test_serialize_normalizes():
    p = HPolytope(1, (Constraint((Fraction(2, 4),), Fraction(6, 2)),))
    assert serialize_hrep(p).splitlines()[1] == "1/2 3"


def test_serialize_integers_without_denominator():
    p = HPolytope(2, (Constraint((Fraction(3), Fraction(-2)), Fraction(7)),))
    assert serialize_hrep(p).splitlines()[1] == "3 -2 7"


def test_round_trip_pstar_12_6():
    p = constructors.pstar(12, 6)
    again = parse_hrep(serialize_hrep(p))
    assert again == p  # labels are compare-excluded; rows and family survive


def test_round_trip_awkward_entries():
    rows = [
        [Fraction(-7, 3), Fraction(10 ** 12), Fraction(0), Fraction(1, 9999)],
        [Fraction(5), Fraction(-1, 2), Fraction(3, 7), Fraction(-10 ** 9)],
    ]
    p = HPolytope(3, tuple(
        Constraint(tuple(r[:3]), r[3]) for r in rows))
    assert parse_hrep(serialize_hrep(p)) == p


@settings(max_examples=50)
@given(st.integers(1, 4).flatmap(lambda d: st.lists(
    st.lists(st.fractions(min_value=-10 ** 6, max_value=10 ** 6, max_denominator=997),
             min_size=d + 1, max_size=d + 1),
    min_size=0, max_size=6).map(lambda rows: (d, rows))))
def test_round_trip_is_exact(case):
    d, rows = case
    p = HPolytope(d, tuple(Constraint(tuple(r[:d]), r[d]) for r in rows))
    assert parse_hrep(serialize_hrep(p)) == p


def test_profile_pstar():
    prof = li2_profile(constructors.pstar(12, 6))
    assert prof.is_li2
    assert prof.n_prime == 12
    assert prof.single_var_count == 0
    assert prof.pair_counts == {(0, 1): 4, (2, 3): 4, (4, 5): 4}


def test_profile_dual_cyclic_dense():
    prof = li2_profile(constructors.dual_cyclic(8, 4))
    assert not prof.is_li2


def test_profile_prism():
    prof = li2_profile(constructors.prism3(8))
    assert prof.is_li2
    assert prof.n_prime == 6
    assert prof.single_var_count == 2
    assert prof.pair_counts == {(0, 1): 6}


def test_profile_buckets_partition_rows():
    for p in (constructors.pstar(8, 4), constructors.prism3(6),
              constructors.dual_cyclic(6, 3), constructors.pstar(7, 5)):
        prof = li2_profile(p)
        dense = sum(1 for c in p.constraints
                    if sum(1 for a in c.coeffs if a != 0) > 2)
        assert prof.n_prime + prof.single_var_count + dense == p.n


def test_permuted_preserves_rows():
    p = constructors.prism3(6)
    q = p.permuted(list(reversed(range(p.n))))
    assert q.constraints == tuple(reversed(p.constraints))


def test_serialize_after_parse_reproduces_canonical_text():
    text = "3 2\n1 0 1\n0 1/2 1\n-1 -1 0\n"
    assert serialize_hrep(parse_hrep(text)) == text
    # Non-canonical spacing and entries normalize, nothing else changes.
    messy = "  3   2\n1 0 1\n0 2/4 1\n-1 -1 0\n"
    assert serialize_hrep(parse_hrep(messy)) == text


def test_unrecognized_family_comment_is_ignored():
    p = parse_hrep("# family: mysteryshape n=3 d=2\n1 2\n1 0 1\n")
    assert p.family is None
