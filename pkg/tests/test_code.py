"""Periodic codes: membership, validity, density, census, pattern files."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridcodes.code import (
    PatternError,
    PeriodicCode,
    density,
    format_pattern,
    identifying_set,
    is_identifying_code,
    make_code,
    parse_pattern,
    window_census,
)
from gridcodes.grid import GridKind, ball_set

from conftest import DATA, VALID_PATTERNS, load_pattern


def oracle_validity(code, r):
    """Naive box oracle: materialize every ball over a margined tiling.

    Equal identifying sets of distinct vertices require either overlapping
    balls or two empty sets, so scanning the fundamental domain against a
    box padded by max(period, 2r) is exhaustive.
    """
    mx = max(code.px, 2 * r)
    my = max(code.py, 2 * r)

    def iset(v):
        return frozenset(u for u in ball_set(code.kind, v, r) if u in code)

    dom = [(i, j) for i in range(code.px) for j in range(code.py)]
    for v in dom:
        if not iset(v):
            return False
    for v in dom:
        sv = iset(v)
        for i in range(-mx, code.px + mx):
            for j in range(-my, code.py + my):
                u = (i, j)
                if u != v and iset(u) == sv:
                    return False
    return True


class TestConstruction:
    def test_empty_offsets_rejected(self):
        with pytest.raises(ValueError):
            PeriodicCode(GridKind.SQUARE, 2, 2, frozenset())

    def test_hex_odd_period_rejected(self):
        with pytest.raises(ValueError):
            make_code(GridKind.HEX, 3, 2, [(0, 0)])
        with pytest.raises(ValueError):
            make_code(GridKind.HEX, 2, 5, [(0, 0)])

    def test_offsets_outside_domain_rejected(self):
        with pytest.raises(ValueError):
            make_code(GridKind.SQUARE, 2, 2, [(2, 0)])
        with pytest.raises(ValueError):
            make_code(GridKind.SQUARE, 2, 2, [(0, -1)])

    def test_membership_uses_nonnegative_modulus(self):
        code = make_code(GridKind.SQUARE, 2, 2, [(0, 0)])
        assert (-2, -4) in code
        assert (-1, 0) not in code
        assert (-2, 1) not in code


def test_identifying_set_full_code():
    code = make_code(GridKind.SQUARE, 1, 1, [(0, 0)])
    assert identifying_set(code, (0, 0), 2) == ball_set(GridKind.SQUARE, (0, 0), 2)
    assert len(identifying_set(code, (0, 0), 2)) == 13


def test_identifying_set_can_be_empty():
    code = make_code(GridKind.SQUARE, 6, 6, [(0, 0)])
    assert identifying_set(code, (3, 3), 2) == frozenset()


def test_all_vertices_code_is_valid():
    assert is_identifying_code(make_code(GridKind.SQUARE, 1, 1, [(0, 0)]), 2).valid
    hex_all = make_code(GridKind.HEX, 2, 2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert is_identifying_code(hex_all, 2).valid


def test_sparse_code_reports_first_empty_vertex():
    code = make_code(GridKind.SQUARE, 6, 6, [(0, 0)])
    report = is_identifying_code(code, 2)
    assert not report.valid
    assert report.violation.kind == "empty"
    # First violation in lexicographic scan order.
    assert report.violation.vertices == ((0, 3),)


def test_corpus_patterns_are_valid(corpus):
    for name, (code, r) in corpus.items():
        assert is_identifying_code(code, r).valid, name


def test_validity_agrees_with_box_oracle_on_small_codes():
    cases = [
        (make_code(GridKind.SQUARE, 2, 2, [(0, 0)]), 2),
        (make_code(GridKind.SQUARE, 1, 1, [(0, 0)]), 2),
        (make_code(GridKind.SQUARE, 4, 4, [(0, 0), (2, 2)]), 2),
        (make_code(GridKind.SQUARE, 3, 3, [(0, 0)]), 2),
        (make_code(GridKind.HEX, 2, 2, [(0, 0), (1, 0)]), 2),
        (make_code(GridKind.HEX, 2, 2, [(0, 0)]), 2),
        (make_code(GridKind.HEX, 4, 4, [(0, 0), (1, 0), (2, 2), (3, 2)]), 2),
    ]
    for code, r in cases:
        assert is_identifying_code(code, r).valid == oracle_validity(code, r)


@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=4),
    st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=10),
)
@settings(max_examples=40, deadline=None)
def test_validity_agrees_with_box_oracle_random_square(px, py, cells):
    offsets = {(i % px, j % py) for i, j in cells}
    code = make_code(GridKind.SQUARE, px, py, offsets)
    assert is_identifying_code(code, 2).valid == oracle_validity(code, 2)


def test_translation_consistency(corpus):
    for name, (code, r) in corpus.items():
        shift = (1, 0) if code.kind is GridKind.SQUARE else (2, 0)
        moved = code.translate(shift)
        assert is_identifying_code(moved, r).valid == is_identifying_code(code, r).valid
        assert density(moved) == density(code)


def test_density_examples():
    assert density(make_code(GridKind.SQUARE, 1, 1, [(0, 0)])) == 1
    code = make_code(GridKind.SQUARE, 4, 4, [(0, 0), (1, 2), (3, 3)])
    assert density(code) == Fraction(3, 16)


def test_density_of_found_codes_exceeds_lower_bound(square_corpus):
    for name, (code, r) in square_corpus.items():
        assert r == 2
        assert density(code) >= Fraction(6, 37), name


def test_window_census_examples():
    assert window_census(make_code(GridKind.SQUARE, 1, 1, [(0, 0)]), 2) == (25, 25)
    assert window_census(make_code(GridKind.SQUARE, 2, 2, [(0, 0)]), 2) == (9, 25)


def test_window_census_converges_to_density(corpus):
    for name, (code, _r) in corpus.items():
        d = density(code)
        for m in (50, 100):
            K, total = window_census(code, m)
            assert abs(Fraction(K, total) - d) <= Fraction(1, m), (name, m)


def test_density_range(corpus):
    for _name, (code, _r) in corpus.items():
        assert 0 < density(code) <= 1


def test_generic_radius_support():
    # Lemma machinery is radius-2 specific, but codes and validity are not.
    allhex = make_code(GridKind.HEX, 2, 2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert is_identifying_code(allhex, 3).valid
    allsq = make_code(GridKind.SQUARE, 1, 1, [(0, 0)])
    assert is_identifying_code(allsq, 3).valid


class TestPatternFiles:
    def test_round_trip_is_bit_exact(self):
        for name in VALID_PATTERNS:
            text = (DATA / f"{name}.pattern").read_text()
            code, r = parse_pattern(text)
            assert format_pattern(code, r) == text

    @given(
        st.integers(min_value=1, max_value=6),
        st.integers(min_value=1, max_value=6),
        st.sets(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=1),
        st.integers(min_value=1, max_value=3),
    )
    @settings(max_examples=60, deadline=None)
    def test_round_trip_random_codes(self, px, py, cells, r):
        offsets = {(i % px, j % py) for i, j in cells}
        code = make_code(GridKind.SQUARE, px, py, offsets)
        parsed, pr = parse_pattern(format_pattern(code, r))
        assert parsed == code and pr == r

    def test_round_trip_from_code(self):
        code = make_code(GridKind.HEX, 4, 2, [(0, 0), (3, 1)])
        parsed, r = parse_pattern(format_pattern(code, 2))
        assert parsed == code and r == 2

    @pytest.mark.parametrize(
        "text,line,column",
        [
            ("grid diagonal\nr 2\nperiod 1 1\n#\n", 1, 1),
            ("grid square\nr 0\nperiod 1 1\n#\n", 2, 1),
            ("grid square\nr 2\nperiod 0 1\n\n", 3, 1),
            ("grid hex\nr 2\nperiod 3 2\n...\n...\n", 3, 1),
            ("grid square\nr 2\nperiod 3 1\n#.\n", 4, 3),
            ("grid square\nr 2\nperiod 3 1\n#.x\n", 4, 3),
            ("grid square\nr 2\nperiod 2 2\n..\n..\n", 4, 1),
            ("grid square\nr 2\nperiod 2 2\n#.\n", 5, 1),
            ("grid square\nr 2\nperiod 1 1\n#\nextra\n", 5, 1),
        ],
    )
    def test_parse_errors_carry_position(self, text, line, column):
        with pytest.raises(PatternError) as err:
            parse_pattern(text)
        assert err.value.line == line
        assert err.value.column == column

    def test_row_order_is_top_down(self):
        code, _r = parse_pattern("grid square\nr 2\nperiod 2 2\n#.\n.#\n")
        # First row is j = 1, second is j = 0.
        assert code.offsets == frozenset({(0, 1), (1, 0)})


def test_invalid_pattern_fixture_parses_but_fails_validation():
    code, r = load_pattern("square_bad")
    assert not is_identifying_code(code, r).valid
