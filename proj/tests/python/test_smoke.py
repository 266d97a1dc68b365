from fractions import Fraction

import pytest

import projectivoid as pv


def test_series_round_trip():
    f = pv.Series("1 + 2*v^(1/2^1)", 2)
    assert str(f) == "1 + 2*v^(1/2^1)"
    assert pv.Series(str(f), 2) == f
    assert f.terms[1][1] == Fraction(2)
    assert f.terms[1][0].to_fraction() == Fraction(1, 2)


def test_unit_and_invert():
    f = pv.Series("1 - 2*v", 2)
    assert pv.is_unit(f)
    inv = pv.invert(f, 4)
    assert str(inv) == "1 + 2*v + 4*v^2 + 8*v^3 (mod val >= 4)"
    assert inv.precision == 4
    assert not pv.is_unit(pv.Series("1 + v", 2))
    assert pv.gauss_valuation(pv.Series("4*v + 2*v^2", 2)) == 1
    assert pv.gauss_valuation(pv.Series("0", 2)) is None


def test_errors_carry_a_code():
    with pytest.raises(pv.ProjectivoidError) as info:
        pv.invert(pv.Series("1 + v", 2), 3)
    assert info.value.code == "NotAUnit"
    with pytest.raises(pv.ProjectivoidError) as info:
        pv.Series("v^(3/3^1)", 2)
    assert info.value.code == "WrongPrimeDenominator"


def test_matrices():
    a = pv.Matrix('{"p": 2, "m": 2, "entries": [["v^(1/2^1)", "0"], ["0", "v^(1/2^1)"]]}')
    assert str(pv.bundle_degree(a)) == "1"
    assert pv.is_transition(a)
    u = pv.random_automorphism(2, 2, "nonneg", seed=3)
    v = pv.random_automorphism(2, 2, "nonpos", seed=4)
    assert pv.validate_automorphism(u, "nonneg")
    assert pv.bundle_degree(pv.act(v, a, u)) == pv.bundle_degree(a)
    assert str(pv.det(pv.Matrix('{"p": 2, "m": 2, "entries": [["1", "v"], ["v", "1"]]}'))) == "1 - v^2"
    assert len(pv.degree_one_family(2, 4)) == 17


def test_enumeration():
    assert [str(e) for e in pv.enumerate_antidiagonal(2, 6)] == ["0", "1", "1/2^1", "2", "1/2^2", "3"]
    assert pv.enumerate_calkin_wilf(5) == [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(1, 3), Fraction(3, 2)]


def test_split():
    result = pv.split('{"p": 2, "m": 2, "entries": [["s", "1"], ["0", "s"]]}')
    assert result["type"] == [1, 1]
    assert pv.verify_split(
        '{"p": 2, "m": 2, "entries": [["s", "1"], ["0", "s"]]}',
        '{"p": 2, "m": 2, "entries": [["1", "0"], ["s^(-1)", "1"]]}',
        '{"p": 2, "m": 2, "entries": [["1", "s + s^2"], ["0", "1"]]}',
    )
