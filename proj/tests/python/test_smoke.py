"""Smoke tests for the Python bindings."""

import pytest

import kchev


def test_root_system_basics():
    a2 = kchev.RootSystem.from_type("A2")
    assert a2.rank == 2
    assert a2.cartan() == [[2, -1], [-1, 2]]
    assert len(a2.positive_roots()) == 3
    assert a2.simple_root(1) == (2, -1)
    assert a2.pairing((1, 0), 2) == 0
    assert a2.reflect(1, (1, 0)) == (-1, 1)
    assert kchev.is_dominant((1, 0))
    assert not kchev.is_dominant((0, -1))


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        kchev.RootSystem.from_type("G3")
    with pytest.raises(ValueError):
        kchev.RootSystem.from_matrix([[2, -2], [-2, 2]])
    a2 = kchev.RootSystem.from_type("A2")
    with pytest.raises(ValueError):
        kchev.chevalley_expand(a2, [2, 2], (1, 0))


def test_weyl_group():
    g2 = kchev.RootSystem.from_type("G2")
    elems = kchev.all_elements(g2)
    assert len(elems) == 12
    w0 = kchev.longest_element(g2)
    assert w0.length == 6
    w = kchev.weyl_element(g2, [1, 2, 1, 2])
    assert w.length == 4
    assert kchev.bruhat_leq(kchev.weyl_element(g2, [1, 2]), w)
    assert kchev.demazure_product(g2, [2, 1, 2], mask=[1, 0, 1]) == \
        kchev.simple_reflection(g2, 2)


def test_a2_expansion_golden():
    a2 = kchev.RootSystem.from_type("A2")
    result = kchev.chevalley_expand(a2, [2, 1, 2], (1, 0))
    as_terms = {word: coeff.terms() for word, coeff in result.items()}
    assert as_terms == {
        (1, 2, 1): {(0, -1): 1},
        (1, 2): {(-1, 1): 1},
        (2,): {(1, 0): 1},
    }


def test_g2_ordinary_golden():
    g2 = kchev.RootSystem.from_type("G2")
    result = kchev.chevalley_ordinary(g2, [1, 2, 1, 2], (0, 1))
    assert list(result.values()) == [1, 3, 1, 3, 2, 2, 1]


def test_operators():
    g2 = kchev.RootSystem.from_type("G2")
    rho2 = kchev.GroupAlgebraElem.monomial((0, 1))
    t1 = kchev.demazure_t1(g2, 2, rho2)
    assert t1.terms() == {(3, -1): 1}  # e^{3 alpha_1 + alpha_2}
    t0 = kchev.demazure_t0(g2, 2, rho2)
    assert kchev.demazure(g2, 2, rho2) == t0 + t1
    assert kchev.ev(t0 + t1) == 2


def test_verification_reports():
    g2 = kchev.RootSystem.from_type("G2")
    report = kchev.verify_localization(g2, [1, 2, 1, 2], (0, 1))
    assert report.passed and report.checked == 16
    assert kchev.verify_cell_product(g2, [1, 2, 1, 2]).passed
    assert kchev.check_positivity(g2, (0, 1)).passed
    w0 = kchev.longest_element(g2)
    assert kchev.verify_word_independence(w0, (1, 0)).passed


def test_cell_table():
    a2 = kchev.RootSystem.from_type("A2")
    cells = kchev.line_bundle_expansion(a2, [2, 1, 2], (1, 0))
    assert set(cells) == {(0, 1, 1), (1, 0, 1), (1, 1, 1)}
    assert cells[(1, 1, 1)].terms() == {(0, -1): 1}
