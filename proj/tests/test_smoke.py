"""Python-facing smoke tests: the bindings expose the same behavior as the
library, and errors map onto idiomatic Python exceptions."""

import pytest

import padicsolve as ps


def test_solve_golden():
    rep = ps.solve("x^10 - 10*x + 738", 3)
    assert rep["root_count"] == 4
    assert rep["certified"] is True
    vals = sorted(r["valuation"] for r in rep["roots"])
    assert vals == [0, 0, 0, 2]
    # every root satisfies the polynomial to its advertised precision
    for r in rep["roots"]:
        z = int(r["numerator"])
        den = int(r["denominator"])
        assert den == 1
        k = r["unit_k"] + 2 * r["ell"]
        value = z**10 - 10 * z + 738
        assert value % 3 ** (r["ell"] + r["unit_k"]) == 0 or value == 0
        assert k > 0


def test_count_matches_oracle():
    for poly, p in [
        ("1 - x^340", 17),
        ("1 - x^397", 17),
        ("1 + x + x^2", 7),
        ("3 - x^2", 3),
        ("1 - 4*x + 3*x^2", 3),
    ]:
        assert ps.count(poly, p) == ps.oracle_count(poly, p)


def test_count_binomial_closed_form():
    assert ps.count_binomial("1 - x^340", 17) == 4
    assert ps.count_binomial("1 - x^1000000000000", 7) == 2


def test_polygon_and_tree():
    edges = ps.polygon("x^10 - 10*x + 738", 3)
    assert [e["slope"] for e in edges] == ["-2", "0"]
    tree = ps.tree("x^10 - 10*x + 738", 3, 9)
    assert len(tree["nodes"]) == 3
    assert tree["nodes"][2]["prefix"] == [1, 0]


def test_lift_and_bound():
    z = ps.lift("x^10 - 10*x + 738", 3, 0, 9)
    assert (z**10 - 10 * z + 738) % 3**9 == 0
    b = ps.bound("x^10 - 10*x + 738", 3)
    assert b["trinomial_separation"]["ord_bound"] > 0
    assert ps.yu_valuation_bound(2, 3, [3.0, 4.0], 2.0) > 0


def test_tetra_separation():
    sep = ps.tetra_separation(3, 3, 6)
    assert sep["expected_gap"] == 9
    assert sep["measured_gap"] == 9


def test_exceptions():
    with pytest.raises(ValueError):
        ps.solve("x^", 3)
    with pytest.raises(ValueError):
        ps.solve("x - 1", 9)
    with pytest.raises(NotImplementedError):
        ps.solve("1 + x + x^2 + x^3", 3)
    with pytest.raises(RuntimeError):
        ps.oracle_count("x^10 - 10*x + 738", 3, 10)
