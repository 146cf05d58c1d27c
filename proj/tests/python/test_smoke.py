"""Smoke tests of the python bindings: build groups, compute constants,
check the exact golden values and the oracle agreement."""

import sys
from fractions import Fraction

import zlconst as m


def test_dihedral_golden():
    G = m.dihedral(5)
    assert G.order == 10
    P = m.conjugacy_classes(G)
    assert P.sizes == [1, 2, 2, 5]
    T = m.character_table(G, P, seed=1)
    assert m.character_degrees(T) == [1, 1, 2, 2]
    report = m.amzl_general(T)
    assert abs(report["value_float"] - 73 / 25) < 1e-9
    assert abs(m.amzl_direct_norm(T, P) - report["value_float"]) < 1e-9
    assert m.closed_form_dihedral(5) == Fraction(73, 25)
    assert m.amzl_two_degree(10, 5, 2, P.sizes) == Fraction(73, 25)


def test_closed_forms():
    assert m.closed_form_extraspecial(2, 1) == Fraction(7, 4)
    assert m.closed_form_affine(3) == Fraction(7, 3)
    assert m.closed_form_a2xb(7) == m.closed_form_frobenius(3, 7) == Fraction(209, 49)


def test_abelian_is_one():
    G = m.cyclic(6)
    P = m.conjugacy_classes(G)
    T = m.character_table(G, P, seed=5)
    assert abs(m.amzl_general(T)["value_float"] - 1.0) < 1e-12
    assert abs(m.lemma_linear_block_norm(T) - 1.0) < 1e-12
    assert m.is_abelian(G)
    assert m.two_degree_profile(T) is None


def test_generators_and_structure():
    gens = m.parse_generators("(0 1 2 3 4)\n(1 4)(2 3)\n")
    G = m.build_from_generators(gens, 64, "D5")
    assert G.order == 10
    assert m.derived_subgroup_order(G) == 5
    assert m.center_order(G) == 1
    Q8 = m.quaternion8()
    assert m.conjugacy_classes(Q8).sizes == [1, 1, 2, 2, 2]


def test_errors_are_typed():
    try:
        m.frobenius_cyclic(5, 4, 4)
    except m.ZlcConstructionError as e:
        assert "NotFixedPointFree" in str(e)
    else:
        raise AssertionError("expected ZlcConstructionError")


def test_scan_and_figure():
    rows = m.frobenius_min_scan(10, 50)
    minima = [(h, k, v) for (h, k, v, is_min) in rows if is_min]
    assert minima == [(2, 3, Fraction(2, 3))]
    fig = m.figure1_minima(1)
    assert [v for (_, v, _) in fig] == [
        Fraction(4, 3),
        Fraction(48, 25),
        Fraction(4, 3),
        Fraction(3, 4),
        Fraction(3, 4),
    ]
    assert all(verified for (_, _, verified) in fig)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
