from fractions import Fraction

import pytest

from extremal_lie.scalars import QQ, GF, Scalar
from extremal_lie.chevalley import (
    NotExtremal,
    dimension_lower_bound,
    exp_automorphism,
    extremal_spanning_set,
    long_root_extremality_check,
    mingen_certify,
    mingen_generators,
    minimal_generator_count,
    natural_representation,
    root_exponential,
    short_root_decomposition_check,
    simple_plus_lowest_generation_check,
    verify_generation,
)
from extremal_lie.liealg import extremal_form, is_extremal

from helpers import chevalley, rng


def test_dimensions():
    assert chevalley("A", 1).dim == 3
    assert chevalley("G", 2, 3).dim == 14
    assert chevalley("B", 3).dim == 21
    assert chevalley("F", 4).dim == 52


def test_characteristic_two_rejected():
    from extremal_lie.scalars import CharacteristicTwoUnsupported
    with pytest.raises(CharacteristicTwoUnsupported):
        chevalley("A", 1, 2)


def test_exp_identity_and_one_parameter_group():
    A = chevalley("A", 2)
    x = A.x((1, 0))
    assert exp_automorphism(A, x, 0).is_identity()
    r = rng("exp")
    for _ in range(5):
        s, t = Fraction(r.randint(-3, 3)), Fraction(r.randint(-3, 3))
        lhs = exp_automorphism(A, x, s).compose(exp_automorphism(A, x, t))
        assert lhs == exp_automorphism(A, x, s + t)


def test_exp_action_on_extremal_element():
    # exp(x,1) y = y + [x,y] + (1/2) f_x(y) x for extremal y
    A = chevalley("A", 2)
    L = A.lie
    x, y = A.x((1, 0)), A.x((-1, 0))
    fx = is_extremal(L, x)
    phi = exp_automorphism(L, x, 1)
    half = Scalar(QQ, Fraction(1, 2))
    assert phi.apply(y) == y + L.bracket(x, y) + (half * fx(y)) * x


def test_exp_requires_extremal():
    B = chevalley("B", 3)
    short = B.x(B.rootsystem.root_from_eps({1: 1}))
    with pytest.raises(NotExtremal):
        exp_automorphism(B, short, 1)


def test_exp_preserves_bracket_and_form():
    A = chevalley("A", 2)
    span = extremal_spanning_set(A)
    form = extremal_form(A.lie, span)
    phi = exp_automorphism(A, A.x((1, 1)), 2)
    assert phi.preserves_bracket()
    assert phi.preserves_form(form)


def test_root_exponential_is_automorphism_any_char():
    for char in (0, 3, 5):
        G = chevalley("G", 2, char)
        for root in [(1, 0), (0, 1), (2, 1)]:
            phi = root_exponential(G, root, 1)  # construction verifies brackets
            assert not phi.is_identity()


def test_long_root_extremality_sweep():
    assert long_root_extremality_check(chevalley("A", 3))["pass"]
    assert long_root_extremality_check(chevalley("B", 3))["pass"]
    assert long_root_extremality_check(chevalley("C", 3))["pass"]
    assert long_root_extremality_check(chevalley("G", 2, 5))["pass"]


def test_short_root_decomposition_b2_g2():
    assert short_root_decomposition_check("B2", QQ)["pass"]
    assert short_root_decomposition_check("G2", QQ)["pass"]
    assert short_root_decomposition_check("B2", GF(5))["pass"]
    assert short_root_decomposition_check("G2", GF(5))["pass"]


def test_simple_plus_lowest_generates():
    assert simple_plus_lowest_generation_check(chevalley("A", 2))["pass"]
    assert simple_plus_lowest_generation_check(chevalley("D", 4))["pass"]
    assert simple_plus_lowest_generation_check(chevalley("F", 4))["pass"]


def test_mingen_generator_counts():
    assert len(mingen_generators(chevalley("D", 4))) == 4
    assert len(mingen_generators(chevalley("C", 3))) == 6
    assert len(mingen_generators(chevalley("G", 2))) == 4


def test_verify_generation_positive_and_negative():
    A = chevalley("A", 3)
    gens = mingen_generators(A)
    assert verify_generation(A, gens)["pass"]
    D = chevalley("D", 4)
    rs = D.rootsystem
    three_longs = [D.x(rs.simple_roots[i]) for i in range(3)]
    rep = verify_generation(D, three_longs)
    assert not rep["pass"] and rep["dim"] < D.dim


def test_natural_representations():
    rep = natural_representation("A", 2, QQ)
    assert rep["module_dim"] == 3 and rep["extremal_matrix_rank"] == 1
    assert rep["lower_bound"] == 3 and rep["pass"]
    rep = natural_representation("C", 2, QQ)
    assert rep["module_dim"] == 4 and rep["extremal_matrix_rank"] == 1
    assert rep["lower_bound"] == 4 and rep["pass"]
    rep = natural_representation("B", 3, QQ)
    assert rep["module_dim"] == 7 and rep["extremal_matrix_rank"] == 2
    assert rep["lower_bound"] == 4 and rep["pass"]
    rep = natural_representation("D", 4, QQ)
    assert rep["module_dim"] == 8 and rep["extremal_matrix_rank"] == 2
    assert rep["lower_bound"] == 4 and rep["pass"]


def test_dimension_lower_bound():
    assert dimension_lower_bound(14) == 4   # G2
    assert dimension_lower_bound(52) == 5   # F4
    assert dimension_lower_bound(3) == 2    # sl2
    assert dimension_lower_bound(10) == 4   # B2


def test_mingen_certify_small():
    for t, n, expect in [("A", 2, 3), ("B", 2, 4), ("C", 2, 4), ("G", 2, 4)]:
        rep = mingen_certify(t, n, QQ)
        assert rep["pass"] and rep["t_claimed"] == expect
        assert rep["lower_bound"] == expect == rep["generators"]


def test_mingen_certify_gf5():
    rep = mingen_certify("B", 3, GF(5))
    assert rep["pass"] and rep["t_claimed"] == 4


def test_extremal_spanning_set_gf3_g2():
    G = chevalley("G", 2, 3)
    span = extremal_spanning_set(G)
    from extremal_lie.linalg import echelon_from_rows
    assert echelon_from_rows(G.field, G.lie.n, [v.to_dense() for v in span]).dim == 14


def test_minimal_generator_count_table():
    assert minimal_generator_count("A", 7) == 8
    assert minimal_generator_count("B", 5) == 6
    assert minimal_generator_count("C", 4) == 8
    assert minimal_generator_count("D", 6) == 6
    assert minimal_generator_count("E", 8) == 5
    assert minimal_generator_count("F", 4) == 5
    assert minimal_generator_count("G", 2) == 4
