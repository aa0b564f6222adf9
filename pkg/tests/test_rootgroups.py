from fractions import Fraction

import pytest

from extremal_lie.scalars import QQ, GF, Scalar
from extremal_lie.liealg import PreconditionNotMet, sl2
from extremal_lie.rootgroups import (
    RootGroupElement,
    chain_nonexistence_probe,
    line_is_fully_extremal,
    parameter_samples,
    projective_line_check,
    strongcomm_check,
    verify_abstract_root_properties,
)

from helpers import chevalley


def test_root_group_depends_only_on_the_line():
    L = sl2(GF(5))
    e = L.basis_element(0)
    f5 = GF(5)
    # exp(c y, t) = exp(y, c t)
    for c in range(1, 5):
        for t in range(5):
            lhs = RootGroupElement(L, Scalar(f5, f5.from_int(c)) * e, f5.from_int(t)).matrix
            rhs = RootGroupElement(L, e, f5.from_int(c * t)).matrix
            assert lhs == rhs


def test_parameter_samples():
    assert len(parameter_samples(GF(5))) == 5
    q = parameter_samples(QQ)
    assert Fraction(1, 2) in [Fraction(v) for v in q]


def test_properties_opposite_pair_sl2_gf5_exhaustive():
    L = sl2(GF(5))
    rep = verify_abstract_root_properties(L, L.basis_element(0), L.basis_element(2))
    assert rep["case"] == "opposite"
    assert rep["pass"]


def test_properties_f0_pair_a2():
    for char in (5, 7):
        A = chevalley("A", 2, char)
        rep = verify_abstract_root_properties(A.lie, A.x((1, 0)), A.x((0, 1)))
        assert rep["case"] == "f0-noncommuting"
        assert rep["pass"]


def test_properties_commuting_pair_a3():
    A = chevalley("A", 3)
    x = A.x((1, 0, 0))
    y = A.x((0, 0, 1))
    assert A.lie.bracket(x, y).is_zero()
    rep = verify_abstract_root_properties(A.lie, x, y)
    assert rep["case"] == "commuting" and rep["pass"]


def test_properties_same_line_pair():
    A = chevalley("A", 2, 5)
    x = A.x((1, 1))
    rep = verify_abstract_root_properties(A.lie, x, 2 * x)
    assert rep["case"] == "same-line" and rep["pass"]


def test_properties_d4_pairs():
    D = chevalley("D", 4, 5)
    theta = D.rootsystem.highest_root
    rep = verify_abstract_root_properties(D.lie, D.x(theta), D.x(tuple(-c for c in theta)))
    assert rep["case"] == "opposite" and rep["pass"]


def test_strongcomm_qualifying_pair():
    # x and [x,y] with f(x,y) = 0, [x,y] != 0 satisfy the conditions
    for char in (0, 5):
        A = chevalley("A", 2, char)
        x, y = A.x((1, 0)), A.x((0, 1))
        z = A.lie.bracket(x, y)
        rep = strongcomm_check(A.lie, x, z)
        assert rep["condition_2prime"]
        assert rep["conditions_agree"]
        assert rep["product_identity"]
        assert rep["pass"]


def test_strongcomm_failing_pair_d4():
    D = chevalley("D", 4)
    a = D.rootsystem.root_from_eps({1: 1, 2: -1})
    b = D.rootsystem.root_from_eps({3: 1, 4: -1})
    rep = strongcomm_check(D.lie, D.x(a), D.x(b))
    assert not rep["condition_2prime"]
    assert rep["conditions_agree"]  # all three conditions fail together
    assert rep["pass"]
    probe = line_is_fully_extremal(D.lie, D.x(a), D.x(b))
    assert not probe["fully_extremal"]
    assert probe["witness"] is not None


def test_strongcomm_requires_commuting():
    A = chevalley("A", 2)
    with pytest.raises(PreconditionNotMet):
        strongcomm_check(A.lie, A.x((1, 0)), A.x((0, 1)))


def test_strongcomm_zero_parameter_edge():
    A = chevalley("A", 2, 5)
    x, y = A.x((1, 0)), A.x((0, 1))
    z = A.lie.bracket(x, y)
    rep = strongcomm_check(A.lie, x, z, sample_params=[0])
    assert rep["pass"]


def test_projective_line_exhaustive_gf5():
    A = chevalley("A", 2, 5)
    x = A.x((1, 0))
    z = A.lie.bracket(x, A.x((0, 1)))
    rep = projective_line_check(A.lie, x, z, x + z)
    assert rep["exhaustive"]
    assert rep["points_checked"] == 6
    assert rep["pass"]


def test_projective_line_preconditions():
    A = chevalley("A", 2, 5)
    with pytest.raises(PreconditionNotMet):
        projective_line_check(A.lie, A.x((1, 0)), A.x((0, 1)), A.x((1, 1)))


def test_chain_nonexistence_probe():
    for t, n, char in [("A", 2, 5), ("A", 3, 0), ("D", 4, 0)]:
        A = chevalley(t, n, char)
        pool = [A.x(root) for root in A.rootsystem.roots if A.rootsystem.is_long(root)]
        rep = chain_nonexistence_probe(A.lie, pool)
        assert rep["pass"], rep["witness"]
