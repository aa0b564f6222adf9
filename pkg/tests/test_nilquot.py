import pytest

from extremal_lie import nilquot
from extremal_lie.scalars import GF

from helpers import sandwich, witt, witt_multidegree


def test_free_mode_matches_witt():
    for r, maxd in [(2, 8), (3, 6), (4, 5)]:
        q = nilquot.free_nilpotent_quotient(r, maxd)
        assert q.dims_by_degree == [witt(r, d) for d in range(1, maxd + 1)]


def test_free_mode_multidegrees_match_necklace_counts():
    q = nilquot.free_nilpotent_quotient(3, 5)
    for md, dim in q.multidegree_dims.items():
        assert dim == witt_multidegree(md), md


def test_free_mode_extra_consistency_rows_change_nothing():
    a = nilquot.free_nilpotent_quotient(3, 6)
    b = nilquot.free_nilpotent_quotient(3, 6, extra_consistency=True)
    assert a.dims_by_degree == b.dims_by_degree
    assert a.multidegree_dims == b.multidegree_dims


def test_sandwich_dimensions_small():
    assert sandwich(1).total_dim == 1
    assert sandwich(2).total_dim == 3
    assert sandwich(3).total_dim == 8
    assert sandwich(3).dims_by_degree == [3, 3, 2]
    assert sandwich(4).total_dim == 28
    assert sandwich(4).dims_by_degree == [4, 6, 8, 6, 4]


def test_sandwich_terminates_with_zero_component():
    q = sandwich(4)
    assert q.terminated
    assert all(d > 0 for d in q.dims_by_degree)


def test_graded_report_schema():
    rep = sandwich(3).to_report()
    assert rep["r"] == 3
    assert rep["total"] == 8
    assert rep["dims_by_degree"] == [3, 3, 2]
    assert {"degree": [1, 1, 0], "dim": 1} in rep["multidegree_dims"]


def test_assoc_dims_via_embedding():
    a = nilquot.assoc_dims_via_embedding(1)
    assert a.total_dim == 2 and a.dims_by_length == [1, 1]
    a = nilquot.assoc_dims_via_embedding(2)
    assert a.total_dim == 5 and a.dims_by_length == [1, 2, 2]
    a = nilquot.assoc_dims_via_embedding(3)
    assert a.total_dim == 19
    assert a.dims_by_length == [1, 3, 6, 6, 3]
    assert a.palindromic_after_identity


def test_assoc_direct_construction_agrees():
    # independent route: elimination in the free associative algebra
    for r in (1, 2, 3):
        direct = nilquot.assoc_algebra_direct_dims(r)
        embedded = nilquot.assoc_dims_via_embedding(r)
        assert direct.dims_by_length == embedded.dims_by_length


def test_subalgebra_embedding():
    assert nilquot.check_subalgebra_embedding(2)["pass"]
    rep = nilquot.check_subalgebra_embedding(4)
    assert rep["pass"]
    assert rep["recovered_total"] == 8


def test_spanning_set_check_4gen():
    rep = nilquot.spanning_set_check_4gen()
    assert rep["rank"] == 28
    assert rep["is_basis"]
    assert all(rep["identities_zero"])
    assert rep["length6_all_reduce_to_zero"]
    assert rep["pass"]


def test_monomial_evaluation_in_l3():
    q = sandwich(3)
    # [x1,[x1,x2]] is a defining relation, so it vanishes
    assert q.eval_monomial((1, 1, 2)) == {}
    # the eight spanning monomials are a basis
    words = [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3), (2, 1, 3)]
    vecs = [q.eval_monomial(w) for w in words]
    seen = set()
    for v in vecs:
        assert v
        seen.update(v)
    assert len(seen) == 8


def test_as_lie_algebra_validates_and_is_nilpotent():
    from extremal_lie.liealg import lower_central_series
    L = sandwich(3).as_lie_algebra()  # construction validates Jacobi
    assert L.n == 8
    assert lower_central_series(L)[-1].dim == 0


def test_every_basis_element_is_a_sandwich_in_l4():
    from extremal_lie.liealg import is_extremal
    L = sandwich(4).as_lie_algebra()
    for i in range(L.n):
        fx = is_extremal(L, L.basis_element(i))
        assert fx is not None and fx.is_zero()


def test_gf_p_recomputation_matches_rationals_smallr():
    # experimental option: recompute over GF(p) and report discrepancies
    for r in (2, 3):
        q0 = sandwich(r)
        qp = nilquot.sandwich_algebra(r, field=GF(5))
        assert qp.dims_by_degree == q0.dims_by_degree
        assert qp.multidegree_dims == q0.multidegree_dims


def test_degree_cap_guard():
    with pytest.raises(nilquot.DegreeCapExceeded):
        nilquot.sandwich_algebra(3, max_degree=2)


def test_bracket_in_quotient_multidegree_additive():
    q = sandwich(4)
    a = q.eval_monomial((1, 2))
    b = q.eval_monomial((3, 4))
    out = q.bracket(a, b)
    assert out  # [[x1,x2],[x3,x4]] is nonzero in L_4
    eng = q._engine
    assert all(eng.basis[k].degree == 4 for k in out)


def test_components_expose_words_and_ranks():
    q = sandwich(3)
    comps = q.components
    assert [len(words) for words, _ in comps] == [3, 3, 2]
    assert comps[0][0] == [(1,), (2,), (3,)]
    assert all(rank >= 0 for _, rank in comps[1:])


def test_r3_count_from_spanning_monomial_list():
    # monomials of the 4-generator list containing the last letter exactly once
    singles = [w for w in nilquot.SPANNING_MONOMIALS_4GEN if w.count(4) == 1]
    assert len(singles) == 19
    assert len(singles) == nilquot.assoc_dims_via_embedding(3).total_dim


def test_subalgebra_embedding_r5_recovers_l4():
    rep = nilquot.check_subalgebra_embedding(5)
    assert rep["pass"]
    assert rep["recovered_total"] == 28
