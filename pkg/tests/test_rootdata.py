from fractions import Fraction

import pytest

from extremal_lie.scalars import QQ, GF
from extremal_lie.rootdata import (
    CONVENTION_VERSION,
    InvalidRank,
    RootSystem,
    chevalley_constants,
)
from extremal_lie.liealg import LieAlgebra

ROOT_COUNTS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 12, ("A", 4): 20,
    ("B", 2): 8, ("B", 3): 18, ("B", 4): 32,
    ("C", 2): 8, ("C", 3): 18,
    ("D", 4): 24, ("D", 5): 40,
    ("E", 6): 72, ("E", 7): 126, ("E", 8): 240,
    ("F", 4): 48, ("G", 2): 12,
}


def test_root_counts():
    for (t, n), count in ROOT_COUNTS.items():
        rs = RootSystem(t, n)
        assert len(rs.roots) == count, (t, n)
        assert len(rs.positive_roots) == count // 2


def test_long_root_counts():
    assert sum(RootSystem("G", 2).is_long(r) for r in RootSystem("G", 2).roots) == 6
    assert sum(RootSystem("B", 3).is_long(r) for r in RootSystem("B", 3).roots) == 12
    assert sum(RootSystem("C", 3).is_long(r) for r in RootSystem("C", 3).roots) == 6
    assert sum(RootSystem("F", 4).is_long(r) for r in RootSystem("F", 4).roots) == 24
    # simply laced: all long
    assert all(RootSystem("A", 3).is_long(r) for r in RootSystem("A", 3).roots)


def test_invalid_ranks_rejected():
    for t, n in [("D", 3), ("E", 5), ("F", 3), ("G", 3), ("A", 0), ("B", 1)]:
        with pytest.raises(InvalidRank):
            RootSystem(t, n)


def test_highest_root_b3_by_height_enumeration():
    rs = RootSystem("B", 3)
    heights = {root: rs.height(root) for root in rs.positive_roots}
    top = max(heights.values())
    maxima = [root for root, h in heights.items() if h == top]
    assert maxima == [rs.highest_root]
    assert rs.eps_coords(rs.highest_root) == (Fraction(1), Fraction(1), Fraction(0))
    assert rs.is_long(rs.highest_root)


def test_eps_round_trip():
    for t, n in [("A", 2), ("B", 3), ("C", 3), ("D", 4), ("F", 4)]:
        rs = RootSystem(t, n)
        for root in rs.roots:
            assert rs.root_from_eps(rs.eps_coords(root)) == root


def test_closure_under_negation():
    rs = RootSystem("F", 4)
    for root in rs.roots:
        assert rs.is_root(tuple(-c for c in root))


def test_constants_zero_iff_not_root_sum():
    rs = RootSystem("A", 2)
    cc = chevalley_constants(rs)
    for a in rs.roots:
        for b in rs.roots:
            s = tuple(x + y for x, y in zip(a, b))
            if any(s):
                n = cc.N(a, b)
                assert (n != 0) == rs.is_root(s)
                if rs.is_root(s):
                    assert abs(n) == 1  # simply laced


def test_g2_has_constant_of_magnitude_three():
    rs = RootSystem("G", 2)
    cc = chevalley_constants(rs)
    mags = {abs(cc.N(a, b)) for a in rs.roots for b in rs.roots}
    assert mags == {0, 1, 2, 3}


def test_root_string_rule_exhaustive_small_ranks():
    for t, n in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)]:
        rs = RootSystem(t, n)
        cc = chevalley_constants(rs)
        for a in rs.roots:
            for b in rs.roots:
                s = tuple(x + y for x, y in zip(a, b))
                if rs.is_root(s):
                    assert abs(cc.N(a, b)) == rs.root_string_down(a, b) + 1


def test_root_string_rule_spot_check_e6():
    rs = RootSystem("E", 6)
    cc = chevalley_constants(rs)
    roots = rs.roots
    for a in roots[::17]:
        for b in roots[::23]:
            s = tuple(x + y for x, y in zip(a, b))
            if rs.is_root(s):
                assert abs(cc.N(a, b)) == rs.root_string_down(a, b) + 1


def test_antisymmetry_and_involution_conventions():
    rs = RootSystem("B", 3)
    cc = chevalley_constants(rs)
    for a in rs.roots:
        for b in rs.roots:
            if rs.is_root(tuple(x + y for x, y in zip(a, b))):
                assert cc.N(a, b) == -cc.N(b, a)
                na = tuple(-c for c in a)
                nb = tuple(-c for c in b)
                assert cc.N(na, nb) == -cc.N(a, b)


def test_integer_table_produces_valid_algebras():
    # Jacobi on all triples is the downstream validity check of the signs
    for t, n in [("A", 2), ("B", 3), ("C", 3), ("G", 2)]:
        rs = RootSystem(t, n)
        labels, table = chevalley_constants(rs).integer_table()
        for f in (QQ, GF(5)):
            ftab = {k: {kk: f.from_int(v) for kk, v in row.items()} for k, row in table.items()}
            L = LieAlgebra(f, labels, ftab)
            assert L.n == len(rs.roots) + rs.rank


def test_coroot_coords_are_integral_and_pair_correctly():
    rs = RootSystem("G", 2)
    for root in rs.roots:
        coords = rs.coroot_coords(root)
        assert all(isinstance(c, int) for c in coords)
        assert rs.pairing(root, root) == 2


def test_convention_version_embedded():
    rs = RootSystem("A", 2)
    cc = chevalley_constants(rs)
    assert cc.convention_version == CONVENTION_VERSION
