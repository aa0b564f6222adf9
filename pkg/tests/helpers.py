"""Shared oracles and a process-wide algebra cache for the tests.

The Witt formulas and the tensor-algebra expansion are independent of the
code paths they check: expected dimensions and bracket values in the test
files are frozen from these, not from the implementation.
"""

import random
from fractions import Fraction
from math import factorial, gcd

from extremal_lie.scalars import QQ, GF
from extremal_lie.chevalley import ChevalleyAlgebra
from extremal_lie import nilquot


def mobius(n):
    if n == 1:
        return 1
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def witt(r, d):
    """Dimension of the degree-d component of the free Lie algebra on r letters."""
    total = sum(mobius(e) * r ** (d // e) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d


def witt_multidegree(md):
    """Dimension of the multidegree component (necklace formula)."""
    md = [m for m in md if m]
    n = sum(md)
    g = 0
    for m in md:
        g = gcd(g, m)
    total = 0
    for e in range(1, g + 1):
        if g % e == 0:
            prod = factorial(n // e)
            for m in md:
                prod //= factorial(m // e)
            total += mobius(e) * prod
    assert total % n == 0
    return total // n


def field_of(char):
    return QQ if char == 0 else GF(char)


_chevalley_cache = {}


def chevalley(type_, rank, char=0):
    key = (type_, rank, char)
    if key not in _chevalley_cache:
        _chevalley_cache[key] = ChevalleyAlgebra(type_, rank, field_of(char))
    return _chevalley_cache[key]


_sandwich_cache = {}


def sandwich(r):
    if r not in _sandwich_cache:
        _sandwich_cache[r] = nilquot.sandwich_algebra(r)
    return _sandwich_cache[r]


def rng(name):
    return random.Random("extremal-lie:" + name)


def random_fraction(r, span=4):
    return Fraction(r.randint(-span, span), r.randint(1, span))


def tensor_bracket(ta, tb):
    """Commutator in the tensor algebra on word dicts (oracle for freelie)."""
    out = {}
    for wa, ca in ta.items():
        for wb, cb in tb.items():
            out[wa + wb] = out.get(wa + wb, Fraction(0)) + ca * cb
            out[wb + wa] = out.get(wb + wa, Fraction(0)) - ca * cb
    return {w: c for w, c in out.items() if c}
