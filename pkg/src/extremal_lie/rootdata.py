"""Root systems of types A-G (Bourbaki labeling) and Chevalley structure
constants under a fixed extraspecial-pair sign convention.

Roots are integer coefficient tuples over the simple roots.  Signs: positive
roots are ordered by (height, coefficients); for each non-simple positive
root the extraspecial pair gets N = +(p+1); every other constant is forced
from those by antisymmetry, N(-a,-b) = -N(a,b), and the cyclic relation
N(a,b)/(c,c) = N(b,c)/(a,a) for a+b+c = 0.  The convention string is embedded
in every serialization so results are never mixed across conventions.
"""

from __future__ import annotations

from fractions import Fraction

CONVENTION_VERSION = "extraspecial-heightlex-p1"
SCHEMA_VERSION = 1

_VALID = {"A": lambda n: n >= 1, "B": lambda n: n >= 2, "C": lambda n: n >= 2,
          "D": lambda n: n >= 4, "E": lambda n: n in (6, 7, 8), "F": lambda n: n == 4,
          "G": lambda n: n == 2}


class InvalidRank(ValueError):
    pass


def cartan_matrix(type_, rank):
    """Bourbaki Cartan matrix; entry [i][j] = <alpha_j, alpha_i-check>."""
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i, j, vij=-1, vji=-1):
        a[i][j] = vij
        a[j][i] = vji

    if type_ == "A":
        for i in range(n - 1):
            join(i, i + 1)
    elif type_ == "B":
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 2, n - 1, -1, -2)
    elif type_ == "C":
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 2, n - 1, -2, -1)
    elif type_ == "D":
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 3, n - 1)
    elif type_ == "E":
        # chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            join(i, j)
        join(1, 3)
    elif type_ == "F":
        join(0, 1)
        join(1, 2, -1, -2)
        join(2, 3)
    elif type_ == "G":
        join(0, 1, -3, -1)
    else:
        raise InvalidRank("unknown type %r" % type_)
    return a


def _symmetrizer(type_, rank):
    """d_i = (alpha_i, alpha_i)/2 with long roots normalized to norm 2."""
    one = Fraction(1)
    if type_ in ("A", "D", "E"):
        return [one] * rank
    if type_ == "B":
        return [one] * (rank - 1) + [Fraction(1, 2)]
    if type_ == "C":
        return [one] * (rank - 1) + [Fraction(2)]
    if type_ == "F":
        return [one, one, Fraction(1, 2), Fraction(1, 2)]
    if type_ == "G":
        return [Fraction(1, 3), one]
    raise InvalidRank(type_)


class RootSystem:
    def __init__(self, type_, rank):
        type_ = type_.upper()
        if type_ not in _VALID or not _VALID[type_](rank):
            raise InvalidRank("invalid pair (%s, %d)" % (type_, rank))
        self.type = type_
        self.rank = rank
        self.cartan = cartan_matrix(type_, rank)
        self.d = _symmetrizer(type_, rank)
        self._build_roots()
        self._classify()

    def _build_roots(self):
        n = self.rank
        pos = set()
        by_height = {1: [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]}
        pos.update(by_height[1])
        h = 1
        while by_height.get(h):
            nxt = []
            for b in by_height[h]:
                for i in range(n):
                    p = 0
                    cur = list(b)
                    while True:
                        cur[i] -= 1
                        t = tuple(cur)
                        if min(t) < 0 or t not in pos:
                            break
                        p += 1
                    pairing = sum(b[j] * self.cartan[i][j] for j in range(n))
                    if p - pairing > 0:
                        up = list(b)
                        up[i] += 1
                        t = tuple(up)
                        if t not in pos:
                            pos.add(t)
                            nxt.append(t)
            h += 1
            if nxt:
                by_height[h] = nxt
        self.positive_roots = sorted(pos, key=lambda t: (sum(t), t))
        self.roots = self.positive_roots + [_neg(t) for t in self.positive_roots]
        self._root_set = set(self.roots)
        self.simple_roots = self.positive_roots[: self.rank]
        self.highest_root = max(self.positive_roots, key=lambda t: (sum(t), t))

    def _classify(self):
        norms = {t: self.norm2(t) for t in self.positive_roots}
        self._max_norm = max(norms.values())
        self._long = {t for t, v in norms.items() if v == self._max_norm}
        self._long |= {_neg(t) for t in self._long}

    # -- queries ---------------------------------------------------------------

    def is_root(self, t):
        return tuple(t) in self._root_set

    def is_long(self, t):
        return tuple(t) in self._long

    def height(self, t):
        return sum(t)

    def inner(self, s, t):
        v = Fraction(0)
        for i in range(self.rank):
            if s[i]:
                for j in range(self.rank):
                    if t[j]:
                        v += s[i] * t[j] * self.d[i] * self.cartan[i][j]
        return v

    def norm2(self, t):
        return self.inner(t, t)

    def pairing(self, beta, alpha):
        """<beta, alpha-check> = 2 (beta, alpha)/(alpha, alpha); an integer."""
        v = 2 * self.inner(beta, alpha) / self.norm2(alpha)
        assert v.denominator == 1
        return int(v)

    def coroot_coords(self, alpha):
        """alpha-check over the simple coroots; integer coefficients."""
        dalpha = self.norm2(alpha) / 2
        out = []
        for i in range(self.rank):
            c = Fraction(alpha[i]) * self.d[i] / dalpha
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)

    def root_string_down(self, alpha, beta):
        """Largest p with beta - p*alpha a root."""
        p = 0
        cur = _sub(beta, alpha)
        while cur in self._root_set:
            p += 1
            cur = _sub(cur, alpha)
        return p

    # -- epsilon coordinates (classical types and F4) ----------------------------

    def eps_dim(self):
        return {"A": self.rank + 1, "B": self.rank, "C": self.rank, "D": self.rank, "F": 4}.get(self.type)

    def simple_eps(self, i):
        """Epsilon coordinates of alpha_{i+1} (0-indexed i), Bourbaki."""
        n = self.rank
        m = self.eps_dim()
        if m is None:
            raise InvalidRank("no epsilon coordinates for type %s" % self.type)
        v = [Fraction(0)] * m
        if self.type == "A":
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
        elif self.type in ("B", "C", "D") and i < n - 1:
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
        elif self.type == "B":
            v[n - 1] = Fraction(1)
        elif self.type == "C":
            v[n - 1] = Fraction(2)
        elif self.type == "D":
            v[n - 2], v[n - 1] = Fraction(1), Fraction(1)
        elif self.type == "F":
            v = [
                [0, 1, -1, 0],
                [0, 0, 1, -1],
                [0, 0, 0, 1],
                [Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)],
            ][i]
            v = [Fraction(x) for x in v]
        return v

    def eps_coords(self, root):
        m = self.eps_dim()
        v = [Fraction(0)] * m
        for i, c in enumerate(root):
            if c:
                sv = self.simple_eps(i)
                for j in range(m):
                    v[j] += c * sv[j]
        return tuple(v)

    def root_from_eps(self, eps):
        """Root tuple with the given epsilon coordinates (dict index->coeff,
        1-indexed, or full vector)."""
        m = self.eps_dim()
        if isinstance(eps, dict):
            v = [Fraction(0)] * m
            for k, c in eps.items():
                v[k - 1] = Fraction(c)
            eps = tuple(v)
        else:
            eps = tuple(Fraction(c) for c in eps)
        for t in self.roots:
            if self.eps_coords(t) == eps:
                return t
        raise ValueError("no root with epsilon coordinates %r" % (eps,))

    def root_from_coeffs(self, coeffs):
        t = tuple(coeffs)
        if t not in self._root_set:
            raise ValueError("%r is not a root" % (t,))
        return t

    def __repr__(self):
        return "RootSystem(%s%d, %d roots)" % (self.type, self.rank, len(self.roots))


def _neg(t):
    return tuple(-c for c in t)


def _sub(s, t):
    return tuple(a - b for a, b in zip(s, t))


def _add(s, t):
    return tuple(a + b for a, b in zip(s, t))


class ChevalleyConstants:
    """N(alpha, beta) for all root pairs with alpha + beta a root."""

    def __init__(self, rootsystem):
        self.rs = rootsystem
        self.convention_version = CONVENTION_VERSION
        self._pos = {}  # (a, b) ordered positive pairs, a before b in root order
        self._order = {t: k for k, t in enumerate(self.rs.positive_roots)}
        self._build()

    def _build(self):
        rs = self.rs
        for gamma in rs.positive_roots:
            if sum(gamma) < 2:
                continue
            pairs = []
            for a in rs.positive_roots:
                if self._order[a] >= self._order[gamma]:
                    break
                b = _sub(gamma, a)
                if min(b) >= 0 and b in rs._root_set and self._order[a] < self._order[b]:
                    pairs.append((a, b))
            pairs.sort(key=lambda p: self._order[p[0]])
            xi, eta = pairs[0]
            self._pos[(xi, eta)] = rs.root_string_down(xi, eta) + 1
            for a, b in pairs[1:]:
                t1 = 0
                d1 = _sub(eta, a)
                if d1 in rs._root_set:
                    t1 = self.N(eta, _neg(a)) * self.N(xi, d1)
                t2 = 0
                d2 = _sub(xi, a)
                if d2 in rs._root_set:
                    t2 = self.N(_neg(a), xi) * self.N(eta, d2)
                n_negag = Fraction(-(t1 + t2), self._pos[(xi, eta)])
                val = n_negag * rs.norm2(gamma) / rs.norm2(b)
                assert val.denominator == 1, "non-integer structure constant"
                val = int(val)
                expected = rs.root_string_down(a, b) + 1
                assert abs(val) == expected, "extraspecial solve gave |N|=%d, want %d" % (
                    abs(val),
                    expected,
                )
                self._pos[(a, b)] = val

    def N(self, alpha, beta):
        """Structure constant for [x_alpha, x_beta] = N x_{alpha+beta}."""
        rs = self.rs
        alpha, beta = tuple(alpha), tuple(beta)
        s = _add(alpha, beta)
        if s not in rs._root_set:
            return 0
        pa, pb = min(alpha) >= 0, min(beta) >= 0
        if pa and pb:
            if self._order[alpha] < self._order[beta]:
                return self._pos[(alpha, beta)]
            return -self._pos[(beta, alpha)]
        if not pa and not pb:
            return -self.N(_neg(alpha), _neg(beta))
        if not pa:
            return -self.N(beta, alpha)
        # alpha > 0 > beta
        if min(s) >= 0:
            # N(alpha,beta)/(s,s) = N(beta,-s)/(alpha,alpha); N(beta,-s) = -N(-beta,s)
            v = -Fraction(self.N(_neg(beta), s)) * rs.norm2(s) / rs.norm2(alpha)
        else:
            # N(alpha,beta)/(s,s) = N(-s,alpha)/(beta,beta)
            v = Fraction(self.N(_neg(s), alpha)) * rs.norm2(s) / rs.norm2(beta)
        assert v.denominator == 1
        return int(v)

    def integer_table(self):
        """Structure constants of the Chevalley algebra over the integers.

        Basis order: positive roots, negative roots (mirrored order), then
        h_1..h_rank.  Returns (labels, {(i, j): {k: int}}) with i < j.
        """
        rs = self.rs
        pos = rs.positive_roots
        nroots = len(rs.roots)
        index = {t: k for k, t in enumerate(rs.roots)}
        labels = ["x[%s]" % ",".join(map(str, t)) for t in rs.roots] + [
            "h%d" % (i + 1) for i in range(rs.rank)
        ]
        table = {}

        def put(i, j, row):
            if i == j or not row:
                return
            if i < j:
                table[(i, j)] = row
            else:
                table[(j, i)] = {k: -c for k, c in row.items()}

        for a in rs.roots:
            ia = index[a]
            for b in rs.roots:
                ib = index[b]
                if ia >= ib:
                    continue
                s = _add(a, b)
                if s == tuple(0 for _ in range(rs.rank)):
                    row = {}
                    for i, c in enumerate(rs.coroot_coords(a)):
                        if c:
                            row[nroots + i] = c
                    put(ia, ib, row)
                elif s in rs._root_set:
                    put(ia, ib, {index[s]: self.N(a, b)})
        for i in range(rs.rank):
            hi = nroots + i
            for b in rs.roots:
                c = sum(b[j] * rs.cartan[i][j] for j in range(rs.rank))
                if c:
                    put(hi, index[b], {index[b]: c})
        return labels, table


def root_system(type_, rank):
    return RootSystem(type_, rank)


def chevalley_constants(rs):
    return ChevalleyConstants(rs)
