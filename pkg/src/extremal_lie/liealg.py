"""Finite-dimensional Lie algebras by exact structure constants.

A LieAlgebra is immutable after construction; construction validates
antisymmetry and the Jacobi identity on all basis triples, exactly.  All
operations are pure functions of their inputs, so concurrent use is safe.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import QQ, Scalar
from .linalg import (
    Echelon,
    charpoly,
    echelon_from_rows,
    kernel,
    mat_mul,
    mat_vec,
    solve_in_span,
)


class AntisymmetryViolation(ValueError):
    pass


class JacobiViolation(ValueError):
    pass


class ZeroElement(ValueError):
    pass


class NotExtremal(ValueError):
    pass


class NotSpanning(ValueError):
    pass


class WellDefinednessFailure(ValueError):
    pass


class NotASandwich(ValueError):
    pass


class PreconditionNotMet(ValueError):
    pass


class NotADirectSum(ValueError):
    pass


class LieAlgebra:
    """Lie algebra over an exact field, given by labeled basis and constants.

    ``table`` maps pairs (i, j) with i < j to sparse rows {k: coefficient};
    antisymmetry fills in the rest.  Use ``from_dense`` for a full cube of
    coefficients (which is checked for antisymmetry first).
    """

    def __init__(self, field, labels, table, _skip_validation=False):
        self.field = field
        self.labels = list(labels)
        self.n = len(self.labels)
        tab = {}
        for (i, j), row in table.items():
            if not 0 <= i < j < self.n:
                raise ValueError("table keys must satisfy 0 <= i < j < n")
            row = {k: c for k, c in row.items() if not field.is_zero(c)}
            if row:
                tab[(i, j)] = row
        self._table = tab
        if not _skip_validation:
            self._validate_jacobi()

    # -- construction helpers --------------------------------------------------

    @classmethod
    def from_dense(cls, field, labels, cube):
        """cube[i][j] is the coefficient vector of [b_i, b_j]; antisymmetry checked."""
        n = len(labels)
        for i in range(n):
            if any(not field.is_zero(c) for c in cube[i][i]):
                raise AntisymmetryViolation("[b_%d, b_%d] != 0" % (i, i))
            for j in range(i + 1, n):
                for k in range(n):
                    if not field.is_zero(field.add(cube[i][j][k], cube[j][i][k])):
                        raise AntisymmetryViolation("c[%d][%d] != -c[%d][%d]" % (i, j, j, i))
        table = {}
        for i in range(n):
            for j in range(i + 1, n):
                row = {k: cube[i][j][k] for k in range(n) if not field.is_zero(cube[i][j][k])}
                if row:
                    table[(i, j)] = row
        return cls(field, labels, table)

    def bracket_basis(self, i, j):
        """[b_i, b_j] as a sparse row (shared; do not mutate)."""
        if i == j:
            return {}
        if i < j:
            return self._table.get((i, j), {})
        row = self._table.get((j, i))
        if not row:
            return {}
        return {k: self.field.neg(c) for k, c in row.items()}

    def _validate_jacobi(self):
        f = self.field
        p = f.characteristic
        use_int = p != 0
        if p == 0:
            use_int = all(
                Fraction(c).denominator == 1 for row in self._table.values() for c in row.values()
            )
        if use_int:
            pairs = {}
            for (i, j), row in self._table.items():
                r = {k: int(c) if p else c.numerator for k, c in row.items()}
                pairs[(i, j)] = r
                pairs[(j, i)] = {k: -c for k, c in r.items()}
        else:
            pairs = {}
            for (i, j), row in self._table.items():
                pairs[(i, j)] = row
                pairs[(j, i)] = {k: f.neg(c) for k, c in row.items()}
        empty = {}
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                cij = pairs.get((i, j), empty)
                for k in range(j + 1, n):
                    cjk = pairs.get((j, k), empty)
                    cik = pairs.get((i, k), empty)
                    if not (cij or cjk or cik):
                        continue
                    acc = {}
                    if use_int:
                        for m, v in cij.items():
                            for t, w in pairs.get((m, k), empty).items():
                                acc[t] = acc.get(t, 0) + v * w
                        for m, v in cjk.items():
                            for t, w in pairs.get((m, i), empty).items():
                                acc[t] = acc.get(t, 0) + v * w
                        for m, v in cik.items():
                            for t, w in pairs.get((m, j), empty).items():
                                acc[t] = acc.get(t, 0) - v * w
                        bad = any(v % p if p else v for v in acc.values())
                    else:
                        for m, v in cij.items():
                            for t, w in pairs.get((m, k), empty).items():
                                acc[t] = f.add(acc.get(t, f.zero), f.mul(v, w))
                        for m, v in cjk.items():
                            for t, w in pairs.get((m, i), empty).items():
                                acc[t] = f.add(acc.get(t, f.zero), f.mul(v, w))
                        for m, v in cik.items():
                            for t, w in pairs.get((m, j), empty).items():
                                acc[t] = f.sub(acc.get(t, f.zero), f.mul(v, w))
                        bad = any(not f.is_zero(v) for v in acc.values())
                    if bad:
                        raise JacobiViolation("Jacobi fails on basis triple (%d, %d, %d)" % (i, j, k))

    # -- elements ----------------------------------------------------------------

    def element(self, coeffs):
        """Element from a dict {index: value}, list of values, or label dict."""
        f = self.field
        if isinstance(coeffs, AlgebraElement):
            return coeffs
        out = {}
        if isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        for k, v in items:
            if isinstance(k, str):
                k = self.labels.index(k)
            if isinstance(v, Scalar):
                v = v.value
            elif isinstance(v, (int, Fraction)):
                v = f.from_fraction(Fraction(v))
            if not f.is_zero(v):
                out[k] = v
        return AlgebraElement(self, out)

    def basis_element(self, i):
        return AlgebraElement(self, {i: self.field.one})

    def basis_elements(self):
        return [self.basis_element(i) for i in range(self.n)]

    def zero(self):
        return AlgebraElement(self, {})

    def bracket(self, a, b):
        f = self.field
        out = {}
        for i, ci in a.coeffs.items():
            for j, cj in b.coeffs.items():
                c = f.mul(ci, cj)
                if f.is_zero(c):
                    continue
                for k, ck in self.bracket_basis(i, j).items():
                    s = f.add(out.get(k, f.zero), f.mul(c, ck))
                    out[k] = s
        return AlgebraElement(self, {k: v for k, v in out.items() if not f.is_zero(v)})

    def ad_matrix(self, a):
        """Matrix of ad_a on the basis (columns are [a, b_j])."""
        f = self.field
        n = self.n
        m = [[f.zero] * n for _ in range(n)]
        for i, ci in a.coeffs.items():
            for j in range(n):
                for k, ck in self.bracket_basis(i, j).items():
                    m[k][j] = f.add(m[k][j], f.mul(ci, ck))
        return m

    # -- serialization -------------------------------------------------------------

    def to_json(self):
        f = self.field
        constants = []
        for (i, j) in sorted(self._table):
            for k in sorted(self._table[(i, j)]):
                constants.append([i, j, k, f.to_str(self._table[(i, j)][k])])
        field_desc = {"kind": f.kind, "characteristic": f.characteristic}
        return {"field": field_desc, "labels": list(self.labels), "constants": constants}

    @classmethod
    def from_json(cls, data):
        from .scalars import field_create

        fd = data["field"]
        f = QQ if fd["characteristic"] == 0 else field_create("prime-field", fd["characteristic"])
        table = {}
        for i, j, k, val in data["constants"]:
            table.setdefault((i, j), {})[k] = f.from_str(val)
        return cls(f, data["labels"], table)

    def __repr__(self):
        return "LieAlgebra(dim %d over %r)" % (self.n, self.field)


class AlgebraElement:
    """Sparse coefficient vector over an algebra basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        f = self.algebra.field
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = f.add(out.get(k, f.zero), v)
            if f.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scale):
        f = self.algebra.field
        if isinstance(scale, Scalar):
            scale = scale.value
        elif isinstance(scale, (int, Fraction)):
            scale = f.from_fraction(Fraction(scale))
        if f.is_zero(scale):
            return AlgebraElement(self.algebra, {})
        return AlgebraElement(self.algebra, {k: f.mul(scale, v) for k, v in self.coeffs.items()})

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.algebra is other.algebra
            and self.coeffs == other.coeffs
        )

    def bracket(self, other):
        return self.algebra.bracket(self, other)

    def to_dense(self):
        f = self.algebra.field
        v = [f.zero] * self.algebra.n
        for k, c in self.coeffs.items():
            v[k] = c
        return v

    def __repr__(self):
        if not self.coeffs:
            return "0"
        f = self.algebra.field
        bits = []
        for k in sorted(self.coeffs):
            bits.append("%s*%s" % (f.to_str(self.coeffs[k]), self.algebra.labels[k]))
        return " + ".join(bits)


def element_from_dense(L, dense):
    return AlgebraElement(L, {k: c for k, c in enumerate(dense) if not L.field.is_zero(c)})


class Subspace:
    """Canonical (reduced echelon) subspace of an algebra."""

    def __init__(self, algebra, echelon):
        self.algebra = algebra
        self._ech = echelon

    @classmethod
    def from_elements(cls, algebra, elements):
        e = Echelon(algebra.field, algebra.n)
        for v in elements:
            e.insert(v.to_dense() if isinstance(v, AlgebraElement) else list(v))
        return cls(algebra, e)

    @property
    def dim(self):
        return self._ech.dim

    def basis(self):
        return [element_from_dense(self.algebra, row) for row in self._ech.basis()]

    def basis_rows(self):
        return self._ech.basis()

    def contains(self, elt):
        v = elt.to_dense() if isinstance(elt, AlgebraElement) else list(elt)
        return self._ech.contains(v)

    def contains_subspace(self, other):
        return all(self._ech.contains(r) for r in other.basis_rows())

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.algebra is other.algebra
            and self._ech.rows.keys() == other._ech.rows.keys()
            and self.basis_rows() == other.basis_rows()
        )

    def sum(self, other):
        e = self._ech.copy()
        for r in other.basis_rows():
            e.insert(r)
        return Subspace(self.algebra, e)

    def intersect(self, other):
        f = self.algebra.field
        mine = self.basis_rows()
        if not mine:
            return self
        reduced = [other._ech.reduce(r) for r in mine]
        coeffs = kernel(f, _columns(reduced), len(mine))
        elems = []
        for x in coeffs:
            v = [f.zero] * self.algebra.n
            for c, row in zip(x, mine):
                if not f.is_zero(c):
                    for idx in range(self.algebra.n):
                        v[idx] = f.add(v[idx], f.mul(c, row[idx]))
            elems.append(element_from_dense(self.algebra, v))
        return Subspace.from_elements(self.algebra, elems)

    def is_ideal(self):
        L = self.algebra
        for v in self.basis():
            for i in range(L.n):
                if not self.contains(L.bracket(L.basis_element(i), v)):
                    return False
        return True

    def bracket_with(self, other):
        L = self.algebra
        return Subspace.from_elements(
            L, [L.bracket(a, b) for a in self.basis() for b in other.basis()]
        )

    def __repr__(self):
        return "Subspace(dim %d of %r)" % (self.dim, self.algebra)


def _columns(rows):
    """Rows of the transposed matrix (kernel() wants the map x -> x . rows)."""
    if not rows:
        return []
    return [[row[c] for row in rows] for c in range(len(rows[0]))]


def zero_subspace(L):
    return Subspace(L, Echelon(L.field, L.n))


def full_subspace(L):
    return Subspace.from_elements(L, L.basis_elements())


# -- generation ------------------------------------------------------------------


def subalgebra_generated(L, gens):
    """Smallest subalgebra containing ``gens`` (left-normed closure)."""
    gens = [g if isinstance(g, AlgebraElement) else L.element(g) for g in gens]
    e = Echelon(L.field, L.n)
    work = list(gens)
    idx = 0
    while idx < len(work):
        v = work[idx]
        idx += 1
        if e.insert(v.to_dense()) is not None:
            for g in gens:
                work.append(L.bracket(g, v))
    return Subspace(L, e)


def ideal_generated(L, gens):
    gens = [g if isinstance(g, AlgebraElement) else L.element(g) for g in gens]
    e = Echelon(L.field, L.n)
    work = list(gens)
    idx = 0
    while idx < len(work):
        v = work[idx]
        idx += 1
        if e.insert(v.to_dense()) is not None:
            for i in range(L.n):
                work.append(L.bracket(L.basis_element(i), v))
    return Subspace(L, e)


def center(L):
    f = L.field
    rows = []
    for j in range(L.n):
        block = [[f.zero] * L.n for _ in range(L.n)]
        for i in range(L.n):
            for k, c in L.bracket_basis(i, j).items():
                block[k][i] = c
        rows.extend(block)
    return Subspace.from_elements(
        L, [element_from_dense(L, v) for v in kernel(f, rows, L.n)]
    )


def derived_series(L, sub=None):
    cur = sub if sub is not None else full_subspace(L)
    out = [cur]
    while True:
        nxt = cur.bracket_with(cur)
        out.append(nxt)
        if nxt.dim == cur.dim or nxt.dim == 0:
            return out
        cur = nxt


def lower_central_series(L, sub=None):
    first = sub if sub is not None else full_subspace(L)
    cur = first
    out = [cur]
    while True:
        nxt = first.bracket_with(cur)
        out.append(nxt)
        if nxt.dim == cur.dim or nxt.dim == 0:
            return out
        cur = nxt


def is_solvable_subspace(sub):
    return derived_series(sub.algebra, sub)[-1].dim == 0


def is_nilpotent_subspace(sub):
    return lower_central_series(sub.algebra, sub)[-1].dim == 0


def quotient_algebra(L, ideal):
    """(Q, lift, project): Q = L/ideal on the non-pivot coordinates."""
    f = L.field
    piv = set(ideal._ech.pivot_columns())
    keep = [i for i in range(L.n) if i not in piv]
    pos = {i: t for t, i in enumerate(keep)}

    def project_dense(v):
        red = ideal._ech.reduce(v)
        return {pos[i]: red[i] for i in keep if not f.is_zero(red[i])}

    table = {}
    for a in range(len(keep)):
        for b in range(a + 1, len(keep)):
            w = L.bracket(L.basis_element(keep[a]), L.basis_element(keep[b]))
            row = project_dense(w.to_dense())
            if row:
                table[(a, b)] = row
    Q = LieAlgebra(f, [L.labels[i] for i in keep], table)

    def project(elt):
        return AlgebraElement(Q, project_dense(elt.to_dense()))

    def lift(qelt):
        return AlgebraElement(L, {keep[i]: c for i, c in qelt.coeffs.items()})

    return Q, lift, project


# -- extremal machinery -------------------------------------------------------


class ExtremalFunctional:
    """The linear functional f_x with [x,[x,y]] = f_x(y) x."""

    def __init__(self, algebra, values):
        self.algebra = algebra
        self.values = values  # raw value per basis index

    def __call__(self, y):
        f = self.algebra.field
        s = f.zero
        for k, c in y.coeffs.items():
            s = f.add(s, f.mul(c, self.values[k]))
        return Scalar(f, s)

    def is_zero(self):
        f = self.algebra.field
        return all(f.is_zero(v) for v in self.values)


def is_extremal(L, x):
    """The functional f_x when im (ad_x)^2 lies in k.x; None otherwise."""
    if isinstance(x, (list, dict)):
        x = L.element(x)
    if x.is_zero():
        raise ZeroElement("extremality is defined for nonzero elements")
    f = L.field
    ref = min(x.coeffs)
    xr = x.coeffs[ref]
    values = []
    for j in range(L.n):
        w = L.bracket(x, L.bracket(x, L.basis_element(j)))
        if w.is_zero():
            values.append(f.zero)
            continue
        lam = f.div(w.coeffs.get(ref, f.zero), xr)
        expected = {k: f.mul(lam, v) for k, v in x.coeffs.items()}
        if w.coeffs != {k: v for k, v in expected.items() if not f.is_zero(v)}:
            return None
        values.append(lam)
    return ExtremalFunctional(L, values)


def is_sandwich(L, x):
    fx = is_extremal(L, x)
    return fx is not None and fx.is_zero()


class BilinearForm:
    """Symmetric bilinear form given by its Gram matrix on the basis."""

    def __init__(self, algebra, gram, kind):
        self.algebra = algebra
        self.gram = gram
        self.kind = kind

    def value(self, u, v):
        f = self.algebra.field
        s = f.zero
        for i, ci in u.coeffs.items():
            for j, cj in v.coeffs.items():
                s = f.add(s, f.mul(f.mul(ci, cj), self.gram[i][j]))
        return Scalar(f, s)

    def radical(self):
        return Subspace.from_elements(
            self.algebra,
            [element_from_dense(self.algebra, v) for v in kernel(self.algebra.field, self.gram, self.algebra.n)],
        )

    def is_symmetric(self):
        f = self.algebra.field
        n = self.algebra.n
        return all(
            f.is_zero(f.sub(self.gram[i][j], self.gram[j][i])) for i in range(n) for j in range(i)
        )

    def is_associative(self):
        """f([x,y],z) == f(x,[y,z]) on all basis triples."""
        L, f = self.algebra, self.algebra.field
        n = L.n
        for i in range(n):
            for j in range(n):
                row = L.bracket_basis(i, j)
                for k in range(n):
                    lhs = f.zero
                    for m, c in row.items():
                        lhs = f.add(lhs, f.mul(c, self.gram[m][k]))
                    rhs = f.zero
                    for m, c in L.bracket_basis(j, k).items():
                        rhs = f.add(rhs, f.mul(c, self.gram[i][m]))
                    if not f.is_zero(f.sub(lhs, rhs)):
                        return False
        return True


def killing_form(L):
    """kappa(x, y) = trace(ad_x ad_y)."""
    f = L.field
    n = L.n
    ad_rows = []  # ad_i as {(k, j): c} with [b_i, b_j] = sum c b_k
    for i in range(n):
        m = {}
        for j in range(n):
            for k, c in L.bracket_basis(i, j).items():
                m[(k, j)] = c
        ad_rows.append(m)
    gram = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = f.zero
            for (k, l), c in ad_rows[j].items():
                d = ad_rows[i].get((l, k))
                if d is not None:
                    s = f.add(s, f.mul(c, d))
            gram[i][j] = s
            gram[j][i] = s
    return BilinearForm(L, gram, "killing")


def extremal_form(L, spanning_set):
    """The unique symmetric associative form with f(x, .) = f_x on the given
    extremal spanning set, extended bilinearly to all of L."""
    f = L.field
    spanning = [s if isinstance(s, AlgebraElement) else L.element(s) for s in spanning_set]
    functionals = []
    for idx, s in enumerate(spanning):
        fx = is_extremal(L, s)
        if fx is None:
            raise NotExtremal("spanning element %d is not extremal" % idx)
        functionals.append(fx)
    rows = [s.to_dense() for s in spanning]
    m = len(rows)
    aug = Echelon(f, L.n + m)
    for i, row in enumerate(rows):
        v = list(row) + [f.zero] * m
        v[L.n + i] = f.one
        aug.insert(v)
    if len([c for c in aug.pivot_columns() if c < L.n]) != L.n:
        raise NotSpanning("extremal set does not span the algebra")
    # symmetry of f on extremal pairs (Lemma-level consistency of the input)
    for a in range(m):
        for b in range(a):
            if functionals[a](spanning[b]) != functionals[b](spanning[a]):
                raise WellDefinednessFailure("f_x(y) != f_y(x) on spanning pair (%d, %d)" % (a, b))
    coords = []
    for i in range(L.n):
        unit = [f.zero] * (L.n + m)
        unit[i] = f.one
        residual = aug.reduce(unit)
        coords.append([f.neg(x) for x in residual[L.n:]])
    fvals = [[functionals[a](spanning[b]).value for b in range(m)] for a in range(m)]
    half = mat_mul(f, coords, fvals)
    gram = mat_mul(f, half, [list(col) for col in zip(*coords)])
    form = BilinearForm(L, gram, "extremal-f")
    # well-definedness: the bilinear extension must reproduce every f_x directly
    for a, s in enumerate(spanning):
        for j in range(L.n):
            direct = functionals[a](L.basis_element(j)).value
            if not f.is_zero(f.sub(form.value(s, L.basis_element(j)).value, direct)):
                raise WellDefinednessFailure("bilinear extension disagrees with f_x")
    if not form.is_symmetric() or not form.is_associative():
        raise WellDefinednessFailure("extremal form not symmetric/associative")
    return form


def radical_of_form(form):
    return form.radical()


def grow_extremal_spanning(L, seeds, max_rounds=6):
    """Close a set of extremal elements under exp-images until it spans L.

    Images of extremal elements under exp(e, +-1) are extremal again, so the
    result is a spanning set of extremal elements whenever the closure fills
    the space; a stall raises NotSpanning.
    """
    from .chevalley import exp_automorphism

    f = L.field
    seeds = [s if isinstance(s, AlgebraElement) else L.element(s) for s in seeds]
    ech = Echelon(f, L.n)
    out = []

    def consider(v):
        if ech.insert(v.to_dense()) is not None:
            if is_extremal(L, v) is None:
                raise NotExtremal("exp image failed the extremality test")
            out.append(v)
            return True
        return False

    for s in seeds:
        consider(s)
    for _ in range(max_rounds):
        if ech.dim == L.n:
            break
        changed = False
        for base in list(out):
            for sgn in (1, -1):
                phi = exp_automorphism(L, base, sgn, check=False)
                for v in list(out):
                    if consider(phi.apply(v)):
                        changed = True
                if ech.dim == L.n:
                    break
            if ech.dim == L.n:
                break
        if not changed:
            break
    if ech.dim != L.n:
        raise NotSpanning("extremal closure stalled at dimension %d of %d" % (ech.dim, L.n))
    return out


# -- structural subspaces -----------------------------------------------------


def _solvable_candidates(L, extra=()):
    cands = [center(L)]
    kappa_rad = killing_form(L).radical()
    chain = [kappa_rad]
    while True:
        nxt = chain[-1].bracket_with(chain[-1])
        if nxt.dim in (chain[-1].dim, 0):
            chain.append(nxt)
            break
        chain.append(nxt)
    cands.extend(chain)
    cands.extend(extra)
    out = zero_subspace(L)
    for c in cands:
        if c.dim and c.is_ideal() and is_solvable_subspace(c):
            out = out.sum(c)
    return out


def _no_solvable_ideal_certificate(L, torus=None):
    """True if L provably has no nonzero solvable ideal; a Subspace witness
    if one is found; None when undecided.

    Any nonzero solvable ideal contains a nonzero abelian ideal, and abelian
    ideals always sit inside Rad(kappa); when Rad(kappa) splits into joint
    eigenlines of a torus the abelian ideals are exhaustively enumerable.
    """
    import itertools as _it

    kappa_rad = killing_form(L).radical()
    if kappa_rad.dim == 0:
        return True
    for v in kappa_rad.basis():
        ideal = ideal_generated(L, [v])
        if ideal.dim and is_solvable_subspace(ideal):
            return ideal
    if torus is not None and kappa_rad.dim <= 12:
        lines = _weight_lines(L, torus, kappa_rad)
        if lines is not None:
            for size in range(1, len(lines) + 1):
                for subset in _it.combinations(lines, size):
                    sub = Subspace.from_elements(L, [v for v in subset])
                    if sub.dim and sub.is_ideal() and is_solvable_subspace(sub):
                        return sub
            return True
    return None


def _eigenvalue_candidates(f, m):
    """Possible eigenvalues of the small matrix m over the base field."""
    if f.characteristic:
        if f.characteristic > 101:
            return None
        return [f.from_int(k) for k in range(f.characteristic)]
    cp = charpoly(f, m)
    const = next((c for c in cp if not f.is_zero(c)), None)
    cands = {Fraction(0)}
    if const is not None:
        c = Fraction(const)
        if abs(c.numerator) > 10000:
            return None
        for d in range(1, abs(c.numerator) + 1):
            if c.numerator % d == 0:
                for q in (1, c.denominator):
                    cands.add(Fraction(d, q))
                    cands.add(Fraction(-d, q))
    return [f.from_fraction(c) for c in sorted(cands)]


def _weight_lines(L, torus, sub):
    """Split ``sub`` into joint eigenlines of ad(t), t in torus; None if the
    decomposition is not multiplicity-free over the base field."""
    f = L.field
    spaces = [sub.basis_rows()]
    for t in torus:
        t = t if isinstance(t, AlgebraElement) else L.element(t)
        adt = L.ad_matrix(t)
        new_spaces = []
        for rows in spaces:
            if len(rows) == 1:
                new_spaces.append(rows)
                continue
            images = [mat_vec(f, adt, r) for r in rows]
            coords = [solve_in_span(f, rows, L.n, img) for img in images]
            if any(c is None for c in coords):
                return None
            d = len(rows)
            cands = _eigenvalue_candidates(f, coords)
            if cands is None:
                return None
            found = 0
            for lam in cands:
                # x with x . M = lam x, i.e. (M^T - lam) x = 0
                mt = [[f.sub(coords[i][j], lam if i == j else f.zero) for i in range(d)] for j in range(d)]
                eig = []
                for x in kernel(f, mt, d):
                    vec = [f.zero] * L.n
                    for c, row in zip(x, rows):
                        if not f.is_zero(c):
                            for idx in range(L.n):
                                vec[idx] = f.add(vec[idx], f.mul(c, row[idx]))
                    eig.append(vec)
                if eig:
                    new_spaces.append(eig)
                    found += len(eig)
            if found != d:
                return None
        spaces = new_spaces
    if any(len(rows) != 1 for rows in spaces):
        return None
    return [element_from_dense(L, rows[0]) for rows in spaces]


def solvable_radical(L, torus=None, extra_candidates=()):
    """Largest solvable ideal found, with a maximality certificate when possible.

    Returns (Subspace, certified: bool).
    """
    R = _solvable_candidates(L, extra=extra_candidates)
    for _ in range(L.n + 1):
        Q, lift, project = quotient_algebra(L, R)
        if Q.n == 0:
            return R, True
        qtorus = None
        if torus is not None:
            qtorus = [project(t if isinstance(t, AlgebraElement) else L.element(t)) for t in torus]
            qtorus = [t for t in qtorus if not t.is_zero()]
        cert = _no_solvable_ideal_certificate(Q, torus=qtorus)
        if cert is True:
            return R, True
        if cert is None:
            return R, False
        lifted = [lift(v) for v in cert.basis()]
        R = ideal_generated(L, [w for w in lifted] + [v for v in R.basis()])
    return R, False


def nilradical(L, rad=None, extra_candidates=()):
    """Largest nilpotent ideal found in the candidate lattice (a certified
    lower bound for the nilpotent radical)."""
    if rad is None:
        rad, _ = solvable_radical(L)
    cands = [rad]
    cands.extend(derived_series(L, rad)[1:])
    cands.extend(lower_central_series(L, rad)[1:])
    cands.append(center(L))
    cands.extend(extra_candidates)
    out = zero_subspace(L)
    for c in cands:
        if c.dim and c.is_ideal() and is_nilpotent_subspace(c):
            out = out.sum(c)
    if out.dim and not is_nilpotent_subspace(out):
        # sum of nilpotent ideals is nilpotent; reaching here means a bug
        raise RuntimeError("nilradical candidate sum is not nilpotent")
    return out


def structural_subspaces(L, torus=None, extra_candidates=()):
    rad, certified = solvable_radical(L, torus=torus, extra_candidates=extra_candidates)
    return {
        "center": center(L),
        "derived_series": derived_series(L),
        "lower_central_series": lower_central_series(L),
        "solvable_radical": rad,
        "solvable_radical_certified": certified,
        "nilradical": nilradical(L, rad, extra_candidates=extra_candidates),
    }


# -- spectral and chain checks --------------------------------------------------


def phi_spectrum_check(L, x, y):
    """Eigenvalue structure of phi = ad_x ad_y for extremal x (exact char poly)."""
    x = x if isinstance(x, AlgebraElement) else L.element(x)
    y = y if isinstance(y, AlgebraElement) else L.element(y)
    f = L.field
    fx = is_extremal(L, x)
    if fx is None:
        raise PreconditionNotMet("x must be extremal")
    fxy = fx(y).value
    kappa = killing_form(L)
    if f.is_zero(fxy):
        phi = mat_mul(f, L.ad_matrix(x), L.ad_matrix(y))
        cp = charpoly(f, phi)
        expected = [f.zero] * L.n + [f.one]
        ok = cp == expected and f.is_zero(kappa.value(x, y).value)
        return {"case": "a", "all_eigenvalues_zero": cp == expected, "kappa_zero": f.is_zero(kappa.value(x, y).value), "pass": ok}
    # rescale so that f(x, y') = -2
    scale = f.div(f.from_int(-2), fxy)
    y2 = Scalar(f, scale) * y
    adx = L.ad_matrix(x)
    s = echelon_from_rows(f, L.n, adx).dim
    phi = mat_mul(f, adx, L.ad_matrix(y2))
    cp = charpoly(f, phi)
    expected = [f.one]
    for root, mult in ((f.from_int(2), 2), (f.from_int(1), s - 2), (f.zero, L.n - s)):
        for _ in range(mult):
            expected = _poly_shift(f, expected, root)
    kap = kappa.value(x, y2).value
    # phi^2 + (1/2) f(x,y') phi maps into kx + k[x,y'], with f(x,y') = -2
    comb = mat_mul(f, phi, phi)
    minus_one = f.from_int(-1)
    for i in range(L.n):
        for j in range(L.n):
            comb[i][j] = f.add(comb[i][j], f.mul(minus_one, phi[i][j]))
    target = Subspace.from_elements(L, [x, L.bracket(x, y2)])
    img_ok = all(
        target.contains(element_from_dense(L, [comb[i][j] for i in range(L.n)]))
        for j in range(L.n)
    )
    ok = cp == expected and kap == f.from_int(s + 2) and img_ok
    return {
        "case": "b",
        "s": s,
        "kappa": Scalar(f, kap),
        "kappa_expected": Scalar(f, f.from_int(s + 2)),
        "charpoly_matches": cp == expected,
        "quadratic_image_ok": img_ok,
        "pass": ok,
    }


def _poly_shift(field, poly, root):
    """poly * (t - root)."""
    f = field
    out = [f.zero] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i + 1] = f.add(out[i + 1], c)
        out[i] = f.sub(out[i], f.mul(root, c))
    return out


def fourth_power_check(L, x, y, form):
    """ad_{[x,y]}^4 = 0 for extremal x outside Rad(f) and y inside Rad(f)."""
    x = x if isinstance(x, AlgebraElement) else L.element(x)
    y = y if isinstance(y, AlgebraElement) else L.element(y)
    if is_extremal(L, x) is None:
        raise PreconditionNotMet("x must be extremal")
    rad = form.radical()
    if rad.contains(x):
        raise PreconditionNotMet("x must lie outside Rad(f)")
    if not rad.contains(y):
        raise PreconditionNotMet("y must lie in Rad(f)")
    z = L.bracket(x, y)
    if z.is_zero():
        return {"bracket_zero": True, "fourth_power_zero": True, "pass": True}
    m = L.ad_matrix(z)
    f = L.field
    sq = mat_mul(f, m, m)
    fourth = mat_mul(f, sq, sq)
    ok = all(all(f.is_zero(c) for c in row) for row in fourth)
    return {"bracket_zero": False, "fourth_power_zero": ok, "pass": ok}


def sandwich_span_check(L, witnesses, form, torus=None):
    """Ideal span of sandwich witnesses and the chain
    SanRad <= NilRad <= Rad(L) <= Rad(f) <= Rad(kappa)."""
    elems = []
    for idx, w in enumerate(witnesses):
        w = w if isinstance(w, AlgebraElement) else L.element(w)
        fx = is_extremal(L, w)
        if fx is None or not fx.is_zero():
            raise NotASandwich("witness %d is not a sandwich" % idx)
        elems.append(w)
    san = ideal_generated(L, elems)
    rad, certified = solvable_radical(L, torus=torus)
    nil = nilradical(L, rad, extra_candidates=[san])
    rad_f = form.radical()
    rad_k = killing_form(L).radical()
    chain = [
        ("SanRad_lower_bound", san),
        ("NilRad", nil),
        ("Rad(L)", rad),
        ("Rad(f)", rad_f),
        ("Rad(kappa)", rad_k),
    ]
    links = []
    ok = san.is_ideal()
    for (na, a), (nb, b) in zip(chain, chain[1:]):
        inc = b.contains_subspace(a)
        links.append({"link": "%s <= %s" % (na, nb), "holds": inc, "strict": inc and b.dim > a.dim})
        ok = ok and inc
    return {
        "dims": {name: s.dim for name, s in chain},
        "links": links,
        "witness_span_is_ideal": san.is_ideal(),
        "solvable_radical_certified": certified,
        "pass": ok,
    }


def direct_sum(L1, L2):
    """Direct sum of two algebras over the same field (block structure constants)."""
    if L1.field != L2.field:
        raise ValueError("mixed fields")
    labels = ["A." + s for s in L1.labels] + ["B." + s for s in L2.labels]
    table = {}
    for (i, j), row in L1._table.items():
        table[(i, j)] = dict(row)
    off = L1.n
    for (i, j), row in L2._table.items():
        table[(i + off, j + off)] = {k + off: c for k, c in row.items()}
    return LieAlgebra(L1.field, labels, table)


def direct_sum_orthogonality_check(L, part1_indices, part2_indices, spanning_set):
    """For an ideal direct sum L = L1 (+) L2: f(L1, L2) = 0 and each part is
    spanned by projections of the extremal spanning elements."""
    f = L.field
    all_idx = sorted(part1_indices) + sorted(part2_indices)
    if all_idx != list(range(L.n)):
        raise NotADirectSum("parts must partition the basis")
    p1 = Subspace.from_elements(L, [L.basis_element(i) for i in part1_indices])
    p2 = Subspace.from_elements(L, [L.basis_element(i) for i in part2_indices])
    if not (p1.is_ideal() and p2.is_ideal()):
        raise NotADirectSum("parts are not ideals")
    form = extremal_form(L, spanning_set)
    orth = all(
        f.is_zero(form.value(L.basis_element(i), L.basis_element(j)).value)
        for i in part1_indices
        for j in part2_indices
    )
    proj_ok = True
    for part, indices in ((p1, part1_indices), (p2, part2_indices)):
        ech = Echelon(f, L.n)
        for s in spanning_set:
            s = s if isinstance(s, AlgebraElement) else L.element(s)
            proj = AlgebraElement(L, {k: c for k, c in s.coeffs.items() if k in indices})
            if proj.is_zero():
                continue
            if is_extremal(L, proj) is None:
                proj_ok = False
            ech.insert(proj.to_dense())
        if ech.dim != part.dim:
            proj_ok = False
    return {"orthogonal": orth, "projections_span_and_extremal": proj_ok, "pass": orth and proj_ok}


# -- tiny standard algebras -----------------------------------------------------


def sl2(field=QQ):
    """Standard basis (e, h, f): [e,f]=h, [h,e]=2e, [h,f]=-2f."""
    f = field
    table = {
        (0, 1): {0: f.from_int(-2)},
        (0, 2): {1: f.one},
        (1, 2): {2: f.from_int(-2)},
    }
    return LieAlgebra(f, ["e", "h", "f"], table)


def heisenberg(field=QQ):
    """[x, y] = z, z central."""
    return LieAlgebra(field, ["x", "y", "z"], {(0, 1): {2: field.one}})


def abelian(field, n):
    return LieAlgebra(field, ["a%d" % i for i in range(n)], {})


def matrix_lie_algebra(field, mats, labels=None):
    """Lie algebra spanned by the commutator closure of the given square
    matrices; returns (LieAlgebra, basis matrices)."""
    f = field
    size = len(mats[0])

    def flat(m):
        return [m[i][j] for i in range(size) for j in range(size)]

    def comm(a, b):
        return [
            [f.sub(sum_ab(a, b, i, j), sum_ab(b, a, i, j)) for j in range(size)]
            for i in range(size)
        ]

    def sum_ab(a, b, i, j):
        s = f.zero
        for k in range(size):
            s = f.add(s, f.mul(a[i][k], b[k][j]))
        return s

    ech = Echelon(f, size * size)
    basis_mats = []
    work = [[[f.from_fraction(Fraction(x)) if isinstance(x, (int, Fraction)) else x for x in row] for row in m] for m in mats]
    idx = 0
    while idx < len(work):
        m = work[idx]
        idx += 1
        if ech.insert(flat(m)) is not None:
            basis_mats.append(m)
            for other in list(basis_mats):
                work.append(comm(other, m))
    # canonical basis: echelon rows as matrices
    rows = ech.basis()
    basis_mats = [[[row[i * size + j] for j in range(size)] for i in range(size)] for row in rows]
    n = len(basis_mats)
    width = size * size
    aug = Echelon(f, width + n)
    for i, row in enumerate(rows):
        v = list(row) + [f.zero] * n
        v[width + i] = f.one
        aug.insert(v)
    table = {}
    for a in range(n):
        for b in range(a + 1, n):
            c = comm(basis_mats[a], basis_mats[b])
            residual = aug.reduce(flat(c) + [f.zero] * n)
            if any(not f.is_zero(x) for x in residual[:width]):
                raise ValueError("matrix set is not closed under commutators")
            row = {k: f.neg(v) for k, v in enumerate(residual[width:]) if not f.is_zero(v)}
            if row:
                table[(a, b)] = row
    if labels is None:
        labels = ["m%d" % i for i in range(n)]
    return LieAlgebra(f, labels, table), basis_mats
