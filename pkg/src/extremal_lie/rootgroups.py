"""Root groups U_y = {exp(y, t)} and the identities they satisfy.

Group elements are only ever stored as exact matrices (sparse columns), so
equality of group words is decidable.  Over small prime fields the parameter
checks are exhaustive; over the rationals a fixed deterministic sample set is
used (the identities are polynomial in the parameters, of low degree).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Scalar
from .liealg import AlgebraElement, NotExtremal, PreconditionNotMet, is_extremal
from .chevalley import exp_automorphism

Q_SAMPLES = (1, -1, 2, -2, Fraction(1, 2), 3)
EXHAUSTIVE_CHAR_BOUND = 11


class RootGroupElement:
    """exp(base, parameter) with its matrix; the group U_y depends only on ky."""

    def __init__(self, lie, base, parameter):
        self.lie = lie
        self.base = base
        self.parameter = parameter
        self.matrix = exp_automorphism(lie, base, parameter, check=False)


def parameter_samples(field, seed_extra=()):
    """All field elements for small GF(p); a fixed sample set over Q."""
    if field.characteristic and field.characteristic <= EXHAUSTIVE_CHAR_BOUND:
        return [field.from_int(k) for k in range(field.characteristic)]
    vals = [field.from_fraction(Fraction(v)) for v in Q_SAMPLES]
    for v in seed_extra:
        v = field.from_fraction(Fraction(v))
        if v not in vals:
            vals.append(v)
    return vals


def _exp(L, x, s, cache):
    key = (id(x), s if not isinstance(s, Fraction) else str(s))
    got = cache.get(key)
    if got is None:
        got = exp_automorphism(L, x, s, check=False)
        cache[key] = got
    return got


def classify_pair(L, x, y):
    fx = is_extremal(L, x)
    fy = is_extremal(L, y)
    if fx is None or fy is None:
        raise NotExtremal("root group pairs need extremal elements")
    from .linalg import echelon_from_rows

    if echelon_from_rows(L.field, L.n, [x.to_dense(), y.to_dense()]).dim == 1:
        return "same-line", fx
    if L.bracket(x, y).is_zero():
        return "commuting", fx
    if L.field.is_zero(fx(y).value):
        return "f0-noncommuting", fx
    return "opposite", fx


def verify_abstract_root_properties(L, x, y, sample_params=None):
    """The five root-group properties, as exact matrix identities for every
    sampled (or exhaustive) parameter pair."""
    x = x if isinstance(x, AlgebraElement) else L.element(x)
    y = y if isinstance(y, AlgebraElement) else L.element(y)
    f = L.field
    case, fx = classify_pair(L, x, y)
    samples = sample_params if sample_params is not None else parameter_samples(f)
    samples = [s.value if isinstance(s, Scalar) else f.from_fraction(Fraction(s)) if isinstance(s, (int, Fraction)) else s for s in samples]
    cache = {}
    checks = []

    def record(prop, ok):
        checks.append({"pair": case, "property": prop, "samples": len(samples), "pass": ok})

    # (1) one-parameter group law
    ok = True
    for s in samples:
        for t in samples:
            lhs = _exp(L, y, s, cache).compose(_exp(L, y, t, cache))
            if lhs != _exp(L, y, f.add(s, t), cache):
                ok = False
    record("(1) exp(y,s)exp(y,t) = exp(y,s+t)", ok)

    # (2) conjugation transports the root group
    ok = True
    for s in samples:
        g = _exp(L, y, s, cache)
        ginv = _exp(L, y, f.neg(s), cache)
        x2 = ginv.apply(x)
        if is_extremal(L, x2) is None:
            ok = False
            continue
        for t in samples:
            lhs = ginv.compose(_exp(L, x, t, cache)).compose(g)
            if lhs != exp_automorphism(L, x2, t, check=False):
                ok = False
    record("(2) (U_x)^{exp(y,s)} = U_{exp(y,-s)x}", ok)

    if case in ("same-line", "commuting"):
        ok = True
        for s in samples:
            for t in samples:
                a = _exp(L, x, s, cache)
                b = _exp(L, y, t, cache)
                if a.compose(b) != b.compose(a):
                    ok = False
        record("(3) (U_x, U_y) = 1", ok)
    elif case == "f0-noncommuting":
        z = L.bracket(y, x)
        ok = is_extremal(L, z) is not None
        for t in samples:
            for s in samples:
                gy, gx = _exp(L, y, t, cache), _exp(L, x, s, cache)
                comm = _exp(L, y, f.neg(t), cache).compose(_exp(L, x, f.neg(s), cache)).compose(gy).compose(gx)
                if comm != exp_automorphism(L, z, f.mul(t, s), check=False):
                    ok = False
        # class 2: the commutator group is central in <U_x, U_y>
        for u in samples:
            gz = exp_automorphism(L, z, u, check=False)
            for s in samples:
                for other in (x, y):
                    g = _exp(L, other, s, cache)
                    if gz.compose(g) != g.compose(gz):
                        ok = False
        record("(4) (exp(y,t), exp(x,s)) = exp([y,x], ts), class 2", ok)
    else:
        fxy = fx(y).value
        y2 = Scalar(f, f.div(f.from_int(-2), fxy)) * y
        ok = True
        for s in samples:
            if f.is_zero(s):
                continue
            sinv = f.inv(s)
            for t in samples:
                lhs = (
                    _exp(L, y2, f.neg(s), cache)
                    .compose(_exp(L, x, f.mul(sinv, t), cache))
                    .compose(_exp(L, y2, s, cache))
                )
                rhs = (
                    _exp(L, x, f.neg(sinv), cache)
                    .compose(_exp(L, y2, f.neg(f.mul(t, s)), cache))
                    .compose(_exp(L, x, sinv, cache))
                )
                if lhs != rhs:
                    ok = False
        record("(5) special rank 1 relation (f(x,y) = -2)", ok)

    return {"case": case, "checks": checks, "pass": all(c["pass"] for c in checks)}


def strongcomm_check(L, x, y, sample_params=None):
    """For commuting extremal x, y: the equivalent conditions for the line
    kx + ky to consist of extremal elements, and the product identity."""
    x = x if isinstance(x, AlgebraElement) else L.element(x)
    y = y if isinstance(y, AlgebraElement) else L.element(y)
    f = L.field
    if not L.bracket(x, y).is_zero():
        raise PreconditionNotMet("strongcomm needs [x, y] = 0")
    fx, fy = is_extremal(L, x), is_extremal(L, y)
    if fx is None or fy is None:
        raise PreconditionNotMet("strongcomm needs extremal x, y")
    samples = sample_params if sample_params is not None else parameter_samples(f)
    samples = [s.value if isinstance(s, Scalar) else f.from_fraction(Fraction(s)) if isinstance(s, (int, Fraction)) else s for s in samples]

    # (2'): 2[y,[x,z]] = f(x,z) y + f(y,z) x for all z, checked on the basis
    two = f.from_int(2)
    cond2 = True
    for j in range(L.n):
        z = L.basis_element(j)
        lhs = Scalar(f, two) * L.bracket(y, L.bracket(x, z))
        rhs = fx(z) * y + fy(z) * x
        if lhs != rhs:
            cond2 = False
            break
    # (1)/(1'): extremality of sx + ty over the samples
    results = []
    for s in samples:
        for t in samples:
            if f.is_zero(s) or f.is_zero(t):
                continue
            v = Scalar(f, s) * x + Scalar(f, t) * y
            results.append(is_extremal(L, v) is not None)
    cond1_all = all(results) if results else True
    cond1_exists = any(results) if results else True
    agree = cond2 == cond1_all == cond1_exists
    product_ok = True
    if cond2:
        cache = {}
        for s in samples:
            for t in samples:
                lhs = _exp(L, y, t, cache).compose(_exp(L, x, s, cache))
                v = Scalar(f, s) * x + Scalar(f, t) * y
                if v.is_zero():
                    rhs_ok = lhs.is_identity()
                else:
                    rhs_ok = lhs == exp_automorphism(L, v, f.one, check=False)
                if not rhs_ok:
                    product_ok = False
    return {
        "condition_2prime": cond2,
        "condition_1_all_samples": cond1_all,
        "condition_1prime_exists": cond1_exists,
        "conditions_agree": agree,
        "product_identity": product_ok,
        "pass": agree and (not cond2 or product_ok),
    }


def projective_line_check(L, x, y, third_point, sample_params=None):
    """If three commuting extremal points lie on one projective line, every
    nonzero point of the line is extremal (exhaustive over small GF(p))."""
    from .linalg import echelon_from_rows

    f = L.field
    x = x if isinstance(x, AlgebraElement) else L.element(x)
    y = y if isinstance(y, AlgebraElement) else L.element(y)
    third = third_point if isinstance(third_point, AlgebraElement) else L.element(third_point)
    pts = [x, y, third]
    for p in pts:
        if is_extremal(L, p) is None:
            raise PreconditionNotMet("line points must be extremal")
    for i in range(3):
        for j in range(i + 1, 3):
            if not L.bracket(pts[i], pts[j]).is_zero():
                raise PreconditionNotMet("line points must commute pairwise")
    ech = echelon_from_rows(f, L.n, [x.to_dense(), y.to_dense()])
    if ech.dim != 2 or not ech.contains(third.to_dense()):
        raise PreconditionNotMet("the three points must span one projective line")
    lambdas = sample_params if sample_params is not None else parameter_samples(f)
    lambdas = [s.value if isinstance(s, Scalar) else f.from_fraction(Fraction(s)) if isinstance(s, (int, Fraction)) else s for s in lambdas]
    points = [y] + [x + Scalar(f, lam) * y for lam in lambdas]
    bad = []
    for p in points:
        if p.is_zero():
            continue
        if is_extremal(L, p) is None:
            bad.append(p)
    exhaustive = bool(f.characteristic and f.characteristic <= EXHAUSTIVE_CHAR_BOUND)
    return {
        "points_checked": len(points),
        "exhaustive": exhaustive,
        "non_extremal_points": bad,
        "pass": not bad,
    }


def line_is_fully_extremal(L, x, y, sample_params=None):
    """Whether every sampled nonzero point of kx + ky is extremal (no
    preconditions; used to exhibit failing lines)."""
    f = L.field
    lambdas = sample_params if sample_params is not None else parameter_samples(f)
    lambdas = [s.value if isinstance(s, Scalar) else f.from_fraction(Fraction(s)) if isinstance(s, (int, Fraction)) else s for s in lambdas]
    witness = None
    for lam in lambdas:
        p = x + Scalar(f, lam) * y
        if not p.is_zero() and is_extremal(L, p) is None:
            witness = p
            break
    return {"fully_extremal": witness is None, "witness": witness}


def chain_nonexistence_probe(L, pool, max_triples=20000):
    """Search for a chain x1, x2, x3 of extremal elements with (x1, x2)
    satisfying the strong commuting conditions, [x2, x3] = 0 and
    f(x1, x3) != 0.  Absence of a witness is reported, not proved."""
    f = L.field
    pool = [p if isinstance(p, AlgebraElement) else L.element(p) for p in pool]
    funcs = []
    for p in pool:
        fx = is_extremal(L, p)
        if fx is not None:
            funcs.append((p, fx))
    tried = 0
    for i, (x1, f1) in enumerate(funcs):
        for j, (x2, f2) in enumerate(funcs):
            if i == j or not L.bracket(x1, x2).is_zero():
                continue
            ok2 = True
            two = f.from_int(2)
            for k in range(L.n):
                z = L.basis_element(k)
                lhs = Scalar(f, two) * L.bracket(x2, L.bracket(x1, z))
                if lhs != f1(z) * x2 + f2(z) * x1:
                    ok2 = False
                    break
            if not ok2:
                continue
            for x3, f3 in funcs:
                tried += 1
                if tried > max_triples:
                    return {"witness": None, "triples_tried": tried, "pass": True}
                if L.bracket(x2, x3).is_zero() and not f.is_zero(f1(x3).value):
                    return {"witness": (x1, x2, x3), "triples_tried": tried, "pass": False}
    return {"witness": None, "triples_tried": tried, "pass": True}
