"""Geometry of a single plane cubic.

Points, lines, smoothness and singularity typing, tangents and third
intersection points, Fulton's intersection multiplicity, the chord-tangent
group law, the ninefold-contact kernel (order-9 test valid over any exact
field), linear factors, and the invariants S, T and j.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (InconsistentKnownPoints, InternalContradiction,
                     JUnavailable, LineComponent, NotOnCurve, NotSingular,
                     NotSmoothCurve, NotSmoothPoint)
from .exactfield import AlgNum, QQ
from .invariants import aronhold_S, aronhold_T, disc_cubic
from .polyforms import (FORM_VARS, Form3, MPoly, branch_parametrization,
                        eval_form_on_parametrization, form_from_coeffs,
                        gcd_bivariate, gcd_univariate, hessian_det,
                        monomials_of_degree, parse_algnum, policy_roots,
                        resultant_main)


class _Infinite:
    """Infinite intersection multiplicity (shared component through the point)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __eq__(self, other):
        return isinstance(other, _Infinite)

    def __hash__(self):
        return hash("INFINITE")

    def __gt__(self, other):
        return not isinstance(other, _Infinite)

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinite)


INFINITE = _Infinite()


class Point2:
    """Projective point; canonical representative scales the first nonzero
    coordinate to 1, and equality/hash use that representative."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        coords = tuple(c if isinstance(c, AlgNum) else field.from_rat(c) for c in coords)
        if len(coords) != 3:
            raise ValueError("three homogeneous coordinates required")
        lead = next((c for c in coords if not c.is_zero()), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        inv = lead.inverse()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", tuple(c * inv for c in coords))

    def __setattr__(self, *a):
        raise AttributeError("Point2 is immutable")

    def __eq__(self, other):
        return isinstance(other, Point2) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def apply(self, M) -> "Point2":
        """Row-vector action, matching substitute_linear's zero-set transport:
        q = p.apply(M.inverse()) lies on f.M whenever p lies on f."""
        return Point2(self.field, M.apply_row(self.coords))

    def __repr__(self):
        return format_point(self)


def format_point(p: Point2) -> str:
    return "(" + " : ".join(str(c) for c in p.coords) + ")"


def parse_point(text, field) -> Point2:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise NotOnCurve(f"bad point syntax {text!r}")
    parts = text[1:-1].split(":")
    if len(parts) != 3:
        from .errors import ParseError
        raise ParseError(f"bad point syntax {text!r}")
    return Point2(field, [parse_algnum(s, field) for s in parts])


class Line:
    """A projective line, stored as its degree-1 form."""

    __slots__ = ("form",)

    def __init__(self, form: Form3):
        if form.is_zero() or form.degree != 1:
            raise ValueError("a line is a nonzero degree-1 form")
        object.__setattr__(self, "form", form.scaled_primitive())

    def __setattr__(self, *a):
        raise AttributeError("Line is immutable")

    @classmethod
    def from_coeffs(cls, field, a, b, c):
        return cls(form_from_coeffs(field, 1, [a, b, c]))

    @classmethod
    def through(cls, p: Point2, q: Point2):
        a, b, c = p.coords
        d, e, f = q.coords
        return cls.from_coeffs(p.field, b * f - c * e, c * d - a * f, a * e - b * d)

    def contains(self, p: Point2):
        return self.form.eval_point(p.coords).is_zero()

    def basis_points(self):
        """Two points spanning the line, by a deterministic rule."""
        a, b, c = (self.form.coeff(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        field = self.form.field
        if not c.is_zero():
            ci = c.inverse()
            return (Point2(field, [field.one(), field.zero(), -a * ci]),
                    Point2(field, [field.zero(), field.one(), -b * ci]))
        if not b.is_zero():
            bi = b.inverse()
            return (Point2(field, [field.one(), -a * bi, field.zero()]),
                    Point2(field, [field.zero(), field.zero(), field.one()]))
        return (Point2(field, [field.zero(), field.one(), field.zero()]),
                Point2(field, [field.zero(), field.zero(), field.one()]))

    def __eq__(self, other):
        return isinstance(other, Line) and self.form == other.form

    def __hash__(self):
        return hash(self.form)

    def __repr__(self):
        return f"Line({self.form})"


class SingInfo:
    """Singular-point record: kind is 'node', 'cusp' or 'other'; for split
    nodes the two tangent-cone lines are attached (may be empty when the node
    does not split over the field)."""

    __slots__ = ("point", "kind", "tangents")

    def __init__(self, point, kind, tangents=()):
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "tangents", tuple(tangents))

    def __setattr__(self, *a):
        raise AttributeError("SingInfo is immutable")

    def __repr__(self):
        return f"SingInfo({self.point}, {self.kind})"


class Cubic:
    """A plane cubic with cached first partials."""

    __slots__ = ("form", "fx", "fy", "fz")

    def __init__(self, form: Form3):
        if form.is_zero() or form.degree != 3:
            raise ValueError("a cubic is a nonzero degree-3 form")
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "fx", form.derivative("x"))
        object.__setattr__(self, "fy", form.derivative("y"))
        object.__setattr__(self, "fz", form.derivative("z"))

    def __setattr__(self, *a):
        raise AttributeError("Cubic is immutable")

    @property
    def field(self):
        return self.form.field

    def gradient_at(self, p: Point2):
        return (self.fx.eval_point(p.coords), self.fy.eval_point(p.coords),
                self.fz.eval_point(p.coords))

    def __repr__(self):
        return f"Cubic({self.form})"


def on_curve(C: Cubic, p: Point2) -> bool:
    return C.form.eval_point(p.coords).is_zero()


def is_smooth(C: Cubic) -> bool:
    """No common projective zero of the partials; decided by the exact
    discriminant invariant (64 S^3 - T^2 != 0)."""
    return not disc_cubic(C.form).is_zero()


def is_smooth_at(C: Cubic, p: Point2) -> bool:
    return not all(g.is_zero() for g in C.gradient_at(p))


# ---------------------------------------------------------------------------
# chart helpers
# ---------------------------------------------------------------------------

def _chart_for(p: Point2):
    """Deterministic chart: prefer z = 1, then y = 1, then x = 1.  Returns
    (unit_var, u_var, v_var) with the local variable order fixed."""
    if not p.coords[2].is_zero():
        return ("z", "x", "y")
    if not p.coords[1].is_zero():
        return ("y", "x", "z")
    return ("x", "y", "z")


def _localize(f: Form3, p: Point2, chart):
    """Dehomogenize f in the chart and translate p to the local origin."""
    unit, uvar, vvar = chart
    field = f.field
    iu = FORM_VARS.index(unit)
    scale = p.coords[iu].inverse()
    aff = {v: p.coords[FORM_VARS.index(v)] * scale for v in FORM_VARS}
    u = MPoly.variable(field, FORM_VARS, uvar)
    v = MPoly.variable(field, FORM_VARS, vvar)
    sub = {unit: MPoly.constant(field, FORM_VARS, 1),
           uvar: u + aff[uvar], vvar: v + aff[vvar]}
    return f.poly.subs(sub)


def _delocalize_line(field, chart, p: Point2, cu, cv):
    """Global line from the local linear form cu*u + cv*v (through p)."""
    unit, uvar, vvar = chart
    iu = FORM_VARS.index(unit)
    scale = p.coords[iu].inverse()
    aff = {v: p.coords[FORM_VARS.index(v)] * scale for v in FORM_VARS}
    # u = x_uvar/x_unit - aff[uvar], v likewise; clear the x_unit denominator
    coeffs = {name: field.zero() for name in FORM_VARS}
    coeffs[uvar] = coeffs[uvar] + cu
    coeffs[vvar] = coeffs[vvar] + cv
    coeffs[unit] = -(cu * aff[uvar] + cv * aff[vvar])
    return Line.from_coeffs(field, coeffs["x"], coeffs["y"], coeffs["z"])


# ---------------------------------------------------------------------------
# intersection multiplicity (Fulton's algorithm)
# ---------------------------------------------------------------------------

def intersection_multiplicity(F: Form3, G: Form3, p: Point2):
    """Local intersection number at p; INFINITE on a shared component
    through p.  Satisfies the standard axioms (symmetry, additivity on
    products, invariance under G -> G + H*F, I(x, y) = 1)."""
    if F.is_zero() or G.is_zero():
        nonzero = G if F.is_zero() else F
        if nonzero.is_zero() or nonzero.eval_point(p.coords).is_zero():
            return INFINITE
        return 0
    chart = _chart_for(p)
    f = _localize(F, p, chart)
    g = _localize(G, p, chart)
    uvar, vvar = chart[1], chart[2]
    h = gcd_bivariate(f, g)
    if h.total_degree() > 0:
        if h.eval({k: F.field.zero() for k in FORM_VARS}).is_zero():
            return INFINITE
        f = f.divexact(h)
        g = g.divexact(h)
    return _fulton(f, g, uvar, vvar)


def _fulton(f: MPoly, g: MPoly, uvar, vvar):
    field = f.field
    zero_env = {k: field.zero() for k in FORM_VARS}
    total = 0
    while True:
        if f.is_zero() or g.is_zero():
            return INFINITE
        if not f.eval(zero_env).is_zero() or not g.eval(zero_env).is_zero():
            return total
        fu = f.subs({vvar: field.zero()})
        gu = g.subs({vvar: field.zero()})
        if fu.is_zero() and gu.is_zero():
            return INFINITE
        if fu.is_zero():
            f, g = g, f
            fu, gu = gu, fu
        if gu.is_zero():
            v = MPoly.variable(field, f.vars, vvar)
            g = g.divexact(v)
            fu_c = fu.as_univariate(uvar)
            ordv = next(i for i, c in enumerate(fu_c) if not c.is_zero())
            total += ordv
            continue
        fc = fu.as_univariate(uvar)
        gc = gu.as_univariate(uvar)
        if len(fc) > len(gc):
            f, g = g, f
            fc, gc = gc, fc
        c = gc[-1] / fc[-1]
        k = len(gc) - len(fc)
        u = MPoly.variable(field, f.vars, uvar)
        g = g - f * u ** k * c


# ---------------------------------------------------------------------------
# tangents and third intersections
# ---------------------------------------------------------------------------

def tangent_line(C: Cubic, p: Point2) -> Line:
    if not on_curve(C, p):
        raise NotOnCurve(format_point(p))
    gx, gy, gz = C.gradient_at(p)
    if gx.is_zero() and gy.is_zero() and gz.is_zero():
        raise NotSmoothPoint(format_point(p))
    return Line.from_coeffs(C.field, gx, gy, gz)


def _restrict_to_line(F: Form3, line: Line):
    """Binary form coefficients of F(s*A + u*B) by s-degree (ascending), with
    (A, B) the line's deterministic basis points."""
    A, B = line.basis_points()
    field = F.field
    d = F.degree
    out = [field.zero()] * (d + 1)
    cache_a, cache_b = {}, {}
    for e, c in F.poly.terms.items():
        # expand prod (s*A_i + u*B_i)^(e_i); collect by s-degree
        term = {0: c}
        for i, k in enumerate(e):
            if not k:
                continue
            a, b = A.coords[i], B.coords[i]
            binom = {}
            # (s*a + u*b)^k
            coef = field.one()
            from math import comb
            for j in range(k + 1):
                binom[j] = field.from_rat(comb(k, j)) * a ** j * b ** (k - j)
            new = {}
            for d1, c1 in term.items():
                for d2, c2 in binom.items():
                    new[d1 + d2] = new.get(d1 + d2, field.zero()) + c1 * c2
            term = new
        for deg_s, cc in term.items():
            out[deg_s] = out[deg_s] + cc
    return out, A, B


def _line_param_of_point(line: Line, p: Point2):
    """(s, u) with p ~ s*A + u*B."""
    A, B = line.basis_points()
    field = p.field
    rows = []
    rhs = []
    for i in range(3):
        rows.append([A.coords[i], B.coords[i]])
        rhs.append(p.coords[i])
    sol = linalg.solve(rows, rhs, field)
    if sol is None:
        raise InconsistentKnownPoints(f"{format_point(p)} not on the line")
    return sol[0], sol[1]


def _binary_divide_root(coeffs, s0, u0, field):
    """Divide the binary form sum c_i s^i u^(n-i) by (u0*s - s0*u); exact.

    Returns the quotient coefficient list or raises InconsistentKnownPoints."""
    n = len(coeffs) - 1
    if u0.is_zero():
        # root (1:0): form divisible by u  <=> leading s^n coefficient zero
        if not coeffs[-1].is_zero():
            raise InconsistentKnownPoints("claimed root is not a root")
        return [c * (-s0).inverse() for c in coeffs[:-1]]
    # synthetic division in s after scaling: root s/u = s0/u0
    r = s0 / u0
    out = []
    acc = field.zero()
    for c in reversed(coeffs):
        acc = acc * r + c
        out.append(acc)
    rem = out.pop()
    if not rem.is_zero():
        raise InconsistentKnownPoints("claimed root is not a root")
    q = list(reversed(out))  # coefficients of s^i u^(n-1-i), scaled
    return [c * u0.inverse() for c in q]


def third_intersection(C: Cubic, line: Line, known) -> Point2:
    """The remaining intersection point of C with the line after dividing out
    the known multiset (at most two points, multiplicity respected)."""
    field = C.field
    coeffs, A, B = _restrict_to_line(C.form, line)
    if all(c.is_zero() for c in coeffs):
        raise LineComponent(str(line))
    for q in known:
        s0, u0 = _line_param_of_point(line, q)
        coeffs = _binary_divide_root(coeffs, s0, u0, field)
    if len(coeffs) != 2:
        raise InconsistentKnownPoints("need exactly two known intersections")
    c0, c1 = coeffs  # c1*s + c0*u = 0 -> (s:u) = (-c0 : c1)... careful: form = c0*u + c1*s
    s_r, u_r = -c0, c1
    if s_r.is_zero() and u_r.is_zero():
        raise InternalContradiction("degenerate residual root")
    coords = [s_r * a + u_r * b for a, b in zip(A.coords, B.coords)]
    return Point2(field, coords)


# ---------------------------------------------------------------------------
# singularity structure
# ---------------------------------------------------------------------------

def _binary_common_roots(Aform: MPoly, Bform: MPoly, var1, var2, field):
    """Projective common roots of two binary forms in (var1, var2); returns
    (points-as-(a,b) pairs, complete flag)."""
    roots = []
    complete = True
    g = gcd_bivariate(Aform, Bform)
    if g.total_degree() == 0:
        return [], True
    # root at (0:1) means var1 divides g
    if g.subs({var1: field.zero()}).is_zero():
        roots.append((field.zero(), field.one()))
        v1 = MPoly.variable(field, g.vars, var1)
        while g.subs({var1: field.zero()}).is_zero():
            g = g.divexact(v1)
    if g.total_degree() > 0:
        uni = g.subs({var1: field.one()})
        found, _leftover, comp = policy_roots(uni, var2)
        for r, _m in found:
            roots.append((field.one(), r))
        complete = comp
    return roots, complete


def singular_points(C: Cubic):
    """Field-rational singular points via pairwise elimination; returns
    (list of Point2, complete flag).  The flag is False when root extraction
    could not certify exhaustiveness (or the singular locus is not finite)."""
    field = C.field
    fx, fy, fz = C.fx.poly, C.fy.poly, C.fz.poly
    if is_smooth(C):
        return [], True
    complete = True
    candidates = set()
    partials = [p for p in (fx, fy, fz) if not p.is_zero()]
    zdeps = [p for p in partials if p.degree_in("z") >= 0]
    resultants = []
    if len(partials) >= 2:
        base = partials[0]
        for other in partials[1:]:
            if base.degree_in("z") > 0 or other.degree_in("z") > 0:
                r = resultant_main(base, other, "z")
            else:
                r = gcd_bivariate(base, other)  # both z-free already
            if not r.is_zero() and r.total_degree() > 0:
                resultants.append(r)
    if len(resultants) >= 2:
        xy_roots, comp = _binary_common_roots(resultants[0], resultants[1],
                                              "x", "y", field)
        complete = comp
    elif len(resultants) == 1:
        xy_roots, comp = _binary_common_roots(resultants[0], resultants[0],
                                              "x", "y", field)
        complete = False  # cannot certify finiteness
    else:
        xy_roots = []
        complete = False
    for (x0, y0) in xy_roots:
        subs = {"x": x0, "y": y0}
        us = [p.subs(subs) for p in (fx, fy, fz)]
        nonzero = [u for u in us if not u.is_zero()]
        if not nonzero:
            complete = False  # whole line of candidates
            continue
        g = nonzero[0]
        for u in nonzero[1:]:
            g = gcd_univariate(g, u, "z")
        if g.degree_in("z") <= 0:
            continue
        found, _leftover, comp2 = policy_roots(g, "z")
        complete = complete and comp2
        for z0, _m in found:
            candidates.add(Point2(field, [x0, y0, z0]))
    # the elimination cannot represent (0:0:1); coordinate points checked directly
    for special in ([0, 0, 1], [0, 1, 0], [1, 0, 0]):
        q = Point2(field, special)
        if all(g.is_zero() for g in C.gradient_at(q)):
            candidates.add(q)
    pts = [p for p in candidates
           if all(g.is_zero() for g in C.gradient_at(p))]
    pts.sort(key=lambda p: tuple(str(c) for c in p.coords))
    return pts, complete


def sing_type(C: Cubic, p: Point2) -> SingInfo:
    """Type the singular point by its tangent cone: distinct linear factors
    give a node, a double line not contained in C a cusp, else 'other'."""
    if is_smooth_at(C, p):
        raise NotSingular(format_point(p))
    field = C.field
    chart = _chart_for(p)
    local = _localize(C.form, p, chart)
    uvar, vvar = chart[1], chart[2]
    iu, iv = FORM_VARS.index(uvar), FORM_VARS.index(vvar)
    qa = qb = qc = field.zero()
    for e, c in local.terms.items():
        if sum(e) == 2:
            if e[iu] == 2:
                qa = c
            elif e[iv] == 2:
                qc = c
            else:
                qb = c
    if qa.is_zero() and qb.is_zero() and qc.is_zero():
        return SingInfo(p, "other")
    disc = qb * qb - qa * qc * 4
    if not disc.is_zero():
        tangents = _split_tangent_cone(field, chart, p, qa, qb, qc)
        return SingInfo(p, "node", tangents)
    # perfect-square cone: q = (cu*u + cv*v)^2 up to scale
    if not qa.is_zero():
        cu, cv = qa, qb * field.from_rat(Fraction(1, 2))
        # (cu*u + cv*v)^2 = qa^2 u^2 + qa*qb uv + (qb^2/4) v^2; rescale to compare
        line = _delocalize_line(field, chart, p, qa * 2, qb)
    else:
        line = _delocalize_line(field, chart, p, qb, qc * 2)
    try:
        C.form.poly.divexact(line.form.poly)
        return SingInfo(p, "other", (line,))
    except ValueError:
        return SingInfo(p, "cusp", (line,))


def _split_tangent_cone(field, chart, p, qa, qb, qc):
    """Factor qa*u^2 + qb*uv + qc*v^2 into field lines when possible."""
    if qa.is_zero():
        # v * (qb*u + qc*v)
        return (_delocalize_line(field, chart, p, field.zero(), field.one()),
                _delocalize_line(field, chart, p, qb, qc))
    quad = MPoly.from_univariate(field, FORM_VARS, "x", [qc, qb, qa])
    found, _left, _comp = policy_roots(quad, "x")
    if sum(m for _r, m in found) < 2:
        return ()
    lines = []
    for r, m in found:
        for _ in range(m):
            lines.append(_delocalize_line(field, chart, p, field.one(), -r))
    return tuple(lines[:2])


# ---------------------------------------------------------------------------
# flexes and the group law
# ---------------------------------------------------------------------------

def is_flex(C: Cubic, p: Point2) -> bool:
    if not on_curve(C, p):
        raise NotOnCurve(format_point(p))
    if not is_smooth_at(C, p):
        raise NotSmoothPoint(format_point(p))
    return hessian_det(C.form).eval_point(p.coords).is_zero()


def find_flexes(C: Cubic):
    """Field-rational flexes (smooth points of C on its Hessian); returns
    (points, complete flag)."""
    field = C.field
    H = hessian_det(C.form)
    R1 = resultant_main(C.form.poly, H.poly, "z")
    pts = []
    complete = True
    if R1.is_zero() or R1.total_degree() == 0:
        return [], False
    xy_roots, comp = _binary_common_roots(R1, R1, "x", "y", field)
    complete = comp
    for (x0, y0) in xy_roots:
        subs = {"x": x0, "y": y0}
        f_u = C.form.poly.subs(subs)
        h_u = H.poly.subs(subs)
        if f_u.is_zero() or h_u.is_zero():
            g = f_u if h_u.is_zero() else h_u
            if g.is_zero():
                complete = False
                continue
        else:
            g = gcd_univariate(f_u, h_u, "z")
        if g.degree_in("z") <= 0:
            continue
        found, _leftover, comp2 = policy_roots(g, "z")
        complete = complete and comp2
        for z0, _m in found:
            q = Point2(field, [x0, y0, z0])
            if on_curve(C, q) and is_smooth_at(C, q) \
                    and hessian_det(C.form).eval_point(q.coords).is_zero():
                pts.append(q)
    # the (x,y)-elimination cannot represent (0:0:1)
    for special in ([0, 0, 1], [0, 1, 0], [1, 0, 0]):
        q = Point2(field, special)
        if on_curve(C, q) and is_smooth_at(C, q) \
                and H.eval_point(q.coords).is_zero():
            pts.append(q)
    seen = []
    for q in pts:
        if q not in seen:
            seen.append(q)
    seen.sort(key=lambda p: tuple(str(c) for c in p.coords))
    return seen, complete


def _chord_third(C: Cubic, P: Point2, Q: Point2) -> Point2:
    line = tangent_line(C, P) if P == Q else Line.through(P, Q)
    return third_intersection(C, line, [P, Q])


def group_add(C: Cubic, O: Point2, P: Point2, Q: Point2) -> Point2:
    """Chord-tangent sum with origin O (a flex): P + Q = third(third(P,Q), O)."""
    if not is_smooth(C):
        raise NotSmoothCurve(str(C.form))
    if not is_flex(C, O):
        raise NotSmoothPoint(f"origin {format_point(O)} is not a flex")
    for X in (P, Q):
        if not on_curve(C, X):
            raise NotOnCurve(format_point(X))
    R = _chord_third(C, P, Q)
    return _chord_third(C, R, O)


def group_neg(C: Cubic, O: Point2, P: Point2) -> Point2:
    return _chord_third(C, P, O)


def scalar_mul(C: Cubic, O: Point2, n: int, P: Point2) -> Point2:
    """n*P by double-and-add; n may be any integer."""
    if n < 0:
        return scalar_mul(C, O, -n, group_neg(C, O, P))
    acc = O
    base = P
    while n:
        if n & 1:
            acc = group_add(C, O, acc, base)
        base = group_add(C, O, base, base)
        n >>= 1
    return acc


# ---------------------------------------------------------------------------
# ninefold-contact kernel and the order-9 test
# ---------------------------------------------------------------------------

def nine_contact_kernel(C: Cubic, p: Point2):
    """Basis of the space of cubics G with I_p(G, C) >= 9, via nine linear
    contact conditions along the branch of C at p.  Returns (forms, dim)."""
    if not on_curve(C, p):
        raise NotOnCurve(format_point(p))
    field = C.field
    order = 9
    xs, ys, zs = branch_parametrization(C.form, p.coords, order)
    rows = [[] for _ in range(order)]
    for e in monomials_of_degree(3):
        mono = form_from_coeffs(field, 3, [field.one() if e == e2 else field.zero()
                                           for e2 in monomials_of_degree(3)])
        r = eval_form_on_parametrization(mono, xs, ys, zs, order)
        for m in range(order):
            rows[m].append(r[m])
    basis = linalg.kernel_basis(rows, field, ncols=10)
    forms = [form_from_coeffs(field, 3, v) for v in basis]
    return forms, len(forms)


def type9_test(C: Cubic, p: Point2) -> str:
    """'type9', 'flex' or 'neither'; decided by the contact-kernel dimension
    (no group law, so valid over any exact field)."""
    if not is_smooth(C):
        raise NotSmoothCurve(str(C.form))
    if not on_curve(C, p):
        raise NotOnCurve(format_point(p))
    _forms, dim = nine_contact_kernel(C, p)
    if dim == 1:
        return "neither"
    if dim == 2:
        return "flex" if is_flex(C, p) else "type9"
    raise InternalContradiction(f"contact kernel of dimension {dim}")


# ---------------------------------------------------------------------------
# linear factors
# ---------------------------------------------------------------------------

def linear_factor(f: Form3):
    """A linear factor of f with field coefficients, with its cofactor, or
    None when none is found over the field (search is exhaustive for factors
    whose coefficient ratios fall in the root policy's classes)."""
    if f.is_zero():
        from .errors import ZeroInput
        raise ZeroInput("zero form")
    field = f.field
    candidates = []
    # normalization z + a*x + b*y: substitute z = -(a*x + b*y)
    x = MPoly.variable(field, FORM_VARS, "x")
    y = MPoly.variable(field, FORM_VARS, "y")
    avars = ("x", "y")

    def try_division(line):
        try:
            cof = f.poly.divexact(line.form.poly)
            return Line(line.form), Form3(cof)
        except ValueError:
            return None

    # lines not containing the point (0:0:1) direction: z = a*x + b*y
    # restriction f(x, y, a*x+b*y) == 0 gives deg+1 equations in (a, b)
    deg = f.degree
    # build restriction with symbolic a, b by working in an auxiliary ring
    aux_vars = ("x", "y", "z")  # reuse; a, b live as extra unknowns below
    # solve by brute elimination: the coefficient equations are forms in (a, b)
    # of degree <= deg; use two resultants and the root policy.
    eqs = _restriction_equations(f, "z")
    sols = _solve_two_unknowns(eqs, field)
    for (a0, b0) in sols:
        line = Line.from_coeffs(field, -a0, -b0, field.one())
        got = try_division(line)
        if got:
            return got
    # lines through (0:0:1) not equal to x=0: y = a*x  ->  line y - a*x
    eqs = _restriction_equations(f, "y")
    for (a0,) in _solve_one_unknown(eqs, field):
        line = Line.from_coeffs(field, -a0, field.one(), field.zero())
        got = try_division(line)
        if got:
            return got
    got = try_division(Line.from_coeffs(field, field.one(), field.zero(), field.zero()))
    if got:
        return got
    return None


def _restriction_equations(f: Form3, subst_var):
    """Coefficient equations (as MPolys in unknown vars 'x','y' reused as the
    two parameters) for `subst_var` = a*v1 + b*v2 dividing f."""
    field = f.field
    if subst_var == "z":
        par = {"z": ("x", "y")}
        a = MPoly.variable(field, FORM_VARS, "x")
        b = MPoly.variable(field, FORM_VARS, "y")
        # f(x, y, a x + b y): collect in (x, y); coefficients are polys in (a, b)
        out = {}
        for e, c in f.poly.terms.items():
            ex, ey, ez = e
            # (a x + b y)^ez expands; accumulate coefficient of x^i y^j as poly in a,b
            from math import comb
            for k in range(ez + 1):
                # a^k b^(ez-k) x^k y^(ez-k)
                key = (ex + k, ey + ez - k)
                coef = out.setdefault(key, MPoly.zero(field, FORM_VARS))
                out[key] = coef + (a ** k) * (b ** (ez - k)) * (c * comb(ez, k))
        return list(out.values())
    if subst_var == "y":
        a = MPoly.variable(field, FORM_VARS, "x")
        out = {}
        for e, c in f.poly.terms.items():
            ex, ey, ez = e
            key = (ex + ey, ez)
            coef = out.setdefault(key, MPoly.zero(field, FORM_VARS))
            out[key] = coef + (a ** ey) * c
        return list(out.values())
    raise ValueError(subst_var)


def _solve_two_unknowns(eqs, field):
    """Common zeros (a, b) of polynomials in the reused vars x=a, y=b."""
    eqs = [e for e in eqs if not e.is_zero()]
    if not eqs:
        return []
    if len(eqs) == 1:
        return []
    r1 = resultant_main(eqs[0], eqs[1], "x")
    for e in eqs[2:]:
        if r1.is_zero():
            r1 = resultant_main(eqs[0], e, "x")
    sols = []
    if r1.is_zero():
        return []
    if r1.total_degree() == 0:
        return []
    found, _l, _c = policy_roots(r1, "y")
    for b0, _m in found:
        unis = [e.subs({"y": b0}) for e in eqs]
        unis = [u for u in unis if not u.is_zero()]
        if not unis:
            continue
        g = unis[0]
        for u in unis[1:]:
            g = gcd_univariate(g, u, "x")
        if g.degree_in("x") <= 0:
            if g.is_zero():
                pass
            continue
        found2, _l2, _c2 = policy_roots(g, "x")
        for a0, _m2 in found2:
            sols.append((a0, b0))
    return sols


def _solve_one_unknown(eqs, field):
    eqs = [e for e in eqs if not e.is_zero()]
    if not eqs:
        return []
    g = eqs[0]
    for e in eqs[1:]:
        g = gcd_univariate(g, e, "x")
    if g.degree_in("x") <= 0:
        return []
    found, _l, _c = policy_roots(g, "x")
    return [(r,) for r, _m in found]


# ---------------------------------------------------------------------------
# invariants and the j-invariant
# ---------------------------------------------------------------------------

def aronhold_ST(C: Cubic):
    """The degree-4 and degree-6 invariants (see invariants module docs for
    the normalization)."""
    return aronhold_S(C.form), aronhold_T(C.form)


def _weierstrass_from_flex(C: Cubic, flex: Point2):
    """Long-Weierstrass invariants (a1, a2, a3, a4, a6) after moving the flex
    to (0:1:0) with tangent z = 0."""
    field = C.field
    grad = C.gradient_at(flex)
    rows1 = linalg.kernel_basis([list(grad)], field, ncols=3)
    # pick a kernel vector independent of the flex itself
    pvec = list(flex.coords)
    row1 = None
    for v in rows1:
        mat = [v, pvec]
        if linalg.rank(mat, field) == 2:
            row1 = v
            break
    if row1 is None:
        raise InternalContradiction("flex gradient degenerate")
    basis_rows = None
    from .polyforms import ProjMap
    for e in ([1, 0, 0], [0, 1, 0], [0, 0, 1]):
        cand = [row1, pvec, [field.from_rat(c) for c in e]]
        try:
            M = ProjMap(field, cand)
            basis_rows = M
            break
        except Exception:
            continue
    from .polyforms import substitute_linear
    Fp = substitute_linear(C.form, basis_rows)
    c = lambda e: Fp.coeff(e)
    zero_checks = [c((0, 3, 0)), c((1, 2, 0)), c((2, 1, 0))]
    if any(not v.is_zero() for v in zero_checks):
        raise InternalContradiction("flex normalization failed")
    A = c((0, 2, 1))
    D = c((3, 0, 0))
    if A.is_zero() or D.is_zero():
        raise InternalContradiction("degenerate Weierstrass frame")
    Ai = A.inverse()
    b = c((1, 1, 1)) * Ai
    cc = c((0, 1, 2)) * Ai
    d = -(D * Ai)
    e_ = -(c((2, 0, 1)) * Ai)
    g = -(c((1, 0, 2)) * Ai)
    h = -(c((0, 0, 3)) * Ai)
    a1, a3 = b, cc * d
    a2, a4, a6 = e_, g * d, h * d * d
    return a1, a2, a3, a4, a6


def _j_from_long_weierstrass(field, a1, a2, a3, a4, a6):
    b2 = a1 * a1 + a2 * 4
    b4 = a4 * 2 + a1 * a3
    b6 = a3 * a3 + a6 * 4
    c4 = b2 * b2 - b4 * 24
    c6 = -(b2 ** 3) + b2 * b4 * 36 - b6 * 216
    disc = (c4 ** 3 - c6 ** 2) * field.from_rat(Fraction(1, 1728))
    if disc.is_zero():
        raise NotSmoothCurve("vanishing Weierstrass discriminant")
    return c4 ** 3 / disc


_KAPPA_CACHE = []


def _kappa() -> Fraction:
    """Calibration constant for j = kappa * S^3 / (64 S^3 - T^2), computed at
    run time from flex-based j values on the x^3+y^3+z^3+6m*xyz family."""
    if _KAPPA_CACHE:
        return _KAPPA_CACHE[0]
    from .polyforms import parse_form
    vals = set()
    for m in (2, 3, 5):
        Cm = Cubic(parse_form(f"x^3 + y^3 + z^3 + {6*m}*x*y*z", QQ))
        flex = Point2(QQ, [1, -1, 0])
        a = _weierstrass_from_flex(Cm, flex)
        j = _j_from_long_weierstrass(QQ, *a).as_rational()
        S = aronhold_S(Cm.form).as_rational()
        D = disc_cubic(Cm.form).as_rational()
        vals.add(j * D / S ** 3)
    if len(vals) != 1:
        raise InternalContradiction(f"kappa calibration inconsistent: {vals}")
    _KAPPA_CACHE.append(vals.pop())
    return _KAPPA_CACHE[0]


def j_invariant(C: Cubic, path="auto"):
    """j of a smooth cubic; path 'flex' (Weierstrass reduction at a
    field-rational flex), 'invariant' (kappa * S^3/disc), or 'auto'."""
    if not is_smooth(C):
        raise NotSmoothCurve(str(C.form))
    field = C.field
    if path in ("flex", "auto"):
        flexes, _complete = find_flexes(C)
        if flexes:
            a = _weierstrass_from_flex(C, flexes[0])
            return _j_from_long_weierstrass(field, *a)
        if path == "flex":
            raise JUnavailable("no field-rational flex")
    S = aronhold_S(C.form)
    D = disc_cubic(C.form)
    return S ** 3 * field.from_rat(_kappa()) / D
