"""Pencils of plane cubics: base locus, discriminant profile, singular-member
inventory, classification, isotriviality.

The discriminant of the member family is computed by eliminating x, y, z from
the three partial quadrics with the Macaulay resultant (the 15x15 degree-4
matrix divided by its 3x3 extraneous minor), falling back to a deterministic
shear list when the minor degenerates.  The result is the honest degree-12
discriminant in the pencil parameter: no spurious factors and true root
multiplicities.  Content is stripped; nothing else needs stripping.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .cubiccurve import (Cubic, Line, Point2, SingInfo, intersection_multiplicity,
                         is_flex, is_smooth, linear_factor, sing_type,
                         singular_points, tangent_line, type9_test)
from .errors import (BadParam, ClassificationContradiction, GenericSingular,
                     InternalContradiction, NotAPencilOfCurves)
from .exactfield import AlgNum
from .invariants import disc_cubic, member_disc_poly, member_S_poly
from .polyforms import (FORM_VARS, Form3, MPoly, bareiss_det, form_coeff_vector,
                        form_from_coeffs, gcd_bivariate, gcd_univariate,
                        monomials_of_degree, policy_roots, squarefree_layers,
                        squarefree_profile)

TYPE_V = "TypeV"
FLEX_TYPE = "FlexType"
NOT_ONE_BASE_POINT = "NotOneBasePoint"
GENERIC_SINGULAR = "GenericSingular"


class Param:
    """Point of the parameter line, normalized like a projective point."""

    __slots__ = ("lam", "mu")

    def __init__(self, field, lam, mu):
        lam = lam if isinstance(lam, AlgNum) else field.from_rat(lam)
        mu = mu if isinstance(mu, AlgNum) else field.from_rat(mu)
        if lam.is_zero() and mu.is_zero():
            raise BadParam("(0:0)")
        lead = lam if not lam.is_zero() else mu
        inv = lead.inverse()
        object.__setattr__(self, "lam", lam * inv)
        object.__setattr__(self, "mu", mu * inv)

    def __setattr__(self, *a):
        raise AttributeError("Param is immutable")

    def __eq__(self, other):
        return isinstance(other, Param) and self.lam == other.lam and self.mu == other.mu

    def __hash__(self):
        return hash((self.lam, self.mu))

    def is_infinity(self):
        return self.lam.is_zero()

    def __repr__(self):
        return f"({self.lam} : {self.mu})"


class Pencil:
    """Span of two independent cubic forms; member(l:m) = l*gen0 + m*gen1."""

    __slots__ = ("gen0", "gen1", "field", "_canon")

    def __init__(self, gen0: Form3, gen1: Form3):
        if gen0.field != gen1.field:
            raise NotAPencilOfCurves("generators over different fields")
        if gen0.degree != 3 or gen1.degree != 3:
            raise NotAPencilOfCurves("generators must be cubics")
        rows = [form_coeff_vector(gen0, 3), form_coeff_vector(gen1, 3)]
        canon = linalg.row_space_canonical(rows, gen0.field)
        if len(canon) != 2:
            raise NotAPencilOfCurves("generators are dependent")
        object.__setattr__(self, "gen0", gen0)
        object.__setattr__(self, "gen1", gen1)
        object.__setattr__(self, "field", gen0.field)
        object.__setattr__(self, "_canon", tuple(canon))

    def __setattr__(self, *a):
        raise AttributeError("Pencil is immutable")

    def member(self, lam, mu=None) -> Cubic:
        if mu is None and isinstance(lam, Param):
            lam, mu = lam.lam, lam.mu
        par = Param(self.field, lam, mu)
        form = self.gen0 * par.lam + self.gen1 * par.mu
        if form.is_zero():
            raise InternalContradiction("zero member of an honest pencil")
        return Cubic(form)

    def contains(self, f: Form3) -> bool:
        rows = [list(r) for r in self._canon]
        rows.append(form_coeff_vector(f, 3))
        return linalg.rank(rows, self.field) == 2

    def param_of(self, f: Form3):
        """The parameter with member ~ f, or None."""
        cols = list(zip(form_coeff_vector(self.gen0, 3),
                        form_coeff_vector(self.gen1, 3)))
        sol = linalg.solve([list(c) for c in cols], form_coeff_vector(f, 3), self.field)
        if sol is None:
            return None
        return Param(self.field, sol[0], sol[1])

    def transformed(self, M) -> "Pencil":
        from .polyforms import substitute_linear
        return Pencil(substitute_linear(self.gen0, M), substitute_linear(self.gen1, M))

    def __eq__(self, other):
        """Equality as 2-dimensional subspaces (exact)."""
        return isinstance(other, Pencil) and self._canon == other._canon

    def __hash__(self):
        return hash(self._canon)

    def __repr__(self):
        return f"Pencil({self.gen0}; {self.gen1})"


# ---------------------------------------------------------------------------
# discriminant of the member family (Macaulay elimination)
# ---------------------------------------------------------------------------

class _UPoly:
    """Univariate polynomial over the field, ascending list; determinant fodder."""

    __slots__ = ("field", "cs")

    def __init__(self, field, cs):
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.cs = cs

    def is_zero(self):
        return not self.cs

    def __mul__(self, other):
        if not self.cs or not other.cs:
            return _UPoly(self.field, [])
        out = [self.field.zero()] * (len(self.cs) + len(other.cs) - 1)
        for i, a in enumerate(self.cs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.cs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return _UPoly(self.field, out)

    def __sub__(self, other):
        n = max(len(self.cs), len(other.cs))
        zero = self.field.zero()
        out = [(self.cs[i] if i < len(self.cs) else zero)
               - (other.cs[i] if i < len(other.cs) else zero) for i in range(n)]
        return _UPoly(self.field, out)

    def __neg__(self):
        return _UPoly(self.field, [-c for c in self.cs])

    def divexact(self, other):
        a = list(self.cs)
        b = other.cs
        if not b:
            raise ZeroDivisionError
        q = [self.field.zero()] * max(0, len(a) - len(b) + 1)
        inv = b[-1].inverse()
        while a and len(a) >= len(b):
            c = a[-1] * inv
            d = len(a) - len(b)
            q[d] = c
            for i, bc in enumerate(b):
                a[d + i] = a[d + i] - c * bc
            while a and a[-1].is_zero():
                a.pop()
        if a:
            raise InternalContradiction("inexact division in Bareiss")
        return _UPoly(self.field, q)


_SHEARS = [
    None,
    ((1, 0, 0), (1, 1, 0), (1, 0, 1)),
    ((1, 0, 1), (1, 1, 0), (0, 1, 1)),
    ((1, 1, 1), (1, 1, 0), (1, 0, 1)),
    ((1, 2, 0), (1, 1, 1), (1, 0, 1)),
    ((2, 1, 1), (1, 3, 1), (0, 1, 1)),
]


def _shear_form(f: Form3, rows):
    from .polyforms import ProjMap, substitute_linear
    M = ProjMap(f.field, rows)
    return substitute_linear(f, M)


def _macaulay_disc(gen0: Form3, gen1: Form3):
    """disc(t) of gen0 + t*gen1 as an ascending AlgNum list, or None when all
    shears leave the extraneous minor degenerate."""
    field = gen0.field
    tvars = ("x", "y", "z", "t")

    for rows in _SHEARS:
        g0 = gen0 if rows is None else _shear_form(gen0, rows)
        g1 = gen1 if rows is None else _shear_form(gen1, rows)
        # member polynomial in the 4-variable ring
        lift = lambda f: MPoly(field, tvars,
                               {e + (0,): c for e, c in f.poly.terms.items()})
        t = MPoly.variable(field, tvars, "t")
        member = lift(g0) + t * lift(g1)
        Ps = [member.derivative(v) for v in FORM_VARS]
        monos4 = []
        for a in range(4, -1, -1):
            for b in range(4 - a, -1, -1):
                monos4.append((a, b, 4 - a - b))

        def entry(rowpoly, m):
            # coefficient of x^m0 y^m1 z^m2; a polynomial in t
            out = {}
            for e, c in rowpoly.terms.items():
                if e[:3] == m:
                    out[e[3]] = c
            n = max(out, default=-1)
            return _UPoly(field, [out.get(k, field.zero()) for k in range(n + 1)])

        rowpolys = []
        nonreduced = []
        xv = MPoly.variable(field, tvars, "x")
        yv = MPoly.variable(field, tvars, "y")
        zv = MPoly.variable(field, tvars, "z")
        for m in monos4:
            divs = [i for i in range(3) if m[i] >= 2]
            i = divs[0]
            q = list(m)
            q[i] -= 2
            rowpolys.append(xv ** q[0] * yv ** q[1] * zv ** q[2] * Ps[i])
            if len(divs) >= 2:
                nonreduced.append(m)
        zero = _UPoly(field, [])
        one = _UPoly(field, [field.one()])
        idxs = [monos4.index(m) for m in nonreduced]
        minor = [[entry(rowpolys[i], monos4[j]) for j in idxs] for i in idxs]
        dminor = bareiss_det(minor, zero, one, lambda p: p.is_zero(),
                             lambda a, b: a.divexact(b))
        if dminor.is_zero():
            continue
        M = [[entry(r, m) for m in monos4] for r in rowpolys]
        dM = bareiss_det(M, zero, one, lambda p: p.is_zero(),
                         lambda a, b: a.divexact(b))
        if dM.is_zero():
            return []  # identically singular family
        disc = dM.divexact(dminor)
        return disc.cs
    return None


class DiscProfile:
    """Discriminant data of a pencil: the degree <= 12 polynomial in t for the
    (1:t) chart, the multiplicity at (0:1), the square-free profile (with the
    infinity layer merged in), resolved roots, and a completeness flag."""

    __slots__ = ("disc", "infinity_mult", "profile", "roots_found", "complete")

    def __init__(self, disc, infinity_mult, profile, roots_found, complete):
        self.disc = disc
        self.infinity_mult = infinity_mult
        self.profile = profile
        self.roots_found = roots_found
        self.complete = complete

    def multiplicity_multiset(self):
        """Sorted multiplicities counted per parameter (layer degree expands)."""
        out = []
        for mult, deg in self.profile:
            out.extend([mult] * deg)
        return sorted(out, reverse=True)

    def singular_parameter_count(self):
        return sum(deg for _m, deg in self.profile)

    def __repr__(self):
        return (f"DiscProfile(profile={self.profile}, "
                f"infinity={self.infinity_mult}, complete={self.complete})")


def discriminant_profile(P: Pencil) -> DiscProfile:
    field = P.field
    cs = _macaulay_disc(P.gen0, P.gen1)
    cs_rev = _macaulay_disc(P.gen1, P.gen0)
    if cs is None or cs_rev is None:
        raise InternalContradiction("Macaulay minor degenerate for all shears")
    if not cs or not cs_rev:
        raise GenericSingular("every member is singular")
    # cross-check against the invariant-theoretic discriminant (cheap and exact)
    inv_disc = member_disc_poly(P.gen0, P.gen1)
    if inv_disc.is_zero():
        raise GenericSingular("every member is singular")
    uvars = ("t",)
    disc = MPoly.from_univariate(field, uvars, "t", cs)
    inf_mult = next(i for i, c in enumerate(cs_rev) if not c.is_zero())
    if disc.degree_in("t") + inf_mult != 12:
        raise InternalContradiction("discriminant degree accounting broke")
    profile = squarefree_profile(disc, "t") if disc.degree_in("t") > 0 else []
    if inf_mult:
        profile = sorted(profile + [(inf_mult, 1)])
    roots, _leftover, complete = policy_roots(disc, "t")
    roots_found = [(Param(field, field.one(), r), m) for r, m in roots]
    if inf_mult:
        roots_found.append((Param(field, 0, 1), inf_mult))
    return DiscProfile(disc, inf_mult, profile, roots_found, complete)


# ---------------------------------------------------------------------------
# base locus
# ---------------------------------------------------------------------------

class BaseLocus:
    __slots__ = ("points", "single_nine_point", "complete")

    def __init__(self, points, single_nine_point, complete):
        self.points = points            # list of (Point2, multiplicity)
        self.single_nine_point = single_nine_point
        self.complete = complete

    def __repr__(self):
        return f"BaseLocus({self.points}, nine={self.single_nine_point})"


def _common_component(g0: Form3, g1: Form3):
    from .cubiccurve import _localize  # chart helper reused on forms
    field = g0.field
    for unit in FORM_VARS:
        one = Point2(field, [1 if v == unit else 0 for v in FORM_VARS])
        f = _localize(g0, one, (unit,) + tuple(v for v in FORM_VARS if v != unit))
        g = _localize(g1, one, (unit,) + tuple(v for v in FORM_VARS if v != unit))
        h = gcd_bivariate(f, g)
        if h.total_degree() > 0:
            return True
    return False


def _ninth_power_root(R: MPoly, var1, var2, field):
    """If the binary form R equals c * L^9 for a linear L, return L's
    projective root (a, b) with L ~ b*var1 - a*var2; else None."""
    deg = R.total_degree()
    if deg != 9:
        return None
    d1 = R.degree_in(var1)
    if d1 == 0:
        return (field.zero(), field.one())
    # root (a : 1) with a from the derivative structure, then verified
    cs = R.univariate_coeffs(var2)
    # R = sum cs[k] * var2^k, cs[k] a form in var1
    c9 = R.coeff(tuple(9 if v == var1 else 0 for v in R.vars))
    if d1 == 9 and not c9.is_zero():
        c8 = R.coeff(tuple((8 if v == var1 else (1 if v == var2 else 0)) for v in R.vars))
        lam = -(c8 / (c9 * 9))
        # verify R == c9*(var1 + lam*var2)^9
        v1 = MPoly.variable(field, R.vars, var1)
        v2 = MPoly.variable(field, R.vars, var2)
        if ((v1 + v2 * lam) ** 9) * c9 == R:
            return (-lam, field.one())
        return None
    return None


def base_locus(P: Pencil) -> BaseLocus:
    """Base points with multiplicities via elimination in two directions; the
    ninefold point is certified by both resultants being perfect ninth powers
    naming one point, cross-checked by I_p(gen0, gen1) = 9."""
    field = P.field
    g0, g1 = P.gen0, P.gen1
    if _common_component(g0, g1):
        raise NotAPencilOfCurves("generators share a component")
    from .polyforms import resultant_main
    Rz = resultant_main(g0.poly, g1.poly, "z")
    Ry = resultant_main(g0.poly, g1.poly, "y")
    Rx = resultant_main(g0.poly, g1.poly, "x")

    def mk_point(coords):
        return Point2(field, coords)

    # single-ninefold-point fast path
    nz = _ninth_power_root(Rz, "x", "y", field) if not Rz.is_zero() else None
    ny = _ninth_power_root(Ry, "x", "z", field) if not Ry.is_zero() else None
    nx = _ninth_power_root(Rx, "y", "z", field) if not Rx.is_zero() else None
    candidate = None
    if nz and ny:
        a1, b1 = nz  # (x : y)
        a2, b2 = ny  # (x : z)
        if not a1.is_zero() and not a2.is_zero():
            candidate = mk_point([field.one(), b1 / a1, b2 / a2])
        elif a1.is_zero() and a2.is_zero() and nx:
            a3, b3 = nx  # (y : z)
            candidate = mk_point([field.zero(), a3, b3])
    if candidate is not None:
        if g0.eval_point(candidate.coords).is_zero() and \
                g1.eval_point(candidate.coords).is_zero() and \
                intersection_multiplicity(g0, g1, candidate) == 9:
            return BaseLocus([(candidate, 9)], candidate, True)

    # general path: enumerate (x:y) roots of Rz, recover z, weigh by I_p
    points = {}
    complete = True
    if Rz.is_zero() or Rz.total_degree() == 0:
        complete = False
        xy_roots = []
    else:
        from .cubiccurve import _binary_common_roots
        xy_roots, comp = _binary_common_roots(Rz, Rz, "x", "y", field)
        complete = comp
    for (x0, y0) in xy_roots:
        subs = {"x": x0, "y": y0}
        u0 = g0.poly.subs(subs)
        u1 = g1.poly.subs(subs)
        if u0.is_zero() or u1.is_zero():
            g = u1 if u0.is_zero() else u0
            if g.is_zero():
                complete = False
                continue
        else:
            g = gcd_univariate(u0, u1, "z")
        if g.degree_in("z") <= 0:
            continue
        found, _leftover, comp2 = policy_roots(g, "z")
        complete = complete and comp2
        for z0, _m in found:
            points.setdefault(mk_point([x0, y0, z0]), None)
    for special in ([0, 0, 1], [0, 1, 0], [1, 0, 0]):
        q = mk_point(special)
        if g0.eval_point(q.coords).is_zero() and g1.eval_point(q.coords).is_zero():
            points.setdefault(q, None)
    weighted = []
    total = 0
    for q in sorted(points, key=lambda p: tuple(str(c) for c in p.coords)):
        m = intersection_multiplicity(g0, g1, q)
        if m == 0:
            continue
        weighted.append((q, m))
        total += m
    complete = complete and (total == 9)
    nine = None
    if len(weighted) == 1 and weighted[0][1] == 9:
        nine = weighted[0][0]
    return BaseLocus(weighted, nine, complete)


# ---------------------------------------------------------------------------
# singular members
# ---------------------------------------------------------------------------

class SingularMember:
    __slots__ = ("param", "member", "singular", "singular_complete", "irreducible")

    def __init__(self, param, member, singular, singular_complete, irreducible):
        self.param = param
        self.member = member
        self.singular = singular
        self.singular_complete = singular_complete
        self.irreducible = irreducible

    def __repr__(self):
        kinds = ",".join(s.kind for s in self.singular)
        return f"SingularMember({self.param}, [{kinds}], irr={self.irreducible})"


class SingularMembers:
    __slots__ = ("resolved", "unresolved_layers", "complete")

    def __init__(self, resolved, unresolved_layers, complete):
        self.resolved = resolved
        self.unresolved_layers = unresolved_layers
        self.complete = complete


def member_singular_at(P: Pencil, p: Point2):
    """Parameter of the member singular at p (gradient-vanishing solve), or
    None; always field-rational when it exists."""
    field = P.field
    c0 = Cubic(P.gen0)
    c1 = Cubic(P.gen1)
    rows = [[a, b] for a, b in zip(c0.gradient_at(p), c1.gradient_at(p))]
    kern = linalg.kernel_basis(rows, field, ncols=2)
    if not kern:
        return None
    if len(kern) > 1:
        raise InternalContradiction("both generators singular at the point")
    lam, mu = kern[0]
    return Param(field, lam, mu)


def singular_members(P: Pencil, profile: DiscProfile | None = None) -> SingularMembers:
    if profile is None:
        profile = discriminant_profile(P)
    seen = set()
    resolved = []
    for par, _mult in profile.roots_found:
        if par in seen:
            continue
        seen.add(par)
        member = P.member(par)
        pts, comp = singular_points(member)
        infos = [sing_type(member, q) for q in pts]
        lf = linear_factor(member.form)
        if lf is not None:
            irr = False
        elif comp and len(infos) == 1 and infos[0].kind in ("node", "cusp"):
            irr = True
        else:
            irr = lf is None
        resolved.append(SingularMember(par, member, infos, comp, irr))
    unresolved = []
    if not profile.complete:
        found_mult = sum(m for _p, m in profile.roots_found)
        # layers not accounted for by resolved roots
        resolved_by_mult = {}
        for _p, m in profile.roots_found:
            resolved_by_mult[m] = resolved_by_mult.get(m, 0) + 1
        for mult, deg in profile.profile:
            missing = deg - resolved_by_mult.get(mult, 0)
            if missing > 0:
                unresolved.append((mult, missing))
    return SingularMembers(resolved, unresolved, profile.complete)


# ---------------------------------------------------------------------------
# reducible members
# ---------------------------------------------------------------------------

def reducible_members_scan(P: Pencil, p: Point2):
    """All members with a line component (lines necessarily pass through the
    single ninefold base point p).  Returns (list of (Param, Line), complete)."""
    field = P.field
    base = base_locus(P)
    if base.single_nine_point is None or base.single_nine_point != p:
        raise NotAPencilOfCurves("scan requires the single ninefold base point")
    rows = [list(p.coords)]
    lines = linalg.kernel_basis(rows, field, ncols=3)
    l0, l1 = lines  # coefficient vectors of two independent lines through p
    found = []
    complete = True

    svars = ("x", "y", "z", "s")

    def lift(f: Form3):
        return MPoly(field, svars, {e + (0,): c for e, c in f.poly.terms.items()})

    s = MPoly.variable(field, svars, "s")

    def cross(v, w):
        return [v[1] * w[2] - v[2] * w[1],
                v[2] * w[0] - v[0] * w[2],
                v[0] * w[1] - v[1] * w[0]]

    def handle_line(lc_consts, sval):
        """Given concrete line coefficients, solve for the member parameter."""
        line = Line.from_coeffs(field, *lc_consts)
        A, B = line.basis_points()
        from .cubiccurve import _restrict_to_line
        r0c, _, _ = _restrict_to_line(P.gen0, line)
        r1c, _, _ = _restrict_to_line(P.gen1, line)
        rows2 = [[a, b] for a, b in zip(r0c, r1c)]
        kern = linalg.kernel_basis(rows2, field, ncols=2)
        if len(kern) != 1:
            return None
        t0, t1 = kern[0]
        par = Param(field, t0, t1)
        member = P.member(par)
        try:
            member.form.poly.divexact(line.form.poly)
        except ValueError:
            return None
        return (par, line)

    # generic lines l(s) = l0 + s*l1: build restriction coefficients in s
    consts = [[MPoly.constant(field, svars, 1 if i == j else 0) for j in range(3)]
              for i in range(3)]
    vline = [MPoly.constant(field, svars, a) + s * b for a, b in zip(l0, l1)]
    spans = [cross(vline, consts[k]) for k in range(3)]
    pairs = [(spans[0], spans[1]), (spans[0], spans[2]), (spans[1], spans[2])]
    Apt, Bpt = next(((A, B) for A, B in pairs
                     if any(not c.is_zero() for c in A)
                     and any(not c.is_zero() for c in B)), (None, None))
    s_candidates = []
    if Apt is not None:
        r0 = _restriction_binary(P.gen0, Apt, Bpt, svars, field)
        r1 = _restriction_binary(P.gen1, Apt, Bpt, svars, field)
        minors = []
        for i in range(4):
            for j in range(i + 1, 4):
                m = r0[i] * r1[j] - r0[j] * r1[i]
                if not m.is_zero():
                    minors.append(m)
        if not minors:
            complete = False  # every line value reducible: degenerate input
        else:
            g = minors[0]
            for m in minors[1:]:
                g = gcd_univariate(g, m, "s")
                if g.degree_in("s") <= 0:
                    break
            if g.degree_in("s") > 0:
                roots, _left, comp = policy_roots(g, "s")
                complete = complete and comp
                s_candidates = [r for r, _m in roots]
    for sval in s_candidates:
        lc = [a + sval * b for a, b in zip(l0, l1)]
        got = handle_line(lc, sval)
        if got and got not in found:
            found.append(got)
    # the line at s = infinity
    got = handle_line(list(l1), None)
    if got and got not in found:
        found.append(got)
    return found, complete


def _as_const(p: MPoly, field):
    if p.is_zero():
        return field.zero()
    if p.total_degree() > 0:
        raise InternalContradiction("expected a constant")
    return p.coeff((0,) * len(p.vars))


def _restriction_binary(g: Form3, Apt, Bpt, svars, field):
    """Coefficients (by sigma-degree 0..3) of g(sigma*A + upsilon*B); entries
    are polynomials in s."""
    from math import comb
    out = [MPoly.zero(field, svars) for _ in range(4)]
    cache = {}

    def powmp(p, n):
        key = (id(p), n)
        if key not in cache:
            cache[key] = p ** n
        return cache[key]

    for e, c in g.poly.terms.items():
        # product over coords of (sigma*A_i + upsilon*B_i)^(e_i)
        acc = {0: MPoly.constant(field, svars, c)}
        for i, k in enumerate(e):
            if not k:
                continue
            new = {}
            for j in range(k + 1):
                coefj = powmp(Apt[i], j) * powmp(Bpt[i], k - j) * comb(k, j)
                for d0, c0 in acc.items():
                    key = d0 + j
                    cur = new.get(key)
                    term = c0 * coefj
                    new[key] = term if cur is None else cur + term
            acc = new
        for d0, c0 in acc.items():
            out[d0] = out[d0] + c0
    return out


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

class PencilClass:
    __slots__ = ("kind", "base_point", "tangent", "triple_line_param",
                 "base", "scan_complete")

    def __init__(self, kind, base_point=None, tangent=None,
                 triple_line_param=None, base=None, scan_complete=None):
        self.kind = kind
        self.base_point = base_point
        self.tangent = tangent
        self.triple_line_param = triple_line_param
        self.base = base
        self.scan_complete = scan_complete

    def __repr__(self):
        return f"PencilClass({self.kind}, base={self.base_point})"


def _first_smooth_member(P: Pencil):
    field = P.field
    for k in range(0, 24):
        par = Param(field, 1, k) if k < 12 else Param(field, k - 11, 1)
        m = P.gen0 * par.lam + P.gen1 * par.mu
        if m.is_zero():
            continue
        if not disc_cubic(m).is_zero():
            return Param(field, par.lam, par.mu), Cubic(m)
    return None, None


def classify(P: Pencil) -> PencilClass:
    """Classification of a pencil of cubics with one base point: TypeV
    (ninefold contact at a non-flex), FlexType (flex base point, pencil
    generated by a smooth member and the cubed tangent), or the
    excluded kinds."""
    field = P.field
    par_smooth, C = _first_smooth_member(P)
    if C is None:
        if member_disc_poly(P.gen0, P.gen1).is_zero():
            return PencilClass(GENERIC_SINGULAR)
        raise InternalContradiction("no smooth member among 24 samples "
                                    "but the family discriminant is nonzero")
    base = base_locus(P)
    if base.single_nine_point is None:
        return PencilClass(NOT_ONE_BASE_POINT, base=base)
    p = base.single_nine_point
    ell = tangent_line(C, p)
    ell3 = Form3(ell.form.poly ** 3)
    par3 = P.param_of(ell3)
    if par3 is not None:
        if not is_flex(C, p):
            raise ClassificationContradiction(
                "cubed tangent in the pencil at a non-flex base point")
        return PencilClass(FLEX_TYPE, base_point=p, tangent=ell,
                           triple_line_param=par3, base=base)
    t9 = type9_test(C, p)
    if t9 != "type9":
        raise ClassificationContradiction(
            f"single ninefold base point but type9 test says {t9}")
    scan, scan_complete = reducible_members_scan(P, p)
    if scan:
        raise ClassificationContradiction(
            "reducible member in a pencil with a type-9 base point")
    return PencilClass(TYPE_V, base_point=p, base=base,
                       scan_complete=scan_complete)


# ---------------------------------------------------------------------------
# isotriviality
# ---------------------------------------------------------------------------

def is_isotrivial(P: Pencil) -> bool:
    """True iff S(t)^3 / disc(t) is constant along the pencil, tested by the
    exact two-variable polynomial identity (no root-finding)."""
    vars2 = ("t", "s")
    S_t = member_S_poly(P.gen0, P.gen1, vars2, "t")
    S_s = member_S_poly(P.gen0, P.gen1, vars2, "s")
    D_t = member_disc_poly(P.gen0, P.gen1, vars2, "t")
    D_s = member_disc_poly(P.gen0, P.gen1, vars2, "s")
    if D_t.is_zero():
        raise GenericSingular("every member is singular")
    return (S_t ** 3) * D_s == (S_s ** 3) * D_t
