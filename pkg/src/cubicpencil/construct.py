"""Constructions: the ninefold-contact pencil at a type-9 point, tangential
triangles and the tangent-quotient companion cubic, normalization of a pencil
to the canonical generators, cube-class arithmetic for nodal normal forms, and
named example pencils.

Counting constants (documented, not enumerated here): a smooth cubic has 9
flexes, 81 nine-torsion points, hence TYPE9_COUNT = 81 - 9 = 72 points of
type 9, forming TANGENTIAL_TRIANGLE_COUNT = 72 / 3 = 24 triangles.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .cubiccurve import (Cubic, Line, Point2, intersection_multiplicity,
                         is_smooth, nine_contact_kernel, tangent_line,
                         third_intersection, type9_test)
from .errors import (BadLambda, DegenerateFamilyMember, InternalContradiction,
                     JUnavailable, NormalizationFailed, NotNineTorsion,
                     NotTangentialTriangle, NotType9, RootNotInField,
                     UnsupportedField)
from .exactfield import AlgNum, QQ, nf_cyclotomic
from .invariants import disc_cubic, member_S_poly
from .pencil import TYPE_V, Param, Pencil, classify
from .polyforms import (FORM_VARS, Form3, MPoly, form_coeff_vector,
                        form_from_coeffs, monomials_of_degree, parse_form,
                        policy_roots, substitute_linear)
from .polyforms import ProjMap

FLEX_COUNT = 9
NINE_TORSION_COUNT = 81
TYPE9_COUNT = NINE_TORSION_COUNT - FLEX_COUNT      # 81 - 9 = 72
TANGENTIAL_TRIANGLE_COUNT = TYPE9_COUNT // 3       # 72 / 3 = 24


class Triangle:
    """Tangential triangle: tangent at vertex i meets the curve again at
    vertex i+1 (indices mod 3)."""

    __slots__ = ("vertices", "tangents")

    def __init__(self, vertices, tangents):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "tangents", tuple(tangents))

    def __setattr__(self, *a):
        raise AttributeError("Triangle is immutable")

    def __repr__(self):
        return f"Triangle({', '.join(map(str, self.vertices))})"


def pencil_from_contact(C: Cubic, p: Point2) -> Pencil:
    """The pencil of cubics meeting C with multiplicity >= 9 at p.  The
    contact kernel has dimension 2 exactly when p is 9-torsion; gen0 is C's
    own form, gen1 the deterministic second kernel generator."""
    forms, dim = nine_contact_kernel(C, p)
    if dim == 1:
        raise NotNineTorsion(f"{p}")
    if dim != 2:
        raise InternalContradiction(f"contact kernel of dimension {dim}")
    rows = [form_coeff_vector(f, 3) for f in forms]
    canon = linalg.row_space_canonical(rows, C.field)
    gen1 = None
    crow = form_coeff_vector(C.form, 3)
    for r in canon:
        if linalg.rank([list(r), list(crow)], C.field) == 2:
            gen1 = form_from_coeffs(C.field, 3, r)
            break
    if gen1 is None:
        raise InternalContradiction("kernel collapsed onto the curve itself")
    P = Pencil(C.form, gen1)
    if intersection_multiplicity(P.gen0, P.gen1, p) != 9:
        raise InternalContradiction("contact pencil lost the ninefold point")
    return P


def tangential_triangle(C: Cubic, p: Point2) -> Triangle:
    """Follow tangents from a type-9 point; closes after three steps."""
    if type9_test(C, p) != "type9":
        raise NotType9(f"{p}")
    p1 = p
    t1 = tangent_line(C, p1)
    p2 = third_intersection(C, t1, [p1, p1])
    t2 = tangent_line(C, p2)
    p3 = third_intersection(C, t2, [p2, p2])
    t3 = tangent_line(C, p3)
    back = third_intersection(C, t3, [p3, p3])
    if back != p1:
        raise NotType9(f"tangent chain from {p} does not close")
    return Triangle((p1, p2, p3), (t1, t2, t3))


def gattazzo_pencil(C: Cubic, T: Triangle) -> Pencil:
    """Pencil spanned by C and the companion cubic G with
    t2^2 * G = t1^4 * t3 mod C's form (the tangent-quotient construction).

    Solves t2^2*G - Q*F - s*t1^4*t3 = 0 over (G, Q, s); the solution space is
    2-dimensional exactly for a tangential triangle."""
    field = C.field
    F = C.form
    t1, t2, t3 = (t.form for t in T.tangents)
    rhs = Form3(t1.poly ** 4) * t3          # quintic
    t2sq = Form3(t2.poly ** 2)
    monos5 = monomials_of_degree(5)
    cols = []
    # 10 columns: t2^2 * (cubic monomial)
    for e in monomials_of_degree(3):
        m = form_from_coeffs(field, 3, [field.one() if e == e2 else field.zero()
                                        for e2 in monomials_of_degree(3)])
        cols.append(form_coeff_vector(t2sq * m, 5))
    # 6 columns: -F * (quadric monomial)
    for e in monomials_of_degree(2):
        q = form_from_coeffs(field, 2, [field.one() if e == e2 else field.zero()
                                        for e2 in monomials_of_degree(2)])
        cols.append([-c for c in form_coeff_vector(F * q, 5)])
    # 1 column: -t1^4*t3
    cols.append([-c for c in form_coeff_vector(rhs, 5)])
    rows = [[cols[j][i] for j in range(17)] for i in range(len(monos5))]
    kernel = linalg.kernel_basis(rows, field, ncols=17)
    if len(kernel) != 2:
        raise NotTangentialTriangle(f"solution space of dimension {len(kernel)}")
    gforms = [form_from_coeffs(field, 3, v[:10]) for v in kernel]
    crow = form_coeff_vector(F, 3)
    gen1 = None
    for g in gforms:
        if linalg.rank([form_coeff_vector(g, 3), list(crow)], field) == 2:
            gen1 = g
            break
    if gen1 is None:
        raise NotTangentialTriangle("companion cubic is a multiple of the curve")
    return Pencil(F, gen1)


def triangle_normalize(C: Cubic, T: Triangle):
    """Point map M sending the triangle vertices to the coordinate points
    (the fourth-point freedom is fixed by the canonical representatives: the
    sum of the three vertex representatives goes to (1:1:1)).

    Returns (M, (a, b, c, d)) where the image of C is
    a*xy^2 + b*yz^2 + c*zx^2 + d*xyz (that form equals
    substitute_linear(C.form, M.inverse())).  Raises NormalizationFailed when
    residual monomials survive (the triangle was not tangential)."""
    field = C.field
    N = ProjMap(field, [list(v.coords) for v in T.vertices])
    M = N.inverse()
    image = substitute_linear(C.form, M.inverse())
    coeffs = {e: image.coeff(e) for e in monomials_of_degree(3)}
    keep = {(1, 2, 0): "a", (0, 1, 2): "b", (2, 0, 1): "c", (1, 1, 1): "d"}
    for e, c in coeffs.items():
        if e not in keep and not c.is_zero():
            raise NormalizationFailed(f"residual monomial {e}")
    a = coeffs[(1, 2, 0)]
    b = coeffs[(0, 1, 2)]
    c = coeffs[(2, 0, 1)]
    d = coeffs[(1, 1, 1)]
    if a.is_zero() or b.is_zero() or c.is_zero():
        raise NormalizationFailed("vanishing corner coefficient")
    return M, (a, b, c, d)


def _nth_root_in_field(val: AlgNum, n: int):
    """A root of x^n = val in the session field via the root policy, or None."""
    field = val.field
    uv = ("x",)
    poly = MPoly.from_univariate(field, uv, "x",
                                 [-val] + [field.zero()] * (n - 1) + [field.one()])
    roots, _left, _comp = policy_roots(poly, "x")
    return roots[0][0] if roots else None


def scale_to_canonical(a, b, c, d):
    """Diagonal rescaling sending a*xy^2 + b*yz^2 + c*zx^2 + d*xyz to
    xy^2 + yz^2 + zx^2 + zeta*xyz.

    The scaling factors are alpha = b^2*g^4/a, beta = 1/(b*g^2) and the third
    factor g solving g^9 = a^2/(c*b^4) (direct expansion of the three corner
    conditions forces the ninth power; there is at most one such g in Q since
    the exponent is odd).  Returns (zeta, diag map); the map acts on forms by
    substitution."""
    vals = [a, b, c, d]
    field = next((v.field for v in vals if isinstance(v, AlgNum)), QQ)
    a, b, c, d = (v if isinstance(v, AlgNum) else field.from_rat(v) for v in vals)
    if a.is_zero() or b.is_zero() or c.is_zero():
        raise NormalizationFailed("corner coefficients must be nonzero")
    target = a * a / (c * b ** 4)
    g = _nth_root_in_field(target, 9)
    if g is None:
        raise RootNotInField(f"needs a ninth root of {target}")
    alpha = b * b * g ** 4 / a
    beta = (b * g * g).inverse()
    M = ProjMap.diagonal(field, alpha, beta, g)
    zeta = d * alpha * beta * g
    return zeta, M


def _cube_root_fraction(q: Fraction):
    """Exact rational cube root, or None."""
    def icbrt(n):
        if n < 0:
            r = icbrt(-n)
            return -r if r is not None else None
        lo, hi = 0, 1 << ((n.bit_length() + 2) // 3 + 1)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** 3 < n:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo ** 3 == n else None
    rn = icbrt(q.numerator)
    rd = icbrt(q.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def canonicalize_pencil(P: Pencil):
    """Full normalization chain: locate a smooth member with j = 0 at a
    field-resolved parameter, normalize its tangential triangle at the base
    point, gauge the member scale so the ninth root is rational, and rescale.

    Returns (M, Pout) with Pout = P transformed by the substitution M; for any
    pencil projectively equivalent to the canonical one, Pout equals the
    canonical pencil exactly."""
    cls = classify(P)
    if cls.kind != TYPE_V:
        raise NotType9(f"normalization chain needs a TypeV pencil, got {cls.kind}")
    p = cls.base_point
    field = P.field
    S_t = member_S_poly(P.gen0, P.gen1)
    candidates = []
    if S_t.is_zero():
        candidates.append(Param(field, 1, 0))
    else:
        roots, _left, _comp = policy_roots(S_t, "t")
        candidates.extend(Param(field, 1, r) for r, _m in roots)
    from .invariants import aronhold_S
    if aronhold_S(P.gen1).is_zero():
        candidates.append(Param(field, 0, 1))
    C0 = None
    for par in candidates:
        m = P.gen0 * par.lam + P.gen1 * par.mu
        if not m.is_zero() and not disc_cubic(m).is_zero():
            C0 = Cubic(m)
            break
    if C0 is None:
        raise JUnavailable("no field-resolved smooth member with j = 0")
    T = tangential_triangle(C0, p)
    Mpt, (a, b, c, d) = triangle_normalize(C0, T)
    # gauge the member scale: (a,b,c,d) -> u*(a,b,c,d) turns a^2/(c b^4) into
    # u^-3 * (same), so a rational cube root of the target makes g = 1
    target = a * a / (c * b ** 4)
    if target.is_rational():
        u = _cube_root_fraction(target.as_rational())
        if u is not None and u != 0:
            uf = field.from_rat(u)
            a, b, c, d = a * uf, b * uf, c * uf, d * uf
    zeta, Mdiag = scale_to_canonical(a, b, c, d)
    if not zeta.is_zero():
        raise NormalizationFailed(
            f"j = 0 member left zeta = {zeta}; pencil is not canonical-equivalent")
    Mtotal = Mdiag * Mpt.inverse()
    return Mtotal, P.transformed(Mtotal)


# ---------------------------------------------------------------------------
# cube classes for the nodal normal form x^3 + lambda*y^3 - xyz
# ---------------------------------------------------------------------------

def _factor_int(n):
    from .polyforms import _int_divisors
    n = abs(n)
    out = {}
    if n <= 1:
        return out
    divs = _int_divisors(n)
    if divs is None:
        raise BadLambda("numerator/denominator too composite to factor")
    # primes are the divisors with exactly two divisors of their own
    primes = [d for d in divs if d > 1 and sum(1 for e in divs if d % e == 0) == 2]
    for p in primes:
        e = 0
        m = n
        while m % p == 0:
            m //= p
            e += 1
        out[p] = e
    return out


def lambda_class(lam) -> Fraction:
    """Cube-free positive representative of lambda modulo rational cubes."""
    lam = Fraction(lam)
    if lam == 0:
        raise BadLambda("lambda must be nonzero")
    out = Fraction(1)
    for n in (lam.numerator, lam.denominator):
        fac = _factor_int(n)
        for p, e in fac.items():
            sign = 1 if n == lam.numerator else -1
            out *= Fraction(p) ** ((sign * e) % 3)
    return out


def lambda_equiv(lam, lam2) -> bool:
    """True iff lam / lam2 is a rational cube."""
    lam, lam2 = Fraction(lam), Fraction(lam2)
    if lam == 0 or lam2 == 0:
        raise BadLambda("lambda must be nonzero")
    return lambda_class(lam) == lambda_class(lam2)


# ---------------------------------------------------------------------------
# named pencils
# ---------------------------------------------------------------------------

def _gattazzo_generators(field, b):
    """Printed family: F_b = xy^2 + yz^2 + zx^2 + 3b*xyz and its companion
    -y^3 + (yz + x^2 + 3b*xy)(x + 3b*y); ninefold contact at (0:0:1)."""
    bb = field.from_rat(b)
    F = parse_form("x*y^2 + y*z^2 + z*x^2", field) + \
        form_from_coeffs(field, 3, [0, 0, 0, 0, bb * 3, 0, 0, 0, 0, 0])
    x = MPoly.variable(field, FORM_VARS, "x")
    y = MPoly.variable(field, FORM_VARS, "y")
    z = MPoly.variable(field, FORM_VARS, "z")
    G = Form3(-(y ** 3) + (y * z + x * x + x * y * bb * 3) * (x + y * bb * 3))
    return F, G


def _ric_generators():
    """The explicit pencil over Q(zeta9): gen0 is the k = 0 member of the
    family written in the affine chart y = 1 with t the primitive ninth root
    of unity; gen1 = x^3 - y^3 - xyz (the k-direction).  Validated on load."""
    field = nf_cyclotomic(9)
    t = field.gen()
    one = field.one()

    def fr(q):
        return field.from_rat(q)

    # graded-lex coefficient vector: x^3, x^2 y, x^2 z, x y^2, xyz, x z^2,
    #                                 y^3, y^2 z, y z^2, z^3
    c_x3 = -(t ** 3 * 84 - fr(3))
    c_x2y = -(t ** 7 * 4 - t ** 4 * 14 + t) * 9
    c_x2z = -(t ** 8 - t ** 2 * 4) * 9
    c_xy2 = (t ** 8 - t ** 5 * 14 + t ** 2 * 4) * 9
    c_xyz = field.zero()
    c_xz2 = -t * 9
    c_y3 = t ** 6 * 84 - fr(3)
    c_y2z = (t ** 7 * 4 - t) * 9
    c_yz2 = t ** 8 * 9
    c_z3 = one
    gen0 = form_from_coeffs(field, 3, [c_x3, c_x2y, c_x2z, c_xy2, c_xyz,
                                       c_xz2, c_y3, c_y2z, c_yz2, c_z3])
    gen1 = parse_form("x^3 - y^3 - x*y*z", field)
    # load-time validation: the stated base point has ninefold contact
    p = Point2(field, [t, one, (t ** 3 - one) / t])
    if not gen0.eval_point(p.coords).is_zero() or \
            not gen1.eval_point(p.coords).is_zero():
        raise InternalContradiction("transcribed generators miss the base point")
    if intersection_multiplicity(gen0, gen1, p) != 9:
        raise InternalContradiction("transcribed generators lack ninefold contact")
    return gen0, gen1, p


def named_pencil(name: str, field=None) -> Pencil:
    """Stable named builders: `canonical`, `gattazzo:B`, `fermat-flex`,
    `fermat-weier`, `nodal-flex`, `ric`.

    `canonical` is the ninefold-contact pencil of the cyclic cubic
    xy^2 + yz^2 + zx^2 at its type-9 point (1:0:0), with companion generator
    y^3 + xyz - z^3.  The same pencil is often written with the base point at
    (0:0:1) and companion x^3 + xyz - y^3; the two presentations differ by the
    cyclic symmetry x -> y -> z -> x of the curve."""
    if name == "ric":
        if field is not None and field != nf_cyclotomic(9):
            raise UnsupportedField("the explicit pencil lives over cyclotomic:9")
        gen0, gen1, _p = _ric_generators()
        return Pencil(gen0, gen1)
    field = QQ if field is None else field
    if name == "canonical":
        return Pencil(parse_form("x*y^2 + y*z^2 + z*x^2", field),
                      parse_form("y^3 + x*y*z - z^3", field))
    if name == "fermat-flex":
        return Pencil(parse_form("x^3 + y^3 + z^3", field),
                      parse_form("(x + y)^3", field))
    if name == "fermat-weier":
        return Pencil(parse_form("y^2*z - x^3 + z^3", field),
                      parse_form("z^3", field))
    if name == "nodal-flex":
        return Pencil(parse_form("x^3 - y^3 - x*y*z", field),
                      parse_form("(3*x - 3*y - z)^3", field))
    if name.startswith("gattazzo:"):
        try:
            b = Fraction(name.split(":", 1)[1])
        except (ValueError, ZeroDivisionError):
            raise DegenerateFamilyMember(f"bad parameter in {name!r}") from None
        if b ** 3 == -1:
            raise DegenerateFamilyMember("b^3 = -1 degenerates the family")
        F, G = _gattazzo_generators(field, b)
        return Pencil(F, G)
    raise UnsupportedField(f"unknown pencil name {name!r}")
