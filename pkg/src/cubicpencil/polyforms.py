"""Sparse multivariate polynomials over a number field, ternary forms, and the
elimination toolkit: Sylvester resultants (fraction-free Bareiss), square-free
profiles, Hessians, linear substitution, truncated branch series, and the root
extraction policy.

Monomial order everywhere is graded lexicographic with the declared variable
order (x before y before z); formatting is canonical under that order.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (NotHomogeneous, NotOnCurve, ParseError, SingularMap,
                     SingularPoint, ZeroInput)
from .exactfield import AlgNum, NumberField, QQ, format_algnum

FORM_VARS = ("x", "y", "z")


class MPoly:
    """Sparse polynomial: exponent tuple -> nonzero AlgNum coefficient."""

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field, vars, terms):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "terms", {e: c for e, c in terms.items() if not c.is_zero()})

    def __setattr__(self, *a):
        raise AttributeError("MPoly is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, field, vars):
        return cls(field, vars, {})

    @classmethod
    def constant(cls, field, vars, c):
        c = c if isinstance(c, AlgNum) else field.from_rat(c)
        return cls(field, vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, field, vars, name):
        e = [0] * len(vars)
        e[list(vars).index(name)] = 1
        return cls(field, vars, {tuple(e): field.one()})

    # -- ring operations ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.vars != self.vars or other.field != self.field:
                raise ValueError("mixed polynomial rings")
            return other
        if isinstance(other, (int, Fraction, AlgNum)):
            return MPoly.constant(self.field, self.vars, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms.get(e)
            terms[e] = c if s is None else s + c
        return MPoly(self.field, self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.field, self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return MPoly(self.field, self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        acc = MPoly.constant(self.field, self.vars, 1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, AlgNum)):
            other = MPoly.constant(self.field, self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- structure ----------------------------------------------------------
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var):
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coeff(self, exps) -> AlgNum:
        return self.terms.get(tuple(exps), self.field.zero())

    def derivative(self, var):
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return MPoly(self.field, self.vars, out)

    def subs(self, values):
        """Substitute var name -> AlgNum / MPoly (in the same ring) / Fraction."""
        acc = MPoly.zero(self.field, self.vars)
        cache = {}
        for e, c in self.terms.items():
            term = MPoly.constant(self.field, self.vars, c)
            for i, exp in enumerate(e):
                if not exp:
                    continue
                name = self.vars[i]
                if name in values:
                    v = values[name]
                    if not isinstance(v, MPoly):
                        v = MPoly.constant(self.field, self.vars, v)
                else:
                    v = MPoly.variable(self.field, self.vars, name)
                key = (name, exp)
                if key not in cache:
                    cache[key] = v ** exp
                term = term * cache[key]
            acc = acc + term
        return acc

    def eval(self, values) -> AlgNum:
        """Full evaluation; values maps every occurring variable to AlgNum."""
        tot = self.field.zero()
        cache = {}
        for e, c in self.terms.items():
            t = c
            for i, exp in enumerate(e):
                if exp:
                    key = (i, exp)
                    if key not in cache:
                        cache[key] = values[self.vars[i]] ** exp
                    t = t * cache[key]
            tot = tot + t
        return tot

    # -- views --------------------------------------------------------------
    def univariate_coeffs(self, var):
        """Coefficient list (ascending) of `var`; entries are MPolys in the rest."""
        i = self.vars.index(var)
        n = self.degree_in(var)
        buckets = [dict() for _ in range(n + 1)]
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            buckets[k][tuple(e2)] = c
        return [MPoly(self.field, self.vars, b) for b in buckets]

    def effective_vars(self):
        out = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    out.add(self.vars[i])
        return out

    def as_univariate(self, var=None):
        """Ascending AlgNum coefficient list; requires at most one effective var."""
        eff = self.effective_vars()
        if var is None:
            if len(eff) > 1:
                raise ValueError("not univariate")
            var = next(iter(eff)) if eff else self.vars[0]
        elif eff - {var}:
            raise ValueError("not univariate in " + var)
        i = self.vars.index(var)
        n = self.degree_in(var)
        out = [self.field.zero()] * (n + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    @classmethod
    def from_univariate(cls, field, vars, var, coeffs):
        i = list(vars).index(var)
        terms = {}
        for k, c in enumerate(coeffs):
            c = c if isinstance(c, AlgNum) else field.from_rat(c)
            if not c.is_zero():
                e = [0] * len(vars)
                e[i] = k
                terms[tuple(e)] = c
        return cls(field, vars, terms)

    def leading_term(self):
        """(exponent, coeff) largest in graded lex."""
        e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def divexact(self, other):
        """Exact division; raises ZeroInput/ValueError when not divisible."""
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroInput("division by zero polynomial")
        if self.is_zero():
            return self
        rem = self
        q = {}
        oe, oc = o.leading_term()
        while not rem.is_zero():
            re, rc = rem.leading_term()
            e = tuple(a - b for a, b in zip(re, oe))
            if any(k < 0 for k in e):
                raise ValueError("not divisible")
            c = rc / oc
            q[e] = q.get(e, self.field.zero()) + c
            rem = rem - MPoly(self.field, self.vars, {e: c}) * o
        return MPoly(self.field, self.vars, q)

    def __repr__(self):
        return f"MPoly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# formatting / parsing
# ---------------------------------------------------------------------------

def _format_coeff(c: AlgNum, lead_monomial: bool):
    """Return (sign, body or None); body None means coefficient 1 elided."""
    if c.is_rational():
        q = c.as_rational()
        sign = "-" if q < 0 else "+"
        q = abs(q)
        if q == 1 and lead_monomial:
            return sign, None
        return sign, str(q)
    return "+", f"({format_algnum(c)})"


def format_poly(p: MPoly) -> str:
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    chunks = []
    for e, c in items:
        mono = "*".join(
            v if k == 1 else f"{v}^{k}"
            for v, k in zip(p.vars, e) if k
        )
        sign, body = _format_coeff(c, lead_monomial=bool(mono))
        if body is None:
            text = mono
        elif mono:
            text = f"{body}*{mono}"
        else:
            text = body
        if not chunks:
            chunks.append(text if sign == "+" else f"-{text}")
        else:
            chunks.append(f"{'+' if sign == '+' else '-'} {text}")
    return " ".join(chunks)


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def next_token(self):
        ch = self.peek()
        if ch is None:
            return None
        if ch in "+-*^()":
            self.pos += 1
            return ch
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            num = int(self.text[start:self.pos])
            if self.pos < len(self.text) and self.text[self.pos] == "/":
                self.pos += 1
                if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
                    raise ParseError("bad rational literal")
                start = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self.pos += 1
                return Fraction(num, int(self.text[start:self.pos]))
            return Fraction(num)
        if ch.isalpha():
            self.pos += 1
            return ("name", ch)
        raise ParseError(f"unexpected character {ch!r}")


class _Parser:
    """Grammar: `+ - * ^`, parentheses, rationals a/b, names from `allowed`.

    Implicit multiplication is a parse error by construction (two adjacent
    factors never parse)."""

    def __init__(self, text, field, vars, allowed):
        self.lx = _Lexer(text)
        self.field = field
        self.vars = vars
        self.allowed = allowed
        self.tok = self.lx.next_token()

    def advance(self):
        self.tok = self.lx.next_token()

    def expect(self, t):
        if self.tok != t:
            raise ParseError(f"expected {t!r}, got {self.tok!r}")
        self.advance()

    def parse(self):
        e = self.expr()
        if self.tok is not None:
            raise ParseError(f"trailing input at {self.tok!r}")
        return e

    def expr(self):
        neg = False
        while self.tok in ("+", "-"):
            if self.tok == "-":
                neg = not neg
            self.advance()
        acc = self.term()
        if neg:
            acc = -acc
        while self.tok in ("+", "-"):
            op = self.tok
            self.advance()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while self.tok == "*":
            self.advance()
            acc = acc * self.power()
        return acc

    def power(self):
        base = self.atom()
        if self.tok == "^":
            self.advance()
            if not isinstance(self.tok, Fraction) or self.tok.denominator != 1 or self.tok < 0:
                raise ParseError("exponent must be a nonnegative integer")
            n = int(self.tok)
            self.advance()
            return base ** n
        return base

    def atom(self):
        t = self.tok
        if t == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if t == "-":
            self.advance()
            return -self.atom()
        if isinstance(t, Fraction):
            self.advance()
            return MPoly.constant(self.field, self.vars, t)
        if isinstance(t, tuple) and t[0] == "name":
            name = t[1]
            if name == "w":
                self.advance()
                return MPoly.constant(self.field, self.vars, self.field.gen())
            if name in self.allowed:
                self.advance()
                return MPoly.variable(self.field, self.vars, name)
            raise ParseError(f"unknown symbol {name!r}")
        raise ParseError(f"unexpected token {t!r}")


def parse_poly(text, field, vars=FORM_VARS, allowed=None) -> MPoly:
    allowed = set(vars) if allowed is None else allowed
    return _Parser(text, field, tuple(vars), allowed).parse()


def parse_algnum(text, field) -> AlgNum:
    p = _Parser(text, field, ("x",), set()).parse()
    if p.effective_vars():
        raise ParseError("expected a scalar expression")
    return p.coeff((0,))


# ---------------------------------------------------------------------------
# ternary forms
# ---------------------------------------------------------------------------

class Form3:
    """Homogeneous polynomial in (x, y, z); the zero form has degree -1."""

    __slots__ = ("poly", "degree")

    def __init__(self, poly: MPoly):
        if poly.vars != FORM_VARS:
            raise ValueError("Form3 requires variables (x, y, z)")
        if not poly.is_homogeneous():
            raise NotHomogeneous(format_poly(poly))
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "degree", poly.total_degree())

    def __setattr__(self, *a):
        raise AttributeError("Form3 is immutable")

    @property
    def field(self):
        return self.poly.field

    def is_zero(self):
        return self.poly.is_zero()

    def __add__(self, other):
        return Form3(self.poly + other.poly)

    def __sub__(self, other):
        return Form3(self.poly - other.poly)

    def __neg__(self):
        return Form3(-self.poly)

    def __mul__(self, other):
        if isinstance(other, Form3):
            return Form3(self.poly * other.poly)
        return Form3(self.poly * other)

    __rmul__ = __mul__

    def __pow__(self, n):
        return Form3(self.poly ** n)

    def __eq__(self, other):
        return isinstance(other, Form3) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return bool(self.poly)

    def derivative(self, var):
        return Form3(self.poly.derivative(var))

    def eval_point(self, coords) -> AlgNum:
        return self.poly.eval(dict(zip(FORM_VARS, coords)))

    def coeff(self, exps):
        return self.poly.coeff(exps)

    def scaled_primitive(self):
        """Divide by the leading (graded-lex) coefficient; canonical up to scale."""
        if self.is_zero():
            return self
        _, c = self.poly.leading_term()
        return Form3(self.poly * c.inverse())

    def __repr__(self):
        return f"Form3({format_poly(self.poly)})"

    def __str__(self):
        return format_poly(self.poly)


def parse_form(text, field) -> Form3:
    return Form3(parse_poly(text, field))


def format_form(f: Form3) -> str:
    return format_poly(f.poly)


def monomials_of_degree(d):
    """Exponent triples of total degree d, graded-lex descending (x > y > z)."""
    out = []
    for a in range(d, -1, -1):
        for b in range(d - a, -1, -1):
            out.append((a, b, d - a - b))
    return out


def form_from_coeffs(field, d, coeffs) -> Form3:
    monos = monomials_of_degree(d)
    terms = {}
    for e, c in zip(monos, coeffs):
        c = c if isinstance(c, AlgNum) else field.from_rat(c)
        if not c.is_zero():
            terms[e] = c
    return Form3(MPoly(field, FORM_VARS, terms))


def form_coeff_vector(f: Form3, d=None):
    d = f.degree if d is None else d
    return [f.coeff(e) for e in monomials_of_degree(d)]


# ---------------------------------------------------------------------------
# projective maps
# ---------------------------------------------------------------------------

class ProjMap:
    """Invertible 3x3 matrix; acts on forms by f -> f(v*M) (right action on
    row vectors), so substitute(f, M*N) == substitute(substitute(f, M), N)."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        rows = tuple(tuple(c if isinstance(c, AlgNum) else field.from_rat(c) for c in r)
                     for r in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("3x3 matrix required")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        if self.det().is_zero():
            raise SingularMap("matrix is singular")

    def __setattr__(self, *a):
        raise AttributeError("ProjMap is immutable")

    @classmethod
    def identity(cls, field):
        one, zero = field.one(), field.zero()
        return cls(field, ((one, zero, zero), (zero, one, zero), (zero, zero, one)))

    @classmethod
    def diagonal(cls, field, a, b, c):
        zero = field.zero()
        mk = lambda v: v if isinstance(v, AlgNum) else field.from_rat(v)
        return cls(field, ((mk(a), zero, zero), (zero, mk(b), zero), (zero, zero, mk(c))))

    def det(self) -> AlgNum:
        r = self.rows
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    def __mul__(self, other):
        rows = []
        for i in range(3):
            row = []
            for j in range(3):
                s = self.field.zero()
                for k in range(3):
                    s = s + self.rows[i][k] * other.rows[k][j]
                row.append(s)
            rows.append(tuple(row))
        return ProjMap(self.field, rows)

    def inverse(self):
        d = self.det()
        r = self.rows
        cof = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                sub = [r[a][b] for a in range(3) if a != i for b in range(3) if b != j]
                m = sub[0] * sub[3] - sub[1] * sub[2]
                cof[j][i] = m if (i + j) % 2 == 0 else -m
        return ProjMap(self.field, [[c / d for c in row] for row in cof])

    def apply_row(self, v):
        """Row vector times matrix."""
        return tuple(
            v[0] * self.rows[0][j] + v[1] * self.rows[1][j] + v[2] * self.rows[2][j]
            for j in range(3)
        )

    def __eq__(self, other):
        return isinstance(other, ProjMap) and self.rows == other.rows

    def __repr__(self):
        return "ProjMap(" + "; ".join(", ".join(str(c) for c in r) for r in self.rows) + ")"


def substitute_linear(f: Form3, M: ProjMap) -> Form3:
    """f(v * M) for a row vector v = (x, y, z)."""
    field = f.field
    ring = lambda name: MPoly.variable(field, FORM_VARS, name)
    vx, vy, vz = ring("x"), ring("y"), ring("z")
    images = []
    for j in range(3):
        img = (vx * M.rows[0][j] + vy * M.rows[1][j] + vz * M.rows[2][j])
        images.append(img)
    sub = dict(zip(FORM_VARS, images))
    return Form3(f.poly.subs(sub))


def hessian_det(f: Form3) -> Form3:
    """Determinant of the matrix of second partials; degree 3(d-2)."""
    second = [[f.poly.derivative(a).derivative(b) for b in FORM_VARS] for a in FORM_VARS]
    m = second
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return Form3(det)


# ---------------------------------------------------------------------------
# determinants and resultants (fraction-free Bareiss over any exact domain)
# ---------------------------------------------------------------------------

def bareiss_det(rows, zero, one, is_zero, divexact):
    """Fraction-free Bareiss determinant over an integral domain.

    `rows` is a list of lists; arithmetic uses the entries' operators, with
    `divexact(a, b)` performing the guaranteed-exact divisions."""
    n = len(rows)
    if n == 0:
        return one
    m = [list(r) for r in rows]
    sign = False
    prev = one
    for k in range(n - 1):
        if is_zero(m[k][k]):
            piv = next((r for r in range(k + 1, n) if not is_zero(m[r][k])), None)
            if piv is None:
                return zero
            m[k], m[piv] = m[piv], m[k]
            sign = not sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = divexact(num, prev) if not is_zero(num) else zero
            m[i][k] = zero
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign else d


def _mpoly_det(rows, field, vars):
    zero = MPoly.zero(field, vars)
    one = MPoly.constant(field, vars, 1)
    return bareiss_det(rows, zero, one, lambda p: p.is_zero(),
                       lambda a, b: a.divexact(b))


def sylvester_matrix(fc, gc, m, n, zero):
    """Sylvester matrix for coefficient lists (ascending) padded to degrees m, n."""
    fc = list(fc) + [zero] * (m + 1 - len(fc))
    gc = list(gc) + [zero] * (n + 1 - len(gc))
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(fc):
            row[i + (m - k)] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(gc):
            row[i + (n - k)] = c
        rows.append(row)
    return rows


def resultant_uni(f: MPoly, g: MPoly, var=None) -> AlgNum:
    """Sylvester resultant of univariate polynomials; rows of f first.

    Convention: resultant(x - a, x - b) = a - b."""
    if f.is_zero() or g.is_zero():
        raise ZeroInput("resultant of zero polynomial")
    eff = f.effective_vars() | g.effective_vars()
    if var is None:
        if len(eff) > 1:
            raise ValueError("ambiguous main variable")
        var = next(iter(eff)) if eff else f.vars[0]
    fc = f.as_univariate(var)
    gc = g.as_univariate(var)
    m, n = len(fc) - 1, len(gc) - 1
    field = f.field
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    rows = sylvester_matrix(fc, gc, m, n, field.zero())
    return bareiss_det(rows, field.zero(), field.one(),
                       lambda a: a.is_zero(), lambda a, b: a / b)


def resultant_main(f: MPoly, g: MPoly, var, deg_f=None, deg_g=None) -> MPoly:
    """Resultant eliminating `var`; entries are polynomials in the others.

    Degrees may be declared larger than actual (fixed-size Sylvester): vanishing
    leading coefficients then flag common roots at infinity of `var`."""
    field = f.field
    fc = f.univariate_coeffs(var)
    gc = g.univariate_coeffs(var)
    m = deg_f if deg_f is not None else len(fc) - 1
    n = deg_g if deg_g is not None else len(gc) - 1
    zero = MPoly.zero(field, f.vars)
    if m <= 0 or n <= 0:
        if m == 0:
            return fc[0] ** max(n, 0)
        if n == 0:
            return gc[0] ** max(m, 0)
        raise ZeroInput("resultant needs nonnegative degrees")
    rows = sylvester_matrix(fc, gc, m, n, zero)
    return _mpoly_det(rows, field, f.vars)


# ---------------------------------------------------------------------------
# univariate gcd / square-free structure
# ---------------------------------------------------------------------------

def _uni_monic(cs):
    inv = cs[-1].inverse()
    return [c * inv for c in cs]


def _uni_divmod(a, b):
    a = list(a)
    q = [a[0].field.zero() if hasattr(a[0], "field") else Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = b[-1].inverse()
    while a and len(a) >= len(b):
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i, bc in enumerate(b):
            a[d + i] = a[d + i] - c * bc
        while a and a[-1].is_zero():
            a.pop()
    return q, a


def gcd_univariate(f: MPoly, g: MPoly, var=None) -> MPoly:
    """Monic gcd over the coefficient field."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    eff = f.effective_vars() | g.effective_vars()
    if var is None:
        if len(eff) > 1:
            raise ValueError("ambiguous variable")
        var = next(iter(eff)) if eff else f.vars[0]
    a = f.as_univariate(var)
    b = g.as_univariate(var)
    while b:
        _, r = _uni_divmod(a, b)
        a, b = b, r
    return MPoly.from_univariate(f.field, f.vars, var, _uni_monic(a))


def squarefree_profile(f: MPoly, var=None):
    """Yun decomposition layers: list of (multiplicity, degree-of-layer),
    sorted by multiplicity, omitting degree-0 layers."""
    if f.is_zero():
        raise ZeroInput("square-free profile of zero")
    eff = f.effective_vars()
    if var is None:
        if len(eff) > 1:
            raise ValueError("ambiguous variable")
        var = next(iter(eff)) if eff else f.vars[0]
    if f.degree_in(var) <= 0:
        return []
    df = f.derivative(var)
    a = gcd_univariate(f, df, var)
    b = f.divexact(a)
    c = df.divexact(a)
    out = []
    k = 1
    while b.degree_in(var) > 0:
        d = c - b.derivative(var)
        layer = gcd_univariate(b, d, var)
        deg = layer.degree_in(var)
        if deg > 0:
            out.append((k, deg))
        b = b.divexact(layer)
        if b.degree_in(var) > 0 or not d.is_zero():
            c = d.divexact(layer)
        k += 1
    return sorted(out)


def squarefree_layers(f: MPoly, var=None):
    """Yun decomposition returning the actual layer polynomials [(mult, poly)]."""
    eff = f.effective_vars()
    if var is None:
        var = next(iter(eff)) if eff else f.vars[0]
    if f.degree_in(var) <= 0:
        return []
    df = f.derivative(var)
    a = gcd_univariate(f, df, var)
    b = f.divexact(a)
    c = df.divexact(a)
    out = []
    k = 1
    while b.degree_in(var) > 0:
        d = c - b.derivative(var)
        layer = gcd_univariate(b, d, var)
        if layer.degree_in(var) > 0:
            out.append((k, layer))
        b = b.divexact(layer)
        if b.degree_in(var) > 0 or not d.is_zero():
            c = d.divexact(layer)
        k += 1
    return out


# ---------------------------------------------------------------------------
# bivariate gcd (for common-component detection)
# ---------------------------------------------------------------------------

def _content_wrt(f: MPoly, main):
    """gcd of the `main`-coefficients (each univariate in the other variable)."""
    coeffs = [c for c in f.univariate_coeffs(main) if not c.is_zero()]
    g = coeffs[0]
    for c in coeffs[1:]:
        g = gcd_univariate(g, c)
        if g.total_degree() == 0:
            break
    return g


def gcd_bivariate(f: MPoly, g: MPoly) -> MPoly:
    """gcd of polynomials in at most two effective variables (primitive PRS)."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    eff = sorted(f.effective_vars() | g.effective_vars())
    if len(eff) == 0:
        return MPoly.constant(f.field, f.vars, 1)
    if len(eff) == 1:
        return gcd_univariate(f, g, eff[0])
    main, other = eff[0], eff[1]

    def primitive(p):
        cont = _content_wrt(p, main)
        return p.divexact(cont), cont

    fp, fc = primitive(f)
    gp, gc = primitive(g)
    cont_gcd = gcd_univariate(fc, gc, other)
    a, b = fp, gp
    if a.degree_in(main) < b.degree_in(main):
        a, b = b, a
    while not b.is_zero() and b.degree_in(main) > 0:
        # pseudo-remainder of a by b in main
        d = a.degree_in(main) - b.degree_in(main)
        lb = b.univariate_coeffs(main)[-1]
        r = a * lb ** (d + 1)
        q_dummy, rem = _poly_pseudo_rem(r, b, main)
        a, b = b, rem if rem is None or not rem.is_zero() else MPoly.zero(f.field, f.vars)
        if a.degree_in(main) < (b.degree_in(main) if not b.is_zero() else -1):
            a, b = b, a
        if not b.is_zero():
            b = primitive(b)[0]
    if b.is_zero():
        res = primitive(a)[0]
    else:
        res = MPoly.constant(f.field, f.vars, 1)
    return res * cont_gcd


def _poly_pseudo_rem(a: MPoly, b: MPoly, main):
    """Plain remainder of a by b as polynomials in `main` (a assumed scaled)."""
    bc = b.univariate_coeffs(main)
    lb = bc[-1]
    rem = a
    while not rem.is_zero() and rem.degree_in(main) >= b.degree_in(main):
        rc = rem.univariate_coeffs(main)
        lead = rc[-1]
        try:
            fac = lead.divexact(lb)
        except ValueError:
            # scale once more (defensive; callers pre-scale)
            rem = rem * lb
            continue
        shift = len(rc) - len(bc)
        xmain = MPoly.variable(a.field, a.vars, main)
        rem = rem - fac * xmain ** shift * b
    return None, rem


# ---------------------------------------------------------------------------
# branch series
# ---------------------------------------------------------------------------

class TruncSeries:
    """y(x) = sum_{k>=1} c_k x^k known mod x^(order+1); c_0 = 0 implicit."""

    __slots__ = ("field", "coeffs", "order")

    def __init__(self, field, coeffs, order):
        coeffs = tuple(coeffs)
        if len(coeffs) != order:
            raise ValueError("need exactly `order` coefficients c_1..c_N")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):
        raise AttributeError("TruncSeries is immutable")

    def coefficient(self, k):
        if k < 1 or k > self.order:
            raise IndexError(k)
        return self.coeffs[k - 1]

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __repr__(self):
        parts = [f"{c}*u^{k}" for k, c in enumerate(self.coeffs, 1) if not c.is_zero()]
        return "TruncSeries(" + (" + ".join(parts) if parts else "0") + f"; order {self.order})"


_CHART_CHOICES = [
    # (unit variable, independent variable, dependent variable)
    ("x", "y", "z"), ("x", "z", "y"),
    ("y", "x", "z"), ("y", "z", "x"),
    ("z", "x", "y"), ("z", "y", "x"),
]


def _chart_data(f: Form3, pcoords, chart):
    """Dehomogenize in chart, translate p to origin; return bivariate local poly
    plus the substitution data, or None when the chart is inadmissible."""
    unit, indep, dep = chart
    iu = FORM_VARS.index(unit)
    if pcoords[iu].is_zero():
        return None
    scale = pcoords[iu].inverse()
    p_aff = {v: pcoords[FORM_VARS.index(v)] * scale for v in FORM_VARS}
    field = f.field
    u = MPoly.variable(field, FORM_VARS, indep)
    v = MPoly.variable(field, FORM_VARS, dep)
    sub = {
        unit: MPoly.constant(field, FORM_VARS, 1),
        indep: u + p_aff[indep],
        dep: v + p_aff[dep],
    }
    local = f.poly.subs(sub)
    if not local.coeff((0, 0, 0)).is_zero():
        return None  # p not on the curve in this chart (cannot happen if on curve)
    dv = local.derivative(dep)
    if dv.eval({k: field.zero() for k in FORM_VARS}).is_zero():
        return None  # tangent parallel to the dependent axis
    return local, sub, p_aff


def series_branch(f: Form3, point_coords, order, chart=None) -> TruncSeries:
    """Local branch of f = 0 at a smooth point, as dep(indep) to given order.

    `chart` is an optional (unit, indep, dep) triple of variable names; the
    default tries the fixed chart list and the first admissible one wins."""
    field = f.field
    pc = tuple(point_coords)
    if not f.eval_point(pc).is_zero():
        raise NotOnCurve(str(pc))
    grads = [f.derivative(v).eval_point(pc) for v in FORM_VARS]
    if all(g.is_zero() for g in grads):
        raise SingularPoint(str(pc))
    choices = [chart] if chart is not None else _CHART_CHOICES
    for ch in choices:
        data = _chart_data(f, pc, ch)
        if data is None:
            continue
        local, _, _ = data
        indep, dep = ch[1], ch[2]
        fv0 = local.derivative(dep).eval({k: field.zero() for k in FORM_VARS})
        fv0_inv = fv0.inverse()
        coeffs = []
        # s holds the partial series as a polynomial in `indep`
        s = MPoly.zero(field, FORM_VARS)
        u = MPoly.variable(field, FORM_VARS, indep)
        for m in range(1, order + 1):
            g = local.subs({dep: s})
            cm = _uni_coeff(g, indep, m)
            c = -(cm * fv0_inv)
            coeffs.append(c)
            if not c.is_zero():
                s = s + u ** m * c
        return TruncSeries(field, coeffs, order)
    raise SingularPoint("no admissible chart (all tangents degenerate)")


def _uni_coeff(p: MPoly, var, k):
    i = p.vars.index(var)
    tot = p.field.zero()
    for e, c in p.terms.items():
        if e[i] == k and all(e[j] == 0 for j in range(len(e)) if j != i):
            tot = tot + c
    return tot


def branch_parametrization(f: Form3, point_coords, order):
    """Projective parametrization (X(u), Y(u), Z(u)) of the branch of f at p,
    each a univariate polynomial in `u` mod u^(order+1).

    X, Y, Z are returned as coefficient lists (ascending, length order+1)."""
    field = f.field
    pc = tuple(point_coords)
    for ch in _CHART_CHOICES:
        data = _chart_data(f, pc, ch)
        if data is None:
            continue
        unit, indep, dep = ch
        series = series_branch(f, pc, order, chart=ch)
        _, _, p_aff = data
        lists = {}
        one = field.one()
        zero = field.zero()
        lists[unit] = [one] + [zero] * order
        lists[indep] = [p_aff[indep], one] + [zero] * (order - 1)
        dep_list = [p_aff[dep]] + list(series.coeffs)
        lists[dep] = dep_list
        return lists["x"], lists["y"], lists["z"]
    if not f.eval_point(pc).is_zero():
        raise NotOnCurve(str(pc))
    raise SingularPoint(str(pc))


def eval_form_on_parametrization(g: Form3, xs, ys, zs, order):
    """Coefficient list (ascending, mod u^(order+1)) of g(X(u), Y(u), Z(u))."""
    field = g.field
    zero = field.zero()

    def mul(a, b):
        out = [zero] * (order + 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                if i + j > order:
                    break
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return out

    def power(a, n):
        acc = [field.one()] + [zero] * order
        base = a
        while n:
            if n & 1:
                acc = mul(acc, base)
            base = mul(base, base)
            n >>= 1
        return acc

    total = [zero] * (order + 1)
    basis = {"x": xs, "y": ys, "z": zs}
    cache = {}
    for e, c in g.poly.terms.items():
        term = [c] + [zero] * order
        for name, k in zip(FORM_VARS, e):
            if k:
                key = (name, k)
                if key not in cache:
                    cache[key] = power(basis[name], k)
                term = mul(term, cache[key])
        total = [t + s for t, s in zip(total, term)]
    return total


# ---------------------------------------------------------------------------
# root extraction policy
# ---------------------------------------------------------------------------

def _int_divisors(n, cap=200000):
    """All positive divisors of |n| (trial division + Pollard rho)."""
    n = abs(n)
    if n == 0:
        return []
    factors = {}

    def add(p, e=1):
        factors[p] = factors.get(p, 0) + e

    def pollard(m):
        if m % 2 == 0:
            return 2
        x, y, c, d = 2, 2, 1, 1
        while d == 1:
            x = (x * x + c) % m
            y = (y * y + c) % m
            y = (y * y + c) % m
            from math import gcd as _g
            d = _g(abs(x - y), m)
            if d == m:
                c += 1
                x = y = 2
                d = 1
        return d

    def is_prime(m):
        if m < 2:
            return False
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
            if m % p == 0:
                return m == p
        d, s = m - 1, 0
        while d % 2 == 0:
            d //= 2
            s += 1
        for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
            v = pow(a, d, m)
            if v in (1, m - 1):
                continue
            for _ in range(s - 1):
                v = v * v % m
                if v == m - 1:
                    break
            else:
                return False
        return True

    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            add(m)
            continue
        for p in range(2, 1000):
            if m % p == 0:
                add(p)
                stack.append(m // p)
                break
        else:
            d = pollard(m)
            stack.extend([d, m // d])
    divs = [1]
    for p, e in factors.items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
        if len(divs) > cap:
            return None
    return sorted(divs)


def _rational_roots_of_fraction_poly(coeffs):
    """Rational roots of a polynomial with Fraction coefficients (all of them)."""
    cs = _poly_trim(list(coeffs))
    if not cs:
        return []
    roots = []
    # strip zero roots
    z = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        z += 1
    if z:
        roots.append(Fraction(0))
    if len(cs) <= 1:
        return roots
    from math import lcm
    den = 1
    for c in cs:
        den = lcm(den, c.denominator)
    ics = [int(c * den) for c in cs]
    from math import gcd
    g = 0
    for c in ics:
        g = gcd(g, abs(c))
    ics = [c // g for c in ics]
    d0 = _int_divisors(ics[0])
    dn = _int_divisors(ics[-1])
    if d0 is None or dn is None:
        return roots  # too many candidates; caller records incompleteness
    seen = set()
    for p in d0:
        for q in dn:
            for s in (1, -1):
                cand = Fraction(s * p, q)
                if cand in seen:
                    continue
                seen.add(cand)
                acc = Fraction(0)
                for c in reversed(ics):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return roots


def _poly_trim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _frac_gcd_poly(a, b):
    """gcd of two Fraction-coefficient polys (lists ascending), monic."""
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        # remainder
        r = list(a)
        inv = Fraction(1) / b[-1]
        while r and len(r) >= len(b):
            c = r[-1] * inv
            d = len(r) - len(b)
            for i, bc in enumerate(b):
                r[d + i] -= c * bc
            r = _poly_trim(r)
        a, b = b, r
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def policy_roots(f: MPoly, var=None):
    """Root extraction policy over the session field.

    Finds (a) rational roots, (b) roots of shape r * w^k with r rational and w
    the field generator (when w has finite multiplicative order).  Returns
    (roots, leftover_profile, complete) where roots is a list of
    (AlgNum, multiplicity), leftover_profile lists (multiplicity, degree) of
    unresolved layers, and complete is True when nothing was left unresolved."""
    if f.is_zero():
        raise ZeroInput("roots of the zero polynomial")
    field = f.field
    eff = f.effective_vars()
    if var is None:
        if len(eff) > 1:
            raise ValueError("ambiguous variable")
        var = next(iter(eff)) if eff else f.vars[0]
    coeffs = f.as_univariate(var)
    if len(coeffs) == 1:
        return [], [], True
    order = field.generator_order() if field.degree > 1 else 1
    units = []
    if order:
        g = field.one()
        w = field.gen()
        for _ in range(order):
            units.append(g)
            g = g * w
    else:
        units = [field.one()]

    candidates = []
    for u in units:
        # f(r*u) componentwise: for each power-basis coordinate a Fraction poly in r
        comp = [[Fraction(0)] * len(coeffs) for _ in range(field.degree)]
        upow = field.one()
        for j, cj in enumerate(coeffs):
            v = cj * upow
            for i in range(field.degree):
                comp[i][j] = v.coords[i]
            upow = upow * u
        nonzero = [_poly_trim(list(c)) for c in comp]
        nonzero = [c for c in nonzero if c]
        if not nonzero:
            continue
        g = nonzero[0]
        for c in nonzero[1:]:
            g = _frac_gcd_poly(g, c)
            if len(g) == 1:
                break
        if len(g) <= 1:
            continue
        for r in _rational_roots_of_fraction_poly(g):
            candidates.append(u * field.from_rat(r))

    # deduplicate and divide out
    roots = []
    rem = coeffs
    seen = set()
    for cand in candidates:
        if cand in seen:
            continue
        seen.add(cand)
        mult = 0
        while len(rem) > 1:
            # synthetic division by (x - cand)
            out = []
            acc = field.zero()
            for c in reversed(rem):
                acc = acc * cand + c
                out.append(acc)
            remainder = out.pop()
            if not remainder.is_zero():
                break
            rem = list(reversed(out))
            mult += 1
        if mult:
            roots.append((cand, mult))
    leftover = []
    complete = len(rem) <= 1
    if not complete:
        leftover_poly = MPoly.from_univariate(field, f.vars, var, rem)
        leftover = squarefree_profile(leftover_poly, var)
    roots.sort(key=lambda rm: tuple(map(str, rm[0].coords)))
    return roots, leftover, complete
