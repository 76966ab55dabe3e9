"""Exact arithmetic over Q and simple extensions Q(theta).

A NumberField is Q[x]/(modulus) for a monic irreducible integer-normalized
modulus; an AlgNum is a coordinate vector in the power basis 1, theta, ...,
theta^(deg-1).  Rationals are python Fractions (arbitrary precision, always
reduced), elements are immutable, and equality is structural on the reduced
representative.  No floating point is used anywhere.

Cyclotomic fields are the working case: nf_cyclotomic(9) has modulus
w^6 + w^3 + 1 and its generator is a primitive ninth root of unity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DivZero, FieldMismatch, UnsupportedField

Rat = Fraction


def _poly_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_divmod(a, b):
    """Division with remainder in Q[x]; coefficient lists ascending."""
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i, bc in enumerate(b):
            a[d + i] -= c * bc
        a = _poly_trim(a)
    return q, a


def _poly_xgcd(a, b):
    """Extended gcd in Q[x]: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]

    def mul(p, q):
        if not p or not q:
            return []
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] += x * y
        return _poly_trim(out)

    def sub(p, q):
        n = max(len(p), len(q))
        return _poly_trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0)
                           for i in range(n)])

    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    lc = r0[-1]
    return ([c / lc for c in r0], [c / lc for c in s0], [c / lc for c in t0])


class NumberField:
    """Q[x]/(modulus); degree 1 means the ground field Q itself."""

    def __init__(self, modulus, label):
        modulus = tuple(Fraction(c) for c in modulus)
        if not modulus or modulus[-1] != 1:
            raise UnsupportedField("modulus must be monic")
        if len(modulus) < 2:
            raise UnsupportedField("modulus must have degree >= 1")
        self.modulus = modulus
        self.label = label
        self.degree = len(modulus) - 1
        # reductions of theta^k for k = degree .. 2*degree-2
        red = []
        cur = [-c for c in modulus[:-1]]
        red.append(tuple(cur))
        for _ in range(self.degree - 2):
            cur = [Fraction(0)] + cur
            if len(cur) > self.degree:
                top = cur.pop()
                cur = [c + top * r for c, r in zip(cur, red[0])]
            red.append(tuple(cur))
        self._red = red
        self._zero = AlgNum(self, (Fraction(0),) * self.degree)
        self._one = AlgNum(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))
        self._gen_order = None

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({self.label!r}, degree {self.degree})"

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def gen(self):
        """The distinguished root w of the modulus (for degree 1: the root itself)."""
        if self.degree == 1:
            return AlgNum(self, (-self.modulus[0],))
        return AlgNum(self, (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.degree - 2))

    def element(self, coords) -> AlgNum:
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.degree:
            # reduce mod modulus
            while len(coords) > self.degree:
                top = coords.pop()
                if top:
                    k = len(coords) - self.degree
                    red = self._theta_power(self.degree + k)
                    for i, r in enumerate(red):
                        coords[i] += top * r
            coords = coords[: self.degree]
        coords += [Fraction(0)] * (self.degree - len(coords))
        return AlgNum(self, tuple(coords))

    def from_rat(self, q) -> AlgNum:
        return self.element([Fraction(q)])

    def _theta_power(self, k):
        if k < self.degree:
            out = [Fraction(0)] * self.degree
            out[k] = Fraction(1)
            return tuple(out)
        if k - self.degree < len(self._red):
            return self._red[k - self.degree]
        # extend on demand
        while k - self.degree >= len(self._red):
            prev = self._red[-1]
            cur = [Fraction(0)] + list(prev[:-1])
            top = prev[-1]
            if top:
                for i, r in enumerate(self._red[0]):
                    cur[i] += top * r
            self._red.append(tuple(cur))
        return self._red[k - self.degree]

    def generator_order(self):
        """Multiplicative order of the generator, or None if not a root of unity."""
        if self._gen_order is None:
            g = self.gen()
            acc = g
            order = None
            for k in range(1, 4 * self.degree + 5):
                if acc == self.one():
                    order = k
                    break
                acc = acc * g
            self._gen_order = order if order is not None else 0
        return self._gen_order or None


class AlgNum:
    """Element of a NumberField; immutable coordinate vector in the power basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *a):
        raise AttributeError("AlgNum is immutable")

    def _coerce(self, other):
        if isinstance(other, AlgNum):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field.label} vs {other.field.label}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rat(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgNum(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgNum(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return AlgNum(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coords, o.coords
        d = self.field.degree
        if d == 1:
            return AlgNum(self.field, (a[0] * b[0],))
        conv = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                red = self.field._theta_power(k)
                for i, r in enumerate(red):
                    if r:
                        out[i] += c * r
        return AlgNum(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> AlgNum:
        if self.is_zero():
            raise DivZero("inverse of zero")
        if self.field.degree == 1:
            return AlgNum(self.field, (Fraction(1) / self.coords[0],))
        g, s, _ = _poly_xgcd(_poly_trim(self.coords), list(self.field.modulus))
        if len(g) != 1:
            raise DivZero("element not invertible (modulus not irreducible?)")
        inv = [c / g[0] for c in s]
        return self.field.element(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rat(other)
        if not isinstance(other, AlgNum):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __repr__(self):
        return f"AlgNum({format_algnum(self)})"

    def __str__(self):
        return format_algnum(self)


def format_algnum(a: AlgNum) -> str:
    """Polynomial in `w` with rational coefficients, e.g. `1/2*w^3 - 2`."""
    parts = []
    for k in range(a.field.degree - 1, -1, -1):
        c = a.coords[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            wpow = "w" if k == 1 else f"w^{k}"
            body = wpow if abs(c) == 1 else f"{abs(c)}*{wpow}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int):
    """Coefficients of the n-th cyclotomic polynomial, ascending, as Fractions."""
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, list(_cyclotomic_coeffs(d)))
            if r:
                raise UnsupportedField(f"cyclotomic division failed for n={n}")
            num = q
    return tuple(num)


@lru_cache(maxsize=None)
def nf_cyclotomic(n: int) -> NumberField:
    """The n-th cyclotomic field; n = 1 gives Q itself (modulus w - 1)."""
    if not isinstance(n, int) or n < 1:
        raise UnsupportedField(f"unsupported cyclotomic index {n!r}")
    label = "Q" if n == 1 else f"cyclotomic:{n}"
    return NumberField(_cyclotomic_coeffs(n), label)


QQ = nf_cyclotomic(1)


def field_from_label(label: str) -> NumberField:
    """Resolve a field spec string: `Q` or `cyclotomic:N`."""
    label = label.strip()
    if label in ("Q", "q"):
        return QQ
    if label.startswith("cyclotomic:"):
        try:
            n = int(label.split(":", 1)[1])
        except ValueError:
            raise UnsupportedField(f"bad field spec {label!r}") from None
        return nf_cyclotomic(n)
    raise UnsupportedField(f"bad field spec {label!r}")
