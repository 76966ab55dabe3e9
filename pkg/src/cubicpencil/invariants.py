"""Degree-4 and degree-6 invariants of a ternary cubic, and the discriminant
combination built from them.

`aronhold_S` / `aronhold_T` evaluate the frozen invariant polynomials on the
ten coefficients of a cubic form; `disc_cubic` is 64*S^3 - T^2, which vanishes
exactly on singular cubics.  All three also evaluate with a pencil parameter:
feeding coefficient lists whose entries are univariate polynomials in t yields
S(t), T(t), disc(t) for the member family.
"""

from __future__ import annotations

from ._aronhold_data import S_TERMS, T_TERMS
from .polyforms import Form3, MPoly, form_coeff_vector


def _eval_terms(terms, coeffs, zero):
    tot = zero
    for mu, c in terms.items():
        term = None
        for i in mu:
            term = coeffs[i] if term is None else term * coeffs[i]
        tot = tot + term * c
    return tot


def aronhold_S(f: Form3):
    """Degree-4 invariant; S = m^4 - m on x^3+y^3+z^3+6m*xyz."""
    cs = form_coeff_vector(f, 3)
    return _eval_terms(S_TERMS, cs, f.field.zero())


def aronhold_T(f: Form3):
    """Degree-6 invariant; T = 1 - 20m^3 - 8m^6 on x^3+y^3+z^3+6m*xyz."""
    cs = form_coeff_vector(f, 3)
    return _eval_terms(T_TERMS, cs, f.field.zero())


def disc_cubic(f: Form3):
    """64*S^3 - T^2; zero exactly when the cubic is singular (or non-reduced)."""
    S = aronhold_S(f)
    T = aronhold_T(f)
    return S ** 3 * 64 - T ** 2


def member_coeff_polys(gen0: Form3, gen1: Form3, tvar_ring):
    """Coefficient vector of gen0 + t*gen1 as univariate polynomials in t.

    `tvar_ring` is a pair (vars tuple, var name) for the target MPoly ring."""
    field = gen0.field
    vars_, tname = tvar_ring
    t = MPoly.variable(field, vars_, tname)
    c0 = form_coeff_vector(gen0, 3)
    c1 = form_coeff_vector(gen1, 3)
    return [MPoly.constant(field, vars_, a) + t * b for a, b in zip(c0, c1)]


def member_S_poly(gen0: Form3, gen1: Form3, vars_=("t",), tname="t") -> MPoly:
    cs = member_coeff_polys(gen0, gen1, (vars_, tname))
    return _eval_terms(S_TERMS, cs, MPoly.zero(gen0.field, vars_))


def member_T_poly(gen0: Form3, gen1: Form3, vars_=("t",), tname="t") -> MPoly:
    cs = member_coeff_polys(gen0, gen1, (vars_, tname))
    return _eval_terms(T_TERMS, cs, MPoly.zero(gen0.field, vars_))


def member_disc_poly(gen0: Form3, gen1: Form3, vars_=("t",), tname="t") -> MPoly:
    """disc(t) of the member family gen0 + t*gen1 (degree <= 12)."""
    S = member_S_poly(gen0, gen1, vars_, tname)
    T = member_T_poly(gen0, gen1, vars_, tname)
    return S ** 3 * 64 - T ** 2
