"""Frozen invariants of ternary cubics.

The two generators of the invariant ring (degrees 4 and 6 in the ten cubic
coefficients) were derived by solving the invariance equations: on the lattice
of torus-weight-zero coefficient monomials, invariance under the four
elementary shears pins each invariant up to scale (the solution space is
one-dimensional; see tools/derive_invariants.py, which reproduces the
computation).  Normalization used here, stated on the family
x^3 + y^3 + z^3 + 6m*xyz:

    S = m^4 - m,          T = 1 - 20*m^3 - 8*m^6,

and the discriminant combination

    DISC = 64*S^3 - T^2

vanishes exactly on singular cubics (weight: DISC(f . M) = det(M)^12 DISC(f)).
Terms are keyed by multisets of coefficient indices into the graded-lex
monomial basis x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
"""

from fractions import Fraction

S_TERMS = {
    (0, 3, 7, 9): Fraction(1, 9),
    (0, 3, 8, 8): Fraction(-1, 27),
    (0, 4, 6, 9): Fraction(-1, 6),
    (0, 4, 7, 8): Fraction(1, 54),
    (0, 5, 6, 8): Fraction(1, 9),
    (0, 5, 7, 7): Fraction(-1, 27),
    (1, 1, 7, 9): Fraction(-1, 27),
    (1, 1, 8, 8): Fraction(1, 81),
    (1, 2, 6, 9): Fraction(1, 9),
    (1, 2, 7, 8): Fraction(-1, 81),
    (1, 3, 4, 9): Fraction(1, 54),
    (1, 3, 5, 8): Fraction(-1, 81),
    (1, 4, 4, 8): Fraction(-1, 162),
    (1, 4, 5, 7): Fraction(1, 54),
    (1, 5, 5, 6): Fraction(-1, 27),
    (2, 2, 6, 8): Fraction(-1, 27),
    (2, 2, 7, 7): Fraction(1, 81),
    (2, 3, 3, 9): Fraction(-1, 27),
    (2, 3, 4, 8): Fraction(1, 54),
    (2, 3, 5, 7): Fraction(-1, 81),
    (2, 4, 4, 7): Fraction(-1, 162),
    (2, 4, 5, 6): Fraction(1, 54),
    (3, 3, 5, 5): Fraction(1, 81),
    (3, 4, 4, 5): Fraction(-1, 162),
    (4, 4, 4, 4): Fraction(1, 1296),
}

T_TERMS = {
    (0, 0, 6, 6, 9, 9): Fraction(1),
    (0, 0, 6, 7, 8, 9): Fraction(-2, 3),
    (0, 0, 6, 8, 8, 8): Fraction(4, 27),
    (0, 0, 7, 7, 7, 9): Fraction(4, 27),
    (0, 0, 7, 7, 8, 8): Fraction(-1, 27),
    (0, 1, 3, 6, 9, 9): Fraction(-2, 3),
    (0, 1, 3, 7, 8, 9): Fraction(2, 9),
    (0, 1, 3, 8, 8, 8): Fraction(-4, 81),
    (0, 1, 4, 6, 8, 9): Fraction(2, 9),
    (0, 1, 4, 7, 7, 9): Fraction(-4, 27),
    (0, 1, 4, 7, 8, 8): Fraction(2, 81),
    (0, 1, 5, 6, 7, 9): Fraction(2, 9),
    (0, 1, 5, 6, 8, 8): Fraction(-4, 27),
    (0, 1, 5, 7, 7, 8): Fraction(2, 81),
    (0, 2, 3, 6, 8, 9): Fraction(2, 9),
    (0, 2, 3, 7, 7, 9): Fraction(-4, 27),
    (0, 2, 3, 7, 8, 8): Fraction(2, 81),
    (0, 2, 4, 6, 7, 9): Fraction(2, 9),
    (0, 2, 4, 6, 8, 8): Fraction(-4, 27),
    (0, 2, 4, 7, 7, 8): Fraction(2, 81),
    (0, 2, 5, 6, 6, 9): Fraction(-2, 3),
    (0, 2, 5, 6, 7, 8): Fraction(2, 9),
    (0, 2, 5, 7, 7, 7): Fraction(-4, 81),
    (0, 3, 3, 3, 9, 9): Fraction(4, 27),
    (0, 3, 3, 4, 8, 9): Fraction(-4, 27),
    (0, 3, 3, 5, 7, 9): Fraction(-4, 27),
    (0, 3, 3, 5, 8, 8): Fraction(8, 81),
    (0, 3, 4, 4, 7, 9): Fraction(1, 9),
    (0, 3, 4, 4, 8, 8): Fraction(1, 81),
    (0, 3, 4, 5, 6, 9): Fraction(2, 9),
    (0, 3, 4, 5, 7, 8): Fraction(-10, 81),
    (0, 3, 5, 5, 6, 8): Fraction(-4, 27),
    (0, 3, 5, 5, 7, 7): Fraction(8, 81),
    (0, 4, 4, 4, 6, 9): Fraction(-5, 54),
    (0, 4, 4, 4, 7, 8): Fraction(-1, 162),
    (0, 4, 4, 5, 6, 8): Fraction(1, 9),
    (0, 4, 4, 5, 7, 7): Fraction(1, 81),
    (0, 4, 5, 5, 6, 7): Fraction(-4, 27),
    (0, 5, 5, 5, 6, 6): Fraction(4, 27),
    (1, 1, 1, 6, 9, 9): Fraction(4, 27),
    (1, 1, 1, 7, 8, 9): Fraction(-4, 81),
    (1, 1, 1, 8, 8, 8): Fraction(8, 729),
    (1, 1, 2, 6, 8, 9): Fraction(-4, 27),
    (1, 1, 2, 7, 7, 9): Fraction(8, 81),
    (1, 1, 2, 7, 8, 8): Fraction(-4, 243),
    (1, 1, 3, 3, 9, 9): Fraction(-1, 27),
    (1, 1, 3, 4, 8, 9): Fraction(2, 81),
    (1, 1, 3, 5, 7, 9): Fraction(2, 81),
    (1, 1, 3, 5, 8, 8): Fraction(-4, 243),
    (1, 1, 4, 4, 7, 9): Fraction(1, 81),
    (1, 1, 4, 4, 8, 8): Fraction(-2, 243),
    (1, 1, 4, 5, 6, 9): Fraction(-4, 27),
    (1, 1, 4, 5, 7, 8): Fraction(2, 81),
    (1, 1, 5, 5, 6, 8): Fraction(8, 81),
    (1, 1, 5, 5, 7, 7): Fraction(-1, 27),
    (1, 2, 2, 6, 7, 9): Fraction(-4, 27),
    (1, 2, 2, 6, 8, 8): Fraction(8, 81),
    (1, 2, 2, 7, 7, 8): Fraction(-4, 243),
    (1, 2, 3, 3, 8, 9): Fraction(2, 81),
    (1, 2, 3, 4, 7, 9): Fraction(-10, 81),
    (1, 2, 3, 4, 8, 8): Fraction(2, 81),
    (1, 2, 3, 5, 6, 9): Fraction(2, 9),
    (1, 2, 3, 5, 7, 8): Fraction(-2, 243),
    (1, 2, 4, 4, 6, 9): Fraction(1, 9),
    (1, 2, 4, 4, 7, 8): Fraction(-1, 243),
    (1, 2, 4, 5, 6, 8): Fraction(-10, 81),
    (1, 2, 4, 5, 7, 7): Fraction(2, 81),
    (1, 2, 5, 5, 6, 7): Fraction(2, 81),
    (1, 3, 3, 4, 5, 9): Fraction(2, 81),
    (1, 3, 3, 5, 5, 8): Fraction(-4, 243),
    (1, 3, 4, 4, 4, 9): Fraction(-1, 162),
    (1, 3, 4, 4, 5, 8): Fraction(-1, 243),
    (1, 3, 4, 5, 5, 7): Fraction(2, 81),
    (1, 3, 5, 5, 5, 6): Fraction(-4, 81),
    (1, 4, 4, 4, 4, 8): Fraction(1, 486),
    (1, 4, 4, 4, 5, 7): Fraction(-1, 162),
    (1, 4, 4, 5, 5, 6): Fraction(1, 81),
    (2, 2, 2, 6, 6, 9): Fraction(4, 27),
    (2, 2, 2, 6, 7, 8): Fraction(-4, 81),
    (2, 2, 2, 7, 7, 7): Fraction(8, 729),
    (2, 2, 3, 3, 7, 9): Fraction(8, 81),
    (2, 2, 3, 3, 8, 8): Fraction(-1, 27),
    (2, 2, 3, 4, 6, 9): Fraction(-4, 27),
    (2, 2, 3, 4, 7, 8): Fraction(2, 81),
    (2, 2, 3, 5, 6, 8): Fraction(2, 81),
    (2, 2, 3, 5, 7, 7): Fraction(-4, 243),
    (2, 2, 4, 4, 6, 8): Fraction(1, 81),
    (2, 2, 4, 4, 7, 7): Fraction(-2, 243),
    (2, 2, 4, 5, 6, 7): Fraction(2, 81),
    (2, 2, 5, 5, 6, 6): Fraction(-1, 27),
    (2, 3, 3, 3, 5, 9): Fraction(-4, 81),
    (2, 3, 3, 4, 4, 9): Fraction(1, 81),
    (2, 3, 3, 4, 5, 8): Fraction(2, 81),
    (2, 3, 3, 5, 5, 7): Fraction(-4, 243),
    (2, 3, 4, 4, 4, 8): Fraction(-1, 162),
    (2, 3, 4, 4, 5, 7): Fraction(-1, 243),
    (2, 3, 4, 5, 5, 6): Fraction(2, 81),
    (2, 4, 4, 4, 4, 7): Fraction(1, 486),
    (2, 4, 4, 4, 5, 6): Fraction(-1, 162),
    (3, 3, 3, 5, 5, 5): Fraction(8, 729),
    (3, 3, 4, 4, 5, 5): Fraction(-2, 243),
    (3, 4, 4, 4, 4, 5): Fraction(1, 486),
    (4, 4, 4, 4, 4, 4): Fraction(-1, 5832),
}
