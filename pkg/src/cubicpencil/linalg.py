"""Exact linear algebra over a number field: RREF, kernels, solving.

Deterministic pivoting (first nonzero entry in column order), so kernels and
reduced forms are reproducible.
"""

from __future__ import annotations


def rref(rows, field):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def kernel_basis(rows, field, ncols=None):
    """Basis of the right kernel {v : M v = 0}, from the RREF free variables."""
    if rows:
        ncols = len(rows[0])
    if ncols is None:
        raise ValueError("empty matrix needs explicit ncols")
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def rank(rows, field):
    _, pivots = rref(rows, field)
    return len(pivots)


def solve(rows, rhs, field):
    """One solution of M v = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    ncols = len(rows[0])
    for r in red:
        if all(v.is_zero() for v in r[:-1]) and not r[-1].is_zero():
            return None
    v = [field.zero()] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        v[pc] = red[r][-1]
    return v


def row_space_canonical(rows, field):
    """Canonical form of the row space (RREF rows, zero rows dropped)."""
    red, pivots = rref(rows, field)
    return [tuple(r) for r in red[: len(pivots)]]
