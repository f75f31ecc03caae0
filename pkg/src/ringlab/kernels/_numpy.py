"""Vectorised numpy versions of the table kernels.

Signatures and results match :mod:`ringlab.kernels._numba` exactly; the
test-suite compares the two on every catalog ring.
"""

import numpy as np

NONE3 = (-1, -1, -1)


def _first(mask):
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def first_assoc_violation(op):
    n = op.shape[0]
    for a in range(n):
        # lhs[b, c] = (a.b).c ; rhs[b, c] = a.(b.c)
        lhs = op[op[a]]
        rhs = op[a][op]
        hit = _first(lhs != rhs)
        if hit is not None:
            return (a, hit[0], hit[1])
    return NONE3


def first_left_distrib_violation(mul, add):
    n = mul.shape[0]
    for a in range(n):
        lhs = mul[a][add]                    # a(b+c)
        rhs = add[mul[a][:, None], mul[a][None, :]]  # ab + ac
        hit = _first(lhs != rhs)
        if hit is not None:
            return (a, hit[0], hit[1])
    return NONE3


def first_right_distrib_violation(mul, add):
    n = mul.shape[0]
    for a in range(n):
        lhs = mul[add[a], :]                 # (a+b)c, indexed [b, c]
        rhs = add[mul[a][None, :], mul]      # ac + bc
        hit = _first(lhs != rhs)
        if hit is not None:
            return (a, hit[0], hit[1])
    return NONE3


def nilpotent_mask(mul, zero):
    n = mul.shape[0]
    idx = np.arange(n)
    power = idx.copy()
    out = power == zero
    for _ in range(n):
        power = mul[power, idx]
        out |= power == zero
    return out


def _support(values, n):
    return np.flatnonzero(np.bincount(values, minlength=n))


def sandwich_left(mul, target, rows):
    """out[k, b] is True iff a R b lies inside ``target`` for a = rows[k]."""
    n = mul.shape[0]
    out = np.empty((len(rows), n), dtype=np.bool_)
    for k, a in enumerate(rows):
        a_r = _support(mul[a], n)
        out[k] = target[mul[a_r]].all(axis=0)
    return out


def sandwich_right(mul, target, rows):
    """out[k, b] is True iff b R a lies inside ``target`` for a = rows[k]."""
    n = mul.shape[0]
    out = np.empty((len(rows), n), dtype=np.bool_)
    for k, a in enumerate(rows):
        r_a = _support(mul[:, a], n)
        out[k] = target[mul[:, r_a]].all(axis=1)
    return out


def first_symmetric_violation(mul, zero):
    n = mul.shape[0]
    for a in range(n):
        z = mul[mul[a]] == zero      # z[b, c]: abc == 0
        hit = _first(z & ~z.T)
        if hit is not None:
            return (a, hit[0], hit[1])
    return NONE3


def additive_closure(add, mask):
    members = np.flatnonzero(mask)
    closed = mask.copy()
    frontier = members
    while len(frontier):
        current = np.flatnonzero(closed)
        sums = add[np.ix_(frontier, current)].ravel()
        fresh = np.zeros_like(closed)
        fresh[sums] = True
        fresh &= ~closed
        closed |= fresh
        frontier = np.flatnonzero(fresh)
    return closed


def triple_sandwich(mul, target, sand, reps):
    """w[i, j, k] is True iff a R b R c lies in ``target`` for reps (a, b, c).

    ``sand`` is the full left-sandwich matrix for ``target``.
    """
    n = mul.shape[0]
    q = len(reps)
    out = np.empty((q, q, q), dtype=np.bool_)
    sub = sand[:, reps]
    for i, a in enumerate(reps):
        a_r = _support(mul[a], n)
        for j, b in enumerate(reps):
            a_r_b = _support(mul[a_r, b], n)
            out[i, j] = sub[a_r_b].all(axis=0)
    return out


def qa_first_violation(mul, add, zero, zl, degree):
    """Least (f, g) of degree <= ``degree`` with f R g = 0 but a_i R b_j != 0.

    Polynomials are coded as base-n integers whose most significant digit is
    the constant coefficient.  Returns (-1, -1) when none exists.
    """
    n = mul.shape[0]
    width = degree + 1
    total = n ** width
    coeffs = np.array(np.unravel_index(np.arange(total), (n,) * width)).T
    # arb[a, r, b] = a r b
    arb = mul[mul[:, :, None], np.arange(n)[None, None, :]]
    for f in range(total):
        a = coeffs[f]
        # pairs whose coefficients already annihilate cannot violate
        ok = np.ones(total, dtype=np.bool_)
        for i in range(width):
            for j in range(width):
                ok &= zl[a[i], coeffs[:, j]]
        cand = np.flatnonzero(~ok)
        if len(cand) == 0:
            continue
        b = coeffs[cand]
        vanish = np.ones(len(cand), dtype=np.bool_)
        for k in range(2 * degree + 1):
            acc = np.full((n, len(cand)), zero, dtype=mul.dtype)
            for i in range(max(0, k - degree), min(k, degree) + 1):
                acc = add[acc, arb[a[i]][:, b[:, k - i]]]
            vanish &= (acc == zero).all(axis=0)
        hit = np.flatnonzero(vanish)
        if len(hit):
            return (f, int(cand[hit[0]]))
    return (-1, -1)
