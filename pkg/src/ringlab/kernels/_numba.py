"""numba-compiled loop versions of the table kernels."""

import numpy as np
from numba import njit

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def first_assoc_violation(op):
    n = op.shape[0]
    for a in range(n):
        for b in range(n):
            ab = op[a, b]
            for c in range(n):
                if op[ab, c] != op[a, op[b, c]]:
                    return (a, b, c)
    return (-1, -1, -1)


@njit(**_JIT)
def first_left_distrib_violation(mul, add):
    n = mul.shape[0]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    return (a, b, c)
    return (-1, -1, -1)


@njit(**_JIT)
def first_right_distrib_violation(mul, add):
    n = mul.shape[0]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[add[a, b], c] != add[mul[a, c], mul[b, c]]:
                    return (a, b, c)
    return (-1, -1, -1)


@njit(**_JIT)
def nilpotent_mask(mul, zero):
    n = mul.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    seen = np.zeros(n, dtype=np.bool_)
    for a in range(n):
        seen[:] = False
        p = a
        # the power sequence lives in n values, so it cycles within n steps
        while not seen[p]:
            if p == zero:
                out[a] = True
                break
            seen[p] = True
            p = mul[p, a]
    return out


@njit(**_JIT)
def _support_row(row, n, buf, flag):
    flag[:] = False
    m = 0
    for r in range(row.shape[0]):
        v = row[r]
        if not flag[v]:
            flag[v] = True
            buf[m] = v
            m += 1
    return m


@njit(**_JIT)
def sandwich_left(mul, target, rows):
    n = mul.shape[0]
    out = np.empty((rows.shape[0], n), dtype=np.bool_)
    buf = np.empty(n, dtype=mul.dtype)
    flag = np.empty(n, dtype=np.bool_)
    for k in range(rows.shape[0]):
        m = _support_row(mul[rows[k]], n, buf, flag)
        for b in range(n):
            ok = True
            for t in range(m):
                if not target[mul[buf[t], b]]:
                    ok = False
                    break
            out[k, b] = ok
    return out


@njit(**_JIT)
def sandwich_right(mul, target, rows):
    n = mul.shape[0]
    out = np.empty((rows.shape[0], n), dtype=np.bool_)
    buf = np.empty(n, dtype=mul.dtype)
    flag = np.empty(n, dtype=np.bool_)
    for k in range(rows.shape[0]):
        m = _support_row(mul[:, rows[k]], n, buf, flag)
        for b in range(n):
            ok = True
            for t in range(m):
                if not target[mul[b, buf[t]]]:
                    ok = False
                    break
            out[k, b] = ok
    return out


@njit(**_JIT)
def first_symmetric_violation(mul, zero):
    n = mul.shape[0]
    for a in range(n):
        for b in range(n):
            ab = mul[a, b]
            for c in range(n):
                if mul[ab, c] == zero and mul[mul[a, c], b] != zero:
                    return (a, b, c)
    return (-1, -1, -1)


@njit(**_JIT)
def additive_closure(add, mask):
    n = add.shape[0]
    closed = mask.copy()
    stack = np.empty(n, dtype=add.dtype)
    members = np.empty(n, dtype=add.dtype)
    top = 0
    count = 0
    for i in range(n):
        if closed[i]:
            stack[top] = i
            top += 1
            members[count] = i
            count += 1
    while top > 0:
        top -= 1
        x = stack[top]
        t = 0
        while t < count:
            s = add[x, members[t]]
            if not closed[s]:
                closed[s] = True
                members[count] = s
                count += 1
                stack[top] = s
                top += 1
            t += 1
    return closed


@njit(**_JIT)
def triple_sandwich(mul, target, sand, reps):
    n = mul.shape[0]
    q = reps.shape[0]
    out = np.empty((q, q, q), dtype=np.bool_)
    a_r = np.empty(n, dtype=mul.dtype)
    a_r_b = np.empty(n, dtype=mul.dtype)
    flag = np.empty(n, dtype=np.bool_)
    for i in range(q):
        m = _support_row(mul[reps[i]], n, a_r, flag)
        for j in range(q):
            b = reps[j]
            flag[:] = False
            mm = 0
            for t in range(m):
                v = mul[a_r[t], b]
                if not flag[v]:
                    flag[v] = True
                    a_r_b[mm] = v
                    mm += 1
            for k in range(q):
                c = reps[k]
                ok = True
                for t in range(mm):
                    if not sand[a_r_b[t], c]:
                        ok = False
                        break
                out[i, j, k] = ok
    return out


@njit(**_JIT)
def _decode(code, n, width, out):
    for i in range(width - 1, -1, -1):
        out[i] = code % n
        code //= n


@njit(**_JIT)
def qa_first_violation(mul, add, zero, zl, degree):
    n = mul.shape[0]
    width = degree + 1
    total = n ** width
    a = np.empty(width, dtype=mul.dtype)
    b = np.empty(width, dtype=mul.dtype)
    for f in range(total):
        _decode(f, n, width, a)
        for g in range(total):
            _decode(g, n, width, b)
            annihilated = True
            for i in range(width):
                for j in range(width):
                    if not zl[a[i], b[j]]:
                        annihilated = False
            if annihilated:
                continue
            vanish = True
            for r in range(n):
                for k in range(2 * degree + 1):
                    acc = zero
                    for i in range(max(0, k - degree), min(k, degree) + 1):
                        acc = add[acc, mul[mul[a[i], r], b[k - i]]]
                    if acc != zero:
                        vanish = False
                        break
                if not vanish:
                    break
            if vanish:
                return (f, g)
    return (-1, -1)
