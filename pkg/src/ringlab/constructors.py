"""Derived rings: matrix rings and their subrings, extensions, products.

Element indexing
----------------
* matrix rings (``M``, ``U``, ``D``, ``S1``, ``S2``, ``H``) enumerate their
  free entries base-``|E|`` with the first free entry most significant.  The
  free entries are, in order: all entries row-major (``M``); the upper
  triangle row-major (``U``); the diagonal value then the strict upper
  triangle row-major (``D``); ``(a, b, c)`` (``S1``, ``S2``); ``(c, e, f)``
  (``H``).  Each element's ``rep`` is the full matrix as nested tuples.
* pairs (``prod``, ``dorroh``, ``skew_trivial``) use ``first * n2 + second``.
* ``truncpoly`` codes coefficient tuples ``(c0, ..., c_{d-1})``, ``c0`` most
  significant.
* ``corner`` and ``quot`` keep the parent's order on the surviving elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import DEFAULT_ORDER_CAP, FiniteRing, ideal_generated, quotient, verify_axioms
from .errors import (
    BadCharacteristic,
    BoundExceeded,
    CentralityViolation,
    IllFormedExpr,
    NotHomomorphism,
    NotIdempotent,
)
from .expr import Call, Name, Num, parse


@dataclass(frozen=True, eq=False)
class Endomorphism:
    ring: FiniteRing
    table: np.ndarray
    name: str = "alpha"

    def __call__(self, i):
        return int(self.table[i])

    @classmethod
    def verified(cls, ring, table, name="alpha"):
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (ring.order,) or table.min() < 0 or table.max() >= ring.order:
            raise NotHomomorphism(f"{name}: map must send each of the {ring.order} elements to an element")
        if table[ring.zero] != ring.zero:
            raise NotHomomorphism(f"{name} does not fix zero")
        if table[ring.one] != ring.one:
            raise NotHomomorphism(f"{name} does not fix one")
        for op, word in ((ring.add, "addition"), (ring.mul, "multiplication")):
            bad = np.argwhere(table[op] != op[table[:, None], table[None, :]])
            if len(bad):
                a, b = (int(v) for v in bad[0])
                raise NotHomomorphism(f"{name} does not preserve {word} at ({a}, {b})")
        return cls(ring, table, name)

    @classmethod
    def identity(cls, ring):
        return cls(ring, np.arange(ring.order), "id")


# -- small helpers ----------------------------------------------------------

def _grid(m, width):
    if width == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(np.unravel_index(np.arange(m ** width), (m,) * width), dtype=np.int64).T


def _weights(m, width):
    return m ** np.arange(width - 1, -1, -1, dtype=np.int64)


def _wrap(label):
    return f"({label})" if any(ch in label for ch in "+ ,") else label


def _matrix_label(E, mat):
    return "[" + ",".join("[" + ",".join(E.label(x) for x in row) + "]" for row in mat) + "]"


def _matrix_rep(E, mat):
    return tuple(tuple(E.rep(x) for x in row) for row in mat)


def _matmul(E, A, B):
    """All products A[i] @ B[j] over E, shape (len(A), len(B), k, k)."""
    terms = E.mul[A[:, None, :, :, None], B[None, :, None, :, :]]  # [i, j, p, r, q]
    acc = terms[:, :, :, 0, :]
    for r in range(1, A.shape[-1]):
        acc = E.add[acc, terms[:, :, :, r, :]]
    return acc


def _check_cap(order, cap, what):
    if order > cap:
        raise BoundExceeded(f"{what} would have order {order} > cap {cap}")


# -- base ring --------------------------------------------------------------

def zmod(n: int) -> FiniteRing:
    if n < 1:
        raise IllFormedExpr("Zmod needs n >= 1")
    idx = np.arange(n)
    return FiniteRing((idx[:, None] + idx) % n, (idx[:, None] * idx) % n, 0, 1 % n, name=f"Zmod({n})")


# -- matrix subrings ----------------------------------------------------------

def _matrix_subring(E, k, free, fill, name, cap):
    m = E.order
    width = len(free)
    _check_cap(m ** width, cap, name)
    coords = _grid(m, width)
    mats = fill(coords)
    weights = _weights(m, width)
    rows = np.array([p for p, _ in free])
    cols = np.array([q for _, q in free])

    def encode(ms):
        shape = ms.shape[:-2]
        flat = ms.reshape(-1, k, k)
        c = flat[:, rows, cols]
        if not np.array_equal(fill(c), flat):
            raise RuntimeError(f"{name}: products leave the subring")
        return (c @ weights).reshape(shape)

    mul = encode(_matmul(E, mats, mats))
    add = encode(E.add[mats[:, None], mats[None, :]])
    zero = int(encode(np.full((1, k, k), E.zero))[0])
    ident = np.full((1, k, k), E.zero)
    ident[0, np.arange(k), np.arange(k)] = E.one
    one = int(encode(ident)[0])
    return FiniteRing(
        add, mul, zero, one, name=name,
        reps=tuple(_matrix_rep(E, mat) for mat in mats),
        labels=tuple(_matrix_label(E, mat) for mat in mats),
    )


def _blank(E, coords, k):
    return np.full((len(coords), k, k), E.zero, dtype=np.int64)


def full_matrix(k, E, cap=DEFAULT_ORDER_CAP, name=None):
    free = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_subring(E, k, free, lambda c: c.reshape(-1, k, k).copy(), name or f"M({k}, {E.name})", cap)


def upper_triangular(k, E, cap=DEFAULT_ORDER_CAP, name=None):
    free = [(i, j) for i in range(k) for j in range(i, k)]

    def fill(c):
        mats = _blank(E, c, k)
        for t, (i, j) in enumerate(free):
            mats[:, i, j] = c[:, t]
        return mats

    return _matrix_subring(E, k, free, fill, name or f"U({k}, {E.name})", cap)


def diagonal_constant(k, E, cap=DEFAULT_ORDER_CAP, name=None):
    """D_k(E): upper triangular with all diagonal entries equal."""
    free = [(0, 0)] + [(i, j) for i in range(k) for j in range(i + 1, k)]

    def fill(c):
        mats = _blank(E, c, k)
        for i in range(k):
            mats[:, i, i] = c[:, 0]
        for t, (i, j) in enumerate(free[1:], 1):
            mats[:, i, j] = c[:, t]
        return mats

    return _matrix_subring(E, k, free, fill, name or f"D({k}, {E.name})", cap)


def build_S1(E, cap=DEFAULT_ORDER_CAP, name=None):
    """[[a, b, c], [0, a, 0], [0, 0, a]]"""
    free = [(0, 0), (0, 1), (0, 2)]

    def fill(c):
        mats = _blank(E, c, 3)
        for i in range(3):
            mats[:, i, i] = c[:, 0]
        mats[:, 0, 1] = c[:, 1]
        mats[:, 0, 2] = c[:, 2]
        return mats

    return _matrix_subring(E, 3, free, fill, name or f"S1({E.name})", cap)


def build_S2(E, cap=DEFAULT_ORDER_CAP, name=None):
    """[[a, 0, c], [0, a, b], [0, 0, a]]"""
    free = [(0, 0), (1, 2), (0, 2)]

    def fill(c):
        mats = _blank(E, c, 3)
        for i in range(3):
            mats[:, i, i] = c[:, 0]
        mats[:, 1, 2] = c[:, 1]
        mats[:, 0, 2] = c[:, 2]
        return mats

    return _matrix_subring(E, 3, free, fill, name or f"S2({E.name})", cap)


def build_H(s, t, E, cap=DEFAULT_ORDER_CAP, name=None):
    """Matrices [[a,0,0],[c,d,e],[0,0,f]] with a - d = s c and d - f = t e.

    Parameterised by the free entries (c, e, f): d = t e + f, a = s c + d.
    """
    for label, x in (("s", s), ("t", t)):
        if not E.central_mask[x]:
            raise CentralityViolation(f"{label} = {E.label(x)} is not central in {E.name}")
    free = [(1, 0), (1, 2), (2, 2)]

    def fill(coords):
        c, e, f = coords[:, 0], coords[:, 1], coords[:, 2]
        d = E.add[E.mul[t, e], f]
        a = E.add[E.mul[s, c], d]
        mats = _blank(E, coords, 3)
        mats[:, 0, 0] = a
        mats[:, 1, 0] = c
        mats[:, 1, 1] = d
        mats[:, 1, 2] = e
        mats[:, 2, 2] = f
        return mats

    return _matrix_subring(E, 3, free, fill, name or f"H({s}, {t}, {E.name})", cap)


# -- pair constructions -------------------------------------------------------

def _pairs(n1, n2):
    return np.repeat(np.arange(n1), n2), np.tile(np.arange(n2), n1)


def product(A, B, cap=DEFAULT_ORDER_CAP, name=None):
    n2 = B.order
    _check_cap(A.order * n2, cap, "prod")
    i, j = _pairs(A.order, n2)
    add = A.add[i[:, None], i[None, :]] * n2 + B.add[j[:, None], j[None, :]]
    mul = A.mul[i[:, None], i[None, :]] * n2 + B.mul[j[:, None], j[None, :]]
    return FiniteRing(
        add, mul, A.zero * n2 + B.zero, A.one * n2 + B.one, name=name or f"prod({A.name}, {B.name})",
        reps=tuple((A.rep(x), B.rep(y)) for x, y in zip(i, j)),
        labels=tuple(f"({A.label(x)}, {B.label(y)})" for x, y in zip(i, j)),
    )


def build_dorroh(E, m, cap=DEFAULT_ORDER_CAP, name=None):
    """Pairs (r, k), k in Z_m, with (r1,k1)(r2,k2) = (r1 r2 + k1 r2 + k2 r1, k1 k2)."""
    char = E.additive_exponent
    if m < 1 or m % char:
        raise BadCharacteristic(f"dorroh needs m a positive multiple of char({E.name}) = {char}, got {m}")
    n = E.order
    _check_cap(n * m, cap, "dorroh")
    times = np.empty((m, n), dtype=np.int64)  # times[k, r] = k . r
    times[0] = E.zero
    for k in range(1, m):
        times[k] = E.add[times[k - 1], np.arange(n)]
    r, k = _pairs(n, m)
    r1, r2 = r[:, None], r[None, :]
    k1, k2 = k[:, None], k[None, :]
    add = E.add[r1, r2] * m + (k1 + k2) % m
    first = E.add[E.add[E.mul[r1, r2], times[k1, r2]], times[k2, r1]]
    mul = first * m + (k1 * k2) % m
    return FiniteRing(
        add, mul, E.zero * m, E.zero * m + 1 % m, name=name or f"dorroh({E.name}, {m})",
        reps=tuple((E.rep(x), int(y)) for x, y in zip(r, k)),
        labels=tuple(f"({E.label(x)}, {y})" for x, y in zip(r, k)),
    )


def build_skew_trivial(E, alpha: Endomorphism, cap=DEFAULT_ORDER_CAP, name=None):
    """Pairs (f, g) ~ [[f, g], [0, f]] with (f, g)(h, t) = (f h, alpha(f) t + g h)."""
    if alpha.ring is not E:
        raise NotHomomorphism("endomorphism belongs to a different ring")
    n = E.order
    _check_cap(n * n, cap, "skew_trivial")
    f, g = _pairs(n, n)
    f1, f2 = f[:, None], f[None, :]
    g1, g2 = g[:, None], g[None, :]
    add = E.add[f1, f2] * n + E.add[g1, g2]
    mul = E.mul[f1, f2] * n + E.add[E.mul[alpha.table[f1], g2], E.mul[g1, f2]]
    return FiniteRing(
        add, mul, E.zero * n + E.zero, E.one * n + E.zero,
        name=name or f"skew_trivial({E.name}, {alpha.name})",
        reps=tuple((E.rep(x), E.rep(y)) for x, y in zip(f, g)),
        labels=tuple(f"({E.label(x)}, {E.label(y)})" for x, y in zip(f, g)),
    )


def _poly_label(E, coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if c == E.zero:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        lab = E.label(c)
        if not mono:
            terms.append(lab)
        elif c == E.one:
            terms.append(mono)
        else:
            terms.append(_wrap(lab) + mono)
    return "+".join(terms) if terms else E.label(E.zero)


def build_truncpoly(E, d, cap=DEFAULT_ORDER_CAP, name=None):
    """E[x]/(x^d); carries the constant-term endomorphism as ``alpha0``."""
    if d < 1:
        raise IllFormedExpr("truncpoly needs d >= 1")
    m = E.order
    _check_cap(m ** d, cap, "truncpoly")
    coords = _grid(m, d)
    weights = _weights(m, d)
    a, b = coords[:, None, :], coords[None, :, :]
    add = E.add[a, b] @ weights
    prod = np.full((len(coords), len(coords), d), E.zero, dtype=np.int64)
    for i in range(d):
        for j in range(d - i):
            prod[:, :, i + j] = E.add[prod[:, :, i + j], E.mul[a[:, :, i], b[:, :, j]]]
    mul = prod @ weights
    const = coords.copy()
    const[:, 1:] = E.zero
    zero = int(np.full(d, E.zero) @ weights)
    unit = np.full(d, E.zero)
    unit[0] = E.one
    ring = FiniteRing(
        add, mul, zero, int(unit @ weights), name=name or f"truncpoly({E.name}, {d})",
        reps=tuple(tuple(E.rep(x) for x in c) for c in coords),
        labels=tuple(_poly_label(E, c) for c in coords),
    )
    alpha0 = Endomorphism.verified(ring, const @ weights, "alpha0")
    ring.endomorphisms["alpha0"] = alpha0
    return ring


def build_corner(E, e, name=None):
    """eEe with identity e."""
    if E.mul[e, e] != e:
        raise NotIdempotent(f"{E.label(e)} is not idempotent in {E.name}")
    keep = np.unique(E.mul[E.mul[e, :], e])
    new = np.full(E.order, -1, dtype=np.int64)
    new[keep] = np.arange(len(keep))
    sub = np.ix_(keep, keep)
    return FiniteRing(
        new[E.add[sub]], new[E.mul[sub]], new[E.zero], new[e], name=name or f"corner({E.name}, {e})",
        reps=tuple(E.rep(x) for x in keep),
        labels=tuple(E.label(x) for x in keep),
    )


def build_quotient(E, gens, name=None):
    q = quotient(E, ideal_generated(E, gens))
    return FiniteRing(q.add, q.mul, q.zero, q.one, name=name or f"quot({E.name}, {', '.join(map(str, gens))})",
                      reps=q.reps, labels=q.labels)


# -- expression evaluation ----------------------------------------------------

# argument kinds: int, ring, elem (index into the ring argument), alpha, elems (variadic)
SIGNATURES = {
    "Zmod": ("int",),
    "M": ("int", "ring"),
    "U": ("int", "ring"),
    "D": ("int", "ring"),
    "S1": ("ring",),
    "S2": ("ring",),
    "H": ("elem", "elem", "ring"),
    "dorroh": ("ring", "int"),
    "skew_trivial": ("ring", "alpha"),
    "truncpoly": ("ring", "int"),
    "prod": ("ring", "ring"),
    "corner": ("ring", "elem"),
    "quot": ("ring", "elems"),
}


def _expected_order(name, ints, rings):
    sizes = [R.order for R in rings]
    if name == "M":
        return sizes[0] ** (ints[0] ** 2)
    if name == "U":
        return sizes[0] ** (ints[0] * (ints[0] + 1) // 2)
    if name == "D":
        return sizes[0] ** (ints[0] * (ints[0] - 1) // 2 + 1)
    if name in ("S1", "S2", "H"):
        return sizes[0] ** 3
    if name == "dorroh":
        return sizes[0] * ints[0]
    if name == "skew_trivial":
        return sizes[0] ** 2
    if name == "truncpoly":
        return sizes[0] ** ints[0]
    if name == "prod":
        return sizes[0] * sizes[1]
    if name == "Zmod":
        return ints[0]
    return 0


def _check_args(node: Call):
    sig = SIGNATURES.get(node.name)
    if sig is None:
        raise IllFormedExpr(f"unknown constructor {node.name!r} at line {node.pos[0]}, column {node.pos[1]}")
    args = node.args
    if sig[-1] == "elems":
        if len(args) < len(sig) - 1:
            raise IllFormedExpr(f"{node.name} takes at least {len(sig) - 1} arguments")
        kinds = list(sig[:-1]) + ["elem"] * (len(args) - len(sig) + 1)
    else:
        if len(args) != len(sig):
            raise IllFormedExpr(f"{node.name} takes {len(sig)} arguments, got {len(args)}")
        kinds = list(sig)
    for kind, arg in zip(kinds, args):
        ok = {
            "int": isinstance(arg, Num),
            "elem": isinstance(arg, Num),
            "ring": isinstance(arg, Call),
            "alpha": isinstance(arg, Name),
        }[kind]
        if not ok:
            raise IllFormedExpr(
                f"{node.name}: argument {arg} (line {arg.pos[0]}, column {arg.pos[1]}) should be {kind}"
            )
    return kinds


def build(expr, order_cap: int = DEFAULT_ORDER_CAP, validate: bool = True) -> FiniteRing:
    """Evaluate a constructor expression (text or parsed) to a validated ring."""
    node = parse(expr) if isinstance(expr, str) else expr
    return _build_cached(str(node), order_cap, validate)


@lru_cache(maxsize=512)
def _build_cached(text, order_cap, validate):
    node = parse(text)
    ring = _evaluate(node, order_cap)
    if validate:
        verify_axioms(ring.add, ring.mul, ring.zero, ring.one, name=ring.name)
    return ring


def _evaluate(node: Call, cap) -> FiniteRing:
    kinds = _check_args(node)
    rings = [build(a, cap) for k, a in zip(kinds, node.args) if k == "ring"]
    ints = [a.value for k, a in zip(kinds, node.args) if k == "int"]
    elems = [a.value for k, a in zip(kinds, node.args) if k == "elem"]
    name = str(node)
    if any(v < 1 for v in ints):
        raise IllFormedExpr(f"{name}: integer parameters must be >= 1")
    host = rings[-1] if node.name == "H" else (rings[0] if rings else None)
    for v in elems:
        if v >= host.order:
            raise IllFormedExpr(f"{name}: element {v} out of range for {host.name} (order {host.order})")
    _check_cap(_expected_order(node.name, ints, rings), cap, name)

    n = node.name
    if n == "Zmod":
        return zmod(ints[0])
    if n == "M":
        return full_matrix(ints[0], rings[0], cap, name)
    if n == "U":
        return upper_triangular(ints[0], rings[0], cap, name)
    if n == "D":
        return diagonal_constant(ints[0], rings[0], cap, name)
    if n == "S1":
        return build_S1(rings[0], cap, name)
    if n == "S2":
        return build_S2(rings[0], cap, name)
    if n == "H":
        return build_H(elems[0], elems[1], rings[0], cap, name)
    if n == "dorroh":
        return build_dorroh(rings[0], ints[0], cap, name)
    if n == "truncpoly":
        return build_truncpoly(rings[0], ints[0], cap, name)
    if n == "prod":
        return product(rings[0], rings[1], cap, name)
    if n == "corner":
        return build_corner(rings[0], elems[0], name)
    if n == "quot":
        return build_quotient(rings[0], elems, name)
    if n == "skew_trivial":
        E = rings[0]
        ident = node.args[1].ident
        if ident == "id":
            alpha = Endomorphism.identity(E)
        elif ident in E.endomorphisms:
            alpha = E.endomorphisms[ident]
        else:
            raise IllFormedExpr(f"{name}: {E.name} has no endomorphism named {ident!r}")
        return build_skew_trivial(E, alpha, cap, name)
    raise IllFormedExpr(f"unknown constructor {n!r}")  # pragma: no cover
