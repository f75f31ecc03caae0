"""Bounded-degree polynomials over a FiniteRing.

R[x] is infinite, so every quantified check here ranges over polynomials of
degree at most D and records the bound it used.  Products that would need a
coefficient beyond the cap raise a :class:`TruncationFlag` instead of wrapping.

Polynomials in bulk are rows of a coefficient array ``(count, D + 1)``; the
enumeration order is lexicographic with the constant term first, which is the
order witnesses are reported in.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import FiniteRing
from .errors import BoundExceeded, RingMismatch
from .predicates import PropertyVerdict, zero_sandwich

DEFAULT_DEGREE = 2
DEFAULT_MIDDLE_DEGREE = 2
DEFAULT_POWER_CAP = 4
PAIR_CAP = 1 << 24
ENUM_CAP = 1 << 20


@dataclass
class TruncationFlag:
    occurred: bool = False

    def __bool__(self):
        return self.occurred


@dataclass(frozen=True, eq=False)
class BoundedPoly:
    ring: FiniteRing
    coeffs: tuple[int, ...]
    degree_cap: int

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        while c and c[-1] == self.ring.zero:
            c.pop()
        if len(c) > self.degree_cap + 1:
            raise BoundExceeded(f"degree {len(c) - 1} exceeds cap {self.degree_cap}")
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, ring, coeffs, degree_cap=DEFAULT_DEGREE):
        return cls(ring, tuple(coeffs), degree_cap)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.zero

    def __eq__(self, other):
        return (isinstance(other, BoundedPoly) and self.ring is other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == self.ring.zero:
                continue
            lab = self.ring.label(c)
            terms.append(lab if i == 0 else f"{lab}x" if i == 1 else f"{lab}x^{i}")
        return " + ".join(terms)


def _conv(R, f, g):
    out = [R.zero] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = int(R.add[out[i + j], R.mul[a, b]])
    return out


def poly_mul(f: BoundedPoly, g: BoundedPoly) -> tuple[BoundedPoly, TruncationFlag]:
    if f.ring is not g.ring:
        raise RingMismatch("polynomials live over different rings")
    if f.degree_cap != g.degree_cap:
        raise RingMismatch("polynomials have different degree caps")
    full = _conv(f.ring, f.coeffs, g.coeffs)
    cap = f.degree_cap + 1
    flag = TruncationFlag(any(c != f.ring.zero for c in full[cap:]))
    return BoundedPoly(f.ring, tuple(full[:cap]), f.degree_cap), flag


def poly_add(f: BoundedPoly, g: BoundedPoly) -> BoundedPoly:
    if f.ring is not g.ring:
        raise RingMismatch("polynomials live over different rings")
    R = f.ring
    w = max(len(f.coeffs), len(g.coeffs))
    return BoundedPoly(R, tuple(int(R.add[f.coeff(i), g.coeff(i)]) for i in range(w)), f.degree_cap)


def is_nilpotent_poly(f: BoundedPoly, power_cap=DEFAULT_POWER_CAP) -> tuple[bool, TruncationFlag]:
    """True if f^k = 0 for some k <= power_cap with every product exact.

    When a product is truncated the answer is (False, flag set): inconclusive.
    """
    if power_cap < 1:
        raise ValueError("power_cap must be at least 1")
    p = f
    for _ in range(power_cap - 1):
        if p.is_zero():
            return True, TruncationFlag()
        p, flag = poly_mul(p, f)
        if flag:
            return False, flag
    return p.is_zero(), TruncationFlag()


# -- bulk helpers ---------------------------------------------------------------

def _arb(R):
    """arb[a, r, b] = a r b."""
    return R.cached("arb", lambda: R.mul[R.mul[:, :, None], np.arange(R.order)[None, None, :]])


def _enumerate(R, degree):
    width = degree + 1
    total = R.order ** width
    if total > ENUM_CAP:
        raise BoundExceeded(f"{R.order}^{width} polynomials exceed the enumeration cap {ENUM_CAP}")
    return np.array(np.unravel_index(np.arange(total), (R.order,) * width)).T.astype(np.int64)


def _bulk_mul(R, P, F):
    """Row-wise exact products of coefficient arrays P (m, p) and F (m, q)."""
    m, p = P.shape
    q = F.shape[1]
    out = np.full((m, p + q - 1), R.zero, dtype=np.int64)
    for i in range(p):
        for j in range(q):
            out[:, i + j] = R.add[out[:, i + j], R.mul[P[:, i], F[:, j]]]
    return out


def _nilpotent_rows(R, F, power_cap):
    """Boolean mask of rows of F that are nilpotent, powers computed exactly."""
    nil = (F == R.zero).all(axis=1)
    P = F
    for _ in range(power_cap - 1):
        P = _bulk_mul(R, P, F)
        nil |= (P == R.zero).all(axis=1)
    return nil


def _sandwich_zero(R, f, G):
    """For a fixed coefficient list f: mask over rows g of G with f r g = 0 for all r."""
    arb = _arb(R)
    width = G.shape[1]
    ok = np.ones(len(G), dtype=np.bool_)
    for k in range(len(f) + width - 1):
        acc = np.full((R.order, len(G)), R.zero, dtype=np.int64)
        for i in range(max(0, k - width + 1), min(k, len(f) - 1) + 1):
            acc = R.add[acc, arb[f[i]][:, G[:, k - i]]]
        ok &= (acc == R.zero).all(axis=0)
    return ok


def _sandwich_zero_rev(R, G, f):
    """Mask over rows g of G with g r f = 0 for all r."""
    arb = _arb(R)
    width = G.shape[1]
    ok = np.ones(len(G), dtype=np.bool_)
    for k in range(len(f) + width - 1):
        acc = np.full((len(G), R.order), R.zero, dtype=np.int64)
        for j in range(max(0, k - len(f) + 1), min(k, width - 1) + 1):
            acc = R.add[acc, arb[G[:, j]][:, :, f[k - j]]]
        ok &= (acc == R.zero).all(axis=1)
    return ok


# -- annihilation ---------------------------------------------------------------------

def poly_annihilates(f: BoundedPoly, g: BoundedPoly, middle_degree: int | None = None) -> bool:
    """Whether f h g = 0 for every middle h.

    With ``middle_degree=None`` the middles are the constants r in R, which is
    equivalent to all of R[x] because x is central.  Otherwise every h of
    degree <= middle_degree is tried, which requires the products to be exact.
    """
    if f.ring is not g.ring:
        raise RingMismatch("polynomials live over different rings")
    R = f.ring
    if f.is_zero() or g.is_zero():
        return True
    if middle_degree is None:
        G = np.array([g.coeffs], dtype=np.int64)
        return bool(_sandwich_zero(R, list(f.coeffs), G)[0])
    if f.degree + g.degree + middle_degree > f.degree_cap:
        raise BoundExceeded(
            f"deg f + deg g + {middle_degree} exceeds the degree cap {f.degree_cap}")
    H = _enumerate(R, middle_degree)
    FH = _bulk_mul(R, np.tile(np.array(f.coeffs, dtype=np.int64), (len(H), 1)), H)
    FHG = _bulk_mul(R, FH, np.tile(np.array(g.coeffs, dtype=np.int64), (len(H), 1)))
    return bool((FHG == R.zero).all())


def is_quasi_armendariz_bounded(R: FiniteRing, degree=DEFAULT_DEGREE,
                                middle_degree=DEFAULT_MIDDLE_DEGREE) -> PropertyVerdict:
    """Quasi-Armendariz restricted to f, g of degree <= ``degree``.

    A false verdict is an exact counterexample.  A true verdict only covers
    the bound.  ``middle_degree`` is recorded but does not change the answer,
    since f R[x] g = 0 is equivalent to f R g = 0.
    """
    t0 = time.perf_counter()
    pairs = R.order ** (2 * (degree + 1))
    if pairs > PAIR_CAP:
        raise BoundExceeded(f"{pairs} polynomial pairs exceed the cap {PAIR_CAP}")
    zs = zero_sandwich(R)
    fc, gc = kernels.qa_first_violation(R.mul, R.add, R.zero, zs, degree)
    bounds = {"degree": degree, "middle_degree": middle_degree}
    w = None
    if fc >= 0:
        shape = (R.order,) * (degree + 1)
        f = tuple(int(v) for v in np.unravel_index(fc, shape))
        g = tuple(int(v) for v in np.unravel_index(gc, shape))
        i, j = next((i, j) for i in range(len(f)) for j in range(len(g)) if not zs[f[i], g[j]])
        r = int(np.flatnonzero(_arb(R)[f[i], :, g[j]] != R.zero)[0])
        w = {"f": f, "g": g, "a": f[i], "b": g[j], "r": r}
        bounds.update(i=i, j=j)
    return PropertyVerdict("quasi_armendariz", R.name, w is None, w,
                           time.perf_counter() - t0, bounds=bounds)


def nilpotent_coeffs_condition(R: FiniteRing, degree=DEFAULT_DEGREE,
                               power_cap=DEFAULT_POWER_CAP) -> PropertyVerdict:
    """Every nilpotent f of degree <= ``degree`` has nilpotent coefficients.

    Powers are computed without truncation, so nilpotency of f means
    f^k = 0 for some k <= power_cap exactly.
    """
    t0 = time.perf_counter()
    F = _enumerate(R, degree)
    nil_f = _nilpotent_rows(R, F, power_cap)
    bad = nil_f & ~R.nil_mask[F].all(axis=1)
    hit = np.flatnonzero(bad)
    w = None
    if len(hit):
        f = tuple(int(v) for v in F[hit[0]])
        a = next(c for c in f if not R.nil_mask[c])
        w = {"f": f, "a": a}
    return PropertyVerdict("nilpotent_coeffs", R.name, w is None, w, time.perf_counter() - t0,
                           bounds={"degree": degree, "power_cap": power_cap})


def polynomial_left_n_reflexive(R: FiniteRing, degree=DEFAULT_DEGREE,
                                power_cap=DEFAULT_POWER_CAP) -> PropertyVerdict:
    """Left N-reflexivity of R[x] restricted to f, g of degree <= ``degree``.

    f ranges over polynomials with f^k = 0 (k <= power_cap, exact) and the
    sandwich condition uses constant middles, which is exact for R[x].
    """
    t0 = time.perf_counter()
    F = _enumerate(R, degree)
    nil_f = np.flatnonzero(_nilpotent_rows(R, F, power_cap))
    w = None
    for idx in nil_f:
        f = [int(v) for v in F[idx]]
        bad = _sandwich_zero(R, f, F) & ~_sandwich_zero_rev(R, F, f)
        hit = np.flatnonzero(bad)
        if len(hit):
            g = tuple(int(v) for v in F[hit[0]])
            w = {"f": tuple(f), "g": g}
            break
    return PropertyVerdict("polynomial_left_n_reflexive", R.name, w is None, w,
                           time.perf_counter() - t0,
                           bounds={"degree": degree, "power_cap": power_cap},
                           details={"nilpotent_polys": int(len(nil_f))})
