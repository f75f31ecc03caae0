"""Exhaustive deciders for ring- and ideal-level reflexivity properties.

Every decider returns a :class:`PropertyVerdict`.  A failing verdict carries
the lexicographically least witness in scan order, and :func:`replay`
re-checks any witness against the raw definition with plain Python loops
(independent of the kernels used to find it).

Notation in the docstrings: ``aRb = 0`` means ``a r b = 0`` for every r.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import kernels
from .core import (
    FiniteRing,
    IdealSet,
    all_ideals,
    jacobson_radical,
    principal_ideal,
)


@dataclass(frozen=True)
class PropertyVerdict:
    property: str
    ring: str
    holds: bool
    witness: dict[str, Any] | None = None
    elapsed: float = 0.0
    bounds: dict[str, Any] | None = None
    details: dict[str, Any] | None = None
    inconclusive: bool = False

    def to_dict(self, ring: FiniteRing | None = None, timings: bool = True) -> dict:
        out = {"ring": self.ring, "property": self.property, "holds": self.holds}
        if ring is not None:
            out["order"] = ring.order
        out["witness"] = None if self.witness is None else [
            _witness_entry(role, value, ring) for role, value in self.witness.items()
        ]
        if self.bounds:
            out["bounds"] = dict(self.bounds)
        if self.details:
            out["details"] = dict(self.details)
        if self.inconclusive:
            out["inconclusive"] = True
        if timings:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def describe(self, ring: FiniteRing | None = None) -> str:
        text = f"{self.ring}: {self.property} = {'true' if self.holds else 'false'}"
        if self.witness:
            parts = [f"{e['role']}={e['display']}" for e in self.to_dict(ring, timings=False)["witness"]]
            text += "  witness " + ", ".join(parts)
        return text


def _witness_entry(role, value, ring):
    if isinstance(value, (int, np.integer)):
        value = int(value)
        display = ring.label(value) if ring is not None else str(value)
    elif isinstance(value, tuple):
        value = [int(v) for v in value]
        display = "[" + ", ".join(ring.label(v) if ring is not None else str(v) for v in value) + "]"
    else:
        # words: the empty word is the identity
        display = str(value) or "1"
    return {"role": role, "value": value, "display": display}


def _verdict(prop, R, t0, witness=None, holds=None, **extra):
    return PropertyVerdict(
        prop, R.name, witness is None if holds is None else holds, witness,
        time.perf_counter() - t0, **extra,
    )


# -- cached tables --------------------------------------------------------

def _zero_mask(R):
    return R.cached("zero_mask", lambda: np.arange(R.order) == R.zero)


def zero_sandwich(R: FiniteRing) -> np.ndarray:
    """zs[a, b] is True iff aRb = 0."""
    return R.cached("zs", lambda: kernels.sandwich_left(R.mul, _zero_mask(R), np.arange(R.order)))


def nil_sandwich(R: FiniteRing) -> np.ndarray:
    """ns[a, b] is True iff aRb is contained in nil(R)."""
    return R.cached("ns", lambda: kernels.sandwich_left(R.mul, R.nil_mask, np.arange(R.order)))


def _zero_products(R):
    return R.cached("zp", lambda: R.mul == R.zero)


def _first(mask):
    hit = np.argwhere(mask)
    return None if len(hit) == 0 else tuple(int(v) for v in hit[0])


def _least_r(R, x, y, target=None):
    """Least r with x r y outside ``target`` (default: nonzero)."""
    vals = R.mul[R.mul[x, :], y]
    bad = vals != R.zero if target is None else ~target[vals]
    return int(np.flatnonzero(bad)[0])


def _nil_rows(R):
    return np.flatnonzero(R.nil_mask)


# -- reflexivity ------------------------------------------------------------

def is_reduced(R):
    t0 = time.perf_counter()
    bad = R.nil_mask.copy()
    bad[R.zero] = False
    hit = np.flatnonzero(bad)
    return _verdict("reduced", R, t0, {"a": int(hit[0])} if len(hit) else None)


def is_reflexive(R):
    t0 = time.perf_counter()
    zs = zero_sandwich(R)
    hit = _first(zs & ~zs.T)
    w = None if hit is None else {"a": hit[0], "b": hit[1], "r": _least_r(R, hit[1], hit[0])}
    return _verdict("reflexive", R, t0, w)


def _n_sandwiches(R):
    def compute():
        rows = _nil_rows(R)
        z = _zero_mask(R)
        return rows, kernels.sandwich_left(R.mul, z, rows), kernels.sandwich_right(R.mul, z, rows)

    return R.cached("n_sandwich", compute)


def _left_n_witness(R):
    rows, a_r_b, b_r_a = _n_sandwiches(R)
    hit = _first(a_r_b & ~b_r_a)
    if hit is None:
        return None
    a, b = int(rows[hit[0]]), hit[1]
    return {"a": a, "b": b, "r": _least_r(R, b, a)}


def _right_n_witness(R):
    rows, a_r_b, b_r_a = _n_sandwiches(R)
    hit = _first(b_r_a & ~a_r_b)
    if hit is None:
        return None
    a, b = int(rows[hit[0]]), hit[1]
    return {"a": a, "b": b, "r": _least_r(R, a, b)}


def is_left_n_reflexive(R):
    """a nilpotent and aRb = 0 imply bRa = 0."""
    t0 = time.perf_counter()
    return _verdict("left_n_reflexive", R, t0, _left_n_witness(R))


def is_right_n_reflexive(R):
    """a nilpotent and bRa = 0 imply aRb = 0."""
    t0 = time.perf_counter()
    return _verdict("right_n_reflexive", R, t0, _right_n_witness(R))


def is_n_reflexive(R):
    t0 = time.perf_counter()
    w = _left_n_witness(R)
    if w is not None:
        return _verdict("n_reflexive", R, t0, w, details={"failed_side": "left"})
    w = _right_n_witness(R)
    if w is not None:
        return _verdict("n_reflexive", R, t0, w, details={"failed_side": "right"})
    return _verdict("n_reflexive", R, t0)


def is_weakly_reflexive(R):
    """aRb = 0 implies bRa is contained in nil(R)."""
    t0 = time.perf_counter()
    hit = _first(zero_sandwich(R) & ~nil_sandwich(R).T)
    w = None if hit is None else {"a": hit[0], "b": hit[1], "r": _least_r(R, hit[1], hit[0], R.nil_mask)}
    return _verdict("weakly_reflexive", R, t0, w)


def is_nil_reflexive(R):
    """aRb contained in nil(R) implies the same for bRa."""
    t0 = time.perf_counter()
    ns = nil_sandwich(R)
    hit = _first(ns & ~ns.T)
    w = None if hit is None else {"a": hit[0], "b": hit[1], "r": _least_r(R, hit[1], hit[0], R.nil_mask)}
    return _verdict("nil_reflexive", R, t0, w)


# -- reversibility and friends -------------------------------------------------

def is_reversible(R):
    t0 = time.perf_counter()
    zp = _zero_products(R)
    hit = _first(zp & ~zp.T)
    return _verdict("reversible", R, t0, None if hit is None else {"a": hit[0], "b": hit[1]})


def is_n_reversible(R):
    """For nilpotent a: ab = 0 if and only if ba = 0 (both one-sided versions)."""
    t0 = time.perf_counter()
    rows = _nil_rows(R)
    zp = _zero_products(R)
    hit = _first(zp[rows] != zp[:, rows].T)
    if hit is None:
        return _verdict("n_reversible", R, t0)
    a, b = int(rows[hit[0]]), hit[1]
    side = "left" if zp[a, b] else "right"
    return _verdict("n_reversible", R, t0, {"a": a, "b": b}, details={"failed_side": side})


def is_symmetric(R):
    """abc = 0 implies acb = 0."""
    t0 = time.perf_counter()
    a, b, c = kernels.first_symmetric_violation(R.mul, R.zero)
    return _verdict("symmetric", R, t0, None if a < 0 else {"a": a, "b": b, "c": c})


def is_semicommutative(R):
    """ab = 0 implies aRb = 0."""
    t0 = time.perf_counter()
    hit = _first(_zero_products(R) & ~zero_sandwich(R))
    w = None if hit is None else {"a": hit[0], "b": hit[1], "r": _least_r(R, hit[0], hit[1])}
    return _verdict("semicommutative", R, t0, w)


def is_nil_semicommutative(R):
    """For nilpotent a, b: ab = 0 implies aRb = 0."""
    t0 = time.perf_counter()
    rows = _nil_rows(R)
    rows_a, a_r_b = _n_sandwiches(R)[:2]
    bad = _zero_products(R)[np.ix_(rows, rows)] & ~a_r_b[:, rows]
    hit = _first(bad)
    w = None
    if hit is not None:
        a, b = int(rows[hit[0]]), int(rows[hit[1]])
        w = {"a": a, "b": b, "r": _least_r(R, a, b)}
    return _verdict("nil_semicommutative", R, t0, w)


def is_semiprime(R):
    """aRa = 0 implies a = 0."""
    t0 = time.perf_counter()
    bad = np.diagonal(zero_sandwich(R)).copy()
    bad[R.zero] = False
    hit = np.flatnonzero(bad)
    return _verdict("semiprime", R, t0, {"a": int(hit[0])} if len(hit) else None)


# -- idempotent-reflexive family --------------------------------------------------

# variant -> (x role, x domain, y role, y domain); condition: xRy = 0 => yRx = 0
IDEMPOTENT_VARIANTS = {
    "rip": ("e", "idempotent", "f", "idempotent"),
    "right_idempotent_reflexive": ("a", "element", "e", "idempotent"),
    "left_idempotent_reflexive": ("e", "idempotent", "a", "element"),
    "left_n_right_idempotent_reflexive": ("a", "nilpotent", "e", "idempotent"),
    "right_n_left_idempotent_reflexive": ("e", "idempotent", "a", "nilpotent"),
}


def _domain(R, kind):
    if kind == "element":
        return np.arange(R.order)
    if kind == "idempotent":
        return np.flatnonzero(R.idempotent_mask)
    return _nil_rows(R)


def idempotent_reflexive_family(R, variant):
    t0 = time.perf_counter()
    x_role, x_kind, y_role, y_kind = IDEMPOTENT_VARIANTS[variant]
    xs, ys = _domain(R, x_kind), _domain(R, y_kind)
    zs = zero_sandwich(R)
    bad = zs[np.ix_(xs, ys)] & ~zs[np.ix_(ys, xs)].T
    hit = _first(bad)
    w = None
    if hit is not None:
        x, y = int(xs[hit[0]]), int(ys[hit[1]])
        w = {x_role: x, y_role: y, "r": _least_r(R, y, x)}
    return _verdict(variant, R, t0, w)


def is_rip(R):
    return idempotent_reflexive_family(R, "rip")


# -- semicentral idempotents, p.q.-Baer, 2-primal --------------------------------

def semicentral_sets(R):
    """(S_l, S_r, B): left/right semicentral and central idempotents."""
    from .core import ElementSet

    def compute():
        idem = np.flatnonzero(R.idempotent_mask)
        sl = np.zeros(R.order, dtype=np.bool_)
        sr = np.zeros(R.order, dtype=np.bool_)
        for e in idem:
            ere = R.mul[R.mul[e, :], e]
            sl[e] = np.array_equal(R.mul[:, e], ere)
            sr[e] = np.array_equal(R.mul[e, :], ere)
        b = R.idempotent_mask & R.central_mask
        return ElementSet(R, sl), ElementSet(R, sr), ElementSet(R, b)

    return R.cached("semicentral", compute)


def _semicentral_verdict(R, prop, which):
    t0 = time.perf_counter()
    sets = semicentral_sets(R)
    extra = sets[which].mask & ~sets[2].mask
    hit = np.flatnonzero(extra)
    w = None
    if len(hit):
        e = int(hit[0])
        r = int(np.flatnonzero(R.mul[e, :] != R.mul[:, e])[0])
        w = {"e": e, "r": r}
    return _verdict(prop, R, t0, w)


def sl_equals_b(R):
    return _semicentral_verdict(R, "sl_equals_b", 0)


def sr_equals_b(R):
    return _semicentral_verdict(R, "sr_equals_b", 1)


def _generated_masks(R, tables):
    out = set()
    for e in np.flatnonzero(R.idempotent_mask):
        mask = np.zeros(R.order, dtype=np.bool_)
        mask[tables(e)] = True
        out.add(mask.tobytes())
    return out


def is_right_pq_baer(R):
    """r(aR) = eR for some idempotent e, for every a."""
    t0 = time.perf_counter()
    principal = _generated_masks(R, lambda e: R.mul[e, :])
    zs = zero_sandwich(R)
    for a in range(R.order):
        if zs[a].tobytes() not in principal:
            return _verdict("right_pq_baer", R, t0, {"a": a})
    return _verdict("right_pq_baer", R, t0)


def is_left_pq_baer(R):
    """l(Ra) = Re for some idempotent e, for every a."""
    t0 = time.perf_counter()
    principal = _generated_masks(R, lambda e: R.mul[:, e])
    zs = zero_sandwich(R)
    for a in range(R.order):
        if np.ascontiguousarray(zs[:, a]).tobytes() not in principal:
            return _verdict("left_pq_baer", R, t0, {"a": a})
    return _verdict("left_pq_baer", R, t0)


def is_two_primal(R):
    """nil(R) equals the prime radical, which is J(R) for a finite ring."""
    t0 = time.perf_counter()
    diff = R.nil_mask != jacobson_radical(R).mask
    hit = np.flatnonzero(diff)
    return _verdict("two_primal", R, t0, {"a": int(hit[0])} if len(hit) else None)


# -- characterisations ---------------------------------------------------------

def check_ideal_characterization(R, order_cap=256):
    """Compare three equivalent forms of left N-reflexivity.

    (1) the direct definition; (2) IRJ = 0 => JRI = 0 for I = RaR with a
    nilpotent and J a principal ideal or a singleton; (3) IJ = 0 => JI = 0
    for the same I and every ideal J.
    """
    t0 = time.perf_counter()
    c1 = _left_n_witness(R) is None
    zs = zero_sandwich(R)
    zp = _zero_products(R)
    gens = {}
    for a in _nil_rows(R):
        gens.setdefault(principal_ideal(R, int(a)).mask.tobytes(), int(a))
    principals = {}
    for b in range(R.order):
        principals.setdefault(principal_ideal(R, b).mask.tobytes(), b)
    ideals = all_ideals(R, order_cap=order_cap)

    w2 = w3 = None
    for a in sorted(gens.values()):
        I = principal_ideal(R, a).mask
        i_r_j = zs[I].all(axis=0)         # [j]: I R j = 0
        j_r_i = zs[:, I].all(axis=1)      # [j]: j R I = 0
        if w2 is None:
            bad = np.flatnonzero(i_r_j & ~j_r_i)   # singletons J = {b}
            if len(bad):
                w2 = {"a": a, "b": int(bad[0])}
            else:
                for b in sorted(principals.values()):
                    J = principal_ideal(R, b).mask
                    if i_r_j[J].all() and not j_r_i[J].all():
                        w2 = {"a": a, "b": b}
                        break
        if w3 is None:
            for J in ideals:
                if zp[np.ix_(I, J.mask)].all() and not zp[np.ix_(J.mask, I)].all():
                    w3 = {"a": a, "b": int(J.members[-1])}
                    break
    c2, c3 = w2 is None, w3 is None
    details = {"left_n_reflexive": c1, "ideal_condition": c2, "product_condition": c3}
    agree = c1 == c2 == c3
    w = None
    if not agree:
        w = w2 or w3 or _left_n_witness(R)
    return _verdict("ideal_characterization", R, t0, w, holds=agree, details=details,
                    bounds={"subsets": "principal ideals and singletons"})


def check_annihilator_characterization(R):
    """n_reflexive(R) iff r(aR) = l(Ra) for every nilpotent a."""
    t0 = time.perf_counter()
    lhs = _left_n_witness(R) is None and _right_n_witness(R) is None
    zs = zero_sandwich(R)
    bad = [int(a) for a in _nil_rows(R) if not np.array_equal(zs[a], zs[:, a])]
    rhs = not bad
    w = None
    if bad:
        a = bad[0]
        b = int(np.flatnonzero(zs[a] != zs[:, a])[0])
        w = {"a": a, "b": b}
    return _verdict("annihilator_characterization", R, t0, w, holds=lhs == rhs,
                    details={"n_reflexive": lhs, "annihilators_match": rhs})


# -- ideal-level properties -------------------------------------------------------

def is_left_n_reflexive_ideal(R, I: IdealSet):
    """a nilpotent and aRb in I imply bRa in I."""
    t0 = time.perf_counter()
    rows = _nil_rows(R)
    fwd = kernels.sandwich_left(R.mul, I.mask, rows)
    back = kernels.sandwich_right(R.mul, I.mask, rows)
    hit = _first(fwd & ~back)
    w = None
    if hit is not None:
        a, b = int(rows[hit[0]]), hit[1]
        w = {"a": a, "b": b, "r": _least_r(R, b, a, I.mask)}
    return _verdict("left_n_reflexive_ideal", R, t0, w, details={"ideal_size": len(I)})


def is_right_n_reflexive_ideal(R, I: IdealSet):
    t0 = time.perf_counter()
    rows = _nil_rows(R)
    fwd = kernels.sandwich_left(R.mul, I.mask, rows)
    back = kernels.sandwich_right(R.mul, I.mask, rows)
    hit = _first(back & ~fwd)
    w = None
    if hit is not None:
        a, b = int(rows[hit[0]]), hit[1]
        w = {"a": a, "b": b, "r": _least_r(R, a, b, I.mask)}
    return _verdict("right_n_reflexive_ideal", R, t0, w, details={"ideal_size": len(I)})


def is_ideal_symmetric(R, I: IdealSet):
    """ABC in I implies ACB in I for all ideals A, B, C.

    Reduced to elements: with A, B, C generated by a, b, c the condition reads
    aRbRc in I => aRcRb in I, and it only depends on the cosets of a, b, c.
    """
    t0 = time.perf_counter()
    target = I.mask
    reps = np.unique(R.add[:, np.array(I.members)].min(axis=1))
    sand = kernels.sandwich_left(R.mul, target, np.arange(R.order))
    w3 = kernels.triple_sandwich(R.mul, target, sand, reps)
    hit = _first(w3 & ~np.transpose(w3, (0, 2, 1)))
    w = None
    if hit is not None:
        a, b, c = (int(reps[k]) for k in hit)
        # find r, s with a r c s b outside I
        acs = R.mul[R.mul[R.mul[a, :], c][:, None], np.arange(R.order)[None, :]]  # [r, s] = a r c s
        vals = R.mul[acs, b]
        r, s = (int(v) for v in np.argwhere(~target[vals])[0])
        w = {"a": a, "b": b, "c": c, "r": r, "s": s}
    return _verdict("ideal_symmetric", R, t0, w, details={"ideal_size": len(I)})


def n_reflexive_idempotent_annihilation(R):
    """For nilpotent a and idempotent e: aRe = 0 implies ea = 0."""
    t0 = time.perf_counter()
    zs = zero_sandwich(R)
    for a in _nil_rows(R):
        for e in np.flatnonzero(R.idempotent_mask):
            if zs[a, e] and R.mul[e, a] != R.zero:
                return _verdict("idempotent_annihilation", R, t0, {"a": int(a), "e": int(e)})
    return _verdict("idempotent_annihilation", R, t0)


# -- registry -----------------------------------------------------------------------

def _family(variant):
    def decide(R):
        return idempotent_reflexive_family(R, variant)
    decide.__name__ = f"is_{variant}"
    return decide


DECIDERS: dict[str, Callable[[FiniteRing], PropertyVerdict]] = {
    "reduced": is_reduced,
    "reflexive": is_reflexive,
    "left_n_reflexive": is_left_n_reflexive,
    "right_n_reflexive": is_right_n_reflexive,
    "n_reflexive": is_n_reflexive,
    "weakly_reflexive": is_weakly_reflexive,
    "nil_reflexive": is_nil_reflexive,
    "reversible": is_reversible,
    "n_reversible": is_n_reversible,
    "symmetric": is_symmetric,
    "semicommutative": is_semicommutative,
    "nil_semicommutative": is_nil_semicommutative,
    "semiprime": is_semiprime,
    "rip": is_rip,
    "left_idempotent_reflexive": _family("left_idempotent_reflexive"),
    "right_idempotent_reflexive": _family("right_idempotent_reflexive"),
    "left_n_right_idempotent_reflexive": _family("left_n_right_idempotent_reflexive"),
    "right_n_left_idempotent_reflexive": _family("right_n_left_idempotent_reflexive"),
    "two_primal": is_two_primal,
    "left_pq_baer": is_left_pq_baer,
    "right_pq_baer": is_right_pq_baer,
    "sl_equals_b": sl_equals_b,
    "sr_equals_b": sr_equals_b,
}

PROPERTY_NAMES = tuple(DECIDERS)


def decide(R: FiniteRing, prop: str) -> PropertyVerdict:
    try:
        decider = DECIDERS[prop]
    except KeyError:
        raise KeyError(f"unknown property {prop!r}; choose from {', '.join(PROPERTY_NAMES)}") from None
    return decider(R)


# -- witness replay ---------------------------------------------------------------------

class _Raw:
    """Definitions evaluated with nested Python loops over plain lists."""

    def __init__(self, R):
        self.n = R.order
        self.mul = R.mul.tolist()
        self.zero = R.zero
        self.R = R

    def m(self, *xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = self.mul[acc][x]
        return acc

    def nil(self, a):
        p = a
        for _ in range(self.n + 1):
            if p == self.zero:
                return True
            p = self.mul[p][a]
        return False

    def idem(self, e):
        return self.mul[e][e] == e

    def sandwich_in(self, x, y, ok):
        return all(ok(self.m(x, r, y)) for r in range(self.n))

    def zero_sandwich(self, x, y):
        return self.sandwich_in(x, y, lambda v: v == self.zero)


def replay(R: FiniteRing, verdict: PropertyVerdict) -> bool:
    """True iff the verdict's witness really violates the property's definition."""
    if verdict.holds or verdict.witness is None:
        return False
    w = verdict.witness
    raw = _Raw(R)
    z = raw.zero
    p = verdict.property
    if p == "reduced":
        return w["a"] != z and raw.nil(w["a"])
    if p == "semiprime":
        return w["a"] != z and raw.zero_sandwich(w["a"], w["a"])
    if p == "reflexive":
        return raw.zero_sandwich(w["a"], w["b"]) and raw.m(w["b"], w["r"], w["a"]) != z
    if p in ("left_n_reflexive", "right_n_reflexive", "n_reflexive"):
        a, b, r = w["a"], w["b"], w["r"]
        left = raw.nil(a) and raw.zero_sandwich(a, b) and raw.m(b, r, a) != z
        right = raw.nil(a) and raw.zero_sandwich(b, a) and raw.m(a, r, b) != z
        return {"left_n_reflexive": left, "right_n_reflexive": right}.get(p, left or right)
    if p == "weakly_reflexive":
        return raw.zero_sandwich(w["a"], w["b"]) and not raw.nil(raw.m(w["b"], w["r"], w["a"]))
    if p == "nil_reflexive":
        return raw.sandwich_in(w["a"], w["b"], raw.nil) and not raw.nil(raw.m(w["b"], w["r"], w["a"]))
    if p == "reversible":
        return raw.m(w["a"], w["b"]) == z and raw.m(w["b"], w["a"]) != z
    if p == "n_reversible":
        a, b = w["a"], w["b"]
        return raw.nil(a) and ((raw.m(a, b) == z) != (raw.m(b, a) == z))
    if p == "symmetric":
        return raw.m(w["a"], w["b"], w["c"]) == z and raw.m(w["a"], w["c"], w["b"]) != z
    if p in ("semicommutative", "nil_semicommutative"):
        a, b = w["a"], w["b"]
        ok = raw.m(a, b) == z and raw.m(a, w["r"], b) != z
        return ok and (p == "semicommutative" or (raw.nil(a) and raw.nil(b)))
    if p in IDEMPOTENT_VARIANTS:
        x_role, x_kind, y_role, y_kind = IDEMPOTENT_VARIANTS[p]
        x, y = w[x_role], w[y_role]
        check = {"element": lambda v: True, "idempotent": raw.idem, "nilpotent": raw.nil}
        return (check[x_kind](x) and check[y_kind](y) and raw.zero_sandwich(x, y)
                and raw.m(y, w["r"], x) != z)
    if p == "two_primal":
        a = w["a"]
        one, n = R.one, raw.n
        units = {u for u in range(n) if any(raw.m(u, v) == one and raw.m(v, u) == one for v in range(n))}
        neg = R.neg.tolist()
        add = R.add.tolist()
        in_j = all(add[one][neg[raw.m(r, a)]] in units for r in range(n))
        return raw.nil(a) != in_j
    if p in ("sl_equals_b", "sr_equals_b"):
        e, r = w["e"], w["r"]
        if not raw.idem(e) or raw.m(e, r) == raw.m(r, e):
            return False
        if p == "sl_equals_b":
            return all(raw.m(x, e) == raw.m(e, x, e) for x in range(raw.n))
        return all(raw.m(e, x) == raw.m(e, x, e) for x in range(raw.n))
    if p in ("right_pq_baer", "left_pq_baer"):
        a, n = w["a"], raw.n
        if p == "right_pq_baer":
            ann = {b for b in range(n) if raw.zero_sandwich(a, b)}
            gen = lambda e: {raw.m(e, r) for r in range(n)}
        else:
            ann = {b for b in range(n) if raw.zero_sandwich(b, a)}
            gen = lambda e: {raw.m(r, e) for r in range(n)}
        return all(gen(e) != ann for e in range(n) if raw.idem(e))
    raise KeyError(f"no replay rule for {p!r}")
