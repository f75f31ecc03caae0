"""Exhaustive theorem suites over rings from a catalog.

Each suite returns a :class:`SuiteResult`.  A violation is a ring (or ring and
ideal, idempotent...) where a stated implication fails; report-only suites
collect observations without treating disagreements as violations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import polybox
from .catalog import IMPLICATIONS, Edge
from .constructors import build, build_corner, build_dorroh, build_H, build_S1, build_S2, product, zmod
from .core import FiniteRing, all_ideals, is_reduced_as_rng, jacobson_radical, quotient
from .errors import BoundExceeded
from .predicates import (
    DECIDERS,
    check_annihilator_characterization,
    check_ideal_characterization,
    decide,
    is_ideal_symmetric,
    n_reflexive_idempotent_annihilation,
    replay,
)

PRODUCT_BASES = ("Zmod(2)", "Zmod(4)", "U(2, Zmod(2))", "H(0, 0, Zmod(2))", "S1(Zmod(2))")
DESCENT_BASES = ("Zmod(2)", "Zmod(4)")
H_BASES = (2, 3, 6)
H_REDUCED_BASES = (2, 4, 6)
S_BASES = (2, 3, 6)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    violations: list[dict] = field(default_factory=list)
    notes: list[dict] = field(default_factory=list)
    report_only: bool = False
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.report_only or not self.violations

    def fail(self, **info):
        self.violations.append(info)

    def to_dict(self, timings=False):
        out = {"suite": self.name, "checks": self.checks, "ok": self.ok,
               "report_only": self.report_only, "violations": self.violations}
        if self.notes:
            out["notes"] = self.notes
        if timings:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _holds(R, prop):
    return decide(R, prop).holds


def _witness(R, prop):
    v = decide(R, prop)
    return v.to_dict(R, timings=False)["witness"]


@_timed
def implication_suite(rings, edges=IMPLICATIONS, name="implications") -> SuiteResult:
    res = SuiteResult(name)
    for edge in edges:
        for rname, R in rings:
            res.checks += 1
            if _holds(R, edge.antecedent) and not _holds(R, edge.consequent):
                res.fail(edge=f"{edge.antecedent} => {edge.consequent}", anchor=edge.anchor,
                         ring=rname, witness=_witness(R, edge.consequent))
    return res


def experimental_edges(rings, edges) -> SuiteResult:
    res = implication_suite(rings, edges, name="experimental")
    res.report_only = True
    return res


@_timed
def annihilator_suite(rings) -> SuiteResult:
    """N-reflexive iff r(aR) = l(Ra) for every nilpotent a."""
    res = SuiteResult("annihilator_characterization")
    for rname, R in rings:
        res.checks += 1
        v = check_annihilator_characterization(R)
        if not v.holds:
            res.fail(ring=rname, details=v.details)
    return res


@_timed
def ideal_characterization_suite(rings, order_cap=256) -> SuiteResult:
    res = SuiteResult("ideal_characterization")
    for rname, R in rings:
        res.checks += 1
        v = check_ideal_characterization(R, order_cap=order_cap)
        if not v.holds:
            res.fail(ring=rname, details=v.details, witness=v.to_dict(R, False)["witness"])
    return res


@_timed
def corner_suite(rings) -> SuiteResult:
    """left N-reflexive R gives left N-reflexive eRe for every idempotent e."""
    res = SuiteResult("corner_closure")
    for rname, R in rings:
        left = _holds(R, "left_n_reflexive")
        for e in np.flatnonzero(R.idempotent_mask):
            res.checks += 1
            if not left:
                continue
            C = build_corner(R, int(e))
            if not _holds(C, "left_n_reflexive"):
                res.fail(ring=rname, e=R.label(int(e)), witness=_witness(C, "left_n_reflexive"))
    return res


@_timed
def product_suite(bases=PRODUCT_BASES) -> SuiteResult:
    """left_n_reflexive(R x S) iff both factors are."""
    res = SuiteResult("product_law")
    built = [build(b) for b in bases]
    for i, A in enumerate(built):
        for B in built[i:]:
            res.checks += 1
            P = product(A, B)
            lhs = _holds(P, "left_n_reflexive")
            rhs = _holds(A, "left_n_reflexive") and _holds(B, "left_n_reflexive")
            if lhs != rhs:
                res.fail(ring=P.name, product=lhs, factors=rhs)
    return res


@_timed
def matrix_descent_suite(bases=DESCENT_BASES) -> SuiteResult:
    """left_n_reflexive(M_2(R)) implies left_n_reflexive(R)."""
    res = SuiteResult("matrix_descent")
    for b in bases:
        R = build(b)
        M = build(f"M(2, {b})")
        res.checks += 1
        top = _holds(M, "left_n_reflexive")
        res.notes.append({"ring": M.name, "left_n_reflexive": top, "base_left_n_reflexive": _holds(R, "left_n_reflexive")})
        if top and not _holds(R, "left_n_reflexive"):
            res.fail(ring=M.name, base=R.name)
    return res


def _strictly_upper_pattern(R: FiniteRing) -> dict:
    """The radical of D_3(F): nilpotent, quotient N-reflexive, ring not."""
    I = jacobson_radical(R)
    Q = quotient(R, I)
    members = I.members
    mul = R.mul
    # left N-reflexivity of I as a ring without identity
    rng_ok = True
    for a in members:
        if not R.nil_mask[a]:
            continue
        for b in members:
            aib = mul[mul[a, members], b]
            bia = mul[mul[b, members], a]
            if (aib == R.zero).all() and not (bia == R.zero).all():
                rng_ok = False
    return {
        "ideal_size": len(I),
        "quotient_order": Q.order,
        "quotient_n_reflexive": _holds(Q, "n_reflexive"),
        "ideal_reduced": is_reduced_as_rng(I),
        "ideal_left_n_reflexive_as_rng": rng_ok,
        "ideal_symmetric": is_ideal_symmetric(R, I).holds,
        "ring_n_reflexive": _holds(R, "n_reflexive"),
    }


STRICTLY_UPPER_EXPECTED = {
    "quotient_order": 2,
    "quotient_n_reflexive": True,
    "ideal_reduced": False,
    "ideal_left_n_reflexive_as_rng": True,
    "ring_n_reflexive": False,
}


@_timed
def quotient_suite(rings, max_order=64) -> SuiteResult:
    """Ideal-symmetric I gives N-reflexive R/I; reduced I with left N-reflexive
    R/I gives left N-reflexive R."""
    res = SuiteResult("quotient_ideal")
    for rname, R in rings:
        if R.order > max_order:
            continue
        left = _holds(R, "left_n_reflexive")
        for I in all_ideals(R):
            res.checks += 1
            Q = quotient(R, I)
            q_n = _holds(Q, "n_reflexive")
            sym = is_ideal_symmetric(R, I)
            if sym.holds and not q_n:
                res.fail(ring=rname, ideal=I.labels(), rule="ideal_symmetric => quotient n_reflexive")
            if is_reduced_as_rng(I) and _holds(Q, "left_n_reflexive") and not left:
                res.fail(ring=rname, ideal=I.labels(), rule="reduced ideal lifting")
    R = build("D(3, Zmod(2))")
    pattern = _strictly_upper_pattern(R)
    res.checks += 1
    res.notes.append({"ring": R.name, **pattern})
    bad = {k: v for k, v in STRICTLY_UPPER_EXPECTED.items() if pattern[k] != v}
    if bad:
        res.fail(ring=R.name, rule="strictly upper counterexample", mismatched=bad)
    return res


def lemma_nil_mask(H: FiniteRing, E: FiniteRing) -> np.ndarray:
    """Elements whose diagonal entries a, d, f are nilpotent in E."""
    out = np.zeros(H.order, dtype=np.bool_)
    for i in range(H.order):
        m = H.rep(i)
        out[i] = all(E.nil_mask[E.index(m[k][k])] for k in range(3))
    return out


@_timed
def h_suite(bases=H_BASES, reduced_bases=H_REDUCED_BASES) -> SuiteResult:
    res = SuiteResult("h_rings")
    for p in bases:
        E = zmod(p)
        field_ = all(p % d for d in range(2, p))
        for s in (0, 1):
            for t in (0, 1):
                H = build_H(s, t, E)
                res.checks += 1
                lemma = lemma_nil_mask(H, E)
                if not np.array_equal(lemma, H.nil_mask):
                    i = int(np.flatnonzero(lemma != H.nil_mask)[0])
                    res.fail(ring=H.name, rule="nil lemma", element=H.label(i))
                if (s, t) == (1, 1):
                    continue
                res.checks += 1
                if not _holds(H, "n_reflexive"):
                    res.fail(ring=H.name, rule="n_reflexive", witness=_witness(H, "n_reflexive"))
                if field_:
                    res.checks += 1
                    if _holds(H, "reduced"):
                        res.fail(ring=H.name, rule="not reduced over a field")
    for p in reduced_bases:
        E = zmod(p)
        H = build_H(1, 1, E)
        res.checks += 1
        lhs, rhs = _holds(H, "reduced"), _holds(E, "reduced")
        res.notes.append({"ring": H.name, "reduced": lhs, "base_reduced": rhs})
        if lhs != rhs:
            res.fail(ring=H.name, rule="reduced(H(1,1,E)) iff reduced(E)")
    return res


@_timed
def s_suite(bases=S_BASES) -> SuiteResult:
    """S1, S2 over reduced bases are N-reflexive."""
    res = SuiteResult("s_rings")
    for p in bases:
        E = zmod(p)
        for make in (build_S1, build_S2):
            S = make(E)
            res.checks += 1
            if not _holds(S, "n_reflexive"):
                res.fail(ring=S.name, witness=_witness(S, "n_reflexive"))
    return res


PQ_GROUP = ("semiprime", "sl_equals_b", "reflexive", "right_n_reflexive")
PQ_GROUP_LEFT = ("semiprime", "sr_equals_b", "reflexive", "left_n_reflexive")


@_timed
def pq_baer_suite(rings) -> SuiteResult:
    res = SuiteResult("pq_baer_equivalence")
    for rname, R in rings:
        for side, group in (("right_pq_baer", PQ_GROUP), ("left_pq_baer", PQ_GROUP_LEFT)):
            if not _holds(R, side):
                continue
            res.checks += 1
            verdicts = {p: _holds(R, p) for p in group}
            if len(set(verdicts.values())) > 1:
                res.fail(ring=rname, side=side, verdicts=verdicts)
    return res


@_timed
def idempotent_annihilation_suite(rings) -> SuiteResult:
    """N-reflexive: a nilpotent, e idempotent, aRe = 0 gives ea = 0."""
    res = SuiteResult("idempotent_annihilation")
    for rname, R in rings:
        res.checks += 1
        if _holds(R, "n_reflexive"):
            v = n_reflexive_idempotent_annihilation(R)
            if not v.holds:
                res.fail(ring=rname, witness=v.to_dict(R, False)["witness"])
    return res


@_timed
def dorroh_suite(rings, max_order=32) -> SuiteResult:
    """Report-only: left N-reflexivity of R against dorroh(R, m)."""
    res = SuiteResult("dorroh", report_only=True)
    for rname, R in rings:
        if R.order > max_order:
            continue
        c = R.additive_exponent
        for m in (c, 2 * c):
            if R.order * m > 256:
                continue
            res.checks += 1
            D = build_dorroh(R, m)
            a, b = _holds(R, "left_n_reflexive"), _holds(D, "left_n_reflexive")
            res.notes.append({"ring": rname, "m": m, "base": a, "dorroh": b, "agree": a == b})
    return res


@_timed
def polynomial_transfer_suite(rings, max_order=16, degree=polybox.DEFAULT_DEGREE,
                              power_cap=polybox.DEFAULT_POWER_CAP) -> SuiteResult:
    """Quasi-Armendariz rings with nilpotent-coefficient polynomials: R left
    N-reflexive iff R[x] is, both checked at bounded degree."""
    res = SuiteResult("polynomial_transfer")
    for rname, R in rings:
        if R.order > max_order:
            continue
        try:
            qa = polybox.is_quasi_armendariz_bounded(R, degree)
        except BoundExceeded:
            qa = polybox.is_quasi_armendariz_bounded(R, 1)
        nc = polybox.nilpotent_coeffs_condition(R, degree, power_cap)
        note = {"ring": rname, "quasi_armendariz": qa.holds, "qa_degree": qa.bounds["degree"],
                "nilpotent_coeffs": nc.holds}
        if qa.holds and nc.holds:
            res.checks += 1
            lhs = _holds(R, "left_n_reflexive")
            rhs = polybox.polynomial_left_n_reflexive(R, degree, power_cap).holds
            note.update(left_n_reflexive=lhs, polynomial=rhs)
            if lhs != rhs:
                res.fail(ring=rname, base=lhs, polynomial=rhs)
        res.notes.append(note)
    return res


@_timed
def replay_suite(rings, properties=None) -> SuiteResult:
    """Every false verdict's witness violates the raw definition."""
    res = SuiteResult("witness_replay")
    for rname, R in rings:
        for p in properties or DECIDERS:
            v = decide(R, p)
            if v.holds:
                continue
            res.checks += 1
            if not replay(R, v):
                res.fail(ring=rname, property=p, witness=v.to_dict(R, False)["witness"])
    return res


def run_all(rings, quick=False) -> list[SuiteResult]:
    suites = [
        implication_suite(rings),
        annihilator_suite(rings),
        ideal_characterization_suite(rings),
        corner_suite(rings),
        product_suite(),
        matrix_descent_suite(DESCENT_BASES[:1] if quick else DESCENT_BASES),
        quotient_suite(rings),
        h_suite(),
        s_suite(),
        pq_baer_suite(rings),
        idempotent_annihilation_suite(rings),
        dorroh_suite(rings),
        polynomial_transfer_suite(rings),
        replay_suite(rings),
    ]
    return suites
