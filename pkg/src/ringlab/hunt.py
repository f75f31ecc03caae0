"""Search for a ring where one property holds and another fails.

Constructor search walks expressions by nesting depth in a fixed order.  The
random extra draws subrings of small matrix rings generated by 1 and a few
random elements, so every candidate is a genuine ring.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .catalog import IMPLICATIONS
from .constructors import build
from .core import FiniteRing, verify_axioms
from .errors import RingLabError
from .expr import parse
from .predicates import decide

BASE_MODULI = range(2, 10)
RANDOM_HOSTS = ("M(2, Zmod(2))", "U(3, Zmod(2))", "D(3, Zmod(2))", "M(2, Zmod(3))")
RANDOM_ORDER_CAP = 16


def _unary(E: str, one: int) -> list[str]:
    """Constructors applied to one base expression, in search order."""
    out = [f"M(2, {E})", f"U(2, {E})", f"D(2, {E})", f"D(3, {E})", f"U(3, {E})",
           f"S1({E})", f"S2({E})"]
    out += [f"H({s}, {t}, {E})" for s in (0, one) for t in (0, one)]
    out += [f"truncpoly({E}, 2)", f"truncpoly({E}, 3)",
            f"skew_trivial(truncpoly({E}, 2), alpha0)", f"skew_trivial(truncpoly({E}, 3), alpha0)"]
    return out


def constructor_candidates(max_depth=2, order_cap=64):
    """Yield (expression, ring) in a deterministic order, skipping oversize ones."""
    seen = set()
    level = []
    for n in BASE_MODULI:
        text = f"Zmod({n})"
        if n <= order_cap:
            seen.add(text)
            level.append(text)
            yield text, build(text, order_cap)
    for _ in range(max_depth):
        nxt = []
        for E in level:
            R = build(E, order_cap)
            exprs = _unary(E, R.one) + [f"dorroh({E}, {R.additive_exponent})"]
            exprs += [f"prod({E}, {F})" for F in level if F >= E]
            for text in exprs:
                text = str(parse(text))
                if text in seen:
                    continue
                seen.add(text)
                try:
                    ring = build(text, order_cap)
                except RingLabError:
                    continue
                nxt.append(text)
                yield text, ring
        level = nxt


def subring_generated(host: FiniteRing, gens) -> np.ndarray:
    """Mask of the subring generated by 1 and ``gens``."""
    mask = np.zeros(host.order, dtype=np.bool_)
    mask[[host.zero, host.one, *gens]] = True
    while True:
        idx = np.flatnonzero(mask)
        grown = mask.copy()
        grown[host.add[np.ix_(idx, idx)].ravel()] = True
        grown[host.mul[np.ix_(idx, idx)].ravel()] = True
        if (grown == mask).all():
            return mask
        mask = grown


def restrict(host: FiniteRing, mask: np.ndarray, name: str) -> FiniteRing:
    keep = np.flatnonzero(mask)
    new = np.full(host.order, -1, dtype=np.int64)
    new[keep] = np.arange(len(keep))
    sub = np.ix_(keep, keep)
    R = verify_axioms(new[host.add[sub]], new[host.mul[sub]], new[host.zero], new[host.one], name=name)
    return FiniteRing(R.add, R.mul, R.zero, R.one, name=name,
                      reps=tuple(host.rep(k) for k in keep),
                      labels=tuple(host.label(k) for k in keep))


def random_candidates(seed: int, count: int, order_cap=RANDOM_ORDER_CAP):
    rng = np.random.default_rng(seed)
    hosts = [build(h) for h in RANDOM_HOSTS]
    seen = set()
    for _ in range(count):
        h = int(rng.integers(len(hosts)))
        host = hosts[h]
        k = int(rng.integers(1, 3))
        gens = sorted(int(g) for g in rng.choice(host.order, size=k, replace=False))
        mask = subring_generated(host, gens)
        key = (h, mask.tobytes())
        if mask.sum() > order_cap or key in seen:
            continue
        seen.add(key)
        name = f"subring({RANDOM_HOSTS[h]}; {', '.join(map(str, gens))})"
        yield name, restrict(host, mask, name)


# properties that are the conjunction of two others
CONJUNCTIONS = {"n_reflexive": ("left_n_reflexive", "right_n_reflexive")}


def _implied(a: str, b: str) -> bool:
    graph = {}
    for e in IMPLICATIONS:
        graph.setdefault(e.antecedent, set()).add(e.consequent)
    known = {a}
    while True:
        grown = set(known)
        for x in known:
            grown |= graph.get(x, set())
        grown |= {c for c, parts in CONJUNCTIONS.items() if all(p in grown for p in parts)}
        if grown == known:
            return b in known
        known = grown


@dataclass
class HuntResult:
    holds: str
    fails: str
    found: list[dict] = field(default_factory=list)
    examined: int = 0
    timed_out: bool = False
    reason: str | None = None

    def to_dict(self):
        return {"holds": self.holds, "fails": self.fails, "found": self.found,
                "examined": self.examined, "timed_out": self.timed_out, "reason": self.reason}


def hunt(holds: str, fails: str, max_depth=2, order_cap=64, seed=0, random_count=0,
         timeout_secs: float | None = None, limit=1) -> HuntResult:
    """Rings where ``holds`` is true and ``fails`` is false, constructors first."""
    res = HuntResult(holds, fails)
    decide(build("Zmod(2)"), holds), decide(build("Zmod(2)"), fails)  # validates names
    if _implied(holds, fails):
        res.reason = (f"{holds} and {fails} are the same property" if holds == fails else
                      f"{holds} implies {fails}") + "; no separation possible"
        return res
    deadline = None if timeout_secs is None else time.monotonic() + timeout_secs
    sources = [("constructor", constructor_candidates(max_depth, order_cap))]
    if random_count:
        sources.append(("random", random_candidates(seed, random_count)))
    for kind, gen in sources:
        for name, R in gen:
            if deadline is not None and time.monotonic() > deadline:
                res.timed_out = True
                return res
            res.examined += 1
            if not decide(R, holds).holds:
                continue
            v = decide(R, fails)
            if v.holds:
                continue
            res.found.append({"ring": name, "source": kind, "order": R.order,
                              "witness": v.to_dict(R, timings=False)["witness"]})
            if len(res.found) >= limit:
                return res
    return res
