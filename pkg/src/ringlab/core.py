"""Finite rings given by addition and multiplication tables.

Elements are the indices ``0..n-1``.  Nothing in here depends on which index
an element happens to get: every set and predicate is computed from the
tables alone, so isomorphic rings give matching answers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Mapping

import numpy as np

from . import kernels
from .errors import AxiomViolation, BoundExceeded, NotAnIdeal

DEFAULT_ORDER_CAP = 256
DEFAULT_IDEAL_CAP = 4096


@dataclass(frozen=True, eq=False)
class FiniteRing:
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    name: str = "R"
    reps: tuple | None = None
    labels: tuple[str, ...] | None = None
    endomorphisms: Mapping[str, Any] = field(default_factory=dict)
    _memo: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        for attr in ("add", "mul"):
            table = np.array(getattr(self, attr), dtype=np.int64)
            table.flags.writeable = False
            object.__setattr__(self, attr, table)
        object.__setattr__(self, "zero", int(self.zero))
        object.__setattr__(self, "one", int(self.one))

    def __repr__(self):
        return f"FiniteRing({self.name!r}, order={self.order})"

    @property
    def order(self) -> int:
        return self.add.shape[0]

    def elements(self):
        return range(self.order)

    def label(self, i: int) -> str:
        if self.labels is None:
            return str(int(i))
        return self.labels[int(i)]

    def rep(self, i: int):
        return int(i) if self.reps is None else self.reps[int(i)]

    def index(self, rep) -> int:
        """Element index of a structured representation (matrix tuple, pair...)."""
        if self.reps is None:
            return int(rep)
        lookup = self._memo.get("rep_index")
        if lookup is None:
            lookup = {r: i for i, r in enumerate(self.reps)}
            self._memo["rep_index"] = lookup
        try:
            return lookup[rep]
        except KeyError:
            raise KeyError(f"{rep!r} is not an element of {self.name}") from None

    def cached(self, key, compute):
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    @cached_property
    def neg(self) -> np.ndarray:
        rows, cols = np.nonzero(self.add == self.zero)
        out = np.empty(self.order, dtype=np.int64)
        out[rows] = cols
        return out

    def sub(self, a, b):
        return self.add[a, self.neg[b]]

    @cached_property
    def nil_mask(self) -> np.ndarray:
        return kernels.nilpotent_mask(self.mul, self.zero)

    @cached_property
    def idempotent_mask(self) -> np.ndarray:
        idx = np.arange(self.order)
        return self.mul[idx, idx] == idx

    @cached_property
    def unit_mask(self) -> np.ndarray:
        hits = self.mul == self.one
        return (hits & hits.T).any(axis=1)

    @cached_property
    def central_mask(self) -> np.ndarray:
        return (self.mul == self.mul.T).all(axis=1)

    @cached_property
    def is_commutative(self) -> bool:
        return bool(self.central_mask.all())

    @cached_property
    def additive_exponent(self) -> int:
        k, x = 1, self.one
        while x != self.zero:
            x = self.add[x, self.one]
            k += 1
        return k


class ElementSet:
    """A subset of a ring's elements, stored as a boolean mask."""

    __slots__ = ("ring", "mask")

    def __init__(self, ring: FiniteRing, mask):
        mask = np.array(mask, dtype=np.bool_)
        if mask.shape != (ring.order,):
            raise ValueError("mask length must equal the ring order")
        mask.flags.writeable = False
        self.ring = ring
        self.mask = mask

    @classmethod
    def of(cls, ring, members: Iterable[int]):
        mask = np.zeros(ring.order, dtype=np.bool_)
        mask[list(members)] = True
        return cls(ring, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.mask))

    def __contains__(self, i):
        return 0 <= i < self.ring.order and bool(self.mask[i])

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return int(self.mask.sum())

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.ring is other.ring and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self):
        return hash((id(self.ring), self.mask.tobytes()))

    def __le__(self, other):
        return bool((self.mask <= other.mask).all())

    def __repr__(self):
        body = ", ".join(self.ring.label(i) for i in self.members)
        return f"{type(self).__name__}({self.ring.name}: {{{body}}})"

    def labels(self):
        return [self.ring.label(i) for i in self.members]


class IdealSet(ElementSet):
    __slots__ = ()

    def sort_key(self):
        return (len(self), self.members)


def verify_axioms(add, mul, zero, one, name="R", **meta) -> FiniteRing:
    """Validate raw tables and return the ring, or raise :class:`AxiomViolation`.

    Checks run in a fixed order (abelian group, identity, associativity,
    distributivity) and each reports its lexicographically least witness.
    """
    add = np.asarray(add, dtype=np.int64)
    mul = np.asarray(mul, dtype=np.int64)
    if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
        raise ValueError("tables must both be n x n")
    n = add.shape[0]
    if n == 0:
        raise ValueError("a ring has at least one element")
    for t in (add, mul):
        if t.min() < 0 or t.max() >= n:
            raise ValueError("table entries must be element indices < n")
    if not (0 <= zero < n and 0 <= one < n):
        raise ValueError("zero and one must be element indices")

    idx = np.arange(n)
    hit = np.flatnonzero(add[zero] != idx)
    if len(hit):
        raise AxiomViolation("abelian-group", (int(hit[0]),), "zero is not an additive identity")
    hits = np.argwhere(add != add.T)
    if len(hits):
        raise AxiomViolation("abelian-group", tuple(int(v) for v in hits[0]), "addition not commutative")
    has_inverse = (add == zero).any(axis=1)
    if not has_inverse.all():
        raise AxiomViolation("abelian-group", (int(np.flatnonzero(~has_inverse)[0]),), "no additive inverse")
    w = kernels.first_assoc_violation(add)
    if w[0] >= 0:
        raise AxiomViolation("abelian-group", w, "addition not associative")

    if n > 1 and zero == one:
        raise AxiomViolation("identity", (one,), "zero equals one in a nonzero ring")
    bad = np.flatnonzero((mul[one] != idx) | (mul[:, one] != idx))
    if len(bad):
        raise AxiomViolation("identity", (int(bad[0]),), "one is not a two-sided identity")

    w = kernels.first_assoc_violation(mul)
    if w[0] >= 0:
        raise AxiomViolation("associativity", w)
    w = kernels.first_left_distrib_violation(mul, add)
    if w[0] >= 0:
        raise AxiomViolation("distributivity", w, "a(b+c) != ab+ac")
    w = kernels.first_right_distrib_violation(mul, add)
    if w[0] >= 0:
        raise AxiomViolation("distributivity", w, "(a+b)c != ac+bc")
    return FiniteRing(add, mul, zero, one, name=name, **meta)


def revalidate(ring: FiniteRing) -> FiniteRing:
    return verify_axioms(ring.add, ring.mul, ring.zero, ring.one, name=ring.name)


# -- element sets ---------------------------------------------------------

def nilpotents(R: FiniteRing) -> ElementSet:
    return ElementSet(R, R.nil_mask)


def idempotents(R: FiniteRing) -> ElementSet:
    return ElementSet(R, R.idempotent_mask)


def units(R: FiniteRing) -> ElementSet:
    return ElementSet(R, R.unit_mask)


def central(R: FiniteRing) -> ElementSet:
    return ElementSet(R, R.central_mask)


def _mask_of(R, S):
    if isinstance(S, ElementSet):
        return S.mask
    mask = np.zeros(R.order, dtype=np.bool_)
    mask[list(S)] = True
    return mask


def right_annihilator(R: FiniteRing, S) -> ElementSet:
    """r_R(S) = {b : s b = 0 for every s in S}."""
    rows = np.flatnonzero(_mask_of(R, S))
    if len(rows) == 0:
        raise ValueError("annihilator of an empty set")
    return ElementSet(R, (R.mul[rows] == R.zero).all(axis=0))


def left_annihilator(R: FiniteRing, S) -> ElementSet:
    """l_R(S) = {b : b s = 0 for every s in S}."""
    cols = np.flatnonzero(_mask_of(R, S))
    if len(cols) == 0:
        raise ValueError("annihilator of an empty set")
    return ElementSet(R, (R.mul[:, cols] == R.zero).all(axis=1))


# -- ideals ---------------------------------------------------------------

def is_ideal_mask(R: FiniteRing, mask) -> bool:
    mask = np.asarray(mask, dtype=np.bool_)
    members = np.flatnonzero(mask)
    if not mask[R.zero]:
        return False
    if not mask[R.add[np.ix_(members, members)]].all():
        return False
    return bool(mask[R.mul[:, members]].all() and mask[R.mul[members, :]].all())


def as_ideal(R: FiniteRing, members) -> IdealSet:
    mask = _mask_of(R, members)
    if not is_ideal_mask(R, mask):
        raise NotAnIdeal(f"{sorted(np.flatnonzero(mask).tolist())} is not an ideal of {R.name}")
    return IdealSet(R, mask)


def principal_ideal(R: FiniteRing, a: int) -> IdealSet:
    """RaR: additive closure of {r a s}; already two-sided since R has 1."""
    key = ("principal", int(a))
    return R.cached(key, lambda: IdealSet(R, _closure(R, R.mul[R.mul[:, a]].ravel())))


def _closure(R, values):
    mask = np.zeros(R.order, dtype=np.bool_)
    mask[values] = True
    mask[R.zero] = True
    return kernels.additive_closure(R.add, mask)


def ideal_sum(I: IdealSet, J: IdealSet) -> IdealSet:
    R = I.ring
    return IdealSet(R, kernels.additive_closure(R.add, I.mask | J.mask))


def ideal_generated(R: FiniteRing, gens: Iterable[int]) -> IdealSet:
    ideal = IdealSet(R, np.eye(1, R.order, R.zero, dtype=np.bool_)[0])
    for g in gens:
        ideal = ideal_sum(ideal, principal_ideal(R, g))
    return ideal


def all_ideals(R: FiniteRing, order_cap=DEFAULT_ORDER_CAP, ideal_cap=DEFAULT_IDEAL_CAP) -> list[IdealSet]:
    """Every two-sided ideal, sorted by (size, members).

    Each ideal is a finite sum of principal ideals, so closing the principal
    ideals under sums with principal ideals reaches all of them.
    """
    if R.order > order_cap:
        raise BoundExceeded(f"{R.name} has order {R.order} > {order_cap}")

    def compute():
        seen = {}
        for a in R.elements():
            p = principal_ideal(R, a)
            seen.setdefault(p.mask.tobytes(), p)
        principals = list(seen.values())
        frontier = principals
        while frontier:
            fresh = []
            for I in frontier:
                for P in principals:
                    if P <= I:
                        continue
                    S = ideal_sum(I, P)
                    key = S.mask.tobytes()
                    if key not in seen:
                        seen[key] = S
                        fresh.append(S)
                        if len(seen) > ideal_cap:
                            raise BoundExceeded(f"{R.name} has more than {ideal_cap} ideals")
            frontier = fresh
        return sorted(seen.values(), key=IdealSet.sort_key)

    return R.cached(("all_ideals", ideal_cap), compute)


def quotient(R: FiniteRing, I) -> FiniteRing:
    """R/I on least-index coset representatives."""
    ideal = I if isinstance(I, IdealSet) else as_ideal(R, I)
    if not is_ideal_mask(R, ideal.mask):
        raise NotAnIdeal(f"not an ideal of {R.name}")
    members = np.array(ideal.members)
    # coset[x] = least element of x + I
    coset = R.add[:, members].min(axis=1)
    reps = np.unique(coset)
    new_index = np.full(R.order, -1, dtype=np.int64)
    new_index[reps] = np.arange(len(reps))
    proj = new_index[coset]
    add = proj[R.add[np.ix_(reps, reps)]]
    mul = proj[R.mul[np.ix_(reps, reps)]]
    name = f"{R.name}/I{len(members)}"
    return FiniteRing(
        add, mul, int(proj[R.zero]), int(proj[R.one]), name=name,
        reps=tuple(R.rep(r) for r in reps),
        labels=tuple(f"[{R.label(r)}]" for r in reps),
    )


def projection(R: FiniteRing, I: IdealSet) -> np.ndarray:
    """Index map R -> quotient(R, I), matching the representatives used there."""
    members = np.array(I.members)
    coset = R.add[:, members].min(axis=1)
    reps = np.unique(coset)
    new_index = np.full(R.order, -1, dtype=np.int64)
    new_index[reps] = np.arange(len(reps))
    return new_index[coset]


def jacobson_radical(R: FiniteRing) -> IdealSet:
    """{a : 1 - r a is a unit for every r}."""
    def compute():
        ra = R.mul                     # ra[r, a]
        one_minus = R.add[R.one, R.neg[ra]]
        return IdealSet(R, R.unit_mask[one_minus].all(axis=0))

    return R.cached("jacobson", compute)


def is_reduced_as_rng(I: ElementSet) -> bool:
    R = I.ring
    bad = I.mask & R.nil_mask
    bad[R.zero] = False
    return not bad.any()


# -- ring table text format -----------------------------------------------

_HEADER = re.compile(r"^ring\s+(.+?)\s+order\s+(\d+)$")


def format_ring_table(R: FiniteRing) -> str:
    lines = [f"ring {R.name} order {R.order}", "add"]
    lines += [" ".join(str(v) for v in row) for row in R.add.tolist()]
    lines.append("mul")
    lines += [" ".join(str(v) for v in row) for row in R.mul.tolist()]
    lines += [f"zero {R.zero}", f"one {R.one}"]
    return "\n".join(lines) + "\n"


def parse_ring_table(text: str, validate=True) -> FiniteRing:
    """Read the ``ring <name> order <n>`` / add / mul / zero / one format."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ValueError("empty ring table")
    lineno, head = lines[0]
    m = _HEADER.match(head)
    if not m:
        raise ValueError(f"line {lineno}: expected 'ring <name> order <n>'")
    name, n = m.group(1), int(m.group(2))
    pos = 1
    tables = {}
    scalars = {}
    while pos < len(lines):
        lineno, body = lines[pos]
        words = body.split()
        if words[0] in ("add", "mul") and len(words) == 1:
            rows = []
            for k in range(n):
                if pos + 1 + k >= len(lines):
                    raise ValueError(f"{words[0]} block ends early after line {lineno}")
                rl, row = lines[pos + 1 + k]
                try:
                    vals = [int(v) for v in row.split()]
                except ValueError:
                    raise ValueError(f"line {rl}: non-integer entry") from None
                if len(vals) != n:
                    raise ValueError(f"line {rl}: expected {n} entries, got {len(vals)}")
                rows.append(vals)
            tables[words[0]] = rows
            pos += n + 1
        elif words[0] in ("zero", "one") and len(words) == 2:
            scalars[words[0]] = int(words[1])
            pos += 1
        else:
            raise ValueError(f"line {lineno}: unexpected {body!r}")
    for key in ("add", "mul"):
        if key not in tables:
            raise ValueError(f"missing {key} block")
    for key in ("zero", "one"):
        if key not in scalars:
            raise ValueError(f"missing '{key}' line")
    if validate:
        return verify_axioms(tables["add"], tables["mul"], scalars["zero"], scalars["one"], name=name)
    return FiniteRing(tables["add"], tables["mul"], scalars["zero"], scalars["one"], name=name)
