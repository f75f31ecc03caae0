"""Ring catalogs and the implication graph checked against them."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .constructors import build
from .core import DEFAULT_ORDER_CAP, FiniteRing
from .errors import RingLabError
from .expr import parse


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expr: str
    line: int


@dataclass
class Catalog:
    entries: list[CatalogEntry]
    source: str = "<memory>"
    errors: list[dict] = field(default_factory=list)

    def names(self):
        return [e.name for e in self.entries]

    def build_all(self, order_cap=DEFAULT_ORDER_CAP):
        """(name, ring) pairs in catalog order; build failures go to ``errors``."""
        out = []
        for e in self.entries:
            try:
                R = build(parse(e.expr), order_cap=order_cap)
            except RingLabError as exc:
                self.errors.append({"name": e.name, "line": e.line, "error": type(exc).__name__,
                                    "message": str(exc)})
                continue
            out.append((e.name, R))
        return out


def parse_catalog(text: str, source: str = "<memory>") -> Catalog:
    """Read ``name = expression`` lines.  Malformed lines are recorded, not fatal."""
    entries, errors, seen = [], [], set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, expr = (s.strip() for s in line.partition("="))
        if not sep or not name or not expr:
            errors.append({"name": None, "line": lineno, "error": "ParseError",
                           "message": f"expected 'name = expression', got {line!r}"})
            continue
        if name in seen:
            errors.append({"name": name, "line": lineno, "error": "DuplicateName",
                           "message": f"catalog name {name!r} already used"})
            continue
        try:
            parse(expr)
        except RingLabError as exc:
            errors.append({"name": name, "line": lineno, "error": type(exc).__name__,
                           "message": str(exc)})
            continue
        seen.add(name)
        entries.append(CatalogEntry(name, expr, lineno))
    return Catalog(entries, source, errors)


def load_catalog(path: str | Path) -> Catalog:
    p = Path(path)
    return parse_catalog(p.read_text(), str(p))


def default_catalog() -> Catalog:
    text = resources.files("ringlab.data").joinpath("default_catalog.txt").read_text()
    return parse_catalog(text, "default")


def default_rings(order_cap=DEFAULT_ORDER_CAP) -> list[tuple[str, FiniteRing]]:
    return default_catalog().build_all(order_cap)


# -- implication graph ---------------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    antecedent: str
    consequent: str
    anchor: str


IMPLICATIONS = (
    Edge("reduced", "reversible", "reduced rings are reversible"),
    Edge("reversible", "left_n_reflexive", "every reversible ring is left and right N-reflexive"),
    Edge("reversible", "right_n_reflexive", "every reversible ring is left and right N-reflexive"),
    Edge("reflexive", "n_reflexive", "every reflexive ring is N-reflexive"),
    Edge("semiprime", "n_reflexive", "every semiprime ring is N-reflexive"),
    Edge("n_reversible", "nil_semicommutative", "N-reversible rings are nil-semicommutative and N-reflexive"),
    Edge("n_reversible", "n_reflexive", "N-reversible rings are nil-semicommutative and N-reflexive"),
    Edge("left_n_reflexive", "left_n_right_idempotent_reflexive",
         "every left N-reflexive ring is left N-right idempotent reflexive"),
    Edge("left_n_reflexive", "sr_equals_b", "left N-reflexive rings have S_r(R) = B(R)"),
    Edge("right_n_reflexive", "sl_equals_b", "right N-reflexive rings have S_l(R) = B(R)"),
    Edge("n_reflexive", "left_n_reflexive", "N-reflexive means left and right N-reflexive"),
    Edge("n_reflexive", "right_n_reflexive", "N-reflexive means left and right N-reflexive"),
)

# Not theorems.  Counterexamples here are findings, not contradictions.
EXPERIMENTAL = (
    Edge("n_reflexive", "two_primal", "open question: is every N-reflexive ring 2-primal?"),
    Edge("left_n_right_idempotent_reflexive", "left_n_reflexive",
         "converse of a theorem, expected to fail"),
    Edge("left_n_reflexive", "right_n_reflexive", "one-sided N-reflexivity is not symmetric"),
)
