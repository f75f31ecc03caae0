"""Structured reports (JSON-ready dicts) for matrix, implication and suite runs."""

from __future__ import annotations

import json

from .catalog import EXPERIMENTAL, IMPLICATIONS, Catalog
from .core import DEFAULT_ORDER_CAP
from .predicates import PROPERTY_NAMES, decide, replay

SCHEMA = 1


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def property_matrix(catalog: Catalog, properties=PROPERTY_NAMES, order_cap=DEFAULT_ORDER_CAP,
                    timings=False) -> dict:
    """Verdict for every (ring, property); rows by ring name, columns by property."""
    rings = catalog.build_all(order_cap)
    exprs = {e.name: e.expr for e in catalog.entries}
    columns = sorted(properties)
    rows = []
    false_count = confirmed = 0
    unconfirmed = []
    for name, R in sorted(rings, key=lambda p: p[0]):
        cells = {}
        for prop in columns:
            v = decide(R, prop)
            cell = v.to_dict(R, timings=timings)
            for key in ("ring", "property", "order"):
                cell.pop(key, None)
            if not v.holds:
                false_count += 1
                if replay(R, v):
                    confirmed += 1
                else:
                    unconfirmed.append({"ring": name, "property": prop})
            cells[prop] = cell
        rows.append({"name": name, "expr": exprs[name], "order": R.order, "verdicts": cells})
    return {
        "schema": SCHEMA,
        "kind": "matrix",
        "catalog": catalog.source,
        "order_cap": order_cap,
        "properties": columns,
        "rings": rows,
        "errors": catalog.errors,
        "replay": {"false_verdicts": false_count, "confirmed": confirmed, "unconfirmed": unconfirmed},
    }


def format_matrix(doc: dict) -> str:
    lines = []
    for row in doc["rings"]:
        held = [p for p in doc["properties"] if row["verdicts"][p]["holds"]]
        failed = [p for p in doc["properties"] if not row["verdicts"][p]["holds"]]
        lines.append(f"{row['name']} = {row['expr']}  (order {row['order']})")
        lines.append(f"  holds: {', '.join(held) or '-'}")
        lines.append(f"  fails: {', '.join(failed) or '-'}")
    for err in doc["errors"]:
        lines.append(f"error line {err['line']}: {err['error']}: {err['message']}")
    rp = doc["replay"]
    lines.append(f"witness replay: {rp['confirmed']}/{rp['false_verdicts']} confirmed")
    return "\n".join(lines) + "\n"


def implications_report(catalog: Catalog, order_cap=DEFAULT_ORDER_CAP, experimental=False) -> dict:
    from .theorems import implication_suite

    rings = catalog.build_all(order_cap)
    shipped = implication_suite(rings, IMPLICATIONS)
    doc = {
        "schema": SCHEMA,
        "kind": "implications",
        "catalog": catalog.source,
        "edges": [{"antecedent": e.antecedent, "consequent": e.consequent, "anchor": e.anchor}
                  for e in IMPLICATIONS],
        "rings": [name for name, _ in rings],
        "checks": shipped.checks,
        "violations": shipped.violations,
        "errors": catalog.errors,
    }
    if experimental:
        exp = implication_suite(rings, EXPERIMENTAL, name="experimental")
        doc["experimental"] = {
            "note": "experimental edges are not theorems; counterexamples are findings",
            "edges": [{"antecedent": e.antecedent, "consequent": e.consequent, "anchor": e.anchor}
                      for e in EXPERIMENTAL],
            "counterexamples": exp.violations,
        }
    return doc


def format_implications(doc: dict) -> str:
    lines = [f"{len(doc['edges'])} edges x {len(doc['rings'])} rings: "
             f"{len(doc['violations'])} violation(s)"]
    for v in doc["violations"]:
        lines.append(f"VIOLATION {v['edge']} on {v['ring']} ({v['anchor']}): "
                     + ", ".join(f"{w['role']}={w['display']}" for w in v["witness"] or []))
    if "experimental" in doc:
        lines.append("experimental edges (findings, not theorems):")
        for v in doc["experimental"]["counterexamples"]:
            lines.append(f"  {v['edge']} fails on {v['ring']}: "
                         + ", ".join(f"{w['role']}={w['display']}" for w in v["witness"] or []))
    return "\n".join(lines) + "\n"
