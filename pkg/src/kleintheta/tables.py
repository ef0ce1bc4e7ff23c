"""JSON / CSV encodings of Stiefel-Whitney tables and their re-validation."""

from __future__ import annotations

import csv
import io
import json

from . import __version__
from .appell_humbert import alpha_from_theta
from .errors import VerificationError
from .klein import TopologicalType, standard_model
from .real_sw import SWTable, row_at, sw_table
from .theta import QuadraticForm


def provenance(**params) -> dict:
    return {"program": "kleintheta", "version": __version__, "parameters": params}


def table_to_dict(table: SWTable, **params) -> dict:
    datum = alpha_from_theta(table.form)
    return {
        "type": str(table.model.type),
        "q": table.form.bits(),
        "basis": [list(b) for b in table.basis],
        "circleClasses": [list(c) for c in table.model.circle_classes],
        "alpha": [str(a) for a in datum.alpha.angles],
        "components": [
            {"mu": comp.label(), "row": list(row), "circleValues": list(cv)}
            for comp, row, cv in zip(table.components, table.rows, table.circle_values)
        ],
        "spinData": list(table.spin),
        "provenance": provenance(**params),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def table_to_csv(table: SWTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["mu"] + [f"b{k}" for k in range(len(table.basis))]
               + [f"C{i + 1}" for i in range(len(table.model.circle_classes))])
    for comp, row, cv in zip(table.components, table.rows, table.circle_values):
        w.writerow([" ".join(comp.label())] + list(row) + list(cv))
    w.writerow(["spin"] + [""] * len(table.basis) + list(table.spin))
    return buf.getvalue()


def validate_table_dict(obj: dict) -> SWTable:
    """Re-derive the table named by a parsed JSON payload and check that the
    payload agrees with it and with the table invariants."""
    t = TopologicalType.parse(obj["type"])
    q = QuadraticForm.from_bits([int(b) for b in obj["q"].split(",")] if obj["q"] else [])
    table = sw_table(standard_model(t), q)
    comps = obj["components"]
    if len(comps) != 2 ** (t.n - 1):
        raise VerificationError(f"{len(comps)} components, expected 2^(n-1) = {2 ** (t.n - 1)}")
    fresh = table_to_dict(table)
    for key in ("basis", "circleClasses", "components", "spinData", "alpha"):
        if obj[key] != fresh[key]:
            raise VerificationError(f"payload field {key!r} disagrees with recomputation")
    for comp, row, cv in zip(table.components, table.rows, table.circle_values):
        for c, v in zip(table.model.circle_classes, cv):
            if row_at(table, row, c) != v:
                raise VerificationError("row is not a homomorphism on the circle classes")
    for s, v in zip(table.spin, table.circle_values[0]):
        if s != (v + 1) % 2:
            raise VerificationError("spin data differs from row [0] plus one")
    return table
