"""JSON documents (schema "1").  Coefficients travel as canonical strings, never floats."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .contraction import CheckItem, ContractionReport, WeightAssignment
from .core import Gen, LinearCombination, SuperAlgebra
from .scalars import parse_scalar, render_scalar

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    pass


def _frac(s) -> Fraction:
    return Fraction(str(s))


# -- algebras --------------------------------------------------------------------------------

def algebra_to_dict(alg: SuperAlgebra, report: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    basis = [{"name": g.name, "kind": g.kind, "indices": list(g.indices), "parity": g.parity}
             for g in alg.basis]
    brackets = []
    pos = alg.position
    for (x, y) in sorted(alg.table, key=lambda k: (pos[k[0]], pos[k[1]])):
        v = alg.table[(x, y)]
        brackets.append({"left": x.name, "right": y.name,
                         "terms": [{"gen": g.name, "coeff": render_scalar(c)} for g, c in v.items()]})
    doc: Dict[str, Any] = {"schema_version": SCHEMA_VERSION, "document": "algebra", "name": alg.name,
                           "domain": alg.domain, "basis": basis, "brackets": brackets}
    if report is not None:
        doc["report"] = report
    return doc


def algebra_from_dict(doc: Dict[str, Any]) -> SuperAlgebra:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc.get('schema_version')!r}")
    if doc.get("document", "algebra") != "algebra":
        raise DocumentError(f"not an algebra document: {doc.get('document')!r}")
    domain = doc.get("domain", "constant")
    try:
        basis = []
        for b in doc["basis"]:
            g = Gen(b["kind"], tuple(b["indices"]))
            if b.get("name", g.name) != g.name:
                raise DocumentError(f"basis entry name {b['name']!r} does not match {g.name!r}")
            if "parity" in b and b["parity"] != g.parity:
                raise DocumentError(f"{g.name} declared with parity {b['parity']}")
            basis.append(g)
        table = {}
        for br in doc["brackets"]:
            x, y = Gen.parse(br["left"]), Gen.parse(br["right"])
            if (x, y) in table:
                raise DocumentError(f"duplicate bracket [{x}, {y}]")
            table[(x, y)] = LinearCombination(
                (Gen.parse(t["gen"]), parse_scalar(t["coeff"], domain)) for t in br["terms"])
        return SuperAlgebra(basis, table, domain, name=doc.get("name", ""))
    except (KeyError, TypeError) as e:
        raise DocumentError(f"malformed algebra document: {e}") from e


# -- weights -----------------------------------------------------------------------------------

def weights_to_dict(w: WeightAssignment) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "document": "weights",
            "weights": {k: str(v) for k, v in w.weights}}


def weights_from_dict(doc: Dict[str, Any]) -> WeightAssignment:
    ws = doc.get("weights", doc)
    if not isinstance(ws, dict):
        raise DocumentError("weights must be an object of family -> half-integer")
    try:
        return WeightAssignment.of({k: _frac(v) for k, v in ws.items()
                                    if k not in ("schema_version", "document")})
    except (ValueError, ZeroDivisionError) as e:
        raise DocumentError(str(e)) from e


# -- reports --------------------------------------------------------------------------------

def contraction_report_to_dict(rep: ContractionReport) -> Dict[str, Any]:
    d = rep.summary()
    d["max_degree"] = [[str(x), str(y), n] for (x, y), n in rep.max_degree.items()]
    d["surviving_pairs"] = [[str(x), str(y)] for x, y in rep.surviving]
    d["vanished_pairs"] = [[str(x), str(y)] for x, y in rep.vanished]
    return d


def checklist_to_dict(items: List[CheckItem], jacobi_violations: int) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "document": "verification",
            "jacobi_violations": jacobi_violations,
            "items": [{"key": i.key, "label": i.label, "passed": i.passed,
                       "details": i.details, "info": i.info} for i in items]}


def search_spec_to_dict(spec) -> Dict[str, Any]:
    return {"N": spec.N, "lo": str(spec.lo), "hi": str(spec.hi), "step": str(spec.step),
            "pins": {k: str(v) for k, v in spec.pins}, "symmetric": spec.symmetric, "cap": spec.cap}


def search_spec_from_dict(d: Dict[str, Any]):
    from .search import SearchSpec
    return SearchSpec(int(d["N"]), _frac(d["lo"]), _frac(d["hi"]), _frac(d["step"]),
                      tuple((k, _frac(v)) for k, v in d.get("pins", {}).items()),
                      bool(d.get("symmetric", True)), int(d.get("cap", 10 ** 7)))


def search_result_to_dict(res) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "document": "search",
            "spec": search_spec_to_dict(res.spec),
            "families": list(res.families),
            "admissible": [{k: str(v) for k, v in w.weights} for w, _ in res.admissible],
            "naive_size": res.naive_size,
            "enumerated": res.enumerated,
            "counterexamples": res.counterexamples,
            "rejected": dict(res.rejected),
            "stage_sizes": dict(res.stage_sizes),
            "elapsed_seconds": round(res.elapsed, 3)}


# -- text -------------------------------------------------------------------------------------

def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=1, ensure_ascii=True) + "\n"


def loads(text: str) -> Dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise DocumentError("top-level JSON value must be an object")
    return doc


def read_algebra(path: str) -> SuperAlgebra:
    with open(path, encoding="utf-8") as fh:
        return algebra_from_dict(loads(fh.read()))


def write_algebra(alg: SuperAlgebra, path: str, report: Optional[Dict[str, Any]] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(algebra_to_dict(alg, report)))
