"""Read and write weak Hopf algebra structure data as versioned JSON.

The on-disk document is dense and explicitly versioned: every scalar is an
``[re, im]`` pair, floats carry 17 significant digits so a save/load round
trip reproduces each double exactly, and a formal JSON schema ships with the
package (``data/wha-schema.json``).  Structural problems raise
:class:`~whakit.errors.SchemaError` naming the offending field path; semantic
problems (axiom violations, an antipode that disagrees with the solved one)
surface through the usual validators as :class:`~whakit.errors.ValidationError`.
"""

from __future__ import annotations

import json
import math
from importlib.resources import files
from pathlib import Path

import jsonschema
import numpy as np

from .algebra import FinDimAlgebra
from .config import Tolerance, get_tol
from .errors import SchemaError
from .wha import WeakHopfAlgebra, solve_antipode, validate_star, validate_wba

__all__ = ["SCHEMA_VERSION", "schema", "to_dict", "from_dict", "dumps", "loads", "save", "load"]

SCHEMA_VERSION = 1

_schema_cache: dict | None = None


def schema() -> dict:
    """The JSON schema for serialized algebras, as shipped with the package."""
    global _schema_cache
    if _schema_cache is None:
        text = files("whakit").joinpath("data/wha-schema.json").read_text(encoding="utf-8")
        _schema_cache = json.loads(text)
    return _schema_cache


# ---------------------------------------------------------------------------
# serialization


def _pairs(arr: np.ndarray):
    """Nested lists with each complex entry expanded to an [re, im] pair."""
    stacked = np.stack([np.real(arr), np.imag(arr)], axis=-1)
    return stacked.tolist()


def to_dict(w: WeakHopfAlgebra, name: str | None = None, provenance: str | None = None) -> dict:
    """Plain-dict form of ``w`` following the packaged schema."""
    n = w.dim
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "dim": n,
        "basis_labels": [str(lbl) for lbl in w.algebra.basis_labels],
        "structure_constants": _pairs(w.algebra.c),
        "unit": _pairs(w.algebra.unit),
        "comultiplication": _pairs(w.delta),
        "counit": _pairs(w.eps),
        "antipode": _pairs(w.antipode),
    }
    if w.algebra.involution is not None:
        doc["involution"] = _pairs(w.algebra.involution)
    doc["metadata"] = {"name": name if name is not None else w.name}
    if provenance is not None:
        doc["metadata"]["provenance"] = provenance
    return doc


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise SchemaError(f"non-finite value {x!r} cannot be serialized")
    return format(float(x), ".17g")


def _emit(node, indent: int) -> str:
    """Render the document with 17-significant-digit floats.

    Innermost numeric lists print on one line so matrices diff row by row.
    """
    pad = "  " * indent
    if isinstance(node, dict):
        items = [f'{pad}  {json.dumps(k)}: {_emit(v, indent + 1).lstrip()}' for k, v in node.items()]
        return pad + "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(node, list):
        if all(not isinstance(v, (list, dict)) for v in node):
            return pad + "[" + ", ".join(_emit(v, 0) for v in node) + "]"
        items = [_emit(v, indent + 1) for v in node]
        return pad + "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(node, bool) or node is None:
        return pad + json.dumps(node)
    if isinstance(node, int):
        return pad + str(node)
    if isinstance(node, float):
        return pad + _fmt_float(node)
    if isinstance(node, str):
        return pad + json.dumps(node)
    raise SchemaError(f"cannot serialize value of type {type(node).__name__}")


def dumps(w: WeakHopfAlgebra, name: str | None = None, provenance: str | None = None) -> str:
    """Serialize ``w`` to schema-valid JSON text."""
    return _emit(to_dict(w, name=name, provenance=provenance), 0) + "\n"


def save(w: WeakHopfAlgebra, path, name: str | None = None, provenance: str | None = None) -> None:
    Path(path).write_text(dumps(w, name=name, provenance=provenance), encoding="utf-8")


# ---------------------------------------------------------------------------
# deserialization


def _carray(doc: dict, field: str, shape: tuple[int, ...]) -> np.ndarray:
    try:
        raw = np.asarray(doc[field], dtype=float)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{field}: ragged or non-numeric array ({exc})") from None
    if raw.shape != shape + (2,):
        want = "x".join(str(s) for s in shape)
        got = "x".join(str(s) for s in raw.shape[:-1]) if raw.shape and raw.shape[-1] == 2 else str(raw.shape)
        raise SchemaError(f"{field}: expected {want} entries, got {got}")
    return raw[..., 0] + 1j * raw[..., 1]


def from_dict(doc: dict, validate: bool = True, tol: Tolerance | None = None) -> WeakHopfAlgebra:
    """Rebuild a :class:`WeakHopfAlgebra` from its dict form.

    With ``validate=True`` (the default) the axioms are re-checked, the star
    structure is re-verified when present, and a supplied antipode is compared
    against the one solved from the comultiplication.
    """
    tol = get_tol(tol)
    try:
        jsonschema.validate(doc, schema())
    except jsonschema.exceptions.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{path}: {exc.message}") from None
    n = int(doc["dim"])
    c = _carray(doc, "structure_constants", (n, n, n))
    unit = _carray(doc, "unit", (n,))
    delta = _carray(doc, "comultiplication", (n * n, n))
    eps = _carray(doc, "counit", (n,))
    involution = _carray(doc, "involution", (n, n)) if "involution" in doc else None
    labels = doc.get("basis_labels")
    if labels is not None and len(labels) != n:
        raise SchemaError(f"basis_labels: expected {n} labels, got {len(labels)}")
    meta = doc.get("metadata", {})
    alg = FinDimAlgebra(c, unit, involution=involution, basis_labels=labels, name=str(meta.get("name", "loaded")))
    if "antipode" in doc:
        s = _carray(doc, "antipode", (n, n))
    else:
        s = None
    w = WeakHopfAlgebra(alg, delta, eps, s if s is not None else np.eye(n, dtype=complex))
    if s is None or validate:
        validate_wba(w, tol).raise_if_failed()
        solved = solve_antipode(w, tol)
        if s is None:
            w = WeakHopfAlgebra(alg, delta, eps, solved)
        else:
            resid = float(np.linalg.norm(s - solved))
            if resid > tol.bound(max(1.0, float(np.linalg.norm(solved)))) * 100:
                raise SchemaError(f"antipode: disagrees with the solved antipode (residual {resid:.3e})")
    if validate and involution is not None:
        validate_star(w, tol).raise_if_failed()
    return w


def loads(text: str, validate: bool = True, tol: Tolerance | None = None) -> WeakHopfAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    return from_dict(doc, validate=validate, tol=tol)


def load(path, validate: bool = True, tol: Tolerance | None = None) -> WeakHopfAlgebra:
    text = Path(path).read_text(encoding="utf-8")
    return loads(text, validate=validate, tol=tol)
