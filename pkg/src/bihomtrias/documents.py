"""Canonical algebra and operator documents.

An algebra document is a single JSON object::

    {
      "name": "BTas_2^1",
      "dim": 2,
      "left":   [{"i": 1, "j": 2, "k": 1, "c": "1"}, ...],
      "right":  [...],
      "middle": [...],
      "alpha":  [["0", "1"], ["0", "0"]],
      "beta":   [["0", "1"], ["0", "0"]]
    }

Product records use 1-based basis indices and Scalar strings; unlisted
products are zero (the zero-completion convention).  ``alpha``/``beta``
are dim x dim arrays of Scalar strings with entry [j][i] = coefficient
of e_j in the image of e_i (column i is the image of e_i).  Duplicate
(i, j, k) triples in one product block are a ParseError.

An operator document (for R, psi, xi) is a bare dim x dim array of
Scalar strings under the same column-as-image convention.

Serialization is canonical: fixed key order, products sorted by
(i, j, k), zero coefficients omitted, canonical scalar spellings.
parse(serialize(A)) == A, and serialize . parse is idempotent on bytes.
"""

from __future__ import annotations

import json

from .core import LEFT, MIDDLE, RIGHT, BiHomTrialgebra, LinearMap, MulTensor
from .errors import DimensionError, ParseError
from .matrices import Matrix
from .scalars import format_scalar, parse_scalar

_PRODUCT_KEYS = (("left", LEFT), ("right", RIGHT), ("middle", MIDDLE))


def _check_index(value, dim, location):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"index must be an integer, got {value!r}", location)
    if not 1 <= value <= dim:
        raise DimensionError(f"index {value} out of range 1..{dim}", location)
    return value - 1


def _parse_tensor(records, dim, role, key):
    if not isinstance(records, list):
        raise ParseError(f"{key} must be an array of product records", key)
    entries = {}
    for pos, rec in enumerate(records):
        loc = f"{key}[{pos}]"
        if not isinstance(rec, dict) or set(rec) != {"i", "j", "k", "c"}:
            raise ParseError("product record must have exactly i, j, k, c", loc)
        i = _check_index(rec["i"], dim, loc + ".i")
        j = _check_index(rec["j"], dim, loc + ".j")
        k = _check_index(rec["k"], dim, loc + ".k")
        if (i, j, k) in entries:
            raise ParseError(
                f"duplicate product triple (i={rec['i']}, j={rec['j']}, k={rec['k']})", loc
            )
        entries[(i, j, k)] = parse_scalar(rec["c"], loc + ".c")
    return MulTensor.from_entries(dim, role, entries)


def _parse_map(rows, dim, key):
    if (
        not isinstance(rows, list)
        or len(rows) != dim
        or any(not isinstance(r, list) or len(r) != dim for r in rows)
    ):
        raise ParseError(f"{key} must be a {dim}x{dim} array of scalar strings", key)
    entries = []
    for r, row in enumerate(rows):
        for c, cell in enumerate(row):
            entries.append(parse_scalar(cell, f"{key}[{r}][{c}]"))
    return LinearMap(Matrix(dim, dim, entries))


def document_to_algebra(doc: dict) -> BiHomTrialgebra:
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be a JSON object")
    unknown = set(doc) - {"name", "dim", "left", "right", "middle", "alpha", "beta"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name must be a string", "name")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim must be a positive integer", "dim")
    tensors = {}
    for key, role in _PRODUCT_KEYS:
        tensors[role] = _parse_tensor(doc.get(key, []), dim, role, key)
    alpha = _parse_map(doc["alpha"], dim, "alpha") if "alpha" in doc else LinearMap.zero(dim)
    beta = _parse_map(doc["beta"], dim, "beta") if "beta" in doc else LinearMap.zero(dim)
    return BiHomTrialgebra(name, dim, tensors[LEFT], tensors[RIGHT], tensors[MIDDLE], alpha, beta)


def algebra_to_document(algebra: BiHomTrialgebra) -> dict:
    doc = {"name": algebra.name, "dim": algebra.dim}
    for key, role in _PRODUCT_KEYS:
        records = []
        for (i, j, k), v in algebra.tensor(role).nonzero_entries():
            records.append({"i": i + 1, "j": j + 1, "k": k + 1, "c": format_scalar(v)})
        doc[key] = records
    for key, m in (("alpha", algebra.alpha), ("beta", algebra.beta)):
        doc[key] = [
            [format_scalar(m.matrix[r, c]) for c in range(algebra.dim)]
            for r in range(algebra.dim)
        ]
    return doc


def parse_algebra(text: str) -> BiHomTrialgebra:
    """Parse an algebra document; raises ParseError/DimensionError with diagnostics."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", f"line {e.lineno}, column {e.colno}") from None
    return document_to_algebra(doc)


def serialize_algebra(algebra: BiHomTrialgebra) -> str:
    """Canonical text form; round-trip stable."""
    return json.dumps(algebra_to_document(algebra), indent=2) + "\n"


def parse_operator(text: str, expected_dim: int | None = None) -> LinearMap:
    """Parse an operator document (dim x dim array of scalar strings)."""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", f"line {e.lineno}, column {e.colno}") from None
    if not isinstance(rows, list) or not rows:
        raise ParseError("operator document must be a non-empty array of rows")
    dim = len(rows)
    m = _parse_map(rows, dim, "operator")
    if expected_dim is not None and dim != expected_dim:
        raise DimensionError(f"operator is {dim}x{dim}, expected {expected_dim}x{expected_dim}")
    return m


def serialize_operator(op: LinearMap) -> str:
    rows = [
        [format_scalar(op.matrix[r, c]) for c in range(op.dim)] for r in range(op.dim)
    ]
    return json.dumps(rows, indent=2) + "\n"
