"""Versioned JSON documents for circuits.

Schema (format_version "1"): a top-level object with keys
``format_version``, ``n_s``, ``n_p`` and ``elements``. Each element is
tagged by ``kind``:

    {"kind": "internal", "spatial_index": k, "matrix": [[[re, im], ...], ...]}
    {"kind": "beamsplitter", "spatial_pair": [k, k+1], "conjugate": false}
    {"kind": "phase_block", "spatial_index": k, "phases": [...]}
    {"kind": "cs_block", "spatial_pair": [k, k+1], "thetas": [...]}

Complex matrix entries are two-element [re, im] arrays. Floats are written
with ``repr`` precision, so a serialize/deserialize round trip is
bit-exact. Unknown versions are rejected outright; silent misreads of a
circuit are worse than failures.
"""

from __future__ import annotations

import json

import numpy as np

from .circuits import Beamsplitter, Circuit, CSBlock, InternalOp, ModeSpace, PhaseBlock
from .errors import CircuitFormatError, DimensionError, UnitarityError, UnsupportedVersionError
from .linalg import UNITARY_TOL, unitarity_defect

FORMAT_VERSION = "1"


def _element_to_obj(element) -> dict:
    if isinstance(element, InternalOp):
        matrix = np.asarray(element.matrix, dtype=complex)
        return {
            "kind": "internal",
            "spatial_index": int(element.mode),
            "matrix": [[[z.real, z.imag] for z in row] for row in matrix],
        }
    if isinstance(element, Beamsplitter):
        return {
            "kind": "beamsplitter",
            "spatial_pair": [int(element.pair[0]), int(element.pair[1])],
            "conjugate": bool(element.conjugate),
        }
    if isinstance(element, PhaseBlock):
        return {
            "kind": "phase_block",
            "spatial_index": int(element.mode),
            "phases": [float(p) for p in np.asarray(element.phases, dtype=float)],
        }
    if isinstance(element, CSBlock):
        return {
            "kind": "cs_block",
            "spatial_pair": [int(element.pair[0]), int(element.pair[1])],
            "thetas": [float(t) for t in np.asarray(element.thetas, dtype=float)],
        }
    raise TypeError(f"unknown circuit element type: {type(element).__name__}")


def serialize(circuit: Circuit) -> str:
    """Render a circuit as a JSON document."""
    doc = {
        "format_version": FORMAT_VERSION,
        "n_s": circuit.space.n_s,
        "n_p": circuit.space.n_p,
        "elements": [_element_to_obj(e) for e in circuit.elements],
    }
    return json.dumps(doc, indent=2) + "\n"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CircuitFormatError(message)


def _as_index(value, space: ModeSpace, what: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), f"{what} must be an integer")
    if not 1 <= value <= space.n_s:
        raise DimensionError(f"{what} {value} out of range 1..{space.n_s}")
    return value


def _as_pair(value, space: ModeSpace) -> tuple[int, int]:
    _require(
        isinstance(value, list) and len(value) == 2 and all(isinstance(v, int) for v in value),
        "spatial_pair must be a two-element integer array",
    )
    k, l = value
    if not (1 <= k < space.n_s and l == k + 1):
        raise DimensionError(f"spatial_pair {value} invalid for {space.n_s} spatial modes")
    return (k, l)


def _as_floats(value, n_p: int, what: str) -> np.ndarray:
    _require(isinstance(value, list) and len(value) == n_p, f"{what} must hold {n_p} numbers")
    try:
        out = np.asarray([float(v) for v in value], dtype=float)
    except (TypeError, ValueError) as exc:
        raise CircuitFormatError(f"{what} contains non-numeric values") from exc
    _require(bool(np.all(np.isfinite(out))), f"{what} contains non-finite values")
    return out


def _as_internal_matrix(value, n_p: int) -> np.ndarray:
    _require(isinstance(value, list) and len(value) == n_p, f"matrix must have {n_p} rows")
    rows = []
    for row in value:
        _require(isinstance(row, list) and len(row) == n_p, f"matrix rows must have {n_p} entries")
        parsed = []
        for entry in row:
            _require(
                isinstance(entry, list) and len(entry) == 2,
                "matrix entries must be [re, im] pairs",
            )
            try:
                parsed.append(complex(float(entry[0]), float(entry[1])))
            except (TypeError, ValueError) as exc:
                raise CircuitFormatError("matrix entries must be numeric [re, im] pairs") from exc
        rows.append(parsed)
    matrix = np.asarray(rows, dtype=complex)
    _require(bool(np.all(np.isfinite(matrix))), "matrix contains non-finite entries")
    defect = unitarity_defect(matrix)
    if defect > UNITARY_TOL:
        raise UnitarityError(
            f"internal operation is not unitary: deviation {defect:.3e}", deviation=defect
        )
    return matrix


def _obj_to_element(obj, space: ModeSpace):
    _require(isinstance(obj, dict), "elements must be objects")
    kind = obj.get("kind")
    if kind == "internal":
        mode = _as_index(obj.get("spatial_index"), space, "spatial_index")
        return InternalOp(mode, _as_internal_matrix(obj.get("matrix"), space.n_p))
    if kind == "beamsplitter":
        pair = _as_pair(obj.get("spatial_pair"), space)
        conjugate = obj.get("conjugate", False)
        _require(isinstance(conjugate, bool), "conjugate must be a boolean")
        return Beamsplitter(pair, conjugate)
    if kind == "phase_block":
        mode = _as_index(obj.get("spatial_index"), space, "spatial_index")
        return PhaseBlock(mode, _as_floats(obj.get("phases"), space.n_p, "phases"))
    if kind == "cs_block":
        pair = _as_pair(obj.get("spatial_pair"), space)
        return CSBlock(pair, _as_floats(obj.get("thetas"), space.n_p, "thetas"))
    raise CircuitFormatError(f"unknown element kind {kind!r}")


def deserialize(text: str) -> Circuit:
    """Parse a circuit JSON document, validating the schema as it goes.

    Raises ``CircuitFormatError`` for malformed documents,
    ``UnsupportedVersionError`` for unknown versions, ``DimensionError``
    for out-of-range mode indices and ``UnitarityError`` for internal
    operations that are not unitary.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitFormatError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "top-level document must be an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise UnsupportedVersionError(
            f"unsupported format_version {version!r}, expected {FORMAT_VERSION!r}"
        )
    for key in ("n_s", "n_p"):
        value = doc.get(key)
        _require(
            isinstance(value, int) and not isinstance(value, bool) and value >= 1,
            f"{key} must be a positive integer",
        )
    space = ModeSpace(doc["n_s"], doc["n_p"])
    elements_obj = doc.get("elements")
    _require(isinstance(elements_obj, list), "elements must be an array")
    elements = [_obj_to_element(obj, space) for obj in elements_obj]
    return Circuit(space, elements)
