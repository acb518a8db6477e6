"""Errata records and table-report rows.

The errata log is the artifact's way of saying "this published table
entry fails recomputation": every record carries the violated check, the
expected (published) value, the recomputed value and a witness.  Records
are plain data, deterministically ordered, and serialize to JSON.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LinearMap
from .scalars import format_scalar


def unit_label(row: int, col: int) -> str:
    """1-based matrix-unit label, e.g. E21 for the unit at row 2, col 1."""
    return f"E{row}{col}"


def map_to_strings(m: LinearMap):
    return [
        [format_scalar(m.matrix[r, c]) for c in range(m.dim)] for r in range(m.dim)
    ]


def vector_to_strings(v):
    return [format_scalar(x) for x in v]


@dataclass(frozen=True)
class ErrataRecord:
    entry: str
    check: str
    expected: str
    computed: object
    witness: object

    def to_dict(self):
        return {
            "entry": self.entry,
            "check": self.check,
            "expected": self.expected,
            "computed": self.computed,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class ClaimVerification:
    """Outcome of re-verifying one published basis matrix."""

    label: str
    position: tuple  # (row, col), 1-based
    passes: bool
    transpose_passes: bool
    in_computed_span: bool

    def to_dict(self):
        return {
            "label": self.label,
            "position": list(self.position),
            "passes": self.passes,
            "transpose_passes": self.transpose_passes,
            "in_computed_span": self.in_computed_span,
        }


@dataclass(frozen=True)
class DerivationRow:
    algebra: str
    computed_dim: int
    paper_dim: int | None
    status: str  # match | mismatch | paper-silent
    basis: tuple  # LinearMaps, canonical
    claims: tuple  # ClaimVerification
    errata: tuple  # ErrataRecord

    def to_dict(self):
        return {
            "algebra": self.algebra,
            "computed_dim": self.computed_dim,
            "paper_dim": self.paper_dim,
            "status": self.status,
            "basis": [map_to_strings(b) for b in self.basis],
            "claims": [c.to_dict() for c in self.claims],
            "errata": [e.to_dict() for e in self.errata],
        }


@dataclass(frozen=True)
class CentroidRow:
    algebra: str
    linear_dim: int
    computed_dim: int
    paper_dim: int | None
    status: str
    linear_basis: tuple
    subspace_basis: tuple
    identically_zero: bool
    obstruction_too_large: bool
    method: str
    solution_description: str
    obstruction: tuple  # serialized polynomials
    claims: tuple
    errata: tuple

    def to_dict(self):
        return {
            "algebra": self.algebra,
            "linear_dim": self.linear_dim,
            "computed_dim": self.computed_dim,
            "paper_dim": self.paper_dim,
            "status": self.status,
            "linear_basis": [map_to_strings(b) for b in self.linear_basis],
            "subspace_basis": [map_to_strings(b) for b in self.subspace_basis],
            "identically_zero": self.identically_zero,
            "obstruction_too_large": self.obstruction_too_large,
            "method": self.method,
            "solution_description": self.solution_description,
            "obstruction": list(self.obstruction),
            "claims": [c.to_dict() for c in self.claims],
            "errata": [e.to_dict() for e in self.errata],
        }


def witness_to_dict(w):
    """Serialize a core.Witness or a loose witness tuple."""
    if hasattr(w, "i"):
        return {
            "i": w.i,
            "j": w.j,
            "k": w.k,
            "lhs": vector_to_strings(w.lhs),
            "rhs": vector_to_strings(w.rhs),
        }
    return list(
        vector_to_strings(part)
        if isinstance(part, tuple) and part and hasattr(part[0], "re")
        else part
        for part in w
    )
