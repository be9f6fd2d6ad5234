"""Canonical JSON and aligned-text forms for matrices and factorizations.

JSON entries are canonical rational-function strings ("num/den", the
denominator omitted when it is 1), and every artifact records its variable
order so a write/read cycle reproduces the bytes exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .category import Morphism3
from .context import VarContext
from .errors import CertificateError, DimensionError, MorphismError, ParseError
from .matrix import RatMatrix
from .mf2 import MF2
from .mf3 import MF3, Provenance
from .parsing import parse_polynomial, parse_rational_function


def matrix_to_obj(m: RatMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[str(e) for e in m.row(i)] for i in range(m.rows)],
    }


def matrix_from_obj(obj, ctx: VarContext) -> RatMatrix:
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (TypeError, KeyError) as exc:
        raise ParseError(f"malformed matrix object: missing {exc}") from None
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ParseError("malformed matrix object: entry grid does not match shape")
    values = [parse_rational_function(text, ctx) for row in entries for text in row]
    return RatMatrix(ctx, rows, cols, values)


def _context_from_obj(obj) -> VarContext:
    names = obj.get("vars")
    if names is None:
        raise ParseError("malformed artifact: missing 'vars'")
    return VarContext(names)


def mf2_to_obj(x: MF2) -> dict:
    return {
        "f": str(x.target),
        "size": x.size,
        "P": matrix_to_obj(x.P),
        "Q": matrix_to_obj(x.Q),
        "vars": list(x.context.names),
    }


def mf2_from_obj(obj) -> MF2:
    ctx = _context_from_obj(obj)
    f = parse_polynomial(obj["f"], ctx)
    return MF2(matrix_from_obj(obj["P"], ctx), matrix_from_obj(obj["Q"], ctx), f)


def mf3_to_obj(x: MF3) -> dict:
    p = x.provenance
    return {
        "f": str(x.target),
        "size": x.size,
        "A1": matrix_to_obj(x.A1),
        "A2": matrix_to_obj(x.A2),
        "A3": matrix_to_obj(x.A3),
        "provenance": None
        if p is None
        else {"method": p.method, "decomposed": p.decomposed, "pivoted": p.pivoted},
        "vars": list(x.context.names),
    }


def mf3_from_obj(obj) -> MF3:
    ctx = _context_from_obj(obj)
    f = parse_polynomial(obj["f"], ctx)
    p = obj.get("provenance")
    provenance = (
        None
        if p is None
        else Provenance(p["method"], p["decomposed"], bool(p["pivoted"]))
    )
    return MF3(
        matrix_from_obj(obj["A1"], ctx),
        matrix_from_obj(obj["A2"], ctx),
        matrix_from_obj(obj["A3"], ctx),
        f,
        provenance=provenance,
    )


def morphism_to_obj(m: Morphism3) -> dict:
    return {
        "f": str(m.source.target),
        "source": mf3_to_obj(m.source),
        "target": mf3_to_obj(m.target),
        "alpha": matrix_to_obj(m.alpha),
        "beta": matrix_to_obj(m.beta),
        "delta": matrix_to_obj(m.delta),
        "vars": list(m.source.context.names),
    }


def morphism_from_obj(obj) -> Morphism3:
    ctx = _context_from_obj(obj)
    source = mf3_from_obj(obj["source"])
    target = mf3_from_obj(obj["target"])
    return Morphism3(
        source,
        target,
        matrix_from_obj(obj["alpha"], ctx),
        matrix_from_obj(obj["beta"], ctx),
        matrix_from_obj(obj["delta"], ctx),
    )


def artifact_to_obj(artifact) -> dict:
    if isinstance(artifact, MF2):
        return mf2_to_obj(artifact)
    if isinstance(artifact, MF3):
        return mf3_to_obj(artifact)
    if isinstance(artifact, Morphism3):
        return morphism_to_obj(artifact)
    raise TypeError(f"cannot serialize {artifact!r}")


def artifact_kind(obj) -> str:
    if not isinstance(obj, dict):
        raise ParseError("malformed artifact: not a JSON object")
    if "alpha" in obj:
        return "morphism3"
    if "A1" in obj:
        return "mf3"
    if "P" in obj:
        return "mf2"
    raise ParseError("malformed artifact: unrecognized structure")


def artifact_from_obj(obj):
    kind = artifact_kind(obj)
    loader = {"mf2": mf2_from_obj, "mf3": mf3_from_obj, "morphism3": morphism_from_obj}
    try:
        return loader[kind](obj)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed {kind} artifact: {exc}") from None


def to_json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- verification reports ----------------------------------------------------


@dataclass
class VerifyReport:
    kind: str
    target: str
    size: int
    ok: bool
    detail: str

    def lines(self) -> list[str]:
        names = {
            "mf2": "2-matrix factorization (P, Q)",
            "mf3": "3-matrix factorization (A1, A2, A3)",
            "morphism3": "morphism of 3-matrix factorizations",
        }
        return [
            f"kind: {names[self.kind]}",
            f"f: {self.target}",
            f"size: {self.size}",
            ("verification: PASS " if self.ok else "verification: FAIL ") + self.detail,
        ]


def verify_obj(obj) -> VerifyReport:
    """Re-check an artifact's certificate, reporting instead of raising."""
    kind = artifact_kind(obj)
    target = obj.get("f", "?")
    if kind == "morphism3":
        size = obj.get("target", {}).get("size", 0)
    else:
        size = obj.get("size", 0)
    try:
        artifact_from_obj(obj)
    except CertificateError as exc:
        return VerifyReport(kind, target, size, False, f"({exc})")
    except MorphismError as exc:
        return VerifyReport(kind, target, size, False, f"({exc})")
    except (DimensionError, ValueError) as exc:
        return VerifyReport(kind, target, size, False, f"({exc})")
    details = {
        "mf2": "(P*Q = f*I exactly)",
        "mf3": "(A1*A2*A3 = f*I exactly)",
        "morphism3": "(all three commuting squares hold exactly)",
    }
    return VerifyReport(kind, target, size, True, details[kind])


# -- aligned text --------------------------------------------------------------


def format_matrix(m: RatMatrix, indent: str = "  ") -> str:
    grid = [[str(e) for e in m.row(i)] for i in range(m.rows)]
    widths = [max(len(grid[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    lines = []
    for row in grid:
        cells = "  ".join(cell.ljust(w) for cell, w in zip(row, widths))
        lines.append(f"{indent}[ {cells} ]")
    return "\n".join(lines)


def format_mf2(x: MF2) -> str:
    parts = [
        f"2-matrix factorization of f = {x.target}",
        f"size: {x.size}x{x.size}",
        "P =",
        format_matrix(x.P),
        "Q =",
        format_matrix(x.Q),
        "certificate: P*Q = f*I holds exactly",
    ]
    return "\n".join(parts) + "\n"


def format_mf3(x: MF3) -> str:
    parts = [
        f"3-matrix factorization of f = {x.target}",
        f"size: {x.size}x{x.size}",
    ]
    if x.provenance is not None:
        p = x.provenance
        parts.append(
            f"method: {p.method}, decomposed: {p.decomposed} factor, "
            f"pivoted: {'yes' if p.pivoted else 'no'}"
        )
    for name, m in zip(("A1", "A2", "A3"), x.components):
        parts.append(f"{name} =")
        parts.append(format_matrix(m))
    parts.append("certificate: A1*A2*A3 = f*I holds exactly")
    return "\n".join(parts) + "\n"


def format_morphism(m: Morphism3) -> str:
    parts = [
        f"morphism of 3-matrix factorizations of f = {m.source.target}",
        f"shape: {m.target.size}x{m.source.size} components",
        "alpha =",
        format_matrix(m.alpha),
        "beta =",
        format_matrix(m.beta),
        "delta =",
        format_matrix(m.delta),
        "certificate: all three commuting squares hold exactly",
    ]
    return "\n".join(parts) + "\n"
