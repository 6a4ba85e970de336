"""Algebra expressions: the text syntax shared by the CLI and table files.

Grammar: EXPR := TERM ("+" TERM)*, TERM := SIMPLE | CENTER,
SIMPLE := letter A-G immediately followed by the rank digits ("A1", "E8"),
CENTER := "C^" digits with exponent >= 1.  Whitespace around terms is
ignored and repeated terms accumulate.

Note the deliberate lexical split: "C2" is the simple algebra (stored as
B2), while "C^2" is a 2-dimensional center.  The caret is mandatory for
centers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .invariants import ReductiveAlgebra, SimpleType

__all__ = ["ExprError", "AlgebraExpression", "parse_expr"]

_TERM_RE = re.compile(
    r"\s*(?:C\^(?P<center>\d+)|(?P<family>[A-G])(?P<rank>\d+))\s*\Z"
)


class ExprError(ValueError):
    """Malformed algebra expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class AlgebraExpression:
    """Source text together with its parsed, canonicalized algebra."""

    source: str
    parsed: ReductiveAlgebra


def parse_expr(text: str) -> ReductiveAlgebra:
    """Parse an expression like "A1+C3+C^6" into a ReductiveAlgebra.

    parse_expr(str(g)) == g for every nonzero algebra in canonical form.
    """
    if not isinstance(text, str) or not text.strip():
        raise ExprError("empty expression", 0)
    simples: list[SimpleType] = []
    center = 0
    offset = 0
    for part in text.split("+"):
        if not part.strip():
            raise ExprError("empty term", offset)
        m = _TERM_RE.fullmatch(part)
        if m is None:
            raise ExprError(f"malformed term {part.strip()!r}", offset)
        if m.group("center") is not None:
            k = int(m.group("center"))
            if k < 1:
                raise ExprError("center exponent must be >= 1", offset)
            center += k
        else:
            try:
                simples.append(SimpleType(m.group("family"), int(m.group("rank"))))
            except ValueError as exc:
                raise ExprError(str(exc), offset) from None
        offset += len(part) + 1
    return ReductiveAlgebra(tuple(simples), center)


def analyze(text: str) -> AlgebraExpression:
    return AlgebraExpression(text, parse_expr(text))
