"""Read counterexample witnesses back into algebra elements.

A witness is one element or several joined by ``" ; "``.  Each part is
recognised by shape: EALA elements contain ``" (+) "``, matrices start with
``"[["``, columns of ``V = Q + Q`` are parenthesised pairs, and anything else
is a torus element (which includes plain scalars).
"""

from __future__ import annotations

from typing import List

from .core import parse_eala
from .counterexample import parse_column
from .matrix import _split_top, parse_matrix
from .torus import parse_torus

__all__ = ["parse_witness", "SEPARATOR"]

SEPARATOR = " ; "


def _parse_part(text: str):
    s = text.strip()
    if " (+) " in s:
        return parse_eala(s)
    if s.startswith("[["):
        return parse_matrix(s)
    if s.startswith("(") and s.endswith(")") and len(_split_top(s[1:-1])) == 2:
        return parse_column(s)
    return parse_torus(s)


def parse_witness(text: str) -> List[object]:
    """Parse every element in a witness string, in order."""
    return [_parse_part(part) for part in text.split(SEPARATOR)]
