"""Plain-text game files.

::

    # three players
    n=3
    011
    100
    111

Lines starting with ``#`` and blank lines are ignored.  The header ``n=<k>``
gives the number of players; if it is missing, ``n`` is the width of the
first row.  Each row is one coalition with player ``n`` in the leftmost
column, exactly as the incidence tables are usually printed.
"""
from __future__ import annotations

import os
import re
from typing import Iterable, Optional, Union

from .core import Hypergraph

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse(text: str) -> Hypergraph:
    n = None
    edges: list[int] = []
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _HEADER.match(line)
        if m:
            if n is not None:
                raise ParseError("duplicate or late header", lineno)
            n = int(m.group(1))
            continue
        if n is None:
            n = len(line)
        if len(line) != n:
            raise ParseError(f"row {line!r} has width {len(line)}, expected {n}", lineno)
        bad = set(line) - {"0", "1"}
        if bad:
            raise ParseError(f"invalid character {sorted(bad)[0]!r} in row {line!r}", lineno)
        e = int(line, 2) if n else 0
        if e in seen:
            raise ParseError(f"duplicate row {line!r} (first on line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    if n is None:
        raise ParseError("empty file: no header and no rows")
    return Hypergraph(n, tuple(edges))


def serialize(h: Hypergraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n={h.n}")
    lines.extend(h.rows())
    return "\n".join(lines) + "\n"


def read(path: Union[str, os.PathLike]) -> Hypergraph:
    with open(path) as f:
        return parse(f.read())


def write(path: Union[str, os.PathLike], h: Hypergraph, comments: Iterable[str] = ()):
    with open(path, "w") as f:
        f.write(serialize(h, comments))
