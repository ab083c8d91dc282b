"""Reading and writing module files.

A module file has a header line ``p r n`` followed by one generator per line,
``n`` base-10 integers each.  Blank lines and lines starting with ``#`` are
ignored.  Entries are reduced modulo ``p**r`` on load.
"""
from __future__ import annotations

from .arith import make_ring
from .errors import ZprError
from .module import Submodule


class ParseError(ZprError, ValueError):
    def __init__(self, source, lineno, message):
        where = f"{source}:{lineno}" if lineno else source
        super().__init__(f"{where}: {message}")
        self.source = source
        self.lineno = lineno


def _ints(text, source, lineno):
    try:
        return [int(tok, 10) for tok in text.split()]
    except ValueError:
        raise ParseError(source, lineno, f"expected base-10 integers, got {text.strip()!r}") from None


def parse_module(text: str, source: str = "<input>"):
    """Return ``(ring, n, rows)`` from module-file text."""
    header = None
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values = _ints(stripped, source, lineno)
        if header is None:
            if len(values) != 3:
                raise ParseError(source, lineno, "header must be three integers 'p r n'")
            p, r, n = values
            try:
                ring = make_ring(p, r)
            except ZprError as exc:
                raise ParseError(source, lineno, str(exc)) from None
            if n < 1:
                raise ParseError(source, lineno, f"length n must be at least 1, got {n}")
            header = (ring, n)
            continue
        ring, n = header
        if len(values) != n:
            raise ParseError(source, lineno, f"expected {n} entries, got {len(values)}")
        rows.append(tuple(x % ring.modulus for x in values))
    if header is None:
        raise ParseError(source, 0, "missing header line 'p r n'")
    ring, n = header
    return ring, n, rows


def load_module(text: str, source: str = "<input>") -> Submodule:
    ring, n, rows = parse_module(text, source)
    return Submodule.span(ring, n, rows)


def parse_vector(text: str, ring, n, source="<vector>"):
    values = _ints(text.replace(",", " "), source, 0)
    if len(values) != n:
        raise ParseError(source, 0, f"expected {n} entries, got {len(values)}")
    return tuple(x % ring.modulus for x in values)


def format_row(row) -> str:
    return " ".join(str(x) for x in row)


def format_module(ring, n, rows, comments=()) -> str:
    """Module-file text; ``comments`` become leading ``#`` lines."""
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"{ring.p} {ring.r} {n}")
    lines.extend(format_row(row) for row in rows)
    return "\n".join(lines) + "\n"
