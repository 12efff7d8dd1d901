"""HG1 text format: parse and emit hedge graphs.

Layout::

    HG1 <n> <m>
    u v label     # one line per edge, 0-based decimal vertex ids
    ...

``#`` starts a comment running to end of line; blank lines are ignored.
Labels are whitespace-free tokens.  ``parse`` accepts simple graphs only
(the input contract); ``emit`` serializes any hedge graph, writing edges
in stored order, so first appearances of label names follow dense-id
order and ``parse(emit(g))`` reproduces a parseable ``g`` bit-exactly.
"""

from __future__ import annotations

from .graph import GraphError, HedgeGraph, build_graph


class ParseError(GraphError):
    """HG1 text rejected; ``line`` is the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse(text: str) -> HedgeGraph:
    """Parse HG1 text into a validated simple hedge graph."""
    header: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "HG1":
                raise ParseError(lineno, "expected header 'HG1 <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "header counts must be decimal integers") from None
            if n < 1 or m < 0:
                raise ParseError(lineno, "header counts out of range")
            header = (n, m)
            header_line = lineno
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(lineno, "expected 'u v label'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, "vertex ids must be decimal integers") from None
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise ParseError(lineno, f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u} not allowed in input")
        edges.append((u, v, parts[2]))
        if len(edges) > header[1]:
            raise ParseError(lineno, f"more than {header[1]} data lines")
    if header is None:
        raise ParseError(1, "missing 'HG1 <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(header_line, f"header declares {m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(header_line, str(exc)) from None


def emit(g: HedgeGraph) -> str:
    """Serialize a hedge graph as canonical HG1 text (trailing newline)."""
    lines = [f"HG1 {g.n} {g.m}"]
    for u, v, lab in g.edges:
        lines.append(f"{u} {v} {g.labels[lab]}")
    return "\n".join(lines) + "\n"
