"""Text, DOT and JSON renderings of Hasse diagrams."""

from __future__ import annotations

import re

from .algebras import AlgebraKind, enumerate_partitions, is_distinguished
from .orders import diagram_json, hasse_diagram

__all__ = ["levels", "to_dot", "to_text", "to_json", "validate_dot", "DotSyntaxError"]


class DotSyntaxError(ValueError):
    pass


def levels(kind: AlgebraKind, order: str) -> list[list]:
    """Nodes grouped by the length of the longest downward path from a maximal node."""
    nodes = enumerate_partitions(kind)
    edges = hasse_diagram(kind, order)
    depth = {p: 0 for p in nodes}
    # enumeration order is a linear extension of both orders, so one pass suffices
    for upper in nodes:
        for a, b in edges:
            if a == upper:
                depth[b] = max(depth[b], depth[a] + 1)
    out: list[list] = [[] for _ in range(max(depth.values()) + 1)]
    for p in nodes:
        out[depth[p]].append(p)
    return out


def to_text(kind: AlgebraKind, order: str) -> str:
    edges = hasse_diagram(kind, order)
    lines = [f"{kind} {order}"]
    for k, level in enumerate(levels(kind, order)):
        lines.append(f"level {k}")
        for p in level:
            mark = " *" if is_distinguished(kind, p) else ""
            below = [str(b) for a, b in edges if a == p]
            tail = f" -> {', '.join(below)}" if below else ""
            lines.append(f"  {p}{mark}{tail}")
    return "\n".join(lines)


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(kind: AlgebraKind, order: str) -> str:
    nodes = enumerate_partitions(kind)
    ids = {p: f"n{k}" for k, p in enumerate(nodes)}
    lines = [f"digraph {_q(f'{kind} {order}')} {{", "  rankdir=TB;", "  node [shape=ellipse];"]
    for p in nodes:
        shape = "doublecircle" if is_distinguished(kind, p) else "ellipse"
        lines.append(f"  {ids[p]} [label={_q(str(p))}, shape={shape}];")
    for a, b in hasse_diagram(kind, order):
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines)


def to_json(kind: AlgebraKind, order: str) -> str:
    return diagram_json(kind, order)


_TOKEN = re.compile(
    r'\s*(?:(?P<str>"(?:[^"\\]|\\.)*")|(?P<arrow>->)|(?P<id>[A-Za-z_][A-Za-z0-9_]*|-?\d+(?:\.\d+)?)|(?P<punct>[{}\[\];,=]))'
)


def _tokens(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise DotSyntaxError(f"unexpected character at offset {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


def validate_dot(text: str) -> None:
    """Check the small DOT subset emitted by ``to_dot``; raise DotSyntaxError otherwise.

    Accepted grammar: ``digraph ID { stmt* }`` where a statement is an
    attribute default (``node [...]``), a graph attribute (``a=b``), a node
    (``ID [attrs]``) or an edge (``ID -> ID [attrs]``), each ending in ``;``.
    Attribute values that are not plain identifiers or numbers must be quoted.
    """
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, value=None):
        nonlocal pos
        k, v = peek()
        if k is None or (kind and k != kind) or (value and v != value):
            raise DotSyntaxError(f"expected {value or kind} at token {pos}, got {v!r}")
        pos += 1
        return v

    def ident():
        k, v = peek()
        if k not in ("id", "str"):
            raise DotSyntaxError(f"expected identifier at token {pos}, got {v!r}")
        return take()

    def attrs():
        take("punct", "[")
        while peek()[1] != "]":
            ident()
            take("punct", "=")
            ident()
            if peek()[1] == ",":
                take()
        take("punct", "]")

    take("id", "digraph")
    if peek()[0] in ("id", "str"):
        ident()
    take("punct", "{")
    while peek()[1] != "}":
        if peek()[0] is None:
            raise DotSyntaxError("unterminated graph body")
        first = ident()
        if peek()[1] == "=":
            take()
            ident()
        elif peek()[0] == "arrow":
            take()
            ident()
            if peek()[1] == "[":
                attrs()
        elif peek()[1] == "[":
            attrs()
        elif first not in ("node", "edge", "graph"):
            pass
        take("punct", ";")
    take("punct", "}")
    if pos != len(toks):
        raise DotSyntaxError("trailing content after graph body")
