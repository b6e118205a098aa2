"""Graphviz DOT export."""

from .graph import Graph


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"digraph {_quote(name)} {{"]
    for v in g.vertices:
        lines.append(f"  {_quote(v)};")
    for e in g.edges:
        lines.append(f"  {_quote(e.src)} -> {_quote(e.dst)} [label={_quote(e.id)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
