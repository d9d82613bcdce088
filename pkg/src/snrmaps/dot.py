"""DOT export of S(n, r) Hasse diagrams, optionally colored by a map."""

from __future__ import annotations

from .maps import PartialMap, Sign
from .snr import SnrLattice, format_string

FILL = {Sign.P: "green", Sign.N: "red", None: "gray"}


def hasse_dot(lattice: SnrLattice, a: PartialMap | None = None, name: str = "S") -> str:
    """Undirected-looking digraph, bottom to top; nodes filled by the sign of ``a``."""
    p = lattice.poset
    label = {x: format_string(lattice.string(x)) for x in range(lattice.size)}
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=box, style=filled, fontname="monospace"];']
    for x in sorted(range(lattice.size), key=lambda i: label[i]):
        fill = FILL[a.sign(x) if a is not None else None]
        lines.append(f'  "{label[x]}" [fillcolor={fill}];')
    for x, y in sorted(p.cover_edges(), key=lambda e: (label[e[0]], label[e[1]])):
        lines.append(f'  "{label[x]}" -> "{label[y]}" [arrowhead=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"
