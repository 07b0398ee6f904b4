"""Graphviz DOT rendering of graphs."""

from __future__ import annotations

from .graphs import AdmissibleGraph, lines
from .partition import sorted_atoms


def _label(block) -> str:
    return ",".join(str(a) for a in sorted_atoms(block))


def export_dot(g) -> str:
    """Deterministic DOT text for a valid graph.

    One node per vertex, labelled by its half-edges.  Internal lines are
    edges (directed for admissible graphs); every external half-edge is an
    edge to its own point-shaped leaf.
    """
    external, internal = lines(g)
    admissible = isinstance(g, AdmissibleGraph)
    if admissible:
        vertices = [(b, "circle") for b in g.first_type.blocks]
        vertices += [(b, "box") for b in g.second_type.blocks]
    else:
        vertices = [(b, "circle") for b in g.vertices.blocks]
    node_of = {}
    out = ["digraph G {" if admissible else "graph G {"]
    for i, (block, shape) in enumerate(vertices):
        name = f"v{i}"
        for e in block:
            node_of[e] = name
        out.append(f'  {name} [label="{_label(block)}", shape={shape}];')
    arrow = "->" if admissible else "--"
    for e, f in internal:
        out.append(f'  {node_of[e]} {arrow} {node_of[f]} [label="{e}:{f}"];')
    for i, e in enumerate(sorted_atoms(external)):
        out.append(f'  x{i} [shape=point, label=""];')
        out.append(f'  {node_of[e]} {arrow} x{i} [label="{e}"];')
    out.append("}")
    return "\n".join(out) + "\n"
