"""DOT export of the bipartite edge graph of a dessin."""

from .. import perm as P
from ..psl2.cosets import CosetTable
from .passport import MonodromyTriple, triple_from_table


def export_dot(obj, name="dessin") -> str:
    """One node per s0-cycle (``b<i>``) and s1-cycle (``w<j>``), one edge per point."""
    tr = triple_from_table(obj) if isinstance(obj, CosetTable) else obj
    if not isinstance(tr, MonodromyTriple):
        raise TypeError("export_dot expects a MonodromyTriple or a CosetTable")
    black = {e: i for i, cyc in enumerate(P.cycles(tr.s0), 1) for e in cyc}
    white = {e: j for j, cyc in enumerate(P.cycles(tr.s1), 1) for e in cyc}
    lines = [f"graph {name} {{"]
    for i in range(1, max(black.values()) + 1):
        lines.append(f"  b{i} [shape=circle, style=filled, fillcolor=black, label=\"\"];")
    for j in range(1, max(white.values()) + 1):
        lines.append(f"  w{j} [shape=circle, label=\"\"];")
    for e in range(tr.m):
        lines.append(f"  b{black[e]} -- w{white[e]} [label=\"{e + 1}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
