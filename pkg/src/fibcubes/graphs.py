"""Powers of paths and cycles.

A gap graph is determined by (kind, n, h): vertices v_1..v_n, with v_i ~ v_j
(i != j) when |j - i| <= h, plus the wrap-around pairs |j - i| >= n - h for
cycles.  Adjacency is computed on demand; no matrix is stored.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["PATH", "CYCLE", "GapGraph", "edgelist_text", "graph_dot"]

PATH = "path"
CYCLE = "cycle"


@dataclass(frozen=True)
class GapGraph:
    """The h-power of a path or cycle on n vertices (1-indexed)."""

    kind: str
    n: int
    h: int

    def __post_init__(self):
        if self.kind not in (PATH, CYCLE):
            raise ValueError(f"kind must be {PATH!r} or {CYCLE!r}, got {self.kind!r}")
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.h < 0:
            raise ValueError("power must be nonnegative")

    def is_edge(self, i: int, j: int) -> bool:
        """Whether v_i ~ v_j.  Irreflexive; indices must be in 1..n."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"vertex index out of range 1..{n}: ({i}, {j})")
        if i == j:
            return False
        d = abs(j - i)
        if d <= self.h:
            return True
        return self.kind == CYCLE and d >= n - self.h

    def edges(self) -> list[tuple[int, int]]:
        """All unordered adjacent pairs (i, j), i < j, lexicographically sorted."""
        n = self.n
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if self.is_edge(i, j)]

    def edge_count(self) -> int:
        return len(self.edges())


def edgelist_text(g: GapGraph) -> str:
    """Plain-text edge list, one "i j" pair per line."""
    return "".join(f"{i} {j}\n" for i, j in g.edges())


def graph_dot(g: GapGraph) -> str:
    """Undirected DOT with vertices labeled v1..vn."""
    lines = [f"graph {g.kind}_{g.n}_{g.h} {{"]
    lines.extend(f"  v{i};" for i in range(1, g.n + 1))
    lines.extend(f"  v{i} -- v{j};" for i, j in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
