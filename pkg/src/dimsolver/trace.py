"""DOT emission for the branch tree of the dominating-set solver."""

from __future__ import annotations


class DotTracer:
    """Collects one node per propagation fixpoint and renders Graphviz DOT."""

    def __init__(self):
        self._labels: list[str] = []
        self._edges: list[tuple[int, int]] = []

    def add(self, parent: int | None, label: str) -> int:
        node = len(self._labels)
        self._labels.append(label)
        if parent is not None:
            self._edges.append((parent, node))
        return node

    def annotate(self, node: int, note: str) -> None:
        self._labels[node] += f"\n{note}"

    def to_dot(self) -> str:
        def quote(s: str) -> str:
            return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'

        lines = ["digraph branchtree {", "  node [shape=box];"]
        for i, label in enumerate(self._labels):
            lines.append(f"  n{i} [label={quote(label)}];")
        for a, b in self._edges:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"
