from colored import stylize, fg, bg
from typing import Dict, Iterable, List, Optional

from ._graph import Graph


class GraphRenderer:
    """Class for rendering a graph and the pieces on it in the terminal.

    Graphs whose vertices carry 2-dimensional coordinates (grids and tori) are
    drawn as a grid of cells, one cell per vertex. Anything else is drawn as an
    adjacency listing, one vertex per line.

    Args:
        graph: The graph to render
        use_color: Whether to colour the output. Uncoloured output uses only the marker letters
        cop_color: The colour of cop markers, as a string hex code (i.e. '#FF0000')
        robber_color: The colour of the robber marker
    """

    DEFAULT_COP_COLOR = "#0000FF"
    DEFAULT_ROBBER_COLOR = "#cc1f0c"
    BACKGROUND_COLOR = "#ffe5a3"
    EMPTY_COLOR = "#7a7a7a"

    def __init__(
        self,
        graph: Graph,
        use_color: bool = True,
        cop_color: str = DEFAULT_COP_COLOR,
        robber_color: str = DEFAULT_ROBBER_COLOR,
    ):
        self.graph = graph
        self.use_color = use_color
        self.cop_color = cop_color
        self.robber_color = robber_color

    def _style(self, text: str, color: str) -> str:
        if not self.use_color:
            return text
        return stylize(text, fg(color) + bg(GraphRenderer.BACKGROUND_COLOR))

    def _marker(self, v: int, cops: List[int], robber: Optional[int], labels: Dict[int, str]) -> str:
        if v in labels:
            return self._style(labels[v], "#000000")
        count = cops.count(v)
        if count and v == robber:
            return self._style("X", self.robber_color)
        if count:
            return self._style("C" if count == 1 else str(min(count, 9)), self.cop_color)
        if v == robber:
            return self._style("R", self.robber_color)
        return self._style(".", GraphRenderer.EMPTY_COLOR)

    def _is_planar_grid(self) -> bool:
        return self.graph.coords is not None and all(len(c) == 2 for c in self.graph.coords)

    def _grid_lines(self, cops, robber, labels) -> List[str]:
        cells = {c: v for v, c in enumerate(self.graph.coords)}
        rows = max(c[0] for c in cells) + 1
        cols = max(c[1] for c in cells) + 1
        lines = []
        for i in range(rows):
            line = [
                self._marker(cells[(i, j)], cops, robber, labels) if (i, j) in cells else " "
                for j in range(cols)
            ]
            lines.append(" ".join(line))
        return lines

    def _listing_lines(self, cops, robber, labels) -> List[str]:
        width = len(str(max(self.graph.order - 1, 0)))
        return [
            "%s %s: %s"
            % (
                self._marker(v, cops, robber, labels),
                str(v).rjust(width),
                " ".join(str(u) for u in sorted(self.graph.neighbors(v))),
            )
            for v in self.graph.vertices
        ]

    def get_graph_as_string(
        self,
        cops: Iterable[int] = (),
        robber: Optional[int] = None,
        labels: Optional[Dict[int, str]] = None,
    ) -> str:
        """Get the graph as a multiline string.

        Cops are drawn as ``C`` (or a digit when several share a vertex), the
        robber as ``R``, a capture as ``X`` and empty vertices as ``.``.

        Args:
            cops: The cop positions
            robber: The robber position, if placed
            labels: Single-character labels drawn in place of the marker of some vertices

        Returns:
            str: The rendering
        """
        cops = list(cops)
        labels = labels or {}
        if self._is_planar_grid():
            lines = self._grid_lines(cops, robber, labels)
        else:
            lines = self._listing_lines(cops, robber, labels)
        return "\n".join(lines)

    def render_graph(
        self,
        cops: Iterable[int] = (),
        robber: Optional[int] = None,
        labels: Optional[Dict[int, str]] = None,
    ):
        """Print the graph into the terminal. See :meth:`get_graph_as_string`."""
        print(self.get_graph_as_string(cops, robber, labels))
