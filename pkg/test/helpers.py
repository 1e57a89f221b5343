from pathlib import Path
from typing import Iterable, List, Optional

from pycops.game import GameConfig
from pycops.graphs import Graph, write_graph6
from pycops.harness import HarnessSettings
from pycops.structure import is_corner


def assert_is_copwin_ordering(graph: Graph, ordering: List[int]):
    """Checks that every vertex but the last is a corner of what is left from it on"""
    assert sorted(ordering) == list(graph.vertices)
    for i, v in enumerate(ordering[:-1]):
        kept = sorted(ordering[i:])
        assert is_corner(graph.induced_subgraph(kept), kept.index(v))


def get_settings(cache_dir: Optional[Path] = None, **kwargs) -> HarnessSettings:
    """Gets harness settings that never touch the user's cache unless asked to"""
    return HarnessSettings(cache_dir=cache_dir, **kwargs)


def write_catalog(directory: Path, n: int, records: Iterable) -> Path:
    """Writes a connected<n>.g6 catalog from graphs or raw graph6 lines"""
    path = directory / ("connected%d.g6" % n)
    lines = [write_graph6(r) if isinstance(r, Graph) else r for r in records]
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    return path


def speed(s: int, cops: int = 1, **kwargs) -> GameConfig:
    return GameConfig.speed(s, cops, **kwargs)
