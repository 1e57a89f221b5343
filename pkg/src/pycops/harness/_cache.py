import json
import logging
from pathlib import Path
from typing import Dict, Iterator, Optional, Union

from .. import __version__
from .._solver import DEFAULT_STATE_BUDGET, SolveResult, solve
from ..game import GameConfig
from ..graphs import Graph

logger = logging.getLogger(__name__)

CACHE_FILE = "solves.jsonl"


class SolveCache:
    """Solve results kept as JSON lines, one per graph, config and pycops version.

    Entries are appended, never rewritten, so when a key appears twice the
    later line wins. The file is read once, on first use.

    Args:
        directory: The directory holding the cache file, created on first write

    Attributes:
        path (Path): The cache file
    """

    def __init__(self, directory: Union[str, Path]):
        self.path = Path(directory) / CACHE_FILE
        self._entries: Optional[Dict[str, SolveResult]] = None

    @staticmethod
    def key(graph_hash: str, config: GameConfig) -> str:
        return "%s|%s|%s" % (graph_hash, config.key(), __version__)

    def _load(self) -> Dict[str, SolveResult]:
        if self._entries is not None:
            return self._entries
        self._entries = {}
        if self.path.is_file():
            with self.path.open(encoding="utf-8") as f:
                for number, line in enumerate(f, start=1):
                    if not line.strip():
                        continue
                    try:
                        entry = json.loads(line)
                        self._entries[entry["key"]] = SolveResult.from_dict(entry["result"])
                    except (ValueError, KeyError, TypeError):
                        logger.warning("Ignoring unreadable line %d of %s", number, self.path)
            logger.debug("Loaded %d cached results from %s", len(self._entries), self.path)
        return self._entries

    def __len__(self) -> int:
        return len(self._load())

    def __iter__(self) -> Iterator[SolveResult]:
        return iter(list(self._load().values()))

    def get(self, graph: Graph, config: GameConfig) -> Optional[SolveResult]:
        """Get the cached result of a game, or None if it was never solved."""
        return self._load().get(self.key(graph.digest(), config))

    def put(self, result: SolveResult):
        """Append a result to the cache.

        Raises:
            OSError: If the cache file cannot be written; the message names the path
        """
        key = self.key(result.graph_hash, result.config)
        line = json.dumps({"key": key, "version": __version__, "result": result.to_dict()})
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as f:
                f.write(line + "\n")
        except OSError as e:
            raise OSError("Cannot write the solve cache %s: %s" % (self.path, e)) from e
        self._load()[key] = result

    def solve(
        self, graph: Graph, config: GameConfig, state_budget: int = DEFAULT_STATE_BUDGET
    ) -> SolveResult:
        """Get a game's result from the cache, solving and caching it on a miss."""
        cached = self.get(graph, config)
        if cached is not None:
            logger.debug("Cache hit for %r with %s", graph, config.key())
            return cached
        result = solve(graph, config, state_budget=state_budget)
        self.put(result)
        return result
