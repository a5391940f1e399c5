import logging
import random
from typing import Optional, Sequence

import networkx as nx
from tenacity import RetryCallState, RetryError, Retrying, after_log, retry_if_exception_type, stop_after_attempt

from .entities import Network
from .errors import ConnectivityRetriesExceededError, DisconnectedError, InvalidParamsError
from .graph import from_networkx

logger = logging.getLogger(__name__)

FAMILIES = ("path", "cycle", "star", "grid", "random")


class SamplingPolicy:
    """Bounded redraws of a random graph until it comes out connected.

    Attempt ``i`` samples with seed ``seed + i``, so a fixed seed always yields the same graph.
    """

    def __init__(self, attempts: int = 100):
        if attempts < 1:
            raise InvalidParamsError(f"need at least one attempt, got {attempts}")
        self.attempts = attempts

    def build(self, family: str = "random") -> Retrying:
        return Retrying(
            stop=stop_after_attempt(self.attempts),
            retry=retry_if_exception_type(DisconnectedError),
            before_sleep=self._log_redraw_hook(family),
            after=after_log(logger, logging.DEBUG),
            reraise=False,
        )

    @staticmethod
    def _log_redraw_hook(family: str):
        def hook(retry_state: RetryCallState):
            logger.debug(f"[Gen] {family} draw #{retry_state.attempt_number} disconnected, redrawing")

        return hook


class GraphGenerator:
    def __init__(self, max_attempts: int = 100, sampling_policy: Optional[SamplingPolicy] = None):
        self.sampling_policy = sampling_policy or SamplingPolicy(attempts=max_attempts)

    def generate(self, family: str, n: int, leaders: Sequence[int] = (0,), p: Optional[float] = None,
                 cols: Optional[int] = None, seed: int = 0, random_leaders: Optional[int] = None) -> Network:
        """Build one network of the named family.

        ``grid`` is ``n`` rows by ``cols`` columns (square when ``cols`` is omitted), nodes
        numbered row by row. ``star`` has its center at node 0. With ``random_leaders`` set,
        that many distinct leaders are drawn with ``seed`` and ``leaders`` is ignored.
        """
        if family not in FAMILIES:
            raise InvalidParamsError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
        if n < 1:
            raise InvalidParamsError(f"n must be positive, got {n}")

        if family == "path":
            graph = nx.path_graph(n)
        elif family == "cycle":
            if n < 3:
                raise InvalidParamsError(f"a cycle needs at least 3 nodes, got {n}")
            graph = nx.cycle_graph(n)
        elif family == "star":
            graph = nx.star_graph(n - 1)
        elif family == "grid":
            width = n if cols is None else cols
            if width < 1:
                raise InvalidParamsError(f"grid width must be positive, got {width}")
            graph = nx.convert_node_labels_to_integers(nx.grid_2d_graph(n, width), ordering="sorted")
        else:
            graph = self._connected_gnp(n, p, seed)

        if random_leaders is not None:
            if not 1 <= random_leaders <= graph.number_of_nodes():
                raise InvalidParamsError(
                    f"cannot pick {random_leaders} leaders from {graph.number_of_nodes()} nodes")
            leaders = sorted(random.Random(seed).sample(range(graph.number_of_nodes()), random_leaders))
        net = from_networkx(graph, leaders)
        logger.info(f"[Gen] {family} -> {net}")
        return net

    def _connected_gnp(self, n: int, p: Optional[float], seed: int) -> nx.Graph:
        if p is None or not 0 < p <= 1:
            raise InvalidParamsError(f"random family needs an edge probability in (0, 1], got {p}")
        attempt = 0

        def draw() -> nx.Graph:
            nonlocal attempt
            graph = nx.gnp_random_graph(n, p, seed=seed + attempt)
            attempt += 1
            if not nx.is_connected(graph):
                raise DisconnectedError(f"G({n}, {p}) draw with seed {seed + attempt - 1} is disconnected")
            return graph

        try:
            return self.sampling_policy.build("random")(draw)
        except RetryError as e:
            logger.warning(f"[Gen] gave up after {e.last_attempt.attempt_number} disconnected draws of G({n}, {p})")
            raise ConnectivityRetriesExceededError(
                f"no connected G({n}, {p}) within {self.sampling_policy.attempts} attempts from seed {seed}"
            ) from e
