"""Numerical integration of the leader-follower consensus system x' = -Lx + Bu."""
import csv
import logging
import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

import numpy as np

from .controllability import input_matrix
from .entities import Network
from .errors import InvalidParamsError, InvalidScheduleError, UnstableStepError
from .graph import laplacian, require_connected
from .partitions import maximal_leader_invariant_eep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InputSchedule:
    """Piecewise-constant input: ``u`` holds from each start time until the next one.

    An empty schedule is the all-zero input.
    """

    breakpoints: Tuple[Tuple[float, Tuple[float, ...]], ...] = ()

    def __post_init__(self):
        if not self.breakpoints:
            return
        starts = [t for t, _ in self.breakpoints]
        if starts[0] != 0:
            raise InvalidScheduleError(f"schedule must start at t=0, starts at {starts[0]}")
        if any(b <= a for a, b in zip(starts, starts[1:])):
            raise InvalidScheduleError(f"breakpoints must be strictly increasing: {starts}")
        if len({len(u) for _, u in self.breakpoints}) != 1:
            raise InvalidScheduleError("every breakpoint needs the same input dimension")

    @classmethod
    def constant(cls, u: Sequence[float]) -> "InputSchedule":
        return cls(((0.0, tuple(float(x) for x in u)),))

    @classmethod
    def random(cls, m: int, t_end: float, switches: int, bound: float,
               rng: np.random.Generator) -> "InputSchedule":
        inner = sorted(set(rng.uniform(0.0, t_end, max(switches - 1, 0)).tolist()) - {0.0}) if t_end > 0 else []
        starts = [0.0] + inner
        return cls(tuple((t, tuple(rng.uniform(-bound, bound, m).tolist())) for t in starts))

    @classmethod
    def from_json(cls, items: Iterable[Dict[str, Any]]) -> "InputSchedule":
        try:
            return cls(tuple((float(item["t"]), tuple(float(x) for x in item["u"])) for item in items))
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidScheduleError(f"malformed schedule entry: {e}") from e

    @cached_property
    def starts(self) -> List[float]:
        return [start for start, _ in self.breakpoints]

    @property
    def dimension(self) -> Optional[int]:
        return len(self.breakpoints[0][1]) if self.breakpoints else None

    def value_at(self, t: float, m: int) -> np.ndarray:
        if not self.breakpoints:
            return np.zeros(m)
        index = bisect_right(self.starts, t) - 1
        return np.asarray(self.breakpoints[max(index, 0)][1], dtype=float)


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    def to_csv(self, stream: TextIO) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["t"] + [f"x{i}" for i in range(self.states.shape[1])])
        for t, row in zip(self.times, self.states):
            writer.writerow([repr(float(t))] + [repr(float(x)) for x in row])


def stable_step_limit(net: Network) -> float:
    """Largest accepted step, 2 / (2 * max_degree); the spectrum of L lies in [0, 2 * max_degree]."""
    return math.inf if net.max_degree == 0 else 1.0 / net.max_degree


def simulate(net: Network, x0: Sequence[float], sched: InputSchedule, t_end: float, dt: float) -> Trajectory:
    """Fixed-step classical RK4 from ``x0`` over ``[0, t_end]``; the last step is shortened to land on t_end."""
    if dt <= 0 or t_end < 0:
        raise InvalidParamsError(f"need dt > 0 and t_end >= 0, got dt={dt}, t_end={t_end}")
    limit = stable_step_limit(net)
    if dt >= limit:
        raise UnstableStepError(f"dt={dt} must stay below {limit} for max degree {net.max_degree}")
    x = np.asarray(x0, dtype=float)
    if x.shape != (net.n,):
        raise InvalidParamsError(f"initial state needs {net.n} values, got {x.size}")
    if sched.dimension not in (None, net.m):
        raise InvalidScheduleError(f"schedule has {sched.dimension} inputs, network has {net.m} leaders")

    a = -np.array(laplacian(net).to_rows(), dtype=float)
    b = np.array(input_matrix(net).to_rows(), dtype=float).reshape(net.n, net.m)

    def rate(t: float, state: np.ndarray) -> np.ndarray:
        return a @ state + b @ sched.value_at(t, net.m)

    steps = max(math.ceil(t_end / dt - 1e-9), 0)
    times = np.empty(steps + 1)
    states = np.empty((steps + 1, net.n))
    times[0], states[0] = 0.0, x
    for s in range(steps):
        t = s * dt
        h = min(dt, t_end - t)
        k1 = rate(t, x)
        k2 = rate(t + h / 2, x + h / 2 * k1)
        k3 = rate(t + h / 2, x + h / 2 * k2)
        k4 = rate(t + h, x + h * k3)
        x = x + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        times[s + 1], states[s + 1] = t + h, x
    logger.debug(f"[Sim] {steps} steps of {dt} on {net}")
    return Trajectory(times=times, states=states)


def check_cell_convergence(net: Network, trials: int, t_end: float, dt: float, seed: int = 0,
                           input_bound: float = 1.0, switches: int = 4) -> float:
    """Largest end-time gap between two nodes sharing a cell of the maximal leader-invariant EEP.

    Each trial draws x0 uniformly from [-1, 1]^n and a random piecewise-constant input
    bounded by ``input_bound``. Returns 0.0 when every cell is a singleton.
    """
    require_connected(net)
    cells = [list(cell) for cell in maximal_leader_invariant_eep(net) if len(cell) > 1]
    if not cells:
        return 0.0
    rng = np.random.default_rng(seed)
    residual = 0.0
    for trial in range(trials):
        x0 = rng.uniform(-1.0, 1.0, net.n)
        sched = InputSchedule.random(net.m, t_end, switches, input_bound, rng)
        final = simulate(net, x0, sched, t_end, dt).final_state
        gap = max(float(np.ptp(final[cell])) for cell in cells)
        logger.debug(f"[Sim] trial {trial}: same-cell gap {gap:.3e}")
        residual = max(residual, gap)
    return residual


class ConsensusSimulator:
    def __init__(self, t_end: float = 50.0, dt: float = 0.005, trials: int = 5,
                 input_bound: float = 1.0, input_switches: int = 4) -> None:
        self.t_end = t_end
        self.dt = dt
        self.trials = trials
        self.input_bound = input_bound
        self.input_switches = input_switches

    def run(self, net: Network, x0: Sequence[float], sched: Optional[InputSchedule] = None,
            t_end: Optional[float] = None, dt: Optional[float] = None) -> Trajectory:
        return simulate(net, x0, sched or InputSchedule(),
                        self.t_end if t_end is None else t_end,
                        self.dt if dt is None else dt)

    def random_state(self, net: Network, seed: int) -> List[float]:
        return np.random.default_rng(seed).uniform(-1.0, 1.0, net.n).tolist()

    def cell_convergence(self, net: Network, seed: int = 0, t_end: Optional[float] = None,
                         dt: Optional[float] = None) -> float:
        return check_cell_convergence(net, self.trials,
                                      self.t_end if t_end is None else t_end,
                                      self.dt if dt is None else dt,
                                      seed=seed, input_bound=self.input_bound, switches=self.input_switches)
