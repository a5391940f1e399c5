import io
import math

import numpy as np
import pytest

from conftest import complete, path, random_networks, star
from consensus_bounds.errors import DisconnectedError, InvalidParamsError, InvalidScheduleError, UnstableStepError
from consensus_bounds.graph import validate
from consensus_bounds.sim import ConsensusSimulator, InputSchedule, Trajectory, check_cell_convergence, simulate, \
    stable_step_limit


def test_constant_state_is_fixed_point():
    net = star(5)
    trajectory = simulate(net, [0.3] * 5, InputSchedule(), t_end=5.0, dt=0.01)
    assert np.allclose(trajectory.states, 0.3, atol=1e-12)


def test_pair_converges_to_mean(p2):
    trajectory = simulate(p2, [1.0, 0.0], InputSchedule(), t_end=20.0, dt=0.01)
    assert np.allclose(trajectory.final_state, [0.5, 0.5], atol=1e-9)


def test_zero_input_conserves_mean():
    for net in random_networks(10, seed=67):
        x0 = np.random.default_rng(net.n).uniform(-1, 1, net.n)
        dt = min(0.01, 0.9 * stable_step_limit(net))
        trajectory = simulate(net, x0, InputSchedule(), t_end=5.0, dt=dt)
        drift = np.abs(trajectory.states.mean(axis=1) - x0.mean())
        assert drift.max() < 1e-9 * 5.0


def test_zero_input_reaches_consensus():
    net = path(4)
    x0 = [1.0, -0.5, 0.25, 0.0]
    final = simulate(net, x0, InputSchedule(), t_end=100.0, dt=0.01).final_state
    assert np.abs(final - np.mean(x0)).max() < 1e-6


def test_trajectory_shape_and_final_step(p2):
    trajectory = simulate(p2, [0.0, 1.0], InputSchedule(), t_end=1.0, dt=0.3)
    assert trajectory.times.tolist() == pytest.approx([0.0, 0.3, 0.6, 0.9, 1.0])
    assert trajectory.states.shape == (5, 2)
    assert trajectory.states[0].tolist() == [0.0, 1.0]


def test_input_drives_leader(p2):
    sched = InputSchedule.constant([1.0])
    final = simulate(p2, [0.0, 0.0], sched, t_end=1.0, dt=0.01).final_state
    # the pair's sum grows at rate u
    assert final.sum() == pytest.approx(1.0, abs=1e-9)


def test_schedule_lookup():
    sched = InputSchedule.from_json([{"t": 0, "u": [1.0]}, {"t": 2.0, "u": [-1.0]}])
    assert sched.value_at(0.0, 1).tolist() == [1.0]
    assert sched.value_at(1.999, 1).tolist() == [1.0]
    assert sched.value_at(2.0, 1).tolist() == [-1.0]
    assert InputSchedule().value_at(3.0, 2).tolist() == [0.0, 0.0]


@pytest.mark.parametrize("items", [
    [{"t": 1.0, "u": [0.0]}],
    [{"t": 0.0, "u": [0.0]}, {"t": 0.0, "u": [1.0]}],
    [{"t": 0.0, "u": [0.0]}, {"t": 1.0, "u": [1.0, 2.0]}],
    [{"u": [0.0]}],
])
def test_schedule_rejects(items):
    with pytest.raises(InvalidScheduleError):
        InputSchedule.from_json(items)


def test_random_schedule_is_bounded():
    sched = InputSchedule.random(3, 50.0, 4, 0.5, np.random.default_rng(1))
    assert sched.starts[0] == 0.0
    assert sched.dimension == 3
    assert all(abs(x) <= 0.5 for _, u in sched.breakpoints for x in u)


def test_simulate_rejects_bad_parameters(p2):
    with pytest.raises(InvalidParamsError):
        simulate(p2, [0.0, 0.0], InputSchedule(), t_end=1.0, dt=0.0)
    with pytest.raises(InvalidParamsError):
        simulate(p2, [0.0], InputSchedule(), t_end=1.0, dt=0.1)
    with pytest.raises(InvalidScheduleError):
        simulate(p2, [0.0, 0.0], InputSchedule.constant([1.0, 2.0]), t_end=1.0, dt=0.1)


def test_simulate_rejects_unstable_step():
    net = star(6)
    assert stable_step_limit(net) == pytest.approx(0.2)
    with pytest.raises(UnstableStepError):
        simulate(net, [0.0] * 6, InputSchedule(), t_end=1.0, dt=0.25)
    assert stable_step_limit(validate(1, [], [0])) == math.inf


def test_trajectory_csv():
    trajectory = Trajectory(times=np.array([0.0, 0.5]), states=np.array([[1.0, 0.0], [0.75, 0.25]]))
    out = io.StringIO()
    trajectory.to_csv(out)
    assert out.getvalue() == "t,x0,x1\n0.0,1.0,0.0\n0.5,0.75,0.25\n"


def test_cell_convergence_examples(s4, k3, p3):
    assert check_cell_convergence(s4, trials=2, t_end=50.0, dt=0.005) < 1e-6
    assert check_cell_convergence(k3, trials=2, t_end=50.0, dt=0.005) < 1e-6
    assert check_cell_convergence(p3, trials=2, t_end=5.0, dt=0.005) == 0.0


def test_cell_convergence_requires_connected():
    with pytest.raises(DisconnectedError):
        check_cell_convergence(validate(3, [(0, 1)], [0]), trials=1, t_end=1.0, dt=0.01)


def test_same_cell_nodes_converge_on_random_graphs():
    corpus = random_networks(20, seed=73)
    for net in corpus:
        assert check_cell_convergence(net, trials=2, t_end=50.0, dt=0.005, seed=net.n) < 1e-6, net


def test_simulator_uses_its_defaults(k3):
    simulator = ConsensusSimulator(t_end=2.0, dt=0.01, trials=1)
    trajectory = simulator.run(k3, simulator.random_state(k3, seed=4))
    assert trajectory.times[-1] == pytest.approx(2.0)
    assert simulator.random_state(k3, seed=4) == simulator.random_state(k3, seed=4)
    assert ConsensusSimulator(trials=1).cell_convergence(complete(4)) < 1e-6


def test_cell_convergence_honours_horizon(s4):
    simulator = ConsensusSimulator(trials=1)
    early = simulator.cell_convergence(s4, seed=2, t_end=0.05, dt=0.01)
    assert early > 1e-6
    assert simulator.cell_convergence(s4, seed=2) < early
