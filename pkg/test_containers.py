import io

from conftest import path
from consensus_bounds.analyzers import NetworkAnalyzer
from consensus_bounds.containers import LOG_LEVEL_ENV, create_container
from consensus_bounds.finders import dumps_json
from consensus_bounds.sim import ConsensusSimulator


def test_config_comes_from_yaml(container):
    assert container.config.analysis.brute_force_cap() == 10
    assert container.config.simulation.dt() == 0.005
    assert container.config.logging.level() == "INFO"


def test_providers_receive_config(container):
    analyzer = container.analyzer()
    assert isinstance(analyzer, NetworkAnalyzer)
    assert analyzer.brute_force_cap == 10
    assert analyzer.size_warning_nodes == 64
    assert analyzer is container.analyzer()

    simulator = container.simulator()
    assert isinstance(simulator, ConsensusSimulator)
    assert (simulator.t_end, simulator.dt, simulator.trials) == (50.0, 0.005, 5)
    assert container.generator().sampling_policy.attempts == 100


def test_config_override(container):
    container.config.analysis.brute_force_cap.from_value(4)
    assert container.analyzer().brute_force_cap == 4


def test_log_level_from_environment(monkeypatch):
    monkeypatch.setenv(LOG_LEVEL_ENV, "DEBUG")
    assert create_container().config.logging.level() == "DEBUG"
    monkeypatch.delenv(LOG_LEVEL_ENV)
    assert create_container().config.logging.level() == "INFO"


def test_finders_build_networks(container, tmp_path):
    target = tmp_path / "p4.json"
    target.write_text(dumps_json(path(4)))
    assert container.json_finder(path=str(target)).find() == path(4)
    assert container.stdin_finder(stream=io.StringIO(dumps_json(path(4)))).find() == path(4)
