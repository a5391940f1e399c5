from pathlib import Path

from dependency_injector import containers, providers

from .analyzers import NetworkAnalyzer
from .finders import EdgeListGraphFinder, JsonGraphFinder, StreamGraphFinder
from .generators import GraphGenerator
from .graph import validate
from .sim import ConsensusSimulator

CONFIG_FILE = Path(__file__).resolve().parent.parent / "config.yml"
LOG_LEVEL_ENV = "CONSENSUS_BOUNDS_LOG_LEVEL"

DEFAULTS = {
    "analysis": {"brute_force_cap": 10, "size_warning_nodes": 64},
    "generator": {"max_attempts": 100},
    "simulation": {"t_end": 50.0, "dt": 0.005, "trials": 5, "input_bound": 1.0, "input_switches": 4},
    "logging": {"level": "INFO"},
}


class Container(containers.DeclarativeContainer):
    config = providers.Configuration(yaml_files=[str(CONFIG_FILE)], default=DEFAULTS)

    network = providers.Factory(validate)

    json_finder = providers.Factory(JsonGraphFinder, network_factory=network.provider)
    edge_list_finder = providers.Factory(EdgeListGraphFinder, network_factory=network.provider)
    stdin_finder = providers.Factory(StreamGraphFinder, network_factory=network.provider)

    analyzer = providers.Singleton(
        NetworkAnalyzer,
        brute_force_cap=config.analysis.brute_force_cap.as_int(),
        size_warning_nodes=config.analysis.size_warning_nodes.as_int(),
    )
    generator = providers.Singleton(GraphGenerator, max_attempts=config.generator.max_attempts.as_int())
    simulator = providers.Factory(
        ConsensusSimulator,
        t_end=config.simulation.t_end.as_float(),
        dt=config.simulation.dt.as_float(),
        trials=config.simulation.trials.as_int(),
        input_bound=config.simulation.input_bound.as_float(),
        input_switches=config.simulation.input_switches.as_int(),
    )


def create_container() -> Container:
    container = Container()
    container.config.logging.level.from_env(LOG_LEVEL_ENV, default=container.config.logging.level())
    return container
