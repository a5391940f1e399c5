"""Fixtures module."""

import pathlib

from consensus_bounds.finders import dumps_edge_list, dumps_json
from consensus_bounds.generators import GraphGenerator

SAMPLE_GRAPHS = [
    ("path4", dict(family="path", n=4)),
    ("path8", dict(family="path", n=8)),
    ("star5", dict(family="star", n=5)),
    ("path4_two_leaders", dict(family="path", n=4, leaders=[0, 3])),
    ("grid3x3_corner", dict(family="grid", n=3)),
    ("random8", dict(family="random", n=8, p=0.4, seed=7, random_leaders=2)),
]

FILE = pathlib.Path(__file__)
DIR = FILE.parent


def create_samples(samples, directory):
    generator = GraphGenerator()
    for name, params in samples:
        net = generator.generate(**params)
        (directory / f"{name}.json").write_text(dumps_json(net))
        (directory / f"{name}.txt").write_text(dumps_edge_list(net))


def main():
    create_samples(SAMPLE_GRAPHS, DIR)
    print("OK")


if __name__ == "__main__":
    main()
