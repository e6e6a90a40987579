import os

import numpy as np
import pytest

import kcds

DATA_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "data")


def random_edges(n, p, seed):
    rng = np.random.default_rng(seed)
    tri = rng.random((n, n)) < p
    return [(i, j) for i in range(n) for j in range(i + 1, n) if tri[i, j]]


def random_graph(n, p, seed):
    """Seeded G(n, p); returns None when the draw has no edges."""
    edges = random_edges(n, p, seed)
    if not edges:
        return None
    return kcds.from_edges(edges)


def graph_corpus(count, n_lo=5, n_hi=25, probs=(0.3, 0.5, 0.7), seed=0):
    """Yield `count` random graphs spanning the size/density grid."""
    rng = np.random.default_rng(seed)
    made = 0
    attempt = 0
    while made < count:
        n = int(rng.integers(n_lo, n_hi + 1))
        p = float(rng.choice(probs))
        g = random_graph(n, p, seed + 1000 + attempt)
        attempt += 1
        if g is None:
            continue
        made += 1
        yield g


def dataset_path(name):
    return os.path.join(DATA_DIR, name)


def require_dataset(name):
    path = dataset_path(name)
    if not os.path.exists(path):
        pytest.skip(
            f"dataset {name} not present; run scripts/fetch_datasets.sh "
            f"(needs network access) and re-run"
        )
    return path


@pytest.fixture
def triangle():
    return kcds.from_edges([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k5_pendant():
    """K5 with one pendant vertex hanging off node 0."""
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    edges.append((0, 5))
    return kcds.from_edges(edges)


@pytest.fixture
def worked_example():
    """The 7-node graph whose clique tree has five pairs after the k=3 filter.

    Edges listed so that first appearance assigns dense id i to node i.
    """
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
        (0, 3), (1, 3), (1, 6), (2, 6), (3, 6), (3, 5), (4, 6),
    ]
    return kcds.from_edges(edges)


def write_edge_file(tmp_path, name, edges):
    path = tmp_path / name
    path.write_text("".join(f"{u} {v}\n" for u, v in edges))
    return str(path)
