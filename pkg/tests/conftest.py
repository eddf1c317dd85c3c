import random

import pytest

from degraphs.combinatorics import enumerate_partitions
from degraphs.fixtures import fixture, fixture_names, signatures_from_structure
from degraphs.graph import SignedColoredGraph
from degraphs.standard import build_standard_deg


def corpus(max_n: int = 8):
    """Every standard graph up to max_n plus all fixtures."""
    graphs = []
    for n in range(3, max_n + 1):
        for lam in enumerate_partitions(n):
            graphs.append((f"G{lam}", build_standard_deg(lam)))
    for name in fixture_names():
        graphs.append((name, fixture(name)))
    return graphs


def relabel_random(G: SignedColoredGraph, rng: random.Random):
    """Shuffle vertex ids; returns the new graph and the id map."""
    ids = list(G.vertices())
    perm = ids[:]
    rng.shuffle(perm)
    width = len(str(len(ids)))
    mapping = {v: f"v{str(k).zfill(width)}" for v, k in zip(ids, [perm.index(v) for v in ids])}
    return G.relabel(mapping), mapping


def gamma_instance(flip: bool = False) -> SignedColoredGraph:
    """A ten-vertex graph with a four-cycle of 3/4-edges over two pendant
    double-edge pairs; the subtree swap applies at the cycle vertices."""
    triples = [
        (3, "a1", "a2"), (4, "a2", "a3"), (3, "a3", "a4"), (4, "a4", "a1"),
        (2, "a2", "b2"), (2, "a4", "b4"),
        (4, "b2", "c2"), (4, "b4", "c4"),
        (2, "c1", "c2"), (3, "c1", "c2"),
        (2, "c3", "c4"), (3, "c3", "c4"),
    ]
    verts = sorted({u for _, u, _ in triples} | {w for _, _, w in triples})
    sigma = signatures_from_structure(5, 5, verts, triples)
    if flip:
        sigma = {v: tuple(-x for x in s) for v, s in sigma.items()}
    return SignedColoredGraph(5, 5, sigma, triples)


@pytest.fixture
def rng():
    return random.Random(20260808)
