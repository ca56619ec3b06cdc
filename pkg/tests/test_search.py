import json
import random

import networkx as nx
import pytest

from oracles import brute_force_trees, tree_canonical
from seidelnull.analysis import phi
from seidelnull.errors import OrderError
from seidelnull.graph import cycle, is_regular, VertexSet
from seidelnull.graph6 import encode_graph6, parse_graph6
from seidelnull.search import (
    StageConfig,
    all_graphs,
    enumerate_trees,
    random_regular,
    scan,
    tree_level_sequences,
)

# free trees on n vertices, n = 1..20
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159,
                    7741, 19320, 48629, 123867, 317955, 823065]


@pytest.mark.parametrize("n", range(1, 11))
def test_trees_match_brute_force(n):
    got = [tree_canonical(list(t.edges()), n) for t in enumerate_trees(n)]
    assert len(got) == len(set(got))
    assert set(got) == brute_force_trees(n)


@pytest.mark.parametrize("n", range(1, 17))
def test_tree_counts(n):
    assert sum(1 for _ in tree_level_sequences(n)) == FREE_TREE_COUNTS[n - 1]


@pytest.mark.parametrize("n", [12, 14])
def test_trees_match_networkx(n):
    ours = {nx.weisfeiler_lehman_graph_hash(nx.Graph(list(t.edges()))) for t in enumerate_trees(n)}
    ref = {nx.weisfeiler_lehman_graph_hash(t) for t in nx.nonisomorphic_trees(n)}
    assert ours == ref


def test_all_trees_are_trees():
    for t in enumerate_trees(11):
        assert t.is_tree()


def test_deterministic_order():
    assert list(tree_level_sequences(12)) == list(tree_level_sequences(12))


@pytest.mark.parametrize("n", [0, 21])
def test_tree_order_range(n):
    with pytest.raises(OrderError):
        list(enumerate_trees(n))


def test_all_graphs_counts():
    assert [len(all_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_scan_order9():
    rep = scan(enumerate_trees(9), StageConfig(workers=1))
    assert rep.total == 47 and rep.singular == []
    assert rep.total == rep.prefilter_rejected + rep.modp_rejected + rep.exact_checked


def test_scan_order5_graphs_pm_one():
    rep = scan(all_graphs(5), StageConfig(workers=1))
    assert rep.total == 34
    assert rep.singular
    assert rep.pm_one == rep.singular


def test_stage_soundness_order13():
    trees = list(enumerate_trees(13))
    on = scan(trees, StageConfig(workers=1))
    for pre, modp in [(False, False), (True, False), (False, True)]:
        off = scan(trees, StageConfig(prefilter=pre, modp=modp, workers=1))
        assert off.singular == on.singular


def test_stage_counts_add_up():
    rep = scan(enumerate_trees(13), StageConfig(workers=1, chunk_size=100))
    assert rep.total == 1301
    assert rep.total == rep.prefilter_rejected + rep.modp_rejected + rep.exact_checked


def test_malformed_lines_counted():
    lines = ["Dhc", "garbage!", "", "D??", b"Dhc\n"]
    rep = scan(lines, StageConfig(workers=1))
    assert rep.malformed == 2
    assert rep.total == 3
    assert len(rep.singular) == 2


def test_graph6_stream_matches_generated():
    trees = list(enumerate_trees(13))
    lines = [encode_graph6(t) + b"\n" for t in trees]
    assert scan(lines, StageConfig(workers=1)).singular == scan(trees, StageConfig(workers=1)).singular


def test_parallel_deterministic():
    trees = list(enumerate_trees(13))
    a = scan(trees, StageConfig(workers=2, chunk_size=97))
    b = scan(trees, StageConfig(workers=2, chunk_size=97))
    c = scan(trees, StageConfig(workers=1))
    da = json.dumps(a.to_dict(include_timing=False))
    assert da == json.dumps(b.to_dict(include_timing=False))
    assert da == json.dumps(c.to_dict(include_timing=False))


def test_report_json_roundtrip():
    rep = scan(enumerate_trees(9), StageConfig(workers=1))
    d = json.loads(json.dumps(rep.to_dict()))
    assert d["total"] == 47 and d["singular"] == 0


def test_bad_stage_config():
    with pytest.raises(ValueError):
        StageConfig(prime=2)
    with pytest.raises(ValueError):
        StageConfig(workers=0)


class TestRandomRegular:
    def test_zero_swaps_circulant(self):
        assert random_regular(2, 5, seed=123, swaps=0) == cycle(5)

    def test_degree_4(self):
        assert is_regular(random_regular(4, 9, seed=1)) == 4

    def test_seeded(self):
        assert random_regular(6, 13, seed=7) == random_regular(6, 13, seed=7)

    def test_swaps_change_graph(self):
        graphs = {random_regular(6, 13, seed=s) for s in range(10)}
        assert len(graphs) > 1

    def test_switch_gives_pm_one(self):
        h = random_regular(6, 13, seed=7)
        a = VertexSet(13, random.Random(7).getrandbits(13))
        from seidelnull.graph import switch
        p = phi(switch(h, a))
        assert p is not None and p.all_pm_one

    @pytest.mark.parametrize("d,n", [(3, 7), (2, 9), (4, 8)])
    def test_mismatch(self, d, n):
        with pytest.raises(ValueError):
            random_regular(d, n, seed=0)


def test_witness_graph6_parses():
    rep = scan(all_graphs(5), StageConfig(workers=1))
    for g6, vec in rep.singular:
        assert phi(parse_graph6(g6)).entries == vec


@pytest.fixture(scope="module")
def order17_trees():
    trees = list(enumerate_trees(17))
    return trees, scan(trees, StageConfig(workers=1))


def test_order17_tree_residues(order17_trees):
    # the residue condition holds for the +-1 trees but not for every singular tree
    from seidelnull.analysis import check_tree_residues, tree_residues

    _, rep = order17_trees
    residues = [tree_residues(parse_graph6(g6)) for g6, _ in rep.singular]
    assert sorted(residues).count((1, 0)) == 6
    assert sorted(residues).count((1, 4)) == 9
    for g6, _ in rep.pm_one:
        assert check_tree_residues(parse_graph6(g6))


@pytest.mark.slow
def test_stage_soundness_order17(order17_trees):
    trees, on = order17_trees
    off = scan(trees, StageConfig(prefilter=False, modp=False, workers=1))
    assert off.singular == on.singular
    assert on.prefilter_rejected > 0 and on.modp_rejected > 0
