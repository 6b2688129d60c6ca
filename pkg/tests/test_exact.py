"""Exact solver against the unpruned oracle and known values."""

import pytest

import zforce as zf
from zforce.graph import mask_of


def test_named_exact_values():
    assert zf.zero_forcing_number(zf.complete(4)).value == 3
    assert zf.zero_forcing_number(zf.complete(5)).value == 4
    assert zf.zero_forcing_number(zf.complete(6)).value == 5
    assert zf.zero_forcing_number(zf.complete_bipartite(3, 3)).value == 4
    assert zf.zero_forcing_number(zf.complete_bipartite(4, 4)).value == 6
    assert zf.zero_forcing_number(zf.complete_bipartite(2, 3)).value == 3
    assert zf.zero_forcing_number(zf.complete_bipartite(3, 4)).value == 5
    assert zf.zero_forcing_number(zf.g1()).value == 3
    assert zf.zero_forcing_number(zf.g2()).value == 5


def test_paths_force_from_one_endpoint():
    for n in range(1, 13):
        assert zf.zero_forcing_number(zf.path(n)).value == 1


def test_cycles_need_two():
    for n in range(3, 9):
        assert zf.zero_forcing_number(zf.cycle(n)).value == 2
    assert zf.brute_force_oracle(zf.cycle(6)).value == 2


def test_witness_is_valid_and_minimal(random_corpus):
    from itertools import combinations
    for g in random_corpus[:40]:
        res = zf.zero_forcing_number(g)
        assert res.complete and res.lower == res.upper == res.value
        assert res.witness.bit_count() == res.value
        assert zf.is_zero_forcing_set(g, res.witness)
        if res.value > 1:
            for combo in combinations(range(g.n), res.value - 1):
                assert not zf.is_zero_forcing_set(g, mask_of(combo))


def test_oracle_agreement_named(named_graphs):
    for name, g in named_graphs.items():
        if g.n <= 12:
            assert (zf.zero_forcing_number(g).value
                    == zf.brute_force_oracle(g).value), name


def test_oracle_rejects_large():
    with pytest.raises(ValueError):
        zf.brute_force_oracle(zf.heawood())


def test_disconnected_graphs_decompose():
    g = zf.Graph.from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)])
    # path component needs 1, triangle needs 2, isolated vertex needs 1
    res = zf.zero_forcing_number(g)
    assert res.value == 4
    assert zf.is_zero_forcing_set(g, res.witness)
    assert res.value == zf.brute_force_oracle(g).value


def test_edgeless_needs_everything():
    g = zf.Graph(4, (0, 0, 0, 0))
    assert zf.zero_forcing_number(g).value == 4


def test_edge_implies_not_all_needed(random_corpus):
    for g in random_corpus[:60]:
        if g.edge_count():
            assert zf.zero_forcing_number(g).value <= g.n - 1


def test_budget_interval_flagged():
    g = zf.generate("petersen")
    res = zf.zero_forcing_number(g, budget=3)
    assert not res.complete
    assert res.value is None and res.witness is None
    assert res.lower <= 5 <= res.upper
    assert res.nodes_explored >= 3


def test_lower_bound_seed_counts():
    # girth 5, min degree 3 seeds the search at 5, so very few nodes
    res = zf.zero_forcing_number(zf.generate("petersen"))
    assert res.value == 5
    assert res.nodes_explored < 500


def test_deterministic_witness(random_corpus):
    for g in random_corpus[:20]:
        a = zf.zero_forcing_number(g)
        b = zf.zero_forcing_number(g)
        assert a.witness == b.witness


def test_petersen_value_via_unpruned_oracle():
    assert zf.brute_force_oracle(zf.generate("petersen")).value == 5
