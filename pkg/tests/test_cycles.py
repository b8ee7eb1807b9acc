import random

import pytest

from cycleforce.constructions import (
    hub_tournament,
    layered_witness,
    transitive_tournament,
)
from cycleforce.cycles import (
    enumerate_chordless_cycles,
    find_cycle,
    find_disjoint_cycles,
)
from cycleforce.digraph import Digraph

from oracles import all_digraphs, chordless_cycles_naive, has_k_disjoint_naive


def complete_digraph(n):
    return Digraph.from_arcs(n, [(u, v) for u in range(n) for v in range(n) if u != v])


class TestFindCycle:
    def test_tournament_has_none(self):
        assert find_cycle(transitive_tournament(5)) is None

    def test_hub_graph_cycle_goes_through_hub(self):
        witness = find_cycle(hub_tournament(3))
        assert witness is not None
        witness.validate(hub_tournament(3))
        assert 2 in witness.cycles[0]  # the hub is vertex n-1

    def test_loop_found(self):
        g = Digraph.from_arcs(2, [(0, 0)])
        assert find_cycle(g).cycles == ((0,),)

    def test_matches_acyclicity_exhaustively(self):
        for n in range(1, 4):
            for g in all_digraphs(n):
                found = find_cycle(g)
                assert (found is None) == g.is_acyclic()
                if found is not None:
                    found.validate(g)


class TestChordlessEnumeration:
    def test_complete_triangle_yields_only_two_cycles(self):
        cycles = [w.cycles[0] for w in enumerate_chordless_cycles(complete_digraph(3))]
        assert cycles == [(0, 1), (0, 2), (1, 2)]

    def test_tournament_yields_nothing(self):
        assert list(enumerate_chordless_cycles(transitive_tournament(4))) == []

    def test_directed_four_cycle(self):
        g = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        cycles = [w.cycles[0] for w in enumerate_chordless_cycles(g)]
        assert cycles == [(0, 1, 2, 3)]

    def test_loop_is_chordless(self):
        g = Digraph.from_arcs(2, [(0, 0), (0, 1), (1, 0)])
        cycles = [w.cycles[0] for w in enumerate_chordless_cycles(g)]
        assert (0,) in cycles

    def test_agrees_with_naive_filter(self):
        for g in all_digraphs(3):
            ours = sorted(w.cycles[0] for w in enumerate_chordless_cycles(g))
            naive = sorted(chordless_cycles_naive(g))
            assert ours == naive, g

    def test_random_graphs_against_naive(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 5)
            arcs = [
                (u, v)
                for u in range(n)
                for v in range(n)
                if rng.random() < 0.4
            ]
            g = Digraph.from_arcs(n, arcs)
            ours = sorted(w.cycles[0] for w in enumerate_chordless_cycles(g))
            assert ours == sorted(chordless_cycles_naive(g))


class TestFindDisjointCycles:
    def test_invalid_k(self):
        with pytest.raises(ValueError):
            find_disjoint_cycles(transitive_tournament(3), 0)

    def test_hub_graph_has_no_two(self):
        assert find_disjoint_cycles(hub_tournament(5), 2) is None

    def test_two_disjoint_two_cycles(self):
        g = Digraph.from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
        witness = find_disjoint_cycles(g, 2)
        assert witness.k == 2
        witness.validate(g)

    def test_complete_triangle_has_no_two(self):
        assert find_disjoint_cycles(complete_digraph(3), 2) is None

    def test_layered_witness_has_no_two(self):
        g, _ = layered_witness(6, 1, 2)
        assert find_disjoint_cycles(g, 2) is None

    def test_three_disjoint_loops(self):
        g = Digraph.from_arcs(3, [(0, 0), (1, 1), (2, 2)])
        witness = find_disjoint_cycles(g, 3)
        assert witness.cycles == ((0,), (1,), (2,))

    def test_witnesses_validate(self):
        rng = random.Random(99)
        for _ in range(300):
            n = rng.randint(1, 6)
            arcs = [
                (u, v) for u in range(n) for v in range(n) if rng.random() < 0.35
            ]
            g = Digraph.from_arcs(n, arcs)
            witness = find_disjoint_cycles(g, 2)
            assert (witness is not None) == has_k_disjoint_naive(g, 2)
            if witness is not None:
                witness.validate(g)

    def test_monotone_under_arc_addition(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(2, 6)
            arcs = {
                (u, v) for u in range(n) for v in range(n) if rng.random() < 0.3
            }
            g = Digraph.from_arcs(n, arcs)
            if find_disjoint_cycles(g, 2) is None:
                continue
            extra = [
                (u, v)
                for u in range(n)
                for v in range(n)
                if (u, v) not in arcs and rng.random() < 0.5
            ]
            bigger = Digraph.from_arcs(n, arcs | set(extra))
            assert find_disjoint_cycles(bigger, 2) is not None
