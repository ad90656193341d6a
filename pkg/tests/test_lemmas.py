import random

import pytest

from ramsey_star import graph as gc
from ramsey_star.constructions import ConstructionParams
from ramsey_star.lemmas import (
    NearCycleInstance,
    check_lemma1,
    check_lemma3,
    check_lemma4,
    clause_d,
    find_clique_packing,
    generate_lemma4_family,
    lemma4_instance,
    lemma4_in_range,
    random_bridge_forest,
    random_near_cycle,
    run_lemma3_suite,
    run_lemma4_suite,
)

P = ConstructionParams


def c5_plus(*attach: int) -> NearCycleInstance:
    g = gc.add_edges(gc.disjoint_union([gc.cycle_graph(5), gc.empty_graph(1)]), [(a, 5) for a in attach])
    return NearCycleInstance(g, (0, 1, 2, 3, 4))


class TestLemma1:
    def test_three_triangles(self):
        rep = check_lemma1(gc.disjoint_union([gc.complete_graph(3)] * 3), 4, 3, 7)
        assert rep.hypotheses_hold and rep.conclusion_holds
        assert rep.details["alpha"] == 3 and rep.details["min_degree"] == 2

    def test_two_triangles(self):
        rep = check_lemma1(gc.disjoint_union([gc.complete_graph(3)] * 2), 4, 3, 7)
        assert rep.conclusion_holds and rep.details["bound"] == -1

    def test_c4_gated(self):
        rep = check_lemma1(gc.cycle_graph(4), 4, 3, 7)
        assert not rep.hypotheses_hold and rep.conclusion_holds is None
        assert rep.details["failed_hypothesis"] == "contains C_n"

    def test_alpha_gate(self):
        rep = check_lemma1(gc.empty_graph(5), 4, 3, 7)
        assert not rep.hypotheses_hold

    def test_false_r_value_is_caught(self):
        # a deliberately wrong r value shows the checker can report a violation
        g = gc.add_edges(gc.disjoint_union([gc.complete_graph(3)] * 2), [(2, 3)])
        rep = check_lemma1(gc.disjoint_union([g, gc.empty_graph(1)]), 4, 3, 2)
        assert rep.violated and rep.counterexample["degree"] == 0

    def test_random_graphs_agree(self):
        rng = random.Random(5)
        for _ in range(150):
            order = rng.randint(3, 8)
            g = gc.Graph(order, [(i, j) for i in range(order) for j in range(i + 1, order) if rng.random() < 0.5])
            assert not check_lemma1(g, 4, 3, 7).violated
            assert not check_lemma1(g, 3, 3, 6).violated


class TestLemma3:
    def test_spaced_attachment(self):
        rep = check_lemma3(c5_plus(0, 2), m=4)
        assert rep.hypotheses_hold and rep.conclusion_holds
        assert rep.details["index_convention"] == "cycle positions taken modulo n-1"

    def test_adjacent_attachment_gated(self):
        rep = check_lemma3(c5_plus(0, 1))
        assert not rep.hypotheses_hold
        assert len(rep.details["cycle"]) == 6

    def test_marked_cycle_validated(self):
        with pytest.raises(ValueError):
            NearCycleInstance(gc.path_graph(5), (0, 1, 2, 3, 4))

    def test_wrap_around(self):
        # x on u_5 and u_2: clause (b) compares u_1 (= u_{5+1}) with u_3
        rep = check_lemma3(c5_plus(4, 1))
        assert rep.hypotheses_hold and rep.conclusion_holds

    def test_clause_d_flags_heavy_vertex(self):
        g = gc.add_edges(gc.disjoint_union([gc.cycle_graph(5), gc.empty_graph(2)]), [(0, 5), (2, 5)])
        seen, found = clause_d(g, (0, 1, 2, 3, 4), 3)
        assert seen
        assert [(f["x"], f["cycle_neighbours"]) for f in found] == [(5, 2)]

    def test_clause_d_quiet_when_light(self):
        g = gc.add_edges(gc.disjoint_union([gc.cycle_graph(5), gc.empty_graph(3)]), [(0, 5), (2, 6), (3, 7)])
        seen, found = clause_d(g, (0, 1, 2, 3, 4), 4)
        assert seen and not found

    def test_clause_d_needs_independent_set(self):
        g = gc.add_edges(gc.disjoint_union([gc.cycle_graph(5), gc.empty_graph(2)]), [(5, 6)])
        assert clause_d(g, (0, 1, 2, 3, 4), 3) == (False, [])

    def test_generator(self):
        rng = random.Random(3)
        for n in (6, 7, 8):
            inst = random_near_cycle(rng, n, 11, independent_outside=2)
            assert inst.n == n
            assert not gc.contains_cycle_of_length(inst.graph, n)

    def test_suite_small(self):
        rep = run_lemma3_suite(90, seed=7)
        s = rep.summary()
        assert s["instances"] == 90 and s["violations"] == 0 and s["hypotheses_failed"] == 0
        assert {r["n"] for r in rep.instances} == {6, 7, 8}
        assert all(8 <= r["order"] <= 12 for r in rep.instances)

    def test_suite_reproducible(self):
        assert run_lemma3_suite(30, seed=2).instances == run_lemma3_suite(30, seed=2, workers=3).instances


class TestLemma4:
    def test_base_graph(self):
        g = lemma4_instance(P(24, 7), [])
        rep = check_lemma4(g, 24, 7)
        assert rep.hypotheses_hold and rep.conclusion_holds
        assert rep.details["packing"] == [list(range(23 * i, 23 * (i + 1))) for i in range(6)]

    def test_single_bridge(self):
        g = lemma4_instance(P(24, 7), [(0, 23)])
        assert gc.independence_number(gc.induced(g, range(46))) == 2
        rep = check_lemma4(g, 24, 7)
        assert rep.hypotheses_hold and rep.conclusion_holds

    def test_double_bridge_gated(self):
        g = lemma4_instance(P(24, 7), [(0, 23), (1, 24)])
        rep = check_lemma4(g, 24, 7)
        assert not rep.hypotheses_hold and len(rep.details["cycle"]) == 24

    def test_star_of_bridges(self):
        g = lemma4_instance(P(24, 7), [(i, 23 * (i + 1)) for i in range(5)])
        assert check_lemma4(g, 24, 7).conclusion_holds

    def test_range(self):
        assert lemma4_in_range(24, 7) and lemma4_in_range(15, 6)
        assert not lemma4_in_range(23, 7) and not lemma4_in_range(14, 6)
        assert not check_lemma4(gc.complete_graph(4), 5, 3).hypotheses_hold

    def test_inconclusive(self):
        rep = check_lemma4(lemma4_instance(P(15, 6), [(0, 14)]), 15, 6, node_budget=5)
        assert rep.inconclusive and rep.conclusion_holds is None

    def test_packing_against_structure(self):
        g = gc.disjoint_union([gc.complete_graph(4), gc.cycle_graph(4), gc.complete_graph(4)])
        assert find_clique_packing(g, 2, 4) == [(0, 1, 2, 3), (8, 9, 10, 11)]
        assert find_clique_packing(g, 3, 4) is None
        assert find_clique_packing(g, 3, 2) is not None

    def test_forest_is_acyclic_on_quotient(self):
        rng = random.Random(0)
        for _ in range(50):
            bridges = random_bridge_forest(P(15, 6), rng)
            parts = {(a // 14, b // 14) for a, b in bridges}
            assert len(parts) == len(bridges) <= 4

    def test_family(self):
        fam = generate_lemma4_family(P(24, 7), seed=1, size=3)
        assert len(fam) == 3 and fam == generate_lemma4_family(P(24, 7), seed=1, size=3)
        assert all(check_lemma4(g, 24, 7).conclusion_holds for g in fam)
        with pytest.raises(ValueError):
            generate_lemma4_family(P(10, 7), seed=1)

    def test_suite(self):
        rep = run_lemma4_suite(per_param=10, seed=4)
        assert rep.summary()["violations"] == 0 and rep.gated_out == 0
