import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramsey_star import graph as gc
from ramsey_star.coloring import (
    EnumerationCapExceeded,
    HostSpec,
    HostSpecError,
    TwoColoring,
    enumerate_colorings,
    host_graph,
    host_spec_of,
    load_coloring,
    save_coloring,
    verify_coloring,
)


class TestHostSpec:
    def test_complete(self):
        assert host_graph(HostSpec.complete(5)) == gc.complete_graph(5)

    def test_full_star_deleted(self):
        g = host_graph(HostSpec.star_deleted(6, range(5), center=5))
        assert g.degree(5) == 0
        assert gc.induced(g, range(5)) == gc.complete_graph(5)

    def test_theorem_scale_host(self):
        h = HostSpec.star_deleted(139, range(116, 138), center=138)
        g = host_graph(h)
        assert h.star_k == 22
        assert gc.min_degree(g) == 116 == g.degree(138)
        assert {g.degree(v) for v in range(138)} == {137, 138}

    def test_center_joined(self):
        h = HostSpec.center_joined(5, 2)
        g = host_graph(h)
        assert h.order == 6 and h.star_k == 3
        assert g.neighbors(5) == {0, 1}

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(order=5, star_k=2, center=None, leaves=(0, 1)),
            dict(order=5, star_k=2, center=4, leaves=(0, 0)),
            dict(order=5, star_k=1, center=4, leaves=(4,)),
            dict(order=5, star_k=5, center=4, leaves=(0, 1, 2, 3, 5)),
            dict(order=-1, star_k=0, center=None, leaves=()),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(HostSpecError):
            HostSpec(**kwargs)

    @pytest.mark.parametrize("h", [HostSpec.complete(4), HostSpec.star_deleted(7, [4, 5], 6)])
    def test_round_trip(self, h):
        assert HostSpec.from_dict(json.loads(json.dumps(h.to_dict()))) == h
        assert host_spec_of(host_graph(h)).order == h.order
        assert host_graph(host_spec_of(host_graph(h))) == host_graph(h)


class TestVerify:
    def test_two_triangles_good(self):
        c = TwoColoring.from_edges(HostSpec.complete(6), [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        v = verify_coloring(c, 4, 3)
        assert v.good and v.red_cycle_found is None and v.blue_clique_found is None

    def test_pentagon_good(self):
        c = TwoColoring(HostSpec.complete(5), gc.cycle_graph(5))
        assert verify_coloring(c, 3, 3).good

    def test_all_blue_bad(self):
        c = TwoColoring(HostSpec.complete(6), gc.empty_graph(6))
        v = verify_coloring(c, 3, 3)
        assert not v.good
        assert gc.is_clique(gc.complete_graph(6), v.blue_clique_found)
        assert len(v.blue_clique_found) == 3

    def test_red_witness(self):
        c = TwoColoring(HostSpec.complete(5), gc.complete_graph(5))
        v = verify_coloring(c, 4, 3)
        assert not v.good and len(v.red_cycle_found) == 4

    def test_path_target(self):
        c = TwoColoring(HostSpec.complete(4), gc.Graph(4, [(0, 1), (2, 3)]))
        assert verify_coloring(c, 3, 3, red_kind="path").good
        assert not verify_coloring(c, 2, 3, red_kind="path").good

    def test_red_outside_host_rejected(self):
        with pytest.raises(ValueError):
            TwoColoring.from_edges(HostSpec.star_deleted(4, [0], 3), [(0, 3)])


class TestEnumerate:
    @pytest.mark.parametrize("h,count", [(HostSpec.complete(3), 8), (HostSpec.complete(4), 64),
                                         (HostSpec.star_deleted(5, [0, 1], 4), 256)])
    def test_counts(self, h, count):
        seen = []
        assert enumerate_colorings(h, seen.append) == count
        assert len({c.red for c in seen}) == count

    def test_fixed_prefix(self):
        seen = []
        assert enumerate_colorings(HostSpec.complete(4), seen.append, fixed=(True, False)) == 16
        assert all(c.red.has_edge(0, 1) and not c.red.has_edge(0, 2) for c in seen)

    def test_cap(self):
        with pytest.raises(EnumerationCapExceeded):
            enumerate_colorings(HostSpec.complete(8), lambda c: None, cap=20)


def random_coloring(draw, order):
    h = HostSpec.complete(order)
    edges = host_graph(h).edges()
    keep = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    return TwoColoring.from_edges(h, [e for e, k in zip(edges, keep) if k])


@st.composite
def colorings(draw):
    return random_coloring(draw, draw(st.integers(2, 7)))


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(colorings())
    def test_json_and_graph6_round_trip(self, c):
        assert TwoColoring.from_json(c.to_json()) == c
        assert TwoColoring.from_graph6_pair(*c.to_graph6_pair()) == c

    @settings(max_examples=60, deadline=None)
    @given(colorings(), st.data())
    def test_monotone_under_red_to_blue_flip(self, c, data):
        """Flipping red to blue can't remove a blue K_m, and never creates a red C_n."""
        red = c.red.edges()
        if not red:
            return
        e = data.draw(st.sampled_from(red))
        flipped = TwoColoring(c.host, gc.remove_edges(c.red, [e]))
        before = verify_coloring(c, 4, 3)
        after = verify_coloring(flipped, 4, 3)
        if before.blue_clique_found is not None:
            assert after.blue_clique_found is not None
        if after.red_cycle_found is not None:
            assert before.red_cycle_found is not None

    @settings(max_examples=60, deadline=None)
    @given(colorings())
    def test_swap_self_dual_for_triangles(self, c):
        # (C_3, K_3) is symmetric: swapping colours preserves goodness
        assert verify_coloring(c, 3, 3).good == verify_coloring(c.swapped(), 3, 3).good

    def test_save_load(self, tmp_path):
        c = TwoColoring.from_edges(HostSpec.star_deleted(6, [1, 2], 5), [(0, 1), (3, 5)])
        save_coloring(c, tmp_path / "c.json")
        assert load_coloring(tmp_path / "c.json") == c
