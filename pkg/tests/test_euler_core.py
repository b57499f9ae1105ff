import io

import pytest

from eulerstream import euler_core, stream_io, verify
from eulerstream.errors import NotConnectedError, OddDegreeError
from eulerstream.euler_core import AlgoState

from conftest import drive_edges, drive_text, graph_text

TRIANGLE = [(1, 2), (2, 3), (3, 1)]
BOWTIE = [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)]


def sink_writer():
    out = io.StringIO()
    return out, stream_io.open_triple_writer(out)


class TestRun:
    @pytest.mark.parametrize("mode", euler_core.MODES)
    def test_triangle(self, mode, backend):
        out, stats, _ = drive_edges(3, TRIANGLE, mode=mode, backend=backend,
                                    check_labels=True)
        assert out == "3 1 2\n1 2 3\n2 3 1\n"
        assert stats.triples_emitted == 3
        assert stats.final_c == 1
        assert stats.cycles_found == 1
        assert stats.passes == 1

    def test_odd_degree_path(self):
        with pytest.raises(OddDegreeError, match="At least one node with odd degree"):
            drive_edges(3, [(1, 2), (2, 3)])

    def test_disconnected_two_triangles(self):
        edges = [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]
        with pytest.raises(NotConnectedError, match="Graph not connected"):
            drive_edges(6, edges)

    def test_odd_degree_checked_before_connectivity(self):
        # disconnected and odd: the degree branch must win
        edges = [(1, 2), (2, 3), (3, 1), (4, 5)]
        with pytest.raises(OddDegreeError):
            drive_edges(5, edges)

    def test_empty_graph(self):
        out, stats, _ = drive_text("4 0\n")
        assert out == ""
        assert stats.triples_emitted == 0
        assert stats.final_c == 0

    def test_isolated_nodes_ignored(self):
        out, stats, _ = drive_edges(10, TRIANGLE, check_labels=True)
        assert stats.triples_emitted == 3
        assert verify.verify_tour(stream_io.read_triples(io.StringIO(out)),
                                  10, TRIANGLE).ok

    @pytest.mark.parametrize("mode", euler_core.MODES)
    def test_bowtie(self, mode):
        out, stats, _ = drive_edges(5, BOWTIE, mode=mode, check_labels=True)
        assert out == "5 3 1\n3 1 2\n1 2 3\n2 3 4\n3 4 5\n4 5 3\n"
        assert stats.final_c == 1
        assert stats.cycles_found == 2
        triples = stream_io.read_triples(io.StringIO(out))
        verdict = verify.verify_tour(triples, 5, BOWTIE)
        assert verdict.ok

    def test_stats_word_accounting(self):
        _, stats, _ = drive_edges(3, TRIANGLE)
        # peaks: 3 internal edges at the closing moment, 3 stored in-edges
        # after the merge; the two never coincide
        assert stats.peak_e_int == 3
        assert stats.peak_f == 3
        assert stats.words_peak == max(2 * 3 + 0 + 2 * 3 + 1, 0 + 2 * 3 + 2 * 3 + 1)

    def test_stats_json_schema(self):
        _, stats, _ = drive_edges(3, TRIANGLE)
        assert sorted(stats.to_json()) == [
            "cycles_found", "final_c", "passes", "peak_e_int", "peak_f",
            "triples_emitted", "words_peak",
        ]

    def test_reader_consumed_exactly_once(self):
        out, stats, reader = drive_edges(5, BOWTIE)
        assert reader.consumed == 6
        with pytest.raises(RuntimeError):
            iter(reader)

    def test_partial_output_kept_on_failure(self):
        # bowtie plus a dangling edge: the bowtie triples are already out
        edges = BOWTIE + [(1, 4)]
        text = graph_text(5, edges)
        reader = stream_io.open_edge_reader(io.StringIO(text))
        out, writer = sink_writer()
        with pytest.raises(OddDegreeError):
            euler_core.run(reader, writer)
        assert out.getvalue().startswith("5 3 1\n")


class TestNewNodes:
    def test_first_cycle_all_new(self):
        state = AlgoState(3)
        euler_core.new_nodes(state, [1, 2, 3])
        assert state.first_in[1:] == [3, 1, 2]
        assert state.reserved_succ[1:] == [2, 3, 1]
        assert state.first_in_size == 3

    def test_second_cycle_partial(self):
        state = AlgoState(5)
        euler_core.new_nodes(state, [1, 2, 3])
        euler_core.update_labels(state, [1, 2, 3], set())
        euler_core.new_nodes(state, [3, 4, 5])
        assert state.first_in[4] == 3 and state.first_in[5] == 4
        assert state.reserved_succ[4] == 5 and state.reserved_succ[5] == 3
        assert state.reserved_succ[3] == 1  # untouched

    def test_no_new_nodes_no_change(self):
        state = AlgoState(3)
        euler_core.new_nodes(state, [1, 2, 3])
        euler_core.update_labels(state, [1, 2, 3], set())
        before = (list(state.first_in), list(state.reserved_succ))
        euler_core.new_nodes(state, [2, 1, 3])
        assert (list(state.first_in), list(state.reserved_succ)) == before


@pytest.mark.parametrize("mode", euler_core.MODES)
class TestSelectMergeNodes:
    def _state(self, n, labels, mode):
        state = AlgoState(n, mode=mode)
        for v, lbl in labels.items():
            state.tour_label[v] = lbl
            if mode == "optimized":
                state._buckets.setdefault(lbl, []).append(v)
        return state

    def test_mixed_labels_first_occurrence(self, mode):
        # cycle node labels (0, 2, 2, 5): one node per distinct label,
        # first occurrence in cycle order
        state = self._state(6, {2: 2, 3: 2, 4: 5}, mode)
        chosen, labels = euler_core.select_merge_nodes(state, [1, 2, 3, 4])
        assert chosen == [1, 3]
        assert labels == {2, 5}

    def test_all_new(self, mode):
        state = self._state(4, {}, mode)
        assert euler_core.select_merge_nodes(state, [1, 2, 3]) == ([], set())

    def test_single_prior_tour(self, mode):
        state = self._state(4, {1: 7, 2: 7, 3: 7}, mode)
        chosen, labels = euler_core.select_merge_nodes(state, [1, 2, 3])
        assert chosen == [0]
        assert labels == {7}


class TestMergeAndWrite:
    def test_merge_swaps_reserved_successor(self):
        # bowtie mid-state: node 3 already toured with reserved head 1
        state = AlgoState(5)
        state.tour_label[1:4] = [1, 1, 1]
        state.reserved_succ[1:4] = [2, 3, 1]
        out, writer = sink_writer()
        euler_core.new_nodes(state, [3, 4, 5])
        euler_core.merge(state, [3, 4, 5], [0], writer)
        assert out.getvalue() == "5 3 1\n"
        assert state.reserved_succ[3] == 4

    def test_merge_empty_choice(self):
        state = AlgoState(3)
        out, writer = sink_writer()
        euler_core.new_nodes(state, [1, 2, 3])
        euler_core.merge(state, [1, 2, 3], [], writer)
        assert out.getvalue() == ""

    def test_write_remaining_skips_stored_and_merged(self):
        # cycle (1,2,3,4), every node previously visited, merge consumed the
        # in-going edge of node 2: the other three edges pass through with
        # their natural in-cycle successors
        state = AlgoState(4)
        state.tour_label[1:5] = [1, 1, 1, 1]
        state.reserved_succ[1:5] = [3, 4, 1, 2]  # arbitrary prior reserves
        out, writer = sink_writer()
        cycle = [1, 2, 3, 4]
        euler_core.new_nodes(state, cycle)
        euler_core.merge(state, cycle, [1], writer)
        assert out.getvalue() == "1 2 4\n"
        out.truncate(0)
        out.seek(0)
        euler_core.write_remaining(state, cycle, writer)
        assert out.getvalue() == "2 3 4\n3 4 1\n4 1 2\n"

    def test_first_cycle_writes_nothing(self):
        state = AlgoState(3)
        out, writer = sink_writer()
        cycle = [1, 2, 3]
        euler_core.new_nodes(state, cycle)
        chosen, labels = euler_core.select_merge_nodes(state, cycle)
        euler_core.merge(state, cycle, chosen, writer)
        euler_core.write_remaining(state, cycle, writer)
        assert out.getvalue() == ""


@pytest.mark.parametrize("mode", euler_core.MODES)
class TestUpdateLabels:
    def test_fresh_cycle_bumps_counter(self, mode):
        state = AlgoState(3, mode=mode)
        euler_core.update_labels(state, [1, 2, 3], set())
        assert state.c == 1
        assert state.tour_label[1:] == [1, 1, 1]

    def test_min_label_wins(self, mode):
        state = AlgoState(8, mode=mode)
        for v, lbl in {1: 2, 2: 2, 3: 5, 4: 5, 7: 3}.items():
            state.tour_label[v] = lbl
            if mode == "optimized":
                state._buckets.setdefault(lbl, []).append(v)
        euler_core.update_labels(state, [3, 5, 6], {2, 5})
        # every node labelled 2 or 5 anywhere, plus all cycle nodes, end at 2
        assert state.tour_label[1:] == [2, 2, 2, 2, 2, 2, 3, 0]
        assert state.c == 0

    def test_single_label_kept(self, mode):
        state = AlgoState(4, mode=mode)
        state.tour_label[1] = 7
        if mode == "optimized":
            state._buckets[7] = [1]
        euler_core.update_labels(state, [1, 2, 3], {7})
        assert state.tour_label[1:] == [7, 7, 7, 0]


def test_mode_equivalence_on_interleaved_stream():
    from eulerstream import gen
    g = gen.generate(gen.GenSpec(12, 30, seed=5, order="cycle-interleaved"))
    text = graph_text(12, g.edges)
    out_f, _, _ = drive_text(text, mode="faithful", check_labels=True)
    out_o, _, _ = drive_text(text, mode="optimized", check_labels=True)
    assert out_f == out_o
