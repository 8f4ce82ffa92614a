"""
Semi-component classification test suite

T-side and S-side classification with evidence, bottom/top components of
(place-)allocations, components grown through a node and covers.
"""
import itertools
import random
from typing import List

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loguru import logger
from oracle.reachability import Outcome, explore
from oracle.generator import random_marking
from petri.components import (
    Evidence,
    Side,
    Status,
    bottom_components_of_allocation,
    classify_s_side,
    classify_t_side,
    s_component,
    semi_s_cover,
    semi_s_through,
    semi_t_cover,
    semi_t_through,
    t_component,
    top_components_of_place_allocation,
)
from petri.errors import DegenerateNet, NotStronglyConnected, UnknownNode
from petri.free_choice import allocation_from_nodes, clusters, co_directed_place_allocation
from petri.net import Net, reverse_dual
from utils.test_helpers import verify_component_kind, verify_cover, verify_node_set, verify_node_sets

from utils.fixtures.net_fixtures import (
    documents,
    cycle1,
    fig3,
    fcchoice,
    fig2net,
    small_corpus,
    random_corpus,
)

Y1 = {"s1", "s2", "s3", "s6", "s7", "t1", "t3", "t5", "t7"}
Y_SYMMETRIC = {"s1", "s2", "s3", "s4", "s5", "t1", "t2", "t4", "t6"}
Y_PROPER = {"s1", "s2", "s3", "s4", "s7", "t1", "t2", "t5", "t6", "t7"}
FIG2_BOTTOM = {"s11", "s12", "s21", "s22", "s31", "t11", "t21", "t31"}
FIG2_INBOUND = {"s32", "s43", "s51", "s52", "t33", "t42", "t51"}


class TestClassification:
    """Classification of node sets with evidence"""

    def test_01_t_side_fixture_sets(self, fig3: Net, cycle1: Net) -> None:
        """Full, proper and rejected node sets of fig3 and cycle1."""
        verify_component_kind(t_component(fig3, Y1), Status.FULL)
        verify_component_kind(t_component(fig3, Y_SYMMETRIC), Status.FULL)
        witness = t_component(fig3, Y_PROPER)
        verify_component_kind(witness, Status.PROPER, type1=True, type2=True)
        assert witness.evidence == Evidence(("s1",), ("s5", "s6"), (("s5", "t6"), ("s6", "t7")))
        assert str(witness.kind) == "t:proper[I,II]"
        assert classify_t_side(cycle1, cycle1.nodes).is_full
        assert classify_t_side(fig3, fig3.nodes).status is Status.NOT_COMPONENT
        assert classify_t_side(fig3, {"s1"}).status is Status.NOT_COMPONENT
        with pytest.raises(UnknownNode):
            classify_t_side(fig3, {"s9"})

    def test_02_fig2net_components(self, fig2net: Net) -> None:
        """The caption facts: a proper bottom SCC of both types and one with an inbound arc only."""
        bottom = t_component(fig2net, FIG2_BOTTOM)
        verify_component_kind(bottom, Status.PROPER, type1=True, type2=True)
        assert bottom.evidence.excessive == ("s11",)
        assert bottom.evidence.open_nodes == ("s32",)
        inbound = t_component(fig2net, FIG2_INBOUND)
        verify_component_kind(inbound, Status.PROPER, type1=False, type2=True)
        assert inbound.evidence.open_nodes == ("s31", "s41", "s42")

    def test_03_s_side(self, fig3: Net, cycle1: Net, fig2net: Net) -> None:
        """S-side classification through the reverse-dual, with outbound arcs as evidence."""
        whole = s_component(cycle1, cycle1.nodes)
        verify_component_kind(whole, Status.FULL)
        assert whole.kind.side is Side.S
        assert classify_s_side(fig3, {"s1", "t1"}).status is Status.NOT_COMPONENT
        verify_component_kind(s_component(fig3, {"s1", "s2", "s4", "s6", "t1", "t2", "t3", "t6", "t7"}),
                              Status.FULL)
        dual_bottom = s_component(reverse_dual(fig2net), FIG2_BOTTOM)
        verify_component_kind(dual_bottom, Status.PROPER, type1=True, type2=True)

    def test_04_s_side_evidence(self, fig3: Net) -> None:
        """A semi-S-component of fig3 with an excessive output and two outbound arcs."""
        component = s_component(fig3, {"s1", "s2", "s3", "s5", "s6", "t1", "t3", "t4", "t6", "t7"})
        verify_component_kind(component, Status.PROPER, type1=True, type2=True)
        verify_node_set(component.places, {"s1", "s2", "s3", "s5", "s6"}, "S-side places")
        assert component.evidence.excessive == ("t1",)
        assert component.evidence.open_nodes == ("t2", "t5")
        assert component.evidence.boundary_arcs == (("s2", "t2"), ("s3", "t5"))

    @pytest.mark.parametrize("name", ["cycle1", "fcchoice"])
    def test_05_sides_correspond_exhaustively(self, documents, name: str) -> None:
        """T-side classification in N equals S-side classification in rd(N) on every subset."""
        net = documents[name].net
        dual = reverse_dual(net)
        for size in range(1, len(net.nodes) + 1):
            for subset in itertools.combinations(net.nodes, size):
                t_kind = classify_t_side(net, subset)
                s_kind = s_component(dual, subset, net).kind
                assert (t_kind.status, t_kind.type1, t_kind.type2) == (s_kind.status, s_kind.type1, s_kind.type2)
                assert s_kind.side is Side.S and t_kind.side is Side.T

    @settings(max_examples=150, derandomize=True, deadline=None)
    @given(data=st.data())
    def test_06_sides_correspond_on_fig3(self, fig3: Net, data) -> None:
        """The same correspondence on random subsets of fig3 and its reverse-dual."""
        subset = data.draw(st.sets(st.sampled_from(fig3.nodes), min_size=1))
        dual = reverse_dual(fig3)
        forward = t_component(fig3, subset)
        backward = s_component(dual, subset, fig3)
        assert forward.kind.status is backward.kind.status
        assert (forward.kind.type1, forward.kind.type2) == (backward.kind.type1, backward.kind.type2)
        assert forward.places == backward.transitions and forward.transitions == backward.places


class TestAllocationComponents:
    """Bottom components of allocations and top components of place-allocations"""

    def test_01_bottom_components(self, fig3: Net, fig2net: Net, cycle1: Net) -> None:
        """Bottom SCCs of N_α, classified in the full net."""
        found = bottom_components_of_allocation(fig3, allocation_from_nodes(fig3, {"t1", "t3", "t5", "t6", "t7"}))
        verify_node_sets([c.nodes for c in found], [Y1], "fig3 bottom components")
        verify_component_kind(found[0], Status.FULL)
        found = bottom_components_of_allocation(
            fig2net, allocation_from_nodes(fig2net, {"t11", "t21", "t31", "t42", "t51"}))
        assert len(found) == 1
        verify_component_kind(found[0], Status.PROPER, type1=True, type2=True)
        found = bottom_components_of_allocation(cycle1, allocation_from_nodes(cycle1, {"t"}))
        verify_node_sets([c.nodes for c in found], [set(cycle1.nodes)], "cycle1 bottom components")

    def test_02_top_components(self, fig3: Net) -> None:
        """Top SCCs of N_β classify on the S side."""
        beta = co_directed_place_allocation(fig3, {"s1"})
        tops = top_components_of_place_allocation(fig3, beta)
        assert len(tops) == 1
        assert tops[0].kind.side is Side.S and tops[0].kind.is_semi

    def test_03_every_bottom_is_semi(self, small_corpus: List[Net]) -> None:
        """For random allocations every bottom SCC is a semi-T-component."""
        rng = random.Random(11)
        for net in small_corpus:
            partition = clusters(net)
            for _ in range(5):
                choice = {i: rng.choice(partition.transitions_of(net, i)) for i in range(len(partition))}
                alpha = allocation_from_nodes(net, choice.values(), partition)
                for component in bottom_components_of_allocation(net, alpha, partition):
                    assert component.kind.is_semi, f"{component} in {net.name}"


class TestGrowthAndCovers:
    """Components grown through a node and covers"""

    def test_01_semi_t_through(self, fig3: Net, cycle1: Net) -> None:
        """Component through t4 is the symmetric T-component; through t7 it is Y1."""
        through_t4 = semi_t_through(fig3, "t4")
        verify_node_set(through_t4.transitions, {"t1", "t2", "t4", "t6"}, "transitions through t4")
        verify_node_set(through_t4.places, {"s1", "s2", "s3", "s4", "s5"}, "places through t4")
        verify_node_set(semi_t_through(fig3, "t7").nodes, Y1, "component through t7")
        verify_node_set(semi_t_through(cycle1, "t").nodes, cycle1.nodes, "component through t")
        with pytest.raises(UnknownNode):
            semi_t_through(fig3, "s1")

    def test_02_semi_s_through(self, fig3: Net, cycle1: Net) -> None:
        """Component through a place contains it and classifies semi-S."""
        through_s5 = semi_s_through(fig3, "s5")
        assert "s5" in through_s5.places
        assert through_s5.kind.side is Side.S and through_s5.kind.is_semi
        verify_node_set(semi_s_through(cycle1, "s").nodes, cycle1.nodes, "component through s")

    def test_03_fixture_covers(self, fig3: Net, cycle1: Net, fig2net: Net) -> None:
        """fig3 needs three semi-T-components but only two S-components."""
        cover = semi_t_cover(fig3)
        verify_node_sets([c.transitions for c in cover],
                         [{"t1", "t2", "t4", "t6"}, {"t1", "t3", "t4", "t6", "t7"}, {"t1", "t2", "t5", "t6", "t7"}],
                         "fig3 T-cover")
        verify_cover(cover, fig3.transitions, full=False)
        assert [c.kind.status for c in cover] == [Status.FULL, Status.PROPER, Status.PROPER]
        s_cover = semi_s_cover(fig3)
        verify_node_sets([c.places for c in s_cover], [{"s1", "s2", "s4", "s6"}, {"s1", "s3", "s5", "s7"}],
                         "fig3 S-cover")
        verify_cover(s_cover, fig3.places, attribute="places")
        verify_node_sets([c.nodes for c in semi_t_cover(cycle1)], [set(cycle1.nodes)], "cycle1 T-cover")
        verify_cover(semi_t_cover(fig2net), fig2net.transitions, full=False)
        verify_cover(semi_s_cover(fig2net), fig2net.places, attribute="places", full=False)

    def test_04_cover_preconditions(self) -> None:
        """Covers need a nonempty strongly connected free-choice net."""
        apart = Net(["s", "p"], ["t", "u"], [("s", "t"), ("t", "s"), ("p", "u"), ("u", "p")])
        with pytest.raises(NotStronglyConnected):
            semi_t_cover(apart)
        with pytest.raises(DegenerateNet):
            semi_t_cover(Net(["s"], [], []))

    def test_05_generated_covers(self, random_corpus: List[Net]) -> None:
        """Each cover member brings a new transition and the cover is complete."""
        for net in random_corpus:
            covered = set()
            for member in semi_t_cover(net):
                assert member.kind.is_semi
                assert member.transitions - covered, f"{member} adds nothing in {net.name}"
                covered |= member.transitions
            assert covered == set(net.transitions)
            verify_cover(semi_s_cover(net), net.places, attribute="places", full=False)

    def test_06_s_coverable_nets_stay_bounded(self, random_corpus: List[Net], state_cap: int) -> None:
        """Nets covered by S-components never show an unbounded exploration."""
        rng = random.Random(5)
        checked = 0
        for net in random_corpus:
            if not all(member.kind.is_full for member in semi_s_cover(net)):
                continue
            for _ in range(2):
                verdict = explore(net, random_marking(net, rng), state_cap)
                assert verdict.outcome is not Outcome.UNBOUNDED, f"{net.name} pumped by {verdict.pump}"
            checked += 1
        logger.info(f"Explored {checked} S-coverable net(s)")

    def test_07_cover_order(self, fig3: Net, fcchoice: Net) -> None:
        """Each member is grown from the smallest transition still uncovered."""
        cover = semi_t_cover(fig3)
        assert [c.sort_key() for c in cover] == [
            ("s1", "s2", "s3", "s4", "s5", "t1", "t2", "t4", "t6"),
            ("s1", "s2", "s3", "s5", "s6", "t1", "t3", "t4", "t6", "t7"),
            ("s1", "s2", "s3", "s4", "s7", "t1", "t2", "t5", "t6", "t7"),
        ]
        assert cover == [semi_t_through(fig3, t) for t in ("t1", "t3", "t5")]
        assert [c.sort_key() for c in semi_t_cover(fcchoice)] == [
            ("s1", "s2", "t1", "t3"),
            ("s1", "s3", "t2", "t4"),
        ]
        # aimed at t3, the allocation keeps t4 and lands on the proper component
        through_t3 = semi_t_through(fig3, "t3")
        verify_node_set(through_t3.transitions, {"t1", "t3", "t4", "t6", "t7"}, "transitions through t3")
        verify_component_kind(through_t3, Status.PROPER, type1=True, type2=True)
        assert through_t3.evidence.open_nodes == ("s4", "s7")
