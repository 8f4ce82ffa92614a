"""
Well-formedness decision test suite

Verdicts with certificates on the shipped nets, the structural refusal for
fed bottom SCCs, the intersecting semi-T search, the dual searches and the
verdicts on the generated corpus.
"""
from typing import List

import pytest

from petri.components import Side, Status, t_component
from petri.errors import DegenerateNet, NotFreeChoice, NotStronglyConnected, UnknownNode
from petri.net import Net, delete_nodes, reverse_dual
from petri.wellformed import (
    Answer,
    StructuralRefusal,
    WellFormednessVerdict,
    decide_well_formed,
    decide_well_formed_scc,
    find_proper_semi_s_type2,
    find_semi_t_intersecting,
    s_component_cover,
)
from utils.test_helpers import verify_component_kind, verify_cover, verify_node_set, verify_node_sets

from utils.fixtures.net_fixtures import (
    documents,
    cycle1,
    fig1,
    fig1_split,
    fig3,
    fcchoice,
    fig2net,
    free_choice_fixtures,
    random_corpus,
)

FIG3_WITNESS = {"s1", "s2", "s3", "s5", "s6", "t1", "t3", "t4", "t6", "t7"}


def _fed_bottom() -> Net:
    """fig1_split with t2 feeding the {s5, t4} cycle"""
    return Net(["s1", "s2", "s3", "s4", "s5"], ["t1", "t2", "t3", "t4"],
               [("s1", "t1"), ("t1", "s2"), ("s2", "t3"), ("t3", "s3"), ("t3", "s4"),
                ("s3", "t2"), ("s4", "t2"), ("t2", "s1"), ("t2", "s5"), ("s5", "t4"), ("t4", "s5")],
               name="fed_bottom")


class TestDecision:
    """Verdicts and certificates on the shipped nets"""

    def test_01_fig3_is_refused_in_phase_one(self, fig3: Net) -> None:
        """Growing the cover from t3 lands on a semi-T-component with an inbound arc at s4."""
        verdict = decide_well_formed_scc(fig3)
        assert verdict.answer is Answer.NO and verdict.phase == 1
        verify_node_set(verdict.witness.nodes, FIG3_WITNESS, "fig3 witness")
        verify_component_kind(verdict.witness, Status.PROPER, type1=True, type2=True)
        assert verdict.witness.evidence.excessive == ("s1",)
        assert verdict.witness.evidence.open_nodes == ("s4", "s7")
        assert not verdict.t_cover
        assert decide_well_formed(fig3) == verdict

    def test_02_well_formed_fixtures(self, cycle1: Net, fcchoice: Net) -> None:
        """cycle1 and fcchoice are well-formed with the expected covers."""
        verdict = decide_well_formed_scc(cycle1)
        assert verdict.is_yes and verdict.witness is None and verdict.phase is None
        verify_node_sets([c.nodes for c in verdict.t_cover], [{"s", "t"}], "cycle1 cover")
        verdict = decide_well_formed_scc(fcchoice)
        assert verdict.is_yes
        verify_node_sets([c.nodes for c in verdict.t_cover],
                         [{"s1", "s2", "t1", "t3"}, {"s1", "s3", "t2", "t4"}], "fcchoice cover")
        verify_cover(verdict.t_cover, fcchoice.transitions)

    def test_03_fig2net_is_refused(self, fig2net: Net) -> None:
        """fig2net has proper semi-T-components, so the witness is proper."""
        verdict = decide_well_formed_scc(fig2net)
        assert verdict.answer is Answer.NO
        assert verdict.phase in (1, 2)
        assert verdict.witness.kind.is_proper

    def test_04_disjoint_sccs(self, fig1_split: Net) -> None:
        """Each SCC of fig1_split is checked on its own and the covers are joined."""
        verdict = decide_well_formed(fig1_split)
        assert isinstance(verdict, WellFormednessVerdict) and verdict.is_yes
        assert [c.sort_key() for c in verdict.t_cover] == [
            ("s1", "s2", "s3", "s4", "t1", "t2", "t3"),
            ("s5", "t4"),
        ]
        verify_cover(verdict.t_cover, fig1_split.transitions)

    def test_05_fed_bottom_scc_is_refused(self) -> None:
        """A bottom SCC with an incoming arc gives a structural refusal."""
        verdict = decide_well_formed(_fed_bottom())
        assert isinstance(verdict, StructuralRefusal)
        assert verdict.answer is Answer.NO and not verdict.is_yes
        verify_node_set(verdict.bottom, {"s5", "t4"}, "fed bottom SCC")
        verify_node_set(verdict.upstream, {"s1", "s2", "s3", "s4", "t1", "t2", "t3"}, "upstream SCC")

    def test_06_single_node_sccs(self) -> None:
        """Lone places are skipped and lone transitions join the cover."""
        net = Net(["s", "p"], ["t", "u"], [("s", "t"), ("t", "s")], name="loners")
        verdict = decide_well_formed(net)
        assert verdict.is_yes
        verify_node_sets([c.nodes for c in verdict.t_cover], [{"s", "t"}, {"u"}], "cover with a lone transition")

    def test_07_preconditions(self, fig1: Net, fig1_split: Net) -> None:
        """Named errors for non-free-choice, disconnected and degenerate nets."""
        with pytest.raises(NotFreeChoice):
            decide_well_formed(fig1)
        with pytest.raises(NotFreeChoice):
            decide_well_formed_scc(fig1)
        with pytest.raises(NotStronglyConnected):
            decide_well_formed_scc(fig1_split)
        with pytest.raises(DegenerateNet):
            decide_well_formed_scc(Net(["s"], [], []))

    def test_08_dual_is_refused_in_phase_two(self, fig3: Net) -> None:
        """The reverse-dual of fig3 has a full cover, so only the inbound-arc search refuses it."""
        dual = reverse_dual(fig3)
        verdict = decide_well_formed_scc(dual)
        assert verdict.answer is Answer.NO and verdict.phase == 2
        verify_component_kind(verdict.witness, Status.PROPER, type2=True)
        assert verdict.witness.kind.side is Side.T


class TestSearches:
    """Intersecting semi-T search and the dual searches"""

    def test_01_intersecting_search_finds_component(self, fig3: Net) -> None:
        """In fig3 without s5 and t4 the component through t6 avoids the removed branch."""
        reduced = delete_nodes(fig3, ["s5", "t4"])
        found = find_semi_t_intersecting(reduced, {"t6"})
        assert found is not None
        verify_node_set(found.transitions, {"t1", "t2", "t5", "t6", "t7"}, "transitions found")
        assert found.kind.is_semi

    def test_02_intersecting_search_fails(self, fig3: Net) -> None:
        """Without s2 and t1 nothing leads back into t2 or t3."""
        reduced = delete_nodes(fig3, ["s2", "t1"])
        assert find_semi_t_intersecting(reduced, {"t2", "t3"}) is None

    def test_03_intersecting_search_on_full_nets(self, fig3: Net, cycle1: Net) -> None:
        """On a strongly connected net the search always succeeds."""
        for t in fig3.transitions:
            found = find_semi_t_intersecting(fig3, {t})
            assert found is not None and t in found.transitions, f"nothing through {t}"
            assert t_component(fig3, found.nodes).kind.is_semi
        verify_node_set(find_semi_t_intersecting(cycle1, {"t"}).nodes, {"s", "t"}, "cycle1 component")
        with pytest.raises(UnknownNode):
            find_semi_t_intersecting(fig3, {"s1"})

    def test_04_no_outbound_semi_s(self, cycle1: Net, fcchoice: Net) -> None:
        """Nets whose reverse-dual is well-formed have no semi-S-component with an outbound arc."""
        assert find_proper_semi_s_type2(cycle1) is None
        assert find_proper_semi_s_type2(fcchoice) is None

    def test_05_fig3_dual(self, fig3: Net) -> None:
        """The reverse-dual of fig3 is refused, and fig3 has a semi-S-component leaking at t2 and t5."""
        assert not decide_well_formed(reverse_dual(fig3)).is_yes
        found = find_proper_semi_s_type2(fig3)
        assert found is not None
        assert found.kind.side is Side.S
        verify_node_set(found.places, {"s1", "s2", "s3", "s5", "s6"}, "semi-S places")
        verify_node_set(found.transitions, {"t1", "t3", "t4", "t6", "t7"}, "semi-S transitions")
        verify_component_kind(found, Status.PROPER, type1=True, type2=True)
        assert found.evidence.excessive == ("t1",)
        assert found.evidence.open_nodes == ("t2", "t5")
        assert found.evidence.boundary_arcs == (("s2", "t2"), ("s3", "t5"))

    def test_06_s_component_cover(self, fcchoice: Net, cycle1: Net, fig3: Net) -> None:
        """Well-formed nets are covered by S-components; fig3 gets None."""
        cover = s_component_cover(fcchoice)
        assert cover is not None
        verify_cover(cover, fcchoice.places, attribute="places")
        for member in cover:
            assert member.kind.side.value == "s"
        verify_node_sets([c.nodes for c in s_component_cover(cycle1)], [{"s", "t"}], "cycle1 S-cover")
        assert s_component_cover(fig3) is None


class TestDuality:
    """A net and its reverse-dual agree"""

    def test_01_fixture_duality(self, free_choice_fixtures: List[Net], fig1_split: Net) -> None:
        """Verdicts agree for every free-choice fixture."""
        for net in free_choice_fixtures + [fig1_split]:
            forward = decide_well_formed(net).is_yes
            backward = decide_well_formed(reverse_dual(net)).is_yes
            assert forward == backward, f"duality broken on {net.name}"

    def test_02_corpus_certificates(self, random_corpus: List[Net]) -> None:
        """Every verdict on the generated corpus carries a valid certificate."""
        for net in random_corpus:
            verdict = decide_well_formed_scc(net)
            if verdict.is_yes:
                verify_cover(verdict.t_cover, net.transitions)
            else:
                assert verdict.witness.kind.is_proper, f"{net.name}: {verdict.witness}"
                assert not verdict.t_cover
