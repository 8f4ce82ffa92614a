"""
Siphons, traps and the Commoner liveness check
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from loguru import logger

from config.config import Config
from petri.errors import EnumerationOverflow, IsolatedPlacePresent
from petri.free_choice import clusters
from petri.net import Marking, Net, check_marking, is_isolated


@dataclass(frozen=True)
class MaxTrapResult:
    """Maximal trap inside R with the leaking transitions in removal order"""
    trap: FrozenSet[str]
    layers: Tuple[FrozenSet[str], ...]
    exit_index: Dict[str, int] = field(hash=False, compare=False)

    @property
    def leaking(self) -> FrozenSet[str]:
        return frozenset().union(*self.layers) if self.layers else frozenset()


@dataclass(frozen=True)
class CommonerVerdict:
    live: bool
    siphon: Optional[FrozenSet[str]] = None
    siphons_checked: int = 0


def _places(net: Net, places: Iterable[str]) -> FrozenSet[str]:
    return frozenset(net.require_place(p) for p in places)


def is_trap(net: Net, places: Iterable[str]) -> bool:
    chosen = _places(net, places)
    return net.post_of(chosen) <= net.pre_of(chosen)


def is_siphon(net: Net, places: Iterable[str]) -> bool:
    chosen = _places(net, places)
    return net.pre_of(chosen) <= net.post_of(chosen)


def maximal_trap(net: Net, places: Iterable[str]) -> MaxTrapResult:
    """Shrink R to its maximal trap, recording each round's exit transitions"""
    trap = set(_places(net, places))
    layers: List[FrozenSet[str]] = []
    while True:
        exits = net.post_of(trap) - net.pre_of(trap)
        if not exits:
            break
        layers.append(exits)
        trap -= net.pre_of(exits)
    exit_index = {t: i for i, layer in enumerate(layers, start=1) for t in layer}
    return MaxTrapResult(frozenset(trap), tuple(layers), exit_index)


def maximal_siphon(net: Net, places: Iterable[str]) -> FrozenSet[str]:
    """Largest siphon inside R: drop places fed by a transition with no input left"""
    siphon = set(_places(net, places))
    while True:
        entries = net.pre_of(siphon) - net.post_of(siphon)
        if not entries:
            return frozenset(siphon)
        siphon -= net.post_of(entries)


def is_minimal_siphon(net: Net, places: Iterable[str]) -> bool:
    chosen = _places(net, places)
    if not chosen or not is_siphon(net, chosen):
        return False
    return all(not maximal_siphon(net, chosen - {q}) for q in chosen)


def _unfed_transition(net: Net, included: Set[str]) -> Optional[str]:
    """First transition feeding the set without taking any input from it"""
    for s in sorted(included):
        for t in sorted(net.pre(s)):
            if not net.pre(t) & included:
                return t
    return None


def minimal_siphons(net: Net, cap: int = Config.SIPHON_CAP) -> List[FrozenSet[str]]:
    """All inclusion-minimal nonempty siphons, ordered by their sorted names

    Each search starts at one place with all smaller places excluded and
    closes the set under "every feeding transition takes an input from it",
    branching over the candidate inputs.

    Raises:
        EnumerationOverflow: If more than cap minimal siphons exist
    """
    ordered = sorted(net.places)
    found: Set[FrozenSet[str]] = set()
    for i, start in enumerate(ordered):
        stack: List[Tuple[FrozenSet[str], FrozenSet[str]]] = [(frozenset([start]), frozenset(ordered[:i]))]
        while stack:
            included, excluded = stack.pop()
            if any(f <= included for f in found):
                continue
            t = _unfed_transition(net, included)
            if t is None:
                if is_minimal_siphon(net, included):
                    found.add(included)
                    if len(found) > cap:
                        raise EnumerationOverflow(cap, "minimal siphons")
                continue
            options = [p for p in sorted(net.pre(t)) if p not in excluded]
            branches = []
            for j, p in enumerate(options):
                branches.append((included | {p}, excluded | frozenset(options[:j])))
            # depth-first, first option on top
            stack.extend(reversed(branches))
    logger.debug(f"{len(found)} minimal siphon(s) in {net!r}")
    return sorted(found, key=lambda s: tuple(sorted(s)))


def commoner_live(net: Net, m0: Marking, cap: int = Config.SIPHON_CAP) -> CommonerVerdict:
    """Liveness of a free-choice net: every minimal siphon holds a marked trap

    Raises:
        InvalidMarking: If m0 is not over the places of net
        NotFreeChoice: If the net is not free-choice
        IsolatedPlacePresent: If some place has no arcs
        EnumerationOverflow: If the siphon enumeration exceeds cap
    """
    check_marking(net, m0)
    clusters(net)
    isolated = [p for p in net.places if is_isolated(net, p)]
    if isolated:
        raise IsolatedPlacePresent(f"isolated place(s) {sorted(isolated)}")
    siphons = minimal_siphons(net, cap)
    for checked, siphon in enumerate(siphons, start=1):
        trap = maximal_trap(net, siphon).trap
        if not any(m0[q] > 0 for q in trap):
            logger.debug(f"Siphon {sorted(siphon)} has unmarked maximal trap {sorted(trap)}")
            return CommonerVerdict(False, siphon, checked)
    return CommonerVerdict(True, None, len(siphons))
