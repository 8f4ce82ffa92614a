"""
Random strongly connected free-choice nets and random behaviour
"""
import random
from typing import List, Tuple

from loguru import logger

from config.config import Config
from petri.net import Marking, Net, effect, enabled
from petri.scc import is_strongly_connected


def random_fc_net(seed: int, clusters: int = Config.RANDOM_NET_CLUSTERS,
                  max_cluster_size: int = Config.RANDOM_NET_SIZE) -> Net:
    """Generate a strongly connected free-choice net, deterministic per seed

    Clusters get complete place-to-transition arcs. Every transition gets one
    or two random output places and every place at least one input. If the
    result is not strongly connected, one arc per step of a random cycle
    through the clusters is added.
    """
    if clusters < 1 or max_cluster_size < 1:
        raise ValueError("clusters and max_cluster_size must be at least 1")
    rng = random.Random(seed)
    places: List[str] = []
    transitions: List[str] = []
    groups: List[Tuple[List[str], List[str]]] = []
    arcs = set()
    for _ in range(clusters):
        cluster_places = [f"s{len(places) + i}" for i in range(rng.randint(1, max_cluster_size))]
        cluster_transitions = [f"t{len(transitions) + i}" for i in range(rng.randint(1, max_cluster_size))]
        places.extend(cluster_places)
        transitions.extend(cluster_transitions)
        groups.append((cluster_places, cluster_transitions))
        arcs.update((p, t) for p in cluster_places for t in cluster_transitions)

    for t in transitions:
        for p in rng.sample(places, rng.randint(1, min(2, len(places)))):
            arcs.add((t, p))
    transition_set = set(transitions)
    fed = {target for source, target in arcs if source in transition_set}
    for p in places:
        if p not in fed:
            arcs.add((rng.choice(transitions), p))

    net = Net(places, transitions, sorted(arcs), name=f"random_{seed}")
    if not is_strongly_connected(net):
        order = list(range(clusters))
        rng.shuffle(order)
        for a, b in zip(order, order[1:] + order[:1]):
            arcs.add((rng.choice(groups[a][1]), rng.choice(groups[b][0])))
        net = Net(places, transitions, sorted(arcs), name=f"random_{seed}")
    logger.debug(f"Generated {net!r} from seed {seed}")
    return net


def random_marking(net: Net, rng: random.Random, max_tokens: int = 2) -> Marking:
    return Marking.of(net, [rng.randint(0, max_tokens) for _ in net.places])


def random_execution(net: Net, m: Marking, steps: int, rng: random.Random) -> Tuple[List[str], List[Marking]]:
    """Fire random enabled transitions until stuck or steps are used up

    Returns:
        The fired sequence and the markings visited, starting with m
    """
    sequence: List[str] = []
    visited = [m]
    index = net.place_index
    deltas = {t: effect(net, t) for t in net.transitions}
    current = list(m.tokens)
    for _ in range(steps):
        marking = Marking(m.places, tuple(current))
        options = [t for t in net.transitions if enabled(net, marking, t)]
        if not options:
            break
        t = rng.choice(options)
        for p, change in deltas[t].items():
            current[index[p]] += change
        sequence.append(t)
        visited.append(Marking(m.places, tuple(current)))
    return sequence, visited
