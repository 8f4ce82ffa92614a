"""
Fixtures providing the shipped nets and the generated corpus
"""
from typing import Dict, List

import pytest
from loguru import logger

from config.config import Config
from factories.net_factory import NetFactory
from netio.parser import NetDocument
from petri.free_choice import clusters
from petri.net import Net


@pytest.fixture(scope="session")
def documents() -> Dict[str, NetDocument]:
    """Every shipped fixture document keyed by name"""
    loaded = {name: NetFactory.get_fixture(name) for name in NetFactory.fixture_names()}
    logger.info(f"Loaded {len(loaded)} fixture document(s)")
    return loaded


@pytest.fixture(scope="session")
def cycle1(documents) -> Net:
    return documents["cycle1"].net


@pytest.fixture(scope="session")
def fig1(documents) -> Net:
    return documents["fig1"].net


@pytest.fixture(scope="session")
def fig1_split(documents) -> Net:
    return documents["fig1_split"].net


@pytest.fixture(scope="session")
def fig3(documents) -> Net:
    return documents["fig3"].net


@pytest.fixture(scope="session")
def fcchoice(documents) -> Net:
    return documents["fcchoice"].net


@pytest.fixture(scope="session")
def fig2net(documents) -> Net:
    return documents["fig2net"].net


@pytest.fixture(scope="session")
def free_choice_fixtures(documents) -> List[Net]:
    """Shipped nets that are free-choice and strongly connected"""
    return [documents[name].net for name in ("cycle1", "fig3", "fcchoice", "fig2net")]


@pytest.fixture(scope="session")
def random_corpus(random_net_count) -> List[Net]:
    """Generated strongly connected free-choice nets, seeds 0..count-1"""
    return NetFactory.get_random_corpus(random_net_count)


@pytest.fixture(scope="session")
def small_corpus(random_corpus) -> List[Net]:
    """Corpus nets small enough for allocation enumeration"""
    nets = [net for net in random_corpus if len(clusters(net)) <= Config.TEST_BRUTE_CLUSTERS]
    logger.info(f"{len(nets)} of {len(random_corpus)} generated net(s) have at most "
                f"{Config.TEST_BRUTE_CLUSTERS} clusters")
    return nets


@pytest.fixture(scope="session")
def tiny_corpus(random_corpus) -> List[Net]:
    """Corpus nets small enough for exhaustive subset classification"""
    return [net for net in random_corpus if len(net.nodes) <= Config.TEST_SUBSET_NODES]
