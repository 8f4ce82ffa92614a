"""
Net Factory class for the fixture corpus and generated nets
"""
from typing import List

from loguru import logger

from config.config import Config
from netio.parser import NetDocument, load
from oracle.generator import random_fc_net
from petri.net import Net


class NetFactory:
    """Factory class to create nets for analyses and tests"""

    @staticmethod
    def get_fixture(fixture_name: str) -> NetDocument:
        """Load a shipped fixture by name

        Args:
            fixture_name: Key of Config.FIXTURES (e.g. "fig3")

        Returns:
            The parsed document

        Raises:
            ValueError: If the fixture name is unknown
        """
        try:
            file_name = Config.FIXTURES[fixture_name.lower()]
        except KeyError:
            raise ValueError(f"Invalid fixture name: {fixture_name}") from None
        return load(Config.FIXTURE_DIR / file_name)

    @staticmethod
    def fixture_names() -> List[str]:
        return list(Config.FIXTURES)

    @staticmethod
    def get_random(seed: int, clusters: int = Config.RANDOM_NET_CLUSTERS,
                   max_cluster_size: int = Config.RANDOM_NET_SIZE) -> Net:
        """Generated strongly connected free-choice net for a seed"""
        return random_fc_net(seed, clusters, max_cluster_size)

    @staticmethod
    def get_random_corpus(count: int = Config.RANDOM_NET_COUNT, clusters: int = Config.RANDOM_NET_CLUSTERS,
                          max_cluster_size: int = Config.RANDOM_NET_SIZE) -> List[Net]:
        """Nets for seeds 0..count-1, cluster count cycling through 1..clusters"""
        nets = [random_fc_net(seed, 1 + seed % clusters, max_cluster_size) for seed in range(count)]
        logger.debug(f"Built random corpus of {len(nets)} net(s)")
        return nets
