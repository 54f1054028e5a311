"""Shared fixtures: one zeta provider per session so its value cache
(and the in-process integral memo) is reused across every test module."""

import pytest

from jensenpoly.sequences import partition_provider, zeta_gamma_provider


@pytest.fixture(scope="session")
def zeta_cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("gamma-cache")


@pytest.fixture(scope="session")
def zeta_seq(zeta_cache_dir):
    return zeta_gamma_provider(zeta_cache_dir)


@pytest.fixture(scope="session")
def partition_seq():
    return partition_provider()
