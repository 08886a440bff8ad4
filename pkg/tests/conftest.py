import pytest

from homrec.coloring import Coloring
from homrec.fixtures import (
    fig_critical_cycle,
    fig_critical_cycle_pair,
    fig_critical_pair,
    fig_homsum_pair,
    fig_no_critical_pair,
    fig_two_cycles,
    partition_coloring,
)


@pytest.fixture
def homsum_pair() -> tuple[Coloring, Coloring]:
    return fig_homsum_pair()


@pytest.fixture
def critical_cycle_coloring() -> Coloring:
    return fig_critical_cycle()


@pytest.fixture
def critical_cycle_pair() -> tuple[Coloring, Coloring]:
    return fig_critical_cycle_pair()


@pytest.fixture
def no_critical_pair6() -> Coloring:
    return fig_no_critical_pair(6)


@pytest.fixture
def two_cycles() -> Coloring:
    return fig_two_cycles()


@pytest.fixture
def pcrit() -> Coloring:
    return fig_critical_pair()


@pytest.fixture
def partition6() -> Coloring:
    return partition_coloring(6)
