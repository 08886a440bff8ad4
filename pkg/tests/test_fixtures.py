"""Fixture colorings: frozen edge lists and the registry."""

import pytest

from homrec.coloring import boolean_sum
from homrec.errors import FixtureError
from homrec.fixtures import (
    fig_critical_cycle,
    fig_critical_cycle_pair,
    fig_critical_pair,
    fig_homsum,
    fig_homsum_pair,
    fig_no_critical_pair,
    fig_two_cycles,
    parse_fixture,
    partition_coloring,
    random_coloring,
)


def test_partition_edges():
    ones = set(partition_coloring(6).ones())
    assert ones == {(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)}


def test_fig_critical_pair_edges():
    ones = set(fig_critical_pair().ones())
    assert ones == {(0, 2), (0, 4), (1, 3), (1, 5)}


def test_fig_critical_cycle_edges():
    ones = set(fig_critical_cycle().ones())
    assert ones == {(0, 1), (1, 3), (2, 3), (0, 4), (2, 4), (1, 5), (3, 5)}


def test_fig_critical_cycle_pair_differs_on_cycle():
    phi, psi = fig_critical_cycle_pair()
    assert set(boolean_sum(phi, psi).ones()) == {(0, 1), (1, 2), (2, 3), (0, 3)}


def test_fig_no_critical_pair_edges():
    ones = set(fig_no_critical_pair(6).ones())
    assert ones == {
        (0, 3), (1, 3), (1, 2),
        (0, 4), (2, 4), (0, 5), (2, 5), (4, 5),
    }
    assert set(fig_no_critical_pair(4).ones()) == {(0, 3), (1, 3), (1, 2)}
    with pytest.raises(FixtureError):
        fig_no_critical_pair(7)


def test_fig_homsum_edges():
    phi, psi = fig_homsum_pair()
    assert phi == fig_homsum()
    assert set(phi.ones()) == {(0, 1), (0, 2), (1, 2), (2, 3), (1, 4)}
    assert set(psi.ones()) == {(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)}


def test_fig_two_cycles_edges():
    ones = set(fig_two_cycles().ones())
    assert len(ones) == 14
    assert {(0, 1), (1, 3), (2, 3), (4, 5), (4, 6), (6, 7)} <= ones


def test_random_coloring_deterministic():
    a = random_coloring(6, 0.5, 42)
    b = random_coloring(6, 0.5, 42)
    assert a == b
    assert random_coloring(6, 0.5, 43) != a
    assert random_coloring(6, 0.0, 1).bits == 0
    assert random_coloring(6, 1.0, 1).bits == (1 << 15) - 1
    with pytest.raises(FixtureError):
        random_coloring(6, 1.5, 1)


def test_parse_fixture_single_and_pair():
    fx = parse_fixture("partition(6)")
    assert not fx.is_pair and fx.phi == partition_coloring(6)
    fx = parse_fixture("path-pair(6,1,0)")
    assert fx.is_pair
    payload = fx.payload()
    assert set(payload) == {"n", "phi", "psi", "sum"}
    fx = parse_fixture("alpha(9,1)")
    assert fx.phi.get(0, 1) == 1
    fx = parse_fixture("random(6,0.5,42)")
    assert fx.phi == random_coloring(6, 0.5, 42)
    fx = parse_fixture("fig-no-critical-pair")
    assert fx.phi.n == 6


def test_parse_fixture_rejects_garbage():
    for bad in ("nope", "partition", "partition(a)", "partition(6", "random(6,0.5)"):
        with pytest.raises(FixtureError):
            parse_fixture(bad)
