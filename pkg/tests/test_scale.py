import random
import time

import pytest

from heptacol.Engine.engine_c7 import colour_blownup_c7
from heptacol.Engine.engine_solver import Status, solve, verify_colouring
from heptacol.Recognition.recog_cycles import shortest_odd_cycle
from heptacol.Recognition.recog_twins import recognize_blownup_c7
from heptacol.TestKit.kit_generators import GenSpec, generate
from heptacol.TestKit.kit_oracle import oracle_solve
from heptacol.aux.helpers import FULL_MASK

pytestmark = pytest.mark.slow


def _solved_in(graph, lists, seconds):
    start = time.perf_counter()
    outcome = solve(graph, lists)
    assert time.perf_counter() - start < seconds
    return outcome


def test_blownup_c5_of_two_thousand_vertices():
    graph, _ = generate(GenSpec("blownup_c5", (400,) * 5))
    assert graph.n == 2000
    outcome = _solved_in(graph, None, 5)
    assert outcome.status is Status.SAT
    assert outcome.stats.fallback_used == 0
    assert verify_colouring(graph, None, outcome.colouring)


def test_blownup_c7_of_seven_hundred_vertices():
    graph, _ = generate(GenSpec("blownup_c7", (100,) * 7))
    outcome = _solved_in(graph, None, 5)
    assert outcome.status is Status.SAT
    assert verify_colouring(graph, None, outcome.colouring)


@pytest.mark.parametrize("seed", range(5))
def test_listed_blowup_matches_oracle(seed):
    graph, lists = generate(GenSpec("blownup_c5", (8,) * 5, seed=seed, list_prob=0.3))
    outcome = solve(graph, lists, mode="verify")
    expected = oracle_solve(graph, lists)
    assert outcome.status is (Status.UNSAT if expected is None else Status.SAT)


def _decompose(graph):
    dec = recognize_blownup_c7(graph, shortest_odd_cycle(graph))
    assert len(dec.classes) == 7
    return dec


def _colour_sets_exist(dec, masks):
    # pairwise-disjoint consecutive colour sets, each meeting every list of its class
    options = [[s for s in range(1, FULL_MASK + 1) if all(masks[v] & s for v in cls)] for cls in dec.classes]

    def extend(chosen):
        if len(chosen) == 7:
            return not chosen[-1] & chosen[0]
        return any(extend(chosen + [s]) for s in options[len(chosen)] if not chosen or not s & chosen[-1])

    return extend([])


@pytest.mark.parametrize("seed", range(12))
def test_small_listed_c7_blowups_match_oracle(seed):
    rng = random.Random(seed)
    sizes = tuple(rng.randint(1, 5) for _ in range(7))
    graph, lists = generate(GenSpec("blownup_c7", sizes, seed=seed, list_prob=rng.choice((0.1, 0.3, 0.6))))
    assert graph.n <= 40
    colours = colour_blownup_c7(_decompose(graph), lists or [FULL_MASK] * graph.n)
    expected = oracle_solve(graph, lists)
    assert (colours is None) == (expected is None)
    assert solve(graph, lists).status is (Status.UNSAT if expected is None else Status.SAT)


@pytest.mark.parametrize("seed", range(6))
def test_large_listed_c7_blowups(seed):
    rng = random.Random(seed)
    sizes = tuple(rng.randint(1, 100) for _ in range(7))
    graph, lists = generate(GenSpec("blownup_c7", sizes, seed=seed, list_prob=rng.choice((0.0, 0.005, 0.02))))
    masks = lists or [FULL_MASK] * graph.n
    dec = _decompose(graph)
    colours = colour_blownup_c7(dec, masks)
    assert (colours is not None) == _colour_sets_exist(dec, masks)
    if lists is None:
        assert colours is not None
    if colours is not None:
        assert verify_colouring(graph, lists, [colours[v] for v in range(graph.n)])
