import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from heptacol.Engine import engine_solver
from heptacol.Engine.engine_branches import (BranchDescriptor, DCase, TCase, apply_branch, branch_count,
                                             enumerate_branches)
from heptacol.Engine.engine_c7 import colour_blownup_c7
from heptacol.Engine.engine_lists import ListState, eliminate_safe, propagate
from heptacol.Engine.engine_palette import enumerate_c5_colourings, palette_analysis
from heptacol.Engine.engine_reduce import decode_assignment, residual_to_2sat
from heptacol.Engine.engine_solver import Status, solve, verify_colouring
from heptacol.GraphCore.graph_basic import build_graph
from heptacol.Recognition.recog_forbidden import ViolationKind, check_promise
from heptacol.Recognition.recog_twins import recognize_blownup_c7
from heptacol.Sat2.sat_instance import solve_2sat
from heptacol.Skeleton.skel_build import build_skeleton
from heptacol.Skeleton.skel_chain import build_chain
from heptacol.TestKit.kit_named import cycle, grotzsch, path, petersen
from heptacol.TestKit.kit_oracle import enumerate_colourings, oracle_solve
from heptacol.aux.exceptions import Conflict, InternalInvariantError, PreconditionBreach
from heptacol.aux.helpers import FULL_MASK, bit, mask_of
from heptacol.aux.settings import SolverSettings

from .builders import c5_with
from .strategies import promise_instances, small_skeleton_instances

ANCHOR = (0, 1, 2, 3, 4)
EDGE = build_graph(2, [(0, 1)])


# cycle colourings and palettes

def test_thirty_colourings_of_the_cycle():
    cols = enumerate_c5_colourings([FULL_MASK] * 5)
    assert len(cols) == 30
    assert cols[0] == (1, 2, 1, 2, 3)
    assert cols == sorted(cols)


def test_cycle_colourings_respect_masks():
    assert enumerate_c5_colourings([bit(c) for c in (1, 2, 1, 2, 3)]) == [(1, 2, 1, 2, 3)]
    assert enumerate_c5_colourings([bit(1), bit(1), FULL_MASK, FULL_MASK, FULL_MASK]) == []


def test_palette_of_12123():
    p = palette_analysis((1, 2, 1, 2, 3))
    assert p.forced == {0: 1, 3: 2, 4: 3}
    assert p.options == {1: (2, 3), 2: (1, 3)}
    assert p.d_pairs == {0: (2, 3), 1: (1, 3), 2: (2, 3), 3: (1, 3), 4: (1, 2)}
    assert p.undetermined == (1, 2)
    assert p.free_d == (0, 3, 4)
    assert p.q == 3
    assert p.t_mask(1) == mask_of([2, 3])
    assert p.d_mask(4) == mask_of([1, 2])


def test_palette_follows_colour_permutation():
    p = palette_analysis((2, 1, 2, 1, 3))
    assert p.forced == {0: 2, 3: 1, 4: 3}
    assert p.options == {1: (1, 3), 2: (2, 3)}


def test_palette_of_23231():
    p = palette_analysis((2, 3, 2, 3, 1))
    assert p.undetermined == (1, 2)
    assert p.q == 1


def test_palette_rejects_improper_colouring():
    with pytest.raises(ValueError):
        palette_analysis((1, 1, 2, 1, 2))


@pytest.mark.parametrize("col", enumerate_c5_colourings([FULL_MASK] * 5))
def test_every_palette_is_consistent(col):
    p = palette_analysis(col)
    assert len(p.undetermined) == 2
    assert (p.undetermined[1] - p.undetermined[0]) % 5 in (1, 4)
    for i, (a, b) in p.options.items():
        assert b == p.q and a not in (col[(i - 1) % 5], p.q)
    for i, c in p.forced.items():
        assert c not in (col[(i - 1) % 5], col[(i + 1) % 5])


# branches

@pytest.fixture
def t_and_d():
    """T_1 = {5, 6, 7} and D_4 = {8, 9}."""
    g = c5_with([0, 2], [0, 2], [0, 2], [4], [4])
    sk = build_skeleton(g, ANCHOR)
    return g, sk, {1: build_chain(g, sk, 1)}


def test_enumerated_branches(t_and_d):
    _, sk, chains = t_and_d
    branches = list(enumerate_branches(sk, chains, (1, 2, 1, 2, 3)))
    assert len(branches) == 24 == branch_count(sk, chains, (1, 2, 1, 2, 3))
    assert branches[0] == BranchDescriptor((1, 2, 1, 2, 3), (TCase(1, "c"),), (DCase(4, "g"),))
    assert branches[-1] == BranchDescriptor((1, 2, 1, 2, 3), (TCase(1, "b", 0, 7),), (DCase(4, "f", 9),))
    assert branches[0].label() == "C=12123 T2:c D5:g"
    assert len(set(branches)) == 24


def test_bare_cycle_has_one_branch(c5):
    sk = build_skeleton(c5, ANCHOR)
    for col in enumerate_c5_colourings([FULL_MASK] * 5):
        assert branch_count(sk, {}, col) == 1
        (branch,) = enumerate_branches(sk, {}, col)
        assert branch.t_cases == () and branch.d_cases == ()


def test_t_set_of_three_without_components():
    g = c5_with([0, 2], [0, 2], [0, 2])
    sk = build_skeleton(g, ANCHOR)
    chains = {1: build_chain(g, sk, 1)}
    assert branch_count(sk, chains, (1, 2, 1, 2, 3)) == 6
    tags = [b.t_cases[0].tag for b in enumerate_branches(sk, chains, (1, 2, 1, 2, 3))]
    assert tags == ["c", "d", "a", "a", "b", "b"]


def test_single_free_d_vertex():
    g = c5_with([4])
    sk = build_skeleton(g, ANCHOR)
    branches = list(enumerate_branches(sk, {}, (1, 2, 1, 2, 3)))
    assert [b.d_cases[0].tag for b in branches] == ["g", "h"]


def test_apply_case_c(t_and_d):
    g, sk, chains = t_and_d
    state = ListState([FULL_MASK] * g.n)
    apply_branch(state, BranchDescriptor((1, 2, 1, 2, 3), (TCase(1, "c"),), ()), sk, chains)
    assert [state.masks[v] for v in (5, 6, 7)] == [bit(2)] * 3


def test_apply_cases_a_and_e(t_and_d):
    g, sk, chains = t_and_d
    state = ListState([FULL_MASK] * g.n)
    branch = BranchDescriptor((1, 2, 1, 2, 3), (TCase(1, "a", 0, 6),), (DCase(4, "e", 9),))
    apply_branch(state, branch, sk, chains)
    assert state.masks == [bit(1), bit(2), bit(1), bit(2), bit(3),
                           bit(2), bit(3), mask_of([2, 3]), bit(1), bit(2)]


def test_apply_branch_conflicts_with_lists(t_and_d):
    g, sk, chains = t_and_d
    masks = [FULL_MASK] * g.n
    masks[5] = mask_of([1, 3])
    with pytest.raises(Conflict):
        apply_branch(ListState(masks), BranchDescriptor((1, 2, 1, 2, 3), (TCase(1, "c"),), ()), sk, chains)


# propagation and safe elimination

def test_propagate_removes_assigned_colour():
    state = propagate(EDGE, ListState([bit(1), mask_of([1, 2])]))
    assert state.masks == [bit(1), bit(2)]
    assert state.assigned == {0: 1, 1: 2}


def test_propagate_conflict():
    with pytest.raises(Conflict):
        propagate(EDGE, ListState([bit(1), bit(1)]))


def test_propagate_on_cycle(c5):
    initial = [FULL_MASK] * 4 + [bit(3)]
    state = propagate(c5, ListState(initial))
    assert state.masks == [mask_of([1, 2]), FULL_MASK, FULL_MASK, mask_of([1, 2]), bit(3)]
    assert ListState.replay(initial, state.trail) == state.masks


def test_safe_elimination():
    star = build_graph(3, [(0, 1), (0, 2)])
    state = ListState([FULL_MASK, mask_of([1, 2]), mask_of([1, 2])])
    assert eliminate_safe(star, state) == [(0, 3)]

    state = ListState([FULL_MASK])
    assert eliminate_safe(build_graph(1, []), state) == [(0, 1)]

    state = ListState([FULL_MASK, mask_of([1, 2]), mask_of([2, 3])])
    assert eliminate_safe(star, state) == []
    assert state.masks[0] == FULL_MASK


def test_list_state_rejects_empty_mask():
    with pytest.raises(ValueError):
        ListState([0])


# 2-SAT reduction

def test_reduce_equal_pairs():
    inst, var_map = residual_to_2sat(ListState([mask_of([1, 2])] * 2), EDGE)
    assert var_map == [0, 1]
    assert inst.clauses == [(1, 3), (0, 2)]
    model = solve_2sat(inst)
    colouring = decode_assignment(ListState([mask_of([1, 2])] * 2), var_map, model)
    assert sorted(colouring) == [1, 2]


def test_reduce_shared_colour():
    inst, _ = residual_to_2sat(ListState([mask_of([1, 2]), mask_of([2, 3])]), EDGE)
    assert inst.clauses == [(0, 3)]


def test_reduce_without_free_vertices():
    inst, var_map = residual_to_2sat(ListState([bit(1), bit(2)]), EDGE)
    assert inst.var_count == 0 and inst.clauses == [] and var_map == []
    assert solve_2sat(inst) == []


def test_reduce_rejects_full_list():
    with pytest.raises(PreconditionBreach):
        residual_to_2sat(ListState([FULL_MASK]), build_graph(1, []))


def test_reduce_requires_propagated_lists():
    with pytest.raises(InternalInvariantError):
        residual_to_2sat(ListState([bit(1), mask_of([1, 2])]), EDGE)


# blown-up C7

def _c7_decomposition():
    return recognize_blownup_c7(cycle(7), tuple(range(7)))


def test_c7_full_lists():
    colours = colour_blownup_c7(_c7_decomposition(), [FULL_MASK] * 7)
    assert [colours[v] for v in range(7)] == [1, 2, 1, 2, 1, 2, 3]


def test_c7_with_fixed_class():
    masks = [bit(3)] + [FULL_MASK] * 6
    colours = colour_blownup_c7(_c7_decomposition(), masks)
    assert colours is not None
    assert verify_colouring(cycle(7), masks, [colours[v] for v in range(7)])


def test_c7_adjacent_classes_on_one_colour():
    masks = [bit(1), bit(1)] + [FULL_MASK] * 5
    assert colour_blownup_c7(_c7_decomposition(), masks) is None


# solve

def test_solve_cycle(c5):
    outcome = solve(c5)
    assert outcome.status is Status.SAT
    assert outcome.colouring == (1, 2, 1, 2, 3)
    assert outcome.stats.c5_colourings == 1
    assert outcome.stats.branches == 1
    assert outcome.stats.sat_instances == 1
    assert outcome.stats.as_dict(timing=False)["branches_survived"] == 1


def test_solve_cycle_with_two_colours(c5):
    assert solve(c5, [mask_of([1, 2])] * 5).status is Status.UNSAT


@pytest.mark.parametrize("mode", ["trust", "verify"])
def test_solve_triangle(k3, mode):
    outcome = solve(k3, mode=mode)
    assert outcome.status is Status.INVALID
    assert outcome.violation.kind is ViolationKind.TRIANGLE
    assert outcome.violation.vertices == (0, 1, 2)


def test_solve_path_depends_on_mode():
    assert solve(path(7)).status is Status.SAT
    outcome = solve(path(7), mode="verify")
    assert outcome.status is Status.INVALID
    assert outcome.violation.kind is ViolationKind.INDUCED_P7


def test_solve_long_odd_cycle():
    g = cycle(9)
    outcome = solve(g)
    assert outcome.status is Status.INVALID
    assert outcome.violation.kind is ViolationKind.INDUCED_P7
    assert outcome.violation.verify(g)


def test_solve_seven_cycle():
    g = cycle(7)
    outcome = solve(g)
    assert outcome.status is Status.SAT
    assert verify_colouring(g, None, outcome.colouring)


def test_solve_disconnected_graph():
    g = build_graph(8, [(i, (i + 1) % 5) for i in range(5)] + [(5, 6)])
    outcome = solve(g, [FULL_MASK] * 7 + [bit(2)])
    assert outcome.status is Status.SAT
    assert outcome.colouring[7] == 2
    assert verify_colouring(g, None, outcome.colouring)


def test_violation_in_second_component_uses_global_ids():
    g = build_graph(8, [(0, 1), (2, 3), (3, 4), (2, 4)])
    outcome = solve(g)
    assert outcome.violation.vertices == (2, 3, 4)


def test_bipartite_with_lists_needs_no_fallback():
    outcome = solve(path(3), [bit(1), FULL_MASK, FULL_MASK])
    assert outcome.colouring == (1, 2, 1)
    assert outcome.stats.fallback_used == 0


def test_bipartite_fallback():
    masks = [mask_of([1, 2]), FULL_MASK, FULL_MASK, FULL_MASK]
    outcome = solve(cycle(4), masks)
    assert outcome.status is Status.SAT
    assert outcome.stats.fallback_used == 1
    assert verify_colouring(cycle(4), masks, outcome.colouring)


def test_grotzsch_graph():
    g = grotzsch()
    assert oracle_solve(g) is None
    if check_promise(g) is None:
        assert solve(g).status is Status.UNSAT
    else:
        assert solve(g, mode="verify").status is Status.INVALID


def test_petersen_graph():
    g = petersen()
    assert oracle_solve(g) is not None
    outcome = solve(g, mode="verify")
    if check_promise(g) is None:
        assert outcome.status is Status.SAT
        assert verify_colouring(g, None, outcome.colouring)
    else:
        assert outcome.status is Status.INVALID


def test_solve_rejects_bad_lists(c5):
    with pytest.raises(ValueError):
        solve(c5, [FULL_MASK] * 4)
    with pytest.raises(ValueError):
        solve(c5, [0] + [FULL_MASK] * 4)


def test_failed_assertion_in_trust_and_verify_mode(c5, monkeypatch):
    def broken(*args):
        raise InternalInvariantError("forced failure")

    monkeypatch.setattr(engine_solver, "_solve_component", broken)
    outcome = solve(c5)
    assert outcome.status is Status.INVALID
    assert outcome.violation.kind is ViolationKind.STRUCTURE_BREACH
    assert outcome.violation.note == "forced failure"
    with pytest.raises(InternalInvariantError):
        solve(c5, mode="verify")


def test_verify_colouring(c5):
    assert verify_colouring(c5, None, (1, 2, 1, 2, 3))
    assert not verify_colouring(c5, None, (1, 1, 2, 1, 2))
    assert not verify_colouring(c5, [bit(2)] * 5, (1, 2, 1, 2, 3))
    assert not verify_colouring(c5, None, (1, 2, 1, 2))


@given(promise_instances())
def test_solver_matches_oracle(instance):
    g, lists = instance
    outcome = solve(g, lists, mode="verify")
    expected = oracle_solve(g, lists)
    assert outcome.status is (Status.UNSAT if expected is None else Status.SAT)
    if outcome.is_sat:
        assert verify_colouring(g, lists, outcome.colouring)


@given(promise_instances(), st.data())
def test_decision_survives_relabelling(instance, data):
    g, lists = instance
    perm = data.draw(st.permutations(range(g.n)))
    h = build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    moved = None
    if lists is not None:
        moved = [0] * g.n
        for v, m in enumerate(lists):
            moved[perm[v]] = m
    assert solve(g, lists).status is solve(h, moved).status


@given(promise_instances())
def test_parallel_run_matches_sequential(instance):
    g, lists = instance
    one = solve(g, lists)
    many = solve(g, lists, settings=SolverSettings(parallel=3))
    debug = solve(g, lists, settings=SolverSettings(debug=True))
    assert one.status is many.status is debug.status
    assert one.colouring == many.colouring == debug.colouring
    assert one.stats.as_dict(timing=False) == many.stats.as_dict(timing=False)


def _agrees(masks, branch, sk, chains, colouring):
    state = ListState(masks)
    try:
        apply_branch(state, branch, sk, chains)
    except Conflict:
        return False
    return all(state.masks[v] & bit(c) for v, c in enumerate(colouring))


@given(small_skeleton_instances())
def test_every_colouring_agrees_with_some_branch(instance):
    g, lists = instance
    assume(g.n <= 14)
    sk = build_skeleton(g, ANCHOR)
    masks = [FULL_MASK] * g.n if lists is None else lists
    for colouring in enumerate_colourings(g, lists)[:60]:
        col = tuple(colouring[v] for v in ANCHOR)
        palette = palette_analysis(col)
        chains = {i: build_chain(g, sk, i) for i in palette.undetermined if sk.T[i]}
        assert any(_agrees(masks, b, sk, chains, colouring) for b in enumerate_branches(sk, chains, col))


@given(small_skeleton_instances())
def test_branch_count_matches_enumeration(instance):
    g, _ = instance
    sk = build_skeleton(g, ANCHOR)
    for col in enumerate_c5_colourings([FULL_MASK] * 5)[:6]:
        palette = palette_analysis(col)
        chains = {i: build_chain(g, sk, i) for i in palette.undetermined if sk.T[i]}
        assert branch_count(sk, chains, col) == sum(1 for _ in enumerate_branches(sk, chains, col))
