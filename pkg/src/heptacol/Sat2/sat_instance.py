"""2-SAT instances and a linear-time solver.

Literals are encoded as 2*v for the positive literal of variable v and
2*v + 1 for its negation. The solver builds the implication graph (both
contrapositive arcs per clause), finds its strongly connected components
with an iterative Tarjan search and reads an assignment off the
component order.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..aux.exceptions import ClauseOutOfRange

LOG = logging.getLogger(__name__)


def lit(var: int, positive: bool = True) -> int:
    return 2 * var + (0 if positive else 1)


def neg(literal: int) -> int:
    return literal ^ 1


def lit_var(literal: int) -> int:
    return literal >> 1


def lit_value(literal: int, assignment: List[bool]) -> bool:
    value = assignment[literal >> 1]
    return value if literal & 1 == 0 else not value


@dataclass
class TwoSatInstance:
    var_count: int
    clauses: List[Tuple[int, int]] = field(default_factory=list)

    def add_clause(self, lit1: int, lit2: int) -> "TwoSatInstance":
        """
        Append the clause (lit1 or lit2); duplicates are kept.

        Raises:
            ClauseOutOfRange: a literal names a variable >= var_count
        """
        for x in (lit1, lit2):
            if not 0 <= x < 2 * self.var_count:
                raise ClauseOutOfRange(f"literal {x} outside {self.var_count} variables")
        self.clauses.append((lit1, lit2))
        return self

    def satisfied_by(self, assignment: List[bool]) -> bool:
        return all(lit_value(a, assignment) or lit_value(b, assignment) for a, b in self.clauses)


def add_clause(inst: TwoSatInstance, lit1: int, lit2: int) -> TwoSatInstance:
    return inst.add_clause(lit1, lit2)


def _tarjan(size: int, succ: List[List[int]]) -> List[int]:
    """
    Component id of every node; ids are assigned in completion order, so a
    component only reaches components with smaller ids.
    """
    index = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    comp = [-1] * size
    stack = []
    counter = 0
    comp_count = 0
    for root in range(size):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
    return comp


def solve_2sat(inst: TwoSatInstance) -> Optional[List[bool]]:
    """
    Return a satisfying assignment (one bool per variable) or None.

    A variable is set true when its positive literal's component comes
    earlier in completion order than its negation's.
    """
    size = 2 * inst.var_count
    succ: List[List[int]] = [[] for _ in range(size)]
    for a, b in inst.clauses:
        succ[a ^ 1].append(b)
        succ[b ^ 1].append(a)
    comp = _tarjan(size, succ)
    assignment = []
    for v in range(inst.var_count):
        p, q = comp[2 * v], comp[2 * v + 1]
        if p == q:
            LOG.debug("2-SAT unsatisfiable at variable %d", v)
            return None
        assignment.append(p < q)
    if not inst.satisfied_by(assignment):
        raise AssertionError("2-SAT assignment violates a clause")
    return assignment
