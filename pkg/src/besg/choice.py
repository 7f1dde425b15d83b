"""Choice functions and the lasso solver for degenerate structure graphs.

A bullet-choice function picks one successor for every bullet-decorated
vertex that has any; applying it keeps a single outgoing edge there and
strips the bullet decoration.  On normalised BESsy graphs void of one of the
two connectives, the solution of the associated equation system is decided
by lassoes: reachable cycles classified by the parity of their maximum rank,
and maximal finite paths by the constant they end in.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import PreconditionError
from .sgraph import (Dec, StructureGraph, id_key, is_bessy, is_normalised,
                     reachable)


@dataclass(frozen=True)
class ChoiceFunction:
    bullet: Dec
    mapping: Mapping[str, str]

    def __post_init__(self):
        if self.bullet not in (Dec.AND, Dec.OR):
            raise PreconditionError("choice bullet must be the and/or decoration")


def choice_domain(sg: StructureGraph, bullet: Dec) -> list[str]:
    return [v for v in sg.vertices if sg.dec.get(v) is bullet and sg.has_successor(v)]


def validate_choice(sg: StructureGraph, gamma: ChoiceFunction) -> None:
    dom = set(choice_domain(sg, gamma.bullet))
    if set(gamma.mapping) != dom:
        raise PreconditionError("choice domain must be exactly the decorated vertices with successors")
    for u, w in gamma.mapping.items():
        if w not in sg.successors(u):
            raise PreconditionError(f"choice image {w!r} is not a successor of {u!r}")


def apply_choice(sg: StructureGraph, gamma: ChoiceFunction) -> StructureGraph:
    """Keep only the chosen edge at each vertex in the choice's domain and
    drop the bullet decoration everywhere; ranks and free variables stay."""
    validate_choice(sg, gamma)
    succ = {u: ((gamma.mapping[u],) if u in gamma.mapping else vs)
            for u, vs in sg.succ.items()}
    dec = {v: d for v, d in sg.dec.items() if d is not gamma.bullet}
    return StructureGraph(sg.vertices, sg.root, succ, dec, dict(sg.rank), dict(sg.fv))


def enumerate_choices(sg: StructureGraph, bullet: Dec) -> Iterator[ChoiceFunction]:
    """All bullet-choice functions, in the deterministic order given by
    vertex ids and successor ids."""
    dom = sorted(choice_domain(sg, bullet), key=id_key)
    pools = [sg.successors(v) for v in dom]
    for picks in itertools.product(*pools):
        yield ChoiceFunction(bullet, dict(zip(dom, picks)))


@dataclass(frozen=True)
class Lasso:
    """Path t_0 .. t_n with t_n = t_{cycle_start}; consecutive vertices are
    edge-related."""

    vertices: tuple[str, ...]
    cycle_start: int

    def __post_init__(self):
        if not (0 <= self.cycle_start < len(self.vertices)):
            raise PreconditionError("cycle start out of range")
        if self.vertices[-1] != self.vertices[self.cycle_start]:
            raise PreconditionError("lasso must close its cycle")

    def cycle(self) -> tuple[str, ...]:
        return self.vertices[self.cycle_start:]

    def validate(self, sg: StructureGraph) -> None:
        for a, b in zip(self.vertices, self.vertices[1:]):
            if b not in sg.successors(a):
                raise PreconditionError(f"no edge {a!r} -> {b!r}")


def _scc_partition(vertices, succ) -> list[list[str]]:
    # Iterative Tarjan.
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    sccs: list[list[str]] = []
    counter = itertools.count()

    for start in vertices:
        if start in index:
            continue
        work = [(start, iter(succ(start)))]
        index[start] = low[start] = next(counter)
        stack.append(start)
        on_stack.add(start)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.remove(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


def _path(sg: StructureGraph, start: str, goal, within=None) -> list[str] | None:
    # BFS path from start to the first vertex satisfying goal.
    seen = {start}
    queue = [[start]]
    while queue:
        path = queue.pop(0)
        v = path[-1]
        if goal(v):
            return path
        for w in sorted(sg.successors(v), key=id_key):
            if w in seen or (within is not None and w not in within):
                continue
            seen.add(w)
            queue.append(path + [w])
    return None


def find_dominated_lasso(sg: StructureGraph, even: bool) -> Lasso | None:
    """A lasso from the root whose cycle's maximum rank has the requested
    parity, or None.  Assumes every vertex on a cycle is ranked (true of
    normalised graphs).  Only the cycle part matters for domination, so any
    reachable qualifying cycle will do: for each candidate rank r of the
    right parity, look for a cycle inside the sub-graph of ranks at most r
    passing through a rank-r vertex."""
    reach = reachable(sg)
    want = 0 if even else 1
    ranks = sorted({r for v, r in sg.rank.items() if v in reach and r % 2 == want},
                   reverse=True)
    for r in ranks:
        allowed = {v for v in reach if sg.rank.get(v, r + 1) <= r}
        inside = lambda v: (w for w in sg.successors(v) if w in allowed)
        for comp in _scc_partition(sorted(allowed, key=id_key), inside):
            comp_set = set(comp)
            nontrivial = len(comp) > 1 or comp[0] in sg.successors(comp[0])
            tops = [v for v in comp if sg.rank.get(v) == r]
            if not (nontrivial and tops):
                continue
            x = min(tops, key=id_key)
            stem = _path(sg, sg.root, lambda v: v == x)
            back = None
            for w in sorted(sg.successors(x), key=id_key):
                if w not in comp_set:
                    continue
                if w == x:
                    back = [x, x]
                    break
                tail = _path(sg, w, lambda v: v == x, within=comp_set)
                if tail is not None:
                    back = [x] + tail
                    break
            assert stem is not None and back is not None
            return Lasso(tuple(stem + back[1:]), len(stem) - 1)
    return None


def solve_lasso(sg: StructureGraph) -> bool:
    """Value of the root of a normalised BESsy structure graph without
    free-variable vertices that is conjunction-free or disjunction-free.

    Conjunction-free: true iff a lasso from the root is even-dominated or a
    maximal finite path ends in the top constant.  Disjunction-free is dual.
    """
    if not is_bessy(sg) or not is_normalised(sg):
        raise PreconditionError("solve_lasso needs a normalised BESsy graph")
    if sg.fv:
        raise PreconditionError("solve_lasso cannot handle free-variable vertices")
    decs = set(sg.dec.values())
    if Dec.AND in decs and Dec.OR in decs:
        raise PreconditionError("mixed graph")
    for v in reachable(sg):
        if not sg.has_successor(v) and sg.dec.get(v) not in (Dec.TOP, Dec.BOT):
            raise PreconditionError(f"dead end without a constant: {v!r}")

    reach = reachable(sg)
    if Dec.AND not in decs:
        if any(sg.dec.get(v) is Dec.TOP for v in reach):
            return True
        return find_dominated_lasso(sg, even=True) is not None
    if any(sg.dec.get(v) is Dec.BOT for v in reach):
        return False
    return find_dominated_lasso(sg, even=False) is None
