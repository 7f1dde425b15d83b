"""Seeded random instance generators shared by the property suites and the
`besg check` runner.  Everything takes an explicit random.Random so runs are
reproducible from a seed.
"""

from __future__ import annotations

import random
from typing import Sequence

from .bes import And, Bes, Const, Equation, Or, PropFormula, Sign, Var
from .mucalc import (ActionSet, Box, Diamond, Fix, Lts, MAnd, MConst, MOr,
                     MVar, MuFormula, make_lts)
from .sgraph import Dec, StructureGraph, make_graph
from .sos import build
from .sgraph import normalise


def rand_formula(rng: random.Random, names: Sequence[str], depth: int = 4,
                 const_bias: float = 0.15) -> PropFormula:
    if depth <= 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < const_bias or not names:
            return Const(rng.random() < 0.5)
        return Var(rng.choice(names))
    op = And if rng.random() < 0.5 else Or
    return op(rand_formula(rng, names, depth - 1, const_bias),
              rand_formula(rng, names, depth - 1, const_bias))


def rand_bes(rng: random.Random, n_eq: int = 4, depth: int = 3,
             closed: bool = True, n_free: int = 2) -> Bes:
    bound = [f"V{i}" for i in range(n_eq)]
    names = bound if closed else bound + [f"F{i}" for i in range(n_free)]
    eqs = [Equation(rng.choice((Sign.MU, Sign.NU)), x, rand_formula(rng, names, depth))
           for x in bound]
    return Bes(tuple(eqs))


def rand_lts(rng: random.Random, max_states: int = 6, max_actions: int = 3,
             density: float = 0.35) -> Lts:
    n = rng.randint(1, max_states)
    k = rng.randint(1, max_actions)
    states = [f"s{i}" for i in range(n)]
    actions = ["a", "b", "c"][:k]
    transitions = {(s, a, t) for s in states for a in actions for t in states
                   if rng.random() < density}
    return make_lts(states, actions, transitions, states[0])


def rand_action_set(rng: random.Random, actions: Sequence[str]) -> ActionSet:
    k = rng.randint(1, len(actions))
    return ActionSet(frozenset(rng.sample(list(actions), k)),
                     complement=rng.random() < 0.3)


def rand_mu_formula(rng: random.Random, actions: Sequence[str],
                    max_fixpoints: int = 2, depth: int = 5) -> MuFormula:
    """Closed well-formed formula with a top-level fixpoint, at most
    ``max_fixpoints`` fixpoint operators in total."""
    counter = [0]

    def fresh() -> str:
        counter[0] += 1
        return f"Z{counter[0]}"

    def gen(d: int, bound: tuple[str, ...], budget: int) -> tuple[MuFormula, int]:
        if d <= 0:
            return leaf(bound), budget
        roll = rng.random()
        if roll < 0.22 and budget > 0:
            x = fresh()
            body, budget = gen(d - 1, bound + (x,), budget - 1)
            return Fix(rng.choice((Sign.MU, Sign.NU)), x, body), budget
        if roll < 0.42:
            body, budget = gen(d - 1, bound, budget)
            return Box(rand_action_set(rng, actions), body), budget
        if roll < 0.62:
            body, budget = gen(d - 1, bound, budget)
            return Diamond(rand_action_set(rng, actions), body), budget
        if roll < 0.92:
            l, budget = gen(d - 1, bound, budget)
            r, budget = gen(d - 1, bound, budget)
            return (MAnd(l, r) if rng.random() < 0.5 else MOr(l, r)), budget
        return leaf(bound), budget

    def leaf(bound: tuple[str, ...]) -> MuFormula:
        if bound and rng.random() < 0.7:
            return MVar(rng.choice(bound))
        return MConst(rng.random() < 0.5)

    x = fresh()
    body, _ = gen(depth - 1, (x,), max_fixpoints - 1)
    return Fix(rng.choice((Sign.MU, Sign.NU)), x, body)


def rand_normalised_closed_graph(rng: random.Random, max_vertices: int = 8,
                                 max_choices: int = 512,
                                 max_tries: int = 50) -> StructureGraph:
    """Normalised BESsy structure graph without free-variable vertices,
    obtained by building a random closed BES.  Bounded so that exhaustive
    choice-function enumeration stays cheap."""
    def n_choices(sg: StructureGraph, bullet: Dec) -> int:
        total = 1
        for v in sg.vertices:
            if sg.dec.get(v) is bullet and sg.has_successor(v):
                total *= len(sg.successors(v))
        return total

    for _ in range(max_tries):
        system = rand_bes(rng, n_eq=rng.randint(1, 3), depth=2, closed=True)
        root = Var(system.equations[0].lhs)
        sg = normalise(build(system, root))
        if (sg.n_vertices <= max_vertices
                and n_choices(sg, Dec.AND) <= max_choices
                and n_choices(sg, Dec.OR) <= max_choices):
            return sg
    return normalise(build(rand_bes(rng, n_eq=1, depth=1), Var("V0")))


def rand_degenerate_graph(rng: random.Random, bullet: Dec,
                          max_vertices: int = 8) -> StructureGraph:
    """Normalised BESsy graph whose only connective decoration is ``bullet``:
    ranked vertices with successors (decorated when branching), plus constant
    sinks."""
    n = rng.randint(1, max_vertices)
    names = [f"n{i}" for i in range(n)]
    dec: dict[str, Dec] = {}
    rank: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    for v in names:
        if rng.random() < 0.2:
            dec[v] = Dec.TOP if rng.random() < 0.5 else Dec.BOT
            continue
        rank[v] = rng.randint(0, 3)
        k = rng.randint(1, min(3, n))
        targets = rng.sample(names, k)
        if len(targets) > 1:
            dec[v] = bullet
        elif rng.random() < 0.4:
            dec[v] = bullet
        edges.extend((v, t) for t in targets)
    sg = make_graph(names, names[0], edges, dec, rank, {})
    # Dead ends that are not constants would make the graph open; plug them
    # by turning them into constant sinks.
    fixed_dec = dict(sg.dec)
    fixed_rank = dict(sg.rank)
    for v in names:
        if not sg.has_successor(v) and fixed_dec.get(v) not in (Dec.TOP, Dec.BOT):
            fixed_dec[v] = Dec.TOP if rng.random() < 0.5 else Dec.BOT
            fixed_rank.pop(v, None)
    return make_graph(names, names[0], sg.edges(), fixed_dec, fixed_rank, {})
