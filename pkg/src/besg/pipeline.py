"""The end-to-end pipeline: encode a model checking problem, build the
structure graph, optionally normalise, minimise modulo strong bisimulation,
translate back, solve, and report sizes and timings per stage.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bes import PropFormula, Var, big_and, size
from .bisim import bisim_minimise
from .mucalc import (Lts, MuFormula, encode, indexed_name, mc_semantics,
                     mu_size)
from .sgraph import normalise as normalise_graph
from .solve import Environment, EMPTY_ENV, eval_formula, solve
from .sos import build
from .translate import phi, to_bes


@dataclass
class PipelineReport:
    lts_states: int
    formula_size: int
    bes_size: int
    bes_equations: int
    sg_vertices: int
    quotient_vertices: int
    min_bes_size: int
    min_bes_equations: int
    solution: dict[str, bool]
    min_solution: dict[str, bool]
    root_value: bool
    normalised: bool
    timings: dict[str, float] = field(default_factory=dict)
    mc_states: tuple[str, ...] | None = None
    mc_agrees: bool | None = None

    def lines(self) -> list[str]:
        out = [
            f"input: {self.lts_states} states, formula size {self.formula_size}",
            f"bes: {self.bes_equations} equations, size {self.bes_size}",
            f"structure graph: {self.sg_vertices} vertices"
            + (" (normalised)" if self.normalised else ""),
            f"quotient: {self.quotient_vertices} vertices",
            f"minimised bes: {self.min_bes_equations} equations, size {self.min_bes_size}",
            f"root value: {str(self.root_value).lower()}",
        ]
        if self.mc_states is not None:
            out.append("mc states: " + (" ".join(self.mc_states) or "(none)"))
            out.append(f"mc agrees: {str(self.mc_agrees).lower()}")
        return out


def run_pipeline(lts: Lts, formula: MuFormula, root_state: str | None = None,
                 do_normalise: bool = True, method: str = "gauss",
                 env: Environment = EMPTY_ENV, check_mc: bool = True) -> PipelineReport:
    """Local pipeline when root_state is given, otherwise global: the root
    formula is the conjunction over all states of the outermost fixpoint
    variable."""
    timings: dict[str, float] = {}

    def stage(name, fn):
        start = time.perf_counter()
        result = fn()
        timings[name] = time.perf_counter() - start
        return result

    system = stage("encode", lambda: encode(lts, formula))
    top = _outermost_variable(formula)
    if root_state is None:
        root: PropFormula = big_and(Var(indexed_name(top, s)) for s in lts.states)
    else:
        if root_state not in lts.states:
            raise ValueError(f"unknown state: {root_state}")
        root = Var(indexed_name(top, root_state))
    sg = stage("build", lambda: build(system, root))
    if do_normalise:
        sg = stage("normalise", lambda: normalise_graph(sg))
    quotient, _ = stage("minimise", lambda: bisim_minimise(sg))
    min_bes = stage("to_bes", lambda: to_bes(quotient))
    solution = stage("solve", lambda: solve(system, env, method))
    min_solution = solve(min_bes, env, method)
    root_value = eval_formula(phi(quotient), min_solution)

    mc_states = mc_agrees = None
    if check_mc:
        sem = stage("mc", lambda: mc_semantics(lts, formula))
        mc_states = tuple(sorted(sem))
        mc_agrees = all((s in sem) == solution(indexed_name(top, s)) for s in lts.states)
        if root_state is not None:
            mc_agrees = mc_agrees and ((root_state in sem) == root_value)

    return PipelineReport(
        lts_states=len(lts.states),
        formula_size=mu_size(formula),
        bes_size=size(system),
        bes_equations=len(system),
        sg_vertices=sg.n_vertices,
        quotient_vertices=quotient.n_vertices,
        min_bes_size=size(min_bes),
        min_bes_equations=len(min_bes),
        solution={eq.lhs: solution(eq.lhs) for eq in system.equations},
        min_solution={eq.lhs: min_solution(eq.lhs) for eq in min_bes.equations},
        root_value=root_value,
        normalised=do_normalise,
        timings=timings,
        mc_states=mc_states,
        mc_agrees=mc_agrees,
    )


def _outermost_variable(formula: MuFormula) -> str:
    # First fixpoint in traversal order; for the usual top-level fixpoint
    # this is its own variable.
    from .mucalc import Fix, mu_subformulas
    for sub in mu_subformulas(formula):
        if isinstance(sub, Fix):
            return sub.var
    raise ValueError("pipeline needs a formula with at least one fixpoint")


def stage_sizes(lts: Lts, formula: MuFormula, root_state: str | None = None,
                do_normalise: bool = True) -> tuple[int, int]:
    """(original BES size, minimised BES size); convenience for experiments."""
    report = run_pipeline(lts, formula, root_state, do_normalise, check_mc=False)
    return report.bes_size, report.min_bes_size
