"""Randomised property suites behind `besg check`.

Each suite draws seeded random instances and cross-checks an operation
against an independent oracle (the recursive solver, exhaustive enumeration,
or the model-checking semantics).  The pytest acceptance suite runs the same
properties at their contract case counts; this runner exists for quick
command-line smoke checks with a chosen seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .bes import substitute
from .bisim import bisim_equiv, bisim_minimise
from .choice import apply_choice, enumerate_choices, solve_lasso
from .mucalc import indexed_name, mc_semantics, encode
from .rand import (rand_bes, rand_degenerate_graph, rand_formula, rand_lts,
                   rand_mu_formula, rand_normalised_closed_graph)
from .sgraph import Dec, is_bessy, normalise
from .solve import Environment, eval_formula, solve_gauss, solve_recursive
from .sos import build
from .translate import phi, to_bes


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _run(name: str, n: int, case: Callable[[random.Random, int], str | None],
         seed: int) -> SuiteResult:
    rng = random.Random(seed)
    failures = []
    for i in range(n):
        msg = case(rng, i)
        if msg:
            failures.append(f"case {i}: {msg}")
    return SuiteResult(name, n, failures)


def suite_solvers(seed: int, n: int = 200) -> SuiteResult:
    def case(rng, i):
        system = rand_bes(rng, n_eq=rng.randint(0, 6), depth=3, closed=True)
        a = solve_recursive(system)
        b = solve_gauss(system)
        bad = [eq.lhs for eq in system.equations if a(eq.lhs) != b(eq.lhs)]
        return f"solvers disagree on {bad}" if bad else None

    return _run("gauss-vs-recursive", n, case, seed)


def suite_substitution(seed: int, n: int = 200) -> SuiteResult:
    def case(rng, i):
        system = rand_bes(rng, n_eq=rng.randint(0, 4), depth=3, closed=False)
        b = rng.random() < 0.5
        env = Environment({"F0": b})
        lhs = solve_recursive(substitute(system, "F0", b), env)
        rhs = solve_recursive(system, env)
        bad = [eq.lhs for eq in system.equations if lhs(eq.lhs) != rhs(eq.lhs)]
        return f"substitution invariance fails on {bad}" if bad else None

    return _run("substitution-invariance", n, case, seed)


def suite_build_bessy(seed: int, n: int = 200) -> SuiteResult:
    def case(rng, i):
        system = rand_bes(rng, n_eq=rng.randint(0, 4), depth=3, closed=False)
        f = rand_formula(rng, ["V0", "V1", "F0"], 3)
        if not is_bessy(build(system, f)):
            return "build output not BESsy"
        return None

    return _run("build-is-bessy", n, case, seed)


def suite_mc_correspondence(seed: int, n: int = 100) -> SuiteResult:
    def case(rng, i):
        lts = rand_lts(rng)
        formula = rand_mu_formula(rng, lts.actions)
        sem = mc_semantics(lts, formula)
        sol = solve_gauss(encode(lts, formula))
        top = formula.var
        bad = [s for s in lts.states if (s in sem) != sol(indexed_name(top, s))]
        return f"model checking disagrees on {bad}" if bad else None

    return _run("mc-correspondence", n, case, seed)


def suite_preservation(seed: int, n: int = 100) -> SuiteResult:
    def case(rng, i):
        system = rand_bes(rng, n_eq=rng.randint(0, 4), depth=3, closed=False)
        f = rand_formula(rng, ["V0", "V1", "V2", "F0"], 3)
        sg = build(system, f)
        left = eval_formula(f, solve_recursive(system))
        right = eval_formula(phi(sg), solve_gauss(to_bes(sg)))
        if left != right:
            return "translation changed the root value"
        quotient, _ = bisim_minimise(sg)
        qval = eval_formula(phi(quotient), solve_gauss(to_bes(quotient)))
        if qval != left:
            return "minimisation changed the root value"
        norm = normalise(sg)
        nval = eval_formula(phi(norm), solve_gauss(to_bes(norm)))
        if nval != left:
            return "normalisation changed the root value"
        if not bisim_equiv(normalise(norm), norm):
            return "normalisation is not idempotent modulo bisimilarity"
        return None

    return _run("solution-preservation", n, case, seed)


def suite_choices(seed: int, n: int = 40) -> SuiteResult:
    def case(rng, i):
        sg = rand_normalised_closed_graph(rng)
        base = solve_gauss(to_bes(sg))
        names = [f"X_{v}" for v in sg.rank]
        for bullet, expect_le in ((Dec.AND, True), (Dec.OR, False)):
            attained = False
            for gamma in enumerate_choices(sg, bullet):
                other = solve_gauss(to_bes(apply_choice(sg, gamma)))
                le = base.leq(other, names) if expect_le else other.leq(base, names)
                if not le:
                    return f"{bullet.value}-choice broke monotonicity"
                if all(base(x) == other(x) for x in names):
                    attained = True
            if not attained:
                return f"no {bullet.value}-choice attains the solution"
        return None

    return _run("choice-functions", n, case, seed)


def suite_lasso(seed: int, n: int = 100) -> SuiteResult:
    def case(rng, i):
        bullet = Dec.OR if i % 2 == 0 else Dec.AND
        sg = rand_degenerate_graph(rng, bullet)
        got = solve_lasso(sg)
        want = eval_formula(phi(sg), solve_recursive(to_bes(sg)))
        return None if got == want else f"lasso solver says {got}, oracle {want}"

    return _run("lasso-solver", n, case, seed)


ALL_SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "solvers": suite_solvers,
    "substitution": suite_substitution,
    "bessy": suite_build_bessy,
    "mc": suite_mc_correspondence,
    "preservation": suite_preservation,
    "choices": suite_choices,
    "lasso": suite_lasso,
}


def run_all(seed: int, names: list[str] | None = None) -> list[SuiteResult]:
    picked = names or list(ALL_SUITES)
    return [ALL_SUITES[name](seed + k) for k, name in enumerate(picked)]
