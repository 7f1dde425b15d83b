import random

from hypothesis import given, settings, strategies as st

from besg import (Environment, EMPTY_ENV, bnd, encode, eval_formula,
                  parse_bes, parse_formula, solution_on_bound, solve_gauss,
                  solve_recursive, substitute)
from besg.rand import rand_bes

from helpers import READERS_PHI, readers_writer_lts


class TestEval:
    def test_mixed_formula(self):
        env = Environment({"X": True, "Y": False, "Z": True})
        assert eval_formula(parse_formula("(X && Y) || Z"), env)

    def test_constants(self):
        assert eval_formula(parse_formula("true"), EMPTY_ENV)
        assert not eval_formula(parse_formula("false || (false || W)"), Environment({"W": False}))

    def test_default_is_false(self):
        assert not eval_formula(parse_formula("Q"), EMPTY_ENV)


class TestRecursive:
    def test_order_sensitivity(self):
        assert solution_on_bound(parse_bes("mu X = Y;\nnu Y = X;\n"),
                                 method="recursive") == {"X": False, "Y": False}
        assert solution_on_bound(parse_bes("nu Y = X;\nmu X = Y;\n"),
                                 method="recursive") == {"Y": True, "X": True}

    def test_readers_writer_encoding_all_true(self):
        system = encode(readers_writer_lts(), READERS_PHI)
        assert all(solution_on_bound(system, method="recursive").values())

    def test_environment_independence_when_closed(self):
        rng = random.Random(5)
        for _ in range(30):
            system = rand_bes(rng, n_eq=rng.randint(0, 5), closed=True)
            a = solve_recursive(system, Environment({}, default=False))
            b = solve_recursive(system, Environment({x: True for x in "XYZ"}, default=True))
            assert all(a(x) == b(x) for x in bnd(system))


class TestGauss:
    def test_nu_self_loop(self):
        assert solution_on_bound(parse_bes("nu X = X;\n")) == {"X": True}

    def test_mu_self_loop(self):
        assert solution_on_bound(parse_bes("mu X = X || X;\n")) == {"X": False}

    def test_open_system_uses_environment(self):
        system = parse_bes("mu X = F;\n")
        assert solve_gauss(system, Environment({"F": True}))("X")
        assert not solve_gauss(system)("X")

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 2 ** 30))
    def test_agrees_with_recursive(self, seed):
        rng = random.Random(seed)
        system = rand_bes(rng, n_eq=rng.randint(0, 8), depth=3,
                          closed=rng.random() < 0.7)
        a = solve_recursive(system)
        b = solve_gauss(system)
        assert all(a(x) == b(x) for x in bnd(system))


class TestSubstitutionInvariance:
    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2 ** 30), st.booleans())
    def test_solution_invariant(self, seed, value):
        rng = random.Random(seed)
        system = rand_bes(rng, n_eq=rng.randint(0, 4), closed=False)
        env = Environment({"F0": value})
        a = solve_recursive(system, env)
        b = solve_recursive(substitute(system, "F0", value), env)
        assert all(a(x) == b(x) for x in bnd(system))
