import random

import pytest
from besg import (Dec, PreconditionError, Var, build, eval_formula,
                  find_dominated_lasso, make_graph, parse_bes, phi,
                  solve_lasso, solve_recursive, to_bes)
from besg.rand import rand_degenerate_graph


class TestSmallCases:
    def test_nu_self_loop(self):
        assert solve_lasso(build(parse_bes("nu X = X;\n"), Var("X")))

    def test_mu_self_loop(self):
        assert not solve_lasso(build(parse_bes("mu X = X || X;\n"), Var("X")))

    def test_substituted_w_equation(self):
        sg = build(parse_bes("mu W = false || (false || W);\n"), Var("W"))
        assert not solve_lasso(sg)
        assert solve_lasso(sg) == solution_of_root(sg)

    def test_two_lasso_graph_true_through_even_sink(self):
        from helpers import two_lasso_graph
        assert solve_lasso(two_lasso_graph())

    def test_path_to_top(self):
        sg = make_graph(["a", "b", "t"], "a", [("a", "b"), ("b", "t")],
                        rank={"a": 1, "b": 1}, dec={"t": Dec.TOP})
        assert solve_lasso(sg)

    def test_path_to_bot_conjunctive(self):
        sg = make_graph(["a", "t"], "a", [("a", "t")],
                        rank={"a": 0}, dec={"t": Dec.BOT})
        assert not solve_lasso(sg)

    def test_mixed_graph_rejected(self):
        sg = make_graph(["a", "b", "c"], "a",
                        [("a", "b"), ("a", "c"), ("b", "c"), ("c", "c"), ("b", "a")],
                        rank={"a": 0, "b": 0, "c": 0},
                        dec={"a": Dec.AND, "b": Dec.OR})
        with pytest.raises(PreconditionError, match="mixed"):
            solve_lasso(sg)

    def test_unnormalised_rejected(self):
        sg = make_graph(["a", "b"], "a", [("a", "b"), ("b", "b")],
                        rank={"b": 1}, dec={"a": Dec.OR})
        with pytest.raises(PreconditionError):
            solve_lasso(sg)

    def test_free_variables_rejected(self):
        sg = make_graph(["a", "f"], "a", [("a", "f")],
                        rank={"a": 0}, fv={"f": "Q"})
        with pytest.raises(PreconditionError):
            solve_lasso(sg)


def solution_of_root(sg):
    return eval_formula(phi(sg), solve_recursive(to_bes(sg)))


class TestAgainstOracle:
    def test_random_degenerate_graphs(self):
        rng = random.Random(59)
        for i in range(80):
            bullet = Dec.OR if i % 2 else Dec.AND
            sg = rand_degenerate_graph(rng, bullet)
            assert solve_lasso(sg) == solution_of_root(sg)

    def test_witness_lassoes_are_valid(self):
        rng = random.Random(61)
        found = 0
        for i in range(80):
            bullet = Dec.OR if i % 2 else Dec.AND
            sg = rand_degenerate_graph(rng, bullet)
            for even in (True, False):
                lasso = find_dominated_lasso(sg, even)
                if lasso is None:
                    continue
                found += 1
                lasso.validate(sg)
                assert lasso.vertices[0] == sg.root
                tops = [sg.rank[v] for v in lasso.cycle() if v in sg.rank]
                assert (max(tops) % 2 == 0) == even
        assert found > 20
