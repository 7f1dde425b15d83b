import pytest
from hypothesis import given, strategies as st

from besg import (And, Bes, BesgError, Equation, Or, Sign, Var, FALSE,
                  TRUE, big_and, big_or, bnd, is_closed, is_simple_form, occ,
                  parse_bes, rank, rank_map, size, substitute)
from besg.bes import subst_formula

from helpers import SHARED_TERM_BES


def V(name):
    return Var(name)


class TestBndOcc:
    def test_empty_system(self):
        assert bnd(Bes(())) == frozenset()
        assert is_closed(Bes(()))

    def test_shared_term_system(self):
        assert bnd(SHARED_TERM_BES) == {"X", "Y", "W"}
        assert occ(SHARED_TERM_BES) == {"X", "Y", "Z", "W"}
        assert not is_closed(SHARED_TERM_BES)  # no equation for Z

    def test_two_equation_closed(self):
        system = parse_bes("nu X = Y;\nmu Y = X;\n")
        assert bnd(system) == {"X", "Y"}
        assert is_closed(system)

    def test_occ_formula(self):
        assert occ(Or(And(V("X"), V("Y")), V("Z"))) == {"X", "Y", "Z"}
        assert occ(TRUE) == frozenset()

    def test_duplicate_lhs_rejected(self):
        with pytest.raises(BesgError):
            Bes((Equation(Sign.MU, "X", TRUE), Equation(Sign.NU, "X", FALSE)))


class TestSimpleForm:
    def test_mixed_rhs(self):
        assert not is_simple_form(parse_bes("mu X = (X && Y) || Z;\nnu Y = X;\nnu Z = X;\n"))

    def test_disjunctive_rhs(self):
        assert is_simple_form(parse_bes("mu X = X || X;\n"))

    def test_separate_equations_may_differ(self):
        assert is_simple_form(parse_bes("mu X = X && Y;\nnu Y = X || Y;\n"))


class TestRank:
    def test_shared_term_ranks(self):
        assert rank_map(SHARED_TERM_BES) == {"X": 3, "Y": 2, "W": 1}

    def test_trailing_nu_is_zero(self):
        assert rank(parse_bes("nu X = X;\n"), "X") == 0

    def test_trailing_mu_is_one(self):
        assert rank(parse_bes("mu X = X;\n"), "X") == 1

    def test_unbound_errors(self):
        with pytest.raises(BesgError, match="not bound"):
            rank(SHARED_TERM_BES, "Z")

    @given(st.lists(st.sampled_from([Sign.MU, Sign.NU]), min_size=1, max_size=9))
    def test_parity_encodes_sign(self, signs):
        system = Bes(tuple(Equation(s, f"V{i}", TRUE) for i, s in enumerate(signs)))
        for eq in system.equations:
            assert (rank(system, eq.lhs) % 2 == 1) == (eq.sign is Sign.MU)

    @given(st.lists(st.sampled_from([Sign.MU, Sign.NU]), min_size=1, max_size=9))
    def test_blocks_descend_weakly_left_to_right(self, signs):
        system = Bes(tuple(Equation(s, f"V{i}", TRUE) for i, s in enumerate(signs)))
        ranks = [rank(system, eq.lhs) for eq in system.equations]
        assert all(a >= b for a, b in zip(ranks, ranks[1:]))


class TestSubstitute:
    def test_textual_replacement(self):
        system = parse_bes("mu W = Z || (Z || W);\n")
        assert substitute(system, "Z", False) == parse_bes("mu W = false || (false || W);\n")

    def test_empty_system(self):
        assert substitute(Bes(()), "X", True) == Bes(())

    def test_bound_variable_rejected(self):
        with pytest.raises(BesgError):
            substitute(SHARED_TERM_BES, "X", True)

    def test_keeps_bnd_and_adds_no_variables(self):
        before = SHARED_TERM_BES
        after = substitute(before, "Z", True)
        assert bnd(after) == bnd(before)
        assert occ(after) <= occ(before)


class TestBigOps:
    def test_empty_sets(self):
        assert big_and([]) == TRUE
        assert big_or([]) == FALSE

    def test_singleton_duplicates(self):
        f = And(V("X"), V("Y"))
        assert big_and([f]) == And(f, f)
        assert big_or([V("Y_s1")]) == Or(V("Y_s1"), V("Y_s1"))

    def test_pair_orders_big_tree_first(self):
        small = V("X_v")
        big = And(V("X_u"), And(V("X_w"), V("X_w")))
        assert big_or([small, big]) == Or(big, Or(small, small))

    def test_equal_size_atoms_sort_lexicographically(self):
        assert big_and([V("X_w"), V("X_u")]) == And(V("X_u"), And(V("X_w"), V("X_w")))
        assert big_and([V("X"), TRUE]) == And(TRUE, And(V("X"), V("X")))
        assert big_or([FALSE, TRUE]) == Or(TRUE, Or(FALSE, FALSE))

    def test_input_is_a_set(self):
        assert big_and([V("X"), V("X")]) == And(V("X"), V("X"))

    @given(st.sets(st.sampled_from("abcdef"), min_size=1, max_size=5))
    def test_deterministic_in_input_order(self, names):
        fs = [V(n) for n in names]
        assert big_and(fs) == big_and(reversed(fs))
        assert big_or(fs) == big_or(reversed(fs))


class TestSize:
    def test_formula_is_node_count(self):
        assert size(V("X")) == 1
        assert size(Or(And(V("X"), V("Y")), V("Z"))) == 5

    def test_system_sums_equations(self):
        assert size(parse_bes("mu X = X || X;\nnu Y = X;\n")) == 6

    def test_subst_formula_identity_elsewhere(self):
        f = Or(And(V("X"), V("Y")), V("Z"))
        assert subst_formula(f, "Q", TRUE) == f
        assert size(subst_formula(f, "Z", TRUE)) == size(f)
