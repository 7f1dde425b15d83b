import random

from besg import is_simple_form, make_lts, normalise, parse_mu_formula, to_bes
from besg.pipeline import run_pipeline, stage_sizes
from besg.rand import rand_bes, rand_formula
from besg.sos import build

from helpers import B_CYCLE_PHI, CHANNEL_PHI, b_cycle_lts, channel_lts


class TestRunPipeline:
    def test_channel_local(self):
        report = run_pipeline(channel_lts(), CHANNEL_PHI, root_state="s0",
                              do_normalise=False)
        assert report.bes_size == 44
        assert (report.bes_equations, report.min_bes_equations) == (9, 3)
        assert all(report.solution.values())
        assert report.root_value and report.mc_agrees
        assert report.mc_states == ("s0", "s1", "s2")
        assert set(report.timings) >= {"encode", "build", "minimise", "to_bes", "solve"}

    def test_normalisation_pays_off_on_b_cycle(self):
        with_norm = run_pipeline(b_cycle_lts(), B_CYCLE_PHI, root_state="s0",
                                 do_normalise=True, check_mc=False)
        without = run_pipeline(b_cycle_lts(), B_CYCLE_PHI, root_state="s0",
                               do_normalise=False, check_mc=False)
        assert with_norm.bes_size == 26
        assert with_norm.min_bes_size == 18
        assert without.min_bes_size > 18

    def test_trivial_property_is_true_everywhere(self):
        lts = make_lts(["s0", "s1"], ["a"], [("s0", "a", "s1")], "s0")
        report = run_pipeline(lts, parse_mu_formula("nu X. true"))
        assert all(report.solution.values())
        assert report.root_value and report.mc_agrees

    def test_global_root_is_conjunction_over_states(self):
        report = run_pipeline(channel_lts(), CHANNEL_PHI)
        assert report.root_value
        assert report.mc_agrees

    def test_stage_sizes_helper(self):
        assert stage_sizes(b_cycle_lts(), B_CYCLE_PHI, root_state="s0") == (26, 18)


class TestNormalisedSystems:
    def test_extraction_after_normalisation_is_simple_form(self):
        rng = random.Random(211)
        for _ in range(80):
            system = rand_bes(rng, n_eq=rng.randint(0, 4), closed=False)
            sg = build(system, rand_formula(rng, ["V0", "V1", "F0"], 3))
            assert is_simple_form(to_bes(normalise(sg)))

    def test_normalise_is_structurally_idempotent(self):
        rng = random.Random(223)
        for _ in range(40):
            system = rand_bes(rng, n_eq=rng.randint(0, 4), closed=False)
            sg = normalise(build(system, rand_formula(rng, ["V0", "F0"], 3)))
            again = normalise(sg)
            assert again.rank == sg.rank
            assert again.succ == sg.succ and again.dec == sg.dec
