import random

from besg import (Bes, Dec, Var, bisim_equiv, bisim_minimise, bisim_partition,
                  build, make_graph, parse_formula)
from besg.rand import rand_bes, rand_formula

from helpers import channel_graph, vertex_by_label


class TestChannelQuotient:
    def test_merges_as_depicted(self):
        sg = channel_graph()
        part = bisim_partition(sg)
        assert part.same("t1", "t2")
        assert part.same("t4", "t5")
        assert part.same("u4", "u5")
        assert part.same("t7", "t8") and part.same("t8", "t9")
        assert part.n_blocks == 4

    def test_quotient_shape(self):
        quotient, _ = bisim_minimise(channel_graph())
        assert quotient.n_vertices == 4
        ranked = sorted(quotient.rank.values())
        assert ranked == [0, 1, 2]
        assert quotient.root == vertex_by_label(quotient, rank=2)

    def test_quotient_bisimilar_to_source(self):
        sg = channel_graph()
        quotient, _ = bisim_minimise(sg)
        assert bisim_equiv(sg, quotient)


class TestBasics:
    def test_discrete_graph_stays_discrete(self):
        sg = make_graph(["a", "b", "c"], "a", [("a", "b"), ("b", "c")],
                        rank={"a": 0, "b": 1}, dec={"c": Dec.TOP})
        quotient, part = bisim_minimise(sg)
        assert part.n_blocks == 3
        assert quotient.n_vertices == 3

    def test_associativity_of_conjunction(self):
        system = Bes(())
        f1 = build(system, parse_formula("(A && B) && C"))
        f2 = build(system, parse_formula("A && (B && C)"))
        assert bisim_equiv(f1, f2)

    def test_self_conjunction_not_equivalent_to_variable(self):
        system = Bes(())
        left = build(system, parse_formula("X && X"))
        right = build(system, Var("X"))
        assert not bisim_equiv(left, right)

    def test_reminimising_fixes_nothing(self):
        rng = random.Random(23)
        for _ in range(40):
            system = rand_bes(rng, n_eq=rng.randint(0, 4), closed=False)
            sg = build(system, rand_formula(rng, ["V0", "V1", "F0"], 3))
            q1, _ = bisim_minimise(sg)
            q2, part = bisim_minimise(q1)
            assert part.n_blocks == q1.n_vertices
            assert q2.n_vertices == q1.n_vertices
            assert len(q2.edges()) == len(q1.edges())
            assert sorted((q1.label(v) for v in q1.vertices), key=repr) \
                == sorted((q2.label(v) for v in q2.vertices), key=repr)
            assert bisim_equiv(q1, q2)

    def test_label_mismatch_blocks_relation(self):
        a = make_graph(["v"], "v", [("v", "v")], rank={"v": 0})
        b = make_graph(["v"], "v", [("v", "v")], rank={"v": 2})
        assert not bisim_equiv(a, b)
        c = make_graph(["v"], "v", [("v", "v")], rank={"v": 0}, dec={"v": Dec.OR})
        assert not bisim_equiv(a, c)

    def test_free_variable_names_must_match(self):
        a = make_graph(["v"], "v", [], fv={"v": "X"})
        b = make_graph(["v"], "v", [], fv={"v": "Y"})
        same = make_graph(["w"], "w", [], fv={"w": "X"})
        assert not bisim_equiv(a, b)
        assert bisim_equiv(a, same)
