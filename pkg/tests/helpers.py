"""Shared fixtures: the worked examples used across the test suite."""

from __future__ import annotations

from besg import (And, Const, Dec, Or, Var, make_graph, make_lts, parse_bes,
                  parse_mu_formula, print_formula)
from besg.translate import fresh_var

# (mu X = (X && Y) || Z)(nu Y = W || (X && Y))(mu W = Z || (Z || W))
SHARED_TERM_BES = parse_bes("""
mu X = (X && Y) || Z;
nu Y = W || (X && Y);
mu W = Z || (Z || W);
""")


def readers_writer_lts():
    """Two readers, one writer; reading starts with r_s and ends with r_e."""
    return make_lts(
        ["s0", "s1", "s2", "s3"],
        ["r_s", "r_e", "w_s", "w_e"],
        [("s0", "r_s", "s1"), ("s1", "r_s", "s2"), ("s2", "r_e", "s1"),
         ("s1", "r_e", "s0"), ("s0", "w_s", "s3"), ("s3", "w_e", "s0")],
        "s0")


READERS_PHI = parse_mu_formula("nu X. mu Y. <r_s>X || <!r_s>Y")


def b_cycle_lts():
    """Three states on b-cycles with one a-edge; the normalisation case study."""
    return make_lts(
        ["s0", "s1", "s2"], ["a", "b"],
        [("s0", "b", "s0"), ("s0", "b", "s1"), ("s1", "b", "s0"),
         ("s1", "b", "s2"), ("s2", "b", "s1"), ("s0", "a", "s2"),
         ("s2", "b", "s0")],
        "s0")


B_CYCLE_PHI = parse_mu_formula("nu X. [a]X && <b>X")


def channel_lts():
    """Unreliable channel: read, then send or lose and retry internally."""
    return make_lts(
        ["s0", "s1", "s2"], ["r", "s", "i", "l"],
        [("s0", "r", "s1"), ("s1", "s", "s0"), ("s1", "i", "s2"), ("s2", "l", "s1")],
        "s0")


CHANNEL_PHI = parse_mu_formula("nu X. mu Y. (([r,s]X && (nu Z. <!s>Z)) || [r,s]Y)")

# The 9-equation channel system as printed, with the duplicated box results;
# not reproducible from CHANNEL_PHI by the encoder (see the solver and
# encoder tests), kept as golden input for the size and solution checks.
CHANNEL_BES_TEXT = """\
nu X_s0 = Y_s0;
nu X_s1 = Y_s1;
nu X_s2 = Y_s2;
mu Y_s0 = ((X_s1 && X_s1) && Z_s0) || ((Y_s1 && Y_s1) || (Y_s1 && Y_s1));
mu Y_s1 = ((X_s0 && X_s0) && Z_s1) || ((Y_s0 && Y_s0) || (Y_s0 && Y_s0));
mu Y_s2 = (true && Z_s2) || true;
nu Z_s0 = Z_s1 || Z_s1;
nu Z_s1 = Z_s2 || Z_s2;
nu Z_s2 = Z_s1 || Z_s1;
"""


def channel_graph():
    """The channel's structure graph for the local problem rooted at X_s0,
    as depicted: nine vertices, ranked t-vertices, connective u-vertices."""
    return make_graph(
        "t1 t2 t4 t5 u4 u5 t7 t8 t9".split(), "t1",
        [("t1", "t4"), ("t2", "t5"), ("t4", "u4"), ("t4", "t5"),
         ("t5", "u5"), ("t5", "t4"), ("u4", "t2"), ("u4", "t7"),
         ("u5", "t1"), ("u5", "t8"), ("t7", "t8"), ("t8", "t9"), ("t9", "t8")],
        dec={"t4": Dec.OR, "t5": Dec.OR, "u4": Dec.AND, "u5": Dec.AND},
        rank={"t1": 2, "t2": 2, "t4": 1, "t5": 1, "t7": 0, "t8": 0, "t9": 0})


def normalisation_graph():
    """Five vertices with one unranked conjunctive vertex t (the root)."""
    return make_graph(
        "t u v w x".split(), "t",
        [("u", "v"), ("u", "t"), ("w", "x"), ("w", "t"), ("v", "v"),
         ("x", "v"), ("x", "x"), ("t", "w"), ("t", "u")],
        dec={"u": Dec.OR, "w": Dec.OR, "x": Dec.OR, "t": Dec.AND},
        rank={"u": 3, "w": 2, "v": 1, "x": 1})


def two_lasso_graph():
    """Disjunctive ranked triangle with a rank-2 sink loop."""
    return make_graph(
        ["t", "v", "w"], "t",
        [("t", "v"), ("t", "w"), ("v", "t"), ("v", "w"), ("w", "w")],
        dec={"t": Dec.OR, "v": Dec.OR},
        rank={"t": 1, "v": 1, "w": 2})


def pn_lts(n: int):
    """Cycle of n a-steps then n b-steps; minimal modulo bisimulation."""
    states = [f"P{i}" for i in range(1, n + 1)] + [f"Q{i}" for i in range(1, n + 1)]
    transitions = [("P1", "a", f"Q{n}"), ("Q1", "b", f"P{n}")]
    for i in range(1, n):
        transitions.append((f"P{i+1}", "a", f"P{i}"))
        transitions.append((f"Q{i+1}", "b", f"Q{i}"))
    return make_lts(states, ["a", "b"], transitions, f"P{n}")


PN_PHI = parse_mu_formula("nu X. <a,b>X")

ONE_LOOP_BES = parse_bes("nu Y = Y || Y;\n")


def vertex_by_label(sg, dec=None, rank=None, fv=None):
    """The unique vertex carrying the given label triple."""
    hits = [v for v in sg.vertices
            if sg.dec.get(v) == dec and sg.rank.get(v) == rank and sg.fv.get(v) == fv]
    assert len(hits) == 1, f"label ({dec}, {rank}, {fv}) hits {hits}"
    return hits[0]


def rename_fresh(f, terms):
    """Replace generated X_<id> variables by a name derived from the term the
    vertex stands for, making formulas from different builds comparable."""
    table = {fresh_var(v): f"T<{print_formula(t)}>" for v, t in terms.items()}
    match f:
        case Const():
            return f
        case Var(name):
            return Var(table.get(name, name))
        case And(l, r):
            return And(rename_fresh(l, terms), rename_fresh(r, terms))
        case Or(l, r):
            return Or(rename_fresh(l, terms), rename_fresh(r, terms))


def canon_big_ops(f):
    """Normal form modulo the set ordering inside big-and/big-or chains:
    flatten maximal same-connective chains, canonicalise the parts, and
    rebuild with the default order.  Renaming fresh variables changes their
    relative order, so formulas from different builds agree only up to this."""
    from besg import big_and, big_or

    def parts(g, op):
        if isinstance(g, op):
            yield from parts(g.left, op)
            yield from parts(g.right, op)
        else:
            yield canon_big_ops(g)

    match f:
        case And():
            return big_and(set(parts(f, And)))
        case Or():
            return big_or(set(parts(f, Or)))
    return f
