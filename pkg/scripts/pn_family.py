#!/usr/bin/env python3
"""Reduction factors on the P_N process family: the LTS is already minimal,
yet the equation system encoding <a,b>-reachability shrinks to a single
equation whatever N is.  Prints a table of sizes for a range of N."""

import sys

from besg import (Var, bisim_minimise, build, encode, indexed_name,
                  lts_bisim_minimise, make_lts, parse_mu_formula, size, to_bes)


def pn_lts(n):
    states = [f"P{i}" for i in range(1, n + 1)] + [f"Q{i}" for i in range(1, n + 1)]
    transitions = [("P1", "a", f"Q{n}"), ("Q1", "b", f"P{n}")]
    for i in range(1, n):
        transitions.append((f"P{i+1}", "a", f"P{i}"))
        transitions.append((f"Q{i+1}", "b", f"Q{i}"))
    return make_lts(states, ["a", "b"], transitions, f"P{n}")


def main():
    ns = [int(a) for a in sys.argv[1:]] or [1, 2, 5, 10, 25, 50]
    phi = parse_mu_formula("nu X. <a,b>X")
    print(f"{'N':>4} {'lts':>5} {'lts/~':>5} {'|E|':>6} {'|E/~|':>6} {'factor':>7}")
    for n in ns:
        lts = pn_lts(n)
        minimal, _ = lts_bisim_minimise(lts)
        system = encode(lts, phi)
        sg = build(system, Var(indexed_name("X", f"P{n}")))
        quotient, _ = bisim_minimise(sg)
        reduced = size(to_bes(quotient))
        print(f"{n:>4} {len(lts.states):>5} {len(minimal.states):>5} "
              f"{size(system):>6} {reduced:>6} {size(system) / reduced:>7.1f}")


if __name__ == "__main__":
    main()
