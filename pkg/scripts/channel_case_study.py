#!/usr/bin/env python3
"""Walk the unreliable-channel case study end to end and print every stage:
the encoded equation system, the structure graph of the local problem at s0,
its bisimulation quotient, the extracted minimised system, solutions, and
the model-checking answer."""

from besg import (Var, bisim_minimise, build, encode, indexed_name,
                  make_lts, mc_semantics, parse_mu_formula, print_bes,
                  print_sg, size, solution_on_bound, to_bes)
from besg.pipeline import run_pipeline


def main():
    lts = make_lts(
        ["s0", "s1", "s2"], ["r", "s", "i", "l"],
        [("s0", "r", "s1"), ("s1", "s", "s0"), ("s1", "i", "s2"), ("s2", "l", "s1")],
        "s0")
    phi = parse_mu_formula("nu X. mu Y. (([r,s]X && (nu Z. <!s>Z)) || [r,s]Y)")

    system = encode(lts, phi)
    print("== encoded equation system ==")
    print(print_bes(system))
    print(f"size {size(system)}, {len(system)} equations\n")

    sg = build(system, Var(indexed_name("X", "s0")))
    print("== structure graph (local problem at s0) ==")
    print(print_sg(sg))

    quotient, _ = bisim_minimise(sg)
    print("== quotient ==")
    print(print_sg(quotient))

    minimised = to_bes(quotient)
    print("== minimised equation system ==")
    print(print_bes(minimised))
    print(f"size {size(minimised)}, {len(minimised)} equations\n")

    print("== solutions ==")
    for x, b in solution_on_bound(minimised).items():
        print(f"  {x} = {str(b).lower()}")
    sem = mc_semantics(lts, phi)
    print(f"states satisfying the formula: {' '.join(sorted(sem))}\n")

    report = run_pipeline(lts, phi, root_state="s0", do_normalise=False)
    print("== pipeline report ==")
    for line in report.lines():
        print(" ", line)
    print("  timings:", {k: f"{v * 1000:.1f}ms" for k, v in report.timings.items()})


if __name__ == "__main__":
    main()
