"""Boolean equation systems and their structure graphs: encode mu-calculus
model checking problems as BESs, derive structure graphs, minimise modulo
strong bisimulation, normalise, translate back, and solve."""

from .bes import (And, Bes, Const, Equation, Or, PropFormula, Sign, Var,
                  VarOrder, DEFAULT_ORDER, FALSE, TRUE, big_and, big_or, bnd,
                  is_closed, is_simple_form, occ, rank, rank_map, size,
                  substitute)
from .bisim import (Partition, bisim_equiv, bisim_minimise, bisim_partition,
                    quotient)
from .choice import (ChoiceFunction, Lasso, apply_choice, enumerate_choices,
                     find_dominated_lasso, solve_lasso)
from .errors import BesgError, ParseError, PreconditionError
from .mucalc import (ActionSet, Box, Diamond, Fix, Lts, MAnd, MConst, MOr,
                     MVar, MuFormula, abstract, acts, encode, expand_complements,
                     indexed_name, is_safe_abstraction, lts_bisim_minimise,
                     lts_bisimilar, make_lts, mc_semantics, not_acts, rhs_s)
from .pipeline import PipelineReport, run_pipeline
from .sgraph import (Dec, StructureGraph, is_bessy, is_normalised, make_graph,
                     normalise, reachable)
from .solve import (EMPTY_ENV, Environment, eval_formula, solve, solve_gauss,
                    solve_recursive, solution_on_bound)
from .sos import build
from .textio import (parse_aut, parse_bes, parse_formula, parse_mu_formula,
                     parse_sg, print_aut, print_bes, print_dot, print_formula,
                     print_sg)
from .translate import kappa, phi, restrict, rhs_of, to_bes
