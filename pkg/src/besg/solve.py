"""Solution semantics for Boolean equation systems.

Two solvers are kept deliberately independent so that each can check the
other: solve_recursive transcribes the recursive definition of the solution
(exponential, the trusted reference at desk scale), and solve_gauss performs
backward substitution with local fixpoint resolution followed by a forward
evaluation pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .bes import And, Bes, Const, Or, PropFormula, Sign, Var, FALSE, TRUE


@dataclass(frozen=True)
class Environment:
    """Total map from proposition variables to booleans; unmapped variables
    take ``default``.  Updates are functional."""

    assignment: Mapping[str, bool] = field(default_factory=dict)
    default: bool = False

    def __call__(self, x: str) -> bool:
        return self.assignment.get(x, self.default)

    def set(self, x: str, b: bool) -> "Environment":
        updated = dict(self.assignment)
        updated[x] = b
        return Environment(updated, self.default)

    def leq(self, other: "Environment", names) -> bool:
        """The pointwise order on the given variables: self(x) implies other(x)."""
        return all((not self(x)) or other(x) for x in names)


EMPTY_ENV = Environment()


def eval_formula(f: PropFormula, env: Environment) -> bool:
    match f:
        case Const(v):
            return v
        case Var(name):
            return env(name)
        case And(l, r):
            return eval_formula(l, env) and eval_formula(r, env)
        case Or(l, r):
            return eval_formula(l, env) or eval_formula(r, env)
    raise TypeError(f"not a formula: {f!r}")


def solve_recursive(system: Bes, env: Environment = EMPTY_ENV) -> Environment:
    """The solution of a BES by its recursive definition: peel the first
    equation, solve the tail under the extremal assumption for its variable,
    evaluate the right-hand side, then solve the tail under that value.
    Exponential in the number of equations; the reference oracle."""
    eqs = system.equations

    def go(i: int, env: Environment) -> Environment:
        if i == len(eqs):
            return env
        eq = eqs[i]
        extremal = eq.sign is Sign.NU
        inner = go(i + 1, env.set(eq.lhs, extremal))
        value = eval_formula(eq.rhs, inner)
        return go(i + 1, env.set(eq.lhs, value))

    return go(0, env)


# Gauss elimination internals.  Substituted right-hand sides share subtrees
# heavily while their tree expansion explodes (big-and/big-or duplication,
# repeated back-substitution), so the solver works on hash-consed nodes:
# structurally equal working formulas are pointer-equal, every walk memoises
# on object identity, and cost follows the DAG rather than the tree.
# Simplification is internal to the solver; public operations never rewrite
# formulas.

class _Workspace:
    def __init__(self):
        self.nodes: dict = {}
        self.occs: dict[int, frozenset[str]] = {}
        self.true = self._leaf(TRUE)
        self.false = self._leaf(FALSE)

    def _leaf(self, f):
        key = (type(f), f.value if isinstance(f, Const) else f.name)
        out = self.nodes.get(key)
        if out is None:
            out = self.nodes[key] = f
            self.occs[id(out)] = frozenset() if isinstance(f, Const) else frozenset((f.name,))
        return out

    def join(self, op, l, r):
        """Simplifying, interning constructor over interned operands."""
        zero = self.false if op is And else self.true
        unit = self.true if op is And else self.false
        if l is zero or r is zero:
            return zero
        if l is unit:
            return r
        if r is unit:
            return l
        if l is r:
            return l
        key = (op, id(l), id(r))
        out = self.nodes.get(key)
        if out is None:
            out = self.nodes[key] = op(l, r)
            self.occs[id(out)] = self.occs[id(l)] | self.occs[id(r)]
        return out

    def intern(self, f: PropFormula, memo: dict) -> PropFormula:
        key = id(f)
        if key in memo:
            return memo[key]
        match f:
            case Const() | Var():
                out = self._leaf(f)
            case And(l, r) | Or(l, r):
                out = self.join(type(f), self.intern(l, memo), self.intern(r, memo))
            case _:
                raise TypeError(f"not a formula: {f!r}")
        memo[key] = out
        return out

    def occ(self, f: PropFormula) -> frozenset[str]:
        return self.occs[id(f)]

    def subst(self, f: PropFormula, x: str, g: PropFormula, memo: dict) -> PropFormula:
        # f and g interned; replacement re-simplifies on the way up.
        key = id(f)
        if key in memo:
            return memo[key]
        if x not in self.occs[key]:
            out = f
        else:
            match f:
                case Var():
                    out = g
                case And(l, r) | Or(l, r):
                    out = self.join(type(f), self.subst(l, x, g, memo),
                                    self.subst(r, x, g, memo))
                case _:
                    raise TypeError(f"not a formula: {f!r}")
        memo[key] = out
        return out


def _geval(f: PropFormula, env: Environment, memo: dict) -> bool:
    key = id(f)
    if key in memo:
        return memo[key]
    match f:
        case Const(v):
            out = v
        case Var(name):
            out = env(name)
        case And(l, r):
            out = _geval(l, env, memo) and _geval(r, env, memo)
        case Or(l, r):
            out = _geval(l, env, memo) or _geval(r, env, memo)
        case _:
            raise TypeError(f"not a formula: {f!r}")
    memo[key] = out
    return out


def solve_gauss(system: Bes, env: Environment = EMPTY_ENV) -> Environment:
    """Gauss elimination: walk the equations right to left, substituting the
    already-resolved later right-hand sides, resolving a self-dependency
    sigma X = f[X] by replacing X with true (nu) or false (mu); then evaluate
    left to right.  Agrees with solve_recursive on bnd."""
    ws = _Workspace()
    eqs = list(system.equations)
    resolved: list[PropFormula] = [ws.intern(eq.rhs, {}) for eq in eqs]
    for i in range(len(eqs) - 1, -1, -1):
        f = resolved[i]
        for j in range(len(eqs) - 1, i, -1):
            if eqs[j].lhs in ws.occ(f):
                f = ws.subst(f, eqs[j].lhs, resolved[j], {})
        if eqs[i].lhs in ws.occ(f):
            local = ws.true if eqs[i].sign is Sign.NU else ws.false
            f = ws.subst(f, eqs[i].lhs, local, {})
        resolved[i] = f
    out = env
    for i, eq in enumerate(eqs):
        out = out.set(eq.lhs, _geval(resolved[i], out, {}))
    return out


def solve(system: Bes, env: Environment = EMPTY_ENV, method: str = "gauss") -> Environment:
    if method == "gauss":
        return solve_gauss(system, env)
    if method == "recursive":
        return solve_recursive(system, env)
    raise ValueError(f"unknown method: {method}")


def solution_on_bound(system: Bes, env: Environment = EMPTY_ENV,
                      method: str = "gauss") -> dict[str, bool]:
    """Solution restricted to the bound variables, in equation order."""
    sol = solve(system, env, method)
    return {eq.lhs: sol(eq.lhs) for eq in system.equations}
