"""Labelled transition systems and the modal mu-calculus: the fixpoint
semantics (the model-checking oracle), the encoder into Boolean equation
systems, strong bisimulation minimisation of LTSs, and safe abstraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .bes import (And, Bes, Const, Equation, Or, PropFormula, Sign, Var,
                  VarOrder, DEFAULT_ORDER, big_and, big_or)
from .bisim import Partition, refine
from .errors import BesgError, PreconditionError
from .sgraph import id_key

TAU = "tau"


@dataclass(frozen=True)
class Lts:
    """Finite, non-empty states and actions; transitions are a relation."""

    states: tuple[str, ...]
    actions: tuple[str, ...]
    transitions: frozenset[tuple[str, str, str]]
    initial: str

    def __post_init__(self):
        if not self.states or not self.actions:
            raise BesgError("an LTS needs at least one state and one action")
        if self.initial not in self.states:
            raise BesgError(f"initial state {self.initial!r} unknown")
        for s, a, t in self.transitions:
            if s not in self.states or t not in self.states or a not in self.actions:
                raise BesgError(f"transition ({s},{a},{t}) leaves the LTS")

    def successors(self, s: str, actions: frozenset[str]) -> list[str]:
        return sorted({t for (u, a, t) in self.transitions if u == s and a in actions})


def make_lts(states: Iterable[str], actions: Iterable[str],
             transitions: Iterable[tuple[str, str, str]],
             initial: str | None = None) -> Lts:
    states = tuple(sorted(set(states)))
    return Lts(states, tuple(sorted(set(actions))), frozenset(transitions),
               states[0] if initial is None else initial)


# ---------------------------------------------------------------------------
# Formulae.  Action sets are either explicit or the complement of an explicit
# set; complements are a notational shorthand resolved against a concrete
# action alphabet at use time.

@dataclass(frozen=True)
class ActionSet:
    actions: frozenset[str]
    complement: bool = False

    def resolve(self, alphabet: Iterable[str]) -> frozenset[str]:
        if self.complement:
            return frozenset(alphabet) - self.actions
        return self.actions


def acts(*names: str) -> ActionSet:
    return ActionSet(frozenset(names))


def not_acts(*names: str) -> ActionSet:
    return ActionSet(frozenset(names), complement=True)


@dataclass(frozen=True)
class MConst:
    value: bool


@dataclass(frozen=True)
class MVar:
    name: str


@dataclass(frozen=True)
class MAnd:
    left: "MuFormula"
    right: "MuFormula"


@dataclass(frozen=True)
class MOr:
    left: "MuFormula"
    right: "MuFormula"


@dataclass(frozen=True)
class Box:
    acts: ActionSet
    body: "MuFormula"


@dataclass(frozen=True)
class Diamond:
    acts: ActionSet
    body: "MuFormula"


@dataclass(frozen=True)
class Fix:
    sign: Sign
    var: str
    body: "MuFormula"


MuFormula = Union[MConst, MVar, MAnd, MOr, Box, Diamond, Fix]


def mu_subformulas(phi: MuFormula):
    yield phi
    match phi:
        case MAnd(l, r) | MOr(l, r):
            yield from mu_subformulas(l)
            yield from mu_subformulas(r)
        case Box(_, b) | Diamond(_, b) | Fix(_, _, b):
            yield from mu_subformulas(b)


def mu_bnd(phi: MuFormula) -> frozenset[str]:
    return frozenset(f.var for f in mu_subformulas(phi) if isinstance(f, Fix))


def mu_occ(phi: MuFormula) -> frozenset[str]:
    return frozenset(f.name for f in mu_subformulas(phi) if isinstance(f, MVar))


def mu_closed(phi: MuFormula) -> bool:
    return mu_occ(phi) <= mu_bnd(phi)


def mu_size(phi: MuFormula) -> int:
    return sum(1 for _ in mu_subformulas(phi))


def check_well_formed(phi: MuFormula) -> None:
    """No two subformulae bind the same variable, and no variable is both
    bound somewhere and free somewhere."""
    binders = [f.var for f in mu_subformulas(phi) if isinstance(f, Fix)]
    if len(binders) != len(set(binders)):
        raise PreconditionError("a variable is bound by two fixpoints")
    free = _free_vars(phi, frozenset())
    if free & set(binders):
        raise PreconditionError("a variable occurs both free and bound")


def _free_vars(phi: MuFormula, bound: frozenset[str]) -> frozenset[str]:
    match phi:
        case MConst():
            return frozenset()
        case MVar(x):
            return frozenset() if x in bound else frozenset((x,))
        case MAnd(l, r) | MOr(l, r):
            return _free_vars(l, bound) | _free_vars(r, bound)
        case Box(_, b) | Diamond(_, b):
            return _free_vars(b, bound)
        case Fix(_, x, b):
            return _free_vars(b, bound | {x})
    raise TypeError(f"not a mu-calculus formula: {phi!r}")


def expand_complements(phi: MuFormula, alphabet: Iterable[str]) -> MuFormula:
    """Resolve every complemented action set against the given alphabet.
    Fixes the meaning of modalities before the alphabet changes (e.g. by
    abstraction)."""
    alphabet = frozenset(alphabet)
    match phi:
        case MConst() | MVar():
            return phi
        case MAnd(l, r):
            return MAnd(expand_complements(l, alphabet), expand_complements(r, alphabet))
        case MOr(l, r):
            return MOr(expand_complements(l, alphabet), expand_complements(r, alphabet))
        case Box(a, b):
            return Box(ActionSet(a.resolve(alphabet)), expand_complements(b, alphabet))
        case Diamond(a, b):
            return Diamond(ActionSet(a.resolve(alphabet)), expand_complements(b, alphabet))
        case Fix(s, x, b):
            return Fix(s, x, expand_complements(b, alphabet))
    raise TypeError(f"not a mu-calculus formula: {phi!r}")


# ---------------------------------------------------------------------------
# Semantics.

StateEnv = Mapping[str, frozenset[str]]


def mc_semantics(lts: Lts, phi: MuFormula, theta: StateEnv | None = None) -> frozenset[str]:
    """States satisfying phi; fixpoints by naive iteration from the empty
    set (mu) or the full state set (nu)."""
    check_well_formed(phi)
    theta = dict(theta or {})
    full = frozenset(lts.states)

    def sem(f: MuFormula, env: dict) -> frozenset[str]:
        match f:
            case MConst(v):
                return full if v else frozenset()
            case MVar(x):
                return env.get(x, frozenset())
            case MAnd(l, r):
                return sem(l, env) & sem(r, env)
            case MOr(l, r):
                return sem(l, env) | sem(r, env)
            case Box(a, b):
                aa = a.resolve(lts.actions)
                inner = sem(b, env)
                return frozenset(s for s in full
                                 if all(t in inner for t in lts.successors(s, aa)))
            case Diamond(a, b):
                aa = a.resolve(lts.actions)
                inner = sem(b, env)
                return frozenset(s for s in full
                                 if any(t in inner for t in lts.successors(s, aa)))
            case Fix(sign, x, b):
                current = full if sign is Sign.NU else frozenset()
                while True:
                    env2 = dict(env)
                    env2[x] = current
                    nxt = sem(b, env2)
                    if nxt == current:
                        return current
                    current = nxt
        raise TypeError(f"not a mu-calculus formula: {f!r}")

    return sem(phi, theta)


# ---------------------------------------------------------------------------
# The encoder: the global model checking problem as an equation system.

def indexed_name(var: str, state: str) -> str:
    return f"{var}_{state}"


def _check_naming(lts: Lts, phi: MuFormula) -> None:
    names: dict[str, tuple[str, str]] = {}
    for v in sorted(mu_bnd(phi) | mu_occ(phi)):
        for s in lts.states:
            n = indexed_name(v, s)
            if n in names and names[n] != (v, s):
                raise PreconditionError(f"indexed name collision: {n}")
            names[n] = (v, s)


def rhs_s(lts: Lts, s: str, f: MuFormula, order: VarOrder = DEFAULT_ORDER) -> PropFormula:
    """Right-hand side of the equation for state s: modalities turn into
    big-and/big-or over the successor states' formulas, so an empty
    successor set gives true under a box and false under a diamond."""
    match f:
        case MConst(v):
            return Const(v)
        case MVar(x):
            return Var(indexed_name(x, s))
        case MAnd(l, r):
            return And(rhs_s(lts, s, l, order), rhs_s(lts, s, r, order))
        case MOr(l, r):
            return Or(rhs_s(lts, s, l, order), rhs_s(lts, s, r, order))
        case Box(a, b):
            ts = lts.successors(s, a.resolve(lts.actions))
            return big_and((rhs_s(lts, t, b, order) for t in ts), order)
        case Diamond(a, b):
            ts = lts.successors(s, a.resolve(lts.actions))
            return big_or((rhs_s(lts, t, b, order) for t in ts), order)
        case Fix(_, x, _):
            return Var(indexed_name(x, s))
    raise TypeError(f"not a mu-calculus formula: {f!r}")


def encode(lts: Lts, phi: MuFormula, order: VarOrder = DEFAULT_ORDER) -> Bes:
    """One sign-block of equations per fixpoint subformula, one equation per
    state, blocks in formula order, equations within a block by ascending
    left-hand side."""
    check_well_formed(phi)
    _check_naming(lts, phi)

    def gen(f: MuFormula) -> list[Equation]:
        match f:
            case MConst() | MVar():
                return []
            case MAnd(l, r) | MOr(l, r):
                return gen(l) + gen(r)
            case Box(_, b) | Diamond(_, b):
                return gen(b)
            case Fix(sign, x, b):
                block = [Equation(sign, indexed_name(x, s), rhs_s(lts, s, b, order))
                         for s in lts.states]
                block.sort(key=lambda eq: eq.lhs)
                return block + gen(b)
        raise TypeError(f"not a mu-calculus formula: {f!r}")

    return Bes(tuple(gen(phi)))


def state_env_to_bes_env(lts: Lts, theta: StateEnv | None = None):
    """BES environment matching a state environment: Y_t is true iff t is in
    theta(Y)."""
    from .solve import Environment
    theta = theta or {}
    assignment = {indexed_name(v, t): (t in states)
                  for v, states in theta.items() for t in lts.states}
    return Environment(assignment)


# ---------------------------------------------------------------------------
# LTS minimisation and abstraction.

def lts_bisim_partition(lts: Lts) -> Partition:
    out: dict[str, list[tuple[str, str]]] = {s: [] for s in lts.states}
    for s, a, t in lts.transitions:
        out[s].append((a, t))

    def sig(s: str, block: Mapping[str, int]):
        return frozenset((a, block[t]) for (a, t) in out[s])

    return refine(lts.states, lambda s: 0, sig)


def lts_bisim_minimise(lts: Lts) -> tuple[Lts, Partition]:
    part = lts_bisim_partition(lts)
    rep: dict[int, str] = {}
    for s in sorted(lts.states, key=id_key):
        rep.setdefault(part.block_of[s], s)
    name = lambda s: rep[part.block_of[s]]
    transitions = {(name(s), a, name(t)) for (s, a, t) in lts.transitions}
    quotient = make_lts(set(rep.values()), lts.actions, transitions, name(lts.initial))
    return quotient, part


def lts_bisimilar(lts: Lts, s: str, t: str) -> bool:
    return lts_bisim_partition(lts).same(s, t)


def abstract(lts: Lts, hidden: Iterable[str]) -> Lts:
    """Relabel the hidden actions to tau; other transitions are untouched and
    duplicate tau transitions collapse."""
    hidden = frozenset(hidden)
    if TAU in lts.actions:
        raise PreconditionError(f"action {TAU!r} already present")
    unknown = hidden - set(lts.actions)
    if unknown:
        raise PreconditionError(f"cannot hide unknown actions: {sorted(unknown)}")
    transitions = {(s, TAU if a in hidden else a, t) for (s, a, t) in lts.transitions}
    return make_lts(lts.states, set(lts.actions) | {TAU}, transitions, lts.initial)


def is_safe_abstraction(lts: Lts, hidden: Iterable[str], phi: MuFormula) -> bool:
    """Safe iff every modality's action set, complements expanded over the
    LTS's alphabet, avoids the hidden actions."""
    hidden = frozenset(hidden)
    for f in mu_subformulas(phi):
        if isinstance(f, (Box, Diamond)):
            if f.acts.resolve(lts.actions) & hidden:
                return False
    return True
