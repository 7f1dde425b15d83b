"""Boolean equation systems: proposition formulae, fixpoint equations, and the
syntactic machinery around them (bound and occurring variables, ranks, textual
substitution, the size metric, and the duplicating big-and/big-or builders).

A BES is an ordered sequence of equations ``(sigma X = f)``; the order encodes
fixpoint priority, leftmost outweighing the rest.  All values here are
immutable and all operations are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from .errors import BesgError

IDENT_RE = re.compile(r"[A-Za-z0-9_']+\Z")


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class And:
    left: "PropFormula"
    right: "PropFormula"


@dataclass(frozen=True)
class Or:
    left: "PropFormula"
    right: "PropFormula"


PropFormula = Union[Const, Var, And, Or]

TRUE = Const(True)
FALSE = Const(False)


class Sign(Enum):
    MU = "mu"
    NU = "nu"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Equation:
    sign: Sign
    lhs: str
    rhs: PropFormula


@dataclass(frozen=True)
class Bes:
    """Well-formed equation system: each variable bound at most once."""

    equations: tuple[Equation, ...]

    def __post_init__(self):
        seen = set()
        for eq in self.equations:
            if eq.lhs in seen:
                raise BesgError(f"variable {eq.lhs} bound more than once")
            seen.add(eq.lhs)

    def __len__(self):
        return len(self.equations)


def bnd(system: Bes) -> frozenset[str]:
    return frozenset(eq.lhs for eq in system.equations)


def occ(item: Bes | PropFormula) -> frozenset[str]:
    """Variables occurring in a formula, or in the right-hand sides of a BES."""
    if isinstance(item, Bes):
        out: set[str] = set()
        for eq in item.equations:
            out |= occ(eq.rhs)
        return frozenset(out)
    match item:
        case Const():
            return frozenset()
        case Var(name):
            return frozenset((name,))
        case And(l, r) | Or(l, r):
            return occ(l) | occ(r)
    raise TypeError(f"not a formula: {item!r}")


def is_closed(system: Bes) -> bool:
    return occ(system) <= bnd(system)


def _ops_used(f: PropFormula, acc: set) -> None:
    match f:
        case And(l, r):
            acc.add(And)
            _ops_used(l, acc)
            _ops_used(r, acc)
        case Or(l, r):
            acc.add(Or)
            _ops_used(l, acc)
            _ops_used(r, acc)


def is_simple_form(system: Bes) -> bool:
    """No right-hand side mixes conjunction and disjunction."""
    for eq in system.equations:
        ops: set = set()
        _ops_used(eq.rhs, ops)
        if len(ops) > 1:
            return False
    return True


def rank_map(system: Bes) -> dict[str, int]:
    """Rank of every bound variable, computed in one right-to-left pass.

    Blocks of like-signed equations are counted from the right, the last block
    getting 0 when its sign is nu and 1 otherwise; each sign alternation
    increments.  Rank parity therefore encodes the sign: odd iff mu.
    """
    ranks: dict[str, int] = {}
    block = None
    prev_sign = None
    for eq in reversed(system.equations):
        if block is None:
            block = 0 if eq.sign is Sign.NU else 1
        elif eq.sign is not prev_sign:
            block += 1
        prev_sign = eq.sign
        ranks[eq.lhs] = block
    return ranks


def rank(system: Bes, x: str) -> int:
    if x not in bnd(system):
        raise BesgError(f"variable not bound: {x}")
    return rank_map(system)[x]


def subst_formula(f: PropFormula, x: str, g: PropFormula) -> PropFormula:
    match f:
        case Var(name) if name == x:
            return g
        case Const() | Var():
            return f
        case And(l, r):
            return And(subst_formula(l, x, g), subst_formula(r, x, g))
        case Or(l, r):
            return Or(subst_formula(l, x, g), subst_formula(r, x, g))
    raise TypeError(f"not a formula: {f!r}")


def substitute(system: Bes, x: str, b: Const | bool) -> Bes:
    """E[x := b] for x free in E: purely textual, no simplification."""
    if isinstance(b, bool):
        b = Const(b)
    if x in bnd(system):
        raise BesgError(f"cannot substitute bound variable: {x}")
    return Bes(tuple(Equation(eq.sign, eq.lhs, subst_formula(eq.rhs, x, b))
                     for eq in system.equations))


def size(item: Bes | PropFormula) -> int:
    """Parse-tree node count; for a BES, sum over equations of 1 + size(rhs)."""
    if isinstance(item, Bes):
        return sum(1 + size(eq.rhs) for eq in item.equations)
    match item:
        case Const() | Var():
            return 1
        case And(l, r) | Or(l, r):
            return 1 + size(l) + size(r)
    raise TypeError(f"not a formula: {item!r}")


# ---------------------------------------------------------------------------
# The total order used by the big-and/big-or builders.

def _tokens(f: PropFormula) -> tuple:
    # Preorder token sequence; injective on trees since arities are fixed.
    match f:
        case Const(v):
            return ((0,) if v else (1,),)
        case Var(name):
            return ((2, name),)
        case And(l, r):
            return ((3,),) + _tokens(l) + _tokens(r)
        case Or(l, r):
            return ((4,),) + _tokens(l) + _tokens(r)
    raise TypeError(f"not a formula: {f!r}")


@dataclass(frozen=True)
class VarOrder:
    """Total order on {true, false} and identifiers, lifted to formulae.

    Atoms: true, then false, then identifiers in byte order.  Formulae: larger
    trees first, equal sizes broken by the preorder token sequence; so in a
    big-and/big-or the structurally biggest operand heads the chain and the
    smallest lands in the duplicated tail position.
    """

    def key(self, f: PropFormula) -> tuple:
        return (-size(f), _tokens(f))

    def sorted(self, fs: Iterable[PropFormula]) -> list[PropFormula]:
        return sorted(set(fs), key=self.key)


DEFAULT_ORDER = VarOrder()


def _big(fs, order, op, empty):
    items = order.sorted(fs)
    if not items:
        return empty
    acc = op(items[-1], items[-1])  # singleton duplication
    for f in reversed(items[:-1]):
        acc = op(f, acc)
    return acc


def big_and(fs: Iterable[PropFormula], order: VarOrder = DEFAULT_ORDER) -> PropFormula:
    """Nested conjunction of a set: empty -> true, {f} -> f ∧ f, otherwise a
    right-nested chain in order with the last element duplicated."""
    return _big(fs, order, And, TRUE)


def big_or(fs: Iterable[PropFormula], order: VarOrder = DEFAULT_ORDER) -> PropFormula:
    return _big(fs, order, Or, FALSE)


def check_identifier(name: str) -> str:
    if not IDENT_RE.match(name):
        raise BesgError(f"bad identifier: {name!r}")
    return name
