"""From BESsy structure graphs back to formulae and equation systems, and the
relevant-variable restriction on the BES side.

phi reconstructs a formula for a vertex; ranked vertices become fresh
variables (X_<vertex id>), free-variable vertices keep their name.  to_bes
emits one equation per ranked vertex, mu when the rank is odd, ordered by
descending rank with ties broken on vertex id.
"""

from __future__ import annotations

from .bes import (Bes, Const, Equation, PropFormula, Sign, Var, VarOrder,
                  DEFAULT_ORDER, big_and, big_or, occ)
from .errors import PreconditionError
from .sgraph import Dec, StructureGraph, id_key, is_bessy


def fresh_var(v: str) -> str:
    return f"X_{v}"


def phi(sg: StructureGraph, u: str | None = None,
        order: VarOrder = DEFAULT_ORDER,
        _memo: dict | None = None) -> PropFormula:
    """Formula of a vertex: big-and/big-or over successors for unranked
    connective vertices, constants for top/bottom, the variable itself for a
    free-variable vertex, a fresh variable otherwise (i.e. ranked)."""
    if _memo is None:
        if not is_bessy(sg):
            raise PreconditionError("phi needs a BESsy structure graph")
        _memo = {}
    u = sg.root if u is None else u
    if u in _memo:
        return _memo[u]
    d = sg.dec.get(u)
    if d is Dec.AND and u not in sg.rank:
        f = big_and((phi(sg, w, order, _memo) for w in sg.successors(u)), order)
    elif d is Dec.OR and u not in sg.rank:
        f = big_or((phi(sg, w, order, _memo) for w in sg.successors(u)), order)
    elif d is Dec.TOP:
        f = Const(True)
    elif d is Dec.BOT:
        f = Const(False)
    elif u in sg.fv:
        f = Var(sg.fv[u])
    else:
        f = Var(fresh_var(u))
    _memo[u] = f
    return f


def rhs_of(sg: StructureGraph, u: str, order: VarOrder = DEFAULT_ORDER) -> PropFormula:
    """Right-hand side of a ranked vertex's equation."""
    if u not in sg.rank:
        raise PreconditionError(f"vertex {u!r} is unranked")
    if not is_bessy(sg):
        raise PreconditionError("rhs_of needs a BESsy structure graph")
    memo: dict = {}
    d = sg.dec.get(u)
    if d is Dec.AND:
        return big_and((phi(sg, w, order, memo) for w in sg.successors(u)), order)
    if d is Dec.OR:
        return big_or((phi(sg, w, order, memo) for w in sg.successors(u)), order)
    succs = sg.successors(u)
    assert len(succs) == 1  # BESsy: ranked implies a successor, undecorated implies at most one
    return phi(sg, succs[0], order, memo)


def to_bes(sg: StructureGraph, order: VarOrder = DEFAULT_ORDER) -> Bes:
    """Equation system of a BESsy structure graph: descending ranks, sign from
    rank parity."""
    if not is_bessy(sg):
        raise PreconditionError("to_bes needs a BESsy structure graph")
    fresh = {fresh_var(v) for v in sg.rank}
    clash = fresh & set(sg.fv.values())
    if clash:
        raise PreconditionError(f"free variables collide with generated names: {sorted(clash)}")
    memo: dict = {}
    eqs = []
    for u in sorted(sg.rank, key=lambda v: (-sg.rank[v], id_key(v))):
        d = sg.dec.get(u)
        if d is Dec.AND:
            rhs = big_and((phi(sg, w, order, memo) for w in sg.successors(u)), order)
        elif d is Dec.OR:
            rhs = big_or((phi(sg, w, order, memo) for w in sg.successors(u)), order)
        else:
            rhs = phi(sg, sg.successors(u)[0], order, memo)
        sign = Sign.MU if sg.rank[u] % 2 else Sign.NU
        eqs.append(Equation(sign, fresh_var(u), rhs))
    return Bes(tuple(eqs))


def kappa(system: Bes, f: PropFormula) -> frozenset[str]:
    """Relevant proposition variables: the occ(f)-closure under right-hand
    side occurrence through the system's equations."""
    defn = {eq.lhs: eq.rhs for eq in system.equations}
    out = set(occ(f))
    todo = list(out)
    while todo:
        y = todo.pop()
        if y in defn:
            for x in occ(defn[y]):
                if x not in out:
                    out.add(x)
                    todo.append(x)
    return frozenset(out)


def restrict(system: Bes, ks) -> Bes:
    """Keep the equations whose left-hand side is relevant, in order."""
    ks = set(ks)
    return Bes(tuple(eq for eq in system.equations if eq.lhs in ks))
