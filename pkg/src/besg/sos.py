"""Construction of the structure graph of a formula in the context of an
equation system, by the deduction rules.

The rules stratify cleanly: decorations, ranks, and free-variable labels of a
term never depend on edges, so they are decided first, per term; edges are
then derived by structural recursion.  Terms are shared by structural
equality — the vertex for X ∧ Y in two different right-hand sides is one
vertex — and only the part reachable from the root term is kept.

Per-term summary of the rules:

* true / false carry the top / bottom decoration and have no successors.
* A variable bound by the system carries its rank; an unbound one carries
  the free-variable label.  A bound variable inherits the conjunctive or
  disjunctive decoration of its right-hand side when that side is an And/Or
  term (composite terms are never ranked, so the inheritance chain has
  depth one); its edges are those of a composite right-hand side (the
  right-hand side itself is not a vertex), or a single edge to an atomic
  right-hand side.
* An And term is conjunctive; its edges flatten through conjuncts that are
  themselves unranked And terms and otherwise point at the conjunct.
  Disjunction is dual, with the unranked premise checked on the operand
  being flattened on either side; anything else breaks commutativity of
  the graph semantics.
"""

from __future__ import annotations

from .bes import And, Bes, Const, Or, PropFormula, Var, rank_map
from .sgraph import Dec, StructureGraph, make_graph


def build(system: Bes, root: PropFormula) -> StructureGraph:
    """Reachable structure graph of ``root`` in the context of ``system``.
    Canonical vertex ids are decimal strings in depth-first first-visit
    order, left operand before right, a variable's right-hand side in
    syntactic order."""
    sg, _ = build_with_terms(system, root)
    return sg


def build_with_terms(system: Bes, root: PropFormula) -> tuple[StructureGraph, dict[str, PropFormula]]:
    """build plus the map from vertex id to the term the vertex stands for."""
    ranks = rank_map(system)
    defn = {eq.lhs: eq.rhs for eq in system.equations}

    def static(t: PropFormula):
        """Decoration, rank and free-variable label of a term (stratum one)."""
        match t:
            case Const(v):
                return (Dec.TOP if v else Dec.BOT), None, None
            case And():
                return Dec.AND, None, None
            case Or():
                return Dec.OR, None, None
            case Var(x):
                if x not in ranks:
                    return None, None, x
                rhs = defn[x]
                dec = Dec.AND if isinstance(rhs, And) else Dec.OR if isinstance(rhs, Or) else None
                return dec, ranks[x], None
        raise TypeError(f"not a formula: {t!r}")

    succ_cache: dict[PropFormula, list[PropFormula]] = {}

    def successors(t: PropFormula) -> list[PropFormula]:
        """Edge targets of a term (stratum two), deduplicated, in syntactic
        order."""
        if t in succ_cache:
            return succ_cache[t]
        out: list[PropFormula] = []

        def emit(u: PropFormula):
            if u not in out:
                out.append(u)

        match t:
            case Const():
                pass
            case Var(x):
                if x in ranks:
                    rhs = defn[x]
                    if isinstance(rhs, (And, Or)):
                        # Copy the composite right-hand side's edges; the
                        # right-hand side term itself is not reachable.
                        for u in successors(rhs):
                            emit(u)
                    else:
                        emit(rhs)
            case And(l, r) | Or(l, r):
                same = And if isinstance(t, And) else Or
                for child in (l, r):
                    # A same-connective composite child is unranked and
                    # flattened; anything else (other connective, constant,
                    # variable — ranked or free) gets a direct edge.
                    if isinstance(child, same):
                        for u in successors(child):
                            emit(u)
                    else:
                        emit(child)
        succ_cache[t] = out
        return out

    ids: dict[PropFormula, str] = {}

    def visit(t: PropFormula):
        ids[t] = str(len(ids))
        for u in successors(t):
            if u not in ids:
                visit(u)

    visit(root)

    edges = [(ids[t], ids[u]) for t in ids for u in successors(t)]
    dec: dict[str, Dec] = {}
    rank: dict[str, int] = {}
    fv: dict[str, str] = {}
    for t, v in ids.items():
        d, r, x = static(t)
        if d is not None:
            dec[v] = d
        if r is not None:
            rank[v] = r
        if x is not None:
            fv[v] = x
    sg = make_graph(ids.values(), ids[root], edges, dec, rank, fv)
    return sg, {v: t for t, v in ids.items()}
