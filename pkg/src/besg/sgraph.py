"""Structure graphs: vertex-labelled graphs with a decoration (conjunctive,
disjunctive, true, false), an optional rank, and an optional free-variable
label per vertex.  Construction from a BES lives in sos.py, translation back
in translate.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .errors import BesgError


class Dec(Enum):
    AND = "and"
    OR = "or"
    TOP = "top"
    BOT = "bot"

    @property
    def symbol(self) -> str:
        return {"and": "▲", "or": "▼", "top": "⊤", "bot": "⊥"}[self.value]

    @property
    def ascii(self) -> str:
        return {"and": "/\\", "or": "\\/", "top": "top", "bot": "bot"}[self.value]


def id_key(v: str) -> tuple[int, str]:
    # Orders the builder's numeric ids numerically and is total on any ids.
    return (len(v), v)


@dataclass(frozen=True)
class StructureGraph:
    vertices: tuple[str, ...]
    root: str
    succ: Mapping[str, tuple[str, ...]]
    dec: Mapping[str, Dec]
    rank: Mapping[str, int]
    fv: Mapping[str, str]

    def successors(self, v: str) -> tuple[str, ...]:
        return self.succ.get(v, ())

    def has_successor(self, v: str) -> bool:
        return bool(self.succ.get(v))

    def edges(self) -> list[tuple[str, str]]:
        return [(u, v) for u in self.vertices for v in self.successors(u)]

    def label(self, v: str) -> tuple:
        """The (decoration, rank, free-variable) triple bisimilarity matches on."""
        return (self.dec.get(v), self.rank.get(v), self.fv.get(v))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)


def make_graph(vertices: Iterable[str], root: str,
               edges: Iterable[tuple[str, str]],
               dec: Mapping[str, Dec] | None = None,
               rank: Mapping[str, int] | None = None,
               fv: Mapping[str, str] | None = None) -> StructureGraph:
    verts = tuple(sorted(set(vertices), key=id_key))
    vset = set(verts)
    dec = dict(dec or {})
    rank = dict(rank or {})
    fv = dict(fv or {})
    if root not in vset:
        raise BesgError(f"root {root!r} not a vertex")
    for m in (dec, rank, fv):
        for v in m:
            if v not in vset:
                raise BesgError(f"labelled vertex {v!r} not a vertex")
    succ: dict[str, list[str]] = {}
    for u, v in edges:
        if u not in vset or v not in vset:
            raise BesgError(f"edge ({u!r}, {v!r}) leaves the vertex set")
        succ.setdefault(u, []).append(v)
    packed = {u: tuple(sorted(set(vs), key=id_key)) for u, vs in succ.items()}
    return StructureGraph(verts, root, packed, dec, rank, fv)


def reachable(sg: StructureGraph, start: str | None = None) -> set[str]:
    start = sg.root if start is None else start
    seen = {start}
    todo = [start]
    while todo:
        for w in sg.successors(todo.pop()):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def is_bessy(sg: StructureGraph) -> bool:
    """The four constraints that make a structure graph translatable back to
    a BES: constants and free variables are sinks; a vertex is decorated
    with a connective or ranked iff it has a successor; branching vertices
    carry a connective; every cycle passes a ranked vertex."""
    for v in sg.vertices:
        has_succ = sg.has_successor(v)
        if (sg.dec.get(v) in (Dec.TOP, Dec.BOT) or v in sg.fv) and has_succ:
            return False
        marked = sg.dec.get(v) in (Dec.AND, Dec.OR) or v in sg.rank
        if marked != has_succ:
            return False
        if len(sg.successors(v)) >= 2 and sg.dec.get(v) not in (Dec.AND, Dec.OR):
            return False
    return _unranked_part_acyclic(sg)


def _unranked_part_acyclic(sg: StructureGraph) -> bool:
    # Every cycle contains a ranked vertex iff the unranked-induced subgraph
    # is acyclic.
    unranked = [v for v in sg.vertices if v not in sg.rank]
    state: dict[str, int] = {}  # 1 = on stack, 2 = done

    def visit(v: str) -> bool:
        state[v] = 1
        for w in sg.successors(v):
            if w in sg.rank:
                continue
            s = state.get(w)
            if s == 1:
                return False
            if s is None and not visit(w):
                return False
        state[v] = 2
        return True

    return all(visit(v) for v in unranked if v not in state)


def normalise(sg: StructureGraph) -> StructureGraph:
    """Give rank 0 to every unranked vertex that has a successor; everything
    else is kept."""
    rank = dict(sg.rank)
    for v in sg.vertices:
        if v not in rank and sg.has_successor(v):
            rank[v] = 0
    return StructureGraph(sg.vertices, sg.root, dict(sg.succ), dict(sg.dec), rank, dict(sg.fv))


def is_normalised(sg: StructureGraph) -> bool:
    return all(v in sg.rank for v in sg.vertices if sg.has_successor(v))
