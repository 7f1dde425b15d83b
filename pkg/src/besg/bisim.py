"""Strong bisimulation by signature-based partition refinement (the
Kanellakis-Smolka scheme): start from the label partition, split blocks by
their successor-block signatures until stable.  O(n*m) rounds are fine at
desk scale.  Used both for structure graphs (unlabelled edges, vertex
labels) and, via mucalc, for LTSs (action-labelled signatures).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Sequence

from .sgraph import StructureGraph, id_key, make_graph


@dataclass(frozen=True)
class Partition:
    """Map from element to block id, plus the block count.  Block ids are
    dense integers, numbered by each block's least member."""

    block_of: Mapping[str, int]
    n_blocks: int

    def blocks(self) -> list[tuple[str, ...]]:
        out: dict[int, list[str]] = {}
        for x, b in self.block_of.items():
            out.setdefault(b, []).append(x)
        return [tuple(sorted(out[b], key=id_key)) for b in range(self.n_blocks)]

    def same(self, x: str, y: str) -> bool:
        return self.block_of[x] == self.block_of[y]


def refine(items: Sequence[str],
           initial_label: Callable[[str], Hashable],
           signature: Callable[[str, Mapping[str, int]], Hashable]) -> Partition:
    """Coarsest partition stable under ``signature``, starting from the
    ``initial_label`` partition.  Deterministic: block ids follow the least
    member in id_key order."""
    order = sorted(items, key=id_key)
    block: dict[str, int] = _number({x: initial_label(x) for x in order}, order)
    while True:
        sig = {x: (block[x], signature(x, block)) for x in order}
        new = _number(sig, order)
        if len(set(new.values())) == len(set(block.values())):
            return Partition(new, len(set(new.values())))
        block = new


def _number(keyed: Mapping[str, Hashable], order: Sequence[str]) -> dict[str, int]:
    ids: dict[Hashable, int] = {}
    out: dict[str, int] = {}
    for x in order:
        k = keyed[x]
        if k not in ids:
            ids[k] = len(ids)
        out[x] = ids[k]
    return out


def _sg_signature(sg: StructureGraph):
    def sig(v: str, block: Mapping[str, int]):
        return frozenset(block[w] for w in sg.successors(v))
    return sig


def bisim_partition(sg: StructureGraph) -> Partition:
    return refine(sg.vertices, sg.label, _sg_signature(sg))


def quotient(sg: StructureGraph, part: Partition) -> StructureGraph:
    """Label-preserving quotient; well defined because refinement never puts
    differently labelled vertices in one block."""
    rep: dict[int, str] = {}
    for v in sorted(sg.vertices, key=id_key):
        rep.setdefault(part.block_of[v], v)
    name = {b: rep[b] for b in rep}
    verts = set(name.values())
    edges = {(name[part.block_of[u]], name[part.block_of[w]])
             for u in sg.vertices for w in sg.successors(u)}
    dec = {name[part.block_of[v]]: d for v, d in sg.dec.items()}
    rank = {name[part.block_of[v]]: r for v, r in sg.rank.items()}
    fv = {name[part.block_of[v]]: x for v, x in sg.fv.items()}
    return make_graph(verts, name[part.block_of[sg.root]], edges, dec, rank, fv)


def bisim_minimise(sg: StructureGraph) -> tuple[StructureGraph, Partition]:
    part = bisim_partition(sg)
    return quotient(sg, part), part


def bisim_equiv(sg1: StructureGraph, sg2: StructureGraph) -> bool:
    """Roots related by some bisimulation: refine the disjoint union."""
    items = [f"a:{v}" for v in sg1.vertices] + [f"b:{v}" for v in sg2.vertices]

    def side(x: str):
        return (sg1 if x[:2] == "a:" else sg2), x[:2], x[2:]

    def label(x: str):
        g, _, v = side(x)
        return g.label(v)

    def sig(x: str, block: Mapping[str, int]):
        g, pre, v = side(x)
        return frozenset(block[pre + w] for w in g.successors(v))

    part = refine(items, label, sig)
    return part.block_of[f"a:{sg1.root}"] == part.block_of[f"b:{sg2.root}"]
