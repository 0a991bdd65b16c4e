"""Independent Set to maximum socially stable matching, and back.

Every vertex v becomes a gadget of two men and two women:

* ``a`` (first man) ranks ``y``, then the ``y`` of each neighbour, then ``x``;
* ``y`` (second woman) ranks ``a``, then the ``a`` of each neighbour, then ``b``;
* ``b`` (second man) ranks only ``y``; ``x`` (first woman) ranks only ``a``.

Neighbours are listed in vertex enumeration order, and the social graph joins
each ``a`` to the ``y`` of every neighbour. A graph with ``n`` vertices has a
socially stable matching of size ``n + r`` exactly when it has an independent
set of size ``r``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .model import Instance, Matching, Pair, make_instance

DEFAULT_IS_LIMIT = 20
_NAME_RE = re.compile(r"^[^\s:#]+$")


class GraphError(ValueError):
    pass


class GraphTooLarge(ValueError):
    pass


class NotIndependent(ValueError):
    pass


class NormalizationDiverged(RuntimeError):
    pass


@dataclass(frozen=True)
class UndirectedGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> "UndirectedGraph":
        verts = tuple(vertices)
        seen: set[str] = set()
        for v in verts:
            if not _NAME_RE.match(v):
                raise GraphError(f"invalid vertex name {v!r}")
            if v in seen:
                raise GraphError(f"duplicate vertex {v!r}")
            seen.add(v)
        es = set()
        for a, b in edges:
            if a == b:
                raise GraphError(f"self-loop on {a!r}")
            for v in (a, b):
                if v not in seen:
                    raise GraphError(f"edge uses unknown vertex {v!r}")
            es.add(frozenset((a, b)))
        return cls(verts, frozenset(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        return self.vertices.index(v)

    def neighbors(self, v: str) -> list[str]:
        """Neighbours of ``v`` in enumeration order."""
        return [u for u in self.vertices if frozenset((u, v)) in self.edges]

    def is_independent(self, subset: Iterable[str]) -> bool:
        s = list(subset)
        return all(frozenset(p) not in self.edges for p in itertools.combinations(s, 2))

    def sorted_edges(self) -> list[tuple[str, str]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (pos[p[0]], pos[p[1]]))


class Gadget(NamedTuple):
    a: str  # first man
    b: str  # second man
    x: str  # first woman
    y: str  # second woman


GadgetMap = dict[str, Gadget]


def gadget_names(vertex: str) -> Gadget:
    return Gadget(f"m1_{vertex}", f"m2_{vertex}", f"w1_{vertex}", f"w2_{vertex}")


def reduce_is_to_socstable(graph: UndirectedGraph) -> tuple[Instance, GadgetMap]:
    gmap = {v: gadget_names(v) for v in graph.vertices}
    men, women = [], []
    men_prefs, women_prefs = {}, {}
    edges = []
    for v in graph.vertices:
        g = gmap[v]
        nbrs = graph.neighbors(v)
        men += [g.a, g.b]
        women += [g.x, g.y]
        men_prefs[g.a] = [g.y] + [gmap[u].y for u in nbrs] + [g.x]
        men_prefs[g.b] = [g.y]
        women_prefs[g.x] = [g.a]
        women_prefs[g.y] = [g.a] + [gmap[u].a for u in nbrs] + [g.b]
        edges += [(g.a, gmap[u].y) for u in nbrs]
    return make_instance(men, women, men_prefs, women_prefs, edges), gmap


def is_to_matching(graph: UndirectedGraph, gmap: GadgetMap, subset: Iterable[str]) -> Matching:
    """The size ``n + |S|`` matching built from an independent set ``S``."""
    chosen = set(subset)
    unknown = chosen - set(graph.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    if not graph.is_independent(sorted(chosen)):
        raise NotIndependent(f"{sorted(chosen)} contains adjacent vertices")
    pairs: list[Pair] = []
    for v in graph.vertices:
        g = gmap[v]
        if v in chosen:
            pairs += [(g.a, g.x), (g.b, g.y)]
        else:
            pairs.append((g.a, g.y))
    return Matching(frozenset(pairs))


def normalize_matching(instance: Instance, gmap: GadgetMap, matching: Matching) -> Matching:
    """Rewrite a socially stable matching so every first man is matched and no
    first man holds another vertex's second woman. Size never drops."""
    gadgets = list(gmap.values())
    owner_of_y = {g.y: g for g in gadgets}
    wife = dict(matching.wife)
    husband = dict(matching.husband)
    n = len(gadgets)

    def unmatch(man: str) -> None:
        w = wife.pop(man, None)
        if w is not None:
            del husband[w]

    steps = 0
    while True:
        g = next((g for g in gadgets if g.a not in wife), None)
        if g is None:
            break
        steps += 1
        if steps > 4 * n * n:
            raise NormalizationDiverged("first-man repair loop did not settle")
        holder = husband.get(g.y)
        if holder is not None:
            unmatch(holder)
        wife[g.a] = g.y
        husband[g.y] = g.a

    for g in gadgets:
        w = wife[g.a]
        if w == g.x or w == g.y:
            continue
        other = owner_of_y.get(w)
        if other is None:
            raise NormalizationDiverged(f"{g.a} is matched outside the gadget family to {w}")
        if wife.get(other.a) != g.y:
            raise NormalizationDiverged(
                f"cross pair ({g.a},{w}) has no mirror ({other.a},{g.y})"
            )
        wife[g.a], wife[other.a] = g.y, other.y
        husband[g.y], husband[other.y] = g.a, other.a

    return Matching(frozenset(wife.items()))


def extract_independent_set(
    instance: Instance, gmap: GadgetMap, matching: Matching
) -> list[str]:
    """Vertices whose second man is matched once ``matching`` is normalized."""
    norm = normalize_matching(instance, gmap, matching)
    return [v for v, g in gmap.items() if g.b in norm.wife]


def brute_force_max_is(graph: UndirectedGraph, limit: int = DEFAULT_IS_LIMIT) -> list[str]:
    """A maximum independent set, least in enumeration order among ties."""
    if graph.n > limit:
        raise GraphTooLarge(f"graph has {graph.n} vertices, limit is {limit}")
    for size in range(graph.n, 0, -1):
        for combo in itertools.combinations(graph.vertices, size):
            if graph.is_independent(combo):
                return list(combo)
    return []
