"""Fixed example markets and seeded random instances.

Random draws use :class:`random.Random` (Mersenne Twister) seeded with the
config seed, so outputs are reproducible across runs and platforms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .model import Instance, make_instance
from .reduction import GadgetMap, UndirectedGraph, reduce_is_to_socstable


class UnknownFixture(KeyError):
    pass


def fig1() -> Instance:
    return make_instance(
        ["m1", "m2"],
        ["w1", "w2"],
        {"m1": ["w2", "w1"], "m2": ["w2", "w1"]},
        {"w1": ["m1"], "w2": ["m1", "m2"]},
        [("m1", "w1"), ("m2", "w2")],
    )


def tight() -> Instance:
    return make_instance(
        ["m1", "m2", "m3"],
        ["w1", "w2", "w3"],
        {"m1": ["w1", "w2"], "m2": ["w1", "w3", "w2"], "m3": ["w3"]},
        {"w1": ["m2", "m1"], "w2": ["m1"], "w3": ["m2", "m3"]},
        [("m1", "w1"), ("m3", "w3"), ("m2", "w3")],
    )


def single_edge_graph() -> UndirectedGraph:
    return UndirectedGraph.build(["v1", "v2"], [("v1", "v2")])


def triangle_graph() -> UndirectedGraph:
    return UndirectedGraph.build(["v1", "v2", "v3"], [("v1", "v2"), ("v2", "v3"), ("v1", "v3")])


FIXTURES = ("FIG1", "TIGHT", "GADGET", "K3RED")


def fixture(name: str) -> Instance | tuple[Instance, GadgetMap]:
    """Instances from the worked examples. GADGET and K3RED also return the gadget map."""
    key = name.upper()
    if key == "FIG1":
        return fig1()
    if key == "TIGHT":
        return tight()
    if key == "GADGET":
        return reduce_is_to_socstable(single_edge_graph())
    if key == "K3RED":
        return reduce_is_to_socstable(triangle_graph())
    raise UnknownFixture(name)


@dataclass(frozen=True)
class GenConfig:
    n_men: int
    n_women: int
    p_accept: float
    p_social: float
    seed: int
    # one coin per side instead of a shared one
    asymmetric: bool = False

    def __post_init__(self) -> None:
        if self.n_men < 0 or self.n_women < 0:
            raise ValueError("agent counts must be non-negative")
        for p in (self.p_accept, self.p_social):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"probability {p} outside [0, 1]")


def gen_random(config: GenConfig) -> Instance:
    rng = random.Random(config.seed)
    men = [f"m{i + 1}" for i in range(config.n_men)]
    women = [f"w{j + 1}" for j in range(config.n_women)]
    men_acc: dict[str, list[str]] = {m: [] for m in men}
    women_acc: dict[str, list[str]] = {w: [] for w in women}
    edges = []
    for m in men:
        for w in women:
            if config.asymmetric:
                if rng.random() < config.p_accept:
                    men_acc[m].append(w)
                if rng.random() < config.p_accept:
                    women_acc[w].append(m)
            elif rng.random() < config.p_accept:
                men_acc[m].append(w)
                women_acc[w].append(m)
            if rng.random() < config.p_social:
                edges.append((m, w))
    for lst in (*men_acc.values(), *women_acc.values()):
        rng.shuffle(lst)
    return make_instance(men, women, men_acc, women_acc, edges)


def gen_random_graph(n: int, p_edge: float, seed: Optional[int] = 0) -> UndirectedGraph:
    if n < 0 or not 0.0 <= p_edge <= 1.0:
        raise ValueError("need n >= 0 and p_edge in [0, 1]")
    rng = random.Random(seed)
    verts = [f"v{i + 1}" for i in range(n)]
    edges = [
        (verts[i], verts[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p_edge
    ]
    return UndirectedGraph.build(verts, edges)


def all_graphs(n: int) -> list[UndirectedGraph]:
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    verts = [f"v{i + 1}" for i in range(n)]
    slots = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)]
    out = []
    for mask in range(1 << len(slots)):
        out.append(UndirectedGraph.build(verts, [e for k, e in enumerate(slots) if mask >> k & 1]))
    return out
