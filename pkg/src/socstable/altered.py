"""Altered women's preferences used by socGS.

Each woman's acceptable men are split into a promoted prefix (social-graph
neighbours plus men given a second chance) and the remaining tail. Both parts
keep her true relative order; the prefix always ranks above the tail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .model import Instance


class AlreadyPromoted(ValueError):
    pass


@dataclass(frozen=True)
class AlteredPrefState:
    t_sets: Mapping[str, tuple[str, ...]]
    tails: Mapping[str, tuple[str, ...]]
    second_chance: Mapping[str, bool]

    def order(self, woman: str) -> tuple[str, ...]:
        return self.t_sets[woman] + self.tails[woman]

    def orders(self) -> dict[str, tuple[str, ...]]:
        return {w: self.order(w) for w in self.t_sets}


def _split(prefs: tuple[str, ...], promoted: set[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    head = tuple(m for m in prefs if m in promoted)
    tail = tuple(m for m in prefs if m not in promoted)
    return head, tail


def init_altered(instance: Instance) -> AlteredPrefState:
    t_sets, tails = {}, {}
    for w in instance.women:
        t_sets[w], tails[w] = _split(instance.women_prefs[w], set(instance.women_neighbors[w]))
    return AlteredPrefState(t_sets, tails, {m: False for m in instance.men})


def promote(instance: Instance, state: AlteredPrefState, man: str) -> AlteredPrefState:
    """Give ``man`` his second chance: lift him into every prefix that can hold him.

    He lands at his true rank among the men already promoted by each woman;
    women who find him unacceptable are unaffected.
    """
    if state.second_chance[man]:
        raise AlreadyPromoted(f"{man!r} already had a second chance")
    t_sets, tails = dict(state.t_sets), dict(state.tails)
    for w in instance.women:
        if man in instance.women_rank[w] and man not in t_sets[w]:
            promoted = set(t_sets[w]) | {man}
            t_sets[w], tails[w] = _split(instance.women_prefs[w], promoted)
    flags = dict(state.second_chance)
    flags[man] = True
    return AlteredPrefState(t_sets, tails, flags)


def altered_order(state: AlteredPrefState, woman: str) -> tuple[str, ...]:
    return state.order(woman)
