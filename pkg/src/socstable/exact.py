"""Exhaustive search for maximum socially stable matchings on small markets."""

from __future__ import annotations

from typing import Iterator, Optional

from .model import Instance, Matching, Pair

DEFAULT_LIMIT = 16


class InstanceTooLarge(ValueError):
    pass


class _Search:
    """Branch over men in name order: each takes an acceptable free woman or stays single.

    A partial assignment is cut as soon as a social edge between a decided man
    and a matched woman blocks; both ends of such a pair are final, so the
    pair still blocks in every completion. Edges touching single women are
    checked at the leaves.
    """

    def __init__(self, instance: Instance):
        self.instance = instance
        self.men = sorted(instance.men)
        self.options = {
            m: sorted(w for w in instance.men_prefs[m] if m in instance.women_rank[w])
            for m in self.men
        }
        self.man_nbrs: dict[str, list[str]] = {m: [] for m in instance.men}
        self.woman_nbrs: dict[str, list[str]] = {w: [] for w in instance.women}
        for m, w in instance.social_edges:
            self.man_nbrs[m].append(w)
            self.woman_nbrs[w].append(m)
        self.wife: dict[str, Optional[str]] = {}
        self.husband: dict[str, str] = {}

    def _blocks(self, m: str, w: str) -> bool:
        mrank = self.instance.men_rank[m]
        wrank = self.instance.women_rank[w]
        if w not in mrank or m not in wrank:
            return False
        cur_w = self.wife.get(m)
        cur_m = self.husband.get(w)
        man_wants = cur_w is None or mrank[w] < mrank[cur_w]
        woman_wants = cur_m is None or wrank[m] < wrank[cur_m]
        return man_wants and woman_wants

    def _consistent(self, m: str, w: Optional[str]) -> bool:
        for w2 in self.man_nbrs[m]:
            if w2 in self.husband and self._blocks(m, w2):
                return False
        if w is not None:
            for m2 in self.woman_nbrs[w]:
                if m2 in self.wife and m2 != m and self._blocks(m2, w):
                    return False
        return True

    def _leaf_ok(self) -> bool:
        for w, nbrs in self.woman_nbrs.items():
            if w in self.husband:
                continue
            if any(self._blocks(m, w) for m in nbrs):
                return False
        return True

    def run(self, best_only: bool) -> Iterator[list[Pair]]:
        best = -1
        n = len(self.men)

        def rec(k: int, size: int) -> Iterator[list[Pair]]:
            nonlocal best
            if best_only and size + (n - k) <= best:
                return
            if k == n:
                if self._leaf_ok():
                    best = max(best, size)
                    yield [(m, w) for m, w in self.wife.items() if w is not None]
                return
            m = self.men[k]
            for w in self.options[m]:
                if w in self.husband:
                    continue
                self.wife[m] = w
                self.husband[w] = m
                if self._consistent(m, w):
                    yield from rec(k + 1, size + 1)
                del self.husband[w]
                del self.wife[m]
            self.wife[m] = None
            if self._consistent(m, None):
                yield from rec(k + 1, size)
            del self.wife[m]

        yield from rec(0, 0)


def _guard(instance: Instance, limit: int) -> None:
    if instance.n_agents > limit:
        raise InstanceTooLarge(
            f"instance has {instance.n_agents} agents, exact search limit is {limit}"
        )


def exact_max_socially_stable(instance: Instance, limit: int = DEFAULT_LIMIT) -> Matching:
    """A maximum socially stable matching; the lexicographically least one on ties.

    Raises InstanceTooLarge when the market has more than ``limit`` agents.
    """
    _guard(instance, limit)
    found: list[Pair] = []
    # Leaves arrive in lexicographic order, and the bound only admits strict
    # improvements, so the last leaf yielded is the least maximum matching.
    for pairs in _Search(instance).run(best_only=True):
        found = pairs
    return Matching(frozenset(found))


def enumerate_socially_stable(instance: Instance, limit: int = DEFAULT_LIMIT) -> list[Matching]:
    _guard(instance, limit)
    out = [Matching(frozenset(p)) for p in _Search(instance).run(best_only=False)]
    return sorted(out, key=lambda mt: (-len(mt), mt.key()))
