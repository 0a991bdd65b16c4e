"""Man-proposing deferred acceptance with a proposal log."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .model import Instance, Matching

WomanOrder = Mapping[str, Sequence[str]]


class Outcome(str, enum.Enum):
    ACCEPTED = "accepted"  # she was single
    DISPLACED = "displaced"  # accepted, previous partner rejected
    REJECTED = "rejected"


@dataclass(frozen=True)
class Proposal:
    man: str
    woman: str
    outcome: Outcome
    displaced: Optional[str] = None


@dataclass
class SolveTrace:
    proposals: list[Proposal] = field(default_factory=list)

    @property
    def rounds(self) -> int:
        # one proposal per round
        return len(self.proposals)

    def format(self) -> str:
        lines = []
        for p in self.proposals:
            extra = f" (drops {p.displaced})" if p.displaced else ""
            lines.append(f"{p.man} -> {p.woman}: {p.outcome.value}{extra}")
        return "\n".join(lines)


def true_order(instance: Instance) -> dict[str, tuple[str, ...]]:
    return {w: tuple(instance.women_prefs[w]) for w in instance.women}


def man_proposing_da(
    instance: Instance,
    woman_order: Optional[WomanOrder] = None,
    *,
    lifo: bool = False,
) -> tuple[Matching, SolveTrace]:
    """Run deferred acceptance with men's true lists and ``woman_order``.

    ``woman_order`` defaults to the women's true lists. Free men are served
    FIFO in input order; ``lifo=True`` serves the most recently freed man first
    (the outcome is the same, only the trace differs).
    """
    order = true_order(instance) if woman_order is None else woman_order
    wrank = {w: {m: i for i, m in enumerate(order.get(w, ()))} for w in instance.women}
    next_idx = {m: 0 for m in instance.men}
    holds: dict[str, str] = {}
    trace = SolveTrace()

    free: deque[str] = deque(m for m in instance.men if instance.men_prefs[m])
    while free:
        m = free.pop() if lifo else free.popleft()
        prefs = instance.men_prefs[m]
        w = prefs[next_idx[m]]
        next_idx[m] += 1
        rank = wrank[w]
        rejected: Optional[str] = None
        if m not in rank:
            trace.proposals.append(Proposal(m, w, Outcome.REJECTED))
            rejected = m
        else:
            cur = holds.get(w)
            if cur is None:
                holds[w] = m
                trace.proposals.append(Proposal(m, w, Outcome.ACCEPTED))
            elif rank[m] < rank[cur]:
                holds[w] = m
                trace.proposals.append(Proposal(m, w, Outcome.DISPLACED, cur))
                rejected = cur
            else:
                trace.proposals.append(Proposal(m, w, Outcome.REJECTED))
                rejected = m
        if rejected is not None and next_idx[rejected] < len(instance.men_prefs[rejected]):
            free.append(rejected)

    return Matching(frozenset((m, w) for w, m in holds.items())), trace


def assert_da_properties(
    trace: SolveTrace,
    matching: Matching,
    instance: Instance,
    woman_order: Optional[WomanOrder] = None,
) -> bool:
    """Check the two classic deferred-acceptance facts on a finished run.

    1. A woman ends single iff no man she finds acceptable proposed to her.
    2. A man ends single iff he proposed to every woman on his list.

    Each man's proposals must also follow his list without skips.
    """
    order = true_order(instance) if woman_order is None else woman_order
    acceptable = {w: set(order.get(w, ())) for w in instance.women}
    made: dict[str, list[str]] = {m: [] for m in instance.men}
    courted: set[str] = set()
    for p in trace.proposals:
        made[p.man].append(p.woman)
        if p.man in acceptable[p.woman]:
            courted.add(p.woman)

    for m in instance.men:
        prefs = instance.men_prefs[m]
        if tuple(made[m]) != tuple(prefs[: len(made[m])]):
            return False
        partner = matching.wife.get(m)
        if partner is None:
            if len(made[m]) != len(prefs):
                return False
        # a matched man may have reached his last choice; he must hold the
        # woman he proposed to most recently
        elif not made[m] or made[m][-1] != partner:
            return False
    for w in instance.women:
        if (w not in matching.husband) != (w not in courted):
            return False
    return True
