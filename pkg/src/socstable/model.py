"""Market data model: agents, preference lists, social edges and matchings.

Preference lists never contain the owner; an agent missing from a list is
unacceptable to its owner. Agent identity is ``(side, name)``, so a man and a
woman may share a name.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

_NAME_RE = re.compile(r"^[^\s:#]+$")


class Side(enum.Enum):
    MAN = "man"
    WOMAN = "woman"

    @property
    def other(self) -> "Side":
        return Side.WOMAN if self is Side.MAN else Side.MAN


class Agent(NamedTuple):
    side: Side
    name: str

    def __str__(self) -> str:
        return self.name


class InstanceError(ValueError):
    """Base class for malformed instances and matchings."""

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


class InvalidAgentName(InstanceError):
    pass


class DuplicateAgent(InstanceError):
    pass


class UnknownAgentInPref(InstanceError):
    pass


class DuplicateInPref(InstanceError):
    pass


class SelfSideEdge(InstanceError):
    pass


class UnknownAgentInEdge(InstanceError):
    pass


class UnknownAgent(InstanceError):
    pass


class InvalidMatching(InstanceError):
    pass


Pair = tuple[str, str]


@dataclass(frozen=True, eq=False)
class Instance:
    """A two-sided market with strict preferences and a bipartite social graph.

    ``men_prefs`` and ``women_prefs`` map each agent to its ranked list of
    acceptable partners (best first). ``social_edges`` holds ``(man, woman)``
    pairs; an edge says nothing about acceptability.

    Build instances through :func:`make_instance`, which validates them.
    """

    men: tuple[str, ...]
    women: tuple[str, ...]
    men_prefs: Mapping[str, tuple[str, ...]]
    women_prefs: Mapping[str, tuple[str, ...]]
    social_edges: frozenset[Pair] = field(default_factory=frozenset)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.men == other.men
            and self.women == other.women
            and dict(self.men_prefs) == dict(other.men_prefs)
            and dict(self.women_prefs) == dict(other.women_prefs)
            and self.social_edges == other.social_edges
        )

    def __repr__(self) -> str:
        return (
            f"Instance(men={list(self.men)}, women={list(self.women)}, "
            f"edges={sorted(self.social_edges)})"
        )

    @cached_property
    def men_rank(self) -> dict[str, dict[str, int]]:
        return {m: {w: i for i, w in enumerate(p)} for m, p in self.men_prefs.items()}

    @cached_property
    def women_rank(self) -> dict[str, dict[str, int]]:
        return {w: {m: i for i, m in enumerate(p)} for w, p in self.women_prefs.items()}

    @cached_property
    def women_neighbors(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {w: set() for w in self.women}
        for m, w in self.social_edges:
            out[w].add(m)
        return {w: frozenset(s) for w, s in out.items()}

    def prefs(self, agent: Agent) -> tuple[str, ...]:
        table = self.men_prefs if agent.side is Side.MAN else self.women_prefs
        try:
            return table[agent.name]
        except KeyError:
            raise UnknownAgent(f"unknown {agent.side.value} {agent.name!r}", agent.name) from None

    def has_agent(self, agent: Agent) -> bool:
        table = self.men_prefs if agent.side is Side.MAN else self.women_prefs
        return agent.name in table

    def mutually_acceptable(self, man: str, woman: str) -> bool:
        return woman in self.men_rank[man] and man in self.women_rank[woman]

    def with_edges(self, edges: Iterable[Pair]) -> "Instance":
        """Copy of this instance with its social graph replaced by ``edges``."""
        return validate_instance(
            Instance(self.men, self.women, self.men_prefs, self.women_prefs, frozenset(edges))
        )

    def complete_social_graph(self) -> "Instance":
        return self.with_edges((m, w) for m in self.men for w in self.women)

    @property
    def n_agents(self) -> int:
        return len(self.men) + len(self.women)


def _check_name(name: str) -> None:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise InvalidAgentName(f"invalid agent name {name!r}", str(name))


def _check_side(names: Sequence[str], side: Side) -> None:
    seen: set[str] = set()
    for name in names:
        _check_name(name)
        if name in seen:
            raise DuplicateAgent(f"duplicate {side.value} {name!r}", name)
        seen.add(name)


def _check_prefs(
    prefs: Mapping[str, Sequence[str]], owners: Sequence[str], others: Sequence[str], side: Side
) -> None:
    owner_set, other_set = set(owners), set(others)
    for owner, ranked in prefs.items():
        if owner not in owner_set:
            raise UnknownAgentInPref(
                f"preference list for unknown {side.value} {owner!r}", owner
            )
        seen: set[str] = set()
        for name in ranked:
            if name not in other_set:
                raise UnknownAgentInPref(
                    f"{owner!r} ranks unknown {side.other.value} {name!r}", name
                )
            if name in seen:
                raise DuplicateInPref(f"{owner!r} ranks {name!r} twice", name)
            seen.add(name)
    missing = owner_set - set(prefs)
    if missing:
        name = min(missing)
        raise UnknownAgentInPref(f"{side.value} {name!r} has no preference list", name)


def validate_instance(instance: Instance) -> Instance:
    """Check every structural invariant and return ``instance`` unchanged."""
    _check_side(instance.men, Side.MAN)
    _check_side(instance.women, Side.WOMAN)
    _check_prefs(instance.men_prefs, instance.men, instance.women, Side.MAN)
    _check_prefs(instance.women_prefs, instance.women, instance.men, Side.WOMAN)
    _check_edges(instance.social_edges, instance.men, instance.women)
    return instance


def _check_edges(edges: Iterable[Pair], men: Sequence[str], women: Sequence[str]) -> None:
    men_set, women_set = set(men), set(women)
    for edge in edges:
        a, b = edge
        if a in men_set and b in women_set:
            continue
        if (a in men_set and b in men_set) or (a in women_set and b in women_set):
            raise SelfSideEdge(f"edge ({a}, {b}) joins two agents of one side", f"{a} {b}")
        bad = b if a in men_set else a
        raise UnknownAgentInEdge(f"edge ({a}, {b}) has unknown endpoint {bad!r}", bad)


def make_instance(
    men: Iterable[str],
    women: Iterable[str],
    men_prefs: Optional[Mapping[str, Iterable[str]]] = None,
    women_prefs: Optional[Mapping[str, Iterable[str]]] = None,
    edges: Iterable[Pair] = (),
) -> Instance:
    """Build and validate an instance. Agents without a list get an empty one."""
    men_t = tuple(men)
    women_t = tuple(women)
    mp = {k: tuple(v) for k, v in (men_prefs or {}).items()}
    wp = {k: tuple(v) for k, v in (women_prefs or {}).items()}
    # Owners unknown to the instance must still be reported, so only fill gaps.
    for m in men_t:
        mp.setdefault(m, ())
    for w in women_t:
        wp.setdefault(w, ())
    edges = [tuple(e) for e in edges]
    _check_edges(edges, men_t, women_t)
    return validate_instance(Instance(men_t, women_t, mp, wp, frozenset(edges)))


def rank_of(instance: Instance, owner: Agent, candidate: Agent) -> Optional[int]:
    """0-based position of ``candidate`` in ``owner``'s list, or None if unacceptable."""
    if owner.side is candidate.side:
        raise UnknownAgent(
            f"{owner.name!r} and {candidate.name!r} are on the same side", candidate.name
        )
    if not instance.has_agent(candidate):
        raise UnknownAgent(f"unknown {candidate.side.value} {candidate.name!r}", candidate.name)
    instance.prefs(owner)
    table = instance.men_rank if owner.side is Side.MAN else instance.women_rank
    return table[owner.name].get(candidate.name)


@dataclass(frozen=True)
class Matching:
    """A partial one-to-one assignment of men to women, stored as pairs."""

    pairs: frozenset[Pair] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))
        men = [m for m, _ in self.pairs]
        women = [w for _, w in self.pairs]
        if len(set(men)) != len(men):
            raise InvalidMatching("a man appears in two pairs")
        if len(set(women)) != len(women):
            raise InvalidMatching("a woman appears in two pairs")

    @classmethod
    def of(cls, *pairs: Pair) -> "Matching":
        return cls(frozenset(pairs))

    @cached_property
    def wife(self) -> dict[str, str]:
        return dict(self.pairs)

    @cached_property
    def husband(self) -> dict[str, str]:
        return {w: m for m, w in self.pairs}

    def sorted_pairs(self) -> list[Pair]:
        return sorted(self.pairs)

    def key(self) -> tuple[Pair, ...]:
        return tuple(self.sorted_pairs())

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.sorted_pairs())

    def __repr__(self) -> str:
        return "Matching({" + ", ".join(f"({m},{w})" for m, w in self.sorted_pairs()) + "})"


def check_matching(instance: Instance, matching: Matching) -> Matching:
    """Raise if ``matching`` mentions agents outside ``instance``."""
    men, women = set(instance.men), set(instance.women)
    for m, w in matching.pairs:
        if m not in men:
            raise UnknownAgent(f"matching uses unknown man {m!r}", m)
        if w not in women:
            raise UnknownAgent(f"matching uses unknown woman {w!r}", w)
    return matching
