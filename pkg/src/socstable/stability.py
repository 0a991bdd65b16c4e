"""Stability predicates over an (instance, matching) pair."""

from __future__ import annotations

from .model import Instance, Matching, Pair

BlockingReport = list[Pair]


def is_individually_rational(instance: Instance, matching: Matching) -> bool:
    return all(instance.mutually_acceptable(m, w) for m, w in matching.pairs)


def _prefers(rank: dict[str, int], candidate: str, current: str | None) -> bool:
    """True if ``candidate`` is acceptable and beats ``current`` (None = single)."""
    r = rank.get(candidate)
    if r is None:
        return False
    if current is None:
        return True
    cur = rank.get(current)
    return cur is None or r < cur


def is_blocking(instance: Instance, matching: Matching, man: str, woman: str) -> bool:
    return _prefers(instance.men_rank[man], woman, matching.wife.get(man)) and _prefers(
        instance.women_rank[woman], man, matching.husband.get(woman)
    )


def blocking_pairs(instance: Instance, matching: Matching) -> BlockingReport:
    """All blocking pairs, sorted by (man, woman) name."""
    out = [
        (m, w)
        for m in instance.men
        for w in instance.men_prefs[m]
        if is_blocking(instance, matching, m, w)
    ]
    return sorted(out)


def social_blocking_pairs(instance: Instance, matching: Matching) -> BlockingReport:
    out = [(m, w) for m, w in instance.social_edges if is_blocking(instance, matching, m, w)]
    return sorted(out)


def is_socially_stable(instance: Instance, matching: Matching) -> bool:
    return is_individually_rational(instance, matching) and not any(
        is_blocking(instance, matching, m, w) for m, w in instance.social_edges
    )


def is_stable(instance: Instance, matching: Matching) -> bool:
    return is_individually_rational(instance, matching) and not blocking_pairs(
        instance, matching
    )


def cardinality(matching: Matching) -> int:
    """Number of matched pairs (not agents)."""
    return len(matching.pairs)
