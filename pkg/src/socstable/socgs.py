"""socGS: deferred acceptance on socially altered preferences with second chances."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .altered import AlteredPrefState, init_altered, promote
from .deferred_acceptance import SolveTrace, man_proposing_da
from .model import Instance, Matching


@dataclass(frozen=True)
class Iteration:
    promoted: Optional[str]  # None for the initial run
    matching: Matching
    trace: SolveTrace
    woman_order: dict[str, tuple[str, ...]]

    @property
    def label(self) -> str:
        return self.promoted if self.promoted is not None else "initial"


@dataclass
class SocGsResult:
    matching: Matching
    iterations: list[Iteration] = field(default_factory=list)
    # men with empty lists, flagged without rerunning deferred acceptance
    skipped: list[str] = field(default_factory=list)
    state: Optional[AlteredPrefState] = None

    @property
    def da_run_count(self) -> int:
        return len(self.iterations)

    def format_trace(self) -> str:
        blocks = []
        for it in self.iterations:
            pairs = " ".join(f"({m},{w})" for m, w in it.matching)
            blocks.append(f"# run {it.label}: {pairs}\n{it.trace.format()}".rstrip())
        for m in self.skipped:
            blocks.append(f"# skip {m}: empty preference list")
        return "\n".join(blocks)


def socgs(instance: Instance) -> SocGsResult:
    """Compute a socially stable matching at least 2/3 the maximum size.

    Single men are given a second chance in input order.
    """
    state = init_altered(instance)
    order = state.orders()
    matching, trace = man_proposing_da(instance, order)
    result = SocGsResult(matching, [Iteration(None, matching, trace, order)])

    while True:
        candidate = next(
            (m for m in instance.men
             if m not in matching.wife and not state.second_chance[m]),
            None,
        )
        if candidate is None:
            break
        state = promote(instance, state, candidate)
        if not instance.men_prefs[candidate]:
            result.skipped.append(candidate)
            continue
        order = state.orders()
        matching, trace = man_proposing_da(instance, order)
        result.iterations.append(Iteration(candidate, matching, trace, order))

    result.matching = matching
    result.state = state
    return result


def stable_baseline(instance: Instance) -> Matching:
    """The man-optimal stable matching under true preferences (a 2-approximation)."""
    return man_proposing_da(instance)[0]
