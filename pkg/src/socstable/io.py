"""Text formats for instances, matchings and graphs.

Instance files::

    men m1 m2
    women w1 w2
    pref m1 : w2 w1
    edge m1 w1

Matching files hold ``match <man> <woman>`` lines; graph files hold
``vertex <name>`` lines (enumeration order) and ``edge <u> <v>`` lines.
``#`` starts a comment everywhere and blank lines are ignored.
"""

from __future__ import annotations

from typing import Iterator

from .model import Instance, InstanceError, Matching, UnknownAgentInPref, make_instance
from .reduction import GraphError, UndirectedGraph


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def parse_instance(text: str) -> Instance:
    men: list[str] | None = None
    women: list[str] | None = None
    prefs: list[tuple[int, str, list[str]]] = []
    edges: list[tuple[str, str]] = []
    for lineno, tokens in _lines(text):
        head, rest = tokens[0], tokens[1:]
        if head == "men":
            if men is not None:
                raise ParseError("second 'men' line", lineno)
            men = rest
        elif head == "women":
            if women is not None:
                raise ParseError("second 'women' line", lineno)
            women = rest
        elif head == "pref":
            if len(rest) < 2 or rest[1] != ":":
                raise ParseError("expected 'pref <name> : <name>*'", lineno)
            prefs.append((lineno, rest[0], rest[2:]))
        elif head == "edge":
            if len(rest) != 2:
                raise ParseError("expected 'edge <man> <woman>'", lineno)
            edges.append((rest[0], rest[1]))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if men is None or women is None:
        raise ParseError("missing 'men' or 'women' line")

    men_set, women_set = set(men), set(women)
    men_prefs: dict[str, list[str]] = {}
    women_prefs: dict[str, list[str]] = {}
    for lineno, owner, ranked in prefs:
        if owner in men_set and owner in women_set:
            # Shared name: decide by where the listed partners live, else the
            # man's line comes first (the order serialize_instance writes).
            as_man = all(r in women_set for r in ranked)
            as_woman = all(r in men_set for r in ranked)
            if as_man and (not as_woman or owner not in men_prefs):
                table = men_prefs
            else:
                table = women_prefs
        elif owner in men_set:
            table = men_prefs
        elif owner in women_set:
            table = women_prefs
        else:
            raise UnknownAgentInPref(f"line {lineno}: preference list for unknown agent {owner!r}", owner)
        if owner in table:
            raise ParseError(f"second preference list for {owner!r}", lineno)
        table[owner] = ranked
    return make_instance(men, women, men_prefs, women_prefs, edges)


def serialize_instance(instance: Instance) -> str:
    out = ["men " + " ".join(instance.men), "women " + " ".join(instance.women)]
    for m in instance.men:
        out.append(" ".join(["pref", m, ":", *instance.men_prefs[m]]))
    for w in instance.women:
        out.append(" ".join(["pref", w, ":", *instance.women_prefs[w]]))
    for m, w in sorted(instance.social_edges):
        out.append(f"edge {m} {w}")
    return "\n".join(out) + "\n"


def parse_matching(text: str) -> Matching:
    pairs = []
    for lineno, tokens in _lines(text):
        if tokens[0] != "match" or len(tokens) != 3:
            raise ParseError("expected 'match <man> <woman>'", lineno)
        pairs.append((tokens[1], tokens[2]))
    try:
        return Matching(frozenset(pairs))
    except InstanceError as exc:
        raise ParseError(str(exc)) from exc


def serialize_matching(matching: Matching) -> str:
    return "".join(f"match {m} {w}\n" for m, w in matching.sorted_pairs())


def parse_graph(text: str) -> UndirectedGraph:
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, tokens in _lines(text):
        if tokens[0] == "vertex" and len(tokens) == 2:
            vertices.append(tokens[1])
        elif tokens[0] == "edge" and len(tokens) == 3:
            edges.append((tokens[1], tokens[2]))
        else:
            raise ParseError("expected 'vertex <name>' or 'edge <u> <v>'", lineno)
    try:
        return UndirectedGraph.build(vertices, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def serialize_graph(graph: UndirectedGraph) -> str:
    out = [f"vertex {v}" for v in graph.vertices]
    out += [f"edge {a} {b}" for a, b in graph.sorted_edges()]
    return "\n".join(out) + "\n"
