"""Exit criteria. Each test records one PASS/FAIL line, shown in the terminal
summary under "acceptance criteria"."""

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from oracles import max_independent_set_size
from socstable.deferred_acceptance import assert_da_properties, man_proposing_da
from socstable.exact import exact_max_socially_stable
from socstable.generators import all_graphs, fig1, gen_random_graph, tight
from socstable.io import serialize_graph, serialize_instance
from socstable.model import Matching
from socstable.reduction import brute_force_max_is, extract_independent_set, reduce_is_to_socstable
from socstable.socgs import socgs, stable_baseline
from socstable.stability import blocking_pairs, is_socially_stable, is_stable


def record(label: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
    assert ok, f"{label}: {detail}"


def test_ac01_figure1():
    t0 = time.perf_counter()
    inst = fig1()
    base = stable_baseline(inst)
    best = exact_max_socially_stable(inst)
    elapsed = time.perf_counter() - t0
    ok = (
        base == Matching.of(("m1", "w2"))
        and best == Matching.of(("m1", "w1"), ("m2", "w2"))
        and is_socially_stable(inst, base)
        and is_socially_stable(inst, best)
        and not is_stable(inst, best)
        and blocking_pairs(inst, best) == [("m1", "w2")]
        and elapsed < 1.0
    )
    record("AC1 Figure 1 reproduction", ok, f"{elapsed:.3f}s")


def test_ac02_tightness():
    t0 = time.perf_counter()
    inst = tight()
    res = socgs(inst)
    best = exact_max_socially_stable(inst)
    elapsed = time.perf_counter() - t0
    ratio = Fraction(len(res.matching), len(best))
    ok = (
        res.matching == Matching.of(("m1", "w1"), ("m2", "w3"))
        and res.da_run_count == 2
        and best == Matching.of(("m1", "w2"), ("m2", "w1"), ("m3", "w3"))
        and ratio == Fraction(2, 3)
        and elapsed < 1.0
    )
    record("AC2 tightness example", ok, f"ratio {ratio}, {res.da_run_count} DA runs, {elapsed:.3f}s")


@pytest.fixture(scope="module")
def solved(corpus):
    t0 = time.perf_counter()
    results = [socgs(inst) for inst in corpus]
    stable_flags = [is_socially_stable(inst, r.matching) for inst, r in zip(corpus, results)]
    elapsed = time.perf_counter() - t0
    exact = [len(exact_max_socially_stable(inst)) for inst in corpus]
    return results, stable_flags, elapsed, exact


def test_ac03_social_stability(corpus, solved):
    results, flags, elapsed, _ = solved
    failures = flags.count(False)
    ok = len(corpus) >= 1000 and failures == 0 and elapsed < 60.0
    record("AC3 socGS output is socially stable", ok,
           f"{len(corpus)} instances, {failures} failures, {elapsed:.2f}s")


def test_ac04_three_halves(corpus, solved):
    results, _, _, exact = solved
    failures = sum(3 * len(r.matching) < 2 * e for r, e in zip(results, exact))
    record("AC4 3|socGS| >= 2|opt|", failures == 0, f"{failures} failures")


def test_ac05_baseline(corpus, solved):
    _, _, _, exact = solved
    failures = sum(2 * len(stable_baseline(inst)) < e for inst, e in zip(corpus, exact))
    record("AC5 2|stable| >= |opt|", failures == 0, f"{failures} failures")


def test_ac06_da_properties(corpus, solved):
    results = solved[0]
    runs = failures = 0
    for inst, res in zip(corpus, results):
        for it in res.iterations:
            runs += 1
            failures += not assert_da_properties(it.trace, it.matching, inst, it.woman_order)
        mt, trace = man_proposing_da(inst)
        runs += 1
        failures += not assert_da_properties(trace, mt, inst)
    record("AC6 deferred-acceptance properties", failures == 0, f"{runs} runs, {failures} failures")


def test_ac07_iteration_bound(corpus, solved):
    results = solved[0]
    failures = sum(r.da_run_count > len(inst.men) + 1 for inst, r in zip(corpus, results))
    record("AC7 DA runs <= |M|+1", failures == 0, f"{failures} failures")


def test_ac08_reduction_round_trip():
    t0 = time.perf_counter()
    graphs = [G for n in range(5) for G in all_graphs(n)]
    small = len(graphs)
    graphs += [gen_random_graph(5 + s % 2, (s % 9 + 1) / 10, seed=s) for s in range(200)]
    failures = 0
    for G in graphs:
        inst, gmap = reduce_is_to_socstable(G)
        best = exact_max_socially_stable(inst, limit=4 * G.n)
        alpha = len(brute_force_max_is(G))
        S = extract_independent_set(inst, gmap, best)
        if not (
            alpha == max_independent_set_size(G)
            and len(best) == G.n + alpha
            and G.is_independent(S)
            and len(S) == alpha
        ):
            failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 120.0 and small >= 64
    record("AC8 reduction round trip", ok,
           f"{small} small + 200 random graphs, {failures} failures, {elapsed:.2f}s")


def _cli(*args, cwd):
    return subprocess.run([sys.executable, "-m", "socstable", *args], cwd=cwd,
                          capture_output=True, check=True).stdout


def test_ac09_determinism(tmp_path):
    (tmp_path / "tight.txt").write_text(serialize_instance(tight()))
    (tmp_path / "k3.txt").write_text(serialize_graph(gen_random_graph(3, 1.0, 0)))
    commands = [
        ("solve", "tight.txt"),
        ("exact", "tight.txt"),
        ("gen", "--men", "4", "--women", "5", "--p-accept", "0.7", "--p-social", "0.3", "--seed", "42"),
        ("bench", "--count", "20", "--max-agents", "10", "--seed", "7"),
    ]
    mismatched = [c[0] for c in commands if _cli(*c, cwd=tmp_path) != _cli(*c, cwd=tmp_path)]
    record("AC9 byte-identical CLI output", not mismatched, f"differs: {mismatched}" if mismatched else "")


def test_ac10_hardness_documented():
    # The conditional inapproximability has no experiment; the tight example
    # (AC2) shows the algorithm meets the 3/2 bound exactly.
    res, best = socgs(tight()), exact_max_socially_stable(tight())
    record("AC10 3/2 bound met exactly (hardness documented only)",
           Fraction(len(best), len(res.matching)) == Fraction(3, 2))
