"""Command-line interface: solve, exact, check, reduce, extract, gen, bench."""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import io as fmt
from .exact import DEFAULT_LIMIT, InstanceTooLarge, exact_max_socially_stable
from .generators import GenConfig, gen_random
from .model import InstanceError, check_matching
from .reduction import (
    GraphError,
    GraphTooLarge,
    NormalizationDiverged,
    extract_independent_set,
    reduce_is_to_socstable,
)
from .socgs import socgs, stable_baseline
from .stability import (
    blocking_pairs,
    is_individually_rational,
    is_socially_stable,
    social_blocking_pairs,
)

EXIT_INPUT = 2
EXIT_TOO_LARGE = 3

P_ACCEPT_CHOICES = (0.3, 0.7, 1.0)
P_SOCIAL_CHOICES = (0.0, 0.3, 0.7, 1.0)


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_solve(args: argparse.Namespace) -> int:
    instance = fmt.parse_instance(_read(args.file))
    result = socgs(instance)
    sys.stdout.write(fmt.serialize_matching(result.matching))
    if args.trace:
        sys.stderr.write(result.format_trace() + "\n")
    return 0


def cmd_exact(args: argparse.Namespace) -> int:
    instance = fmt.parse_instance(_read(args.file))
    sys.stdout.write(fmt.serialize_matching(exact_max_socially_stable(instance, args.limit)))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    instance = fmt.parse_instance(_read(args.file))
    matching = check_matching(instance, fmt.parse_matching(_read(args.matching)))
    ok = True
    if not is_individually_rational(instance, matching):
        ok = False
        for m, w in matching.sorted_pairs():
            if not instance.mutually_acceptable(m, w):
                print(f"unacceptable {m} {w}")
    report = (blocking_pairs if args.classic else social_blocking_pairs)(instance, matching)
    for m, w in report:
        print(f"blocking {m} {w}")
    return 0 if ok and not report else 1


def cmd_reduce(args: argparse.Namespace) -> int:
    graph = fmt.parse_graph(_read(args.graph))
    instance, _ = reduce_is_to_socstable(graph)
    sys.stdout.write(fmt.serialize_instance(instance))
    return 0


def cmd_extract(args: argparse.Namespace) -> int:
    graph = fmt.parse_graph(_read(args.graph))
    instance, gmap = reduce_is_to_socstable(graph)
    matching = check_matching(instance, fmt.parse_matching(_read(args.matching)))
    if not is_socially_stable(instance, matching):
        raise _UsageError("matching is not socially stable on the reduced instance")
    for v in extract_independent_set(instance, gmap, matching):
        print(v)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    config = GenConfig(args.men, args.women, args.p_accept, args.p_social, args.seed,
                       asymmetric=args.asymmetric)
    sys.stdout.write(fmt.serialize_instance(gen_random(config)))
    return 0


@dataclass
class BenchRow:
    instance_id: int
    n_men: int
    n_women: int
    p_accept: float
    p_social: float
    seed: int
    size_socgs: int
    size_baseline: int
    size_exact: Optional[int]
    ratio_socgs: Optional[float]
    da_runs: int


def bench_configs(count: int, max_agents: int, seed: int) -> list[GenConfig]:
    rng = random.Random(seed)
    side_max = max(1, max_agents // 2)
    out = []
    for _ in range(count):
        out.append(GenConfig(
            rng.randint(1, side_max),
            rng.randint(1, side_max),
            rng.choice(P_ACCEPT_CHOICES),
            rng.choice(P_SOCIAL_CHOICES),
            rng.getrandbits(63),
        ))
    return out


def bench_row(instance_id: int, config: GenConfig, limit: int = DEFAULT_LIMIT) -> BenchRow:
    instance = gen_random(config)
    result = socgs(instance)
    size = len(result.matching)
    exact = ratio = None
    if instance.n_agents <= limit:
        exact = len(exact_max_socially_stable(instance, limit))
        # both sizes are 0 only on markets with no acceptable pair
        ratio = size / exact if exact else 1.0
    return BenchRow(
        instance_id, config.n_men, config.n_women, config.p_accept, config.p_social,
        config.seed, size, len(stable_baseline(instance)), exact, ratio,
        result.da_run_count,
    )


def format_bench(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    fields = list(BenchRow.__dataclass_fields__)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        values = asdict(row)
        cells = []
        for name in fields:
            v = values[name]
            if v is None:
                cells.append("")
            elif isinstance(v, float):
                cells.append(f"{v:.6f}" if name == "ratio_socgs" else repr(v))
            else:
                cells.append(str(v))
        writer.writerow(cells)
    return buf.getvalue()


def cmd_bench(args: argparse.Namespace) -> int:
    configs = bench_configs(args.count, args.max_agents, args.seed)
    rows = [bench_row(i, c, args.limit) for i, c in enumerate(configs)]
    text = format_bench(rows)
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    bad = [r.instance_id for r in rows if r.size_exact is not None and 3 * r.size_socgs < 2 * r.size_exact]
    if bad:
        print(f"approximation bound violated on instances {bad}", file=sys.stderr)
        return 1
    return 0


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return value


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="socstable", description="Socially stable matchings.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run socGS on an instance file")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="write the proposal log to stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="maximum socially stable matching by exhaustive search")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="max agents (default: %(default)s)")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("check", help="check a matching; exit 1 if it is blocked")
    p.add_argument("file")
    p.add_argument("matching")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--social", action="store_true", help="social stability (default)")
    mode.add_argument("--classic", action="store_true", help="classical stability")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", help="build the matching instance for a graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("extract", help="recover an independent set from a matching")
    p.add_argument("graph")
    p.add_argument("matching")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--men", type=int, required=True)
    p.add_argument("--women", type=int, required=True)
    p.add_argument("--p-accept", type=_probability, required=True)
    p.add_argument("--p-social", type=_probability, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--asymmetric", action="store_true", help="draw acceptability per side")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="compare socGS, the stable baseline and the exact optimum")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-agents", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", help="write the table here instead of stdout")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="exact oracle agent limit")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceTooLarge, GraphTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (fmt.ParseError, InstanceError, GraphError, NormalizationDiverged, _UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
