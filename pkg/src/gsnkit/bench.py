"""Wall-clock study of subgraph counting against the n^k worst case.

One record per (graph, pattern): median time over repetitions, after an
untimed warm-up.  The analytic reference curve n^k is emitted scaled through
the measurement at the smallest n, since only the growth rate is meaningful.
"""
from __future__ import annotations

import csv
import math
import statistics
import time
from dataclasses import dataclass
from typing import IO, Callable, Sequence

from .catalog import Collection
from .graphs import Graph, GraphError
from .matching import MatchTimeout, count_distinct_subgraphs

BENCH_CSV_COLUMNS = (
    "graph_id", "n", "m", "family", "k",
    "seconds", "count", "reps", "timed_out",
)


@dataclass(frozen=True)
class BenchRecord:
    graph_id: str
    n: int
    m: int
    family: str
    k: int
    seconds: float
    count: int | None
    reps: int
    timed_out: bool


def run_bench(
    dataset: Sequence[Graph],
    C: Collection,
    reps: int = 3,
    timeout_secs: float = 60.0,
    graph_ids: Sequence[str] | None = None,
    count_fn: Callable | None = None,
) -> list[BenchRecord]:
    """Time distinct-subgraph counting for every (graph, pattern) pair.

    Runs strictly sequentially.  A (graph, pattern) whose count exceeds
    timeout_secs is recorded with timed_out=True and no count.  count_fn
    exists for test instrumentation and must accept (H, G, induced,
    deadline) like the default counter.
    """
    if reps < 3:
        raise GraphError(f"reps must be >= 3, got {reps}")
    ids = graph_ids or [str(i) for i in range(len(dataset))]
    if len(ids) != len(dataset):
        raise GraphError("graph_ids and dataset lengths differ")
    induced = C.counting_mode == "graphlet"

    def default_fn(H, G, induced, deadline):
        return count_distinct_subgraphs(
            H, G, induced=induced,
            allow_disconnected=C.allow_disconnected, deadline=deadline,
        )

    fn = count_fn or default_fn
    records = []
    for gid, G in zip(ids, dataset):
        for pat in C.patterns:
            count: int | None = None
            times = []
            timed_out = False
            try:
                # warm-up, untimed but still bounded
                count = fn(pat.graph, G, induced,
                           time.perf_counter() + timeout_secs)
                for _ in range(reps):
                    t0 = time.perf_counter()
                    count = fn(pat.graph, G, induced, t0 + timeout_secs)
                    times.append(time.perf_counter() - t0)
            except MatchTimeout:
                timed_out = True
                count = None
            seconds = statistics.median(times) if times else timeout_secs
            records.append(BenchRecord(
                gid, G.n, G.m, pat.family, pat.size,
                seconds, count, reps, timed_out,
            ))
    return records


def worst_case_reference(
    records: Sequence[BenchRecord], k: int
) -> list[tuple[str, int, float]]:
    """The curve t(n) = c * n^k anchored at the completed measurement with
    the smallest n, as (graph_id, n, seconds) points aligned with records."""
    done = [r for r in records if not r.timed_out]
    if not done:
        raise GraphError("no completed measurements to anchor the curve")
    anchor = min(done, key=lambda r: (r.n, r.seconds, r.graph_id))
    scale = anchor.seconds / anchor.n ** k
    return [(r.graph_id, r.n, scale * r.n ** k) for r in records]


def fit_loglog_slope(
    records: Sequence[BenchRecord],
    family: str | None = None,
    k: int | None = None,
) -> float:
    """Least-squares slope of log(seconds) against log(n) over completed
    records, optionally restricted to one (family, k)."""
    pts = [
        (math.log(r.n), math.log(r.seconds))
        for r in records
        if not r.timed_out and r.seconds > 0
        and (family is None or r.family == family)
        and (k is None or r.k == k)
    ]
    if len(pts) < 2:
        raise GraphError("need at least two completed measurements to fit")
    xs, ys = zip(*pts)
    n = len(pts)
    mx, my = sum(xs) / n, sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0:
        raise GraphError("all measurements share one n; slope undefined")
    return sum((x - mx) * (y - my) for x, y in pts) / sxx


def write_bench_csv(out: IO[str], records: Sequence[BenchRecord]) -> None:
    w = csv.writer(out)
    w.writerow(BENCH_CSV_COLUMNS)
    for r in records:
        w.writerow([
            r.graph_id, r.n, r.m, r.family, r.k,
            f"{r.seconds:.6g}",
            "" if r.count is None else r.count,
            r.reps, str(r.timed_out).lower(),
        ])
