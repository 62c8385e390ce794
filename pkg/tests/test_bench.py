"""Counting benchmark: record layout, timing/timeout behavior, and the
log-log slope fit."""
from __future__ import annotations

import io
import math

import pytest

from conftest import brute_distinct, random_graph
from gsnkit.bench import (
    BENCH_CSV_COLUMNS,
    BenchRecord,
    fit_loglog_slope,
    run_bench,
    worst_case_reference,
    write_bench_csv,
)
from gsnkit.catalog import clique_graph, cycle_graph, family_collection
from gsnkit.graphs import GraphError


def test_csv_columns_contract():
    assert BENCH_CSV_COLUMNS == ("graph_id", "n", "m", "family", "k",
                                 "seconds", "count", "reps", "timed_out")


def test_run_bench_counts_match_oracle(rng):
    C = family_collection("cycle", 5, "graphlet")
    graphs = [random_graph(rng, 7, 0.5) for _ in range(3)]
    records = run_bench(graphs, C, reps=3, timeout_secs=30.0)
    assert len(records) == len(graphs) * len(C.patterns)
    by_key = {(r.graph_id, r.k): r for r in records}
    for gi, G in enumerate(graphs):
        for pat in C.patterns:
            rec = by_key[(str(gi), pat.size)]
            assert rec.count == brute_distinct(pat.graph, G, True)
            assert rec.n == G.n and rec.m == len(G.edges)
            assert rec.family == "cycle"
            assert not rec.timed_out and rec.seconds > 0


def test_run_bench_requires_three_reps(rng):
    C = family_collection("cycle", 4, "graphlet")
    with pytest.raises(GraphError):
        run_bench([cycle_graph(5)], C, reps=2)


def test_run_bench_custom_ids(rng):
    C = family_collection("clique", 3, "graphlet")
    records = run_bench([clique_graph(4)], C, reps=3, graph_ids=["K4"])
    assert records[0].graph_id == "K4"
    assert records[0].count == 4


def test_timeout_records_flagged(rng):
    C = family_collection("cycle", 6, "graphlet")
    G = random_graph(rng, 60, 0.4)
    records = run_bench([G], C, reps=3, timeout_secs=0.01)
    worst = [r for r in records if r.k == 6]
    assert worst and all(r.timed_out and r.count is None for r in worst)
    assert all(r.seconds == 0.01 for r in worst)


def test_csv_writer_format():
    rec = BenchRecord("g", 5, 4, "cycle", 4, 0.1234567, 7, 3, False)
    out = io.StringIO()
    write_bench_csv(out, [rec])
    lines = out.getvalue().splitlines()
    assert lines[0] == ",".join(BENCH_CSV_COLUMNS)
    assert lines[1] == "g,5,4,cycle,4,0.123457,7,3,false"


def test_csv_writer_empty_count_for_timeouts():
    rec = BenchRecord("g", 5, 4, "cycle", 4, 60.0, None, 3, True)
    out = io.StringIO()
    write_bench_csv(out, [rec])
    assert out.getvalue().splitlines()[1] == "g,5,4,cycle,4,60,,3,true"


def test_loglog_slope_recovers_exponent():
    records = [
        BenchRecord(f"g{n}", n, n, "cycle", 6, 2e-9 * n ** 3, 1, 3, False)
        for n in (50, 100, 200, 400)
    ]
    assert fit_loglog_slope(records, k=6) == pytest.approx(3.0, abs=1e-9)


def test_loglog_slope_requires_variation():
    records = [BenchRecord("a", 50, 10, "cycle", 6, 0.1, 1, 3, False),
               BenchRecord("b", 50, 12, "cycle", 6, 0.2, 1, 3, False)]
    with pytest.raises(GraphError):
        fit_loglog_slope(records, k=6)


def test_worst_case_reference_anchoring():
    records = [
        BenchRecord("small", 10, 9, "cycle", 6, 0.001, 1, 3, False),
        BenchRecord("big", 20, 19, "cycle", 6, 0.5, 1, 3, False),
    ]
    curve = dict((g, s) for g, _, s in worst_case_reference(records, 6))
    assert curve["small"] == pytest.approx(0.001)
    # the n^6 envelope from the anchor: 0.001 * (20/10)^6
    assert curve["big"] == pytest.approx(0.001 * 2 ** 6)


def test_worst_case_reference_needs_completed_run():
    records = [BenchRecord("g", 10, 9, "cycle", 6, 60.0, None, 3, True)]
    with pytest.raises(GraphError):
        worst_case_reference(records, 6)
