"""Command-line interface: feature runs, the SR benchmark, WL/GSN pair
tests, identity-verification suites, disambiguation tables, and the counting
benchmark.

Exit codes: 0 success, 1 a verification suite found a failing case, 2 usage
or input errors.  All tabular output is UTF-8 CSV with a header row; --format
json wraps results in a self-describing run report instead.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from dataclasses import asdict, replace
from itertools import combinations
from multiprocessing import Pool
from pathlib import Path
from typing import IO, Sequence

from .bench import fit_loglog_slope, run_bench, worst_case_reference, \
    write_bench_csv
from .catalog import COUNTING_MODES, Collection, family_collection
from .datasets import data_dir
from .encoder import EncoderConfig, Representation, build_context, encode, \
    representation_distance
from .features import StructuralFeatures, deck_check, features_to_json_obj, \
    identifier_multisets_equal, prefix_features, reconstruct_vertex_from_edge, \
    structural_features, write_vertex_features_csv
from .graphs import Graph, GraphError, check_strongly_regular, \
    parse_graph6_file, parse_json_graphs
from .matching import MatchTimeout
from .wl import kfwl_refine, wl1_refine, wl_distinguish

FORMAT_VERSION = 1
GRID_FAMILIES = ("cycle", "path", "clique", "tree", "star")


class UsageError(Exception):
    """Bad inputs or arguments; maps to exit code 2."""


# ──────────────────────────────────────────────────────────────────────
# Input/output plumbing
# ──────────────────────────────────────────────────────────────────────

def load_graphs(path: str) -> list[Graph]:
    """Graphs from one file: graph6 (one per line) or JSON (object, array,
    or {"graphs": [...]} envelope), decided by the first byte."""
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such file: {path}")
    text = p.read_text(encoding="utf-8")
    head = text.lstrip()[:1]
    if not head:
        raise UsageError(f"empty input file: {path}")
    try:
        if head in "{[":
            body = json.loads(text)
            if isinstance(body, dict) and "graphs" in body:
                body = body["graphs"]
            graphs = parse_json_graphs(json.dumps(body))
        else:
            graphs = parse_graph6_file(path)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    if not graphs:
        raise UsageError(f"no graphs in {path}")
    return graphs


def load_many(paths: Sequence[str]) -> tuple[list[Graph], list[str]]:
    graphs: list[Graph] = []
    ids: list[str] = []
    for path in paths:
        batch = load_graphs(path)
        stem = Path(path).stem
        for i, g in enumerate(batch):
            graphs.append(g)
            ids.append(g.name or (stem if len(batch) == 1 else f"{stem}#{i}"))
    return graphs, ids


def _open_output(args) -> IO[str]:
    if args.output in (None, "-"):
        return sys.stdout
    return open(args.output, "w", encoding="utf-8", newline="")


def _emit(args, report: dict, csv_rows: list[dict] | None) -> None:
    """JSON: the whole report; CSV: the tabular rows with a header."""
    out = _open_output(args)
    try:
        if args.format == "json" or csv_rows is None:
            json.dump(report, out, indent=1, sort_keys=True)
            out.write("\n")
        else:
            fields: dict[str, None] = {}
            for row in csv_rows:
                fields.update(dict.fromkeys(row))
            w = csv.DictWriter(out, fieldnames=list(fields), restval="")
            w.writeheader()
            w.writerows(csv_rows)
    finally:
        if out is not sys.stdout:
            out.close()


def _report(args, command: str, results, summary: dict | None = None) -> dict:
    config = {
        k: v for k, v in vars(args).items()
        if k not in ("func", "output") and not callable(v)
    }
    rep = {
        "format_version": FORMAT_VERSION,
        "command": command,
        "config": config,
        "results": results,
    }
    if summary is not None:
        rep["summary"] = summary
    return rep


def _deadline(args) -> float | None:
    if getattr(args, "timeout_secs", None) is None:
        return None
    return time.perf_counter() + args.timeout_secs


def _parse_grid(text: str) -> list[tuple[str, int]]:
    """Parse 'cycle:6,path:6' into [(family, k), ...]."""
    grid = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            fam, k = item.split(":")
            k = int(k)
        except ValueError as exc:
            raise UsageError(f"bad grid entry {item!r}; use family:k") from exc
        if fam not in GRID_FAMILIES + ("none",):
            raise UsageError(f"unknown family {fam!r} in grid")
        grid.append((fam, k))
    if not grid:
        raise UsageError("empty family grid")
    return grid


def _collection_for(family: str, k: int, mode: str) -> Collection:
    if family == "none" or k == 0:
        return Collection([], mode)
    return family_collection(family, k, mode)


# ──────────────────────────────────────────────────────────────────────
# Parallel map (jobs > 1) with per-worker payload
# ──────────────────────────────────────────────────────────────────────

_PAYLOAD: dict = {}


def _init_pool(payload: dict) -> None:
    _PAYLOAD.update(payload)


def _features_task(item):
    idx, G = item
    return idx, structural_features(G, _PAYLOAD["collection"],
                                    deadline=_PAYLOAD.get("deadline"))


def _fwl2_task(item):
    i, j = item
    return (i, j), wl_distinguish(_PAYLOAD["graphs"][i],
                                  _PAYLOAD["graphs"][j], "fwl2")


def _encode_task(item):
    idx, seed = item
    cfg = replace(_PAYLOAD["config"], seed=seed)
    r = encode(_PAYLOAD["graphs"][idx], _PAYLOAD["feats"][idx], cfg,
               _PAYLOAD["context"])
    return (idx, seed), r.vector


def _delta_task(item):
    idx, G = item
    vmat = structural_features(G, _PAYLOAD["collection"],
                               deadline=_PAYLOAD.get("deadline")).vertex_counts
    seen = set()
    for v in range(G.n):
        lab = G.vertex_labels[v] if G.vertex_labels is not None else 0
        seen.add((lab, *vmat[v].tolist()))
    return idx, (len(seen), G.n)


def _parallel(task, items, jobs: int, payload: dict) -> dict:
    """Run task over items, returning {key: value}; serial when jobs == 1."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        _PAYLOAD.clear()
        _PAYLOAD.update(payload)
        try:
            return dict(task(it) for it in items)
        finally:
            _PAYLOAD.clear()
    with Pool(jobs, initializer=_init_pool, initargs=(payload,)) as pool:
        return dict(pool.imap_unordered(task, items, chunksize=1))


def compute_features(
    graphs: Sequence[Graph],
    C: Collection,
    jobs: int = 1,
    deadline: float | None = None,
) -> list[StructuralFeatures]:
    got = _parallel(_features_task, enumerate(graphs), jobs,
                    {"collection": C, "deadline": deadline})
    return [got[i] for i in range(len(graphs))]


# ──────────────────────────────────────────────────────────────────────
# count
# ──────────────────────────────────────────────────────────────────────

def cmd_count(args) -> int:
    graphs, ids = load_many(args.inputs)
    C = _collection_for(args.family, args.k, args.mode)
    feats = compute_features(graphs, C, args.jobs, _deadline(args))
    out = _open_output(args)
    try:
        if args.format == "json":
            json.dump(features_to_json_obj(feats, C, ids), out, indent=1)
            out.write("\n")
        else:
            write_vertex_features_csv(out, feats, C, ids)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# ──────────────────────────────────────────────────────────────────────
# sr-bench
# ──────────────────────────────────────────────────────────────────────

def _family_prefix_len(C: Collection, k: int) -> int:
    return sum(1 for p in C.patterns if p.size <= k)


def run_sr_benchmark(
    families: dict[str, list[Graph]],
    grid: Sequence[tuple[str, int]],
    variants: Sequence[str] = ("gsn_e",),
    seeds: Sequence[int] = (0, 1, 2),
    epsilon: float = 1e-3,
    jobs: int = 1,
    sample_pairs: int | None = None,
    seed: int = 0,
    baselines: bool = True,
) -> list[dict]:
    """Within-family, within-size pair discrimination rates.

    For each size class: 1-WL and 2-FWL baselines, then per (family, k,
    variant) the GSN pair test with weights and vocabularies shared across
    the class, any of the given seeds separating a pair counts as success.
    Identifier-multiset equality is logged per pair as the combinatorial
    pre-check; the reported failure is the encoder-distance verdict.
    """
    rng = random.Random(seed)
    rows: list[dict] = []
    max_k = {fam: max(k for f, k in grid if f == fam)
             for fam, _ in grid if fam != "none"}
    for fname, members in sorted(families.items()):
        by_n: dict[int, list[Graph]] = {}
        for g in members:
            by_n.setdefault(g.n, []).append(g)
        for n, graphs in sorted(by_n.items()):
            if len(graphs) < 2:
                continue
            pairs = list(combinations(range(len(graphs)), 2))
            if sample_pairs is not None and sample_pairs < len(pairs):
                pairs = sorted(rng.sample(pairs, sample_pairs))
            if baselines:
                wl1_fail = sum(
                    not wl_distinguish(graphs[i], graphs[j], "wl1")
                    for i, j in pairs
                )
                rows.append(_sr_row(fname, n, "wl1", "-", "-", len(pairs),
                                    wl1_fail))
                fwl2 = _parallel(_fwl2_task, pairs, jobs, {"graphs": graphs})
                fwl2_fail = sum(not v for v in fwl2.values())
                rows.append(_sr_row(fname, n, "fwl2", "-", "-", len(pairs),
                                    fwl2_fail))
            for fam in sorted(max_k):
                base = family_collection(fam, max_k[fam], "graphlet")
                feats_full = compute_features(graphs, base, jobs)
                for fk, k in grid:
                    if fk != fam:
                        continue
                    plen = _family_prefix_len(base, k)
                    sliced = [prefix_features(f, base, plen)
                              for f in feats_full]
                    feats_k = [s[0] for s in sliced]
                    sub = sliced[0][1]
                    for variant in variants:
                        rows.append(_sr_gsn_row(
                            fname, n, graphs, feats_k, sub, fam, k, variant,
                            seeds, epsilon, jobs, pairs,
                        ))
    return rows


def _sr_row(fname, n, test, collection, variant, pairs, failures,
            extra=None) -> dict:
    row = {
        "file": fname, "n": n, "test": test, "collection": collection,
        "variant": variant, "pairs": pairs, "failures": failures,
        "failure_fraction": failures / pairs if pairs else 0.0,
    }
    if extra:
        row.update(extra)
    return row


def _sr_gsn_row(fname, n, graphs, feats, C, fam, k, variant, seeds, epsilon,
                jobs, pairs) -> dict:
    part = "edge" if variant == "gsn_e" else "vertex"
    ctx = build_context(graphs, None if variant == "mpnn" else feats, variant)
    cfg = EncoderConfig(variant=variant, epsilon=epsilon)
    vecs = _parallel(
        _encode_task,
        [(i, s) for i in range(len(graphs)) for s in seeds],
        jobs,
        {"graphs": graphs, "feats": feats, "config": cfg, "context": ctx},
    )
    failures = 0
    multiset_equal = 0
    min_sep = None
    max_fail = None
    for i, j in pairs:
        if variant != "mpnn" and identifier_multisets_equal(
                feats[i], feats[j], part):
            multiset_equal += 1
        dists = [
            representation_distance(
                Representation(vecs[(i, s)]), Representation(vecs[(j, s)]),
                graphs[i].n, graphs[j].n,
            )
            for s in seeds
        ]
        best = max(dists)
        if best > epsilon:
            min_sep = best if min_sep is None else min(min_sep, best)
        else:
            failures += 1
            max_fail = best if max_fail is None else max(max_fail, best)
    return _sr_row(
        fname, n, "gsn", f"{fam} k<={k}", variant, len(pairs), failures,
        extra={
            "multiset_equal_pairs": multiset_equal,
            "min_distance_separated": min_sep,
            "max_distance_failed": max_fail,
        },
    )


def cmd_sr_bench(args) -> int:
    directory = Path(args.dir) if args.dir else data_dir()
    files = sorted(directory.glob("*.g6"))
    if not files:
        raise UsageError(f"no .g6 files under {directory}")
    families = {f.stem: parse_graph6_file(f) for f in files}
    sizes = {g.n for gs in families.values() for g in gs}
    if not args.full and max(sizes) > 29:
        families = {
            name: [g for g in gs if g.n <= 29]
            for name, gs in families.items()
        }
        families = {k: v for k, v in families.items() if v}
    rows = run_sr_benchmark(
        families, _parse_grid(args.families), args.variants.split(","),
        _parse_seeds(args.seeds), args.epsilon, args.jobs,
        args.sample_pairs, args.seed,
    )
    total_pairs = sum(r["pairs"] for r in rows if r["test"] == "wl1")
    report = _report(args, "sr-bench", rows, {"total_baseline_pairs": total_pairs})
    _emit(args, report, rows)
    return 0


def _parse_seeds(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"bad seed list {text!r}") from exc


# ──────────────────────────────────────────────────────────────────────
# wl / gsn-test
# ──────────────────────────────────────────────────────────────────────

def _load_pair(args) -> tuple[Graph, Graph, str, str]:
    graphs, ids = load_many(args.inputs)
    if len(graphs) != 2:
        raise UsageError(
            f"need exactly two graphs for a pair test, got {len(graphs)}"
        )
    return graphs[0], graphs[1], ids[0], ids[1]


def cmd_wl(args) -> int:
    G1, G2, id1, id2 = _load_pair(args)
    results = []
    for test in args.test.split(","):
        test = test.strip()
        distinguished = wl_distinguish(G1, G2, test)
        if test == "wl1":
            h1, h2 = wl1_refine(G1).histogram, wl1_refine(G2).histogram
        else:
            k = int(test[-1])
            h1 = kfwl_refine(G1, k).histogram if G1.n == G2.n else ()
            h2 = kfwl_refine(G2, k).histogram if G1.n == G2.n else ()
        results.append({
            "test": test, "graph_1": id1, "graph_2": id2,
            "distinguished": distinguished,
            "colors_1": len(h1), "colors_2": len(h2),
        })
    _emit(args, _report(args, "wl", results), results)
    return 0


def cmd_gsn_test(args) -> int:
    G1, G2, id1, id2 = _load_pair(args)
    C = _collection_for(args.family, args.k, args.mode)
    dl = _deadline(args)
    F1 = structural_features(G1, C, deadline=dl)
    F2 = structural_features(G2, C, deadline=dl)
    part = "edge" if args.variant == "gsn_e" else "vertex"
    feats = None if args.variant == "mpnn" else [F1, F2]
    ctx = build_context([G1, G2], feats, args.variant)
    per_seed = []
    for s in _parse_seeds(args.seeds):
        cfg = EncoderConfig(variant=args.variant, seed=s,
                            epsilon=args.epsilon)
        r1, r2 = encode(G1, F1, cfg, ctx), encode(G2, F2, cfg, ctx)
        d = representation_distance(r1, r2, G1.n, G2.n)
        per_seed.append({"seed": s, "distance": d,
                         "separated": d > args.epsilon})
    verdict = any(r["separated"] for r in per_seed)
    results = [{
        "graph_1": id1, "graph_2": id2, "variant": args.variant,
        "collection": C.describe(), "epsilon": args.epsilon,
        "multisets_equal": (
            args.variant != "mpnn"
            and identifier_multisets_equal(F1, F2, part)
        ),
        "non_isomorphic": verdict,
        **{f"distance_seed_{r['seed']}": r["distance"] for r in per_seed},
    }]
    report = _report(args, "gsn-test", per_seed,
                     {"non_isomorphic": verdict,
                      "collection": C.to_json_obj()})
    _emit(args, report, results)
    return 0


# ──────────────────────────────────────────────────────────────────────
# verify
# ──────────────────────────────────────────────────────────────────────

def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph(n, tuple(edges))


def _verify_equivariance(trials: int, seed: int) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    C = family_collection("cycle", 5, "graphlet")
    cases = []
    for t in range(trials):
        G = _random_graph(rng, rng.randrange(5, 13), rng.uniform(0.2, 0.5))
        perm = list(range(G.n))
        rng.shuffle(perm)
        H = G.permute(perm)
        FG = structural_features(G, C)
        FH = structural_features(H, C)
        ok = all(
            (FH.vertex_counts[perm[v]] == FG.vertex_counts[v]).all()
            for v in range(G.n)
        ) and all(
            (FH.edge_counts[(perm[u], perm[v])] == vec).all()
            for (u, v), vec in FG.edge_counts.items()
        )
        cases.append((f"equivariance trial {t}", ok))
    return cases


def _verify_reconstruction(trials: int, seed: int) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    colls = [
        family_collection("cycle", 6, "graphlet"),
        family_collection("clique", 5, "graphlet"),
        family_collection("path", 5, "graphlet"),
    ]
    cases = []
    for t in range(trials):
        G = _random_graph(rng, rng.randrange(4, 13), rng.uniform(0.2, 0.5))
        C = colls[t % len(colls)]
        F = structural_features(G, C)
        ok = (reconstruct_vertex_from_edge(F, C) == F.vertex_counts).all()
        cases.append((f"reconstruction trial {t} ({C.describe()})", bool(ok)))
    return cases


def _verify_deck() -> list[tuple[str, bool]]:
    from .catalog import all_graphs_of_size
    cases = []
    for n in (4, 5, 6):
        for i, pat in enumerate(all_graphs_of_size(n).patterns):
            cases.append((f"deck n={n} graph {i}", deck_check(pat.graph)))
    return cases


def _verify_fwl2_sr() -> list[tuple[str, bool]]:
    cases = []
    for path in sorted(data_dir().glob("*.g6")):
        graphs = parse_graph6_file(path)
        for i, g in enumerate(graphs):
            params = check_strongly_regular(g)
            if params is None:
                cases.append((f"{path.stem}#{i} strongly regular", False))
                continue
            n, d = params.n, params.d
            want = tuple(sorted([n, n * d, n * (n - 1) - n * d]))
            hist = kfwl_refine(g, 2).histogram
            got = tuple(sorted(m for _, m in hist))
            cases.append((
                f"{path.stem}#{i} 2-FWL histogram",
                len(hist) == 3 and got == want,
            ))
        if path.stem == "sr16622" and len(graphs) == 2:
            cases.append((
                "sr16622 pair identical under 2-FWL",
                not wl_distinguish(graphs[0], graphs[1], "fwl2"),
            ))
    if not cases:
        cases.append(("bundled SR files present", False))
    return cases


def _verify_wl_refinement(trials: int, seed: int) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    C = family_collection("cycle", 5, "graphlet")
    cases = []
    for t in range(trials):
        G = _random_graph(rng, rng.randrange(5, 13), rng.uniform(0.2, 0.5))
        plain = wl1_refine(G).colors
        rows = structural_features(G, C).vertex_counts
        aug = wl1_refine(G, initial=[tuple(r) for r in rows.tolist()]).colors
        ok = all(
            plain[u] == plain[v]
            for u in range(G.n)
            for v in range(u + 1, G.n)
            if aug[u] == aug[v]
        )
        cases.append((f"identifier-refined partition trial {t}", ok))
    return cases


THEOREMS = {
    "equivariance": lambda a: _verify_equivariance(a.trials, a.seed),
    "reconstruction": lambda a: _verify_reconstruction(a.trials, a.seed),
    "deck": lambda a: _verify_deck(),
    "fwl2_sr": lambda a: _verify_fwl2_sr(),
    "wl_refinement": lambda a: _verify_wl_refinement(a.trials, a.seed),
}


def cmd_verify(args) -> int:
    names = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    rows = []
    failed = 0
    for name in names:
        for case, ok in THEOREMS[name](args):
            rows.append({"theorem": name, "case": case, "passed": ok})
            failed += not ok
    summary = {"cases": len(rows), "failed": failed}
    _emit(args, _report(args, "verify", rows, summary), rows)
    return 1 if failed else 0


# ──────────────────────────────────────────────────────────────────────
# delta / bench
# ──────────────────────────────────────────────────────────────────────

def cmd_delta(args) -> int:
    graphs, _ = load_many(args.inputs)
    rows = []
    for fam, k in _parse_grid(args.grid):
        C = _collection_for(fam, k, args.mode)
        got = _parallel(_delta_task, enumerate(graphs), args.jobs,
                        {"collection": C, "deadline": _deadline(args)})
        unique = sum(u for u, _ in got.values())
        total = sum(n for _, n in got.values())
        if total == 0:
            raise UsageError("dataset has no vertices")
        rows.append({
            "family": fam, "k": k, "mode": args.mode,
            "graphs": len(graphs), "vertices": total,
            "delta": round(unique / total, 6),
        })
    _emit(args, _report(args, "delta", rows), rows)
    return 0


def cmd_bench(args) -> int:
    graphs, ids = load_many(args.inputs)
    C = _collection_for(args.family, args.k, args.mode)
    records = run_bench(graphs, C, args.reps,
                        args.timeout_secs or 60.0, ids)
    if args.format == "json":
        result_rows = [asdict(r) for r in records]
        summary: dict = {}
        try:
            summary["loglog_slope_max_k"] = fit_loglog_slope(
                records, k=max(p.size for p in C.patterns)
            )
            summary["worst_case_reference"] = [
                {"graph_id": g, "n": n, "seconds": s}
                for g, n, s in worst_case_reference(
                    [r for r in records
                     if r.k == max(p.size for p in C.patterns)],
                    max(p.size for p in C.patterns),
                )
            ]
        except GraphError:
            pass
        _emit(args, _report(args, "bench", result_rows, summary), None)
    else:
        out = _open_output(args)
        try:
            write_bench_csv(out, records)
        finally:
            if out is not sys.stdout:
                out.close()
    return 0


# ──────────────────────────────────────────────────────────────────────
# Argument parsing
# ──────────────────────────────────────────────────────────────────────

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--epsilon", type=float, default=1e-3)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--timeout-secs", type=float, default=None)
    common.add_argument("--output", "-o", default=None,
                        help="output path (default stdout)")

    p = argparse.ArgumentParser(
        prog="gsnkit",
        description="Substructure-count identifiers, WL tests, and "
                    "random-weight GSN isomorphism experiments",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common],
                       help="per-vertex substructure counts")
    c.add_argument("inputs", nargs="+")
    c.add_argument("--family", default="cycle", choices=GRID_FAMILIES)
    c.add_argument("--k", type=int, default=6)
    c.add_argument("--mode", default="graphlet", choices=COUNTING_MODES)
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("sr-bench", parents=[common],
                       help="strongly-regular pair discrimination rates")
    s.add_argument("--dir", default=None,
                   help="graph6 directory (default: bundled SR families)")
    s.add_argument("--families", default="cycle:3,cycle:4,cycle:5,cycle:6,"
                                         "path:3,path:4,path:5,path:6")
    s.add_argument("--variants", default="gsn_e")
    s.add_argument("--seeds", default="0,1,2")
    s.add_argument("--full", action="store_true",
                   help="include families with n > 29 (multi-hour)")
    s.add_argument("--sample-pairs", type=int, default=None)
    s.set_defaults(func=cmd_sr_bench)

    w = sub.add_parser("wl", parents=[common],
                       help="WL-family pair test")
    w.add_argument("inputs", nargs="+")
    w.add_argument("--test", default="wl1",
                   help="comma list from wl1,fwl2,fwl3")
    w.set_defaults(func=cmd_wl)

    g = sub.add_parser("gsn-test", parents=[common],
                       help="random-weight GSN pair test")
    g.add_argument("inputs", nargs="+")
    g.add_argument("--family", default="cycle", choices=GRID_FAMILIES)
    g.add_argument("--k", type=int, default=6)
    g.add_argument("--mode", default="graphlet", choices=COUNTING_MODES)
    g.add_argument("--variant", default="gsn_e",
                   choices=("mpnn", "gsn_v", "gsn_e"))
    g.add_argument("--seeds", default="0,1,2")
    g.set_defaults(func=cmd_gsn_test)

    v = sub.add_parser("verify", parents=[common],
                       help="identity-verification suites")
    v.add_argument("--theorem", default="all",
                   choices=tuple(THEOREMS) + ("all",))
    v.add_argument("--trials", type=int, default=100)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("delta", parents=[common],
                       help="disambiguation score table")
    d.add_argument("inputs", nargs="+")
    d.add_argument("--grid", default="none:0,cycle:6,path:6,tree:6")
    d.add_argument("--mode", default="graphlet", choices=COUNTING_MODES)
    d.set_defaults(func=cmd_delta)

    b = sub.add_parser("bench", parents=[common],
                       help="counting runtime benchmark")
    b.add_argument("inputs", nargs="+")
    b.add_argument("--family", default="cycle", choices=GRID_FAMILIES)
    b.add_argument("--k", type=int, default=6)
    b.add_argument("--mode", default="graphlet", choices=COUNTING_MODES)
    b.add_argument("--reps", type=int, default=3)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MatchTimeout:
        print("error: counting exceeded --timeout-secs", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
