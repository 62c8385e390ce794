#!/usr/bin/env python3
"""Convert a ZINC molecule export to the JSON graph format used by gsnkit.

Two input layouts are recognised:

  * a pickle of molecule dicts (the widely mirrored ``molecules_*.pkl``
    layout: ``num_atom``, ``atom_type`` tensor, ``bond_type`` dense matrix);
    loading it requires ``torch``;
  * a JSON file (array or one-object-per-line) where each molecule has
    ``atoms`` (list of atom-type ints) and ``bonds`` (list of
    ``[u, v, bond_type]``).

Output is a single JSON document ``{"graphs": [...]}`` with atom types as
``vertex_labels`` and bond types as ``edge_labels``, directly loadable by
``gsn delta`` / ``gsn count``.

Usage: python3 tools/zinc_to_json.py INPUT OUTPUT [--limit N]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path


def molecules_from_pickle(path: Path):
    import pickle

    try:
        import torch  # noqa: F401  (tensors inside the pickle need it)
    except ImportError as exc:  # pragma: no cover
        raise SystemExit(f"the pickle layout needs torch: {exc}")
    with open(path, "rb") as fh:
        data = pickle.load(fh)
    if isinstance(data, dict):  # {"train": [...], ...} bundles
        data = [m for split in data.values() for m in split]
    for mol in data:
        n = int(mol["num_atom"])
        atoms = [int(a) for a in mol["atom_type"]]
        bond = mol["bond_type"]
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                t = int(bond[u][v])
                if t:
                    edges.append((u, v, t))
        yield n, atoms, edges


def molecules_from_json(path: Path):
    text = path.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [json.loads(line) for line in text.splitlines() if line.strip()]
    if isinstance(data, dict):
        data = [m for split in data.values() for m in split]
    for mol in data:
        atoms = [int(a) for a in mol["atoms"]]
        edges = [(int(u), int(v), int(t)) for u, v, t in mol["bonds"]]
        yield len(atoms), atoms, edges


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("input", type=Path)
    ap.add_argument("output", type=Path)
    ap.add_argument("--limit", type=int, default=None,
                    help="convert only the first N molecules")
    args = ap.parse_args()

    reader = (molecules_from_pickle if args.input.suffix == ".pkl"
              else molecules_from_json)
    graphs = []
    for n, atoms, edges in reader(args.input):
        graphs.append(
            {
                "n": n,
                "edges": [[u, v] for u, v, _ in edges],
                "vertex_labels": atoms,
                "edge_labels": [[u, v, t] for u, v, t in edges],
                "name": f"zinc#{len(graphs)}",
            }
        )
        if args.limit is not None and len(graphs) >= args.limit:
            break
    if not graphs:
        print("no molecules found", file=sys.stderr)
        return 2
    args.output.write_text(json.dumps({"graphs": graphs}) + "\n")
    print(f"wrote {args.output} ({len(graphs)} graphs)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
