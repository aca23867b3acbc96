"""Write the JSON fixtures used by the CLI examples and tests."""

import argparse
from pathlib import Path

from multiarity import io
from multiarity.category import ArrowGraph, FinGraph
from multiarity.clone import set_clone_fragment
from multiarity.effectful import premult_to_effectful
from multiarity.fixtures import arrow_pool, fixture_categories, g_of_stateful, projection_clone, stateful2
from multiarity.multicat import clone_to_multicat


def graph_json(g):
    edges = {}
    for (a, b), v in g.edges.items():
        edges[f"{a}->{b}"] = io.to_json(v) if isinstance(g, ArrowGraph) else list(v)
    return {"vertices": list(g.vertices), "edges": edges}


def build() -> dict:
    pool = arrow_pool()
    cats = fixture_categories()
    out = {
        "proj.json": io.to_json(projection_clone(("X",), 2)),
        "frag2-L1.json": io.to_json(set_clone_fragment([2], 1).materialized()),
        "multicat-frag2.json": io.to_json(clone_to_multicat(set_clone_fragment([2], 2)).materialized()),
        "stateful2.json": io.to_json(stateful2(2)),
        "stateful2-L3.json": io.to_json(stateful2(3)),
        "eff-stateful.json": io.to_json(premult_to_effectful(stateful2(2))),
        "g-of-stateful.json": io.to_json(g_of_stateful(2)),
        "arrow-pool.json": {"objects": [io.to_json(a) for a in pool]},
        "arrow-2to1.json": io.to_json(pool[1]),
        "arrow-swap.json": io.to_json(pool[3]),
        "graph-chain.json": graph_json(FinGraph(["A", "B", "C"], {("A", "B"): ["f"], ("B", "C"): ["g"]})),
        "arrowgraph-chain.json": graph_json(ArrowGraph(["A", "B", "C"], {("A", "B"): pool[1], ("B", "C"): pool[1]})),
    }
    for name, c in cats.items():
        out[f"cat-{name}.json"] = io.to_json(c)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, data in build().items():
        io.write_json(out / name, data)
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
