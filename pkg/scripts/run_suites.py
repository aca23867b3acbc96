"""Run the law-checking suites and write one JSON record per suite with its
status, instance counts and wall-clock time.

    python3 scripts/run_suites.py                     # everything
    python3 scripts/run_suites.py --only arrow free   # a subset
    python3 scripts/run_suites.py --max-instances 5000 --out results.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from multiarity.arrowcat import check_duoidal, cocontinuity_suite, monoidal_suite, pushout_char_suite
from multiarity.clone import set_clone_fragment, validate_clone
from multiarity.enriched import algebra_category, roundtrip_check
from multiarity.errors import CapacityError
from multiarity.fixtures import (arrow_pool, fixture_categories, g_of_stateful, mutation_catalog,
                                 roundtrip_fixtures, stateful_fixtures)
from multiarity.freecons import cartesian_report, free_cartesian, free_clone, freeness_report
from multiarity.homcat import hom_category_report
from multiarity.multicat import clone_to_multicat, lower
from multiarity.premulticat import (centre, derived_lemma_suite, identity_premult_morphism,
                                    identity_premult_transformation, compose_premult_transformations,
                                    premult_morphisms, premult_transformations_between, validate_premulticat,
                                    validate_premult_transformation)
from multiarity.report import CheckConfig

GROUPS = ("arrow", "clone", "stateful", "mutations", "roundtrip", "free", "homcat")


@dataclass
class RunConfig:
    max_instances: int = 20_000
    seed: int = 0
    max_n: int = 4  # largest n for the n-ary pushout comparison
    fragment_carriers: list = field(default_factory=lambda: [[1], [2], [3], [1, 1], [1, 2], [2, 2], [1, 1, 1]])
    max_arity: int = 3
    groups: tuple = GROUPS


def summary(rep) -> dict:
    return {
        "status": rep.status,
        "violations": rep.violation_count,
        "gaps": rep.gap_count,
        "checked": sum(s.checked for s in rep.stats.values()),
        "capped": sorted(k for k, s in rep.stats.items() if s.capped),
        "failed": sorted(rep.laws_failed()),
    }


def timed(name, fn, out: list) -> None:
    t0 = time.perf_counter()
    try:
        row = fn()
    except CapacityError as e:
        row = {"status": "capacity", "error": str(e)}
    row = {"suite": name, **row, "seconds": round(time.perf_counter() - t0, 3)}
    out.append(row)
    print(f"{name:40s} {row['status']:13s} {row['seconds']:8.2f}s", flush=True)


def run(cfg: RunConfig) -> list[dict]:
    check = CheckConfig(max_instances=cfg.max_instances, seed=cfg.seed)
    out: list[dict] = []
    pool = arrow_pool()

    if "arrow" in cfg.groups:
        timed("arrow/monoidal", lambda: summary(monoidal_suite(pool)), out)
        timed("arrow/pushout-char", lambda: summary(pushout_char_suite(pool, cfg.max_n)), out)
        timed("arrow/cocontinuity", lambda: summary(cocontinuity_suite(pool)), out)
        timed("arrow/duoidal", lambda: summary(check_duoidal(pool, seed=cfg.seed)), out)

    if "clone" in cfg.groups:
        for car in cfg.fragment_carriers:
            for L in range(1, cfg.max_arity + 1):
                timed(f"clone/frag{car}-L{L}",
                      lambda car=car, L=L: summary(validate_clone(set_clone_fragment(car, L), check)), out)

    if "stateful" in cfg.groups:
        for name, p in stateful_fixtures().items():
            timed(f"stateful/{name}/laws", lambda p=p: summary(validate_premulticat(p, check)), out)
            timed(f"stateful/{name}/centre", lambda p=p: summary(validate_premulticat(centre(p), check)), out)
            timed(f"stateful/{name}/derived",
                  lambda p=p: summary(derived_lemma_suite(p, morphisms=[identity_premult_morphism(p)],
                                                          config=check)), out)

    if "mutations" in cfg.groups:
        for m in mutation_catalog(check):
            def mutated(m=m):
                rep = m.check(m.build())
                row = summary(rep)
                row["detected"] = m.expect in rep.laws_failed()
                return row
            timed(f"mutation/{m.name}", mutated, out)

    if "roundtrip" in cfg.groups:
        for name, x in roundtrip_fixtures().items():
            timed(f"roundtrip/{name}", lambda x=x: summary(roundtrip_check(x)), out)

    if "free" in cfg.groups:
        for name, cat in fixture_categories().items():
            for L in range(1, cfg.max_arity + 1):
                def free(cat=cat, L=L):
                    c = free_clone(cat, L)
                    return summary(validate_clone(c, check).merge(freeness_report(c), "freeness/"))
                timed(f"free/clone-{name}-L{L}", free, out)
            timed(f"free/cartesian-{name}",
                  lambda cat=cat: summary(cartesian_report(free_cartesian(free_clone(cat, 2).materialized(), 2))),
                  out)

    if "homcat" in cfg.groups:
        def premult_homcat():
            p = lower(clone_to_multicat(set_clone_fragment([2], 2))).materialized()
            ms = premult_morphisms(p, p)[:8]
            rep = hom_category_report("premulticat", ms,
                                      lambda f, g: premult_transformations_between(f, g, check),
                                      identity_premult_transformation, compose_premult_transformations,
                                      lambda x: validate_premult_transformation(x, check), check)
            return {**summary(rep), **rep.data}

        def enriched_homcat():
            g2 = g_of_stateful(2)
            rep = algebra_category(g2, g2, config=check)
            return {**summary(rep), **rep.data}
        timed("homcat/premulticat-lowered-frag2", premult_homcat, out)
        timed("homcat/enriched-G-stateful", enriched_homcat, out)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-instances", type=int, default=RunConfig.max_instances)
    ap.add_argument("--seed", type=int, default=RunConfig.seed)
    ap.add_argument("--max-arity", type=int, default=RunConfig.max_arity)
    ap.add_argument("--only", nargs="+", choices=GROUPS, default=list(GROUPS))
    ap.add_argument("--out", help="write the JSON records here as well as a summary to stdout")
    args = ap.parse_args()
    cfg = RunConfig(max_instances=args.max_instances, seed=args.seed, max_arity=args.max_arity,
                    groups=tuple(args.only))
    rows = run(cfg)
    doc = {"config": asdict(cfg), "results": rows}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2)
    bad = [r["suite"] for r in rows if r["status"] == "fail" and not r.get("detected")]
    print(f"{len(rows)} suites, {len(bad)} unexpected failures")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
