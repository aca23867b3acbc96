"""Command-line entry point. Every command prints one JSON document on
stdout. Exit codes: 0 pass, 1 violations, 2 input or shape error,
3 capacity or coverage problem."""

from __future__ import annotations

import sys

import click

from . import io
from .arrowcat import check_duoidal, funny_tensor
from .clone import Clone, clone_algebras, validate_clone
from .effectful import validate_effectful
from .enriched import (EnrichedMulticat, algebra_category, roundtrip_check, to_effectful, to_enriched,
                       validate_enriched)
from .errors import MultiarityError
from .freecons import (cartesian_report, free_category_on_graph, free_cartesian, free_clone,
                       free_enriched_category, free_strict_monoidal, freeness_report, functor_report,
                       monoidal_report)
from .category import validate_category
from .multicat import validate_multicat
from .premulticat import centre, is_central, validate_premulticat
from .report import CheckConfig, Report

CHECKERS = {
    "clone": validate_clone,
    "multicat": validate_multicat,
    "premulticat": validate_premulticat,
    "effectful": validate_effectful,
    "enriched": validate_enriched,
}


class Exit(Exception):
    def __init__(self, code: int):
        self.code = code


def emit(payload: dict, code: int) -> None:
    payload = dict(payload, exit=code)
    click.echo(io.dumps(payload))
    raise Exit(code)


def emit_report(rep: Report, result=None, extra: dict | None = None) -> None:
    payload = rep.to_json()
    if result is not None:
        payload["result"] = result
    if extra:
        payload.update(extra)
    emit(payload, rep.exit_code)


@click.group()
@click.option("--max-instances", type=int, default=20_000, show_default=True,
              help="Cap on enumerated instances per law; beyond it a seeded sample is drawn.")
@click.option("--format", "fmt", type=click.Choice(["json"]), default="json", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for sampled instances.")
@click.pass_context
def main(ctx, max_instances, fmt, seed):
    """Law checking for clones, multicategories, premulticategories,
    effectful and enriched multicategories."""
    ctx.obj = CheckConfig(max_instances=max_instances, seed=seed)


@main.command()
@click.argument("kind", type=click.Choice([*CHECKERS, "arrowobj-duoidal", "category"]))
@click.argument("path")
@click.pass_obj
def check(cfg, kind, path):
    """Validate a structure read from PATH."""
    if kind == "arrowobj-duoidal":
        pool = io.arrow_pool_from_json(io.read_json(path))
        emit_report(check_duoidal(pool, seed=cfg.seed))
    if kind == "category":
        emit_report(validate_category(io.load(path, "category")))
    emit_report(CHECKERS[kind](io.load(path, kind), cfg))


@main.command("free-clone")
@click.argument("path")
@click.option("--max-context", "-L", type=int, default=2, show_default=True)
@click.pass_obj
def free_clone_cmd(cfg, path, max_context):
    """Free clone on the category in PATH."""
    c = free_clone(io.load(path, "category"), max_context)
    rep = validate_clone(c, cfg).merge(freeness_report(c))
    emit_report(rep, io.to_json(c))


@main.command("free-cart")
@click.argument("path")
@click.option("--max-len", "-K", type=int, default=2, show_default=True)
@click.pass_obj
def free_cart_cmd(cfg, path, max_len):
    """Free cartesian category of lists on the clone in PATH."""
    lc = free_cartesian(io.load(path, "clone"), max_len)
    emit_report(cartesian_report(lc), io.to_json(lc.category))


@main.command("free-monoidal")
@click.argument("path")
@click.option("--max-len", "-K", type=int, default=2, show_default=True)
@click.pass_obj
def free_monoidal_cmd(cfg, path, max_len):
    """Free strict monoidal category on the multicategory in PATH."""
    lc = free_strict_monoidal(io.load(path, "multicat"), max_len)
    emit_report(monoidal_report(lc), io.to_json(lc.category))


@main.command("free-cat")
@click.argument("path")
@click.option("--max-len", "-P", type=int, default=2, show_default=True)
def free_cat_cmd(path, max_len):
    """Free category on the graph in PATH (paths up to length P)."""
    c = free_category_on_graph(io.load(path, "graph"), max_len)
    emit_report(validate_category(c), io.to_json(c))


@main.command("free-enriched-cat")
@click.argument("path")
@click.option("--max-len", "-P", type=int, default=2, show_default=True)
def free_enriched_cmd(path, max_len):
    """Free arrow-enriched category on the arrow graph in PATH."""
    fe = free_enriched_category(io.load(path, "graph"), max_len)
    rep = validate_category(fe.level0).merge(validate_category(fe.level1), "level1/")
    rep.merge(functor_report(fe.level0, fe.level1, fe.functor), "functor/")
    result = {
        "homs": {f"{a}->{b}": io.to_json(h) for (a, b), h in sorted(fe.homs.items())},
        "level0": io.to_json(fe.level0),
        "level1": io.to_json(fe.level1),
        "functor": dict(sorted(fe.functor.items())),
    }
    emit_report(rep, result)


@main.command("centre")
@click.argument("path")
@click.pass_obj
def centre_cmd(cfg, path):
    """Centre of the premulticategory in PATH."""
    z = centre(io.load(path, "premulticat"))
    rep = validate_premulticat(z, cfg)
    emit_report(rep, io.to_json(z))


@main.command("central")
@click.argument("term")
@click.argument("path")
def central_cmd(term, path):
    """Is TERM central (within the table) in the premulticategory in PATH?"""
    p = io.load(path, "premulticat")
    if term not in p.table:
        raise MultiarityError(f"unknown term {term!r}")
    ok, w = is_central(p, term)
    rep = Report("centrality")
    if ok:
        rep.passed("central")
    else:
        rep.fail("central", w)
    emit_report(rep, {"term": term, "central": ok, "witness": w})


@main.command("to-effectful")
@click.argument("path")
@click.pass_obj
def to_effectful_cmd(cfg, path):
    """F: enriched multicategory to effectful multicategory."""
    e = to_effectful(io.load(path, "enriched"))
    emit_report(validate_effectful(e, cfg), io.to_json(e))


@main.command("to-enriched")
@click.argument("path")
@click.pass_obj
def to_enriched_cmd(cfg, path):
    """G: effectful multicategory to enriched multicategory."""
    d = to_enriched(io.load(path, "effectful"))
    emit_report(validate_enriched(d, cfg), io.to_json(d))


@main.command("roundtrip")
@click.argument("kind", type=click.Choice(["enriched", "effectful"]))
@click.argument("path")
def roundtrip_cmd(kind, path):
    """Exact round trip G(F(d)) = d or F(G(e)) = e."""
    emit_report(roundtrip_check(io.load(path, kind)))


@main.command("funny")
@click.argument("a")
@click.argument("b")
def funny_cmd(a, b):
    """Funny tensor of two arrow objects."""
    r = funny_tensor(io.load(a, "arrowobj"), io.load(b, "arrowobj"))
    rep = Report("funny tensor")
    rep.passed("constructed")
    emit_report(rep, io.to_json(r.object), {"sizes": list(r.object.sizes)})


@main.command("algebras")
@click.argument("theory")
@click.argument("target")
@click.option("--guard", type=int, default=200_000, show_default=True)
@click.pass_obj
def algebras_cmd(cfg, theory, target, guard):
    """Algebras of THEORY in TARGET (clones or enriched structures)."""
    c, t = io.load(theory), io.load(target)
    if isinstance(c, EnrichedMulticat) and isinstance(t, EnrichedMulticat):
        emit_report(algebra_category(c, t, guard, cfg))
    if isinstance(c, Clone) and isinstance(t, Clone):
        algs = clone_algebras(c, t, guard)
        rep = Report("clone algebras")
        rep.passed("enumerated")
        emit_report(rep, {"count": len(algs), "algebras": [
            {"objects": a.obj_map, "terms": dict(sorted(a.term_map.items()))} for a in algs]})
    raise MultiarityError("algebras needs two clones or two enriched structures")


def run(argv=None) -> int:
    try:
        main.main(args=argv, standalone_mode=False)
    except Exit as e:
        return e.code
    except MultiarityError as e:
        code = e.exit_code
        payload = {"status": "error" if code == 2 else ("capacity" if code == 3 else "fail"),
                   "error": str(e), "exit": code}
        witness = getattr(e, "witness", None)
        if witness:
            payload["witness"] = witness
        click.echo(io.dumps(payload))
        return code
    except click.ClickException as e:
        click.echo(io.dumps({"status": "error", "error": e.format_message(), "exit": 2}))
        return 2
    except click.exceptions.Abort:
        return 2
    return 0


def entry() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entry()
