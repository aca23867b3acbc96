import json
import subprocess
import sys
from pathlib import Path

import pytest

from multiarity import io
from multiarity.cli import run
from multiarity.clone import set_clone_fragment
from multiarity.effectful import effectful_equal, premult_to_effectful
from multiarity.enriched import enriched_equal
from multiarity.errors import ShapeError
from multiarity.fixtures import arrow_pool, fixture_categories, g_of_stateful, projection_clone, stateful2
from multiarity.multicat import clone_to_multicat
from multiarity.tables import materialize

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def cli(capsys, *args):
    code = run([str(a) for a in args])
    out = capsys.readouterr().out
    return code, json.loads(out)


# JSON round trips -------------------------------------------------------------

def roundtrip(x, tmp_path, kind):
    p = tmp_path / f"{kind}.json"
    io.write_json(p, io.to_json(x))
    return io.load(p, kind)


def test_clone_json_roundtrip(tmp_path):
    c = set_clone_fragment([2], 1).materialized()
    d = roundtrip(c, tmp_path, "clone")
    assert d.projections == c.projections
    assert materialize(d.sub) == materialize(c.sub)
    assert d.table.homs == c.table.homs


def test_multicat_json_roundtrip(tmp_path):
    m = clone_to_multicat(set_clone_fragment([2], 1)).materialized()
    n = roundtrip(m, tmp_path, "multicat")
    assert n.ids == m.ids and materialize(n.sub) == materialize(m.sub)


def test_premulticat_json_roundtrip(tmp_path):
    p = stateful2(2)
    q = roundtrip(p, tmp_path, "premulticat")
    assert q.ids == p.ids and materialize(q.sub1) == materialize(p.sub1)


def test_effectful_and_enriched_json_roundtrip(tmp_path):
    e = premult_to_effectful(stateful2(2))
    assert effectful_equal(roundtrip(e, tmp_path, "effectful"), e)[0]
    d = g_of_stateful(2)
    assert enriched_equal(roundtrip(d, tmp_path, "enriched"), d)[0]


def test_enriched_flat_bar_accepted(tmp_path):
    data = io.to_json(g_of_stateful(2))
    data["bar"] = {t: u for hom in data["bar"].values() for t, u in hom.items()}
    del data["maxContext"]
    p = tmp_path / "flat.json"
    io.write_json(p, data)
    assert enriched_equal(io.load(p, "enriched"), g_of_stateful(2))[0]


def test_arrowobj_and_category_json_roundtrip(tmp_path):
    for a in arrow_pool():
        b = roundtrip(a, tmp_path, "arrowobj")
        assert b.sizes == a.sizes
    cat = fixture_categories()["chain"]
    c = roundtrip(cat, tmp_path, "category")
    assert c.comp == cat.comp and c.objects == cat.objects


def test_detect_kind():
    assert io.detect_kind(io.to_json(projection_clone())) == "clone"
    assert io.detect_kind(io.to_json(stateful2(2))) == "premulticat"
    assert io.detect_kind(io.to_json(g_of_stateful(2))) == "enriched"
    assert io.detect_kind(io.to_json(premult_to_effectful(stateful2(2)))) == "effectful"
    assert io.detect_kind(io.to_json(arrow_pool()[1])) == "arrowobj"
    with pytest.raises(ShapeError):
        io.detect_kind({"nothing": 1})


def test_fixture_files_are_current():
    sys.path.insert(0, str(FIX.parent / "scripts"))
    from make_fixtures import build
    for name, data in build().items():
        assert json.loads((FIX / name).read_text()) == data, name


# CLI --------------------------------------------------------------------------

def test_check_projection_clone(capsys):
    code, out = cli(capsys, "check", "clone", FIX / "proj.json")
    assert code == 0 and out["status"] == "pass" and out["exit"] == 0


def test_check_every_kind(capsys):
    cases = [("multicat", "multicat-frag2.json"), ("premulticat", "stateful2.json"),
             ("effectful", "eff-stateful.json"), ("enriched", "g-of-stateful.json"),
             ("category", "cat-chain.json"), ("arrowobj-duoidal", "arrow-pool.json")]
    for kind, name in cases:
        code, out = cli(capsys, "check", kind, FIX / name)
        assert code == 0, (kind, out.get("entries"))


def test_roundtrip_command(capsys):
    code, out = cli(capsys, "roundtrip", "enriched", FIX / "g-of-stateful.json")
    assert code == 0
    code, _ = cli(capsys, "roundtrip", "effectful", FIX / "eff-stateful.json")
    assert code == 0


def test_central_witness(capsys):
    code, out = cli(capsys, "central", "w1", FIX / "stateful2.json")
    assert code == 1
    assert out["result"]["central"] is False
    w = out["result"]["witness"]
    assert w and "lhs" in w and "rhs" in w and w["lhs"] != w["rhs"]
    code, out = cli(capsys, "central", "id", FIX / "stateful2.json")
    assert code == 0 and out["result"]["central"]


def test_violation_witness_from_file(capsys, tmp_path):
    data = json.loads((FIX / "stateful2.json").read_text())
    data["ids"]["A"] = "flip"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(data))
    code, out = cli(capsys, "check", "premulticat", p)
    assert code == 1 and out["status"] == "fail"
    assert out["violations"] >= 1
    assert any(v["law"] == "left-unit" for v in out["entries"])


def test_missing_and_malformed_input(capsys, tmp_path):
    code, out = cli(capsys, "check", "clone", tmp_path / "nope.json")
    assert code == 2 and out["status"] == "error"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli(capsys, "check", "clone", bad)[0] == 2
    bad.write_text(json.dumps({"objects": ["A"]}))
    assert cli(capsys, "check", "clone", bad)[0] == 2


def test_unknown_term_is_input_error(capsys):
    assert cli(capsys, "central", "nope", FIX / "stateful2.json")[0] == 2


def test_small_cap_is_coverage_gap(capsys):
    code, out = cli(capsys, "--max-instances", 50, "check", "multicat", FIX / "multicat-frag2.json")
    assert code == 3 and out["status"] == "coverage-gap"


def test_output_is_deterministic(capsys):
    args = ("--max-instances", 50, "check", "multicat", FIX / "multicat-frag2.json")
    run([str(a) for a in args])
    first = capsys.readouterr().out
    run([str(a) for a in args])
    assert capsys.readouterr().out == first


def test_construction_commands(capsys):
    code, out = cli(capsys, "free-clone", FIX / "cat-arrow.json", "-L", 2)
    assert code == 0 and "projections" in out["result"]
    code, out = cli(capsys, "free-cart", FIX / "proj.json", "-K", 2)
    assert code == 0
    code, out = cli(capsys, "free-monoidal", FIX / "multicat-frag2.json", "-K", 2)
    assert code == 0
    code, out = cli(capsys, "free-cat", FIX / "graph-chain.json", "-P", 2)
    assert code == 0 and "A->C" in out["result"]["homs"]
    code, out = cli(capsys, "free-enriched-cat", FIX / "arrowgraph-chain.json", "-P", 2)
    assert code == 0
    code, out = cli(capsys, "centre", FIX / "stateful2.json")
    assert code == 0
    code, out = cli(capsys, "to-enriched", FIX / "eff-stateful.json")
    assert code == 0
    code, out = cli(capsys, "to-effectful", FIX / "g-of-stateful.json")
    assert code == 0


def test_funny_and_algebras(capsys, tmp_path):
    code, out = cli(capsys, "funny", FIX / "arrow-2to1.json", FIX / "arrow-2to1.json")
    assert code == 0 and out["sizes"] == [4, 1]
    frag = tmp_path / "frag2-L2.json"
    io.write_json(frag, io.to_json(set_clone_fragment([2], 2).materialized()))
    code, out = cli(capsys, "algebras", FIX / "proj.json", frag)
    assert code == 0 and out["result"]["count"] == 1
    # binary projections have nowhere to go in an L=1 target
    code, out = cli(capsys, "algebras", FIX / "proj.json", FIX / "frag2-L1.json")
    assert code == 0 and out["result"]["count"] == 0
    code, out = cli(capsys, "algebras", FIX / "g-of-stateful.json", FIX / "g-of-stateful.json")
    assert code == 0 and out["data"]["morphisms"] == 10
    assert cli(capsys, "algebras", FIX / "proj.json", FIX / "g-of-stateful.json")[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "multiarity", "check", "clone", str(FIX / "proj.json")],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["exit"] == 0
