import json
import subprocess
import sys

import pytest

from etalecat import catalog, cli, errors, laws, serialize
from etalecat.errors import ValidationError
from etalecat.laws import CheckReport, default_pool
from etalecat.functors import Verdict

get = catalog.get


def etalecat(*argv, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "etalecat", *argv], input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_round_trip_every_catalog_object():
    for name in catalog.names():
        obj = get(name)
        text = serialize.dumps(obj)
        back = serialize.load(json.loads(text))
        assert back == obj
        assert serialize.dumps(back) == text


def test_round_trip_pool_morphisms_and_couples():
    pool = default_pool(0)
    for x in pool.morphisms[::10] + pool.couples[::5] + pool.homs[::10]:
        text = serialize.dumps(x)
        back = serialize.load(json.loads(text))
        assert back == x and serialize.dumps(back) == text


def test_detect_kind_without_tag():
    data = serialize.to_json(get("Z2"))
    del data["kind"]
    assert serialize.detect_kind(data) == "semigroup"
    with pytest.raises(ValidationError):
        serialize.detect_kind({"nothing": 1})
    with pytest.raises(ValidationError):
        serialize.detect_kind({"kind": "banana"})


def test_resolve_unknown_reference():
    with pytest.raises(ValidationError):
        serialize.resolve("no/such/file.json")


def test_catalog_emit_then_validate_stdin():
    code, out, _ = etalecat("catalog", "emit", "Z2")
    assert code == 0
    code, out2, _ = etalecat("validate", "-", stdin=out)
    assert code == 0 and json.loads(out2) == {"valid": True, "kind": "semigroup"}


def test_paterson_e2_matrix():
    code, out, _ = etalecat("paterson", "E2")
    assert code == 0
    doc = json.loads(out)
    assert [[e["n"] for e in row] for row in doc["matrix"]] == [[1, 0], [1, 1]]


def test_check_adjunction_seed_seven():
    code, out, _ = etalecat("check", "adjunction", "--seed", "7")
    rep = json.loads(out)
    assert code == 0 and rep["failures"] == [] and rep["seed"] == 7 and rep["instances"] > 0


def test_bad_verb_and_missing_name_exit_one():
    assert etalecat("frobnicate")[0] == 1
    assert cli.main(["catalog", "emit"]) == 1
    assert cli.main(["catalog", "emit", "NOPE"]) == 1


def test_invalid_semigroup_exits_one(tmp_path):
    f = tmp_path / "lz.json"
    f.write_text(json.dumps({"kind": "semigroup", "table": [[0, 0], [1, 1]]}))
    code, _, err = etalecat("validate", str(f))
    assert code == 1 and "invalid input" in err


def test_guard_exceeded_exits_three(tmp_path):
    # a freshly loaded copy, so no memoized bisections are reused
    f = tmp_path / "pair2.json"
    f.write_text(serialize.dumps(get("PAIR2")))
    try:
        assert cli.main(["--guards", '{"bis_max_arrows": 1}', "bis", str(f)]) == 3
    finally:
        errors.set_guards(**errors.Guards().__dict__)


def test_law_failure_exits_two(monkeypatch, capsys):
    def failing(pool, seed):
        rep = CheckReport("adjunction", seed)
        rep.add(Verdict("triangle_left", "X", False, 1, 2))
        return rep
    monkeypatch.setitem(laws.SUITES, "adjunction", failing)
    assert cli.main(["check", "adjunction"]) == 2
    out = json.loads(capsys.readouterr().out)
    assert out["failures"][0] == {"check": "triangle_left", "object": "X", "lhs": 1, "rhs": 2}


def test_compose_wrong_kind_exits_one():
    assert cli.main(["compose", "eg", "PAIR2", "PAIR2"]) == 1


def test_compose_isa_and_eg(tmp_path, capsys):
    pool = default_pool(0)
    m2, m1 = laws.composable_pairs(pool.morphisms)[0]
    for name, m in (("m1", m1), ("m2", m2)):
        (tmp_path / f"{name}.json").write_text(serialize.dumps(m))
    assert cli.main(["compose", "isa", str(tmp_path / "m1.json"), str(tmp_path / "m2.json")]) == 0
    out = serialize.load(json.loads(capsys.readouterr().out))
    assert out == laws.compose_action_morphisms(m2, m1)
    c2, c1 = laws.composable_pairs(pool.couples)[3]
    for name, c in (("c1", c1), ("c2", c2)):
        (tmp_path / f"{name}.json").write_text(serialize.dumps(c))
    assert cli.main(["compose", "eg", str(tmp_path / "c1.json"), str(tmp_path / "c2.json")]) == 0
    out = serialize.load(json.loads(capsys.readouterr().out))
    assert out.canon == laws.compose_couples(c2, c1).canon


def test_constructions_emit_valid_documents(capsys):
    expected = {"spectral": "action", "universal": "groupoid", "transform": "groupoid",
                "slice": "action", "bis": "semigroup"}
    args = {"spectral": "I2", "universal": "I2", "transform": "SWAP", "slice": "PAIR2", "bis": "PAIR2"}
    for verb, kind in expected.items():
        assert cli.main([verb, args[verb]]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert serialize.detect_kind(doc) == kind
        serialize.load(doc)


def test_universal_of_i2_has_seven_arrows(capsys):
    cli.main(["universal", "I2"])
    assert json.loads(capsys.readouterr().out)["arrows"] == 7


def test_export_dot_is_byte_stable(tmp_path):
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    assert cli.main(["-o", str(a), "export-dot", "PAIR2"]) == 0
    assert cli.main(["-o", str(b), "export-dot", "PAIR2"]) == 0
    assert a.read_bytes() == b.read_bytes() and a.read_text().startswith("digraph")


def test_catalog_list(capsys):
    assert cli.main(["catalog", "list"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "I2\tsemigroup" in lines and "PAIR2\tgroupoid" in lines


def test_console_script_available():
    proc = subprocess.run(["etalecat", "catalog", "emit", "SIERP"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["points"] == 2
