import json
from fractions import Fraction

import pytest

from comalg import cli, invariants, verify
from comalg.algebra import SPLIT
from comalg.construct import from_cubic_exceptional, table2
from comalg.serialize import InputError, SCHEMA_VERSION, dumps, parse_algebra, parse_rat, to_json

SPLIT_JSON = json.dumps(to_json(SPLIT))


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.mark.parametrize("text, value", [("3", 3), ("-7/4", Fraction(-7, 4)), (" 2/6 ", Fraction(1, 3)), (5, 5)])
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("bad", ["1/0", "1.5", "x", True, None, 0.5, "1/-2"])
def test_parse_rat_rejects(bad):
    with pytest.raises(InputError):
        parse_rat(bad)


def test_parse_algebra_missing_field():
    with pytest.raises(InputError, match="missing"):
        parse_algebra({"a": "1"})


def test_to_json_round_trip():
    assert parse_algebra(to_json(SPLIT)) == SPLIT
    assert to_json(Fraction(-3, 4)) == "-3/4"


def test_invariants_split(capsys):
    code, rep = run(capsys, "invariants", SPLIT_JSON)
    assert code == 0
    assert rep["schema_version"] == SCHEMA_VERSION
    assert rep["command"] == "invariants"
    b = rep["invariants"]
    assert (b["p3t"]["value"], b["p2t"]["value"], b["disc_q"]["value"], b["inv"]["value"]) == ("16", "-12", "1", "0")
    assert all(c["ok"] for c in rep["checks"])


def test_invariants_zero(capsys):
    code, rep = run(capsys, "invariants", json.dumps({k: "0" for k in "abcdef"}))
    assert code == 0
    assert all(v["value"] == "0" for k, v in rep["invariants"].items() if k not in ("q", "t"))


def test_invariants_bad_rational(capsys):
    payload = json.dumps({**to_json(SPLIT), "a": "1/0"})
    code, rep = run(capsys, "invariants", payload)
    assert code == 2
    assert rep["error"]["kind"] == "input"


def test_invalid_json_position(capsys):
    code, rep = run(capsys, "invariants", '{"a": 1,, }')
    assert code == 2
    assert "line 1 column" in rep["error"]["message"]


def test_reads_file_and_stdin(tmp_path, capsys, monkeypatch):
    path = tmp_path / "split.json"
    path.write_text(SPLIT_JSON, encoding="utf-8")
    code, rep = run(capsys, "invariants", str(path))
    assert code == 0
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(SPLIT_JSON))
    code, rep2 = run(capsys, "invariants", "-")
    assert rep2 == rep


def test_classify_split(capsys):
    code, rep = run(capsys, "classify", SPLIT_JSON)
    assert code == 0
    r = rep["result"]
    assert r["gl"] == {"stratum": "GenericCardano", "p3": "16", "p2": "-12", "ext": 1}
    assert r["associative"] is True
    assert r["division"] is False


def test_classify_table2(capsys):
    code, rep = run(capsys, "classify", json.dumps(to_json(table2(2))))
    assert code == 0
    assert rep["result"]["gl"] == {"stratum": "StableRank1", "lambda_class": 2}


def test_classify_exceptional_sl(capsys):
    code, rep = run(capsys, "classify", "--sl", json.dumps(to_json(from_cubic_exceptional(0, 2))))
    assert code == 0
    assert rep["result"]["gl"]["heuristic"] is True
    assert rep["result"]["sl"]["stratum"] == "ExceptionalIrreducible"
    assert rep["result"]["sl"]["up_to_z2"] is True


def test_classify_sl_nongeneric_is_unsupported(capsys):
    code, rep = run(capsys, "classify", "--sl", json.dumps(to_json(table2(2))))
    assert code == 3


@pytest.mark.parametrize(
    "mode, params, algebra",
    [
        ("moduli", {"p3": "0", "p2": "-3"}, ["1/3", "-1/6", "0", "1/6", "-1/6", "1/6"]),
        ("cardano", {"p3": "-2", "p2": "-3", "ext": "2"}, ["0", "-1/6", "0", "3/4", "0", "0"]),
        ("cubic", {"d2": "-7", "d3": "-6"}, ["-63/200", "143/600", "-27/200", "49/200", "-49/200", "63/200"]),
        ("eisenstein", {"A": "54", "B": "0", "D": "0", "C": "0"}, ["1", "0", "2", "0", "0", "1/2"]),
    ],
)
def test_construct(capsys, mode, params, algebra):
    code, rep = run(capsys, "construct", mode, json.dumps(params))
    assert code == 0
    assert [rep["algebra"][k] for k in "abcdef"] == algebra
    assert all(c["ok"] for c in rep["checks"])


def test_construct_triple_pair(capsys):
    code, rep = run(capsys, "construct", "triple", '{"d1": "0", "trace": "0", "norm": "-3"}')
    assert code == 0


def test_construct_domain_error(capsys):
    code, rep = run(capsys, "construct", "moduli", '{"p3": "16", "p2": "-12"}')
    assert code == 2
    assert rep["error"]["kind"] == "domain"


def test_equiv(capsys):
    a = json.dumps(to_json(from_cubic_exceptional(0, 2)))
    b = json.dumps(to_json(from_cubic_exceptional(0, 3)))
    assert run(capsys, "equiv", a, b)[1]["result"] == "no"
    assert run(capsys, "equiv", a, a)[1]["result"] == "heuristic-yes"
    code, rep = run(capsys, "equiv", "--sl", a, a)
    assert rep["result"] == "yes-up-to-z2" and rep["heuristic"] is True
    code, rep = run(capsys, "equiv", "--slxsl", SPLIT_JSON, SPLIT_JSON)
    assert code == 3


def test_compose_three_form(capsys):
    m = '{"a": "2", "b": "0", "c": "0", "d": "1", "e": "2/3", "f": "3/2"}'
    code, rep = run(capsys, "compose", m, m)
    assert code == 0
    assert rep["classes"]["product_is_identity"] is True
    assert all(c["ok"] for c in rep["checks"])


def test_verify_small_run(capsys):
    code, rep = run(capsys, "verify", "--count", "50")
    assert code == 0
    assert rep["summary"]["total_failures"] == 0


def test_verify_is_deterministic(capsys):
    cli.main(["verify", "--count", "40", "--seed", "7"])
    first = capsys.readouterr().out
    cli.main(["verify", "--count", "40", "--seed", "7"])
    assert capsys.readouterr().out == first


def test_verify_sharding_covers_count():
    rep = verify.run_verify(verify.VerifyConfig(count=30, workers=2))
    assert rep["suites"]["identities"]["cases"] == 30


def test_verify_count_zero_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--count", "0"])
    assert exc.value.code == 2


def test_verify_reports_injected_bug(capsys, monkeypatch):
    original = invariants._disc_d_poly
    monkeypatch.setattr(invariants, "_disc_d_poly", lambda *m: original(*m) + (m[0] == 3))
    code, rep = run(capsys, "verify", "--count", "200")
    assert code == 1
    failures = rep["summary"]["failures"]
    assert failures
    first = failures[0]
    assert first["suite"] == "identities"
    assert first["reproducer"]["algebra"]["a"] == "3"
    assert "Disc(D)" in first["error"]


def test_dumps_is_stable():
    assert dumps(SPLIT) == dumps(SPLIT)
