import json
import subprocess
import sys

import pytest

from hopfcheck import constructors as cons
from hopfcheck import serialize
from hopfcheck.cli import main as cli_main
from hopfcheck.fields import make_field


def test_roundtrip_plain(taft3):
    text = serialize.dumps(taft3)
    back = serialize.loads(text)
    assert serialize.hopf_equal(taft3, back)
    assert serialize.dumps(back) == text


def test_roundtrip_braided(ext11):
    Hb, B = ext11
    back = serialize.loads(serialize.dumps(B))
    assert serialize.hopf_equal(B, back)
    assert back.module is not None
    assert back.module.base.dim == Hb.dim


def test_roundtrip_rational(fq):
    H4 = cons.family_hopf(1, 1, (1,), fq)
    back = serialize.loads(serialize.dumps(H4))
    assert serialize.hopf_equal(H4, back)


def _run(args):
    from io import StringIO
    import contextlib
    buf = StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(args)
    return code, buf.getvalue()


def test_cli_verify_taft():
    code, out = _run(["verify", "--algebra", "taft:n=3", "--field", "p=7,root=3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] and doc["report"]["algebra"]["pass"]


def test_cli_determinism():
    args = ["grouplikes", "--algebra", "double:taft:n=3", "--field", "p=7,root=3"]
    c1, o1 = _run(args)
    c2, o2 = _run(args)
    assert c1 == c2 == 0
    assert o1 == o2
    assert json.loads(o1)["report"]["count"] == 9


def test_cli_sequence_braided():
    code, out = _run(["sequence", "--algebra", "family:m=1,n=1,d=1",
                      "--field", "p=5,root=2", "--braided"])
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["g_d_size"] == 1
    flags = [s["strongly_inner"] for s in rep["samples"]]
    assert flags.count(True) == 1


def test_cli_double_subcommand():
    code, out = _run(["double", "--algebra", "sweedler", "--field", "p=5,root=2"])
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["dim"] == 16 and rep["grouplike_count"] == 4
    assert rep["s_group_size"] == 2


def test_cli_braiding_sym_counterexample():
    code, out = _run(["braiding-sym", "--algebra", "taft-factor:n=3",
                      "--field", "p=7,root=3"])
    assert code == 1
    rep = json.loads(out)["report"]
    assert not rep["pass"] and rep["agree"]


def test_cli_config_errors(tmp_path, capsys):
    # unknown key is an error, not a warning
    assert cli_main(["verify", "--algebra", "taft:n=3,zz=1",
                     "--field", "p=7,root=3"]) == 2
    assert cli_main(["verify", "--algebra", "taft:n=3", "--field", "p=6"]) == 2


def test_cli_export_reimport(tmp_path):
    out = tmp_path / "alg.json"
    code = cli_main(["export", "--algebra", "family:m=2,n=1,d=3",
                     "--field", "p=5,root=4", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    H = serialize.hopf_from_dict(doc["report"])
    want = cons.family_hopf(2, 1, (3,), make_field(5, 4))
    assert serialize.hopf_equal(H, want)
    # reimport through the CLI file: spec and verify
    plain = tmp_path / "plain.json"
    plain.write_text(json.dumps(doc["report"]))
    code2, out2 = _run(["verify", "--algebra", f"file:{plain}",
                        "--field", "p=5,root=4"])
    assert code2 == 0 and json.loads(out2)["pass"]


def test_cli_check_failure_exit_code(tmp_path):
    # corrupt the antipode of an exported algebra: verify must exit 1
    doc = serialize.hopf_to_dict(cons.taft(2, make_field(5, 4)))
    doc["antipode"] = [[i, i, "1"] for i in range(4)]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out = _run(["verify", "--algebra", f"file:{bad}",
                      "--field", "p=5,root=4"])
    assert code == 1
    assert not json.loads(out)["report"]["antipode"]["pass"]


def test_cli_cond_check():
    code, out = _run(["cond-check", "--algebra", "family:m=1,n=2,d=1+1",
                      "--field", "p=5,root=2", "--sample", "3", "--seed", "1"])
    assert code == 0
    rep = json.loads(out)["report"]
    assert len(rep["automorphisms"]) >= 3
    assert rep["violating_map_fails"]
