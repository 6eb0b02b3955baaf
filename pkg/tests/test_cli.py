import pytest

from lsb.catalog import b2, h_even, h_odd
from lsb.cli import main, run
from lsb.exactlin import QQ
from lsb.laws import LAWS
from lsb.lsafile import dump


def machine(argv):
    out, _ = run(argv + ["--machine"])
    kv = dict(line.split("=", 1) for line in out.render(True).splitlines() if "=" in line)
    return out.code, kv


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, L in {"he": h_even(1, 0), "b2": b2(), "hq": h_odd(1, field=QQ)}.items():
        paths[name] = str(tmp_path / f"{name}.lsa")
        dump(L, paths[name])
    broken = tmp_path / "broken.lsa"
    broken.write_text("field 5\neven x1\nodd y1 z\n[x1,y1] = z\n[y1,x1] = z\n")
    paths["broken"] = str(broken)
    nonnil = tmp_path / "nonnil.lsa"
    nonnil.write_text("field 5\neven e1 e2\nodd\n[e1,e2] = e2\n")
    paths["nonnil"] = str(nonnil)
    paths["findings"] = str(tmp_path / "findings.log")
    return paths


def test_breadth_both(files):
    code, kv = machine(["breadth", files["he"], "--method", "both"])
    assert code == 0
    assert (kv["total"], kv["pair"], kv["agree"]) == ("1", "(1,0)", "true")


def test_laws_p3_4(files):
    code, kv = machine(["laws", files["b2"], "--law", "P3-4"])
    assert code == 0 and kv["outcome"] == "Holds"


def test_every_law_id_accepted(files):
    for law_id in LAWS:
        code, _ = machine(["laws", files["he"], "--law", law_id, "--findings", files["findings"]])
        assert code == 0


def test_verify_broken_names_pair(files, capsys):
    assert main(["verify", files["broken"]]) == 1
    out = capsys.readouterr().out
    assert "x1" in out and "y1" in out


def test_exit_codes(files):
    assert run(["laws", files["he"], "--law", "NOPE"])[0].code == 2
    assert run(["breadth", files["nonnil"], "--method", "classify"])[0].code == 2
    assert run(["breadth", files["hq"], "--method", "bruteforce"])[0].code == 3
    assert run(["breadth", files["hq"], "--method", "classify"])[0].code == 0
    assert run(["frobnicate"])[0].code == 2
    assert run(["verify", "/nonexistent.lsa"])[0].code == 2


def test_invariants_and_ideals(files):
    code, kv = machine(["invariants", files["b2"]])
    assert code == 0 and kv["derived"] == "(3,0)" and kv["quotient_center"] == "(0,2)"
    code, kv = machine(["maximal-abelian", files["he"]])
    assert code == 0 and int(kv["count"]) >= 2


def test_catalog_and_random_write_files(tmp_path):
    out = tmp_path / "x.lsa"
    assert run(["catalog", "He", "--m", "1", "--n", "1", "-o", str(out)])[0].code == 0
    assert "[y1,y1]" in out.read_text()
    a, b = tmp_path / "r1.lsa", tmp_path / "r2.lsa"
    for p in (a, b):
        run(["random", "--seed", "7", "--even", "2", "--odd", "1", "--center-even", "1",
             "--center-odd", "1", "--field", "5", "-o", str(p)])
    assert a.read_text() == b.read_text()


def test_search_records_finding(files):
    code, kv = machine(["search", "--derived", "1,0", "--quotient", "2,0", "--field", "3",
                        "--max-total", "3", "--findings", files["findings"]])
    assert code == 0 and kv["outcome"] == "Witness"
    assert "candidates" in open(files["findings"]).read()


def test_deterministic(files):
    assert machine(["breadth", files["b2"], "--jobs", "1"]) == machine(["breadth", files["b2"], "--jobs", "2"])
