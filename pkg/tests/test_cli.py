import json
import os

import pytest

from extremal_lie import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tables_lr(capsys, tmp_path):
    code, out, err = run_cli(capsys, "--cache", str(tmp_path), "tables", "lr", "--max-r", "4")
    assert code == 0
    for want in ("dim L_1", "dim L_4", "overall: PASS"):
        assert want in out
    assert "runtime_ms" in err and "runtime_ms" not in out


def test_tables_rr_json_deterministic(capsys, tmp_path):
    code1, out1, _ = run_cli(capsys, "--json", "--cache", str(tmp_path), "tables", "rr", "--max-r", "3")
    code2, out2, _ = run_cli(capsys, "--json", "--cache", str(tmp_path), "tables", "rr", "--max-r", "3")
    assert code1 == code2 == 0
    assert out1 == out2  # byte identical
    data = json.loads(out1)
    assert data["pass"] is True
    assert [c["actual"] for c in data["checks"]] == [2, 5, 19]


def test_tables_rr_lengths(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "--json", "--cache", str(tmp_path), "tables", "rr-lengths", "--r", "4")
    assert code == 0
    data = json.loads(out)
    row = data["checks"][0]
    assert row["actual"] == [1, 4, 12, 24, 36, 40, 36, 24, 12, 4]


def test_mingen_g2(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "--cache", str(tmp_path), "mingen", "--type", "G2", "--char", "0")
    assert code == 0
    assert "overall: PASS" in out


def test_mingen_e8_requires_heavy(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "--cache", str(tmp_path), "mingen", "--type", "E8")
    assert exc.value.code == 2


def test_mingen_jobs_flag(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "--cache", str(tmp_path), "mingen", "--type", "A1,A2", "--jobs", "2"
    )
    assert code == 0
    assert "A1/char0" in out and "A2/char0" in out


def test_radicals_g2_char3(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "--json", "--cache", str(tmp_path), "radicals", "--type", "G2", "--char", "3")
    assert code == 0
    data = json.loads(out)
    byname = {c["name"]: c for c in data["checks"]}
    assert byname["Rad(L) dim"]["actual"] == 0
    assert byname["Rad(f) dim"]["actual"] == 7
    assert data["pass"]


def test_threegen(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "--json", "--cache", str(tmp_path), "threegen", "--edges", "-2,-2,-2", "--central", "0"
    )
    assert code == 0
    data = json.loads(out)
    byname = {c["name"]: c for c in data["checks"]}
    assert byname["case (nonzero edges)"]["actual"] == 3
    assert byname["case 3 isomorphic_to_sl3"]["pass"]


def test_rootgroups_a2_char5(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "--cache", str(tmp_path), "rootgroups", "--type", "A2", "--char", "5")
    assert code == 0
    assert "overall: PASS" in out


def test_extremal_check(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "--json", "--cache", str(tmp_path), "extremal-check", "--type", "B3")
    assert code == 0
    data = json.loads(out)
    byname = {c["name"]: c for c in data["checks"]}
    assert byname["long root elements extremal"]["actual"] == 12
    assert byname["short root elements not extremal"]["actual"] == 6


def test_char2_rejected(capsys, tmp_path):
    code, out, err = run_cli(capsys, "--cache", str(tmp_path), "mingen", "--type", "A2", "--char", "2")
    assert code == 2


def test_cache_roundtrip_and_stale_schema(capsys, tmp_path):
    cache = str(tmp_path / "c1")
    code1, out1, _ = run_cli(capsys, "--json", "--cache", cache, "extremal-check", "--type", "G2")
    files = os.listdir(cache)
    assert any(f.startswith("chev_G2") for f in files)
    # warm rerun: identical output
    code2, out2, _ = run_cli(capsys, "--json", "--cache", cache, "extremal-check", "--type", "G2")
    assert (code1, out1) == (code2, out2)
    # stale schema entries are ignored and rebuilt
    path = os.path.join(cache, [f for f in files if f.startswith("chev_G2")][0])
    with open(path) as fh:
        payload = json.load(fh)
    payload["schema_version"] = -1
    with open(path, "w") as fh:
        json.dump(payload, fh)
    code3, out3, _ = run_cli(capsys, "--json", "--cache", cache, "extremal-check", "--type", "G2")
    assert (code3, out3) == (code1, out1)
    with open(path) as fh:
        assert json.load(fh)["schema_version"] != -1


def test_cached_table_matches_fresh():
    import tempfile
    from extremal_lie.rootdata import RootSystem, chevalley_constants
    with tempfile.TemporaryDirectory() as d:
        labels1, table1 = cli.cached_integer_table("F", 4, d)
        labels2, table2 = cli.cached_integer_table("F", 4, d)  # from disk
    fresh_labels, fresh = chevalley_constants(RootSystem("F", 4)).integer_table()
    assert labels1 == labels2 == fresh_labels
    assert table1 == table2 == fresh


def test_report_exit_code_on_failure(capsys):
    rep = cli.Report("demo", {})
    rep.add("value", 1, 2)
    assert not rep.ok


def test_usage_error_exit_code(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "--cache", str(tmp_path), "tables", "bogus")
    assert exc.value.code == 2


def test_mingen_f4_char5(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "--json", "--cache", str(tmp_path), "mingen", "--type", "F4", "--char", "5")
    assert code == 0
    data = json.loads(out)
    byname = {c["name"]: c for c in data["checks"]}
    assert byname["F4/char5 t"]["actual"] == 5
    assert byname["F4/char5 lower bound"]["pass"]
