import json

import pytest

from latticelab.cli import run


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def capture_json(capsys, argv):
    code, out = capture(capsys, argv + ["--json"])
    return code, json.loads(out)


def test_lattice_info(capsys):
    code, data = capture_json(capsys, ["lattice", "info", "--name", "Lambda0"])
    assert code == 0
    assert data["signature"] == [20, 2]
    assert data["det"] == 3
    assert data["discriminant_form"] == "3^-1"


def test_lattice_info_inline_gram(capsys):
    code, data = capture_json(
        capsys, ["lattice", "info", "--gram", "[[2,1],[1,2]]"])
    assert code == 0 and data["det"] == 3


def test_lattice_shortvec(capsys):
    code, data = capture_json(
        capsys, ["lattice", "shortvec", "--name", "A2", "--norm", "2"])
    assert code == 0 and data["count"] == 3


def test_rank2_enum_verbatim_output(capsys):
    code, out = capture(capsys, ["rank2", "enum", "--det", "27", "--neg", "--even"])
    assert code == 0
    assert out.splitlines() == ["-(2^1 14)", "-(6^3 6)"]


def test_rank2_reduce_and_orders(capsys):
    code, out = capture(capsys, ["rank2", "reduce", "--form", "14,-1,2"])
    assert code == 0 and out.strip() == "(2^1 14)"
    code, data = capture_json(capsys, ["rank2", "autorders", "--form", "6,3,6"])
    assert code == 0 and 3 in data["orders"] and 6 in data["orders"]


def test_dform_commands(capsys):
    code, data = capture_json(capsys, ["dform", "of", "--name", "E7"])
    assert code == 0 and data["symbol"] == "2_7^+1"
    code, data = capture_json(
        capsys, ["dform", "symbol", "--form", "2_3^-1 4_7^+1 3^-1 5^+1"])
    assert code == 0 and data["order"] == 120
    code, data = capture_json(capsys, ["dform", "iso", "2_1^+1", "2_7^+1"])
    assert code == 0 and data["isomorphic"] is False
    code, data = capture_json(capsys, ["dform", "iso", "2_3^-1", "2_7^+1"])
    assert code == 0 and data["isomorphic"] is True


def test_glue_isotropic(capsys):
    code, data = capture_json(capsys, ["glue", "isotropic", "--form", "3^-2"])
    assert code == 0
    orders = sorted(d["order"] for d in data["subgroups"])
    assert orders == [1, 3, 3]


def test_nikulin_commands(capsys):
    code, data = capture_json(
        capsys, ["nikulin", "exists", "--sig", "0,2", "--form", "3^+1 9^+1"])
    assert code == 0 and data["exists"] is True
    code, data = capture_json(
        capsys, ["nikulin", "exists", "--sig", "0,2",
                 "--form", "2_II^-2 3^+2 7^-1"])
    assert code == 0 and data["exists"] is False and data["failed_condition"] == 4
    code, data = capture_json(
        capsys, ["nikulin", "embed", "--sig", "20,2", "--form", "3^-1",
                 "--target", "26,2"])
    assert code == 0 and data["exists"] is True
    assert data["complement"]["signature"] == [6, 0]


def test_saturate(capsys):
    code, data = capture_json(capsys, ["saturate", "3^+2 9^-1", "3^+1"])
    assert code == 0
    assert any(w["index"] == 3 for w in data["witnesses"])


def test_cubic_check_json(capsys):
    code, data = capture_json(capsys, ["cubic", "check", "--all"])
    assert code == 0
    passes = [r["row"] for r in data["rows"] if r["pass"]]
    assert passes == [1, 4, 5, 10, 11, 13]


def test_cubic_check_single_row(capsys):
    code, data = capture_json(capsys, ["cubic", "check", "--row", "2"])
    assert code == 0
    row = data["rows"][0]
    assert row["pass"] is False
    assert "condition 4" in row["reason"]


def test_k3_check(capsys):
    code, data = capture_json(capsys, ["k3", "check", "--degree", "2"])
    assert code == 0
    assert [r["row"] for r in data["rows"] if r["pass"]] == [3, 7, 9, 11]
    code, data = capture_json(capsys, ["k3", "check", "--degree", "6"])
    assert [r["row"] for r in data["rows"] if r["pass"]] == [3, 8, 10]


def test_uniqueness_and_nonsymplectic(capsys):
    code, data = capture_json(capsys, ["uniqueness", "--row", "1"])
    assert code == 0 and data["unique"] is True
    code, data = capture_json(capsys, ["nonsymplectic", "--row", "1"])
    assert code == 0
    assert data["classes"][0]["nonsymplectic_order"] == 6
    assert data["classes"][0]["total_order"] == 174960


def test_family_dim_and_symplectic_check(capsys):
    code, data = capture_json(
        capsys, ["family-dim", "--order", "6", "--weights", "0,3,2,5,4,4"])
    assert code == 0 and data["dim"] == 4
    code, data = capture_json(
        capsys, ["symplectic-check", "--order", "9",
                 "--weights", "0,6,3,1,4,7", "--w0", "6"])
    assert code == 0 and data["symplectic"] is True


def test_domain_error_exit_code(capsys):
    code = run(["dform", "symbol", "--form", "2_3^+1"])
    assert code == 1
    err = capsys.readouterr().err
    assert "error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["rank2", "enum"])  # missing --det
    assert exc.value.code == 2


def test_cubic_check_byte_identical(capsys):
    _, out1 = capture(capsys, ["cubic", "check", "--all"])
    _, out2 = capture(capsys, ["cubic", "check", "--all"])
    assert out1 == out2


def test_cubic_check_matches_golden_file(capsys):
    import pathlib
    golden = pathlib.Path(__file__).parent / "data" / "cubic_check_golden.txt"
    _, out = capture(capsys, ["cubic", "check", "--all"])
    assert out == golden.read_text(encoding="utf-8")


def test_threads_flag_unchanged_output(capsys):
    _, serial = capture(capsys, ["cubic", "check", "--all"])
    _, threaded = capture(capsys, ["cubic", "check", "--all", "--threads", "4"])
    assert serial == threaded
