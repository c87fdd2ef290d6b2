"""End-to-end command tests, run in process through main()."""

import json
import subprocess
import sys

from qgrass.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_count_grassmannian(capsys):
    rc, out, _ = run(capsys, "count", "--q", "2", "--m", "4", "--l", "2")
    assert rc == 0
    assert json.loads(out)["count"] == 35


def test_count_variety_with_polynomial(capsys):
    rc, out, _ = run(
        capsys, "count", "--q", "2", "--m", "4", "--alpha", "2,4", "--polynomial"
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["count"] == 19
    assert doc["polynomial"] == [1, 1, 2, 1]


def test_count_huge_is_closed_form(capsys):
    rc, out, _ = run(capsys, "count", "--q", "3", "--m", "40", "--l", "20")
    assert rc == 0
    assert json.loads(out)["count"] > 10**100


def test_count_needs_exactly_one_shape(capsys):
    rc, _, err = run(capsys, "count", "--q", "2", "--m", "4")
    assert rc == 2
    rc, _, err = run(capsys, "count", "--q", "2", "--m", "4", "--l", "2", "--alpha", "1,2")
    assert rc == 2


def test_count_by_characteristic_and_degree(capsys):
    rc, out, _ = run(capsys, "count", "--p", "2", "--e", "2", "--m", "3", "--l", "1")
    assert rc == 0
    assert json.loads(out)["count"] == 21  # lines in 3-space over the 4-element field


def test_points_listing(capsys):
    rc, out, _ = run(capsys, "points", "--q", "2", "--m", "3", "--l", "1")
    assert rc == 0
    doc = json.loads(out)
    assert doc["count"] == 7
    assert len(doc["points"]) == 7
    assert doc["points"][0] == [[1, 0, 0]]


def test_points_variety_and_count_only(capsys):
    rc, out, _ = run(
        capsys, "points", "--q", "2", "--m", "4", "--alpha", "2,4", "--count-only"
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["count"] == 19
    assert "points" not in doc


def test_points_budget_exit_code(capsys):
    rc, _, err = run(capsys, "points", "--q", "2", "--m", "30", "--l", "15")
    assert rc == 3
    assert "budget" in err


def test_alpha_nc_and_condition_word(capsys):
    rc, out, _ = run(capsys, "alpha-nc", "--alpha", "2,3,4", "--m", "5")
    assert rc == 0
    doc = json.loads(out)
    assert doc["non_redundant"] == [4]
    assert doc["condition_word"] == [0, 1, 2, 3, 3]


def test_dual_alpha(capsys):
    rc, out, _ = run(capsys, "dual-alpha", "--alpha", "1,2", "--m", "4")
    assert rc == 0
    doc = json.loads(out)
    assert doc["dual"] == [1, 2]
    assert doc["self_dual"] is True
    rc, out, _ = run(capsys, "dual-alpha", "--alpha", "1,4", "--m", "4")
    doc = json.loads(out)
    assert doc["dual"] == [2, 3]
    assert doc["self_dual"] is False


def test_gen_eq_image_aut_pipeline(tmp_path, capsys):
    f1 = tmp_path / "f1.json"
    f2 = tmp_path / "f2.json"
    tau = tmp_path / "tau.json"
    sigma = tmp_path / "sigma.json"
    assert run(capsys, "gen-flag", "--q", "2", "--m", "4", "--alpha", "2,4",
               "--seed", "5", "-o", str(f1))[0] == 0
    assert run(capsys, "gen-flag", "--q", "2", "--m", "4", "--alpha", "2,4",
               "--seed", "9", "-o", str(f2))[0] == 0
    assert run(capsys, "gen-map", "--q", "2", "--m", "4", "--seed", "3",
               "-o", str(tau))[0] == 0
    assert run(capsys, "gen-map", "--q", "2", "--m", "4", "--seed", "3",
               "--dual", "-o", str(sigma))[0] == 0

    rc, out, _ = run(capsys, "eq", str(f1), str(f1), "--oracle")
    assert rc == 0
    doc = json.loads(out)
    assert doc["fast"] is True and doc["oracle"] is True and doc["agree"] is True

    rc, out, _ = run(capsys, "eq", str(f1), str(f2), "--oracle", "--witness")
    assert rc == 0
    doc = json.loads(out)
    assert doc["fast"] is False and doc["agree"] is True
    assert doc["witness"]["in_first"] != doc["witness"]["in_second"]

    rc, out, _ = run(capsys, "image", str(sigma), str(f1))
    assert rc == 0
    assert json.loads(out)["alpha"] == [2, 4]  # self-dual shape survives

    rc, out, _ = run(capsys, "aut-check", str(tau), str(f1), "--both")
    assert rc == 0
    doc = json.loads(out)
    assert doc["agree"] is True

    rc, out, _ = run(capsys, "aut-check", str(tau), str(f1), "--oracle")
    assert rc == 0
    assert set(json.loads(out)) == {"oracle"}


def test_image_of_contravariant_needs_middle(tmp_path, capsys):
    flag = tmp_path / "f.json"
    smap = tmp_path / "s.json"
    run(capsys, "gen-flag", "--q", "2", "--m", "3", "--alpha", "1,3",
        "--seed", "1", "-o", str(flag))
    run(capsys, "gen-map", "--q", "2", "--m", "3", "--seed", "1", "--dual",
        "-o", str(smap))
    rc, _, err = run(capsys, "image", str(smap), str(flag))
    assert rc == 2
    assert "error" in err


def test_verify_verb(capsys):
    rc, out, _ = run(
        capsys, "verify", "redundancy", "--q", "2", "--m", "3", "--l", "1",
        "--flags-per-alpha", "2", "--seed", "1",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["verdict"] == "pass"
    assert "elapsed_seconds" not in doc


def test_verify_verb_timing_and_mutant(capsys):
    rc, out, _ = run(
        capsys, "verify", "redundancy", "--q", "2", "--m", "4", "--l", "2",
        "--flags-per-alpha", "2", "--mutant", "drop-nonredundant-condition",
        "--timing",
    )
    assert rc == 1
    doc = json.loads(out)
    assert doc["verdict"] == "fail"
    assert "elapsed_seconds" in doc


def test_verify_unknown_campaign(capsys):
    rc, _, err = run(capsys, "verify", "nonsense", "--q", "2", "--m", "3", "--l", "1")
    assert rc == 2
    assert "unknown campaign" in err


def test_census_verb(capsys):
    rc, out, _ = run(
        capsys, "census", "--q", "2", "--m", "3", "--alpha", "1,3",
        "--oracle", "full",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["fast_count"] == 24
    assert doc["oracle_count"] == 24
    assert doc["verdict"] == "pass"


def test_census_budget_exit(capsys):
    rc, _, err = run(
        capsys, "census", "--q", "2", "--m", "4", "--alpha", "1,4",
        "--budget", "100",
    )
    assert rc == 3


def test_generators_are_deterministic(capsys):
    rc, out1, _ = run(capsys, "gen-flag", "--q", "3", "--m", "4", "--alpha", "1,3", "--seed", "42")
    rc, out2, _ = run(capsys, "gen-flag", "--q", "3", "--m", "4", "--alpha", "1,3", "--seed", "42")
    assert rc == 0 and out1 == out2
    rc, out3, _ = run(capsys, "gen-flag", "--q", "3", "--m", "4", "--alpha", "1,3", "--seed", "43")
    assert out3 != out1
    rc, m1, _ = run(capsys, "gen-map", "--q", "4", "--m", "3", "--seed", "7", "--allow-dual")
    rc, m2, _ = run(capsys, "gen-map", "--q", "4", "--m", "3", "--seed", "7", "--allow-dual")
    assert m1 == m2


def test_usage_errors(capsys):
    assert run(capsys, )[0] == 2
    assert run(capsys, "no-such-verb")[0] == 2
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "count", "--m", "4", "--l", "2")[0] == 2  # no field given


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qgrass", "count", "--q", "2", "--m", "4", "--l", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 35
