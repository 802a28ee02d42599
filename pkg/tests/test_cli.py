import json

from involutions.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, SUITES, run


def out_lines(capsys):
    return capsys.readouterr().out.strip().splitlines()


def test_invol_single(capsys):
    assert run(["invol", "--n", "10"]) == EXIT_OK
    assert out_lines(capsys) == ["9496"]


def test_invol_poly(capsys):
    assert run(["invol", "--n", "3", "--poly"]) == EXIT_OK
    assert out_lines(capsys) == ["t^3 + 3*t"]


def test_invol_table_plain(capsys):
    assert run(["invol", "--table", "--max", "5"]) == EXIT_OK
    assert out_lines(capsys) == ["1", "1", "2", "4", "10", "26"]


def test_invol_table_bfile(capsys):
    assert run(["invol", "--table", "--max", "4", "--format", "bfile"]) == EXIT_OK
    assert out_lines(capsys) == ["0 1", "1 1", "2 2", "3 4", "4 10"]


def test_invol_table_csv(capsys):
    assert run(["invol", "--table", "--max", "2", "--format", "csv"]) == EXIT_OK
    assert out_lines(capsys) == ["n,value", "0,1", "1,1", "2,2"]


def test_invol_table_json(capsys):
    assert run(["invol", "--table", "--max", "3", "--format", "json"]) == EXIT_OK
    doc = json.loads(out_lines(capsys)[0])
    assert doc["schema"] == "involutions/sequence/1"
    assert doc["values"] == ["1", "1", "2", "4"]


def test_invol_usage_error(capsys):
    assert run(["invol"]) == EXIT_USAGE
    capsys.readouterr()


def test_sums(capsys):
    assert run(["sums", "--n", "7"]) == EXIT_OK
    assert out_lines(capsys) == ["352"]
    assert run(["sums", "--cauchy", "5"]) == EXIT_OK
    assert out_lines(capsys) == ["3"]
    assert run(["sums", "--b-k", "3"]) == EXIT_OK
    assert out_lines(capsys) == ["12232/3"]


def test_restricted(capsys):
    assert run(["restricted", "--n", "5", "--l", "4"]) == EXIT_OK
    assert out_lines(capsys) == ["96"]


def test_restricted_cycle_index(capsys):
    assert run(["restricted", "--n", "5", "--l", "4", "--cycle-index"]) == EXIT_OK
    assert out_lines(capsys) == [
        "Y1^5 + 10*Y1^3*Y2 + 20*Y1^2*Y3 + 15*Y1*Y2^2 + 30*Y1*Y4 + 20*Y2*Y3"
    ]


def test_restricted_determinant_matches(capsys):
    assert run(["restricted", "--n", "5", "--l", "4", "--determinant",
                "--format", "json"]) == EXIT_OK
    det = json.loads(out_lines(capsys)[0])
    assert run(["restricted", "--n", "5", "--l", "4", "--cycle-index",
                "--format", "json"]) == EXIT_OK
    rec = json.loads(out_lines(capsys)[0])
    assert det == rec


def test_valuation_values(capsys):
    assert run(["valuation", "--nu2-involution", "7"]) == EXIT_OK
    assert out_lines(capsys) == ["3"]
    assert run(["valuation", "--nu2-partial-sum", "7"]) == EXIT_OK
    assert out_lines(capsys) == ["5"]


def test_valuation_efficiency_scan(capsys):
    assert run(["valuation", "--efficiency-scan", "--max", "50"]) == EXIT_OK
    assert out_lines(capsys) == ["5", "13", "19", "23", "29", "31", "43"]


def test_valuation_tree_json(capsys):
    assert run(["valuation", "--tree", "--prime", "5", "--depth", "2"]) == EXIT_OK
    doc = json.loads(out_lines(capsys)[0])
    assert doc["schema"] == "involutions/valuation-tree/1"
    assert len(doc["levels"]) == 2


def test_valuation_conjecture(capsys):
    assert run(["valuation", "--conjecture", "--prime", "5", "--depth", "2",
                "--format", "json"]) == EXIT_OK
    doc = json.loads(out_lines(capsys)[0])
    assert doc["holds"] is True


def test_asym_saddle(capsys):
    assert run(["asym", "--saddle", "--n", "12", "--l", "2"]) == EXIT_OK
    assert abs(float(out_lines(capsys)[0]) - 3.0) < 1e-10


def test_asym_beta(capsys):
    assert run(["asym", "--beta", "1", "--l", "2"]) == EXIT_OK
    doc = json.loads(out_lines(capsys)[0])
    assert doc["printed"] == "3/2" and doc["extracted"] == "1"


def test_asym_sweep_csv(capsys):
    assert run(["asym", "--sweep", "50", "100", "--l", "2"]) == EXIT_OK
    lines = out_lines(capsys)
    assert lines[0] == "n,l,exact,estimate,ratio,log_error"
    assert len(lines) == 3 and lines[1].startswith("50,2,")


def test_oracle_json(capsys):
    assert run(["oracle", "--n", "4"]) == EXIT_OK
    doc = json.loads(out_lines(capsys)[0])
    assert doc["counts"]["2+2"] == 3


def test_oracle_formula_matches_enumeration(capsys):
    assert run(["oracle", "--n", "6"]) == EXIT_OK
    enumerated = json.loads(out_lines(capsys)[0])
    assert run(["oracle", "--n", "6", "--formula"]) == EXIT_OK
    formula = json.loads(out_lines(capsys)[0])
    assert enumerated == formula


def test_verify_list(capsys):
    assert run(["verify", "--list"]) == EXIT_OK
    assert out_lines(capsys) == sorted(SUITES)


def test_verify_single_suite(capsys):
    assert run(["verify", "--suite", "tables"]) == EXIT_OK
    assert out_lines(capsys) == ["tables: ok"]


def test_verify_unknown_suite(capsys):
    assert run(["verify", "--suite", "nonsense"]) == EXIT_USAGE
    capsys.readouterr()


def test_verify_exit_codes_defined():
    assert (EXIT_OK, EXIT_USAGE, EXIT_VERIFY) == (0, 1, 2)


def test_error_maps_to_usage_exit(capsys):
    assert run(["invol", "--n", "-1"]) == EXIT_USAGE
    capsys.readouterr()


def test_bad_flag_returns_usage(capsys):
    assert run(["invol", "--bogus"]) == EXIT_USAGE
    capsys.readouterr()
