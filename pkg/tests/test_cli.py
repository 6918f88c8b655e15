# pylint: disable=missing-module-docstring
# pylint: disable=missing-function-docstring
import io
import json
import sys

import pytest

from graycode import __main__, __version__, cli
from graycode.use_cases import configuring


def output(capsys: pytest.CaptureFixture[str]) -> str:
    return capsys.readouterr().out


def test_gen_binary(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["gen-binary", "--variant", "path", "--n", "3"]) == 0
    assert output(capsys).split() == [
        "000",
        "100",
        "010",
        "110",
        "101",
        "001",
        "011",
        "111",
    ]


def test_gen_binary_json(
    capsys: pytest.CaptureFixture[str], cycle_5_strings: list[str]
) -> None:
    argv = ["gen-binary", "--variant", "cycle", "--n", "5", "--format", "json"]
    assert cli.run(argv) == 0
    assert json.loads(output(capsys)) == {
        "n": 5,
        "variant": "cycle",
        "entries": cycle_5_strings,
    }


def test_gen_perm(
    capsys: pytest.CaptureFixture[str], perm_cycle_6: list[str]
) -> None:
    assert cli.run(["gen-perm", "--variant", "path", "--n", "3", "--compact"]) == 0
    assert output(capsys) == "123\n213\n231\n321\n"
    assert cli.run(["gen-perm", "--variant", "cycle", "--n", "6", "--compact"]) == 0
    assert output(capsys).split() == perm_cycle_6
    assert cli.run(["gen-perm", "--variant", "cycle", "--n", "3"]) == 0
    assert output(capsys).splitlines()[1] == "2 3 1"


def test_psi(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["psi", "--word", "1001011"]) == 0
    assert output(capsys) == "5 4 6 7 3 8 2 1\n"
    assert cli.run(["psi-inv", "--perm", "5 4 6 7 3 8 2 1"]) == 0
    assert output(capsys) == "1001011\n"


def test_psi_inv_of_size_two(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["psi-inv", "--perm", "2 1"]) == 0
    assert cli.run(["psi-inv", "--perm", "12"]) == 0
    assert output(capsys) == "1\n0\n"


def test_psi_inv_rejects_a_pattern(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["psi-inv", "--perm", "132"]) == 1
    assert capsys.readouterr().err.startswith("error: ")


def test_avoiders(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["avoiders", "--size", "3", "--compact"]) == 0
    assert output(capsys) == "123\n213\n231\n321\n"
    assert cli.run(["avoiders", "--size", "3", "--patterns", "", "--compact"]) == 0
    assert len(output(capsys).split()) == 6


def test_distance(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["distance", "--u", "000", "--v", "111"]) == 0
    assert output(capsys) == "distance 6\ngap MORE\n"
    assert cli.run(["distance", "--u", "001", "--v", "011"]) == 0
    assert output(capsys) == "distance 2\ngap 2\n"


def test_distance_options_are_not_abbreviations(
    capsys: pytest.CaptureFixture[str],
) -> None:
    assert cli.run(["-v", "distance", "--u", "0110", "--v", "0101"]) == 0
    assert output(capsys) == "distance 1\ngap 1\n"
    assert cli.run(["--verb", "distance", "--u", "0", "--v", "1"]) == 2
    capsys.readouterr()


def test_gap_profile(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["gap-profile", "--variant", "cycle", "--n", "3"]) == 0
    assert output(capsys).split() == ["2", "1", "2", "1", "2", "1", "2"]
    assert cli.run(["gap-profile"]) == 1


def test_verify(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["verify", "--variant", "cycle", "--n", "5", "--set", "L"]) == 0
    assert output(capsys) == "L1 PASS\nL2 PASS\nL3 PASS\n"
    assert cli.run(["verify", "--variant", "cycle", "--n", "6", "--set", "B"]) == 0
    assert output(capsys) == "B1 PASS\nB2 PASS\nB3 PASS\nB4 PASS\n"
    assert cli.run(["verify", "--variant", "path", "--n", "7"]) == 0
    assert output(capsys) == "C1 PASS\nC2 PASS\nC3 PASS\nC4 PASS\n"
    assert cli.run(["verify", "--variant", "perm-cycle", "--n", "5"]) == 0
    assert output(capsys) == "P1 PASS\nP2 PASS\nP3 PASS\n"


def test_verify_stdin(
    capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setattr(sys, "stdin", io.StringIO("00\n01\n10\n11\n"))
    assert cli.run(["verify", "--variant", "cycle", "--stdin"]) == 1
    assert output(capsys) == "L1 FAIL @index=4 expected 10, got 11\nL2 PASS\nL3 PASS\n"

    monkeypatch.setattr(sys, "stdin", io.StringIO("00\n01\n"))
    assert cli.run(["verify", "--variant", "cycle", "--stdin"]) == 1
    assert output(capsys) == "COVERAGE FAIL @index=2 count 2 != 4\n"

    monkeypatch.setattr(sys, "stdin", io.StringIO("123\n213\n231\n321\n"))
    assert cli.run(["verify", "--variant", "perm-path", "--stdin"]) == 0
    assert output(capsys) == "Q1 PASS\nQ2 PASS\nQ3 PASS\n"


def test_verify_unordered(
    capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
) -> None:
    swapped = "000\n010\n110\n011\n111\n001\n101\n100\n"
    argv = ["verify", "--variant", "cycle", "--set", "A", "--stdin"]
    monkeypatch.setattr(sys, "stdin", io.StringIO(swapped))
    assert cli.run(argv) == 1
    assert "A3 FAIL" in output(capsys)
    monkeypatch.setattr(sys, "stdin", io.StringIO(swapped))
    cli.run([*argv, "--unordered"])
    assert "A3 PASS" in output(capsys)


@pytest.mark.parametrize(
    "variant,set_id", [("cycle", "P"), ("path", "Q"), ("perm-cycle", "L")]
)
def test_verify_set_of_another_variant(
    capsys: pytest.CaptureFixture[str], variant: str, set_id: str
) -> None:
    assert cli.run(["verify", "--variant", variant, "--n", "4", "--set", set_id]) == 2
    assert "does not apply" in capsys.readouterr().err


@pytest.mark.parametrize("variant", ["cycle", "path"])
def test_generated_listings_verify(
    capsys: pytest.CaptureFixture[str],
    monkeypatch: pytest.MonkeyPatch,
    variant: str,
) -> None:
    for length in range(1, 17):
        assert cli.run(["gen-binary", "--variant", variant, "--n", str(length)]) == 0
        monkeypatch.setattr(sys, "stdin", io.StringIO(output(capsys)))
        assert cli.run(["verify", "--variant", variant, "--stdin"]) == 0
        assert " FAIL" not in output(capsys)


def test_verify_json(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["verify", "--variant", "cycle", "--n", "3", "--format", "json"]
    assert cli.run(argv) == 0
    records = json.loads(output(capsys))
    assert [record["property_id"] for record in records] == ["L1", "L2", "L3"]
    assert all(record["passed"] for record in records)


def test_verify_needs_input(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["verify", "--variant", "path"]) == 1
    assert "--n or --stdin" in capsys.readouterr().err


def test_guardrail(
    capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setattr(configuring, "get_max_n_without_force", lambda: 4)
    assert cli.run(["gen-binary", "--variant", "cycle", "--n", "5"]) == 1
    assert "--force" in capsys.readouterr().err
    assert cli.run(["gen-binary", "--variant", "cycle", "--n", "5", "--force"]) == 0
    assert len(output(capsys).split()) == 32


def test_usage_errors(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run([]) == 2
    assert cli.run(["gen-binary", "--variant", "spiral", "--n", "3"]) == 2
    assert cli.run(["gen-binary", "--variant", "cycle"]) == 2
    capsys.readouterr()


def test_invalid_input(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["psi", "--word", "0120"]) == 1
    assert cli.run(["gen-binary", "--variant", "cycle", "--n", "0"]) == 1
    assert cli.run(["gen-perm", "--variant", "path", "--n", "1"]) == 1
    assert capsys.readouterr().err.count("error: ") == 3


def test_version(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.run(["--version"]) == 0
    assert output(capsys).strip() == __version__


def test_main(
    capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setattr(sys, "argv", ["graycode", "-v", "psi", "--word", "0"])
    assert __main__.main() == 0
    assert output(capsys) == "1 2\n"
