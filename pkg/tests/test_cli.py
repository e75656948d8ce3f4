import json
import pathlib
import typing as t

import pytest

import grassmann_calculus as calculus
from grassmann_calculus import cli

Capture = pytest.CaptureFixture[str]


def _run(capsys: Capture, *argv: str) -> t.Tuple[int, str, str]:
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# cli syt


def test_syt_json(capsys: Capture):
    code, out, _ = _run(capsys, "syt", "--partition", "[2,1]")

    assert code == cli.EXIT_OK
    assert json.loads(out) == {"partition": [2, 1], "formula": 2, "bruteforce": 2, "agree": True}


@pytest.mark.parametrize(
    ("argv", "expected"),
    [
        (["syt", "--partition", "[2,1]"],               "2 2\n"),
        (["syt", "--partition", "[3,2]"],               "5 5\n"),
        (["syt", "--partition", "[2,1]", "--cap", "2"], "2 -\n"),
    ],  # fmt: skip
)
def test_syt_table(capsys: Capture, argv: t.List[str], expected: str):
    code, out, _ = _run(capsys, *argv, "--format", "table")

    assert code == cli.EXIT_OK
    assert out == expected


@pytest.mark.parametrize("literal", ["[2,x]", "[1,2]", "2,1", ""])
def test_syt_malformed_partition(capsys: Capture, literal: str):
    code, out, err = _run(capsys, "syt", "--partition", literal)

    assert code == cli.EXIT_USAGE
    assert out == ""
    assert err.startswith("error: ")


# cli pushforward


@pytest.mark.parametrize(
    ("N", "expected"),
    [
        (0, "0"),
        (1, "1"),
        (2, "c1"),
        (3, "c1^2 - c2"),
    ],  # fmt: skip
)
def test_pushforward_power(capsys: Capture, N: int, expected: str):
    code, out, _ = _run(
        capsys, "pushforward", "--N", str(N), "--r", "2", "--d", "1", "--n", "2", "--format", "table"
    )

    assert code == cli.EXIT_OK
    assert out == expected + "\n"


def test_pushforward_json(capsys: Capture):
    code, out, _ = _run(capsys, "pushforward", "--N", "2", "--r", "2", "--d", "1", "--n", "2")

    assert code == cli.EXIT_OK
    assert json.loads(out) == {
        "setup": {"n": 2, "r": 2, "d": 1},
        "result": "c1",
        "terms": [{"monomial": {"c1": 1}, "coeff": "1"}],
    }


def test_pushforward_input(capsys: Capture, fixtures_dir: pathlib.Path):
    code, out, _ = _run(
        capsys, "pushforward", "--input", str(fixtures_dir / "pushforward_class.json"), "--format", "table"
    )

    assert code == cli.EXIT_OK
    assert out == "4*c1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["pushforward"],
        ["pushforward", "--N", "1", "--r", "2", "--n", "2"],
        ["pushforward", "--N", "1", "--r", "2", "--d", "2", "--n", "2"],
        ["pushforward", "--input", "does-not-exist.json"],
    ],  # fmt: skip
)
def test_pushforward_invalid(capsys: Capture, argv: t.List[str]):
    code, _, err = _run(capsys, *argv)

    assert code == cli.EXIT_USAGE
    assert err.startswith("error: ")


# cli verify


def test_verify_single_case(capsys: Capture):
    code, out, _ = _run(capsys, "verify", "--only", "delta", "--r", "2", "--d", "1")
    data = json.loads(out)

    assert code == cli.EXIT_OK
    assert [report["case"] for report in data["reports"]] == ["delta:2:1"]
    assert data["summary"] == {"total": 1, "passed": 1, "failed": 0, "status": "pass"}
    assert "elapsed" not in data["reports"][0]


def test_verify_timings(capsys: Capture):
    _, out, _ = _run(capsys, "verify", "--only", "delta", "--r", "2", "--timings")

    assert all("elapsed" in report for report in json.loads(out)["reports"])


def test_verify_only_comma_separated(capsys: Capture):
    code, out, _ = _run(capsys, "verify", "--only", "delta,segre", "--r", "2", "--format", "table")

    assert code == cli.EXIT_OK
    assert out.startswith("PASS  segre:2:0\n")
    assert "PASS  delta:2:1\n" in out


def test_verify_config(capsys: Capture, fixtures_dir: pathlib.Path):
    code, out, _ = _run(capsys, "verify", "--input", str(fixtures_dir / "suite_config.json"))
    data = json.loads(out)

    assert code == cli.EXIT_OK
    assert {report["name"] for report in data["reports"]} == {"syt", "delta", "segre"}
    assert [report["case"] for report in data["reports"] if report["name"] == "delta"] == [
        "delta:2:1",
        "delta:3:1",
        "delta:3:2",
    ]


def test_verify_perturbed(capsys: Capture, fixtures_dir: pathlib.Path):
    code, out, _ = _run(
        capsys, "verify", "--input", str(fixtures_dir / "perturbed_config.json"), "--format", "table"
    )

    assert code == cli.EXIT_FAILURE
    assert out.startswith("FAIL  delta:2:1\n")
    assert out.endswith("0 passed, 1 failed\n")


@pytest.mark.parametrize(
    ("document", "argv"),
    [
        ({"bogus": 1},           []),
        ({"only": ["nope"]},     []),
        ({},                     ["--only", "nope"]),
        ({},                     ["--workers", "0"]),
        ({},                     ["--r", "two"]),
    ],  # fmt: skip
)
def test_verify_bad_config(
    capsys: Capture, tmp_path: pathlib.Path, document: t.Any, argv: t.List[str]
):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(document), encoding="utf-8")

    code, out, err = _run(capsys, "verify", "--input", str(path), *argv)

    assert code == cli.EXIT_USAGE
    assert out == ""
    assert "error" in err


def test_verify_invalid_json(capsys: Capture, tmp_path: pathlib.Path):
    path = tmp_path / "config.json"
    path.write_text("{not json", encoding="utf-8")

    code, _, _ = _run(capsys, "verify", "--input", str(path))

    assert code == cli.EXIT_USAGE


def test_verify_non_utf8_input(capsys: Capture, tmp_path: pathlib.Path):
    path = tmp_path / "config.json"
    path.write_bytes(b"\xff\xfe{\x00}\x00")

    code, out, err = _run(capsys, "verify", "--input", str(path))

    assert code == cli.EXIT_USAGE
    assert out == ""
    assert err.startswith("error: ")


def test_verify_cap_in_case_id(capsys: Capture):
    previous = calculus.partitions.LIMITS.SYT_BRUTEFORCE_CAP
    code, out, _ = _run(capsys, "verify", "--only", "syt", "--partition", "[2,1]", "--cap", "2")
    data = json.loads(out)

    assert code == cli.EXIT_OK
    assert [report["case"] for report in data["reports"]] == ["syt:[2,1]:2"]
    assert calculus.partitions.LIMITS.SYT_BRUTEFORCE_CAP == previous


@pytest.mark.parametrize("cap", ["-1", "two"])
def test_cap_invalid(capsys: Capture, cap: str):
    code, out, _ = _run(capsys, "syt", "--partition", "[2,1]", "--cap", cap)

    assert code == cli.EXIT_USAGE
    assert out == ""


# cli segre-ineq


def test_segre_ineq_classical(capsys: Capture, fixtures_dir: pathlib.Path):
    code, out, _ = _run(
        capsys,
        "segre-ineq",
        "--r", "2", "--n", "2", "--N", "1",
        "--input", str(fixtures_dir / "classical_table.json"),
    )  # fmt: skip
    data = json.loads(out)

    assert code == cli.EXIT_OK
    assert [value["value"] for value in data["values"]] == ["1", "1"]
    assert data["violations"] == []


def test_segre_ineq_negative_control(capsys: Capture, fixtures_dir: pathlib.Path):
    code, out, _ = _run(
        capsys,
        "segre-ineq",
        "--r", "2", "--n", "2", "--N", "1",
        "--input", str(fixtures_dir / "negative_table.json"),
        "--format", "table",
    )  # fmt: skip

    assert code == cli.EXIT_OK
    assert out == "k=1  1  ok\nk=2  -1  VIOLATED\n"


def test_segre_ineq_symbolic(capsys: Capture):
    code, out, _ = _run(
        capsys, "segre-ineq", "--r", "2", "--n", "2", "--N", "1", "--symbolic", "--format", "table"
    )

    assert code == cli.EXIT_OK
    assert out == "k=1  b0*c1*H + b1*H\nk=2  b0*c1^2 - b0*c2 + b1*c1\n"


def test_segre_ineq_symbolic_json(capsys: Capture):
    _, out, _ = _run(capsys, "segre-ineq", "--r", "2", "--n", "2", "--N", "1", "--symbolic")
    data = json.loads(out)

    assert [expression["k"] for expression in data["expressions"]] == [1, 2]
    assert data["required"] == ["b0*c1*H", "b0*c1^2", "b0*c2", "b1*H", "b1*c1"]


def test_segre_ineq_incomplete_table(capsys: Capture, tmp_path: pathlib.Path):
    path = tmp_path / "table.json"
    path.write_text("{}", encoding="utf-8")

    code, _, err = _run(capsys, "segre-ineq", "--r", "2", "--n", "2", "--N", "1", "--input", str(path))

    assert code == cli.EXIT_USAGE
    assert "b0*c1*H" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["--r", "2", "--n", "2", "--N", "1"],
        ["--r", "2", "--n", "2", "--N", "2", "--symbolic"],
        ["--r", "1", "--n", "2", "--N", "1", "--symbolic"],
    ],  # fmt: skip
)
def test_segre_ineq_invalid(capsys: Capture, argv: t.List[str]):
    code, _, _ = _run(capsys, "segre-ineq", *argv)

    assert code == cli.EXIT_USAGE


# cli schur


@pytest.mark.parametrize(
    ("argv", "expected"),
    [
        (["--partition", "[1,1]"],             "c1^2 - c2"),
        (["--partition", "[1,1]", "--segre"],  "c2"),
        (["--partition", "[3]"],               "0"),
        (["--partition", "[]"],                "1"),
    ],  # fmt: skip
)
def test_schur(capsys: Capture, argv: t.List[str], expected: str):
    code, out, _ = _run(capsys, "schur", *argv, "--r", "2", "--n", "2", "--format", "table")

    assert code == cli.EXIT_OK
    assert out == expected + "\n"


def test_schur_json(capsys: Capture):
    _, out, _ = _run(capsys, "schur", "--partition", "[1,1]", "--r", "2", "--n", "2", "--segre")

    assert json.loads(out) == {
        "partition": [1, 1],
        "series": "segre",
        "result": "c2",
        "terms": [{"monomial": {"c2": 1}, "coeff": "1"}],
    }


@pytest.mark.parametrize(("r", "n"), [("0", "2"), ("2", "-1")])
def test_schur_invalid(capsys: Capture, r: str, n: str):
    code, _, _ = _run(capsys, "schur", "--partition", "[1]", "--r", r, "--n", n)

    assert code == cli.EXIT_USAGE


# cli.main


def test_output_file(capsys: Capture, tmp_path: pathlib.Path):
    path = tmp_path / "out.json"
    code, out, _ = _run(capsys, "syt", "--partition", "[2,1]", "--output", str(path))

    assert code == cli.EXIT_OK
    assert out == ""
    assert json.loads(path.read_text(encoding="utf-8"))["formula"] == 2


def test_output_file_unwritable(capsys: Capture, tmp_path: pathlib.Path):
    path = tmp_path / "missing" / "out.json"
    code, out, err = _run(capsys, "syt", "--partition", "[2,1]", "--output", str(path))

    assert code == cli.EXIT_USAGE
    assert out == ""
    assert err.startswith("error: ")
    assert not path.exists()


def test_json_is_stable(capsys: Capture):
    argv = ["verify", "--only", "delta,classical", "--r", "2"]
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)

    assert first == second
    assert first == json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n"


@pytest.mark.parametrize(
    ("argv", "code"),
    [
        (["--version"],                    cli.EXIT_OK),
        ([],                               cli.EXIT_USAGE),
        (["nope"],                         cli.EXIT_USAGE),
        (["schur", "--partition", "[1]"],  cli.EXIT_USAGE),
    ],  # fmt: skip
)
def test_argparse_exits(capsys: Capture, argv: t.List[str], code: int):
    assert _run(capsys, *argv)[0] == code
