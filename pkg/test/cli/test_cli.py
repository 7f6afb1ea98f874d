import json
from pathlib import Path
from typing import List

import networkx as nx
from pytest import CaptureFixture, MonkeyPatch, mark

import korbit as kb
from korbit.cli import main
from korbit.cli.config import CliConfig
from korbit.cli.parser import build_parser


def run(argv: List[str]) -> int:
    return main([*argv, "--parallelism", "1"])


class TestParser:
    def test_config_from_args(self) -> None:
        args = build_parser().parse_args(
            ["lemmas", "run", "--checks", "L5, CHK-P3", "--element-cap", "100"]
        )
        config = CliConfig.from_args(args)
        assert config.command == "lemmas run"
        assert config.checks == ("L5", "CHK-P3")
        assert config.caps.element_cap == 100
        assert config.max_degree == 5
        assert config.lab_config().abelian_primitive_convention == "nonabelian"

    @mark.parametrize(
        "argv",
        [
            ["catalog"],
            ["catalog", "shuffle"],
            ["korbit", "compute", "--group", "C4@4"],
            ["korbit", "compute", "--group", "C4@4", "--k", "0"],
            ["closure", "two", "--group", "C4@4", "--element-cap", "-3"],
            ["catalog", "build", "--families", "cyclic,bogus"],
        ],
    )
    def test_usage_errors(self, argv: List[str], capsys: CaptureFixture) -> None:
        assert run(argv) == 1
        assert "usage" in capsys.readouterr().err


class TestCommands:
    def test_korbit_compute(self, tmp_path: Path, capsys: CaptureFixture) -> None:
        argv = ["korbit", "compute", "--group", "C4@4", "--k", "2"]
        assert run([*argv, "-o", str(tmp_path)]) == 0
        paths = sorted(tmp_path.glob("*.korb"))
        assert [p.name for p in paths] == [f"C4_4.k2.{i}.korb" for i in (1, 2, 3)]
        orbits = [kb.read_korb(p) for p in paths]
        assert sorted(len(X) for X in orbits) == [4, 4, 4]
        assert "3 2-orbits of C4@4 (order 4)" in capsys.readouterr().out

    def test_closure_two(self, capsys: CaptureFixture) -> None:
        assert run(["closure", "two", "--group", "A4@4"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["order 24", "2-closed: false"]

    def test_group_file(self, tmp_path: Path, capsys: CaptureFixture) -> None:
        path = tmp_path / "c5.grp"
        path.write_text("# cyclic\ndegree 5\n(1 2 3 4 5)\n")
        assert run(["closure", "two", "--group", str(path)]) == 0
        assert capsys.readouterr().out.splitlines() == ["order 5", "2-closed: true"]

    def test_catalog_build_and_list(
        self, tmp_path: Path, capsys: CaptureFixture
    ) -> None:
        path = tmp_path / "catalog.jsonl"
        argv = ["catalog", "build", "--max-degree", "4", "--tags", "-o", str(path)]
        assert run(argv) == 0
        catalog = kb.load_catalog(path)
        assert len(catalog) == 8
        assert catalog.find("S4@4").tags["two_closed"] is True
        capsys.readouterr()
        argv = ["catalog", "list", "--catalog", str(path), "--max-degree", "3"]
        assert run(argv) == 0
        out = capsys.readouterr().out
        assert "S3@3" in out and "A4@4" not in out

    def test_lemmas_run(self, tmp_path: Path) -> None:
        path = tmp_path / "lemmas.jsonl"
        argv = ["lemmas", "run", "--checks", "FKS,P3", "--max-degree", "4"]
        assert run([*argv, "--strict", "-o", str(path)]) == 0
        rows, summary = kb.read_report(path)
        assert {r.check for r in rows} == {"CHK-FKS", "CHK-P3"}
        assert summary["rows"] == len(rows)

    def test_unknown_check(self, tmp_path: Path) -> None:
        path = str(tmp_path / "lemmas.jsonl")
        assert run(["lemmas", "run", "--checks", "L99", "-o", path]) == 1

    def test_polycirc_survey(self, tmp_path: Path) -> None:
        path = tmp_path / "survey.jsonl"
        argv = ["polycirc", "survey", "--max-degree", "5", "--strict"]
        assert run([*argv, "-o", str(path)]) == 0
        rows = [json.loads(line) for line in path.read_text().splitlines()]
        assert len(rows) == 13
        assert not [r for r in rows if r["status"] == "REFUTED"]

    def test_strict_exit(self, tmp_path: Path, monkeypatch: MonkeyPatch) -> None:
        refuted = [{"group_id": "X@4", "status": kb.SurveyStatus.REFUTED.value}]
        monkeypatch.setattr(
            "korbit.cli.commands.polycirculant_survey", lambda *a, **k: refuted
        )
        argv = ["polycirc", "survey", "--max-degree", "3"]
        argv += ["-o", str(tmp_path / "survey.jsonl")]
        assert run(argv) == 0
        assert run([*argv, "--strict"]) == 3

    def test_resource_cap(self, tmp_path: Path) -> None:
        argv = ["korbit", "compute", "--group", "C4@4", "--k", "3"]
        assert run([*argv, "--tuple-cap", "5", "-o", str(tmp_path)]) == 2
        argv = ["closure", "two", "--group", "C6@6", "--max-exhaustive-degree", "0"]
        assert run([*argv, "--engine-cap", "4"]) == 2

    def test_bad_group(self, capsys: CaptureFixture) -> None:
        assert run(["closure", "two", "--group", "nonsense"]) == 1
        assert "nonsense" in capsys.readouterr().err

    def test_graph_import(self, tmp_path: Path, capsys: CaptureFixture) -> None:
        graph = tmp_path / "petersen.g6"
        graph.write_bytes(nx.to_graph6_bytes(nx.petersen_graph(), header=False))
        catalog = tmp_path / "imported.jsonl"
        assert run(["graph", "import", str(graph), "--catalog", str(catalog)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "petersen@10: order 120"
        assert out[1] == "vertex-transitive: true"
        assert out[2].startswith("semiregular element of order 5 (2 cycles)")
        entry = kb.load_catalog(catalog).find("petersen@10")
        assert entry.provenance == "graph-import"
        assert run(["graph", "import", str(graph), "--catalog", str(catalog)]) == 0
        assert len(kb.load_catalog(catalog)) == 1

    def test_missing_graph_file(self, tmp_path: Path) -> None:
        assert run(["graph", "import", str(tmp_path / "absent.g6")]) == 1
