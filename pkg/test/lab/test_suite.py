from dataclasses import replace
from pathlib import Path

from pytest import fixture, mark, raises

import korbit as kb
from korbit.config import Caps, LabConfig
from korbit.exceptions import WitnessVerificationError


@fixture(scope="module")
def catalog() -> kb.Catalog:
    return kb.build_catalog(max_exhaustive_degree=5, max_family_degree=5)


@fixture(scope="module")
def report(catalog: kb.Catalog) -> kb.SuiteReport:
    return kb.run_suite(catalog, list(kb.CHECKS))


class TestLemmaSuite:
    def test_controls_pass(self, report: kb.SuiteReport) -> None:
        assert set(kb.CONTROL_CHECKS) == {"CHK-FKS", "CHK-P3"}
        assert all(check.anchor for check in kb.CHECKS.values())
        controls = [r for r in report.rows if r.check in kb.CONTROL_CHECKS]
        assert controls
        assert {r.status for r in controls} <= {
            kb.CheckStatus.PASS,
            kb.CheckStatus.VACUOUS,
        }
        fks = [r for r in controls if r.check == "CHK-FKS"]
        assert all(r.status is kb.CheckStatus.PASS for r in fks)

    def test_accounting(self, report: kb.SuiteReport, catalog: kb.Catalog) -> None:
        summary = report.summary
        assert list(summary.index) == list(kb.CHECKS)
        assert int(summary.values.sum()) == len(report.rows)
        for check_id, counts in summary.iterrows():
            rows = [r for r in report.rows if r.check == check_id]
            assert int(counts.sum()) == len(rows)
            assert {r.group_id for r in rows} <= {e.id for e in catalog}
        assert report.summary_record()["rows"] == len(report.rows)

    def test_verdicts_reverify(
        self, report: kb.SuiteReport, catalog: kb.Catalog
    ) -> None:
        decided = [
            r
            for r in report.rows
            if r.status in (kb.CheckStatus.PASS, kb.CheckStatus.FAIL)
        ]
        assert decided
        for row in decided:
            assert kb.verify_witness(row, catalog), row.instance

    def test_rows_follow_request_order(self, report: kb.SuiteReport) -> None:
        order = {cid: i for i, cid in enumerate(kb.CHECKS)}
        positions = [order[r.check] for r in report.rows]
        assert positions == sorted(positions)

    def test_reports_are_byte_identical(
        self, catalog: kb.Catalog, tmp_path: Path
    ) -> None:
        small = catalog.by_degree(4)
        checks = ["CHK-P1", "CHK-L5", "CHK-L11", "CHK-FKS"]
        kb.run_suite(small, checks, path=tmp_path / "serial.jsonl")
        kb.run_suite(small, checks, path=tmp_path / "again.jsonl")
        kb.run_suite(small, checks, path=tmp_path / "pool.jsonl", parallelism=2)
        serial = (tmp_path / "serial.jsonl").read_bytes()
        assert serial == (tmp_path / "again.jsonl").read_bytes()
        assert serial == (tmp_path / "pool.jsonl").read_bytes()

    def test_read_report(self, catalog: kb.Catalog, tmp_path: Path) -> None:
        path = tmp_path / "lemmas.jsonl"
        written = kb.run_suite(catalog.by_degree(4), ["CHK-P3"], path=path)
        rows, summary = kb.read_report(path)
        assert [r.to_dict() for r in rows] == [r.to_dict() for r in written.rows]
        assert summary == written.summary_record()
        assert summary["summary"] is True

    def test_fks_passes_up_to_degree_seven(self) -> None:
        larger = kb.build_catalog(max_exhaustive_degree=6, max_family_degree=7)
        report = kb.run_suite(larger, ["CHK-FKS"])
        assert max(r.witness["degree"] for r in report.rows) == 7
        assert {r.status for r in report.rows} == {kb.CheckStatus.PASS}

    def test_convention_changes_only_admission(
        self, report: kb.SuiteReport, catalog: kb.Catalog
    ) -> None:
        config = LabConfig(abelian_primitive_convention="standard")
        standard = kb.run_suite(catalog, list(kb.CHECKS), config)
        before = {(r.check, r.instance): r for r in report.rows}
        after = {(r.check, r.instance): r for r in standard.rows}
        changed = {
            key
            for key in before.keys() | after.keys()
            if key not in before
            or key not in after
            or before[key].status is not after[key].status
        }
        assert changed
        assert ("CHK-L16", kb.instance_id("A4@4", {})) in changed
        for key in changed & before.keys() & after.keys():
            statuses = {before[key].status, after[key].status}
            assert kb.CheckStatus.VACUOUS in statuses, key
        for key in (before.keys() & after.keys()) - changed:
            old, new = before[key], after[key]
            assert old.witness.get("conclusion") == new.witness.get("conclusion")


class TestRunCheck:
    def test_conclusions_can_be_disabled(self, catalog: kb.Catalog) -> None:
        config = LabConfig(evaluate_conclusions=False)
        rows = kb.check_rows(("CHK-FKS", catalog.find("C4@4")), config)
        assert [r.status for r in rows] == [kb.CheckStatus.SKIPPED]
        assert rows[0].witness["reason"] == "conclusion evaluation disabled"

    def test_resource_cap_skips(self) -> None:
        regular = kb.close_group(kb.left_regular(kb.symmetric_group(3)))
        entry = kb.CatalogEntry.from_group("S3-regular@6", regular, "named-family")
        config = LabConfig(caps=Caps(engine_cap=3))
        rows = kb.check_rows(("CHK-L11", entry), config)
        assert [r.status for r in rows] == [kb.CheckStatus.SKIPPED]
        assert "reason" in rows[0].witness
        assert rows[0].witness["degree"] == 6

    def test_vacuous_instance(self, catalog: kb.Catalog) -> None:
        row = kb.run_check(kb.CHECKS["CHK-L11"], catalog.find("C4@4"), {})
        assert row.status is kb.CheckStatus.VACUOUS
        assert row.witness["hypothesis"]["nmd"] is False
        assert row.instance == kb.instance_id("C4@4", {})

    def test_primitive_without_imprimitive_subgroups(
        self, catalog: kb.Catalog
    ) -> None:
        row = kb.run_check(kb.CHECKS["CHK-L16"], catalog.find("A5@5"), {})
        assert row.status is kb.CheckStatus.PASS
        assert row.witness["hypothesis"]["imprimitive_subgroup"] is None
        assert row.witness["conclusion"]["two_closed"] is False
        assert row.witness["conclusion"]["closure_order"] == 120

    def test_block_kernel_on_cyclic(self, catalog: kb.Catalog) -> None:
        params = {"partition": [[1, 3], [2, 4]]}
        row = kb.run_check(kb.CHECKS["CHK-P3"], catalog.find("C4@4"), params)
        assert row.status is kb.CheckStatus.PASS
        assert row.witness["conclusion"] == {"kernel_order": 2, "normal": True}
        assert kb.verify_witness(row, catalog)

    def test_timing(self, catalog: kb.Catalog) -> None:
        config = LabConfig(record_timing=True)
        row = kb.run_check(kb.CHECKS["CHK-FKS"], catalog.find("C4@4"), {}, config)
        assert row.millis is not None and row.millis >= 0
        untimed = kb.run_check(kb.CHECKS["CHK-FKS"], catalog.find("C4@4"), {})
        assert untimed.millis is None

    def test_unknown_check(self) -> None:
        with raises(KeyError, match="CHK-L99"):
            kb.get_checks(["CHK-L5", "CHK-L99"])


class TestVerifyWitness:
    @fixture
    def passed(self, catalog: kb.Catalog) -> kb.CheckResult:
        return kb.run_check(kb.CHECKS["CHK-FKS"], catalog.find("A4@4"), {})

    def test_pass_row(self, passed: kb.CheckResult, catalog: kb.Catalog) -> None:
        assert passed.status is kb.CheckStatus.PASS
        assert kb.verify_witness(passed)
        assert kb.verify_witness(passed, catalog)

    def test_wrong_group_id(self, passed: kb.CheckResult, catalog: kb.Catalog) -> None:
        assert not kb.verify_witness(replace(passed, group_id="S4@4"), catalog)
        assert not kb.verify_witness(replace(passed, group_id="A9@9"), catalog)
        assert not kb.verify_witness(replace(passed, instance="A4@4#0"))

    def test_tampered_witness(self, passed: kb.CheckResult) -> None:
        conclusion = {**passed.witness["conclusion"], "witness_images": [1, 2, 3, 4]}
        tampered = replace(passed, witness={**passed.witness, "conclusion": conclusion})
        assert not kb.verify_witness(tampered)
        assert not kb.verify_witness(replace(passed, status=kb.CheckStatus.FAIL))

    @mark.parametrize("status", [kb.CheckStatus.VACUOUS, kb.CheckStatus.SKIPPED])
    def test_rows_without_verdict(
        self, passed: kb.CheckResult, status: kb.CheckStatus
    ) -> None:
        with raises(WitnessVerificationError):
            kb.verify_witness(replace(passed, status=status))

    def test_malformed_group(self, passed: kb.CheckResult) -> None:
        broken = replace(passed, witness={**passed.witness, "generators": [[1, 1]]})
        with raises(WitnessVerificationError):
            kb.verify_witness(broken)


class TestExactCover:
    def test_first_cover(self) -> None:
        subsets = [{1, 2}, {3, 4}, {1, 3}, {2, 4}, {5, 6}, {4, 5}]
        cover = kb.exact_cover(range(1, 7), subsets)
        assert cover == [frozenset({1, 2}), frozenset({3, 4}), frozenset({5, 6})]

    def test_no_cover(self) -> None:
        assert kb.exact_cover(range(1, 4), [{1, 2}, {2, 3}]) is None
        assert kb.exact_cover(range(1, 4), [{1, 2}]) is None

    def test_subsets_outside_universe(self) -> None:
        solver = kb.ExactCoverSolver([1, 2], [{1, 2, 3}, {1}, {2}])
        assert solver.solve() == [frozenset({1}), frozenset({2})]
        assert solver.nodes > 0
