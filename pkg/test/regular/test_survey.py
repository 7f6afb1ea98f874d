import json
from pathlib import Path
from typing import List

from pytest import fixture, mark

import korbit as kb
from korbit.catalog.families import alternating_generators, cyclic_generators
from korbit.config import Caps


@fixture(scope="module")
def small_catalog() -> kb.Catalog:
    return kb.build_catalog(max_exhaustive_degree=6, max_family_degree=6)


def entry(name: str, generators: List[kb.Permutation]) -> kb.CatalogEntry:
    return kb.CatalogEntry.from_group(name, kb.close_group(generators), "named-family")


class TestSurveyRows:
    def test_confirmed(self) -> None:
        row = kb.survey_row(entry("C4@4", cyclic_generators(4)), kb.SurveyOptions())
        assert row["status"] == kb.SurveyStatus.CONFIRMED.value
        assert row["transitive"] and row["two_closed"]
        assert row["witness_images"] == [2, 3, 4, 1]
        assert row["witness_cycle_len"] == 4

    def test_not_two_closed(self) -> None:
        a4 = entry("A4@4", alternating_generators(4))
        row = kb.survey_row(a4, kb.SurveyOptions())
        assert row["status"] == kb.SurveyStatus.NOT_APPLICABLE.value
        assert row["two_closed"] is False

    def test_intransitive(self) -> None:
        row = kb.survey_row(
            entry("C2@3", [kb.parse_permutation("(1 2)", 3)]), kb.SurveyOptions()
        )
        assert row["status"] == kb.SurveyStatus.NOT_APPLICABLE.value
        assert row["transitive"] is False
        assert row["two_closed"] is None

    def test_resource_cap_skips(self) -> None:
        options = kb.SurveyOptions(caps=Caps(engine_cap=3))
        row = kb.survey_row(entry("C4@4", cyclic_generators(4)), options)
        assert row["status"] == kb.SurveyStatus.SKIPPED.value
        assert row["transitive"] is True


class TestPolycirculantSurvey:
    def test_no_refutations(self, small_catalog: kb.Catalog, tmp_path: Path) -> None:
        path = tmp_path / "survey.jsonl"
        rows = kb.polycirculant_survey(small_catalog, path=path)
        assert [row["group_id"] for row in rows] == [e.id for e in small_catalog]
        summary = kb.survey_summary(rows)
        assert summary[kb.SurveyStatus.REFUTED.value] == 0
        assert summary[kb.SurveyStatus.SKIPPED.value] == 0
        assert summary.sum() == len(small_catalog)
        for row in rows:
            if row["transitive"] and row["two_closed"]:
                assert row["status"] == kb.SurveyStatus.CONFIRMED.value
        written = [json.loads(line) for line in path.read_text().splitlines()]
        assert written == rows

    def test_witnesses_are_regular(self, small_catalog: kb.Catalog) -> None:
        rows = kb.polycirculant_survey(small_catalog.by_degree(5))
        for row in rows:
            if row["status"] != kb.SurveyStatus.CONFIRMED.value:
                continue
            g = kb.Permutation(row["witness_images"])
            assert not g.is_identity()
            assert g.cycle_type().counts == (
                (row["witness_cycle_len"], row["degree"] // row["witness_cycle_len"]),
            )
            assert g in small_catalog.find(row["group_id"]).group()

    @mark.parametrize("parallelism", [1, 2])
    def test_order_ignores_parallelism(
        self, small_catalog: kb.Catalog, parallelism: int
    ) -> None:
        catalog = small_catalog.by_degree(4)
        options = kb.SurveyOptions(parallelism=parallelism)
        assert kb.polycirculant_survey(catalog, options) == kb.polycirculant_survey(
            catalog
        )

    def test_summary_lists_every_status(self) -> None:
        summary = kb.survey_summary([])
        assert list(summary.index) == [s.value for s in kb.SurveyStatus]
        assert summary.sum() == 0
