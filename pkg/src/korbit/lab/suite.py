import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import partial
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd
from tqdm import tqdm

from ..catalog import Catalog, CatalogEntry
from ..config import LabConfig
from ..exceptions import (
    RESOURCE_ERRORS,
    KOrbitError,
    UnknownGroupError,
    WitnessVerificationError,
)
from ..group import Permutation, PermutationGroup, close_group
from .base import BaseCheck, conclusion_status, normalize
from .registry import CHECKS, get_checks
from .result import CheckResult, CheckStatus, Params, Witness, instance_id

logger = logging.getLogger(__name__)

SUMMARY_MARKER = "summary"


def _group_witness(entry: CatalogEntry) -> Witness:
    return {"degree": entry.degree, "generators": [list(g) for g in entry.generators]}


def _evaluate(
    check: BaseCheck, G: PermutationGroup, params: Params, config: LabConfig
) -> Tuple[CheckStatus, Witness]:
    witness: Witness = {}
    hypothesis = check.hypothesis(G, params, config)
    witness["hypothesis"] = normalize(hypothesis.facts)
    if hypothesis.holds is None:
        return CheckStatus.UNKNOWN, witness
    if not hypothesis.holds:
        return CheckStatus.VACUOUS, witness
    if not config.evaluate_conclusions:
        witness["reason"] = "conclusion evaluation disabled"
        return CheckStatus.SKIPPED, witness
    conclusion = check.conclusion(G, params, config)
    witness["conclusion"] = normalize(conclusion.facts)
    return conclusion_status(conclusion), witness


def run_check(
    check: BaseCheck,
    entry: CatalogEntry,
    params: Params,
    config: LabConfig = LabConfig(),
) -> CheckResult:
    """Evaluate one check on one instance of one catalog group.

    Resource caps turn the row into SKIPPED with the reason in the witness.
    """
    start = time.perf_counter()
    try:
        G = entry.group(config.caps.element_cap)
        status, facts = _evaluate(check, G, params, config)
    except RESOURCE_ERRORS as error:
        logger.warning("%s on %s skipped: %s", check.check_id, entry.id, error)
        status, facts = CheckStatus.SKIPPED, {"reason": str(error)}
    millis = None
    if config.record_timing:
        millis = round((time.perf_counter() - start) * 1000, 3)
    return CheckResult(
        check.check_id,
        instance_id(entry.id, params),
        entry.id,
        params,
        status,
        {**_group_witness(entry), **facts},
        millis,
    )


def check_rows(
    pair: Tuple[str, CatalogEntry], config: LabConfig
) -> List[CheckResult]:
    """All rows of one check on one catalog group."""
    check_id, entry = pair
    check = CHECKS[check_id]
    try:
        G = entry.group(config.caps.element_cap)
        instances = [normalize(p) for p in check.instances(G, config)]
    except RESOURCE_ERRORS as error:
        logger.warning("%s instances of %s skipped: %s", check_id, entry.id, error)
        return [
            CheckResult(
                check_id,
                instance_id(entry.id, {}),
                entry.id,
                {},
                CheckStatus.SKIPPED,
                {**_group_witness(entry), "reason": str(error)},
            )
        ]
    return [run_check(check, entry, params, config) for params in instances]


def summarize(rows: Sequence[CheckResult], check_ids: Sequence[str]) -> pd.DataFrame:
    """Row counts with one line per check and one column per status."""
    statuses = [s.value for s in CheckStatus]
    if not rows:
        return pd.DataFrame(0, index=list(check_ids), columns=statuses)
    frame = pd.DataFrame(
        {"check": [r.check for r in rows], "status": [r.status.value for r in rows]}
    )
    counts = pd.crosstab(frame["check"], frame["status"])
    return counts.reindex(index=list(check_ids), columns=statuses, fill_value=0)


@dataclass
class SuiteReport:
    rows: List[CheckResult]
    summary: pd.DataFrame

    def summary_record(self) -> Dict[str, Any]:
        counts = {
            check: {status: int(n) for status, n in row.items()}
            for check, row in self.summary.iterrows()
        }
        return {SUMMARY_MARKER: True, "rows": len(self.rows), "counts": counts}

    def has_failures(self) -> bool:
        return any(r.status is CheckStatus.FAIL for r in self.rows)

    def write(self, path: Union[str, Path]) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w") as handle:
            for row in self.rows:
                handle.write(json.dumps(row.to_dict()) + "\n")
            handle.write(json.dumps(self.summary_record()) + "\n")


def read_report(path: Union[str, Path]) -> Tuple[List[CheckResult], Dict[str, Any]]:
    """Rows and the summary record of a written suite report."""
    rows, summary = [], {}
    with Path(path).open() as handle:
        for text in handle:
            record = json.loads(text)
            if record.get(SUMMARY_MARKER):
                summary = record
            else:
                rows.append(CheckResult.from_dict(record))
    return rows, summary


def run_suite(
    catalog: Iterable[CatalogEntry],
    check_ids: Sequence[str],
    config: LabConfig = LabConfig(),
    path: Optional[Union[str, Path]] = None,
    parallelism: int = 1,
    progress: bool = False,
) -> SuiteReport:
    """Every requested check on every applicable instance of every catalog group.

    Rows are ordered by check (as requested), then catalog order, then
    instance order, whatever the parallelism.
    """
    assert parallelism > 0, "parallelism must be larger than 0!"
    check_ids = [check.check_id for check in get_checks(check_ids)]
    entries = list(catalog)
    pairs = [(cid, entry) for cid in check_ids for entry in entries]
    logger.info("lemma suite: %d checks, %d work items", len(check_ids), len(pairs))
    work = partial(check_rows, config=config)
    if parallelism > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            mapped = pool.map(work, pairs)
            chunks = list(tqdm(mapped, total=len(pairs), disable=not progress))
    else:
        chunks = [work(pair) for pair in tqdm(pairs, disable=not progress)]
    rows = [row for chunk in chunks for row in chunk]
    report = SuiteReport(rows, summarize(rows, check_ids))
    if path is not None:
        report.write(path)
    logger.info("lemma suite finished: %d rows", len(rows))
    return report


def _witness_group(witness: Witness, config: LabConfig) -> PermutationGroup:
    try:
        gens = [Permutation(images) for images in witness["generators"]]
        degree = int(witness["degree"])
        return close_group(gens, degree=degree, cap=config.caps.element_cap)
    except (KeyError, TypeError, ValueError, KOrbitError) as error:
        raise WitnessVerificationError(f"malformed witness group: {error}") from error


def verify_witness(
    result: CheckResult,
    catalog: Optional[Catalog] = None,
    config: LabConfig = LabConfig(),
) -> bool:
    """Re-derive a PASS or FAIL row from its witness alone.

    The group is re-closed from the witness generators and every asserted
    fact is recomputed without the two-closure memo. With a catalog, the
    witness group must also match the catalog entry named by the row.

    Raises:
        WitnessVerificationError: the row has no witness to check or the
            witness cannot be decoded.
    """
    if result.status not in (CheckStatus.PASS, CheckStatus.FAIL):
        raise WitnessVerificationError(f"{result.status.value} rows carry no verdict")
    if result.check not in CHECKS:
        raise WitnessVerificationError(f"unknown check {result.check}")
    G = _witness_group(result.witness, config)
    if catalog is not None:
        try:
            entry = catalog.find(result.group_id)
        except UnknownGroupError:
            return False
        gens = [Permutation(images) for images in entry.generators]
        if close_group(gens, degree=entry.degree, cap=config.caps.element_cap) != G:
            return False
    if result.instance != instance_id(result.group_id, result.params):
        return False
    fresh = replace(config, cache_dir=None)
    try:
        return CHECKS[result.check].verify_facts(
            G, result.params, result.witness, result.status, fresh
        )
    except (KeyError, TypeError, IndexError, KOrbitError) as error:
        raise WitnessVerificationError(f"witness does not decode: {error}") from error
