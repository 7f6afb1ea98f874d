import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import partial
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

import pandas as pd
from tqdm import tqdm

from ..catalog import CatalogEntry
from ..closure import is_2_closed
from ..config import DEFAULT_CAPS, Caps
from ..exceptions import RESOURCE_ERRORS
from .search import find_regular

logger = logging.getLogger(__name__)

SurveyRow = Dict[str, Any]


class SurveyStatus(str, Enum):
    CONFIRMED = "CONFIRMED"
    REFUTED = "REFUTED"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class SurveyOptions:
    """Options of a polycirculant survey.

    Args:
        include_identity (bool): count the identity as a regular element.
        caps (Caps): resource caps for closure and element scans.
        cache_dir (Optional[Path]): two-closure memo directory.
        parallelism (int): worker processes; rows keep catalog order.
        progress (bool): show a tqdm progress bar.
    """

    include_identity: bool = False
    caps: Caps = DEFAULT_CAPS
    cache_dir: Optional[Path] = None
    parallelism: int = 1
    progress: bool = False

    def __post_init__(self) -> None:
        assert self.parallelism > 0, "parallelism must be larger than 0!"


def survey_row(entry: CatalogEntry, options: SurveyOptions) -> SurveyRow:
    row: SurveyRow = {
        "group_id": entry.id,
        "degree": entry.degree,
        "order": entry.order,
        "transitive": None,
        "two_closed": None,
        "status": SurveyStatus.SKIPPED.value,
        "witness_images": None,
        "witness_cycle_len": None,
    }
    caps = options.caps
    try:
        G = entry.group(caps.element_cap)
        row["transitive"] = G.is_transitive()
        if not row["transitive"]:
            row["status"] = SurveyStatus.NOT_APPLICABLE.value
            return row
        row["two_closed"] = is_2_closed(
            G, caps.engine_cap, caps.element_cap, options.cache_dir
        )
    except RESOURCE_ERRORS as error:
        logger.warning("survey row %s skipped: %s", entry.id, error)
        return row
    if not row["two_closed"]:
        row["status"] = SurveyStatus.NOT_APPLICABLE.value
        return row
    report = find_regular(G, options.include_identity, entry.id)
    if report.found:
        row["status"] = SurveyStatus.CONFIRMED.value
        row["witness_images"] = report.witness_images()
        row["witness_cycle_len"] = report.witness_cycle_len
    else:
        logger.error("2-closed transitive %s has no regular element", entry.id)
        row["status"] = SurveyStatus.REFUTED.value
    return row


def polycirculant_survey(
    catalog: Iterable[CatalogEntry],
    options: SurveyOptions = SurveyOptions(),
    path: Optional[Union[str, Path]] = None,
) -> List[SurveyRow]:
    """Search every 2-closed transitive catalog group for a regular element.

    Rows follow catalog order whatever the parallelism; when `path` is given
    they are also written there as JSON Lines.
    """
    entries = list(catalog)
    logger.info("polycirculant survey over %d groups", len(entries))
    work = partial(survey_row, options=options)
    if options.parallelism > 1:
        with ProcessPoolExecutor(max_workers=options.parallelism) as pool:
            mapped = pool.map(work, entries)
            rows = list(tqdm(mapped, total=len(entries), disable=not options.progress))
    else:
        rows = [work(e) for e in tqdm(entries, disable=not options.progress)]
    if path is not None:
        write_report(rows, path)
    summary = survey_summary(rows)
    logger.info("survey totals: %s", summary.to_dict())
    return rows


def write_report(rows: Iterable[SurveyRow], path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as handle:
        for row in rows:
            handle.write(json.dumps(row) + "\n")


def survey_summary(rows: Iterable[SurveyRow]) -> pd.Series:
    """Row count per status, every status listed."""
    statuses = pd.Series([row["status"] for row in rows], dtype=object)
    counts = statuses.value_counts()
    return counts.reindex([s.value for s in SurveyStatus], fill_value=0)
