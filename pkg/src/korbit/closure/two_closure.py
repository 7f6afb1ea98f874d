import hashlib
import json
import logging
from pathlib import Path
from typing import Optional

from ..config import DEFAULT_CAPS, cache_dir_from_env
from ..group import Permutation, PermutationGroup, close_group
from .digraph import orbitals
from .engine import aut_of_coloring

logger = logging.getLogger(__name__)


def closure_digest(G: PermutationGroup) -> str:
    """sha1 of the degree and the sorted generator images."""
    payload = json.dumps([G.degree, sorted(G.to_images())])
    return hashlib.sha1(payload.encode()).hexdigest()


def _load_cached(
    path: Path, degree: int, element_cap: int
) -> Optional[PermutationGroup]:
    if not path.exists():
        return None
    record = json.loads(path.read_text())
    gens = [Permutation(images) for images in record["generators"]]
    group = close_group(gens, degree=degree, cap=element_cap)
    if group.order != record["order"]:
        logger.warning("stale two-closure cache entry %s ignored", path.name)
        return None
    return group


def two_closure(
    G: PermutationGroup,
    engine_cap: int = DEFAULT_CAPS.engine_cap,
    element_cap: int = DEFAULT_CAPS.element_cap,
    cache_dir: Optional[Path] = None,
) -> PermutationGroup:
    """Automorphism group of the orbital coloring of G.

    Results are memoized as JSON under `cache_dir` (default: the
    KORBIT_CACHE_DIR environment variable; no caching when unset).
    """
    cache_dir = cache_dir if cache_dir is not None else cache_dir_from_env()
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / f"{closure_digest(G)}.json"
        cached = _load_cached(path, G.degree, element_cap)
        if cached is not None:
            logger.info("two-closure cache hit %s", path.name)
            return cached
    closure = aut_of_coloring(orbitals(G), engine_cap, element_cap)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        record = {
            "degree": G.degree,
            "order": closure.order,
            "generators": closure.to_images(),
        }
        path.write_text(json.dumps(record))
    return closure


def is_2_closed(
    G: PermutationGroup,
    engine_cap: int = DEFAULT_CAPS.engine_cap,
    element_cap: int = DEFAULT_CAPS.element_cap,
    cache_dir: Optional[Path] = None,
) -> bool:
    return two_closure(G, engine_cap, element_cap, cache_dir).order == G.order
