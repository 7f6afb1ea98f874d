import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Literal, Optional

CACHE_ENV_VAR = "KORBIT_CACHE_DIR"

Convention = Literal["nonabelian", "standard"]


@dataclass(frozen=True)
class Caps:
    """Resource caps shared by every computation.

    Args:
        element_cap (int): maximal number of enumerated group elements (|S8|).
        tuple_cap (int): maximal number of non-diagonal k-tuples per orb_k sweep.
        engine_cap (int): maximal number of points handed to the automorphism search.
        subgroup_cap (int): largest group order whose subgroup lattice is enumerated.
        instance_cap (int): maximal number of instances one check draws from one group.
    """

    element_cap: int = 20160
    tuple_cap: int = 1_000_000
    engine_cap: int = 16
    subgroup_cap: int = 720
    instance_cap: int = 12

    def validate(self) -> "Caps":
        for name in (
            "element_cap",
            "tuple_cap",
            "engine_cap",
            "subgroup_cap",
            "instance_cap",
        ):
            assert getattr(self, name) > 0, f"{name} must be larger than 0!"
        return self

    def with_overrides(self, **overrides: Optional[int]) -> "Caps":
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes).validate()


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class LabConfig:
    """Configuration of a lemma-lab run."""

    caps: Caps = field(default_factory=Caps)
    abelian_primitive_convention: Convention = "nonabelian"
    evaluate_conclusions: bool = True
    record_timing: bool = False
    cache_dir: Optional[Path] = None

    def __post_init__(self) -> None:
        assert self.abelian_primitive_convention in (
            "nonabelian",
            "standard",
        ), "abelian_primitive_convention should be 'nonabelian' or 'standard'!"
        self.caps.validate()


def cache_dir_from_env() -> Optional[Path]:
    value = os.environ.get(CACHE_ENV_VAR)
    return Path(value) if value else None
