from typing import Optional


class KOrbitError(Exception):
    """Base error for everything raised by korbit."""


class MalformedPermutationError(KOrbitError, ValueError):
    """Text or image list does not describe a bijection on 1..n."""


class DegreeMismatchError(KOrbitError, ValueError):
    """Operands act on point sets of different sizes."""


class GroupTooLargeError(KOrbitError):
    """Element enumeration exceeded the configured cap."""

    def __init__(self, message: str, partial_count: int) -> None:
        super().__init__(message)
        self.partial_count = partial_count


class PreconditionError(KOrbitError, ValueError):
    """Operation called on an input outside its domain (e.g. intransitive group)."""


class InvalidPartitionError(KOrbitError, ValueError):
    """Partition is not a partition of V, or is not invariant under the group."""


class ContainmentError(KOrbitError, ValueError):
    """A subgroup or subset is not contained in its claimed ambient object."""


class TooManyTuplesError(KOrbitError):
    """Number of non-diagonal k-tuples exceeds the tuple cap."""


class UnsupportedRightActionError(KOrbitError, ValueError):
    """Right action requested on a tuple shorter than the permutation degree."""


class CarrierMismatchError(KOrbitError, ValueError):
    """Two partitions do not partition the same set of tuples."""


class DiagonalViolationError(KOrbitError, ValueError):
    """A tuple would repeat a coordinate."""


class EngineCapError(KOrbitError):
    """Automorphism search input larger than the engine point cap."""


class Graph6ParseError(KOrbitError, ValueError):
    """Malformed graph6 data; `offset` is the byte position of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CatalogLoadError(KOrbitError):
    """Catalog file missing or violating the entry schema."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class WitnessVerificationError(KOrbitError):
    """A check witness is malformed and cannot be re-derived."""


class UnknownGroupError(KOrbitError, LookupError):
    """A group id is not present in the catalog."""


class EdgeListParseError(KOrbitError, ValueError):
    """Malformed edge-list graph text; `line` is the offending line number."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


RESOURCE_ERRORS = (GroupTooLargeError, TooManyTuplesError, EngineCapError)
