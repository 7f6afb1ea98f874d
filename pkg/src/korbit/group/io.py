from pathlib import Path
from typing import List, Union

from ..config import DEFAULT_CAPS
from ..exceptions import MalformedPermutationError
from .group import PermutationGroup, close_group
from .permutation import Permutation, parse_permutation

PathLike = Union[str, Path]


def parse_group_text(
    text: str, cap: int = DEFAULT_CAPS.element_cap
) -> PermutationGroup:
    """Parse the ".grp" format.

    The first non-comment line is "degree n"; every further line holds one
    generator as an image list or in cycle notation. '#' starts a comment.
    """
    degree = None
    gens: List[Permutation] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            head = line.split()
            if len(head) != 2 or head[0] != "degree" or not head[1].isdigit():
                raise MalformedPermutationError(
                    f"line {number}: expected 'degree n', got {line!r}"
                )
            degree = int(head[1])
            continue
        try:
            gens.append(parse_permutation(line, degree))
        except MalformedPermutationError as e:
            raise MalformedPermutationError(f"line {number}: {e}") from e
    if degree is None:
        raise MalformedPermutationError("missing 'degree n' header")
    return close_group(gens, degree=degree, cap=cap)


def read_group_file(
    path: PathLike, cap: int = DEFAULT_CAPS.element_cap
) -> PermutationGroup:
    return parse_group_text(Path(path).read_text(encoding="utf-8"), cap=cap)


def format_group(G: PermutationGroup) -> str:
    lines = [f"degree {G.degree}"]
    lines += ["[" + ",".join(map(str, g.images)) + "]" for g in G.generators]
    return "\n".join(lines) + "\n"


def write_group_file(G: PermutationGroup, path: PathLike) -> None:
    Path(path).write_text(format_group(G), encoding="utf-8")
