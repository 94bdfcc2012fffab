"""
(0,*) patterns of deformations.

A PatternPair marks the entries of (A, B) that carry a free parameter. Masks
are symmetric; the stars at (i, j) and (j, i) of one matrix share a
parameter. Parameter ids count from 0 in coordinate-vector order (upper
triangle of A row by row, then of B).
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple, Union

from symdeform.core import CanonicalStructure
from symdeform.errors import InputError, InvariantError, ParseError
from symdeform.exact.matrix import ExactMatrix
from symdeform.exact.pair import SymPair, vector_index
from symdeform.exact.scalar import ZERO, GaussianRational, gr

Position = Tuple[int, int]
MATRIX_TAGS = ("A", "B")


@dataclass(frozen=True)
class StarMask:
    """A rows x cols (0,*) matrix given by its star positions."""

    rows: int
    cols: int
    stars: FrozenSet[Position] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.stars, frozenset):
            object.__setattr__(self, "stars", frozenset(self.stars))
        for i, j in self.stars:
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise InvariantError(f"Star ({i}, {j}) outside {self.rows}x{self.cols} mask")

    @classmethod
    def empty(cls, rows: int, cols: int) -> "StarMask":
        return cls(rows, cols, frozenset())

    def __len__(self) -> int:
        return len(self.stars)

    def __contains__(self, position: object) -> bool:
        return position in self.stars

    def __or__(self, other: "StarMask") -> "StarMask":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("Cannot combine masks of different shapes")
        return StarMask(self.rows, self.cols, self.stars | other.stars)

    def transpose(self) -> "StarMask":
        return StarMask(self.cols, self.rows, frozenset((j, i) for i, j in self.stars))

    def embed(self, rows: int, cols: int, row_offset: int = 0, col_offset: int = 0) -> "StarMask":
        """Place this mask inside a larger zero mask."""
        return StarMask(
            rows, cols, frozenset((i + row_offset, j + col_offset) for i, j in self.stars)
        )

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all((j, i) in self.stars for i, j in self.stars)

    def sorted_stars(self) -> List[Position]:
        return sorted(self.stars)

    def to_grid(self) -> List[List[int]]:
        return [
            [1 if (i, j) in self.stars else 0 for j in range(self.cols)] for i in range(self.rows)
        ]

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[object]], cols: int | None = None) -> "StarMask":
        """Build from rows of 0/1 (or '.'/'*') cells."""
        rows = len(grid)
        width = len(grid[0]) if rows else (cols or 0)
        stars = set()
        for i, row in enumerate(grid):
            if len(row) != width:
                raise ParseError(f"Mask row {i} has {len(row)} cells, expected {width}", position=i)
            for j, cell in enumerate(row):
                if cell in (1, "1", "*", True):
                    stars.add((i, j))
                elif cell not in (0, "0", ".", False):
                    raise ParseError(f"Mask cell {cell!r} is not 0/1", position=(i, j))
        return cls(rows, width, frozenset(stars))

    def to_ascii(self) -> str:
        return "\n".join(
            " ".join("*" if (i, j) in self.stars else "." for j in range(self.cols))
            for i in range(self.rows)
        )


@dataclass(frozen=True)
class BlockMasks:
    """Rectangular A/B masks of one off-diagonal block position."""

    a: StarMask
    b: StarMask

    @property
    def shape(self) -> Tuple[int, int]:
        return self.a.rows, self.a.cols

    def transpose(self) -> "BlockMasks":
        return BlockMasks(self.a.transpose(), self.b.transpose())

    def star_count(self) -> int:
        return len(self.a) + len(self.b)


# (matrix index 0/1, row, col) with row <= col
Param = Tuple[int, int, int]


@dataclass(frozen=True)
class PatternPair:
    """A pair of symmetric star masks with their parameter identification."""

    mask_a: StarMask
    mask_b: StarMask
    params: Tuple[Param, ...] = field(init=False)

    def __post_init__(self):
        for tag, mask in zip(MATRIX_TAGS, (self.mask_a, self.mask_b)):
            if mask.rows != mask.cols:
                raise InvariantError(f"Mask {tag} is not square ({mask.rows}x{mask.cols})")
            if not mask.is_symmetric():
                raise InvariantError(f"Mask {tag} is not symmetric")
        if self.mask_a.rows != self.mask_b.rows:
            raise InvariantError(
                f"Masks differ in size: {self.mask_a.rows} vs {self.mask_b.rows}"
            )
        params = tuple(
            (m, i, j)
            for m, mask in enumerate((self.mask_a, self.mask_b))
            for i, j in sorted(mask.stars)
            if i <= j
        )
        object.__setattr__(self, "params", params)

    @classmethod
    def empty(cls, n: int) -> "PatternPair":
        return cls(StarMask.empty(n, n), StarMask.empty(n, n))

    @classmethod
    def from_params(cls, n: int, params: Iterable[Param]) -> "PatternPair":
        """Build from upper-triangle parameter positions (matrix, i, j)."""
        stars: Tuple[set, set] = (set(), set())
        for m, i, j in params:
            stars[m].add((i, j))
            stars[m].add((j, i))
        return cls(StarMask(n, n, frozenset(stars[0])), StarMask(n, n, frozenset(stars[1])))

    @property
    def size(self) -> int:
        return self.mask_a.rows

    @property
    def param_map(self) -> Dict[Tuple[str, int, int], int]:
        """Every star position (tag, row, col) mapped to its parameter id."""
        mapping: Dict[Tuple[str, int, int], int] = {}
        for pid, (m, i, j) in enumerate(self.params):
            mapping[(MATRIX_TAGS[m], i, j)] = pid
            mapping[(MATRIX_TAGS[m], j, i)] = pid
        return mapping

    def vector_indices(self) -> List[int]:
        """Coordinate indices of the parameters, ascending (same order as ids)."""
        n = self.size
        return [vector_index(n, m, i, j) for m, i, j in self.params]

    def masks(self) -> Tuple[StarMask, StarMask]:
        return self.mask_a, self.mask_b


def count_parameters(p: PatternPair) -> int:
    """Number of independent parameters (stars on or above the diagonal)."""
    return len(p.params)


def param_label(p: PatternPair, pid: int) -> str:
    """1-indexed label such as ``B[1,2]``."""
    if not 0 <= pid < len(p.params):
        raise InputError(f"Unknown parameter id {pid}")
    m, i, j = p.params[pid]
    return f"{MATRIX_TAGS[m]}[{i + 1},{j + 1}]"


Values = Union[Mapping[int, object], Sequence[object]]


def instantiate(p: PatternPair, values: Values) -> SymPair:
    """
    Replace the stars by parameter values.

    Args:
        p: Pattern
        values: Mapping from parameter id to scalar, or a sequence indexed by id

    Raises:
        InputError: if a parameter has no value or an unknown id is given
    """
    if not isinstance(values, Mapping):
        values = dict(enumerate(values))
    count = len(p.params)
    unknown = [k for k in values if not (isinstance(k, int) and 0 <= k < count)]
    if unknown:
        raise InputError(f"Unknown parameter id(s): {unknown}")
    missing = [pid for pid in range(count) if pid not in values]
    if missing:
        labels = ", ".join(param_label(p, pid) for pid in missing)
        raise InputError(f"Missing value for parameter(s): {labels}")

    n = p.size
    entries: Tuple[List[GaussianRational], List[GaussianRational]] = (
        [ZERO] * (n * n),
        [ZERO] * (n * n),
    )
    for pid, (m, i, j) in enumerate(p.params):
        v = gr(values[pid])
        entries[m][i * n + j] = v
        entries[m][j * n + i] = v
    return SymPair(ExactMatrix(n, n, tuple(entries[0])), ExactMatrix(n, n, tuple(entries[1])))


def deform(k: SymPair, p: PatternPair, values: Values) -> SymPair:
    """The deformed pair ``k + instantiate(p, values)``."""
    if k.size != p.size:
        raise InputError(f"Pair size {k.size} does not match pattern size {p.size}")
    return k + instantiate(p, values)


def full_pattern(n: int) -> PatternPair:
    """Every entry a parameter: the universal (versal, not minimal) deformation."""
    stars = frozenset((i, j) for i in range(n) for j in range(n))
    return PatternPair(StarMask(n, n, stars), StarMask(n, n, stars))


def _block_indices(structure: CanonicalStructure, blocks: Sequence[int]) -> List[int]:
    offsets = structure.offsets()
    indices: List[int] = []
    for b in blocks:
        if not 0 <= b < len(structure.blocks):
            raise InputError(f"Block index {b} out of range for {len(structure.blocks)} blocks")
        indices.extend(range(offsets[b], offsets[b] + structure.blocks[b].size))
    return indices


def restrict_pattern(
    p: PatternPair, structure: CanonicalStructure, i: int, j: int
) -> PatternPair:
    """
    The sub-pattern on blocks i and j (just block i when i == j).

    Its rows and columns follow the order of the indices given.
    """
    if p.size != structure.size:
        raise InputError(f"Pattern size {p.size} does not match structure size {structure.size}")
    indices = _block_indices(structure, [i] if i == j else [i, j])
    where = {old: new for new, old in enumerate(indices)}
    size = len(indices)
    masks = []
    for mask in p.masks():
        masks.append(
            StarMask(
                size,
                size,
                frozenset(
                    (where[r], where[c]) for r, c in mask.stars if r in where and c in where
                ),
            )
        )
    return PatternPair(masks[0], masks[1])


def pattern_to_json(p: PatternPair) -> Dict[str, Any]:
    return {
        "maskA": p.mask_a.to_grid(),
        "maskB": p.mask_b.to_grid(),
        "params": count_parameters(p),
    }


def pattern_from_json(data: Mapping[str, Any]) -> PatternPair:
    """
    Inverse of :func:`pattern_to_json`.

    Raises:
        ParseError: if keys are missing or the parameter count disagrees
    """
    if not isinstance(data, Mapping):
        raise ParseError("Pattern JSON must be an object")
    missing = [k for k in ("maskA", "maskB") if k not in data]
    if missing:
        raise ParseError(f"Pattern JSON missing key(s): {', '.join(missing)}")
    a = StarMask.from_grid(data["maskA"])
    b = StarMask.from_grid(data["maskB"], cols=a.cols)
    pattern = PatternPair(a, b)
    if "params" in data and data["params"] != count_parameters(pattern):
        raise ParseError(
            f"Pattern JSON declares {data['params']} parameters, masks give "
            f"{count_parameters(pattern)}"
        )
    return pattern
