"""
Catalog of (0,*) block shapes.

Each shape is a star set inside a rows x cols block. Shapes whose exact
placement admits more than one choice are registered under several
variants; the active one comes from ``catalog.<kind>`` in the
configuration unless a variant is passed explicitly.
"""

from enum import Enum
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from symdeform.errors import InputError
from symdeform.patterns.pattern import Position, StarMask

ShapeBuilder = Callable[[int, int], FrozenSet[Position]]

DEFAULT_VARIANT = "default"


class ShapeKind(str, Enum):
    ZERO = "zero"
    CORNER_STAR = "corner_star"
    LEFT_COL = "left_col"
    RIGHT_COL = "right_col"
    RIGHTHALFCAP = "righthalfcap"
    NW_TRIPLE = "nw_triple"
    NWSE_TRIPLE = "nwse_triple"
    NW_SINGLE = "nw_single"
    Q_SHAPE = "q_shape"


# Registry: (kind, variant) -> builder
_SHAPE_REGISTRY: Dict[Tuple[ShapeKind, str], ShapeBuilder] = {}

# Kinds whose variant is read from the configuration
_CONFIGURABLE = {ShapeKind.NW_SINGLE, ShapeKind.RIGHTHALFCAP}


def register_shape(kind: ShapeKind, variant: str, builder: ShapeBuilder):
    """Register a builder ``(rows, cols) -> star set`` for a shape variant."""
    _SHAPE_REGISTRY[(ShapeKind(kind), variant)] = builder


def available_variants(kind: ShapeKind) -> List[str]:
    kind = ShapeKind(kind)
    return sorted(v for k, v in _SHAPE_REGISTRY if k is kind)


def active_variant(kind: ShapeKind) -> str:
    """Variant used when none is requested explicitly."""
    kind = ShapeKind(kind)
    if kind not in _CONFIGURABLE:
        return DEFAULT_VARIANT
    from symdeform.config import DEFAULTS, get_config

    return get_config().get(f"catalog.{kind.value}", DEFAULTS["catalog"][kind.value])


def _require_square(kind: ShapeKind, rows: int, cols: int):
    if rows != cols:
        raise InputError(f"{kind.value} needs a square block, got {rows}x{cols}")


def shape(kind: ShapeKind, rows: int, cols: int, variant: Optional[str] = None) -> StarMask:
    """
    Star mask of a catalog shape.

    Args:
        kind: Shape kind
        rows: Block rows
        cols: Block columns
        variant: Registered variant; defaults to the configured one

    Raises:
        InputError: for negative or unsupported sizes and unknown variants
    """
    try:
        kind = ShapeKind(kind)
    except ValueError as e:
        raise InputError(f"Unknown shape kind {kind!r}") from e
    if rows < 0 or cols < 0:
        raise InputError(f"Negative block size {rows}x{cols}")
    variant = variant or active_variant(kind)
    builder = _SHAPE_REGISTRY.get((kind, variant))
    if builder is None:
        raise InputError(
            f"No shape registered for {kind.value}/{variant}. "
            f"Available variants: {available_variants(kind)}"
        )
    return StarMask(rows, cols, builder(rows, cols))


def _zero(rows: int, cols: int) -> FrozenSet[Position]:
    return frozenset()


def _corner_star(rows: int, cols: int) -> FrozenSet[Position]:
    if rows < 1 or cols < 1:
        raise InputError(f"corner_star needs a nonempty block, got {rows}x{cols}")
    return frozenset({(rows - 1, cols - 1)})


def _left_col(rows: int, cols: int) -> FrozenSet[Position]:
    if cols < 1:
        raise InputError("left_col needs at least one column")
    return frozenset((i, 0) for i in range(rows))


def _right_col(rows: int, cols: int) -> FrozenSet[Position]:
    if cols < 1:
        raise InputError("right_col needs at least one column")
    return frozenset((i, cols - 1) for i in range(rows))


def _first_row_last_column(rows: int, cols: int) -> FrozenSet[Position]:
    if rows < 1 or cols < 1:
        raise InputError(f"righthalfcap needs a nonempty block, got {rows}x{cols}")
    return frozenset({(0, j) for j in range(cols)} | {(i, cols - 1) for i in range(rows)})


def _first_column_last_row(rows: int, cols: int) -> FrozenSet[Position]:
    if rows < 1 or cols < 1:
        raise InputError(f"righthalfcap needs a nonempty block, got {rows}x{cols}")
    return frozenset({(i, 0) for i in range(rows)} | {(rows - 1, j) for j in range(cols)})


def _nw_triple(rows: int, cols: int) -> FrozenSet[Position]:
    # three diagonals around the main one, down to the anti-diagonal
    _require_square(ShapeKind.NW_TRIPLE, rows, cols)
    n = rows
    return frozenset(
        (i, j) for i in range(n) for j in range(n) if abs(i - j) <= 1 and i + j <= n - 1
    )


def _nwse_triple(rows: int, cols: int) -> FrozenSet[Position]:
    _require_square(ShapeKind.NWSE_TRIPLE, rows, cols)
    n = rows
    return frozenset((i, j) for i in range(n) for j in range(n) if abs(i - j) <= 1)


def _nw_single_first_column(rows: int, cols: int) -> FrozenSet[Position]:
    return frozenset((i, 0) for i in range(min(rows, cols)))


def _nw_single_first_row(rows: int, cols: int) -> FrozenSet[Position]:
    return frozenset((0, j) for j in range(min(rows, cols)))


def _q_shape(rows: int, cols: int) -> FrozenSet[Position]:
    # cols - rows stars in the last row, starting under the diagonal's end;
    # the last entry stays zero
    if rows >= cols or rows == 0:
        return frozenset()
    return frozenset((rows - 1, j) for j in range(rows - 1, cols - 1))


register_shape(ShapeKind.ZERO, DEFAULT_VARIANT, _zero)
register_shape(ShapeKind.CORNER_STAR, DEFAULT_VARIANT, _corner_star)
register_shape(ShapeKind.LEFT_COL, DEFAULT_VARIANT, _left_col)
register_shape(ShapeKind.RIGHT_COL, DEFAULT_VARIANT, _right_col)
register_shape(ShapeKind.RIGHTHALFCAP, "first_row_last_column", _first_row_last_column)
register_shape(ShapeKind.RIGHTHALFCAP, "first_column_last_row", _first_column_last_row)
register_shape(ShapeKind.NW_TRIPLE, DEFAULT_VARIANT, _nw_triple)
register_shape(ShapeKind.NWSE_TRIPLE, DEFAULT_VARIANT, _nwse_triple)
register_shape(ShapeKind.NW_SINGLE, "first_column", _nw_single_first_column)
register_shape(ShapeKind.NW_SINGLE, "first_row", _nw_single_first_row)
register_shape(ShapeKind.Q_SHAPE, DEFAULT_VARIANT, _q_shape)
