"""Dense immutable matrices over Q(i)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from symdeform.errors import InputError, SizeError
from symdeform.exact.scalar import ONE, ZERO, GaussianRational, gr


@dataclass(frozen=True)
class ExactMatrix:
    """
    Row-major matrix of GaussianRational entries.

    Instances are values: every operation returns a new matrix.
    """

    rows: int
    cols: int
    entries: Tuple[GaussianRational, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise SizeError(f"Negative matrix shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise SizeError(
                f"Expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} "
                f"matrix, got {len(self.entries)}"
            )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def elementary(cls, rows: int, cols: int, k: int, l: int) -> "ExactMatrix":
        """Matrix with a single 1 at 0-indexed (k, l)."""
        if not (0 <= k < rows and 0 <= l < cols):
            raise InputError(f"Position ({k}, {l}) outside {rows}x{cols}")
        entries = [ZERO] * (rows * cols)
        entries[k * cols + l] = ONE
        return cls(rows, cols, tuple(entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> "ExactMatrix":
        """
        Build from nested rows of scalars (int, Fraction, str or GaussianRational).

        ``cols`` is only needed to give an empty row list a width.
        """
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        entries: List[GaussianRational] = []
        for r, row in enumerate(rows):
            if len(row) != width:
                raise SizeError(f"Row {r} has {len(row)} entries, expected {width}")
            entries.extend(gr(value) for value in row)
        return cls(len(rows), width, tuple(entries))

    @classmethod
    def block_diag(cls, blocks: Iterable["ExactMatrix"]) -> "ExactMatrix":
        blocks = list(blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        entries = [ZERO] * (rows * cols)
        r0 = c0 = 0
        for block in blocks:
            for i in range(block.rows):
                base = (r0 + i) * cols + c0
                entries[base : base + block.cols] = block.row(i)
            r0 += block.rows
            c0 += block.cols
        return cls(rows, cols, tuple(entries))

    @classmethod
    def hstack(cls, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        if not blocks:
            return cls.zeros(0, 0)
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise SizeError("hstack requires equal row counts")
        entries: List[GaussianRational] = []
        for i in range(rows):
            for block in blocks:
                entries.extend(block.row(i))
        return cls(rows, sum(b.cols for b in blocks), tuple(entries))

    @classmethod
    def vstack(cls, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        if not blocks:
            return cls.zeros(0, 0)
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise SizeError("vstack requires equal column counts")
        entries: List[GaussianRational] = []
        for block in blocks:
            entries.extend(block.entries)
        return cls(sum(b.rows for b in blocks), cols, tuple(entries))

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> GaussianRational:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[GaussianRational, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Tuple[GaussianRational, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def iter_rows(self) -> Iterator[Tuple[GaussianRational, ...]]:
        for i in range(self.rows):
            yield self.row(i)

    def nonzero_positions(self) -> List[Tuple[int, int]]:
        return [divmod(k, self.cols) for k, v in enumerate(self.entries) if not v.is_zero]

    def is_zero(self) -> bool:
        return all(v.is_zero for v in self.entries)

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(
                self.entries[i * self.cols + j]
                for j in range(self.cols)
                for i in range(self.rows)
            ),
        )

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.rows
        return all(
            self.entries[i * n + j] == self.entries[j * n + i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def _check_same_shape(self, other: "ExactMatrix", op: str):
        if self.shape != other.shape:
            raise InputError(f"Cannot {op} {self.rows}x{self.cols} and {other.rows}x{other.cols}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_shape(other, "add")
        return ExactMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_shape(other, "subtract")
        return ExactMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor: object) -> "ExactMatrix":
        s = gr(factor)
        return ExactMatrix(self.rows, self.cols, tuple(s * a for a in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InputError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, m, p = self.rows, self.cols, other.cols
        out = [ZERO] * (n * p)
        for i in range(n):
            for k in range(m):
                a = self.entries[i * m + k]
                if a.is_zero:
                    continue
                base = k * p
                for j in range(p):
                    b = other.entries[base + j]
                    if not b.is_zero:
                        out[i * p + j] = out[i * p + j] + a * b
        return ExactMatrix(n, p, tuple(out))

    def submatrix(
        self, row_start: int, row_stop: int, col_start: int, col_stop: int
    ) -> "ExactMatrix":
        """Half-open 0-indexed slice ``[row_start:row_stop, col_start:col_stop]``."""
        rows_ok = 0 <= row_start <= row_stop <= self.rows
        cols_ok = 0 <= col_start <= col_stop <= self.cols
        if not (rows_ok and cols_ok):
            raise InputError(
                f"Slice [{row_start}:{row_stop}, {col_start}:{col_stop}] outside "
                f"{self.rows}x{self.cols}"
            )
        return ExactMatrix(
            row_stop - row_start,
            col_stop - col_start,
            tuple(
                self.entries[i * self.cols + j]
                for i in range(row_start, row_stop)
                for j in range(col_start, col_stop)
            ),
        )

    def with_entries(self, updates: Iterable[Tuple[int, int, object]]) -> "ExactMatrix":
        """Return a copy with the given (row, col, value) entries replaced."""
        entries = list(self.entries)
        for i, j, value in updates:
            entries[i * self.cols + j] = gr(value)
        return ExactMatrix(self.rows, self.cols, tuple(entries))

    # ------------------------------------------------------------------
    # Output
    # ------------------------------------------------------------------

    def to_strings(self) -> List[List[str]]:
        """Nested rows of scalar text forms (the JSON representation)."""
        return [[str(v) for v in row] for row in self.iter_rows()]

    def __str__(self) -> str:
        if not self.rows or not self.cols:
            return f"[{self.rows}x{self.cols}]"
        cells = self.to_strings()
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)
