"""Dense matrices over Python's arbitrary-precision ``int``.

Entries of (-L)^r grow like (2 * max_degree)^r, which leaves 64-bit range for graphs of a
dozen or so nodes; everything here stays exact at any magnitude.
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DimensionMismatchError, NotSquareError


@dataclass(frozen=True)
class BigIntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BigIntMatrix":
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != width for row in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(len(rows), width, tuple(int(x) for row in rows for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BigIntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "BigIntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "BigIntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def column_vector(cls, values: Sequence[int]) -> "BigIntMatrix":
        return cls(len(values), 1, tuple(int(x) for x in values))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "BigIntMatrix":
        return BigIntMatrix(self.cols, self.rows,
                            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def select_columns(self, indices: Iterable[int]) -> "BigIntMatrix":
        indices = list(indices)
        return BigIntMatrix(self.rows, len(indices),
                            tuple(self[i, j] for i in range(self.rows) for j in indices))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def _check_same_shape(self, other: "BigIntMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "BigIntMatrix") -> "BigIntMatrix":
        self._check_same_shape(other)
        return BigIntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "BigIntMatrix") -> "BigIntMatrix":
        self._check_same_shape(other)
        return BigIntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "BigIntMatrix":
        return BigIntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __matmul__(self, other: "BigIntMatrix") -> "BigIntMatrix":
        return mat_mul(self, other)


def hstack(*blocks: BigIntMatrix) -> BigIntMatrix:
    if not blocks:
        raise DimensionMismatchError("nothing to stack")
    rows = blocks[0].rows
    if any(block.rows != rows for block in blocks):
        raise DimensionMismatchError("blocks have different row counts")
    return BigIntMatrix(
        rows,
        sum(block.cols for block in blocks),
        tuple(x for i in range(rows) for block in blocks for x in block.row(i)),
    )


def mat_mul(a: BigIntMatrix, b: BigIntMatrix) -> BigIntMatrix:
    if a.cols != b.rows:
        raise DimensionMismatchError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    b_columns = [b.column(j) for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        row = a.row(i)
        for col in b_columns:
            entries.append(sum(x * y for x, y in zip(row, col) if x and y))
    return BigIntMatrix(a.rows, b.cols, tuple(entries))


def mat_pow(a: BigIntMatrix, r: int) -> BigIntMatrix:
    if a.rows != a.cols:
        raise NotSquareError(f"power of a {a.rows}x{a.cols} matrix")
    if r < 0:
        raise ValueError(f"negative exponent {r}")
    result = BigIntMatrix.identity(a.rows)
    for _ in range(r):
        result = mat_mul(result, a)
    return result


def rank(a: BigIntMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination.

    Pivot is the first nonzero entry of the column at or below the current row. After
    step ``k`` every remaining entry is a (k+1)-order minor of the input, so the division
    by the previous pivot is exact.
    """
    if a.rows == 0 or a.cols == 0:
        return 0
    m = a.to_rows()
    r = 0
    previous = 1
    for col in range(a.cols):
        pivot_row = next((i for i in range(r, a.rows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][col]
        for i in range(r + 1, a.rows):
            lead = m[i][col]
            row_i, row_r = m[i], m[r]
            for j in range(col + 1, a.cols):
                row_i[j] = (pivot * row_i[j] - lead * row_r[j]) // previous
            row_i[col] = 0
        previous = pivot
        r += 1
        if r == a.rows:
            break
    return r
