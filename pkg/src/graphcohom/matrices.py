"""Sparse integer matrices with exact (arbitrary-precision) entries."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

__all__ = ["SparseIntMatrix", "matmul", "identity_matrix"]


@dataclass(frozen=True)
class SparseIntMatrix:
    """An immutable rows x cols integer matrix stored as nonzero triplets.

    ``entries`` holds (row, col, value) sorted row-major with no zero values
    and no duplicate positions; the constructor sorts and validates.  Python
    ints make every entry arbitrary precision.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        entries = tuple(sorted((int(r), int(c), int(v)) for r, c, v in self.entries))
        object.__setattr__(self, "entries", entries)
        prev = None
        for r, c, v in entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v == 0:
                raise ValueError(f"explicit zero stored at ({r}, {c})")
            if prev == (r, c):
                raise ValueError(f"duplicate entry at ({r}, {c})")
            prev = (r, c)

    @classmethod
    def from_dict(cls, rows: int, cols: int, data: Mapping[tuple[int, int], int]) -> "SparseIntMatrix":
        return cls(rows, cols, tuple((r, c, v) for (r, c), v in data.items() if v))

    @classmethod
    def from_dense(cls, dense: Iterable[Iterable[int]], rows: int | None = None,
                   cols: int | None = None) -> "SparseIntMatrix":
        dense = [list(row) for row in dense]
        if rows is None:
            rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if dense else 0
        entries = tuple(
            (r, c, v) for r, row in enumerate(dense) for c, v in enumerate(row) if v
        )
        return cls(rows, cols, entries)

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            dense[r][c] = v
        return dense

    def by_rows(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for r, c, v in self.entries:
            out.setdefault(r, {})[c] = v
        return out

    def by_columns(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for r, c, v in self.entries:
            out.setdefault(c, []).append((r, v))
        return out

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def column_nnz(self, c: int) -> int:
        return sum(1 for _, col, _ in self.entries if col == c)


def matmul(a: SparseIntMatrix, b: SparseIntMatrix) -> SparseIntMatrix:
    """Exact sparse product a @ b."""
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    a_cols = a.by_columns()
    acc: dict[tuple[int, int], int] = {}
    for c, b_col in b.by_columns().items():
        for k, bv in b_col:
            for r, av in a_cols.get(k, ()):
                key = (r, c)
                acc[key] = acc.get(key, 0) + av * bv
    return SparseIntMatrix.from_dict(a.rows, b.cols, acc)


def identity_matrix(n: int) -> SparseIntMatrix:
    return SparseIntMatrix(n, n, tuple((i, i, 1) for i in range(n)))
