#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from typing import Generic, Iterable, Iterator, Sequence, TypeVar

T = TypeVar("T")


class Grid(Generic[T]):
    """Row-major rectangular canvas of text cells."""

    def __init__(self, data: list[T], *, w: int, h: int | None = None) -> None:
        self.w = w
        self.h = h if h is not None else (len(data) // w if w else 0)
        if self.w * self.h != len(data):
            raise ValueError(f"{len(data)} cells do not fill a {self.h}x{self.w} grid")
        self.data = data

    @classmethod
    def from_ragged(cls, rows: Iterable[Sequence[T]], padding: T) -> "Grid[T]":
        rows = [list(row) for row in rows]
        w = max((len(row) for row in rows), default=0)
        return cls(
            [cell for row in rows for cell in [*row, *[padding] * (w - len(row))]],
            w=w,
            h=len(rows),
        )

    def iter_rows(self) -> Iterator[Iterator[T]]:
        for r in range(self.h):
            yield (self.data[r * self.w + c] for c in range(self.w))

    def __str__(self) -> str:
        return "\n".join("".join(map(str, r)).rstrip() for r in self.iter_rows())
