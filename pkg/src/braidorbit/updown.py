"""
The up-down action of braid words on integer tuples.

Crossing convention: in ``s<i>`` the strand in column i passes under the strand
in column i+1; in ``S<i>`` it passes over.  Walking down a strand, its label
goes up by one below an over-crossing and down by one below an
under-crossing.  Virtual crossings swap strands and leave labels alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid_core import BraidWord, Kind, Permutation, permutation_of

ColorVector = tuple[int, ...]


class LengthMismatch(ValueError):
    pass


def _check(x: Sequence[int], w: BraidWord) -> list[int]:
    if len(x) != w.degree:
        raise LengthMismatch(f"tuple of length {len(x)} for a word of degree {w.degree}")
    return [int(a) for a in x]


def act(x: Sequence[int], w: BraidWord) -> ColorVector:
    """Bottom labels of ``w`` coloured with top labels ``x``."""
    vals = _check(x, w)
    for kind, i in w.letters:
        a, b = vals[i - 1], vals[i]
        if kind is Kind.POSITIVE:
            vals[i - 1], vals[i] = b + 1, a - 1
        elif kind is Kind.NEGATIVE:
            vals[i - 1], vals[i] = b - 1, a + 1
        else:
            vals[i - 1], vals[i] = b, a
    return tuple(vals)


@dataclass(frozen=True)
class EdgeColoring:
    """Edge labels per top strand, top to bottom; virtual crossings do not split edges."""

    strands: tuple[tuple[int, ...], ...]
    permutation: Permutation

    def bottom(self) -> ColorVector:
        out = [0] * len(self.strands)
        for i, labels in enumerate(self.strands, start=1):
            out[self.permutation(i) - 1] = labels[-1]
        return tuple(out)


def full_coloring(x: Sequence[int], w: BraidWord) -> EdgeColoring:
    vals = _check(x, w)
    strands = [[a] for a in vals]
    cols = list(range(w.degree))  # column -> top strand (0-based)
    for kind, i in w.letters:
        left, right = cols[i - 1], cols[i]
        if kind is Kind.POSITIVE:
            strands[left].append(strands[left][-1] - 1)
            strands[right].append(strands[right][-1] + 1)
        elif kind is Kind.NEGATIVE:
            strands[left].append(strands[left][-1] + 1)
            strands[right].append(strands[right][-1] - 1)
        cols[i - 1], cols[i] = right, left
    return EdgeColoring(tuple(tuple(s) for s in strands), permutation_of(w))


@dataclass(frozen=True)
class OUMatrix:
    """``rows[i][j]``: crossings where top strand i+1 passes over top strand j+1."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.rows)) if self.rows else ()

    def total(self) -> int:
        return sum(self.row_sums())

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.n) for j in range(i + 1, self.n))

    def to_dict(self) -> dict:
        return {"matrix": [list(r) for r in self.rows],
                "row_sums": list(self.row_sums()),
                "col_sums": list(self.col_sums())}


def ou_matrix(w: BraidWord) -> OUMatrix:
    n = w.degree
    m = [[0] * n for _ in range(n)]
    cols = list(range(n))
    for kind, i in w.letters:
        left, right = cols[i - 1], cols[i]
        if kind is Kind.POSITIVE:
            m[right][left] += 1
        elif kind is Kind.NEGATIVE:
            m[left][right] += 1
        cols[i - 1], cols[i] = right, left
    return OUMatrix(tuple(tuple(r) for r in m))


def strand_counts(w: BraidWord) -> tuple[tuple[int, int], ...]:
    """(over-crossings, under-crossings) for each top strand."""
    m = ou_matrix(w)
    return tuple(zip(m.row_sums(), m.col_sums()))


def act_via_ou(x: Sequence[int], w: BraidWord) -> ColorVector:
    """Same result as :func:`act`, computed from OU row/column sums and the permutation."""
    vals = _check(x, w)
    m = ou_matrix(w)
    pi = permutation_of(w)
    y = [0] * w.degree
    for i, (xi, r, c) in enumerate(zip(vals, m.row_sums(), m.col_sums()), start=1):
        y[pi(i) - 1] = xi + r - c
    return tuple(y)


def is_isotropy(w: BraidWord) -> bool:
    m = ou_matrix(w)
    return m.row_sums() == m.col_sums()
