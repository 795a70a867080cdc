"""
Brute-force ground truth at desk scale: exhaustive word enumeration,
reachable sets, and fixed-point search.  Nothing here uses the orbit
characterisations, so it can be used to check them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .braid_core import BraidWord, Kind, Letter, find_bigons, permutation_of
from .orbits import CLASSICAL, VIRTUAL
from .updown import ColorVector, LengthMismatch, act


@dataclass(frozen=True)
class SearchSpec:
    degree: int
    world: str = CLASSICAL
    require_irreducible: bool = False
    require_pure: bool = False
    max_length: int = 4
    bound: int | None = None  # only vectors with all |entries| <= bound are reported

    def __post_init__(self):
        if self.degree < 1 or self.max_length < 0 or (self.bound is not None and self.bound < 0):
            raise ValueError(f"invalid search spec {self}")
        if self.world not in (CLASSICAL, VIRTUAL):
            raise ValueError(f"unknown world {self.world!r}")


def alphabet(n: int, world: str = CLASSICAL) -> tuple[Letter, ...]:
    """Letters in the fixed order s1 < S1 < v1 < s2 < S2 < v2 < ..."""
    kinds = [Kind.POSITIVE, Kind.NEGATIVE] + ([Kind.VIRTUAL] if world == VIRTUAL else [])
    return tuple(Letter(k, i) for i in range(1, n) for k in kinds)


def enumerate_words(spec: SearchSpec) -> Iterator[BraidWord]:
    """All words of length <= max_length in shortlex order, filtered by the requested predicates.

    Irreducibility is checked on prefixes: a bigon in a prefix stays a bigon in
    every extension, so those branches are cut.
    """
    n = spec.degree
    letters = alphabet(n, spec.world)
    level: list[tuple[Letter, ...]] = [()]
    for length in range(spec.max_length + 1):
        for word in level:
            w = BraidWord(n, word)
            if spec.require_pure and not permutation_of(w).is_identity():
                continue
            yield w
        if length == spec.max_length:
            break
        nxt = []
        for word in level:
            for l in letters:
                ext = word + (l,)
                if spec.require_irreducible and find_bigons(ext):  # prefix is bigon-free
                    continue
                nxt.append(ext)
        level = nxt


def _in_box(y: Sequence[int], bound: int | None) -> bool:
    return bound is None or all(abs(a) <= bound for a in y)


def _step(vals: tuple[int, ...], letter: Letter) -> tuple[int, ...]:
    kind, i = letter
    out = list(vals)
    a, b = out[i - 1], out[i]
    if kind is Kind.POSITIVE:
        out[i - 1], out[i] = b + 1, a - 1
    elif kind is Kind.NEGATIVE:
        out[i - 1], out[i] = b - 1, a + 1
    else:
        out[i - 1], out[i] = b, a
    return tuple(out)


def reachable_set(x: Sequence[int], spec: SearchSpec) -> set[ColorVector]:
    """``{act(x, w)}`` over the words of :func:`enumerate_words`, restricted to the box."""
    x = tuple(int(a) for a in x)
    if len(x) != spec.degree:
        raise LengthMismatch(f"start of length {len(x)} for degree {spec.degree}")
    if spec.require_irreducible:
        # irreducibility is a property of words, not of states: no deduplication
        out = set()
        for w in enumerate_words(spec):
            y = act(x, w)
            if _in_box(y, spec.bound):
                out.add(y)
        return out

    # breadth-first over states; purity needs the column arrangement in the state
    letters = alphabet(spec.degree, spec.world)
    cols0 = tuple(range(spec.degree))
    start = (x, cols0)
    seen = {start}
    frontier = [start]
    for _ in range(spec.max_length):
        nxt = []
        for vals, cols in frontier:
            for l in letters:
                i = l.index
                c = list(cols)
                c[i - 1], c[i] = c[i], c[i - 1]
                state = (_step(vals, l), tuple(c) if spec.require_pure else cols0)
                if state not in seen:
                    seen.add(state)
                    nxt.append(state)
        frontier = nxt
    return {vals for vals, cols in seen
            if (not spec.require_pure or cols == cols0) and _in_box(vals, spec.bound)}


def fixed_points_in_box(w: BraidWord, bound: int) -> np.ndarray:
    """All x with ``act(x, w) == x`` and every |x_i| <= bound, as rows of an array."""
    n = w.degree
    grid = np.array(list(itertools.product(range(-bound, bound + 1), repeat=n)), dtype=np.int64)
    vals = grid.copy()
    for kind, i in w.letters:
        a = vals[:, i - 1].copy()
        b = vals[:, i].copy()
        if kind is Kind.POSITIVE:
            vals[:, i - 1], vals[:, i] = b + 1, a - 1
        elif kind is Kind.NEGATIVE:
            vals[:, i - 1], vals[:, i] = b - 1, a + 1
        else:
            vals[:, i - 1], vals[:, i] = b, a
    return grid[(vals == grid).all(axis=1)]


def random_word(rng: random.Random, n: int, length: int, world: str = CLASSICAL,
                positive: bool = False) -> BraidWord:
    if n == 1:
        return BraidWord(1, ())
    letters = alphabet(n, world)
    if positive:
        letters = tuple(l for l in letters if l.kind is Kind.POSITIVE)
    return BraidWord(n, tuple(rng.choice(letters) for _ in range(length)))


def random_vector(rng: random.Random, n: int, lo: int = -10, hi: int = 10) -> ColorVector:
    return tuple(rng.randint(lo, hi) for _ in range(n))
