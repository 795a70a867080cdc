"""
Braid words over the classical and virtual braid monoids.

A word is a degree-tagged sequence of letters ``s<i>`` (positive crossing),
``S<i>`` (negative crossing) and ``v<i>`` (virtual crossing), each acting on
the adjacent columns i and i+1.  Words are diagram-level objects: no braid
relations are applied, so ``s1 S1`` and the empty word are different
elements.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class BraidSyntaxError(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class Kind(enum.Enum):
    POSITIVE = "s"
    NEGATIVE = "S"
    VIRTUAL = "v"

    @property
    def classical(self) -> bool:
        return self is not Kind.VIRTUAL

    def flipped(self) -> "Kind":
        if self is Kind.POSITIVE:
            return Kind.NEGATIVE
        if self is Kind.NEGATIVE:
            return Kind.POSITIVE
        return self


class Letter(NamedTuple):
    kind: Kind
    index: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"

    @property
    def classical(self) -> bool:
        return self.kind is not Kind.VIRTUAL

    def touches(self, index: int) -> bool:
        """True if this letter shares a column with the column pair ``index, index+1``."""
        return abs(self.index - index) <= 1


def s(i: int) -> Letter:
    return Letter(Kind.POSITIVE, i)


def S(i: int) -> Letter:
    return Letter(Kind.NEGATIVE, i)


def v(i: int) -> Letter:
    return Letter(Kind.VIRTUAL, i)


@dataclass(frozen=True)
class Permutation:
    """Bijection on 1..n; ``image[i-1]`` is the bottom position of the strand starting at top position i."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(k) for k in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.image, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other`` (strand tracing through a stacked pair)."""
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        return Permutation(tuple(other(j) for j in self.image))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles in order of their minimal element, each starting from that element."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def inversions(self) -> int:
        img = self.image
        return sum(1 for a in range(len(img)) for b in range(a + 1, len(img)) if img[a] > img[b])

    def __str__(self) -> str:
        return ",".join(map(str, self.image))


@dataclass(frozen=True)
class BraidWord:
    degree: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        letters = tuple(self.letters)
        for letter in letters:
            if not 1 <= letter.index <= self.degree - 1:
                raise IndexOutOfRange(f"letter {letter} out of range for degree {self.degree}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            raise ValueError("negative powers are not defined in the monoid")
        return BraidWord(self.degree, self.letters * k)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "word": format_word(self)}


@dataclass(frozen=True)
class Bigon:
    """A non-alternating bigon between letter positions ``first < second`` (0-based)."""

    first: int
    second: int
    index: int


_TOKEN = re.compile(r"([sSv])(\d+)\Z")


def parse_word(text: str, degree: int | None = None) -> BraidWord:
    """Parse ``"s1 S2 v1"``-style text.  Without ``degree`` it is inferred as max index + 1."""
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise BraidSyntaxError(f"bad token {tok!r}; expected s<i>, S<i> or v<i>")
        i = int(m.group(2))
        if i < 1:
            raise IndexOutOfRange(f"index in {tok!r} must be >= 1")
        letters.append(Letter(Kind(m.group(1)), i))
    if degree is None:
        degree = max((l.index for l in letters), default=0) + 1
    return BraidWord(degree, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(l) for l in w.letters)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def concat(u: BraidWord, v: BraidWord, *more: BraidWord) -> BraidWord:
    words = (u, v) + more
    n = u.degree
    if any(w.degree != n for w in words):
        raise DegreeMismatch(f"cannot stack words of degrees {[w.degree for w in words]}")
    return BraidWord(n, sum((w.letters for w in words), ()))


def product(words: Iterable[BraidWord], degree: int) -> BraidWord:
    """Concatenate any number of words of the given degree (empty product is the identity)."""
    letters: list[Letter] = []
    for w in words:
        if w.degree != degree:
            raise DegreeMismatch(f"expected degree {degree}, got {w.degree}")
        letters.extend(w.letters)
    return BraidWord(degree, tuple(letters))


def permutation_of(w: BraidWord) -> Permutation:
    cols = list(range(1, w.degree + 1))  # cols[c] = top label of the strand now in column c+1
    for _, i in w.letters:
        cols[i - 1], cols[i] = cols[i], cols[i - 1]
    image = [0] * w.degree
    for c, strand in enumerate(cols, start=1):
        image[strand - 1] = c
    return Permutation(tuple(image))


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()


def is_classical(w: BraidWord) -> bool:
    return all(l.classical for l in w.letters)


def mirror(w: BraidWord) -> BraidWord:
    return BraidWord(w.degree, tuple(Letter(l.kind.flipped(), l.index) for l in w.letters))


def reverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.degree, w.letters[::-1])


def embed(w: BraidWord, left: int, right: int) -> BraidWord:
    """Add ``left`` trivial strands on the left and ``right`` on the right."""
    if left < 0 or right < 0:
        raise ValueError("embedding offsets must be non-negative")
    return BraidWord(w.degree + left + right,
                     tuple(Letter(l.kind, l.index + left) for l in w.letters))


def find_bigons(w: BraidWord | Sequence[Letter]) -> list[Bigon]:
    """All non-alternating bigons, ordered by first position.

    Single pass: ``open_[i]`` holds the position of the latest classical letter at
    index i that no later letter has touched.  Each letter can close at most one
    bigon and is blocked afterwards, so bigons form a matching.
    """
    letters = w.letters if isinstance(w, BraidWord) else w
    open_: dict[int, int] = {}
    found = []
    for pos, (kind, i) in enumerate(letters):
        if kind is not Kind.VIRTUAL:
            p = open_.get(i)
            if p is not None and letters[p].kind is not kind:
                found.append(Bigon(p, pos, i))
        open_.pop(i - 1, None)
        open_.pop(i + 1, None)
        if kind is Kind.VIRTUAL:
            open_.pop(i, None)
        else:
            open_[i] = pos
    found.sort(key=lambda b: (b.first, b.second))
    return found


def is_irreducible(w: BraidWord) -> bool:
    return not find_bigons(w)
