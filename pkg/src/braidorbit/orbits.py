"""Orbit invariants and membership tests for the up-down action."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .updown import LengthMismatch

CLASSICAL = "classical"
VIRTUAL = "virtual"


@dataclass(frozen=True)
class OrbitFlavor:
    world: str = CLASSICAL
    pure: bool = False
    irreducible: bool = False

    def __post_init__(self):
        if self.world not in (CLASSICAL, VIRTUAL):
            raise ValueError(f"world must be {CLASSICAL!r} or {VIRTUAL!r}, got {self.world!r}")

    def __str__(self) -> str:
        tags = [self.world] + (["pure"] if self.pure else []) + (["irreducible"] if self.irreducible else [])
        return "+".join(tags)

    @classmethod
    def parse(cls, text: str) -> "OrbitFlavor":
        """Parse ``classical``, ``virtual+pure``, ``classical+pure+irreducible`` etc."""
        parts = [p for p in text.replace(",", "+").split("+") if p]
        if not parts or parts[0] not in (CLASSICAL, VIRTUAL):
            raise ValueError(f"bad flavor {text!r}")
        extra = set(parts[1:])
        unknown = extra - {"pure", "irreducible"}
        if unknown:
            raise ValueError(f"unknown flavor tags {sorted(unknown)}")
        return cls(parts[0], "pure" in extra, "irreducible" in extra)


def trace(x: Sequence[int]) -> int:
    return sum(x)


def count_type_I(x: Sequence[int]) -> int:
    """Number of positions i (1-based) where exactly one of i, x_i is odd."""
    return sum(1 for i, a in enumerate(x, start=1) if (i + a) % 2 == 1)


def count_type_II(x: Sequence[int]) -> int:
    return len(x) - count_type_I(x)


def orbit_invariants(x: Sequence[int]) -> tuple[int, int, int]:
    return trace(x), count_type_I(x), count_type_II(x)


@dataclass(frozen=True)
class Verdict:
    member: bool
    reason: str

    def __bool__(self) -> bool:
        return self.member

    def to_dict(self) -> dict:
        return {"member": self.member, "reason": self.reason}


OK = "ok"
TRACE = "trace mismatch"
TYPE_I = "type-I mismatch"
PARITY = "parity mismatch"
DEGREE2 = "irreducible degree-2 restriction"


def orbit_verdict(x: Sequence[int], y: Sequence[int], flavor: OrbitFlavor = OrbitFlavor()) -> Verdict:
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)}")
    n = len(x)
    if n == 0:
        raise ValueError("empty tuples")
    if trace(x) != trace(y):
        return Verdict(False, TRACE)
    if n == 1 or flavor.world == VIRTUAL:
        # n == 1: equal trace already forces y == x
        return Verdict(True, OK)

    if flavor.pure:
        if any((b - a) % 2 for a, b in zip(x, y)):
            return Verdict(False, PARITY)
        if n == 2 and flavor.irreducible and x != y:
            return Verdict(False, DEGREE2)
        return Verdict(True, OK)

    if count_type_I(x) != count_type_I(y):
        return Verdict(False, TYPE_I)
    if n == 2 and flavor.irreducible:
        x1, x2 = x
        if y not in {(x1, x2), (x2 + 1, x1 - 1), (x2 - 1, x1 + 1)}:
            return Verdict(False, DEGREE2)
    return Verdict(True, OK)


def in_orbit(x: Sequence[int], y: Sequence[int], flavor: OrbitFlavor = OrbitFlavor()) -> bool:
    """True iff some word of the given flavor carries ``x`` to ``y``."""
    return orbit_verdict(x, y, flavor).member
