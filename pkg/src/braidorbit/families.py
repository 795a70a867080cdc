"""
Named braid families: the pure building blocks, weaving and torus braids with
their closed-form actions, and permutation braids.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .braid_core import (
    BraidWord, Kind, Letter, Permutation, is_irreducible, is_pure, mirror,
    parse_word, permutation_of,
)
from .errors import ContractViolation
from .updown import ColorVector, act


@dataclass(frozen=True)
class BlockInventory:
    A3: BraidWord        # 0 -> (0, 2, -2)
    A3_star: BraidWord   # 0 -> (0, -2, 2)
    B3: BraidWord        # 0 -> (2, 0, -2)
    B3_star: BraidWord   # 0 -> (-2, 0, 2)
    VA: BraidWord        # 0 -> (-1, 1)
    VB: BraidWord        # 0 -> (1, -1)


BLOCK_ACTIONS = {
    "A3": (0, 2, -2),
    "A3_star": (0, -2, 2),
    "B3": (2, 0, -2),
    "B3_star": (-2, 0, 2),
    "VA": (-1, 1),
    "VB": (1, -1),
}

# Blocks whose self-powers must stay irreducible.  A3 is excluded: A3 A3
# contains s2 S2 at the junction.
POWER_SAFE = ("B3", "B3_star", "VA", "VB")


def check_blocks(blocks: BlockInventory, max_power: int = 6) -> list[str]:
    """Return a list of violated block contracts (empty when all hold)."""
    problems = []
    for name, want in BLOCK_ACTIONS.items():
        w = getattr(blocks, name)
        got = act((0,) * w.degree, w)
        if got != want:
            problems.append(f"{name}: act(0) = {got}, expected {want}")
        if not is_pure(w):
            problems.append(f"{name}: not pure")
        if not is_irreducible(w):
            problems.append(f"{name}: reducible")
    for name in POWER_SAFE:
        w = getattr(blocks, name)
        for k in range(2, max_power + 1):
            if not is_irreducible(w ** k):
                problems.append(f"{name}^{k}: reducible")
    return problems


@functools.lru_cache(maxsize=None)
def default_blocks() -> BlockInventory:
    b3 = parse_word("S1 s2 s2 s1 S2 s1 s1 s2", 3)
    blocks = BlockInventory(
        A3=parse_word("S2 s1 s1 s2", 3),
        A3_star=parse_word("s2 S1 S1 S2", 3),
        B3=b3,
        B3_star=mirror(b3),
        VA=parse_word("s1 v1", 2),
        VB=parse_word("S1 v1", 2),
    )
    problems = check_blocks(blocks)
    if problems:
        raise ContractViolation("; ".join(problems))
    return blocks


def signed_power(block: BraidWord, star: BraidWord, k: int) -> BraidWord:
    """``block**k`` for k >= 0, ``star**(-k)`` for k < 0."""
    return block ** k if k >= 0 else star ** (-k)


def _sweep(p: int, alternating: bool) -> tuple[Letter, ...]:
    return tuple(
        Letter(Kind.POSITIVE if (i % 2 == 1 or not alternating) else Kind.NEGATIVE, i)
        for i in range(1, p)
    )


def weaving_pq(p: int, q: int) -> BraidWord:
    """q repetitions of the alternating sweep s1 S2 s3 S4 ... on p strands."""
    if p < 2 or q < 0:
        raise ValueError(f"weaving braid needs p >= 2, q >= 0 (got p={p}, q={q})")
    return BraidWord(p, _sweep(p, True) * q)


def weaving(n: int) -> BraidWord:
    """The pure weaving braid: n alternating sweeps on n strands.  Fixes every tuple."""
    if n < 2:
        raise ValueError(f"weaving braid needs n >= 2, got {n}")
    return weaving_pq(n, n)


def weaving_star(n: int) -> BraidWord:
    return mirror(weaving(n))


def torus(p: int, q: int) -> BraidWord:
    if p < 2 or q < 1:
        raise ValueError(f"torus braid needs p >= 2, q >= 1 (got p={p}, q={q})")
    return BraidWord(p, _sweep(p, False) * q)


def sweep_permutation(p: int, q: int) -> Permutation:
    """Permutation of q sweeps: each sweep moves column 1 to column p and shifts the rest left."""
    return Permutation(tuple((i - 1 - q) % p + 1 for i in range(1, p + 1)))


def torus_action_formula(p: int, q: int) -> tuple[tuple[int, ...], tuple[int, ...], ColorVector]:
    """Closed-form OU row sums, column sums and ``act(0, torus(p, q))``."""
    if p < 2 or q < 1:
        raise ValueError(f"torus formula needs p >= 2, q >= 1 (got p={p}, q={q})")
    idx = range(1, p + 1)
    if p >= q:
        r = tuple(q - 1 if i <= q else q for i in idx)
        c = tuple(p - 1 if i <= q else 0 for i in idx)
    else:
        a1, a2 = divmod(q, p)
        r = tuple((a2 - 1) * (a1 + 1) + (p - a2) * a1 if i <= a2
                  else a2 * (a1 + 1) + (p - a2 - 1) * a1 for i in idx)
        c = tuple((a1 + 1) * (p - 1) if i <= a2 else a1 * (p - 1) for i in idx)
    pi = sweep_permutation(p, q)
    y = [0] * p
    for i in idx:
        y[pi(i) - 1] = r[i - 1] - c[i - 1]
    return r, c, tuple(y)


def _alternating_tail(p: int, start: int, first: int) -> list[int]:
    """Zero before ``start``; from ``start`` on, ``first`` at positions of start's parity, ``-first`` elsewhere."""
    return [0 if k < start else (first if (k - start) % 2 == 0 else -first) for k in range(1, p + 1)]


def weaving_action_formula(p: int, q: int) -> tuple[ColorVector, str]:
    """``act(0, weaving_pq(p, q))`` for p >= q, with the case that produced it.

    Cases (i)-(iii) are closed forms in the parity of p, q and the bottom
    position of strand 1.  The odd/odd case has no trustworthy closed form and
    is computed directly (case ``"iv-direct"``).
    """
    if not (p >= q >= 1 and p >= 2):
        raise ValueError(f"weaving formula needs p >= q >= 1, p >= 2 (got p={p}, q={q})")
    pi1 = sweep_permutation(p, q)(1)
    if p % 2 == 0 and q % 2 == 0:
        return (0,) * p, "i"
    if p % 2 == 0:
        return tuple(_alternating_tail(p, 1, -1 if pi1 % 2 == 1 else 1)), "ii"
    if q % 2 == 0:
        return tuple(_alternating_tail(p, pi1, -1)), "iii"
    return act((0,) * p, weaving_pq(p, q)), "iv-direct"


def printed_weaving_formula(p: int, q: int) -> ColorVector:
    """The four weaving cases in the opposite crossing convention.

    Cases (i)-(iii) equal ``act(0, mirror(weaving_pq(p, q)))``.  Case (iv) is
    the one-line form with both branches -1, kept so its disagreement with
    direct computation can be reported.
    """
    if not (p >= q >= 1 and p >= 2):
        raise ValueError(f"weaving formula needs p >= q >= 1, p >= 2 (got p={p}, q={q})")
    pi1 = sweep_permutation(p, q)(1)
    ks = range(1, p + 1)
    if p % 2 == 0 and q % 2 == 0:
        return (0,) * p
    if p % 2 == 0:
        return tuple(1 if (k - pi1) % 2 == 0 else -1 for k in ks)
    if q % 2 == 0:
        return tuple(_alternating_tail(p, pi1, 1))
    return tuple(0 if k >= pi1 else -1 for k in ks)


def permutation_braid(pi: Permutation) -> BraidWord:
    """Positive word realising ``pi`` with every strand pair crossing at most once (bubble sort)."""
    n = pi.degree
    cols = list(range(1, n + 1))  # top label of the strand in each column
    letters = []
    for sweep_end in range(n - 1, 0, -1):
        for c in range(sweep_end):
            if pi(cols[c]) > pi(cols[c + 1]):
                cols[c], cols[c + 1] = cols[c + 1], cols[c]
                letters.append(Letter(Kind.POSITIVE, c + 1))
    w = BraidWord(n, tuple(letters))
    assert permutation_of(w) == pi
    return w


__all__ = [
    "BlockInventory", "BLOCK_ACTIONS", "check_blocks", "default_blocks", "signed_power",
    "weaving", "weaving_star", "weaving_pq", "torus", "sweep_permutation",
    "torus_action_formula", "weaving_action_formula", "printed_weaving_formula",
    "permutation_braid",
]
