"""
Explicit words realising orbit relations, irreducibility repair, and the
closure colourability test.

Every builder here checks its own output with :func:`~braidorbit.updown.act`
and raises :class:`~braidorbit.errors.ContractViolation` if the check fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid_core import (
    BraidWord, Permutation, concat, embed, find_bigons, identity, is_classical,
    is_irreducible, is_pure, parse_word, permutation_of, product,
)
from .errors import ContractViolation, MaxRepairExceeded, NotInOrbit, UnsupportedDegree
from .families import default_blocks, permutation_braid, signed_power, weaving, weaving_star
from .orbits import CLASSICAL, OrbitFlavor, count_type_I, in_orbit, trace
from .updown import ColorVector, LengthMismatch, act, ou_matrix


def type_matching_permutation(x: Sequence[int], y: Sequence[int]) -> Permutation:
    """Send the k-th Type-I position of x to the k-th Type-I position of y, likewise for Type II."""
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)}")
    if count_type_I(x) != count_type_I(y):
        raise NotInOrbit(f"Type-I counts differ: {count_type_I(x)} vs {count_type_I(y)}")
    image = [0] * len(x)
    for parity in (1, 0):
        src = [i for i, a in enumerate(x, start=1) if (i + a) % 2 == parity]
        dst = [j for j, b in enumerate(y, start=1) if (j + b) % 2 == parity]
        for i, j in zip(src, dst):
            image[i - 1] = j
    return Permutation(tuple(image))


def pure_witness_theorem(t: Sequence[int]) -> BraidWord:
    """Pure classical word with ``act(0, word) == t`` for even, trace-zero t of length >= 3.

    Block j (j = 1..n-2) is B3 raised to the alternating partial sum
    e_j = a_j + e_{j-2} on columns j..j+2; a final A3 power on the last three
    columns fixes component n-1.  Here a = t / 2.
    """
    t = tuple(int(a) for a in t)
    n = len(t)
    if n < 3:
        raise UnsupportedDegree(f"need at least 3 strands, got {n}")
    if any(a % 2 for a in t):
        raise ValueError(f"all components must be even: {t}")
    if sum(t) != 0:
        raise ValueError(f"trace must be zero: {t}")
    blocks = default_blocks()
    a = [0] + [c // 2 for c in t]  # 1-based
    e = [0] * (n + 1)              # e[0] and e[-1] stand for e_0 = e_{-1} = 0
    pieces = []
    for j in range(1, n - 1):
        e[j] = a[j] + (e[j - 2] if j >= 2 else 0)
        pieces.append(embed(signed_power(blocks.B3, blocks.B3_star, e[j]), j - 1, n - j - 2))
    f = a[n - 1] + (e[n - 3] if n >= 4 else 0)
    pieces.append(embed(signed_power(blocks.A3, blocks.A3_star, f), n - 3, 0))
    word = product(pieces, n)
    if act((0,) * n, word) != t or not is_pure(word):
        raise ContractViolation(f"pure witness for {t} failed verification")
    return word


def make_irreducible(w: BraidWord, extra_rounds: int = 8) -> BraidWord:
    """Remove non-alternating bigons by inserting weaving braids, keeping the action unchanged."""
    if not is_classical(w):
        raise ValueError("make_irreducible expects a classical word")
    bigons = find_bigons(w)
    if not bigons:
        return w
    n = w.degree
    if n == 2:
        # weaving(2) is s1 S1 itself; degree-2 bigons cannot be woven away
        raise UnsupportedDegree("bigons in a 2-strand word cannot be removed by weaving insertion")
    ww, ws = weaving(n), weaving_star(n)
    candidates = [ww, ws, ww * ws, ws * ww]
    letters = w.letters
    for _ in range(len(bigons) + extra_rounds):
        if not bigons:
            return BraidWord(n, letters)
        target = bigons[0]
        trials = []
        for cand in candidates:
            trial = letters[:target.second] + cand.letters + letters[target.second:]
            shifted = target.second + len(cand)
            trial_bigons = find_bigons(trial)
            if not any(b.first == target.first and b.second == shifted for b in trial_bigons):
                trials.append((trial, trial_bigons))
        # a weaving tail can recreate a bigon with the same closing letter, so
        # prefer an insertion that actually lowers the count
        pick = next((t for t in trials if len(t[1]) < len(bigons)), None)
        if pick is None:
            pick = next((t for t in trials if len(t[1]) <= len(bigons)), None)
        if pick is None:
            raise MaxRepairExceeded(f"no insertion removes the bigon at {target}")
        letters, bigons = pick
    if bigons:
        raise MaxRepairExceeded(f"{len(bigons)} bigons left after repair")
    return BraidWord(n, letters)


def _transfer_chain(d: Sequence[int]) -> BraidWord:
    """Reducible word with ``act(0, word) == d`` for even, trace-zero d."""
    n = len(d)
    up, down = parse_word("S1 s1", 2), parse_word("s1 S1", 2)  # (2,-2) and (-2,2)
    pieces = []
    partial = 0
    for j in range(1, n):
        partial += d[j - 1]
        s_j = partial // 2
        block = up ** s_j if s_j >= 0 else down ** (-s_j)
        pieces.append(embed(block, j - 1, n - j - 1))
    return product(pieces, n)


def _degree2_irreducible(x: tuple[int, ...], y: tuple[int, ...]) -> BraidWord:
    for text in ("", "s1", "S1"):
        w = parse_word(text, 2)
        if act(x, w) == y:
            return w
    raise UnsupportedDegree(f"{y} is not reachable from {x} by an irreducible degree-2 word")


def witness_classical(x: Sequence[int], y: Sequence[int], irreducible: bool = False,
                      pure: bool = False) -> BraidWord:
    """A classical word carrying x to y.

    The word is a permutation braid matching Type-I/Type-II positions followed
    by a pure correction.  With ``irreducible`` the correction is the block
    assembly of :func:`pure_witness_theorem` and the junctions are repaired.
    """
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)}")
    n = len(x)
    if not in_orbit(x, y, OrbitFlavor(CLASSICAL, pure=pure)):
        raise NotInOrbit(f"{y} is not in the classical{' pure' if pure else ''} orbit of {x}")
    if n == 1:
        return identity(1)
    if n == 2 and irreducible:
        w = identity(2) if pure and x == y else _degree2_irreducible(x, y)
        if pure and not is_pure(w):
            raise UnsupportedDegree(f"{y} is not reachable from {x} by an irreducible pure degree-2 word")
        return w

    gamma = identity(n) if pure else permutation_braid(type_matching_permutation(x, y))
    z = act(x, gamma)
    d = tuple(b - a for a, b in zip(z, y))
    if irreducible:
        word = make_irreducible(concat(gamma, pure_witness_theorem(d)))
    else:
        word = concat(gamma, _transfer_chain(d))
    if act(x, word) != y:
        raise ContractViolation(f"classical witness for {x} -> {y} failed verification")
    if irreducible and not is_irreducible(word):
        raise ContractViolation("repaired witness still has bigons")
    return word


def witness_virtual(x: Sequence[int], y: Sequence[int]) -> BraidWord:
    """Pure irreducible virtual word carrying x to y (equal traces required)."""
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)}")
    if trace(x) != trace(y):
        raise NotInOrbit(f"traces differ: {trace(x)} vs {trace(y)}")
    n = len(x)
    if n == 1:
        return identity(1)
    blocks = default_blocks()
    pieces = []
    partial = 0
    for j in range(1, n):
        partial += y[j - 1] - x[j - 1]
        block = blocks.VB ** partial if partial >= 0 else blocks.VA ** (-partial)
        pieces.append(embed(block, j - 1, n - j - 1))
    word = product(pieces, n)
    if act(x, word) != y or not is_pure(word) or not is_irreducible(word):
        raise ContractViolation(f"virtual witness for {x} -> {y} failed verification")
    return word


def virtual_block_sequence(x: Sequence[int], y: Sequence[int]) -> list[tuple[str, int, int]]:
    """(block name, exponent, left offset) for each nonempty block of :func:`witness_virtual`."""
    seq = []
    partial = 0
    for j in range(1, len(x)):
        partial += y[j - 1] - x[j - 1]
        if partial:
            seq.append(("VB" if partial > 0 else "VA", abs(partial), j - 1))
    return seq


@dataclass(frozen=True)
class ClosureVerdict:
    admits: bool
    witness: ColorVector | None
    cycle_report: tuple[tuple[tuple[int, ...], int], ...]  # (cycle, sum of r_i - c_i)

    def to_dict(self) -> dict:
        return {
            "admits": self.admits,
            "witness": list(self.witness) if self.witness is not None else None,
            "cycles": [{"cycle": list(c), "sum": s} for c, s in self.cycle_report],
        }


def closure_admits(w: BraidWord) -> ClosureVerdict:
    """Decide whether the closure of ``w`` has an up-down colouring, i.e. ``w`` has a fixed point."""
    m = ou_matrix(w)
    d = [r - c for r, c in zip(m.row_sums(), m.col_sums())]
    pi = permutation_of(w)
    report = tuple((cyc, sum(d[i - 1] for i in cyc)) for cyc in pi.cycles())
    if any(total for _, total in report):
        return ClosureVerdict(False, None, report)
    x = [0] * w.degree
    for cyc in pi.cycles():
        for i in cyc[:-1]:
            x[pi(i) - 1] = x[i - 1] + d[i - 1]
    witness = tuple(x)
    if act(witness, w) != witness:
        raise ContractViolation(f"closure witness {witness} is not fixed by {w}")
    return ClosureVerdict(True, witness, report)
