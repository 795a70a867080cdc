import random

import pytest
from hypothesis import settings, strategies as st

from braidorbit.braid_core import BraidWord, Kind, Letter

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

CLASSICAL_KINDS = [Kind.POSITIVE, Kind.NEGATIVE]
ALL_KINDS = CLASSICAL_KINDS + [Kind.VIRTUAL]


@st.composite
def words(draw, min_degree=1, max_degree=6, max_len=20, virtual=True, degree=None):
    n = degree if degree is not None else draw(st.integers(min_degree, max_degree))
    if n == 1:
        return BraidWord(1, ())
    kinds = ALL_KINDS if virtual else CLASSICAL_KINDS
    letters = draw(st.lists(st.builds(Letter, st.sampled_from(kinds), st.integers(1, n - 1)),
                            max_size=max_len))
    return BraidWord(n, tuple(letters))


def vectors(n, lo=-50, hi=50):
    return st.tuples(*[st.integers(lo, hi) for _ in range(n)])


@st.composite
def word_and_vector(draw, **kw):
    w = draw(words(**kw))
    return w, draw(vectors(w.degree))


# ---- independent oracles -------------------------------------------------

def brute_bigons(letters):
    """Bigons straight from the definition, O(L^2)."""
    out = []
    for p, a in enumerate(letters):
        if a.kind is Kind.VIRTUAL:
            continue
        for q in range(p + 1, len(letters)):
            b = letters[q]
            if b.index == a.index and b.kind is not Kind.VIRTUAL and b.kind is not a.kind:
                if all(abs(letters[r].index - a.index) >= 2 for r in range(p + 1, q)):
                    out.append((p, q, a.index))
    return out


def trace_strands(w):
    """Follow every strand through the diagram.

    Returns (bottom position of each top strand, overs, unders) computed by
    moving strands around rather than by sweeping column values.
    """
    n = w.degree
    pos = list(range(1, n + 1))  # pos[s] = current column of top strand s+1
    overs = [0] * n
    unders = [0] * n
    for kind, i in w.letters:
        left = pos.index(i)
        right = pos.index(i + 1)
        if kind is Kind.POSITIVE:
            overs[right] += 1
            unders[left] += 1
        elif kind is Kind.NEGATIVE:
            overs[left] += 1
            unders[right] += 1
        pos[left], pos[right] = i + 1, i
    return pos, overs, unders


def strand_oracle_act(x, w):
    pos, overs, unders = trace_strands(w)
    y = [None] * w.degree
    for s in range(w.degree):
        y[pos[s] - 1] = x[s] + overs[s] - unders[s]
    return tuple(y)


def random_in_orbit_pair(rng: random.Random, n: int, lo=-20, hi=20):
    """(x, y) with equal trace and Type-I count, built without using the action."""
    x = [rng.randint(lo, hi) for _ in range(n)]
    types = [(i + a) % 2 for i, a in enumerate(x, start=1)]
    rng.shuffle(types)
    y = []
    for j, t in enumerate(types, start=1):
        want = (j + t) % 2  # required parity of y_j
        v = rng.randint(lo, hi)
        y.append(v if v % 2 == want else v + 1)
    k = rng.randrange(n)
    y[k] += sum(x) - sum(y)  # even correction keeps the parity pattern
    return tuple(x), tuple(y)


# ---- acceptance report ----------------------------------------------------

_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    def record(label: str, ok: bool, detail: str = ""):
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
