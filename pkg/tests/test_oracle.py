import random

import numpy as np
import pytest

from braidorbit.braid_core import find_bigons, is_pure, parse_word
from braidorbit.oracle import (
    SearchSpec, alphabet, enumerate_words, fixed_points_in_box, random_vector, random_word,
    reachable_set,
)
from braidorbit.orbits import OrbitFlavor, in_orbit
from braidorbit.updown import LengthMismatch, act


def test_alphabet_order():
    assert [str(l) for l in alphabet(3, "virtual")] == ["s1", "S1", "v1", "s2", "S2", "v2"]
    assert len(alphabet(4)) == 6


def test_enumerate_small():
    assert [str(w) for w in enumerate_words(SearchSpec(2, max_length=1))] == ["", "s1", "S1"]
    assert sum(1 for _ in enumerate_words(SearchSpec(3, max_length=2))) == 1 + 4 + 16


def test_enumerate_irreducible_degree_two():
    got = {str(w) for w in enumerate_words(SearchSpec(2, require_irreducible=True, max_length=3))}
    assert got == {"", "s1", "s1 s1", "s1 s1 s1", "S1", "S1 S1", "S1 S1 S1"}


def test_enumerate_filters():
    spec = SearchSpec(3, world="virtual", require_irreducible=True, require_pure=True, max_length=4)
    for w in enumerate_words(spec):
        assert is_pure(w) and not find_bigons(w)


def test_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(0)
    with pytest.raises(ValueError):
        SearchSpec(2, world="quantum")
    with pytest.raises(LengthMismatch):
        reachable_set((0, 0), SearchSpec(3))


def test_reachable_degree_two():
    irr = reachable_set((0, 0), SearchSpec(2, require_irreducible=True, max_length=8))
    assert irr == {(0, 0), (1, -1), (-1, 1)}
    full = reachable_set((0, 0), SearchSpec(2, max_length=4))
    assert all(a + b == 0 for a, b in full)
    assert {(1, -1), (-1, 1), (2, -2), (-2, 2)} <= full


def test_reachable_virtual_degree_three():
    got = reachable_set((0, 0, 0), SearchSpec(3, world="virtual", max_length=8, bound=2))
    want = {(a, b, -a - b) for a in range(-2, 3) for b in range(-2, 3) if abs(a + b) <= 2}
    assert got == want


def test_reachable_monotone_and_sound():
    x = (1, -2, 0)
    prev = set()
    for L in range(5):
        cur = reachable_set(x, SearchSpec(3, max_length=L))
        assert prev <= cur
        assert all(in_orbit(x, y) for y in cur)
        prev = cur


def test_reachable_pure_sound():
    x = (0, 0, 0)
    got = reachable_set(x, SearchSpec(3, require_pure=True, max_length=6))
    assert (2, 0, -2) in got
    assert all(in_orbit(x, y, OrbitFlavor("classical", pure=True)) for y in got)


def test_reachable_matches_word_enumeration():
    x = (0, 1, 0)
    spec = SearchSpec(3, max_length=4)
    assert reachable_set(x, spec) == {act(x, w) for w in enumerate_words(spec)}
    spec = SearchSpec(3, require_pure=True, max_length=4)
    assert reachable_set(x, spec) == {act(x, w) for w in enumerate_words(spec)}


def test_fixed_points():
    pts = fixed_points_in_box(parse_word("s1 s2", 3), 3)
    assert pts.shape[1] == 3
    assert any((row == np.array([0, -1, -2])).all() for row in pts)
    for row in pts:
        assert act(tuple(int(a) for a in row), parse_word("s1 s2", 3)) == tuple(int(a) for a in row)
    assert len(fixed_points_in_box(parse_word("s1 v1"), 4)) == 0


def test_random_helpers():
    rng = random.Random(0)
    w = random_word(rng, 4, 10, positive=True)
    assert len(w) == 10 and all(l.kind.value == "s" for l in w)
    assert random_word(rng, 1, 5).letters == ()
    assert all(-3 <= a <= 3 for a in random_vector(rng, 6, -3, 3))
