import pytest
from hypothesis import given, strategies as st

from braidorbit.braid_core import (
    BraidWord, Kind, Letter, concat, embed, identity, is_classical, is_pure, mirror, parse_word, permutation_of, reverse,
)
from braidorbit.families import permutation_braid, weaving
from braidorbit.updown import (
    LengthMismatch, act, act_via_ou, full_coloring, is_isotropy, ou_matrix, strand_counts,
)

from conftest import strand_oracle_act, trace_strands, vectors, word_and_vector, words


def test_act_values():
    assert act((0, 0), parse_word("s1")) == (1, -1)
    assert act((0, 0), parse_word("s1 S1")) == (-2, 2)
    assert act((0, 0), parse_word("S1 s1")) == (2, -2)
    assert act((0, 0, 0), parse_word("s1 s2")) == (1, 1, -2)
    assert act((5, -2, 0), identity(3)) == (5, -2, 0)


@pytest.mark.parametrize("c", range(1, 6))
def test_degree_two_powers(c):
    assert act((0, 0), parse_word("s1 S1") ** c) == (-2 * c, 2 * c)
    assert act((0, 0), parse_word("S1 s1") ** c) == (2 * c, -2 * c)
    assert act((0, 0), parse_word("s1") ** (2 * c)) == (0, 0)
    assert act((0, 0), parse_word("s1") ** (2 * c - 1)) == (1, -1)


def test_act_length_mismatch():
    with pytest.raises(LengthMismatch):
        act((0, 0), parse_word("s1 s2"))


@given(word_and_vector())
def test_act_matches_strand_oracle(wx):
    w, x = wx
    assert act(x, w) == strand_oracle_act(x, w)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(words(degree=n), words(degree=n), vectors(n))))
def test_action_law(uvx):
    u, w, x = uvx
    assert act(x, concat(u, w)) == act(act(x, u), w)


@given(word_and_vector())
def test_trace_conserved(wx):
    w, x = wx
    assert sum(act(x, w)) == sum(x)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(words(degree=n), words(degree=n))))
def test_composition_formula(uv):
    u, w = uv
    n = u.degree
    y, z = act((0,) * n, u), act((0,) * n, w)
    inv = permutation_of(w).inverse()
    assert act((0,) * n, concat(u, w)) == tuple(y[inv(k) - 1] + z[k - 1] for k in range(1, n + 1))


@given(word_and_vector())
def test_shift_relation(wx):
    w, x = wx
    inv = permutation_of(w).inverse()
    zero = act((0,) * w.degree, w)
    assert act(x, w) == tuple(x[inv(k) - 1] + zero[k - 1] for k in range(1, w.degree + 1))


@given(words(virtual=False))
def test_parity_of_crossing_counts(w):
    pos, overs, unders = trace_strands(w)
    y = act((0,) * w.degree, w)
    for s in range(w.degree):
        assert (y[pos[s] - 1] - (overs[s] + unders[s])) % 2 == 0


@given(word_and_vector(virtual=False))
def test_pure_classical_preserves_parity(wx):
    w, x = wx
    if is_pure(w):
        assert all((b - a) % 2 == 0 for a, b in zip(x, act(x, w)))


@given(word_and_vector())
def test_reversal_undoes(wx):
    w, x = wx
    assert act(act(x, w), reverse(w)) == x


@given(words())
def test_mirror_negates_zero_orbit(w):
    zero = (0,) * w.degree
    assert act(zero, mirror(w)) == tuple(-a for a in act(zero, w))


def test_embed_locality():
    y1, y2 = act((0, 0), parse_word("s1"))
    assert act((0, 0, 0, 0), embed(parse_word("s1"), 1, 1)) == (0, y1, y2, 0)


# ---- colourings ------------------------------------------------------------

def test_full_coloring_examples():
    col = full_coloring((0, 0), parse_word("s1"))
    assert col.strands == ((0, -1), (0, 1))
    assert full_coloring((3, 4, 5), identity(3)).strands == ((3,), (4,), (5,))
    assert full_coloring((0, 0), parse_word("v1")).strands == ((0,), (0,))


@given(word_and_vector())
def test_coloring_invariants(wx):
    w, x = wx
    col = full_coloring(x, w)
    _, overs, unders = trace_strands(w)
    for i, labels in enumerate(col.strands):
        assert labels[0] == x[i]
        assert len(labels) == overs[i] + unders[i] + 1
        assert all(abs(b - a) == 1 for a, b in zip(labels, labels[1:]))
    assert col.bottom() == act(x, w)


# ---- OU matrix -------------------------------------------------------------

def test_ou_examples():
    assert ou_matrix(identity(3)).rows == ((0, 0, 0),) * 3
    m = ou_matrix(parse_word("s1 s2"))
    assert m.rows == ((0, 0, 0), (1, 0, 0), (1, 0, 0))
    assert m.row_sums() == (0, 1, 1) and m.col_sums() == (2, 0, 0)
    assert ou_matrix(parse_word("s1 v1 s1")).rows == ((0, 0), (2, 0))


@given(words())
def test_ou_invariants(w):
    m = ou_matrix(w)
    assert all(m[i, i] == 0 for i in range(1, w.degree + 1))
    assert m.total() == sum(1 for l in w if l.classical)


def test_strand_counts_examples():
    assert strand_counts(parse_word("s1 s2")) == ((0, 2), (1, 0), (1, 0))
    assert strand_counts(identity(3)) == ((0, 0),) * 3
    assert strand_counts(parse_word("s1 S1")) == ((0, 2), (2, 0))


@given(words())
def test_strand_counts_match_tracing(w):
    _, overs, unders = trace_strands(w)
    assert strand_counts(w) == tuple(zip(overs, unders))


def test_act_via_ou_examples():
    assert act_via_ou((0, 0, 0), parse_word("s1 s2")) == (1, 1, -2)
    assert act_via_ou((7, 8, 9), identity(3)) == (7, 8, 9)


@given(word_and_vector())
def test_act_via_ou_agrees(wx):
    w, x = wx
    assert act_via_ou(x, w) == act(x, w)


def test_isotropy_examples():
    assert is_isotropy(weaving(5))
    assert not is_isotropy(parse_word("s1"))
    sandwich = concat(permutation_braid(permutation_of(parse_word("s1 s2 s1 s3", 4))),
                      permutation_braid(permutation_of(parse_word("s1 s2 s1 s3", 4)).inverse()))
    assert is_pure(sandwich) and is_isotropy(sandwich)


@given(words())
def test_isotropy_iff_fixes_zero(w):
    assert is_isotropy(w) == (act((0,) * w.degree, w) == (0,) * w.degree)


@given(words(virtual=False, max_len=10))
def test_positive_pure_ou_symmetric(w):
    # squaring a positive word makes a positive word; closing it up with a permutation braid
    # pair keeps it positive and makes it pure
    positive = BraidWord(w.degree, tuple(Letter(Kind.POSITIVE, l.index) for l in w))
    pi = permutation_of(positive)
    pure = concat(positive, permutation_braid(pi.inverse()))
    assert is_pure(pure) and is_classical(pure)
    assert ou_matrix(pure).is_symmetric()


def test_arbitrary_precision():
    big = 10 ** 30
    assert act((big, -big), parse_word("s1")) == (-big + 1, big - 1)
