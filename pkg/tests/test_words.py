import random

import pytest
from hypothesis import given, strategies as st

from oracles import least_rotation_brute
from simplelift.words import (CyclicWord, InvalidCharacter, Letter, RankMismatch, TrivialWord,
                              gamma_n, invert, least_rotation, parse, power_root, render)

raw_words = st.text(alphabet="aAbB", min_size=1, max_size=14)


def test_parse_examples():
    assert str(parse("ab", 2)) == "ab"
    assert str(parse("Bab", 2)) == "a"
    with pytest.raises(TrivialWord):
        parse("aA", 2)


def test_parse_rejects_bad_characters():
    with pytest.raises(InvalidCharacter):
        parse("ac", 2)
    with pytest.raises(InvalidCharacter):
        parse("a1", 2)
    with pytest.raises(TrivialWord):
        parse("", 2)


def test_canonical_rotation_order():
    # a < A < b < B
    assert str(parse("ba")) == "ab"
    assert str(parse("bA")) == "Ab"
    assert str(parse("BAba")) == str(parse("aBAb"))
    assert str(parse("BAba")) == "aBAb"


def test_power_root_examples():
    assert power_root(parse("abab")) == (parse("ab"), 2)
    assert power_root(parse("a")) == (parse("a"), 1)
    assert power_root(parse("aabaab")) == (parse("aab"), 2)


def test_invert_examples():
    assert invert(parse("ab")) == parse("BA")
    assert str(invert(parse("a"))) == "A"
    w = parse("abbAb")
    assert invert(invert(w)) == w


def test_gamma_n_examples():
    assert str(gamma_n(0)) == "a"
    assert str(gamma_n(1)) == "ab"
    assert str(gamma_n(4)) == "abbbb"
    with pytest.raises(ValueError):
        gamma_n(-1)


def test_rank_is_carried():
    assert parse("abc", 3).rank == 3
    with pytest.raises(InvalidCharacter):
        parse("abc", 2)
    with pytest.raises(RankMismatch):
        CyclicWord((Letter(0), Letter(2)), 2)
    assert parse("ab", 2) != parse("ab", 3)


def test_least_rotation_matches_brute_force():
    rng = random.Random(7)
    for _ in range(3000):
        seq = [rng.randrange(3) for _ in range(rng.randint(1, 12))]
        k = least_rotation(seq)
        assert seq[k:] + seq[:k] == least_rotation_brute(seq)


@given(raw_words)
def test_render_parse_roundtrip(text):
    try:
        w = parse(text)
    except TrivialWord:
        return
    assert parse(render(w)) == w


@given(raw_words, st.integers(min_value=0, max_value=20))
def test_rotation_invariance(text, k):
    try:
        w = parse(text)
    except TrivialWord:
        return
    s = render(w)
    k %= len(s)
    assert parse(s[k:] + s[:k]) == w


@given(raw_words)
def test_root_is_not_a_power(text):
    try:
        w = parse(text)
    except TrivialWord:
        return
    root, k = power_root(w)
    assert power_root(root) == (root, 1)
    assert parse(render(root) * k) == w


@given(raw_words)
def test_word_is_reduced(text):
    try:
        w = parse(text)
    except TrivialWord:
        return
    letters = w.letters
    n = len(letters)
    for i in range(n if n > 1 else 0):
        assert letters[i] != letters[(i + 1) % n].inverse()
