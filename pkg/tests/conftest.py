"""Shared helpers: vector builders and independent mini-oracles."""

from __future__ import annotations

import pytest

from neighborly.core import Family, JokerVector


def jv(word: str) -> JokerVector:
    return JokerVector.from_string(word)


def fam(d: int, k: int, *words: str) -> Family:
    return Family.from_strings(d, k, words)


def pascal_binomial(n: int, k: int) -> int:
    """Binomial via Pascal's triangle; independent of math.comb."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def naive_distance(a: str, b: str) -> int:
    """Reference Hamming distance straight off the definition."""
    assert len(a) == len(b)
    return sum(
        1 for x, y in zip(a, b) if x != "*" and y != "*" and x != y
    )


def all_binaries(d: int) -> list[JokerVector]:
    return [JokerVector(d, bits, 0) for bits in range(1 << d)]


def all_joker_vectors(d: int) -> list[JokerVector]:
    from itertools import product

    return [JokerVector.from_string("".join(w)) for w in product("01*", repeat=d)]


@pytest.fixture
def tmp_family_file(tmp_path):
    def write(text: str):
        path = tmp_path / "family.txt"
        path.write_text(text)
        return str(path)

    return write
