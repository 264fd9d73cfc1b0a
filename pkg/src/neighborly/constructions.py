"""Generators for the extremal configurations.

Everything here returns plain sets of vectors or validated families:
Hamming balls, the isodiametric extremal set, Cartesian products, the
staircase distance-1 code, the block product realizing the product lower
bound, and the {11,10,0*} x cube family attaining n(d-1, d).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Set

from .core import Family, JokerVector
from .errors import DimensionError, DomainError
from .bounds import b_config_size


def hamming_ball(d: int, t: int, center: JokerVector) -> Set[JokerVector]:
    """All binary vectors within distance t of a binary center."""
    if not 0 <= t <= d:
        raise DomainError(f"radius {t} out of range for d={d}")
    if center.d != d:
        raise DimensionError(f"center has length {center.d}, expected {d}")
    if center.jokers:
        raise DimensionError("ball center must be binary")
    out = set()
    for r in range(t + 1):
        for flips in combinations(range(d), r):
            mask = 0
            for i in flips:
                mask |= 1 << i
            out.add(JokerVector(d, center.bits ^ mask, 0))
    return out


def zero_vector(d: int) -> JokerVector:
    return JokerVector(d, 0, 0)


def b_config(k: int, d: int) -> Set[JokerVector]:
    """The extremal diameter-k binary configuration B_k in dimension d.

    Even k = 2t: the radius-t ball around 0.  Odd k = 2t+1: {0,1} times
    the radius-t ball around 0 in dimension d-1.
    """
    if not 0 <= k <= d:
        raise DomainError(f"need 0 <= k <= d, got k={k} d={d}")
    t, odd = divmod(k, 2)
    if odd:
        bit = {JokerVector.from_string("0"), JokerVector.from_string("1")}
        if d == 1:
            out = bit
        else:
            out = cartesian(bit, hamming_ball(d - 1, t, zero_vector(d - 1)))
    else:
        out = hamming_ball(d, t, zero_vector(d))
    assert len(out) == b_config_size(k, d)
    return out


def cartesian(xs: Iterable[JokerVector], ys: Iterable[JokerVector]) -> Set[JokerVector]:
    """All concatenations (x, y); sizes multiply."""
    xs = set(xs)
    ys = set(ys)
    if len({x.d for x in xs}) > 1 or len({y.d for y in ys}) > 1:
        raise DimensionError("ragged input lengths in Cartesian product")
    return {x.concat(y) for x in xs for y in ys}


def staircase_code(m: int) -> Set[JokerVector]:
    """The m+1 vectors 1^j 0 *^(m-1-j) (j < m) plus 1^m; pairwise distance exactly 1."""
    if m < 1:
        raise DomainError(f"staircase block size must be >= 1, got {m}")
    words = ["1" * j + "0" + "*" * (m - 1 - j) for j in range(m)]
    words.append("1" * m)
    return {JokerVector.from_string(w) for w in words}


def alon_product(k: int, d: int) -> Family:
    """Product of k staircase blocks realizing the product lower bound.

    Block i has size floor((d+i)/k); the sizes sum to d and the product of
    (size+1) is alon_lower(k, d).  Distinct members differ in 1..k blocks,
    each contributing distance exactly 1.
    """
    if not 1 <= k <= d:
        raise DomainError(f"need 1 <= k <= d, got k={k} d={d}")
    blocks = [staircase_code((d + i) // k) for i in range(k)]
    acc = blocks[0]
    for blk in blocks[1:]:
        acc = cartesian(acc, blk)
    return Family.of(d, k, acc, validated=True)


def extremal_dminus1_family(d: int) -> Family:
    """The family {11, 10, 0*} x {0,1}^(d-2) attaining n(d-1, d) = 3*2^(d-2)."""
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    seed = {JokerVector.from_string(w) for w in ("11", "10", "0*")}
    if d == 2:
        members = seed
    else:
        cube = {JokerVector(d - 2, bits, 0) for bits in range(1 << (d - 2))}
        members = cartesian(seed, cube)
    return Family.of(d, d - 1, members, validated=True)


def b_config_family(k: int, d: int) -> Family:
    """b_config viewed as an all-binary family (distinct binaries are >= 1 apart)."""
    if not 1 <= k <= d:
        raise DomainError(f"need 1 <= k <= d, got k={k} d={d}")
    return Family.of(d, k, b_config(k, d), validated=True)
