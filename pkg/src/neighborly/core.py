"""Vectors over {0, 1, *} and the pairwise-distance constraint.

A joker vector of length d is a word over the alphabet {0, 1, *}; the *
symbol (the "joker") is a wildcard that never contributes to Hamming
distance.  A set of joker vectors whose pairwise distances all lie in
{1, ..., k} is exactly a k-neighborly family in the box picture, so this
module is the data model everything else builds on.

Vectors are stored as two parallel bit masks (values and joker positions)
so that distances reduce to a couple of word operations; the search module
evaluates millions of them.  Bit i of a mask corresponds to coordinate i,
i.e. to character i of the string form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional, Tuple

from .errors import DimensionError, DomainError, ValidationError

SYMBOLS = "01*"


@dataclass(frozen=True, order=True)
class JokerVector:
    """Immutable word over {0,1,*}; ``bits`` holds the 1-positions, ``jokers`` the *-positions."""

    d: int
    bits: int
    jokers: int

    def __post_init__(self):
        if self.d < 1:
            raise DimensionError(f"vector length must be >= 1, got {self.d}")
        full = (1 << self.d) - 1
        if self.bits & ~full or self.jokers & ~full:
            raise DimensionError("mask bits beyond the vector length")
        if self.bits & self.jokers:
            raise DimensionError("a position cannot be both 1 and joker")

    @classmethod
    def from_string(cls, word: str) -> "JokerVector":
        bits = jokers = 0
        for i, ch in enumerate(word):
            if ch == "1":
                bits |= 1 << i
            elif ch == "*":
                jokers |= 1 << i
            elif ch != "0":
                raise DomainError(f"invalid symbol {ch!r} in {word!r}")
        return cls(len(word), bits, jokers)

    @classmethod
    def from_bits(cls, d: int, bits: int) -> "JokerVector":
        """Binary vector (no jokers) from an integer bit mask."""
        return cls(d, bits, 0)

    def __str__(self) -> str:
        out = []
        for i in range(self.d):
            if self.jokers >> i & 1:
                out.append("*")
            else:
                out.append("1" if self.bits >> i & 1 else "0")
        return "".join(out)

    def __repr__(self) -> str:
        return f"JokerVector({str(self)!r})"

    @property
    def joker_count(self) -> int:
        return self.jokers.bit_count()

    @property
    def is_binary(self) -> bool:
        return self.jokers == 0

    def concat(self, other: "JokerVector") -> "JokerVector":
        return JokerVector(
            self.d + other.d,
            self.bits | other.bits << self.d,
            self.jokers | other.jokers << self.d,
        )


def _check_same_length(u: JokerVector, v: JokerVector) -> None:
    if u.d != v.d:
        raise DimensionError(f"length mismatch: {u.d} vs {v.d}")


def _check_binary(v: JokerVector, what: str = "operand") -> None:
    if v.jokers:
        raise DimensionError(f"{what} must be a binary vector, got {v}")


def hamming_distance(u: JokerVector, v: JokerVector) -> int:
    """Number of positions where u and v differ and neither holds a joker."""
    _check_same_length(u, v)
    return ((u.bits ^ v.bits) & ~(u.jokers | v.jokers)).bit_count()


def covers(u: JokerVector, v: JokerVector) -> bool:
    """True iff u agrees with binary v on every non-joker position of u."""
    _check_same_length(u, v)
    _check_binary(v, "covered vector")
    return (u.bits ^ v.bits) & ~u.jokers == 0


def complement(v: JokerVector) -> JokerVector:
    """Flip every bit of a binary vector."""
    _check_binary(v)
    return JokerVector(v.d, v.bits ^ ((1 << v.d) - 1), 0)


def join(v: JokerVector, u: JokerVector) -> JokerVector:
    """Coordinate-wise OR of two binary vectors."""
    _check_same_length(v, u)
    _check_binary(v)
    _check_binary(u)
    return JokerVector(v.d, v.bits | u.bits, 0)


def covered_vectors(u: JokerVector) -> Iterator[JokerVector]:
    """All 2^t binary vectors covered by u (t = joker count of u)."""
    base = u.bits
    jm = u.jokers
    sub = 0
    while True:
        yield JokerVector(u.d, base | sub, 0)
        if sub == jm:
            return
        sub = (sub - jm) & jm


class NeighborlyCheck(NamedTuple):
    """Outcome of a pairwise-distance check; falsy when a pair violates it."""

    ok: bool
    pair: Optional[Tuple[JokerVector, JokerVector]]
    distance: Optional[int]

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Family:
    """A set of equal-length joker vectors with the distance-in-{1..k} contract attached.

    A freshly built Family is unchecked; ``validate()`` returns a copy marked
    validated after verifying every pair.  Operations that rely on the
    pairwise constraint (cover profiles, audits) require a validated family.
    """

    d: int
    k: int
    members: frozenset[JokerVector]
    validated: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not 1 <= self.k <= self.d:
            raise DomainError(f"need 1 <= k <= d, got k={self.k} d={self.d}")
        for m in self.members:
            if m.d != self.d:
                raise DimensionError(f"member {m} has length {m.d}, family has d={self.d}")

    @classmethod
    def of(cls, d: int, k: int, members: Iterable[JokerVector], validated: bool = False) -> "Family":
        return cls(d, k, frozenset(members), validated)

    @classmethod
    def from_strings(cls, d: int, k: int, words: Iterable[str]) -> "Family":
        return cls.of(d, k, (JokerVector.from_string(w) for w in words))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[JokerVector]:
        return iter(self.members)

    def sorted_members(self) -> list[JokerVector]:
        """Members in the deterministic output order (string form, 0 < 1 < *)."""
        return sorted(self.members, key=_vector_sort_key)

    def check(self) -> NeighborlyCheck:
        return is_k_neighborly(self)

    def validate(self) -> "Family":
        """Return a validated copy, or raise ValidationError naming a bad pair."""
        res = self.check()
        if not res:
            u, v = res.pair
            raise ValidationError(
                f"pair ({u}, {v}) has distance {res.distance}, outside 1..{self.k}"
            )
        return Family(self.d, self.k, self.members, validated=True)


def _vector_sort_key(v: JokerVector) -> Tuple[int, ...]:
    order = {"0": 0, "1": 1, "*": 2}
    return tuple(order[c] for c in str(v))


def is_k_neighborly(family: Family) -> NeighborlyCheck:
    """Check every unordered pair of distinct members for distance in {1..k}.

    Families of size 0 or 1 pass vacuously.  On failure the returned record
    carries one witnessing pair and its distance.
    """
    members = family.sorted_members()
    k = family.k
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            dist = hamming_distance(u, v)
            if not 1 <= dist <= k:
                return NeighborlyCheck(False, (u, v), dist)
    return NeighborlyCheck(True, None, None)
