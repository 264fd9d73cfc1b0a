"""Exhaustive-subset oracle for tiny dimensions.

Enumerates every subset of the 3^d vertices, so it is only usable for
d <= 2 (at most 512 subsets); the solver's results are checked against it
exactly there.
"""

from __future__ import annotations

from ..core import Family, hamming_distance
from ..errors import DomainError
from .graph import build_graph


def max_family_bruteforce(k: int, d: int) -> tuple[int, Family]:
    """Maximum k-neighborly family by trying all vertex subsets."""
    if d > 2:
        raise DomainError(f"brute force enumerates 2^(3^d) subsets; d={d} is too large")
    graph = build_graph(k, d)
    vectors = graph.vectors
    n = len(vectors)
    best_size = 0
    best_subset = 0
    for subset in range(1 << n):
        size = subset.bit_count()
        if size <= best_size:
            continue
        chosen = [vectors[i] for i in range(n) if subset >> i & 1]
        ok = True
        for a in range(len(chosen)):
            for b in range(a + 1, len(chosen)):
                if not 1 <= hamming_distance(chosen[a], chosen[b]) <= k:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best_size = size
            best_subset = subset
    members = [vectors[i] for i in range(n) if best_subset >> i & 1]
    return best_size, Family.of(d, k, members).validate()
