"""Compatibility graph over {0,1,*}^d: edges join vectors at distance 1..k.

Cliques of this graph are exactly the k-neighborly families, so maximum
family search is maximum clique search here.  Adjacency is stored one
bit mask per vertex; vertex order is lexicographic over the symbols
0 < 1 < *, which keeps every downstream result reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List

from ..core import Family, JokerVector
from ..errors import DomainError, ResourceError
from . import _kernel

DEFAULT_MEMORY_BUDGET = 256 * 1024 * 1024


@dataclass(frozen=True)
class CompatGraph:
    """All 3^d joker vectors with distance-in-{1..k} adjacency bit rows."""

    d: int
    k: int
    vectors: List[JokerVector]
    adjacency: List[int]

    @property
    def n(self) -> int:
        return len(self.vectors)

    def index_of(self) -> Dict[JokerVector, int]:
        return {v: i for i, v in enumerate(self.vectors)}

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def family_of(self, indices, validate: bool = True) -> Family:
        members = [self.vectors[i] for i in indices]
        fam = Family.of(self.d, self.k, members)
        return fam.validate() if validate else fam

    def all_joker_index(self) -> int:
        return self.vectors.index(JokerVector(self.d, 0, (1 << self.d) - 1))


def build_graph(k: int, d: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> CompatGraph:
    """Enumerate {0,1,*}^d in lexicographic order and fill the adjacency rows.

    The adjacency matrix needs about n^2/8 bytes for n = 3^d; builds that
    would exceed ``memory_budget`` raise ResourceError instead of thrashing.
    """
    if not 1 <= k <= d:
        raise DomainError(f"need 1 <= k <= d, got k={k} d={d}")
    n = 3**d
    if n * n // 8 > memory_budget:
        raise ResourceError(
            f"adjacency for d={d} needs ~{n * n // 8} bytes, budget is {memory_budget}"
        )
    vectors = [JokerVector.from_string("".join(word)) for word in product("01*", repeat=d)]
    values = [v.bits for v in vectors]
    jokers = [v.jokers for v in vectors]
    adjacency = _kernel.build_adjacency(values, jokers, k)
    return CompatGraph(d, k, vectors, adjacency)


def degeneracy_order(adjacency: List[int], n: int) -> List[int]:
    """Vertices in smallest-last (degeneracy) order; ties break by index."""
    degs = [adjacency[i].bit_count() for i in range(n)]
    alive = set(range(n))
    order = []
    for _ in range(n):
        v = min(alive, key=lambda x: (degs[x], x))
        alive.remove(v)
        order.append(v)
        row = adjacency[v]
        while row:
            low = row & -row
            u = low.bit_length() - 1
            if u in alive:
                degs[u] -= 1
            row ^= low
    return order


def relabel(adjacency: List[int], order: List[int]) -> List[int]:
    """Adjacency rows after renaming vertex order[i] to i."""
    n = len(order)
    pos = [0] * n
    for new, old in enumerate(order):
        pos[old] = new
    rows = [0] * n
    for old in range(n):
        row = adjacency[old]
        new_row = 0
        while row:
            low = row & -row
            new_row |= 1 << pos[low.bit_length() - 1]
            row ^= low
        rows[pos[old]] = new_row
    return rows
