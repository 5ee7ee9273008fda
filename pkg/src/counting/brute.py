# Copyright 2025 Badcompany
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Exhaustive perfect-matching counter.

Vertices are re-indexed densely and subgraphs are bitmasks over those
indices, so the memo key of a subproblem is exactly its vertex set.
"""

import logging
import sys
from typing import Callable, Dict, Generic, Iterator, List, TypeVar

from src.dualgraph import DualGraph

from .weightpoly import WeightPoly

logger = logging.getLogger(__name__)

T = TypeVar("T")

_MIN_RECURSION_LIMIT = 10000


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class MatchingCounter(Generic[T]):
    """
    Sum over perfect matchings of the product of edge values.

    `edge_value` maps an edge's weight exponent to a semiring element; with
    `lambda k: 1` this counts matchings, with `WeightPoly.monomial` it builds
    the generating polynomial.
    """

    def __init__(self, g: DualGraph, one: T, zero: T, edge_value: Callable[[int], T]):
        # sweep order keeps branching local
        order = sorted(g.vertices, key=lambda v: (g.positions[v][1], g.positions[v][0]))
        index = {v: i for i, v in enumerate(order)}
        self.size = len(order)
        self.neighbor_masks: List[int] = [0] * self.size
        self.values: Dict[int, T] = {}
        for v in order:
            i = index[v]
            for u in g.adjacency[v]:
                j = index[u]
                self.neighbor_masks[i] |= 1 << j
                self.values[i * self.size + j] = edge_value(g.weight_exp(u, v))
        self.one = one
        self.zero = zero
        self.memo: Dict[int, T] = {}

    def _edge(self, i: int, j: int) -> T:
        return self.values[i * self.size + j]

    def _component(self, mask: int) -> int:
        start = mask & -mask
        seen = frontier = start
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= self.neighbor_masks[v]
            frontier = reach & mask & ~seen
            seen |= frontier
        return seen

    def count_mask(self, mask: int) -> T:
        if mask == 0:
            return self.one
        if mask.bit_count() % 2:
            return self.zero
        cached = self.memo.get(mask)
        if cached is not None:
            return cached

        original = mask
        factor = self.one
        reduced = True
        while reduced and mask:
            reduced = False
            for v in _bits(mask):
                live = self.neighbor_masks[v] & mask
                if not live:
                    self.memo[original] = self.zero
                    return self.zero
                if live & (live - 1) == 0:
                    u = live.bit_length() - 1
                    factor = factor * self._edge(v, u)
                    mask &= ~((1 << v) | (1 << u))
                    reduced = True
                    break

        if mask == 0:
            result = factor
        else:
            component = self._component(mask)
            if component != mask:
                result = factor * self.count_mask(component) * self.count_mask(mask & ~component)
            else:
                result = factor * self._branch(mask)
        self.memo[original] = result
        return result

    def _branch(self, mask: int) -> T:
        pivot, best = -1, self.size + 1
        for v in _bits(mask):
            degree = (self.neighbor_masks[v] & mask).bit_count()
            if degree < best:
                pivot, best = v, degree
        total = self.zero
        for u in _bits(self.neighbor_masks[pivot] & mask):
            rest = mask & ~((1 << pivot) | (1 << u))
            total = total + self._edge(pivot, u) * self.count_mask(rest)
        return total

    def count(self) -> T:
        limit = sys.getrecursionlimit()
        if limit < _MIN_RECURSION_LIMIT:
            sys.setrecursionlimit(_MIN_RECURSION_LIMIT)
        try:
            result = self.count_mask((1 << self.size) - 1)
        finally:
            sys.setrecursionlimit(limit)
        logger.debug(f"Brute force: {self.size} vertices, {len(self.memo)} memo entries")
        return result


def count_brute(g: DualGraph) -> int:
    """Number of perfect matchings of g."""
    return MatchingCounter(g, 1, 0, lambda _k: 1).count()


def count_weighted(g: DualGraph) -> WeightPoly:
    """Sum over perfect matchings of x to the total edge exponent."""
    return MatchingCounter(g, WeightPoly.one(), WeightPoly.zero(), WeightPoly.monomial).count()
