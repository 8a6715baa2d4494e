"""Tilting multiplicities, decomposition numbers and block decomposition matrices.

Both multiplicities are 0 or 1: the value is 1 exactly when mu lies below
lambda in the reversal order and the relevant overlaid (co)cap diagram is
oriented.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import List, Tuple

from .caps import cap_diagram, co_diagram, dagger, is_oriented, overlay
from .diagrams import (DiagramString, diagram_string, preceq,
                       reachable_strings, string_to_weight)
from .errors import InvalidParams
from .weights import DominantWeight, in_Lambda_s1s2, to_tuple


@functools.lru_cache(maxsize=None)
def tilting_mult(lam: DominantWeight, mu: DominantWeight,
                 s1: int, s2: int, p: int) -> int:
    """Multiplicity of the Weyl/induced character of mu in the tilting T(lam)."""
    if not in_Lambda_s1s2(lam, s1, s2, p):
        raise InvalidParams(f"{lam} is not in Lambda({s1},{s2}) for p={p}")
    if not preceq(mu, lam, s1, s2, p):
        return 0
    return 1 if is_oriented(overlay(cap_diagram(lam, s1, s2, p), mu)) else 0


@functools.lru_cache(maxsize=None)
def decomp_number(lam: DominantWeight, mu: DominantWeight,
                  s1: int, s2: int, p: int) -> int:
    """Composition multiplicity of L(mu) in the Weyl/induced module of lam."""
    if not in_Lambda_s1s2(lam, s1, s2, p):
        raise InvalidParams(f"{lam} is not in Lambda({s1},{s2}) for p={p}")
    if not preceq(mu, lam, s1, s2, p):
        return 0
    return 1 if is_oriented(overlay(co_diagram(mu, s1, s2, p), lam)) else 0


def block_below(lam: DominantWeight, s1: int, s2: int, p: int) -> List[DominantWeight]:
    """All weights below lam in the reversal order, largest first.

    Sorting by the n-tuple in descending lexicographic order is a linear
    extension of the order, so the list is deterministic and saturated.
    """
    if not in_Lambda_s1s2(lam, s1, s2, p):
        raise InvalidParams(f"{lam} is not in Lambda({s1},{s2}) for p={p}")
    ds = diagram_string(lam, s1, s2, p)
    weights = [string_to_weight(DiagramString(ds.shift, sym, ds.split,
                                              s1, s2, ds.n))
               for sym in reachable_strings(lam, s1, s2, p)]
    return sorted(weights, key=to_tuple, reverse=True)


@dataclass(frozen=True)
class DecompositionMatrix:
    """0/1 matrix of [Delta(row) : L(column)] over a saturated weight list."""

    weights: Tuple[DominantWeight, ...]
    entries: Tuple[Tuple[int, ...], ...]

    def entry(self, lam: DominantWeight, mu: DominantWeight) -> int:
        return self.entries[self.weights.index(lam)][self.weights.index(mu)]

    def is_unitriangular(self) -> bool:
        m = len(self.weights)
        for i in range(m):
            if self.entries[i][i] != 1:
                return False
            for j in range(m):
                if j < i and self.entries[i][j] != 0:
                    return False
                if self.entries[i][j] not in (0, 1):
                    return False
        return True


def decomposition_matrix(lam: DominantWeight, s1: int, s2: int,
                         p: int) -> DecompositionMatrix:
    """Fill decomp_number over the block below lam (weights sorted largest first)."""
    ws = tuple(block_below(lam, s1, s2, p))
    rows = tuple(
        tuple(decomp_number(w, mu, s1, s2, p) for mu in ws) for w in ws)
    return DecompositionMatrix(ws, rows)


def dagger_duality_check(lam: DominantWeight, mu: DominantWeight,
                         s: int, p: int) -> bool:
    """[Delta(lam):L(mu)] equals (T(mu^dagger) : nabla(lam^dagger))."""
    lhs = decomp_number(lam, mu, s, s, p)
    rhs = tilting_mult(dagger(mu, s, p), dagger(lam, s, p), s, s, p)
    return lhs == rhs
