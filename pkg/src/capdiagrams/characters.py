"""Exact arithmetic in the Z-span of Weyl characters chi(mu) for GL_n.

Everything stays in the chi-basis.  Tensoring with the natural module or its
dual acts through box moves on bipartitions (Brauer's formula), so no weight
multiplicities are ever expanded.
"""

from __future__ import annotations

import math
from typing import Dict, Iterator, Set

from .errors import InvalidParams, RankTooSmall
from .weights import (DominantWeight, Partition, as_partition, hook_lengths,
                      partitions_of)


class CharacterCombination:
    """Finitely supported integer combination of Weyl characters chi(mu).

    Coefficients are exact integers; zero coefficients are never stored and
    all keys share the same rank n.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Dict[DominantWeight, int] = None):
        self.n = n
        clean: Dict[DominantWeight, int] = {}
        for w, c in (coeffs or {}).items():
            if w.n != n:
                raise InvalidParams(f"weight {w} has rank {w.n}, expected {n}")
            if c != 0:
                clean[w] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, n: int) -> "CharacterCombination":
        return cls(n)

    @classmethod
    def chi(cls, w: DominantWeight, coeff: int = 1) -> "CharacterCombination":
        return cls(w.n, {w: coeff})

    def coefficient(self, w: DominantWeight) -> int:
        return self.coeffs.get(w, 0)

    def support(self) -> Set[DominantWeight]:
        return set(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "CharacterCombination") -> "CharacterCombination":
        if self.n != other.n:
            raise InvalidParams("cannot add combinations of different rank")
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return CharacterCombination(self.n, out)

    def __neg__(self):
        return CharacterCombination(self.n, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return CharacterCombination(self.n, {w: k * c for w, c in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, CharacterCombination)
                and self.n == other.n and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for w, c in sorted(self.coeffs.items(), key=lambda wc: str(wc[0])):
            bits.append(f"{'+' if c >= 0 else '-'} {abs(c) if abs(c) != 1 else ''}chi({w})")
        return " ".join(bits).lstrip("+ ")


# ---------------------------------------------------------------------------
# Brauer supports: single box moves


def _add_box(xi: Partition) -> Iterator[Partition]:
    for row in range(len(xi) + 1):
        cur = xi[row] if row < len(xi) else 0
        prev = xi[row - 1] if row > 0 else None
        if prev is None or cur < prev:
            yield xi[:row] + (cur + 1,) + xi[row + 1:]


def _remove_box(xi: Partition) -> Iterator[Partition]:
    for row in range(len(xi)):
        nxt = xi[row + 1] if row + 1 < len(xi) else 0
        if xi[row] > nxt:
            yield as_partition(xi[:row] + (xi[row] - 1,) + xi[row + 1:])


def supp1(w: DominantWeight) -> Set[DominantWeight]:
    """Add a box to lambda1 or remove one from lambda2 (never both).

    Candidates whose two partitions no longer fit inside n rows are dropped:
    their Weyl character is zero.
    """
    out = set()
    for xi in _add_box(w.lambda1):
        if len(xi) + len(w.lambda2) <= w.n:
            out.add(DominantWeight(w.n, xi, w.lambda2))
    for xi in _remove_box(w.lambda2):
        out.add(DominantWeight(w.n, w.lambda1, xi))
    return out


def supp2(w: DominantWeight) -> Set[DominantWeight]:
    """Remove a box from lambda1 or add one to lambda2 (never both)."""
    out = set()
    for xi in _remove_box(w.lambda1):
        out.add(DominantWeight(w.n, xi, w.lambda2))
    for xi in _add_box(w.lambda2):
        if len(w.lambda1) + len(xi) <= w.n:
            out.add(DominantWeight(w.n, w.lambda1, xi))
    return out


def tensor_step(c: CharacterCombination, direction: str) -> CharacterCombination:
    """Multiply by ch V (direction "V") or ch V* (direction "V*")."""
    if direction == "V":
        supp = supp1
    elif direction == "V*":
        supp = supp2
    else:
        raise InvalidParams(f"direction must be 'V' or 'V*', got {direction!r}")
    out: Dict[DominantWeight, int] = {}
    for w, m in c.items():
        for mu in supp(w):
            out[mu] = out.get(mu, 0) + m
    return CharacterCombination(c.n, out)


def mixed_tensor_character(r: int, s: int, n: int) -> CharacterCombination:
    """ch of V^{x r} (x) (V*)^{x s} in the chi-basis, built step by step."""
    c = CharacterCombination.chi(DominantWeight(n, (), ()))
    for _ in range(r):
        c = tensor_step(c, "V")
    for _ in range(s):
        c = tensor_step(c, "V*")
    return c


# ---------------------------------------------------------------------------
# symmetric group Specht dimensions and the psi aggregates


def specht_dim(mu: Partition) -> int:
    """Number of standard Young tableaux of shape mu (hook length formula)."""
    mu = as_partition(mu)
    num = math.factorial(sum(mu))
    den = 1
    for h in hook_lengths(mu):
        den *= h
    return num // den


def psi(r: int, s: int, n: int) -> CharacterCombination:
    """Sum of d_{l1} d_{l2} chi([l1, l2]) over l1 |- r and l2 |- s."""
    if r < 0 or s < 0:
        raise InvalidParams("r and s must be nonnegative")
    if r + s > n:
        raise RankTooSmall(f"psi_{{{r},{s}}} needs n >= r + s = {r + s}, got {n}")
    out: Dict[DominantWeight, int] = {}
    for l1 in partitions_of(r):
        d1 = specht_dim(l1)
        for l2 in partitions_of(s):
            out[DominantWeight(n, l1, l2)] = d1 * specht_dim(l2)
    return CharacterCombination(n, out)


