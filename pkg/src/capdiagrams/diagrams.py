"""Arrow diagrams on p cyclic nodes with two characteristic-p walls.

Nodes carry labels 0..p-1.  A weight lambda with l(lambda^h) <= s_h places
s_1 arrows below the line (A) at the labels of (lambda+rho)_1..(lambda+rho)_{s_1}
mod p and s_2 arrows above the line (V) at the labels of the last s_2 entries.
The wall below the line sits between labels rho_{s_1}-1 and rho_{s_1} mod p,
the wall above between s_2 and s_2+1 mod p.

The canonical linearisation cuts the cycle at the below wall, so strings start
at label rho_{s_1} mod p and the above wall is the distinguished interior wall
used for side-splitting (this is the layout of every displayed diagram in the
source examples).  When both walls share a gap the string is a single segment.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Tuple

from .errors import InvalidParams
from .weights import (DominantWeight, apply_reflection, check_s_params,
                      dot_sort, from_tuple, in_Lambda_s1s2, rho, to_tuple,
                      weight_size, AffineReflection)

SYMBOLS = ("O", "V", "A", "X")   # empty, single-v, single-^, opposite pair


@dataclass(frozen=True)
class ArrowDiagram:
    """Per-label arrow content plus the wall data determined by (s1, s2)."""

    p: int
    n: int
    s1: int
    s2: int
    below: Tuple[int, ...]   # count of A arrows at each label
    above: Tuple[int, ...]   # count of V arrows at each label

    @property
    def below_wall_gap(self) -> int:
        """Label immediately right of the wall below the line."""
        return (self.n + 1 - self.s1) % self.p

    @property
    def above_wall_gap(self) -> int:
        """Label immediately right of the wall above the line."""
        return (self.s2 + 1) % self.p

    def is_single_form(self) -> bool:
        return all(c <= 1 for c in self.below) and all(c <= 1 for c in self.above)

    def totals(self) -> Tuple[int, ...]:
        return tuple(b + a for b, a in zip(self.below, self.above))


@dataclass(frozen=True)
class DiagramString:
    """Linearised diagram: a run of p symbols starting at label `shift`.

    `split` is the index of the first node right of the distinguished (above)
    wall, or None when both walls share the boundary gap.
    """

    shift: int
    symbols: Tuple[str, ...]
    split: Optional[int]
    s1: int
    s2: int
    n: int

    @property
    def p(self) -> int:
        return len(self.symbols)

    def label_at(self, pos: int) -> int:
        return (self.shift + pos) % self.p

    def position_of(self, label: int) -> int:
        return (label - self.shift) % self.p

    def compact(self) -> str:
        return "".join(self.symbols)

    def sides(self) -> List[Tuple[int, int]]:
        """Half-open position ranges of the sides of the distinguished wall."""
        if self.split is None:
            return [(0, self.p)]
        return [(0, self.split), (self.split, self.p)]


def _below_value(label: int, p: int, n: int, s1: int) -> int:
    start = n + 1 - s1
    return start + ((label - start) % p)


def _above_value(label: int, p: int, s2: int) -> int:
    return s2 - ((s2 - label) % p)


@functools.lru_cache(maxsize=None)
def arrow_diagram(w: DominantWeight, s1: int, s2: int, p: int) -> ArrowDiagram:
    """Place the arrows of w; repeated arrows at a node are allowed whenever
    l(w^h) <= s_h (the strict single-arrow form needs w in Lambda(s1, s2))."""
    n = w.n
    check_s_params(n, s1, s2, p)
    if len(w.lambda1) > s1 or len(w.lambda2) > s2:
        raise InvalidParams(
            f"need l(lambda1) <= s1 and l(lambda2) <= s2 for {w} with s1={s1}, s2={s2}")
    x = to_tuple(w)
    r = rho(n)
    below = [0] * p
    above = [0] * p
    for i in range(s1):
        below[(x[i] + r[i]) % p] += 1
    for i in range(s2):
        above[(x[n - 1 - i] + r[n - 1 - i]) % p] += 1
    return ArrowDiagram(p, n, s1, s2, tuple(below), tuple(above))


def diagram_to_weight(d: ArrowDiagram) -> DominantWeight:
    """Invert arrow_diagram on single-arrow-form diagrams."""
    if not d.is_single_form():
        raise InvalidParams("only single-arrow-form diagrams encode a unique weight")
    p, n, s1, s2 = d.p, d.n, d.s1, d.s2
    below_vals = sorted((_below_value(g, p, n, s1) for g in range(p) if d.below[g]),
                        reverse=True)
    above_vals = sorted(_above_value(g, p, s2) for g in range(p) if d.above[g])
    lambda1 = tuple(v - (n - i) for i, v in enumerate(below_vals))
    lambda2 = tuple((i + 1) - v for i, v in enumerate(above_vals))
    x = list(lambda1) + [0] * (n - s1 - s2) + [-v for v in reversed(lambda2)]
    return from_tuple(x)


def normalise_shift(d: ArrowDiagram) -> DiagramString:
    """Cut the cycle at the below wall and report the interior wall index."""
    if not d.is_single_form():
        raise InvalidParams("cannot linearise a diagram with repeated arrows")
    shift = d.below_wall_gap
    symbols = []
    for pos in range(d.p):
        g = (shift + pos) % d.p
        symbols.append(SYMBOLS[2 * d.below[g] + d.above[g]])
    split = (d.above_wall_gap - shift) % d.p
    return DiagramString(shift, tuple(symbols), split if split else None,
                         d.s1, d.s2, d.n)


@functools.lru_cache(maxsize=None)
def diagram_string(w: DominantWeight, s1: int, s2: int, p: int) -> DiagramString:
    return normalise_shift(arrow_diagram(w, s1, s2, p))


def string_to_weight(ds: DiagramString) -> DominantWeight:
    """Rebuild the weight encoded by a linearised single-arrow string."""
    p = ds.p
    below = [0] * p
    above = [0] * p
    for pos, sym in enumerate(ds.symbols):
        g = ds.label_at(pos)
        if sym in ("A", "X"):
            below[g] = 1
        if sym in ("V", "X"):
            above[g] = 1
    return diagram_to_weight(
        ArrowDiagram(p, ds.n, ds.s1, ds.s2, tuple(below), tuple(above)))


# ---------------------------------------------------------------------------
# conjugacy and the order on weights


def is_dot_conjugate(lam: DominantWeight, mu: DominantWeight,
                     s1: int, s2: int, p: int) -> bool:
    """Same coordinate sum and the same total arrow count at every node."""
    if lam.n != mu.n:
        raise InvalidParams("weights of different rank")
    if weight_size(lam) != weight_size(mu):
        return False
    da = arrow_diagram(lam, s1, s2, p)
    db = arrow_diagram(mu, s1, s2, p)
    return da.totals() == db.totals()


def _reversal_steps(symbols: Tuple[str, ...], sides) -> Iterator[Tuple[str, ...]]:
    for lo, hi in sides:
        for a in range(lo, hi):
            if symbols[a] != "V":
                continue
            for b in range(a + 1, hi):
                if symbols[b] == "A":
                    new = list(symbols)
                    new[a], new[b] = "A", "V"
                    yield tuple(new)


@functools.lru_cache(maxsize=None)
def _closure(symbols: Tuple[str, ...], split: Optional[int],
             p: int) -> FrozenSet[Tuple[str, ...]]:
    """All strings reachable by repeated V..A -> A..V reversals per side."""
    sides = [(0, p)] if split is None else [(0, split), (split, p)]
    seen = {symbols}
    frontier = [symbols]
    while frontier:
        nxt = []
        for cur in frontier:
            for new in _reversal_steps(cur, sides):
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return frozenset(seen)


def reachable_strings(lam: DominantWeight, s1: int, s2: int,
                      p: int) -> FrozenSet[Tuple[str, ...]]:
    ds = diagram_string(lam, s1, s2, p)
    return _closure(ds.symbols, ds.split, ds.p)


def preceq(mu: DominantWeight, lam: DominantWeight,
           s1: int, s2: int, p: int) -> bool:
    """mu <= lam in the reversal order of the arrow diagrams."""
    if not in_Lambda_s1s2(lam, s1, s2, p):
        raise InvalidParams(f"{lam} is not in Lambda({s1},{s2}) for p={p}")
    if mu.n != lam.n:
        raise InvalidParams("weights of different rank")
    if not in_Lambda_s1s2(mu, s1, s2, p):
        return False
    target = diagram_string(mu, s1, s2, p)
    return target.symbols in reachable_strings(lam, s1, s2, p)


def preceq_witness(mu: DominantWeight, lam: DominantWeight, s1: int, s2: int,
                   p: int) -> Optional[List[DominantWeight]]:
    """A chain lam = w_0, ..., w_k = mu of single reversals, or None."""
    if not in_Lambda_s1s2(lam, s1, s2, p):
        raise InvalidParams(f"{lam} is not in Lambda({s1},{s2}) for p={p}")
    if not in_Lambda_s1s2(mu, s1, s2, p):
        return None
    ds = diagram_string(lam, s1, s2, p)
    goal = diagram_string(mu, s1, s2, p).symbols
    sides = ds.sides()
    parent = {ds.symbols: None}
    frontier = [ds.symbols]
    while frontier and goal not in parent:
        nxt = []
        for cur in frontier:
            for new in _reversal_steps(cur, sides):
                if new not in parent:
                    parent[new] = cur
                    nxt.append(new)
        frontier = nxt
    if goal not in parent:
        return None
    chain = []
    node: Optional[Tuple[str, ...]] = goal
    while node is not None:
        chain.append(string_to_weight(DiagramString(
            ds.shift, node, ds.split, s1, s2, ds.n)))
        node = parent[node]
    return list(reversed(chain))


@functools.lru_cache(maxsize=None)
def _oracle_closure(lam: DominantWeight, p: int) -> FrozenSet[DominantWeight]:
    """Downward closure of lam under admissible dominant-sorted reflections.

    Follows the definition of the order on dominant weights: roots e_i - e_j
    with i <= l(lambda1), j > n - l(lambda2), level l >= 1 such that the
    pairing stays >= 1 and the reflected weight sorts without repeats.
    """
    n = lam.n
    r = rho(n)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for cur in frontier:
            x = to_tuple(cur)
            xr = tuple(x[k] + r[k] for k in range(n))
            for i in range(1, len(cur.lambda1) + 1):
                for j in range(n - len(cur.lambda2) + 1, n + 1):
                    if i >= j:
                        continue
                    diff = xr[i - 1] - xr[j - 1]
                    for level in range(1, (diff - 1) // p + 1):
                        res = dot_sort(apply_reflection(
                            AffineReflection(i, j, level), xr, p))
                        if res is None:
                            continue
                        w, _ = res
                        if w not in seen:
                            seen.add(w)
                            nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def preceq_oracle(mu: DominantWeight, lam: DominantWeight, p: int) -> bool:
    """Reflection-based definition of the order, independent of diagrams."""
    if mu.n != lam.n:
        raise InvalidParams("weights of different rank")
    return mu in _oracle_closure(lam, p)


# ---------------------------------------------------------------------------
# wall moves


def wall_move(d: ArrowDiagram, which: str, direction: str) -> Optional[ArrowDiagram]:
    """Move a wall one step, changing s1 or s2 but not the encoded weight.

    Returns None when the move is not allowed (occupied/empty node rules,
    the s1 + s2 <= n bound for arrow-adding moves, or s_h dropping to 0).
    """
    if which not in ("below", "above") or direction not in ("left", "right"):
        raise InvalidParams(f"unknown wall move {which!r}/{direction!r}")
    if not d.is_single_form():
        raise InvalidParams("wall moves are defined on single-arrow-form diagrams")
    p, n, s1, s2 = d.p, d.n, d.s1, d.s2
    below, above = list(d.below), list(d.above)

    if which == "below" and direction == "right":
        g = d.below_wall_gap
        if s1 < 2 or not below[g]:
            return None
        below[g] = 0
        return ArrowDiagram(p, n, s1 - 1, s2, tuple(below), tuple(above))

    if which == "below" and direction == "left":
        g = (d.below_wall_gap - 1) % p
        if s1 >= n - s2 or s1 >= p or below[g]:
            return None
        below[g] = 1
        return ArrowDiagram(p, n, s1 + 1, s2, tuple(below), tuple(above))

    if which == "above" and direction == "left":
        g = d.s2 % p
        if s2 < 2 or not above[g]:
            return None
        above[g] = 0
        return ArrowDiagram(p, n, s1, s2 - 1, tuple(below), tuple(above))

    # above, right
    g = d.above_wall_gap
    if s2 >= n - s1 or s2 >= p or above[g]:
        return None
    above[g] = 1
    return ArrowDiagram(p, n, s1, s2 + 1, tuple(below), tuple(above))
