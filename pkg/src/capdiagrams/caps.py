"""Cap diagrams, cap codiagrams, overlays, orientedness and the dagger map.

Caps are formed per side of the distinguished wall by stack matching over the
single arrows: for a cap diagram a V is pushed and a later A closes the most
recent open V; for a codiagram the roles of A and V are exchanged.  Crosses
and empty nodes are transparent.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from .errors import IncompatibleDiagrams, InvalidParams
from .diagrams import (ArrowDiagram, DiagramString, arrow_diagram,
                       diagram_string, diagram_to_weight)
from .weights import DominantWeight, in_Lambda_s1s2


@dataclass(frozen=True)
class Cap:
    left: int    # position in the linearised string
    right: int
    side: int    # 0 = left of the distinguished wall, 1 = right


@dataclass(frozen=True)
class CapDiagram:
    base: DiagramString
    caps: Tuple[Cap, ...]
    kind: str     # "c" (caps close V..A) or "co" (caps close A..V)

    def caps_by_label(self) -> FrozenSet[Tuple[int, int]]:
        """Rotation-invariant cap endpoints as (left label, right label)."""
        return frozenset((self.base.label_at(c.left), self.base.label_at(c.right))
                         for c in self.caps)

    def uncapped(self) -> Tuple[int, ...]:
        """Positions of single arrows not covered by a cap endpoint."""
        ends = {c.left for c in self.caps} | {c.right for c in self.caps}
        return tuple(pos for pos, sym in enumerate(self.base.symbols)
                     if sym in ("V", "A") and pos not in ends)


def _match_side(symbols, lo, hi, side, opener, closer):
    caps = []
    stack = []
    for pos in range(lo, hi):
        sym = symbols[pos]
        if sym == opener:
            stack.append(pos)
        elif sym == closer and stack:
            caps.append(Cap(stack.pop(), pos, side))
    return caps


def _build(ds: DiagramString, kind: str) -> CapDiagram:
    opener, closer = ("V", "A") if kind == "c" else ("A", "V")
    caps = []
    for side, (lo, hi) in enumerate(ds.sides()):
        caps.extend(_match_side(ds.symbols, lo, hi, side, opener, closer))
    return CapDiagram(ds, tuple(sorted(caps, key=lambda c: c.left)), kind)


@functools.lru_cache(maxsize=None)
def cap_diagram(lam: DominantWeight, s1: int, s2: int, p: int) -> CapDiagram:
    """c_lambda: anti-clockwise caps matching V (left end) to A (right end)."""
    if not in_Lambda_s1s2(lam, s1, s2, p):
        raise InvalidParams(f"{lam} is not in Lambda({s1},{s2}) for p={p}")
    return _build(diagram_string(lam, s1, s2, p), "c")


@functools.lru_cache(maxsize=None)
def co_diagram(mu: DominantWeight, s1: int, s2: int, p: int) -> CapDiagram:
    """co_mu: clockwise caps matching A (left end) to V (right end)."""
    if not in_Lambda_s1s2(mu, s1, s2, p):
        raise InvalidParams(f"{mu} is not in Lambda({s1},{s2}) for p={p}")
    return _build(diagram_string(mu, s1, s2, p), "co")


def overlay(cd: CapDiagram, other: DominantWeight) -> CapDiagram:
    """Keep the caps of cd, replace the arrows by those of `other`.

    The two weights must place single arrows and crosses at the same nodes,
    which holds whenever they are comparable in the reversal order.
    """
    ds = cd.base
    other_ds = diagram_string(other, ds.s1, ds.s2, ds.p)
    for a, b in zip(ds.symbols, other_ds.symbols):
        single_a = a in ("V", "A")
        single_b = b in ("V", "A")
        if single_a != single_b or (not single_a and a != b):
            raise IncompatibleDiagrams(
                f"single/cross/empty patterns differ: {ds.compact()} vs "
                f"{other_ds.compact()}")
    return CapDiagram(other_ds, cd.caps, cd.kind)


def is_oriented(cd: CapDiagram) -> bool:
    """Every cap joins two opposite single arrows."""
    sym = cd.base.symbols
    return all({sym[c.left], sym[c.right]} == {"V", "A"} for c in cd.caps)


def cap_orientations(cd: CapDiagram) -> Tuple[str, ...]:
    """Per-cap verdicts for rendering and traces."""
    out = []
    for c in cd.caps:
        l, r = cd.base.symbols[c.left], cd.base.symbols[c.right]
        if {l, r} != {"V", "A"}:
            out.append("not-oriented")
        elif l == "V":
            out.append("anti-clockwise")
        else:
            out.append("clockwise")
    return tuple(out)


def dagger(lam: DominantWeight, s: int, p: int) -> DominantWeight:
    """Flip every single arrow of the (s, s)-diagram; reverses the order."""
    if 2 * s > lam.n:
        raise InvalidParams(f"dagger needs 2s <= n, got s={s}, n={lam.n}")
    if not in_Lambda_s1s2(lam, s, s, p):
        raise InvalidParams(f"{lam} is not in Lambda({s},{s}) for p={p}")
    d = arrow_diagram(lam, s, s, p)
    below = list(d.below)
    above = list(d.above)
    for g in range(d.p):
        if d.below[g] + d.above[g] == 1:
            below[g], above[g] = d.above[g], d.below[g]
    return diagram_to_weight(
        ArrowDiagram(d.p, d.n, s, s, tuple(below), tuple(above)))
