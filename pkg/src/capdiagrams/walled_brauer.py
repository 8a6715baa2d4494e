"""The walled Brauer algebra B_{r,s}(delta) at the level of diagrams and ranks.

A walled diagram is a perfect matching on two rows of r+s vertices, the wall
sitting after position r in each row: horizontal edges (within a row) must
cross the wall, vertical edges must not.  Multiplication stacks diagrams and
counts closed middle loops, each worth a factor delta.  Cell-module data
(labels, dimensions, decomposition numbers) is transported from GL_n.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .characters import specht_dim
from .errors import InvalidParams, NotApplicable, NotInLambdaRS, ShapeMismatch
from .multiplicities import tilting_mult
from .weights import DominantWeight, Partition, as_partition

# integer polynomials in delta: coefficient tuples, constant term first
Poly = Tuple[int, ...]

POLY_ZERO: Poly = ()
POLY_ONE: Poly = (1,)


def poly_trim(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return poly_trim(out)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return POLY_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def delta_power(k: int) -> Poly:
    return (0,) * k + (1,)


def poly_eval(a: Poly, delta: int) -> int:
    return sum(c * delta ** i for i, c in enumerate(a))


def format_poly(a: Poly) -> str:
    if not a:
        return "0"
    bits = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        if i == 0:
            bits.append(str(c))
        else:
            head = "" if c == 1 else ("-" if c == -1 else str(c) + "*")
            bits.append(f"{head}d^{i}" if i > 1 else f"{head}d")
    return " + ".join(bits).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class WalledDiagram:
    """Matching stored as an involution on 0..2(r+s)-1.

    Vertices 0..r+s-1 form the top row (left to right), r+s..2(r+s)-1 the
    bottom row.  The wall sits after position r in each row.
    """

    r: int
    s: int
    match: Tuple[int, ...]

    def __post_init__(self):
        m = self.r + self.s
        if len(self.match) != 2 * m:
            raise InvalidParams("matching has wrong size")
        for u, v in enumerate(self.match):
            if v == u or not 0 <= v < 2 * m or self.match[v] != u:
                raise InvalidParams("not a fixed-point-free involution")
            same_row = (u < m) == (v < m)
            same_side = (u % m < self.r) == (v % m < self.r)
            if same_row and same_side:
                raise InvalidParams(f"horizontal edge {u}-{v} does not cross the wall")
            if not same_row and not same_side:
                raise InvalidParams(f"vertical edge {u}-{v} crosses the wall")

    def edges(self) -> List[Tuple[int, int]]:
        return sorted((u, v) for u, v in enumerate(self.match) if u < v)


def identity_diagram(r: int, s: int) -> WalledDiagram:
    m = r + s
    return WalledDiagram(r, s, tuple(list(range(m, 2 * m)) + list(range(m))))


def enumerate_diagrams(r: int, s: int) -> List[WalledDiagram]:
    """All (r+s)! walled diagrams for the given shape.

    A diagram is a bijection from {top-left, bottom-right} vertices to
    {bottom-left, top-right} vertices: every allowed edge joins those sets.
    """
    m = r + s
    side_a = list(range(0, r)) + list(range(m + r, 2 * m))
    side_b = list(range(m, m + r)) + list(range(r, m))
    out = []
    for image in itertools.permutations(side_b):
        match = [-1] * (2 * m)
        for u, v in zip(side_a, image):
            match[u], match[v] = v, u
        out.append(WalledDiagram(r, s, tuple(match)))
    return out


class WalledElement:
    """Finitely supported combination of diagrams with delta-polynomial coefficients."""

    __slots__ = ("r", "s", "terms")

    def __init__(self, r: int, s: int,
                 terms: Optional[Dict[WalledDiagram, Poly]] = None):
        self.r = r
        self.s = s
        self.terms: Dict[WalledDiagram, Poly] = {}
        for d, c in (terms or {}).items():
            c = poly_trim(c)
            if (d.r, d.s) != (r, s):
                raise ShapeMismatch("diagram of wrong shape in element")
            if c:
                self.terms[d] = c

    @classmethod
    def from_diagram(cls, d: WalledDiagram, coeff: Poly = POLY_ONE) -> "WalledElement":
        return cls(d.r, d.s, {d: coeff})

    def __add__(self, other: "WalledElement") -> "WalledElement":
        if (self.r, self.s) != (other.r, other.s):
            raise ShapeMismatch("cannot add elements of different shapes")
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = poly_add(out.get(d, POLY_ZERO), c)
        return WalledElement(self.r, self.s, out)

    def __mul__(self, other: "WalledElement") -> "WalledElement":
        if (self.r, self.s) != (other.r, other.s):
            raise ShapeMismatch("cannot multiply elements of different shapes")
        acc: Dict[WalledDiagram, Poly] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                prod, loops = _stack(d1, d2)
                coeff = poly_mul(poly_mul(c1, c2), delta_power(loops))
                acc[prod] = poly_add(acc.get(prod, POLY_ZERO), coeff)
        return WalledElement(self.r, self.s, acc)

    def __eq__(self, other):
        return (isinstance(other, WalledElement)
                and (self.r, self.s) == (other.r, other.s)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.r, self.s, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({format_poly(c)})*{format_walled(d)}"
                          for d, c in self.terms.items())


def _stack(a: WalledDiagram, b: WalledDiagram) -> Tuple[WalledDiagram, int]:
    """Concatenate a over b; return the resulting diagram and the loop count."""
    m = a.r + a.s
    result = [-1] * (2 * m)
    seen_mid = [False] * m
    for start in range(2 * m):
        if result[start] != -1:
            continue
        in_a = start < m
        cur = a.match[start] if in_a else b.match[start]
        while True:
            if in_a:
                if cur < m:          # ended on the top row
                    result[start], result[cur] = cur, start
                    break
                seen_mid[cur - m] = True
                cur, in_a = b.match[cur - m], False
            else:
                if cur >= m:         # ended on the bottom row
                    result[start], result[cur] = cur, start
                    break
                seen_mid[cur] = True
                cur, in_a = a.match[m + cur], True
    loops = 0
    for i in range(m):
        if seen_mid[i]:
            continue
        loops += 1
        cur = i
        while True:
            seen_mid[cur] = True
            via_b = b.match[cur]           # middle -> middle through b's top row
            seen_mid[via_b] = True
            cur = a.match[m + via_b] - m   # back through a's bottom row
            if cur == i:
                break
    return WalledDiagram(a.r, a.s, tuple(result)), loops


def multiply(a: WalledDiagram, b: WalledDiagram) -> WalledElement:
    """Product of two basis diagrams: delta^loops times the stacked diagram."""
    if (a.r, a.s) != (b.r, b.s):
        raise ShapeMismatch(
            f"shapes ({a.r},{a.s}) and ({b.r},{b.s}) cannot be multiplied")
    d, loops = _stack(a, b)
    return WalledElement.from_diagram(d, delta_power(loops))


# ---------------------------------------------------------------------------
# ranks, dimensions, identities


def ideal_rank(r: int, s: int, t: int, i: int = 0) -> int:
    """Free rank of the t+i-th horizontal-edge layer over k[Sym_{r-t} x Sym_{s-t}]."""
    if t < 0 or i < 0:
        raise InvalidParams("t and i must be nonnegative")
    k = t + i
    return math.comb(r, k) * math.comb(s, k) * math.factorial(k)


def specht_dim_walled(lambda1: Partition, lambda2: Partition, r: int, s: int) -> int:
    """Dimension of the cell module labelled (lambda1, lambda2)."""
    lambda1, lambda2 = as_partition(lambda1), as_partition(lambda2)
    t = r - sum(lambda1)
    if t < 0 or s - sum(lambda2) != t:
        raise NotInLambdaRS(
            f"({lambda1},{lambda2}) is not a label for B_{{{r},{s}}}")
    return (math.comb(r, t) * math.comb(s, t) * math.factorial(t)
            * specht_dim(lambda1) * specht_dim(lambda2))


def labels_rs(r: int, s: int) -> Iterator[Tuple[Partition, Partition]]:
    """All cell-module labels: |lambda1| = r - t, |lambda2| = s - t."""
    from .weights import partitions_of
    for t in range(min(r, s) + 1):
        for l1 in partitions_of(r - t):
            for l2 in partitions_of(s - t):
                yield l1, l2


def dimension_identity_check(r: int, s: int) -> bool:
    """sum_i n_i^2 (r-i)! (s-i)! == (r+s)! with n_i = C(r,i) C(s,i) i!."""
    total = 0
    for i in range(min(r, s) + 1):
        n_i = ideal_rank(r, s, 0, i)
        total += n_i * n_i * math.factorial(r - i) * math.factorial(s - i)
    return total == math.factorial(r + s)


# ---------------------------------------------------------------------------
# decomposition numbers via GL_n


def walled_decomp_number(mu1: Partition, mu2: Partition,
                         lam1: Partition, lam2: Partition,
                         r: int, s: int, delta: int, p: int,
                         n: Optional[int] = None) -> int:
    """[S(mu1,mu2) : D(lam1,lam2)] for B_{r,s}(delta) in characteristic p.

    Transports the question to a tilting multiplicity for GL_n where
    n >= r + s and n = delta mod p.  The auxiliary sizes are chosen as
    s_h = max(l(lam^h), l(mu^h), 1); if they violate a wall bound the rank
    is bumped by p a few times before giving up.
    """
    mu1, mu2 = as_partition(mu1), as_partition(mu2)
    lam1, lam2 = as_partition(lam1), as_partition(lam2)
    if p < 2:
        raise InvalidParams("p must be at least 2")
    for name, (a, b) in (("lambda", (lam1, lam2)), ("mu", (mu1, mu2))):
        t = r - sum(a)
        if t < 0 or s - sum(b) != t:
            raise NotApplicable(
                f"{name} = ({a},{b}) is not a label for B_{{{r},{s}}}")
    for xi in (lam1, lam2):
        if xi and xi[0] + len(xi) > p:
            raise NotApplicable(
                f"hook bound violated: lambda part {xi} has first part + length > p")
    if r == s >= 1 and delta % p == 0 and not lam1 and not lam2:
        raise NotApplicable(
            "the empty label is excluded when r = s >= 1 and delta = 0 mod p")

    s1 = max(len(lam1), len(mu1), 1)
    s2 = max(len(lam2), len(mu2), 1)
    first = lambda xi: xi[0] if xi else 0
    if (s1 > p - first(lam1) or s1 > p - first(mu1)
            or s2 > p - first(lam2) or s2 > p - first(mu2)):
        raise NotApplicable(
            f"no admissible (s1,s2): max lengths ({s1},{s2}) exceed a wall bound")

    if n is not None:
        if n < r + s or (n - delta) % p != 0:
            raise NotApplicable(
                f"n = {n} is not admissible: need n >= {r + s} and n = {delta} mod p")
        candidates = [n]
    else:
        n0 = r + s + ((delta - (r + s)) % p)
        candidates = list(range(n0, r + s + 3 * p + 1, p))

    for cand in candidates:
        if s1 + s2 > cand:
            continue
        lam = DominantWeight(cand, lam1, lam2)
        mu = DominantWeight(cand, mu1, mu2)
        return tilting_mult(lam, mu, s1, s2, p)
    raise NotApplicable(
        f"no admissible rank n <= {r + s + 3 * p} with n = {delta} mod p "
        f"accommodates (s1,s2) = ({s1},{s2})")


# ---------------------------------------------------------------------------
# text format: "r s | T1-B1,T2-B2,..."


def _vertex_name(v: int, m: int) -> str:
    return f"T{v + 1}" if v < m else f"B{v - m + 1}"


def _vertex_index(name: str, m: int) -> int:
    row, num = name[0].upper(), int(name[1:])
    if row not in "TB" or not 1 <= num <= m:
        raise InvalidParams(f"bad vertex name {name!r}")
    return num - 1 if row == "T" else m + num - 1


def format_walled(d: WalledDiagram) -> str:
    m = d.r + d.s
    pairs = ",".join(f"{_vertex_name(u, m)}-{_vertex_name(v, m)}"
                     for u, v in d.edges())
    return f"{d.r} {d.s} | {pairs}"


def parse_walled(text: str) -> WalledDiagram:
    try:
        head, body = text.split("|", 1)
        r, s = (int(x) for x in head.split())
    except ValueError as exc:
        raise InvalidParams(f"cannot parse walled diagram {text!r}") from exc
    m = r + s
    match = [-1] * (2 * m)
    for pair in body.strip().split(","):
        if not pair.strip():
            continue
        a, b = (x.strip() for x in pair.split("-"))
        u, v = _vertex_index(a, m), _vertex_index(b, m)
        match[u], match[v] = v, u
    if -1 in match:
        raise InvalidParams(f"matching in {text!r} is not perfect")
    return WalledDiagram(r, s, tuple(match))
