"""Partitions, bipartition weights of GL_n, the dot action and weight-set tests.

A dominant weight of GL_n is a weakly decreasing integer n-tuple.  It is
stored as a pair of partitions (lambda1, lambda2): lambda1 gives the positive
entries and the reversed negated lambda2 gives the negative ones, with zeros
in between.  All values here are immutable and all functions are pure.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple

from .errors import InvalidParams, NotDominant

Partition = Tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalise to a tuple, dropping trailing zeros; reject bad input."""
    t = tuple(int(x) for x in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    if any(x <= 0 for x in t):
        raise InvalidParams(f"partition parts must be positive: {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise InvalidParams(f"partition parts must be weakly decreasing: {t}")
    return t


def partitions_of(k: int, max_length: Optional[int] = None,
                  max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of k, optionally with bounded length and part size."""
    if k < 0:
        return
    if max_length is None:
        max_length = k
    if max_part is None:
        max_part = k

    def rec(rest: int, bound: int, room: int) -> Iterator[Tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first, room - 1):
                yield (first,) + tail

    yield from rec(k, max_part, max_length)


def partitions_up_to(k: int, **kw) -> Iterator[Partition]:
    """All partitions of size 0, 1, ..., k."""
    for m in range(k + 1):
        yield from partitions_of(m, **kw)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most `rows` parts, each at most `cols`."""
    if rows <= 0 or cols < 0:
        yield ()
        return
    for k in range(rows * cols + 1):
        yield from partitions_of(k, max_length=rows, max_part=cols)


def conjugate(xi: Partition) -> Partition:
    if not xi:
        return ()
    return tuple(sum(1 for part in xi if part > j) for j in range(xi[0]))


def contains(big: Partition, small: Partition) -> bool:
    """Young-diagram containment small <= big, row by row."""
    if len(small) > len(big):
        return False
    return all(small[i] <= big[i] for i in range(len(small)))


def hook_lengths(xi: Partition) -> Iterator[int]:
    conj = conjugate(xi)
    for i, row in enumerate(xi):
        for j in range(row):
            yield (row - j) + (conj[j] - i) - 1


def greatest_hook(xi: Partition) -> int:
    """xi_1 + l(xi) - 1, the largest hook length (0 for the empty partition)."""
    if not xi:
        return 0
    return xi[0] + len(xi) - 1


def is_p_core(xi: Partition, p: int) -> bool:
    """Beta-number test: no first-column hook value drops by a multiple of p.

    With theta = (m-1, ..., 1, 0) and m = l(xi)+1, the partition is a p-core
    iff every (xi+theta)_i - l*p that stays >= 0 again occurs in xi+theta.
    """
    if p < 2:
        raise InvalidParams("p must be at least 2")
    m = len(xi) + 1
    beta = [xi[i] + (m - 1 - i) if i < len(xi) else (m - 1 - i) for i in range(m)]
    present = set(beta)
    for b in beta:
        v = b - p
        while v >= 0:
            if v not in present:
                return False
            v -= p
    return True


# ---------------------------------------------------------------------------
# dominant weights


@dataclass(frozen=True)
class DominantWeight:
    """A dominant GL_n weight encoded as a bipartition (lambda1, lambda2)."""

    n: int
    lambda1: Partition
    lambda2: Partition

    def __post_init__(self):
        object.__setattr__(self, "lambda1", as_partition(self.lambda1))
        object.__setattr__(self, "lambda2", as_partition(self.lambda2))
        if len(self.lambda1) + len(self.lambda2) > self.n:
            raise NotDominant(
                f"l(lambda1) + l(lambda2) = "
                f"{len(self.lambda1) + len(self.lambda2)} exceeds n = {self.n}")

    def __repr__(self):
        return f"[{format_partition(self.lambda1)}/{format_partition(self.lambda2)}]@{self.n}"


def weight(n: int, lambda1: Iterable[int] = (), lambda2: Iterable[int] = ()) -> DominantWeight:
    return DominantWeight(n, tuple(lambda1), tuple(lambda2))


@functools.lru_cache(maxsize=None)
def to_tuple(w: DominantWeight) -> Tuple[int, ...]:
    """The weakly decreasing n-tuple (lambda1..., 0..., -reversed(lambda2))."""
    mid = w.n - len(w.lambda1) - len(w.lambda2)
    return w.lambda1 + (0,) * mid + tuple(-x for x in reversed(w.lambda2))


def from_tuple(t: Iterable[int]) -> DominantWeight:
    t = tuple(int(x) for x in t)
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise NotDominant(f"not weakly decreasing: {t}")
    lambda1 = tuple(x for x in t if x > 0)
    lambda2 = tuple(-x for x in reversed(t) if x < 0)
    return DominantWeight(len(t), lambda1, lambda2)


def rho(n: int) -> Tuple[int, ...]:
    """The shift vector (n, n-1, ..., 1)."""
    if n < 1:
        raise InvalidParams("n must be at least 1")
    return tuple(range(n, 0, -1))


def weight_size(w: DominantWeight) -> int:
    """Coordinate sum |lambda1| - |lambda2|."""
    return sum(w.lambda1) - sum(w.lambda2)


# ---------------------------------------------------------------------------
# affine reflections and the dot action


@dataclass(frozen=True)
class AffineReflection:
    """s_{alpha,l} for the root alpha = e_i - e_j (1 <= i < j <= n), level l."""

    i: int
    j: int
    level: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise InvalidParams(f"need 1 <= i < j, got i={self.i}, j={self.j}")


def apply_reflection(s: AffineReflection, x: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    """x - a*alpha with a = x_i - x_j - l*p."""
    a = x[s.i - 1] - x[s.j - 1] - s.level * p
    y = list(x)
    y[s.i - 1] -= a
    y[s.j - 1] += a
    return tuple(y)


def dot_sort(x: Tuple[int, ...]) -> Optional[Tuple[DominantWeight, int]]:
    """Dominant representative of x - rho under the dot action, with sign.

    x plays the role of mu + rho.  Returns None when x has a repeated entry
    (the Weyl character vanishes); otherwise (sort(x) - rho, det of the
    sorting permutation).
    """
    if len(set(x)) < len(x):
        return None
    inversions = 0
    for i, j in itertools.combinations(range(len(x)), 2):
        if x[i] < x[j]:
            inversions += 1
    srt = sorted(x, reverse=True)
    r = rho(len(x))
    w = from_tuple(tuple(srt[k] - r[k] for k in range(len(x))))
    return w, (-1) ** inversions


# ---------------------------------------------------------------------------
# weight-set membership


def in_Lambda_p(w: DominantWeight, p: int) -> bool:
    """Both partitions have first part plus length at most p."""
    return all(greatest_hook(xi) < p for xi in (w.lambda1, w.lambda2))


def check_s_params(n: int, s1: int, s2: int, p: int) -> None:
    if not (1 <= s1 <= min(n, p) and 1 <= s2 <= min(n, p)):
        raise InvalidParams(
            f"s1, s2 must lie in 1..min(n,p)={min(n, p)}, got s1={s1}, s2={s2}")
    if s1 + s2 > n:
        raise InvalidParams(f"s1 + s2 = {s1 + s2} exceeds n = {n}")


def in_Lambda_s1s2(w: DominantWeight, s1: int, s2: int, p: int) -> bool:
    """l(lambda^h) <= s_h <= p - lambda^h_1 for h = 1, 2."""
    check_s_params(w.n, s1, s2, p)
    for xi, s in ((w.lambda1, s1), (w.lambda2, s2)):
        first = xi[0] if xi else 0
        if not (len(xi) <= s <= p - first):
            return False
    return True


def in_Lambda_rs(w: DominantWeight, r: int, s: int) -> Optional[int]:
    """The defect t >= 0 with |lambda1| = r - t and |lambda2| = s - t, if any."""
    t = r - sum(w.lambda1)
    if t >= 0 and s - sum(w.lambda2) == t:
        return t
    return None


# ---------------------------------------------------------------------------
# text format: "3,2" / "-" for partitions, "3,2/2,1,1" for bipartitions


def format_partition(xi: Partition) -> str:
    return ",".join(str(x) for x in xi) if xi else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        return as_partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InvalidParams(f"cannot parse partition {text!r}") from exc


def format_weight(w: DominantWeight) -> str:
    return f"{format_partition(w.lambda1)}/{format_partition(w.lambda2)}"


def parse_weight(text: str, n: int) -> DominantWeight:
    if "/" not in text:
        raise InvalidParams(f"bipartition must contain '/': {text!r}")
    left, right = text.split("/", 1)
    return DominantWeight(n, parse_partition(left), parse_partition(right))
