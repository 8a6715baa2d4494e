"""The Jantzen Sum Formula for GL_n, full and reduced.

The full sum runs over all positive roots e_i - e_j and all levels l >= 1
with <lambda+rho, alpha^vee> - l*p > 0; the reduced sum keeps only
i <= l(lambda1) and j > n - l(lambda2).  When both partitions are p-cores the
two sums agree as character combinations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .characters import CharacterCombination
from .errors import InvalidParams
from .weights import (AffineReflection, DominantWeight, apply_reflection,
                      dot_sort, rho, to_tuple)


@dataclass(frozen=True)
class JsfTerm:
    """One surviving summand nu_p(lp) * sign * chi(target)."""

    reflection: AffineReflection
    a: int                    # <lambda+rho, alpha^vee> - l*p, always >= 1
    valuation: int            # nu_p(l*p) = 1 + nu_p(l)
    sign: int                 # det of the sorting permutation
    target: DominantWeight


def nu_p(m: int, p: int) -> int:
    """p-adic valuation of a positive integer."""
    if m <= 0:
        raise InvalidParams("valuation of a nonpositive integer")
    v = 0
    while m % p == 0:
        v += 1
        m //= p
    return v


def _accumulate(lam: DominantWeight, p: int, i_range, j_range
                ) -> Tuple[CharacterCombination, List[JsfTerm]]:
    n = lam.n
    x = to_tuple(lam)
    r = rho(n)
    xr = tuple(x[k] + r[k] for k in range(n))
    total = CharacterCombination.zero(n)
    terms: List[JsfTerm] = []
    for i in i_range:
        for j in j_range:
            if i >= j:
                continue
            diff = xr[i - 1] - xr[j - 1]
            for level in range(1, (diff - 1) // p + 1):
                a = diff - level * p
                refl = AffineReflection(i, j, level)
                res = dot_sort(apply_reflection(refl, xr, p))
                if res is None:
                    continue
                target, sign = res
                val = 1 + nu_p(level, p)
                terms.append(JsfTerm(refl, a, val, sign, target))
                total = total + CharacterCombination.chi(target, sign * val)
    return total, terms


def full_jsf(lam: DominantWeight, p: int) -> Tuple[CharacterCombination, List[JsfTerm]]:
    """Right-hand side of the Jantzen Sum Formula over all positive roots."""
    if p < 2:
        raise InvalidParams("p must be at least 2")
    n = lam.n
    return _accumulate(lam, p, range(1, n + 1), range(1, n + 1))


def reduced_jsf(lam: DominantWeight, p: int) -> Tuple[CharacterCombination, List[JsfTerm]]:
    """Same accumulation restricted to i <= l(lambda1), j > n - l(lambda2)."""
    if p < 2:
        raise InvalidParams("p must be at least 2")
    n = lam.n
    return _accumulate(lam, p,
                       range(1, len(lam.lambda1) + 1),
                       range(n - len(lam.lambda2) + 1, n + 1))
