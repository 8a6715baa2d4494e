"""Cross-module identity suites, runnable from the CLI and from tests.

Each suite sweeps a bounded parameter range and returns CheckResult records;
a suite passes when every record is ok.  The bounds default to the ranges the
package is promised to satisfy exactly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from . import walled_brauer as wb
from .caps import cap_diagram
from .characters import (CharacterCombination, mixed_tensor_character, psi,
                         tensor_step)
from .diagrams import (DiagramString, diagram_string, preceq, preceq_oracle,
                       string_to_weight)
from .errors import NotApplicable
from .jantzen import full_jsf, reduced_jsf
from .multiplicities import dagger_duality_check, decomposition_matrix
from .weights import (DominantWeight, is_p_core, partitions_in_box,
                      partitions_up_to, weight)

PRIMES = (2, 3, 5, 7)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        return f"{status} {self.name}" + (f"  ({self.detail})" if self.detail else "")


def suite_passed(results: Sequence[CheckResult]) -> bool:
    return all(r.ok for r in results)


# ---------------------------------------------------------------------------
# weight enumeration helpers


def lambda_s1s2(n: int, s1: int, s2: int, p: int) -> Iterator[DominantWeight]:
    """All weights of Lambda(s1, s2): the two partitions fill bounded boxes."""
    for l1 in partitions_in_box(s1, p - s1):
        for l2 in partitions_in_box(s2, p - s2):
            yield weight(n, l1, l2)


def s_param_range(n: int, p: int, s_max: int) -> Iterator[Tuple[int, int]]:
    top = min(n, p, s_max)
    for s1 in range(1, top + 1):
        for s2 in range(1, top + 1):
            if s1 + s2 <= n:
                yield s1, s2


def pcore_bipartitions(n: int, p: int, size_max: int) -> Iterator[DominantWeight]:
    cores = [xi for xi in partitions_up_to(size_max) if is_p_core(xi, p)]
    for l1 in cores:
        for l2 in cores:
            if sum(l1) + sum(l2) <= size_max and len(l1) + len(l2) <= n:
                yield weight(n, l1, l2)


# ---------------------------------------------------------------------------
# suites


def verify_jsf_reduced(primes: Sequence[int] = (2, 3, 5), n_max: int = 6,
                       size_max: int = 8) -> List[CheckResult]:
    """Full and reduced sums agree whenever both partitions are p-cores."""
    out = []
    for p in primes:
        for n in range(1, n_max + 1):
            bad = 0
            count = 0
            for lam in pcore_bipartitions(n, p, size_max):
                count += 1
                if full_jsf(lam, p)[0] != reduced_jsf(lam, p)[0]:
                    bad += 1
            out.append(CheckResult(f"jsf-reduced p={p} n={n}", bad == 0,
                                   f"{count} weights"))
    return out


def arrow_pair_targets(lam: DominantWeight, s1: int, s2: int, p: int):
    """Weights reached by reversing one V..A pair on one side of the wall."""
    ds = diagram_string(lam, s1, s2, p)
    targets = set()
    for lo, hi in ds.sides():
        for a in range(lo, hi):
            if ds.symbols[a] != "V":
                continue
            for b in range(a + 1, hi):
                if ds.symbols[b] != "A":
                    continue
                sym = list(ds.symbols)
                sym[a], sym[b] = "A", "V"
                targets.add(string_to_weight(
                    DiagramString(ds.shift, tuple(sym), ds.split, s1, s2, ds.n)))
    return targets


def verify_jsf_arrows(primes: Sequence[int] = PRIMES, n_max: int = 8,
                      s_max: int = 3) -> List[CheckResult]:
    """Reduced-sum support equals the arrow-pair prediction on Lambda(s1,s2)."""
    out = []
    for p in primes:
        bad = 0
        count = 0
        for n in range(2, n_max + 1):
            for s1, s2 in s_param_range(n, p, s_max):
                for lam in lambda_s1s2(n, s1, s2, p):
                    count += 1
                    combo, terms = reduced_jsf(lam, p)
                    predicted = arrow_pair_targets(lam, s1, s2, p)
                    if combo.support() != predicted:
                        bad += 1
                    elif {t.target for t in terms} != predicted:
                        bad += 1
        out.append(CheckResult(f"jsf-arrows p={p}", bad == 0, f"{count} weights"))
    return out


def verify_preceq(primes: Sequence[int] = (2, 3, 5), n_max: int = 7
                  ) -> List[CheckResult]:
    """Diagram order equals the reflection order on all Lambda(s1,s2) pairs."""
    out = []
    for p in primes:
        bad = 0
        pairs = 0
        for n in range(2, n_max + 1):
            for s1, s2 in s_param_range(n, p, n):
                weights = list(lambda_s1s2(n, s1, s2, p))
                for lam in weights:
                    for mu in weights:
                        pairs += 1
                        if preceq(mu, lam, s1, s2, p) != preceq_oracle(mu, lam, p):
                            bad += 1
        out.append(CheckResult(f"preceq-oracle p={p}", bad == 0, f"{pairs} pairs"))
    return out


def verify_structural(primes: Sequence[int] = (2, 3, 5), n_max: int = 8,
                      s_max: int = 2) -> List[CheckResult]:
    """Unitriangularity, dagger duality, and the irreducibility equivalences."""
    out = []
    for p in primes:
        tri_bad = irr_bad = count = 0
        for n in range(2, n_max + 1):
            for s1, s2 in s_param_range(n, p, s_max):
                for lam in lambda_s1s2(n, s1, s2, p):
                    count += 1
                    dm = decomposition_matrix(lam, s1, s2, p)
                    if not dm.is_unitriangular():
                        tri_bad += 1
                    row = dm.entries[dm.weights.index(lam)]
                    identity_row = sum(row) == 1
                    capless = not cap_diagram(lam, s1, s2, p).caps
                    jsf_empty = reduced_jsf(lam, p)[0].is_zero()
                    if not (identity_row == capless == jsf_empty):
                        irr_bad += 1
        out.append(CheckResult(f"decmat-unitriangular p={p}", tri_bad == 0,
                               f"{count} blocks"))
        out.append(CheckResult(f"irreducible-iff-capless p={p}", irr_bad == 0))

        dag_bad = dag_pairs = 0
        for n in range(2, n_max + 1):
            for s in range(1, min(n // 2, p, s_max) + 1):
                weights = list(lambda_s1s2(n, s, s, p))
                for lam in weights:
                    for mu in weights:
                        dag_pairs += 1
                        if not dagger_duality_check(lam, mu, s, p):
                            dag_bad += 1
        out.append(CheckResult(f"dagger-duality p={p}", dag_bad == 0,
                               f"{dag_pairs} pairs"))
    return out


def verify_characters(rs_max: int = 6) -> List[CheckResult]:
    """Mixed-tensor character identity and the psi recursion."""
    out = []
    for n in range(1, rs_max + 1):
        bad = 0
        for r in range(n + 1):
            s = n - r
            expected = CharacterCombination.zero(n)
            for t in range(min(r, s) + 1):
                expected = expected + (
                    math.comb(r, t) * math.comb(s, t) * math.factorial(t)
                ) * psi(r - t, s - t, n)
            if mixed_tensor_character(r, s, n) != expected:
                bad += 1
        out.append(CheckResult(f"tensor-identity n={n} (all r+s=n)", bad == 0))

        rec_bad = 0
        for r in range(1, n):
            for s in range(0, n - r):
                lhs = tensor_step(psi(r, s, n), "V*")
                rhs = psi(r, s + 1, n) + r * psi(r - 1, s, n)
                if lhs != rhs:
                    rec_bad += 1
        out.append(CheckResult(f"psi-recursion n={n}", rec_bad == 0))
    return out


def verify_brauer(rs_max: int = 7, assoc_samples: int = 1000,
                  seed: int = 20260808) -> List[CheckResult]:
    """Diagram counts, cellular dimensions, associativity, rank identities."""
    out = []
    count_bad = cell_bad = 0
    for r in range(rs_max + 1):
        for s in range(rs_max - r + 1):
            diagrams = wb.enumerate_diagrams(r, s)
            if len(set(diagrams)) != math.factorial(r + s):
                count_bad += 1
            total = sum(wb.specht_dim_walled(l1, l2, r, s) ** 2
                        for l1, l2 in wb.labels_rs(r, s))
            if total != math.factorial(r + s):
                cell_bad += 1
    out.append(CheckResult(f"diagram-count r+s<={rs_max}", count_bad == 0))
    out.append(CheckResult(f"cellular-sum-of-squares r+s<={rs_max}", cell_bad == 0))

    rng = random.Random(seed)
    shapes = [(r, s) for r in range(6) for s in range(6 - r)
              if r + s >= 1 and r + s <= 5]
    assoc_bad = 0
    for _ in range(assoc_samples):
        r, s = rng.choice(shapes)
        pool = wb.enumerate_diagrams(r, s)
        a, b, c = (wb.WalledElement.from_diagram(rng.choice(pool)) for _ in range(3))
        if (a * b) * c != a * (b * c):
            assoc_bad += 1
    ident_bad = 0
    for r, s in shapes:
        e = wb.WalledElement.from_diagram(wb.identity_diagram(r, s))
        for d in wb.enumerate_diagrams(r, s)[:24]:
            el = wb.WalledElement.from_diagram(d)
            if e * el != el or el * e != el:
                ident_bad += 1
    out.append(CheckResult(f"associativity {assoc_samples} samples", assoc_bad == 0))
    out.append(CheckResult("identity-neutral", ident_bad == 0))

    dim_bad = sum(1 for r in range(9) for s in range(9)
                  if not wb.dimension_identity_check(r, s))
    out.append(CheckResult("matrix-ring-dimension r,s<=8", dim_bad == 0))

    out.append(_verify_n_independence())
    return out


def _verify_n_independence() -> CheckResult:
    """walled_decomp_number must not depend on which admissible n is used."""
    samples = []
    for p, delta in ((3, 1), (5, 2), (5, 0), (3, 2)):
        for lam1, lam2 in (((2,), (1,)), ((1,), ()), ((2, 1), (1,)), ((1,), (1,))):
            for t_lam in (0, 1):
                r, s = sum(lam1) + t_lam, sum(lam2) + t_lam
                for mu1, mu2 in wb.labels_rs(r, s):
                    samples.append((mu1, mu2, lam1, lam2, r, s, delta, p))
    bad = checked = 0
    for mu1, mu2, lam1, lam2, r, s, delta, p in samples:
        n0 = r + s + ((delta - (r + s)) % p)
        values = []
        for n in (n0, n0 + p, n0 + 2 * p):
            try:
                values.append(wb.walled_decomp_number(
                    mu1, mu2, lam1, lam2, r, s, delta, p, n=n))
            except NotApplicable:
                continue
        if len(values) >= 2:
            checked += 1
            if len(set(values)) != 1:
                bad += 1
    return CheckResult("decnum-independent-of-n", bad == 0,
                       f"{checked} instances")


SUITES = {
    "jsf-reduced": verify_jsf_reduced,
    "jsf-arrows": verify_jsf_arrows,
    "preceq": verify_preceq,
    "structural": verify_structural,
    "characters": verify_characters,
    "brauer": verify_brauer,
}


def run_suite(name: str, **kwargs) -> List[CheckResult]:
    if name == "all":
        results = []
        for fn in SUITES.values():
            results.extend(fn())
        return results
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](**kwargs)
