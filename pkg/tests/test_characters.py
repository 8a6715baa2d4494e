import math
import random

import pytest

from capdiagrams.characters import (CharacterCombination, mixed_tensor_character,
                                    psi, specht_dim, supp1, supp2, tensor_step)
from capdiagrams.errors import RankTooSmall
from capdiagrams.weights import (in_Lambda_rs, partitions_of, partitions_up_to,
                                 weight)

from oracles import tableau_count, weyl_dimension


def random_weight(rng, n, size=4):
    while True:
        k1 = rng.randint(0, size)
        k2 = rng.randint(0, size)
        l1 = rng.choice(list(partitions_of(k1)))
        l2 = rng.choice(list(partitions_of(k2)))
        if len(l1) + len(l2) <= n:
            return weight(n, l1, l2)


def test_supp1_trivial():
    assert supp1(weight(2)) == {weight(2, (1,))}
    assert supp1(weight(5)) == {weight(5, (1,))}


def test_supp1_n2_mixed():
    # adding a box to (1) or removing the box from the dual side; the
    # candidate ([1,1],[1]) needs three rows and is dropped at n = 2
    assert supp1(weight(2, (1,), (1,))) == {weight(2, (2,), (1,)), weight(2, (1,))}


def test_supp2_trivial():
    assert supp2(weight(2)) == {weight(2, (), (1,))}
    assert supp2(weight(3, (1,))) == {weight(3), weight(3, (1,), (1,))}


def test_supp_adjoint():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(1, 6)
        lam = random_weight(rng, n)
        mu = random_weight(rng, n)
        assert (mu in supp1(lam)) == (lam in supp2(mu))


def test_tensor_step_from_trivial():
    c = CharacterCombination.chi(weight(3))
    assert tensor_step(c, "V") == CharacterCombination.chi(weight(3, (1,)))


def test_tensor_dimension_totals():
    for n in (2, 3):
        for r in range(3):
            for s in range(3):
                c = mixed_tensor_character(r, s, n)
                total = sum(m * weyl_dimension(w) for w, m in c.items())
                assert total == n ** (r + s), (n, r, s)


def test_specht_dim_examples():
    assert specht_dim((1, 1, 1)) == 1
    assert specht_dim((2, 1)) == 2
    assert specht_dim(()) == 1


def test_specht_dim_against_tableau_count():
    for xi in partitions_up_to(8):
        assert specht_dim(xi) == tableau_count(xi)


def test_psi_examples():
    assert psi(0, 0, 3) == CharacterCombination.chi(weight(3))
    assert psi(1, 0, 3) == CharacterCombination.chi(weight(3, (1,)))
    expected = (CharacterCombination.chi(weight(3, (2,), (1,)))
                + CharacterCombination.chi(weight(3, (1, 1), (1,))))
    assert psi(2, 1, 3) == expected


def test_psi_rank_guard():
    with pytest.raises(RankTooSmall):
        psi(2, 2, 3)


def test_psi_recursion():
    for total in range(0, 6):
        n = total + 1
        for r in range(1, total + 1):
            s = total - r
            lhs = tensor_step(psi(r, s, n), "V*")
            rhs = psi(r, s + 1, n) + r * psi(r - 1, s, n)
            assert lhs == rhs, (r, s, n)


def test_mixed_tensor_identity():
    for n in (2, 3, 4):
        for r in range(4):
            for s in range(4):
                if r + s > n:
                    continue
                expected = CharacterCombination.zero(n)
                for t in range(min(r, s) + 1):
                    coeff = math.comb(r, t) * math.comb(s, t) * math.factorial(t)
                    expected = expected + coeff * psi(r - t, s - t, n)
                assert mixed_tensor_character(r, s, n) == expected


def test_hom_space_coefficients():
    # coefficient of chi(lam) in ch V^{r,s} for a label of defect t
    r, s, n = 3, 2, 6
    c = mixed_tensor_character(r, s, n)
    for lam, coeff in c.items():
        t = in_Lambda_rs(lam, r, s)
        assert t is not None
        expected = (math.comb(r, t) * math.comb(s, t) * math.factorial(t)
                    * specht_dim(lam.lambda1) * specht_dim(lam.lambda2))
        assert coeff == expected


def test_combination_arithmetic():
    a = CharacterCombination.chi(weight(3, (1,)), 2)
    b = CharacterCombination.chi(weight(3, (1,)), -2)
    assert (a + b).is_zero()
    assert a - a == CharacterCombination.zero(3)
    assert -a == b
    assert 0 * a == CharacterCombination.zero(3)
