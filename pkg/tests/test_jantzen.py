from capdiagrams.characters import CharacterCombination
from capdiagrams.jantzen import full_jsf, nu_p, reduced_jsf
from capdiagrams.verify import lambda_s1s2, pcore_bipartitions, s_param_range
from capdiagrams.weights import (contains, greatest_hook, is_p_core,
                                 partitions_up_to, weight)

CHI = CharacterCombination.chi


def test_nu_p():
    assert nu_p(3, 3) == 1
    assert nu_p(9, 3) == 2
    assert nu_p(10, 3) == 0
    assert nu_p(2 * 3 ** 4, 3) == 4


def test_full_jsf_rank4_block():
    # p = 3, n = 4
    assert full_jsf(weight(4, (1, 1, 1)), 3)[0].is_zero()
    assert full_jsf(weight(4, (2, 1)), 3)[0] == CHI(weight(4, (1, 1, 1)))
    assert (full_jsf(weight(4, (3,)), 3)[0]
            == CHI(weight(4, (1, 1, 1)), -1) + CHI(weight(4, (2, 1))))
    assert (full_jsf(weight(4, (3, 1), (1,)), 3)[0]
            == CHI(weight(4, (2, 1))) + CHI(weight(4, (3,))))


def test_reduced_jsf_terms_31_1():
    combo, terms = reduced_jsf(weight(4, (3, 1), (1,)), 3)
    assert combo == CHI(weight(4, (2, 1))) + CHI(weight(4, (3,)))
    data = {(t.reflection.i, t.reflection.j, t.reflection.level, t.a, t.sign,
             t.valuation, t.target) for t in terms}
    assert data == {
        (1, 4, 2, 1, 1, 1, weight(4, (2, 1))),
        (2, 4, 1, 1, 1, 1, weight(4, (3,))),
    }


def test_reduced_jsf_empty_without_negative_parts():
    # no admissible j when lambda2 is empty
    combo, terms = reduced_jsf(weight(5, (3, 2)), 3)
    assert combo.is_zero() and terms == []


def test_reduced_equals_full_on_pcores_small():
    for p in (2, 3, 5):
        for n in range(1, 5):
            for lam in pcore_bipartitions(n, p, 5):
                assert full_jsf(lam, p)[0] == reduced_jsf(lam, p)[0], (lam, p)


def test_reduced_targets_distinct_and_contained():
    # distinct reduced terms have distinct targets strictly inside lambda
    for p in (3, 5):
        for n in (4, 5):
            for lam in pcore_bipartitions(n, p, 6):
                _, terms = reduced_jsf(lam, p)
                targets = [t.target for t in terms]
                assert len(targets) == len(set(targets)), lam
                for t in terms:
                    for h in (1, 2):
                        big = (lam.lambda1, lam.lambda2)[h - 1]
                        small = (t.target.lambda1, t.target.lambda2)[h - 1]
                        assert contains(big, small) and small != big, (lam, t)


def test_one_sided_hook_bound_forces_small_a():
    # if either partition satisfies the hook bound, every reduced term has a < p
    for p in (2, 3, 5):
        for n in (4, 6):
            count = 0
            for l1 in partitions_up_to(5):
                for l2 in partitions_up_to(5):
                    if len(l1) + len(l2) > n:
                        continue
                    if not (is_p_core(l1, p) and is_p_core(l2, p)):
                        continue
                    hook_ok = (greatest_hook(l1) < p) or (greatest_hook(l2) < p)
                    if not hook_ok:
                        continue
                    count += 1
                    for t in reduced_jsf(weight(n, l1, l2), p)[1]:
                        assert t.a < p
            assert count > 0


def test_at_most_two_l_values_in_lambda_s1s2():
    for p in (3, 5):
        for n in (4, 6):
            for s1, s2 in s_param_range(n, p, 3):
                for lam in lambda_s1s2(n, s1, s2, p):
                    _, terms = reduced_jsf(lam, p)
                    assert len({t.reflection.level for t in terms}) <= 2


def test_valuations_are_positive_and_signs_unit():
    for lam in pcore_bipartitions(5, 3, 6):
        for t in full_jsf(lam, 3)[1]:
            assert t.a >= 1
            assert t.valuation >= 1
            assert t.sign in (-1, 1)
            assert t.valuation == 1 + nu_p(t.reflection.level, 3)
