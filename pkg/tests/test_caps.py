import random

import pytest

from capdiagrams.caps import (cap_diagram, cap_orientations, co_diagram,
                              dagger, is_oriented, overlay)
from capdiagrams.diagrams import diagram_string, preceq
from capdiagrams.errors import IncompatibleDiagrams, InvalidParams
from capdiagrams.jantzen import reduced_jsf
from capdiagrams.verify import lambda_s1s2, s_param_range
from capdiagrams.weights import weight

from oracles import fixpoint_caps

LAM5 = weight(7, (3, 2), (2, 1, 1))
MU5 = weight(7, (2,), (1,))
ORIENTED5 = [weight(7, (2, 2), (1, 1, 1)), weight(7, (3, 1), (2, 1)),
             weight(7, (2, 1), (1, 1))]
UNORIENTED5 = [weight(7, (3,), (2,)), MU5]


def test_cap_diagram_rank7():
    c = cap_diagram(LAM5, 2, 3, 5)
    assert c.caps_by_label() == {(2, 3), (4, 0)}
    assert cap_orientations(c) == ("anti-clockwise", "anti-clockwise")


def test_cap_diagram_p17():
    lam = weight(20, (9, 6, 5, 4, 4, 2), (8, 8, 4, 3, 3, 2))
    c = cap_diagram(lam, 8, 7, 17)
    assert len(c.caps) == 4
    assert c.caps_by_label() == {(16, 0), (2, 3), (1, 6), (11, 12)}


def test_co_diagram_p17():
    mu = weight(20, (8, 8, 6, 4, 3, 3, 2, 1), (10, 7, 7, 4, 2, 2, 1))
    co = co_diagram(mu, 8, 7, 17)
    assert co.caps_by_label() == {(16, 0), (2, 3), (1, 6), (11, 12)}


def test_co_diagram_rank7():
    co = co_diagram(MU5, 2, 3, 5)
    assert co.caps_by_label() == {(1, 2), (4, 0)}


def test_capless_patterns():
    # per side all A before all V: no caps in c, but caps in co
    lam = weight(5, (2,), (2,))
    assert cap_diagram(lam, 1, 1, 5).caps == ()
    assert co_diagram(lam, 1, 1, 5).caps_by_label() == {(2, 4)}


def test_overlay_orientation_caps():
    c = cap_diagram(LAM5, 2, 3, 5)
    for mu in ORIENTED5:
        assert is_oriented(overlay(c, mu)), mu
    for mu in UNORIENTED5:
        assert not is_oriented(overlay(c, mu)), mu
    assert is_oriented(overlay(c, LAM5))


def test_overlay_orientation_cocaps():
    co = co_diagram(MU5, 2, 3, 5)
    assert is_oriented(overlay(co, weight(7, (3, 1), (2, 1))))
    assert not is_oriented(overlay(co, LAM5))


def test_overlay_rejects_different_patterns():
    c = cap_diagram(LAM5, 2, 3, 5)
    with pytest.raises(IncompatibleDiagrams):
        overlay(c, weight(7, (3, 3), (3, 2, 1)))


def test_oriented_overlay_fixes_non_endpoints():
    for s1, s2 in ((2, 3), (2, 2)):
        for lam in lambda_s1s2(7, s1, s2, 5):
            c = cap_diagram(lam, s1, s2, 5)
            ends = {x.left for x in c.caps} | {x.right for x in c.caps}
            for mu in lambda_s1s2(7, s1, s2, 5):
                if not preceq(mu, lam, s1, s2, 5):
                    continue
                over = overlay(c, mu)
                if is_oriented(over):
                    for pos in range(c.base.p):
                        if pos not in ends:
                            assert c.base.symbols[pos] == over.base.symbols[pos]


def test_cap_count_bookkeeping():
    for p in (3, 5, 7):
        for n in (4, 6, 8):
            for s1, s2 in s_param_range(n, p, 3):
                for lam in lambda_s1s2(n, s1, s2, p):
                    c = cap_diagram(lam, s1, s2, p)
                    crosses = sum(1 for s in c.base.symbols if s == "X")
                    assert (2 * len(c.caps) + len(c.uncapped()) + 2 * crosses
                            == s1 + s2)


def test_no_caps_iff_reduced_jsf_empty():
    for s1, s2 in s_param_range(6, 5, 3):
        for lam in lambda_s1s2(6, s1, s2, 5):
            capless = not cap_diagram(lam, s1, s2, 5).caps
            assert capless == reduced_jsf(lam, 5)[0].is_zero(), lam


def test_stack_matching_equals_fixpoint_rule():
    rng = random.Random(2)
    for p, n, s1, s2 in ((5, 7, 2, 3), (7, 8, 3, 3), (5, 8, 2, 2), (3, 6, 2, 1)):
        for lam in lambda_s1s2(n, s1, s2, p):
            ds = diagram_string(lam, s1, s2, p)
            for kind, build in (("c", cap_diagram), ("co", co_diagram)):
                got = {(c.left, c.right) for c in build(lam, s1, s2, p).caps}
                assert got == fixpoint_caps(ds.symbols, ds.sides(), kind)
                shuffled = [rng.randrange(8) for _ in range(p + 2)]
                assert got == fixpoint_caps(ds.symbols, ds.sides(), kind,
                                            order=shuffled)


def test_dagger_involution_and_fixed_point():
    for lam in lambda_s1s2(8, 2, 2, 5):
        assert dagger(dagger(lam, 2, 5), 2, 5) == lam
    # an all-cross diagram is fixed
    fixed = weight(4, (1,), (1,))
    assert diagram_string(fixed, 1, 1, 5).compact().count("X") == 1
    assert dagger(fixed, 1, 5) == fixed


def test_dagger_requires_square_lambda():
    with pytest.raises(InvalidParams):
        dagger(LAM5, 3, 5)          # not in Lambda(3,3): lambda1_1 = 3 > p - 3
    with pytest.raises(InvalidParams):
        dagger(weight(3, (1,), (1,)), 2, 5)   # 2s > n


def test_dagger_reverses_order():
    pool = list(lambda_s1s2(8, 2, 2, 5))
    for lam in pool:
        for mu in pool:
            assert (preceq(mu, lam, 2, 2, 5)
                    == preceq(dagger(lam, 2, 5), dagger(mu, 2, 5), 2, 2, 5))
